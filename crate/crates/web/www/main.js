import init, { seriesReport, counterexample, lyndonBasis } from "./pkg/liedim_web.js";

const $ = (id) => document.getElementById(id);

function group(q) {
  const parts = q.divisors.map((d) => `Z/${d}`);
  if (q.free_rank > 0) parts.push(q.free_rank === 1 ? "Z" : `Z^${q.free_rank}`);
  return parts.length ? parts.join(" + ") : "0";
}

function seriesTable(report) {
  const rows = report.entries.map((e) => {
    const cor = e.checks.corollary === null ? "n/a" : e.checks.corollary;
    return `<tr><td>${e.n}</td><td>${e.gamma_rank}</td><td>${e.delta_rank}</td><td>${group(e.quotient)}</td>` +
      `<td>${e.checks.theorem1}</td><td>${cor}</td><td>${e.checks.sjogren}</td></tr>`;
  });
  return `<p>class bound ${report.class_bound}</p><table><tr><th>n</th><th>rank γ</th><th>rank δ</th>` +
    `<th>δ/γ</th><th>2δ ⊆ γ</th><th>[δ, L] = γ</th><th>c·δ ⊆ γ</th></tr>${rows.join("")}</table>`;
}

function run(out, f) {
  try {
    out.innerHTML = f();
  } catch (e) {
    out.innerHTML = `<p class="error">${e}</p>`;
  }
}

function escape(s) {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;");
}

await init();

$("run-series").onclick = () => run($("series-out"), () => {
  const json = seriesReport($("presentation").value, +$("max-n").value, +$("class").value, $("metabelian").checked);
  return seriesTable(JSON.parse(json));
});

$("run-ln").onclick = () => run($("ln-out"), () => {
  const v = JSON.parse(counterexample(+$("ln").value));
  return `<p>${v.relators} relators; c<sub>${2 * v.n - 4}</sub> = ${v.sjogren}</p>` +
    seriesTable(v.report) + `<details><summary>presentation</summary><pre>${escape(v.presentation)}</pre></details>`;
});

$("run-lyndon").onclick = () => run($("lyndon-out"), () => {
  const v = JSON.parse(lyndonBasis(+$("lyndon-m").value, +$("lyndon-d").value));
  return v.degrees.map((d) => {
    const more = d.words.length < +d.witt ? ` (first ${d.words.length} shown)` : "";
    const items = d.words.map((w) => `${w.word}  ${w.bracket}`).join("\n");
    return `<h3>degree ${d.degree}: ${d.witt} basis elements${more}</h3><pre>${escape(items)}</pre>`;
  }).join("");
});
