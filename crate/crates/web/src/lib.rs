//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each exported function returns a JSON string. The plain functions below
//! the bindings do the work and are what the native tests call.

use liedim::counterexamples::build_ln;
use liedim::freealgebra::{lyndon_words, witt_number, LyndonWord};
use liedim::presentation::{instantiate_metabelian, parse};
use liedim::series::{quotient_report, sjogren};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Keeps the page responsive; larger inputs belong on the command line.
const MAX_CLASS: usize = 6;

#[wasm_bindgen(js_name = lyndonBasis)]
pub fn lyndon_basis(m: usize, d: usize) -> Result<String, JsValue> {
    lyndon_basis_json(m, d).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = seriesReport)]
pub fn series_report(text: &str, max_n: usize, class: usize, metabelian: bool) -> Result<String, JsValue> {
    series_report_json(text, max_n, class, metabelian).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = counterexample)]
pub fn counterexample(n: usize) -> Result<String, JsValue> {
    counterexample_json(n).map_err(|e| JsValue::from_str(&e))
}

fn label(w: &LyndonWord, names: &[char]) -> String {
    match w.std_factorization() {
        None => names[w.word().letters()[0] as usize].to_string(),
        Some((u, v)) => format!("[{}, {}]", label(&u, names), label(&v, names)),
    }
}

/// Lyndon words of degree `1..=d` on `m` letters with their standard
/// bracketings and the Witt count per degree.
pub fn lyndon_basis_json(m: usize, d: usize) -> Result<String, String> {
    if !(1..=6).contains(&m) || !(1..=8).contains(&d) {
        return Err("need 1 ≤ m ≤ 6 and 1 ≤ d ≤ 8".into());
    }
    let names: Vec<char> = "abcdef".chars().collect();
    let degrees: Vec<_> = (1..=d)
        .map(|k| {
            let words = lyndon_words(m, k);
            let shown: Vec<_> = words
                .iter()
                .take(200)
                .map(|w| {
                    let word: String = w.word().letters().iter().map(|&l| names[l as usize]).collect();
                    json!({ "word": word, "bracket": label(w, &names) })
                })
                .collect();
            json!({ "degree": k, "witt": witt_number(m, k).to_string(), "words": shown })
        })
        .collect();
    Ok(json!({ "generators": m, "degrees": degrees }).to_string())
}

/// `δₙ/γₙ` for `n = 1..=max_n` of a presentation in the text format.
pub fn series_report_json(text: &str, max_n: usize, class: usize, metabelian: bool) -> Result<String, String> {
    if class > MAX_CLASS {
        return Err(format!("class is limited to {MAX_CLASS} in the browser"));
    }
    let mut p = parse(text).map_err(|e| e.to_string())?;
    if p.rank() > 4 {
        return Err("at most 4 generators in the browser".into());
    }
    if metabelian {
        p = instantiate_metabelian(&p, class);
    }
    let report = quotient_report(&p, max_n, class).map_err(|e| e.to_string())?;
    Ok(report.to_json())
}

/// The presentation of `L(n)` and its series report in class `max(n, 2n-5)`.
pub fn counterexample_json(n: usize) -> Result<String, String> {
    if n != 4 && n != 5 {
        return Err("the demo builds L(4) and L(5)".into());
    }
    let p = build_ln(n, 2 * n - 4).map_err(|e| e.to_string())?;
    let class = n.max(2 * n - 5);
    let report = quotient_report(&p, 2 * n - 4, class).map_err(|e| e.to_string())?;
    let c = sjogren(2 * n - 4).map_err(|e| e.to_string())?.c;
    let value: serde_json::Value = serde_json::from_str(&report.to_json()).expect("report is JSON");
    Ok(json!({
        "n": n,
        "presentation": p.serialize(),
        "relators": p.relators().len(),
        "sjogren": c.to_string(),
        "report": value,
    })
    .to_string())
}
