use serde::Serialize;

use super::checks::{corollary_in, sjogren_in, theorem1_in};
use super::{NilpotentQuotient, SeriesError};
use crate::exactlinalg::{quotient_structure, ElementaryDivisors};
use crate::par_map;
use crate::presentation::Presentation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Checks {
    pub theorem1: bool,
    /// `None` when `n ≥ c`: the class-`c` quotient cannot see degree `n + 1`.
    pub corollary: Option<bool>,
    pub sjogren: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesEntry {
    pub n: usize,
    pub gamma_rank: usize,
    pub delta_rank: usize,
    pub quotient: ElementaryDivisors,
    pub checks: Checks,
    #[serde(skip)]
    pub low_degree_equal: bool,
}

/// `δₙ/γₙ` for `n = 1..=N` in the class-`c` quotient of a presented ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    pub generators: Vec<String>,
    pub class_bound: usize,
    pub entries: Vec<SeriesEntry>,
}

impl SeriesReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("generators: {}\nclass bound: {}\n", self.generators.join(" "), self.class_bound);
        for e in &self.entries {
            let divisors: Vec<String> = e.quotient.divisors.iter().map(ToString::to_string).collect();
            let group = match (divisors.is_empty(), e.quotient.free_rank) {
                (true, 0) => "0".to_string(),
                (_, 0) => divisors.iter().map(|d| format!("Z/{d}")).collect::<Vec<_>>().join(" + "),
                (true, r) => format!("Z^{r}"),
                (_, r) => format!("{} + Z^{r}", divisors.iter().map(|d| format!("Z/{d}")).collect::<Vec<_>>().join(" + ")),
            };
            let corollary = match e.checks.corollary {
                Some(b) => b.to_string(),
                None => "n/a".to_string(),
            };
            out.push_str(&format!(
                "n={}: delta/gamma = {group}; theorem1={} corollary={corollary} sjogren={}\n",
                e.n, e.checks.theorem1, e.checks.sjogren
            ));
        }
        out
    }

    pub fn all_checks_hold(&self) -> bool {
        self.entries.iter().all(|e| e.checks.sjogren && e.checks.corollary != Some(false) && e.low_degree_equal)
    }
}

fn entry(q: &NilpotentQuotient, n: usize) -> Result<SeriesEntry, SeriesError> {
    let (gamma, delta) = (q.gamma(n)?, q.delta(n)?);
    let quotient = quotient_structure(&delta, &gamma)?;
    let corollary = if n < q.class_bound() { Some(corollary_in(q, n)?) } else { None };
    Ok(SeriesEntry {
        n,
        gamma_rank: gamma.rank(),
        delta_rank: delta.rank(),
        low_degree_equal: n > 3 || delta == gamma,
        quotient,
        checks: Checks { theorem1: theorem1_in(q, n)?.holds, corollary, sjogren: sjogren_in(q, n)?.holds },
    })
}

/// Entries are computed independently (in parallel when enabled) and
/// collected in order of `n`.
pub fn quotient_report(p: &Presentation, max_n: usize, class: usize) -> Result<SeriesReport, SeriesError> {
    if class + 1 < max_n {
        return Err(SeriesError::ClassTooSmall { n: max_n, class });
    }
    let q = NilpotentQuotient::new(p, class)?;
    let ns: Vec<usize> = (1..=max_n).collect();
    let entries = par_map(&ns, |&n| entry(&q, n)).into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(SeriesReport { generators: p.generators().to_vec(), class_bound: class, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_ring_report_is_trivial() {
        let r = quotient_report(&Presentation::free(["a", "b"]), 5, 4).unwrap();
        assert_eq!(r.entries.len(), 5);
        for e in &r.entries {
            assert!(e.quotient.is_trivial());
            assert!(e.checks.theorem1 && e.checks.sjogren);
        }
        assert!(r.all_checks_hold());
        let json = r.to_json();
        assert!(json.find("\"n\"").unwrap() < json.find("\"gamma_rank\"").unwrap());
    }
}
