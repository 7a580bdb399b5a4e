//! Report types and rendering. All reports serialize deterministically:
//! floats are rounded to 9 decimals when stored, field order is fixed by
//! the struct definitions, and wall-clock timing goes to stderr only.

use serde::Serialize;

use crate::parse::GraphDto;

/// Rounds to 9 decimals and normalizes negative zero, the precision used
/// for every value-like float in a report.
pub fn round9(x: f64) -> f64 {
    let r = (x * 1e9).round() / 1e9;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn fmt9(x: f64) -> String {
    format!("{x:.9}")
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeReport {
    pub graph: GraphDto,
    pub connected: bool,
    pub bipartite: bool,
    pub balanced: bool,
    /// One side of a switching cut that makes the graph all-positive, when
    /// balanced.
    pub switching_cut: Option<Vec<usize>>,
    /// Whether the spectrum is symmetric about zero.
    pub pairing: bool,
    pub char_poly: String,
    /// Ascending coefficients as exact decimal strings.
    pub char_poly_coeffs: Vec<String>,
    /// Eigenvalues in non-increasing order.
    pub spectrum: Vec<f64>,
    pub estrada_index: f64,
    /// The same index recomputed from the moment series.
    pub estrada_index_series: f64,
    pub series_terms: usize,
    pub series_error_bound: f64,
    /// Spectral moments M_0..M_K as exact decimal strings.
    pub moments: Vec<String>,
    /// Index divided by the index of the all-positive reference signature.
    pub balance_ratio: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CycleRow {
    pub n: usize,
    pub ee_balanced: f64,
    pub bessel_approx: f64,
    pub ee_unbalanced: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CycleTableReport {
    pub rows: Vec<CycleRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyInstance {
    /// Which slice of the claim this record covers, e.g. "n=6" or "m=2 n=3".
    pub label: String,
    /// Candidates examined for this instance.
    pub candidates: usize,
    pub winner: Option<GraphDto>,
    pub max_ee: Option<f64>,
    pub runner_up: Option<f64>,
    pub margin: Option<f64>,
    /// Deterministic free-form observations (polynomials, deltas, counts).
    pub details: Vec<String>,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub label: String,
    pub graph: GraphDto,
    pub note: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub id: String,
    /// Key=value parameter echo, sorted by key.
    pub params: Vec<(String, String)>,
    pub instances: Vec<VerifyInstance>,
    /// "confirmed", "refuted", or "inconclusive".
    pub verdict: String,
    pub counterexample: Option<Counterexample>,
}

impl VerificationReport {
    pub fn confirmed(&self) -> bool {
        self.verdict == "confirmed"
    }
}

/// Renders any serializable report as pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(report: &T) -> Result<String, serde_json::Error> {
    Ok(serde_json::to_string_pretty(report)? + "\n")
}

pub fn analyze_to_csv(r: &AnalyzeReport) -> String {
    let mut out = String::from("field,value\n");
    let mut push = |k: &str, v: String| out.push_str(&format!("{k},{v}\n"));
    push("n", r.graph.n.to_string());
    push("m", r.graph.edges.len().to_string());
    push("connected", r.connected.to_string());
    push("bipartite", r.bipartite.to_string());
    push("balanced", r.balanced.to_string());
    push("pairing", r.pairing.to_string());
    push("char_poly", format!("\"{}\"", r.char_poly));
    for (i, v) in r.spectrum.iter().enumerate() {
        push(&format!("mu_{}", i + 1), fmt9(*v));
    }
    push("estrada_index", fmt9(r.estrada_index));
    push("estrada_index_series", fmt9(r.estrada_index_series));
    push("series_terms", r.series_terms.to_string());
    push("series_error_bound", format!("{:e}", r.series_error_bound));
    for (k, m) in r.moments.iter().enumerate() {
        push(&format!("M_{k}"), m.clone());
    }
    push("balance_ratio", fmt9(r.balance_ratio));
    out
}

pub fn cycle_table_to_csv(r: &CycleTableReport) -> String {
    let mut out = String::from("n,ee_balanced,bessel_approx,ee_unbalanced\n");
    for row in &r.rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            row.n,
            fmt9(row.ee_balanced),
            fmt9(row.bessel_approx),
            fmt9(row.ee_unbalanced)
        ));
    }
    out
}

pub fn verification_to_csv(r: &VerificationReport) -> String {
    let opt = |x: Option<f64>| x.map(fmt9).unwrap_or_default();
    let mut out = String::from("id,label,candidates,max_ee,runner_up,margin,ok\n");
    for i in &r.instances {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.id,
            i.label,
            i.candidates,
            opt(i.max_ee),
            opt(i.runner_up),
            opt(i.margin),
            i.ok
        ));
    }
    out.push_str(&format!("# verdict: {}\n", r.verdict));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_policy() {
        assert_eq!(round9(11.496_186_252_9), 11.496_186_253);
        assert_eq!(round9(-1e-12), 0.0);
        assert!(round9(-1e-12).is_sign_positive());
        assert_eq!(round9(-2.0), -2.0);
    }

    #[test]
    fn json_is_stable() {
        let report = CycleTableReport {
            rows: vec![CycleRow {
                n: 3,
                ee_balanced: round9(8.124815035),
                bessel_approx: round9(6.838755907),
                ee_unbalanced: round9(5.571898941),
            }],
        };
        let a = to_json(&report).unwrap();
        let b = to_json(&report).unwrap();
        assert_eq!(a, b);
        assert!(a.contains("8.124815035"));
        assert!(a.ends_with("\n"));
    }

    #[test]
    fn csv_has_fixed_decimals() {
        let report = CycleTableReport {
            rows: vec![CycleRow { n: 4, ee_balanced: 9.5, bessel_approx: 9.0, ee_unbalanced: 8.75 }],
        };
        assert_eq!(
            cycle_table_to_csv(&report),
            "n,ee_balanced,bessel_approx,ee_unbalanced\n4,9.500000000,9.000000000,8.750000000\n"
        );
    }
}
