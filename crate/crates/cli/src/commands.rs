//! Subcommand logic, kept free of terminal concerns so the binary and the
//! integration tests can share it.

use std::fs;
use std::path::Path;

use estrada_core::estrada::{
    balance_ratio, cycle_ee_approximation, ee_from_moments, estrada_index, moment_sequence,
};
use estrada_core::families::{cycle, FamilySpec};
use estrada_core::spectra::{char_poly, eigenvalues};
use estrada_core::SignedGraph;

use crate::parse::{parse_signed_edge_list, GraphDto};
use crate::report::{round9, AnalyzeReport, CycleRow, CycleTableReport};
use crate::CliError;

/// Loads a graph from an edge-list file, or from a JSON graph object when
/// the file starts with '{'.
pub fn read_graph_file(path: &Path) -> Result<SignedGraph, CliError> {
    let text = fs::read_to_string(path)?;
    if text.trim_start().starts_with('{') {
        let dto: GraphDto = serde_json::from_str(&text)?;
        dto.to_graph()
    } else {
        parse_signed_edge_list(&text)
    }
}

/// Full single-graph report: structure flags, spectrum, exact polynomial
/// and moments, and the index by both methods.
pub fn analyze(g: &SignedGraph, moments_max: usize, tol: f64) -> Result<AnalyzeReport, CliError> {
    let spectrum = eigenvalues(g, tol)?;
    let phi = char_poly(g);
    let direct = estrada_index(g, tol)?;
    let series = ee_from_moments(g, tol)?;
    let moments = moment_sequence(g, moments_max);
    let cut = g.balance_certificate();
    Ok(AnalyzeReport {
        graph: GraphDto::from_graph(g),
        connected: g.is_connected(),
        bipartite: g.is_bipartite(),
        balanced: cut.is_some(),
        switching_cut: cut.map(|c| c.members()),
        pairing: g.has_pairing_property(),
        char_poly: phi.to_string(),
        char_poly_coeffs: phi.coeffs().iter().map(|c| c.to_string()).collect(),
        spectrum: spectrum.values().iter().map(|&v| round9(v)).collect(),
        estrada_index: round9(direct.value),
        estrada_index_series: round9(series.value),
        series_terms: series.truncation.unwrap_or(0),
        series_error_bound: series.error_bound.unwrap_or(0.0),
        moments: moments.moments().iter().map(|m| m.to_string()).collect(),
        balance_ratio: round9(balance_ratio(g, tol)?),
    })
}

/// Index of the balanced and unbalanced n-cycle next to the n * J0
/// approximation, for n = 3..=nmax.
pub fn cycle_table(nmax: usize, tol: f64) -> Result<CycleTableReport, CliError> {
    if !(3..=30).contains(&nmax) {
        return Err(CliError::Usage(format!("nmax {nmax} outside 3..=30")));
    }
    let mut rows = Vec::with_capacity(nmax - 2);
    for n in 3..=nmax {
        rows.push(CycleRow {
            n,
            ee_balanced: round9(estrada_index(&cycle(n, 1)?, tol)?.value),
            bessel_approx: round9(cycle_ee_approximation(n)),
            ee_unbalanced: round9(estrada_index(&cycle(n, -1)?, tol)?.value),
        });
    }
    Ok(CycleTableReport { rows })
}

fn parse_usize(key: &str, value: &str) -> Result<usize, CliError> {
    value
        .parse()
        .map_err(|_| CliError::Usage(format!("{key} expects a non-negative integer, got \"{value}\"")))
}

fn parse_sign(value: &str) -> Result<i8, CliError> {
    match value {
        "+" | "+1" | "1" => Ok(1),
        "-" | "-1" => Ok(-1),
        _ => Err(CliError::Usage(format!("sign expects + or -, got \"{value}\""))),
    }
}

/// Parses "i:j,i:j" into part-indexed negative edge pairs.
fn parse_pairs(value: &str) -> Result<Vec<(usize, usize)>, CliError> {
    let mut pairs = Vec::new();
    for item in value.split(',') {
        let (i, j) = item
            .split_once(':')
            .ok_or_else(|| CliError::Usage(format!("neg expects i:j pairs, got \"{item}\"")))?;
        pairs.push((parse_usize("neg", i)?, parse_usize("neg", j)?));
    }
    Ok(pairs)
}

fn require(value: Option<usize>, kind: &str, name: &str) -> Result<usize, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("kind={kind} requires {name}=<integer>")))
}

/// Parses key=value arguments into a family description. Recognized keys:
/// kind, n, l, m, sign, neg.
pub fn parse_family_args(args: &[String]) -> Result<FamilySpec, CliError> {
    let mut kind = None;
    let mut n = None;
    let mut l = None;
    let mut m = None;
    let mut sign = None;
    let mut neg = None;
    for arg in args {
        let (key, value) = arg
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("expected key=value, got \"{arg}\"")))?;
        match key {
            "kind" => kind = Some(value.to_string()),
            "n" => n = Some(parse_usize(key, value)?),
            "l" => l = Some(parse_usize(key, value)?),
            "m" => m = Some(parse_usize(key, value)?),
            "sign" => sign = Some(parse_sign(value)?),
            "neg" => neg = Some(parse_pairs(value)?),
            _ => return Err(CliError::Usage(format!("unknown family argument \"{key}\""))),
        }
    }
    let kind = kind.ok_or_else(|| CliError::Usage("kind=<family> is required".into()))?;
    match kind.as_str() {
        "path" => Ok(FamilySpec::Path { n: require(n, "path", "n")? }),
        "star" => Ok(FamilySpec::Star { n: require(n, "star", "n")? }),
        "cycle" => Ok(FamilySpec::Cycle {
            n: require(n, "cycle", "n")?,
            sign: sign.unwrap_or(1),
        }),
        "pendant-cycle" => Ok(FamilySpec::PendantCycle {
            n: require(n, "pendant-cycle", "n")?,
            l: require(l, "pendant-cycle", "l")?,
            sign: sign.unwrap_or(1),
        }),
        "complete-bipartite" => Ok(FamilySpec::CompleteBipartite {
            m: require(m, "complete-bipartite", "m")?,
            n: require(n, "complete-bipartite", "n")?,
            neg: neg.unwrap_or_default(),
        }),
        "one-negative-bipartite" => Ok(FamilySpec::OneNegativeBipartite {
            m: require(m, "one-negative-bipartite", "m")?,
            n: require(n, "one-negative-bipartite", "n")?,
        }),
        "mixed-bowtie" => Ok(FamilySpec::MixedBowtie { n: require(n, "mixed-bowtie", "n")? }),
        "mixed-diamond" => Ok(FamilySpec::MixedDiamond { n: require(n, "mixed-diamond", "n")? }),
        other => Err(CliError::Usage(format!(
            "unknown family kind \"{other}\"; known kinds: path, star, cycle, pendant-cycle, \
             complete-bipartite, one-negative-bipartite, mixed-bowtie, mixed-diamond"
        ))),
    }
}
