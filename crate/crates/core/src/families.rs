//! Generators for the named graph families used by the extremal results:
//! paths, stars, cycles, cycles with pendant edges, complete bipartite sign
//! patterns, and the two bicyclic constructions built from a pair of
//! opposite-sign triangles.

use crate::graph::SignedGraph;
use crate::spectra::Spectrum;
use crate::{Error, Result};

fn check_sign(sign: i8) -> Result<()> {
    if sign == 1 || sign == -1 {
        Ok(())
    } else {
        Err(Error::BadParameter(format!("sign {sign} must be -1 or +1")))
    }
}

/// All-positive path on vertices 0..n.
pub fn path(n: usize) -> Result<SignedGraph> {
    if n == 0 {
        return Err(Error::BadParameter("path needs n >= 1".into()));
    }
    let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1, 1)).collect();
    SignedGraph::from_edge_list(n, &edges)
}

/// All-positive star with center 0.
pub fn star(n: usize) -> Result<SignedGraph> {
    if n == 0 {
        return Err(Error::BadParameter("star needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|v| (0, v, 1)).collect();
    SignedGraph::from_edge_list(n, &edges)
}

/// Cycle 0-1-..-(n-1)-0. All edges positive for sign = +1; for sign = -1
/// exactly the closing edge (0, n-1) is negative, the canonical
/// representative of the unbalanced switching class.
pub fn cycle(n: usize, sign: i8) -> Result<SignedGraph> {
    if n < 3 {
        return Err(Error::BadParameter(format!("cycle needs n >= 3, got {n}")));
    }
    check_sign(sign)?;
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1, 1)).collect();
    edges.push((0, n - 1, sign));
    SignedGraph::from_edge_list(n, &edges)
}

/// Cycle of length l (signed as in [`cycle`]) with n - l pendant vertices
/// all attached to cycle vertex 0; unicyclic with m = n.
pub fn pendant_cycle(n: usize, l: usize, sign: i8) -> Result<SignedGraph> {
    if l < 3 || l > n {
        return Err(Error::BadParameter(format!(
            "pendant cycle needs 3 <= l <= n, got l={l}, n={n}"
        )));
    }
    check_sign(sign)?;
    let mut edges: Vec<_> = (0..l - 1).map(|i| (i, i + 1, 1)).collect();
    edges.push((0, l - 1, sign));
    edges.extend((l..n).map(|v| (0, v, 1)));
    SignedGraph::from_edge_list(n, &edges)
}

/// Complete bipartite graph with parts 0..m and m..m+n; the cross edges
/// listed in `neg_edges` as (left index, right index) pairs are negative.
pub fn complete_bipartite(
    m: usize,
    n: usize,
    neg_edges: &[(usize, usize)],
) -> Result<SignedGraph> {
    if m == 0 || n == 0 {
        return Err(Error::BadParameter("both parts need at least one vertex".into()));
    }
    let mut sign = vec![1i8; m * n];
    for &(i, j) in neg_edges {
        if i >= m || j >= n {
            return Err(Error::BadParameter(format!(
                "negative edge ({i}, {j}) outside {m}x{n} parts"
            )));
        }
        sign[i * n + j] = -1;
    }
    let mut edges = Vec::with_capacity(m * n);
    for i in 0..m {
        for j in 0..n {
            edges.push((i, m + j, sign[i * n + j]));
        }
    }
    SignedGraph::from_edge_list(m + n, &edges)
}

/// Complete bipartite graph with exactly one negative edge; the canonical
/// unbalanced pattern. Both parts need two vertices, else every pattern is
/// balanced.
pub fn one_negative_complete_bipartite(m: usize, n: usize) -> Result<SignedGraph> {
    if m < 2 || n < 2 {
        return Err(Error::BadParameter(format!(
            "unbalanced complete bipartite needs m, n >= 2, got ({m}, {n})"
        )));
    }
    complete_bipartite(m, n, &[(0, 0)])
}

/// Evaluates a published closed-form candidate for the spectrum of
/// [`one_negative_complete_bipartite`]: four values
/// +-sqrt((mn +- sqrt(R))/2) with R = n^2 + 2(m-1)(n-2)^2 + n^2(m-1)^2,
/// padded with zeros to order m + n.
///
/// The expression does not agree with the computed spectrum for all (m, n);
/// treat [`crate::spectra::eigenvalues`] as ground truth and use this only
/// to record where the closed form stands.
pub fn one_negative_bipartite_spectrum_formula(m: usize, n: usize) -> Result<Spectrum> {
    if m < 2 || n < 2 {
        return Err(Error::BadParameter(format!(
            "formula needs m, n >= 2, got ({m}, {n})"
        )));
    }
    let (mf, nf) = (m as f64, n as f64);
    let radicand = nf * nf
        + 2.0 * (mf - 1.0) * (nf - 2.0) * (nf - 2.0)
        + nf * nf * (mf - 1.0) * (mf - 1.0);
    let root = radicand.sqrt();
    let outer_minus = (mf * nf - root) / 2.0;
    if outer_minus < 0.0 {
        return Err(Error::BadParameter(format!(
            "formula radicand ({} - {root:.6}) / 2 is negative for ({m}, {n})",
            mf * nf
        )));
    }
    let hi = ((mf * nf + root) / 2.0).sqrt();
    let lo = outer_minus.sqrt();
    let mut values = vec![hi, lo, -lo, -hi];
    values.extend(std::iter::repeat(0.0).take(m + n - 4));
    Ok(Spectrum::from_values(values, 0.0))
}

/// Two triangles sharing vertex 0, one positive and one negative, with
/// n - 5 pendant edges at the shared vertex; bicyclic with m = n + 1 and a
/// spectrum symmetric about zero.
pub fn mixed_bowtie(n: usize) -> Result<SignedGraph> {
    if n < 5 {
        return Err(Error::BadParameter(format!("bowtie needs n >= 5, got {n}")));
    }
    let mut edges = vec![
        (0, 1, 1),
        (0, 2, 1),
        (1, 2, 1),
        (0, 3, 1),
        (0, 4, 1),
        (3, 4, -1),
    ];
    edges.extend((5..n).map(|v| (0, v, 1)));
    SignedGraph::from_edge_list(n, &edges)
}

/// Two triangles sharing edge (0, 1), one positive and one negative, with
/// n - 4 pendant edges at vertex 0; bicyclic with m = n + 1 and a spectrum
/// symmetric about zero.
pub fn mixed_diamond(n: usize) -> Result<SignedGraph> {
    if n < 5 {
        return Err(Error::BadParameter(format!("diamond needs n >= 5, got {n}")));
    }
    let mut edges = vec![(0, 1, 1), (0, 2, 1), (1, 2, 1), (0, 3, 1), (1, 3, -1)];
    edges.extend((4..n).map(|v| (0, v, 1)));
    SignedGraph::from_edge_list(n, &edges)
}

/// Closed form for EE of [`mixed_bowtie`]:
/// n - 6 + 2cosh(a) + 2cosh(b) + 2cosh(1) with
/// a, b = sqrt((n +- sqrt(n^2 - 4n + 20)) / 2).
pub fn mixed_bowtie_ee_closed_form(n: usize) -> Result<f64> {
    if n < 5 {
        return Err(Error::BadParameter(format!("bowtie needs n >= 5, got {n}")));
    }
    let nf = n as f64;
    let root = (nf * nf - 4.0 * nf + 20.0).sqrt();
    let a = ((nf + root) / 2.0).sqrt();
    let b = ((nf - root) / 2.0).sqrt();
    Ok(nf - 6.0 + 2.0 * a.cosh() + 2.0 * b.cosh() + 2.0 * 1f64.cosh())
}

/// Closed form for EE of [`mixed_diamond`]:
/// n - 4 + 2cosh(c) + 2cosh(d) with
/// c, d = sqrt((n + 1 +- sqrt((n+1)^2 - 8(n-2))) / 2).
pub fn mixed_diamond_ee_closed_form(n: usize) -> Result<f64> {
    if n < 5 {
        return Err(Error::BadParameter(format!("diamond needs n >= 5, got {n}")));
    }
    let nf = n as f64;
    let root = ((nf + 1.0) * (nf + 1.0) - 8.0 * (nf - 2.0)).sqrt();
    let c = ((nf + 1.0 + root) / 2.0).sqrt();
    let d = ((nf + 1.0 - root) / 2.0).sqrt();
    Ok(nf - 4.0 + 2.0 * c.cosh() + 2.0 * d.cosh())
}

/// A parsed family request; see each generator for parameter meanings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path { n: usize },
    Star { n: usize },
    Cycle { n: usize, sign: i8 },
    PendantCycle { n: usize, l: usize, sign: i8 },
    CompleteBipartite { m: usize, n: usize, neg: Vec<(usize, usize)> },
    OneNegativeBipartite { m: usize, n: usize },
    MixedBowtie { n: usize },
    MixedDiamond { n: usize },
}

impl FamilySpec {
    pub fn kind_name(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Star { .. } => "star",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::PendantCycle { .. } => "pendant-cycle",
            FamilySpec::CompleteBipartite { .. } => "complete-bipartite",
            FamilySpec::OneNegativeBipartite { .. } => "one-negative-bipartite",
            FamilySpec::MixedBowtie { .. } => "mixed-bowtie",
            FamilySpec::MixedDiamond { .. } => "mixed-diamond",
        }
    }

    pub fn build(&self) -> Result<SignedGraph> {
        match self {
            FamilySpec::Path { n } => path(*n),
            FamilySpec::Star { n } => star(*n),
            FamilySpec::Cycle { n, sign } => cycle(*n, *sign),
            FamilySpec::PendantCycle { n, l, sign } => pendant_cycle(*n, *l, *sign),
            FamilySpec::CompleteBipartite { m, n, neg } => complete_bipartite(*m, *n, neg),
            FamilySpec::OneNegativeBipartite { m, n } => {
                one_negative_complete_bipartite(*m, *n)
            }
            FamilySpec::MixedBowtie { n } => mixed_bowtie(*n),
            FamilySpec::MixedDiamond { n } => mixed_diamond(*n),
        }
    }
}
