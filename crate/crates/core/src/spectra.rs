//! Eigenvalues (cyclic Jacobi on the dense symmetric adjacency matrix) and
//! exact integer characteristic polynomials computed two independent ways,
//! plus closed-form cycle spectra and eigenvalue interlacing checks.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::HashMap;

use crate::graph::SignedGraph;
use crate::{Error, Result};

/// Sweep cap for the Jacobi iteration; tiny dense matrices converge in a
/// handful of sweeps, so hitting this means something is wrong.
pub const MAX_SWEEPS: usize = 100;

/// Gap under which adjacent eigenvalues are reported as one multiple value.
pub const MULTIPLICITY_GAP: f64 = 1e-8;

/// Real eigenvalues sorted non-increasing, with the tolerance they were
/// computed to.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    tol: f64,
}

impl Spectrum {
    /// Wraps and sorts eigenvalues non-increasing.
    pub fn from_values(mut values: Vec<f64>, tol: f64) -> Self {
        values.sort_by(|a, b| b.partial_cmp(a).expect("eigenvalues are finite"));
        Self { values, tol }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// Largest eigenvalue. Panics on an empty spectrum.
    pub fn index(&self) -> f64 {
        self.values[0]
    }

    /// Eigenvalues grouped into (representative, multiplicity) pairs; values
    /// closer than [`MULTIPLICITY_GAP`] merge, represented by their mean.
    pub fn multiplicity_groups(&self) -> Vec<(f64, usize)> {
        let mut groups: Vec<(f64, usize)> = Vec::new();
        let mut i = 0;
        while i < self.values.len() {
            let mut j = i + 1;
            while j < self.values.len() && self.values[j - 1] - self.values[j] < MULTIPLICITY_GAP {
                j += 1;
            }
            let mean = self.values[i..j].iter().sum::<f64>() / (j - i) as f64;
            groups.push((mean, j - i));
            i = j;
        }
        groups
    }

    /// Number of eigenvalues with |mu| above `threshold`.
    pub fn nonzero_count(&self, threshold: f64) -> usize {
        self.values.iter().filter(|v| v.abs() > threshold).count()
    }
}

// ============================================================================
// Jacobi eigensolver
// ============================================================================

fn off_diagonal_frobenius(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for q in (p + 1)..n {
            sum += a[p * n + q] * a[p * n + q];
        }
    }
    (2.0 * sum).sqrt()
}

/// Cyclic Jacobi on a symmetric matrix (row-major, length n*n). Rotates
/// every off-diagonal pair per sweep until the off-diagonal Frobenius norm
/// drops below `tol`. Returns unsorted eigenvalues and the accumulated
/// rotation matrix Q (row-major, columns are eigenvectors).
pub(crate) fn jacobi_eigh(
    mut a: Vec<f64>,
    n: usize,
    tol: f64,
    max_sweeps: usize,
) -> Result<(Vec<f64>, Vec<f64>)> {
    let mut q = vec![0.0; n * n];
    for i in 0..n {
        q[i * n + i] = 1.0;
    }
    if n < 2 {
        let vals = (0..n).map(|i| a[i * n + i]).collect();
        return Ok((vals, q));
    }
    for _ in 0..max_sweeps {
        if off_diagonal_frobenius(&a, n) < tol {
            let vals = (0..n).map(|i| a[i * n + i]).collect();
            return Ok((vals, q));
        }
        for p in 0..n - 1 {
            for iq in (p + 1)..n {
                let apq = a[p * n + iq];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[iq * n + iq];
                let theta = (aqq - app) / (2.0 * apq);
                // t is the smaller-magnitude root of t^2 + 2*t*theta - 1 = 0;
                // the guard avoids overflow in theta^2.
                let t = if theta.abs() > 1e150 {
                    1.0 / (2.0 * theta)
                } else {
                    let sgn = if theta >= 0.0 { 1.0 } else { -1.0 };
                    sgn / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                a[p * n + p] = app - t * apq;
                a[iq * n + iq] = aqq + t * apq;
                a[p * n + iq] = 0.0;
                a[iq * n + p] = 0.0;
                for k in 0..n {
                    if k != p && k != iq {
                        let akp = a[k * n + p];
                        let akq = a[k * n + iq];
                        a[k * n + p] = akp - s * (akq + tau * akp);
                        a[k * n + iq] = akq + s * (akp - tau * akq);
                        a[p * n + k] = a[k * n + p];
                        a[iq * n + k] = a[k * n + iq];
                    }
                }
                for k in 0..n {
                    let qkp = q[k * n + p];
                    let qkq = q[k * n + iq];
                    q[k * n + p] = qkp - s * (qkq + tau * qkp);
                    q[k * n + iq] = qkq + s * (qkp - tau * qkq);
                }
            }
        }
    }
    let residual = off_diagonal_frobenius(&a, n);
    if residual < tol {
        let vals = (0..n).map(|i| a[i * n + i]).collect();
        return Ok((vals, q));
    }
    Err(Error::NoConvergence {
        sweeps: max_sweeps,
        residual,
    })
}

/// All eigenvalues of the adjacency matrix, each within `tol` of the true
/// value (Weyl: the off-diagonal Frobenius norm bounds every eigenvalue
/// perturbation).
pub fn eigenvalues(g: &SignedGraph, tol: f64) -> Result<Spectrum> {
    if tol <= 0.0 {
        return Err(Error::BadParameter(format!("tol {tol} must be positive")));
    }
    let n = g.n();
    let (vals, _) = jacobi_eigh(g.adjacency_matrix().to_f64(), n, tol, MAX_SWEEPS)?;
    let spectrum = Spectrum::from_values(vals, tol);
    debug_assert!(
        spectrum.values.iter().sum::<f64>().abs() <= n as f64 * tol + 1e-9,
        "trace must stay zero"
    );
    debug_assert!(
        (spectrum.values.iter().map(|v| v * v).sum::<f64>() - 2.0 * g.m() as f64).abs()
            <= n as f64 * tol + 1e-9,
        "sum of squares must stay 2m"
    );
    Ok(spectrum)
}

/// Closed-form cycle spectrum: 2cos(2r*pi/n) for the all-positive cycle and
/// 2cos((2r+1)*pi/n) for the unbalanced one, r = 0..n-1.
pub fn cycle_spectrum_closed_form(n: usize, sign: i8) -> Result<Spectrum> {
    if n < 3 {
        return Err(Error::BadParameter(format!("cycle length {n} < 3")));
    }
    if sign != 1 && sign != -1 {
        return Err(Error::BadParameter(format!("cycle sign {sign} must be -1 or +1")));
    }
    let pi = std::f64::consts::PI;
    let values = (0..n)
        .map(|r| {
            let angle = if sign == 1 {
                2.0 * r as f64 * pi / n as f64
            } else {
                (2.0 * r as f64 + 1.0) * pi / n as f64
            };
            2.0 * angle.cos()
        })
        .collect();
    Ok(Spectrum::from_values(values, 0.0))
}

// ============================================================================
// Exact characteristic polynomials
// ============================================================================

/// Exact integer coefficients of det(xI - A): `coeffs[k]` multiplies x^k,
/// monic of degree n.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    /// Wraps an ascending coefficient vector; the last entry must be 1.
    pub fn from_coefficients(coeffs: Vec<BigInt>) -> Result<Self> {
        match coeffs.last() {
            Some(c) if c.is_one() => Ok(Self { coeffs }),
            _ => Err(Error::BadParameter(
                "characteristic polynomial must be monic".into(),
            )),
        }
    }

    /// Coefficients ascending by degree; length is degree + 1.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    /// True iff the root multiset is symmetric about zero: writing
    /// phi(x) = sum a_i x^(n-i), every odd-i coefficient vanishes, i.e.
    /// coeffs[k] = 0 whenever k and n have different parity.
    pub fn is_spectrally_symmetric(&self) -> bool {
        let n = self.degree();
        self.coeffs
            .iter()
            .enumerate()
            .all(|(k, c)| (n - k) % 2 == 0 || c.is_zero())
    }

    /// Horner evaluation with coefficients converted to f64.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::INFINITY);
        }
        acc
    }
}

impl std::fmt::Display for CharPoly {
    /// Renders like `x^5 - 6x^3 + 5x` (descending powers, zero terms
    /// omitted).
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

pub(crate) fn bigint_adjacency(g: &SignedGraph) -> Vec<BigInt> {
    let n = g.n();
    let mut a = vec![BigInt::zero(); n * n];
    for &(u, v, s) in g.edges() {
        a[u * n + v] = BigInt::from(s);
        a[v * n + u] = BigInt::from(s);
    }
    a
}

pub(crate) fn bigint_matmul(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = &a[i * n + k];
            if aik.is_zero() {
                continue;
            }
            for j in 0..n {
                let prod = aik * &b[k * n + j];
                out[i * n + j] += prod;
            }
        }
    }
    out
}

pub(crate) fn bigint_trace(a: &[BigInt], n: usize) -> BigInt {
    (0..n).map(|i| a[i * n + i].clone()).sum()
}

/// Exact characteristic polynomial by the Faddeev-LeVerrier recurrence;
/// every division by the step index is exact over the integers.
pub fn char_poly(g: &SignedGraph) -> CharPoly {
    let n = g.n();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    if n == 0 {
        return CharPoly { coeffs };
    }
    let a = bigint_adjacency(g);
    let mut m = a.clone();
    for k in 1..=n {
        let ck = -bigint_trace(&m, n) / BigInt::from(k);
        coeffs[n - k] = ck.clone();
        if k < n {
            for i in 0..n {
                m[i * n + i] += &ck;
            }
            m = bigint_matmul(&a, &m, n);
        }
    }
    CharPoly { coeffs }
}

// Dense polynomial helpers on ascending BigInt coefficient vectors.

fn poly_mul_x(p: &[BigInt]) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(p.len() + 1);
    out.push(BigInt::zero());
    out.extend_from_slice(p);
    out
}

fn poly_sub_assign(acc: &mut Vec<BigInt>, p: &[BigInt], scale: &BigInt) {
    if acc.len() < p.len() {
        acc.resize(p.len(), BigInt::zero());
    }
    for (a, b) in acc.iter_mut().zip(p) {
        *a -= scale * b;
    }
}

#[cfg(test)]
pub(crate) fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Simple cycles through `pivot` inside `mask`, as (cycle sign, vertex
/// bitmask) pairs. Each cycle is reported once: DFS paths out of `pivot`
/// close only when the first path vertex is smaller than the last.
fn cycles_through(
    adj: &[Vec<(usize, i8)>],
    pivot: usize,
    mask: u64,
    out: &mut Vec<(i8, u64)>,
) {
    struct Dfs<'a> {
        adj: &'a [Vec<(usize, i8)>],
        pivot: usize,
        mask: u64,
        path: Vec<usize>,
        out: &'a mut Vec<(i8, u64)>,
    }
    impl Dfs<'_> {
        fn run(&mut self, v: usize, path_mask: u64, sign: i8) {
            for &(w, s) in &self.adj[v] {
                if self.mask & (1 << w) == 0 {
                    continue;
                }
                if w == self.pivot {
                    if self.path.len() >= 3 && self.path[1] < v {
                        self.out.push((sign * s, path_mask));
                    }
                    continue;
                }
                if path_mask & (1 << w) != 0 {
                    continue;
                }
                self.path.push(w);
                self.run(w, path_mask | (1 << w), sign * s);
                self.path.pop();
            }
        }
    }
    let mut dfs = Dfs {
        adj,
        pivot,
        mask,
        path: vec![pivot],
        out,
    };
    dfs.run(pivot, 1 << pivot, 1);
}

/// Exact characteristic polynomial by the vertex-deletion recurrence
/// phi(G) = x*phi(G-u) - sum over edges vu of phi(G-v-u)
///          - 2 * sum over cycles Y through u of sigma(Y)*phi(G-Y),
/// memoized on the surviving-vertex bitmask. The top call expands at the
/// requested vertex; inner calls expand at the lowest surviving vertex.
pub fn char_poly_schwenk(g: &SignedGraph, u: usize) -> Result<CharPoly> {
    let n = g.n();
    if u >= n {
        return Err(Error::VertexOutOfRange { v: u, n });
    }
    if n > 63 {
        return Err(Error::BadParameter(format!(
            "vertex-deletion recurrence supports n <= 63, got {n}"
        )));
    }
    let adj = g.adjacency_list();
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let mut memo: HashMap<u64, Vec<BigInt>> = HashMap::new();

    fn rec(
        mask: u64,
        top: Option<usize>,
        adj: &[Vec<(usize, i8)>],
        memo: &mut HashMap<u64, Vec<BigInt>>,
    ) -> Vec<BigInt> {
        if mask == 0 {
            return vec![BigInt::one()];
        }
        if top.is_none() {
            if let Some(p) = memo.get(&mask) {
                return p.clone();
            }
        }
        let pivot = top.unwrap_or_else(|| mask.trailing_zeros() as usize);
        let rest = mask & !(1u64 << pivot);
        let mut acc = poly_mul_x(&rec(rest, None, adj, memo));
        let one = BigInt::one();
        for &(v, _) in &adj[pivot] {
            if mask & (1 << v) != 0 {
                let sub = rec(rest & !(1u64 << v), None, adj, memo);
                poly_sub_assign(&mut acc, &sub, &one);
            }
        }
        let mut cycles = Vec::new();
        cycles_through(adj, pivot, mask, &mut cycles);
        for (sign, cycle_mask) in cycles {
            let sub = rec(mask & !cycle_mask, None, adj, memo);
            poly_sub_assign(&mut acc, &sub, &BigInt::from(2 * sign));
        }
        if top.is_none() {
            memo.insert(mask, acc.clone());
        }
        acc
    }

    let coeffs = rec(full, Some(u), &adj, &mut memo);
    debug_assert_eq!(coeffs.len(), n + 1);
    CharPoly::from_coefficients(coeffs)
}

/// True iff the induced subgraph's eigenvalues interlace the host's:
/// mu[n-m+i] <= lambda[i] <= mu[i] (1-based, non-increasing), with 2*tol
/// slack on each side.
pub fn interlacing_check(g: &SignedGraph, verts: &[usize], tol: f64) -> Result<bool> {
    if verts.is_empty() {
        return Err(Error::BadParameter("empty vertex subset".into()));
    }
    let sub = g.induced_subgraph(verts)?;
    let mu = eigenvalues(g, tol)?;
    let lambda = eigenvalues(&sub, tol)?;
    let n = g.n();
    let m = sub.n();
    let slack = 2.0 * tol;
    for i in 1..=m {
        let li = lambda.values()[i - 1];
        if li > mu.values()[i - 1] + slack || li < mu.values()[n - m + i - 1] - slack {
            return Ok(false);
        }
    }
    Ok(true)
}
