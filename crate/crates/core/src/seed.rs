//! Seeds, mutation, denominator vectors and bounded exchange-graph enumeration.
//!
//! A seed is a free generating set of `n` Laurent polynomials in the ambient
//! variables together with a skew-symmetric exchange matrix. Mutation at `k`
//! replaces variable `k` by `(∏_{b_ik>0} x_i^{b_ik} + ∏_{b_ik<0} x_i^{-b_ik}) / x_k`
//! and transforms the matrix by the usual rule. The division is exact for every
//! seed reachable from an initial one; a failed division aborts the run.
//!
//! Enumeration is breadth-first over the exchange graph with canonical
//! deduplication: the key of a seed is the unordered multiset of canonically
//! serialized variables. The affine exchange graphs are infinite, so every walk
//! is bounded by a node cap.

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::quiver::Quiver;
use rayon::prelude::*;
use sha2::{Digest, Sha256};
use std::collections::HashSet;
use std::fmt;

/// Default node cap for enumeration.
pub const DEFAULT_NODE_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeMatrix {
    n: usize,
    b: Vec<i64>,
}

impl ExchangeMatrix {
    pub fn from_quiver(q: &Quiver) -> Self {
        let n = q.num_vertices();
        let mut b = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                b[i * n + j] = q.arrow_count(i, j) - q.arrow_count(j, i);
            }
        }
        ExchangeMatrix { n, b }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.b[i * self.n + j]
    }

    pub fn is_skew_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.entry(i, j) == -self.entry(j, i)))
    }

    /// Standard matrix mutation at position `k`.
    pub fn mutated(&self, k: usize) -> ExchangeMatrix {
        let n = self.n;
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                let v = if i == k || j == k {
                    -self.entry(i, j)
                } else {
                    let bik = self.entry(i, k);
                    let bkj = self.entry(k, j);
                    self.entry(i, j) + (bik.abs() * bkj + bik * bkj.abs()) / 2
                };
                out.b[i * n + j] = v;
            }
        }
        debug_assert!(out.is_skew_symmetric());
        out
    }

    /// Rows in row-major text form, used by the seed dump format.
    pub fn rows_text(&self) -> String {
        let mut s = String::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if j > 0 {
                    s.push(' ');
                }
                s.push_str(&self.entry(i, j).to_string());
            }
            s.push('\n');
        }
        s
    }
}

/// Exponent vector of the monomial denominator of a variable in reduced form.
/// Entries may be negative only for initial variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DenomVector(pub Vec<i64>);

impl fmt::Display for DenomVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Denominator vector of a nonzero Laurent polynomial: entry `i` is the negated
/// minimum exponent of variable `i` over all terms.
pub fn denominator_vector(p: &LaurentPoly) -> DenomVector {
    assert!(!p.is_zero(), "denominator vector of the zero polynomial");
    DenomVector(p.min_exponents().iter().map(|&e| -(e as i64)).collect())
}

#[derive(Debug, Clone)]
pub struct Seed {
    pub vars: Vec<LaurentPoly>,
    pub matrix: ExchangeMatrix,
    /// Mutated positions from the initial seed, 0-based.
    pub history: Vec<usize>,
}

/// Exchange-relation numerator at position `k`:
/// `∏_{b_ik>0} vars_i^{b_ik} + ∏_{b_ik<0} vars_i^{-b_ik}`.
pub fn exchange_numerator(vars: &[LaurentPoly], matrix: &ExchangeMatrix, k: usize) -> LaurentPoly {
    let n = matrix.n();
    let mut pos = LaurentPoly::one(n);
    let mut neg = LaurentPoly::one(n);
    for (i, var) in vars.iter().enumerate() {
        let b = matrix.entry(i, k);
        if b > 0 {
            pos = pos.mul(&var.pow(b as u32));
        } else if b < 0 {
            neg = neg.mul(&var.pow((-b) as u32));
        }
    }
    pos.add(&neg)
}

/// Exchange one variable: `(numerator at k) / vars[k]`, checked exact and with
/// positive coefficients.
pub fn exchange_variable(
    vars: &[LaurentPoly],
    matrix: &ExchangeMatrix,
    k: usize,
) -> Result<LaurentPoly> {
    let new_var = exchange_numerator(vars, matrix, k).div_exact(&vars[k])?;
    if !new_var.has_positive_coefficients() {
        return Err(Error::Internal(format!(
            "mutation at position {} produced a non-positive coefficient in {}",
            k + 1,
            new_var
        )));
    }
    Ok(new_var)
}

impl Seed {
    /// The initial seed: variable `i` is the ambient generator `x_{i+1}`.
    pub fn initial(matrix: ExchangeMatrix) -> Seed {
        let n = matrix.n();
        let vars = (0..n).map(|i| LaurentPoly::var(n, i)).collect();
        Seed {
            vars,
            matrix,
            history: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    pub fn mutate(&self, k: usize) -> Result<Seed> {
        assert!(k < self.n(), "mutation position out of range");
        let mut vars = self.vars.clone();
        vars[k] = exchange_variable(&self.vars, &self.matrix, k)?;
        let matrix = self.matrix.mutated(k);
        let mut history = self.history.clone();
        history.push(k);
        Ok(Seed {
            vars,
            matrix,
            history,
        })
    }

    pub fn mutate_along(&self, path: &[usize]) -> Result<Seed> {
        let mut s = self.clone();
        for &k in path {
            s = s.mutate(k)?;
        }
        Ok(s)
    }

    /// Canonical deduplication key: digest of the sorted variable serializations.
    pub fn canonical_key(&self) -> [u8; 32] {
        let mut strings: Vec<String> = self
            .vars
            .iter()
            .map(|v| v.to_canonical_string('x'))
            .collect();
        strings.sort_unstable();
        let mut hasher = Sha256::new();
        for s in &strings {
            hasher.update((s.len() as u64).to_le_bytes());
            hasher.update(s.as_bytes());
        }
        hasher.finalize().into()
    }

    /// Text dump: one variable per line in canonical form, then the exchange
    /// matrix row-major.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for v in &self.vars {
            s.push_str(&v.to_canonical_string('x'));
            s.push('\n');
        }
        s.push_str(&self.matrix.rows_text());
        s
    }
}

/// Breadth-first closure of `start` under mutation up to word length `depth`,
/// deduplicated by canonical key. Fails with `BudgetExceeded` once more than
/// `cap` distinct seeds have been produced.
pub fn enumerate_seeds(start: &Seed, depth: usize, cap: usize) -> Result<Vec<Seed>> {
    let n = start.n();
    let mut seen: HashSet<[u8; 32]> = HashSet::new();
    seen.insert(start.canonical_key());
    let mut all: Vec<Seed> = vec![start.clone()];
    let mut frontier: Vec<usize> = vec![0];

    for _ in 0..depth {
        if frontier.is_empty() {
            break;
        }
        let children: Vec<Vec<([u8; 32], Seed)>> = frontier
            .par_iter()
            .map(|&idx| {
                let seed = &all[idx];
                let mut out = Vec::with_capacity(n);
                for k in 0..n {
                    // Mutating the last-mutated position returns the parent.
                    if seed.history.last() == Some(&k) {
                        continue;
                    }
                    let child = seed.mutate(k)?;
                    let key = child.canonical_key();
                    out.push((key, child));
                }
                Ok(out)
            })
            .collect::<Result<_>>()?;

        let mut next = Vec::new();
        for group in children {
            for (key, child) in group {
                if seen.insert(key) {
                    if all.len() >= cap {
                        return Err(Error::BudgetExceeded(cap));
                    }
                    all.push(child);
                    next.push(all.len() - 1);
                }
            }
        }
        frontier = next;
    }
    Ok(all)
}

/// Distinct variables across the given seeds, sorted by canonical form.
pub fn distinct_variables(seeds: &[Seed]) -> Vec<LaurentPoly> {
    let mut by_canon: Vec<(String, &LaurentPoly)> = Vec::new();
    let mut seen = HashSet::new();
    for s in seeds {
        for v in &s.vars {
            let c = v.to_canonical_string('x');
            if seen.insert(c.clone()) {
                by_canon.push((c, v));
            }
        }
    }
    by_canon.sort_by(|a, b| a.0.cmp(&b.0));
    by_canon.into_iter().map(|(_, v)| v.clone()).collect()
}
