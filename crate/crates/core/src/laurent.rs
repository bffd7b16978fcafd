//! Sparse multivariate Laurent polynomials with big-integer coefficients.
//!
//! Terms are keyed by exponent vectors; the `BTreeMap` keeps them in lexicographic
//! order, which is also the canonical serialization order (leading term first).
//! Exact division is polynomial division after clearing the per-variable minimum
//! exponents; an inexact division is reported, never truncated.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    nvars: usize,
    /// exponent vector -> nonzero coefficient
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(nvars, vec![0; nvars], BigInt::one())
    }

    /// The generator `x_{i+1}` (0-based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, BigInt::one())
    }

    pub fn monomial(nvars: usize, exponents: Vec<i32>, coeff: BigInt) -> Self {
        assert_eq!(exponents.len(), nvars);
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exponents, coeff);
        }
        LaurentPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &BigInt)> {
        self.terms.iter()
    }

    /// Is this a single monomial with coefficient one and the given exponents?
    pub fn is_unit_monomial(&self, exponents: &[i32]) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(e, c)| e.as_slice() == exponents && c.is_one())
                .unwrap_or(false)
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        LaurentPoly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(BigInt::zero);
            *entry -= c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        LaurentPoly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut terms: BTreeMap<Vec<i32>, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let entry = terms.entry(e).or_insert_with(BigInt::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut out = LaurentPoly::one(self.nvars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Minimum exponent of each variable over all terms; zero vector for the
    /// zero polynomial.
    pub fn min_exponents(&self) -> Vec<i32> {
        let mut out = vec![i32::MAX; self.nvars];
        if self.terms.is_empty() {
            return vec![0; self.nvars];
        }
        for e in self.terms.keys() {
            for (o, &x) in out.iter_mut().zip(e) {
                *o = (*o).min(x);
            }
        }
        out
    }

    /// Exact division in the Laurent ring. Fails with `NonLaurentDivision` if
    /// `other` does not divide `self`.
    pub fn div_exact(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        assert_eq!(self.nvars, other.nvars);
        if other.is_zero() {
            return Err(Error::NonLaurentDivision);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero(self.nvars));
        }
        // Clear minimum exponents so both operands become ordinary polynomials.
        // The quotient then carries the offset `amin - bmin`.
        let amin = self.min_exponents();
        let bmin = other.min_exponents();
        let offset: Vec<i32> = amin.iter().zip(&bmin).map(|(a, b)| a - b).collect();

        let shift = |p: &LaurentPoly, min: &[i32]| -> BTreeMap<Vec<i32>, BigInt> {
            p.terms
                .iter()
                .map(|(e, c)| {
                    (
                        e.iter().zip(min).map(|(x, m)| x - m).collect::<Vec<i32>>(),
                        c.clone(),
                    )
                })
                .collect()
        };
        let mut rem = shift(self, &amin);
        let den = shift(other, &bmin);
        let (dexp, dcoeff) = den
            .iter()
            .next_back()
            .map(|(e, c)| (e.clone(), c.clone()))
            .unwrap();

        let mut quot: BTreeMap<Vec<i32>, BigInt> = BTreeMap::new();
        while let Some((rexp, rcoeff)) = rem.iter().next_back().map(|(e, c)| (e.clone(), c.clone()))
        {
            if rexp.iter().zip(&dexp).any(|(r, d)| r < d) {
                return Err(Error::NonLaurentDivision);
            }
            let (qc, r) = rcoeff.div_rem(&dcoeff);
            if !r.is_zero() {
                return Err(Error::NonLaurentDivision);
            }
            let qe: Vec<i32> = rexp.iter().zip(&dexp).map(|(r, d)| r - d).collect();
            // rem -= qc * x^qe * den
            for (e, c) in &den {
                let te: Vec<i32> = e.iter().zip(&qe).map(|(x, y)| x + y).collect();
                let drop_term = match rem.get_mut(&te) {
                    Some(entry) => {
                        *entry -= &qc * c;
                        entry.is_zero()
                    }
                    None => {
                        rem.insert(te.clone(), -(&qc * c));
                        false
                    }
                };
                if drop_term {
                    rem.remove(&te);
                }
            }
            quot.insert(qe.iter().zip(&offset).map(|(x, o)| x + o).collect(), qc);
        }
        Ok(LaurentPoly {
            nvars: self.nvars,
            terms: quot,
        })
    }

    /// All coefficients strictly positive.
    pub fn has_positive_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    /// Canonical serialization with the given variable letter. Terms appear in
    /// descending lexicographic exponent order.
    pub fn to_canonical_string(&self, letter: char) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (exps, coeff)) in self.terms.iter().rev().enumerate() {
            let negative = coeff.is_negative();
            let mag = coeff.abs();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() {
                factors.push(mag.to_string());
            }
            for (i, &e) in exps.iter().enumerate() {
                if e == 1 {
                    factors.push(format!("{letter}{}", i + 1));
                } else if e != 0 {
                    factors.push(format!("{letter}{}^{e}", i + 1));
                }
            }
            if factors.is_empty() {
                out.push('1');
            } else {
                out.push_str(&factors.join("*"));
            }
        }
        out
    }

    /// Remap variables: exponent `i` of the output reads exponent `perm[i]` of
    /// the input. `perm` must be a permutation of `0..nvars`.
    pub fn permute_vars(&self, perm: &[usize]) -> LaurentPoly {
        assert_eq!(perm.len(), self.nvars);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let ne: Vec<i32> = perm.iter().map(|&p| e[p]).collect();
                (ne, c.clone())
            })
            .collect();
        LaurentPoly {
            nvars: self.nvars,
            terms,
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string('x'))
    }
}
