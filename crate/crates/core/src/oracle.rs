//! Brute-force Hom oracle over a finite prime field.
//!
//! An exceptional module is rigid, so a representation with its dimension vector
//! and uniformly random arrow matrices over `F_p` is isomorphic to it with
//! probability `1 - O(1/p)`. The oracle samples such representations, certifies
//! each by checking that its endomorphism algebra is one-dimensional, and then
//! returns the dimension of the intertwiner space between the two certified
//! representations. It is deliberately independent of the combinatorial Hom
//! rules it cross-checks: nothing here knows about tubes or τ.

use crate::category::{ClusterCategory, IndObject};
use crate::error::{Error, Result};
use crate::root_data::DimVector;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_ORACLE_PRIME: u64 = 32003;
pub const DEFAULT_ORACLE_RETRY_CAP: u32 = 8;

#[derive(Debug, Clone, Copy)]
pub struct OracleConfig {
    pub prime: u64,
    pub rng_seed: u64,
    pub retry_cap: u32,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            prime: DEFAULT_ORACLE_PRIME,
            rng_seed: 1,
            retry_cap: DEFAULT_ORACLE_RETRY_CAP,
        }
    }
}

/// A representation: one matrix per arrow, `mats[a]` of shape
/// `dim[target] x dim[source]`, entries in `F_p`, row-major.
struct Rep {
    dims: Vec<usize>,
    mats: Vec<Vec<u64>>,
}

/// Hom dimension between two rigid modules, computed from random generic
/// representations over `F_p`.
pub fn oracle_hom_h(
    cat: &ClusterCategory,
    a: IndObject,
    b: IndObject,
    cfg: OracleConfig,
) -> Result<u32> {
    let da = module_dims(cat, a)?;
    let db = module_dims(cat, b)?;
    for (obj, d) in [(a, &da), (b, &db)] {
        let dv = DimVector(d.iter().map(|&x| x as i64).collect());
        if cat.euler().tits_form(&dv) != 1 {
            return Err(Error::OracleUnstable(format!(
                "{obj} has q(dim) = {} ≠ 1, not a real Schur root",
                cat.euler().tits_form(&dv)
            )));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
    let ra = certified_rep(cat, &da, cfg, &mut rng)?;
    let rb = certified_rep(cat, &db, cfg, &mut rng)?;
    Ok(hom_dim(cat, &ra, &rb, cfg.prime))
}

fn module_dims(cat: &ClusterCategory, obj: IndObject) -> Result<Vec<usize>> {
    let d = cat.dim_vector(obj)?;
    if !d.is_nonnegative() {
        return Err(Error::Internal(format!(
            "negative dimension vector for {obj}"
        )));
    }
    Ok(d.0.iter().map(|&x| x as usize).collect())
}

/// Sample representations until one has scalar endomorphisms only.
fn certified_rep(
    cat: &ClusterCategory,
    dims: &[usize],
    cfg: OracleConfig,
    rng: &mut ChaCha8Rng,
) -> Result<Rep> {
    for _ in 0..cfg.retry_cap {
        let rep = random_rep(cat, dims, cfg.prime, rng);
        if hom_dim(cat, &rep, &rep, cfg.prime) == 1 {
            return Ok(rep);
        }
    }
    Err(Error::OracleUnstable(format!(
        "no rigid representation of dimension {:?} found in {} attempts",
        dims, cfg.retry_cap
    )))
}

fn random_rep(cat: &ClusterCategory, dims: &[usize], p: u64, rng: &mut ChaCha8Rng) -> Rep {
    let mats = cat
        .quiver()
        .arrows()
        .iter()
        .map(|&(s, t)| {
            (0..dims[t] * dims[s])
                .map(|_| rng.gen_range(0..p))
                .collect()
        })
        .collect();
    Rep {
        dims: dims.to_vec(),
        mats,
    }
}

/// Dimension of the intertwiner space: unknowns are the vertex maps
/// `f_v : A_v -> B_v`; each arrow `s -> t` imposes `f_t A_α = B_α f_s`.
fn hom_dim(cat: &ClusterCategory, a: &Rep, b: &Rep, p: u64) -> u32 {
    let arrows = cat.quiver().arrows();
    let n = a.dims.len();
    let col_offset: Vec<usize> = {
        let mut off = vec![0usize; n + 1];
        for v in 0..n {
            off[v + 1] = off[v] + a.dims[v] * b.dims[v];
        }
        off
    };
    let ncols = col_offset[n];
    if ncols == 0 {
        return 0;
    }

    let mut rows: Vec<Vec<u64>> = Vec::new();
    for (idx, &(s, t)) in arrows.iter().enumerate() {
        let (as_, at) = (a.dims[s], a.dims[t]);
        let (bs, bt) = (b.dims[s], b.dims[t]);
        let ma = &a.mats[idx]; // at x as_
        let mb = &b.mats[idx]; // bt x bs
                               // One equation per (row of B_t, column of A_s).
        for r in 0..bt {
            for c in 0..as_ {
                let mut row = vec![0u64; ncols];
                // (f_t A_α)[r][c] = Σ_m f_t[r][m] * A_α[m][c]
                for m in 0..at {
                    let col = col_offset[t] + r * at + m;
                    row[col] = (row[col] + ma[m * as_ + c]) % p;
                }
                // -(B_α f_s)[r][c] = -Σ_m B_α[r][m] * f_s[m][c]
                for m in 0..bs {
                    let col = col_offset[s] + m * as_ + c;
                    row[col] = (row[col] + p - mb[r * bs + m] % p) % p;
                }
                rows.push(row);
            }
        }
    }
    let rank = gf_rank(&mut rows, ncols, p);
    (ncols - rank) as u32
}

/// Row-reduction rank over `F_p`.
fn gf_rank(rows: &mut [Vec<u64>], ncols: usize, p: u64) -> usize {
    let inv = |a: u64| -> u64 { mod_pow(a, p - 2, p) };
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(rank, pivot);
        let scale = inv(rows[rank][col] % p);
        for x in rows[rank].iter_mut() {
            *x = (*x % p) * scale % p;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] % p != 0 {
                let f = row[col] % p;
                for (x, &pv) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + (p - f * pv % p)) % p;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}
