//! End-to-end verification: track cluster-tilting objects through mutation,
//! re-base the seed at an arbitrary cluster, and compare mutation-computed
//! denominators against the Hom-dimension predictions.
//!
//! Ground truth is the mutation engine: it is exact integer arithmetic with no
//! modeling choices. Objects are recovered from denominators with respect to the
//! acyclic reference seed, whose variables are the objects `τP_i`. Re-basing
//! replaces the tracked variables by fresh indeterminates and replays mutations,
//! carrying the reference-coordinate expressions along as a shadow; symbolic
//! inversion is never attempted.

use crate::category::{ClusterCategory, IndObject};
use crate::denominator::{predict, TiltingSeed, Variant};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::seed::{
    denominator_vector, exchange_variable, DenomVector, ExchangeMatrix, Seed, DEFAULT_NODE_CAP,
};
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet, HashSet};

/// A seed whose variables are expressed in the reference coordinates, together
/// with the objects of its cluster: `objects[i]` is the object of `vars[i]`.
#[derive(Debug, Clone)]
pub struct TrackedSeed {
    pub seed: Seed,
    pub objects: Vec<IndObject>,
}

impl TrackedSeed {
    /// The acyclic reference seed; its objects are the shifted projectives.
    pub fn initial(cat: &ClusterCategory) -> TrackedSeed {
        let matrix = ExchangeMatrix::from_quiver(cat.quiver());
        let objects = (0..cat.n())
            .map(|i| IndObject::Transjective {
                vertex: i,
                power: 1,
            })
            .collect();
        TrackedSeed {
            seed: Seed::initial(matrix),
            objects,
        }
    }

    pub fn mutate(&self, cat: &ClusterCategory, k: usize) -> Result<TrackedSeed> {
        let seed = self.seed.mutate(k)?;
        let mut objects = self.objects.clone();
        objects[k] = cat.identify_from_denominator(&denominator_vector(&seed.vars[k]))?;
        Ok(TrackedSeed { seed, objects })
    }
}

/// Apply the mutation path to the reference seed, re-identifying the mutated
/// object after each step.
pub fn track_mutations(cat: &ClusterCategory, path: &[usize]) -> Result<TrackedSeed> {
    let mut tracked = TrackedSeed::initial(cat);
    for &k in path {
        if k >= cat.n() {
            return Err(Error::InvalidInput(format!(
                "mutation position {} out of range 1..{}",
                k + 1,
                cat.n()
            )));
        }
        tracked = tracked.mutate(cat, k)?;
    }
    if !cat.is_cluster_tilting(&tracked.objects) {
        return Err(Error::Internal(
            "tracked objects are not cluster-tilting".into(),
        ));
    }
    Ok(tracked)
}

/// Breadth-first search for a mutation path whose cluster realizes the target
/// object multiset.
pub fn find_path_to_objects(
    cat: &ClusterCategory,
    target: &[IndObject],
    max_depth: usize,
    cap: usize,
) -> Result<Vec<usize>> {
    let n = cat.n();
    let key = |objs: &[IndObject]| -> Vec<IndObject> {
        let mut v = objs.to_vec();
        v.sort_unstable();
        v
    };
    let target_key = key(target);

    let start = TrackedSeed::initial(cat);
    if key(&start.objects) == target_key {
        return Ok(Vec::new());
    }
    let mut seen: HashSet<Vec<IndObject>> = HashSet::new();
    seen.insert(key(&start.objects));
    let mut frontier = vec![start];
    for _ in 0..max_depth {
        let mut next = Vec::new();
        for node in &frontier {
            for k in 0..n {
                if node.seed.history.last() == Some(&k) {
                    continue;
                }
                let child = node.mutate(cat, k)?;
                let ck = key(&child.objects);
                if ck == target_key {
                    return Ok(child.seed.history);
                }
                if seen.insert(ck) {
                    if seen.len() > cap {
                        return Err(Error::BudgetExceeded(cap));
                    }
                    next.push(child);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Err(Error::InvalidInput(format!(
        "no mutation path within depth {max_depth} reaches the requested objects"
    )))
}

/// One realized exchange: the pair and the middle-term multisets of its two
/// exchange triangles, read off the exchange-matrix column at the mutated
/// position.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExchangeEvent {
    pub x: IndObject,
    pub xstar: IndObject,
    pub b: Vec<(IndObject, u32)>,
    pub bprime: Vec<(IndObject, u32)>,
}

#[derive(Debug, Clone)]
pub struct ReportRow {
    pub object: IndObject,
    pub hom_row: Vec<u32>,
    pub predicted_literal: Vec<i64>,
    pub corrected_literal: Vec<usize>,
    pub predicted_carveout: Vec<i64>,
    pub corrected_carveout: Vec<usize>,
    pub observed: Vec<i64>,
    pub match_literal: bool,
    pub match_carveout: bool,
    /// The variable in the re-based coordinates.
    pub variable: LaurentPoly,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub tilting: TiltingSeed,
    pub rows: Vec<ReportRow>,
    pub seeds_enumerated: usize,
    pub mismatches_literal: usize,
    pub mismatches_carveout: usize,
    /// Rows where the two prediction variants disagree.
    pub variant_disagreements: usize,
    /// Rows with at least one reduced position under the literal variant.
    pub corrected_rows: usize,
    /// Deduplicated exchange events realized during enumeration.
    pub exchanges: Vec<ExchangeEvent>,
    /// Deduplicated cluster-tilting object sets encountered (sorted members).
    pub tilting_sets: Vec<Vec<IndObject>>,
}

impl VerificationReport {
    pub fn mismatches(&self, variant: Variant) -> usize {
        match variant {
            Variant::Literal => self.mismatches_literal,
            Variant::CarveOut => self.mismatches_carveout,
        }
    }

    fn vec_text(v: &[i64]) -> String {
        let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        format!("({})", inner.join(","))
    }

    fn row_flags(row: &ReportRow) -> String {
        let mut flags = vec![
            format!(
                "literal={}",
                if row.match_literal { "ok" } else { "MISMATCH" }
            ),
            format!(
                "carveout={}",
                if row.match_carveout { "ok" } else { "MISMATCH" }
            ),
        ];
        if row.predicted_literal != row.predicted_carveout {
            flags.push("variants_differ".to_string());
            let decided = if row.observed == row.predicted_carveout {
                "carveout"
            } else if row.observed == row.predicted_literal {
                "literal"
            } else {
                "neither"
            };
            flags.push(format!("observed_decides={decided}"));
        }
        flags.join(",")
    }

    /// Tab-separated report, one row per verified variable.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for (i, (t, c)) in self
            .tilting
            .summands
            .iter()
            .zip(&self.tilting.cluster)
            .enumerate()
        {
            out.push_str(&format!("# position {}: T={t} tauT={c}\n", i + 1));
        }
        out.push_str(
            "object\thom_row\tpredicted_literal\tpredicted_carveout\tobserved\tmatch_flags\n",
        );
        for row in &self.rows {
            let hom: Vec<i64> = row.hom_row.iter().map(|&h| h as i64).collect();
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\n",
                row.object,
                Self::vec_text(&hom),
                Self::vec_text(&row.predicted_literal),
                Self::vec_text(&row.predicted_carveout),
                Self::vec_text(&row.observed),
                Self::row_flags(row),
            ));
        }
        out.push_str(&format!(
            "# summary: rows={} mismatches_literal={} mismatches_carveout={} variant_disagreements={} corrected_rows={} seeds={}\n",
            self.rows.len(),
            self.mismatches_literal,
            self.mismatches_carveout,
            self.variant_disagreements,
            self.corrected_rows,
            self.seeds_enumerated,
        ));
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|r| {
                serde_json::json!({
                    "object": r.object.to_string(),
                    "hom_row": r.hom_row,
                    "predicted_literal": r.predicted_literal,
                    "corrected_literal": r.corrected_literal,
                    "predicted_carveout": r.predicted_carveout,
                    "corrected_carveout": r.corrected_carveout,
                    "observed": r.observed,
                    "match_literal": r.match_literal,
                    "match_carveout": r.match_carveout,
                    "variable": r.variable.to_canonical_string('y'),
                })
            })
            .collect();
        serde_json::json!({
            "tilting": self.tilting.summands.iter().map(|o| o.to_string()).collect::<Vec<_>>(),
            "cluster": self.tilting.cluster.iter().map(|o| o.to_string()).collect::<Vec<_>>(),
            "rows": rows,
            "summary": {
                "rows": self.rows.len(),
                "mismatches_literal": self.mismatches_literal,
                "mismatches_carveout": self.mismatches_carveout,
                "variant_disagreements": self.variant_disagreements,
                "corrected_rows": self.corrected_rows,
                "seeds": self.seeds_enumerated,
            }
        })
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub depth: usize,
    pub cap: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            depth: 6,
            cap: DEFAULT_NODE_CAP,
        }
    }
}

/// One node of the re-based enumeration: the seed in fresh coordinates, the
/// reference-coordinate shadow of its variables, and the tracked objects.
#[derive(Debug, Clone)]
struct Node {
    y: Seed,
    shadow: Vec<LaurentPoly>,
    objects: Vec<IndObject>,
}

impl Node {
    fn mutate(&self, cat: &ClusterCategory, k: usize) -> Result<(Node, ExchangeEvent)> {
        let event = {
            let mut b = Vec::new();
            let mut bprime = Vec::new();
            for i in 0..self.y.n() {
                let e = self.y.matrix.entry(i, k);
                if e > 0 {
                    b.push((self.objects[i], e as u32));
                } else if e < 0 {
                    bprime.push((self.objects[i], (-e) as u32));
                }
            }
            (b, bprime)
        };
        let mut shadow = self.shadow.clone();
        shadow[k] = exchange_variable(&self.shadow, &self.y.matrix, k)?;
        let y = self.y.mutate(k)?;
        let mut objects = self.objects.clone();
        let xstar = cat.identify_from_denominator(&denominator_vector(&shadow[k]))?;
        let x = std::mem::replace(&mut objects[k], xstar);
        let (b, bprime) = event;
        Ok((
            Node { y, shadow, objects },
            ExchangeEvent {
                x,
                xstar,
                b,
                bprime,
            },
        ))
    }
}

/// Re-base the tracked seed with fresh indeterminates and verify the
/// denominators of every variable reachable within `depth` mutations against
/// both prediction variants.
pub fn verify_denominators(
    cat: &ClusterCategory,
    tracked: &TrackedSeed,
    cfg: VerifyConfig,
) -> Result<VerificationReport> {
    let n = cat.n();
    let tilting =
        TiltingSeed::from_cluster(cat, tracked.objects.clone(), tracked.seed.matrix.clone())?;

    let start = Node {
        y: Seed::initial(tracked.seed.matrix.clone()),
        shadow: tracked.seed.vars.clone(),
        objects: tracked.objects.clone(),
    };

    // object -> (its variable in the fresh coordinates, observed denominator)
    let mut discovered: BTreeMap<IndObject, (LaurentPoly, DenomVector)> = BTreeMap::new();
    let mut tilting_sets: BTreeSet<Vec<IndObject>> = BTreeSet::new();
    let mut exchanges: BTreeSet<ExchangeEvent> = BTreeSet::new();
    let mut seen: HashSet<[u8; 32]> = HashSet::new();
    let mut seeds_enumerated = 0usize;

    let mut record = |node: &Node| -> Result<()> {
        if !cat.is_cluster_tilting(&node.objects) {
            return Err(Error::Internal(format!(
                "enumerated objects {:?} are not cluster-tilting",
                node.objects
                    .iter()
                    .map(|o| o.to_string())
                    .collect::<Vec<_>>()
            )));
        }
        let mut sorted = node.objects.clone();
        sorted.sort_unstable();
        tilting_sets.insert(sorted);
        for j in 0..n {
            let observed = denominator_vector(&node.y.vars[j]);
            match discovered.get(&node.objects[j]) {
                None => {
                    discovered.insert(node.objects[j], (node.y.vars[j].clone(), observed));
                }
                Some((existing, _)) => {
                    if existing != &node.y.vars[j] {
                        return Err(Error::Internal(format!(
                            "object {} carries two distinct variables",
                            node.objects[j]
                        )));
                    }
                }
            }
        }
        Ok(())
    };

    seen.insert(start.y.canonical_key());
    record(&start)?;
    seeds_enumerated += 1;
    let mut frontier = vec![start];

    for _ in 0..cfg.depth {
        if frontier.is_empty() {
            break;
        }
        let children: Vec<Vec<(Node, ExchangeEvent)>> = frontier
            .par_iter()
            .map(|node| {
                let mut out = Vec::with_capacity(n);
                for k in 0..n {
                    if node.y.history.last() == Some(&k) {
                        continue;
                    }
                    out.push(node.mutate(cat, k)?);
                }
                Ok(out)
            })
            .collect::<Result<_>>()?;

        let mut next = Vec::new();
        for group in children {
            for (child, event) in group {
                exchanges.insert(event);
                if seen.insert(child.y.canonical_key()) {
                    if seeds_enumerated >= cfg.cap {
                        return Err(Error::BudgetExceeded(cfg.cap));
                    }
                    record(&child)?;
                    seeds_enumerated += 1;
                    next.push(child);
                }
            }
        }
        frontier = next;
    }

    // Assemble rows for every non-initial variable.
    let mut rows = Vec::new();
    let mut mismatches_literal = 0;
    let mut mismatches_carveout = 0;
    let mut variant_disagreements = 0;
    let mut corrected_rows = 0;
    for (&object, (variable, observed)) in &discovered {
        if let Some(i) = tilting.cluster.iter().position(|&c| c == object) {
            // The variable of a cluster object must literally be y_{i+1}.
            let mut unit = vec![0i32; n];
            unit[i] = 1;
            if !variable.is_unit_monomial(&unit) {
                return Err(Error::Internal(format!(
                    "cluster object {object} does not carry its initial variable"
                )));
            }
            continue;
        }
        let lit = predict(cat, &tilting, object, Variant::Literal)?;
        let carve = predict(cat, &tilting, object, Variant::CarveOut)?;
        let hom_row: Vec<u32> = tilting
            .summands
            .iter()
            .map(|&t| cat.hom(t, object))
            .collect();
        let match_literal = lit.exponents == observed.0;
        let match_carveout = carve.exponents == observed.0;
        if !match_literal {
            mismatches_literal += 1;
        }
        if !match_carveout {
            mismatches_carveout += 1;
        }
        if lit.exponents != carve.exponents {
            variant_disagreements += 1;
        }
        if !lit.corrected.is_empty() {
            corrected_rows += 1;
        }
        rows.push(ReportRow {
            object,
            hom_row,
            predicted_literal: lit.exponents,
            corrected_literal: lit.corrected,
            predicted_carveout: carve.exponents,
            corrected_carveout: carve.corrected,
            observed: observed.0.clone(),
            match_literal,
            match_carveout,
            variable: variable.clone(),
        });
    }

    Ok(VerificationReport {
        tilting,
        rows,
        seeds_enumerated,
        mismatches_literal,
        mismatches_carveout,
        variant_disagreements,
        corrected_rows,
        exchanges: exchanges.into_iter().collect(),
        tilting_sets: tilting_sets.into_iter().collect(),
    })
}
