//! Quivers: finite directed multigraphs without loops or 2-cycles.
//!
//! Vertices are labelled `1..n` in input files and displayed output; internally
//! everything is 0-based. Arrows may repeat (parallel arrows are allowed).

use crate::error::{Error, Result};
use std::collections::VecDeque;
use std::fmt;
use std::path::Path;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    n: usize,
    /// 0-based (source, target) pairs, multiplicity by repetition.
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    /// Build from 0-based arrows. Rejects loops and 2-cycles.
    pub fn new(n: usize, arrows: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput(
                "quiver needs at least one vertex".into(),
            ));
        }
        for &(s, t) in &arrows {
            if s >= n || t >= n {
                return Err(Error::InvalidInput(format!(
                    "arrow ({}, {}) out of range for {} vertices",
                    s + 1,
                    t + 1,
                    n
                )));
            }
            if s == t {
                return Err(Error::InvalidInput(format!("loop at vertex {}", s + 1)));
            }
        }
        let q = Quiver { n, arrows };
        for i in 0..n {
            for j in (i + 1)..n {
                if q.arrow_count(i, j) > 0 && q.arrow_count(j, i) > 0 {
                    return Err(Error::InvalidInput(format!(
                        "2-cycle between vertices {} and {}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(q)
    }

    /// Build from 1-based arrows, the convention of input files.
    pub fn from_one_based(n: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        let mut shifted = Vec::with_capacity(arrows.len());
        for &(s, t) in arrows {
            if s == 0 || t == 0 {
                return Err(Error::InvalidInput("vertex labels start at 1".into()));
            }
            shifted.push((s - 1, t - 1));
        }
        Quiver::new(n, shifted)
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// Number of arrows i -> j (0-based).
    pub fn arrow_count(&self, i: usize, j: usize) -> i64 {
        self.arrows
            .iter()
            .filter(|&&(s, t)| s == i && t == j)
            .count() as i64
    }

    /// Undirected degree, counting multiplicities.
    pub fn degree(&self, v: usize) -> usize {
        self.arrows
            .iter()
            .filter(|&&(s, t)| s == v || t == v)
            .count()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &(s, t) in &self.arrows {
                for w in [s, t] {
                    if (s == v || t == v) && !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        seen.into_iter().all(|b| b)
    }

    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm; indegrees count arrows, so multi-arrows are fine.
        let mut indeg = vec![0usize; self.n];
        for &(_, t) in &self.arrows {
            indeg[t] += 1;
        }
        let mut queue: VecDeque<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = queue.pop_front() {
            removed += 1;
            for &(s, t) in &self.arrows {
                if s == v {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        queue.push_back(t);
                    }
                }
            }
        }
        removed == self.n
    }

    /// Parse the text format:
    ///
    /// ```text
    /// vertices: 4
    /// arrow: 1 2
    /// arrow: 2 3
    /// ```
    ///
    /// or a JSON document `{"vertices": 4, "arrows": [[1,2],[2,3]]}`.
    /// Arrow endpoints are 1-based; duplicate arrows are allowed.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim_start();
        if trimmed.starts_with('{') {
            return Self::parse_json(trimmed);
        }
        let mut vertices: Option<usize> = None;
        let mut arrows: Vec<(usize, usize)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("vertices:") {
                let v: usize = rest.trim().parse().map_err(|_| {
                    Error::InvalidInput(format!("line {}: bad vertex count", lineno + 1))
                })?;
                vertices = Some(v);
            } else if let Some(rest) = line.strip_prefix("arrow:") {
                let mut it = rest.split_whitespace();
                let (a, b) = (it.next(), it.next());
                match (a, b, it.next()) {
                    (Some(a), Some(b), None) => {
                        let s: usize = a.parse().map_err(|_| {
                            Error::InvalidInput(format!("line {}: bad arrow", lineno + 1))
                        })?;
                        let t: usize = b.parse().map_err(|_| {
                            Error::InvalidInput(format!("line {}: bad arrow", lineno + 1))
                        })?;
                        arrows.push((s, t));
                    }
                    _ => {
                        return Err(Error::InvalidInput(format!(
                            "line {}: expected `arrow: <i> <j>`",
                            lineno + 1
                        )))
                    }
                }
            } else {
                return Err(Error::InvalidInput(format!(
                    "line {}: unrecognized line `{}`",
                    lineno + 1,
                    line
                )));
            }
        }
        let n = vertices.ok_or_else(|| Error::InvalidInput("missing `vertices:` line".into()))?;
        Quiver::from_one_based(n, &arrows)
    }

    fn parse_json(text: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(text)
            .map_err(|e| Error::InvalidInput(format!("bad JSON quiver: {e}")))?;
        let n = value
            .get("vertices")
            .and_then(|v| v.as_u64())
            .ok_or_else(|| Error::InvalidInput("JSON quiver needs `vertices`".into()))?
            as usize;
        let arrows_val = value
            .get("arrows")
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::InvalidInput("JSON quiver needs `arrows` array".into()))?;
        let mut arrows = Vec::with_capacity(arrows_val.len());
        for a in arrows_val {
            let pair = a.as_array().filter(|p| p.len() == 2).ok_or_else(|| {
                Error::InvalidInput("each arrow must be a [source, target] pair".into())
            })?;
            let s = pair[0].as_u64().ok_or_else(|| {
                Error::InvalidInput("arrow endpoints must be positive integers".into())
            })? as usize;
            let t = pair[1].as_u64().ok_or_else(|| {
                Error::InvalidInput("arrow endpoints must be positive integers".into())
            })? as usize;
            arrows.push((s, t));
        }
        Quiver::from_one_based(n, &arrows)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text)
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices: {}", self.n)?;
        for &(s, t) in &self.arrows {
            writeln!(f, "arrow: {} {}", s + 1, t + 1)?;
        }
        Ok(())
    }
}

/// Quivers used throughout the tests and the built-in example.
pub mod builtin {
    use super::Quiver;

    /// Cycle on four vertices: 1→2, 2→3, 3→4, 1→4. One exceptional tube of rank 3.
    pub fn a3_cycle() -> Quiver {
        Quiver::from_one_based(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap()
    }

    /// Cycle on three vertices: 1→2, 2→3, 1→3. One exceptional tube of rank 2.
    pub fn a2_cycle() -> Quiver {
        Quiver::from_one_based(3, &[(1, 2), (2, 3), (1, 3)]).unwrap()
    }

    /// Four-subspace star: central vertex 1 with arrows to 2..5. Three tubes of rank 2.
    pub fn d4_star() -> Quiver {
        Quiver::from_one_based(5, &[(1, 2), (1, 3), (1, 4), (1, 5)]).unwrap()
    }

    /// Two parallel arrows 1→2. No exceptional tubes.
    pub fn kronecker() -> Quiver {
        Quiver::from_one_based(2, &[(1, 2), (1, 2)]).unwrap()
    }

    /// Linear orientation of the Dynkin graph A_3; not affine.
    pub fn a3_linear() -> Quiver {
        Quiver::from_one_based(3, &[(1, 2), (2, 3)]).unwrap()
    }
}
