//! Quivers as skew-symmetric exchange matrices, and mutation.
//!
//! A quiver without loops and without oriented 2-cycles is determined by the
//! signed arrow counts `b[i][j] = #(i -> j) - #(j -> i)`. Every such quiver has
//! exactly one matrix and every skew-symmetric integer matrix is such a quiver,
//! so this encoding loses nothing. It also cannot express loops or 2-cycles,
//! which is the standing assumption for mutation.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("vertex {vertex} out of range for a quiver on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("matrix is not skew-symmetric at ({i}, {j})")]
    NotSkewSymmetric { i: usize, j: usize },
    #[error("matrix is not square")]
    NotSquare,
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("arrows in both directions between {0} and {1} (oriented 2-cycle)")]
    TwoCycle(usize, usize),
    #[error("pair ({0}, {1}) listed more than once")]
    DuplicatePair(usize, usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A finite quiver without loops or oriented 2-cycles, on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExchangeQuiver {
    n: usize,
    b: Vec<i32>,
}

impl ExchangeQuiver {
    /// The quiver on `n` vertices with no arrows.
    pub fn empty(n: usize) -> Self {
        ExchangeQuiver {
            n,
            b: vec![0; n * n],
        }
    }

    pub fn from_matrix(rows: &[Vec<i32>]) -> Result<Self, QuiverError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(QuiverError::NotSquare);
        }
        for (i, row) in rows.iter().enumerate() {
            if row[i] != 0 {
                return Err(QuiverError::Loop(i));
            }
            if let Some(j) = (0..i).find(|&j| row[j] != -rows[j][i]) {
                return Err(QuiverError::NotSkewSymmetric { i, j });
            }
        }
        Ok(ExchangeQuiver {
            n,
            b: rows.iter().flatten().copied().collect(),
        })
    }

    /// Builds a quiver from `(tail, head, multiplicity)` triples.
    ///
    /// Each unordered pair may appear at most once; listing both directions
    /// would describe an oriented 2-cycle and is rejected.
    pub fn from_arrows(n: usize, arrows: &[(usize, usize, u32)]) -> Result<Self, QuiverError> {
        let mut q = ExchangeQuiver::empty(n);
        for &(i, j, m) in arrows {
            q.check_vertex(i)?;
            q.check_vertex(j)?;
            if i == j {
                return Err(QuiverError::Loop(i));
            }
            let current = q.entry(i, j);
            if current > 0 {
                return Err(QuiverError::DuplicatePair(i, j));
            }
            if current < 0 {
                return Err(QuiverError::TwoCycle(i, j));
            }
            q.set(i, j, m as i32);
        }
        Ok(q)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Signed arrow count `#(i -> j) - #(j -> i)`.
    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i32 {
        self.b[i * self.n + j]
    }

    /// Number of arrows `i -> j`.
    pub fn arrows(&self, i: usize, j: usize) -> u32 {
        self.entry(i, j).max(0) as u32
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, v: i32) {
        self.b[i * self.n + j] = v;
        self.b[j * self.n + i] = -v;
    }

    fn check_vertex(&self, k: usize) -> Result<(), QuiverError> {
        if k < self.n {
            Ok(())
        } else {
            Err(QuiverError::VertexOutOfRange { vertex: k, n: self.n })
        }
    }

    /// Row-major matrix entries.
    pub fn entries(&self) -> &[i32] {
        &self.b
    }

    pub fn to_matrix(&self) -> Vec<Vec<i32>> {
        self.b.chunks(self.n.max(1)).take(self.n).map(<[i32]>::to_vec).collect()
    }

    /// All `(tail, head, multiplicity)` triples, sorted lexicographically.
    pub fn arrow_list(&self) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                let m = self.entry(i, j);
                if m > 0 {
                    out.push((i, j, m as u32));
                }
            }
        }
        out
    }

    /// Vertices joined to `v` by at least one arrow, in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.entry(v, u) != 0)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    /// Fomin–Zelevinsky mutation at `k`.
    ///
    /// Arrows at `k` are reversed; for every path `i -> k -> j` of `a` and `b`
    /// arrows the signed count between `i` and `j` moves by `a*b` towards
    /// `i -> j`, which cancels against opposing arrows `j -> i`.
    pub fn mutate(&self, k: usize) -> Result<ExchangeQuiver, QuiverError> {
        self.check_vertex(k)?;
        let n = self.n;
        let mut out = self.clone();
        for i in 0..n {
            let bik = self.entry(i, k);
            for j in 0..n {
                let v = if i == k || j == k {
                    -self.entry(i, j)
                } else {
                    let bkj = self.entry(k, j);
                    self.entry(i, j) + (bik * bkj.abs() + bik.abs() * bkj) / 2
                };
                out.b[i * n + j] = v;
            }
        }
        Ok(out)
    }

    /// Applies a vertex relabelling: vertex `i` of `self` becomes `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> ExchangeQuiver {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let mut out = ExchangeQuiver::empty(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.b[perm[i] * self.n + perm[j]] = self.entry(i, j);
            }
        }
        out
    }

    /// Full subquiver on `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> ExchangeQuiver {
        let m = vertices.len();
        let mut out = ExchangeQuiver::empty(m);
        for (a, &i) in vertices.iter().enumerate() {
            for (c, &j) in vertices.iter().enumerate() {
                out.b[a * m + c] = self.entry(i, j);
            }
        }
        out
    }

    /// True iff the underlying undirected graph is connected. The empty quiver
    /// counts as connected.
    pub fn underlying_graph_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }

    /// Largest number of parallel arrows between two vertices.
    pub fn max_multiplicity(&self) -> u32 {
        self.b.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0)
    }

    /// Serialises to the text quiver format: `n` on the first line, then one
    /// `i j m` line per pair with `m > 0` arrows `i -> j`, sorted.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for (i, j, m) in self.arrow_list() {
            s.push_str(&format!("{i} {j} {m}\n"));
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<Self, QuiverError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(no, l)| (no + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (first_no, first) = lines.next().ok_or(QuiverError::Parse {
            line: 1,
            msg: "missing vertex count".into(),
        })?;
        let n: usize = first.parse().map_err(|_| QuiverError::Parse {
            line: first_no,
            msg: format!("expected vertex count, found {first:?}"),
        })?;
        let mut arrows = Vec::new();
        for (no, line) in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(QuiverError::Parse {
                    line: no,
                    msg: format!("expected `i j m`, found {line:?}"),
                });
            }
            let num = |s: &str| -> Result<usize, QuiverError> {
                s.parse().map_err(|_| QuiverError::Parse {
                    line: no,
                    msg: format!("not a non-negative integer: {s:?}"),
                })
            };
            let (i, j, m) = (num(fields[0])?, num(fields[1])?, num(fields[2])?);
            if m == 0 {
                return Err(QuiverError::Parse {
                    line: no,
                    msg: "multiplicity must be positive".into(),
                });
            }
            arrows.push((i, j, m as u32));
        }
        ExchangeQuiver::from_arrows(n, &arrows)
    }

    /// Arrow multiset keyed by ordered pair; handy for comparisons in tests.
    pub fn arrow_map(&self) -> BTreeMap<(usize, usize), u32> {
        self.arrow_list().into_iter().map(|(i, j, m)| ((i, j), m)).collect()
    }
}

impl FromStr for ExchangeQuiver {
    type Err = QuiverError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ExchangeQuiver::parse_text(s)
    }
}

impl fmt::Debug for ExchangeQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExchangeQuiver(n={}, arrows={:?})", self.n, self.arrow_list())
    }
}
