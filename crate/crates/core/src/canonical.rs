//! Canonical forms of quivers up to isomorphism of directed multigraphs.
//!
//! Vertices are first split into classes by iterated colour refinement on
//! signed arrow counts. The refined ordered partition is then individualised
//! one vertex at a time, refining after each step, until every vertex has its
//! own colour. Each leaf of that search tree is a relabelling; the key is the
//! lexicographically least relabelled matrix over all leaves. Refinement only
//! looks at labelling-independent data, so the set of leaf matrices, and with
//! it the minimum, does not depend on how the input was labelled.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::quiver::ExchangeQuiver;

/// Isomorphism-class fingerprint: the vertex count followed by the canonical
/// matrix in row-major order. Equal keys mean isomorphic quivers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<i32>);

impl CanonicalKey {
    pub fn n(&self) -> usize {
        self.0[0] as usize
    }

    /// Order-preserving byte encoding: each value is written as a big-endian
    /// `u32` with the sign bit flipped.
    pub fn to_bytes(&self) -> Vec<u8> {
        self.0
            .iter()
            .flat_map(|&v| ((v as u32) ^ 0x8000_0000).to_be_bytes())
            .collect()
    }

    pub fn to_hex(&self) -> String {
        self.to_bytes().iter().map(|b| format!("{b:02x}")).collect()
    }

    /// The canonical representative the key encodes.
    pub fn quiver(&self) -> ExchangeQuiver {
        let n = self.n();
        let rows: Vec<Vec<i32>> = (0..n).map(|i| self.0[1 + i * n..1 + (i + 1) * n].to_vec()).collect();
        ExchangeQuiver::from_matrix(&rows).expect("canonical keys hold skew-symmetric matrices")
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

impl Serialize for CanonicalKey {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

/// Rank-normalises colours after refining until the partition is stable.
fn refine(q: &ExchangeQuiver, colors: &mut [u32]) {
    let n = q.n();
    let mut classes = count_classes(colors);
    loop {
        let sigs: Vec<(u32, Vec<(i32, u32)>)> = (0..n)
            .map(|v| {
                let mut around: Vec<(i32, u32)> =
                    q.neighbors(v).map(|u| (q.entry(v, u), colors[u])).collect();
                around.sort_unstable();
                (colors[v], around)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        for (c, sig) in colors.iter_mut().zip(&sigs) {
            *c = distinct.binary_search(sig).unwrap() as u32;
        }
        if distinct.len() == classes {
            break;
        }
        classes = distinct.len();
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn relabelled_entries(q: &ExchangeQuiver, position: &[u32]) -> Vec<i32> {
    let n = q.n();
    let mut order = vec![0usize; n];
    for (v, &p) in position.iter().enumerate() {
        order[p as usize] = v;
    }
    let mut out = Vec::with_capacity(n * n);
    for &i in &order {
        for &j in &order {
            out.push(q.entry(i, j));
        }
    }
    out
}

fn search(q: &ExchangeQuiver, colors: Vec<u32>, best: &mut Option<Vec<i32>>) {
    let n = q.n();
    // Smallest colour shared by more than one vertex.
    let mut counts = vec![0usize; n];
    for &c in &colors {
        counts[c as usize] += 1;
    }
    let Some(target) = counts.iter().position(|&c| c > 1) else {
        let m = relabelled_entries(q, &colors);
        if best.as_ref().is_none_or(|b| m < *b) {
            *best = Some(m);
        }
        return;
    };
    for v in (0..n).filter(|&v| colors[v] as usize == target) {
        let mut next: Vec<u32> = colors.iter().map(|&c| 2 * c + 1).collect();
        next[v] -= 1;
        refine(q, &mut next);
        search(q, next, best);
    }
}

pub fn canonical_key(q: &ExchangeQuiver) -> CanonicalKey {
    let n = q.n();
    let mut colors = vec![0u32; n];
    refine(q, &mut colors);
    let mut best = None;
    search(q, colors, &mut best);
    let mut key = Vec::with_capacity(n * n + 1);
    key.push(n as i32);
    key.extend(best.unwrap_or_default());
    CanonicalKey(key)
}

pub fn are_isomorphic(a: &ExchangeQuiver, b: &ExchangeQuiver) -> bool {
    a.n() == b.n() && canonical_key(a) == canonical_key(b)
}
