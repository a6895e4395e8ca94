//! Mutation classes by breadth-first closure, deduplicated by canonical key.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::canonical::{canonical_key, CanonicalKey};
use crate::quiver::{ExchangeQuiver, QuiverError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassError {
    #[error("mutation produced {found} parallel arrows, above the cap of {cap}")]
    CapExceeded { found: u32, cap: u32 },
    #[error("multiplicity cap must be at least 2, got {0}")]
    CapTooLow(u32),
    #[error("seed quiver is not connected")]
    Disconnected,
    #[error("invalid seed: {0}")]
    InvalidSeed(String),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}

/// One isomorphism class inside a mutation class.
#[derive(Debug, Clone, Serialize)]
pub struct Member {
    pub key: CanonicalKey,
    /// The first quiver discovered in this isomorphism class.
    #[serde(serialize_with = "serialize_matrix")]
    pub quiver: ExchangeQuiver,
    /// Number of mutations from the seed at which it was first reached.
    pub depth: usize,
}

fn serialize_matrix<S: serde::Serializer>(q: &ExchangeQuiver, s: S) -> Result<S::Ok, S::Error> {
    q.to_matrix().serialize(s)
}

#[derive(Debug, Clone)]
pub struct MutationClass {
    pub seed: ExchangeQuiver,
    members: BTreeMap<CanonicalKey, Member>,
}

impl MutationClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, q: &ExchangeQuiver) -> bool {
        self.members.contains_key(&canonical_key(q))
    }

    pub fn contains_key(&self, key: &CanonicalKey) -> bool {
        self.members.contains_key(key)
    }

    /// Members in canonical key order.
    pub fn members(&self) -> impl ExactSizeIterator<Item = &Member> {
        self.members.values()
    }

    pub fn keys(&self) -> impl ExactSizeIterator<Item = &CanonicalKey> {
        self.members.keys()
    }

    pub fn max_depth(&self) -> usize {
        self.members.values().map(|m| m.depth).max().unwrap_or(0)
    }

    /// Listing as a JSON array of `{key, matrix, depth}` objects sorted by key.
    pub fn to_json(&self) -> String {
        let members: Vec<&Member> = self.members().collect();
        serde_json::to_string_pretty(&members).expect("members serialise")
    }
}

type Discovery = Result<Vec<(CanonicalKey, ExchangeQuiver)>, ClassError>;

fn expand(q: &ExchangeQuiver, cap: u32) -> Discovery {
    (0..q.n())
        .map(|k| {
            let m = q.mutate(k)?;
            let found = m.max_multiplicity();
            if found > cap {
                return Err(ClassError::CapExceeded { found, cap });
            }
            Ok((canonical_key(&m), m))
        })
        .collect()
}

#[cfg(feature = "parallel")]
fn expand_frontier(frontier: &[ExchangeQuiver], cap: u32) -> Vec<Discovery> {
    use rayon::prelude::*;
    frontier.par_iter().map(|q| expand(q, cap)).collect()
}

#[cfg(not(feature = "parallel"))]
fn expand_frontier(frontier: &[ExchangeQuiver], cap: u32) -> Vec<Discovery> {
    frontier.iter().map(|q| expand(q, cap)).collect()
}

/// Enumerates the mutation class of `seed` up to isomorphism.
///
/// The search runs level by level. Mutations of one level are computed in
/// parallel (with the `parallel` feature) but merged in frontier order and
/// vertex order, so the stored representatives do not depend on scheduling.
pub fn enumerate_class(seed: &ExchangeQuiver, multiplicity_cap: u32) -> Result<MutationClass, ClassError> {
    if multiplicity_cap < 2 {
        return Err(ClassError::CapTooLow(multiplicity_cap));
    }
    if !seed.underlying_graph_connected() {
        return Err(ClassError::Disconnected);
    }
    let found = seed.max_multiplicity();
    if found > multiplicity_cap {
        return Err(ClassError::CapExceeded { found, cap: multiplicity_cap });
    }

    let mut members = BTreeMap::new();
    let key = canonical_key(seed);
    members.insert(
        key.clone(),
        Member { key, quiver: seed.clone(), depth: 0 },
    );
    let mut frontier = vec![seed.clone()];
    let mut depth = 0;
    while !frontier.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for discovered in expand_frontier(&frontier, multiplicity_cap) {
            for (key, q) in discovered? {
                if !members.contains_key(&key) {
                    next.push(q.clone());
                    members.insert(key.clone(), Member { key, quiver: q, depth });
                }
            }
        }
        frontier = next;
    }
    Ok(MutationClass { seed: seed.clone(), members })
}

/// The `(r+s)`-cycle `0 - 1 - ... - (n-1) - 0` with the first `r` edges
/// oriented along the cycle (`i -> i+1`) and the remaining `s` against it.
///
/// With `r = 0` this is the oriented cycle, a type D representative. The only
/// admissible 2-cycle is `r = s = 1`, which gives the double arrow.
pub fn seed_cycle(r: usize, s: usize) -> Result<ExchangeQuiver, ClassError> {
    let n = r + s;
    if n < 2 {
        return Err(ClassError::InvalidSeed(format!("cycle needs r + s >= 2, got {n}")));
    }
    if n == 2 && r != 1 {
        return Err(ClassError::InvalidSeed(
            "an oriented 2-cycle is not a quiver in this setting".into(),
        ));
    }
    if n == 2 {
        return Ok(ExchangeQuiver::from_arrows(2, &[(0, 1, 2)])?);
    }
    let arrows: Vec<_> = (0..n)
        .map(|i| {
            let j = (i + 1) % n;
            if i < r {
                (i, j, 1)
            } else {
                (j, i, 1)
            }
        })
        .collect();
    Ok(ExchangeQuiver::from_arrows(n, &arrows)?)
}

/// A quiver on the D_n diagram: the path `0 -> 1 -> ... -> n-2` with the extra
/// vertex `n-1` hanging off `n-3`.
pub fn seed_dynkin_d(n: usize) -> Result<ExchangeQuiver, ClassError> {
    if n < 4 {
        return Err(ClassError::InvalidSeed(format!("D_n needs n >= 4, got {n}")));
    }
    let mut arrows: Vec<_> = (0..n - 2).map(|i| (i, i + 1, 1)).collect();
    arrows.push((n - 3, n - 1, 1));
    Ok(ExchangeQuiver::from_arrows(n, &arrows)?)
}

/// Path `0 -> 1 -> ... -> n-1`, the linear A_n quiver.
pub fn seed_dynkin_a(n: usize) -> Result<ExchangeQuiver, ClassError> {
    if n < 1 {
        return Err(ClassError::InvalidSeed("A_n needs n >= 1".into()));
    }
    let arrows: Vec<_> = (0..n - 1).map(|i| (i, i + 1, 1)).collect();
    Ok(ExchangeQuiver::from_arrows(n, &arrows)?)
}
