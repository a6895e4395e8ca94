//! Recognition of quivers of type Ã and their realization parameters.
//!
//! A connected quiver is of type Ã when
//!
//! 1. it has exactly one full subquiver that is a non-oriented cycle (a double
//!    arrow counts as a non-oriented cycle of length two);
//! 2. besides the cycle arrows, the only arrows at cycle vertices belong to
//!    oriented 3-cycles `x -> y -> z -> x` built on a cycle arrow `x -> y`
//!    with `z` off the cycle;
//! 3. removing the cycle leaves one component per such `z`, each a rooted
//!    quiver of type A with root `z`.
//!
//! Rooted quivers of type A are parsed with their grammar: the root alone;
//! the root with one arrow to another rooted quiver; or the root on an
//! oriented 3-cycle whose two other vertices carry rooted quivers. The parse
//! is unique, so the parse tree is a canonical description.
//!
//! Reading the cycle in one direction turns the quiver into a cyclic word of
//! blocks, one per cycle arrow; reading it in the other direction gives the
//! second realization. The parameters `(r1, r2, s1, s2)` count plain arrows
//! and oriented 3-cycles in blocks whose cycle arrow points along (`r`) or
//! against (`s`) the reading direction.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::quiver::ExchangeQuiver;

/// Rooted quiver of type A, as its (unique) parse tree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootedA {
    Root,
    /// One arrow between the root and the child's root.
    Arrow { outgoing: bool, child: Box<RootedA> },
    /// Oriented 3-cycle `root -> a -> b -> root`; `out_child` hangs at `a`,
    /// `in_child` at `b`.
    Triangle { out_child: Box<RootedA>, in_child: Box<RootedA> },
}

impl RootedA {
    pub fn vertices(&self) -> usize {
        match self {
            RootedA::Root => 1,
            RootedA::Arrow { child, .. } => child.vertices() + 1,
            RootedA::Triangle { out_child, in_child } => out_child.vertices() + in_child.vertices() + 1,
        }
    }

    /// Arrows that are not part of an oriented 3-cycle.
    pub fn plain_arrows(&self) -> usize {
        match self {
            RootedA::Root => 0,
            RootedA::Arrow { child, .. } => child.plain_arrows() + 1,
            RootedA::Triangle { out_child, in_child } => out_child.plain_arrows() + in_child.plain_arrows(),
        }
    }

    pub fn triangles(&self) -> usize {
        match self {
            RootedA::Root => 0,
            RootedA::Arrow { child, .. } => child.triangles(),
            RootedA::Triangle { out_child, in_child } => out_child.triangles() + in_child.triangles() + 1,
        }
    }
}

/// A cycle arrow together with what hangs off it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseArrow {
    pub tail: usize,
    pub head: usize,
    /// Apex `z` of the oriented 3-cycle on this arrow, and the rooted quiver
    /// of type A at `z`.
    pub attachment: Option<(usize, RootedA)>,
}

impl BaseArrow {
    pub fn plain_arrows(&self) -> usize {
        match &self.attachment {
            None => 1,
            Some((_, a)) => a.plain_arrows(),
        }
    }

    pub fn triangles(&self) -> usize {
        match &self.attachment {
            None => 0,
            Some((_, a)) => a.triangles() + 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct RealizationParams {
    pub r1: usize,
    pub r2: usize,
    pub s1: usize,
    pub s2: usize,
}

impl RealizationParams {
    pub fn r(&self) -> usize {
        self.r1 + 2 * self.r2
    }

    pub fn s(&self) -> usize {
        self.s1 + 2 * self.s2
    }

    /// Parameters of the mirrored realization.
    pub fn swapped(&self) -> Self {
        RealizationParams { r1: self.s1, r2: self.s2, s1: self.r1, s2: self.r2 }
    }

    /// The representative of `{self, self.swapped()}` with larger `(r, s, ...)`.
    pub fn normalized(&self) -> Self {
        let a = (self.r(), self.s(), *self);
        let sw = self.swapped();
        if a >= (sw.r(), sw.s(), sw) {
            *self
        } else {
            sw
        }
    }
}

/// One letter of the cyclic word of a realization: whether the cycle arrow
/// points along the reading direction, and the rooted quiver hanging off it.
type Letter = (bool, Option<RootedA>);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtildeStructure {
    /// Vertices of the non-oriented cycle in reading order.
    pub cycle: Vec<usize>,
    /// `base_arrows[i]` joins `cycle[i]` and `cycle[(i + 1) % len]`.
    pub base_arrows: Vec<BaseArrow>,
    pub realization_1: RealizationParams,
    pub realization_2: RealizationParams,
    word: Vec<Letter>,
}

impl AtildeStructure {
    /// True iff both realizations describe the same cyclic arrangement, i.e.
    /// reversing the reading direction yields a rotation of the same word.
    pub fn is_symmetric(&self) -> bool {
        is_rotation(&self.word, &mirror(&self.word))
    }

    /// The cyclic word in the reading order of `cycle`.
    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    pub fn mirrored_word(&self) -> Vec<Letter> {
        mirror(&self.word)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Atilde(AtildeStructure),
    NotAtilde,
}

impl Classification {
    pub fn structure(&self) -> Option<&AtildeStructure> {
        match self {
            Classification::Atilde(s) => Some(s),
            Classification::NotAtilde => None,
        }
    }
}

/// Machine-readable classification summary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifyReport {
    pub atilde: bool,
    pub r1: Option<usize>,
    pub r2: Option<usize>,
    pub s1: Option<usize>,
    pub s2: Option<usize>,
    pub r: Option<usize>,
    pub s: Option<usize>,
    pub symmetric: Option<bool>,
}

impl From<&Classification> for ClassifyReport {
    fn from(c: &Classification) -> Self {
        match c {
            Classification::NotAtilde => ClassifyReport {
                atilde: false,
                r1: None,
                r2: None,
                s1: None,
                s2: None,
                r: None,
                s: None,
                symmetric: None,
            },
            Classification::Atilde(st) => {
                let p = st.realization_1;
                ClassifyReport {
                    atilde: true,
                    r1: Some(p.r1),
                    r2: Some(p.r2),
                    s1: Some(p.s1),
                    s2: Some(p.s2),
                    r: Some(p.r()),
                    s: Some(p.s()),
                    symmetric: Some(st.is_symmetric()),
                }
            }
        }
    }
}

fn mirror(word: &[Letter]) -> Vec<Letter> {
    word.iter().rev().map(|(fwd, a)| (!fwd, a.clone())).collect()
}

fn is_rotation(a: &[Letter], b: &[Letter]) -> bool {
    a.len() == b.len() && (0..a.len().max(1)).any(|k| a.iter().cycle().skip(k).take(a.len()).eq(b.iter()))
}

fn least_rotation(word: &[Letter]) -> Vec<Letter> {
    (0..word.len())
        .map(|k| word.iter().cycle().skip(k).take(word.len()).cloned().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

fn params_of(word: &[Letter]) -> RealizationParams {
    let mut p = RealizationParams { r1: 0, r2: 0, s1: 0, s2: 0 };
    for (fwd, att) in word {
        let (plain, tri) = match att {
            None => (1, 0),
            Some(a) => (a.plain_arrows(), a.triangles() + 1),
        };
        if *fwd {
            p.r1 += plain;
            p.r2 += tri;
        } else {
            p.s1 += plain;
            p.s2 += tri;
        }
    }
    p
}

/// Chordless cycles of length >= 3 in the underlying simple graph, each once,
/// as vertex lists starting at their smallest vertex.
fn chordless_cycles(q: &ExchangeQuiver) -> Vec<Vec<usize>> {
    fn extend(q: &ExchangeQuiver, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let start = path[0];
        let last = *path.last().unwrap();
        let candidates: Vec<usize> = q.neighbors(last).filter(|&w| w > start && !path.contains(&w)).collect();
        for w in candidates {
            let inner = if path.len() > 2 { &path[1..path.len() - 1] } else { &[][..] };
            if inner.iter().any(|&v| q.entry(v, w) != 0) {
                continue;
            }
            let closes = q.entry(start, w) != 0;
            if path.len() >= 2 && closes {
                // Each cycle is met in both directions; keep one.
                if path[1] < w {
                    let mut cycle = path.clone();
                    cycle.push(w);
                    out.push(cycle);
                }
                continue;
            }
            path.push(w);
            extend(q, path, out);
            path.pop();
        }
    }

    let mut out = Vec::new();
    for s in 0..q.n() {
        let mut path = vec![s];
        extend(q, &mut path, &mut out);
    }
    out
}

fn is_oriented(q: &ExchangeQuiver, cycle: &[usize]) -> bool {
    let len = cycle.len();
    let along = (0..len).filter(|&i| q.entry(cycle[i], cycle[(i + 1) % len]) > 0).count();
    along == 0 || along == len
}

/// Non-oriented full subcycles: double arrows and chordless non-oriented
/// cycles of length >= 3 with simple edges.
fn non_oriented_cycles(q: &ExchangeQuiver) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for i in 0..q.n() {
        for j in i + 1..q.n() {
            if q.entry(i, j).abs() == 2 {
                out.push(vec![i, j]);
            }
        }
    }
    for c in chordless_cycles(q) {
        let len = c.len();
        let simple = (0..len).all(|i| q.entry(c[i], c[(i + 1) % len]).abs() == 1);
        if simple && !is_oriented(q, &c) {
            out.push(c);
        }
    }
    out
}

/// Parses the rooted quiver of type A at `root` inside `allowed`, consuming
/// edges as it goes. `None` if the grammar does not match.
fn parse_rooted(
    q: &ExchangeQuiver,
    root: usize,
    allowed: &BTreeSet<usize>,
    visited: &mut BTreeSet<usize>,
    used: &mut BTreeSet<(usize, usize)>,
) -> Option<RootedA> {
    let edge = |a: usize, b: usize| (a.min(b), a.max(b));
    let open: Vec<usize> = q
        .neighbors(root)
        .filter(|u| allowed.contains(u) && !used.contains(&edge(root, *u)))
        .collect();
    if open.iter().any(|&u| q.entry(root, u).abs() != 1 || visited.contains(&u)) {
        return None;
    }
    match open.as_slice() {
        [] => Some(RootedA::Root),
        &[u] => {
            used.insert(edge(root, u));
            visited.insert(u);
            let child = parse_rooted(q, u, allowed, visited, used)?;
            Some(RootedA::Arrow { outgoing: q.entry(root, u) > 0, child: Box::new(child) })
        }
        &[u, w] => {
            let (a, b) = if q.entry(root, u) == 1 { (u, w) } else { (w, u) };
            let oriented = q.entry(root, a) == 1 && q.entry(a, b) == 1 && q.entry(b, root) == 1;
            if !oriented || used.contains(&edge(a, b)) {
                return None;
            }
            for e in [edge(root, a), edge(a, b), edge(b, root)] {
                used.insert(e);
            }
            visited.insert(a);
            visited.insert(b);
            let out_child = parse_rooted(q, a, allowed, visited, used)?;
            let in_child = parse_rooted(q, b, allowed, visited, used)?;
            Some(RootedA::Triangle { out_child: Box::new(out_child), in_child: Box::new(in_child) })
        }
        _ => None,
    }
}

/// Parses a whole component as a rooted quiver of type A; every vertex and
/// every edge of the component must be used exactly once.
fn parse_component(q: &ExchangeQuiver, root: usize, component: &BTreeSet<usize>) -> Option<RootedA> {
    let mut visited = BTreeSet::from([root]);
    let mut used = BTreeSet::new();
    let tree = parse_rooted(q, root, component, &mut visited, &mut used)?;
    let edges = component
        .iter()
        .flat_map(|&v| q.neighbors(v).filter(move |&u| u > v && component.contains(&u)))
        .count();
    (visited == *component && used.len() == edges).then_some(tree)
}

fn components_without(q: &ExchangeQuiver, removed: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
    let mut seen = removed.clone();
    let mut out = Vec::new();
    for v in 0..q.n() {
        if seen.contains(&v) {
            continue;
        }
        let mut comp = BTreeSet::from([v]);
        seen.insert(v);
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            for u in q.neighbors(x) {
                if seen.insert(u) {
                    comp.insert(u);
                    stack.push(u);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// Decides membership in the Ã family and, if so, returns the cycle, the
/// attached rooted quivers and both realizations.
pub fn classify(q: &ExchangeQuiver) -> Classification {
    classify_inner(q).map_or(Classification::NotAtilde, Classification::Atilde)
}

fn classify_inner(q: &ExchangeQuiver) -> Option<AtildeStructure> {
    if q.n() < 2 || !q.underlying_graph_connected() || q.max_multiplicity() > 2 {
        return None;
    }
    let cycles = non_oriented_cycles(q);
    let [cycle] = cycles.as_slice() else {
        return None;
    };
    let cycle = cycle.clone();
    let len = cycle.len();
    let on_cycle: BTreeSet<usize> = cycle.iter().copied().collect();

    // Cycle arrows in reading order; a double arrow gives two.
    let mut base: Vec<BaseArrow> = (0..len)
        .map(|i| {
            let (a, b) = (cycle[i], cycle[(i + 1) % len]);
            let (tail, head) = if q.entry(a, b) > 0 { (a, b) } else { (b, a) };
            BaseArrow { tail, head, attachment: None }
        })
        .collect();

    // Apex candidates per base arrow. For a double arrow both strands share
    // the candidates; they are handed out in vertex order, one per strand.
    let apexes_of = |tail: usize, head: usize| -> Vec<usize> {
        (0..q.n())
            .filter(|z| !on_cycle.contains(z) && q.entry(head, *z) == 1 && q.entry(*z, tail) == 1)
            .collect()
    };
    let mut apex: Vec<Option<usize>> = vec![None; len];
    if len == 2 {
        let found = apexes_of(base[0].tail, base[0].head);
        if found.len() > 2 {
            return None;
        }
        for (slot, z) in apex.iter_mut().zip(found) {
            *slot = Some(z);
        }
    } else {
        for (i, b) in base.iter().enumerate() {
            match apexes_of(b.tail, b.head).as_slice() {
                [] => {}
                &[z] => apex[i] = Some(z),
                _ => return None,
            }
        }
    }
    let apex_set: BTreeSet<usize> = apex.iter().flatten().copied().collect();
    if apex_set.len() != apex.iter().flatten().count() {
        return None;
    }

    // No arrows at cycle vertices other than cycle arrows and the triangles.
    for &c in &cycle {
        for u in q.neighbors(c) {
            if on_cycle.contains(&u) {
                continue;
            }
            let allowed = (0..len).any(|i| apex[i] == Some(u) && (base[i].tail == c || base[i].head == c));
            if !allowed {
                return None;
            }
        }
    }

    // Every component off the cycle holds exactly one apex and parses as a
    // rooted quiver of type A from it.
    let components = components_without(q, &on_cycle);
    if components.len() != apex_set.len() {
        return None;
    }
    for comp in &components {
        let roots: Vec<usize> = comp.intersection(&apex_set).copied().collect();
        if roots.len() != 1 {
            return None;
        }
    }
    for i in 0..len {
        if let Some(z) = apex[i] {
            let comp = components.iter().find(|c| c.contains(&z))?;
            let tree = parse_component(q, z, comp)?;
            base[i].attachment = Some((z, tree));
        }
    }

    let word: Vec<Letter> = (0..len)
        .map(|i| {
            let along = base[i].tail == cycle[i];
            (along, base[i].attachment.as_ref().map(|(_, a)| a.clone()))
        })
        .collect();

    // Pick the reading direction whose parameters come first in the normal
    // order; ties are broken by the least rotation of the words.
    let forward = params_of(&word);
    let mirrored = mirror(&word);
    let backward = params_of(&mirrored);
    let key_f = (forward.r(), forward.s(), forward, least_rotation(&word));
    let key_b = (backward.r(), backward.s(), backward, least_rotation(&mirrored));
    let (cycle, base, word, p1, p2) = if key_f >= key_b {
        (cycle, base, word, forward, backward)
    } else {
        // Read backwards from the same start vertex: the arrow between rc[i]
        // and rc[i + 1] is the old arrow len - 1 - i.
        let rc: Vec<usize> = (0..len).map(|i| cycle[(len - i) % len]).collect();
        let rb: Vec<BaseArrow> = (0..len).map(|i| base[len - 1 - i].clone()).collect();
        (rc, rb, mirrored, backward, forward)
    };
    debug_assert_eq!(p2, p1.swapped());

    Some(AtildeStructure {
        cycle,
        base_arrows: base,
        realization_1: p1,
        realization_2: p2,
        word,
    })
}

pub fn is_symmetric(structure: &AtildeStructure) -> bool {
    structure.is_symmetric()
}
