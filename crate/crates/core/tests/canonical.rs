use atilde_core::{are_isomorphic, canonical_key, ExchangeQuiver};
use proptest::prelude::*;

fn quiver_from_upper(n: usize, upper: &[i32]) -> ExchangeQuiver {
    let mut rows = vec![vec![0; n]; n];
    let mut it = upper.iter();
    for i in 0..n {
        for j in i + 1..n {
            let v = *it.next().unwrap();
            rows[i][j] = v;
            rows[j][i] = -v;
        }
    }
    ExchangeQuiver::from_matrix(&rows).unwrap()
}

fn skew_matrix(max_n: usize, max_entry: i32) -> impl Strategy<Value = ExchangeQuiver> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(-max_entry..=max_entry, n * (n - 1) / 2)
            .prop_map(move |upper| quiver_from_upper(n, &upper))
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            prefix.push(v);
            go(prefix, rest, out);
            prefix.pop();
            rest.insert(i, v);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out
}

/// Lexicographically least relabeled matrix over all `n!` relabelings.
fn brute_force_form(q: &ExchangeQuiver, perms: &[Vec<usize>]) -> Vec<i32> {
    perms.iter().map(|p| q.relabel(p).entries().to_vec()).min().unwrap()
}

fn brute_force_isomorphic(a: &ExchangeQuiver, b: &ExchangeQuiver) -> bool {
    a.n() == b.n() && permutations(a.n()).iter().any(|p| &a.relabel(p) == b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(3_000))]

    #[test]
    fn key_is_invariant_under_relabeling(
        (q, perm) in skew_matrix(7, 2).prop_flat_map(|q| {
            let n = q.n();
            (Just(q), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
    ) {
        prop_assert_eq!(canonical_key(&q), canonical_key(&q.relabel(&perm)));
    }

    #[test]
    fn key_reconstructs_an_isomorphic_quiver(q in skew_matrix(7, 2)) {
        let back = canonical_key(&q).quiver();
        prop_assert!(brute_force_isomorphic(&q, &back));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    /// Pairs that differ by a relabeling and a few flipped entries: equal keys
    /// exactly when some permutation maps one onto the other.
    #[test]
    fn key_equality_matches_exhaustive_search(
        (a, b) in (2usize..=7).prop_flat_map(|n| {
            let m = n * (n - 1) / 2;
            (
                proptest::collection::vec(-1i32..=1, m),
                Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
                proptest::collection::vec(0..m, 0..=1),
                proptest::collection::vec(-1i32..=1, 1),
            )
                .prop_map(move |(upper, perm, flips, vals)| {
                    let a = quiver_from_upper(n, &upper);
                    let mut changed = upper.clone();
                    for &f in &flips {
                        changed[f] = vals[0];
                    }
                    (a, quiver_from_upper(n, &changed).relabel(&perm))
                })
        })
    ) {
        let keys_equal = canonical_key(&a) == canonical_key(&b);
        prop_assert_eq!(keys_equal, brute_force_isomorphic(&a, &b));
    }
}

/// Every quiver with simple arrows on `n` vertices: the key partition and the
/// brute-force partition coincide.
fn exhaustive_partition_agrees(n: usize) {
    let perms = permutations(n);
    let m = n * (n - 1) / 2;
    let mut by_key = std::collections::BTreeMap::new();
    let mut by_form = std::collections::BTreeMap::new();
    for code in 0..3usize.pow(m as u32) {
        let upper: Vec<i32> = (0..m).map(|i| (code / 3usize.pow(i as u32) % 3) as i32 - 1).collect();
        let q = quiver_from_upper(n, &upper);
        let key = canonical_key(&q);
        let form = brute_force_form(&q, &perms);
        let previous = by_key.insert(key.clone(), form.clone());
        if let Some(p) = previous {
            assert_eq!(p, form, "two non-isomorphic quivers share a key");
        }
        by_form.insert(form, key);
    }
    assert_eq!(by_key.len(), by_form.len());
}

#[test]
fn exhaustive_four_vertices() {
    exhaustive_partition_agrees(4);
}

#[test]
fn exhaustive_five_vertices() {
    exhaustive_partition_agrees(5);
}

#[test]
fn orientations_of_a_four_cycle() {
    // Up to rotation and reflection, the orientations of a 4-cycle are the
    // oriented one and the non-oriented ones with 1, 2 adjacent, 2 opposite
    // reversed arrows.
    let mut seen = std::collections::BTreeSet::new();
    for mask in 0..16u32 {
        let arrows: Vec<_> = (0..4)
            .map(|i| if mask >> i & 1 == 1 { (i, (i + 1) % 4, 1) } else { ((i + 1) % 4, i, 1) })
            .collect();
        let q = ExchangeQuiver::from_arrows(4, &arrows).unwrap();
        seen.insert(canonical_key(&q));
    }
    assert_eq!(seen.len(), 4);
}

#[test]
fn isomorphism_respects_multiplicity() {
    let a = ExchangeQuiver::from_arrows(3, &[(0, 1, 2), (1, 2, 1)]).unwrap();
    let b = ExchangeQuiver::from_arrows(3, &[(0, 1, 1), (1, 2, 2)]).unwrap();
    assert!(!are_isomorphic(&a, &b));
    assert_eq!(are_isomorphic(&a, &b), brute_force_isomorphic(&a, &b));
}
