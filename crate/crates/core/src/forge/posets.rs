//! Labeled partial orders on small carriers.

use crate::bitset::Set;
use crate::error::{Error, Result};
use crate::forge::canon::canonical_poset;
use crate::order::Poset;

/// Largest carrier [`enumerate_posets`] accepts.
pub const MAX_POSET_SIZE: usize = 7;

/// All partial orders on `{0, .., n-1}`, or one representative per
/// isomorphism class (the canonical relabeling) when `dedup` is set.
///
/// Orders on `k+1` elements are grown from orders on `k` by choosing for
/// the new element a down-set `D` and a disjoint up-set `U` of the old ones
/// with `D ≤ U` elementwise; every labeled order arises exactly once.
pub fn enumerate_posets(n: usize, dedup: bool) -> Result<Vec<Poset>> {
    if n > MAX_POSET_SIZE {
        return Err(Error::CapExceeded { cap: MAX_POSET_SIZE });
    }
    let mut layer: Vec<Vec<Set>> = vec![Vec::new()];
    for k in 0..n {
        let mut next = Vec::new();
        for up in &layer {
            extend(up, k, &mut next);
        }
        layer = next;
    }
    let mut out: Vec<Poset> = layer.into_iter().map(Poset::from_up_rows).collect();
    if dedup {
        let mut seen = std::collections::BTreeMap::new();
        for p in out {
            let (key, perm) = canonical_poset(&p);
            seen.entry(key).or_insert_with(|| relabel(&p, &perm));
        }
        out = seen.into_values().collect();
    }
    Ok(out)
}

fn relabel(p: &Poset, perm: &[usize]) -> Poset {
    let mut up = vec![Set::EMPTY; p.len()];
    for x in 0..p.len() {
        up[perm[x]] = p.up(x).iter().map(|y| perm[y]).collect();
    }
    Poset::from_up_rows(up)
}

/// Pushes every extension of the order `up` on `{0..k-1}` by element `k`.
fn extend(up: &[Set], k: usize, out: &mut Vec<Vec<Set>>) {
    let old = Set::full(k);
    let down_of = |x: usize| -> Set { (0..k).filter(|&y| up[y].contains(x)).collect() };
    let is_down = |d: Set| d.iter().all(|x| down_of(x).is_subset(d));
    let is_up = |u: Set| u.iter().all(|x| up[x].is_subset(u));
    for d_bits in 0..1u64 << k {
        let d = Set::from_bits(d_bits);
        if !is_down(d) {
            continue;
        }
        // U must lie above every element of D.
        let above = d.iter().fold(old, |acc, x| acc.intersection(up[x])).difference(d);
        for u in crate::bitset::submasks(above) {
            if !is_up(u) {
                continue;
            }
            let mut rows: Vec<Set> = up.to_vec();
            for x in d.iter() {
                rows[x].insert(k);
            }
            let mut own = u;
            own.insert(k);
            rows.push(own);
            out.push(rows);
        }
    }
}
