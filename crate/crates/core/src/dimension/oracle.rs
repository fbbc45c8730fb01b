//! Brute-force order dimension, independent of the Ferrers route.
//!
//! Every linear extension is enumerated and recorded as the set of ordered
//! incomparable pairs `(x, y)` it places with `y` before `x`. A family of
//! extensions is a realizer iff these sets jointly cover all ordered
//! incomparable pairs, so the dimension is the smallest exact set cover.

use crate::bitset::BitSet;
use crate::lattice::ConceptLattice;

use super::DimensionError;

pub const DEFAULT_ORACLE_CAP: usize = 10;

/// Order dimension of a concept lattice with at most [`DEFAULT_ORACLE_CAP`] concepts.
pub fn brute_force_dimension(lattice: &ConceptLattice) -> Result<usize, DimensionError> {
    brute_force_order_dimension(lattice.order(), DEFAULT_ORACLE_CAP)
}

/// Order dimension of any finite order given as up-set rows (`up[x]` ∋ `x`).
pub fn brute_force_order_dimension(up: &[BitSet], cap: usize) -> Result<usize, DimensionError> {
    let n = up.len();
    if n > cap {
        return Err(DimensionError::OracleCapExceeded { size: n, cap });
    }
    let mut pair_id = vec![vec![usize::MAX; n]; n];
    let mut pairs = 0;
    for x in 0..n {
        for y in 0..n {
            if x != y && !up[x].contains(y) && !up[y].contains(x) {
                pair_id[x][y] = pairs;
                pairs += 1;
            }
        }
    }
    if pairs == 0 {
        return Ok(1);
    }

    let mut below = vec![BitSet::new(n); n];
    for (x, row) in up.iter().enumerate() {
        for y in row.iter().filter(|&y| y != x) {
            below[y].insert(x);
        }
    }

    let mut masks = Vec::new();
    let mut order = Vec::with_capacity(n);
    let mut placed = BitSet::new(n);
    enumerate(&below, &mut placed, &mut order, &mut |ext| {
        let mut pos = vec![0; n];
        for (r, &c) in ext.iter().enumerate() {
            pos[c] = r;
        }
        let mut mask = BitSet::new(pairs);
        for x in 0..n {
            for y in 0..n {
                let id = pair_id[x][y];
                if id != usize::MAX && pos[x] > pos[y] {
                    mask.insert(id);
                }
            }
        }
        masks.push(mask);
    });

    let all = BitSet::full(pairs);
    for k in 1.. {
        if cover(&masks, &all, k) {
            return Ok(k);
        }
    }
    unreachable!()
}

fn enumerate(
    below: &[BitSet],
    placed: &mut BitSet,
    order: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if order.len() == below.len() {
        visit(order);
        return;
    }
    for x in 0..below.len() {
        if !placed.contains(x) && below[x].is_subset(placed) {
            placed.insert(x);
            order.push(x);
            enumerate(below, placed, order, visit);
            order.pop();
            placed.remove(x);
        }
    }
}

fn cover(masks: &[BitSet], uncovered: &BitSet, k: usize) -> bool {
    let Some(target) = uncovered.first() else {
        return true;
    };
    if k == 0 {
        return false;
    }
    masks.iter().filter(|m| m.contains(target)).any(|m| {
        let mut rest = uncovered.clone();
        rest.difference_with(m);
        cover(masks, &rest, k - 1)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::order_closure;

    fn order(n: usize, pairs: &[(usize, usize)]) -> Vec<BitSet> {
        order_closure(n, pairs).unwrap()
    }

    #[test]
    fn chain_is_one() {
        let pairs: Vec<_> = (0..4).map(|i| (i, i + 1)).collect();
        assert_eq!(brute_force_order_dimension(&order(5, &pairs), 10), Ok(1));
    }

    #[test]
    fn antichain_completion_is_two() {
        // bottom 0, atoms 1 and 2, top 3
        let up = order(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(brute_force_order_dimension(&up, 10), Ok(2));
    }

    #[test]
    fn standard_example_is_three() {
        // a_i = i, b_j = 3 + j, a_i < b_j iff i != j
        let pairs: Vec<_> = (0..3)
            .flat_map(|i| (0..3).filter(move |&j| j != i).map(move |j| (i, 3 + j)))
            .collect();
        assert_eq!(brute_force_order_dimension(&order(6, &pairs), 10), Ok(3));
    }

    #[test]
    fn cap_enforced() {
        let up = order(11, &[]);
        assert_eq!(
            brute_force_order_dimension(&up, 10),
            Err(DimensionError::OracleCapExceeded { size: 11, cap: 10 })
        );
    }
}
