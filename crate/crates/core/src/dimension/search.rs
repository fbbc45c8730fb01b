//! Exact search for Ferrers covers.
//!
//! A set `S` of empty cells fits inside some Ferrers relation `F` with
//! `S ⊆ F` and `F ∩ I = ∅` iff the bipartite digraph on `G ∪ M` with arcs
//! `m → g` for `(g, m) ∈ S` and `g → m` for `(g, m) ∈ I` is acyclic: a
//! topological order then gives a threshold `F = {(g, m) | m before g}`.
//! The search assigns empty cells to `k` parts, keeping the reachability
//! closure of every part's digraph so admissibility is a bit test.

use std::time::{Duration, Instant};

use crate::bitset::BitSet;
use crate::context::FormalContext;

use super::{
    is_ferrers, CellRelation, CoverOutcome, Dimension, DimensionError, FerrersCover, SearchLimits,
    DEFAULT_TIMEOUT,
};

/// Reachability closure of one part's digraph. Nodes `0..|G|` are objects,
/// `|G|..|G|+|M|` attributes; `reach[u]` contains `u`.
#[derive(Clone)]
struct Part {
    reach: Vec<BitSet>,
}

impl Part {
    fn base(ctx: &FormalContext) -> Self {
        let (ng, nm) = (ctx.num_objects(), ctx.num_attributes());
        let n = ng + nm;
        let mut reach = Vec::with_capacity(n);
        for g in 0..ng {
            let mut r = BitSet::from_indices(n, ctx.row(g).iter().map(|m| ng + m));
            r.insert(g);
            reach.push(r);
        }
        for m in 0..nm {
            reach.push(BitSet::from_indices(n, [ng + m]));
        }
        Part { reach }
    }

    /// Adding `m → g` closes a cycle iff `g` already reaches `m`.
    #[inline]
    fn admits(&self, g: usize, m_node: usize) -> bool {
        !self.reach[g].contains(m_node)
    }

    /// The cell is already forced by the part's closure.
    #[inline]
    fn implies(&self, g: usize, m_node: usize) -> bool {
        self.reach[m_node].contains(g)
    }

    fn add(&mut self, g: usize, m_node: usize) {
        let from_g = self.reach[g].clone();
        for r in self.reach.iter_mut() {
            if r.contains(m_node) {
                r.union_with(&from_g);
            }
        }
    }

    /// A Ferrers relation containing every arc of this part, read off a
    /// topological order that schedules attributes as early as possible.
    fn staircase(&self, ng: usize, nm: usize) -> CellRelation {
        let n = ng + nm;
        let mut indegree = vec![0usize; n];
        for (u, r) in self.reach.iter().enumerate() {
            for v in r.iter().filter(|&v| v != u) {
                indegree[v] += 1;
            }
        }
        let mut placed = BitSet::new(n);
        let mut position = vec![0usize; n];
        for step in 0..n {
            let next = (ng..n)
                .chain(0..ng)
                .find(|&u| !placed.contains(u) && indegree[u] == 0)
                .expect("part digraph is acyclic");
            placed.insert(next);
            position[next] = step;
            for v in self.reach[next].iter().filter(|&v| v != next) {
                indegree[v] -= 1;
            }
        }
        CellRelation::from_cells(
            ng,
            nm,
            (0..ng).flat_map(|g| {
                let position = &position;
                (0..nm)
                    .filter(move |&m| position[ng + m] < position[g])
                    .map(move |m| (g, m))
            }),
        )
    }
}

struct Search<'a> {
    ng: usize,
    cells: Vec<(usize, usize)>,
    k: usize,
    base: &'a Part,
    deadline: Option<Instant>,
    steps: u64,
    timed_out: bool,
}

enum Step {
    Done(Vec<Part>),
    Fail,
}

impl Search<'_> {
    fn out_of_time(&mut self) -> bool {
        self.steps += 1;
        if self.steps % 256 == 1 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.timed_out = true;
                }
            }
        }
        self.timed_out
    }

    fn run(&mut self, parts: &mut Vec<Part>, covered: &mut BitSet) -> Step {
        if self.out_of_time() {
            return Step::Fail;
        }
        // Absorb cells already implied by some part.
        let mut absorbed = Vec::new();
        for (i, &(g, m)) in self.cells.iter().enumerate() {
            if !covered.contains(i) && parts.iter().any(|p| p.implies(g, self.ng + m)) {
                covered.insert(i);
                absorbed.push(i);
            }
        }

        // Fail-first: the uncovered cell with the fewest admissible parts.
        let can_open = parts.len() < self.k;
        let mut best: Option<(usize, usize)> = None;
        for (i, &(g, m)) in self.cells.iter().enumerate() {
            if covered.contains(i) {
                continue;
            }
            let options =
                parts.iter().filter(|p| p.admits(g, self.ng + m)).count() + usize::from(can_open);
            if best.is_none_or(|(_, o)| options < o) {
                best = Some((i, options));
                if options <= 1 {
                    break;
                }
            }
        }

        let result = match best {
            None => Step::Done(parts.clone()),
            Some((_, 0)) => Step::Fail,
            Some((i, _)) => self.branch(i, parts, covered),
        };
        for i in absorbed {
            covered.remove(i);
        }
        result
    }

    fn branch(&mut self, i: usize, parts: &mut Vec<Part>, covered: &mut BitSet) -> Step {
        let (g, m) = self.cells[i];
        let m_node = self.ng + m;
        covered.insert(i);
        for p in 0..parts.len() {
            if !parts[p].admits(g, m_node) {
                continue;
            }
            let saved = parts[p].clone();
            parts[p].add(g, m_node);
            if let Step::Done(found) = self.run(parts, covered) {
                return Step::Done(found);
            }
            parts[p] = saved;
            if self.timed_out {
                break;
            }
        }
        // Opening a new part: all empty parts are interchangeable, try one.
        if parts.len() < self.k && !self.timed_out {
            let mut fresh = self.base.clone();
            fresh.add(g, m_node);
            parts.push(fresh);
            if let Step::Done(found) = self.run(parts, covered) {
                return Step::Done(found);
            }
            parts.pop();
        }
        covered.remove(i);
        Step::Fail
    }
}

/// Exact search for a cover of the empty cells by `k` Ferrers relations,
/// with the default per-call timeout.
pub fn ferrers_cover(ctx: &FormalContext, k: usize) -> CoverOutcome {
    ferrers_cover_with(ctx, k, Some(DEFAULT_TIMEOUT))
}

/// Like [`ferrers_cover`] with an explicit timeout (`None` = unbounded).
///
/// Returned covers always have exactly `k` parts; unused parts are empty.
pub fn ferrers_cover_with(
    ctx: &FormalContext,
    k: usize,
    timeout: Option<Duration>,
) -> CoverOutcome {
    assert!(k >= 1, "k must be at least 1");
    let (ng, nm) = (ctx.num_objects(), ctx.num_attributes());
    let empty_cells = CellRelation::non_incidence(ctx);
    let base = Part::base(ctx);
    let mut search = Search {
        ng,
        cells: empty_cells.cells().collect(),
        k,
        base: &base,
        deadline: timeout.map(|t| Instant::now() + t),
        steps: 0,
        timed_out: false,
    };
    let mut covered = BitSet::new(search.cells.len());
    match search.run(&mut Vec::new(), &mut covered) {
        Step::Done(parts) => {
            let mut rels: Vec<CellRelation> = parts.iter().map(|p| p.staircase(ng, nm)).collect();
            rels.resize(k, CellRelation::empty(ng, nm));
            let cover = FerrersCover { parts: rels };
            if let Err(e) = cover.validate(ctx) {
                panic!("cover search produced an invalid cover: {e}");
            }
            CoverOutcome::Found(cover)
        }
        Step::Fail if search.timed_out => CoverOutcome::Undecided,
        Step::Fail => CoverOutcome::NoneExists,
    }
}

/// Smallest `k` admitting a Ferrers cover, with default limits.
pub fn order_dimension(ctx: &FormalContext) -> Result<Dimension, DimensionError> {
    order_dimension_with(ctx, &SearchLimits::default())
}

/// Smallest `k` admitting a Ferrers cover. Iteration starts at 1 when the
/// lattice is a chain (the empty cells already form a Ferrers relation) and
/// at 2 otherwise.
pub fn order_dimension_with(
    ctx: &FormalContext,
    limits: &SearchLimits,
) -> Result<Dimension, DimensionError> {
    let empty_cells = CellRelation::non_incidence(ctx);
    if is_ferrers(&empty_cells) {
        let cover = FerrersCover {
            parts: vec![empty_cells],
        };
        cover.validate(ctx)?;
        return Ok(Dimension { d: 1, cover });
    }
    let mut k = 2;
    loop {
        if k > limits.max_k {
            return Err(DimensionError::ExceedsMaxK {
                max_k: limits.max_k,
            });
        }
        match ferrers_cover_with(ctx, k, limits.timeout) {
            CoverOutcome::Found(cover) => return Ok(Dimension { d: k, cover }),
            CoverOutcome::NoneExists => k += 1,
            CoverOutcome::Undecided => return Err(DimensionError::Undecided { lower_bound: k }),
        }
    }
}
