//! Branch-and-bound oracle for the exact maximum-area anchored rectangle
//! packing of a configuration.
//!
//! # Why a finite candidate grid suffices
//!
//! Every rectangle's left and bottom edges sit on its anchor's coordinates.
//! Take any optimal packing and grow each rectangle in turn as far up and
//! right as validity allows; the total area never decreases and obstacles
//! only accumulate, so the result is an optimal packing in which every
//! rectangle is maximal. A maximal rectangle's right edge is either the
//! boundary, or coincides with the x-coordinate of a blocking point on the
//! edge, or with the left edge of a blocking rectangle, which is again an
//! anchor x-coordinate; the same holds for top edges and y-coordinates.
//! Degenerate rectangles (forced when a point sits on the square's far
//! boundary) carry no area and are represented by one canonical degenerate
//! assignment. Hence searching over
//! `rights x tops = ({x_j > x_i} ∪ {1}) x ({y_j > y_i} ∪ {1})` plus the
//! degenerate pair per point is exhaustive. This argument is exercised by a
//! dense-grid stress test rather than assumed.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::geometry::{staircase_region, Configuration, Packing, Point, Rect};
use crate::scalar::Scalar;

/// Default branch-and-bound node budget.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// Candidate right/top edges for one point, with the surviving pairs.
#[derive(Clone, Debug)]
pub struct PointCandidates<T> {
    pub rights: Vec<T>,
    pub tops: Vec<T>,
    /// Indices into `rights` x `tops`, lexicographically ordered, with pairs
    /// whose open rectangle strictly contains a configuration point removed.
    pub feasible_pairs: Vec<(usize, usize)>,
    /// Largest single-rectangle area among the feasible pairs.
    pub best_area: T,
}

/// Per-point candidate sets for a configuration.
#[derive(Clone, Debug)]
pub struct CandidateSet<T> {
    pub per_point: Vec<PointCandidates<T>>,
}

/// Candidate upper-right corners for every point: anchor coordinates of the
/// points strictly beyond, plus the boundary.
pub fn candidates<T: Scalar>(config: &Configuration<T>) -> CandidateSet<T> {
    let pts = config.points();
    let per_point = pts
        .iter()
        .map(|p| {
            let mut rights: Vec<T> = pts
                .iter()
                .filter(|q| q.x.cmp_total(&p.x) == Ordering::Greater)
                .map(|q| q.x.clone())
                .collect();
            rights.push(T::one());
            rights.sort_by(|a, b| a.cmp_total(b));
            rights.dedup();

            let mut tops: Vec<T> = pts
                .iter()
                .filter(|q| q.y.cmp_total(&p.y) == Ordering::Greater)
                .map(|q| q.y.clone())
                .collect();
            tops.push(T::one());
            tops.sort_by(|a, b| a.cmp_total(b));
            tops.dedup();

            let mut feasible_pairs = Vec::new();
            let mut best_area = T::zero();
            for (ri, r) in rights.iter().enumerate() {
                for (ti, t) in tops.iter().enumerate() {
                    let open_contains_point = pts.iter().any(|q| {
                        p.x < q.x && q.x < *r && p.y < q.y && q.y < *t
                    });
                    if open_contains_point {
                        continue;
                    }
                    feasible_pairs.push((ri, ti));
                    let area = (r.clone() - p.x.clone()) * (t.clone() - p.y.clone());
                    best_area = best_area.max_val(area);
                }
            }
            PointCandidates {
                rights,
                tops,
                feasible_pairs,
                best_area,
            }
        })
        .collect();
    CandidateSet { per_point }
}

/// Outcome of [`solve_max`].
#[derive(Clone, Debug)]
pub struct SolveResult<T> {
    pub best: Packing<T>,
    pub area: T,
    pub nodes_explored: u64,
    /// True when the search tree was exhausted rather than cut off by the
    /// node budget.
    pub proof_of_optimality: bool,
}

struct Search<'a, T: Scalar> {
    pts: &'a [Point<T>],
    cands: &'a [PointCandidates<T>],
    /// Branch order: point indices by decreasing x.
    order: Vec<usize>,
    /// `suffix_best[d]` = sum of best single-rectangle areas of the points
    /// at branch depths >= d; an admissible upper bound on what the
    /// unassigned suffix can still contribute.
    suffix_best: Vec<T>,
    stack: Vec<Rect<T>>,
    incumbent: Option<(T, Vec<Rect<T>>)>,
    nodes: u64,
    budget: u64,
    truncated: bool,
}

impl<'a, T: Scalar> Search<'a, T> {
    fn dfs(&mut self, depth: usize, area: T) {
        if self.truncated {
            return;
        }
        let n = self.pts.len();
        if depth == n {
            let better = match &self.incumbent {
                None => true,
                Some((best_area, _)) => area.cmp_total(best_area) == Ordering::Greater,
            };
            if better {
                self.incumbent = Some((area, self.stack.clone()));
            }
            return;
        }
        // Admissible bound: candidates are explored in lexicographic order,
        // so pruning on equality keeps the first (lexicographically
        // smallest) optimal assignment as the incumbent.
        if let Some((best_area, _)) = &self.incumbent {
            let bound = area.clone() + self.suffix_best[depth].clone();
            if bound.cmp_total(best_area) != Ordering::Greater {
                return;
            }
        }
        let i = self.order[depth];
        let p = &self.pts[i];
        let cand = &self.cands[i];

        // The degenerate pair sorts before every feasible pair and is
        // always legal.
        self.nodes += 1;
        if self.nodes > self.budget {
            self.truncated = true;
            return;
        }
        self.stack
            .push(Rect::new(p.clone(), p.x.clone(), p.y.clone()));
        self.dfs(depth + 1, area.clone());
        self.stack.pop();

        for &(ri, ti) in &cand.feasible_pairs {
            if self.truncated {
                return;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                self.truncated = true;
                return;
            }
            let rect = Rect::new(p.clone(), cand.rights[ri].clone(), cand.tops[ti].clone());
            if self.stack.iter().any(|other| rect.interiors_overlap(other)) {
                continue;
            }
            let rect_area = rect.area();
            self.stack.push(rect);
            self.dfs(depth + 1, area.clone() + rect_area);
            self.stack.pop();
        }
    }
}

/// Exact maximum packing area by branch and bound over the candidate grid.
///
/// Points are branched in decreasing x; at each node one point's
/// (right, top) is fixed and checked against the rectangles already placed.
/// A subtree is pruned when its optimistic bound cannot beat the incumbent.
/// Among equal-area optima the lexicographically smallest assignment vector
/// (in branch order) is returned, which makes results reproducible.
///
/// If the node budget runs out the best packing found so far is returned
/// with `proof_of_optimality == false`.
pub fn solve_max<T: Scalar>(config: &Configuration<T>, budget: u64) -> SolveResult<T> {
    let pts = config.points();
    let n = pts.len();
    let cands = candidates(config);

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| pts[b].x.cmp_total(&pts[a].x));

    let mut suffix_best = alloc::vec![T::zero(); n + 1];
    for d in (0..n).rev() {
        suffix_best[d] = suffix_best[d + 1].clone() + cands.per_point[order[d]].best_area.clone();
    }

    let mut search = Search {
        pts,
        cands: &cands.per_point,
        order,
        suffix_best,
        stack: Vec::with_capacity(n),
        incumbent: None,
        nodes: 0,
        budget,
        truncated: false,
    };
    search.dfs(0, T::zero());

    let (area, rects_in_branch_order) = search.incumbent.unwrap_or_else(|| {
        // Unreachable at any positive budget (the all-degenerate leaf is
        // visited first), but keep a well-defined fallback.
        let rects = pts
            .iter()
            .map(|p| Rect::new(p.clone(), p.x.clone(), p.y.clone()))
            .collect();
        (T::zero(), rects)
    });

    let mut rects: Vec<Option<Rect<T>>> = alloc::vec![None; n];
    for (d, rect) in rects_in_branch_order.into_iter().enumerate() {
        rects[search.order[d]] = Some(rect);
    }
    let rects: Vec<Rect<T>> = rects
        .into_iter()
        .map(|r| r.expect("every point assigned"))
        .collect();

    SolveResult {
        best: Packing::new(config.clone(), rects),
        area,
        nodes_explored: search.nodes,
        proof_of_optimality: !search.truncated,
    }
}

/// The maximal rectangles anchored at the origin, in increasing width.
///
/// With `l` points on the greedy decreasing subsequence there are `l + 1`
/// such rectangles: each is bounded above by one untouchable point (or the
/// boundary) and on the right by the next untouchable point (or the
/// boundary).
pub fn origin_maximal_rects<T: Scalar>(config: &Configuration<T>) -> Vec<Rect<T>> {
    let pts = config.points();
    let perm = crate::perm::Permutation::of_configuration(config);
    let greedy = perm.greedy_decreasing_subsequence();
    let origin = Point::<T>::origin();

    let mut rects = Vec::with_capacity(greedy.len() + 1);
    for slot in 0..=greedy.len() {
        let right = if slot < greedy.len() {
            pts[greedy[slot]].x.clone()
        } else {
            T::one()
        };
        let top = if slot == 0 {
            T::one()
        } else {
            pts[greedy[slot - 1]].y.clone()
        };
        rects.push(Rect::new(origin.clone(), right, top));
    }
    rects
}

/// Rebuild a packing so that the staircase region of the final decreasing
/// run is covered exactly: rectangles of earlier points are clipped at the
/// staircase boundary and the final-run rectangles become the vertical
/// strips of the region. The total area never decreases.
pub fn fill_staircase<T: Scalar>(config: &Configuration<T>, partial: &Packing<T>) -> Packing<T> {
    let pts = config.points();
    let n = pts.len();
    let run_start = config.final_decreasing_run_start();

    let mut rects = Vec::with_capacity(n);
    for rect in partial.rects.iter().take(run_start) {
        // In a valid packing a rectangle meets the staircase only in full
        // vertical columns, so clipping at the first run point below the
        // rectangle's top loses exactly the area inside the region.
        let mut clipped = rect.clone();
        for run_pt in &pts[run_start..] {
            if run_pt.y.cmp_total(&rect.top) == Ordering::Less {
                clipped.right = clipped.right.min_val(run_pt.x.clone());
                break;
            }
        }
        rects.push(clipped);
    }
    for k in run_start..n {
        let right = if k + 1 < n {
            pts[k + 1].x.clone()
        } else {
            T::one()
        };
        rects.push(Rect::new(pts[k].clone(), right, T::one()));
    }
    Packing::new(config.clone(), rects)
}

/// The analytically optimal packing for an all-decreasing configuration:
/// the best maximal origin rectangle plus the staircase strips. Returns
/// `None` when the permutation is not decreasing.
///
/// For decreasing permutations every non-origin rectangle lies inside the
/// staircase region and the origin rectangle outside it, so their maxima
/// can be taken independently; this reproduces `solve_max` at any size.
pub fn decreasing_optimal_packing<T: Scalar>(config: &Configuration<T>) -> Option<Packing<T>> {
    let perm = crate::perm::Permutation::of_configuration(config);
    if !perm.is_decreasing() {
        return None;
    }
    let pts = config.points();
    let n = pts.len();
    let origin_rect = origin_maximal_rects(config)
        .into_iter()
        .max_by(|a, b| a.area().cmp_total(&b.area()))
        .expect("at least one origin rectangle");

    let mut rects = Vec::with_capacity(n);
    rects.push(origin_rect);
    for k in 1..n {
        let right = if k + 1 < n {
            pts[k + 1].x.clone()
        } else {
            T::one()
        };
        rects.push(Rect::new(pts[k].clone(), right, T::one()));
    }
    Some(Packing::new(config.clone(), rects))
}
