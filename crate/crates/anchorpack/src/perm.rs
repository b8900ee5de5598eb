//! Permutations of configurations and the named classes: increasing,
//! decreasing, presorted, prelayered, layered, split-layer, cliff, mountain,
//! and m-sparse decreasing.
//!
//! Positions and values are 1-based throughout, matching the usual
//! permutation notation `(2, 1, 3)`.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::geometry::Configuration;
use crate::scalar::Scalar;

/// The relative y-order of the non-origin points: `values[i-1]` is the rank
/// of the i-th point's y-coordinate. Empty for the single-origin
/// configuration.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    values: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PermError {
    NotABijection,
}

impl fmt::Display for PermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermError::NotABijection => write!(f, "values are not a bijection on 1..=len"),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl Permutation {
    /// Validate that `values` is a bijection on `{1, ..., values.len()}`.
    pub fn new(values: Vec<usize>) -> Result<Self, PermError> {
        let n = values.len();
        let mut seen = alloc::vec![false; n];
        for &v in &values {
            if v == 0 || v > n || seen[v - 1] {
                return Err(PermError::NotABijection);
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { values })
    }

    pub fn identity(len: usize) -> Self {
        Permutation {
            values: (1..=len).collect(),
        }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Rank sequence of the y-coordinates of the non-origin points.
    pub fn of_configuration<T: Scalar>(config: &Configuration<T>) -> Self {
        let pts = &config.points()[1..];
        let mut order: Vec<usize> = (0..pts.len()).collect();
        order.sort_by(|&a, &b| pts[a].y.cmp_total(&pts[b].y));
        let mut values = alloc::vec![0usize; pts.len()];
        for (rank, &idx) in order.iter().enumerate() {
            values[idx] = rank + 1;
        }
        Permutation { values }
    }

    /// Functional inverse. Reflecting a configuration across the main
    /// diagonal and re-extracting its permutation yields exactly this.
    pub fn inverse(&self) -> Self {
        let mut values = alloc::vec![0usize; self.values.len()];
        for (i, &v) in self.values.iter().enumerate() {
            values[v - 1] = i + 1;
        }
        Permutation { values }
    }

    pub fn is_increasing(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn is_decreasing(&self) -> bool {
        let n = self.values.len();
        self.values.iter().enumerate().all(|(i, &v)| v == n - i)
    }

    /// Positions (1-based) of the elements that are smaller than everything
    /// before them. The first element always qualifies; the value 1 is
    /// always last.
    pub fn greedy_decreasing_subsequence(&self) -> Vec<usize> {
        let mut positions = Vec::new();
        let mut running_min = usize::MAX;
        for (i, &v) in self.values.iter().enumerate() {
            if v < running_min {
                positions.push(i + 1);
                running_min = v;
            }
        }
        positions
    }

    /// Positions i with `pi(j) < pi(i)` exactly for `j < i`; each is a fixed
    /// point and splits the configuration into independent halves.
    pub fn splitting_points(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut running_max = 0usize;
        for (i, &v) in self.values.iter().enumerate() {
            running_max = running_max.max(v);
            if v == i + 1 && running_max == v {
                out.push(i + 1);
            }
        }
        out
    }

    /// 1-based position where the maximal decreasing suffix run starts;
    /// 0 for the empty permutation.
    pub fn final_decreasing_run_start(&self) -> usize {
        let n = self.values.len();
        if n == 0 {
            return 0;
        }
        let mut start = n;
        while start > 1 && self.values[start - 2] > self.values[start - 1] {
            start -= 1;
        }
        start
    }

    /// Largest m such that the permutation starts with `1, 2, ..., m`.
    fn presorted_prefix(&self) -> usize {
        self.values
            .iter()
            .enumerate()
            .take_while(|&(i, &v)| v == i + 1)
            .count()
    }

    /// Layer sizes when the permutation is a sequence of decreasing runs of
    /// consecutive values, each above the previous.
    fn layer_sizes(&self) -> Option<Vec<usize>> {
        let n = self.values.len();
        let mut sizes = Vec::new();
        let mut base = 0usize;
        let mut pos = 0usize;
        while pos < n {
            let top = self.values[pos];
            if top <= base {
                return None;
            }
            let len = top - base;
            if pos + len > n {
                return None;
            }
            for offset in 0..len {
                if self.values[pos + offset] != top - offset {
                    return None;
                }
            }
            sizes.push(len);
            base = top;
            pos += len;
        }
        Some(sizes)
    }

    /// Full classification against every named class.
    pub fn classify(&self) -> ClassReport {
        let n = self.values.len();
        let increasing = self.is_increasing();
        let decreasing = self.is_decreasing();

        let m = self.presorted_prefix();
        let presorted = if m >= 1 { Some(m) } else { None };

        let prelayered = self.prelayered_len();
        let layers = self.layer_sizes();
        let split_layer = match &layers {
            Some(sizes) => sizes.windows(2).all(|w| w[0] == 1 || w[1] == 1),
            None => false,
        };

        let cliff = self.cliff_prefix();
        let mountain = self.mountain_peak();

        let greedy = self.greedy_decreasing_subsequence();
        let sparse_m = {
            // Largest run of consecutive positions outside the greedy
            // subsequence, plus one; gaps occur between members and after
            // the last member.
            let mut max_gap = 0usize;
            let mut prev = 0usize;
            for &g in &greedy {
                max_gap = max_gap.max(g - prev - 1);
                prev = g;
            }
            max_gap = max_gap.max(n - prev);
            max_gap + 1
        };

        ClassReport {
            increasing,
            decreasing,
            presorted,
            prelayered,
            layers,
            split_layer,
            cliff,
            mountain,
            sparse_m,
            greedy_decreasing: greedy,
            splitting_points: self.splitting_points(),
            final_run_start: self.final_decreasing_run_start(),
        }
    }

    /// m when the permutation starts with `(m, m-1, ..., 1, m+1)`.
    fn prelayered_len(&self) -> Option<usize> {
        let n = self.values.len();
        if n == 0 {
            return None;
        }
        let m = self.values[0];
        if m + 1 > n {
            return None;
        }
        for offset in 0..m {
            if self.values[offset] != m - offset {
                return None;
            }
        }
        if self.values[m] != m + 1 {
            return None;
        }
        Some(m)
    }

    /// k when the permutation is `(1, ..., k, n-1, n-2, ..., k+1)`; the
    /// decreasing permutation is the degenerate cliff with k = 0.
    fn cliff_prefix(&self) -> Option<usize> {
        let n = self.values.len();
        let k = self.presorted_prefix();
        // The identity is the cliff whose decreasing tail is empty.
        for (offset, &v) in self.values[k..].iter().enumerate() {
            if v != n - offset {
                return None;
            }
        }
        Some(k)
    }

    /// Peak position (1-based) when the permutation increases then strictly
    /// decreases; increasing and decreasing count as degenerate mountains.
    /// The empty permutation reports peak 0.
    fn mountain_peak(&self) -> Option<usize> {
        let n = self.values.len();
        if n == 0 {
            return Some(0);
        }
        let peak = self
            .values
            .iter()
            .position(|&v| v == n)
            .expect("bijection contains n");
        for i in 1..=peak {
            if self.values[i - 1] >= self.values[i] {
                return None;
            }
        }
        for i in (peak + 1)..n {
            if self.values[i - 1] <= self.values[i] {
                return None;
            }
        }
        Some(peak + 1)
    }

    /// m-sparse decreasing predicate: no run of `m` or more consecutive
    /// elements outside the greedy decreasing subsequence.
    pub fn is_m_sparse(&self, m: usize) -> bool {
        m >= self.classify().sparse_m
    }

    /// All permutations of the given length, in lexicographic order.
    pub fn all_of_length(len: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (1..=len).collect();
        loop {
            out.push(Permutation {
                values: current.clone(),
            });
            // next_permutation
            if len < 2 {
                break;
            }
            let mut i = len - 1;
            while i > 0 && current[i - 1] >= current[i] {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            let mut j = len - 1;
            while current[j] <= current[i - 1] {
                j -= 1;
            }
            current.swap(i - 1, j);
            current[i..].reverse();
        }
        out
    }
}

/// Classification flags and structural subsequences for one permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub increasing: bool,
    pub decreasing: bool,
    /// Largest m with prefix `1, 2, ..., m`, when the permutation starts
    /// with 1.
    pub presorted: Option<usize>,
    /// m when the permutation starts `(m, m-1, ..., 1, m+1)`.
    pub prelayered: Option<usize>,
    /// Layer sizes when layered.
    pub layers: Option<Vec<usize>>,
    /// Layered with a size-1 layer in every consecutive pair.
    pub split_layer: bool,
    /// Increasing-prefix length k for `(1, ..., k, n-1, ..., k+1)`.
    pub cliff: Option<usize>,
    /// Peak position for increasing-then-decreasing permutations
    /// (0 for the empty permutation).
    pub mountain: Option<usize>,
    /// Minimal m such that the permutation is m-sparse decreasing.
    pub sparse_m: usize,
    /// Positions of the greedy decreasing subsequence.
    pub greedy_decreasing: Vec<usize>,
    pub splitting_points: Vec<usize>,
    /// 1-based start of the final decreasing run (0 when empty).
    pub final_run_start: usize,
}

impl ClassReport {
    pub fn layered(&self) -> bool {
        self.layers.is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;
    use crate::scalar::Rational;

    fn p(values: &[usize]) -> Permutation {
        Permutation::new(values.to_vec()).unwrap()
    }

    #[test]
    fn permutation_of_configuration() {
        let r = |n, d| Rational::from_ratio(n, d);
        let c = Configuration::new(alloc::vec![
            Point::origin(),
            Point::new(r(1, 4), r(1, 4)),
            Point::new(r(1, 2), r(1, 2)),
            Point::new(r(3, 4), r(3, 4)),
        ])
        .unwrap();
        assert_eq!(Permutation::of_configuration(&c), p(&[1, 2, 3]));

        let c = Configuration::new(alloc::vec![
            Point::origin(),
            Point::new(r(4, 9), r(2, 3)),
            Point::new(r(2, 3), r(4, 9)),
        ])
        .unwrap();
        assert_eq!(Permutation::of_configuration(&c), p(&[2, 1]));

        let c = Configuration::new(alloc::vec![Point::<Rational>::origin()]).unwrap();
        assert!(Permutation::of_configuration(&c).is_empty());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p(&[2, 3, 1]).inverse(), p(&[3, 1, 2]));
        assert_eq!(p(&[1, 2, 3]).inverse(), p(&[1, 2, 3]));
        assert_eq!(p(&[2, 1]).inverse(), p(&[2, 1]));
    }

    #[test]
    fn greedy_decreasing_examples() {
        let q = p(&[7, 5, 9, 6, 4, 1, 3, 2]);
        let positions = q.greedy_decreasing_subsequence();
        let values: Vec<usize> = positions.iter().map(|&i| q.values()[i - 1]).collect();
        assert_eq!(values, alloc::vec![7, 5, 4, 1]);

        assert_eq!(p(&[1, 3, 2]).greedy_decreasing_subsequence(), alloc::vec![1]);
        assert_eq!(
            p(&[3, 2, 1]).greedy_decreasing_subsequence(),
            alloc::vec![1, 2, 3]
        );
    }

    #[test]
    fn classify_examples() {
        let report = p(&[3, 2, 1, 4, 6, 5, 7]).classify();
        assert!(report.split_layer);
        assert_eq!(report.layers, Some(alloc::vec![3, 1, 2, 1]));

        let report = p(&[3, 2, 1, 5, 4]).classify();
        assert!(report.layered());
        assert!(!report.split_layer);

        let report = p(&[2, 1, 4, 3]).classify();
        assert_eq!(report.sparse_m, 3);
        assert!(p(&[2, 1, 4, 3]).is_m_sparse(3));
        assert!(!p(&[2, 1, 4, 3]).is_m_sparse(2));

        let report = p(&[1, 3, 5, 7, 8, 6, 4, 2]).classify();
        assert_eq!(report.mountain, Some(5));
    }

    #[test]
    fn classify_degenerate_and_consistency() {
        let inc = p(&[1, 2, 3, 4]).classify();
        assert!(inc.increasing);
        assert_eq!(inc.presorted, Some(4));
        assert_eq!(inc.mountain, Some(4));
        assert_eq!(inc.cliff, Some(4));
        assert!(inc.split_layer);
        assert_eq!(inc.layers, Some(alloc::vec![1, 1, 1, 1]));

        let dec = p(&[4, 3, 2, 1]).classify();
        assert!(dec.decreasing);
        assert_eq!(dec.layers, Some(alloc::vec![4]));
        assert_eq!(dec.sparse_m, 1);
        assert_eq!(dec.cliff, Some(0));
        assert_eq!(dec.mountain, Some(1));
        assert_eq!(dec.final_run_start, 1);

        let empty = Permutation::new(alloc::vec![]).unwrap().classify();
        assert!(empty.increasing && empty.decreasing && empty.split_layer);
        assert_eq!(empty.sparse_m, 1);
        assert_eq!(empty.final_run_start, 0);
    }

    #[test]
    fn cliff_examples() {
        assert_eq!(p(&[1, 3, 2]).classify().cliff, Some(1));
        assert_eq!(p(&[1, 2, 5, 4, 3]).classify().cliff, Some(2));
        assert_eq!(p(&[2, 1, 3]).classify().cliff, None);
    }

    #[test]
    fn prelayered_examples() {
        assert_eq!(p(&[2, 1, 3]).classify().prelayered, Some(2));
        assert_eq!(p(&[3, 2, 1, 4, 6, 5, 7]).classify().prelayered, Some(3));
        assert_eq!(p(&[1, 2]).classify().prelayered, Some(1));
        assert_eq!(p(&[3, 2, 1]).classify().prelayered, None);
    }

    #[test]
    fn splitting_point_examples() {
        assert_eq!(p(&[2, 1, 3]).splitting_points(), alloc::vec![3]);
        assert_eq!(p(&[1, 2, 3]).splitting_points(), alloc::vec![1, 2, 3]);
        assert!(p(&[3, 2, 1]).splitting_points().is_empty());
    }

    #[test]
    fn final_run_examples() {
        assert_eq!(p(&[2, 1, 3]).final_decreasing_run_start(), 3);
        assert_eq!(p(&[3, 2, 1]).final_decreasing_run_start(), 1);
        assert_eq!(p(&[1, 3, 2]).final_decreasing_run_start(), 2);
    }

    #[test]
    fn all_of_length_enumerates() {
        assert_eq!(Permutation::all_of_length(0).len(), 1);
        assert_eq!(Permutation::all_of_length(3).len(), 6);
        let all = Permutation::all_of_length(3);
        assert_eq!(all[0], p(&[1, 2, 3]));
        assert_eq!(all[5], p(&[3, 2, 1]));
    }
}
