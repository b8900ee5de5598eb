//! Points, anchored rectangles, configurations, packings, and the staircase
//! region of the final decreasing run.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> Point<T> {
    pub fn new(x: T, y: T) -> Self {
        Point { x, y }
    }

    pub fn origin() -> Self {
        Point {
            x: T::zero(),
            y: T::zero(),
        }
    }

    /// Swap the coordinates (reflection across the main diagonal).
    pub fn transpose(&self) -> Self {
        Point {
            x: self.y.clone(),
            y: self.x.clone(),
        }
    }
}

/// Axis-aligned rectangle anchored at its lower-left corner.
///
/// Degenerate (zero-width or zero-height) rectangles are allowed and have
/// area zero; some optimal packings require them.
#[derive(Clone, Debug, PartialEq)]
pub struct Rect<T> {
    pub anchor: Point<T>,
    pub right: T,
    pub top: T,
}

impl<T: Scalar> Rect<T> {
    pub fn new(anchor: Point<T>, right: T, top: T) -> Self {
        Rect { anchor, right, top }
    }

    pub fn from_corners(x: T, y: T, right: T, top: T) -> Self {
        Rect {
            anchor: Point::new(x, y),
            right,
            top,
        }
    }

    /// The whole unit square.
    pub fn unit() -> Self {
        Rect::from_corners(T::zero(), T::zero(), T::one(), T::one())
    }

    pub fn width(&self) -> T {
        self.right.clone() - self.anchor.x.clone()
    }

    pub fn height(&self) -> T {
        self.top.clone() - self.anchor.y.clone()
    }

    pub fn area(&self) -> T {
        self.width() * self.height()
    }

    pub fn is_degenerate(&self) -> bool {
        self.right == self.anchor.x || self.top == self.anchor.y
    }

    /// Edges ordered and inside the unit square.
    pub fn is_well_formed(&self) -> bool {
        self.anchor.x.cmp_total(&self.right) != Ordering::Greater
            && self.anchor.y.cmp_total(&self.top) != Ordering::Greater
            && self.anchor.x.in_unit_interval()
            && self.anchor.y.in_unit_interval()
            && self.right.in_unit_interval()
            && self.top.in_unit_interval()
    }

    /// Strict interior membership; points on edges do not count.
    pub fn interior_contains(&self, p: &Point<T>) -> bool {
        self.anchor.x < p.x && p.x < self.right && self.anchor.y < p.y && p.y < self.top
    }

    /// Open-interior intersection test. Degenerate rectangles never overlap.
    pub fn interiors_overlap(&self, other: &Rect<T>) -> bool {
        let lo_x = self.anchor.x.clone().max_val(other.anchor.x.clone());
        let hi_x = self.right.clone().min_val(other.right.clone());
        if lo_x.cmp_total(&hi_x) != Ordering::Less {
            return false;
        }
        let lo_y = self.anchor.y.clone().max_val(other.anchor.y.clone());
        let hi_y = self.top.clone().min_val(other.top.clone());
        lo_y.cmp_total(&hi_y) == Ordering::Less
    }

    /// Area of the overlap of the closed rectangles.
    pub fn intersection_area(&self, other: &Rect<T>) -> T {
        let lo_x = self.anchor.x.clone().max_val(other.anchor.x.clone());
        let hi_x = self.right.clone().min_val(other.right.clone());
        let lo_y = self.anchor.y.clone().max_val(other.anchor.y.clone());
        let hi_y = self.top.clone().min_val(other.top.clone());
        if lo_x.cmp_total(&hi_x) == Ordering::Less && lo_y.cmp_total(&hi_y) == Ordering::Less {
            (hi_x - lo_x) * (hi_y - lo_y)
        } else {
            T::zero()
        }
    }
}

/// Why a point list is not a valid configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConfigError {
    Empty,
    MissingOrigin,
    OutOfSquare { index: usize },
    NonIncreasingX { index: usize },
    DuplicateY { first: usize, second: usize },
    OnAxis { index: usize },
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigError::Empty => write!(f, "configuration has no points"),
            ConfigError::MissingOrigin => write!(f, "first point must be the origin"),
            ConfigError::OutOfSquare { index } => {
                write!(f, "point {index} lies outside the unit square")
            }
            ConfigError::NonIncreasingX { index } => {
                write!(f, "x-coordinates not strictly increasing at point {index}")
            }
            ConfigError::DuplicateY { first, second } => {
                write!(f, "points {first} and {second} share a y-coordinate")
            }
            ConfigError::OnAxis { index } => {
                write!(f, "non-origin point {index} lies on a coordinate axis")
            }
        }
    }
}

/// An ordered point set in the unit square: the origin first, then points
/// with strictly increasing x, all y distinct, none on the axes.
#[derive(Clone, Debug, PartialEq)]
pub struct Configuration<T> {
    points: Vec<Point<T>>,
}

impl<T: Scalar> Configuration<T> {
    /// Validate an already-ordered point list (origin included, first).
    pub fn new(points: Vec<Point<T>>) -> Result<Self, ConfigError> {
        if points.is_empty() {
            return Err(ConfigError::Empty);
        }
        if points[0].x != T::zero() || points[0].y != T::zero() {
            return Err(ConfigError::MissingOrigin);
        }
        for (i, p) in points.iter().enumerate() {
            if !p.x.in_unit_interval() || !p.y.in_unit_interval() {
                return Err(ConfigError::OutOfSquare { index: i });
            }
        }
        for i in 1..points.len() {
            if points[i].x <= T::zero() || points[i].y <= T::zero() {
                return Err(ConfigError::OnAxis { index: i });
            }
            if i > 1 && points[i].x.cmp_total(&points[i - 1].x) != Ordering::Greater {
                return Err(ConfigError::NonIncreasingX { index: i });
            }
        }
        for i in 0..points.len() {
            for j in (i + 1)..points.len() {
                if points[i].y == points[j].y {
                    return Err(ConfigError::DuplicateY { first: i, second: j });
                }
            }
        }
        Ok(Configuration { points })
    }

    /// Sort the given points by x (the origin must be among them) and validate.
    pub fn from_unordered(mut points: Vec<Point<T>>) -> Result<Self, ConfigError> {
        points.sort_by(|a, b| a.x.cmp_total(&b.x));
        Self::new(points)
    }

    /// Build from non-origin points only; the origin is prepended.
    pub fn from_interior_points(points: Vec<Point<T>>) -> Result<Self, ConfigError> {
        let mut all = Vec::with_capacity(points.len() + 1);
        all.push(Point::origin());
        all.extend(points);
        Self::from_unordered(all)
    }

    pub(crate) fn from_points_unchecked(points: Vec<Point<T>>) -> Self {
        Configuration { points }
    }

    pub fn points(&self) -> &[Point<T>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Reflect across the main diagonal and re-sort. Valid configurations
    /// stay valid; the permutation becomes its inverse.
    pub fn reflect(&self) -> Self {
        let mut pts: Vec<Point<T>> = self.points.iter().map(Point::transpose).collect();
        pts.sort_by(|a, b| a.x.cmp_total(&b.x));
        Configuration { points: pts }
    }

    /// Coordinatewise maximum over a non-empty index range.
    pub fn dominant_point(&self, range: core::ops::Range<usize>) -> Option<Point<T>> {
        if range.is_empty() || range.end > self.points.len() {
            return None;
        }
        let mut max_x = self.points[range.start].x.clone();
        let mut max_y = self.points[range.start].y.clone();
        for i in range {
            max_x = max_x.max_val(self.points[i].x.clone());
            max_y = max_y.max_val(self.points[i].y.clone());
        }
        Some(Point::new(max_x, max_y))
    }

    /// Index where the maximal consecutive decreasing run ending at the
    /// rightmost point starts. For the single-origin configuration this is 0.
    pub fn final_decreasing_run_start(&self) -> usize {
        let n = self.points.len();
        if n == 1 {
            return 0;
        }
        let mut start = n - 1;
        while start > 1
            && self.points[start - 1].y.cmp_total(&self.points[start].y) == Ordering::Greater
        {
            start -= 1;
        }
        start
    }
}

/// A packing invariant violation found by [`Packing::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    RectCountMismatch,
    AnchorMismatch { index: usize },
    MalformedRect { index: usize },
    OutOfSquare { index: usize },
    InteriorOverlap { first: usize, second: usize },
    PointInInterior { rect: usize, point: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::RectCountMismatch => write!(f, "rectangle count differs from point count"),
            Violation::AnchorMismatch { index } => {
                write!(f, "rectangle {index} is not anchored at its point")
            }
            Violation::MalformedRect { index } => {
                write!(f, "rectangle {index} has right/top below its anchor")
            }
            Violation::OutOfSquare { index } => {
                write!(f, "rectangle {index} leaves the unit square")
            }
            Violation::InteriorOverlap { first, second } => {
                write!(f, "rectangles {first} and {second} overlap")
            }
            Violation::PointInInterior { rect, point } => {
                write!(f, "rectangle {rect} contains point {point} in its interior")
            }
        }
    }
}

/// All violations of the packing invariants, in detection order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// One anchored rectangle per configuration point, index-aligned.
///
/// The struct itself does not enforce the packing invariants so that
/// [`Packing::validate`] can report violations; use [`Packing::area`] for a
/// checked total.
#[derive(Clone, Debug, PartialEq)]
pub struct Packing<T> {
    pub config: Configuration<T>,
    pub rects: Vec<Rect<T>>,
}

impl<T: Scalar> Packing<T> {
    pub fn new(config: Configuration<T>, rects: Vec<Rect<T>>) -> Self {
        Packing { config, rects }
    }

    /// Report every violated packing invariant.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        if self.rects.len() != self.config.len() {
            report.violations.push(Violation::RectCountMismatch);
            return report;
        }
        for (i, rect) in self.rects.iter().enumerate() {
            if rect.anchor != self.config.points()[i] {
                report.violations.push(Violation::AnchorMismatch { index: i });
            }
            if rect.anchor.x.cmp_total(&rect.right) == Ordering::Greater
                || rect.anchor.y.cmp_total(&rect.top) == Ordering::Greater
            {
                report.violations.push(Violation::MalformedRect { index: i });
            } else if !rect.is_well_formed() {
                report.violations.push(Violation::OutOfSquare { index: i });
            }
        }
        for i in 0..self.rects.len() {
            for j in (i + 1)..self.rects.len() {
                if self.rects[i].interiors_overlap(&self.rects[j]) {
                    report
                        .violations
                        .push(Violation::InteriorOverlap { first: i, second: j });
                }
            }
        }
        for (r, rect) in self.rects.iter().enumerate() {
            for (p, point) in self.config.points().iter().enumerate() {
                if rect.interior_contains(point) {
                    report
                        .violations
                        .push(Violation::PointInInterior { rect: r, point: p });
                }
            }
        }
        report
    }

    /// Total area, checked: the first violated invariant is returned as an
    /// error for invalid packings.
    pub fn area(&self) -> Result<T, Violation> {
        let report = self.validate();
        if let Some(v) = report.violations.into_iter().next() {
            return Err(v);
        }
        Ok(self.area_unchecked())
    }

    /// Total area without validity checking.
    pub fn area_unchecked(&self) -> T {
        let mut sum = T::zero();
        for r in &self.rects {
            sum = sum + r.area();
        }
        sum
    }

    /// True iff rectangle `i` can be grown neither upward nor rightward
    /// without breaking a packing invariant or leaving the square.
    ///
    /// The blocking obstacle may be the boundary, a configuration point, or
    /// another rectangle; all three count.
    pub fn is_maximal_rect(&self, i: usize) -> bool {
        assert!(i < self.rects.len(), "rectangle index out of range");
        !self.can_extend_right(i) && !self.can_extend_up(i)
    }

    fn can_extend_right(&self, i: usize) -> bool {
        let rect = &self.rects[i];
        if rect.right >= T::one() {
            return false;
        }
        // A zero-height rectangle has no interior: widening it is always
        // legal, so it is extendable whenever it has room.
        if rect.top == rect.anchor.y {
            return true;
        }
        // Blocked exactly when an obstacle's left boundary sits at the
        // current right edge within the rectangle's open vertical span.
        for p in self.config.points() {
            if p.x == rect.right && rect.anchor.y < p.y && p.y < rect.top {
                return false;
            }
        }
        for (j, other) in self.rects.iter().enumerate() {
            if j == i || other.is_degenerate() {
                continue;
            }
            let y_overlap = rect.anchor.y.clone().max_val(other.anchor.y.clone())
                < rect.top.clone().min_val(other.top.clone());
            if y_overlap && other.anchor.x == rect.right {
                return false;
            }
        }
        true
    }

    fn can_extend_up(&self, i: usize) -> bool {
        let rect = &self.rects[i];
        if rect.top >= T::one() {
            return false;
        }
        if rect.right == rect.anchor.x {
            return true;
        }
        for p in self.config.points() {
            if p.y == rect.top && rect.anchor.x < p.x && p.x < rect.right {
                return false;
            }
        }
        for (j, other) in self.rects.iter().enumerate() {
            if j == i || other.is_degenerate() {
                continue;
            }
            let x_overlap = rect.anchor.x.clone().max_val(other.anchor.x.clone())
                < rect.right.clone().min_val(other.right.clone());
            if x_overlap && other.anchor.y == rect.top {
                return false;
            }
        }
        true
    }

    /// Proportion of `region` covered by this packing (rectangles clipped to
    /// the region; rectangles must not overlap for the sum to be a measure).
    pub fn covered_area_within(&self, region: &RectilinearRegion<T>) -> T {
        let mut total = T::zero();
        for rect in &self.rects {
            for cell in &region.cells {
                total = total + rect.intersection_area(cell);
            }
        }
        total
    }

    /// Map the packing affinely into `target`, preserving the fill
    /// proportion exactly in rational mode.
    pub fn rescale_into(&self, target: &Rect<T>) -> Result<Packing<T>, RescaleError> {
        let w = target.width();
        let h = target.height();
        if w == T::zero() || h == T::zero() {
            return Err(RescaleError::DegenerateTarget);
        }
        let map = |p: &Point<T>| {
            Point::new(
                target.anchor.x.clone() + p.x.clone() * w.clone(),
                target.anchor.y.clone() + p.y.clone() * h.clone(),
            )
        };
        let points: Vec<Point<T>> = self.config.points().iter().map(&map).collect();
        let rects: Vec<Rect<T>> = self
            .rects
            .iter()
            .map(|r| {
                let anchor = map(&r.anchor);
                let far = map(&Point::new(r.right.clone(), r.top.clone()));
                Rect::new(anchor, far.x, far.y)
            })
            .collect();
        // The rescaled anchors generally no longer start at the origin, so
        // the result lives in target space; packing-level invariants
        // (anchoring, disjointness, containment) still hold.
        Ok(Packing {
            config: Configuration::from_points_unchecked(points),
            rects,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RescaleError {
    DegenerateTarget,
}

impl fmt::Display for RescaleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RescaleError::DegenerateTarget => write!(f, "target rectangle has zero area"),
        }
    }
}

/// Disjoint vertical strips with their exact total area.
#[derive(Clone, Debug, PartialEq)]
pub struct RectilinearRegion<T> {
    pub cells: Vec<Rect<T>>,
    pub total_area: T,
}

impl<T: Scalar> RectilinearRegion<T> {
    pub fn from_cells(cells: Vec<Rect<T>>) -> Self {
        let mut total = T::zero();
        for c in &cells {
            total = total + c.area();
        }
        RectilinearRegion {
            cells,
            total_area: total,
        }
    }
}

/// The set of points above and to the right of at least one point of the
/// final decreasing run, decomposed into vertical strips ordered by left
/// edge.
pub fn staircase_region<T: Scalar>(config: &Configuration<T>) -> RectilinearRegion<T> {
    let pts = config.points();
    let start = config.final_decreasing_run_start();
    let mut cells = Vec::with_capacity(pts.len() - start);
    for k in start..pts.len() {
        let right = if k + 1 < pts.len() {
            pts[k + 1].x.clone()
        } else {
            T::one()
        };
        cells.push(Rect::new(pts[k].clone(), right, T::one()));
    }
    RectilinearRegion::from_cells(cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn r(num: i64, den: i64) -> Rational {
        Rational::from_ratio(num, den)
    }

    fn pt(nx: i64, dx: i64, ny: i64, dy: i64) -> Point<Rational> {
        Point::new(r(nx, dx), r(ny, dy))
    }

    fn config(points: &[(i64, i64, i64, i64)]) -> Configuration<Rational> {
        let mut all = alloc::vec![Point::origin()];
        all.extend(points.iter().map(|&(nx, dx, ny, dy)| pt(nx, dx, ny, dy)));
        Configuration::new(all).unwrap()
    }

    #[test]
    fn configuration_rejects_bad_input() {
        assert_eq!(
            Configuration::<Rational>::new(alloc::vec![]),
            Err(ConfigError::Empty)
        );
        assert_eq!(
            Configuration::new(alloc::vec![pt(1, 2, 1, 2)]),
            Err(ConfigError::MissingOrigin)
        );
        let dup_y = Configuration::new(alloc::vec![
            Point::origin(),
            pt(1, 4, 1, 2),
            pt(1, 2, 1, 2),
        ]);
        assert_eq!(dup_y, Err(ConfigError::DuplicateY { first: 1, second: 2 }));
        let on_axis = Configuration::new(alloc::vec![Point::origin(), pt(0, 1, 1, 2)]);
        assert!(matches!(on_axis, Err(ConfigError::OnAxis { .. })));
        let out = Configuration::new(alloc::vec![Point::origin(), pt(3, 2, 1, 2)]);
        assert_eq!(out, Err(ConfigError::OutOfSquare { index: 1 }));
    }

    #[test]
    fn packing_area_whole_square() {
        let c = Configuration::new(alloc::vec![Point::<Rational>::origin()]).unwrap();
        let p = Packing::new(c, alloc::vec![Rect::unit()]);
        assert_eq!(p.area().unwrap(), Rational::one());
    }

    #[test]
    fn packing_area_two_dots_paper_values() {
        // Half-split packing with the point at (1/2, 1/2): area 3/4.
        let c = config(&[(1, 2, 1, 2)]);
        let p = Packing::new(
            c,
            alloc::vec![
                Rect::from_corners(r(0, 1), r(0, 1), r(1, 2), r(1, 1)),
                Rect::from_corners(r(1, 2), r(1, 2), r(1, 1), r(1, 1)),
            ],
        );
        assert_eq!(p.area().unwrap(), r(3, 4));

        // The 0.82 packing on {(0,0),(3/10,2/5)}.
        let c = config(&[(3, 10, 2, 5)]);
        let p = Packing::new(
            c,
            alloc::vec![
                Rect::from_corners(r(0, 1), r(0, 1), r(1, 1), r(2, 5)),
                Rect::from_corners(r(3, 10), r(2, 5), r(1, 1), r(1, 1)),
            ],
        );
        assert_eq!(p.area().unwrap(), r(41, 50));
    }

    #[test]
    fn validate_reports_overlap_and_containment() {
        let c = config(&[(1, 2, 1, 2)]);
        let p = Packing::new(
            c,
            alloc::vec![
                Rect::from_corners(r(0, 1), r(0, 1), r(1, 1), r(1, 1)),
                Rect::from_corners(r(1, 2), r(1, 2), r(1, 1), r(1, 1)),
            ],
        );
        let report = p.validate();
        assert!(report
            .violations
            .contains(&Violation::InteriorOverlap { first: 0, second: 1 }));
        assert!(report
            .violations
            .contains(&Violation::PointInInterior { rect: 0, point: 1 }));
    }

    #[test]
    fn validate_reports_out_of_square() {
        let c = config(&[(1, 2, 1, 2)]);
        let p = Packing::new(
            c.clone(),
            alloc::vec![
                Rect::from_corners(r(0, 1), r(0, 1), r(1, 2), r(1, 2)),
                Rect::from_corners(r(1, 2), r(1, 2), r(1, 1), r(3, 2)),
            ],
        );
        assert!(p
            .validate()
            .violations
            .contains(&Violation::OutOfSquare { index: 1 }));
        assert!(p.area().is_err());
    }

    #[test]
    fn maximal_rect_examples() {
        // Rectangle touching a point on its top edge and the right boundary.
        let c = config(&[(3, 10, 2, 5)]);
        let p = Packing::new(
            c,
            alloc::vec![
                Rect::from_corners(r(0, 1), r(0, 1), r(1, 1), r(2, 5)),
                Rect::from_corners(r(3, 10), r(2, 5), r(1, 1), r(1, 1)),
            ],
        );
        assert!(p.is_maximal_rect(0));
        assert!(p.is_maximal_rect(1));

        // A quarter square alone in the square is extendable both ways.
        let c1 = Configuration::new(alloc::vec![Point::<Rational>::origin()]).unwrap();
        let p1 = Packing::new(
            c1,
            alloc::vec![Rect::from_corners(r(0, 1), r(0, 1), r(1, 2), r(1, 2))],
        );
        assert!(!p1.is_maximal_rect(0));

        // Blocked on the right by a neighboring rectangle's left edge.
        let c2 = config(&[(3, 10, 1, 5)]);
        let p2 = Packing::new(
            c2,
            alloc::vec![
                Rect::from_corners(r(0, 1), r(0, 1), r(3, 10), r(1, 1)),
                Rect::from_corners(r(3, 10), r(1, 5), r(1, 1), r(1, 1)),
            ],
        );
        assert!(p2.is_maximal_rect(0));
    }

    #[test]
    fn staircase_region_examples() {
        // {(0,0),(4/9,2/3),(2/3,4/9)}: two strips, total 7/27.
        let c = config(&[(4, 9, 2, 3), (2, 3, 4, 9)]);
        let region = staircase_region(&c);
        assert_eq!(region.cells.len(), 2);
        assert_eq!(region.total_area, r(7, 27));

        // Single point: one strip of area 1/4.
        let c = config(&[(1, 2, 1, 2)]);
        assert_eq!(staircase_region(&c).total_area, r(1, 4));

        // Origin only: the whole square.
        let c = Configuration::new(alloc::vec![Point::<Rational>::origin()]).unwrap();
        assert_eq!(staircase_region(&c).total_area, Rational::one());
    }

    #[test]
    fn staircase_matches_closed_form_for_decreasing_tight() {
        // 1 - n*x1 + x1*(x1/x2 + x2) at the tight three-point configuration.
        let c = config(&[(4, 9, 2, 3), (2, 3, 4, 9)]);
        let x1 = r(4, 9);
        let x2 = r(2, 3);
        let expected = Rational::one() - r(3, 1) * x1.clone()
            + x1.clone() * (x1.clone() / x2.clone() + x2);
        assert_eq!(staircase_region(&c).total_area, expected);
    }

    #[test]
    fn rescale_preserves_proportion() {
        let c = config(&[(1, 2, 1, 2)]);
        let p = Packing::new(
            c,
            alloc::vec![
                Rect::from_corners(r(0, 1), r(0, 1), r(1, 2), r(1, 1)),
                Rect::from_corners(r(1, 2), r(1, 2), r(1, 1), r(1, 1)),
            ],
        );
        let ident = p.rescale_into(&Rect::unit()).unwrap();
        assert_eq!(ident.area_unchecked(), r(3, 4));
        assert_eq!(ident.rects, p.rects);

        let target = Rect::from_corners(r(0, 1), r(0, 1), r(1, 2), r(1, 1));
        let scaled = p.rescale_into(&target).unwrap();
        assert_eq!(scaled.area_unchecked(), r(3, 8));

        let degenerate = Rect::from_corners(r(1, 2), r(1, 2), r(1, 2), r(1, 1));
        assert_eq!(
            p.rescale_into(&degenerate),
            Err(RescaleError::DegenerateTarget)
        );
    }

    #[test]
    fn dominant_point_over_ranges() {
        let c = config(&[(4, 9, 2, 3), (2, 3, 4, 9)]);
        assert_eq!(c.dominant_point(1..3), Some(pt(2, 3, 2, 3)));
        assert_eq!(c.dominant_point(2..3), Some(pt(2, 3, 4, 9)));
        assert_eq!(c.dominant_point(1..1), None);
    }
}
