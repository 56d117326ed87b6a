//! Points in Euclidean space and candidate-set statistics.
//!
//! Candidates are stored in a [`CandidateSet`], which caches the minimum and
//! maximum pairwise distance. One-dimensional sets are sorted ascending on
//! construction so that index order is left-to-right order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Candidates closer than this are treated as the same location.
pub const DISTINCT_TOL: f64 = 1e-12;

/// A location in `d`-dimensional Euclidean space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct Point(Vec<f64>);

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyPoint);
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Point(coords))
    }

    /// A one-dimensional point. Panics on a non-finite value.
    pub fn scalar(x: f64) -> Self {
        Point::new(vec![x]).expect("finite scalar")
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    fn check_dim(&self, other: &Point) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        Ok(())
    }

    /// Squared distance without the dimension check.
    pub(crate) fn dist2_unchecked(&self, other: &Point) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b) * (a - b))
            .sum()
    }

    pub(crate) fn dist_unchecked(&self, other: &Point) -> f64 {
        self.dist2_unchecked(other).sqrt()
    }
}

impl TryFrom<Vec<f64>> for Point {
    type Error = Error;

    fn try_from(v: Vec<f64>) -> Result<Self> {
        Point::new(v)
    }
}

impl From<Point> for Vec<f64> {
    fn from(p: Point) -> Self {
        p.0
    }
}

/// Euclidean distance between two points of equal dimension.
pub fn distance(p: &Point, q: &Point) -> Result<f64> {
    p.check_dim(q)?;
    Ok(p.dist_unchecked(q))
}

/// Coordinate-wise mean of two points.
pub fn midpoint(p: &Point, q: &Point) -> Result<Point> {
    p.check_dim(q)?;
    Ok(Point(
        p.0.iter().zip(&q.0).map(|(a, b)| 0.5 * (a + b)).collect(),
    ))
}

/// An ordered set of at least two pairwise-distinct candidate locations.
#[derive(Debug, Clone, PartialEq)]
pub struct CandidateSet {
    points: Vec<Point>,
    d_min: f64,
    d_max: f64,
}

impl CandidateSet {
    /// Builds a candidate set. One-dimensional sets are sorted ascending.
    pub fn new(points: Vec<Point>) -> Result<Self> {
        Self::with_order(points).map(|(cs, _)| cs)
    }

    /// Like [`CandidateSet::new`], but also returns `order`, where
    /// `order[new_index] = original_index`.
    pub fn with_order(mut points: Vec<Point>) -> Result<(Self, Vec<usize>)> {
        let m = points.len();
        if m < 2 {
            return Err(Error::TooFewCandidates(m));
        }
        let dim = points[0].dim();
        for p in &points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.dim(),
                });
            }
        }
        let mut order: Vec<usize> = (0..m).collect();
        if dim == 1 {
            order.sort_by(|&a, &b| points[a].0[0].total_cmp(&points[b].0[0]));
            let mut sorted: Vec<Option<Point>> = points.into_iter().map(Some).collect();
            points = order.iter().map(|&i| sorted[i].take().unwrap()).collect();
        }

        let mut d_min = f64::INFINITY;
        let mut d_max = 0.0_f64;
        for k in 0..m {
            for l in (k + 1)..m {
                let d = points[k].dist_unchecked(&points[l]);
                if d <= DISTINCT_TOL {
                    return Err(Error::DuplicateCandidates(order[k] + 1, order[l] + 1));
                }
                d_min = d_min.min(d);
                d_max = d_max.max(d);
            }
        }
        Ok((
            CandidateSet {
                points,
                d_min,
                d_max,
            },
            order,
        ))
    }

    /// Number of candidates.
    pub fn m(&self) -> usize {
        self.points.len()
    }

    pub fn dim(&self) -> usize {
        self.points[0].dim()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn get(&self, k: usize) -> Result<&Point> {
        self.points.get(k).ok_or(Error::CandidateOutOfRange {
            index: k,
            m: self.m(),
        })
    }

    pub fn d_min(&self) -> f64 {
        self.d_min
    }

    pub fn d_max(&self) -> f64 {
        self.d_max
    }

    /// Ratio of the largest to the smallest pairwise candidate distance.
    pub fn sigma(&self) -> f64 {
        self.d_max / self.d_min
    }

    /// Checks that `p` lives in the candidates' space.
    pub fn check_point(&self, p: &Point) -> Result<()> {
        if p.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: p.dim(),
            });
        }
        Ok(())
    }

    /// Distance from `p` to candidate `k`. Indices are not checked.
    pub(crate) fn dist_to(&self, p: &Point, k: usize) -> f64 {
        p.dist_unchecked(&self.points[k])
    }

    /// Axis-aligned bounding box `(lo, hi)` of the candidates.
    pub fn bounding_box(&self) -> (Vec<f64>, Vec<f64>) {
        let d = self.dim();
        let mut lo = vec![f64::INFINITY; d];
        let mut hi = vec![f64::NEG_INFINITY; d];
        for p in &self.points {
            for (c, &v) in p.0.iter().enumerate() {
                lo[c] = lo[c].min(v);
                hi[c] = hi[c].max(v);
            }
        }
        (lo, hi)
    }
}

/// Free-function form of [`CandidateSet::sigma`].
pub fn sigma(cs: &CandidateSet) -> f64 {
    cs.sigma()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(c: &[f64]) -> Point {
        Point::new(c.to_vec()).unwrap()
    }

    #[test]
    fn distance_examples() {
        assert_eq!(distance(&pt(&[0.0]), &pt(&[0.0])).unwrap(), 0.0);
        assert_eq!(distance(&pt(&[-2.0]), &pt(&[2.0])).unwrap(), 4.0);
        let d = distance(&pt(&[1.0, 0.0, 0.0]), &pt(&[0.0, 1.0, 0.0])).unwrap();
        assert!((d - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn distance_dimension_mismatch() {
        assert_eq!(
            distance(&pt(&[0.0]), &pt(&[0.0, 1.0])),
            Err(Error::DimensionMismatch {
                expected: 1,
                got: 2
            })
        );
    }

    #[test]
    fn point_rejects_nan_and_empty() {
        assert_eq!(Point::new(vec![f64::NAN]), Err(Error::NonFinite));
        assert_eq!(Point::new(vec![1.0, f64::INFINITY]), Err(Error::NonFinite));
        assert_eq!(Point::new(vec![]), Err(Error::EmptyPoint));
    }

    #[test]
    fn sigma_examples() {
        let cs = CandidateSet::new(vec![pt(&[-2.0]), pt(&[0.0]), pt(&[2.0])]).unwrap();
        assert_eq!(cs.sigma(), 2.0);
        let cs = CandidateSet::new(vec![pt(&[0.0]), pt(&[1.0])]).unwrap();
        assert_eq!(sigma(&cs), 1.0);
        let cs = CandidateSet::new(vec![
            pt(&[1.0, 0.0, 0.0]),
            pt(&[0.0, 1.0, 0.0]),
            pt(&[0.0, 0.0, 1.0]),
            pt(&[5.0, 5.0, 5.0]),
        ])
        .unwrap();
        assert!((cs.sigma() - 33f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn duplicate_candidates_rejected() {
        let err = CandidateSet::new(vec![pt(&[1.0]), pt(&[0.0]), pt(&[1.0])]).unwrap_err();
        assert!(matches!(err, Error::DuplicateCandidates(_, _)));
        assert_eq!(
            CandidateSet::new(vec![pt(&[1.0])]),
            Err(Error::TooFewCandidates(1))
        );
    }

    #[test]
    fn line_candidates_are_sorted() {
        let (cs, order) =
            CandidateSet::with_order(vec![pt(&[2.0]), pt(&[-2.0]), pt(&[0.0])]).unwrap();
        let xs: Vec<f64> = cs.points().iter().map(|p| p.coords()[0]).collect();
        assert_eq!(xs, vec![-2.0, 0.0, 2.0]);
        assert_eq!(order, vec![1, 2, 0]);
    }

    #[test]
    fn midpoint_examples() {
        assert_eq!(midpoint(&pt(&[-2.0]), &pt(&[0.0])).unwrap(), pt(&[-1.0]));
        assert_eq!(
            midpoint(&pt(&[1.0, 0.0, 0.0]), &pt(&[0.0, 1.0, 0.0])).unwrap(),
            pt(&[0.5, 0.5, 0.0])
        );
        assert_eq!(midpoint(&pt(&[3.5]), &pt(&[3.5])).unwrap(), pt(&[3.5]));
        assert!(midpoint(&pt(&[0.0]), &pt(&[0.0, 0.0])).is_err());
    }

    #[test]
    fn point_serde_rejects_nan_via_try_from() {
        let p: Point = serde_json::from_str("[1.0, 2.5]").unwrap();
        assert_eq!(p, pt(&[1.0, 2.5]));
        assert!(serde_json::from_str::<Point>("[]").is_err());
    }
}
