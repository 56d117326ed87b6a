//! Test points on the simplex instance that sit exactly on the bisector of
//! two candidates `y_i`, `y_j` while those two stay nearest. They come in
//! three families depending on whether `y_m` is one of the tied pair
//! (`FarPair`), a member of the committee `L` (`NearPairFarInL`), or
//! neither (`NearPairFarOutsideL`).
//!
//! All indices are 0-based; candidate `m - 1` is the far point `(r, .., r)`.

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::model::TIE_TOL;

use super::instance_simplex;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lemma1Case {
    /// One of the tied candidates is the far point. `r/2 <= a1 <= a2 <= (r+1)/2`.
    FarPair,
    /// Both tied candidates are unit vectors and `m - 1` is in `L`.
    /// `0 <= a1 <= a2 <= 1/2`.
    NearPairFarInL,
    /// Both tied candidates are unit vectors and `m - 1` is not in `L`.
    /// `0 <= a1 <= a2 <= 1/2`.
    NearPairFarOutsideL,
}

impl Lemma1Case {
    pub fn classify(m: usize, i: usize, j: usize, committee: &[usize]) -> Self {
        let far = m - 1;
        if i == far || j == far {
            Lemma1Case::FarPair
        } else if committee.contains(&far) {
            Lemma1Case::NearPairFarInL
        } else {
            Lemma1Case::NearPairFarOutsideL
        }
    }

    /// Admissible range for both alphas.
    pub fn alpha_range(self, r: f64) -> (f64, f64) {
        match self {
            Lemma1Case::FarPair => (r / 2.0, (r + 1.0) / 2.0),
            _ => (0.0, 0.5),
        }
    }
}

/// Points of `U_L(a1, a2)` for the tied pair `(i, j)` and the committee `L`
/// (size 1 or 2). For the far-pair case with `|L| = 2`, `L[0]` plays the
/// role of the distinguished member `l_1`.
pub fn lemma1_test_points(
    m: usize,
    r: f64,
    i: usize,
    j: usize,
    committee: &[usize],
    alphas: &[(f64, f64)],
) -> Result<Vec<Point>> {
    let cs = instance_simplex(m, r)?;
    let w = committee.len();
    if !(1..=2).contains(&w) {
        return Err(Error::InvalidParameter(format!(
            "committee size must be 1 or 2, got {w}"
        )));
    }
    if w + 1 >= m {
        return Err(Error::InvalidParameter(format!(
            "committee size {w} needs m > {}, got m = {m}",
            w + 1
        )));
    }
    for &k in [i, j].iter().chain(committee) {
        if k >= m {
            return Err(Error::CandidateOutOfRange { index: k, m });
        }
    }
    if i == j {
        return Err(Error::DegeneratePair(i + 1));
    }
    if committee.contains(&i) || committee.contains(&j) {
        return Err(Error::InvalidParameter(
            "the tied candidates must not be in the committee".into(),
        ));
    }
    if w == 2 && committee[0] == committee[1] {
        return Err(Error::InvalidParameter("committee members must differ".into()));
    }

    let case = Lemma1Case::classify(m, i, j, committee);
    let (lo, hi) = case.alpha_range(r);
    let far = m - 1;
    let dim = m - 1;

    let mut out = Vec::with_capacity(alphas.len());
    for &(a1, a2) in alphas {
        if !(a1 <= a2 && a1 >= lo - 1e-12 && a2 <= hi + 1e-12) {
            return Err(Error::InvalidParameter(format!(
                "alphas ({a1}, {a2}) outside {lo} <= a1 <= a2 <= {hi}"
            )));
        }
        let mut t = vec![a2; dim];
        match case {
            Lemma1Case::FarPair => {
                let near = if i == far { j } else { i };
                let l1 = committee[0];
                t[near] = (r + 1.0) / 2.0;
                for &l in &committee[1..] {
                    t[l] = a1;
                }
                let mf = m as f64;
                let wf = w as f64;
                t[l1] = (mf - 2.0) * r / 2.0 - (wf - 1.0) * a1 - (mf - wf - 2.0) * a2;
            }
            Lemma1Case::NearPairFarInL => {
                t[i] = 0.5;
                t[j] = 0.5;
                for &l in committee.iter().filter(|&&l| l != far) {
                    t[l] = a1;
                }
            }
            Lemma1Case::NearPairFarOutsideL => {
                t[i] = 0.5;
                t[j] = 0.5;
                for &l in committee {
                    t[l] = a1;
                }
            }
        }
        let x = Point::new(t)?;
        let d: Vec<f64> = cs.points().iter().map(|y| x.dist_unchecked(y)).collect();
        let tie = d[i].max(d[j]);
        if (d[i] - d[j]).abs() > TIE_TOL || d.iter().any(|&dk| dk + TIE_TOL < tie) {
            return Err(Error::InvalidParameter(format!(
                "generated point {:?} does not tie y{} and y{} as nearest",
                x.coords(),
                i + 1,
                j + 1
            )));
        }
        out.push(x);
    }
    Ok(out)
}

/// All `(a1, a2)` with `lo <= a1 <= a2 <= hi` on a grid of the given step.
/// The upper end is always included.
pub fn lemma1_alpha_grid(lo: f64, hi: f64, step: f64) -> Vec<(f64, f64)> {
    let mut vals = Vec::new();
    if step > 0.0 {
        let count = ((hi - lo) / step + 1e-9).floor() as usize;
        vals.extend((0..=count).map(|s| lo + s as f64 * step));
        if hi - vals.last().copied().unwrap_or(lo) > 1e-9 {
            vals.push(hi);
        }
    } else {
        vals.push(lo);
    }
    let mut out = Vec::new();
    for (a, &x) in vals.iter().enumerate() {
        for &y in &vals[a..] {
            out.push((x, y));
        }
    }
    out
}

/// Every lemma-1 point for every tied pair and every committee of size 1
/// and 2, at the given alpha step.
pub fn lemma1_suite(m: usize, r: f64, step: f64) -> Result<Vec<Point>> {
    let mut out = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            let others: Vec<usize> = (0..m).filter(|&k| k != i && k != j).collect();
            let mut committees: Vec<Vec<usize>> = others.iter().map(|&l| vec![l]).collect();
            if m > 3 {
                for &a in &others {
                    for &b in &others {
                        if a != b {
                            committees.push(vec![a, b]);
                        }
                    }
                }
            }
            for l in committees {
                let (lo, hi) = Lemma1Case::classify(m, i, j, &l).alpha_range(r);
                let grid = lemma1_alpha_grid(lo, hi, step);
                out.extend(lemma1_test_points(m, r, i, j, &l, &grid)?);
            }
        }
    }
    Ok(out)
}
