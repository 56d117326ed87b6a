//! The fixed candidate configurations and the named worst-case and
//! lower-bound voter profiles built on them.

mod lemma1;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::geometry::{midpoint, CandidateSet, Point};
use crate::model::{check_consistent, nearest_candidates, Election, LocationProfile};

pub use lemma1::{lemma1_alpha_grid, lemma1_suite, lemma1_test_points, Lemma1Case};

/// Which built-in construction a candidate set came from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InstanceKind {
    /// `y = (-2, 0, 2)`.
    Line3,
    /// `y = (2 - sigma, 0, 1, 2)`.
    Line4 { sigma: f64 },
    /// Unit vectors plus the far point `(r, .., r)` in `m - 1` dimensions.
    Simplex { m: usize, r: f64 },
    /// Loaded from a file or built by hand.
    Custom,
}

/// A candidate set together with its provenance.
#[derive(Debug, Clone)]
pub struct Instance {
    pub kind: InstanceKind,
    pub candidates: Arc<CandidateSet>,
}

impl Instance {
    pub fn custom(candidates: CandidateSet) -> Self {
        Instance {
            kind: InstanceKind::Custom,
            candidates: Arc::new(candidates),
        }
    }

    pub fn line3() -> Self {
        Instance {
            kind: InstanceKind::Line3,
            candidates: Arc::new(instance_line3()),
        }
    }

    pub fn line4(sigma: f64) -> Result<Self> {
        Ok(Instance {
            kind: InstanceKind::Line4 { sigma },
            candidates: Arc::new(instance_line4(sigma)?),
        })
    }

    pub fn simplex(m: usize, r: f64) -> Result<Self> {
        Ok(Instance {
            kind: InstanceKind::Simplex { m, r },
            candidates: Arc::new(instance_simplex(m, r)?),
        })
    }

    /// The four-candidate simplex in three dimensions.
    pub fn multi4(r: f64) -> Result<Self> {
        Self::simplex(4, r)
    }

    pub fn sigma(&self) -> f64 {
        self.candidates.sigma()
    }

    pub fn election(&self, actions: Vec<usize>) -> Result<Election> {
        Election::new(Arc::clone(&self.candidates), actions)
    }
}

fn line(xs: &[f64]) -> CandidateSet {
    CandidateSet::new(xs.iter().map(|&x| Point::scalar(x)).collect()).expect("distinct candidates")
}

/// Four candidates on a line at `(2 - sigma, 0, 1, 2)`, `sigma >= 3`.
pub fn instance_line4(sigma: f64) -> Result<CandidateSet> {
    if !sigma.is_finite() || sigma < 3.0 {
        return Err(Error::InvalidParameter(format!(
            "line4 needs sigma >= 3, got {sigma}"
        )));
    }
    Ok(line(&[2.0 - sigma, 0.0, 1.0, 2.0]))
}

/// Three candidates on a line at `(-2, 0, 2)`.
pub fn instance_line3() -> CandidateSet {
    line(&[-2.0, 0.0, 2.0])
}

/// `m - 1` unit vectors and `(r, .., r)` in `m - 1` dimensions, `r > 2`.
pub fn instance_simplex(m: usize, r: f64) -> Result<CandidateSet> {
    if m < 3 {
        return Err(Error::InvalidParameter(format!(
            "simplex instance needs m >= 3, got {m}"
        )));
    }
    if !r.is_finite() || r <= 2.0 {
        return Err(Error::InvalidParameter(format!(
            "simplex instance needs r > 2, got {r}"
        )));
    }
    let d = m - 1;
    let mut pts: Vec<Point> = (0..d)
        .map(|i| {
            let mut c = vec![0.0; d];
            c[i] = 1.0;
            Point::new(c).expect("finite")
        })
        .collect();
    pts.push(Point::new(vec![r; d]).expect("finite"));
    CandidateSet::new(pts)
}

/// The `r` giving a simplex instance with the requested `sigma`, from
/// `2 sigma^2 = (m - 1) r^2 - 2 r + 1`.
pub fn simplex_r_for_sigma(m: usize, sigma: f64) -> Result<f64> {
    if m < 3 {
        return Err(Error::InvalidParameter(format!("m >= 3 required, got {m}")));
    }
    let k = (m - 1) as f64;
    let r = (1.0 + (1.0 - k * (1.0 - 2.0 * sigma * sigma)).sqrt()) / k;
    if !r.is_finite() || r <= 2.0 {
        return Err(Error::InvalidParameter(format!(
            "sigma {sigma} is too small for a simplex instance with m = {m} (needs r > 2)"
        )));
    }
    Ok(r)
}

/// An action profile with a consistent location profile.
#[derive(Debug, Clone)]
pub struct NamedProfile {
    pub id: String,
    pub election: Election,
    pub profile: LocationProfile,
}

impl NamedProfile {
    /// Builds the profile and checks consistency.
    pub fn new(id: impl Into<String>, election: Election, profile: LocationProfile) -> Result<Self> {
        check_consistent(&profile, &election)?;
        Ok(NamedProfile {
            id: id.into(),
            election,
            profile,
        })
    }

    /// Voters standing at a tie, with every nearest candidate. Any of those
    /// votes is truthful.
    pub fn ties(&self) -> Vec<(usize, Vec<usize>)> {
        self.profile
            .positions()
            .iter()
            .enumerate()
            .filter_map(|(i, p)| {
                let near = nearest_candidates(p, self.election.candidates()).ok()?;
                (near.len() > 1).then_some((i, near))
            })
            .collect()
    }
}

fn build(
    id: impl Into<String>,
    cs: &Arc<CandidateSet>,
    groups: &[(usize, usize, Point)],
) -> Result<NamedProfile> {
    let mut actions = Vec::new();
    let mut positions = Vec::new();
    for (count, vote, pos) in groups {
        for _ in 0..*count {
            actions.push(*vote);
            positions.push(pos.clone());
        }
    }
    NamedProfile::new(
        id,
        Election::new(Arc::clone(cs), actions)?,
        LocationProfile::new(positions),
    )
}

/// Smallest and largest admissible `k` for the line profiles:
/// `[ceil(n / (2 sigma - 1)), floor(n / 3)]`, clipped below at 1.
pub fn line_k_range(n: usize, sigma: f64) -> (usize, usize) {
    let lo = ((n as f64) / (2.0 * sigma - 1.0) - 1e-12).ceil().max(1.0) as usize;
    (lo, n / 3)
}

/// Profiles on the four-candidate line used for the `min{n, sqrt(sigma)}`
/// lower bounds.
#[derive(Debug, Clone)]
pub struct LineFamily {
    /// `a^t`: `k - t` votes for `y1`, `t` for `y2`, `(n - k)/2` each for `y3`
    /// and `y4`.
    pub a_t: Election,
    /// Voters at `y1`, `y3`, `y4`, voting `a^0`.
    pub x1: NamedProfile,
    /// Voters at `y2`, `y3`, `y4`, voting `a^k`.
    pub x2: NamedProfile,
    /// First `k` voters at the midpoint of `y1` and `y2`, voting `a^t`.
    pub x3: NamedProfile,
}

/// The `a^t` action profile and the three location profiles.
pub fn profiles_thm_line(sigma: f64, n: usize, k: usize, t: usize) -> Result<LineFamily> {
    let cs = Arc::new(instance_line4(sigma)?);
    let (lo, hi) = line_k_range(n, sigma);
    if k < lo || k > hi {
        return Err(Error::InvalidParameter(format!(
            "k = {k} outside [ceil(n/(2 sigma - 1)), floor(n/3)] = [{lo}, {hi}]"
        )));
    }
    if (n - k) % 2 != 0 {
        return Err(Error::InvalidParameter(format!(
            "n - k must be even, got n = {n}, k = {k}"
        )));
    }
    if t > k {
        return Err(Error::InvalidParameter(format!("t = {t} exceeds k = {k}")));
    }
    let half = (n - k) / 2;
    let y = |i: usize| cs.points()[i].clone();
    let mid = midpoint(&y(0), &y(1))?;

    let a = |t: usize| -> Vec<(usize, usize)> { vec![(k - t, 0), (t, 1), (half, 2), (half, 3)] };
    let a_t = Election::new(
        Arc::clone(&cs),
        a(t).iter()
            .flat_map(|&(c, v)| std::iter::repeat(v).take(c))
            .collect(),
    )?;

    let x1 = build(
        format!("thm-line:x1(sigma={sigma},n={n},k={k})"),
        &cs,
        &[(k, 0, y(0)), (half, 2, y(2)), (half, 3, y(3))],
    )?;
    let x2 = build(
        format!("thm-line:x2(sigma={sigma},n={n},k={k})"),
        &cs,
        &[(k, 1, y(1)), (half, 2, y(2)), (half, 3, y(3))],
    )?;
    let x3 = build(
        format!("thm-line:x3(sigma={sigma},n={n},k={k},t={t})"),
        &cs,
        &[
            (k - t, 0, mid.clone()),
            (t, 1, mid),
            (half, 2, y(2)),
            (half, 3, y(3)),
        ],
    )?;
    Ok(LineFamily { a_t, x1, x2, x3 })
}

/// Balanced split of `n` into three parts, larger parts first.
pub fn balanced_thirds(n: usize) -> [usize; 3] {
    let base = n / 3;
    let rem = n % 3;
    [base + usize::from(rem > 0), base + usize::from(rem > 1), base]
}

/// Profiles behind the `sigma / 6` lower bound on the simplex instance:
/// every split of voters between `y1` and `y2`, the balanced split over
/// `y1, y2, y3`, and the balanced split over `y1, y2, y_m`.
pub fn profiles_sigma6(m: usize, r: f64, n: usize) -> Result<Vec<NamedProfile>> {
    if m < 4 {
        return Err(Error::InvalidParameter(format!("m >= 4 required, got {m}")));
    }
    if n < 3 {
        return Err(Error::InvalidParameter(format!("n >= 3 required, got {n}")));
    }
    let cs = Arc::new(instance_simplex(m, r)?);
    let y = |i: usize| cs.points()[i].clone();
    let mut out = Vec::new();
    for k in 1..n {
        out.push(build(
            format!("thm-sigma6:x1(k={k})"),
            &cs,
            &[(k, 0, y(0)), (n - k, 1, y(1))],
        )?);
    }
    let [n1, n2, n3] = balanced_thirds(n);
    out.push(build(
        "thm-sigma6:x2",
        &cs,
        &[(n1, 0, y(0)), (n2, 1, y(1)), (n3, 2, y(2))],
    )?);
    out.push(build(
        "thm-sigma6:x3",
        &cs,
        &[(n1, 0, y(0)), (n2, 1, y(1)), (n3, m - 1, y(m - 1))],
    )?);
    Ok(out)
}

/// The `7/3` profiles on the three-candidate line, all with votes
/// `(y1, y2, y3)`: `(-2, 0, 1)`, `(-2, -1, 2)` and the mirror `(-1, 0, 2)`.
/// Their optimal pairs are `(y1,y2)`, `(y1,y3)` and `(y2,y3)` respectively.
pub fn profiles_line_three() -> Result<[NamedProfile; 3]> {
    let cs = Arc::new(instance_line3());
    let mk = |id: &str, xs: [f64; 3]| {
        build(
            id,
            &cs,
            &[
                (1, 0, Point::scalar(xs[0])),
                (1, 1, Point::scalar(xs[1])),
                (1, 2, Point::scalar(xs[2])),
            ],
        )
    };
    Ok([
        mk("thm-line-three:x1", [-2.0, 0.0, 1.0])?,
        mk("thm-line-three:x2", [-2.0, -1.0, 2.0])?,
        mk("thm-line-three:x3", [-1.0, 0.0, 2.0])?,
    ])
}

/// Tight profile for Two-Extremes: `x = (-1, 0, .., 0, 2)` on the
/// three-candidate line, the first voter breaking the tie towards `y1`.
pub fn worstcase_two_extremes(n: usize) -> Result<NamedProfile> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("n >= 3 required, got {n}")));
    }
    let cs = Arc::new(instance_line3());
    build(
        format!("two-extremes-worst(n={n})"),
        &cs,
        &[
            (1, 0, Point::scalar(-1.0)),
            (n - 2, 1, Point::scalar(0.0)),
            (1, 2, Point::scalar(2.0)),
        ],
    )
}

/// Tight profile for Sequential Dictator on the four-candidate simplex:
/// `x = (y1, (1/2, 1/2, 0), y4, .., y4)` with the second voter reporting `y2`.
pub fn worstcase_sequential_dictator(r: f64, n: usize) -> Result<NamedProfile> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("n >= 3 required, got {n}")));
    }
    let cs = Arc::new(instance_simplex(4, r)?);
    let y = |i: usize| cs.points()[i].clone();
    let mid = midpoint(&y(0), &y(1))?;
    build(
        format!("sd-worst(r={r},n={n})"),
        &cs,
        &[(1, 0, y(0)), (1, 1, mid), (n - 2, 3, y(3))],
    )
}

/// Named profile families addressable by id.
pub const FAMILY_IDS: &[&str] = &[
    "thm-line",
    "thm-sigma6",
    "line-three",
    "two-extremes-worst",
    "sd-worst",
];

/// Parameters for [`named_family`]. Unused fields are ignored.
#[derive(Debug, Clone)]
pub struct FamilyParams {
    pub n: usize,
    pub sigma: f64,
    pub r: f64,
    pub m: usize,
    pub k: Option<usize>,
    pub t: usize,
}

impl Default for FamilyParams {
    fn default() -> Self {
        FamilyParams {
            n: 10,
            sigma: 9.0,
            r: 3.0,
            m: 4,
            k: None,
            t: 0,
        }
    }
}

/// Looks up a profile family by id.
pub fn named_family(id: &str, p: &FamilyParams) -> Result<Vec<NamedProfile>> {
    match id {
        "thm-line" => {
            let k = match p.k {
                Some(k) => k,
                None => {
                    let (lo, hi) = line_k_range(p.n, p.sigma);
                    (lo..=hi)
                        .find(|k| (p.n - k) % 2 == 0)
                        .ok_or_else(|| {
                            Error::InvalidParameter(format!(
                                "no admissible k for n = {}, sigma = {}",
                                p.n, p.sigma
                            ))
                        })?
                }
            };
            let fam = profiles_thm_line(p.sigma, p.n, k, p.t)?;
            Ok(vec![fam.x1, fam.x2, fam.x3])
        }
        "thm-sigma6" => profiles_sigma6(p.m, p.r, p.n),
        "line-three" => Ok(profiles_line_three()?.to_vec()),
        "two-extremes-worst" => Ok(vec![worstcase_two_extremes(p.n)?]),
        "sd-worst" => Ok(vec![worstcase_sequential_dictator(p.r, p.n)?]),
        other => Err(Error::InvalidParameter(format!(
            "unknown profile family {other:?}; known: {}",
            FAMILY_IDS.join(", ")
        ))),
    }
}
