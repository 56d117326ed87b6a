//! No anonymous deterministic strategy-proof mechanism has finite
//! distortion on the four-candidate simplex with four voters.
//!
//! Such a mechanism is independent, so it is a table of 0/1 values
//! `q_{i,j}(n_i, n_j)`. Finite distortion forces every pair with positive
//! cost to get probability 0 whenever all voters stand on at most two
//! candidates, and every count vector must elect exactly one pair. Whatever
//! pair is elected at `(1,1,1,1)`, three normalisation equations reduce to
//! `x + y = 1`, `y + z = 1`, `x + z = 1`, whose sum `2(x + y + z) = 3` has no
//! integer solution. Over `[0, 1]` the same system is satisfiable.

use std::collections::HashMap;
use std::fmt;

use num_rational::Ratio;
use serde_json::{json, Value};

use crate::enumerate::{compositions, sequence_from_counts};
use crate::error::{Error, Result};
use crate::instances::Instance;
use crate::model::{all_pairs, social_cost, LocationProfile, Pair, ZERO_COST_TOL};

const N: usize = 4;
const M: usize = 4;

/// `q_{i,j}(a, b)` with `i < j`, 0-based candidates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QVar {
    pub i: usize,
    pub j: usize,
    pub a: usize,
    pub b: usize,
}

impl QVar {
    fn of(pair: Pair, counts: &[usize]) -> Self {
        let (i, j) = pair.key();
        QVar {
            i,
            j,
            a: counts[i],
            b: counts[j],
        }
    }
}

impl fmt::Display for QVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q_{{{},{}}}({},{})", self.i + 1, self.j + 1, self.a, self.b)
    }
}

/// `sum vars = rhs`.
#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pub vars: Vec<QVar>,
    pub rhs: u8,
    pub origin: String,
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lhs: Vec<String> = self.vars.iter().map(|v| v.to_string()).collect();
        write!(f, "{} = {}  [{}]", lhs.join(" + "), self.rhs, self.origin)
    }
}

#[derive(Debug, Clone)]
pub struct BranchProof {
    /// Pair elected at `(1,1,1,1)`.
    pub elected: Pair,
    /// 1 when the far candidate is not elected there, 2 when it is.
    pub case: u8,
    /// The three count vectors used and the two unknowns left in each.
    pub equations: Vec<(Vec<usize>, [QVar; 2])>,
    pub unknowns: [QVar; 3],
    pub derivation: Vec<String>,
    /// The three rows hold exactly with the unknowns at 1/2 and every other
    /// entry at its forced value.
    pub halves_ok: bool,
    /// Exhaustive search under this branch found no assignment.
    pub exhaustive_unsat: bool,
    pub nodes: u64,
}

#[derive(Debug, Clone)]
pub struct FractionalControl {
    /// Every branch's three equations hold with all unknowns at 1/2.
    pub halves_satisfy_branches: bool,
    /// Pair-Independent's exact rational table satisfies every constraint.
    pub pair_independent_satisfies_system: bool,
}

impl FractionalControl {
    pub fn sat(&self) -> bool {
        self.halves_satisfy_branches && self.pair_independent_satisfies_system
    }
}

#[derive(Debug, Clone)]
pub struct UnsatCertificate {
    pub r: f64,
    pub constraints: Vec<Constraint>,
    pub branches: Vec<BranchProof>,
    /// Exhaustive search without any branch assumption.
    pub exhaustive_unsat: bool,
    pub fractional: FractionalControl,
    pub log: Vec<String>,
}

impl UnsatCertificate {
    /// Every branch closed by parity and confirmed by search.
    pub fn is_unsat(&self) -> bool {
        self.exhaustive_unsat && self.branches.len() == 6 && self.branches.iter().all(|b| b.exhaustive_unsat)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "r": self.r,
            "unsat": self.is_unsat(),
            "constraints": self.constraints.iter().map(|c| json!({
                "vars": c.vars.iter().map(|v| json!([v.i + 1, v.j + 1, v.a, v.b])).collect::<Vec<_>>(),
                "rhs": c.rhs,
                "origin": c.origin,
            })).collect::<Vec<_>>(),
            "branches": self.branches.iter().map(|b| json!({
                "elected": b.elected.one_based(),
                "case": b.case,
                "unknowns": b.unknowns.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "exhaustive_unsat": b.exhaustive_unsat,
                "nodes": b.nodes,
            })).collect::<Vec<_>>(),
            "fractional_sat": self.fractional.sat(),
        })
    }
}

/// The full constraint system for four voters on the simplex instance with
/// parameter `r`: forcing from zero-cost profiles, then normalisation.
pub fn constraint_system(r: f64) -> Result<Vec<Constraint>> {
    let inst = Instance::multi4(r)?;
    let cs = &inst.candidates;
    let pairs = all_pairs(M);
    let vectors = compositions(N, M);
    let mut out = Vec::new();
    for c in &vectors {
        let x = LocationProfile::new(
            sequence_from_counts(c)
                .into_iter()
                .map(|k| cs.points()[k].clone())
                .collect(),
        );
        let costs: Vec<f64> = pairs
            .iter()
            .map(|&p| social_cost(p, &x, cs))
            .collect::<Result<_>>()?;
        if costs.iter().any(|&s| s <= ZERO_COST_TOL) {
            let vars: Vec<QVar> = pairs
                .iter()
                .zip(&costs)
                .filter(|&(_, &s)| s > ZERO_COST_TOL)
                .map(|(&p, _)| QVar::of(p, c))
                .collect();
            out.push(Constraint {
                vars,
                rhs: 0,
                origin: format!("finite distortion at counts {c:?} (OPT = 0)"),
            });
        }
    }
    for c in &vectors {
        out.push(Constraint {
            vars: pairs.iter().map(|&p| QVar::of(p, c)).collect(),
            rhs: 1,
            origin: format!("one pair elected at counts {c:?}"),
        });
    }
    Ok(out)
}

struct System {
    index: HashMap<QVar, usize>,
    vars: Vec<QVar>,
    rows: Vec<(Vec<usize>, u8)>,
}

impl System {
    fn new(constraints: &[Constraint]) -> Self {
        let mut index = HashMap::new();
        let mut vars = Vec::new();
        let rows = constraints
            .iter()
            .map(|c| {
                let ids = c
                    .vars
                    .iter()
                    .map(|v| {
                        *index.entry(*v).or_insert_with(|| {
                            vars.push(*v);
                            vars.len() - 1
                        })
                    })
                    .collect();
                (ids, c.rhs)
            })
            .collect();
        System { index, vars, rows }
    }

    /// Unit propagation. Returns false on conflict. `why` receives a reason
    /// for every newly fixed variable.
    fn propagate(&self, val: &mut [Option<bool>], mut why: impl FnMut(usize, usize, bool)) -> bool {
        loop {
            let mut changed = false;
            for (ri, (ids, rhs)) in self.rows.iter().enumerate() {
                let ones = ids.iter().filter(|&&v| val[v] == Some(true)).count();
                let free: Vec<usize> = ids.iter().copied().filter(|&v| val[v].is_none()).collect();
                if ones > *rhs as usize || ones + free.len() < *rhs as usize {
                    return false;
                }
                let fix = if ones == *rhs as usize {
                    Some(false)
                } else if ones + free.len() == *rhs as usize {
                    Some(true)
                } else {
                    None
                };
                if let Some(b) = fix {
                    for v in free {
                        val[v] = Some(b);
                        why(v, ri, b);
                        changed = true;
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    /// Counts search nodes; true if some 0/1 assignment satisfies all rows.
    fn satisfiable(&self, val: &mut Vec<Option<bool>>, nodes: &mut u64) -> bool {
        *nodes += 1;
        let mut local = val.clone();
        if !self.propagate(&mut local, |_, _, _| {}) {
            return false;
        }
        match local.iter().position(|v| v.is_none()) {
            None => true,
            Some(v) => [true, false].into_iter().any(|b| {
                let mut next = local.clone();
                next[v] = Some(b);
                self.satisfiable(&mut next, nodes)
            }),
        }
    }
}

/// Builds the certificate. `r` only fixes the geometry (`r > 2`); the
/// argument itself is combinatorial.
pub fn deterministic_impossibility(r: f64) -> Result<UnsatCertificate> {
    let constraints = constraint_system(r)?;
    let sys = System::new(&constraints);
    let mut log = vec![
        format!("{} variables, {} constraints", sys.vars.len(), constraints.len()),
        "forcing: q_{i,j}(a,b) = 1 whenever i and j hold all votes with a, b > 0 (follows from OPT = 0 and normalisation)".to_string(),
        "note: q_{1,2}(3,1) is forced to 1; the value 0 would leave no pair elected at (3,1,0,0)".to_string(),
    ];

    let mut nodes = 0;
    let exhaustive_unsat = !sys.satisfiable(&mut vec![None; sys.vars.len()], &mut nodes);
    log.push(format!("exhaustive search without assumptions: {} ({nodes} nodes)", verdict(exhaustive_unsat)));

    let mut branches = Vec::new();
    for elected in all_pairs(M) {
        let b = branch(&sys, &constraints, elected)?;
        log.push(format!(
            "branch {} elected at (1,1,1,1), case {}: {} ({} nodes)",
            elected,
            b.case,
            verdict(b.exhaustive_unsat),
            b.nodes
        ));
        log.extend(b.derivation.iter().map(|l| format!("  {l}")));
        branches.push(b);
    }

    let halves_satisfy_branches = branches.iter().all(|b| b.halves_ok);
    let pair_independent_satisfies_system = constraints.iter().all(|c| {
        let s: Ratio<i64> = c.vars.iter().map(|v| pair_independent_exact(v.a, v.b)).sum();
        s == Ratio::from_integer(c.rhs as i64)
    });
    log.push(format!(
        "fractional control: unknowns at 1/2 satisfy every branch: {halves_satisfy_branches}; \
         exact Pair-Independent table satisfies all constraints: {pair_independent_satisfies_system}"
    ));

    Ok(UnsatCertificate {
        r,
        constraints,
        branches,
        exhaustive_unsat,
        fractional: FractionalControl {
            halves_satisfy_branches,
            pair_independent_satisfies_system,
        },
        log,
    })
}

fn verdict(unsat: bool) -> &'static str {
    if unsat {
        "UNSAT"
    } else {
        "SAT"
    }
}

fn branch(sys: &System, constraints: &[Constraint], elected: Pair) -> Result<BranchProof> {
    let (u, v) = elected.key();
    let rest: Vec<usize> = (0..M).filter(|&k| k != u && k != v).collect();
    let (w, f) = (rest[0], rest[1]);
    let uniform = [1; M];
    let assumed = QVar::of(elected, &uniform);

    let mut val = vec![None; sys.vars.len()];
    let mut reason: HashMap<usize, String> = HashMap::new();
    let mut derivation = vec![format!("assume {assumed} = 1")];
    let a = sys.index[&assumed];
    val[a] = Some(true);
    reason.insert(a, "branch assumption".into());
    let ok = sys.propagate(&mut val, |x, ri, b| {
        reason.insert(x, format!("{} = {} by {}", sys.vars[x], u8::from(b), constraints[ri].origin));
    });
    if !ok {
        return Err(Error::InvalidParameter(format!("branch {elected} conflicts before the parity step")));
    }

    // v gets two votes; the other two votes go to each pair of {u, w, f}
    let mut equations = Vec::new();
    let mut halves_ok = true;
    for (p, q) in [(w, f), (u, f), (u, w)] {
        let mut c = [0; M];
        c[v] = 2;
        c[p] = 1;
        c[q] = 1;
        let row: Vec<QVar> = all_pairs(M).into_iter().map(|pr| QVar::of(pr, &c)).collect();
        let mut unknown = Vec::new();
        let mut total = Ratio::from_integer(0i64);
        for x in &row {
            let id = sys.index[x];
            match val[id] {
                Some(false) => derivation.push(format!("at {c:?}: {}", reason[&id])),
                Some(true) => {
                    return Err(Error::InvalidParameter(format!("{x} unexpectedly fixed to 1")));
                }
                None => {
                    unknown.push(*x);
                    total += Ratio::new(1, 2);
                }
            }
        }
        halves_ok &= total == Ratio::from_integer(1);
        let [x, y] = <[QVar; 2]>::try_from(unknown)
            .map_err(|u| Error::InvalidParameter(format!("expected two unknowns at {c:?}, got {}", u.len())))?;
        derivation.push(format!("at {c:?}: {x} + {y} = 1"));
        equations.push((c.to_vec(), [x, y]));
    }
    let mut unknowns: Vec<QVar> = equations.iter().flat_map(|(_, e)| e.iter().copied()).collect();
    unknowns.sort();
    unknowns.dedup();
    let unknowns = <[QVar; 3]>::try_from(unknowns)
        .map_err(|u| Error::InvalidParameter(format!("expected three unknowns, got {}", u.len())))?;
    derivation.push(format!(
        "sum: 2({} + {} + {}) = 3, even = odd: contradiction",
        unknowns[0], unknowns[1], unknowns[2]
    ));

    let mut nodes = 0;
    let mut start = vec![None; sys.vars.len()];
    start[a] = Some(true);
    let exhaustive_unsat = !sys.satisfiable(&mut start, &mut nodes);

    Ok(BranchProof {
        elected,
        case: if elected.contains(M - 1) { 2 } else { 1 },
        equations,
        unknowns,
        derivation,
        halves_ok,
        exhaustive_unsat,
        nodes,
    })
}

/// Pair-Independent as an exact rational for four voters and four candidates.
fn pair_independent_exact(a: usize, b: usize) -> Ratio<i64> {
    let (a, b, n) = (a as i64, b as i64, N as i64);
    if a == n || b == n {
        return Ratio::new(1, M as i64 - 1);
    }
    Ratio::new(a, n - b) + Ratio::new(b, n - a) - Ratio::new(a + b, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn certificate_is_unsat_with_six_closed_branches() {
        let c = deterministic_impossibility(3.0).unwrap();
        assert!(c.is_unsat());
        assert!(c.fractional.sat());
        assert_eq!(c.branches.iter().filter(|b| b.case == 2).count(), 3);
    }

    #[test]
    fn case_one_branch_uses_the_expected_unknowns() {
        let c = deterministic_impossibility(3.0).unwrap();
        let b = c
            .branches
            .iter()
            .find(|b| b.elected.key() == (0, 1))
            .unwrap();
        let names: Vec<String> = b.unknowns.iter().map(|v| v.to_string()).collect();
        assert_eq!(names, ["q_{1,2}(1,2)", "q_{2,3}(2,1)", "q_{2,4}(2,1)"]);
    }

    #[test]
    fn forcing_includes_two_candidate_profiles() {
        let cs = constraint_system(3.0).unwrap();
        // counts (3,1,0,0): every pair except (1,2) has positive cost
        let row = cs
            .iter()
            .find(|c| c.rhs == 0 && c.origin.contains("[3, 1, 0, 0]"))
            .unwrap();
        assert_eq!(row.vars.len(), 5);
    }

    #[test]
    fn pair_independent_exact_values() {
        assert_eq!(pair_independent_exact(1, 1), Ratio::new(1, 6));
        assert_eq!(pair_independent_exact(3, 1), Ratio::from_integer(1));
        assert_eq!(pair_independent_exact(0, 0), Ratio::from_integer(0));
    }

    #[test]
    fn rejects_small_r() {
        assert!(deterministic_impossibility(2.0).is_err());
    }
}
