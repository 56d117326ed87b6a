//! One PASS/FAIL line per acceptance criterion. Every library value is
//! compared against an oracle computed here from first principles.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use scv::instances::{worstcase_sequential_dictator, worstcase_two_extremes};
use scv::mechanism::{is_monotone, Mechanism};
use scv::verify::bounds::{
    line_lower_bound, line_two_elections, pair_independent_ratio_instance3, profile_ratio,
    seven_thirds_minimax,
};
use scv::verify::dictator::random_dictator_uniqueness_check;
use scv::verify::impossibility::deterministic_impossibility;
use scv::verify::search::{distortion_search, SearchConfig};
use scv::verify::{check_strategy_proof, SpConfig};
use scv::{
    opt, CandidateSet, Instance, InvertedPairIndependent, LocationProfile, Outcome, PairIndependent,
    Point, RandomDictator, SequentialDictator, TwoExtremes,
};

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn lib<T>(r: scv::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

// ---- oracles ----

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

fn pair_sc(i: usize, j: usize, xs: &[Vec<f64>], ys: &[Vec<f64>]) -> f64 {
    xs.iter().map(|x| dist(x, &ys[i]).min(dist(x, &ys[j]))).sum()
}

fn brute_opt(xs: &[Vec<f64>], ys: &[Vec<f64>]) -> ((usize, usize), f64) {
    let mut best = ((0, 1), f64::INFINITY);
    for i in 0..ys.len() {
        for j in (i + 1)..ys.len() {
            let c = pair_sc(i, j, xs, ys);
            if c < best.1 {
                best = ((i, j), c);
            }
        }
    }
    best
}

fn pi_q(a: usize, b: usize, n: usize, m: usize) -> f64 {
    if a == n || b == n {
        return 1.0 / (m - 1) as f64;
    }
    let (a, b, n) = (a as f64, b as f64, n as f64);
    a / (n - b) + b / (n - a) - (a + b) / n
}

fn counts_vectors(n: usize, m: usize) -> Vec<Vec<usize>> {
    if m == 1 {
        return vec![vec![n]];
    }
    (0..=n)
        .flat_map(|c| {
            counts_vectors(n - c, m - 1).into_iter().map(move |mut rest| {
                rest.insert(0, c);
                rest
            })
        })
        .collect()
}

fn votes_of(counts: &[usize]) -> Vec<usize> {
    counts.iter().enumerate().flat_map(|(k, &c)| std::iter::repeat(k).take(c)).collect()
}

/// `sigma` of the simplex instance computed directly: unit vectors are
/// `sqrt 2` apart, the far point is farthest from each of them.
fn simplex_sigma(m: usize, r: f64) -> f64 {
    let mut e1 = vec![0.0; m - 1];
    e1[0] = 1.0;
    dist(&e1, &vec![r; m - 1]) / 2f64.sqrt()
}

fn coords(cs: &CandidateSet) -> Vec<Vec<f64>> {
    cs.points().iter().map(|p| p.coords().to_vec()).collect()
}

fn positions(x: &LocationProfile) -> Vec<Vec<f64>> {
    x.positions().iter().map(|p| p.coords().to_vec()).collect()
}

fn outcome_cost(out: &Outcome, xs: &[Vec<f64>], ys: &[Vec<f64>]) -> f64 {
    out.lottery()
        .iter()
        .map(|(c, p)| {
            let members = c.one_based();
            let cost: f64 = xs
                .iter()
                .map(|x| members.iter().map(|&k| dist(x, &ys[k - 1])).fold(f64::INFINITY, f64::min))
                .sum();
            p * cost
        })
        .sum()
}

// ---- criteria ----

fn two_extremes_tight() -> Check {
    let cfg = SearchConfig::default();
    let ys = [[-2.0], [0.0], [2.0]].map(|y| y.to_vec());
    let mut found = Vec::new();
    for n in 3..=8 {
        // x = (-1, 0, .., 0, 2) elects (y1, y3); OPT is (y2, y3)
        let mut xs = vec![vec![-1.0]];
        xs.extend(std::iter::repeat(vec![0.0]).take(n - 2));
        xs.push(vec![2.0]);
        let oracle = pair_sc(0, 2, &xs, &ys) / brute_opt(&xs, &ys).1;
        let target = (2 * n - 3) as f64;
        ensure((oracle - target).abs() <= 1e-9, format!("oracle n={n}: {oracle}"))?;
        let named = lib(profile_ratio(&TwoExtremes, &lib(worstcase_two_extremes(n))?))?;
        ensure((named - target).abs() <= 1e-9, format!("named profile n={n}: {named}"))?;
        let rep = lib(distortion_search(&TwoExtremes, &Instance::line3(), n, &cfg))?;
        ensure((rep.best_ratio - target).abs() <= 1e-9, format!("search n={n}: {}", rep.best_ratio))?;
        found.push(format!("{}", rep.best_ratio));
    }
    Ok(format!("ratios {} for n = 3..8", found.join(", ")))
}

fn pi_validity() -> Check {
    let mut worst_sum = 0.0_f64;
    let mut min_q = f64::INFINITY;
    for m in 2..=5 {
        let cs = std::sync::Arc::new(
            CandidateSet::new((0..m).map(|k| Point::scalar(k as f64)).collect()).map_err(|e| e.to_string())?,
        );
        for n in 1..=12 {
            for c in counts_vectors(n, m) {
                let e = lib(scv::Election::new(cs.clone(), votes_of(&c)))?;
                let Outcome::Pairs(d) = lib(PairIndependent.elect(&e))? else {
                    return Err("pair-independent must return a lottery over pairs".into());
                };
                let mut total = 0.0;
                for i in 0..m {
                    for j in (i + 1)..m {
                        let q = d.prob(i, j);
                        let want = pi_q(c[i], c[j], n, m);
                        ensure((q - want).abs() <= 1e-12, format!("q mismatch at {c:?} ({i},{j})"))?;
                        min_q = min_q.min(q);
                        total += q;
                    }
                }
                worst_sum = worst_sum.max((total - 1.0).abs());
            }
            ensure(lib(is_monotone(&PairIndependent, n, m))?, format!("not monotone at n={n}, m={m}"))?;
            // oracle monotonicity: q never drops when a member gains a vote
            for a in 0..n {
                for b in 0..(n - a) {
                    if m == 2 && a + b + 1 < n {
                        continue;
                    }
                    let q = pi_q(a, b, n, m);
                    ensure(pi_q(a + 1, b, n, m) >= q - 1e-12, format!("oracle drop n={n} m={m} ({a},{b})"))?;
                }
            }
        }
    }
    ensure(worst_sum <= 1e-9, format!("sum error {worst_sum:e}"))?;
    ensure(min_q >= -1e-12, format!("negative probability {min_q:e}"))?;
    Ok(format!("max |sum - 1| = {worst_sum:.1e}, min q = {min_q:.1e}, monotone"))
}

fn pi_bound() -> Check {
    let cfg = SearchConfig::default();
    let mut slack = f64::INFINITY;
    for m in [4, 5] {
        for r in [3.0, 5.0, 10.0] {
            let inst = lib(Instance::simplex(m, r))?;
            let sigma = simplex_sigma(m, r);
            ensure((inst.sigma() - sigma).abs() <= 1e-12, format!("sigma m={m} r={r}"))?;
            for n in [3, 6, 9] {
                let rep = lib(distortion_search(&PairIndependent, &inst, n, &cfg))?;
                let bound = 1.0 + 6.0 * sigma;
                ensure(rep.best_ratio <= bound + 1e-9, format!("m={m} r={r} n={n}: {}", rep.best_ratio))?;
                slack = slack.min(bound - rep.best_ratio);
            }
        }
    }
    let mut vals = Vec::new();
    for r in [3.0, 5.0, 10.0] {
        let sigma = simplex_sigma(4, r);
        let v = lib(pair_independent_ratio_instance3(4, r, 3))?;
        // one voter each at y1, y2, y4, costs summed pair by pair
        let ys = coords(&lib(Instance::simplex(4, r))?.candidates);
        let xs = vec![ys[0].clone(), ys[1].clone(), ys[3].clone()];
        let expected: f64 = (0..4)
            .flat_map(|i| ((i + 1)..4).map(move |j| (i, j)))
            .map(|(i, j)| {
                let c = [1, 1, 0, 1];
                pi_q(c[i], c[j], 3, 4) * pair_sc(i, j, &xs, &ys)
            })
            .sum::<f64>()
            / brute_opt(&xs, &ys).1;
        ensure((v - expected).abs() <= 1e-9, format!("r={r}: {v} vs oracle {expected}"))?;
        ensure((v - (sigma + 2.0) / 3.0).abs() <= 1e-9, format!("r={r}: {v} vs (sigma+2)/3"))?;
        ensure(v >= sigma / 6.0, format!("r={r}: below sigma/6"))?;
        vals.push(format!("{v:.4}"));
    }
    Ok(format!("min slack to 1+6 sigma {slack:.3}; balanced far profile {}", vals.join(", ")))
}

fn sd_tight() -> Check {
    let cfg = SearchConfig::default();
    let mut out = Vec::new();
    for r in [3.0, 10.0] {
        let sigma = simplex_sigma(4, r);
        let inst = lib(Instance::multi4(r))?;
        for n in 3..=8 {
            let target = 2.0 * (n as f64 - 2.0) * sigma + 1.0;
            let p = lib(worstcase_sequential_dictator(r, n))?;
            // elected (y1, y2); OPT (y1, y4) leaves only the midpoint voter
            let xs = positions(&p.profile);
            let ys = coords(&inst.candidates);
            let oracle = pair_sc(0, 1, &xs, &ys) / brute_opt(&xs, &ys).1;
            ensure((oracle - target).abs() <= 1e-6, format!("oracle r={r} n={n}: {oracle}"))?;
            let named = lib(profile_ratio(&SequentialDictator, &p))?;
            ensure((named - target).abs() <= 1e-6, format!("named r={r} n={n}: {named}"))?;
            let rep = lib(distortion_search(&SequentialDictator, &inst, n, &cfg))?;
            ensure((rep.best_ratio - target).abs() <= 1e-6, format!("search r={r} n={n}: {}", rep.best_ratio))?;
        }
        out.push(format!("r={r}: n=8 gives {:.4}", 12.0 * sigma + 1.0));
    }
    Ok(out.join("; "))
}

fn seven_thirds() -> Check {
    let mm = lib(seven_thirds_minimax(0.01))?;
    // oracle: the same grid with hand-coded profiles on y = (-2, 0, 2)
    let ys = [[-2.0], [0.0], [2.0]].map(|y| y.to_vec());
    let profiles = [[-2.0, 0.0, 1.0], [-2.0, -1.0, 2.0], [-1.0, 0.0, 2.0]]
        .map(|p| p.iter().map(|&x| vec![x]).collect::<Vec<_>>());
    let mut best = f64::INFINITY;
    for i in 0..=100 {
        for j in 0..=(100 - i) {
            let p = [i as f64 / 100.0, j as f64 / 100.0, (100 - i - j) as f64 / 100.0];
            let worst = profiles
                .iter()
                .map(|xs| {
                    let e = p[0] * pair_sc(0, 1, xs, &ys) + p[1] * pair_sc(0, 2, xs, &ys) + p[2] * pair_sc(1, 2, xs, &ys);
                    e / brute_opt(xs, &ys).1
                })
                .fold(0.0, f64::max);
            best = best.min(worst);
        }
    }
    ensure((mm.value - best).abs() <= 1e-9, format!("library {} vs oracle {best}", mm.value))?;
    ensure((mm.value - 7.0 / 3.0).abs() <= 0.02, format!("value {}", mm.value))?;
    ensure(
        mm.argmin.iter().all(|p| (p - 1.0 / 3.0).abs() <= 0.02),
        format!("argmin {:?}", mm.argmin),
    )?;
    Ok(format!("{:.4} at ({:.2}, {:.2}, {:.2})", mm.value, mm.argmin[0], mm.argmin[1], mm.argmin[2]))
}

/// Search for a 0/1 independent table electing exactly one pair per count
/// vector, with zero probability on positive-cost pairs whenever OPT = 0.
fn independent_table_exists(n: usize, m: usize) -> bool {
    let vectors = counts_vectors(n, m);
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| ((i + 1)..m).map(move |j| (i, j))).collect();
    let allowed: Vec<Vec<usize>> = vectors
        .iter()
        .map(|c| {
            let support: Vec<usize> = (0..m).filter(|&k| c[k] > 0).collect();
            (0..pairs.len())
                .filter(|&p| {
                    let (i, j) = pairs[p];
                    support.len() > 2 || support.iter().all(|&k| k == i || k == j)
                })
                .collect()
        })
        .collect();

    fn go(
        idx: usize,
        vectors: &[Vec<usize>],
        allowed: &[Vec<usize>],
        pairs: &[(usize, usize)],
        table: &mut HashMap<(usize, usize, usize, usize), bool>,
    ) -> bool {
        if idx == vectors.len() {
            return true;
        }
        let c = &vectors[idx];
        for &choice in &allowed[idx] {
            let mut added = Vec::new();
            let mut ok = true;
            for (p, &(i, j)) in pairs.iter().enumerate() {
                let key = (i, j, c[i], c[j]);
                let want = p == choice;
                match table.get(&key) {
                    Some(&v) if v != want => {
                        ok = false;
                        break;
                    }
                    Some(_) => {}
                    None => {
                        table.insert(key, want);
                        added.push(key);
                    }
                }
            }
            if ok && go(idx + 1, vectors, allowed, pairs, table) {
                return true;
            }
            for k in added {
                table.remove(&k);
            }
        }
        false
    }
    go(0, &vectors, &allowed, &pairs, &mut HashMap::new())
}

fn det_impossibility() -> Check {
    let cert = lib(deterministic_impossibility(3.0))?;
    ensure(cert.is_unsat(), "certificate not UNSAT")?;
    ensure(cert.branches.len() == 6, format!("{} branches", cert.branches.len()))?;
    for b in &cert.branches {
        ensure(b.exhaustive_unsat && b.halves_ok, format!("branch {} not closed", b.elected))?;
        ensure(
            b.derivation.last().is_some_and(|l| l.contains("contradiction")),
            format!("branch {} lacks the parity step", b.elected),
        )?;
    }
    ensure(cert.fractional.sat(), "fractional control not SAT")?;
    ensure(!independent_table_exists(4, 4), "oracle found a table for n = m = 4")?;
    ensure(independent_table_exists(4, 3), "oracle found no table for m = 3")?;
    Ok(format!(
        "UNSAT over {} constraints, 6 parity branches; fractional SAT; oracle agrees",
        cert.constraints.len()
    ))
}

/// Naive deviation check on a coarse grid of the three-candidate line.
fn oracle_sp_violations(mech: &dyn Mechanism) -> Result<usize, String> {
    let inst = Instance::line3();
    let ys = coords(&inst.candidates);
    let grid: Vec<f64> = (0..=24).map(|i| -3.0 + 0.25 * i as f64).collect();
    let mut found = 0;
    for n in 1..=3 {
        let mut seq = vec![0; n];
        loop {
            let base = lib(inst.election(seq.clone()))?;
            let out = lib(mech.elect(&base))?;
            for voter in 0..n {
                for &x in &grid {
                    let d: Vec<f64> = ys.iter().map(|y| (x - y[0]).abs()).collect();
                    let near = d.iter().cloned().fold(f64::INFINITY, f64::min);
                    if d[seq[voter]] > near + 1e-12 {
                        continue;
                    }
                    let truthful = outcome_cost(&out, &[vec![x]], &ys);
                    for dev in 0..3 {
                        if dev == seq[voter] {
                            continue;
                        }
                        let mut s = seq.clone();
                        s[voter] = dev;
                        let o = lib(mech.elect(&lib(inst.election(s))?))?;
                        if outcome_cost(&o, &[vec![x]], &ys) < truthful - 1e-9 {
                            found += 1;
                        }
                    }
                }
            }
            // next sequence
            let mut k = 0;
            while k < n && seq[k] == 2 {
                seq[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
            seq[k] += 1;
        }
    }
    Ok(found)
}

fn sp_suites() -> Check {
    let cfg = SpConfig::default();
    let lines = [Instance::line3(), lib(Instance::line4(9.0))?];
    let all = [
        Instance::line3(),
        lib(Instance::line4(9.0))?,
        lib(Instance::multi4(3.0))?,
        lib(Instance::simplex(5, 3.0))?,
    ];
    let mut checked = 0;
    let mut run = |mech: &dyn Mechanism, inst: &Instance| -> Result<(), String> {
        let rep = lib(check_strategy_proof(mech, inst, &cfg))?;
        checked += 1;
        ensure(
            rep.is_strategy_proof() && rep.violations.is_empty(),
            format!("{} on {:?}: {} violations", mech.name(), inst.kind, rep.violation_count),
        )
    };
    for inst in &lines {
        run(&TwoExtremes, inst)?;
    }
    for inst in &all {
        run(&PairIndependent, inst)?;
        run(&RandomDictator, inst)?;
        run(&SequentialDictator, inst)?;
    }
    let mut planted = 0;
    for inst in &all {
        planted += lib(check_strategy_proof(&InvertedPairIndependent, inst, &cfg))?.violation_count;
    }
    ensure(planted >= 1, "planted mechanism passed")?;
    for mech in [&TwoExtremes as &dyn Mechanism, &PairIndependent, &RandomDictator, &SequentialDictator] {
        let v = oracle_sp_violations(mech)?;
        ensure(v == 0, format!("oracle found {v} deviations for {}", mech.name()))?;
    }
    let oracle_planted = oracle_sp_violations(&InvertedPairIndependent)?;
    ensure(oracle_planted > 0, "oracle found no deviation for the planted mechanism")?;
    Ok(format!("{checked} mechanism/instance suites clean; planted control: {planted} violations"))
}

fn line_lower_bounds() -> Check {
    let sigmas: Vec<f64> = (0..10).map(|i| 3.0 * (400.0f64 / 3.0).powf(i as f64 / 9.0)).collect();
    let mut min_rand = f64::INFINITY;
    let mut min_det = f64::INFINITY;
    for n in (6..=60).step_by(6) {
        for &s in &sigmas {
            let scale = (n as f64).min(s.sqrt());
            // oracle: best k in [ceil(n/(2s-1)), floor(n/3)]
            let (nf, lo) = (n as f64, (n as f64 / (2.0 * s - 1.0)).ceil().max(1.0) as usize);
            let (mut r_or, mut d_or) = (0.0_f64, 0.0_f64);
            for k in lo..=(n / 3) {
                let kf = k as f64;
                r_or = r_or.max((s - 2.0) / (2.0 * kf * (s - 1.0) / (nf - kf) + (nf - 5.0 * kf) / (2.0 * kf)));
                d_or = d_or.max((2.0 * kf * (s - 1.0) / (nf - kf)).min((nf - kf) / (2.0 * kf)));
            }
            let r = lib(line_lower_bound(n, s, false))?;
            let d = lib(line_lower_bound(n, s, true))?;
            ensure((r - r_or).abs() <= 1e-9 * r_or.max(1.0), format!("randomized n={n} sigma={s}"))?;
            ensure((d - d_or).abs() <= 1e-9 * d_or.max(1.0), format!("deterministic n={n} sigma={s}"))?;
            ensure(r >= scale / 12.0 - 1e-12, format!("randomized below scale/12 at n={n} sigma={s}"))?;
            ensure(d >= scale / 3.0 - 1e-12, format!("deterministic below scale/3 at n={n} sigma={s}"))?;
            min_rand = min_rand.min(r / scale * 12.0);
            min_det = min_det.min(d / scale * 3.0);
        }
    }

    let two = lib(line_two_elections(&PairIndependent, 9.0, 10, 2))?;
    // y = (-7, 0, 1, 2); x1 votes (2, 0, 4, 4) from y1, y3, y4
    let ys = [[-7.0], [0.0], [1.0], [2.0]].map(|y| y.to_vec());
    let mut xs = vec![vec![-7.0]; 2];
    xs.extend(vec![vec![1.0]; 4]);
    xs.extend(vec![vec![2.0]; 4]);
    let c = [2, 0, 4, 4];
    let mut e = 0.0;
    for i in 0..4 {
        for j in (i + 1)..4 {
            e += pi_q(c[i], c[j], 10, 4) * pair_sc(i, j, &xs, &ys);
        }
    }
    let gamma1 = e / brute_opt(&xs, &ys).1;
    ensure((two.gamma1 - gamma1).abs() <= 1e-9, format!("gamma1 {} vs oracle {gamma1}", two.gamma1))?;
    ensure((two.bound - 1.75).abs() <= 1e-12, format!("bound at k=2 is {}", two.bound))?;
    ensure(two.worse() >= two.bound, format!("max ratio {} below {}", two.worse(), two.bound))?;
    Ok(format!(
        "min ratio to scale: randomized x{min_rand:.3}/12, deterministic x{min_det:.3}/3; two elections {:.4} >= {}",
        two.worse(),
        two.bound
    ))
}

fn rd_characterization() -> Check {
    for n in 1..=10 {
        for m in 3..=5 {
            let rep = lib(random_dictator_uniqueness_check(&RandomDictator, n, m, 3.0))?;
            ensure(rep.is_random_dictator(n), format!("random dictator rejected at n={n} m={m}"))?;
            ensure(
                rep.differences.iter().flatten().all(|d| (d - 1.0 / n as f64).abs() <= 1e-12),
                format!("differences not 1/n at n={n}"),
            )?;
        }
    }
    let intercepts: [[f64; 4]; 4] = [
        [0.1, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.2],
        [0.05, 0.05, 0.05, 0.05],
        [0.0, 0.3, 0.1, 0.0],
    ];
    let r = 3.0;
    let ys = coords(&lib(Instance::simplex(4, r))?.candidates);
    let n = 5;
    for b in intercepts {
        let slope = (1.0 - b.iter().sum::<f64>()) / n as f64;
        let mech = move |k: usize, c: usize, _n: usize, _m: usize| b[k] + slope * c as f64;
        let rep = lib(random_dictator_uniqueness_check(&mech, n, 4, r))?;
        ensure(rep.normalization_error <= 1e-9, format!("test rule {b:?} not normalised"))?;
        let w = rep.witness.ok_or(format!("no witness for intercepts {b:?}"))?;
        // everybody at y_w: OPT = 0, cost n * sum_l q_l |y_w - y_l|
        let oracle: f64 = (0..4)
            .map(|l| {
                let c = if l == w.candidate { n } else { 0 };
                (b[l] + slope * c as f64) * dist(&ys[w.candidate], &ys[l])
            })
            .sum::<f64>()
            * n as f64;
        ensure(oracle > 0.0 && w.opt_cost == 0.0, format!("witness for {b:?} is not infinite"))?;
        ensure((w.expected_cost - oracle).abs() <= 1e-9, format!("witness cost {} vs {oracle}", w.expected_cost))?;
    }
    Ok("Random Dictator passes for n = 1..10, m = 3..5; 4 shifted rules get witnesses".into())
}

fn opt_oracle() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut done = 0;
    while done < 1000 {
        let m = rng.gen_range(2..=6);
        let n = rng.gen_range(1..=8);
        let d = rng.gen_range(1..=4);
        let pt = |rng: &mut ChaCha8Rng| (0..d).map(|_| rng.gen_range(-5.0..5.0)).collect::<Vec<f64>>();
        let raw: Vec<Vec<f64>> = (0..m).map(|_| pt(&mut rng)).collect();
        let xs: Vec<Vec<f64>> = (0..n).map(|_| pt(&mut rng)).collect();
        let Ok(cs) = CandidateSet::new(raw.iter().map(|c| Point::new(c.clone()).expect("finite")).collect()) else {
            continue;
        };
        let profile = LocationProfile::new(xs.iter().map(|x| Point::new(x.clone()).expect("finite")).collect());
        let (pair, cost) = lib(opt(&profile, &cs))?;
        let (want, want_cost) = brute_opt(&xs, &coords(&cs));
        ensure(pair.key() == want, format!("instance {done}: {pair} vs {want:?}"))?;
        ensure((cost - want_cost).abs() <= 1e-9, format!("instance {done}: cost {cost} vs {want_cost}"))?;
        done += 1;
    }
    Ok("1000 random instances, pairs and costs match".into())
}

fn main() {
    let criteria: [(&str, u64, fn() -> Check); 10] = [
        ("two-extremes-tight", 5, two_extremes_tight),
        ("pi-validity", 10, pi_validity),
        ("pi-bound", 60, pi_bound),
        ("sd-tight", 30, sd_tight),
        ("seven-thirds", 5, seven_thirds),
        ("det-impossibility", 1, det_impossibility),
        ("sp-suites", 120, sp_suites),
        ("line-lower-bounds", 10, line_lower_bounds),
        ("rd-characterization", 5, rd_characterization),
        ("opt-oracle", 10, opt_oracle),
    ];
    let mut failed = 0;
    for (i, (id, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let over = took > Duration::from_secs(*budget);
        let (status, detail) = match (&result, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d} (over the {budget} s budget)")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{status} {:>2} {id:20} {:>8.3} s  {detail}", i + 1, took.as_secs_f64());
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
