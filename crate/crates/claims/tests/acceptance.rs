//! Acceptance suite: one criterion per section, one printed line each.
//!
//! The Smith-normal-form oracle here is written independently of the library
//! implementation: a plain first-nonzero-pivot elementary reduction with a
//! final gcd/lcm condensation, cross-checked against determinantal divisors.

#![allow(clippy::needless_range_loop)]

use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use sdot_claims::corpus::{verify_corpus, CorpusOptions};
use sdot_claims::sdot::{brute_force_rectangles, enumerate_rectangles};
use sdot_core::fincat::FinCat;
use sdot_core::grothendieck::{k0_group, smith_normal_form, IntMat, K0Presentation};
use sdot_core::label::Label;
use sdot_core::ordcalc::{interval_data, maps_to_interval, remark_decomposition};
use sdot_core::rng::SplitMix64;
use sdot_core::simplicial::{
    cylinder, nerve, path_space, phi_slice, sset_iso, sub2, validate_sset_full, Mono, SMap,
};

fn criterion(
    results: &mut Vec<(String, Result<(), String>)>,
    name: &str,
    outcome: Result<(), String>,
) {
    match &outcome {
        Ok(()) => println!("PASS  {}", name),
        Err(witness) => println!("FAIL  {}  ({})", name, witness),
    }
    results.push((name.to_string(), outcome));
}

#[test]
fn acceptance() {
    let mut results = Vec::new();

    criterion(
        &mut results,
        "1. claim corpus complete at max_n = 6 within 30s",
        corpus_criterion(),
    );
    criterion(
        &mut results,
        "2. ordinal-calculus suite exhaustive to [8]",
        ordinal_criterion(),
    );
    criterion(
        &mut results,
        "3. cylinder ends isomorphic for nerves of [0..3] within 10s",
        cylinder_criterion(),
    );
    criterion(
        &mut results,
        "4. simplicial outputs fully functorial at truncation 4",
        validity_criterion(),
    );
    criterion(
        &mut results,
        "5. square enumeration counts with brute-force cross-check",
        squares_criterion(),
    );
    criterion(
        &mut results,
        "6. Smith normal form against independent oracle, 100 cases",
        snf_criterion(),
    );
    criterion(
        &mut results,
        "7. K0 calculator: free ranks, swindle, permutation invariance",
        k0_criterion(),
    );
    criterion(
        &mut results,
        "8. path-space contract for nerves of [0..3]",
        path_criterion(),
    );

    let failures: Vec<String> = results
        .iter()
        .filter_map(|(name, r)| r.as_ref().err().map(|e| format!("{}: {}", name, e)))
        .collect();
    assert!(
        failures.is_empty(),
        "failed criteria:\n{}",
        failures.join("\n")
    );
}

// -----------------------------------------------------------------------
// 1. Corpus
// -----------------------------------------------------------------------

fn corpus_criterion() -> Result<(), String> {
    let start = Instant::now();
    let report = verify_corpus(&CorpusOptions {
        max_n: 6,
        ..Default::default()
    })
    .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if !report.all_passed() {
        let failing: Vec<&str> = report
            .claims
            .iter()
            .filter(|c| c.witness.is_some())
            .map(|c| c.id.as_str())
            .collect();
        return Err(format!("failing claims: {}", failing.join(", ")));
    }
    if elapsed.as_secs() >= 30 {
        return Err(format!("corpus took {:?}", elapsed));
    }
    let has = |prefix: &str| report.claims.iter().any(|c| c.id.starts_with(prefix));
    for required in [
        "sigma-chain.i-cosieve",
        "sigma-chain.j-sieve",
        "pointed-inclusions.i1-sieve",
        "pointed-inclusions.t-cosieve",
        "pointed-inclusions.s-sieve",
        "cofiber-square.printed-table",
        "relative.n6.p-functorial",
        "relative.n2.q-values",
        "swindle.N20.adjunction",
        "swindle.N6.p0-discrete",
    ] {
        if !has(required) {
            return Err(format!("claim family {} missing from the corpus", required));
        }
    }
    let detection_count = report
        .claims
        .iter()
        .filter(|c| c.id.starts_with("detection."))
        .count();
    // For each 2 <= n <= 6 all pairs 0 <= i < j <= n-1, three claims each.
    let expected: usize = (2..=6).map(|n| n * (n - 1) / 2 * 3).sum();
    if detection_count != expected {
        return Err(format!(
            "expected {} detection claims, found {}",
            expected, detection_count
        ));
    }
    Ok(())
}

// -----------------------------------------------------------------------
// 2. Ordinal calculus
// -----------------------------------------------------------------------

fn ordinal_criterion() -> Result<(), String> {
    for n in 0..=8 {
        let phis = maps_to_interval(n);
        if phis.len() != n + 2 {
            return Err(format!("[{}] → [1] should have {} maps", n, n + 2));
        }
        for phi in phis {
            remark_decomposition(&phi)?;
            let data = interval_data(&phi).map_err(|e| e.to_string())?;
            for &(d, e) in &data.zeta {
                if d > e {
                    return Err(format!("d ≤ e fails for φ = {:?}", phi.values()));
                }
            }
        }
    }
    Ok(())
}

// -----------------------------------------------------------------------
// 3. Cylinder ends
// -----------------------------------------------------------------------

fn cylinder_criterion() -> Result<(), String> {
    let start = Instant::now();
    for m in 0..=3usize {
        let x = Arc::new(nerve(&FinCat::ordinal(m), 7));
        let c = cylinder(&x, 3).map_err(|e| e.to_string())?;
        let (slice0, _) = phi_slice(&c, 0).map_err(|e| e.to_string())?;
        if sset_iso(&slice0, &c.base, None)
            .map_err(|e| e.to_string())?
            .is_none()
        {
            return Err(format!("φ=0 slice of the cylinder over N[{}] is not X", m));
        }
        let (slice1, _) = phi_slice(&c, 1).map_err(|e| e.to_string())?;
        if sset_iso(&slice1, &c.sub2x, None)
            .map_err(|e| e.to_string())?
            .is_none()
        {
            return Err(format!(
                "φ=1 slice of the cylinder over N[{}] is not sub₂X",
                m
            ));
        }
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs() >= 10 {
        return Err(format!("cylinder-end checks took {:?}", elapsed));
    }
    Ok(())
}

// -----------------------------------------------------------------------
// 4. Simplicial validity
// -----------------------------------------------------------------------

fn validity_criterion() -> Result<(), String> {
    let check = |name: &str, x: &sdot_core::simplicial::SSet| -> Result<(), String> {
        let report = validate_sset_full(x);
        if report.ok {
            Ok(())
        } else {
            Err(format!(
                "{}: {}",
                name,
                report.first_violation.unwrap_or_default()
            ))
        }
    };
    for m in 0..=3usize {
        let base = nerve(&FinCat::ordinal(m), 4);
        check(&format!("nerve[{}]", m), &base)?;
        let deep = Arc::new(nerve(&FinCat::ordinal(m), 9));
        check(
            &format!("sub2(nerve[{}])", m),
            &sub2(&deep, 4).map_err(|e| e.to_string())?,
        )?;
        let tall = Arc::new(nerve(&FinCat::ordinal(m), 5));
        check(
            &format!("path(nerve[{}])", m),
            &path_space(&tall, 4).map_err(|e| e.to_string())?.py,
        )?;
        check(
            &format!("cylinder(nerve[{}])", m),
            &cylinder(&deep, 4).map_err(|e| e.to_string())?.ix,
        )?;
    }
    Ok(())
}

// -----------------------------------------------------------------------
// 5. Square enumeration
// -----------------------------------------------------------------------

fn squares_criterion() -> Result<(), String> {
    let pinned = [(2usize, 1usize, 1usize), (3, 5, 4)];
    for (n, total, anchored) in pinned {
        let rects = enumerate_rectangles(n);
        let diag = rects.iter().filter(|r| r.is_diagonal_anchored()).count();
        if rects.len() != total || diag != anchored {
            return Err(format!(
                "n={}: formula gives ({}, {}), pinned ({}, {})",
                n,
                rects.len(),
                diag,
                total,
                anchored
            ));
        }
        let (brute_total, brute_anchored) = brute_force_rectangles(n);
        if brute_total != total || brute_anchored != anchored {
            return Err(format!(
                "n={}: brute force gives ({}, {})",
                n, brute_total, brute_anchored
            ));
        }
    }
    Ok(())
}

// -----------------------------------------------------------------------
// 6. Smith normal form oracle
// -----------------------------------------------------------------------

/// Independent elementary reduction: first-nonzero pivoting, no transform
/// tracking, divisibility fixed afterwards by gcd/lcm condensation.
fn oracle_invariant_factors(entries: &[Vec<i64>]) -> Vec<BigInt> {
    let rows = entries.len();
    let cols = entries[0].len();
    let mut m: Vec<Vec<BigInt>> = entries
        .iter()
        .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    for k in 0..rows.min(cols) {
        'reduce: loop {
            // First nonzero entry in the trailing block, row-major.
            let mut pivot = None;
            'scan: for i in k..rows {
                for j in k..cols {
                    if !m[i][j].is_zero() {
                        pivot = Some((i, j));
                        break 'scan;
                    }
                }
            }
            let (pi, pj) = match pivot {
                None => break 'reduce,
                Some(p) => p,
            };
            m.swap(k, pi);
            for row in m.iter_mut() {
                row.swap(k, pj);
            }
            let mut dirty = false;
            for i in k + 1..rows {
                if !m[i][k].is_zero() {
                    let q = m[i][k].div_floor(&m[k][k]);
                    for j in 0..cols {
                        let v = &m[i][j] - &q * &m[k][j];
                        m[i][j] = v;
                    }
                    if !m[i][k].is_zero() {
                        m.swap(k, i);
                        dirty = true;
                    }
                }
            }
            for j in k + 1..cols {
                if !m[k][j].is_zero() {
                    let q = m[k][j].div_floor(&m[k][k]);
                    for i in 0..rows {
                        let v = &m[i][j] - &q * &m[i][k];
                        m[i][j] = v;
                    }
                    if !m[k][j].is_zero() {
                        for row in m.iter_mut() {
                            row.swap(k, j);
                        }
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break 'reduce;
            }
        }
    }
    let mut factors: Vec<BigInt> = (0..rows.min(cols))
        .map(|i| m[i][i].abs())
        .filter(|d| !d.is_zero())
        .collect();
    // gcd/lcm condensation into a divisibility chain.
    loop {
        let mut stable = true;
        for i in 0..factors.len() {
            for j in i + 1..factors.len() {
                let g = factors[i].gcd(&factors[j]);
                let l = factors[i].lcm(&factors[j]);
                if factors[i] != g {
                    factors[i] = g;
                    factors[j] = l;
                    stable = false;
                }
            }
        }
        if stable {
            break;
        }
    }
    factors
}

/// Second cross-check: invariant factors via determinantal divisors.
fn determinantal_factors(entries: &[Vec<i64>]) -> Vec<BigInt> {
    let rows = entries.len();
    let cols = entries[0].len();
    let size = rows.min(cols);
    let mut divisors = vec![BigInt::one()];
    for k in 1..=size {
        let mut g = BigInt::zero();
        for row_set in combinations(rows, k) {
            for col_set in combinations(cols, k) {
                let minor: Vec<Vec<i64>> = row_set
                    .iter()
                    .map(|&i| col_set.iter().map(|&j| entries[i][j]).collect())
                    .collect();
                let d = det_i64(&minor);
                g = g.gcd(&BigInt::from(d));
            }
        }
        divisors.push(g);
    }
    let mut factors = Vec::new();
    for k in 1..=size {
        if divisors[k].is_zero() {
            break;
        }
        factors.push(&divisors[k] / &divisors[k - 1]);
    }
    factors
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

fn det_i64(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    match n {
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        _ => {
            let mut total = 0i64;
            for j in 0..n {
                let minor: Vec<Vec<i64>> = (1..n)
                    .map(|i| (0..n).filter(|&c| c != j).map(|c| m[i][c]).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                total += sign * m[0][j] * det_i64(&minor);
            }
            total
        }
    }
}

fn snf_criterion() -> Result<(), String> {
    let mut rng = SplitMix64::new(0xACCE97);
    for case in 0..100 {
        let entries: Vec<Vec<i64>> = (0..4)
            .map(|_| (0..4).map(|_| rng.range_i64(-5, 5)).collect())
            .collect();
        let m = IntMat::from_rows(&entries);
        let snf = smith_normal_form(&m);

        if snf.u.mul(&m).mul(&snf.v) != snf.s {
            return Err(format!("case {}: U·M·V ≠ S for {:?}", case, entries));
        }
        if snf.u.det().abs() != BigInt::one() || snf.v.det().abs() != BigInt::one() {
            return Err(format!("case {}: transform not unimodular", case));
        }
        let diag = snf.s.diagonal();
        for i in 0..diag.len() {
            for j in 0..diag.len() {
                if i != j && !snf.s.get(i, j).is_zero() {
                    return Err(format!("case {}: S not diagonal", case));
                }
            }
        }
        for w in diag.windows(2) {
            if !w[0].is_zero() && !w[1].mod_floor(&w[0]).is_zero() {
                return Err(format!("case {}: divisibility chain broken", case));
            }
            if w[0].is_zero() && !w[1].is_zero() {
                return Err(format!("case {}: zero before nonzero factor", case));
            }
        }

        let ours = snf.invariant_factors();
        let oracle = oracle_invariant_factors(&entries);
        if ours != oracle {
            return Err(format!(
                "case {}: library {:?} vs reduction oracle {:?} for {:?}",
                case, ours, oracle, entries
            ));
        }
        let determinantal = determinantal_factors(&entries);
        if ours != determinantal {
            return Err(format!(
                "case {}: library {:?} vs determinantal divisors {:?}",
                case, ours, determinantal
            ));
        }
    }
    Ok(())
}

// -----------------------------------------------------------------------
// 7. K0
// -----------------------------------------------------------------------

fn k0_criterion() -> Result<(), String> {
    for g in 1..=10usize {
        let pres = K0Presentation {
            generators: (0..g as i64).map(Label::Int).collect(),
            ..Default::default()
        };
        let group = k0_group(&pres).map_err(|e| e.to_string())?;
        if group.free_rank != g || !group.invariant_factors.is_empty() {
            return Err(format!("free case g={} gave rank {}", g, group.free_rank));
        }
    }

    let swindle = K0Presentation {
        generators: vec![Label::name("x")],
        cofiber: vec![(Label::name("x"), Label::name("x"), Label::name("x"))],
        ..Default::default()
    };
    let group = k0_group(&swindle).map_err(|e| e.to_string())?;
    if !group.is_trivial() {
        return Err("swindle presentation is not trivial".into());
    }

    let base = K0Presentation {
        generators: vec![
            Label::name("a"),
            Label::name("b"),
            Label::name("c"),
            Label::name("d"),
            Label::name("e"),
        ],
        cofiber: vec![
            (Label::name("a"), Label::name("b"), Label::name("c")),
            (Label::name("c"), Label::name("d"), Label::name("c")),
            (Label::name("b"), Label::name("e"), Label::name("b")),
        ],
        iso: vec![(Label::name("d"), Label::name("e"))],
        zero: vec![Label::name("e")],
    };
    let reference = k0_group(&base).map_err(|e| e.to_string())?;
    let mut rng = SplitMix64::new(0xD15C0);
    for round in 0..20 {
        let mut generators = base.generators.clone();
        rng.shuffle(&mut generators);
        let mut cofiber = base.cofiber.clone();
        rng.shuffle(&mut cofiber);
        let mut iso = base.iso.clone();
        rng.shuffle(&mut iso);
        let shuffled = K0Presentation {
            generators,
            cofiber,
            iso,
            zero: base.zero.clone(),
        };
        let group = k0_group(&shuffled).map_err(|e| e.to_string())?;
        if group.invariant_factors != reference.invariant_factors
            || group.free_rank != reference.free_rank
        {
            return Err(format!(
                "round {}: invariant factors changed under permutation",
                round
            ));
        }
    }
    Ok(())
}

// -----------------------------------------------------------------------
// 8. Path space
// -----------------------------------------------------------------------

fn path_criterion() -> Result<(), String> {
    for m in 0..=3usize {
        let x = Arc::new(nerve(&FinCat::ordinal(m), 4));
        let p = path_space(&x, 3).map_err(|e| e.to_string())?;
        if p.py.level(0) != x.level(1) {
            return Err(format!("(PY)₀ ≠ Y₁ for the nerve of [{}]", m));
        }
        let comp = SMap::compose(&p.d0_proj, &p.vertex_incl).map_err(|e| e.to_string())?;
        for k in 0..=3usize {
            let const_one = Mono::new(k, 1, vec![1; k + 1]);
            let expected = x.act(&const_one);
            for y in 0..x.level_size(1) {
                if comp.apply(k, y) != expected[y] {
                    return Err(format!(
                        "composite differs from the degenerate-at-target map at level {} for [{}]",
                        k, m
                    ));
                }
            }
        }
    }
    Ok(())
}
