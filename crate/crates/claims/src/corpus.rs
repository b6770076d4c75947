//! The verification corpus: every checked claim, run deterministically with
//! optional prefix filtering and a bounded worker pool.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use serde::Serialize;

use sdot_core::fincat::FinCat;
use sdot_core::ordcalc::{
    self, induced_pullback_map, interval_data, maps_to_interval, remark_decomposition, MonotoneMap,
    TotalOrder,
};
use sdot_core::simplicial::{
    cylinder, nerve, path_space, phi_slice, sset_iso, sub2, validate_sset, validate_sset_full,
    Mono, SMap,
};

use crate::claim::{Claim, Verdict};
use crate::detection::detection;
use crate::relative::relative_functors;
use crate::sdot::{sdot_functors, sdot_squares};
use crate::sigma::{pointed_inclusions, sigma_chain};
use crate::swindle::swindle_category;
use crate::xi::cofiber_square_functor;

#[derive(Debug, thiserror::Error)]
pub enum CorpusError {
    #[error("max_n must be at least 2, got {0}")]
    MaxNTooSmall(usize),
    #[error("no claim id matches the filter prefix '{0}'")]
    UnknownFilter(String),
}

#[derive(Clone, Debug)]
pub struct CorpusOptions {
    pub max_n: usize,
    pub filter: Option<String>,
    pub seed: u64,
    pub jobs: usize,
}

impl Default for CorpusOptions {
    fn default() -> Self {
        CorpusOptions {
            max_n: 4,
            filter: None,
            seed: 0x5d07,
            jobs: 1,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportClaim {
    pub id: String,
    pub location: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub claims: Vec<ReportClaim>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}

struct Task {
    prefix: String,
    run: Box<dyn Fn() -> Vec<Claim> + Send + Sync>,
}

fn task(prefix: impl Into<String>, run: impl Fn() -> Vec<Claim> + Send + Sync + 'static) -> Task {
    Task {
        prefix: prefix.into(),
        run: Box::new(run),
    }
}

fn build_tasks(max_n: usize, seed: u64) -> Vec<Task> {
    let mut tasks = Vec::new();
    tasks.push(task("sigma-chain", || sigma_chain().claims));
    tasks.push(task("pointed-inclusions", || pointed_inclusions().claims));
    tasks.push(task("cofiber-square", || cofiber_square_functor().claims));
    for n in 2..=max_n {
        tasks.push(task(format!("sdot-functors.n{}", n), move || {
            sdot_functors(n).expect("n >= 1").claims
        }));
    }
    for n in 2..=max_n {
        tasks.push(task(format!("detection.n{}", n), move || {
            let mut claims = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    claims.extend(detection(n, i, j).expect("valid indices").claims);
                }
            }
            claims
        }));
    }
    for n in 2..=max_n {
        tasks.push(task(format!("relative.n{}", n), move || {
            relative_functors(n).expect("n >= 1").claims
        }));
    }
    for n in 2..=max_n {
        tasks.push(task(format!("sdot-squares.n{}", n), move || {
            sdot_squares(n).expect("n >= 2").claims
        }));
    }
    let mut swindle_sizes = vec![max_n];
    if max_n != 20 {
        swindle_sizes.push(20);
    }
    for n in swindle_sizes {
        tasks.push(task(format!("swindle.N{}", n), move || {
            swindle_category(n).expect("N >= 1").claims
        }));
    }
    tasks.push(task("ordcalc.decomposition", || decomposition_claims(8)));
    tasks.push(task("ordcalc.interval", || interval_claims(8)));
    tasks.push(task("ordcalc.functoriality", || {
        vec![functoriality_claim(5)]
    }));
    tasks.push(task("ordcalc.concat", || vec![concat_claim(5)]));
    for m in 0..=3usize {
        tasks.push(task(format!("cylinder-ends.m{}", m), move || {
            cylinder_end_claims(m, 3)
        }));
    }
    for m in 0..=3usize {
        tasks.push(task(format!("path-space.m{}", m), move || {
            path_space_claims(m, 3)
        }));
    }
    tasks.push(task("validity.nerve", move || {
        (0..=3).map(|m| nerve_validity_claim(m, 4, seed)).collect()
    }));
    tasks.push(task("validity.sub2", move || {
        (0..=3).map(|m| sub2_validity_claim(m, 4, seed)).collect()
    }));
    tasks.push(task("validity.path", move || {
        (0..=3).map(|m| path_validity_claim(m, 4, seed)).collect()
    }));
    tasks.push(task("validity.cylinder", move || {
        (0..=3)
            .map(|m| cylinder_validity_claim(m, 4, seed))
            .collect()
    }));
    tasks
}

pub fn verify_corpus(opts: &CorpusOptions) -> Result<VerificationReport, CorpusError> {
    if opts.max_n < 2 {
        return Err(CorpusError::MaxNTooSmall(opts.max_n));
    }
    let tasks = build_tasks(opts.max_n, opts.seed);
    let selected: Vec<&Task> = tasks
        .iter()
        .filter(|t| match &opts.filter {
            None => true,
            Some(f) => t.prefix.starts_with(f.as_str()) || f.starts_with(&t.prefix),
        })
        .collect();

    let slots: Mutex<Vec<Option<Vec<ReportClaim>>>> = Mutex::new(vec![None; selected.len()]);
    let next = AtomicUsize::new(0);
    let workers = opts.jobs.max(1).min(selected.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let index = next.fetch_add(1, Ordering::SeqCst);
                if index >= selected.len() {
                    break;
                }
                let start = Instant::now();
                let claims = (selected[index].run)();
                let elapsed_ms = start.elapsed().as_millis() as u64;
                let timed: Vec<ReportClaim> = claims
                    .into_iter()
                    .map(|c| ReportClaim {
                        id: c.id,
                        location: c.location,
                        verdict: c.verdict,
                        witness: c.witness,
                        elapsed_ms,
                    })
                    .collect();
                slots.lock().unwrap()[index] = Some(timed);
            });
        }
    });

    let mut claims: Vec<ReportClaim> = slots
        .into_inner()
        .unwrap()
        .into_iter()
        .flat_map(|slot| slot.expect("every task ran"))
        .collect();
    if let Some(f) = &opts.filter {
        claims.retain(|c| c.id.starts_with(f.as_str()));
        if claims.is_empty() {
            return Err(CorpusError::UnknownFilter(f.clone()));
        }
    }
    let passed = claims.iter().filter(|c| c.verdict == Verdict::Pass).count();
    let summary = Summary {
        total: claims.len(),
        passed,
        failed: claims.len() - passed,
    };
    Ok(VerificationReport { claims, summary })
}

// ---------------------------------------------------------------------
// Ordinal-calculus suite
// ---------------------------------------------------------------------

fn decomposition_claims(max_dim: usize) -> Vec<Claim> {
    (0..=max_dim)
        .map(|n| {
            let mut witness = None;
            for phi in maps_to_interval(n) {
                if let Err(msg) = remark_decomposition(&phi) {
                    witness = Some(msg);
                    break;
                }
            }
            Claim::from_result(
                format!("ordcalc.decomposition.n{}", n),
                format!(
                    "φ⁻¹(s) = φ⁻¹(0) ∗ φ⁻¹(1) ∗ φ⁻¹(1) for all {} maps φ: [{}] → [1]",
                    n + 2,
                    n
                ),
                witness.map_or(Ok(()), Err),
            )
        })
        .collect()
}

fn interval_claims(max_dim: usize) -> Vec<Claim> {
    (0..=max_dim)
        .map(|n| {
            let outcome = (|| -> Result<(), String> {
                for phi in maps_to_interval(n) {
                    let data = interval_data(&phi).map_err(|e| e.to_string())?;
                    for (a, &(d, e)) in data.zeta.iter().enumerate() {
                        if d > e {
                            return Err(format!(
                                "ζ fails at element {} of φ={:?}",
                                a,
                                phi.values()
                            ));
                        }
                    }
                    for a in 0..phi.source().len() {
                        if phi.value(a) == 0 && data.d.value(a) != data.e.value(a) {
                            return Err(format!("d ≠ e on the 0-fiber of φ={:?}", phi.values()));
                        }
                        for b in 0..phi.source().len() {
                            if phi.value(a) == 1
                                && phi.value(b) == 1
                                && data.d.value(b) >= data.e.value(a)
                            {
                                return Err(format!(
                                    "d-image not below e-image on the 1-fiber of φ={:?}",
                                    phi.values()
                                ));
                            }
                        }
                    }
                }
                Ok(())
            })();
            Claim::from_result(
                format!("ordcalc.interval.n{}", n),
                format!("d, e monotone with d ≤ e for all φ: [{}] → [1]", n),
                outcome,
            )
        })
        .collect()
}

fn functoriality_claim(max_size: usize) -> Claim {
    let outcome = (|| -> Result<(), String> {
        for a_len in 1..=max_size {
            for b_len in 1..=max_size {
                let a = TotalOrder::ordinal(a_len - 1);
                let b = TotalOrder::ordinal(b_len - 1);
                for phi in maps_to_interval(a_len - 1) {
                    for mono in Mono::all(b_len - 1, a_len - 1) {
                        let psi = MonotoneMap::from_indices(b.clone(), a.clone(), mono.vals)
                            .map_err(|e| e.to_string())?;
                        let induced =
                            induced_pullback_map(&phi, &psi).map_err(|e| e.to_string())?;
                        let phi_psi =
                            MonotoneMap::compose(&phi, &psi).map_err(|e| e.to_string())?;
                        let da = interval_data(&phi).map_err(|e| e.to_string())?;
                        let db = interval_data(&phi_psi).map_err(|e| e.to_string())?;
                        for (name, fa, fb) in [("d", &da.d, &db.d), ("e", &da.e, &db.e)] {
                            let lhs =
                                MonotoneMap::compose(&induced, fb).map_err(|e| e.to_string())?;
                            let rhs = MonotoneMap::compose(fa, &psi).map_err(|e| e.to_string())?;
                            if lhs.values() != rhs.values() {
                                return Err(format!(
                                    "{} does not commute with ψ'={:?} under φ={:?}",
                                    name,
                                    psi.values(),
                                    phi.values()
                                ));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    })();
    Claim::from_result(
        "ordcalc.functoriality",
        format!(
            "ψ': (φψ)⁻¹(s) → φ⁻¹(s) commutes with d and e for |A|, |B| ≤ {}",
            max_size
        ),
        outcome,
    )
}

fn concat_claim(max_size: usize) -> Claim {
    let outcome = (|| -> Result<(), String> {
        for a_len in 1..=max_size {
            for b_len in 1..=max_size {
                let a = TotalOrder::ordinal(a_len - 1);
                let b = TotalOrder::ordinal(b_len - 1);
                let ab = ordcalc::concat(&a, &b).map_err(|e| e.to_string())?;
                if ab.len() != a_len + b_len {
                    return Err(format!("|A∗B| = {} ≠ {}", ab.len(), a_len + b_len));
                }
            }
            let a = TotalOrder::ordinal(a_len - 1);
            let (i0, i1) = ordcalc::block_inclusions(&a).map_err(|e| e.to_string())?;
            let mut hit = vec![false; 2 * a_len];
            for x in 0..a_len {
                hit[i0.value(x)] = true;
                hit[i1.value(x)] = true;
                for y in 0..a_len {
                    if i0.value(x) >= i1.value(y) {
                        return Err("i₀ image not entirely below i₁ image".into());
                    }
                }
            }
            if !hit.iter().all(|&h| h) {
                return Err("block inclusions are not jointly surjective".into());
            }
        }
        Ok(())
    })();
    Claim::from_result(
        "ordcalc.concat",
        format!(
            "|A∗B| = |A| + |B| with ordered jointly surjective blocks, sizes ≤ {}",
            max_size
        ),
        outcome,
    )
}

// ---------------------------------------------------------------------
// Simplicial suites
// ---------------------------------------------------------------------

fn cylinder_end_claims(m: usize, trunc: usize) -> Vec<Claim> {
    let x = std::sync::Arc::new(nerve(&FinCat::ordinal(m), 2 * trunc + 1));
    let cyl = cylinder(&x, trunc).expect("input truncation suffices");
    let mut claims = Vec::new();
    for (value, id_part, expected) in [
        (0usize, "phi0", cyl.base.clone()),
        (1usize, "phi1", cyl.sub2x.clone()),
    ] {
        let outcome =
            phi_slice(&cyl, value).map_err(|e| e.to_string()).and_then(
                |(slice, _)| match sset_iso(&slice, &expected, None).map_err(|e| e.to_string())? {
                    Some(_) => Ok(()),
                    None => Err("no isomorphism found".into()),
                },
            );
        claims.push(Claim::from_result(
            format!("cylinder-ends.m{}.{}", m, id_part),
            format!(
                "cylinder end φ = {} over the nerve of [{}] at truncation {}",
                value, m, trunc
            ),
            outcome,
        ));
    }
    claims
}

fn path_space_claims(m: usize, trunc: usize) -> Vec<Claim> {
    let x = std::sync::Arc::new(nerve(&FinCat::ordinal(m), trunc + 1));
    let p = path_space(&x, trunc).expect("input truncation suffices");
    let mut claims = Vec::new();
    claims.push(Claim::check(
        format!("path-space.m{}.level0", m),
        format!("(PY)₀ = Y₁ as labelled sets for Y the nerve of [{}]", m),
        p.py.level(0) == x.level(1),
        || "label sets differ".to_string(),
    ));
    claims.push({
        let outcome = (|| -> Result<(), String> {
            let comp = SMap::compose(&p.d0_proj, &p.vertex_incl).map_err(|e| e.to_string())?;
            for k in 0..=trunc {
                let const_one = Mono::new(k, 1, vec![1; k + 1]);
                let expected = x.act(&const_one);
                for y in 0..x.level_size(1) {
                    if comp.apply(k, y) != expected[y] {
                        return Err(format!("mismatch at level {} on Y₁ element {}", k, y));
                    }
                }
            }
            Ok(())
        })();
        Claim::from_result(
            format!("path-space.m{}.composite", m),
            format!(
                "projection after vertex inclusion degenerates at the target vertex, Y = nerve of [{}]",
                m
            ),
            outcome,
        )
    });
    claims
}

fn validity_outcome(x: &sdot_core::simplicial::SSet, seed: u64) -> Result<(), String> {
    let quick = validate_sset(x, seed, 200);
    if !quick.ok {
        return Err(quick.first_violation.unwrap_or_default());
    }
    let full = validate_sset_full(x);
    if !full.ok {
        return Err(full.first_violation.unwrap_or_default());
    }
    Ok(())
}

fn nerve_validity_claim(m: usize, trunc: usize, seed: u64) -> Claim {
    let x = nerve(&FinCat::ordinal(m), trunc);
    Claim::from_result(
        format!("validity.nerve.m{}", m),
        format!(
            "nerve of [{}] at truncation {}: full functoriality",
            m, trunc
        ),
        validity_outcome(&x, seed),
    )
}

fn sub2_validity_claim(m: usize, trunc: usize, seed: u64) -> Claim {
    let x = nerve(&FinCat::ordinal(m), 2 * trunc + 1);
    let s = sub2(&x, trunc).expect("input truncation suffices");
    Claim::from_result(
        format!("validity.sub2.m{}", m),
        format!(
            "subdivision of the nerve of [{}] at truncation {}: full functoriality",
            m, trunc
        ),
        validity_outcome(&s, seed),
    )
}

fn path_validity_claim(m: usize, trunc: usize, seed: u64) -> Claim {
    let x = std::sync::Arc::new(nerve(&FinCat::ordinal(m), trunc + 1));
    let p = path_space(&x, trunc).expect("input truncation suffices");
    Claim::from_result(
        format!("validity.path.m{}", m),
        format!(
            "path space of the nerve of [{}] at truncation {}: full functoriality",
            m, trunc
        ),
        validity_outcome(&p.py, seed),
    )
}

fn cylinder_validity_claim(m: usize, trunc: usize, seed: u64) -> Claim {
    let x = std::sync::Arc::new(nerve(&FinCat::ordinal(m), 2 * trunc + 1));
    let c = cylinder(&x, trunc).expect("input truncation suffices");
    Claim::from_result(
        format!("validity.cylinder.m{}", m),
        format!(
            "cylinder over the nerve of [{}] at truncation {}: full functoriality",
            m, trunc
        ),
        validity_outcome(&c.ix, seed),
    )
}
