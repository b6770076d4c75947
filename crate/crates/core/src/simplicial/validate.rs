//! Functoriality checks for the simplicial action.

use std::collections::BTreeMap;

use crate::rng::SplitMix64;

use super::{Mono, SSet};

#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub ok: bool,
    pub first_violation: Option<String>,
    pub checks: usize,
}

impl ValidationReport {
    fn pass(checks: usize) -> Self {
        ValidationReport {
            ok: true,
            first_violation: None,
            checks,
        }
    }

    fn fail(checks: usize, message: String) -> Self {
        ValidationReport {
            ok: false,
            first_violation: Some(message),
            checks,
        }
    }
}

/// Check the generating identities among faces and degeneracies, plus a
/// batch of random composite pairs.
pub fn validate_sset(x: &SSet, seed: u64, random_composites: usize) -> ValidationReport {
    let mut checks = 0;
    let trunc = x.trunc();

    // d_i d_j = d_{j-1} d_i for i < j.
    for k in 2..=trunc {
        for j in 1..=k {
            for i in 0..j {
                for s in 0..x.level_size(k) {
                    checks += 1;
                    let lhs = x.face(k - 1, i, x.face(k, j, s));
                    let rhs = x.face(k - 1, j - 1, x.face(k, i, s));
                    if lhs != rhs {
                        return ValidationReport::fail(
                            checks,
                            format!(
                                "d_{i} d_{j} = d_{} d_{i} fails at level {k} simplex {}",
                                j - 1,
                                x.level(k)[s]
                            ),
                        );
                    }
                }
            }
        }
    }
    // s_i s_j = s_{j+1} s_i for i <= j.
    for k in 0..trunc.saturating_sub(1) {
        for j in 0..=k {
            for i in 0..=j {
                for s in 0..x.level_size(k) {
                    checks += 1;
                    let lhs = x.degeneracy(k + 1, i, x.degeneracy(k, j, s));
                    let rhs = x.degeneracy(k + 1, j + 1, x.degeneracy(k, i, s));
                    if lhs != rhs {
                        return ValidationReport::fail(
                            checks,
                            format!(
                                "s_{i} s_{j} = s_{} s_{i} fails at level {k} simplex {}",
                                j + 1,
                                x.level(k)[s]
                            ),
                        );
                    }
                }
            }
        }
    }
    // Mixed identities d_i s_j.
    for k in 0..trunc {
        for j in 0..=k {
            for i in 0..=k + 1 {
                for s in 0..x.level_size(k) {
                    checks += 1;
                    let lhs = x.face(k + 1, i, x.degeneracy(k, j, s));
                    let rhs = if i == j || i == j + 1 {
                        s
                    } else if i < j {
                        x.degeneracy(k - 1, j - 1, x.face(k, i, s))
                    } else {
                        x.degeneracy(k - 1, j, x.face(k, i - 1, s))
                    };
                    if lhs != rhs {
                        return ValidationReport::fail(
                            checks,
                            format!(
                                "d_{i} s_{j} identity fails at level {k} simplex {}",
                                x.level(k)[s]
                            ),
                        );
                    }
                }
            }
        }
    }

    // Random composite pairs beyond the generators.
    let mut rng = SplitMix64::new(seed);
    for _ in 0..random_composites {
        let k = rng.below((trunc + 1) as u64) as usize;
        let m = rng.below((trunc + 1) as u64) as usize;
        let l = rng.below((trunc + 1) as u64) as usize;
        let alpha = random_mono(&mut rng, m, k);
        let beta = random_mono(&mut rng, l, m);
        checks += 1;
        if let Some(msg) = check_pair(x, &alpha, &beta) {
            return ValidationReport::fail(checks, msg);
        }
    }
    ValidationReport::pass(checks)
}

/// Full functoriality: the action respects identities and all composable
/// pairs of monotone maps within the truncation.
pub fn validate_sset_full(x: &SSet) -> ValidationReport {
    let trunc = x.trunc();
    let mut checks = 0;
    let mut tables: BTreeMap<Mono, Vec<usize>> = BTreeMap::new();
    for m in 0..=trunc {
        for k in 0..=trunc {
            for alpha in Mono::all(m, k) {
                tables.insert(alpha.clone(), x.act(&alpha));
            }
        }
    }
    for k in 0..=trunc {
        let id = Mono::id(k);
        checks += 1;
        if tables[&id] != (0..x.level_size(k)).collect::<Vec<_>>() {
            return ValidationReport::fail(checks, format!("identity action at level {}", k));
        }
    }
    for (alpha, alpha_act) in &tables {
        for m2 in 0..=trunc {
            for beta in Mono::all(m2, alpha.dom) {
                let beta_act = &tables[&beta];
                let composite = Mono::compose(alpha, &beta);
                let composite_act = &tables[&composite];
                checks += 1;
                for s in 0..x.level_size(alpha.cod) {
                    if composite_act[s] != beta_act[alpha_act[s]] {
                        return ValidationReport::fail(
                            checks,
                            format!(
                                "action of {:?}∘{:?} differs from the composite at level {} simplex {}",
                                alpha.vals,
                                beta.vals,
                                alpha.cod,
                                x.level(alpha.cod)[s]
                            ),
                        );
                    }
                }
            }
        }
    }
    ValidationReport::pass(checks)
}

fn check_pair(x: &SSet, alpha: &Mono, beta: &Mono) -> Option<String> {
    let alpha_act = x.act(alpha);
    let beta_act = x.act(beta);
    let composite_act = x.act(&Mono::compose(alpha, beta));
    for s in 0..x.level_size(alpha.cod) {
        if composite_act[s] != beta_act[alpha_act[s]] {
            return Some(format!(
                "action of {:?}∘{:?} differs from the composite at level {}",
                alpha.vals, beta.vals, alpha.cod
            ));
        }
    }
    None
}

fn random_mono(rng: &mut SplitMix64, m: usize, k: usize) -> Mono {
    let mut vals = Vec::with_capacity(m + 1);
    let mut current = 0usize;
    for i in 0..=m {
        let remaining = m - i;
        // Stay low enough that a monotone completion exists; any value in
        // current..=k works since maps need not be surjective.
        let _ = remaining;
        current += rng.below((k - current + 1) as u64) as usize;
        vals.push(current.min(k));
    }
    Mono::new(m, k, vals)
}
