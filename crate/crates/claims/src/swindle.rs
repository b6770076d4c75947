//! The coproduct swindle category Γ_s, truncated: two chains of objects m₀
//! and n₁ with arrows m₀ -> (m+1)₁, the projection p to [1], its comma
//! categories over 0 and 1, and the reflection ℓ ⊣ r onto the discrete
//! subcategory ω₁.

use std::sync::Arc;

use sdot_core::fincat::{check_adjunction_hom, comma, Cat, CatError, Comma, FinCat, Functor};
use sdot_core::label::Label;

use crate::claim::{Claim, NamedConstruction};

pub struct Swindle {
    pub gamma: Cat,
    /// p: Γ_s -> [1], m_i -> i.
    pub p: Functor,
    pub over_zero: Comma,
    pub over_one: Comma,
    /// Discrete ω₁ truncation with objects 0₁ .. (N+1)₁.
    pub omega1: Cat,
    pub r: Functor,
    /// ℓ(n₁) = n₁ and ℓ(m₀) = (m+1)₁.
    pub ell: Functor,
}

/// Build the truncation with objects 0₀ .. N₀ and 0₁ .. (N+1)₁; ℓ stays
/// total because the codomain extends one step further than ω₀.
pub fn swindle_category(n: usize) -> Result<NamedConstruction<Swindle>, CatError> {
    if n == 0 {
        return Err(CatError::Invalid("swindle truncation needs N >= 1".into()));
    }
    let big = n as i64;
    let mut objects: Vec<Label> = (0..=big).map(|m| Label::isub(m, 0)).collect();
    objects.extend((0..=big + 1).map(|m| Label::isub(m, 1)));
    let covers: Vec<(Label, Label)> = (0..=big)
        .map(|m| (Label::isub(m, 0), Label::isub(m + 1, 1)))
        .collect();
    let gamma: Cat = Arc::new(FinCat::build_poset(objects, &covers)?);

    let one: Cat = Arc::new(FinCat::ordinal(1));
    let p = Functor::from_objects(&gamma, &one, |l| match l {
        Label::Sub(_, side) => (**side).clone(),
        _ => unreachable!("swindle labels are subscripted"),
    })?;

    let over_zero = comma(&p, &Label::Int(0))?;
    let over_one = comma(&p, &Label::Int(1))?;

    let omega1: Cat = Arc::new(FinCat::discrete(
        (0..=big + 1).map(|m| Label::isub(m, 1)).collect(),
    )?);
    let r = Functor::from_objects(&omega1, &gamma, |l| l.clone())?;
    let ell = Functor::from_objects(&gamma, &omega1, |l| match l {
        Label::Sub(base, side) => {
            let m = base.as_int().unwrap();
            if side.as_int() == Some(0) {
                Label::isub(m + 1, 1)
            } else {
                l.clone()
            }
        }
        _ => unreachable!("swindle labels are subscripted"),
    })?;

    let prefix = format!("swindle.N{}", n);
    let mut claims = Vec::new();

    claims.push({
        let cat = &over_zero.cat;
        let discrete = cat.morphism_count() == cat.object_count();
        let anchors_ok = over_zero.anchors.iter().all(
            |&(j, _)| matches!(gamma.object_label(j), Label::Sub(_, s) if s.as_int() == Some(0)),
        );
        Claim::check(
            format!("{}.p0-discrete", prefix),
            format!(
                "comma category (p/0) of the swindle truncation N={} is discrete on ω₀",
                n
            ),
            discrete && anchors_ok && cat.object_count() == n + 1,
            || {
                format!(
                    "(p/0) has {} objects and {} morphisms",
                    cat.object_count(),
                    cat.morphism_count()
                )
            },
        )
    });

    claims.push({
        let proj_iso = over_one.proj.is_isomorphism();
        Claim::check(
            format!("{}.p1-whole", prefix),
            format!(
                "comma category (p/1) of the swindle truncation N={} is the whole category",
                n
            ),
            proj_iso && over_one.cat.object_count() == gamma.object_count(),
            || {
                format!(
                    "(p/1) has {} objects vs {}; projection iso: {}",
                    over_one.cat.object_count(),
                    gamma.object_count(),
                    proj_iso
                )
            },
        )
    });

    claims.push({
        let report = check_adjunction_hom(&ell, &r)?;
        Claim::check(
            format!("{}.adjunction", prefix),
            format!(
                "reflection ℓ ⊣ (ω₁ ⊂ Γ_s) at truncation N={} by the hom criterion",
                n
            ),
            report.passed,
            || report.failures.join("; "),
        )
    });

    Ok(NamedConstruction::new(
        prefix,
        Swindle {
            gamma,
            p,
            over_zero,
            over_one,
            omega1,
            r,
            ell,
        },
        claims,
    ))
}
