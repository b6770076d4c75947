//! The inclusion chain used to build the coproduct section
//! e⊔e -> ⌐ -> □ -> J -> [1]×[2], with its sieve/cosieve verdicts, plus the
//! three pointed inclusions i₁: [1] -> ⌐, t: e -> [1], s: [1] -> Ar[1].

use std::sync::Arc;

use sdot_core::fincat::{classify_inclusion, full_subcategory, Cat, FinCat, Functor};
use sdot_core::label::Label;

use crate::claim::{Claim, NamedConstruction};

pub struct SigmaChain {
    pub two_points: Cat,
    pub corner: Cat,
    pub square: Cat,
    pub j_domain: Cat,
    pub prism: Cat,
    /// e⊔e -> ⌐ into (1,0) and (0,1).
    pub i: Functor,
    pub i_corner: Functor,
    pub i_square: Functor,
    pub j: Functor,
    /// Bottom-square inclusion □ -> [1]×[2].
    pub r: Functor,
}

fn corner_objects() -> Vec<Label> {
    vec![Label::ipair(0, 0), Label::ipair(1, 0), Label::ipair(0, 1)]
}

pub fn sigma_chain() -> NamedConstruction<SigmaChain> {
    let square: Cat = Arc::new(FinCat::ordinal(1).product(&FinCat::ordinal(1)));
    let (corner, i_corner) = full_subcategory(&square, &corner_objects()).expect("corner exists");
    let two_points: Cat =
        Arc::new(FinCat::discrete(vec![Label::Int(0), Label::Int(1)]).expect("two points"));
    let i = Functor::from_objects(&two_points, &corner, |l| match l.as_int().unwrap() {
        0 => Label::ipair(1, 0),
        _ => Label::ipair(0, 1),
    })
    .expect("i is a functor");

    let prism: Cat = Arc::new(FinCat::ordinal(1).product(&FinCat::ordinal(2)));
    let j_objects: Vec<Label> = prism
        .objects()
        .iter()
        .filter(|l| **l != Label::ipair(1, 2))
        .cloned()
        .collect();
    let (j_domain, j) = full_subcategory(&prism, &j_objects).expect("J exists");
    let i_square =
        Functor::from_objects(&square, &j_domain, |l| l.clone()).expect("i_square is a functor");
    let r = Functor::from_objects(&square, &prism, |l| {
        let coords = l.as_int_tuple().unwrap();
        Label::ipair(coords[0], coords[1] + 1)
    })
    .expect("r is a functor");

    let claims = vec![
        {
            let class = classify_inclusion(&i);
            Claim::check(
                "sigma-chain.i-cosieve",
                "coproduct section chain: i: e⊔e → ⌐ hits (1,0) and (0,1)",
                class.cosieve && !class.sieve,
                || format!("classification was {:?}", class),
            )
        },
        {
            let class = classify_inclusion(&i_corner);
            Claim::check(
                "sigma-chain.i-corner-sieve",
                "coproduct section chain: ⌐ → □",
                class.sieve,
                || format!("classification was {:?}", class),
            )
        },
        {
            let class = classify_inclusion(&i_square);
            Claim::check(
                "sigma-chain.i-square-sieve",
                "coproduct section chain: □ → J (top square)",
                class.sieve,
                || format!("classification was {:?}", class),
            )
        },
        {
            let class = classify_inclusion(&j);
            Claim::check(
                "sigma-chain.j-sieve",
                "coproduct section chain: J → [1]×[2]",
                class.sieve,
                || format!("classification was {:?}", class),
            )
        },
        {
            let expected_image = [
                Label::ipair(0, 1),
                Label::ipair(1, 1),
                Label::ipair(0, 2),
                Label::ipair(1, 2),
            ];
            let image_ok =
                (0..square.object_count()).all(|x| expected_image.contains(r.obj_image_label(x)));
            Claim::check(
                "sigma-chain.r-fully-faithful",
                "coproduct section chain: r: □ → [1]×[2] is the bottom square",
                r.is_fully_faithful() && r.is_injective_on_objects() && image_ok,
                || "r is not a fully faithful bottom-square inclusion".to_string(),
            )
        },
    ];

    NamedConstruction::new(
        "sigma-chain",
        SigmaChain {
            two_points,
            corner,
            square,
            j_domain,
            prism,
            i,
            i_corner,
            i_square,
            j,
            r,
        },
        claims,
    )
}

pub struct PointedInclusions {
    pub i1: Functor,
    pub t: Functor,
    pub s: Functor,
}

/// The three inclusions whose extension-by-zero behavior drives the cone
/// construction and the path-space comparison: [1] -> ⌐ (top edge, a sieve),
/// e -> [1] at the target (a cosieve), and [1] -> Ar[1] as (0,0) -> (0,1)
/// (a sieve).
pub fn pointed_inclusions() -> NamedConstruction<PointedInclusions> {
    let square: Cat = Arc::new(FinCat::ordinal(1).product(&FinCat::ordinal(1)));
    let (corner, _) = full_subcategory(&square, &corner_objects()).expect("corner exists");
    let one: Cat = Arc::new(FinCat::ordinal(1));
    let e: Cat = Arc::new(FinCat::terminal());
    let ar1: Cat = Arc::new(FinCat::ordinal(1).arrow_category());

    let i1 = Functor::from_objects(&one, &corner, |l| match l.as_int().unwrap() {
        0 => Label::ipair(0, 0),
        _ => Label::ipair(1, 0),
    })
    .expect("i1 is a functor");
    let t = Functor::from_terminal(&e, &one, &Label::Int(1)).expect("t is a functor");
    let s = Functor::from_objects(&one, &ar1, |l| match l.as_int().unwrap() {
        0 => Label::ipair(0, 0),
        _ => Label::ipair(0, 1),
    })
    .expect("s is a functor");

    let claims = vec![
        {
            let class = classify_inclusion(&i1);
            Claim::check(
                "pointed-inclusions.i1-sieve",
                "cone construction: [1] → ⌐ along the top edge",
                class.sieve,
                || format!("classification was {:?}", class),
            )
        },
        {
            let class = classify_inclusion(&t);
            Claim::check(
                "pointed-inclusions.t-cosieve",
                "path-space comparison: t: e → [1] at the target",
                class.cosieve,
                || format!("classification was {:?}", class),
            )
        },
        {
            let class = classify_inclusion(&s);
            Claim::check(
                "pointed-inclusions.s-sieve",
                "path-space comparison: s: [1] → Ar[1] as (0,0) → (0,1)",
                class.sieve,
                || format!("classification was {:?}", class),
            )
        },
    ];

    NamedConstruction::new("pointed-inclusions", PointedInclusions { i1, t, s }, claims)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_verdicts_all_pass() {
        let c = sigma_chain();
        assert!(c.passed(), "{:?}", c.failures());
        assert_eq!(c.claims.len(), 5);
        assert_eq!(c.payload.j_domain.object_count(), 5);
    }

    #[test]
    fn pointed_inclusion_verdicts() {
        let c = pointed_inclusions();
        assert!(c.passed(), "{:?}", c.failures());
        // i is a cosieve but not a sieve; s is a sieve but not a cosieve.
        let s_class = classify_inclusion(&c.payload.s);
        assert!(s_class.sieve && !s_class.cosieve);
    }
}
