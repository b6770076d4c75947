//! The reindexing functor ξ: □×□ -> □ that carries a cofiber square to its
//! own cofiber sequence of squares, given by explicit cases on the sixteen
//! objects.

use std::sync::Arc;

use sdot_core::fincat::{Cat, FinCat, Functor};
use sdot_core::label::Label;

use crate::claim::{Claim, NamedConstruction};

pub struct CofiberSquare {
    pub domain: Cat,
    pub square: Cat,
    pub xi: Functor,
}

/// Object values of ξ on flattened coordinates (a1, b1, a2, b2): the outer
/// square coordinate first, the inner second.
pub fn xi_value(a1: i64, b1: i64, a2: i64, b2: i64) -> (i64, i64) {
    match (a1, b1, a2, b2) {
        (0, 0, 0, 0) | (0, 0, 1, 0) | (1, 0, 0, 0) => (0, 0),
        (1, 0, 1, 0) => (1, 0),
        (1, 0, 1, 1) | (1, 1, 1, 0) | (1, 1, 1, 1) => (1, 1),
        _ => (0, 1),
    }
}

/// A ξ table row: flattened input coordinates and the output corner.
pub type XiRow = ((i64, i64, i64, i64), (i64, i64));

/// The full printed sixteen-entry table.
pub fn xi_table() -> Vec<XiRow> {
    let mut table = Vec::with_capacity(16);
    for a1 in 0..2 {
        for b1 in 0..2 {
            for a2 in 0..2 {
                for b2 in 0..2 {
                    table.push(((a1, b1, a2, b2), xi_value(a1, b1, a2, b2)));
                }
            }
        }
    }
    table
}

fn flatten(l: &Label) -> (i64, i64, i64, i64) {
    let parts = l.as_tuple().unwrap();
    let outer = parts[0].as_int_tuple().unwrap();
    let inner = parts[1].as_int_tuple().unwrap();
    (outer[0], outer[1], inner[0], inner[1])
}

pub fn cofiber_square_functor() -> NamedConstruction<CofiberSquare> {
    let square: Cat = Arc::new(FinCat::ordinal(1).product(&FinCat::ordinal(1)));
    let domain: Cat = Arc::new(square.product(&square));

    let xi_result = Functor::from_objects(&domain, &square, |l| {
        let (a1, b1, a2, b2) = flatten(l);
        let (x, y) = xi_value(a1, b1, a2, b2);
        Label::ipair(x, y)
    });

    let mut claims = Vec::new();
    claims.push(Claim::from_result(
        "cofiber-square.functorial",
        "ξ: □×□ → □ is monotone on the product order",
        xi_result.as_ref().map(|_| ()).map_err(|e| e.to_string()),
    ));

    let xi = xi_result.expect("ξ is monotone");

    claims.push({
        let mut bad = Vec::new();
        for ((a1, b1, a2, b2), want) in xi_table() {
            let source = Label::pair(Label::ipair(a1, b1), Label::ipair(a2, b2));
            let idx = domain.object_index(&source).unwrap();
            let got = xi.obj_image_label(idx).clone();
            if got != Label::ipair(want.0, want.1) {
                bad.push(format!(
                    "ξ{} = {} (wanted ({},{}))",
                    source, got, want.0, want.1
                ));
            }
        }
        Claim::check(
            "cofiber-square.printed-table",
            "ξ object values match the case table on all 16 objects",
            bad.is_empty(),
            || bad.join("; "),
        )
    });

    claims.push({
        // The arrow (1,0,0,0) -> (1,0,1,0) must map to (0,0) -> (1,0): the
        // top edge of the outer target square carries the original arrow.
        let src = domain
            .object_index(&Label::pair(Label::ipair(1, 0), Label::ipair(0, 0)))
            .unwrap();
        let tgt = domain
            .object_index(&Label::pair(Label::ipair(1, 0), Label::ipair(1, 0)))
            .unwrap();
        let arrow = domain.hom(src, tgt)[0];
        let image = xi.apply_mor(arrow);
        let image_mor = square.mor(image);
        let ok = *square.object_label(image_mor.src) == Label::ipair(0, 0)
            && *square.object_label(image_mor.tgt) == Label::ipair(1, 0);
        Claim::check(
            "cofiber-square.arrow-example",
            "ξ carries ((1,0),(0,0)) → ((1,0),(1,0)) to (0,0) → (1,0)",
            ok,
            || format!("image was {}", square.mor_label(image)),
        )
    });

    NamedConstruction::new(
        "cofiber-square",
        CofiberSquare { domain, square, xi },
        claims,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_claims_pass() {
        let c = cofiber_square_functor();
        assert!(c.passed(), "{:?}", c.failures());
    }

    #[test]
    fn printed_spot_values() {
        assert_eq!(xi_value(0, 0, 0, 0), (0, 0));
        assert_eq!(xi_value(0, 0, 1, 0), (0, 0));
        assert_eq!(xi_value(1, 0, 0, 0), (0, 0));
        assert_eq!(xi_value(1, 0, 1, 0), (1, 0));
        assert_eq!(xi_value(1, 0, 1, 1), (1, 1));
        assert_eq!(xi_value(1, 1, 1, 0), (1, 1));
        assert_eq!(xi_value(1, 1, 1, 1), (1, 1));
        assert_eq!(xi_value(0, 1, 1, 1), (0, 1));
    }

    #[test]
    fn case_count_is_seven_plus_nine() {
        let table = xi_table();
        let otherwise = table.iter().filter(|(_, v)| *v == (0, 1)).count();
        assert_eq!(otherwise, 9);
    }
}
