//! Classification of inclusions: fully faithful, injective, sieve, cosieve.

use serde::Serialize;

use super::Functor;

/// Flags for a functor viewed as an inclusion. `sieve`/`cosieve` are only
/// ever set when the functor is fully faithful and injective on objects.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct InclusionClass {
    pub fully_faithful: bool,
    pub injective_on_objects: bool,
    pub sieve: bool,
    pub cosieve: bool,
}

/// Exhaustive check: a sieve is closed under incoming morphisms, a cosieve
/// under outgoing ones.
pub fn classify_inclusion(u: &Functor) -> InclusionClass {
    let fully_faithful = u.is_fully_faithful();
    let injective_on_objects = u.is_injective_on_objects();
    let mut class = InclusionClass {
        fully_faithful,
        injective_on_objects,
        sieve: false,
        cosieve: false,
    };
    if !(fully_faithful && injective_on_objects) {
        return class;
    }
    let target = u.target();
    let mut in_image = vec![false; target.object_count()];
    for x in 0..u.source().object_count() {
        in_image[u.apply_obj(x)] = true;
    }
    let mut sieve = true;
    let mut cosieve = true;
    for m in target.mor_ids() {
        let mor = target.mor(m);
        if in_image[mor.tgt] && !in_image[mor.src] {
            sieve = false;
        }
        if in_image[mor.src] && !in_image[mor.tgt] {
            cosieve = false;
        }
    }
    class.sieve = sieve;
    class.cosieve = cosieve;
    class
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use crate::fincat::{full_subcategory, FinCat};
    use crate::label::Label;

    use super::*;

    #[test]
    fn corner_inclusions() {
        let sq = Arc::new(FinCat::ordinal(1).product(&FinCat::ordinal(1)));
        // [1] -> corner as the edge (0,0) -> (1,0) is a sieve; the corner
        // into the square is a sieve but not a cosieve.
        let corner_objs = [Label::ipair(0, 0), Label::ipair(1, 0), Label::ipair(0, 1)];
        let (_, incl) = full_subcategory(&sq, &corner_objs).unwrap();
        let class = classify_inclusion(&incl);
        assert!(class.fully_faithful && class.injective_on_objects);
        assert!(class.sieve);
        assert!(!class.cosieve);
    }

    #[test]
    fn both_flags_mean_disconnection() {
        // A component of a discrete-ish union is both a sieve and a cosieve:
        // no morphism connects the image to its complement either way.
        let union = Arc::new(
            FinCat::build_poset(
                vec![
                    Label::isub(0, 0),
                    Label::isub(1, 0),
                    Label::isub(0, 1),
                    Label::isub(1, 1),
                ],
                &[(Label::isub(0, 0), Label::isub(1, 0))],
            )
            .unwrap(),
        );
        let (_, incl) = full_subcategory(&union, &[Label::isub(0, 0), Label::isub(1, 0)]).unwrap();
        let class = classify_inclusion(&incl);
        assert!(class.sieve && class.cosieve);
        // Exhaustive disconnection: no target morphism crosses the image
        // boundary in either direction.
        let target = incl.target();
        let image: Vec<usize> = (0..incl.source().object_count())
            .map(|x| incl.apply_obj(x))
            .collect();
        for m in target.mor_ids() {
            let mor = target.mor(m);
            assert_eq!(image.contains(&mor.src), image.contains(&mor.tgt));
        }
    }

    #[test]
    fn non_injective_functor_gets_no_sieve_flags() {
        let one = Arc::new(FinCat::ordinal(1));
        let e = Arc::new(FinCat::terminal());
        let pi = crate::fincat::Functor::to_terminal(&one, &e);
        let class = classify_inclusion(&pi);
        assert!(!class.injective_on_objects);
        assert!(!class.sieve && !class.cosieve);
    }
}
