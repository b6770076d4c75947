//! Two-fold edgewise subdivision: level A of the output is level A ∗ A of
//! the input, with ψ acting as ψ ∗ ψ.

use std::sync::Arc;

use super::{Mono, SMap, SSet, SimpError};

/// Subdivide, producing a set truncated at `trunc`. Consumes input levels up
/// to 2·trunc + 1.
pub fn sub2(x: &SSet, trunc: usize) -> Result<SSet, SimpError> {
    let need = 2 * trunc + 1;
    if x.trunc() < need {
        return Err(SimpError::InsufficientTruncation {
            need,
            found: x.trunc(),
        });
    }
    let levels = (0..=trunc).map(|k| x.level(2 * k + 1).to_vec()).collect();
    let mut faces = vec![Vec::new(); trunc + 1];
    let mut degs = vec![Vec::new(); trunc + 1];
    for k in 1..=trunc {
        for i in 0..=k {
            let delta = Mono::coface(k, i);
            faces[k].push(x.act(&Mono::star(&delta, &delta)));
        }
    }
    for k in 0..trunc {
        for i in 0..=k {
            let sigma = Mono::codegen(k, i);
            degs[k].push(x.act(&Mono::star(&sigma, &sigma)));
        }
    }
    SSet::assemble(trunc, levels, faces, degs)
}

/// Subdivision is functorial: a map f: X -> Y induces sub₂f whose level-k
/// component is f's level-(2k+1) component.
pub fn sub2_map(f: &SMap, trunc: usize) -> Result<SMap, SimpError> {
    let source = Arc::new(sub2(f.source(), trunc)?);
    let target = Arc::new(sub2(f.target(), trunc)?);
    let components = (0..=trunc)
        .map(|k| f.components(2 * k + 1).to_vec())
        .collect();
    SMap::new(source, target, components)
}

#[cfg(test)]
mod tests {
    use crate::fincat::FinCat;
    use crate::simplicial::{nerve, validate_sset_full};

    use super::*;

    #[test]
    fn sub2_of_a_point_is_a_point() {
        let x = nerve(&FinCat::terminal(), 5);
        let s = sub2(&x, 2).unwrap();
        for k in 0..=2 {
            assert_eq!(s.level_size(k), 1);
        }
    }

    #[test]
    fn sub2_of_interval_nerve() {
        // Vertices of sub₂(N[1]) are N[1]_1 (three of them); the two
        // nondegenerate edges are the halves of the subdivided segment.
        let x = nerve(&FinCat::ordinal(1), 3);
        let s = sub2(&x, 1).unwrap();
        assert_eq!(s.level_size(0), 3);
        assert_eq!(s.nondegenerate(1).len(), 2);
        // The two nondegenerate edges share no higher simplices (truncation 1
        // here), and their vertex sets overlap in the middle vertex only.
        let nd = s.nondegenerate(1);
        let ends: Vec<(usize, usize)> = nd
            .iter()
            .map(|&e| (s.face(1, 1, e), s.face(1, 0, e)))
            .collect();
        assert_ne!(ends[0], ends[1]);
    }

    #[test]
    fn sub2_vertices_are_level_one() {
        for k in 0..=2usize {
            let x = nerve(&FinCat::ordinal(k), 5);
            let s = sub2(&x, 2).unwrap();
            assert_eq!(s.level(0), x.level(1));
        }
    }

    #[test]
    fn insufficient_truncation_is_refused() {
        let x = nerve(&FinCat::ordinal(1), 2);
        assert!(matches!(
            sub2(&x, 1),
            Err(SimpError::InsufficientTruncation { need: 3, found: 2 })
        ));
    }

    #[test]
    fn sub2_outputs_validate() {
        for k in 0..=2usize {
            let x = nerve(&FinCat::ordinal(k), 7);
            let s = sub2(&x, 3).unwrap();
            let report = validate_sset_full(&s);
            assert!(report.ok, "{:?}", report.first_violation);
        }
    }

    #[test]
    fn sub2_is_functorial_on_nerve_maps() {
        use crate::fincat::Functor;
        use crate::label::Label;
        use crate::simplicial::nerve_map;

        // Every monotone [m] -> [k] induces a nerve map; its subdivision is
        // a valid simplicial map whose vertex component is the original map
        // on level 1.
        for m in 0..=2usize {
            for k in 0..=2usize {
                let src_cat = std::sync::Arc::new(FinCat::ordinal(m));
                let tgt_cat = std::sync::Arc::new(FinCat::ordinal(k));
                let src_nerve = Arc::new(nerve(&src_cat, 5));
                let tgt_nerve = Arc::new(nerve(&tgt_cat, 5));
                for mono in Mono::all(m, k) {
                    let vals = mono.vals.clone();
                    let f = Functor::from_objects(&src_cat, &tgt_cat, move |l| {
                        Label::Int(vals[l.as_int().unwrap() as usize] as i64)
                    })
                    .unwrap();
                    let fmap = nerve_map(&f, &src_nerve, &tgt_nerve).unwrap();
                    let sub = sub2_map(&fmap, 2).unwrap();
                    assert_eq!(sub.components(0), fmap.components(1));
                }
            }
        }
    }
}
