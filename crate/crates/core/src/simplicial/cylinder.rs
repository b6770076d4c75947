//! The cylinder IY: level A is the set of pairs (φ: A -> [1], y ∈ Y(φ⁻¹(s)))
//! with ends Y (at φ = 0) and sub₂Y (at φ = 1) and a projection to Δ¹.

use std::collections::HashMap;
use std::sync::Arc;

use crate::fincat::FinCat;
use crate::label::Label;

use super::{nerve, sub2, Mono, SMap, SSet, SimpError};

pub struct Cylinder {
    pub ix: Arc<SSet>,
    /// X truncated to the output dimension; source of `e0`.
    pub base: Arc<SSet>,
    /// sub₂X at the output dimension; source of `e1`.
    pub sub2x: Arc<SSet>,
    /// Δ¹ (nerve of [1]) at the output dimension; target of `proj`.
    pub delta1: Arc<SSet>,
    pub e0: SMap,
    pub e1: SMap,
    pub proj: SMap,
    /// Per level: the φ value-vectors, in lexicographic order.
    pub phis: Vec<Vec<Vec<usize>>>,
    /// Per level: (index into `phis[k]`, y index in X at dimension m_φ).
    pub entries: Vec<Vec<(usize, usize)>>,
}

/// The underlying set of φ⁻¹(s) for s(0)=0, s(1)=s(2)=1: pairs (a, b) with
/// φ(a) = s(b), ordered primarily by b and secondarily by a.
fn pairs_for_phi(phi: &[usize]) -> Vec<(usize, usize)> {
    let s = [0usize, 1, 1];
    let mut pairs = Vec::new();
    for (b, &sb) in s.iter().enumerate() {
        for (a, &va) in phi.iter().enumerate() {
            if va == sb {
                pairs.push((a, b));
            }
        }
    }
    pairs
}

/// The simplex of Δ¹ = N[1] spelled by a φ value vector: the bare vertex at
/// level 0, the chain tuple above.
fn interval_simplex_label(phi: &[usize]) -> Label {
    if phi.len() == 1 {
        Label::Int(phi[0] as i64)
    } else {
        Label::Tuple(phi.iter().map(|&v| Label::Int(v as i64)).collect())
    }
}

/// The map (φψ)⁻¹(s) -> φ⁻¹(s), (a, b) -> (ψ(a), b), as a standard ordinal
/// map under the canonical identifications.
fn induced(phi: &[usize], psi: &Mono) -> Mono {
    let phi_psi: Vec<usize> = psi.vals.iter().map(|&a| phi[a]).collect();
    let from = pairs_for_phi(&phi_psi);
    let to = pairs_for_phi(phi);
    let vals = from
        .iter()
        .map(|&(a, b)| {
            to.iter()
                .position(|&p| p == (psi.vals[a], b))
                .expect("induced pair lands in the pullback")
        })
        .collect();
    Mono::new(from.len() - 1, to.len() - 1, vals)
}

pub fn cylinder(x: &Arc<SSet>, trunc: usize) -> Result<Cylinder, SimpError> {
    let need = 2 * trunc + 1;
    if x.trunc() < need {
        return Err(SimpError::InsufficientTruncation {
            need,
            found: x.trunc(),
        });
    }

    let phis: Vec<Vec<Vec<usize>>> = (0..=trunc)
        .map(|k| Mono::all(k, 1).into_iter().map(|m| m.vals).collect())
        .collect();
    let phi_index: Vec<HashMap<Vec<usize>, usize>> = phis
        .iter()
        .map(|list| {
            list.iter()
                .enumerate()
                .map(|(i, v)| (v.clone(), i))
                .collect()
        })
        .collect();
    let dim_of = |phi: &[usize]| pairs_for_phi(phi).len() - 1;

    let mut entries: Vec<Vec<(usize, usize)>> = Vec::with_capacity(trunc + 1);
    let mut offsets: Vec<Vec<usize>> = Vec::with_capacity(trunc + 1);
    let mut levels: Vec<Vec<Label>> = Vec::with_capacity(trunc + 1);
    for k in 0..=trunc {
        let mut level_entries = Vec::new();
        let mut level_offsets = Vec::with_capacity(phis[k].len());
        let mut labels = Vec::new();
        for (p, phi) in phis[k].iter().enumerate() {
            level_offsets.push(level_entries.len());
            let phi_label = Label::Tuple(phi.iter().map(|&v| Label::Int(v as i64)).collect());
            let m = dim_of(phi);
            for y in 0..x.level_size(m) {
                level_entries.push((p, y));
                labels.push(Label::pair(phi_label.clone(), x.level(m)[y].clone()));
            }
        }
        entries.push(level_entries);
        offsets.push(level_offsets);
        levels.push(labels);
    }

    // A generator action on IX: apply ψ to φ and the induced map to y.
    let generator_table = |k: usize, psi: &Mono| -> Vec<usize> {
        let kk = psi.dom;
        let mut table = Vec::with_capacity(entries[k].len());
        for phi in &phis[k] {
            let new_phi: Vec<usize> = psi.vals.iter().map(|&a| phi[a]).collect();
            let p2 = phi_index[kk][&new_phi];
            let act = x.act(&induced(phi, psi));
            for y in 0..x.level_size(dim_of(phi)) {
                table.push(offsets[kk][p2] + act[y]);
            }
        }
        table
    };

    let mut faces = vec![Vec::new(); trunc + 1];
    let mut degs = vec![Vec::new(); trunc + 1];
    for k in 1..=trunc {
        for i in 0..=k {
            faces[k].push(generator_table(k, &Mono::coface(k, i)));
        }
    }
    for k in 0..trunc {
        for i in 0..=k {
            degs[k].push(generator_table(k, &Mono::codegen(k, i)));
        }
    }
    let ix = Arc::new(SSet::assemble(trunc, levels, faces, degs)?);

    let base = Arc::new(x.truncate(trunc)?);
    let e0_components: Vec<Vec<usize>> = (0..=trunc)
        .map(|k| {
            let p0 = 0; // all-zero φ is first in lexicographic order
            (0..base.level_size(k))
                .map(|y| offsets[k][p0] + y)
                .collect()
        })
        .collect();
    let e0 = SMap::new(base.clone(), ix.clone(), e0_components)?;

    let sub2x = Arc::new(sub2(x, trunc)?);
    let e1_components: Vec<Vec<usize>> = (0..=trunc)
        .map(|k| {
            let p1 = phis[k].len() - 1; // all-one φ is last
            (0..sub2x.level_size(k))
                .map(|y| offsets[k][p1] + y)
                .collect()
        })
        .collect();
    let e1 = SMap::new(sub2x.clone(), ix.clone(), e1_components)?;

    let delta1 = Arc::new(nerve(&FinCat::ordinal(1), trunc));
    let proj_components: Vec<Vec<usize>> = (0..=trunc)
        .map(|k| {
            entries[k]
                .iter()
                .map(|&(p, _)| {
                    let label = interval_simplex_label(&phis[k][p]);
                    delta1.index_of(k, &label).expect("φ is a simplex of Δ¹")
                })
                .collect()
        })
        .collect();
    let proj = SMap::new(ix.clone(), delta1.clone(), proj_components)?;

    Ok(Cylinder {
        ix,
        base,
        sub2x,
        delta1,
        e0,
        e1,
        proj,
        phis,
        entries,
    })
}

/// The simplicial subset of the cylinder at φ constantly `value` (0 or 1),
/// with its inclusion.
pub fn phi_slice(cyl: &Cylinder, value: usize) -> Result<(Arc<SSet>, SMap), SimpError> {
    let trunc = cyl.ix.trunc();
    let keep: Vec<Vec<usize>> = (0..=trunc)
        .map(|k| {
            let constant = vec![value; k + 1];
            cyl.entries[k]
                .iter()
                .enumerate()
                .filter(|&(_, &(p, _))| cyl.phis[k][p] == constant)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    cyl.ix.subobject(&keep)
}

#[cfg(test)]
mod tests {
    use crate::ordcalc;
    use crate::simplicial::validate_sset_full;

    use super::*;

    #[test]
    fn pairs_agree_with_ordcalc_pullback() {
        // The cylinder's internal fiber enumeration must match the ordinal
        // calculus, which is the implementation of record for φ⁻¹(s).
        for n in 0..=4usize {
            for phi in ordcalc::maps_to_interval(n) {
                let pullback = ordcalc::grayson_pullback(&phi, &ordcalc::s_map()).unwrap();
                assert_eq!(pairs_for_phi(phi.values()), pullback.coords);
            }
        }
    }

    #[test]
    fn cylinder_of_a_point_is_the_interval() {
        let x = Arc::new(nerve(&FinCat::terminal(), 9));
        let c = cylinder(&x, 4).unwrap();
        for k in 0..=4 {
            assert_eq!(c.ix.level_size(k), k + 2);
            assert_eq!(c.ix.level_size(k), c.delta1.level_size(k));
        }
        let iso = crate::simplicial::sset_iso(&c.ix, &c.delta1, None).unwrap();
        assert!(iso.is_some());
    }

    #[test]
    fn ends_are_injective_and_disjoint() {
        let x = Arc::new(nerve(&FinCat::ordinal(1), 7));
        let c = cylinder(&x, 3).unwrap();
        assert!(c.e0.is_levelwise_injective());
        assert!(c.e1.is_levelwise_injective());
        for k in 0..=3usize {
            for a in 0..c.base.level_size(k) {
                for b in 0..c.sub2x.level_size(k) {
                    assert_ne!(c.e0.apply(k, a), c.e1.apply(k, b));
                }
            }
        }
    }

    #[test]
    fn proj_after_e0_is_constant_at_zero() {
        let x = Arc::new(nerve(&FinCat::ordinal(1), 7));
        let c = cylinder(&x, 3).unwrap();
        let comp = SMap::compose(&c.proj, &c.e0).unwrap();
        for k in 0..=3usize {
            let vertex0 = interval_simplex_label(&vec![0; k + 1]);
            let expected = c.delta1.index_of(k, &vertex0).unwrap();
            for a in 0..c.base.level_size(k) {
                assert_eq!(comp.apply(k, a), expected);
            }
        }
    }

    #[test]
    fn slice_images_match_fibers_of_proj() {
        let x = Arc::new(nerve(&FinCat::ordinal(1), 7));
        let c = cylinder(&x, 3).unwrap();
        for (value, end) in [(0usize, &c.e0), (1, &c.e1)] {
            let (slice, incl) = phi_slice(&c, value).unwrap();
            for k in 0..=3usize {
                // Fiber of proj over the totally degenerate simplex at the
                // vertex `value`.
                let vtx = interval_simplex_label(&vec![value; k + 1]);
                let target = c.delta1.index_of(k, &vtx).unwrap();
                let fiber: Vec<usize> = (0..c.ix.level_size(k))
                    .filter(|&i| c.proj.apply(k, i) == target)
                    .collect();
                let image: Vec<usize> =
                    (0..slice.level_size(k)).map(|i| incl.apply(k, i)).collect();
                assert_eq!(image, fiber);
                let end_image: Vec<usize> = (0..end.source().level_size(k))
                    .map(|i| end.apply(k, i))
                    .collect();
                assert_eq!(image, end_image);
            }
        }
    }

    #[test]
    fn cylinder_outputs_validate() {
        for m in 0..=2usize {
            let x = Arc::new(nerve(&FinCat::ordinal(m), 7));
            let c = cylinder(&x, 3).unwrap();
            let report = validate_sset_full(&c.ix);
            assert!(report.ok, "{:?}", report.first_violation);
        }
    }
}
