//! Comma categories (u/k) with projection and comparison transformation.

use std::collections::HashMap;
use std::sync::Arc;

use crate::label::Label;

use super::{CatError, FinCat, Functor, Mor, MorId, NatTrans};

/// The comma category (u/k) together with its projection to the source of u
/// and the canonical transformation u∘pr ⇒ k∘π, verified natural.
pub struct Comma {
    pub cat: Arc<FinCat>,
    /// pr: (u/k) -> J.
    pub proj: Functor,
    /// alpha: u∘pr ⇒ const_k, component at (j, f) is f itself.
    pub alpha: NatTrans,
    /// The (j, f) anchor of each comma object.
    pub anchors: Vec<(usize, MorId)>,
}

/// Objects are pairs (j, f: u(j) -> k); morphisms (j, f) -> (j', f') are
/// g: j -> j' with f'∘u(g) = f.
pub fn comma(u: &Functor, k: &Label) -> Result<Comma, CatError> {
    let source = u.source().clone();
    let target = u.target().clone();
    let k_idx = target
        .object_index(k)
        .ok_or_else(|| CatError::UnknownObject(k.clone()))?;

    let mut anchors: Vec<(usize, MorId)> = Vec::new();
    let mut labels: Vec<Label> = Vec::new();
    for j in 0..source.object_count() {
        for &f in target.hom(u.apply_obj(j), k_idx) {
            // In a poset target the map f is determined by j, so the object
            // keeps its bare source label; otherwise the pair is spelled out.
            let label = if target.is_poset() {
                source.object_label(j).clone()
            } else {
                Label::pair(source.object_label(j).clone(), target.mor_label(f))
            };
            anchors.push((j, f));
            labels.push(label);
        }
    }

    let mut mors: Vec<Mor> = Vec::new();
    let mut hom: HashMap<(usize, usize), Vec<MorId>> = HashMap::new();
    let mut underlying: Vec<MorId> = Vec::new();
    let mut lookup: HashMap<(usize, usize, MorId), MorId> = HashMap::new();
    for (a, &(j, f)) in anchors.iter().enumerate() {
        for (b, &(j2, f2)) in anchors.iter().enumerate() {
            for &g in source.hom(j, j2) {
                if target.compose(f2, u.apply_mor(g))? == f {
                    let slot = hom.entry((a, b)).or_default();
                    let id = mors.len();
                    mors.push(Mor {
                        src: a,
                        tgt: b,
                        idx: slot.len(),
                    });
                    slot.push(id);
                    underlying.push(g);
                    lookup.insert((a, b, g), id);
                }
            }
        }
    }
    let identities: Vec<MorId> = anchors
        .iter()
        .enumerate()
        .map(|(a, &(j, _))| lookup[&(a, a, source.identity(j))])
        .collect();

    let poset = source.is_poset() && target.is_poset();
    let table = if poset {
        None
    } else {
        let mut table = HashMap::new();
        for (g, &gu) in underlying.iter().enumerate() {
            for (f, &fu) in underlying.iter().enumerate() {
                if mors[f].tgt == mors[g].src {
                    let c = source.compose(gu, fu)?;
                    table.insert((g, f), lookup[&(mors[f].src, mors[g].tgt, c)]);
                }
            }
        }
        Some(table)
    };

    let mut obj_index = HashMap::new();
    for (i, l) in labels.iter().enumerate() {
        if obj_index.insert(l.clone(), i).is_some() {
            return Err(CatError::DuplicateObject(l.clone()));
        }
    }
    let cat = FinCat {
        objects: labels,
        obj_index,
        mors,
        hom,
        identities,
        table,
        poset,
    };
    cat.validate()?;
    let cat = Arc::new(cat);

    let proj = {
        let obj_map: Vec<usize> = anchors.iter().map(|&(j, _)| j).collect();
        let mor_map: Vec<MorId> = underlying.clone();
        Functor::new(cat.clone(), source.clone(), obj_map, mor_map)?
    };

    // alpha: u∘pr ⇒ const_k, with component f at the object (j, f).
    let upr = Functor::compose(u, &proj)?;
    let const_k = Functor::constant(&cat, &target, k)?;
    let components: Vec<MorId> = anchors.iter().map(|&(_, f)| f).collect();
    let alpha = NatTrans::new(upr, const_k, components)?;

    Ok(Comma {
        cat,
        proj,
        alpha,
        anchors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slice_of_ordinal_over_top() {
        // (id_[1] / 1) has objects (0, 0->1) and (1, id_1): a copy of [1].
        let one = Arc::new(FinCat::ordinal(1));
        let id = Functor::identity(&one);
        let c = comma(&id, &Label::Int(1)).unwrap();
        assert_eq!(c.cat.object_count(), 2);
        assert_eq!(c.cat.morphism_count(), 3);
        assert!(c.cat.is_poset());
    }

    #[test]
    fn comma_over_missing_object_fails() {
        let one = Arc::new(FinCat::ordinal(1));
        let id = Functor::identity(&one);
        assert!(comma(&id, &Label::Int(7)).is_err());
    }

    #[test]
    fn comma_over_a_group_object_uses_the_general_path() {
        // For the one-object group {id, g} with g∘g = id, the comma over the
        // object has two objects (one per endomorphism) and exactly one
        // morphism in each direction, so it is not a poset.
        let z2 = Arc::new(crate::fincat::tests::z2());
        let id = Functor::identity(&z2);
        let c = comma(&id, &Label::name("x")).unwrap();
        assert_eq!(c.cat.object_count(), 2);
        assert_eq!(c.cat.morphism_count(), 4);
        assert!(!c.cat.is_poset());
        assert!(c.cat.validate().is_ok());
        for x in 0..2 {
            for y in 0..2 {
                assert_eq!(c.cat.hom(x, y).len(), 1);
            }
        }
    }

    #[test]
    fn comma_of_posets_is_a_poset_with_thin_homs() {
        let two = Arc::new(FinCat::ordinal(2));
        let sq = Arc::new(FinCat::ordinal(1).product(&FinCat::ordinal(1)));
        let diag = Functor::from_objects(&two, &sq, |l| {
            let i = l.as_int().unwrap().min(1);
            Label::ipair(i, i)
        })
        .unwrap();
        let c = comma(&diag, &Label::ipair(1, 1)).unwrap();
        assert!(c.cat.is_poset());
        for x in 0..c.cat.object_count() {
            for y in 0..c.cat.object_count() {
                assert!(c.cat.hom(x, y).len() <= 1);
            }
        }
    }
}
