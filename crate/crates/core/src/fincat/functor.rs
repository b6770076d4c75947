//! Functors and natural transformations between finite categories.

use std::collections::HashMap;
use std::sync::Arc;

use crate::label::Label;

use super::{Cat, CatError, FinCat, MorId};

/// Structural equality of category handles, with a pointer fast path.
pub fn cats_eq(a: &Cat, b: &Cat) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A functor between finite categories, validated at construction.
#[derive(Clone, Debug)]
pub struct Functor {
    source: Cat,
    target: Cat,
    obj_map: Vec<usize>,
    mor_map: Vec<MorId>,
}

impl PartialEq for Functor {
    fn eq(&self, other: &Self) -> bool {
        cats_eq(&self.source, &other.source)
            && cats_eq(&self.target, &other.target)
            && self.obj_map == other.obj_map
            && self.mor_map == other.mor_map
    }
}

impl Functor {
    pub fn new(
        source: Cat,
        target: Cat,
        obj_map: Vec<usize>,
        mor_map: Vec<MorId>,
    ) -> Result<Functor, CatError> {
        let f = Functor {
            source,
            target,
            obj_map,
            mor_map,
        };
        f.check_laws()?;
        Ok(f)
    }

    /// Build a functor from an object assignment alone. Morphism images are
    /// the unique candidates in the target hom-sets; identities map to
    /// identities. Fails if some required hom-set is empty or ambiguous.
    pub fn from_objects(
        source: &Cat,
        target: &Cat,
        assign: impl Fn(&Label) -> Label,
    ) -> Result<Functor, CatError> {
        let mut obj_map = Vec::with_capacity(source.object_count());
        for label in source.objects() {
            let image = assign(label);
            let i = target
                .object_index(&image)
                .ok_or(CatError::UnknownObject(image))?;
            obj_map.push(i);
        }
        let mut mor_map = Vec::with_capacity(source.morphism_count());
        for m in source.mor_ids() {
            let mor = source.mor(m);
            let (fs, ft) = (obj_map[mor.src], obj_map[mor.tgt]);
            let image = if source.is_identity(m) {
                target.identity(fs)
            } else {
                let candidates = target.hom(fs, ft);
                if candidates.len() == 1 {
                    candidates[0]
                } else {
                    return Err(CatError::AmbiguousMorphismImage(source.mor_label(m)));
                }
            };
            mor_map.push(image);
        }
        Functor::new(source.clone(), target.clone(), obj_map, mor_map)
    }

    /// The identity functor.
    pub fn identity(cat: &Cat) -> Functor {
        Functor {
            source: cat.clone(),
            target: cat.clone(),
            obj_map: (0..cat.object_count()).collect(),
            mor_map: (0..cat.morphism_count()).collect(),
        }
    }

    /// The unique functor to the terminal category e.
    pub fn to_terminal(cat: &Cat, e: &Cat) -> Functor {
        Functor {
            source: cat.clone(),
            target: e.clone(),
            obj_map: vec![0; cat.object_count()],
            mor_map: vec![0; cat.morphism_count()],
        }
    }

    /// The constant functor at an object (all morphisms to its identity).
    pub fn constant(source: &Cat, target: &Cat, at: &Label) -> Result<Functor, CatError> {
        let i = target
            .object_index(at)
            .ok_or_else(|| CatError::UnknownObject(at.clone()))?;
        Ok(Functor {
            source: source.clone(),
            target: target.clone(),
            obj_map: vec![i; source.object_count()],
            mor_map: vec![target.identity(i); source.morphism_count()],
        })
    }

    /// The functor e -> K classifying an object of K.
    pub fn from_terminal(e: &Cat, target: &Cat, at: &Label) -> Result<Functor, CatError> {
        Functor::constant(e, target, at)
    }

    /// outer ∘ inner.
    pub fn compose(outer: &Functor, inner: &Functor) -> Result<Functor, CatError> {
        if !cats_eq(&inner.target, &outer.source) {
            return Err(CatError::NotAFunctor(
                "composition of functors with mismatched middle category".into(),
            ));
        }
        Ok(Functor {
            source: inner.source.clone(),
            target: outer.target.clone(),
            obj_map: inner.obj_map.iter().map(|&i| outer.obj_map[i]).collect(),
            mor_map: inner.mor_map.iter().map(|&m| outer.mor_map[m]).collect(),
        })
    }

    pub fn source(&self) -> &Cat {
        &self.source
    }

    pub fn target(&self) -> &Cat {
        &self.target
    }

    pub fn apply_obj(&self, i: usize) -> usize {
        self.obj_map[i]
    }

    pub fn apply_mor(&self, m: MorId) -> MorId {
        self.mor_map[m]
    }

    pub fn obj_image_label(&self, i: usize) -> &Label {
        self.target.object_label(self.obj_map[i])
    }

    fn check_laws(&self) -> Result<(), CatError> {
        if self.obj_map.len() != self.source.object_count()
            || self.mor_map.len() != self.source.morphism_count()
        {
            return Err(CatError::NotAFunctor("map length mismatch".into()));
        }
        for m in self.source.mor_ids() {
            let mor = self.source.mor(m);
            let image = self.target.mor(self.mor_map[m]);
            if image.src != self.obj_map[mor.src] || image.tgt != self.obj_map[mor.tgt] {
                return Err(CatError::NotAFunctor(format!(
                    "source/target of {}",
                    self.source.mor_label(m)
                )));
            }
        }
        for x in 0..self.source.object_count() {
            if self.mor_map[self.source.identity(x)] != self.target.identity(self.obj_map[x]) {
                return Err(CatError::NotAFunctor(format!(
                    "identity at {}",
                    self.source.object_label(x)
                )));
            }
        }
        for g in self.source.mor_ids() {
            for f in self.source.mor_ids() {
                if self.source.mor(f).tgt == self.source.mor(g).src {
                    let gf = self.source.compose(g, f)?;
                    let image = self.target.compose(self.mor_map[g], self.mor_map[f])?;
                    if self.mor_map[gf] != image {
                        return Err(CatError::NotAFunctor(format!(
                            "composition of {} after {}",
                            self.source.mor_label(g),
                            self.source.mor_label(f)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Fully faithful: bijective on every hom-set of the source.
    pub fn is_fully_faithful(&self) -> bool {
        let n = self.source.object_count();
        for x in 0..n {
            for y in 0..n {
                let dom = self.source.hom(x, y);
                let cod = self.target.hom(self.obj_map[x], self.obj_map[y]);
                let images: Vec<MorId> = dom.iter().map(|&m| self.mor_map[m]).collect();
                let mut sorted = images.clone();
                sorted.sort_unstable();
                sorted.dedup();
                if sorted.len() != dom.len() || dom.len() != cod.len() {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_injective_on_objects(&self) -> bool {
        let mut seen = vec![false; self.target.object_count()];
        for &i in &self.obj_map {
            if seen[i] {
                return false;
            }
            seen[i] = true;
        }
        true
    }

    /// Bijective on objects and morphisms (an isomorphism of categories).
    pub fn is_isomorphism(&self) -> bool {
        self.is_injective_on_objects()
            && self.obj_map.len() == self.target.object_count()
            && self.is_fully_faithful()
    }
}

/// Full subcategory on the given object labels, with its inclusion functor.
pub fn full_subcategory(cat: &Cat, objects: &[Label]) -> Result<(Cat, Functor), CatError> {
    let mut keep = Vec::with_capacity(objects.len());
    for label in objects {
        keep.push(
            cat.object_index(label)
                .ok_or_else(|| CatError::UnknownObject(label.clone()))?,
        );
    }
    let sub = if cat.is_poset() {
        let mut covers = Vec::new();
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                if a != b && cat.le(i, j) {
                    covers.push((objects[a].clone(), objects[b].clone()));
                }
            }
        }
        FinCat::build_poset(objects.to_vec(), &covers)?
    } else {
        let mut arrows = Vec::new();
        let mut kept_mors = Vec::new();
        for m in cat.mor_ids() {
            let mor = cat.mor(m);
            if keep.contains(&mor.src) && keep.contains(&mor.tgt) {
                arrows.push((
                    cat.object_label(mor.src).clone(),
                    cat.object_label(mor.tgt).clone(),
                ));
                kept_mors.push(m);
            }
        }
        let back: HashMap<MorId, usize> = kept_mors
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        let mut compose = Vec::new();
        for (gi, &g) in kept_mors.iter().enumerate() {
            for (fi, &f) in kept_mors.iter().enumerate() {
                if cat.mor(f).tgt == cat.mor(g).src {
                    compose.push((gi, fi, back[&cat.compose(g, f)?]));
                }
            }
        }
        FinCat::build_fincat(objects.to_vec(), &arrows, &compose)?
    };
    let sub = Arc::new(sub);
    let incl = if cat.is_poset() {
        Functor::from_objects(&sub, cat, |l| l.clone())?
    } else {
        // Match morphisms by (source, target, index) within the hom-set.
        let obj_map: Vec<usize> = sub
            .objects()
            .iter()
            .map(|l| cat.object_index(l).unwrap())
            .collect();
        let mut mor_map = Vec::with_capacity(sub.morphism_count());
        for m in sub.mor_ids() {
            let mor = sub.mor(m);
            mor_map.push(cat.hom(obj_map[mor.src], obj_map[mor.tgt])[mor.idx]);
        }
        Functor::new(sub.clone(), cat.clone(), obj_map, mor_map)?
    };
    Ok((sub, incl))
}

/// A natural transformation between two parallel functors, with naturality
/// verified on every morphism of the source category.
#[derive(Clone, Debug)]
pub struct NatTrans {
    source: Functor,
    target: Functor,
    components: Vec<MorId>,
}

impl NatTrans {
    pub fn new(
        source: Functor,
        target: Functor,
        components: Vec<MorId>,
    ) -> Result<NatTrans, CatError> {
        if !cats_eq(source.source(), target.source()) || !cats_eq(source.target(), target.target())
        {
            return Err(CatError::BadNatTrans("functors are not parallel".into()));
        }
        let dom = source.source().clone();
        let cod = source.target().clone();
        if components.len() != dom.object_count() {
            return Err(CatError::BadNatTrans("component count mismatch".into()));
        }
        for x in 0..dom.object_count() {
            let c = cod.mor(components[x]);
            if c.src != source.apply_obj(x) || c.tgt != target.apply_obj(x) {
                return Err(CatError::BadNatTrans(format!(
                    "component at {} is ill-typed",
                    dom.object_label(x)
                )));
            }
        }
        let nt = NatTrans {
            source,
            target,
            components,
        };
        nt.check_naturality()?;
        Ok(nt)
    }

    /// The identity transformation on a functor.
    pub fn identity(f: &Functor) -> NatTrans {
        let cod = f.target().clone();
        let components = (0..f.source().object_count())
            .map(|x| cod.identity(f.apply_obj(x)))
            .collect();
        NatTrans {
            source: f.clone(),
            target: f.clone(),
            components,
        }
    }

    pub fn source_functor(&self) -> &Functor {
        &self.source
    }

    pub fn target_functor(&self) -> &Functor {
        &self.target
    }

    pub fn component(&self, x: usize) -> MorId {
        self.components[x]
    }

    fn check_naturality(&self) -> Result<(), CatError> {
        let dom = self.source.source();
        let cod = self.source.target();
        for m in dom.mor_ids() {
            let mor = dom.mor(m);
            let left = cod.compose(self.components[mor.tgt], self.source.apply_mor(m))?;
            let right = cod.compose(self.target.apply_mor(m), self.components[mor.src])?;
            if left != right {
                return Err(CatError::NotNatural(dom.mor_label(m)));
            }
        }
        Ok(())
    }
}
