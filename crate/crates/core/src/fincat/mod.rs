//! Finite categories presented by explicit object/morphism/composition data.
//!
//! Every index category needed downstream is a finite poset, so posets get a
//! fast path where composition is implied by the order relation. General
//! categories carry an explicit composition table; both representations are
//! validated exhaustively against the category laws at construction time.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::label::Label;

mod adjunction;
mod comma;
mod direct;
mod functor;
mod inclusion;
mod serial;

pub use adjunction::{check_adjunction, check_adjunction_hom, AdjunctionReport};
pub use comma::{comma, Comma};
pub use direct::{is_finite_direct, DirectnessReport};
pub use functor::{cats_eq, full_subcategory, Functor, NatTrans};
pub use inclusion::{classify_inclusion, InclusionClass};
pub use serial::{FinCatJson, FunctorJson};

/// Morphism id: index into the category's morphism list.
pub type MorId = usize;

/// A morphism record: source object, target object, and an index that
/// distinguishes parallel morphisms (always 0 in a poset).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mor {
    pub src: usize,
    pub tgt: usize,
    pub idx: usize,
}

#[derive(Debug, Error)]
pub enum CatError {
    #[error("duplicate object label {0}")]
    DuplicateObject(Label),
    #[error("unknown object label {0}")]
    UnknownObject(Label),
    #[error("cycle detected: {a} and {b} are mutually comparable")]
    Cycle { a: Label, b: Label },
    #[error("missing composite for ({g} ∘ {f})")]
    MissingComposite { g: Label, f: Label },
    #[error("composite ({g} ∘ {f}) has wrong endpoints")]
    IllTypedComposite { g: Label, f: Label },
    #[error("composition defined on non-composable pair ({g} ∘ {f})")]
    NotComposable { g: Label, f: Label },
    #[error("associativity fails on ({g}, {f}, {h}): g∘(f∘h) ≠ (g∘f)∘h")]
    NonAssociative { g: Label, f: Label, h: Label },
    #[error("no identity morphism found for object {0}")]
    IdentityFailure(Label),
    #[error("arrow index {0} out of range")]
    BadArrowIndex(usize),
    #[error("functor does not preserve {0}")]
    NotAFunctor(String),
    #[error("object map misses {0} or hits multiple candidates")]
    AmbiguousMorphismImage(Label),
    #[error("natural transformation ill-typed: {0}")]
    BadNatTrans(String),
    #[error("naturality fails at morphism {0}")]
    NotNatural(Label),
    #[error("adjunction data ill-typed: {0}")]
    AdjunctionTypeMismatch(String),
    #[error("operation requires poset categories: {0}")]
    NotAPoset(String),
    #[error("{0}")]
    Invalid(String),
}

/// A finite category.
#[derive(Clone, Debug, PartialEq)]
pub struct FinCat {
    objects: Vec<Label>,
    obj_index: HashMap<Label, usize>,
    mors: Vec<Mor>,
    hom: HashMap<(usize, usize), Vec<MorId>>,
    identities: Vec<MorId>,
    /// (g, f) -> g∘f, defined exactly when tgt(f) = src(g). None for posets,
    /// where the composite is the unique morphism src(f) -> tgt(g).
    table: Option<HashMap<(MorId, MorId), MorId>>,
    poset: bool,
}

impl FinCat {
    // ------------------------------------------------------------------
    // Accessors
    // ------------------------------------------------------------------

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.mors.len()
    }

    pub fn objects(&self) -> &[Label] {
        &self.objects
    }

    pub fn object_label(&self, i: usize) -> &Label {
        &self.objects[i]
    }

    pub fn object_index(&self, label: &Label) -> Option<usize> {
        self.obj_index.get(label).copied()
    }

    pub fn mor(&self, m: MorId) -> &Mor {
        &self.mors[m]
    }

    pub fn mor_ids(&self) -> impl Iterator<Item = MorId> {
        0..self.mors.len()
    }

    /// Canonical label of a morphism: (source, target) in a poset,
    /// (source, target, index) otherwise.
    pub fn mor_label(&self, m: MorId) -> Label {
        let mor = &self.mors[m];
        let s = self.objects[mor.src].clone();
        let t = self.objects[mor.tgt].clone();
        if self.poset {
            Label::pair(s, t)
        } else {
            Label::tuple(vec![s, t, Label::Int(mor.idx as i64)])
        }
    }

    pub fn hom(&self, x: usize, y: usize) -> &[MorId] {
        self.hom.get(&(x, y)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn identity(&self, x: usize) -> MorId {
        self.identities[x]
    }

    pub fn is_identity(&self, m: MorId) -> bool {
        let mor = &self.mors[m];
        mor.src == mor.tgt && self.identities[mor.src] == m
    }

    pub fn is_poset(&self) -> bool {
        self.poset
    }

    /// Poset order relation: true iff hom(x, y) is nonempty.
    pub fn le(&self, x: usize, y: usize) -> bool {
        !self.hom(x, y).is_empty()
    }

    /// g∘f, requiring tgt(f) = src(g).
    pub fn compose(&self, g: MorId, f: MorId) -> Result<MorId, CatError> {
        if self.mors[f].tgt != self.mors[g].src {
            return Err(CatError::NotComposable {
                g: self.mor_label(g),
                f: self.mor_label(f),
            });
        }
        match &self.table {
            None => Ok(self.hom(self.mors[f].src, self.mors[g].tgt)[0]),
            Some(table) => table
                .get(&(g, f))
                .copied()
                .ok_or_else(|| CatError::MissingComposite {
                    g: self.mor_label(g),
                    f: self.mor_label(f),
                }),
        }
    }

    // ------------------------------------------------------------------
    // Constructors
    // ------------------------------------------------------------------

    /// The terminal category e: one object, one identity.
    pub fn terminal() -> FinCat {
        FinCat::discrete(vec![Label::name("*")]).unwrap()
    }

    /// Discrete category on the given labels.
    pub fn discrete(objects: Vec<Label>) -> Result<FinCat, CatError> {
        FinCat::build_poset(objects, &[])
    }

    /// The totally ordered set 0 -> 1 -> ... -> n as a poset category.
    pub fn ordinal(n: usize) -> FinCat {
        let objects = (0..=n as i64).map(Label::Int).collect();
        let covers: Vec<(Label, Label)> = (0..n as i64)
            .map(|i| (Label::Int(i), Label::Int(i + 1)))
            .collect();
        FinCat::build_poset(objects, &covers).unwrap()
    }

    /// Build a poset category from covering pairs: morphisms are exactly the
    /// pairs x ≤ y in the reflexive-transitive closure. Rejects duplicate
    /// labels and cyclic cover relations.
    pub fn build_poset(objects: Vec<Label>, covers: &[(Label, Label)]) -> Result<FinCat, CatError> {
        let n = objects.len();
        let mut obj_index = HashMap::new();
        for (i, label) in objects.iter().enumerate() {
            if obj_index.insert(label.clone(), i).is_some() {
                return Err(CatError::DuplicateObject(label.clone()));
            }
        }
        let mut le = vec![vec![false; n]; n];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
        }
        for (a, b) in covers {
            let i = *obj_index
                .get(a)
                .ok_or_else(|| CatError::UnknownObject(a.clone()))?;
            let j = *obj_index
                .get(b)
                .ok_or_else(|| CatError::UnknownObject(b.clone()))?;
            le[i][j] = true;
        }
        // Transitive closure.
        for k in 0..n {
            for i in 0..n {
                if le[i][k] {
                    for j in 0..n {
                        if le[k][j] {
                            le[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if le[i][j] && le[j][i] {
                    return Err(CatError::Cycle {
                        a: objects[i].clone(),
                        b: objects[j].clone(),
                    });
                }
            }
        }
        FinCat::from_relation(objects, obj_index, &le)
    }

    /// Internal: assemble a poset category from a validated order relation.
    fn from_relation(
        objects: Vec<Label>,
        obj_index: HashMap<Label, usize>,
        le: &[Vec<bool>],
    ) -> Result<FinCat, CatError> {
        let n = objects.len();
        let mut mors = Vec::new();
        let mut hom: HashMap<(usize, usize), Vec<MorId>> = HashMap::new();
        let mut identities = vec![0; n];
        for x in 0..n {
            for y in 0..n {
                if le[x][y] {
                    let id = mors.len();
                    mors.push(Mor {
                        src: x,
                        tgt: y,
                        idx: 0,
                    });
                    hom.insert((x, y), vec![id]);
                    if x == y {
                        identities[x] = id;
                    }
                }
            }
        }
        let cat = FinCat {
            objects,
            obj_index,
            mors,
            hom,
            identities,
            table: None,
            poset: true,
        };
        cat.validate()?;
        Ok(cat)
    }

    /// Build a general category from an explicit arrow list and composition
    /// table. Arrows are (source, target) pairs indexed by position; the
    /// table contains triples (g, f, g∘f) of arrow indices. Identities are
    /// recovered from the table and their absence is an error.
    pub fn build_fincat(
        objects: Vec<Label>,
        arrows: &[(Label, Label)],
        compose: &[(usize, usize, usize)],
    ) -> Result<FinCat, CatError> {
        let mut obj_index = HashMap::new();
        for (i, label) in objects.iter().enumerate() {
            if obj_index.insert(label.clone(), i).is_some() {
                return Err(CatError::DuplicateObject(label.clone()));
            }
        }
        let mut mors = Vec::new();
        let mut hom: HashMap<(usize, usize), Vec<MorId>> = HashMap::new();
        for (s, t) in arrows {
            let src = *obj_index
                .get(s)
                .ok_or_else(|| CatError::UnknownObject(s.clone()))?;
            let tgt = *obj_index
                .get(t)
                .ok_or_else(|| CatError::UnknownObject(t.clone()))?;
            let slot = hom.entry((src, tgt)).or_default();
            mors.push(Mor {
                src,
                tgt,
                idx: slot.len(),
            });
            slot.push(mors.len() - 1);
        }
        let mut table = HashMap::new();
        for &(g, f, h) in compose {
            for m in [g, f, h] {
                if m >= mors.len() {
                    return Err(CatError::BadArrowIndex(m));
                }
            }
            table.insert((g, f), h);
        }

        // Recover identities: for each object the arrow acting as a
        // two-sided unit under the supplied table.
        let n = objects.len();
        let mut identities = vec![usize::MAX; n];
        for x in 0..n {
            let candidates = hom.get(&(x, x)).cloned().unwrap_or_default();
            'cand: for e in candidates {
                for (m, mor) in mors.iter().enumerate() {
                    if mor.tgt == x && table.get(&(e, m)) != Some(&m) {
                        continue 'cand;
                    }
                    if mor.src == x && table.get(&(m, e)) != Some(&m) {
                        continue 'cand;
                    }
                }
                identities[x] = e;
                break;
            }
            if identities[x] == usize::MAX {
                return Err(CatError::IdentityFailure(objects[x].clone()));
            }
        }

        let poset = {
            let homs_thin = hom.values().all(|v| v.len() <= 1);
            let antisymmetric = (0..n).all(|x| {
                ((x + 1)..n).all(|y| !(hom.contains_key(&(x, y)) && hom.contains_key(&(y, x))))
            });
            homs_thin && antisymmetric
        };

        let cat = FinCat {
            objects,
            obj_index,
            mors,
            hom,
            identities,
            table: Some(table),
            poset: false,
        };
        cat.validate()?;
        // Thin antisymmetric categories drop the table; composition is implied.
        if poset {
            let mut cat = cat;
            cat.table = None;
            cat.poset = true;
            Ok(cat)
        } else {
            Ok(cat)
        }
    }

    /// Product category: objects are pairs, morphisms are pairs, composition
    /// is componentwise.
    pub fn product(&self, other: &FinCat) -> FinCat {
        let mut objects = Vec::new();
        for a in &self.objects {
            for b in &other.objects {
                objects.push(Label::pair(a.clone(), b.clone()));
            }
        }
        let obj_index: HashMap<Label, usize> = objects
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        let pair_index = |a: usize, b: usize| a * other.objects.len() + b;

        let mut mors = Vec::new();
        let mut hom: HashMap<(usize, usize), Vec<MorId>> = HashMap::new();
        let mut component: Vec<(MorId, MorId)> = Vec::new();
        let mut lookup: HashMap<(MorId, MorId), MorId> = HashMap::new();
        for (fa, ma) in self.mors.iter().enumerate() {
            for (fb, mb) in other.mors.iter().enumerate() {
                let src = pair_index(ma.src, mb.src);
                let tgt = pair_index(ma.tgt, mb.tgt);
                let slot = hom.entry((src, tgt)).or_default();
                let id = mors.len();
                mors.push(Mor {
                    src,
                    tgt,
                    idx: slot.len(),
                });
                slot.push(id);
                component.push((fa, fb));
                lookup.insert((fa, fb), id);
            }
        }
        let mut identities = vec![0; objects.len()];
        for a in 0..self.objects.len() {
            for b in 0..other.objects.len() {
                identities[pair_index(a, b)] = lookup[&(self.identities[a], other.identities[b])];
            }
        }
        let poset = self.poset && other.poset;
        let table = if poset {
            None
        } else {
            let mut table = HashMap::new();
            for (g, &(ga, gb)) in component.iter().enumerate() {
                for (f, &(fa, fb)) in component.iter().enumerate() {
                    if mors[f].tgt == mors[g].src {
                        let ca = self.compose(ga, fa).expect("componentwise composable");
                        let cb = other.compose(gb, fb).expect("componentwise composable");
                        table.insert((g, f), lookup[&(ca, cb)]);
                    }
                }
            }
            Some(table)
        };
        let cat = FinCat {
            objects,
            obj_index,
            mors,
            hom,
            identities,
            table,
            poset,
        };
        cat.validate()
            .expect("product of valid categories is valid");
        cat
    }

    /// Arrow category: objects are the morphisms of C, morphisms f -> g are
    /// commuting squares (u, v) with g∘u = v∘f.
    pub fn arrow_category(&self) -> FinCat {
        let objects: Vec<Label> = self.mor_ids().map(|m| self.mor_label(m)).collect();
        let obj_index: HashMap<Label, usize> = objects
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();

        if self.poset {
            // (a ≤ b) -> (c ≤ d) exists iff a ≤ c and b ≤ d.
            let n = objects.len();
            let mut le = vec![vec![false; n]; n];
            for (f, mf) in self.mors.iter().enumerate() {
                for (g, mg) in self.mors.iter().enumerate() {
                    le[f][g] = self.le(mf.src, mg.src) && self.le(mf.tgt, mg.tgt);
                }
            }
            return FinCat::from_relation(objects, obj_index, &le)
                .expect("arrow category of a poset is a poset");
        }

        let mut mors = Vec::new();
        let mut hom: HashMap<(usize, usize), Vec<MorId>> = HashMap::new();
        let mut component: Vec<(MorId, MorId)> = Vec::new();
        let mut lookup: HashMap<(usize, MorId, MorId), MorId> = HashMap::new();
        for (fo, mf) in self.mors.iter().enumerate() {
            for (go, mg) in self.mors.iter().enumerate() {
                for &u in self.hom(mf.src, mg.src) {
                    for &v in self.hom(mf.tgt, mg.tgt) {
                        let left = self.compose(go, u).expect("composable");
                        let right = self.compose(v, fo).expect("composable");
                        if left == right {
                            let slot = hom.entry((fo, go)).or_default();
                            let id = mors.len();
                            mors.push(Mor {
                                src: fo,
                                tgt: go,
                                idx: slot.len(),
                            });
                            slot.push(id);
                            component.push((u, v));
                            lookup.insert((fo, u, v), id);
                        }
                    }
                }
            }
        }
        let identities: Vec<MorId> = self
            .mors
            .iter()
            .enumerate()
            .map(|(f, mf)| lookup[&(f, self.identities[mf.src], self.identities[mf.tgt])])
            .collect();
        let mut table = HashMap::new();
        for (g, &(gu, gv)) in component.iter().enumerate() {
            for (f, &(fu, fv)) in component.iter().enumerate() {
                if mors[f].tgt == mors[g].src {
                    let u = self.compose(gu, fu).expect("composable");
                    let v = self.compose(gv, fv).expect("composable");
                    table.insert((g, f), lookup[&(mors[f].src, u, v)]);
                }
            }
        }
        let cat = FinCat {
            objects,
            obj_index,
            mors,
            hom,
            identities,
            table: Some(table),
            poset: false,
        };
        cat.validate()
            .expect("arrow category of a valid category is valid");
        cat
    }

    // ------------------------------------------------------------------
    // Law checking
    // ------------------------------------------------------------------

    /// Exhaustively check the category laws. Posets additionally check that
    /// the object relation is a partial order with thin hom-sets.
    pub fn validate(&self) -> Result<(), CatError> {
        let n = self.objects.len();
        if self.identities.len() != n {
            return Err(CatError::Invalid("identity list length mismatch".into()));
        }
        for (key, ids) in &self.hom {
            for &m in ids {
                if (self.mors[m].src, self.mors[m].tgt) != *key {
                    return Err(CatError::Invalid(format!(
                        "hom table misfiles morphism {}",
                        self.mor_label(m)
                    )));
                }
            }
        }
        for x in 0..n {
            let e = self.identities[x];
            if self.mors[e].src != x || self.mors[e].tgt != x {
                return Err(CatError::IdentityFailure(self.objects[x].clone()));
            }
        }

        if self.table.is_none() {
            // Poset path: thin homs, reflexive, antisymmetric, transitive.
            for ids in self.hom.values() {
                if ids.len() > 1 {
                    return Err(CatError::Invalid(
                        "poset category with a fat hom-set".into(),
                    ));
                }
            }
            for x in 0..n {
                if !self.le(x, x) {
                    return Err(CatError::IdentityFailure(self.objects[x].clone()));
                }
                for y in 0..n {
                    if x != y && self.le(x, y) && self.le(y, x) {
                        return Err(CatError::Cycle {
                            a: self.objects[x].clone(),
                            b: self.objects[y].clone(),
                        });
                    }
                }
            }
            for x in 0..n {
                for y in 0..n {
                    if self.le(x, y) {
                        for z in 0..n {
                            if self.le(y, z) && !self.le(x, z) {
                                return Err(CatError::Invalid(format!(
                                    "order not transitive at {} ≤ {} ≤ {}",
                                    self.objects[x], self.objects[y], self.objects[z]
                                )));
                            }
                        }
                    }
                }
            }
            return Ok(());
        }

        // General path: table total on composable pairs, well-typed,
        // identities act as units, associativity on all composable triples.
        let table = self.table.as_ref().unwrap();
        for g in self.mor_ids() {
            for f in self.mor_ids() {
                if self.mors[f].tgt == self.mors[g].src {
                    let h = *table
                        .get(&(g, f))
                        .ok_or_else(|| CatError::MissingComposite {
                            g: self.mor_label(g),
                            f: self.mor_label(f),
                        })?;
                    if self.mors[h].src != self.mors[f].src || self.mors[h].tgt != self.mors[g].tgt
                    {
                        return Err(CatError::IllTypedComposite {
                            g: self.mor_label(g),
                            f: self.mor_label(f),
                        });
                    }
                } else if table.contains_key(&(g, f)) {
                    return Err(CatError::NotComposable {
                        g: self.mor_label(g),
                        f: self.mor_label(f),
                    });
                }
            }
        }
        for f in self.mor_ids() {
            let mor = &self.mors[f];
            if table[&(f, self.identities[mor.src])] != f
                || table[&(self.identities[mor.tgt], f)] != f
            {
                return Err(CatError::IdentityFailure(self.objects[mor.src].clone()));
            }
        }
        for h in self.mor_ids() {
            for f in self.mor_ids() {
                if self.mors[h].tgt != self.mors[f].src {
                    continue;
                }
                for g in self.mor_ids() {
                    if self.mors[f].tgt != self.mors[g].src {
                        continue;
                    }
                    let fh = table[&(f, h)];
                    let gf = table[&(g, f)];
                    if table[&(g, fh)] != table[&(gf, h)] {
                        return Err(CatError::NonAssociative {
                            g: self.mor_label(g),
                            f: self.mor_label(f),
                            h: self.mor_label(h),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

/// Shared handle for categories; functors and transformations hold these.
pub type Cat = Arc<FinCat>;
