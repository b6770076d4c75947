//! JSON forms for categories and functors.
//!
//! A category is either `{"poset": {"objects": [...], "covers": [[a,b],...]}}`
//! or `{"general": {"objects": [...], "arrows": [[s,t],...],
//! "compose": [[g,f,h],...]}}` with arrows indexed by position. Functors are
//! serialized as object/morphism maps keyed by labels.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::label::Label;

use super::{Cat, CatError, FinCat, Functor};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum FinCatJson {
    #[serde(rename = "poset")]
    Poset {
        objects: Vec<Label>,
        covers: Vec<(Label, Label)>,
    },
    #[serde(rename = "general")]
    General {
        objects: Vec<Label>,
        arrows: Vec<(Label, Label)>,
        compose: Vec<(usize, usize, usize)>,
    },
}

impl FinCat {
    pub fn to_json(&self) -> FinCatJson {
        if self.is_poset() {
            // Emit the covering relation (transitive reduction).
            let n = self.object_count();
            let mut covers = Vec::new();
            for x in 0..n {
                for y in 0..n {
                    if x == y || !self.le(x, y) {
                        continue;
                    }
                    let is_cover =
                        (0..n).all(|z| z == x || z == y || !(self.le(x, z) && self.le(z, y)));
                    if is_cover {
                        covers.push((self.object_label(x).clone(), self.object_label(y).clone()));
                    }
                }
            }
            FinCatJson::Poset {
                objects: self.objects().to_vec(),
                covers,
            }
        } else {
            let arrows = self
                .mor_ids()
                .map(|m| {
                    let mor = self.mor(m);
                    (
                        self.object_label(mor.src).clone(),
                        self.object_label(mor.tgt).clone(),
                    )
                })
                .collect();
            let mut compose = Vec::new();
            for g in self.mor_ids() {
                for f in self.mor_ids() {
                    if self.mor(f).tgt == self.mor(g).src {
                        compose.push((g, f, self.compose(g, f).unwrap()));
                    }
                }
            }
            FinCatJson::General {
                objects: self.objects().to_vec(),
                arrows,
                compose,
            }
        }
    }

    pub fn from_json(json: &FinCatJson) -> Result<FinCat, CatError> {
        match json {
            FinCatJson::Poset { objects, covers } => FinCat::build_poset(objects.clone(), covers),
            FinCatJson::General {
                objects,
                arrows,
                compose,
            } => FinCat::build_fincat(objects.clone(), arrows, compose),
        }
    }
}

/// A functor as data: categories plus label-keyed maps. The morphism map may
/// be omitted when the target is a poset (images are then forced).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FunctorJson {
    pub source: FinCatJson,
    pub target: FinCatJson,
    pub object_map: Vec<(Label, Label)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub morphism_map: Option<Vec<(Label, Label)>>,
}

impl Functor {
    pub fn to_json(&self) -> FunctorJson {
        let source = self.source();
        let target = self.target();
        let object_map = (0..source.object_count())
            .map(|x| {
                (
                    source.object_label(x).clone(),
                    target.object_label(self.apply_obj(x)).clone(),
                )
            })
            .collect();
        let morphism_map = if target.is_poset() {
            None
        } else {
            Some(
                source
                    .mor_ids()
                    .map(|m| (source.mor_label(m), target.mor_label(self.apply_mor(m))))
                    .collect(),
            )
        };
        FunctorJson {
            source: source.to_json(),
            target: target.to_json(),
            object_map,
            morphism_map,
        }
    }

    pub fn from_json(json: &FunctorJson) -> Result<Functor, CatError> {
        let source: Cat = Arc::new(FinCat::from_json(&json.source)?);
        let target: Cat = Arc::new(FinCat::from_json(&json.target)?);
        let obj_map = resolve_map(&source, &target, &json.object_map)?;
        match &json.morphism_map {
            None => {
                let pairs = obj_map.clone();
                Functor::from_objects(&source, &target, move |l| {
                    pairs
                        .iter()
                        .find(|(from, _)| from == l)
                        .expect("object map checked total")
                        .1
                        .clone()
                })
            }
            Some(pairs) => {
                let mut mor_map = Vec::with_capacity(source.morphism_count());
                'mors: for m in source.mor_ids() {
                    let key = source.mor_label(m);
                    for (from, to) in pairs {
                        if *from == key {
                            let image = target
                                .mor_ids()
                                .find(|&mm| target.mor_label(mm) == *to)
                                .ok_or_else(|| CatError::UnknownObject(to.clone()))?;
                            mor_map.push(image);
                            continue 'mors;
                        }
                    }
                    return Err(CatError::Invalid(format!("morphism_map misses {}", key)));
                }
                let obj_idx = source
                    .objects()
                    .iter()
                    .map(|l| {
                        obj_map
                            .iter()
                            .find(|(from, _)| from == l)
                            .map(|(_, to)| target.object_index(to).unwrap())
                            .ok_or_else(|| CatError::Invalid(format!("object_map misses {}", l)))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Functor::new(source, target, obj_idx, mor_map)
            }
        }
    }
}

fn resolve_map(
    source: &Cat,
    target: &Cat,
    pairs: &[(Label, Label)],
) -> Result<Vec<(Label, Label)>, CatError> {
    for (from, to) in pairs {
        if source.object_index(from).is_none() {
            return Err(CatError::UnknownObject(from.clone()));
        }
        if target.object_index(to).is_none() {
            return Err(CatError::UnknownObject(to.clone()));
        }
    }
    for l in source.objects() {
        if !pairs.iter().any(|(from, _)| from == l) {
            return Err(CatError::Invalid(format!("object_map misses {}", l)));
        }
    }
    Ok(pairs.to_vec())
}
