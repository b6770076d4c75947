//! JSON form for truncated simplicial sets: truncation, level label lists,
//! and the face/degeneracy tables. The full action is reconstructed by
//! composition on load and validated.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::label::Label;

use super::{validate_sset, SMap, SSet, SimpError};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SSetJson {
    pub trunc: usize,
    pub levels: Vec<Vec<Label>>,
    pub faces: Vec<Vec<Vec<usize>>>,
    pub degeneracies: Vec<Vec<Vec<usize>>>,
}

impl SSet {
    pub fn to_json(&self) -> SSetJson {
        SSetJson {
            trunc: self.trunc(),
            levels: (0..=self.trunc()).map(|k| self.level(k).to_vec()).collect(),
            faces: self.faces.clone(),
            degeneracies: self.degs.clone(),
        }
    }

    pub fn from_json(json: &SSetJson) -> Result<SSet, SimpError> {
        let sset = SSet::assemble(
            json.trunc,
            json.levels.clone(),
            json.faces.clone(),
            json.degeneracies.clone(),
        )?;
        let report = validate_sset(&sset, 0, 100);
        if !report.ok {
            return Err(SimpError::Malformed(
                report.first_violation.unwrap_or_default(),
            ));
        }
        Ok(sset)
    }
}

/// A simplicial map as levelwise label pairs.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SMapJson {
    pub components: Vec<Vec<(Label, Label)>>,
}

impl SMap {
    pub fn to_json(&self) -> SMapJson {
        let components = (0..=self.source().trunc())
            .map(|k| {
                (0..self.source().level_size(k))
                    .map(|i| {
                        (
                            self.source().level(k)[i].clone(),
                            self.target().level(k)[self.apply(k, i)].clone(),
                        )
                    })
                    .collect()
            })
            .collect();
        SMapJson { components }
    }

    pub fn from_json(
        json: &SMapJson,
        source: Arc<SSet>,
        target: Arc<SSet>,
    ) -> Result<SMap, SimpError> {
        if json.components.len() != source.trunc() + 1 {
            return Err(SimpError::Malformed("component level count".into()));
        }
        let mut components = Vec::with_capacity(json.components.len());
        for (k, level) in json.components.iter().enumerate() {
            let mut table = vec![usize::MAX; source.level_size(k)];
            for (from, to) in level {
                let i = source
                    .index_of(k, from)
                    .ok_or_else(|| SimpError::Malformed(format!("unknown simplex {}", from)))?;
                let j = target
                    .index_of(k, to)
                    .ok_or_else(|| SimpError::Malformed(format!("unknown simplex {}", to)))?;
                table[i] = j;
            }
            if table.contains(&usize::MAX) {
                return Err(SimpError::Malformed(format!(
                    "component table at level {} is partial",
                    k
                )));
            }
            components.push(table);
        }
        SMap::new(source, target, components)
    }
}
