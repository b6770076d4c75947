//! Nerve of a finite category, truncated, plus the simplicial map a functor
//! induces between nerves.

use std::collections::HashMap;
use std::sync::Arc;

use crate::fincat::{FinCat, Functor, MorId};
use crate::label::Label;

use super::{SMap, SSet, SimpError};

/// Composable chains of each length up to the truncation; level 0 entries
/// are empty chains, one per object (indexed by object).
fn enumerate_chains(cat: &FinCat, trunc: usize) -> Vec<Vec<Vec<MorId>>> {
    let mut chains: Vec<Vec<Vec<MorId>>> = Vec::with_capacity(trunc + 1);
    chains.push((0..cat.object_count()).map(|_| Vec::new()).collect());
    for k in 1..=trunc {
        let mut next = Vec::new();
        for (i, chain) in chains[k - 1].iter().enumerate() {
            let tail = if k == 1 {
                i
            } else {
                cat.mor(*chain.last().unwrap()).tgt
            };
            for m in cat.mor_ids() {
                if cat.mor(m).src == tail {
                    let mut extended = chain.clone();
                    extended.push(m);
                    next.push(extended);
                }
            }
        }
        next.sort();
        chains.push(next);
    }
    chains
}

fn start_of(cat: &FinCat, k: usize, idx: usize, chain: &[MorId]) -> usize {
    if k == 0 {
        idx
    } else {
        cat.mor(chain[0]).src
    }
}

fn chain_label(cat: &FinCat, start: usize, chain: &[MorId]) -> Label {
    if chain.is_empty() {
        return cat.object_label(start).clone();
    }
    let mut parts = Vec::with_capacity(2 * chain.len() + 1);
    parts.push(cat.object_label(start).clone());
    for &m in chain {
        if !cat.is_poset() {
            parts.push(Label::Int(cat.mor(m).idx as i64));
        }
        parts.push(cat.object_label(cat.mor(m).tgt).clone());
    }
    Label::Tuple(parts)
}

/// Level k of the nerve is the set of functors [k] -> C, i.e. composable
/// chains of k morphisms (identities allowed); the action is precomposition.
pub fn nerve(cat: &FinCat, trunc: usize) -> SSet {
    let chains = enumerate_chains(cat, trunc);

    let chain_start = |k: usize, idx: usize| -> usize { start_of(cat, k, idx, &chains[k][idx]) };

    let label_of =
        |k: usize, idx: usize| -> Label { chain_label(cat, chain_start(k, idx), &chains[k][idx]) };

    let levels: Vec<Vec<Label>> = (0..=trunc)
        .map(|k| (0..chains[k].len()).map(|i| label_of(k, i)).collect())
        .collect();

    let mut lookup: Vec<HashMap<(usize, Vec<MorId>), usize>> = Vec::with_capacity(trunc + 1);
    for k in 0..=trunc {
        let mut map = HashMap::new();
        for (i, chain) in chains[k].iter().enumerate() {
            map.insert((chain_start(k, i), chain.clone()), i);
        }
        lookup.push(map);
    }

    let mut faces: Vec<Vec<Vec<usize>>> = vec![Vec::new(); trunc + 1];
    for k in 1..=trunc {
        for i in 0..=k {
            let mut table = Vec::with_capacity(chains[k].len());
            for (idx, chain) in chains[k].iter().enumerate() {
                let start = chain_start(k, idx);
                let (new_start, new_chain): (usize, Vec<MorId>) = if i == 0 {
                    let s = cat.mor(chain[0]).tgt;
                    (s, chain[1..].to_vec())
                } else if i == k {
                    (start, chain[..k - 1].to_vec())
                } else {
                    let mut c = Vec::with_capacity(k - 1);
                    c.extend_from_slice(&chain[..i - 1]);
                    c.push(
                        cat.compose(chain[i], chain[i - 1])
                            .expect("chain composable"),
                    );
                    c.extend_from_slice(&chain[i + 1..]);
                    (start, c)
                };
                table.push(lookup[k - 1][&(new_start, new_chain)]);
            }
            faces[k].push(table);
        }
    }

    let mut degs: Vec<Vec<Vec<usize>>> = vec![Vec::new(); trunc + 1];
    for k in 0..trunc {
        for i in 0..=k {
            let mut table = Vec::with_capacity(chains[k].len());
            for (idx, chain) in chains[k].iter().enumerate() {
                let start = chain_start(k, idx);
                let at = if i == 0 {
                    start
                } else {
                    cat.mor(chain[i - 1]).tgt
                };
                let mut c = Vec::with_capacity(k + 1);
                c.extend_from_slice(&chain[..i]);
                c.push(cat.identity(at));
                c.extend_from_slice(&chain[i..]);
                table.push(lookup[k + 1][&(start, c)]);
            }
            degs[k].push(table);
        }
    }

    SSet::assemble(trunc, levels, faces, degs).expect("nerve tables are well-formed")
}

/// The simplicial map between nerves induced by a functor: a chain maps to
/// its image chain.
pub fn nerve_map(
    f: &Functor,
    source_nerve: &Arc<SSet>,
    target_nerve: &Arc<SSet>,
) -> Result<SMap, SimpError> {
    let cat = f.source();
    let target = f.target();
    let trunc = source_nerve.trunc();
    if target_nerve.trunc() != trunc {
        return Err(SimpError::TruncationMismatch(trunc, target_nerve.trunc()));
    }
    let chains = enumerate_chains(cat, trunc);
    let mut components = Vec::with_capacity(trunc + 1);
    for k in 0..=trunc {
        if chains[k].len() != source_nerve.level_size(k) {
            return Err(SimpError::Malformed(
                "source object is not the nerve of the functor's source".into(),
            ));
        }
        let mut table = vec![usize::MAX; chains[k].len()];
        for (idx, chain) in chains[k].iter().enumerate() {
            let start = start_of(cat, k, idx, chain);
            let src_label = chain_label(cat, start, chain);
            let src = source_nerve.index_of(k, &src_label).ok_or_else(|| {
                SimpError::Malformed(format!("source chain {} missing", src_label))
            })?;
            let image_chain: Vec<MorId> = chain.iter().map(|&m| f.apply_mor(m)).collect();
            let image_label = chain_label(target, f.apply_obj(start), &image_chain);
            let image = target_nerve.index_of(k, &image_label).ok_or_else(|| {
                SimpError::Malformed(format!("image chain {} missing", image_label))
            })?;
            table[src] = image;
        }
        components.push(table);
    }
    SMap::new(source_nerve.clone(), target_nerve.clone(), components)
}
