//! Isomorphism testing between truncated simplicial sets.
//!
//! A candidate map is verified directly. Otherwise the search assigns the
//! nondegenerate simplices level by level (degenerate ones are forced by
//! their degeneracy presentation), pruned by iterated color refinement over
//! the face/degeneracy structure and guarded by a node budget.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::{SMap, SSet, SimpError};

pub const DEFAULT_NODE_BUDGET: u64 = 5_000_000;

/// Levels whose nondegenerate part is wider than this are refused rather
/// than searched.
const MAX_BRANCH_WIDTH: usize = 64;

pub fn sset_iso(
    x: &Arc<SSet>,
    y: &Arc<SSet>,
    candidate: Option<&SMap>,
) -> Result<Option<SMap>, SimpError> {
    if x.trunc() != y.trunc() {
        return Err(SimpError::TruncationMismatch(x.trunc(), y.trunc()));
    }
    if let Some(map) = candidate {
        if **map.source() != **x || **map.target() != **y {
            return Err(SimpError::Malformed(
                "candidate endpoints differ from the compared objects".into(),
            ));
        }
        // SMap construction already verified commutation; bijectivity is the
        // remaining condition.
        return Ok(map.is_levelwise_bijective().then(|| map.clone()));
    }
    for k in 0..=x.trunc() {
        if x.level_size(k) != y.level_size(k) {
            return Ok(None);
        }
    }
    let mut search = Search::new(x, y);
    search.run()
}

struct Search<'a> {
    x: &'a Arc<SSet>,
    y: &'a Arc<SSet>,
    trunc: usize,
    colors_x: Vec<Vec<u32>>,
    colors_y: Vec<Vec<u32>>,
    nondegenerate: Vec<Vec<usize>>,
    assign: Vec<Vec<Option<usize>>>,
    used: Vec<Vec<bool>>,
    budget: u64,
    exhausted: bool,
}

impl<'a> Search<'a> {
    fn new(x: &'a Arc<SSet>, y: &'a Arc<SSet>) -> Self {
        let trunc = x.trunc();
        let mut search = Search {
            x,
            y,
            trunc,
            colors_x: Vec::new(),
            colors_y: Vec::new(),
            nondegenerate: (0..=trunc).map(|k| x.nondegenerate(k)).collect(),
            assign: (0..=trunc).map(|k| vec![None; x.level_size(k)]).collect(),
            used: (0..=trunc).map(|k| vec![false; y.level_size(k)]).collect(),
            budget: DEFAULT_NODE_BUDGET,
            exhausted: false,
        };
        search.refine();
        search
    }

    /// Iterated color refinement on the disjoint union of both objects,
    /// using every generator's image color as the signature.
    fn refine(&mut self) {
        let trunc = self.trunc;
        let mut cx: Vec<Vec<u32>> = (0..=trunc)
            .map(|k| vec![k as u32; self.x.level_size(k)])
            .collect();
        let mut cy: Vec<Vec<u32>> = (0..=trunc)
            .map(|k| vec![k as u32; self.y.level_size(k)])
            .collect();
        for _round in 0..(2 * (trunc + 1) + 4) {
            let mut palette: BTreeMap<Vec<u32>, u32> = BTreeMap::new();
            let sig = |s: &SSet, colors: &[Vec<u32>], k: usize, idx: usize| -> Vec<u32> {
                let mut parts = vec![colors[k][idx]];
                if k >= 1 {
                    for i in 0..=k {
                        parts.push(colors[k - 1][s.face(k, i, idx)]);
                    }
                }
                if k < trunc {
                    for i in 0..=k {
                        parts.push(colors[k + 1][s.degeneracy(k, i, idx)]);
                    }
                }
                parts
            };
            let mut nx: Vec<Vec<u32>> = Vec::with_capacity(trunc + 1);
            let mut ny: Vec<Vec<u32>> = Vec::with_capacity(trunc + 1);
            for k in 0..=trunc {
                let mut row = Vec::with_capacity(self.x.level_size(k));
                for idx in 0..self.x.level_size(k) {
                    let signature = sig(self.x, &cx, k, idx);
                    let next = palette.len() as u32;
                    row.push(*palette.entry(signature).or_insert(next));
                }
                nx.push(row);
            }
            for k in 0..=trunc {
                let mut row = Vec::with_capacity(self.y.level_size(k));
                for idx in 0..self.y.level_size(k) {
                    let signature = sig(self.y, &cy, k, idx);
                    let next = palette.len() as u32;
                    row.push(*palette.entry(signature).or_insert(next));
                }
                ny.push(row);
            }
            let stable = nx == cx && ny == cy;
            cx = nx;
            cy = ny;
            if stable {
                break;
            }
        }
        self.colors_x = cx;
        self.colors_y = cy;
    }

    fn run(&mut self) -> Result<Option<SMap>, SimpError> {
        // Color histograms must agree, and branch sets must be tractable.
        for k in 0..=self.trunc {
            let mut hx: BTreeMap<u32, usize> = BTreeMap::new();
            let mut hy: BTreeMap<u32, usize> = BTreeMap::new();
            for &c in &self.colors_x[k] {
                *hx.entry(c).or_insert(0) += 1;
            }
            for &c in &self.colors_y[k] {
                *hy.entry(c).or_insert(0) += 1;
            }
            if hx != hy {
                return Ok(None);
            }
            if self.nondegenerate[k].len() > MAX_BRANCH_WIDTH {
                return Err(SimpError::SearchBound);
            }
        }
        let found = self.solve_level(0);
        if self.exhausted {
            return Err(SimpError::SearchBound);
        }
        if !found {
            return Ok(None);
        }
        let components: Vec<Vec<usize>> = self
            .assign
            .iter()
            .map(|row| row.iter().map(|v| v.unwrap()).collect())
            .collect();
        let map = SMap::new(self.x.clone(), self.y.clone(), components)?;
        debug_assert!(map.is_levelwise_bijective());
        Ok(Some(map))
    }

    fn solve_level(&mut self, k: usize) -> bool {
        if k > self.trunc {
            return true;
        }
        // Degenerate simplices are forced by lower-level assignments.
        let mut forced: Vec<usize> = Vec::new();
        let mut ok = true;
        for idx in 0..self.x.level_size(k) {
            if k == 0 || !self.x.is_degenerate(k, idx) {
                continue;
            }
            let i = (0..k)
                .find(|&i| self.x.degeneracy(k - 1, i, self.x.face(k, i, idx)) == idx)
                .expect("degenerate simplex has a section");
            let below = self.assign[k - 1][self.x.face(k, i, idx)].expect("lower level assigned");
            let image = self.y.degeneracy(k - 1, i, below);
            if self.used[k][image] || self.colors_x[k][idx] != self.colors_y[k][image] {
                ok = false;
                break;
            }
            self.assign[k][idx] = Some(image);
            self.used[k][image] = true;
            forced.push(idx);
        }
        if ok {
            let order: Vec<usize> = self.nondegenerate[k].clone();
            if self.assign_nondegenerate(k, &order, 0) {
                return true;
            }
        }
        for idx in forced {
            let image = self.assign[k][idx].take().unwrap();
            self.used[k][image] = false;
        }
        false
    }

    fn assign_nondegenerate(&mut self, k: usize, order: &[usize], pos: usize) -> bool {
        if self.exhausted {
            return false;
        }
        if pos == order.len() {
            if !self.level_consistent(k) {
                return false;
            }
            return self.solve_level(k + 1);
        }
        let idx = order[pos];
        for image in 0..self.y.level_size(k) {
            if self.used[k][image] || self.colors_x[k][idx] != self.colors_y[k][image] {
                continue;
            }
            if k >= 1 {
                let faces_match = (0..=k).all(|i| {
                    let fx = self.assign[k - 1][self.x.face(k, i, idx)].unwrap();
                    fx == self.y.face(k, i, image)
                });
                if !faces_match {
                    continue;
                }
            }
            if self.budget == 0 {
                self.exhausted = true;
                return false;
            }
            self.budget -= 1;
            self.assign[k][idx] = Some(image);
            self.used[k][image] = true;
            if self.assign_nondegenerate(k, order, pos + 1) {
                return true;
            }
            self.assign[k][idx] = None;
            self.used[k][image] = false;
        }
        false
    }

    /// All generator commutations into a fully assigned level.
    fn level_consistent(&self, k: usize) -> bool {
        if k >= 1 {
            for idx in 0..self.x.level_size(k) {
                let image = self.assign[k][idx].unwrap();
                for i in 0..=k {
                    let fx = self.assign[k - 1][self.x.face(k, i, idx)].unwrap();
                    if fx != self.y.face(k, i, image) {
                        return false;
                    }
                }
            }
            for idx in 0..self.x.level_size(k - 1) {
                let image = self.assign[k - 1][idx].unwrap();
                for i in 0..k {
                    let sx = self.assign[k][self.x.degeneracy(k - 1, i, idx)].unwrap();
                    if sx != self.y.degeneracy(k - 1, i, image) {
                        return false;
                    }
                }
            }
        }
        true
    }
}
