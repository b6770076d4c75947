//! Path space PY: level n is level n+1 of Y with the shifted action, the
//! projection to Y induced by the 0-face, and the inclusion of Y_1 as a
//! constant simplicial set.

use std::sync::Arc;

use super::{Mono, SMap, SSet, SimpError};

pub struct PathSpace {
    pub py: Arc<SSet>,
    /// The input truncated to the output dimension (target of `d0_proj`).
    pub base: Arc<SSet>,
    /// Constant simplicial set on Y_1 (source of `vertex_incl`).
    pub vertices: Arc<SSet>,
    /// PY -> Y by the 0-face coface i -> i+1.
    pub d0_proj: SMap,
    /// const(Y_1) -> PY: at level n the action of σ_n: [n+1] -> [1] with
    /// σ_n(0) = 0 and σ_n(i) = 1 for i >= 1.
    pub vertex_incl: SMap,
}

pub fn path_space(x: &Arc<SSet>, trunc: usize) -> Result<PathSpace, SimpError> {
    let need = trunc + 1;
    if x.trunc() < need {
        return Err(SimpError::InsufficientTruncation {
            need,
            found: x.trunc(),
        });
    }
    let levels: Vec<_> = (0..=trunc).map(|k| x.level(k + 1).to_vec()).collect();
    let mut faces = vec![Vec::new(); trunc + 1];
    let mut degs = vec![Vec::new(); trunc + 1];
    for k in 1..=trunc {
        for i in 0..=k {
            faces[k].push(x.act(&Mono::shift(&Mono::coface(k, i))));
        }
    }
    for k in 0..trunc {
        for i in 0..=k {
            degs[k].push(x.act(&Mono::shift(&Mono::codegen(k, i))));
        }
    }
    let py = Arc::new(SSet::assemble(trunc, levels, faces, degs)?);

    let base = Arc::new(x.truncate(trunc)?);
    let d0_components: Vec<Vec<usize>> = (0..=trunc)
        .map(|k| {
            // δ⁰: [k] -> [k+1], i -> i+1.
            let delta0 = Mono::new(k, k + 1, (1..=k + 1).collect());
            x.act(&delta0)
        })
        .collect();
    let d0_proj = SMap::new(py.clone(), base.clone(), d0_components)?;

    let vertices = Arc::new(SSet::constant(x.level(1).to_vec(), trunc)?);
    let incl_components: Vec<Vec<usize>> = (0..=trunc)
        .map(|k| {
            // σ_k: [k+1] -> [1], 0 -> 0 and everything else -> 1.
            let mut vals = vec![0; k + 2];
            vals[1..].fill(1);
            x.act(&Mono::new(k + 1, 1, vals))
        })
        .collect();
    let vertex_incl = SMap::new(vertices.clone(), py.clone(), incl_components)?;

    Ok(PathSpace {
        py,
        base,
        vertices,
        d0_proj,
        vertex_incl,
    })
}
