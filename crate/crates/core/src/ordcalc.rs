//! Calculus of finite totally ordered sets: concatenation, lexicographic
//! products, the pulled-back order φ⁻¹(s), and the canonical maps s, d, e,
//! ζ, i₀, i₁.
//!
//! Elements of φ⁻¹(s) are pairs (a, b) with φ(a) = s(b), ordered primarily
//! by the b-coordinate and secondarily by a. This is the unique order making
//! the block decomposition φ⁻¹(s) = φ⁻¹(0) ∗ φ⁻¹(1) ∗ φ⁻¹(1) an order
//! isomorphism; an a-primary lexicographic order interleaves the blocks
//! already for φ = 1 on [1].

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::label::Label;

#[derive(Debug, Error)]
pub enum OrdError {
    #[error("totally ordered sets must be nonempty")]
    Empty,
    #[error("duplicate element label {0}")]
    Duplicate(Label),
    #[error("unknown element label {0}")]
    Unknown(Label),
    #[error("map is not order-preserving at {0}")]
    NotMonotone(Label),
    #[error("value list length does not match the source")]
    LengthMismatch,
    #[error("maps do not share a codomain")]
    CodomainMismatch,
    #[error("{0}")]
    Invalid(String),
}

/// A finite nonempty chain; the order is the list order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalOrder {
    elements: Vec<Label>,
}

impl TotalOrder {
    pub fn new(elements: Vec<Label>) -> Result<TotalOrder, OrdError> {
        if elements.is_empty() {
            return Err(OrdError::Empty);
        }
        TotalOrder::from_labels(elements)
    }

    /// Internal constructor that admits the empty chain (needed to represent
    /// empty pullbacks, which are flagged rather than fatal).
    pub(crate) fn from_labels(elements: Vec<Label>) -> Result<TotalOrder, OrdError> {
        for (i, l) in elements.iter().enumerate() {
            if elements[..i].contains(l) {
                return Err(OrdError::Duplicate(l.clone()));
            }
        }
        Ok(TotalOrder { elements })
    }

    /// The standard ordinal [n] = {0 < 1 < ... < n}.
    pub fn ordinal(n: usize) -> TotalOrder {
        TotalOrder {
            elements: (0..=n as i64).map(Label::Int).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Label] {
        &self.elements
    }

    pub fn label(&self, i: usize) -> &Label {
        &self.elements[i]
    }

    pub fn index_of(&self, l: &Label) -> Option<usize> {
        self.elements.iter().position(|e| e == l)
    }
}

// Orders serialize as their label list.
impl Serialize for TotalOrder {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.elements.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TotalOrder {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let elements = Vec::<Label>::deserialize(deserializer)?;
        TotalOrder::new(elements).map_err(D::Error::custom)
    }
}

/// An order-preserving map between chains, stored as target indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotoneMap {
    source: TotalOrder,
    target: TotalOrder,
    values: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(
        source: TotalOrder,
        target: TotalOrder,
        values: Vec<Label>,
    ) -> Result<MonotoneMap, OrdError> {
        let indices = values
            .iter()
            .map(|l| {
                target
                    .index_of(l)
                    .ok_or_else(|| OrdError::Unknown(l.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        MonotoneMap::from_indices(source, target, indices)
    }

    pub fn from_indices(
        source: TotalOrder,
        target: TotalOrder,
        values: Vec<usize>,
    ) -> Result<MonotoneMap, OrdError> {
        if values.len() != source.len() {
            return Err(OrdError::LengthMismatch);
        }
        for i in 1..values.len() {
            if values[i - 1] > values[i] {
                return Err(OrdError::NotMonotone(source.label(i).clone()));
            }
        }
        if let Some(&max) = values.iter().max() {
            if max >= target.len() {
                return Err(OrdError::Invalid("value index out of range".into()));
            }
        }
        Ok(MonotoneMap {
            source,
            target,
            values,
        })
    }

    pub fn identity(order: &TotalOrder) -> MonotoneMap {
        MonotoneMap {
            source: order.clone(),
            target: order.clone(),
            values: (0..order.len()).collect(),
        }
    }

    pub fn constant(source: &TotalOrder, target: &TotalOrder, at: usize) -> MonotoneMap {
        MonotoneMap {
            source: source.clone(),
            target: target.clone(),
            values: vec![at; source.len()],
        }
    }

    /// outer ∘ inner.
    pub fn compose(outer: &MonotoneMap, inner: &MonotoneMap) -> Result<MonotoneMap, OrdError> {
        if inner.target != outer.source {
            return Err(OrdError::CodomainMismatch);
        }
        Ok(MonotoneMap {
            source: inner.source.clone(),
            target: outer.target.clone(),
            values: inner.values.iter().map(|&i| outer.values[i]).collect(),
        })
    }

    pub fn source(&self) -> &TotalOrder {
        &self.source
    }

    pub fn target(&self) -> &TotalOrder {
        &self.target
    }

    pub fn value(&self, i: usize) -> usize {
        self.values[i]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// The value list parallel to the source, as target labels.
    pub fn value_labels(&self) -> Vec<Label> {
        self.values
            .iter()
            .map(|&i| self.target.label(i).clone())
            .collect()
    }
}

/// Concatenation A ∗ B: every element of A below every element of B.
/// Elements are tagged (0, a) and (1, b).
pub fn concat(a: &TotalOrder, b: &TotalOrder) -> Result<TotalOrder, OrdError> {
    if a.is_empty() || b.is_empty() {
        return Err(OrdError::Empty);
    }
    let mut elements = Vec::with_capacity(a.len() + b.len());
    for l in a.elements() {
        elements.push(Label::pair(Label::Int(0), l.clone()));
    }
    for l in b.elements() {
        elements.push(Label::pair(Label::Int(1), l.clone()));
    }
    TotalOrder::from_labels(elements)
}

/// The two block inclusions i₀, i₁: A -> A ∗ A.
pub fn block_inclusions(a: &TotalOrder) -> Result<(MonotoneMap, MonotoneMap), OrdError> {
    let aa = concat(a, a)?;
    let i0 = MonotoneMap::from_indices(a.clone(), aa.clone(), (0..a.len()).collect())?;
    let i1 = MonotoneMap::from_indices(a.clone(), aa, (a.len()..2 * a.len()).collect())?;
    Ok((i0, i1))
}

/// Lexicographic product A ⋉ B: (a, b) ≤ (a', b') iff a < a', or a = a' and
/// b ≤ b'.
pub fn lex(a: &TotalOrder, b: &TotalOrder) -> Result<TotalOrder, OrdError> {
    if a.is_empty() || b.is_empty() {
        return Err(OrdError::Empty);
    }
    let mut elements = Vec::with_capacity(a.len() * b.len());
    for la in a.elements() {
        for lb in b.elements() {
            elements.push(Label::pair(la.clone(), lb.clone()));
        }
    }
    TotalOrder::from_labels(elements)
}

/// The pulled-back order {(a, b) : φ(a) = s(b)}, ordered b-primary then a.
/// May be empty; callers check `is_empty`.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub order: TotalOrder,
    /// Source indices (a, b) of each element, parallel to the order.
    pub coords: Vec<(usize, usize)>,
}

impl Pullback {
    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn index_of_pair(&self, a: usize, b: usize) -> Option<usize> {
        self.coords.iter().position(|&(x, y)| (x, y) == (a, b))
    }
}

pub fn grayson_pullback(phi: &MonotoneMap, s: &MonotoneMap) -> Result<Pullback, OrdError> {
    if phi.target() != s.target() {
        return Err(OrdError::CodomainMismatch);
    }
    let mut coords = Vec::new();
    for b in 0..s.source().len() {
        for a in 0..phi.source().len() {
            if phi.value(a) == s.value(b) {
                coords.push((a, b));
            }
        }
    }
    let elements = coords
        .iter()
        .map(|&(a, b)| Label::pair(phi.source().label(a).clone(), s.source().label(b).clone()))
        .collect();
    Ok(Pullback {
        order: TotalOrder::from_labels(elements)?,
        coords,
    })
}

/// The fixed map s: [2] -> [1] with s(0) = 0, s(1) = s(2) = 1.
pub fn s_map() -> MonotoneMap {
    MonotoneMap::from_indices(
        TotalOrder::ordinal(2),
        TotalOrder::ordinal(1),
        vec![0, 1, 1],
    )
    .unwrap()
}

/// The section d: [1] -> [2], d(0) = 0, d(1) = 1.
pub fn d_section() -> MonotoneMap {
    MonotoneMap::from_indices(TotalOrder::ordinal(1), TotalOrder::ordinal(2), vec![0, 1]).unwrap()
}

/// The section e: [1] -> [2], e(0) = 0, e(1) = 2.
pub fn e_section() -> MonotoneMap {
    MonotoneMap::from_indices(TotalOrder::ordinal(1), TotalOrder::ordinal(2), vec![0, 2]).unwrap()
}

/// The canonical maps attached to φ: A -> [1]: the inclusions d, e of A into
/// φ⁻¹(s), the pointwise inequality ζ: d ≤ e, and the block inclusions
/// i₀, i₁: A -> A ∗ A.
pub struct IntervalData {
    pub pullback: Pullback,
    pub d: MonotoneMap,
    pub e: MonotoneMap,
    /// (d(a), e(a)) indices into the pullback order, one per a in A.
    pub zeta: Vec<(usize, usize)>,
    pub i0: MonotoneMap,
    pub i1: MonotoneMap,
}

pub fn interval_data(phi: &MonotoneMap) -> Result<IntervalData, OrdError> {
    if *phi.target() != TotalOrder::ordinal(1) {
        return Err(OrdError::Invalid(
            "interval data requires φ: A -> [1]".into(),
        ));
    }
    let a = phi.source().clone();
    let pullback = grayson_pullback(phi, &s_map())?;
    let d2 = d_section();
    let e2 = e_section();
    let d_vals = (0..a.len())
        .map(|x| {
            pullback
                .index_of_pair(x, d2.value(phi.value(x)))
                .expect("d lands in the pullback")
        })
        .collect::<Vec<_>>();
    let e_vals = (0..a.len())
        .map(|x| {
            pullback
                .index_of_pair(x, e2.value(phi.value(x)))
                .expect("e lands in the pullback")
        })
        .collect::<Vec<_>>();
    let d = MonotoneMap::from_indices(a.clone(), pullback.order.clone(), d_vals.clone())?;
    let e = MonotoneMap::from_indices(a.clone(), pullback.order.clone(), e_vals.clone())?;
    let zeta: Vec<(usize, usize)> = d_vals.into_iter().zip(e_vals).collect();
    for (i, &(dv, ev)) in zeta.iter().enumerate() {
        if dv > ev {
            return Err(OrdError::NotMonotone(a.label(i).clone()));
        }
    }
    let (i0, i1) = block_inclusions(&a)?;
    Ok(IntervalData {
        pullback,
        d,
        e,
        zeta,
        i0,
        i1,
    })
}

/// Check the block decomposition φ⁻¹(s) = φ⁻¹(0) ∗ φ⁻¹(1) ∗ φ⁻¹(1) for
/// φ: A -> [1]: the canonical relabeling must be an order isomorphism, i.e.
/// the expected element sequence equals the pullback's order verbatim.
/// Fibers may be empty; the concatenation simply skips them.
pub fn remark_decomposition(phi: &MonotoneMap) -> Result<(), String> {
    if *phi.target() != TotalOrder::ordinal(1) {
        return Err("decomposition requires φ: A -> [1]".into());
    }
    let pullback = grayson_pullback(phi, &s_map()).map_err(|e| e.to_string())?;
    let mut expected = Vec::new();
    for (b_copy, fiber_value) in [(0usize, 0usize), (1, 1), (2, 1)] {
        for a in 0..phi.source().len() {
            if phi.value(a) == fiber_value {
                expected.push((a, b_copy));
            }
        }
    }
    if expected == pullback.coords {
        Ok(())
    } else {
        Err(format!(
            "decomposition mismatch for φ = {:?}: expected {:?}, got {:?}",
            phi.values(),
            expected,
            pullback.coords
        ))
    }
}

/// All monotone maps [n] -> [1] (there are n + 2), in lexicographic order.
pub fn maps_to_interval(n: usize) -> Vec<MonotoneMap> {
    let a = TotalOrder::ordinal(n);
    let one = TotalOrder::ordinal(1);
    (0..=n + 1)
        .map(|ones| {
            let values = (0..=n).map(|i| usize::from(i + ones > n)).collect();
            MonotoneMap::from_indices(a.clone(), one.clone(), values).unwrap()
        })
        .collect()
}

/// The induced map ψ': (φψ)⁻¹(s) -> φ⁻¹(s), (b, k) -> (ψ(b), k).
pub fn induced_pullback_map(phi: &MonotoneMap, psi: &MonotoneMap) -> Result<MonotoneMap, OrdError> {
    if psi.target() != phi.source() {
        return Err(OrdError::CodomainMismatch);
    }
    let phi_psi = MonotoneMap::compose(phi, psi)?;
    let from = grayson_pullback(&phi_psi, &s_map())?;
    let to = grayson_pullback(phi, &s_map())?;
    let values = from
        .coords
        .iter()
        .map(|&(b, k)| {
            to.index_of_pair(psi.value(b), k)
                .expect("induced pair lands in the pullback")
        })
        .collect();
    MonotoneMap::from_indices(from.order, to.order, values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn concat_of_ordinals_is_a_chain() {
        let a = TotalOrder::ordinal(1);
        let b = TotalOrder::ordinal(2);
        let ab = concat(&a, &b).unwrap();
        assert_eq!(ab.len(), 5);
        // Three-fold concatenation of points is a 3-chain.
        let pt = TotalOrder::ordinal(0);
        let ppp = concat(&concat(&pt, &pt).unwrap(), &pt).unwrap();
        assert_eq!(ppp.len(), 3);
    }

    #[test]
    fn empty_orders_rejected() {
        assert!(TotalOrder::new(vec![]).is_err());
    }

    #[test]
    fn lex_order() {
        let one = TotalOrder::ordinal(1);
        let l = lex(&one, &one).unwrap();
        let want: Vec<Label> = [(0, 0), (0, 1), (1, 0), (1, 1)]
            .iter()
            .map(|&(a, b)| Label::ipair(a, b))
            .collect();
        assert_eq!(l.elements(), &want[..]);
        assert_eq!(lex(&one, &TotalOrder::ordinal(2)).unwrap().len(), 6);
        // [0] ⋉ B has B's length.
        let b = TotalOrder::ordinal(3);
        assert_eq!(lex(&TotalOrder::ordinal(0), &b).unwrap().len(), b.len());
    }

    #[test]
    fn order_serialization_round_trip() {
        let order = concat(&TotalOrder::ordinal(1), &TotalOrder::ordinal(0)).unwrap();
        let text = serde_json::to_string(&order).unwrap();
        let back: TotalOrder = serde_json::from_str(&text).unwrap();
        assert_eq!(back, order);
        // Maps serialize as value lists parallel to the source.
        let phi = MonotoneMap::constant(&TotalOrder::ordinal(2), &TotalOrder::ordinal(1), 1);
        assert_eq!(phi.value_labels(), vec![Label::Int(1); 3]);
        let rebuilt = MonotoneMap::new(
            phi.source().clone(),
            phi.target().clone(),
            phi.value_labels(),
        )
        .unwrap();
        assert_eq!(rebuilt, phi);
    }

    #[test]
    fn empty_pullback_is_flagged() {
        // φ constant 0 against s constant 1: no pairs at all.
        let a = TotalOrder::ordinal(2);
        let b = TotalOrder::ordinal(1);
        let one = TotalOrder::ordinal(1);
        let phi = MonotoneMap::constant(&a, &one, 0);
        let s = MonotoneMap::constant(&b, &one, 1);
        let p = grayson_pullback(&phi, &s).unwrap();
        assert!(p.is_empty());
    }

    #[test]
    fn pullback_of_identity_phi() {
        // φ = id on [1], s canonical: {(0,0), (1,1), (1,2)} in that order.
        let phi = MonotoneMap::identity(&TotalOrder::ordinal(1));
        let p = grayson_pullback(&phi, &s_map()).unwrap();
        assert_eq!(p.coords, vec![(0, 0), (1, 1), (1, 2)]);
        assert_eq!(
            p.order.elements(),
            &[Label::ipair(0, 0), Label::ipair(1, 1), Label::ipair(1, 2)][..]
        );
    }

    #[test]
    fn constant_phis_give_the_two_ends() {
        for n in 0..=4 {
            let a = TotalOrder::ordinal(n);
            let one = TotalOrder::ordinal(1);
            let zero = MonotoneMap::constant(&a, &one, 0);
            let p0 = grayson_pullback(&zero, &s_map()).unwrap();
            assert_eq!(p0.order.len(), n + 1);
            let one_map = MonotoneMap::constant(&a, &one, 1);
            let p1 = grayson_pullback(&one_map, &s_map()).unwrap();
            assert_eq!(p1.order.len(), 2 * (n + 1));
        }
    }

    #[test]
    fn interval_data_on_constants() {
        let a = TotalOrder::ordinal(2);
        let one = TotalOrder::ordinal(1);
        // φ = 0: d = e.
        let zero = MonotoneMap::constant(&a, &one, 0);
        let data = interval_data(&zero).unwrap();
        assert_eq!(data.d, data.e);
        // φ = 1: d corresponds to i₀ and e to i₁ under the block relabeling,
        // and every d-value precedes every e-value.
        let one_map = MonotoneMap::constant(&a, &one, 1);
        let data = interval_data(&one_map).unwrap();
        assert_eq!(data.d.values(), data.i0.values());
        assert_eq!(data.e.values(), data.i1.values());
        for x in 0..a.len() {
            for y in 0..a.len() {
                assert!(data.d.value(y) < data.e.value(x));
            }
        }
    }

    #[test]
    fn decomposition_exhaustive_small() {
        for n in 0..=8 {
            for phi in maps_to_interval(n) {
                remark_decomposition(&phi).unwrap();
                let data = interval_data(&phi).unwrap();
                for &(d, e) in &data.zeta {
                    assert!(d <= e);
                }
            }
        }
    }

    #[test]
    fn induced_map_commutes_with_d_and_e() {
        // ψ': (φψ)⁻¹(s) -> φ⁻¹(s) satisfies ψ'∘d_B = d_A∘ψ and likewise
        // for e, exhaustively over small sizes.
        for a_len in 1..=5usize {
            for b_len in 1..=5usize {
                let a = TotalOrder::ordinal(a_len - 1);
                let b = TotalOrder::ordinal(b_len - 1);
                for phi in maps_to_interval(a_len - 1) {
                    for psi_vals in monotone_value_lists(b_len, a_len) {
                        let psi =
                            MonotoneMap::from_indices(b.clone(), a.clone(), psi_vals).unwrap();
                        let phi_psi = MonotoneMap::compose(&phi, &psi).unwrap();
                        let induced = induced_pullback_map(&phi, &psi).unwrap();
                        let data_a = interval_data(&phi).unwrap();
                        let data_b = interval_data(&phi_psi).unwrap();
                        let lhs_d = MonotoneMap::compose(&induced, &data_b.d).unwrap();
                        let rhs_d = MonotoneMap::compose(&data_a.d, &psi).unwrap();
                        assert_eq!(lhs_d.values(), rhs_d.values());
                        let lhs_e = MonotoneMap::compose(&induced, &data_b.e).unwrap();
                        let rhs_e = MonotoneMap::compose(&data_a.e, &psi).unwrap();
                        assert_eq!(lhs_e.values(), rhs_e.values());
                    }
                }
            }
        }
    }

    #[test]
    fn block_inclusions_cover_and_order() {
        for n in 0..=5 {
            let a = TotalOrder::ordinal(n);
            let (i0, i1) = block_inclusions(&a).unwrap();
            let mut hit = vec![false; 2 * (n + 1)];
            for x in 0..a.len() {
                hit[i0.value(x)] = true;
                hit[i1.value(x)] = true;
                for y in 0..a.len() {
                    assert!(i0.value(x) < i1.value(y));
                }
            }
            assert!(hit.iter().all(|&h| h));
        }
    }

    /// All weakly increasing sequences of the given length into 0..bound.
    pub(crate) fn monotone_value_lists(len: usize, bound: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(len);
        fn go(
            len: usize,
            bound: usize,
            min: usize,
            current: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if current.len() == len {
                out.push(current.clone());
                return;
            }
            for v in min..bound {
                current.push(v);
                go(len, bound, v, current, out);
                current.pop();
            }
        }
        go(len, bound, 0, &mut current, &mut out);
        out
    }
}
