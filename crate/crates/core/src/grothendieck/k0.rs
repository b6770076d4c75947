//! K₀ from a generators-and-relations presentation: the free abelian group
//! on the generators modulo [b] = [a] + [c] for each cofiber triple,
//! [x] = [y] for each identified pair, and [z] = 0 for each zero object.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::label::Label;

use super::{smith_normal_form, IntMat};

#[derive(Debug, Error)]
pub enum K0Error {
    #[error("duplicate generator {0}")]
    DuplicateGenerator(Label),
    #[error("relation references unknown generator {0}")]
    UnknownGenerator(Label),
}

/// A presentation of K₀: generators plus cofiber/isomorphism/zero relations.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct K0Presentation {
    pub generators: Vec<Label>,
    /// (a, b, c) meaning [b] = [a] + [c].
    #[serde(default)]
    pub cofiber: Vec<(Label, Label, Label)>,
    /// (x, y) meaning [x] = [y].
    #[serde(default)]
    pub iso: Vec<(Label, Label)>,
    /// z meaning [z] = 0.
    #[serde(default)]
    pub zero: Vec<Label>,
}

impl K0Presentation {
    fn index(&self, l: &Label) -> Result<usize, K0Error> {
        self.generators
            .iter()
            .position(|g| g == l)
            .ok_or_else(|| K0Error::UnknownGenerator(l.clone()))
    }

    pub fn validate(&self) -> Result<(), K0Error> {
        for (i, g) in self.generators.iter().enumerate() {
            if self.generators[..i].contains(g) {
                return Err(K0Error::DuplicateGenerator(g.clone()));
            }
        }
        for (a, b, c) in &self.cofiber {
            self.index(a)?;
            self.index(b)?;
            self.index(c)?;
        }
        for (x, y) in &self.iso {
            self.index(x)?;
            self.index(y)?;
        }
        for z in &self.zero {
            self.index(z)?;
        }
        Ok(())
    }

    /// Relation matrix: one row per relation, one column per generator.
    pub fn relation_matrix(&self) -> Result<IntMat, K0Error> {
        self.validate()?;
        let g = self.generators.len();
        let rows = self.cofiber.len() + self.iso.len() + self.zero.len();
        let mut m = IntMat::zero(rows, g);
        let mut r = 0;
        for (a, b, c) in &self.cofiber {
            // [b] - [a] - [c] = 0. Coincident labels accumulate.
            let (a, b, c) = (self.index(a)?, self.index(b)?, self.index(c)?);
            m.set(r, b, m.get(r, b) + BigInt::one());
            m.set(r, a, m.get(r, a) - BigInt::one());
            m.set(r, c, m.get(r, c) - BigInt::one());
            r += 1;
        }
        for (x, y) in &self.iso {
            let (x, y) = (self.index(x)?, self.index(y)?);
            m.set(r, x, m.get(r, x) + BigInt::one());
            m.set(r, y, m.get(r, y) - BigInt::one());
            r += 1;
        }
        for z in &self.zero {
            let z = self.index(z)?;
            m.set(r, z, m.get(r, z) + BigInt::one());
            r += 1;
        }
        Ok(m)
    }
}

/// Coordinates of a generator class: residues against the invariant factors
/// followed by free coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassVector {
    pub torsion: Vec<BigInt>,
    pub free: Vec<BigInt>,
}

/// A finitely generated abelian group in invariant-factor form, with the
/// class of each presentation generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroup {
    /// d_1 | d_2 | ... with every d_i >= 2 (factors of 1 are dropped).
    pub invariant_factors: Vec<BigInt>,
    pub free_rank: usize,
    pub class_map: BTreeMap<Label, ClassVector>,
}

impl AbelianGroup {
    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty() && self.free_rank == 0
    }

    /// The class of a formal sum, reduced into group coordinates.
    pub fn class_of_sum(&self, terms: &[(Label, i64)]) -> Option<ClassVector> {
        let mut torsion = vec![BigInt::zero(); self.invariant_factors.len()];
        let mut free = vec![BigInt::zero(); self.free_rank];
        for (label, coeff) in terms {
            let class = self.class_map.get(label)?;
            for (t, add) in torsion.iter_mut().zip(&class.torsion) {
                *t += add * BigInt::from(*coeff);
            }
            for (f, add) in free.iter_mut().zip(&class.free) {
                *f += add * BigInt::from(*coeff);
            }
        }
        for (t, d) in torsion.iter_mut().zip(&self.invariant_factors) {
            *t = t.mod_floor(d);
        }
        Some(ClassVector { torsion, free })
    }
}

/// Compute the cokernel of the relation matrix and express every generator
/// in the quotient coordinates.
pub fn k0_group(pres: &K0Presentation) -> Result<AbelianGroup, K0Error> {
    let m = pres.relation_matrix()?;
    let g = pres.generators.len();
    let snf = smith_normal_form(&m);
    let diag = snf.s.diagonal();

    // Columns of the transformed basis: v -> v·V carries the relation
    // lattice onto the span of the d_i·e_i.
    let mut torsion_slots: Vec<(usize, BigInt)> = Vec::new();
    let mut unit_slots = 0usize;
    for (i, d) in diag.iter().enumerate() {
        if d.is_one() {
            unit_slots += 1;
        } else if !d.is_zero() {
            torsion_slots.push((i, d.clone()));
        }
    }
    let nonzero = unit_slots + torsion_slots.len();
    let free_rank = g - nonzero;
    let _ = unit_slots;

    let mut class_map = BTreeMap::new();
    for (x, label) in pres.generators.iter().enumerate() {
        // Row vector e_x · V.
        let coords: Vec<BigInt> = (0..g).map(|j| snf.v.get(x, j).clone()).collect();
        let torsion = torsion_slots
            .iter()
            .map(|(i, d)| coords[*i].mod_floor(d))
            .collect();
        let free = (nonzero..g).map(|i| coords[i].clone()).collect();
        class_map.insert(label.clone(), ClassVector { torsion, free });
    }

    let group = AbelianGroup {
        invariant_factors: torsion_slots.into_iter().map(|(_, d)| d).collect(),
        free_rank,
        class_map,
    };
    debug_assert!(relations_hold(pres, &group));
    Ok(group)
}

/// Every input relation holds on the computed classes.
pub fn relations_hold(pres: &K0Presentation, group: &AbelianGroup) -> bool {
    let zero_class = |g: &AbelianGroup| ClassVector {
        torsion: vec![BigInt::zero(); g.invariant_factors.len()],
        free: vec![BigInt::zero(); g.free_rank],
    };
    for (a, b, c) in &pres.cofiber {
        let sum = group
            .class_of_sum(&[(b.clone(), 1), (a.clone(), -1), (c.clone(), -1)])
            .unwrap();
        if sum != zero_class(group) {
            return false;
        }
    }
    for (x, y) in &pres.iso {
        let sum = group
            .class_of_sum(&[(x.clone(), 1), (y.clone(), -1)])
            .unwrap();
        if sum != zero_class(group) {
            return false;
        }
    }
    for z in &pres.zero {
        let sum = group.class_of_sum(&[(z.clone(), 1)]).unwrap();
        if sum != zero_class(group) {
            return false;
        }
    }
    true
}

/// Output form: {"rank": r, "torsion": [d...], "classes": {...}}.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AbelianGroupJson {
    pub rank: usize,
    pub torsion: Vec<String>,
    pub classes: BTreeMap<String, ClassVector>,
}

impl AbelianGroup {
    pub fn to_json(&self) -> AbelianGroupJson {
        AbelianGroupJson {
            rank: self.free_rank,
            torsion: self
                .invariant_factors
                .iter()
                .map(BigInt::to_string)
                .collect(),
            classes: self
                .class_map
                .iter()
                .map(|(l, c)| (l.to_string(), c.clone()))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(names: &[&str]) -> Vec<Label> {
        names.iter().map(|n| Label::name(*n)).collect()
    }

    #[test]
    fn free_group_on_generators() {
        for g in 1..=10 {
            let pres = K0Presentation {
                generators: (0..g as i64).map(Label::Int).collect(),
                ..Default::default()
            };
            let group = k0_group(&pres).unwrap();
            assert_eq!(group.free_rank, g);
            assert!(group.invariant_factors.is_empty());
        }
    }

    #[test]
    fn one_cofiber_relation_drops_rank() {
        let pres = K0Presentation {
            generators: gens(&["a", "b", "c"]),
            cofiber: vec![(Label::name("a"), Label::name("b"), Label::name("c"))],
            ..Default::default()
        };
        let group = k0_group(&pres).unwrap();
        assert_eq!(group.free_rank, 2);
        assert!(group.invariant_factors.is_empty());
        assert!(relations_hold(&pres, &group));
    }

    #[test]
    fn swindle_presentation_is_trivial() {
        // [x] = [x] + [x] forces [x] = 0.
        let pres = K0Presentation {
            generators: gens(&["x"]),
            cofiber: vec![(Label::name("x"), Label::name("x"), Label::name("x"))],
            ..Default::default()
        };
        let group = k0_group(&pres).unwrap();
        assert!(group.is_trivial());
    }

    #[test]
    fn torsion_appears_from_doubling() {
        // [x] = [y] + [y] and [x] = 0 give Z/2 generated by [y].
        let pres = K0Presentation {
            generators: gens(&["x", "y"]),
            cofiber: vec![(Label::name("y"), Label::name("x"), Label::name("y"))],
            zero: vec![Label::name("x")],
            ..Default::default()
        };
        let group = k0_group(&pres).unwrap();
        assert_eq!(group.free_rank, 0);
        assert_eq!(group.invariant_factors, vec![BigInt::from(2)]);
        assert!(relations_hold(&pres, &group));
    }

    #[test]
    fn unknown_generator_rejected() {
        let pres = K0Presentation {
            generators: gens(&["a"]),
            zero: vec![Label::name("ghost")],
            ..Default::default()
        };
        assert!(matches!(k0_group(&pres), Err(K0Error::UnknownGenerator(_))));
    }

    #[test]
    fn invariant_factors_stable_under_permutation() {
        let base = K0Presentation {
            generators: gens(&["a", "b", "c", "d"]),
            cofiber: vec![
                (Label::name("a"), Label::name("b"), Label::name("c")),
                (Label::name("b"), Label::name("d"), Label::name("b")),
            ],
            iso: vec![(Label::name("c"), Label::name("d"))],
            ..Default::default()
        };
        let reference = k0_group(&base).unwrap();
        let mut rng = crate::rng::SplitMix64::new(11);
        for _ in 0..20 {
            let mut generators = base.generators.clone();
            rng.shuffle(&mut generators);
            let mut cofiber = base.cofiber.clone();
            rng.shuffle(&mut cofiber);
            let shuffled = K0Presentation {
                generators,
                cofiber,
                iso: base.iso.clone(),
                zero: base.zero.clone(),
            };
            let group = k0_group(&shuffled).unwrap();
            assert_eq!(group.invariant_factors, reference.invariant_factors);
            assert_eq!(group.free_rank, reference.free_rank);
            assert!(relations_hold(&shuffled, &group));
        }
    }
}
