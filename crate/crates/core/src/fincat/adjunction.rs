//! Adjunction checking: explicit unit/counit with triangle identities, or
//! the hom criterion for posets with the unit and counit synthesized.

use crate::label::Label;

use super::{cats_eq, CatError, Functor, NatTrans};

/// Outcome of an adjunction check F ⊣ G.
#[derive(Debug)]
pub struct AdjunctionReport {
    pub passed: bool,
    /// Human-readable reasons for failure, with witnesses.
    pub failures: Vec<String>,
    /// First (c, d) pair violating the hom criterion, if any.
    pub hom_witness: Option<(Label, Label)>,
    /// Unit synthesized in hom-criterion mode.
    pub unit: Option<NatTrans>,
    /// Counit synthesized in hom-criterion mode.
    pub counit: Option<NatTrans>,
}

impl AdjunctionReport {
    fn pass() -> Self {
        AdjunctionReport {
            passed: true,
            failures: Vec::new(),
            hom_witness: None,
            unit: None,
            counit: None,
        }
    }
}

/// Check F ⊣ G with explicit unit (id ⇒ G∘F) and counit (F∘G ⇒ id) by
/// verifying their typing and both triangle identities. Naturality is
/// already enforced by `NatTrans` construction.
pub fn check_adjunction(
    f: &Functor,
    g: &Functor,
    unit: &NatTrans,
    counit: &NatTrans,
) -> Result<AdjunctionReport, CatError> {
    if !cats_eq(f.target(), g.source()) || !cats_eq(g.target(), f.source()) {
        return Err(CatError::AdjunctionTypeMismatch(
            "F and G do not form a cycle of categories".into(),
        ));
    }
    let c = f.source().clone();
    let d = f.target().clone();
    let gf = Functor::compose(g, f)?;
    let fg = Functor::compose(f, g)?;
    if *unit.source_functor() != Functor::identity(&c) || *unit.target_functor() != gf {
        return Err(CatError::AdjunctionTypeMismatch(
            "unit is not id_C ⇒ G∘F".into(),
        ));
    }
    if *counit.source_functor() != fg || *counit.target_functor() != Functor::identity(&d) {
        return Err(CatError::AdjunctionTypeMismatch(
            "counit is not F∘G ⇒ id_D".into(),
        ));
    }

    let mut report = AdjunctionReport::pass();
    // (εF)(Fη) = id_F at every object of C.
    for x in 0..c.object_count() {
        let f_eta = f.apply_mor(unit.component(x));
        let eps_fx = counit.component(f.apply_obj(x));
        let composite = d.compose(eps_fx, f_eta)?;
        if composite != d.identity(f.apply_obj(x)) {
            report.passed = false;
            report
                .failures
                .push(format!("triangle (εF)(Fη) fails at {}", c.object_label(x)));
        }
    }
    // (Gε)(ηG) = id_G at every object of D.
    for y in 0..d.object_count() {
        let eta_gy = unit.component(g.apply_obj(y));
        let g_eps = g.apply_mor(counit.component(y));
        let composite = c.compose(g_eps, eta_gy)?;
        if composite != c.identity(g.apply_obj(y)) {
            report.passed = false;
            report
                .failures
                .push(format!("triangle (Gε)(ηG) fails at {}", d.object_label(y)));
        }
    }
    Ok(report)
}

/// Hom-criterion mode for posets: F ⊣ G iff Hom(Fc, d) is nonempty exactly
/// when Hom(c, Gd) is. On success the unit and counit are synthesized (each
/// component is the unique candidate) and the triangle identities verified.
pub fn check_adjunction_hom(f: &Functor, g: &Functor) -> Result<AdjunctionReport, CatError> {
    if !cats_eq(f.target(), g.source()) || !cats_eq(g.target(), f.source()) {
        return Err(CatError::AdjunctionTypeMismatch(
            "F and G do not form a cycle of categories".into(),
        ));
    }
    let c = f.source().clone();
    let d = f.target().clone();
    if !c.is_poset() || !d.is_poset() {
        return Err(CatError::NotAPoset(
            "hom-criterion mode requires poset source and target".into(),
        ));
    }

    let mut report = AdjunctionReport::pass();
    'outer: for x in 0..c.object_count() {
        for y in 0..d.object_count() {
            let lhs = !d.hom(f.apply_obj(x), y).is_empty();
            let rhs = !c.hom(x, g.apply_obj(y)).is_empty();
            if lhs != rhs {
                report.passed = false;
                report.hom_witness = Some((c.object_label(x).clone(), d.object_label(y).clone()));
                report.failures.push(format!(
                    "hom criterion fails at ({}, {}): Hom(F{}, {}) {} but Hom({}, G{}) {}",
                    c.object_label(x),
                    d.object_label(y),
                    c.object_label(x),
                    d.object_label(y),
                    if lhs { "nonempty" } else { "empty" },
                    c.object_label(x),
                    d.object_label(y),
                    if rhs { "nonempty" } else { "empty" },
                ));
                break 'outer;
            }
        }
    }
    if !report.passed {
        return Ok(report);
    }

    // Synthesize the unit and counit; each component is forced.
    let gf = Functor::compose(g, f)?;
    let fg = Functor::compose(f, g)?;
    let unit_components: Vec<_> = (0..c.object_count())
        .map(|x| c.hom(x, gf.apply_obj(x)))
        .collect();
    let counit_components: Vec<_> = (0..d.object_count())
        .map(|y| d.hom(fg.apply_obj(y), y))
        .collect();
    if let Some(x) = unit_components.iter().position(|h| h.is_empty()) {
        report.passed = false;
        report
            .failures
            .push(format!("no unit component at {}", c.object_label(x)));
        return Ok(report);
    }
    if let Some(y) = counit_components.iter().position(|h| h.is_empty()) {
        report.passed = false;
        report
            .failures
            .push(format!("no counit component at {}", d.object_label(y)));
        return Ok(report);
    }
    let unit = NatTrans::new(
        Functor::identity(&c),
        gf,
        unit_components.iter().map(|h| h[0]).collect(),
    )?;
    let counit = NatTrans::new(
        fg,
        Functor::identity(&d),
        counit_components.iter().map(|h| h[0]).collect(),
    )?;
    let explicit = check_adjunction(f, g, &unit, &counit)?;
    report.passed = explicit.passed;
    report.failures.extend(explicit.failures);
    report.unit = Some(unit);
    report.counit = Some(counit);
    Ok(report)
}
