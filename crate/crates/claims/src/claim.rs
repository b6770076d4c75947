//! Claims: machine-checked statements with stable ids and witnesses.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// One checked statement. The location string describes where the claim
/// sits in the construction landscape, so failures are citable.
#[derive(Clone, Debug, Serialize)]
pub struct Claim {
    pub id: String,
    pub location: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Claim {
    pub fn from_result(
        id: impl Into<String>,
        location: impl Into<String>,
        outcome: Result<(), String>,
    ) -> Claim {
        match outcome {
            Ok(()) => Claim {
                id: id.into(),
                location: location.into(),
                verdict: Verdict::Pass,
                witness: None,
            },
            Err(witness) => Claim {
                id: id.into(),
                location: location.into(),
                verdict: Verdict::Fail,
                witness: Some(witness),
            },
        }
    }

    pub fn check(
        id: impl Into<String>,
        location: impl Into<String>,
        ok: bool,
        witness: impl FnOnce() -> String,
    ) -> Claim {
        Claim::from_result(id, location, if ok { Ok(()) } else { Err(witness()) })
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// A named construction: the built payload plus its bundled checks. The
/// construction counts as verified only when every claim passes.
#[derive(Debug)]
pub struct NamedConstruction<P> {
    pub name: String,
    pub payload: P,
    pub claims: Vec<Claim>,
}

impl<P> NamedConstruction<P> {
    pub fn new(name: impl Into<String>, payload: P, claims: Vec<Claim>) -> Self {
        NamedConstruction {
            name: name.into(),
            payload,
            claims,
        }
    }

    pub fn passed(&self) -> bool {
        self.claims.iter().all(Claim::passed)
    }

    pub fn failures(&self) -> Vec<&Claim> {
        self.claims.iter().filter(|c| !c.passed()).collect()
    }
}
