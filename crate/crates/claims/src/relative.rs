//! The relative reindexing functors: p_n: Ar[n]×□ -> Ar[n] collapsing the
//! source column to the initial zero, and q_n: Ar[n+1]×□ -> Ar[n+1] doing
//! the corresponding collapse one level up, both given by printed cases.

use std::sync::Arc;

use sdot_core::fincat::{Cat, CatError, FinCat, Functor};
use sdot_core::label::Label;

use crate::claim::{Claim, NamedConstruction};

pub struct RelativeFunctors {
    pub ar_n: Cat,
    pub ar_n1: Cat,
    pub square: Cat,
    pub p: Functor,
    pub q: Functor,
}

/// p_n(i, j, a, b): identity on the (1,·) column, constant (0,0) elsewhere.
pub fn p_value(i: i64, j: i64, a: i64, b: i64) -> (i64, i64) {
    let _ = b;
    if a == 1 {
        (i, j)
    } else {
        (0, 0)
    }
}

/// q_n(i, j, a, b) by cases on the square coordinate.
pub fn q_value(i: i64, j: i64, a: i64, b: i64) -> (i64, i64) {
    match (a, b) {
        (1, 0) => (i, j),
        (0, 0) => {
            if (i, j) == (0, 0) {
                (0, 0)
            } else if i <= 1 && j >= 1 {
                (0, 1)
            } else {
                (1, 1)
            }
        }
        (0, 1) => (1, 1),
        _ => {
            if (i, j) == (0, 0) {
                (1, 1)
            } else if i == 0 && j >= 1 {
                (1, j)
            } else {
                (i, j)
            }
        }
    }
}

fn split(l: &Label) -> (i64, i64, i64, i64) {
    let parts = l.as_tuple().unwrap();
    let arrow = parts[0].as_int_tuple().unwrap();
    let corner = parts[1].as_int_tuple().unwrap();
    (arrow[0], arrow[1], corner[0], corner[1])
}

pub fn relative_functors(n: usize) -> Result<NamedConstruction<RelativeFunctors>, CatError> {
    if n == 0 {
        return Err(CatError::Invalid("relative reindexing needs n >= 1".into()));
    }
    let square: Cat = Arc::new(FinCat::ordinal(1).product(&FinCat::ordinal(1)));
    let ar_n: Cat = Arc::new(FinCat::ordinal(n).arrow_category());
    let ar_n1: Cat = Arc::new(FinCat::ordinal(n + 1).arrow_category());
    let p_domain: Cat = Arc::new(ar_n.product(&square));
    let q_domain: Cat = Arc::new(ar_n1.product(&square));

    let prefix = format!("relative.n{}", n);
    let mut claims = Vec::new();

    let p_result = Functor::from_objects(&p_domain, &ar_n, |l| {
        let (i, j, a, b) = split(l);
        let (x, y) = p_value(i, j, a, b);
        Label::ipair(x, y)
    });
    claims.push(Claim::from_result(
        format!("{}.p-functorial", prefix),
        format!("p_{}: Ar[{}]×□ → Ar[{}] is monotone", n, n, n),
        p_result.as_ref().map(|_| ()).map_err(|e| e.to_string()),
    ));
    let p = p_result?;

    let q_result = Functor::from_objects(&q_domain, &ar_n1, |l| {
        let (i, j, a, b) = split(l);
        let (x, y) = q_value(i, j, a, b);
        Label::ipair(x, y)
    });
    claims.push(Claim::from_result(
        format!("{}.q-functorial", prefix),
        format!("q_{}: Ar[{}]×□ → Ar[{}] is monotone", n, n + 1, n + 1),
        q_result.as_ref().map(|_| ()).map_err(|e| e.to_string()),
    ));
    let q = q_result?;

    if n == 2 {
        claims.push({
            let spots = [
                ((1, 2, 1, 1), (1, 2)),
                ((0, 2, 0, 0), (0, 0)),
                ((1, 2, 0, 1), (0, 0)),
            ];
            let bad: Vec<String> = spots
                .iter()
                .filter(|((i, j, a, b), want)| p_value(*i, *j, *a, *b) != *want)
                .map(|(args, want)| format!("p{:?} != {:?}", args, want))
                .collect();
            Claim::check(
                format!("{}.p-values", prefix),
                "printed spot values of p_2",
                bad.is_empty(),
                || bad.join("; "),
            )
        });
        claims.push({
            let spots = [
                ((0, 0, 0, 0), (0, 0)),
                ((0, 2, 0, 0), (0, 1)),
                ((2, 2, 0, 0), (1, 1)),
                ((0, 0, 1, 1), (1, 1)),
                ((0, 2, 1, 1), (1, 2)),
                ((1, 2, 1, 1), (1, 2)),
            ];
            let bad: Vec<String> = spots
                .iter()
                .filter(|((i, j, a, b), want)| q_value(*i, *j, *a, *b) != *want)
                .map(|(args, want)| format!("q{:?} != {:?}", args, want))
                .collect();
            Claim::check(
                format!("{}.q-values", prefix),
                "printed spot values of q_2",
                bad.is_empty(),
                || bad.join("; "),
            )
        });
    }

    Ok(NamedConstruction::new(
        prefix,
        RelativeFunctors {
            ar_n,
            ar_n1,
            square,
            p,
            q,
        },
        claims,
    ))
}

impl RelativeFunctors {
    /// Full object-value table of p, as (input, output) label pairs.
    pub fn p_table(&self) -> Vec<(Label, Label)> {
        let domain = self.p.source();
        (0..domain.object_count())
            .map(|x| {
                (
                    domain.object_label(x).clone(),
                    self.p.obj_image_label(x).clone(),
                )
            })
            .collect()
    }

    pub fn q_table(&self) -> Vec<(Label, Label)> {
        let domain = self.q.source();
        (0..domain.object_count())
            .map(|x| {
                (
                    domain.object_label(x).clone(),
                    self.q.obj_image_label(x).clone(),
                )
            })
            .collect()
    }
}
