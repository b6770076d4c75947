//! Arrow-category indexing: the equivalence data j, i₀, i₁, i₂ exhibiting
//! level n of the construction over Ar[n], and the enumeration of
//! axis-aligned squares □ -> Ar[n] with their diagonal-anchored subset.

use std::sync::Arc;

use sdot_core::fincat::{classify_inclusion, full_subcategory, Cat, CatError, FinCat, Functor};
use sdot_core::label::Label;

use crate::claim::{Claim, NamedConstruction};

pub struct SdotFunctors {
    pub ar: Cat,
    pub d_cat: Cat,
    /// [n-1] -> Ar[n], i -> (0, i+1).
    pub j_top: Functor,
    /// [n-1] -> [n], i -> i+1.
    pub i0: Functor,
    /// [n] -> D along the top row.
    pub i1: Functor,
    /// D -> Ar[n].
    pub i2: Functor,
}

/// Objects of D ⊂ Ar[n]: the top row (0, i) and the diagonal (i, i).
fn d_objects(n: usize) -> Vec<Label> {
    let mut objs: Vec<Label> = (0..=n as i64).map(|i| Label::ipair(0, i)).collect();
    objs.extend((1..=n as i64).map(|i| Label::ipair(i, i)));
    objs
}

pub fn sdot_functors(n: usize) -> Result<NamedConstruction<SdotFunctors>, CatError> {
    if n == 0 {
        return Err(CatError::Invalid(
            "level indexing needs n >= 1 ([n-1] must be nonempty)".into(),
        ));
    }
    let prev: Cat = Arc::new(FinCat::ordinal(n - 1));
    let next: Cat = Arc::new(FinCat::ordinal(n));
    let ar: Cat = Arc::new(FinCat::ordinal(n).arrow_category());
    let j_top = Functor::from_objects(&prev, &ar, |l| Label::ipair(0, l.as_int().unwrap() + 1))?;
    let i0 = Functor::from_objects(&prev, &next, |l| Label::Int(l.as_int().unwrap() + 1))?;
    let (d_cat, i2) = full_subcategory(&ar, &d_objects(n))?;
    let i1 = Functor::from_objects(&next, &d_cat, |l| Label::ipair(0, l.as_int().unwrap()))?;

    let prefix = format!("sdot-functors.n{}", n);
    let claims = vec![
        Claim::check(
            format!("{}.jtop-fully-faithful", prefix),
            format!("level-{} indexing: j: [n-1] → Ar[n], i → (0, i+1)", n),
            j_top.is_fully_faithful() && j_top.is_injective_on_objects(),
            || "j is not a full embedding".to_string(),
        ),
        {
            let class = classify_inclusion(&i0);
            Claim::check(
                format!("{}.i0-cosieve", prefix),
                format!("level-{} indexing: i₀: [n-1] → [n], i → i+1", n),
                class.cosieve,
                || format!("classification was {:?}", class),
            )
        },
        {
            let class = classify_inclusion(&i1);
            Claim::check(
                format!("{}.i1-sieve", prefix),
                format!("level-{} indexing: i₁: [n] → D along the top row", n),
                class.sieve,
                || format!("classification was {:?}", class),
            )
        },
        Claim::check(
            format!("{}.i2-fully-faithful", prefix),
            format!("level-{} indexing: i₂: D → Ar[n]", n),
            i2.is_fully_faithful() && i2.is_injective_on_objects(),
            || "i₂ is not a full embedding".to_string(),
        ),
        Claim::check(
            format!("{}.d-objects", prefix),
            format!("level-{} indexing: D is the top row plus the diagonal", n),
            d_cat.object_count() == 2 * n + 1,
            || format!("D has {} objects", d_cat.object_count()),
        ),
    ];

    Ok(NamedConstruction::new(
        prefix,
        SdotFunctors {
            ar,
            d_cat,
            j_top,
            i0,
            i1,
            i2,
        },
        claims,
    ))
}

/// An axis-aligned rectangle in Ar[n], oriented so the □-coordinate (0,1)
/// lands at (i', j): corners (i,j), (i',j), (i,j'), (i',j') with
/// i < i' <= j < j'.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rectangle {
    pub i: usize,
    pub i2: usize,
    pub j: usize,
    pub j2: usize,
}

impl Rectangle {
    pub fn is_diagonal_anchored(&self) -> bool {
        self.i2 == self.j
    }

    /// Corner images in □-coordinate order (0,0), (0,1), (1,0), (1,1).
    pub fn corners(&self) -> [(usize, usize); 4] {
        [
            (self.i, self.j),
            (self.i2, self.j),
            (self.i, self.j2),
            (self.i2, self.j2),
        ]
    }
}

pub struct SdotSquares {
    pub ar: Cat,
    pub rectangles: Vec<Rectangle>,
    pub diagonal_anchored: Vec<Rectangle>,
    pub functors: Vec<Functor>,
}

/// Enumerate the rectangles by their corner parameters.
pub fn enumerate_rectangles(n: usize) -> Vec<Rectangle> {
    let mut out = Vec::new();
    for i in 0..=n {
        for i2 in i + 1..=n {
            for j in i2..=n {
                for j2 in j + 1..=n {
                    out.push(Rectangle { i, i2, j, j2 });
                }
            }
        }
    }
    out
}

/// Independent cross-check: count injective monotone object maps □ -> Ar[n]
/// whose image is an axis-aligned rectangle in the fixed orientation, by
/// brute force over all object 4-tuples.
pub fn brute_force_rectangles(n: usize) -> (usize, usize) {
    let ar = FinCat::ordinal(n).arrow_category();
    let objs: Vec<(usize, usize)> = ar
        .objects()
        .iter()
        .map(|l| {
            let c = l.as_int_tuple().unwrap();
            (c[0] as usize, c[1] as usize)
        })
        .collect();
    let le = |a: (usize, usize), b: (usize, usize)| a.0 <= b.0 && a.1 <= b.1;
    let mut total = 0;
    let mut anchored = 0;
    for &x00 in &objs {
        for &x01 in &objs {
            for &x10 in &objs {
                for &x11 in &objs {
                    // Monotone on □ and injective.
                    if !(le(x00, x01) && le(x00, x10) && le(x01, x11) && le(x10, x11)) {
                        continue;
                    }
                    let tuple = [x00, x01, x10, x11];
                    if (1..4).any(|a| tuple[..a].contains(&tuple[a])) {
                        continue;
                    }
                    // Axis-aligned rectangle in the fixed orientation:
                    // (0,1) moves the first coordinate, (1,0) the second.
                    let (i, j) = x00;
                    let (i2, j2) = x11;
                    if x01 == (i2, j) && x10 == (i, j2) && i < i2 && j < j2 {
                        total += 1;
                        if i2 == j {
                            anchored += 1;
                        }
                    }
                }
            }
        }
    }
    (total, anchored)
}

pub fn sdot_squares(n: usize) -> Result<NamedConstruction<SdotSquares>, CatError> {
    if n < 2 {
        return Err(CatError::Invalid("square enumeration needs n >= 2".into()));
    }
    let ar: Cat = Arc::new(FinCat::ordinal(n).arrow_category());
    let square: Cat = Arc::new(FinCat::ordinal(1).product(&FinCat::ordinal(1)));
    let rectangles = enumerate_rectangles(n);
    let diagonal_anchored: Vec<Rectangle> = rectangles
        .iter()
        .copied()
        .filter(Rectangle::is_diagonal_anchored)
        .collect();
    let mut functors = Vec::with_capacity(rectangles.len());
    for rect in &rectangles {
        let corners = rect.corners();
        let f = Functor::from_objects(&square, &ar, move |l| {
            let c = l.as_int_tuple().unwrap();
            let corner = corners[(c[0] * 2 + c[1]) as usize];
            Label::ipair(corner.0 as i64, corner.1 as i64)
        })?;
        functors.push(f);
    }

    let prefix = format!("sdot-squares.n{}", n);
    let mut claims = Vec::new();

    let (brute_total, brute_anchored) = brute_force_rectangles(n);
    claims.push(Claim::check(
        format!("{}.counts", prefix),
        format!(
            "square enumeration in Ar[{}] vs brute force over object maps",
            n
        ),
        rectangles.len() == brute_total && diagonal_anchored.len() == brute_anchored,
        || {
            format!(
                "formula gives ({}, {}), brute force gives ({}, {})",
                rectangles.len(),
                diagonal_anchored.len(),
                brute_total,
                brute_anchored
            )
        },
    ));
    if n == 2 {
        claims.push(Claim::check(
            format!("{}.pinned-counts", prefix),
            "square enumeration in Ar[2]: exactly one square, diagonal-anchored",
            rectangles.len() == 1 && diagonal_anchored.len() == 1,
            || format!("({}, {})", rectangles.len(), diagonal_anchored.len()),
        ));
    }
    if n == 3 {
        claims.push(Claim::check(
            format!("{}.pinned-counts", prefix),
            "square enumeration in Ar[3]: five squares, four diagonal-anchored",
            rectangles.len() == 5 && diagonal_anchored.len() == 4,
            || format!("({}, {})", rectangles.len(), diagonal_anchored.len()),
        ));
    }

    claims.push({
        // Unit squares (i' = i+1, j' = j+1) all appear.
        let mut missing = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let unit = Rectangle {
                    i,
                    i2: i + 1,
                    j,
                    j2: j + 1,
                };
                if !rectangles.contains(&unit) {
                    missing.push(format!("{:?}", unit));
                }
            }
        }
        Claim::check(
            format!("{}.unit-squares", prefix),
            format!(
                "every unit detection square lies in the Ar[{}] enumeration",
                n
            ),
            missing.is_empty(),
            || missing.join("; "),
        )
    });

    claims.push({
        // Pasting two adjacent unit squares stays in the enumerated set.
        let mut bad = Vec::new();
        for a in &rectangles {
            if a.i2 != a.i + 1 || a.j2 != a.j + 1 {
                continue;
            }
            for b in &rectangles {
                if b.i2 != b.i + 1 || b.j2 != b.j + 1 {
                    continue;
                }
                // Horizontal pasting: shared vertical edge.
                if a.i2 == b.i && a.j == b.j && a.j2 == b.j2 {
                    let pasted = Rectangle {
                        i: a.i,
                        i2: b.i2,
                        j: a.j,
                        j2: a.j2,
                    };
                    if !rectangles.contains(&pasted) {
                        bad.push(format!("{:?} + {:?}", a, b));
                    }
                }
                // Vertical pasting: shared horizontal edge.
                if a.j2 == b.j && a.i == b.i && a.i2 == b.i2 {
                    let pasted = Rectangle {
                        i: a.i,
                        i2: a.i2,
                        j: a.j,
                        j2: b.j2,
                    };
                    if !rectangles.contains(&pasted) {
                        bad.push(format!("{:?} + {:?}", a, b));
                    }
                }
            }
        }
        Claim::check(
            format!("{}.pasting", prefix),
            format!(
                "pasting adjacent unit squares stays enumerated in Ar[{}]",
                n
            ),
            bad.is_empty(),
            || bad.join("; "),
        )
    });

    Ok(NamedConstruction::new(
        prefix,
        SdotSquares {
            ar,
            rectangles,
            diagonal_anchored,
            functors,
        },
        claims,
    ))
}
