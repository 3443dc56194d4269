//! Free-group word engine, used as an independent oracle for the identity
//! resolutions. Endpoint bookkeeping is deliberately dropped: all letters
//! live in one free group, and the finite-instance checkers supply the typed
//! confirmation.

use std::fmt;

/// A word in the free group on string-labelled generators. Kept reduced by
/// every constructor and operation.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GroupWord {
    letters: Vec<(String, i8)>,
}

impl GroupWord {
    pub fn one() -> GroupWord {
        GroupWord::default()
    }

    /// A single generator.
    pub fn gen(label: &str) -> GroupWord {
        GroupWord {
            letters: vec![(label.to_string(), 1)],
        }
    }

    /// Builds a word from (label, exponent) letters and reduces it.
    pub fn from_letters<I: IntoIterator<Item = (String, i8)>>(letters: I) -> GroupWord {
        reduce_letters(letters.into_iter().collect())
    }

    pub fn letters(&self) -> &[(String, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|(g, e)| (g.clone(), -e))
                .collect(),
        }
    }

    pub fn mul(&self, other: &GroupWord) -> GroupWord {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        reduce_letters(letters)
    }

    /// `self^w = w^-1 · self · w`.
    pub fn conjugate(&self, w: &GroupWord) -> GroupWord {
        w.inverse().mul(self).mul(w)
    }
}

pub fn product<'a, I: IntoIterator<Item = &'a GroupWord>>(factors: I) -> GroupWord {
    let mut acc = GroupWord::one();
    for f in factors {
        acc = acc.mul(f);
    }
    acc
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, (g, e)) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            if *e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^-1")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Single-pass stack reduction; result contains no adjacent inverse pair.
fn reduce_letters(letters: Vec<(String, i8)>) -> GroupWord {
    let mut out: Vec<(String, i8)> = Vec::with_capacity(letters.len());
    for (g, e) in letters {
        debug_assert!(e == 1 || e == -1);
        match out.last() {
            Some((h, d)) if *h == g && *d == -e => {
                out.pop();
            }
            _ => out.push((g, e)),
        }
    }
    GroupWord { letters: out }
}

/// Reduces an arbitrary (not necessarily reduced) word.
pub fn reduce(w: &GroupWord) -> GroupWord {
    reduce_letters(w.letters.clone())
}

pub fn equal_in_free_group(u: &GroupWord, v: &GroupWord) -> bool {
    reduce(u) == reduce(v)
}

/// A square with free-generator edge labels.
#[derive(Clone, Debug)]
pub struct LabelledSquare {
    pub top: GroupWord,
    pub bottom: GroupWord,
    pub left: GroupWord,
    pub right: GroupWord,
}

impl LabelledSquare {
    pub fn new(left: &str, bottom: &str, top: &str, right: &str) -> LabelledSquare {
        LabelledSquare {
            top: GroupWord::gen(top),
            bottom: GroupWord::gen(bottom),
            left: GroupWord::gen(left),
            right: GroupWord::gen(right),
        }
    }

    /// The square defect: `right^-1 · top^-1 · left · bottom`.
    pub fn delta(&self) -> GroupWord {
        product([
            &self.right.inverse(),
            &self.top.inverse(),
            &self.left,
            &self.bottom,
        ])
    }
}

/// A 3-cube with free-generator edge labels. Edges are indexed by direction
/// and the signs of the two remaining coordinates in increasing index order,
/// matching `cubes::CubeShell`.
#[derive(Clone, Debug)]
pub struct LabelledCube {
    /// `edge1[2*d2 + d3]`, `edge2[2*d1 + d3]`, `edge3[2*d1 + d2]` with
    /// sign 0 = negative, 1 = positive.
    pub edge1: [GroupWord; 4],
    pub edge2: [GroupWord; 4],
    pub edge3: [GroupWord; 4],
}

impl LabelledCube {
    /// Twelve distinct generators. The labels follow the edge-direction
    /// grouping `a*` (direction 1), `b*` (direction 2), `c*` (direction 3),
    /// with index 1 at the all-positive corner, 2 and 4 on the mixed corners
    /// and 3 at the all-negative corner.
    pub fn generic() -> LabelledCube {
        let g = GroupWord::gen;
        LabelledCube {
            edge1: [g("a3"), g("a2"), g("a4"), g("a1")],
            edge2: [g("b3"), g("b2"), g("b4"), g("b1")],
            edge3: [g("c3"), g("c2"), g("c4"), g("c1")],
        }
    }

    fn e1(&self, d2: usize, d3: usize) -> &GroupWord {
        &self.edge1[2 * d2 + d3]
    }

    fn e2(&self, d1: usize, d3: usize) -> &GroupWord {
        &self.edge2[2 * d1 + d3]
    }

    fn e3(&self, d1: usize, d2: usize) -> &GroupWord {
        &self.edge3[2 * d1 + d2]
    }

    /// The face square obtained by fixing coordinate `dir` (1..=3) at
    /// `sign` (0 negative, 1 positive).
    pub fn face(&self, dir: usize, sign: usize) -> LabelledSquare {
        let s = sign;
        match dir {
            1 => LabelledSquare {
                top: self.e3(s, 0).clone(),
                bottom: self.e3(s, 1).clone(),
                left: self.e2(s, 0).clone(),
                right: self.e2(s, 1).clone(),
            },
            2 => LabelledSquare {
                top: self.e3(0, s).clone(),
                bottom: self.e3(1, s).clone(),
                left: self.e1(s, 0).clone(),
                right: self.e1(s, 1).clone(),
            },
            3 => LabelledSquare {
                top: self.e2(0, s).clone(),
                bottom: self.e2(1, s).clone(),
                left: self.e1(0, s).clone(),
                right: self.e1(1, s).clone(),
            },
            _ => panic!("cube direction must be 1, 2 or 3"),
        }
    }

    /// Edge conjugators into the all-positive corner: the direction-i edge
    /// with both remaining coordinates positive.
    pub fn corner_edges(&self) -> (GroupWord, GroupWord, GroupWord) {
        (
            self.e1(1, 1).clone(),
            self.e2(1, 1).clone(),
            self.e3(1, 1).clone(),
        )
    }
}

/// Both sides of the cube defect rule under the chosen factor ordering.
/// `printed = false` multiplies each side's three factors in the reversed
/// order.
pub fn cube_delta_sides(cube: &LabelledCube, printed: bool) -> (GroupWord, GroupWord) {
    let (u1, u2, u3) = cube.corner_edges();
    let d = |dir: usize, sign: usize| cube.face(dir, sign).delta();
    let lhs = [d(3, 0).conjugate(&u3), d(2, 1), d(1, 0).conjugate(&u1)];
    let rhs = [d(1, 1), d(2, 0).conjugate(&u2), d(3, 1)];
    if printed {
        (product(&lhs), product(&rhs))
    } else {
        (
            product(lhs.iter().rev()),
            product(rhs.iter().rev()),
        )
    }
}

/// Certifies the defect rule for composites of squares in direction 1 or 2:
/// builds two generic stacked squares on free letters, evaluates the defect
/// of the composite and compares it against the candidate ordering.
pub fn certify_delta_composition(direction: u8, printed: bool) -> bool {
    let g = GroupWord::gen;
    match direction {
        1 => {
            // alpha over beta: shared middle edge m
            let alpha = LabelledSquare::new("l1", "m", "t", "r1");
            let beta = LabelledSquare::new("l2", "b", "m", "r2");
            let composite = LabelledSquare {
                top: g("t"),
                bottom: g("b"),
                left: g("l1").mul(&g("l2")),
                right: g("r1").mul(&g("r2")),
            };
            let conj = alpha.delta().conjugate(&beta.right);
            let candidate = if printed {
                beta.delta().mul(&conj)
            } else {
                conj.mul(&beta.delta())
            };
            equal_in_free_group(&composite.delta(), &candidate)
        }
        2 => {
            // alpha beside gamma: shared middle edge m
            let alpha = LabelledSquare::new("l", "b1", "t1", "m");
            let gamma = LabelledSquare::new("m", "b2", "t2", "r2");
            let composite = LabelledSquare {
                top: g("t1").mul(&g("t2")),
                bottom: g("b1").mul(&g("b2")),
                left: g("l"),
                right: g("r2"),
            };
            let conj = alpha.delta().conjugate(&gamma.bottom);
            let candidate = if printed {
                conj.mul(&gamma.delta())
            } else {
                gamma.delta().mul(&conj)
            };
            equal_in_free_group(&composite.delta(), &candidate)
        }
        _ => panic!("square direction must be 1 or 2"),
    }
}

/// Certifies the classical commutator law `[b,c]^a [a,c] [a,b]^c =
/// [a,b] [a,c]^b [b,c]` (the resolved ordering) or its printed mirror in the
/// free group on three letters.
pub fn certify_classical_commutator_law(printed: bool) -> bool {
    let (a, b, c) = (GroupWord::gen("a"), GroupWord::gen("b"), GroupWord::gen("c"));
    let comm = |x: &GroupWord, y: &GroupWord| product([&x.inverse(), &y.inverse(), x, y]);
    let (lhs, rhs) = if printed {
        (
            product([&comm(&a, &b).conjugate(&c), &comm(&a, &c), &comm(&b, &c).conjugate(&a)]),
            product([&comm(&b, &c), &comm(&a, &c).conjugate(&b), &comm(&a, &b)]),
        )
    } else {
        (
            product([&comm(&b, &c).conjugate(&a), &comm(&a, &c), &comm(&a, &b).conjugate(&c)]),
            product([&comm(&a, &b), &comm(&a, &c).conjugate(&b), &comm(&b, &c)]),
        )
    };
    equal_in_free_group(&lhs, &rhs)
}
