//! Free groups, their integral group rings, and Fox derivatives.

use std::collections::BTreeMap;
use std::fmt;

use crate::bundle::SL2Z;
use crate::exactla::IntMatrix;

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverted: bool,
}

impl Letter {
    pub fn new(generator: usize) -> Self {
        Letter {
            generator,
            inverted: false,
        }
    }

    pub fn inv(self) -> Self {
        Letter {
            generator: self.generator,
            inverted: !self.inverted,
        }
    }
}

/// Freely reduced word in the free group.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeWord(Vec<Letter>);

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord(Vec::new())
    }

    pub fn generator(g: usize) -> Self {
        FreeWord(vec![Letter::new(g)])
    }

    /// Reduces the letters as they are pushed.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut w = FreeWord::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, l: Letter) {
        if self.0.last() == Some(&l.inv()) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut w = self.clone();
        for &l in &other.0 {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    /// `a b a^{-1} b^{-1}`
    pub fn commutator(a: &FreeWord, b: &FreeWord) -> FreeWord {
        a.concat(b).concat(&a.inverse()).concat(&b.inverse())
    }

    /// Image under a representation given on generators.
    pub fn evaluate(&self, images: &[SL2Z]) -> SL2Z {
        self.0.iter().fold(SL2Z::identity(), |acc, l| {
            let m = &images[l.generator];
            if l.inverted {
                acc.mul(&m.inverse())
            } else {
                acc.mul(m)
            }
        })
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "x{}", l.generator)?;
            if l.inverted {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

/// The relator `[a_1, b_1] ... [a_g, b_g]` with generators ordered
/// `a_1, b_1, ..., a_g, b_g` (indices `0..2g`).
pub fn surface_relator(genus: usize) -> FreeWord {
    (0..genus).fold(FreeWord::identity(), |acc, i| {
        let a = FreeWord::generator(2 * i);
        let b = FreeWord::generator(2 * i + 1);
        acc.concat(&FreeWord::commutator(&a, &b))
    })
}

/// Element of the integral group ring: a finite sum of reduced words with
/// nonzero integer coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GroupRingElement(BTreeMap<FreeWord, i64>);

impl GroupRingElement {
    pub fn zero() -> Self {
        GroupRingElement(BTreeMap::new())
    }

    pub fn from_word(w: FreeWord) -> Self {
        let mut e = Self::zero();
        e.add_term(w, 1);
        e
    }

    pub fn one() -> Self {
        Self::from_word(FreeWord::identity())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, i64)> {
        self.0.iter().map(|(w, &c)| (w, c))
    }

    pub fn add_term(&mut self, w: FreeWord, coeff: i64) {
        let c = self.0.entry(w.clone()).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.0.remove(&w);
        }
    }

    pub fn add(&self, other: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &GroupRingElement) -> GroupRingElement {
        let mut out = GroupRingElement::zero();
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    /// The anti-involution `Σ c_w w ↦ Σ c_w w^{-1}`.
    pub fn conjugate(&self) -> GroupRingElement {
        let mut out = GroupRingElement::zero();
        for (w, c) in self.terms() {
            out.add_term(w.inverse(), c);
        }
        out
    }

    /// Sum of coefficients (image under the trivial representation).
    pub fn augmentation(&self) -> i64 {
        self.0.values().sum()
    }

    /// Linear extension of a representation on generators to 2x2 integer matrices.
    pub fn evaluate(&self, images: &[SL2Z]) -> IntMatrix {
        let mut acc = IntMatrix::zeros(2, 2);
        for (w, c) in self.terms() {
            let m = w.evaluate(images).to_matrix();
            let scaled = IntMatrix::from_vec(2, 2, m.entries().iter().map(|x| x * c).collect());
            acc = acc.add(&scaled);
        }
        acc
    }
}

/// Left Fox derivative `∂w/∂x_gen`, using `∂(uv) = ∂u + u ∂v`,
/// `∂x/∂x = 1`, `∂x^{-1}/∂x = -x^{-1}`.
pub fn fox_derivative(w: &FreeWord, generator: usize) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    let mut prefix = FreeWord::identity();
    for &l in w.letters() {
        if l.generator == generator {
            if l.inverted {
                let mut term = prefix.clone();
                term.push(l);
                out.add_term(term, -1);
            } else {
                out.add_term(prefix.clone(), 1);
            }
        }
        prefix.push(l);
    }
    out
}
