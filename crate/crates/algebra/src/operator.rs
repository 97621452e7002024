//! Operator polynomials in canonical normal order and their ring
//! operations.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::scalar::{Coefficient, Rational, ScalarPoly};
use crate::word::{Mode, ModePowers, NormalWord};

/// A finite sum of normally ordered words with [`ScalarPoly`] coefficients.
///
/// Every stored word is in normal order and no zero coefficient is kept, so
/// structural equality is semantic equality.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OperatorPoly {
    terms: BTreeMap<NormalWord, ScalarPoly>,
}

impl OperatorPoly {
    pub fn zero() -> Self {
        OperatorPoly::default()
    }

    pub fn identity() -> Self {
        OperatorPoly::from_word(NormalWord::identity())
    }

    pub fn from_word(word: NormalWord) -> Self {
        OperatorPoly::term(word, ScalarPoly::one())
    }

    pub fn term(word: NormalWord, coefficient: ScalarPoly) -> Self {
        let mut p = OperatorPoly::zero();
        p.add_term(word, coefficient);
        p
    }

    /// The annihilation operator of `mode` as a one-term polynomial.
    pub fn annihilator(mode: Mode) -> Self {
        OperatorPoly::from_word(NormalWord::annihilation(mode, 1))
    }

    /// The creation operator of `mode` as a one-term polynomial.
    pub fn creator(mode: Mode) -> Self {
        OperatorPoly::from_word(NormalWord::creation(mode, 1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NormalWord, &ScalarPoly)> {
        self.terms.iter()
    }

    /// The coefficient of `word`, or zero if absent.
    pub fn coefficient(&self, word: &NormalWord) -> ScalarPoly {
        self.terms.get(word).cloned().unwrap_or_else(ScalarPoly::zero)
    }

    pub fn add_term(&mut self, word: NormalWord, coefficient: ScalarPoly) {
        if coefficient.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&coefficient);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &OperatorPoly) -> OperatorPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(*w, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &OperatorPoly) -> OperatorPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> OperatorPoly {
        let mut out = OperatorPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(*w, c.neg());
        }
        out
    }

    pub fn scale(&self, factor: &ScalarPoly) -> OperatorPoly {
        let mut out = OperatorPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(*w, c.mul(factor));
        }
        out
    }

    /// Product of two operator polynomials: distributes over terms,
    /// multiplies coefficients exactly and re-normal-orders every word pair.
    pub fn mul(&self, other: &OperatorPoly) -> OperatorPoly {
        let mut out = OperatorPoly::zero();
        for (wu, cu) in &self.terms {
            for (wv, cv) in &other.terms {
                let coeff = cu.mul(cv);
                for (word, weight) in normal_order_product(wu, wv).terms {
                    out.add_term(word, coeff.mul(&weight));
                }
            }
        }
        out
    }

    /// Adjoint: reverses every word (creation and annihilation powers swap)
    /// and conjugates every coefficient.
    pub fn dagger(&self) -> OperatorPoly {
        let mut out = OperatorPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.dagger(), c.conjugate());
        }
        out
    }

    pub fn is_hermitian(&self) -> bool {
        *self == self.dagger()
    }

    /// Drops every coefficient monomial whose power of `t` exceeds `order`.
    pub fn truncate_t_order(&self, order: u32) -> OperatorPoly {
        let mut out = OperatorPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(*w, c.truncate_t_order(order));
        }
        out
    }

    /// `self^exp`, truncating in the power of `t` after every multiplication
    /// when `t_order` is given.
    pub fn pow_truncated(&self, exp: u32, t_order: Option<u32>) -> OperatorPoly {
        let mut out = OperatorPoly::identity();
        for _ in 0..exp {
            out = out.mul(self);
            if let Some(order) = t_order {
                out = out.truncate_t_order(order);
            }
        }
        out
    }
}

impl Add for &OperatorPoly {
    type Output = OperatorPoly;
    fn add(self, rhs: &OperatorPoly) -> OperatorPoly {
        OperatorPoly::add(self, rhs)
    }
}

impl Sub for &OperatorPoly {
    type Output = OperatorPoly;
    fn sub(self, rhs: &OperatorPoly) -> OperatorPoly {
        OperatorPoly::sub(self, rhs)
    }
}

impl Mul for &OperatorPoly {
    type Output = OperatorPoly;
    fn mul(self, rhs: &OperatorPoly) -> OperatorPoly {
        OperatorPoly::mul(self, rhs)
    }
}

impl Neg for &OperatorPoly {
    type Output = OperatorPoly;
    fn neg(self) -> OperatorPoly {
        OperatorPoly::neg(self)
    }
}

impl std::fmt::Display for OperatorPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", crate::render::operator_to_text(self))
    }
}

fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// Single-mode contraction: `x^q x†^p = Σ_k k!·C(q,k)·C(p,k)·x†^{p−k} x^{q−k}`
/// applied to the juxtaposition of two already normal-ordered mode factors.
fn mode_contractions(u: ModePowers, v: ModePowers) -> Vec<(BigInt, ModePowers)> {
    let kmax = u.ann.min(v.cre);
    (0..=kmax)
        .map(|k| {
            let weight = factorial(k) * binomial(u.ann, k) * binomial(v.cre, k);
            let powers = ModePowers::new(u.cre + v.cre - k, u.ann + v.ann - k);
            (weight, powers)
        })
        .collect()
}

/// Canonical normal-ordered expansion of the product `u·v` of two words.
///
/// Factors on distinct modes commute freely; within each mode the
/// annihilators of `u` are moved past the creators of `v` with the
/// `[x, x†] = 1` contraction rule. The resulting coefficients are exact
/// integers.
pub fn normal_order_product(u: &NormalWord, v: &NormalWord) -> OperatorPoly {
    let per_mode: Vec<Vec<(BigInt, ModePowers)>> = Mode::ALL
        .iter()
        .map(|&m| mode_contractions(u.powers(m), v.powers(m)))
        .collect();

    let mut out = OperatorPoly::zero();
    for (wa, pa) in &per_mode[0] {
        for (wb, pb) in &per_mode[1] {
            for (wc, pc) in &per_mode[2] {
                let weight = wa * wb * wc;
                let coeff = Coefficient::new(
                    Rational::from_integer(weight),
                    Rational::zero(),
                );
                let word = NormalWord::from_powers([*pa, *pb, *pc]);
                out.add_term(word, ScalarPoly::constant(coeff));
            }
        }
    }
    out
}

/// The commutator `[P, Q] = PQ − QP`, canonical.
pub fn commutator(p: &OperatorPoly, q: &OperatorPoly) -> OperatorPoly {
    p.mul(q).sub(&q.mul(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> OperatorPoly {
        OperatorPoly::annihilator(Mode::Pump)
    }

    fn adag() -> OperatorPoly {
        OperatorPoly::creator(Mode::Pump)
    }

    #[test]
    fn defining_commutator() {
        // a·a† = a†a + 1
        let product = a().mul(&adag());
        let expected = OperatorPoly::from_word(NormalWord::number(Mode::Pump))
            .add(&OperatorPoly::identity());
        assert_eq!(product, expected);
        assert_eq!(commutator(&a(), &adag()), OperatorPoly::identity());
    }

    #[test]
    fn distinct_modes_commute() {
        let u = NormalWord::from_powers([
            ModePowers::new(1, 0),
            ModePowers::new(0, 1),
            ModePowers::new(0, 0),
        ]);
        let v = NormalWord::from_powers([
            ModePowers::new(0, 0),
            ModePowers::new(0, 0),
            ModePowers::new(1, 1),
        ]);
        let merged = NormalWord::from_powers([
            ModePowers::new(1, 0),
            ModePowers::new(0, 1),
            ModePowers::new(1, 1),
        ]);
        assert_eq!(normal_order_product(&u, &v), OperatorPoly::from_word(merged));

        let b = OperatorPoly::annihilator(Mode::Stokes);
        let bdag = OperatorPoly::creator(Mode::Stokes);
        assert_eq!(commutator(&a(), &b), OperatorPoly::zero());
        assert_eq!(commutator(&a(), &bdag), OperatorPoly::zero());
    }

    #[test]
    fn commutator_is_antisymmetric() {
        let p = a().mul(&adag()).add(&OperatorPoly::annihilator(Mode::Signal));
        assert_eq!(commutator(&p, &p), OperatorPoly::zero());
        let q = adag().mul(&adag());
        assert_eq!(commutator(&p, &q), commutator(&q, &p).neg());
    }

    #[test]
    fn identity_is_neutral_for_mul() {
        let p = a()
            .mul(&adag())
            .scale(&ScalarPoly::symbol(crate::symbol::Symbol::Coupling));
        assert_eq!(OperatorPoly::identity().mul(&p), p);
        assert_eq!(p.mul(&OperatorPoly::identity()), p);
    }

    #[test]
    fn dagger_conjugates_and_reverses() {
        // (i·g·A†BC)† = −i·g·A·B†C†
        let word = NormalWord::from_powers([
            ModePowers::new(1, 0),
            ModePowers::new(0, 1),
            ModePowers::new(0, 1),
        ]);
        let coeff = ScalarPoly::i().mul(&ScalarPoly::symbol(crate::symbol::Symbol::Coupling));
        let p = OperatorPoly::term(word, coeff);

        let expected_word = NormalWord::from_powers([
            ModePowers::new(0, 1),
            ModePowers::new(1, 0),
            ModePowers::new(1, 0),
        ]);
        let expected_coeff = ScalarPoly::constant(crate::scalar::coeff_imag(-1))
            .mul(&ScalarPoly::symbol(crate::symbol::Symbol::Coupling));
        assert_eq!(p.dagger(), OperatorPoly::term(expected_word, expected_coeff));
        assert_eq!(OperatorPoly::identity().dagger(), OperatorPoly::identity());
        assert_eq!(p.dagger().dagger(), p);
    }

    #[test]
    fn dagger_is_an_antihomomorphism() {
        let p = a().mul(&a()).add(&adag().scale(&ScalarPoly::i()));
        let q = adag().mul(&a()).add(&OperatorPoly::annihilator(Mode::Stokes));
        assert_eq!(p.mul(&q).dagger(), q.dagger().mul(&p.dagger()));
    }
}
