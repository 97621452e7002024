//! Exact multivariate polynomials over the model symbols with
//! complex-rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::symbol::{Symbol, SymbolValues};

/// Exact rational number used for all symbolic coefficients.
pub type Rational = BigRational;

/// Exact complex-rational coefficient.
pub type Coefficient = Complex<Rational>;

pub fn rational(numer: i64, denom: i64) -> Rational {
    assert!(denom != 0, "zero denominator");
    Rational::new(numer.into(), denom.into())
}

pub fn coeff_real(numer: i64, denom: i64) -> Coefficient {
    Coefficient::new(rational(numer, denom), Rational::zero())
}

pub fn coeff_int(value: i64) -> Coefficient {
    coeff_real(value, 1)
}

pub fn coeff_imag(value: i64) -> Coefficient {
    Coefficient::new(Rational::zero(), rational(value, 1))
}

fn coeff_conj(c: &Coefficient) -> Coefficient {
    Coefficient::new(c.re.clone(), -c.im.clone())
}

fn coeff_to_c64(c: &Coefficient) -> Complex64 {
    Complex64::new(
        c.re.to_f64().unwrap_or(f64::NAN),
        c.im.to_f64().unwrap_or(f64::NAN),
    )
}

/// A power product of symbols; the exponent layout follows [`Symbol::ALL`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: [u32; Symbol::COUNT],
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial::default()
    }

    pub fn of(symbol: Symbol, power: u32) -> Self {
        let mut exps = [0; Symbol::COUNT];
        exps[symbol.index()] = power;
        Monomial { exps }
    }

    pub fn exp(&self, symbol: Symbol) -> u32 {
        self.exps[symbol.index()]
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn product(&self, other: &Monomial) -> Monomial {
        let mut exps = [0; Symbol::COUNT];
        for (i, e) in exps.iter_mut().enumerate() {
            *e = self.exps[i] + other.exps[i];
        }
        Monomial { exps }
    }

    /// Conjugation swaps the `α` and `ᾱ` exponents.
    pub fn conjugate(&self) -> Monomial {
        let mut exps = self.exps;
        exps.swap(Symbol::Alpha.index(), Symbol::AlphaBar.index());
        Monomial { exps }
    }

    pub fn contains(&self, symbol: Symbol) -> bool {
        self.exp(symbol) > 0
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (Symbol, u32)> + '_ {
        Symbol::ALL
            .iter()
            .filter_map(move |&s| (self.exp(s) > 0).then(|| (s, self.exp(s))))
    }
}

/// A finite sum of monomials with exact complex-rational coefficients.
///
/// The term map is canonical: monomials are kept in their total order and
/// zero coefficients are never stored, so structural equality is semantic
/// equality.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScalarPoly {
    terms: BTreeMap<Monomial, Coefficient>,
}

impl ScalarPoly {
    pub fn zero() -> Self {
        ScalarPoly::default()
    }

    pub fn one() -> Self {
        ScalarPoly::integer(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        ScalarPoly::constant(coeff_imag(1))
    }

    pub fn integer(value: i64) -> Self {
        ScalarPoly::constant(coeff_int(value))
    }

    pub fn rational(numer: i64, denom: i64) -> Self {
        ScalarPoly::constant(coeff_real(numer, denom))
    }

    pub fn constant(c: Coefficient) -> Self {
        let mut p = ScalarPoly::zero();
        p.add_term(Monomial::unit(), c);
        p
    }

    pub fn symbol(symbol: Symbol) -> Self {
        ScalarPoly::symbol_pow(symbol, 1)
    }

    pub fn symbol_pow(symbol: Symbol, power: u32) -> Self {
        let mut p = ScalarPoly::zero();
        p.add_term(Monomial::of(symbol, power), coeff_int(1));
        p
    }

    pub fn monomial(monomial: Monomial, coefficient: Coefficient) -> Self {
        let mut p = ScalarPoly::zero();
        p.add_term(monomial, coefficient);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coefficient)> {
        self.terms.iter()
    }

    /// The coefficient of `monomial`, or zero if absent.
    pub fn coefficient(&self, monomial: &Monomial) -> Coefficient {
        self.terms.get(monomial).cloned().unwrap_or_else(Coefficient::zero)
    }

    pub(crate) fn add_term(&mut self, monomial: Monomial, coefficient: Coefficient) {
        if coefficient.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coefficient;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &ScalarPoly) -> ScalarPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &ScalarPoly) -> ScalarPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ScalarPoly {
        let mut out = ScalarPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &ScalarPoly) -> ScalarPoly {
        let mut out = ScalarPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.product(mb), ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &Coefficient) -> ScalarPoly {
        let mut out = ScalarPoly::zero();
        for (m, term) in &self.terms {
            out.add_term(*m, term.clone() * c.clone());
        }
        out
    }

    /// Complex conjugation: `i → −i` and `α ↔ ᾱ`.
    pub fn conjugate(&self) -> ScalarPoly {
        let mut out = ScalarPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.conjugate(), coeff_conj(c));
        }
        out
    }

    /// Drops every monomial whose power of `t` exceeds `order`.
    pub fn truncate_t_order(&self, order: u32) -> ScalarPoly {
        let mut out = ScalarPoly::zero();
        for (m, c) in &self.terms {
            if m.exp(Symbol::Time) <= order {
                out.add_term(*m, c.clone());
            }
        }
        out
    }

    /// `self^exp`, truncating in the power of `t` after every multiplication
    /// when `t_order` is given.
    pub fn pow_truncated(&self, exp: u32, t_order: Option<u32>) -> ScalarPoly {
        let mut out = ScalarPoly::one();
        for _ in 0..exp {
            out = out.mul(self);
            if let Some(order) = t_order {
                out = out.truncate_t_order(order);
            }
        }
        out
    }

    /// Substitutes zero for `symbol`, i.e. drops every term containing it.
    pub fn set_symbol_zero(&self, symbol: Symbol) -> ScalarPoly {
        let mut out = ScalarPoly::zero();
        for (m, c) in &self.terms {
            if !m.contains(symbol) {
                out.add_term(*m, c.clone());
            }
        }
        out
    }

    pub fn eval(&self, values: &SymbolValues) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut term = coeff_to_c64(c);
            for (symbol, power) in m.nonzero() {
                term *= values.value(symbol).powi(power as i32);
            }
            acc += term;
        }
        acc
    }

    /// The sign of the polynomial when it is sign-definite: `Less` when all
    /// coefficients are real and negative, `Greater` when all are real and
    /// positive, `Equal` for the zero polynomial, `None` otherwise.
    pub fn definite_sign(&self) -> Option<Ordering> {
        if self.is_zero() {
            return Some(Ordering::Equal);
        }
        let mut sign = None;
        for c in self.terms.values() {
            if !c.im.is_zero() {
                return None;
            }
            let s = if c.re.is_positive() {
                Ordering::Greater
            } else {
                Ordering::Less
            };
            match sign {
                None => sign = Some(s),
                Some(prev) if prev != s => return None,
                Some(_) => {}
            }
        }
        sign
    }
}

impl Add for &ScalarPoly {
    type Output = ScalarPoly;
    fn add(self, rhs: &ScalarPoly) -> ScalarPoly {
        ScalarPoly::add(self, rhs)
    }
}

impl Sub for &ScalarPoly {
    type Output = ScalarPoly;
    fn sub(self, rhs: &ScalarPoly) -> ScalarPoly {
        ScalarPoly::sub(self, rhs)
    }
}

impl Mul for &ScalarPoly {
    type Output = ScalarPoly;
    fn mul(self, rhs: &ScalarPoly) -> ScalarPoly {
        ScalarPoly::mul(self, rhs)
    }
}

impl Neg for &ScalarPoly {
    type Output = ScalarPoly;
    fn neg(self) -> ScalarPoly {
        ScalarPoly::neg(self)
    }
}

impl std::fmt::Display for ScalarPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", crate::render::scalar_to_text(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn gt2() -> ScalarPoly {
        ScalarPoly::symbol_pow(Symbol::Coupling, 2)
            .mul(&ScalarPoly::symbol_pow(Symbol::Time, 2))
    }

    #[test]
    fn zero_coefficients_are_never_stored() {
        let p = ScalarPoly::symbol(Symbol::Alpha);
        let q = p.sub(&p);
        assert!(q.is_zero());
        assert_eq!(q.num_terms(), 0);
    }

    #[test]
    fn conjugation_is_an_involution_and_swaps_alpha() {
        let p = ScalarPoly::i()
            .mul(&ScalarPoly::symbol(Symbol::Alpha))
            .add(&ScalarPoly::symbol(Symbol::Coupling));
        assert_eq!(p.conjugate().conjugate(), p);
        let expected = ScalarPoly::constant(coeff_imag(-1))
            .mul(&ScalarPoly::symbol(Symbol::AlphaBar))
            .add(&ScalarPoly::symbol(Symbol::Coupling));
        assert_eq!(p.conjugate(), expected);
    }

    #[test]
    fn truncate_drops_high_t_powers() {
        let p = gt2().add(&ScalarPoly::symbol_pow(Symbol::Time, 3));
        assert_eq!(p.truncate_t_order(2), gt2());
        assert_eq!(p.truncate_t_order(10), p);
        assert_eq!(p.truncate_t_order(1), ScalarPoly::zero());
    }

    #[test]
    fn pow_truncated_matches_hand_expansion() {
        // (1 + t)^3 at t-order 2 is 1 + 3t + 3t^2.
        let base = ScalarPoly::one().add(&ScalarPoly::symbol(Symbol::Time));
        let expected = ScalarPoly::one()
            .add(&ScalarPoly::integer(3).mul(&ScalarPoly::symbol(Symbol::Time)))
            .add(&ScalarPoly::integer(3).mul(&ScalarPoly::symbol_pow(Symbol::Time, 2)));
        assert_eq!(base.pow_truncated(3, Some(2)), expected);
    }

    #[test]
    fn eval_uses_conjugate_amplitude() {
        // α·ᾱ evaluates to |α|².
        let p = ScalarPoly::symbol(Symbol::Alpha).mul(&ScalarPoly::symbol(Symbol::AlphaBar));
        let values = SymbolValues::new(1.0, 1.0, Complex64::new(3.0, 4.0));
        let got = p.eval(&values);
        assert!((got - Complex64::new(25.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn definite_sign_classifies_polynomials() {
        assert_eq!(ScalarPoly::zero().definite_sign(), Some(Ordering::Equal));
        assert_eq!(gt2().neg().definite_sign(), Some(Ordering::Less));
        assert_eq!(gt2().definite_sign(), Some(Ordering::Greater));
        let mixed = gt2().sub(&ScalarPoly::symbol(Symbol::Alpha));
        assert_eq!(mixed.definite_sign(), None);
        assert_eq!(ScalarPoly::i().definite_sign(), None);
    }

    #[test]
    fn set_symbol_zero_removes_coupling_terms() {
        let p = gt2().add(&ScalarPoly::symbol(Symbol::Alpha));
        assert_eq!(p.set_symbol_zero(Symbol::Coupling), ScalarPoly::symbol(Symbol::Alpha));
    }
}
