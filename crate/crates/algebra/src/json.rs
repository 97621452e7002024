//! Documented JSON shapes for scalar and operator polynomials.
//!
//! A scalar polynomial serializes to a list of monomials, each carrying the
//! exact rational real and imaginary parts as strings (`"num"` or
//! `"num/den"`) plus a map from symbol name to exponent:
//!
//! ```json
//! [{"re": "-2", "im": "0", "powers": {"g": 2, "t": 2, "alpha": 2, "alpha_bar": 2}}]
//! ```
//!
//! An operator polynomial serializes to a list of terms, each pairing a
//! word (creation/annihilation powers per mode, zero modes omitted) with a
//! scalar-polynomial coefficient:
//!
//! ```json
//! {"terms": [{"word": {"pump": [1, 0], "stokes": [0, 1], "signal": [0, 1]},
//!             "coeff": [{"re": "0", "im": "-2", "powers": {"g": 1, "t": 1}}]}]}
//! ```
//!
//! Term order follows the canonical in-memory order, so serialization is
//! deterministic.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;
use crate::operator::OperatorPoly;
use crate::scalar::{Coefficient, Monomial, Rational, ScalarPoly};
use crate::symbol::Symbol;
use crate::word::{Mode, ModePowers, NormalWord};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ScalarTermJson {
    pub re: String,
    pub im: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub powers: BTreeMap<String, u32>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct OperatorTermJson {
    pub word: BTreeMap<String, [u32; 2]>,
    pub coeff: Vec<ScalarTermJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct OperatorPolyJson {
    pub terms: Vec<OperatorTermJson>,
}

fn rational_to_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn rational_from_string(s: &str) -> Result<Rational, AlgebraError> {
    Rational::from_str(s).map_err(|e| AlgebraError::Parse(format!("bad rational {s:?}: {e}")))
}

pub fn scalar_to_json(p: &ScalarPoly) -> Vec<ScalarTermJson> {
    p.terms()
        .map(|(m, c)| {
            let powers = m
                .nonzero()
                .map(|(s, e)| (s.ascii_name().to_string(), e))
                .collect();
            ScalarTermJson {
                re: rational_to_string(&c.re),
                im: rational_to_string(&c.im),
                powers,
            }
        })
        .collect()
}

pub fn scalar_from_json(terms: &[ScalarTermJson]) -> Result<ScalarPoly, AlgebraError> {
    let mut out = ScalarPoly::zero();
    for term in terms {
        let mut monomial = Monomial::unit();
        for (name, &exp) in &term.powers {
            let symbol = Symbol::parse_ascii(name)
                .ok_or_else(|| AlgebraError::Parse(format!("unknown symbol {name:?}")))?;
            monomial = monomial.product(&Monomial::of(symbol, exp));
        }
        let coeff = Coefficient::new(
            rational_from_string(&term.re)?,
            rational_from_string(&term.im)?,
        );
        out = out.add(&ScalarPoly::monomial(monomial, coeff));
    }
    Ok(out)
}

pub fn operator_to_json(p: &OperatorPoly) -> OperatorPolyJson {
    let terms = p
        .terms()
        .map(|(word, coeff)| {
            let mut word_map = BTreeMap::new();
            for mode in Mode::ALL {
                let powers = word.powers(mode);
                if !powers.is_identity() {
                    word_map.insert(mode.ascii_name().to_string(), [powers.cre, powers.ann]);
                }
            }
            OperatorTermJson { word: word_map, coeff: scalar_to_json(coeff) }
        })
        .collect();
    OperatorPolyJson { terms }
}

pub fn operator_from_json(json: &OperatorPolyJson) -> Result<OperatorPoly, AlgebraError> {
    let mut out = OperatorPoly::zero();
    for term in &json.terms {
        let mut modes = [ModePowers::default(); Mode::COUNT];
        for (name, &[cre, ann]) in &term.word {
            let mode = Mode::parse_ascii(name)
                .ok_or_else(|| AlgebraError::Parse(format!("unknown mode {name:?}")))?;
            modes[mode.index()] = ModePowers::new(cre, ann);
        }
        out = out.add(&OperatorPoly::term(
            NormalWord::from_powers(modes),
            scalar_from_json(&term.coeff)?,
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::coeff_imag;

    #[test]
    fn scalar_round_trips_exactly() {
        let p = ScalarPoly::rational(-7, 3)
            .mul(&ScalarPoly::symbol_pow(Symbol::Coupling, 2))
            .add(&ScalarPoly::constant(coeff_imag(5)).mul(&ScalarPoly::symbol(Symbol::Alpha)));
        let json = scalar_to_json(&p);
        assert_eq!(scalar_from_json(&json).unwrap(), p);
    }

    #[test]
    fn operator_round_trips_through_serde() {
        let word = NormalWord::from_powers([
            ModePowers::new(2, 0),
            ModePowers::new(0, 1),
            ModePowers::new(0, 1),
        ]);
        let p = OperatorPoly::term(word, ScalarPoly::symbol(Symbol::Coupling))
            .add(&OperatorPoly::identity().scale(&ScalarPoly::rational(1, 2)));
        let json = operator_to_json(&p);
        let text = serde_json::to_string(&json).unwrap();
        let back: OperatorPolyJson = serde_json::from_str(&text).unwrap();
        assert_eq!(operator_from_json(&back).unwrap(), p);
    }

    #[test]
    fn serialization_is_deterministic() {
        let p = ScalarPoly::symbol(Symbol::Time).add(&ScalarPoly::symbol(Symbol::Coupling));
        let first = serde_json::to_string(&scalar_to_json(&p)).unwrap();
        let second = serde_json::to_string(&scalar_to_json(&p)).unwrap();
        assert_eq!(first, second);
    }

    #[test]
    fn unknown_symbol_is_rejected() {
        let term = ScalarTermJson {
            re: "1".into(),
            im: "0".into(),
            powers: [("zeta".to_string(), 1)].into_iter().collect(),
        };
        assert!(scalar_from_json(&[term]).is_err());
    }
}
