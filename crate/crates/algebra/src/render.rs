//! Human-readable text and LaTeX rendering with deterministic term order.
//!
//! Pump-amplitude pairs are displayed as `|α|^{2k}`, matching the usual
//! notation for `(αᾱ)^k`; an unpaired residue stays as a plain power of `α`
//! or `ᾱ`.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::operator::OperatorPoly;
use crate::scalar::{Coefficient, Monomial, ScalarPoly};
use crate::symbol::Symbol;
use crate::word::{Mode, NormalWord};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Flavor {
    Text,
    Latex,
}

fn rational_str(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders a coefficient as `(sign, magnitude)`; a `None` magnitude means
/// an implicit factor of one that can be dropped before a symbol product.
fn coefficient_parts(c: &Coefficient, flavor: Flavor) -> (bool, Option<String>) {
    let i_str = match flavor {
        Flavor::Text => "i",
        Flavor::Latex => "i",
    };
    if c.im.is_zero() {
        let negative = c.re.is_negative();
        let mag = c.re.abs();
        (negative, (!mag.is_one()).then(|| rational_str(&mag)))
    } else if c.re.is_zero() {
        let negative = c.im.is_negative();
        let mag = c.im.abs();
        let s = if mag.is_one() {
            i_str.to_string()
        } else if mag.is_integer() {
            format!("{}{}", rational_str(&mag), i_str)
        } else {
            format!("({}){}", rational_str(&mag), i_str)
        };
        (negative, Some(s))
    } else {
        let re = rational_str(&c.re);
        let im = if c.im.is_negative() {
            format!(" - {}{}", rational_str(&c.im.abs()), i_str)
        } else {
            format!(" + {}{}", rational_str(&c.im), i_str)
        };
        (false, Some(format!("({re}{im})")))
    }
}

fn power_str(base: &str, exp: u32, flavor: Flavor) -> String {
    match (exp, flavor) {
        (1, _) => base.to_string(),
        (_, Flavor::Text) => format!("{base}^{exp}"),
        (_, Flavor::Latex) => format!("{base}^{{{exp}}}"),
    }
}

fn monomial_factors(m: &Monomial, flavor: Flavor) -> Vec<String> {
    let mut parts = Vec::new();
    for symbol in [
        Symbol::Coupling,
        Symbol::Time,
        Symbol::OmegaPump,
        Symbol::OmegaStokes,
        Symbol::OmegaSignal,
    ] {
        let e = m.exp(symbol);
        if e > 0 {
            let base = match flavor {
                Flavor::Text => symbol.text(),
                Flavor::Latex => symbol.latex(),
            };
            parts.push(power_str(base, e, flavor));
        }
    }

    let p = m.exp(Symbol::Alpha);
    let q = m.exp(Symbol::AlphaBar);
    let paired = p.min(q);
    if paired > 0 {
        let s = match flavor {
            Flavor::Text => format!("|α|^{}", 2 * paired),
            Flavor::Latex => format!("|\\alpha|^{{{}}}", 2 * paired),
        };
        parts.push(s);
    }
    if p > paired {
        let base = match flavor {
            Flavor::Text => Symbol::Alpha.text(),
            Flavor::Latex => Symbol::Alpha.latex(),
        };
        parts.push(power_str(base, p - paired, flavor));
    }
    if q > paired {
        let base = match flavor {
            Flavor::Text => Symbol::AlphaBar.text(),
            Flavor::Latex => Symbol::AlphaBar.latex(),
        };
        parts.push(power_str(base, q - paired, flavor));
    }
    parts
}

fn join_terms(terms: Vec<(bool, String)>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (negative, body)) in terms.into_iter().enumerate() {
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&body);
    }
    out
}

fn scalar_terms(p: &ScalarPoly, flavor: Flavor) -> Vec<(bool, String)> {
    p.terms()
        .map(|(m, c)| {
            let (negative, coeff) = coefficient_parts(c, flavor);
            let mut parts = Vec::new();
            if let Some(cs) = coeff {
                parts.push(cs);
            }
            parts.extend(monomial_factors(m, flavor));
            if parts.is_empty() {
                parts.push("1".to_string());
            }
            let sep = match flavor {
                Flavor::Text => " ",
                Flavor::Latex => " ",
            };
            (negative, parts.join(sep))
        })
        .collect()
}

pub fn scalar_to_text(p: &ScalarPoly) -> String {
    join_terms(scalar_terms(p, Flavor::Text))
}

pub fn scalar_to_latex(p: &ScalarPoly) -> String {
    join_terms(scalar_terms(p, Flavor::Latex))
}

fn word_factors(w: &NormalWord, flavor: Flavor) -> Vec<String> {
    let mut parts = Vec::new();
    for mode in Mode::ALL {
        let powers = w.powers(mode);
        if powers.cre > 0 {
            let base = match flavor {
                Flavor::Text => format!("{}†", mode.letter()),
                Flavor::Latex => format!("{}^{{\\dagger}}", mode.letter()),
            };
            match flavor {
                Flavor::Text => parts.push(power_str(&base, powers.cre, flavor)),
                Flavor::Latex => {
                    if powers.cre == 1 {
                        parts.push(base);
                    } else {
                        parts.push(format!("{}^{{\\dagger {}}}", mode.letter(), powers.cre));
                    }
                }
            }
        }
        if powers.ann > 0 {
            parts.push(power_str(mode.letter(), powers.ann, flavor));
        }
    }
    parts
}

pub fn word_to_text(w: &NormalWord) -> String {
    if w.is_identity() {
        return "1".to_string();
    }
    word_factors(w, Flavor::Text).join(" ")
}

pub fn word_to_latex(w: &NormalWord) -> String {
    if w.is_identity() {
        return "1".to_string();
    }
    word_factors(w, Flavor::Latex).join(" ")
}

fn operator_terms(p: &OperatorPoly, flavor: Flavor) -> Vec<(bool, String)> {
    let mut out = Vec::new();
    for (word, coeff) in p.terms() {
        // Single-monomial coefficients render inline; sums get parentheses
        // so the term reads unambiguously.
        if coeff.num_terms() <= 1 {
            for (negative, mut body) in scalar_terms(coeff, flavor) {
                if !word.is_identity() {
                    let word_str = match flavor {
                        Flavor::Text => word_to_text(word),
                        Flavor::Latex => word_to_latex(word),
                    };
                    if body == "1" {
                        body = word_str;
                    } else {
                        body = format!("{body} {word_str}");
                    }
                }
                out.push((negative, body));
            }
        } else {
            let coeff_str = match flavor {
                Flavor::Text => scalar_to_text(coeff),
                Flavor::Latex => scalar_to_latex(coeff),
            };
            let word_str = match flavor {
                Flavor::Text => word_to_text(word),
                Flavor::Latex => word_to_latex(word),
            };
            let body = if word.is_identity() {
                format!("({coeff_str})")
            } else {
                format!("({coeff_str}) {word_str}")
            };
            out.push((false, body));
        }
    }
    out
}

pub fn operator_to_text(p: &OperatorPoly) -> String {
    join_terms(operator_terms(p, Flavor::Text))
}

pub fn operator_to_latex(p: &OperatorPoly) -> String {
    join_terms(operator_terms(p, Flavor::Latex))
}
