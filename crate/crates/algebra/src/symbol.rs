//! Scalar symbols of the four-wave-mixing model and their numeric values.

use num_complex::Complex64;

/// A named commuting scalar symbol.
///
/// The declaration order fixes the canonical monomial layout everywhere:
/// coupling, time, the three mode frequencies, then the coherent pump
/// amplitude and its conjugate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    /// Interaction coupling constant `g` (real).
    Coupling,
    /// Interaction time `t` (real).
    Time,
    /// Pump mode frequency `ω1` (real).
    OmegaPump,
    /// Stokes mode frequency `ω2` (real).
    OmegaStokes,
    /// Signal mode frequency `ω3` (real).
    OmegaSignal,
    /// Coherent pump amplitude `α`.
    Alpha,
    /// Conjugate pump amplitude `ᾱ`.
    AlphaBar,
}

impl Symbol {
    pub const COUNT: usize = 7;

    pub const ALL: [Symbol; Symbol::COUNT] = [
        Symbol::Coupling,
        Symbol::Time,
        Symbol::OmegaPump,
        Symbol::OmegaStokes,
        Symbol::OmegaSignal,
        Symbol::Alpha,
        Symbol::AlphaBar,
    ];

    pub fn index(self) -> usize {
        match self {
            Symbol::Coupling => 0,
            Symbol::Time => 1,
            Symbol::OmegaPump => 2,
            Symbol::OmegaStokes => 3,
            Symbol::OmegaSignal => 4,
            Symbol::Alpha => 5,
            Symbol::AlphaBar => 6,
        }
    }

    /// The image of the symbol under complex conjugation: `α ↔ ᾱ`, every
    /// real symbol is fixed.
    pub fn conjugate(self) -> Symbol {
        match self {
            Symbol::Alpha => Symbol::AlphaBar,
            Symbol::AlphaBar => Symbol::Alpha,
            other => other,
        }
    }

    pub fn is_real(self) -> bool {
        !matches!(self, Symbol::Alpha | Symbol::AlphaBar)
    }

    /// Stable ASCII name used in serialized output.
    pub fn ascii_name(self) -> &'static str {
        match self {
            Symbol::Coupling => "g",
            Symbol::Time => "t",
            Symbol::OmegaPump => "omega1",
            Symbol::OmegaStokes => "omega2",
            Symbol::OmegaSignal => "omega3",
            Symbol::Alpha => "alpha",
            Symbol::AlphaBar => "alpha_bar",
        }
    }

    pub fn parse_ascii(name: &str) -> Option<Symbol> {
        Symbol::ALL.iter().copied().find(|s| s.ascii_name() == name)
    }

    pub fn text(self) -> &'static str {
        match self {
            Symbol::Coupling => "g",
            Symbol::Time => "t",
            Symbol::OmegaPump => "ω1",
            Symbol::OmegaStokes => "ω2",
            Symbol::OmegaSignal => "ω3",
            Symbol::Alpha => "α",
            Symbol::AlphaBar => "ᾱ",
        }
    }

    pub fn latex(self) -> &'static str {
        match self {
            Symbol::Coupling => "g",
            Symbol::Time => "t",
            Symbol::OmegaPump => "\\omega_{1}",
            Symbol::OmegaStokes => "\\omega_{2}",
            Symbol::OmegaSignal => "\\omega_{3}",
            Symbol::Alpha => "\\alpha",
            Symbol::AlphaBar => "\\bar{\\alpha}",
        }
    }
}

/// Numeric assignment for every symbol; `ᾱ` is always the conjugate of `α`.
#[derive(Clone, Copy, Debug)]
pub struct SymbolValues {
    pub coupling: f64,
    pub time: f64,
    pub omegas: [f64; 3],
    pub alpha: Complex64,
}

impl SymbolValues {
    pub fn new(coupling: f64, time: f64, alpha: Complex64) -> Self {
        SymbolValues { coupling, time, omegas: [0.0; 3], alpha }
    }

    pub fn value(&self, symbol: Symbol) -> Complex64 {
        match symbol {
            Symbol::Coupling => self.coupling.into(),
            Symbol::Time => self.time.into(),
            Symbol::OmegaPump => self.omegas[0].into(),
            Symbol::OmegaStokes => self.omegas[1].into(),
            Symbol::OmegaSignal => self.omegas[2].into(),
            Symbol::Alpha => self.alpha,
            Symbol::AlphaBar => self.alpha.conj(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugation_swaps_amplitudes_and_fixes_real_symbols() {
        assert_eq!(Symbol::Alpha.conjugate(), Symbol::AlphaBar);
        assert_eq!(Symbol::AlphaBar.conjugate(), Symbol::Alpha);
        for s in Symbol::ALL {
            if s.is_real() {
                assert_eq!(s.conjugate(), s);
            }
        }
    }

    #[test]
    fn ascii_names_round_trip() {
        for s in Symbol::ALL {
            assert_eq!(Symbol::parse_ascii(s.ascii_name()), Some(s));
        }
        assert_eq!(Symbol::parse_ascii("bogus"), None);
    }

    #[test]
    fn alpha_bar_value_is_conjugate() {
        let v = SymbolValues::new(1.0, 2.0, Complex64::new(0.5, -0.25));
        assert_eq!(v.value(Symbol::AlphaBar), Complex64::new(0.5, 0.25));
    }
}
