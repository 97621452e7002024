//! Expectation values in the coherent-pump ⊗ vacuum state.

use crate::operator::OperatorPoly;
use crate::scalar::ScalarPoly;
use crate::symbol::Symbol;
use crate::word::Mode;

/// The product state `|α⟩|0⟩|0⟩`: a coherent pump with the stokes and
/// signal modes in vacuum. The stokes and signal amplitudes are exactly
/// zero by construction; the only alternative configuration is full vacuum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoherentVacuumState {
    pump_coherent: bool,
}

impl CoherentVacuumState {
    /// `|α⟩|0⟩|0⟩`, the default state of the model.
    pub fn pump_alpha() -> Self {
        CoherentVacuumState { pump_coherent: true }
    }

    /// `|0⟩|0⟩|0⟩`.
    pub fn vacuum() -> Self {
        CoherentVacuumState { pump_coherent: false }
    }

    pub fn pump_is_coherent(&self) -> bool {
        self.pump_coherent
    }
}

impl Default for CoherentVacuumState {
    fn default() -> Self {
        CoherentVacuumState::pump_alpha()
    }
}

/// Expectation value of a canonical operator polynomial in the coherent ⊗
/// vacuum state.
///
/// A normal word contributes only when its stokes and signal powers vanish;
/// the pump factor `A†^p A^q` then contributes `ᾱ^p α^q` (or requires
/// `p = q = 0` for a vacuum pump). The result is exact in the symbols.
pub fn expect_coherent_vacuum(p: &OperatorPoly, state: &CoherentVacuumState) -> ScalarPoly {
    let mut out = ScalarPoly::zero();
    for (word, coeff) in p.terms() {
        if !word.powers(Mode::Stokes).is_identity() || !word.powers(Mode::Signal).is_identity() {
            continue;
        }
        let pump = word.powers(Mode::Pump);
        let amplitude = if state.pump_is_coherent() {
            ScalarPoly::symbol_pow(Symbol::AlphaBar, pump.cre)
                .mul(&ScalarPoly::symbol_pow(Symbol::Alpha, pump.ann))
        } else if pump.is_identity() {
            ScalarPoly::one()
        } else {
            continue;
        };
        out = out.add(&coeff.mul(&amplitude));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{ModePowers, NormalWord};

    #[test]
    fn coherent_eigenstate_gives_amplitude_powers() {
        // ⟨a†²a²⟩ = |α|⁴
        let word = NormalWord::single_mode(Mode::Pump, 2, 2);
        let got = expect_coherent_vacuum(
            &OperatorPoly::from_word(word),
            &CoherentVacuumState::pump_alpha(),
        );
        let expected = ScalarPoly::symbol_pow(Symbol::AlphaBar, 2)
            .mul(&ScalarPoly::symbol_pow(Symbol::Alpha, 2));
        assert_eq!(got, expected);
    }

    #[test]
    fn stokes_or_signal_powers_vanish_in_vacuum() {
        // ⟨A†BC⟩ = 0
        let word = NormalWord::from_powers([
            ModePowers::new(1, 0),
            ModePowers::new(0, 1),
            ModePowers::new(0, 1),
        ]);
        let got = expect_coherent_vacuum(
            &OperatorPoly::from_word(word),
            &CoherentVacuumState::pump_alpha(),
        );
        assert!(got.is_zero());
    }

    #[test]
    fn vacuum_pump_kills_pump_powers() {
        let n = OperatorPoly::from_word(NormalWord::number(Mode::Pump));
        assert!(expect_coherent_vacuum(&n, &CoherentVacuumState::vacuum()).is_zero());
        assert_eq!(
            expect_coherent_vacuum(&OperatorPoly::identity(), &CoherentVacuumState::vacuum()),
            ScalarPoly::one()
        );
    }
}
