//! The four-wave-mixing Hamiltonian and short-time Heisenberg evolution.

use crate::error::AlgebraError;
use crate::operator::{commutator, OperatorPoly};
use crate::scalar::ScalarPoly;
use crate::symbol::Symbol;
use crate::word::{Mode, ModePowers, NormalWord};

/// Default cap on the Taylor expansion order; requests beyond it signal
/// runaway term growth and are rejected.
pub const DEFAULT_MAX_TAYLOR_ORDER: u32 = 4;

/// The four-wave-mixing Hamiltonian
/// `ω1·A†A + ω2·B†B + ω3·C†C + g·(A†²BC + A²B†C†)`.
///
/// The interaction part is kept separately: in the rotated frame the free
/// terms cancel out of the equations of motion, so the short-time evolution
/// is driven by the interaction alone while the full form stays available
/// for display and for numeric cross-checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hamiltonian {
    full: OperatorPoly,
    interaction: OperatorPoly,
}

impl Hamiltonian {
    pub fn four_wave_mixing() -> Self {
        let g = ScalarPoly::symbol(Symbol::Coupling);

        // A†²BC
        let up = NormalWord::from_powers([
            ModePowers::new(2, 0),
            ModePowers::new(0, 1),
            ModePowers::new(0, 1),
        ]);
        // A²B†C†
        let down = up.dagger();
        let interaction = OperatorPoly::term(up, g.clone()).add(&OperatorPoly::term(down, g));

        let mut full = interaction.clone();
        for (mode, omega) in [
            (Mode::Pump, Symbol::OmegaPump),
            (Mode::Stokes, Symbol::OmegaStokes),
            (Mode::Signal, Symbol::OmegaSignal),
        ] {
            full = full.add(&OperatorPoly::term(
                NormalWord::number(mode),
                ScalarPoly::symbol(omega),
            ));
        }

        debug_assert!(full.is_hermitian());
        Hamiltonian { full, interaction }
    }

    pub fn full(&self) -> &OperatorPoly {
        &self.full
    }

    pub fn interaction(&self) -> &OperatorPoly {
        &self.interaction
    }
}

impl Default for Hamiltonian {
    fn default() -> Self {
        Hamiltonian::four_wave_mixing()
    }
}

/// Heisenberg derivative `Ẋ = i[H_int, X]` in the rotated frame, where the
/// free-evolution terms cancel and only the interaction part contributes.
pub fn heisenberg_derivative(hamiltonian: &Hamiltonian, x: &OperatorPoly) -> OperatorPoly {
    commutator(hamiltonian.interaction(), x).scale(&ScalarPoly::i())
}

/// Short-time operator solution `X(t) = Σ_{k≤order} (t^k/k!)·X^{(k)}` with
/// `X^{(k+1)} = i[H_int, X^{(k)}]`; the symbol `t` enters the coefficients.
pub fn taylor_evolve(
    hamiltonian: &Hamiltonian,
    x: &OperatorPoly,
    order: u32,
) -> Result<OperatorPoly, AlgebraError> {
    taylor_evolve_with_max(hamiltonian, x, order, DEFAULT_MAX_TAYLOR_ORDER)
}

/// [`taylor_evolve`] with an explicit cap on the expansion order.
pub fn taylor_evolve_with_max(
    hamiltonian: &Hamiltonian,
    x: &OperatorPoly,
    order: u32,
    max_order: u32,
) -> Result<OperatorPoly, AlgebraError> {
    if order > max_order {
        return Err(AlgebraError::TaylorOrderTooLarge { requested: order, max: max_order });
    }

    let mut out = x.clone();
    let mut derivative = x.clone();
    let mut k_factorial: i64 = 1;
    for k in 1..=order {
        derivative = heisenberg_derivative(hamiltonian, &derivative);
        k_factorial *= i64::from(k);
        let weight =
            ScalarPoly::symbol_pow(Symbol::Time, k).mul(&ScalarPoly::rational(1, k_factorial));
        out = out.add(&derivative.scale(&weight));
    }
    Ok(out)
}

/// The `l`-th factorial-moment operator of `mode` under short-time
/// evolution: `N^(l)(t) = (A†(t))^l (A(t))^l` with every product truncated
/// back to the requested power of `t`.
pub fn factorial_moment_operator(
    hamiltonian: &Hamiltonian,
    mode: Mode,
    l: u32,
    order: u32,
) -> Result<OperatorPoly, AlgebraError> {
    if l == 0 {
        return Err(AlgebraError::ZeroMomentOrder);
    }
    let a_t = taylor_evolve(hamiltonian, &OperatorPoly::annihilator(mode), order)?;
    let a_t_l = a_t.pow_truncated(l, Some(order));
    Ok(a_t_l.dagger().mul(&a_t_l).truncate_t_order(order))
}
