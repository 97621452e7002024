//! Normally ordered operator words over the three bosonic modes.

/// One of the three bosonic modes of the four-wave-mixing process.
///
/// The declaration order is the canonical mode order used for term layout;
/// operators on distinct modes commute freely.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    Pump,
    Stokes,
    Signal,
}

impl Mode {
    pub const COUNT: usize = 3;
    pub const ALL: [Mode; Mode::COUNT] = [Mode::Pump, Mode::Stokes, Mode::Signal];

    pub fn index(self) -> usize {
        match self {
            Mode::Pump => 0,
            Mode::Stokes => 1,
            Mode::Signal => 2,
        }
    }

    /// Stable ASCII name used in serialized output.
    pub fn ascii_name(self) -> &'static str {
        match self {
            Mode::Pump => "pump",
            Mode::Stokes => "stokes",
            Mode::Signal => "signal",
        }
    }

    pub fn parse_ascii(name: &str) -> Option<Mode> {
        Mode::ALL.iter().copied().find(|m| m.ascii_name() == name)
    }

    /// Display letter in the rotated frame (`A`, `B`, `C`).
    pub fn letter(self) -> &'static str {
        match self {
            Mode::Pump => "A",
            Mode::Stokes => "B",
            Mode::Signal => "C",
        }
    }
}

/// Creation and annihilation powers of a single mode within a word.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModePowers {
    pub cre: u32,
    pub ann: u32,
}

impl ModePowers {
    pub fn new(cre: u32, ann: u32) -> Self {
        ModePowers { cre, ann }
    }

    pub fn is_identity(&self) -> bool {
        self.cre == 0 && self.ann == 0
    }

    fn dagger(&self) -> ModePowers {
        ModePowers { cre: self.ann, ann: self.cre }
    }
}

/// A normally ordered monomial `∏_m (x_m†)^{p_m} (x_m)^{q_m}`.
///
/// Within each mode all creation operators stand left of all annihilation
/// operators; the all-zero word is the identity.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NormalWord {
    modes: [ModePowers; Mode::COUNT],
}

impl NormalWord {
    pub fn identity() -> Self {
        NormalWord::default()
    }

    pub fn from_powers(modes: [ModePowers; Mode::COUNT]) -> Self {
        NormalWord { modes }
    }

    /// The word `(x_m†)^cre (x_m)^ann` acting on a single mode.
    pub fn single_mode(mode: Mode, cre: u32, ann: u32) -> Self {
        let mut modes = [ModePowers::default(); Mode::COUNT];
        modes[mode.index()] = ModePowers::new(cre, ann);
        NormalWord { modes }
    }

    pub fn creation(mode: Mode, power: u32) -> Self {
        NormalWord::single_mode(mode, power, 0)
    }

    pub fn annihilation(mode: Mode, power: u32) -> Self {
        NormalWord::single_mode(mode, 0, power)
    }

    /// The number word `x_m† x_m`.
    pub fn number(mode: Mode) -> Self {
        NormalWord::single_mode(mode, 1, 1)
    }

    pub fn powers(&self, mode: Mode) -> ModePowers {
        self.modes[mode.index()]
    }

    pub fn is_identity(&self) -> bool {
        self.modes.iter().all(ModePowers::is_identity)
    }

    /// Adjoint of the word: within each mode the operator string reverses,
    /// which swaps creation and annihilation powers and is again normally
    /// ordered.
    pub fn dagger(&self) -> NormalWord {
        let mut modes = self.modes;
        for m in &mut modes {
            *m = m.dagger();
        }
        NormalWord { modes }
    }

    /// Total operator degree (sum of all powers).
    pub fn degree(&self) -> u32 {
        self.modes.iter().map(|m| m.cre + m.ann).sum()
    }
}

impl std::fmt::Display for NormalWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", crate::render::word_to_text(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_the_all_zero_word() {
        assert!(NormalWord::identity().is_identity());
        assert!(!NormalWord::number(Mode::Pump).is_identity());
    }

    #[test]
    fn dagger_swaps_powers_and_is_an_involution() {
        let w = NormalWord::from_powers([
            ModePowers::new(2, 1),
            ModePowers::new(0, 3),
            ModePowers::new(1, 0),
        ]);
        let d = w.dagger();
        assert_eq!(d.powers(Mode::Pump), ModePowers::new(1, 2));
        assert_eq!(d.powers(Mode::Stokes), ModePowers::new(3, 0));
        assert_eq!(d.powers(Mode::Signal), ModePowers::new(0, 1));
        assert_eq!(d.dagger(), w);
    }

    #[test]
    fn words_order_deterministically() {
        let a = NormalWord::annihilation(Mode::Pump, 1);
        let adag = NormalWord::creation(Mode::Pump, 1);
        let n = NormalWord::number(Mode::Pump);
        let mut v = vec![n, a, adag];
        v.sort();
        assert_eq!(v, vec![a, adag, n]);
    }
}
