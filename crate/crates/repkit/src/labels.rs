//! Spin and spacetime labels. Spins are carried as twice the spin so that
//! half-integers stay exact integers.

/// SU(2)/SO(3) spin label j, stored as 2j.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpinLabel {
    pub twice_j: u32,
}

impl SpinLabel {
    pub const ZERO: SpinLabel = SpinLabel { twice_j: 0 };

    pub fn from_twice(twice_j: u32) -> SpinLabel {
        SpinLabel { twice_j }
    }

    pub fn integer(j: u32) -> SpinLabel {
        SpinLabel { twice_j: 2 * j }
    }

    pub fn j(&self) -> f64 {
        self.twice_j as f64 / 2.0
    }

    /// Dimension 2j + 1 of the irrep.
    pub fn dim(&self) -> u32 {
        self.twice_j + 1
    }

    pub fn is_integer(&self) -> bool {
        self.twice_j % 2 == 0
    }
}

impl std::fmt::Display for SpinLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.twice_j % 2 == 0 {
            write!(f, "{}", self.twice_j / 2)
        } else {
            write!(f, "{}/2", self.twice_j)
        }
    }
}

/// SO(4) label (j_L, j_R); time-functor images have j_L = j_R.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EuclideanLabel {
    pub twice_jl: u32,
    pub twice_jr: u32,
}

/// SL(2,C) principal-series label (k, rho); time-functor images have
/// rho = gamma * k.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LorentzianLabel {
    pub twice_k: u32,
    pub rho: f64,
}

/// Immirzi parameter; gamma = 0 is degenerate for the Lorentzian functor.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ImmirziParam {
    pub gamma: f64,
}

impl ImmirziParam {
    pub fn new(gamma: f64) -> ImmirziParam {
        ImmirziParam { gamma }
    }
}
