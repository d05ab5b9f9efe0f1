//! The eight generators of gl2 ⋉ (k² ⊕ (k²)*) and the two total orders
//! used for PBW normal forms.

use std::fmt;

/// Generators. `X1`, `Y1` span the second copy of the plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    Tau,
    H,
    E,
    F,
    X,
    Y,
    X1,
    Y1,
}

impl Gen {
    pub const ALL: [Gen; 8] = [
        Gen::Tau,
        Gen::H,
        Gen::E,
        Gen::F,
        Gen::X,
        Gen::Y,
        Gen::X1,
        Gen::Y1,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Eigenvalue of `ad h`.
    pub fn h_weight(self) -> i32 {
        match self {
            Gen::X | Gen::X1 => 1,
            Gen::Y | Gen::Y1 => -1,
            Gen::E => 2,
            Gen::F => -2,
            Gen::H | Gen::Tau => 0,
        }
    }

    /// Eigenvalue of `ad tau`.
    pub fn tau_weight(self) -> i32 {
        match self {
            Gen::X | Gen::Y => 1,
            Gen::X1 | Gen::Y1 => -1,
            _ => 0,
        }
    }

    /// 1 on the plane letters, 0 on gl2.
    pub fn v_degree(self) -> u32 {
        matches!(self, Gen::X | Gen::Y | Gen::X1 | Gen::Y1) as u32
    }

    pub fn is_v(self) -> bool {
        self.v_degree() == 1
    }

    pub fn name(self) -> &'static str {
        match self {
            Gen::Tau => "tau",
            Gen::H => "h",
            Gen::E => "e",
            Gen::F => "f",
            Gen::X => "x",
            Gen::Y => "y",
            Gen::X1 => "x1",
            Gen::Y1 => "y1",
        }
    }

    pub fn from_name(s: &str) -> Option<Gen> {
        Gen::ALL.into_iter().find(|g| g.name() == s)
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Total order on generators defining which words are normal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum GenOrder {
    /// `tau < h < e < f < x < y < x1 < y1`: gl2 letters to the left.
    #[default]
    Default,
    /// `f < x1 < y1 < tau < h < e < x < y`: the lowering letters to the
    /// left, so a word acting on a highest-weight vector is a suffix rule.
    Triangular,
}

impl GenOrder {
    pub fn sequence(self) -> [Gen; 8] {
        match self {
            GenOrder::Default => Gen::ALL,
            GenOrder::Triangular => [
                Gen::F,
                Gen::X1,
                Gen::Y1,
                Gen::Tau,
                Gen::H,
                Gen::E,
                Gen::X,
                Gen::Y,
            ],
        }
    }

    pub fn rank(self, g: Gen) -> u8 {
        match self {
            GenOrder::Default => g as u8,
            GenOrder::Triangular => match g {
                Gen::F => 0,
                Gen::X1 => 1,
                Gen::Y1 => 2,
                Gen::Tau => 3,
                Gen::H => 4,
                Gen::E => 5,
                Gen::X => 6,
                Gen::Y => 7,
            },
        }
    }

    /// Whether `a` must be moved past `b` when `a` stands directly left of `b`.
    pub fn inverted(self, a: Gen, b: Gen) -> bool {
        self.rank(a) > self.rank(b)
    }

    pub fn is_normal(self, word: &[Gen]) -> bool {
        word.windows(2).all(|w| !self.inverted(w[0], w[1]))
    }

    pub fn name(self) -> &'static str {
        match self {
            GenOrder::Default => "default",
            GenOrder::Triangular => "triangular",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_zero_on_pairing() {
        // y1 x and x1 y have biweight (0, 0)
        assert_eq!(Gen::Y1.h_weight() + Gen::X.h_weight(), 0);
        assert_eq!(Gen::Y1.tau_weight() + Gen::X.tau_weight(), 0);
        assert_eq!(Gen::X1.h_weight() + Gen::Y.h_weight(), 0);
    }

    #[test]
    fn orders_are_permutations() {
        for order in [GenOrder::Default, GenOrder::Triangular] {
            let seq = order.sequence();
            for (i, g) in seq.iter().enumerate() {
                assert_eq!(order.rank(*g) as usize, i);
            }
        }
        assert!(GenOrder::Triangular.inverted(Gen::E, Gen::F));
        assert!(!GenOrder::Default.inverted(Gen::E, Gen::F));
    }

    #[test]
    fn names_round_trip() {
        for g in Gen::ALL {
            assert_eq!(Gen::from_name(g.name()), Some(g));
        }
        assert_eq!(Gen::from_name("z"), None);
    }
}
