use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

/// A Z/2 grade. Addition is exclusive or.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: u8) -> Parity {
        if bit & 1 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn flip(self) -> Parity {
        Parity::from_bit(self.bit() ^ 1)
    }

    /// Product of grades, i.e. the exponent of a Koszul sign.
    pub fn times(self, other: Parity) -> Parity {
        Parity::from_bit(self.bit() & other.bit())
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() ^ rhs.bit())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// `(-1)^e` for a parity exponent.
pub fn sign(e: Parity) -> i64 {
    if e.is_odd() {
        -1
    } else {
        1
    }
}
