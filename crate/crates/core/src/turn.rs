//! Angles measured in turns, kept as exactly reduced fractions when possible.
//!
//! A [`Turn`] is a point of the circle R/Z. Rational turns stay rational under
//! negation, addition, and integer scaling, so character values and products
//! of unit phases can be compared exactly; arbitrary real turns degrade to
//! `f64` and are compared with a phase tolerance.

use crate::C64;

const FLOAT_DEN_LIMIT: i64 = 1 << 40;

/// An angle in turns, normalised into `[0, 1)`.
#[derive(Clone, Copy, Debug)]
pub enum Turn {
    /// Exactly reduced fraction `num/den`, `0 <= num < den`, `gcd(num, den) = 1`.
    Exact { num: i64, den: i64 },
    /// Arbitrary real number of turns in `[0, 1)`.
    Real(f64),
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Turn {
    /// The zero angle.
    pub const ZERO: Turn = Turn::Exact { num: 0, den: 1 };

    /// Half a turn.
    pub const HALF: Turn = Turn::Exact { num: 1, den: 2 };

    /// Exactly `num/den` turns, reduced and wrapped into `[0, 1)`.
    ///
    /// Panics if `den == 0`. Falls back to a real turn if the reduced
    /// denominator cannot be represented.
    pub fn exact(num: i64, den: i64) -> Turn {
        assert!(den != 0, "turn denominator must be nonzero");
        Turn::exact_i128(num as i128, den as i128)
    }

    fn exact_i128(num: i128, den: i128) -> Turn {
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        let num = num.rem_euclid(den);
        let g = gcd(num, den);
        let (num, den) = (num / g, den / g);
        if den <= FLOAT_DEN_LIMIT as i128 {
            Turn::Exact {
                num: num as i64,
                den: den as i64,
            }
        } else {
            Turn::Real((num as f64 / den as f64).rem_euclid(1.0))
        }
    }

    /// A real number of turns, wrapped into `[0, 1)`.
    pub fn real(t: f64) -> Turn {
        let t = t.rem_euclid(1.0);
        // rem_euclid can return exactly 1.0 for tiny negative inputs.
        Turn::Real(if t >= 1.0 { 0.0 } else { t })
    }

    /// Value in turns, in `[0, 1)`.
    pub fn value(self) -> f64 {
        match self {
            Turn::Exact { num, den } => num as f64 / den as f64,
            Turn::Real(t) => t,
        }
    }

    /// True when the angle is exactly the zero angle.
    pub fn is_exactly_zero(self) -> bool {
        matches!(self, Turn::Exact { num: 0, .. })
    }

    pub fn neg(self) -> Turn {
        match self {
            Turn::Exact { num, den } => Turn::exact_i128(-(num as i128), den as i128),
            Turn::Real(t) => Turn::real(-t),
        }
    }

    pub fn add(self, other: Turn) -> Turn {
        match (self, other) {
            (Turn::Exact { num: a, den: p }, Turn::Exact { num: b, den: q }) => {
                let (a, p, b, q) = (a as i128, p as i128, b as i128, q as i128);
                Turn::exact_i128(a * q + b * p, p * q)
            }
            _ => Turn::real(self.value() + other.value()),
        }
    }

    pub fn sub(self, other: Turn) -> Turn {
        self.add(other.neg())
    }

    /// Integer multiple `n * self`.
    pub fn scale(self, n: i64) -> Turn {
        match self {
            Turn::Exact { num, den } => Turn::exact_i128(num as i128 * n as i128, den as i128),
            Turn::Real(t) => Turn::real(t * n as f64),
        }
    }

    /// The point `exp(2 pi i self)` of the unit circle.
    ///
    /// Quarter-turn multiples produce exact unit values so that signs of
    /// order-two characters carry no imaginary residue.
    pub fn to_complex(self) -> C64 {
        if let Turn::Exact { num, den } = self {
            match (num, den) {
                (0, 1) => return C64::new(1.0, 0.0),
                (1, 2) => return C64::new(-1.0, 0.0),
                (1, 4) => return C64::new(0.0, 1.0),
                (3, 4) => return C64::new(0.0, -1.0),
                _ => {}
            }
        }
        let th = std::f64::consts::TAU * self.value();
        C64::new(th.cos(), th.sin())
    }

    /// Distance to `other` along the circle, in radians.
    pub fn phase_distance(self, other: Turn) -> f64 {
        let d = (self.value() - other.value()).rem_euclid(1.0);
        d.min(1.0 - d) * std::f64::consts::TAU
    }

    /// True when the two angles agree within `tol` radians along the circle.
    pub fn phase_close(self, other: Turn, tol: f64) -> bool {
        match (self, other) {
            (Turn::Exact { num: a, den: p }, Turn::Exact { num: b, den: q }) if a == b && p == q => {
                true
            }
            _ => self.phase_distance(other) <= tol,
        }
    }
}
