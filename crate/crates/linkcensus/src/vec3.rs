//! Points and direction vectors in 3-space with exact rational coordinates.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::{Rational, Sign};

/// A point or vector with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Vec3Q {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Vec3Q {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Vec3Q {
        Vec3Q { x, y, z }
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Vec3Q {
        Vec3Q {
            x: Rational::from_int(x),
            y: Rational::from_int(y),
            z: Rational::from_int(z),
        }
    }

    pub fn zero() -> Vec3Q {
        Vec3Q::default()
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn add(&self, other: &Vec3Q) -> Vec3Q {
        Vec3Q {
            x: &self.x + &other.x,
            y: &self.y + &other.y,
            z: &self.z + &other.z,
        }
    }

    pub fn sub(&self, other: &Vec3Q) -> Vec3Q {
        Vec3Q {
            x: &self.x - &other.x,
            y: &self.y - &other.y,
            z: &self.z - &other.z,
        }
    }

    pub fn neg(&self) -> Vec3Q {
        Vec3Q {
            x: -&self.x,
            y: -&self.y,
            z: -&self.z,
        }
    }

    pub fn scale(&self, k: &Rational) -> Vec3Q {
        Vec3Q {
            x: &self.x * k,
            y: &self.y * k,
            z: &self.z * k,
        }
    }

    pub fn dot(&self, other: &Vec3Q) -> Rational {
        &(&(&self.x * &other.x) + &(&self.y * &other.y)) + &(&self.z * &other.z)
    }

    pub fn cross(&self, other: &Vec3Q) -> Vec3Q {
        Vec3Q {
            x: &(&self.y * &other.z) - &(&self.z * &other.y),
            y: &(&self.z * &other.x) - &(&self.x * &other.z),
            z: &(&self.x * &other.y) - &(&self.y * &other.x),
        }
    }

    /// Squared Euclidean norm, exact.
    pub fn norm2(&self) -> Rational {
        self.dot(self)
    }

    /// The coordinates as plain `i64`s when all three are integers that fit.
    pub fn as_int_triple(&self) -> Option<(i64, i64, i64)> {
        Some((
            self.x.to_i64_if_integer()?,
            self.y.to_i64_if_integer()?,
            self.z.to_i64_if_integer()?,
        ))
    }

    /// The vector scaled by the (positive) lcm of its coordinate denominators,
    /// as integers. Positive scaling preserves every sign predicate this crate
    /// evaluates, so predicates can run on these integer triples.
    pub fn scaled_bigint_triple(&self) -> [BigInt; 3] {
        let dx = self.x.denom();
        let dy = self.y.denom();
        let dz = self.z.denom();
        if dx.is_one() && dy.is_one() && dz.is_one() {
            return [
                self.x.numer().clone(),
                self.y.numer().clone(),
                self.z.numer().clone(),
            ];
        }
        let l = dx.lcm(dy).lcm(dz);
        [
            self.x.numer() * (&l / dx),
            self.y.numer() * (&l / dy),
            self.z.numer() * (&l / dz),
        ]
    }

    /// Is this vector a scalar multiple of `other` (including zero vectors)?
    pub fn is_parallel(&self, other: &Vec3Q) -> bool {
        if let (Some((ax, ay, az)), Some((bx, by, bz))) =
            (self.as_int_triple(), other.as_int_triple())
        {
            if fits_dot_i128(ax, ay, az, bx, by, bz) {
                return ay as i128 * bz as i128 == az as i128 * by as i128
                    && az as i128 * bx as i128 == ax as i128 * bz as i128
                    && ax as i128 * by as i128 == ay as i128 * bx as i128;
            }
        }
        self.cross(other).is_zero()
    }

    /// Sign of the dot product, computed without building the full rational.
    pub fn dot_sign(&self, other: &Vec3Q) -> Sign {
        if let (Some((ax, ay, az)), Some((bx, by, bz))) =
            (self.as_int_triple(), other.as_int_triple())
        {
            if fits_dot_i128(ax, ay, az, bx, by, bz) {
                let d = ax as i128 * bx as i128 + ay as i128 * by as i128 + az as i128 * bz as i128;
                return Sign::of_i128(d);
            }
        }
        let a = self.scaled_bigint_triple();
        let b = other.scaled_bigint_triple();
        let d: BigInt = &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2];
        Sign::of_bigint(&d)
    }
}

fn fits_dot_i128(ax: i64, ay: i64, az: i64, bx: i64, by: i64, bz: i64) -> bool {
    const LIM: i64 = 1 << 62;
    // |sum| <= 3 * 2^62 * 2^62 < 2^126
    [ax, ay, az, bx, by, bz].iter().all(|v| v.abs() < LIM)
}

impl fmt::Display for Vec3Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

impl fmt::Debug for Vec3Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Serialize for Vec3Q {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [&self.x, &self.y, &self.z].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Vec3Q {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Vec3Q, D::Error> {
        let [x, y, z]: [Rational; 3] = Deserialize::deserialize(deserializer)?;
        Ok(Vec3Q { x, y, z })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_is_orthogonal_to_both() {
        let a = Vec3Q::from_ints(2, 3, 5);
        let b = Vec3Q::from_ints(-1, 4, 7);
        let c = a.cross(&b);
        assert!(a.dot(&c).is_zero());
        assert!(b.dot(&c).is_zero());
    }

    #[test]
    fn scaled_triple_clears_denominators() {
        let v = Vec3Q::new(
            "1/2".parse().unwrap(),
            "2/3".parse().unwrap(),
            "-5".parse().unwrap(),
        );
        let [x, y, z] = v.scaled_bigint_triple();
        assert_eq!(x, BigInt::from(3));
        assert_eq!(y, BigInt::from(4));
        assert_eq!(z, BigInt::from(-30));
    }

    #[test]
    fn dot_sign_agrees_with_exact_dot() {
        let a = Vec3Q::new(
            "1/3".parse().unwrap(),
            "-2/7".parse().unwrap(),
            "4".parse().unwrap(),
        );
        let b = Vec3Q::from_ints(5, 9, -1);
        assert_eq!(a.dot_sign(&b), a.dot(&b).sign());
    }
}
