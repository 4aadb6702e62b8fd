//! Exact roots of unity, represented additively as elements of ℚ/ℤ.
//!
//! A value `t` stands for e^{2πi t}. Character values on the finite
//! stabilizer groups are always roots of unity, so equality with 1 is an
//! exact rational test.

use crate::exact::Rat;
use num::{BigInt, One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootOfUnity {
    /// Fraction in [0, 1), meaning e^{2πi frac}.
    frac: Rat,
}

impl RootOfUnity {
    pub fn one() -> Self {
        RootOfUnity { frac: Rat::zero() }
    }

    /// e^{2πi t}.
    pub fn from_fraction(t: Rat) -> Self {
        RootOfUnity { frac: reduce_mod_1(t) }
    }

    /// e^{πi} = -1.
    pub fn minus_one() -> Self {
        RootOfUnity::from_fraction(Rat::new(BigInt::one(), BigInt::from(2)))
    }

    pub fn mul(&self, other: &RootOfUnity) -> RootOfUnity {
        RootOfUnity::from_fraction(self.frac.clone() + other.frac.clone())
    }

    pub fn inv(&self) -> RootOfUnity {
        RootOfUnity::from_fraction(-self.frac.clone())
    }

    pub fn pow(&self, k: i64) -> RootOfUnity {
        RootOfUnity::from_fraction(self.frac.clone() * Rat::from(BigInt::from(k)))
    }

    pub fn is_one(&self) -> bool {
        self.frac.is_zero()
    }

    /// The fraction t in [0,1) with self = e^{2πi t}.
    pub fn fraction(&self) -> &Rat {
        &self.frac
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        if self.frac.is_zero() {
            return 1;
        }
        // frac = p/q reduced; order is q.
        let q = self.frac.denom();
        q.to_string().parse().unwrap()
    }
}

fn reduce_mod_1(t: Rat) -> Rat {
    let floor = t.floor();
    let r = t - floor;
    if r.is_negative() {
        r + Rat::one()
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn arithmetic() {
        let w = RootOfUnity::from_fraction(rat(1, 3));
        assert_eq!(w.order(), 3);
        assert!(w.pow(3).is_one());
        assert!(!w.pow(2).is_one());
        assert_eq!(w.mul(&w.inv()), RootOfUnity::one());
        assert_eq!(
            RootOfUnity::minus_one().mul(&RootOfUnity::minus_one()),
            RootOfUnity::one()
        );
        assert_eq!(RootOfUnity::from_fraction(rat(-1, 4)).fraction(), &rat(3, 4));
    }
}
