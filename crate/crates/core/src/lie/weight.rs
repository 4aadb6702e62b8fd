//! Weights as exact rational coordinate vectors.
//!
//! A weight stores the values of a (real- or imaginary-valued) functional on
//! a fixed ordered basis. For a θ-stable Cartan h = t ⊕ a the convention is:
//! `coords[j] = α(t_j)/i` on the compact part and `coords[r+k] = α(a_k)` on
//! the split part, so every root and weight of the supported families has
//! rational coordinates. Weights on the maximal torus of K use the same
//! convention on the torus basis.

use crate::exact::{rat_to_f64, Rat};
use num::{BigInt, Signed, Zero};

/// Which dual space a weight lives on. Arithmetic across spaces is a bug.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WeightSpace {
    /// Dual of a θ-stable Cartan subalgebra (i t_h ⊕ a_h).
    CartanDual,
    /// Dual of the fixed maximal torus of K.
    KTorusDual,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Weight {
    pub coords: Vec<Rat>,
    pub space: WeightSpace,
}

impl Weight {
    pub fn zero(dim: usize, space: WeightSpace) -> Self {
        Weight {
            coords: vec![Rat::zero(); dim],
            space,
        }
    }

    pub fn new(coords: Vec<Rat>, space: WeightSpace) -> Self {
        Weight { coords, space }
    }

    pub fn from_ints(coords: &[i64], space: WeightSpace) -> Self {
        Weight {
            coords: coords.iter().map(|&c| Rat::from(BigInt::from(c))).collect(),
            space,
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.space, other.space);
        assert_eq!(self.dim(), other.dim());
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
            space: self.space,
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        assert_eq!(self.space, other.space);
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
            space: self.space,
        }
    }

    pub fn neg(&self) -> Weight {
        self.scale(&Rat::from(BigInt::from(-1)))
    }

    pub fn scale(&self, c: &Rat) -> Weight {
        Weight {
            coords: self.coords.iter().map(|a| a.clone() * c.clone()).collect(),
            space: self.space,
        }
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coords.iter().map(rat_to_f64).collect()
    }

    /// Integrality against a lattice given by generator vectors `gens`
    /// (coordinates of X/2π on the same basis, so exp(2π gen) = e): the
    /// character e^w is single-valued iff <coords, gen> is an integer for
    /// every generator.
    pub fn is_integral(&self, lattice_gens: &[Vec<Rat>]) -> bool {
        lattice_gens.iter().all(|g| {
            let mut s = Rat::zero();
            for (c, x) in self.coords.iter().zip(g) {
                s += c.clone() * x.clone();
            }
            s.is_integer()
        })
    }
}

/// Half of the exact sum of a list of weights. The empty sum is zero.
pub fn half_sum(dim: usize, space: WeightSpace, items: &[Weight]) -> Weight {
    let mut acc = Weight::zero(dim, space);
    for w in items {
        acc = acc.add(w);
    }
    acc.scale(&Rat::new(BigInt::from(1), BigInt::from(2)))
}

/// Inner product on a dual space, induced by a positive definite Gram matrix
/// on the underlying real form of the Cartan (or torus).
#[derive(Clone, Debug)]
pub struct DualPairing {
    /// Inverse of the Gram matrix of the basis.
    pub gram_inv: Vec<Vec<Rat>>,
}

impl DualPairing {
    pub fn from_gram(gram: &[Vec<Rat>]) -> Self {
        DualPairing {
            gram_inv: crate::exact::invert_rat(gram),
        }
    }

    pub fn pair(&self, a: &Weight, b: &Weight) -> Rat {
        assert_eq!(a.space, b.space);
        let n = a.dim();
        let mut s = Rat::zero();
        for i in 0..n {
            for j in 0..n {
                s += a.coords[i].clone() * self.gram_inv[i][j].clone() * b.coords[j].clone();
            }
        }
        s
    }

    pub fn norm_sq(&self, a: &Weight) -> Rat {
        self.pair(a, a)
    }

    /// Dominance of `w` against the listed positive roots/weights.
    pub fn is_dominant(&self, w: &Weight, positive: &[Weight]) -> bool {
        positive.iter().all(|p| !self.pair(w, p).is_negative())
    }

    pub fn is_strictly_dominant(&self, w: &Weight, positive: &[Weight]) -> bool {
        positive.iter().all(|p| self.pair(w, p).is_positive())
    }

    /// Reflection of `w` in the hyperplane of root `alpha`.
    pub fn reflect(&self, w: &Weight, alpha: &Weight) -> Weight {
        let c = self.pair(w, alpha) * Rat::from(BigInt::from(2)) / self.pair(alpha, alpha);
        w.sub(&alpha.scale(&c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rint};

    #[test]
    fn half_sum_examples() {
        // Single element: alpha/2. Empty: 0.
        let alpha = Weight::from_ints(&[2], WeightSpace::CartanDual);
        let h = half_sum(1, WeightSpace::CartanDual, &[alpha.clone()]);
        assert_eq!(h.coords[0], rint(1));
        let e = half_sum(1, WeightSpace::CartanDual, &[]);
        assert!(e.is_zero());
        let two = half_sum(1, WeightSpace::CartanDual, &[alpha.clone(), alpha]);
        assert_eq!(two.coords[0], rint(2));
    }

    #[test]
    fn pairing_and_reflection() {
        // Gram = diag(2): dual pairing = diag(1/2).
        let gram = vec![vec![rint(2)]];
        let p = DualPairing::from_gram(&gram);
        let a = Weight::from_ints(&[2], WeightSpace::KTorusDual);
        assert_eq!(p.pair(&a, &a), rint(2));
        let w = Weight::from_ints(&[3], WeightSpace::KTorusDual);
        let r = p.reflect(&w, &a);
        assert_eq!(r.coords[0], rint(-3));
    }

    #[test]
    fn integrality() {
        let w = Weight::new(vec![rat(1, 2)], WeightSpace::KTorusDual);
        let full = vec![vec![rint(1)]];
        assert!(!w.is_integral(&full));
        let half = vec![vec![rint(2)]];
        assert!(w.is_integral(&half));
    }
}
