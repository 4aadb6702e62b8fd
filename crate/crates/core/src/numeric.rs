//! Floating-point bridge for the moment-geometry and solver layers.
//!
//! All group elements are complex dense matrices; the real families simply
//! carry zero imaginary parts. On every supported family the Cartan
//! involution acts on the algebra as X -> -X^dagger, and the Killing form is
//! an exact multiple of Re tr(XY); both facts are verified against the exact
//! tables at construction.

use crate::lie::{GVec, GroupData};
use nalgebra::{Complex, DMatrix, DVector};

pub type C64 = Complex<f64>;
pub type NMat = DMatrix<C64>;

#[derive(Clone)]
pub struct NumericGroup {
    pub n: usize,
    pub dim: usize,
    pub basis: Vec<NMat>,
    pub killing_coeff: f64,
    /// Orthonormal basis of k for -B.
    pub k_onb: Vec<NMat>,
    /// Orthonormal basis of the fixed maximal torus of K for -B.
    pub t_onb: Vec<NMat>,
    /// K-torus basis matrices (not normalized), in torus order.
    pub t_basis: Vec<NMat>,
    /// Basis matrices of s (split part of the Cartan decomposition).
    pub s_basis: Vec<NMat>,
    /// Basis matrices of k.
    pub k_basis: Vec<NMat>,
}

impl NumericGroup {
    pub fn new(g: &GroupData) -> Self {
        let n = g.ambient;
        let basis: Vec<NMat> = g.basis.iter().map(|b| to_nmat(n, b)).collect();
        let killing_coeff = crate::exact::rat_to_f64(&g.killing_coeff);
        let k_basis: Vec<NMat> = g.k_indices().iter().map(|&i| basis[i].clone()).collect();
        let s_basis: Vec<NMat> = g.s_indices().iter().map(|&i| basis[i].clone()).collect();
        let t_basis: Vec<NMat> = g.k_torus_idx.iter().map(|&i| basis[i].clone()).collect();
        let ip = move |x: &NMat, y: &NMat| -killing_coeff * (x * y).trace().re;
        let k_onb = gram_schmidt(&k_basis, &ip);
        let t_onb = gram_schmidt(&t_basis, &ip);
        NumericGroup {
            n,
            dim: g.dim(),
            basis,
            killing_coeff,
            k_onb,
            t_onb,
            t_basis,
            s_basis,
            k_basis,
        }
    }

    pub fn realize(&self, v: &GVec) -> NMat {
        let mut m = NMat::zeros(self.n, self.n);
        for (i, c) in v.0.iter().enumerate() {
            let cf = C64::new(
                crate::exact::rat_to_f64(&c.re),
                crate::exact::rat_to_f64(&c.im),
            );
            if cf != C64::new(0.0, 0.0) {
                m += &self.basis[i] * cf;
            }
        }
        m
    }

    /// Killing form B(X,Y) on the algebra (real output).
    pub fn killing(&self, x: &NMat, y: &NMat) -> f64 {
        self.killing_coeff * (x * y).trace().re
    }

    /// Inner product <X,Y> = -B(X, θY)... on k this is simply -B.
    pub fn ip_k(&self, x: &NMat, y: &NMat) -> f64 {
        -self.killing(x, y)
    }

    /// B_θ(X,Y) = -B(X, θY): positive definite on all of g.
    pub fn ip_theta(&self, x: &NMat, y: &NMat) -> f64 {
        -self.killing(x, &self.theta(y))
    }

    /// Cartan involution on the algebra.
    pub fn theta(&self, x: &NMat) -> NMat {
        -x.adjoint()
    }

    /// Projection of an algebra element onto k along s.
    pub fn proj_k(&self, x: &NMat) -> NMat {
        (x + self.theta(x)) * C64::new(0.5, 0.0)
    }

    pub fn proj_s(&self, x: &NMat) -> NMat {
        (x - self.theta(x)) * C64::new(0.5, 0.0)
    }

    /// Coordinates on the orthonormal basis of k.
    pub fn k_coords(&self, x: &NMat) -> DVector<f64> {
        DVector::from_iterator(self.k_onb.len(), self.k_onb.iter().map(|b| self.ip_k(x, b)))
    }

    /// K-torus weight coordinates of an element of t: w_j = -B(Y, t_j).
    pub fn kweight_coords(&self, y: &NMat) -> DVector<f64> {
        DVector::from_iterator(
            self.t_basis.len(),
            self.t_basis.iter().map(|t| -self.killing(y, t)),
        )
    }

    /// Distance from x to the span of t (in the -B norm on k).
    pub fn dist_to_torus(&self, x: &NMat) -> f64 {
        let mut r = x.clone();
        for b in &self.t_onb {
            let c = self.ip_k(x, b);
            r -= b * C64::new(c, 0.0);
        }
        (self.ip_k(&r, &r)).abs().sqrt()
    }

    pub fn norm_k(&self, x: &NMat) -> f64 {
        self.ip_k(x, x).max(0.0).sqrt()
    }
}

fn to_nmat(n: usize, m: &crate::exact::CMat) -> NMat {
    let data = m.to_f64();
    NMat::from_fn(n, n, |i, j| data[i * n + j])
}

fn gram_schmidt<F: Fn(&NMat, &NMat) -> f64>(vecs: &[NMat], ip: &F) -> Vec<NMat> {
    let mut out: Vec<NMat> = Vec::new();
    for v in vecs {
        let mut w = v.clone();
        for b in &out {
            let c = ip(&w, b);
            w -= b * C64::new(c, 0.0);
        }
        let n2 = ip(&w, &w);
        assert!(n2 > 1e-12, "degenerate inner product in Gram-Schmidt");
        out.push(w / C64::new(n2.sqrt(), 0.0));
    }
    out
}

/// Matrix exponential by scaling and squaring with a Taylor series.
pub fn expm(a: &NMat) -> NMat {
    let n = a.nrows();
    let norm = a.iter().map(|c| c.norm()).fold(0.0, f64::max) * n as f64;
    let s = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as i32
    } else {
        0
    };
    let b = a * C64::new(0.5f64.powi(s), 0.0);
    let mut term = NMat::identity(n, n);
    let mut sum = NMat::identity(n, n);
    for k in 1..=20 {
        term = (&term * &b) / C64::new(k as f64, 0.0);
        sum += &term;
    }
    let mut result = sum;
    for _ in 0..s {
        result = &result * &result;
    }
    result
}

/// Solve g^{-1} via LU (small matrices).
pub fn inverse(m: &NMat) -> NMat {
    m.clone().try_inverse().expect("singular group element")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expm_rotation() {
        // exp of a rotation generator is a rotation matrix.
        let mut a = NMat::zeros(2, 2);
        a[(0, 1)] = C64::new(-1.0, 0.0);
        a[(1, 0)] = C64::new(1.0, 0.0);
        let t = 0.7;
        let r = expm(&(a * C64::new(t, 0.0)));
        assert!((r[(0, 0)].re - t.cos()).abs() < 1e-13);
        assert!((r[(1, 0)].re - t.sin()).abs() < 1e-13);
        let big = expm(&(a * C64::new(40.0, 0.0)));
        assert!((big[(0, 0)].re - 40.0f64.cos()).abs() < 1e-10);
    }
}
