//! Exact root-space decomposition of g^C relative to a θ-stable Cartan.
//!
//! Roots of the supported families take values in a small grid of rationals
//! on the adapted bases, so simultaneous eigenspaces can be carved out by
//! exact kernel computations; no floating point and no per-family root
//! tables are involved. Root vectors are normalized so that
//! <α, [E_α, Ē_α]> = 2 whenever that can be done by a rational rescaling.

use super::weight::{Weight, WeightSpace};
use super::{GVec, GroupData, LieError};
use crate::exact::{cimag, creal, kernel_basis, rat, solve_in_span, CRat, Rat};
use num::integer::Roots;
use num::{BigInt, One, Signed, Zero};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RootType {
    Real,
    ImaginaryCompact,
    ImaginaryNoncompact,
    Complex,
}

impl RootType {
    pub fn name(&self) -> &'static str {
        match self {
            RootType::Real => "real",
            RootType::ImaginaryCompact => "imaginary-compact",
            RootType::ImaginaryNoncompact => "imaginary-noncompact",
            RootType::Complex => "complex",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Root {
    /// α(t_j)/i on the compact part, then α(a_k) on the split part.
    pub coords: Vec<Rat>,
    /// Root vector E_α in g^C (coefficient vector over the basis of g).
    pub evec: GVec,
    /// Partner X_{-α} used by the orbit-curve lemmas: the conjugate vector
    /// for imaginary roots, -θE_α for real roots. None for complex roots.
    pub minus_vec: Option<GVec>,
    /// <α, [E_α, minus_vec]> when the partner is defined.
    pub pairing: Option<Rat>,
    pub kind: RootType,
}

impl Root {
    pub fn conj_vec(&self) -> GVec {
        self.evec.conj()
    }

    pub fn as_weight(&self) -> Weight {
        Weight::new(self.coords.clone(), WeightSpace::CartanDual)
    }
}

/// Candidate rational values r for eigenvalues of ad(h): i r on the compact
/// part of the Cartan, r on the split part.
fn candidate_values() -> Vec<Rat> {
    let mut v = vec![Rat::zero()];
    for num in [1i64, 2, 3, 4, 5, 6, 7, 8] {
        for den in [1i64, 2] {
            let r = rat(num, den);
            if !v.contains(&r) {
                v.push(-r.clone());
                v.push(r);
            }
        }
    }
    v
}

/// Evaluate the functional with the given coordinates on an element h of the
/// Cartan span, h expressed in (t ++ a)-coordinates.
pub fn eval_coords(coords: &[Rat], h_coords: &[CRat], t_dim: usize) -> CRat {
    let mut s = crate::exact::czero();
    for (j, c) in h_coords.iter().enumerate() {
        let factor = if j < t_dim {
            cimag(coords[j].clone())
        } else {
            creal(coords[j].clone())
        };
        s = s + c.clone() * factor;
    }
    s
}

/// Decompose g^C into root spaces for the Cartan with the given bases.
pub fn decompose_roots(g: &GroupData, t_basis: &[GVec], a_basis: &[GVec]) -> Vec<Root> {
    let d = g.dim();
    let t_dim = t_basis.len();
    let a_dim = a_basis.len();
    let full: Vec<GVec> = (0..d).map(|i| GVec::basis_elt(d, i)).collect();
    // (subspace basis, eigenvalue list so far)
    let mut spaces: Vec<(Vec<GVec>, Vec<Rat>)> = vec![(full, vec![])];
    let candidates = candidate_values();

    for (step, h) in t_basis.iter().chain(a_basis.iter()).enumerate() {
        let imaginary = step < t_dim;
        let mut next = Vec::new();
        for (space, vals) in &spaces {
            let cols: Vec<Vec<CRat>> = space.iter().map(|v| v.0.clone()).collect();
            // ad(h) restricted to the invariant subspace.
            let m: Vec<Vec<CRat>> = {
                let images: Vec<Vec<CRat>> = space
                    .iter()
                    .map(|v| {
                        solve_in_span(&cols, &g.bracket(h, v).0)
                            .expect("subspace not ad-invariant")
                    })
                    .collect();
                (0..space.len())
                    .map(|i| (0..space.len()).map(|j| images[j][i].clone()).collect())
                    .collect()
            };
            let mut found = 0usize;
            for r in &candidates {
                let val: CRat = if imaginary {
                    cimag(r.clone())
                } else {
                    creal(r.clone())
                };
                let shifted: Vec<Vec<CRat>> = (0..space.len())
                    .map(|i| {
                        (0..space.len())
                            .map(|j| {
                                let mut v = m[i][j].clone();
                                if i == j {
                                    v = v - val.clone();
                                }
                                v
                            })
                            .collect()
                    })
                    .collect();
                let ker = kernel_basis(&shifted, space.len());
                if ker.is_empty() {
                    continue;
                }
                found += ker.len();
                let vectors: Vec<GVec> = ker
                    .iter()
                    .map(|k| {
                        let mut v = GVec::zero(d);
                        for (j, c) in k.iter().enumerate() {
                            v = v.add(&space[j].scale(c));
                        }
                        v
                    })
                    .collect();
                let mut vals2 = vals.clone();
                vals2.push(r.clone());
                next.push((vectors, vals2));
            }
            assert_eq!(
                found,
                space.len(),
                "eigenvalue grid did not cover ad(h) spectrum in {}",
                g.name
            );
        }
        spaces = next;
    }

    let mut roots = Vec::new();
    let mut zero_dim = 0usize;
    for (space, vals) in spaces {
        if vals.iter().all(|v| v.is_zero()) {
            zero_dim += space.len();
            continue;
        }
        assert_eq!(space.len(), 1, "root multiplicity > 1 in {}", g.name);
        roots.push(finish_root(g, t_basis, a_basis, vals, space.into_iter().next().unwrap()));
    }
    assert_eq!(zero_dim, t_dim + a_dim, "Cartan not maximal in {}", g.name);
    roots.sort_by(|a, b| cmp_coords(&a.coords, &b.coords));
    roots
}

fn cmp_coords(a: &[Rat], b: &[Rat]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            std::cmp::Ordering::Equal => continue,
            o => return o,
        }
    }
    std::cmp::Ordering::Equal
}

fn finish_root(
    g: &GroupData,
    t_basis: &[GVec],
    a_basis: &[GVec],
    coords: Vec<Rat>,
    vec: GVec,
) -> Root {
    let t_dim = t_basis.len();
    let real = coords[..t_dim].iter().all(|c| c.is_zero());
    let imaginary = coords[t_dim..].iter().all(|c| c.is_zero());
    assert!(!(real && imaginary));

    if imaginary {
        // E + Ē is a θ-eigenvector; its sign separates compact from
        // noncompact imaginary roots. Rescale by i first if E + Ē = 0.
        let mut evec = vec;
        let mut sum = evec.add(&evec.conj());
        if sum.is_zero() {
            evec = evec.scale(&crate::exact::ci());
            sum = evec.add(&evec.conj());
        }
        let th = g.theta(&sum);
        let kind = if th == sum {
            RootType::ImaginaryCompact
        } else if th == sum.scale(&crate::exact::cint(-1)) {
            RootType::ImaginaryNoncompact
        } else {
            panic!("imaginary root vector not θ-pure in {}", g.name)
        };
        let (evec, pairing) = normalize_conj_pair(g, t_basis, a_basis, &coords, evec, kind);
        let minus = evec.conj();
        Root {
            coords,
            minus_vec: Some(minus),
            pairing: Some(pairing),
            evec,
            kind,
        }
    } else if real {
        // Real root spaces are defined over ℝ; pick a real vector.
        let re = GVec(vec.0.iter().map(|c| creal(c.re.clone())).collect());
        let im = GVec(vec.0.iter().map(|c| creal(c.im.clone())).collect());
        let mut evec = if !re.is_zero() { re } else { im };
        // Partner -θE, sign-adjusted so the pairing is positive.
        let mut minus = g.theta(&evec).scale(&crate::exact::cint(-1));
        let h = g.bracket(&evec, &minus);
        let mut p = pairing_value(g, t_basis, a_basis, &coords, &h);
        if p.is_negative() {
            minus = minus.scale(&crate::exact::cint(-1));
            p = -p;
        }
        assert!(p.is_positive(), "degenerate real root pairing in {}", g.name);
        if let Some(s) = scale_to_standard(&p) {
            evec = evec.scale(&creal(s.clone()));
            minus = minus.scale(&creal(s.clone()));
            let h = g.bracket(&evec, &minus);
            p = pairing_value(g, t_basis, a_basis, &coords, &h);
        }
        Root {
            coords,
            minus_vec: Some(minus),
            pairing: Some(p),
            evec,
            kind: RootType::Real,
        }
    } else {
        Root {
            coords,
            evec: vec,
            minus_vec: None,
            pairing: None,
            kind: RootType::Complex,
        }
    }
}

/// For imaginary roots: pairing <α, [E, Ē]> with sign fixed by the type, and
/// a rational rescaling towards pairing 2 (or 1) when possible.
fn normalize_conj_pair(
    g: &GroupData,
    t_basis: &[GVec],
    a_basis: &[GVec],
    coords: &[Rat],
    evec: GVec,
    kind: RootType,
) -> (GVec, Rat) {
    let h = g.bracket(&evec, &evec.conj());
    let p = pairing_value(g, t_basis, a_basis, coords, &h);
    match kind {
        RootType::ImaginaryNoncompact => {
            assert!(p.is_positive(), "noncompact pairing not positive in {}", g.name)
        }
        RootType::ImaginaryCompact => {
            assert!(p.is_negative(), "compact pairing not negative in {}", g.name)
        }
        _ => unreachable!(),
    }
    if let Some(s) = scale_to_standard(&p.abs()) {
        let evec = evec.scale(&creal(s));
        let h = g.bracket(&evec, &evec.conj());
        let p = pairing_value(g, t_basis, a_basis, coords, &h);
        (evec, p)
    } else {
        (evec, p)
    }
}

/// <α, h> for h in the Cartan span, as an exact rational (asserts reality).
fn pairing_value(
    g: &GroupData,
    t_basis: &[GVec],
    a_basis: &[GVec],
    coords: &[Rat],
    h: &GVec,
) -> Rat {
    let cols: Vec<Vec<CRat>> = t_basis.iter().chain(a_basis.iter()).map(|v| v.0.clone()).collect();
    let hc = solve_in_span(&cols, &h.0).expect("element not in Cartan span");
    let val = eval_coords(coords, &hc, t_basis.len());
    assert!(val.im.is_zero(), "pairing not real");
    val.re
}

/// s with s^2 * p ∈ {2, 1} if such a rational s exists.
fn scale_to_standard(p: &Rat) -> Option<Rat> {
    for target in [rat(2, 1), rat(1, 1)] {
        let ratio = target / p.clone();
        if let Some(s) = rational_sqrt(&ratio) {
            return Some(s);
        }
    }
    None
}

fn rational_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().clone();
    let d = r.denom().clone();
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &sn * &sn == n && &sd * &sd == d {
        Some(Rat::new(sn, sd))
    } else {
        None
    }
}

/// Classify a root given by its coordinate vector against a Cartan's root
/// list. Exact comparison; unknown coordinates are rejected.
pub fn classify_root(cartan: &super::CartanData, coords: &[Rat]) -> Result<RootType, LieError> {
    cartan
        .roots
        .iter()
        .find(|r| r.coords == coords)
        .map(|r| r.kind)
        .ok_or(LieError::NotARoot)
}

#[allow(unused)]
fn silence(_: BigInt) {
    let _ = Rat::one();
}
