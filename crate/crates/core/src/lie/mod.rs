//! Exact structure theory for the supported real reductive matrix groups.
//!
//! Everything here is computed over ℚ or ℚ(i) from an explicit matrix basis:
//! structure constants, the Cartan involution, the Killing form, θ-stable
//! Cartan subalgebras with classified roots, and Cayley transforms between
//! Cartan classes. All data is verified at construction time (bracket
//! closure, Jacobi, involution and definiteness checks), so downstream
//! modules can rely on it without re-checking.

pub mod cartan;
pub mod families;
pub mod roots;
pub mod weight;

use crate::exact::{czero, rat_to_f64, CMat, CRat, Rat};
use num::{Signed, Zero};
use thiserror::Error;

pub use cartan::{restricted_weights, CartanData, FiniteChar, FiniteElt, FinitePart};
pub use roots::{classify_root, Root, RootType};
pub use weight::{half_sum, DualPairing, Weight, WeightSpace};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Family {
    Sl2R,
    Sl2C,
    Su { p: u32, q: u32 },
    So0 { p: u32, q: u32 },
}

impl Family {
    pub fn name(&self) -> String {
        match self {
            Family::Sl2R => "SL(2,R)".to_string(),
            Family::Sl2C => "SL(2,C)".to_string(),
            Family::Su { p, q } => format!("SU({},{})", p, q),
            Family::So0 { p, q } => format!("SO0({},{})", p, q),
        }
    }

    /// Parse names like "SL2R", "SU(2,1)", "SU21", "SO0(3,1)", "SO31".
    pub fn parse(s: &str) -> Option<Family> {
        let t: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_uppercase();
        match t.as_str() {
            "SL2R" => Some(Family::Sl2R),
            "SL2C" => Some(Family::Sl2C),
            _ => {
                let digits: Vec<u32> = t.chars().filter_map(|c| c.to_digit(10)).collect();
                if t.starts_with("SU") && digits.len() == 2 {
                    Some(Family::Su {
                        p: digits[0],
                        q: digits[1],
                    })
                } else if t.starts_with("SO") && digits.len() >= 2 {
                    // allow SO0(p,q) with the leading 0 of the identity component
                    let (p, q) = if t.starts_with("SO0") && digits.len() == 3 {
                        (digits[1], digits[2])
                    } else {
                        (digits[0], digits[1])
                    };
                    Some(Family::So0 { p, q })
                } else {
                    None
                }
            }
        }
    }

    /// Whether the representation-theoretic pipeline supports this family.
    /// SU(2,2) is constructible as structure data (for dimension counts) but
    /// is not part of the multiplicity pipeline.
    pub fn pipeline_supported(&self) -> bool {
        match self {
            Family::Sl2R | Family::Sl2C => true,
            Family::Su { p, q } => *q == 1 && (1..=3).contains(p),
            Family::So0 { p, q } => (*q == 1 && (2..=4).contains(p)) || (*p == 2 && *q == 2),
        }
    }

    fn structure_supported(&self) -> bool {
        self.pipeline_supported() || matches!(self, Family::Su { p: 2, q: 2 })
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("unsupported group or out-of-range size: {0}")]
    UnsupportedGroup(String),
    #[error("not a root of the given Cartan subalgebra")]
    NotARoot,
    #[error("root has the wrong type for this operation: expected {expected}, got {got}")]
    WrongRootType { expected: String, got: String },
}

/// Element of g^C as an exact coefficient vector over the basis of g.
/// Conjugation with respect to the real form is coefficient conjugation,
/// which keeps root-vector arithmetic exact even for SL(2,C) viewed as a
/// real group (where the complexification is not a matrix subspace).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GVec(pub Vec<CRat>);

impl GVec {
    pub fn zero(dim: usize) -> Self {
        GVec(vec![czero(); dim])
    }

    pub fn basis_elt(dim: usize, idx: usize) -> Self {
        let mut v = GVec::zero(dim);
        v.0[idx] = crate::exact::cone();
        v
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &GVec) -> GVec {
        GVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }

    pub fn sub(&self, other: &GVec) -> GVec {
        GVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }

    pub fn scale(&self, c: &CRat) -> GVec {
        GVec(self.0.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Conjugation with respect to the real form.
    pub fn conj(&self) -> GVec {
        GVec(self.0.iter().map(|a| a.conj()).collect())
    }

    pub fn is_real(&self) -> bool {
        self.0.iter().all(|a| a.im.is_zero())
    }

    pub fn real_coords(&self) -> Option<Vec<Rat>> {
        if self.is_real() {
            Some(self.0.iter().map(|a| a.re.clone()).collect())
        } else {
            None
        }
    }
}

/// A supported group with exact structure data.
#[derive(Clone, Debug)]
pub struct GroupData {
    pub family: Family,
    pub name: String,
    pub ambient: usize,
    pub basis: Vec<CMat>,
    /// +1 on the compact part k, -1 on the split part s.
    pub theta_signs: Vec<i8>,
    /// Killing form B(b_i, b_j), exact.
    pub killing: Vec<Vec<Rat>>,
    /// B(X,Y) = killing_coeff * Re tr(XY) on the ambient realization.
    pub killing_coeff: Rat,
    /// Structure constants: bracket of basis elements i,j expanded over the basis.
    pub structure: Vec<Vec<Vec<Rat>>>,
    /// θ-stable Cartan subalgebra classes; index 0 is the maximally compact seed.
    pub cartans: Vec<CartanData>,
    /// Positive roots of (k, t) as weights on the torus basis.
    pub k_pos_roots: Vec<Weight>,
    /// Indices of the fixed maximal torus basis of K inside `basis`.
    pub k_torus_idx: Vec<usize>,
    /// Lattice generators of ker(exp) on the torus: columns X/2π in torus coords.
    pub k_torus_lattice: Vec<Vec<Rat>>,
    /// Pairing on K-torus weights (from -B on t).
    pub k_pairing: DualPairing,
}

impl GroupData {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn rank(&self) -> usize {
        self.cartans[0].t_basis.len() + self.cartans[0].a_basis.len()
    }

    pub fn dim_k(&self) -> usize {
        self.theta_signs.iter().filter(|&&s| s > 0).count()
    }

    pub fn dim_t(&self) -> usize {
        self.k_torus_idx.len()
    }

    pub fn k_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.theta_signs[i] > 0).collect()
    }

    pub fn s_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.theta_signs[i] < 0).collect()
    }

    /// Exact bracket via structure constants.
    pub fn bracket(&self, u: &GVec, v: &GVec) -> GVec {
        let d = self.dim();
        let mut out = GVec::zero(d);
        for i in 0..d {
            if u.0[i].is_zero() {
                continue;
            }
            for j in 0..d {
                if v.0[j].is_zero() {
                    continue;
                }
                let f = u.0[i].clone() * v.0[j].clone();
                for k in 0..d {
                    let c = &self.structure[i][j][k];
                    if !c.is_zero() {
                        out.0[k] = out.0[k].clone() + f.clone() * crate::exact::creal(c.clone());
                    }
                }
            }
        }
        out
    }

    /// Cartan involution on coefficient vectors.
    pub fn theta(&self, v: &GVec) -> GVec {
        GVec(
            v.0.iter()
                .enumerate()
                .map(|(i, c)| {
                    if self.theta_signs[i] > 0 {
                        c.clone()
                    } else {
                        -c.clone()
                    }
                })
                .collect(),
        )
    }

    /// Complex-bilinear extension of the Killing form.
    pub fn killing_form(&self, u: &GVec, v: &GVec) -> CRat {
        let d = self.dim();
        let mut s = czero();
        for i in 0..d {
            if u.0[i].is_zero() {
                continue;
            }
            for j in 0..d {
                if v.0[j].is_zero() {
                    continue;
                }
                s = s + u.0[i].clone()
                    * v.0[j].clone()
                    * crate::exact::creal(self.killing[i][j].clone());
            }
        }
        s
    }

    /// Matrix realization of a coefficient vector. Faithful on real vectors
    /// for every family, and on all vectors except for the complexification
    /// of SL(2,C) viewed as a real group.
    pub fn realize(&self, v: &GVec) -> CMat {
        let mut m = CMat::zeros(self.ambient, self.ambient);
        for (i, c) in v.0.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&self.basis[i].scale(c));
            }
        }
        m
    }

    /// Exact coordinates of an ambient matrix over the basis.
    pub fn coords_of(&self, m: &CMat) -> Option<GVec> {
        let cols: Vec<Vec<CRat>> = self.basis.iter().map(|b| b.flatten()).collect();
        crate::exact::solve_in_span(&cols, &m.flatten()).map(GVec)
    }

    /// ad(v) as a dim x dim matrix over ℚ(i) in basis coordinates
    /// (column j = [v, b_j]).
    pub fn ad_matrix(&self, v: &GVec) -> Vec<Vec<CRat>> {
        let d = self.dim();
        let mut cols = Vec::with_capacity(d);
        for j in 0..d {
            let bj = GVec::basis_elt(d, j);
            cols.push(self.bracket(v, &bj).0);
        }
        // return as rows
        (0..d)
            .map(|i| (0..d).map(|j| cols[j][i].clone()).collect())
            .collect()
    }

    /// Gram matrix of -B restricted to the K-torus basis.
    pub fn k_torus_gram(&self) -> Vec<Vec<Rat>> {
        let idx = &self.k_torus_idx;
        idx.iter()
            .map(|&i| {
                idx.iter()
                    .map(|&j| -self.killing[i][j].clone())
                    .collect()
            })
            .collect()
    }

    /// The element of t dual to a K-torus weight under minus the Killing form:
    /// -B(Y, t_j) = coords[j]. Returned in K-torus basis coordinates.
    pub fn k_weight_dual(&self, w: &Weight) -> Vec<Rat> {
        assert_eq!(w.space, WeightSpace::KTorusDual);
        let gram = self.k_torus_gram();
        let inv = crate::exact::invert_rat(&gram);
        (0..w.dim())
            .map(|i| {
                let mut s = Rat::zero();
                for j in 0..w.dim() {
                    s += inv[i][j].clone() * w.coords[j].clone();
                }
                s
            })
            .collect()
    }

    /// Same dual element as a GVec over the full basis.
    pub fn k_weight_dual_vec(&self, w: &Weight) -> GVec {
        let c = self.k_weight_dual(w);
        let mut v = GVec::zero(self.dim());
        for (j, &bi) in self.k_torus_idx.iter().enumerate() {
            v.0[bi] = crate::exact::creal(c[j].clone());
        }
        v
    }

    /// Half sum of the fixed positive compact roots.
    pub fn rho_k(&self) -> Weight {
        half_sum(self.dim_t(), WeightSpace::KTorusDual, &self.k_pos_roots)
    }

    /// Weyl group of (k, t) as exact matrices acting on K-weight coordinates,
    /// generated by the reflections in the compact roots.
    pub fn weyl_k(&self) -> Vec<Vec<Vec<Rat>>> {
        let dim = self.dim_t();
        let id: Vec<Vec<Rat>> = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| if i == j { Rat::from(num::BigInt::from(1)) } else { Rat::zero() })
                    .collect()
            })
            .collect();
        let mut elts = vec![id];
        let gens: Vec<Vec<Vec<Rat>>> = self
            .k_pos_roots
            .iter()
            .map(|alpha| {
                (0..dim)
                    .map(|i| {
                        let e = Weight::new(
                            (0..dim)
                                .map(|j| {
                                    if i == j {
                                        Rat::from(num::BigInt::from(1))
                                    } else {
                                        Rat::zero()
                                    }
                                })
                                .collect(),
                            WeightSpace::KTorusDual,
                        );
                        self.k_pairing.reflect(&e, alpha).coords
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        // closure (tiny groups, |W| <= 8 here)
        loop {
            let mut added = false;
            let snapshot = elts.clone();
            for g in &gens {
                for e in &snapshot {
                    let prod = mat_mul_rat(g, e);
                    if !elts.contains(&prod) {
                        elts.push(prod);
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        elts
    }

    /// Apply a Weyl matrix (rows act on coordinate columns) to a weight.
    pub fn weyl_apply(m: &[Vec<Rat>], w: &Weight) -> Weight {
        let dim = w.dim();
        let coords = (0..dim)
            .map(|i| {
                let mut s = Rat::zero();
                for j in 0..dim {
                    s += m[i][j].clone() * w.coords[j].clone();
                }
                s
            })
            .collect();
        Weight::new(coords, w.space)
    }

    /// Determinant of a Weyl matrix (+1/-1).
    pub fn weyl_det(m: &[Vec<Rat>]) -> i64 {
        let n = m.len();
        let rows: Vec<Vec<CRat>> = m
            .iter()
            .map(|r| r.iter().map(|v| crate::exact::creal(v.clone())).collect())
            .collect();
        let d = det_rat(&rows, n);
        if d.is_positive() {
            1
        } else {
            -1
        }
    }
}

fn mat_mul_rat(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut s = Rat::zero();
                    for k in 0..n {
                        s += a[i][k].clone() * b[k][j].clone();
                    }
                    s
                })
                .collect()
        })
        .collect()
}

fn det_rat(rows: &[Vec<CRat>], n: usize) -> Rat {
    let mut a: Vec<Vec<CRat>> = rows.to_vec();
    let mut det = crate::exact::cone();
    for c in 0..n {
        let mut piv = None;
        for r in c..n {
            if !a[r][c].is_zero() {
                piv = Some(r);
                break;
            }
        }
        let Some(p) = piv else { return Rat::zero() };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det = det * a[c][c].clone();
        let inv = crate::exact::cone() / a[c][c].clone();
        for r in (c + 1)..n {
            if !a[r][c].is_zero() {
                let f = a[r][c].clone() * inv.clone();
                for j in c..n {
                    a[r][j] = a[r][j].clone() - f.clone() * a[c][j].clone();
                }
            }
        }
    }
    assert!(det.im.is_zero());
    det.re
}

/// Exact determinant of a rational matrix (used for definiteness checks).
pub fn det_rational(m: &[Vec<Rat>]) -> Rat {
    let rows: Vec<Vec<CRat>> = m
        .iter()
        .map(|r| r.iter().map(|v| crate::exact::creal(v.clone())).collect())
        .collect();
    det_rat(&rows, m.len())
}

/// Build a supported group with full verification of the structure data.
pub fn build_group(family: Family) -> Result<GroupData, LieError> {
    if !family.structure_supported() {
        return Err(LieError::UnsupportedGroup(family.name()));
    }
    let seed = families::family_seed(family);
    let dim = seed.basis.len();

    // Structure constants with exact bracket-closure check.
    let cols: Vec<Vec<CRat>> = seed.basis.iter().map(|b| b.flatten()).collect();
    let mut structure = vec![vec![vec![Rat::zero(); dim]; dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            let br = seed.basis[i].bracket(&seed.basis[j]);
            let sol = crate::exact::solve_in_span(&cols, &br.flatten())
                .unwrap_or_else(|| panic!("bracket not closed for {}", seed.name));
            for (k, c) in sol.iter().enumerate() {
                assert!(c.im.is_zero(), "non-real structure constant");
                structure[i][j][k] = c.re.clone();
            }
        }
    }

    // Killing form from ad matrices; verified against the trace-form multiple.
    let mut killing = vec![vec![Rat::zero(); dim]; dim];
    let ad: Vec<Vec<Vec<Rat>>> = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|r| (0..dim).map(|c| structure[i][c][r].clone()).collect())
                .collect()
        })
        .collect();
    for i in 0..dim {
        for j in 0..dim {
            let mut tr = Rat::zero();
            for r in 0..dim {
                for c in 0..dim {
                    tr += ad[i][r][c].clone() * ad[j][c][r].clone();
                }
            }
            killing[i][j] = tr;
        }
    }
    for i in 0..dim {
        for j in 0..dim {
            let t = seed.basis[i].mul(&seed.basis[j]).trace();
            let expect = seed.killing_coeff.clone() * t.re;
            assert_eq!(killing[i][j], expect, "Killing/trace mismatch in {}", seed.name);
        }
    }

    let mut g = GroupData {
        family,
        name: seed.name.clone(),
        ambient: seed.ambient,
        basis: seed.basis.clone(),
        theta_signs: seed.theta_signs.clone(),
        killing,
        killing_coeff: seed.killing_coeff.clone(),
        structure,
        cartans: Vec::new(),
        k_pos_roots: Vec::new(),
        k_torus_idx: seed.seed_t.clone(),
        k_torus_lattice: Vec::new(),
        k_pairing: DualPairing {
            gram_inv: vec![],
        },
    };

    verify_structure(&g);

    // Torus data. The seed bases are chosen so that ker(exp) on t is the
    // standard integer lattice; this is verified numerically in tests.
    let t_dim = g.k_torus_idx.len();
    g.k_torus_lattice = (0..t_dim)
        .map(|i| {
            (0..t_dim)
                .map(|j| {
                    if i == j {
                        Rat::from(num::BigInt::from(1))
                    } else {
                        Rat::zero()
                    }
                })
                .collect()
        })
        .collect();
    g.k_pairing = DualPairing::from_gram(&g.k_torus_gram());

    // Seed Cartan and Cayley enumeration.
    let seed_cartan = cartan::build_cartan(&g, "maximally-compact", &seed.seed_t_vecs(), &seed.seed_a_vecs());
    g.cartans.push(seed_cartan);
    cartan::enumerate_cartans(&mut g);

    // Positive compact roots: hard-coded for unequal rank, derived from the
    // seed Cartan classification otherwise.
    g.k_pos_roots = match &seed.k_pos_roots {
        Some(list) => list
            .iter()
            .map(|c| Weight::new(c.clone(), WeightSpace::KTorusDual))
            .collect(),
        None => g.cartans[0]
            .roots
            .iter()
            .filter(|r| r.kind == RootType::ImaginaryCompact && lex_positive(&r.coords))
            .map(|r| Weight::new(r.coords[..t_dim].to_vec(), WeightSpace::KTorusDual))
            .collect(),
    };

    Ok(g)
}

fn lex_positive(coords: &[Rat]) -> bool {
    for c in coords {
        if c.is_positive() {
            return true;
        }
        if c.is_negative() {
            return false;
        }
    }
    false
}

fn verify_structure(g: &GroupData) {
    let d = g.dim();
    // θ is an involutive automorphism.
    for i in 0..d {
        for j in 0..d {
            let bi = GVec::basis_elt(d, i);
            let bj = GVec::basis_elt(d, j);
            let lhs = g.theta(&g.bracket(&bi, &bj));
            let rhs = g.bracket(&g.theta(&bi), &g.theta(&bj));
            assert_eq!(lhs, rhs, "theta not an automorphism in {}", g.name);
        }
    }
    // Jacobi identity on all basis triples.
    for i in 0..d {
        let bi = GVec::basis_elt(d, i);
        for j in 0..d {
            let bj = GVec::basis_elt(d, j);
            for k in 0..d {
                let bk = GVec::basis_elt(d, k);
                let s = g
                    .bracket(&bi, &g.bracket(&bj, &bk))
                    .add(&g.bracket(&bj, &g.bracket(&bk, &bi)))
                    .add(&g.bracket(&bk, &g.bracket(&bi, &bj)));
                assert!(s.is_zero(), "Jacobi fails in {}", g.name);
            }
        }
    }
    // k ⊥ s and definiteness of B: negative on k, positive on s.
    let kidx = g.k_indices();
    let sidx = g.s_indices();
    for &i in &kidx {
        for &j in &sidx {
            assert!(g.killing[i][j].is_zero(), "k not B-orthogonal to s");
        }
    }
    check_definite(&submatrix(&g.killing, &kidx), -1, &g.name);
    check_definite(&submatrix(&g.killing, &sidx), 1, &g.name);
}

fn submatrix(m: &[Vec<Rat>], idx: &[usize]) -> Vec<Vec<Rat>> {
    idx.iter()
        .map(|&i| idx.iter().map(|&j| m[i][j].clone()).collect())
        .collect()
}

/// Sylvester criterion with exact determinants; sign=+1 for positive definite,
/// -1 for negative definite.
fn check_definite(m: &[Vec<Rat>], sign: i32, name: &str) {
    let n = m.len();
    for k in 1..=n {
        let lead: Vec<Vec<Rat>> = (0..k).map(|i| m[i][..k].to_vec()).collect();
        let d = det_rational(&lead);
        let want_positive = sign > 0 || k % 2 == 0;
        assert!(
            if want_positive {
                d.is_positive()
            } else {
                d.is_negative()
            },
            "definiteness check failed for {}",
            name
        );
    }
}

/// Convenience: parse-and-build.
pub fn build_group_named(name: &str) -> Result<GroupData, LieError> {
    let fam = Family::parse(name).ok_or_else(|| LieError::UnsupportedGroup(name.to_string()))?;
    build_group(fam)
}

/// Numeric value of an exact rational (for the float layer).
pub fn ratf(r: &Rat) -> f64 {
    rat_to_f64(r)
}
