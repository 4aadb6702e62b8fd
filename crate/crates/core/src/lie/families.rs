//! Hard-coded matrix bases and seed Cartan data for the supported families.
//!
//! Each family ships an ordered basis adapted to the Cartan decomposition
//! (compact part first), the maximally compact θ-stable Cartan subalgebra as
//! basis indices, and the small amount of disconnectedness data (the finite
//! part Z'_M of the relevant Cartan subgroups). Roots are not hard-coded;
//! they are recovered exactly from the structure constants.

use super::{Family, GVec, GroupData};
use crate::cyclo::RootOfUnity;
use crate::exact::{cimag, cint, rat, rint, CMat, Rat};

pub struct FamilySeed {
    pub name: String,
    pub ambient: usize,
    pub basis: Vec<CMat>,
    pub theta_signs: Vec<i8>,
    pub seed_t: Vec<usize>,
    pub seed_a: Vec<usize>,
    /// None: derive from the compact imaginary roots of the seed Cartan.
    pub k_pos_roots: Option<Vec<Vec<Rat>>>,
    /// B(X,Y) = coeff * Re tr(XY) in the ambient realization.
    pub killing_coeff: Rat,
}

impl FamilySeed {
    pub fn seed_t_vecs(&self) -> Vec<GVec> {
        self.seed_t
            .iter()
            .map(|&i| GVec::basis_elt(self.basis.len(), i))
            .collect()
    }

    pub fn seed_a_vecs(&self) -> Vec<GVec> {
        self.seed_a
            .iter()
            .map(|&i| GVec::basis_elt(self.basis.len(), i))
            .collect()
    }
}

fn e(n: usize, i: usize, j: usize) -> CMat {
    let mut m = CMat::zeros(n, n);
    m.set(i, j, cint(1));
    m
}

/// E_kj - E_jk: rotation generator mapping e_j to e_k (0-based indices).
fn rot(n: usize, j: usize, k: usize) -> CMat {
    e(n, k, j).sub(&e(n, j, k))
}

/// E_jk + E_kj: boost generator.
fn boost(n: usize, j: usize, k: usize) -> CMat {
    e(n, j, k).add(&e(n, k, j))
}

pub fn family_seed(family: Family) -> FamilySeed {
    match family {
        Family::Sl2R => sl2r(),
        Family::Sl2C => sl2c(),
        Family::Su { p, q } => su(p as usize, q as usize),
        Family::So0 { p, q } => so(p as usize, q as usize),
    }
}

fn sl2r() -> FamilySeed {
    let n = 2;
    let x0 = rot(n, 0, 1); // [[0,-1],[1,0]]
    let h = e(n, 0, 0).sub(&e(n, 1, 1));
    let s = boost(n, 0, 1);
    FamilySeed {
        name: "SL(2,R)".into(),
        ambient: n,
        basis: vec![x0, h, s],
        theta_signs: vec![1, -1, -1],
        seed_t: vec![0],
        seed_a: vec![],
        k_pos_roots: Some(vec![]),
        killing_coeff: rint(4),
    }
}

fn sl2c() -> FamilySeed {
    // sl(2,C) as a real Lie algebra; basis {e-f, i(e+f), ih | e+f, i(e-f), h}.
    let n = 2;
    let ee = e(n, 0, 1);
    let ff = e(n, 1, 0);
    let hh = e(n, 0, 0).sub(&e(n, 1, 1));
    let i = crate::exact::ci();
    let k1 = ee.sub(&ff);
    let k2 = ee.add(&ff).scale(&i);
    let k3 = hh.scale(&i);
    let s1 = ee.add(&ff);
    let s2 = ee.sub(&ff).scale(&i);
    let s3 = hh;
    FamilySeed {
        name: "SL(2,C)".into(),
        ambient: n,
        basis: vec![k1, k2, k3, s1, s2, s3],
        theta_signs: vec![1, 1, 1, -1, -1, -1],
        seed_t: vec![2],
        seed_a: vec![5],
        k_pos_roots: Some(vec![vec![rint(2)]]),
        killing_coeff: rint(8),
    }
}

fn su(p: usize, q: usize) -> FamilySeed {
    let n = p + q;
    let mut basis = Vec::new();
    let mut signs = Vec::new();
    // Torus: i(E_jj - E_{j+1,j+1}), j = 0..n-2. All compact.
    for j in 0..(n - 1) {
        let d = e(n, j, j).sub(&e(n, j + 1, j + 1)).scale(&crate::exact::ci());
        basis.push(d);
        signs.push(1);
    }
    let seed_t: Vec<usize> = (0..(n - 1)).collect();
    let same_block = |a: usize, b: usize| (a < p) == (b < p);
    // Compact off-diagonal pairs, then split pairs.
    for j in 0..n {
        for k in (j + 1)..n {
            if same_block(j, k) {
                basis.push(e(n, j, k).sub(&e(n, k, j)));
                signs.push(1);
                basis.push(e(n, j, k).add(&e(n, k, j)).scale(&crate::exact::ci()));
                signs.push(1);
            }
        }
    }
    for j in 0..p {
        for k in p..n {
            basis.push(e(n, j, k).add(&e(n, k, j)));
            signs.push(-1);
            basis.push(e(n, j, k).sub(&e(n, k, j)).scale(&crate::exact::ci()));
            signs.push(-1);
        }
    }
    FamilySeed {
        name: format!("SU({},{})", p, q),
        ambient: n,
        basis,
        theta_signs: signs,
        seed_t,
        seed_a: vec![],
        k_pos_roots: None,
        killing_coeff: rint(2 * n as i64),
    }
}

fn so(p: usize, q: usize) -> FamilySeed {
    let n = p + q;
    let mut basis = Vec::new();
    let mut signs = Vec::new();
    let mut rot_index = std::collections::HashMap::new();
    for j in 0..p {
        for k in (j + 1)..p {
            rot_index.insert((j, k), basis.len());
            basis.push(rot(n, j, k));
            signs.push(1);
        }
    }
    for j in p..n {
        for k in (j + 1)..n {
            rot_index.insert((j, k), basis.len());
            basis.push(rot(n, j, k));
            signs.push(1);
        }
    }
    let mut boost_index = std::collections::HashMap::new();
    for j in 0..p {
        for k in p..n {
            boost_index.insert((j, k), basis.len());
            basis.push(boost(n, j, k));
            signs.push(-1);
        }
    }
    let (seed_t, seed_a, k_pos_roots): (Vec<usize>, Vec<usize>, Option<Vec<Vec<Rat>>>) =
        match (p, q) {
            (2, 1) => (vec![rot_index[&(0, 1)]], vec![], Some(vec![])),
            (3, 1) => (
                vec![rot_index[&(0, 1)]],
                vec![boost_index[&(2, 3)]],
                Some(vec![vec![rint(1)]]),
            ),
            (4, 1) => (
                vec![rot_index[&(0, 1)], rot_index[&(2, 3)]],
                vec![],
                None,
            ),
            (2, 2) => (
                vec![rot_index[&(0, 1)], rot_index[&(2, 3)]],
                vec![],
                None,
            ),
            _ => panic!("unsupported SO0({},{})", p, q),
        };
    FamilySeed {
        name: format!("SO0({},{})", p, q),
        ambient: n,
        basis,
        theta_signs: signs,
        seed_t,
        seed_a,
        k_pos_roots,
        killing_coeff: rint(n as i64 - 2),
    }
}

/// An element of the finite part Z'_M of a Cartan subgroup, with its
/// torus logarithm (X/2π in K-torus coordinates) when it lies in T.
#[derive(Clone, Debug)]
pub struct FiniteElt {
    pub label: String,
    pub mat: CMat,
    pub torus_log: Option<Vec<Rat>>,
}

#[derive(Clone, Debug)]
pub struct FiniteChar {
    pub label: String,
    /// Value on each element of the finite part, in element order.
    pub values: Vec<RootOfUnity>,
}

#[derive(Clone, Debug)]
pub struct FinitePart {
    pub elements: Vec<FiniteElt>,
    pub chars: Vec<FiniteChar>,
}

impl FinitePart {
    pub fn trivial(n: usize) -> Self {
        FinitePart {
            elements: vec![FiniteElt {
                label: "e".into(),
                mat: CMat::identity(n),
                torus_log: None,
            }],
            chars: vec![FiniteChar {
                label: "trivial".into(),
                values: vec![RootOfUnity::one()],
            }],
        }
    }

    pub fn char_by_label(&self, label: &str) -> Option<&FiniteChar> {
        self.chars.iter().find(|c| c.label == label)
    }
}

/// Z'_M for the Cartan subgroup with the given split dimension. Only the
/// split Cartans of SL(2,R), SU(1,1) and SO0(2,2) have a nontrivial finite
/// part among the supported families; everywhere else H is connected enough
/// that the character of the compact torus determines everything.
pub fn finite_part(g: &GroupData, nc_dim: usize, t_dim: usize) -> FinitePart {
    let n = g.ambient;
    let plus_minus = |log: Vec<Rat>| {
        let minus = CMat::identity(n).neg();
        FinitePart {
            elements: vec![
                FiniteElt {
                    label: "e".into(),
                    mat: CMat::identity(n),
                    torus_log: Some(vec![Rat::from(num::BigInt::from(0)); log.len()]),
                },
                FiniteElt {
                    label: "-1".into(),
                    mat: minus,
                    torus_log: Some(log),
                },
            ],
            chars: vec![
                FiniteChar {
                    label: "plus".into(),
                    values: vec![RootOfUnity::one(), RootOfUnity::one()],
                },
                FiniteChar {
                    label: "minus".into(),
                    values: vec![RootOfUnity::one(), RootOfUnity::minus_one()],
                },
            ],
        }
    };
    match (g.family, nc_dim, t_dim) {
        (Family::Sl2R, 1, 0) => plus_minus(vec![rat(1, 2)]),
        (Family::Su { p: 1, q: 1 }, 1, 0) => plus_minus(vec![rat(1, 2)]),
        (Family::So0 { p: 2, q: 2 }, 2, 0) => plus_minus(vec![rat(1, 2), rat(1, 2)]),
        _ => FinitePart::trivial(n),
    }
}

/// -I as a K-torus point, used in tests.
pub fn minus_identity(n: usize) -> CMat {
    CMat::identity(n).neg()
}

#[allow(unused)]
fn unused_helpers() {
    let _ = cimag(rint(0));
}
