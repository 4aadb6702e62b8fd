//! θ-stable Cartan subalgebras, Cayley transforms, and Cartan enumeration.

use super::roots::{decompose_roots, Root, RootType};
use super::weight::{DualPairing, Weight, WeightSpace};
use super::{GVec, GroupData, LieError};
pub use super::families::{FiniteChar, FiniteElt, FinitePart};
use crate::exact::{creal, integer_kernel, solve_in_span, CRat, Rat};
use num::{BigInt, Signed, Zero};

#[derive(Clone, Debug)]
pub struct CartanData {
    pub label: String,
    /// Basis of the compact part t_h (inside k).
    pub t_basis: Vec<GVec>,
    /// Basis of the split part a_h (inside s).
    pub a_basis: Vec<GVec>,
    pub roots: Vec<Root>,
    /// Inner product on CartanDual weights (from B on i t_h ⊕ a_h).
    pub pairing: DualPairing,
    /// Each t_basis element in K-torus coordinates (exact).
    pub t_in_ktorus: Vec<Vec<Rat>>,
    /// Generators of ker(exp) on t_h, as X/2π in t_basis coordinates.
    pub tm_lattice: Vec<Vec<Rat>>,
    /// Finite part Z'_M of the Cartan subgroup, with available characters.
    pub finite: FinitePart,
}

impl CartanData {
    pub fn t_dim(&self) -> usize {
        self.t_basis.len()
    }

    pub fn noncompact_dim(&self) -> usize {
        self.a_basis.len()
    }

    pub fn rank(&self) -> usize {
        self.t_dim() + self.noncompact_dim()
    }

    /// Coordinates of an element of the Cartan span on (t ++ a).
    pub fn h_coords(&self, v: &GVec) -> Option<Vec<CRat>> {
        let cols: Vec<Vec<CRat>> = self
            .t_basis
            .iter()
            .chain(self.a_basis.iter())
            .map(|x| x.0.clone())
            .collect();
        solve_in_span(&cols, &v.0)
    }

    /// Value of a root on an element of the Cartan span.
    pub fn root_value(&self, root: &Root, v: &GVec) -> CRat {
        let hc = self.h_coords(v).expect("not in Cartan span");
        super::roots::eval_coords(&root.coords, &hc, self.t_dim())
    }

    /// Indices of roots of m (imaginary roots: those vanishing on a).
    pub fn m_root_indices(&self) -> Vec<usize> {
        self.roots
            .iter()
            .enumerate()
            .filter(|(_, r)| {
                matches!(
                    r.kind,
                    RootType::ImaginaryCompact | RootType::ImaginaryNoncompact
                )
            })
            .map(|(i, _)| i)
            .collect()
    }

    /// The element of t_h ⊕ a_h dual to a CartanDual weight under the
    /// identification by minus the Killing form on the compact part and the
    /// Killing form on the split part (the positive definite form on
    /// i t_h ⊕ a_h). Returned in (t ++ a)-coordinates.
    pub fn weight_dual_coords(&self, w: &Weight) -> Vec<Rat> {
        assert_eq!(w.space, WeightSpace::CartanDual);
        let n = w.dim();
        assert_eq!(n, self.rank());
        // Gram of the real form basis is pairing.gram (we only stored the
        // inverse; apply it to the coordinate vector).
        (0..n)
            .map(|i| {
                let mut s = Rat::zero();
                for j in 0..n {
                    s += self.pairing.gram_inv[i][j].clone() * w.coords[j].clone();
                }
                s
            })
            .collect()
    }

    /// Realize a CartanDual weight as the dual element of g: the weight
    /// (λ restricted to the compact part, ν on the split part) corresponds to
    /// Σ c_j t_j + Σ d_k a_k with the coefficients above.
    pub fn weight_dual_vec(&self, g: &GroupData, w: &Weight) -> GVec {
        let c = self.weight_dual_coords(w);
        let mut v = GVec::zero(g.dim());
        for (j, t) in self.t_basis.iter().enumerate() {
            v = v.add(&t.scale(&creal(c[j].clone())));
        }
        for (k, a) in self.a_basis.iter().enumerate() {
            v = v.add(&a.scale(&creal(c[self.t_dim() + k].clone())));
        }
        v
    }
}

/// Construct and fully verify a Cartan subalgebra record.
pub fn build_cartan(g: &GroupData, label: &str, t_basis: &[GVec], a_basis: &[GVec]) -> CartanData {
    // θ-stability and commutativity, exactly.
    for t in t_basis {
        assert_eq!(&g.theta(t), t, "t part not θ-fixed");
        assert!(t.is_real());
    }
    for a in a_basis {
        assert_eq!(g.theta(a), a.scale(&crate::exact::cint(-1)), "a part not θ-negated");
        assert!(a.is_real());
    }
    let all: Vec<&GVec> = t_basis.iter().chain(a_basis.iter()).collect();
    for x in &all {
        for y in &all {
            assert!(g.bracket(x, y).is_zero(), "Cartan not abelian");
        }
    }

    let roots = decompose_roots(g, t_basis, a_basis);
    assert!(roots.len() % 2 == 0);

    // Gram on i t ⊕ a: block diag(-B|t, B|a).
    let r = t_basis.len();
    let s = a_basis.len();
    let mut gram = vec![vec![Rat::zero(); r + s]; r + s];
    for i in 0..r {
        for j in 0..r {
            let b = g.killing_form(&t_basis[i], &t_basis[j]);
            assert!(b.im.is_zero());
            gram[i][j] = -b.re;
        }
    }
    for i in 0..s {
        for j in 0..s {
            let b = g.killing_form(&a_basis[i], &a_basis[j]);
            assert!(b.im.is_zero());
            gram[r + i][r + j] = b.re;
        }
    }
    for i in 0..r {
        for j in 0..s {
            let b = g.killing_form(&t_basis[i], &a_basis[j]);
            assert!(b.is_zero(), "t not B-orthogonal to a");
        }
    }

    // t_h inside the fixed torus of K: coefficients must be real and
    // supported on the torus basis indices.
    let t_in_ktorus: Vec<Vec<Rat>> = t_basis
        .iter()
        .map(|t| {
            let mut coords = vec![Rat::zero(); g.k_torus_idx.len()];
            for (i, c) in t.0.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let pos = g
                    .k_torus_idx
                    .iter()
                    .position(|&k| k == i)
                    .expect("t_h not inside the maximal torus of K");
                assert!(c.im.is_zero());
                coords[pos] = c.re.clone();
            }
            coords
        })
        .collect();

    let tm_lattice = sublattice_gens(&t_in_ktorus, g.k_torus_idx.len());

    let finite = super::families::finite_part(g, s, r);

    CartanData {
        label: label.to_string(),
        t_basis: t_basis.to_vec(),
        a_basis: a_basis.to_vec(),
        roots,
        pairing: DualPairing::from_gram(&gram),
        t_in_ktorus,
        tm_lattice,
        finite,
    }
}

/// Lattice of ker(exp) on t_h: vectors y (in t_basis coordinates) with
/// Σ_j y_j t_j in the unit lattice of the K-torus. Returned generators may be
/// redundant; they are used only for exact integrality tests.
fn sublattice_gens(rows: &[Vec<Rat>], torus_dim: usize) -> Vec<Vec<Rat>> {
    let r = rows.len();
    if r == 0 {
        return vec![];
    }
    // Clear denominators: condition N y ∈ D Z^m with N integer.
    let mut lcm = BigInt::from(1);
    for row in rows {
        for v in row {
            lcm = num::Integer::lcm(&lcm, v.denom());
        }
    }
    // N[k][j] = D * rows[j][k]  (m x r)
    let n_mat: Vec<Vec<BigInt>> = (0..torus_dim)
        .map(|k| {
            (0..r)
                .map(|j| {
                    let v = rows[j][k].clone() * Rat::from(lcm.clone());
                    assert!(v.is_integer());
                    v.to_integer()
                })
                .collect()
        })
        .collect();
    // Integer part: always contains Z^r scaled appropriately. Bound candidate
    // denominators by the gcd of maximal minors via enumeration over a few
    // small denominators (orders are tiny for the supported families).
    let mut gens: Vec<Vec<Rat>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| if i == j { Rat::from(BigInt::from(1)) } else { Rat::zero() })
                .collect()
        })
        .collect();
    // Search fractional generators y in (1/q)Z^r / Z^r for small q.
    for q in 2i64..=12 {
        let mut idx = vec![0i64; r];
        loop {
            let y: Vec<Rat> = idx.iter().map(|&k| crate::exact::rat(k, q)).collect();
            if !y.iter().all(|v| v.is_zero()) {
                let ok = (0..torus_dim).all(|k| {
                    let mut s = Rat::zero();
                    for j in 0..r {
                        s += Rat::from(n_mat[k][j].clone()) * y[j].clone();
                    }
                    (s / Rat::from(lcm.clone())).is_integer()
                });
                if ok && !gens.contains(&y) {
                    gens.push(y);
                }
            }
            // advance
            let mut pos = 0;
            loop {
                if pos == r {
                    break;
                }
                idx[pos] += 1;
                if idx[pos] < q {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == r {
                break;
            }
        }
    }
    gens
}

/// Cayley transform through an imaginary noncompact root: produces the
/// θ-stable Cartan c_α(h) ∩ g with the split dimension increased by one, and
/// installs the transformed root-vector pair for the new real root.
pub fn cayley_transform(
    g: &GroupData,
    cartan: &CartanData,
    root_idx: usize,
) -> Result<CartanData, LieError> {
    let root = &cartan.roots[root_idx];
    if root.kind != RootType::ImaginaryNoncompact {
        return Err(LieError::WrongRootType {
            expected: "imaginary-noncompact".into(),
            got: root.kind.name().into(),
        });
    }
    let e = root.evec.clone();
    let ebar = e.conj();
    let h_alpha = g.bracket(&e, &ebar);
    let p = root.pairing.clone().expect("imaginary root has pairing");
    assert_eq!(p, crate::exact::rint(2), "Cayley requires pairing normalized to 2");

    // Rational action of the Cayley element inside the α-sl2:
    //   c(H) = E + Ē,  c(E) = (E - Ē - H)/2,  c(Ē) = (-E + Ē - H)/2.
    let half = creal(crate::exact::rat(1, 2));
    let i = crate::exact::ci();
    let x_plus = e.sub(&ebar).sub(&h_alpha).scale(&half).scale(&i);
    let x_minus = e.sub(&ebar).add(&h_alpha).scale(&half).scale(&i);
    let a_new = e.add(&ebar);

    // The three bracket identities from the construction, checked exactly.
    assert!(x_plus.add(&x_minus).is_real(), "X+ + X- not real");
    assert_eq!(
        x_plus.sub(&x_minus),
        h_alpha.scale(&crate::exact::ci()).scale(&crate::exact::cint(-1)),
        "X+ - X- != -iH"
    );
    assert_eq!(g.bracket(&x_plus, &x_minus), a_new, "[X+,X-] != c(H)");
    assert!(a_new.is_real());

    // New compact part: kernel of α inside t_h.
    let t_dim = cartan.t_dim();
    let row: Vec<Vec<CRat>> = vec![(0..t_dim)
        .map(|j| creal(root.coords[j].clone()))
        .collect()];
    let ker = crate::exact::kernel_basis(&row, t_dim);
    let new_t: Vec<GVec> = ker
        .iter()
        .map(|k| {
            let mut v = GVec::zero(g.dim());
            for (j, c) in k.iter().enumerate() {
                v = v.add(&cartan.t_basis[j].scale(c));
            }
            // Clear to a real vector (kernel of a real row is real here).
            assert!(v.is_real());
            v
        })
        .collect();
    let mut new_a = cartan.a_basis.clone();
    new_a.push(a_new.clone());

    let mut out = build_cartan(g, "cayley", &new_t, &new_a);
    assert_eq!(out.noncompact_dim(), cartan.noncompact_dim() + 1);

    // Identify the converted real root: zero on t', zero on the old a-part,
    // value 2 on the new a-direction. Install the canonical vectors.
    let new_r = out.t_dim();
    let new_s = out.noncompact_dim();
    for r in out.roots.iter_mut() {
        let on_new_a_only = r.coords[..new_r + new_s - 1].iter().all(|c| c.is_zero());
        if !on_new_a_only {
            continue;
        }
        let v = r.coords[new_r + new_s - 1].clone();
        if v == crate::exact::rint(2) {
            r.evec = x_plus.clone();
            r.minus_vec = Some(x_minus.clone());
            r.pairing = Some(crate::exact::rint(2));
        } else if v == crate::exact::rint(-2) {
            r.evec = x_minus.clone();
            r.minus_vec = Some(x_plus.clone());
            r.pairing = Some(crate::exact::rint(2));
        }
    }
    Ok(out)
}

/// Enumerate the Cartan classes reachable from the maximally compact seed by
/// iterated Cayley transforms, deduplicated by signature.
pub fn enumerate_cartans(g: &mut GroupData) {
    let mut queue = vec![0usize];
    while let Some(idx) = queue.pop() {
        let cartan = g.cartans[idx].clone();
        for (ri, root) in cartan.roots.iter().enumerate() {
            if root.kind != RootType::ImaginaryNoncompact {
                continue;
            }
            if !lex_positive(&root.coords) {
                continue;
            }
            let new_cartan = cayley_transform(g, &cartan, ri).expect("eligible root");
            let sig = signature(&new_cartan);
            if g.cartans.iter().any(|c| signature(c) == sig) {
                continue;
            }
            g.cartans.push(new_cartan);
            queue.push(g.cartans.len() - 1);
        }
    }
    // Name classes by their split dimension.
    let max_nc = g.cartans.iter().map(|c| c.noncompact_dim()).max().unwrap();
    for c in g.cartans.iter_mut() {
        let nc = c.noncompact_dim();
        c.label = if nc == 0 {
            "compact".into()
        } else if nc == max_nc {
            "split".into()
        } else {
            format!("mixed-{}", nc)
        };
    }
    // Seed of an unequal-rank family can be both maximally compact and split.
    if g.cartans.len() == 1 {
        let nc = g.cartans[0].noncompact_dim();
        g.cartans[0].label = if nc == 0 { "compact".into() } else { "split".into() };
    }
}

fn signature(c: &CartanData) -> (usize, [usize; 4]) {
    let mut counts = [0usize; 4];
    for r in &c.roots {
        let k = match r.kind {
            RootType::Real => 0,
            RootType::ImaginaryCompact => 1,
            RootType::ImaginaryNoncompact => 2,
            RootType::Complex => 3,
        };
        counts[k] += 1;
    }
    (c.noncompact_dim(), counts)
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

/// Restrictions to t_M of a positive system, with multiplicity:
/// the weights of the T_M-action on g/h as a complex vector space.
pub fn restricted_weights(
    g: &GroupData,
    cartan: &CartanData,
    rg_plus: &[usize],
) -> Vec<Weight> {
    let t_dim = cartan.t_dim();
    let out: Vec<Weight> = rg_plus
        .iter()
        .map(|&i| {
            Weight::new(
                cartan.roots[i].coords[..t_dim].to_vec(),
                WeightSpace::CartanDual,
            )
        })
        .collect();
    assert_eq!(out.len() * 2, g.dim() - cartan.rank());
    out
}

/// Find a Cartan by label.
pub fn cartan_by_label<'a>(g: &'a GroupData, label: &str) -> Option<(usize, &'a CartanData)> {
    g.cartans
        .iter()
        .enumerate()
        .find(|(_, c)| c.label == label)
}

#[allow(unused)]
fn silence(_: Vec<Vec<BigInt>>) {
    let _: Vec<Vec<BigInt>> = integer_kernel(&[]);
}
