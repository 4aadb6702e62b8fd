//! Induction data for standard representations and the derived weights that
//! drive the geometric pipeline.
//!
//! A parameter set fixes a θ-stable Cartan H = T_M A, a discrete-series (or
//! limit) parameter λ on t_M with a positive system R^+_M, a character of
//! the finite part of the Cartan subgroup, a continuous parameter ν on a
//! (carried, but the multiplicities do not depend on it), and a regularizing
//! element ζ of a. Validation checks dominance, integrality of λ - ρ^M,
//! character compatibility, and positivity of ζ, then derives ρ^G, ρ^M,
//! ρ^{G,M}, ξ and the positive system R^+_G.

use crate::exact::{rat_to_f64, rint, Rat};
use crate::lie::{
    half_sum, CartanData, Family, GVec, GroupData, RootType, Weight, WeightSpace,
};
use num::{BigInt, Signed, Zero};
use std::sync::Arc;
use thiserror::Error;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SeriesKind {
    Discrete,
    Limit,
    Principal,
}

impl SeriesKind {
    pub fn name(&self) -> &'static str {
        match self {
            SeriesKind::Discrete => "discrete",
            SeriesKind::Limit => "limit",
            SeriesKind::Principal => "principal",
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq)]
pub enum ParamsError {
    #[error("(α, λ) < 0 for a root α in R^+_M")]
    DominanceViolation,
    #[error("λ - ρ^M is not integral for T_M")]
    IntegralityViolation,
    #[error("character of Z'_M incompatible or unknown: {0}")]
    ChiIncompatible(String),
    #[error("ζ is not in the positive restricted chamber or ξ+ζ is singular")]
    ZetaNotRegular,
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
}

#[derive(Clone, Debug)]
pub struct StandardRepParams {
    pub group: Arc<GroupData>,
    pub cartan_idx: usize,
    /// λ on the Cartan dual; split-part coordinates are zero.
    pub lambda: Weight,
    /// Indices into the Cartan's root list: the positive system of m.
    pub rm_plus: Vec<usize>,
    /// Label of the chosen character of Z'_M.
    pub chi_label: String,
    pub nu_re: Vec<Rat>,
    pub nu_im: Vec<Rat>,
    /// ζ in a-basis coordinates.
    pub zeta: Vec<Rat>,
    /// Positive restricted roots: distinct nonzero a-restrictions of roots.
    pub sigma_plus: Vec<Vec<Rat>>,
    pub series: SeriesKind,
}

#[derive(Clone, Debug)]
pub struct DerivedWeights {
    pub rho_g: Weight,
    pub rho_m: Weight,
    pub rho_k: Weight,
    pub rho_gm: Weight,
    /// iξ = λ + ρ^{G,M}; the stored coordinates are the real values of ξ on t_M.
    pub xi: Weight,
    pub xi_regular: bool,
    pub rg_plus: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct CheckedParams {
    pub p: StandardRepParams,
    pub derived: DerivedWeights,
    /// Positive compact roots compatible with R^+_M, as K-torus weights.
    pub k_pos_roots: Vec<Weight>,
    /// ξ̃ for the singular case: λ-direction regularization of ξ.
    pub xi_tilde: Option<Weight>,
    /// dim(M/K_M)/2 (the multiplicity formula's sign exponent).
    pub sign_exponent: usize,
}

impl CheckedParams {
    pub fn group(&self) -> &GroupData {
        &self.p.group
    }

    pub fn cartan(&self) -> &CartanData {
        &self.p.group.cartans[self.p.cartan_idx]
    }

    pub fn sign_factor(&self) -> i64 {
        if self.sign_exponent % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn rho_k(&self) -> Weight {
        half_sum(
            self.group().dim_t(),
            WeightSpace::KTorusDual,
            &self.k_pos_roots,
        )
    }

    /// The element ξ + ζ of h (dual of ξ under minus-Killing on t_M, plus ζ).
    pub fn base_element(&self) -> GVec {
        self.element_for(&self.derived.xi)
    }

    /// The regularized element ξ̃ + ζ used by the deformed pipeline.
    pub fn regularized_element(&self) -> GVec {
        match &self.xi_tilde {
            Some(xt) => self.element_for(xt),
            None => self.base_element(),
        }
    }

    fn element_for(&self, xi: &Weight) -> GVec {
        let cartan = self.cartan();
        let g = self.group();
        let mut w = xi.clone();
        // ensure zero split part of the functional
        for k in cartan.t_dim()..cartan.rank() {
            w.coords[k] = Rat::zero();
        }
        let mut v = cartan.weight_dual_vec(g, &w);
        for (k, z) in self.p.zeta.iter().enumerate() {
            v = v.add(&cartan.a_basis[k].scale(&crate::exact::creal(z.clone())));
        }
        v
    }

    /// Target element of t for the K-type with highest weight η:
    /// dual of (η + ρ^K)/i in K-torus coordinates.
    pub fn target_weight(&self, eta: &Weight) -> Weight {
        eta.add(&self.rho_k())
    }

    pub fn xi_is_singular(&self) -> bool {
        !self.derived.xi_regular
    }

    /// Weights of T_M on g/h (restrictions of R^+_G), with multiplicity.
    pub fn gh_weights(&self) -> Vec<Weight> {
        crate::lie::restricted_weights(self.group(), self.cartan(), &self.derived.rg_plus)
    }
}

/// Build R^+_G from R^+_M and Σ^+: a root is positive iff it is an M-root in
/// R^+_M, or restricts to a positive restricted root on a.
pub fn build_rg(cartan: &CartanData, rm_plus: &[usize], sigma_plus: &[Vec<Rat>]) -> Vec<usize> {
    let t_dim = cartan.t_dim();
    let mut out = Vec::new();
    for (i, r) in cartan.roots.iter().enumerate() {
        let a_part: Vec<Rat> = r.coords[t_dim..].to_vec();
        let vanishes = a_part.iter().all(|c| c.is_zero());
        if vanishes {
            if rm_plus.contains(&i) {
                out.push(i);
            }
        } else if sigma_plus.contains(&a_part) {
            out.push(i);
        }
    }
    assert_eq!(out.len() * 2, cartan.roots.len(), "R^+_G is not half the roots");
    out
}

/// Derive ρ's, ξ, regularity and R^+_G for validated parameter data.
pub fn derive_weights(
    group: &GroupData,
    cartan: &CartanData,
    lambda: &Weight,
    rm_plus: &[usize],
    sigma_plus: &[Vec<Rat>],
    k_pos_roots: &[Weight],
) -> DerivedWeights {
    let rank = cartan.rank();
    let t_dim = cartan.t_dim();
    let rg_plus = build_rg(cartan, rm_plus, sigma_plus);
    let rho_g = half_sum(
        rank,
        WeightSpace::CartanDual,
        &rg_plus
            .iter()
            .map(|&i| cartan.roots[i].as_weight())
            .collect::<Vec<_>>(),
    );
    let rho_m = half_sum(
        rank,
        WeightSpace::CartanDual,
        &rm_plus
            .iter()
            .map(|&i| cartan.roots[i].as_weight())
            .collect::<Vec<_>>(),
    );
    // ρ^G restricted to t_M, minus ρ^M (whose split part is zero).
    let mut rho_gm = rho_g.clone();
    for k in t_dim..rank {
        rho_gm.coords[k] = Rat::zero();
    }
    let rho_gm = rho_gm.sub(&rho_m);
    let xi = lambda.add(&rho_gm);
    let xi_regular = rm_plus.iter().all(|&i| {
        cartan
            .pairing
            .pair(&cartan.roots[i].as_weight(), &xi)
            .is_positive()
    });
    let rho_k = half_sum(group.dim_t(), WeightSpace::KTorusDual, k_pos_roots);
    DerivedWeights {
        rho_g,
        rho_m,
        rho_k,
        rho_gm,
        xi,
        xi_regular,
        rg_plus,
    }
}

/// The determinant weight of the underlying Spin^c structure: 2(ρ^{G,M} + λ),
/// together with the finite-part character χ_M^2 ⊗ χ_{n^- ⊕ n^+}.
pub fn determinant_weight(checked: &CheckedParams) -> (Weight, Vec<crate::cyclo::RootOfUnity>) {
    let w = checked
        .derived
        .rho_gm
        .add(&checked.p.lambda)
        .scale(&rint(2));
    let cartan = checked.cartan();
    let chi = cartan
        .finite
        .char_by_label(&checked.p.chi_label)
        .expect("validated character");
    // χ_M^2 times the determinant of Ad(z) on n^- ⊕ n^+. Every nontrivial
    // finite-part element of the supported families is central (±1), so the
    // adjoint factor is trivial; asserted here.
    let values = cartan
        .finite
        .elements
        .iter()
        .zip(&chi.values)
        .map(|(elt, v)| {
            let ad_trivial = elt.mat == crate::exact::CMat::identity(checked.group().ambient)
                || elt.mat == crate::exact::CMat::identity(checked.group().ambient).neg();
            assert!(ad_trivial, "nontrivial adjoint action of Z'_M");
            v.mul(v)
        })
        .collect();
    (w, values)
}

fn default_sigma_plus(cartan: &CartanData) -> Vec<Vec<Rat>> {
    let t_dim = cartan.t_dim();
    let mut out: Vec<Vec<Rat>> = Vec::new();
    for r in &cartan.roots {
        let a: Vec<Rat> = r.coords[t_dim..].to_vec();
        if a.iter().all(|c| c.is_zero()) {
            continue;
        }
        if !lex_positive(&a) {
            continue;
        }
        if !out.contains(&a) {
            out.push(a);
        }
    }
    out
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

/// Default R^+_M: per opposite pair of M-roots, the one pairing positively
/// with λ; ties broken towards `chamber` (a sign vector read lexicographically).
fn default_rm_plus(cartan: &CartanData, lambda: &Weight, chamber_plus: bool) -> Vec<usize> {
    let mut out = Vec::new();
    for (i, r) in cartan.roots.iter().enumerate() {
        if !matches!(
            r.kind,
            RootType::ImaginaryCompact | RootType::ImaginaryNoncompact
        ) {
            continue;
        }
        let pr = cartan.pairing.pair(&r.as_weight(), lambda);
        let take = if pr.is_positive() {
            true
        } else if pr.is_negative() {
            false
        } else {
            lex_positive(&r.coords) == chamber_plus
        };
        if take {
            out.push(i);
        }
    }
    out
}

/// Assemble raw parameters for a series. `lambda_t` are the λ-coordinates on
/// the compact part of the Cartan chosen by the series.
#[allow(clippy::too_many_arguments)]
pub fn standard_params(
    group: Arc<GroupData>,
    series: SeriesKind,
    lambda_t: Vec<Rat>,
    chamber: Option<&str>,
    chi: Option<&str>,
    nu_re: Vec<Rat>,
    nu_im: Vec<Rat>,
    zeta_override: Option<Vec<Rat>>,
) -> Result<StandardRepParams, ParamsError> {
    if !group.family.pipeline_supported() {
        return Err(ParamsError::Unsupported(format!(
            "{} is structure-only",
            group.name
        )));
    }
    let want_label = match series {
        SeriesKind::Discrete | SeriesKind::Limit => "compact",
        SeriesKind::Principal => "split",
    };
    let cartan_idx = group
        .cartans
        .iter()
        .position(|c| c.label == want_label)
        .ok_or_else(|| {
            ParamsError::Unsupported(format!(
                "{} has no {} Cartan class for the {} series",
                group.name,
                want_label,
                series.name()
            ))
        })?;
    let cartan = &group.cartans[cartan_idx];
    if lambda_t.len() != cartan.t_dim() {
        return Err(ParamsError::Unsupported(format!(
            "λ needs {} coordinates on this Cartan",
            cartan.t_dim()
        )));
    }
    let mut coords = lambda_t;
    coords.extend(vec![Rat::zero(); cartan.noncompact_dim()]);
    let lambda = Weight::new(coords, WeightSpace::CartanDual);
    let chamber_plus = match chamber {
        Some("-") | Some("minus") => false,
        _ => true,
    };
    let rm_plus = default_rm_plus(cartan, &lambda, chamber_plus);
    let sigma_plus = default_sigma_plus(cartan);
    let chi_label = match chi {
        Some(s) => s.to_string(),
        None => cartan.finite.chars[0].label.clone(),
    };
    let mut params = StandardRepParams {
        group: group.clone(),
        cartan_idx,
        lambda,
        rm_plus,
        chi_label,
        nu_re,
        nu_im,
        zeta: zeta_override.unwrap_or_default(),
        sigma_plus,
        series,
    };
    if params.zeta.is_empty() && cartan.noncompact_dim() > 0 {
        params.zeta = default_zeta(&params)?;
    }
    Ok(params)
}

/// Smallest integral ζ (by Killing norm, ties lexicographic) in the positive
/// restricted chamber making ξ+ζ (or ξ̃+ζ) regular.
fn default_zeta(params: &StandardRepParams) -> Result<Vec<Rat>, ParamsError> {
    let cartan = &params.group.cartans[params.cartan_idx];
    let s = cartan.noncompact_dim();
    let mut best: Option<(Rat, Vec<i64>)> = None;
    for radius in 1..=4i64 {
        let mut idx = vec![-radius; s];
        loop {
            let cand: Vec<i64> = idx.clone();
            if cand.iter().any(|&c| c.abs() == radius) {
                let zr: Vec<Rat> = cand.iter().map(|&c| rint(c)).collect();
                if zeta_admissible(params, &zr) {
                    let norm = zeta_norm(params, &zr);
                    let better = match &best {
                        None => true,
                        Some((bn, bv)) => {
                            norm < *bn || (norm == *bn && cand < *bv)
                        }
                    };
                    if better {
                        best = Some((norm, cand));
                    }
                }
            }
            let mut pos = 0;
            loop {
                if pos == s {
                    break;
                }
                idx[pos] += 1;
                if idx[pos] <= radius {
                    break;
                }
                idx[pos] = -radius;
                pos += 1;
            }
            if pos == s {
                break;
            }
        }
        if best.is_some() {
            break;
        }
    }
    best.map(|(_, v)| v.into_iter().map(rint).collect())
        .ok_or(ParamsError::ZetaNotRegular)
}

fn zeta_norm(params: &StandardRepParams, zeta: &[Rat]) -> Rat {
    let cartan = &params.group.cartans[params.cartan_idx];
    let g = &params.group;
    let mut v = GVec::zero(g.dim());
    for (k, z) in zeta.iter().enumerate() {
        v = v.add(&cartan.a_basis[k].scale(&crate::exact::creal(z.clone())));
    }
    let b = g.killing_form(&v, &v);
    assert!(b.im.is_zero());
    b.re
}

fn zeta_admissible(params: &StandardRepParams, zeta: &[Rat]) -> bool {
    let cartan = &params.group.cartans[params.cartan_idx];
    let t_dim = cartan.t_dim();
    // positive chamber
    for beta in &params.sigma_plus {
        let mut dot = Rat::zero();
        for (k, z) in zeta.iter().enumerate() {
            dot += beta[k].clone() * z.clone();
        }
        if !dot.is_positive() {
            return false;
        }
    }
    // regularity of (regularized ξ) + ζ against every root
    let xi_t = regular_xi_t(params);
    for r in &cartan.roots {
        let mut tval = Rat::zero();
        for j in 0..t_dim {
            tval += r.coords[j].clone() * xi_t[j].clone();
        }
        let mut aval = Rat::zero();
        for k in 0..zeta.len() {
            aval += r.coords[t_dim + k].clone() * zeta[k].clone();
        }
        if tval.is_zero() && aval.is_zero() {
            return false;
        }
    }
    true
}

/// t_M-coordinates of the dual element of ξ (or ξ̃ in the singular case),
/// used for exact regularity tests.
fn regular_xi_t(params: &StandardRepParams) -> Vec<Rat> {
    let cartan = &params.group.cartans[params.cartan_idx];
    let k_pos = compatible_k_pos(params);
    let derived = derive_weights(
        &params.group,
        cartan,
        &params.lambda,
        &params.rm_plus,
        &params.sigma_plus,
        &k_pos,
    );
    let xi = if derived.xi_regular {
        derived.xi.clone()
    } else {
        regularize_xi(cartan, &params.rm_plus, &derived)
    };
    let coords = cartan.weight_dual_coords(&xi);
    coords[..cartan.t_dim()].to_vec()
}

/// ξ̃ = ξ + c ρ^M with the smallest positive integer c making it R^+_M-regular.
pub fn regularize_xi(cartan: &CartanData, rm_plus: &[usize], derived: &DerivedWeights) -> Weight {
    for c in 1..=8i64 {
        let cand = derived.xi.add(&derived.rho_m.scale(&rint(c)));
        let ok = rm_plus.iter().all(|&i| {
            cartan
                .pairing
                .pair(&cartan.roots[i].as_weight(), &cand)
                .is_positive()
        });
        if ok {
            return cand;
        }
    }
    panic!("could not regularize ξ");
}

fn compatible_k_pos(params: &StandardRepParams) -> Vec<Weight> {
    let group = &params.group;
    let cartan = &group.cartans[params.cartan_idx];
    if cartan.t_dim() == group.dim_t() {
        let compact: Vec<Weight> = params
            .rm_plus
            .iter()
            .filter(|&&i| cartan.roots[i].kind == RootType::ImaginaryCompact)
            .map(|&i| {
                Weight::new(
                    cartan.roots[i].coords[..cartan.t_dim()].to_vec(),
                    WeightSpace::KTorusDual,
                )
            })
            .collect();
        if compact.len() == group.k_pos_roots.len() {
            return compact;
        }
    }
    group.k_pos_roots.clone()
}

/// Validate all invariants and derive the weight data.
pub fn validate_params(params: StandardRepParams) -> Result<CheckedParams, ParamsError> {
    let group = params.group.clone();
    let cartan = &group.cartans[params.cartan_idx];
    let t_dim = cartan.t_dim();

    // Dominance of λ.
    for &i in &params.rm_plus {
        if cartan
            .pairing
            .pair(&cartan.roots[i].as_weight(), &params.lambda)
            .is_negative()
        {
            return Err(ParamsError::DominanceViolation);
        }
    }

    let k_pos = compatible_k_pos(&params);
    let derived = derive_weights(
        &group,
        cartan,
        &params.lambda,
        &params.rm_plus,
        &params.sigma_plus,
        &k_pos,
    );

    // λ - ρ^M integral for T_M.
    let lam_rho = params.lambda.sub(&derived.rho_m);
    let t_part = Weight::new(lam_rho.coords[..t_dim].to_vec(), WeightSpace::CartanDual);
    if !t_part.is_integral(&cartan.tm_lattice) {
        return Err(ParamsError::IntegralityViolation);
    }

    // χ_M exists and matches e^{λ-ρ^M} on T_M ∩ Z'_M.
    let chi = cartan
        .finite
        .char_by_label(&params.chi_label)
        .ok_or_else(|| ParamsError::ChiIncompatible(params.chi_label.clone()))?;
    for (elt, val) in cartan.finite.elements.iter().zip(&chi.values) {
        let Some(log) = &elt.torus_log else { continue };
        // Is the log inside t_M? Solve log = Σ y_j (t_j in torus coords).
        let cols: Vec<Vec<crate::exact::CRat>> = cartan
            .t_in_ktorus
            .iter()
            .map(|r| r.iter().map(|v| crate::exact::creal(v.clone())).collect())
            .collect();
        let target: Vec<crate::exact::CRat> =
            log.iter().map(|v| crate::exact::creal(v.clone())).collect();
        let Some(y) = crate::exact::solve_in_span(&cols, &target) else {
            continue;
        };
        // e^{λ-ρ^M}(exp(2π Σ y_j t_j)) = e^{2πi Σ y_j coords_j}.
        let mut frac = Rat::zero();
        for (j, c) in y.iter().enumerate() {
            assert!(c.im.is_zero());
            frac += c.re.clone() * t_part.coords[j].clone();
        }
        let expected = crate::cyclo::RootOfUnity::from_fraction(frac);
        if &expected != val {
            return Err(ParamsError::ChiIncompatible(format!(
                "χ_M({}) does not match λ - ρ^M",
                elt.label
            )));
        }
    }

    // ζ admissibility (also covers regularity of ξ(+ξ̃)+ζ).
    if cartan.noncompact_dim() > 0 {
        if params.zeta.len() != cartan.noncompact_dim() {
            return Err(ParamsError::ZetaNotRegular);
        }
        if !zeta_admissible(&params, &params.zeta) {
            return Err(ParamsError::ZetaNotRegular);
        }
    } else if params.series == SeriesKind::Discrete && !derived.xi_regular {
        return Err(ParamsError::DominanceViolation);
    }

    // Deformed pipeline is only available over compact Cartan subgroups.
    if !derived.xi_regular && cartan.noncompact_dim() > 0 {
        return Err(ParamsError::Unsupported(
            "singular ξ over a noncompact Cartan is outside the supported pipeline".into(),
        ));
    }

    let xi_tilde = if derived.xi_regular {
        None
    } else {
        Some(regularize_xi(cartan, &params.rm_plus, &derived))
    };

    let noncompact_m_roots = cartan
        .roots
        .iter()
        .filter(|r| r.kind == RootType::ImaginaryNoncompact)
        .count();
    assert!(noncompact_m_roots % 2 == 0);

    Ok(CheckedParams {
        sign_exponent: noncompact_m_roots / 2,
        p: params,
        derived,
        k_pos_roots: k_pos,
        xi_tilde,
    })
}

/// Enumerate dominant integral K-types with coordinates in [lo, hi],
/// ordered lexicographically.
pub fn ktypes_in_box(group: &GroupData, k_pos: &[Weight], lo: i64, hi: i64) -> Vec<Weight> {
    let dim = group.dim_t();
    let mut out = Vec::new();
    let mut idx = vec![lo; dim];
    if dim == 0 || lo > hi {
        return out;
    }
    loop {
        let w = Weight::from_ints(&idx, WeightSpace::KTorusDual);
        if w.is_integral(&group.k_torus_lattice) && group.k_pairing.is_dominant(&w, k_pos) {
            out.push(w);
        }
        // advance, last coordinate fastest, so output is in lexicographic order
        let mut pos = dim;
        let mut exhausted = false;
        loop {
            if pos == 0 {
                exhausted = true;
                break;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] <= hi {
                break;
            }
            idx[pos] = lo;
        }
        if exhausted {
            break;
        }
    }
    out
}

#[allow(unused)]
fn silence(_: &Family, _: f64, _: BigInt) {
    let _ = rat_to_f64(&Rat::zero());
}
