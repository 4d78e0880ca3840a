//! The built-in case catalog: one entry per identity with its quadrature
//! strategy, tolerance tier, default parameters and fixed sweep grid.

use std::sync::OnceLock;

use crate::case::{CaseId, CaseParams, Slot};
use crate::kernel::Domain;
use crate::specfun::LN_2;

/// Quadrature route for the left-hand side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Adaptive,
    DoubleExponential,
    SemiInfinite,
    /// No quadrature: both sides are closed forms.
    ClosedForm,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Adaptive => "adaptive",
            Strategy::DoubleExponential => "double-exponential",
            Strategy::SemiInfinite => "semi-infinite",
            Strategy::ClosedForm => "closed-form",
        }
    }
}

/// Acceptance tolerance by singularity class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Tier {
    Smooth,
    Endpoint,
    Boundary,
}

impl Tier {
    pub fn tol(self) -> f64 {
        match self {
            Tier::Smooth => 1e-10,
            Tier::Endpoint => 1e-7,
            Tier::Boundary => 1e-5,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Tier::Smooth => "SMOOTH",
            Tier::Endpoint => "ENDPOINT",
            Tier::Boundary => "BOUNDARY",
        }
    }
}

/// One catalog row.
#[derive(Debug, Clone)]
pub struct CaseEntry {
    pub id: CaseId,
    /// Parameter slots the identity reads.
    pub slots: &'static [Slot],
    pub interval: Domain,
    pub strategy: Strategy,
    pub tier: Tier,
    pub default_params: CaseParams,
    /// Fixed sweep grid run by `verify_all`.
    pub grid: Vec<CaseParams>,
    pub domain_text: &'static str,
    pub anchor: &'static str,
}

impl CaseEntry {
    /// Tier at `p`: parameters sitting on a case boundary drop to BOUNDARY.
    pub fn tier_at(&self, p: &CaseParams) -> Tier {
        use CaseId::*;
        let on_ln2 = |v: Option<f64>| v.is_some_and(|v| v - LN_2 == 0.0);
        match self.id {
            FLog | GLogCos2x | S3_7 | S3_8 if on_ln2(p.a) => Tier::Boundary,
            LogabsGammaC if on_ln2(p.c) => Tier::Boundary,
            _ => self.tier,
        }
    }
}

fn grid_a(values: &[f64]) -> Vec<CaseParams> {
    values.iter().map(|&a| CaseParams::a(a)).collect()
}

fn grid_beta(values: &[f64]) -> Vec<CaseParams> {
    values.iter().map(|&b| CaseParams::beta(b)).collect()
}

fn grid_alpha_beta(alphas: &[f64], betas: &[f64]) -> Vec<CaseParams> {
    alphas
        .iter()
        .flat_map(|&al| betas.iter().map(move |&b| CaseParams::alpha_beta(al, b)))
        .collect()
}

fn build() -> Vec<CaseEntry> {
    use CaseId::*;
    use Domain::{HalfInterval, Symmetric};
    use Strategy::{ClosedForm, DoubleExponential};
    use Tier::*;

    let a_grid = [-2.0, -0.5, 0.0, 0.3, LN_2, 1.0, 3.0];
    let entry = |id, slots, interval, strategy, tier, default_params, grid, domain_text, anchor| {
        CaseEntry { id, slots, interval, strategy, tier, default_params, grid, domain_text, anchor }
    };
    let none = CaseParams::none;

    vec![
        entry(GmoM, &[Slot::A], HalfInterval, DoubleExponential, Endpoint,
            CaseParams::a(0.0), grid_a(&[0.0]),
            "a = 0 (closed form known only there)",
            "Eq (4): M(0) = (1/2)(1 - gamma + ln 2pi)"),
        entry(GenBeta, &[Slot::Beta], Symmetric, DoubleExponential, Endpoint,
            CaseParams::beta(0.0), grid_beta(&[-0.9, -0.5, 0.0, 0.5, 1.0, 2.0, 5.0]),
            "Re β > −1 (complex β experimental)",
            "Eq (5): (1/2i) int x(1+e^{-2ix})^beta / ln(1+e^{-2ix})"),
        entry(HurwitzRep, &[Slot::Alpha, Slot::Beta], Symmetric, DoubleExponential, Endpoint,
            CaseParams::alpha_beta(-0.5, 0.0),
            grid_alpha_beta(&[-2.5, -1.5, -1.0, -0.5, 0.5, 1.0, 1.5], &[0.0, 0.5, 2.0]),
            "β > −1 real, α complex",
            "Eq (6): I(alpha, beta) = -pi zeta(alpha+1, beta+1) / Gamma(-alpha)"),
        entry(AlphaM1, &[Slot::Beta], Symmetric, DoubleExponential, Endpoint,
            CaseParams::beta(0.0), grid_beta(&[0.0, 0.5, 1.0, 3.0]),
            "β > −1 real",
            "Eq (7): pi(1 + 2 beta)/2"),
        entry(RiemannRep, &[Slot::Alpha], Symmetric, DoubleExponential, Endpoint,
            CaseParams::alpha(0.5),
            [-2.0, -1.0, 0.0, 0.5, 1.0, 2.0].iter().map(|&a| CaseParams::alpha(a)).collect(),
            "α complex",
            "Eq (8): -pi zeta(alpha) / Gamma(1 - alpha)"),
        entry(IntLogcosRatio, &[], HalfInterval, DoubleExponential, Endpoint,
            none(), vec![none()], "none", "Eq (9): pi/4"),
        entry(IntLogZero, &[], HalfInterval, DoubleExponential, Endpoint,
            none(), vec![none()], "none", "Eq (10): 0"),
        entry(IntZetaM1, &[], HalfInterval, DoubleExponential, Endpoint,
            none(), vec![none()], "none", "Eq (11): pi/24"),
        entry(FLog, &[Slot::A], HalfInterval, DoubleExponential, Endpoint,
            CaseParams::a(0.3), grid_a(&a_grid),
            "a real",
            "Eq (12): f(a) = pi ln(a/(e^b - 1)), b = min(a, ln 2)"),
        entry(GLogCos2x, &[Slot::A], HalfInterval, DoubleExponential, Endpoint,
            CaseParams::a(0.3), grid_a(&a_grid),
            "a real",
            "Eq (13): g(a) = (pi/2)(1 - 1/a - e^b + 1/(e^b - 1))"),
        entry(GammaRatioR, &[Slot::R], HalfInterval, DoubleExponential, Endpoint,
            CaseParams::r(0.25),
            [0.05, 0.25, 0.45].iter().map(|&r| CaseParams::r(r)).collect(),
            "0 < r < 1/2",
            "Eq (14): (pi/2) ln prod(1 - r^n)"),
        entry(LogabsGammaC, &[Slot::C], HalfInterval, DoubleExponential, Endpoint,
            CaseParams::c(1.0),
            [LN_2, 0.8, 1.0, 2.0, 5.0].iter().map(|&c| CaseParams::c(c)).collect(),
            "c ≥ ln 2",
            "Eq (15): (pi/2) ln Gamma(c)"),
        entry(Rem1, &[Slot::R, Slot::N], Symmetric, DoubleExponential, Endpoint,
            CaseParams::r_n(0.3, 1),
            [1, 2, 5].iter().map(|&n| CaseParams::r_n(0.3, n)).collect(),
            "0 < r < 1/2, n ≥ 1",
            "label rem1: pi ln(n ln(1/r))"),
        entry(Rem2, &[Slot::R, Slot::N], Symmetric, DoubleExponential, Endpoint,
            CaseParams::r_n(0.3, 1),
            [1, 2, 5].iter().map(|&n| CaseParams::r_n(0.3, n)).collect(),
            "0 < r < 1/2, n ≥ 1",
            "label rem2: pi ln(n ln(1/r)/(1 - r^n))"),
        entry(NFamily, &[Slot::R, Slot::N], Symmetric, DoubleExponential, Endpoint,
            CaseParams::r_n(0.3, 1),
            [1, 2, 5].iter().map(|&n| CaseParams::r_n(0.3, n)).collect(),
            "0 < r < 1/2, n ≥ 1",
            "label n: pi ln(1 - r^n)"),
        entry(LaplaceRel, &[Slot::A], Domain::SemiInfinite, Strategy::SemiInfinite, Endpoint,
            CaseParams::a(1.5), grid_a(&[0.2, 0.3, LN_2, 0.8, 1.5, 3.0]),
            "a > 0",
            "Eqs (2)-(3): L(a) = M(a) - gamma/a - ln(e^a - 1)/(1 - e^{-a}) H(ln 2 - a)"),
        entry(Hurwitzdef, &[Slot::Alpha, Slot::Beta], Domain::SemiInfinite, Strategy::SemiInfinite, Endpoint,
            CaseParams::alpha_beta(2.0, 0.0),
            vec![
                CaseParams::alpha_beta(2.0, 0.0),
                CaseParams::alpha_beta(3.0, 1.0),
                CaseParams::alpha_beta(1.5, 0.5),
            ],
            "α > 1 real, β > −1 real",
            "label hurwitzdef: Gamma(alpha) zeta(alpha, beta+1)"),
        entry(JBeta, &[Slot::Beta], Domain::SemiInfinite, Strategy::SemiInfinite, Endpoint,
            CaseParams::beta(0.5), grid_beta(&[0.0, 0.5, 2.0]),
            "β > −1/2 real",
            "label j: J(beta) = gamma(beta+1/2) + ln Gamma(beta+1) - (1/2)ln 2pi - (beta+1/2)ln(beta+1/2)"),
        entry(Final1Chain, &[Slot::Beta], Symmetric, ClosedForm, Smooth,
            CaseParams::beta(0.5), grid_beta(&[0.0, 0.5, 1.0, 2.0, 5.0]),
            "β > −1/2 real",
            "label final1: -(pi/4) J(beta) + pi/8 - (pi/4)(beta+1/2)ln(beta+1/2)"),
        entry(Lobachevsky, &[], HalfInterval, DoubleExponential, Endpoint,
            none(), vec![none()], "none", "label lobachevsky: int ln(2cos x) = 0"),
        entry(FootnoteEquiv, &[Slot::A], Symmetric, DoubleExponential, Endpoint,
            CaseParams::a(0.0), grid_a(&[0.0]),
            "a real",
            "footnote 1: (1/2i) int x/y over (-pi/2, pi/2) = int x^2/(x^2 + L^2) over (0, pi/2)"),
        entry(S3_1, &[], HalfInterval, DoubleExponential, Boundary,
            none(), vec![none()], "none", "§3 entry 1: (pi/2) ln ln 2"),
        entry(S3_2, &[], HalfInterval, DoubleExponential, Boundary,
            none(), vec![none()], "none", "§3 entry 2: -pi/ln 2"),
        entry(S3_3, &[], HalfInterval, DoubleExponential, Endpoint,
            none(), vec![none()], "none", "§3 entry 3: -pi/4"),
        entry(S3_4, &[], HalfInterval, DoubleExponential, Endpoint,
            none(), vec![none()], "none", "§3 entry 4: (pi/2)(1 - 1/ln 2)"),
        entry(S3_5, &[], HalfInterval, DoubleExponential, Endpoint,
            none(), vec![none()], "none", "§3 entry 5: pi/(4 ln^2 2)"),
        entry(S3_6, &[], HalfInterval, DoubleExponential, Endpoint,
            none(), vec![none()], "none", "§3 entry 6: 13pi/48"),
        entry(S3_7, &[Slot::A, Slot::Beta], Symmetric, DoubleExponential, Endpoint,
            CaseParams::a_beta(0.3, 0.0),
            vec![
                CaseParams::a_beta(0.3, 0.0),
                CaseParams::a_beta(0.3, 1.0),
                CaseParams::a_beta(LN_2, 0.0),
                CaseParams::a_beta(1.5, 0.0),
                CaseParams::a_beta(1.5, 1.0),
            ],
            "a ≠ 0 real, β > −1 real",
            "§3 entry 7: -pi/a + pi e^{(beta+1)a}/(e^a - 1) H(ln 2 - a)"),
        entry(S3_8, &[Slot::A], HalfInterval, DoubleExponential, Endpoint,
            CaseParams::a(0.3), grid_a(&[0.3, LN_2, 1.5]),
            "a ≠ 0 real",
            "§3 entry 8: pi/(4a^2) + (pi e^a/4)(1 - 1/(e^a - 1)^2) H(ln 2 - a)"),
    ]
}

/// The catalog, in case-id order.
pub fn catalog() -> &'static [CaseEntry] {
    static CATALOG: OnceLock<Vec<CaseEntry>> = OnceLock::new();
    CATALOG.get_or_init(build)
}

/// Catalog entry of `id`.
pub fn entry(id: CaseId) -> &'static CaseEntry {
    catalog()
        .iter()
        .find(|e| e.id == id)
        .expect("every case id has a catalog entry")
}
