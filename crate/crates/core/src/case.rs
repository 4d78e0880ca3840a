//! Case identifiers and the parameter bundle shared by kernel, closed forms
//! and the harness.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};

macro_rules! case_ids {
    ($($variant:ident => $name:literal),+ $(,)?) => {
        /// One identity of the catalog.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum CaseId {
            $($variant),+
        }

        impl CaseId {
            /// Every case, in catalog order.
            pub const ALL: &'static [CaseId] = &[$(CaseId::$variant),+];

            pub fn name(self) -> &'static str {
                match self {
                    $(CaseId::$variant => $name),+
                }
            }
        }

        impl FromStr for CaseId {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s.to_ascii_uppercase().as_str() {
                    $($name => Ok(CaseId::$variant),)+
                    other => Err(Error::domain(format!("unknown case id '{other}'"))),
                }
            }
        }
    };
}

case_ids! {
    GmoM => "GMO_M",
    GenBeta => "GEN_BETA",
    HurwitzRep => "HURWITZ_REP",
    AlphaM1 => "ALPHA_M1",
    RiemannRep => "RIEMANN_REP",
    IntLogcosRatio => "INT_LOGCOS_RATIO",
    IntLogZero => "INT_LOG_ZERO",
    IntZetaM1 => "INT_ZETA_M1",
    FLog => "F_LOG",
    GLogCos2x => "G_LOG_COS2X",
    GammaRatioR => "GAMMA_RATIO_R",
    LogabsGammaC => "LOGABS_GAMMA_C",
    Rem1 => "REM1",
    Rem2 => "REM2",
    NFamily => "N_FAMILY",
    LaplaceRel => "LAPLACE_REL",
    Hurwitzdef => "HURWITZDEF",
    JBeta => "J_BETA",
    Final1Chain => "FINAL1_CHAIN",
    Lobachevsky => "LOBACHEVSKY",
    FootnoteEquiv => "FOOTNOTE_EQUIV",
    S3_1 => "S3_1",
    S3_2 => "S3_2",
    S3_3 => "S3_3",
    S3_4 => "S3_4",
    S3_5 => "S3_5",
    S3_6 => "S3_6",
    S3_7 => "S3_7",
    S3_8 => "S3_8",
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parameter slots an identity may read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slot {
    A,
    Alpha,
    Beta,
    R,
    C,
    N,
}

impl Slot {
    pub const ALL: [Slot; 6] = [Slot::A, Slot::Alpha, Slot::Beta, Slot::R, Slot::C, Slot::N];

    pub fn name(self) -> &'static str {
        match self {
            Slot::A => "a",
            Slot::Alpha => "alpha",
            Slot::Beta => "beta",
            Slot::R => "r",
            Slot::C => "c",
            Slot::N => "n",
        }
    }
}

impl FromStr for Slot {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Slot::ALL
            .into_iter()
            .find(|slot| slot.name() == s)
            .ok_or_else(|| Error::domain(format!("unknown parameter '{s}'")))
    }
}

/// Parameter bundle (a, α, β, r, c, n). Slots a case does not use stay `None`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CaseParams {
    pub a: Option<f64>,
    pub alpha: Option<Complex64>,
    pub beta: Option<Complex64>,
    pub r: Option<f64>,
    pub c: Option<f64>,
    pub n: Option<u32>,
    /// Admit complex β for GEN_BETA (outside the verified domain).
    pub experimental: bool,
}

impl CaseParams {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn a(a: f64) -> Self {
        Self { a: Some(a), ..Self::default() }
    }

    pub fn beta(beta: f64) -> Self {
        Self { beta: Some(Complex64::new(beta, 0.0)), ..Self::default() }
    }

    pub fn alpha(alpha: f64) -> Self {
        Self { alpha: Some(Complex64::new(alpha, 0.0)), ..Self::default() }
    }

    pub fn alpha_beta(alpha: f64, beta: f64) -> Self {
        Self {
            alpha: Some(Complex64::new(alpha, 0.0)),
            beta: Some(Complex64::new(beta, 0.0)),
            ..Self::default()
        }
    }

    pub fn a_beta(a: f64, beta: f64) -> Self {
        Self { a: Some(a), beta: Some(Complex64::new(beta, 0.0)), ..Self::default() }
    }

    pub fn r(r: f64) -> Self {
        Self { r: Some(r), ..Self::default() }
    }

    pub fn c(c: f64) -> Self {
        Self { c: Some(c), ..Self::default() }
    }

    pub fn r_n(r: f64, n: u32) -> Self {
        Self { r: Some(r), n: Some(n), ..Self::default() }
    }

    pub fn is_set(&self, slot: Slot) -> bool {
        match slot {
            Slot::A => self.a.is_some(),
            Slot::Alpha => self.alpha.is_some(),
            Slot::Beta => self.beta.is_some(),
            Slot::R => self.r.is_some(),
            Slot::C => self.c.is_some(),
            Slot::N => self.n.is_some(),
        }
    }

    /// Sets `slot` from a real value (n is rounded to the nearest integer).
    pub fn set_real(&mut self, slot: Slot, value: f64) -> Result<()> {
        match slot {
            Slot::A => self.a = Some(value),
            Slot::Alpha => self.alpha = Some(Complex64::new(value, 0.0)),
            Slot::Beta => self.beta = Some(Complex64::new(value, 0.0)),
            Slot::R => self.r = Some(value),
            Slot::C => self.c = Some(value),
            Slot::N => {
                let n = value.round();
                if !(n >= 0.0 && n <= u32::MAX as f64) {
                    return Err(Error::domain(format!("n must be a non-negative integer, got {value}")));
                }
                self.n = Some(n as u32);
            }
        }
        Ok(())
    }

    /// Sets `slot` from text: a real number, or a complex literal such as
    /// `0.5+0.25i` for α and β.
    pub fn set_from_str(&mut self, slot: Slot, text: &str) -> Result<()> {
        let text = text.trim();
        if let Ok(v) = text.parse::<f64>() {
            return self.set_real(slot, v);
        }
        match slot {
            Slot::Alpha | Slot::Beta => {
                let z: Complex64 = text
                    .parse()
                    .map_err(|_| Error::domain(format!("cannot parse '{text}' for {}", slot.name())))?;
                if slot == Slot::Alpha {
                    self.alpha = Some(z);
                } else {
                    self.beta = Some(z);
                }
                Ok(())
            }
            Slot::N => {
                let n: u32 = text
                    .parse()
                    .map_err(|_| Error::domain(format!("cannot parse '{text}' for n")))?;
                self.n = Some(n);
                Ok(())
            }
            _ => Err(Error::domain(format!("cannot parse '{text}' for {}", slot.name()))),
        }
    }

    /// All parameters are real (no complex α or β).
    pub fn all_real(&self) -> bool {
        self.alpha.is_none_or(|z| z.im == 0.0) && self.beta.is_none_or(|z| z.im == 0.0)
    }

    pub(crate) fn require_a(&self) -> Result<f64> {
        self.a.ok_or_else(|| Error::domain("parameter a is required"))
    }

    pub(crate) fn require_alpha(&self) -> Result<Complex64> {
        self.alpha.ok_or_else(|| Error::domain("parameter alpha is required"))
    }

    pub(crate) fn require_beta(&self) -> Result<Complex64> {
        self.beta.ok_or_else(|| Error::domain("parameter beta is required"))
    }

    pub(crate) fn require_r(&self) -> Result<f64> {
        self.r.ok_or_else(|| Error::domain("parameter r is required"))
    }

    pub(crate) fn require_c(&self) -> Result<f64> {
        self.c.ok_or_else(|| Error::domain("parameter c is required"))
    }

    pub(crate) fn require_n(&self) -> Result<u32> {
        self.n.ok_or_else(|| Error::domain("parameter n is required"))
    }

    pub(crate) fn require_real_beta(&self) -> Result<f64> {
        let b = self.require_beta()?;
        if b.im != 0.0 {
            return Err(Error::domain("beta must be real for this case"));
        }
        Ok(b.re)
    }
}

fn fmt_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else {
        format!("{}{:+}i", z.re, z.im)
    }
}

impl fmt::Display for CaseParams {
    /// `key=value` pairs joined by `;`, shortest round-trip formatting.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(a) = self.a {
            parts.push(format!("a={a}"));
        }
        if let Some(alpha) = self.alpha {
            parts.push(format!("alpha={}", fmt_complex(alpha)));
        }
        if let Some(beta) = self.beta {
            parts.push(format!("beta={}", fmt_complex(beta)));
        }
        if let Some(r) = self.r {
            parts.push(format!("r={r}"));
        }
        if let Some(c) = self.c {
            parts.push(format!("c={c}"));
        }
        if let Some(n) = self.n {
            parts.push(format!("n={n}"));
        }
        if self.experimental {
            parts.push("experimental".into());
        }
        f.write_str(&parts.join(";"))
    }
}
