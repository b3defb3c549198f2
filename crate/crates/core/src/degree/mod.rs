//! Degrees of lifted orbit closures: the asymptotic route through the leading form of the
//! Hilbert function, a finite-difference fit of the computed Hilbert series, and the
//! closed-form display evaluated verbatim.

mod fit;
mod integrals;
mod leading;
mod polynomial;

use std::fmt::Write as _;

use num::{BigInt, BigRational};
use serde_json::{json, Value};

pub use fit::{adaptive_hilbert_fit, degree_hilbert_fit, lift_series, HilbertFit, FIT_START, FIT_STEP};
pub use integrals::{
    dirichlet_integral, dsquared_closed_form, dsquared_integrand, dsquared_lhs_exact, laplace_identity_check,
    monte_carlo_simplex, product_simplex_integral, selberg_closed_form, selberg_closed_form_f64, selberg_integrand,
    selberg_lhs_exact, simplex_integral, MonteCarlo,
};
pub use leading::{
    degree_asymptotic, degree_from_leading_form, degree_paper_literal, leading_degree_form, literal_display_parts,
    LeadingForm, OrbitFamily, WeightFactor, DEFAULT_MONOMIAL_CAP,
};
pub use polynomial::{difference_product, factorial, monomial_power, ExactPolynomial};

use crate::combinatorics::DualPair;
use crate::error::{Error, Result};

pub const DEFAULT_FIT_MAX: usize = 30;

pub fn rational_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((a, b)) => {
            let den: BigInt = b.trim().parse().map_err(|_| bad())?;
            if den == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(a.trim().parse().map_err(|_| bad())?, den))
        }
        None => Ok(BigRational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DegreeReport {
    pub pair: DualPair,
    pub orbit: OrbitFamily,
    pub asymptotic: BigRational,
    pub hilbert_fit: Option<HilbertFit>,
    pub literal: BigRational,
    /// Projective dimension from the leading form.
    pub d: usize,
    pub leading_form: String,
}

impl DegreeReport {
    pub fn asym_fit(&self) -> Option<bool> {
        self.hilbert_fit.as_ref().map(|f| BigRational::from_integer(f.degree.clone()) == self.asymptotic)
    }

    pub fn literal_asym(&self) -> bool {
        self.literal == self.asymptotic
    }

    pub fn d_match(&self) -> Option<bool> {
        self.hilbert_fit.as_ref().map(|f| f.d == self.d)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "pair": self.pair.to_string(),
            "orbit": self.orbit.as_str(),
            "asymptotic": rational_string(&self.asymptotic),
            "hilbert_fit": self.hilbert_fit.as_ref().map(|f| json!({
                "d": f.d,
                "degree": f.degree.to_string(),
                "truncation": f.truncation,
            })),
            "literal": rational_string(&self.literal),
            "d": self.d,
            "leading_form": self.leading_form,
            "agree": {
                "asym_fit": self.asym_fit(),
                "literal_asym": self.literal_asym(),
                "d_match": self.d_match(),
            },
        })
    }

    pub fn csv_header() -> &'static str {
        "pair,orbit,asymptotic,hilbert_fit,literal,d,asym_fit,literal_asym"
    }

    pub fn csv_row(&self) -> String {
        let opt = |b: Option<bool>| b.map(|b| b.to_string()).unwrap_or_default();
        let mut s = String::new();
        let _ = write!(
            s,
            "\"{}\",{},{},{},{},{},{},{}",
            self.pair,
            self.orbit,
            rational_string(&self.asymptotic),
            self.hilbert_fit.as_ref().map(|f| f.degree.to_string()).unwrap_or_default(),
            rational_string(&self.literal),
            self.d,
            opt(self.asym_fit()),
            self.literal_asym(),
        );
        s
    }

    pub fn to_csv(reports: &[DegreeReport]) -> String {
        let mut out = format!("{}\n", Self::csv_header());
        for r in reports {
            out.push_str(&r.csv_row());
            out.push('\n');
        }
        out
    }
}

/// All three routes for one orbit. `fit_max = 0` skips the Hilbert fit.
pub fn degree_report(pair: &DualPair, orbit: OrbitFamily, cap: usize, fit_max: usize) -> Result<DegreeReport> {
    let form = leading_degree_form(pair, orbit, cap)?;
    let asymptotic = degree_from_leading_form(&form);
    let literal = degree_paper_literal(pair, orbit, cap)?;
    let hilbert_fit = if fit_max == 0 { None } else { Some(adaptive_hilbert_fit(pair, orbit, fit_max)?) };
    Ok(DegreeReport {
        pair: *pair,
        orbit,
        asymptotic,
        hilbert_fit,
        literal,
        d: form.d_projective(),
        leading_form: form.full().to_string(),
    })
}
