//! The degree of the (1,1,1) component: expand the pulled-back hyperplane
//! class to the top power, push it down the tower, integrate over `X` and
//! divide by the order of the `S_3` action.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::{Catalog, E1, E2, E3, H1};
use crate::multinomial::expand_power;
use crate::pushforward::eliminate;
use crate::ring::GradedClass;

/// Degrees known in closed form from the literature, `n = 3..=8`.
pub const KNOWN_DEGREES: [(u32, u64); 6] = [
    (3, 80),
    (4, 4035),
    (5, 165984),
    (6, 6091960),
    (7, 208063680),
    (8, 6766823415),
];

/// Largest `n` a table is allowed to reach unless overridden.
pub const DEFAULT_MAX_N: u32 = 12;

/// The map onto the component is generically `|S_3| = 6` to one.
const GENERIC_FIBER: u32 = 6;

pub fn expected_degree(n: u32) -> Option<u64> {
    KNOWN_DEGREES.iter().find(|(m, _)| *m == n).map(|(_, d)| *d)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeResult {
    pub n: u32,
    pub degree: BigInt,
    pub pre_division_total: BigInt,
    pub term_count: u64,
    pub elapsed: Duration,
}

impl DegreeResult {
    /// Whether the row lies inside the range with a published value.
    pub fn is_verified_range(&self) -> bool {
        expected_degree(self.n).is_some()
    }

    /// `Some(true/false)` against the published value, `None` outside it.
    pub fn matches_known(&self) -> Option<bool> {
        expected_degree(self.n).map(|d| self.degree == BigInt::from(d))
    }
}

/// `sum h_i - e1 - e2 - sum e3_i`.
pub fn pullback_class(catalog: &Catalog) -> GradedClass {
    let mut acc = GradedClass::zero(catalog.ring());
    for h in [H1, "h2", "h3", "h4"] {
        acc = &acc + &catalog.gen(h);
    }
    for e in [E1, E2, E3[0], E3[1], E3[2]] {
        acc = &acc - &catalog.gen(e);
    }
    acc
}

/// Coefficient of the point class `h1 h2^n h3^n h4^n`.
pub fn integrate_x(catalog: &Catalog, c: &GradedClass) -> Result<BigRational> {
    for e in [E1, E2, E3[0], E3[1], E3[2]] {
        if c.mentions(e) {
            return Err(Error::ExceptionalSymbol(e.to_string()));
        }
    }
    let n = catalog.n();
    c.coefficient_of(&[(H1, 1), ("h2", n), ("h3", n), ("h4", n)])
}

pub fn degree_l111(n: u32) -> Result<DegreeResult> {
    degree_with(&Catalog::new(n)?)
}

/// Runs the pipeline on a prebuilt catalog (any lift or role convention).
pub fn degree_with(catalog: &Catalog) -> Result<DegreeResult> {
    let start = Instant::now();
    let n = catalog.n();
    let spec = catalog.ring().clone();
    let e3: Vec<usize> = E3.iter().map(|s| spec.index_of(s)).collect::<Result<_>>()?;
    let one_e3 = move |exps: &[u8]| e3.iter().filter(|&&i| exps[i] > 0).count() <= 1;

    let (integrand, term_count) = expand_power(&pullback_class(catalog), 3 * n + 1, one_e3)?;
    let pushed = eliminate(&integrand, &catalog.tower()?)?;
    let total = integrate_x(catalog, &pushed)?;

    if !total.is_integer() {
        return Err(Error::Integrality(format!(
            "n = {n}: pre-division total {total} is not an integer"
        )));
    }
    let total = total.to_integer();
    let (degree, rem) = total.div_rem(&BigInt::from(GENERIC_FIBER));
    if !rem.is_zero() {
        return Err(Error::Integrality(format!(
            "n = {n}: {total} is not divisible by {GENERIC_FIBER}"
        )));
    }
    if !degree.is_positive() {
        return Err(Error::Integrality(format!(
            "n = {n}: non-positive degree {degree}"
        )));
    }
    Ok(DegreeResult {
        n,
        degree,
        pre_division_total: total,
        term_count,
        elapsed: start.elapsed(),
    })
}

/// Checks `3 <= from <= to <= max_n`.
pub fn validate_range(from: u32, to: u32, max_n: u32) -> Result<()> {
    if from < 3 || from > to {
        return Err(Error::InvalidRange { from, to });
    }
    if to > max_n {
        return Err(Error::ResourceCap { n: to, cap: max_n });
    }
    Ok(())
}

/// One row per `n` in `from..=to`, in order.
pub fn table(from: u32, to: u32, max_n: u32) -> Result<Vec<DegreeResult>> {
    validate_range(from, to, max_n)?;
    (from..=to).map(degree_l111).collect()
}
