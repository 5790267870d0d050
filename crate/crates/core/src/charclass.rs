//! Total Chern and Segre classes of vector bundles carried as a rank plus a
//! total Chern series.

use std::sync::Arc;

use num_traits::One;

use crate::error::{Error, Result};
use crate::ring::{GradedClass, RingSpec};

/// A vector bundle seen through its rank and total Chern class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleClass {
    rank: u32,
    chern: GradedClass,
}

impl BundleClass {
    /// Fails unless the constant term of `chern` is exactly 1.
    pub fn new(rank: u32, chern: GradedClass) -> Result<Self> {
        if !chern.constant_term().is_one() {
            return Err(Error::NotAUnit);
        }
        Ok(BundleClass { rank, chern })
    }

    pub fn trivial(spec: &Arc<RingSpec>, rank: u32) -> Self {
        BundleClass {
            rank,
            chern: GradedClass::one(spec),
        }
    }

    /// Line bundle with first Chern class `c1`.
    pub fn line(c1: &GradedClass) -> Result<Self> {
        if !c1.is_homogeneous_of(1) {
            return Err(Error::NotHomogeneous { expected: 1 });
        }
        Ok(BundleClass {
            rank: 1,
            chern: &GradedClass::one(c1.spec()) + c1,
        })
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn chern(&self) -> &GradedClass {
        &self.chern
    }

    pub fn chern_part(&self, k: i64) -> GradedClass {
        self.chern.graded_part(k)
    }

    pub fn segre(&self) -> GradedClass {
        segre(self)
    }

    pub fn direct_sum(&self, other: &BundleClass) -> Result<Self> {
        Ok(BundleClass {
            rank: self.rank + other.rank,
            chern: self.chern.checked_mul(&other.chern)?,
        })
    }

    /// Applies a map to the Chern series, keeping the rank.
    pub fn map_chern(&self, f: impl FnOnce(&GradedClass) -> Result<GradedClass>) -> Result<Self> {
        BundleClass::new(self.rank, f(&self.chern)?)
    }
}

/// Total Segre class: the formal inverse of the total Chern class.
pub fn segre(b: &BundleClass) -> GradedClass {
    b.chern
        .invert_unit()
        .expect("Chern series has constant term 1")
}

/// `total / sub` from `0 -> sub -> total -> quotient -> 0`.
pub fn whitney_quotient(total: &BundleClass, sub: &BundleClass) -> Result<BundleClass> {
    if sub.rank > total.rank {
        return Err(Error::RankUnderflow {
            total: total.rank,
            sub: sub.rank,
        });
    }
    let chern = total.chern.checked_mul(&segre(sub))?;
    Ok(BundleClass {
        rank: total.rank - sub.rank,
        chern,
    })
}

/// Chern class of `E (x) L` where `t = c_1(L)`.
///
/// `c_k(E (x) L) = sum_i C(r - i, k - i) c_i(E) t^{k-i}`, summed here as
/// `sum_i c_i(E) (1 + t)^{r - i}`.
pub fn twist(b: &BundleClass, t: &GradedClass) -> Result<BundleClass> {
    if !t.is_homogeneous_of(1) {
        return Err(Error::NotHomogeneous { expected: 1 });
    }
    let spec = b.chern.spec().clone();
    let cap = i64::from(spec.total_cap());
    let one_plus_t = GradedClass::one(&spec).checked_add(t)?;
    let mut chern = GradedClass::zero(&spec);
    for i in 0..=cap {
        let ci = b.chern.graded_part(i);
        if ci.is_zero() {
            continue;
        }
        let i = i as u32;
        if i > b.rank {
            return Err(Error::Precondition(format!(
                "c_{i} is nonzero on a bundle of rank {}",
                b.rank
            )));
        }
        chern = &chern + &(&ci * &one_plus_t.pow(b.rank - i));
    }
    Ok(BundleClass {
        rank: b.rank,
        chern,
    })
}

/// Tangent bundle of `P^m` with hyperplane generator `h`, via the Euler
/// sequence: rank `m`, total Chern class `(1 + h)^{m + 1}`.
pub fn tangent_projective(spec: &Arc<RingSpec>, m: u32, h: &str) -> Result<BundleClass> {
    if m == 0 {
        return Err(Error::Precondition(
            "projective space of dimension 0".into(),
        ));
    }
    let h = GradedClass::generator(spec, h)?;
    let chern = (&GradedClass::one(spec) + &h).pow(m + 1);
    Ok(BundleClass { rank: m, chern })
}
