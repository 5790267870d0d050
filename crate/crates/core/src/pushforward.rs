//! Elimination of exceptional symbols through blow-up pushforwards.
//!
//! For a blow-up along a smooth center `Z` of codimension `c` with exceptional
//! class `e`,
//!
//! ```text
//! pi_*(e^j) = (-1)^{j-1} s_{j-c}(N_Z) [Z]      (j >= 1),      pi_*(1) = 1,
//! ```
//!
//! and the projection formula `pi_*(pi^* a * e^j) = a * pi_*(e^j)` turns any
//! polynomial in ambient classes and `e` into an ambient class.

use std::collections::BTreeMap;

use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ring::GradedClass;

/// One pushforward rule: center class, its codimension, and the ambient-lifted
/// total Segre series of the center's normal bundle.
#[derive(Debug, Clone)]
pub struct BlowupStage {
    symbol: String,
    center_class: GradedClass,
    center_codim: u32,
    segre_series: GradedClass,
}

impl BlowupStage {
    pub fn new(
        symbol: &str,
        center_class: GradedClass,
        center_codim: u32,
        segre_series: GradedClass,
    ) -> Result<Self> {
        center_class.spec().index_of(symbol)?;
        if center_class.spec() != segre_series.spec() {
            return Err(Error::RingMismatch);
        }
        if !center_class.is_homogeneous_of(center_codim) {
            return Err(Error::NotHomogeneous {
                expected: center_codim,
            });
        }
        if !segre_series.constant_term().is_one() {
            return Err(Error::NotAUnit);
        }
        Ok(BlowupStage {
            symbol: symbol.to_string(),
            center_class,
            center_codim,
            segre_series,
        })
    }

    pub fn symbol(&self) -> &str {
        &self.symbol
    }

    pub fn center_class(&self) -> &GradedClass {
        &self.center_class
    }

    pub fn center_codim(&self) -> u32 {
        self.center_codim
    }

    pub fn segre_series(&self) -> &GradedClass {
        &self.segre_series
    }

    /// `pi_*(e^j)`, pure of codimension `j`.
    pub fn push_power(&self, j: u32) -> GradedClass {
        let spec = self.center_class.spec();
        if j == 0 {
            return GradedClass::one(spec);
        }
        let s = self
            .segre_series
            .graded_part(i64::from(j) - i64::from(self.center_codim));
        let pushed = &s * &self.center_class;
        if j % 2 == 1 {
            pushed
        } else {
            -pushed
        }
    }
}

/// Ordered blow-up stages plus groups of symbols whose centers are pairwise
/// disjoint (products of two symbols from one group vanish).
#[derive(Debug, Clone, Default)]
pub struct Tower {
    stages: Vec<BlowupStage>,
    disjoint: Vec<Vec<String>>,
}

impl Tower {
    pub fn new(stages: Vec<BlowupStage>, disjoint: Vec<Vec<String>>) -> Self {
        Tower { stages, disjoint }
    }

    pub fn stages(&self) -> &[BlowupStage] {
        &self.stages
    }

    pub fn disjoint_groups(&self) -> &[Vec<String>] {
        &self.disjoint
    }

    pub fn stage(&self, symbol: &str) -> Option<&BlowupStage> {
        self.stages.iter().find(|s| s.symbol == symbol)
    }

    /// Drops monomials that multiply two symbols from the same disjoint group.
    pub fn annihilate_disjoint(&self, poly: &GradedClass) -> Result<GradedClass> {
        let spec = poly.spec();
        let groups: Vec<Vec<usize>> = self
            .disjoint
            .iter()
            .map(|g| {
                g.iter()
                    .map(|s| spec.index_of(s))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        Ok(poly.retain(|m| {
            groups
                .iter()
                .all(|g| g.iter().filter(|&&i| m.exponent(i) > 0).count() <= 1)
        }))
    }
}

/// Pushes `poly` all the way down the tower, one stage at a time.
///
/// At each stage `poly = sum_j e^j alpha_j`, and `e^j` is replaced by
/// `push_power(j)`. A stage whose pushforward mentions an already eliminated
/// symbol is reported as [`Error::StageConsistency`].
pub fn eliminate(poly: &GradedClass, tower: &Tower) -> Result<GradedClass> {
    let mut current = tower.annihilate_disjoint(poly)?;
    let mut eliminated: Vec<&str> = Vec::new();
    for stage in &tower.stages {
        eliminated.push(&stage.symbol);
        current = eliminate_stage(&current, stage, &eliminated)?;
    }
    Ok(current)
}

fn eliminate_stage(
    poly: &GradedClass,
    stage: &BlowupStage,
    eliminated: &[&str],
) -> Result<GradedClass> {
    let idx = poly.spec().index_of(&stage.symbol)?;
    let parts: Vec<(u32, GradedClass)> = poly.split_by(idx).into_iter().collect();
    let pushed: Vec<GradedClass> = parts
        .into_par_iter()
        .map(|(j, alpha)| {
            if j == 0 {
                return Ok(alpha);
            }
            let image = stage.push_power(j);
            if let Some(sym) = eliminated.iter().find(|s| image.mentions(s)) {
                return Err(Error::StageConsistency {
                    stage: stage.symbol.clone(),
                    symbol: sym.to_string(),
                });
            }
            Ok(&alpha * &image)
        })
        .collect::<Result<_>>()?;
    Ok(sum(poly, pushed))
}

fn sum(like: &GradedClass, parts: Vec<GradedClass>) -> GradedClass {
    let mut acc: BTreeMap<_, num_rational::BigRational> = BTreeMap::new();
    for p in parts {
        for (m, c) in p.into_terms() {
            *acc.entry(m).or_default() += c;
        }
    }
    GradedClass::from_terms(like.spec(), acc)
}

/// Pushforward of an integrand living on the part of an exceptional divisor
/// over a subvariety `W` of the center.
///
/// The integrand is the restriction of the ambient class `g`, and the
/// preimage of `W` is cut out by the ambient class `support`; the result is
/// `graded_part(g, grade) * support * e`.
pub fn supported_push(
    g: &GradedClass,
    support: &GradedClass,
    e: &str,
    grade: i64,
) -> Result<GradedClass> {
    if support.homogeneous_degree().is_none() && !support.is_zero() {
        return Err(Error::Precondition(
            "support class is not pure-dimensional".into(),
        ));
    }
    let e = GradedClass::generator(g.spec(), e)?;
    Ok(&g.graded_part(grade).checked_mul(support)? * &e)
}
