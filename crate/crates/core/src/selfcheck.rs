//! Consistency checks on the catalog, the pushforward rules and the degree
//! pipeline that do not depend on any published value.

use std::fmt;

use num_bigint::BigInt;

use crate::charclass::{twist, BundleClass};
use crate::degree::{degree_with, pullback_class};
use crate::error::Result;
use crate::geometry::{Catalog, Conventions, Factor, E1, E2, E3};
use crate::multinomial::expand_power;
use crate::pushforward::{eliminate, Tower};
use crate::ring::{GradedClass, RingSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckReport {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {}", self.name)?;
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

/// Every named bundle of the catalog at `n`.
pub fn catalog_bundles(cat: &Catalog) -> Vec<(String, BundleClass)> {
    let mut out = vec![
        ("TX".to_string(), cat.chern_tx().clone()),
        ("T(B0)red".to_string(), cat.chern_t_b0red().clone()),
        ("N_(B0)red X".to_string(), cat.chern_n_b0red_x().clone()),
        ("Q".to_string(), cat.chern_q().clone()),
        ("N_(B0)red B0".to_string(), cat.chern_n_b0red_b0().clone()),
        ("N_(B0')red X'".to_string(), cat.chern_n_b0pred_xp().clone()),
    ];
    for c in cat.components() {
        out.push((format!("N_Z{} X", c.index), c.n_z_x.clone()));
    }
    out
}

/// `c * s = 1` for every catalog bundle, and the Whitney relation
/// `c(Q) c(N_(B0)red B0) = c(N_(B0)red X)`.
pub fn charclass_checks(n: u32) -> Result<Vec<CheckReport>> {
    let cat = Catalog::new(n)?;
    let mut out = Vec::new();
    let bad: Vec<String> = catalog_bundles(&cat)
        .into_iter()
        .filter(|(_, b)| &b.segre() * b.chern() != GradedClass::one(b.chern().spec()))
        .map(|(name, _)| name)
        .collect();
    out.push(CheckReport::new(
        format!("c * s = 1 for every catalog bundle, n = {n}"),
        bad.is_empty(),
        bad.join(", "),
    ));
    let lhs = cat.chern_q().chern() * cat.chern_n_b0red_b0().chern();
    out.push(CheckReport::new(
        format!("c(Q) c(N_(B0)red B0) = c(N_(B0)red X), n = {n}"),
        &lhs == cat.chern_n_b0red_x().chern(),
        "",
    ));
    Ok(out)
}

/// `twist(E, t)` against `prod (1 + a_i + t)` for a split bundle with
/// formal roots `a_1..a_r`, `r = 1..=max_rank`.
pub fn twist_split_oracle(max_rank: u32) -> Result<CheckReport> {
    let mut names: Vec<String> = (1..=max_rank).map(|i| format!("a{i}")).collect();
    names.push("t".into());
    let cap = max_rank + 1;
    let spec = RingSpec::new(&names, &vec![cap + 1; names.len()], cap)?;
    let one = GradedClass::one(&spec);
    let t = GradedClass::generator(&spec, "t")?;
    let mut failed = Vec::new();
    for r in 1..=max_rank {
        let mut chern = one.clone();
        let mut shifted = one.clone();
        for i in 1..=r {
            let a = GradedClass::generator(&spec, &format!("a{i}"))?;
            chern = &chern * &(&one + &a);
            shifted = &shifted * &(&(&one + &a) + &t);
        }
        let e = BundleClass::new(r, chern)?;
        if twist(&e, &t)?.chern() != &shifted {
            failed.push(r.to_string());
        }
    }
    Ok(CheckReport::new(
        format!("twist matches split-bundle roots for ranks 1..={max_rank}"),
        failed.is_empty(),
        if failed.is_empty() {
            String::new()
        } else {
            format!("ranks {}", failed.join(", "))
        },
    ))
}

fn tower_with_e3_order(cat: &Catalog, order: [usize; 3]) -> Result<Tower> {
    let base = cat.tower()?;
    let stages = base.stages();
    let mut reordered: Vec<_> = order.iter().map(|&i| stages[i].clone()).collect();
    reordered.extend(stages[3..].iter().cloned());
    Ok(Tower::new(reordered, base.disjoint_groups().to_vec()))
}

/// Pushforward rules at `n`: vanishing below the codimension of `(B0)_red`,
/// the top value `-[(B0)red]`, purity, disjointness, the projection formula
/// on the last stage, and commuting `e3` stages.
pub fn pushforward_checks(n: u32) -> Result<Vec<CheckReport>> {
    let cat = Catalog::new(n)?;
    let tower = cat.tower()?;
    let e1 = tower.stage(E1).expect("e1 stage");
    let mut out = Vec::new();

    let low = (1..2 * n).all(|j| e1.push_power(j).is_zero());
    let top = e1.push_power(2 * n) == -cat.class_b0red();
    out.push(CheckReport::new(
        format!("push(e1^j) = 0 for 0 < j < 2n, = -[(B0)red] at 2n, n = {n}"),
        low && top,
        "",
    ));

    let cap = cat.ring().total_cap();
    let impure: Vec<String> = tower
        .stages()
        .iter()
        .flat_map(|s| (0..=cap).map(move |j| (s, j)))
        .filter(|(s, j)| {
            let p = s.push_power(*j);
            !(p.is_zero() || p.is_homogeneous_of(*j))
        })
        .map(|(s, j)| format!("{}^{j}", s.symbol()))
        .collect();
    out.push(CheckReport::new(
        format!("every push(e^j) is pure of codimension j, n = {n}"),
        impure.is_empty(),
        impure.join(", "),
    ));

    let mixed = &(&cat.gen(E3[0]) * &cat.gen(E3[1])) + &(&cat.gen(E3[1]).pow(2) * &cat.gen(E3[2]));
    let mixed = &mixed * &cat.gen("h2").pow(n);
    out.push(CheckReport::new(
        format!("products of distinct e3 symbols push to 0, n = {n}"),
        eliminate(&mixed, &tower)?.is_zero(),
        "",
    ));

    let h = &cat.gen("h1") * &cat.gen("h3");
    let lhs = eliminate(&(&h * &cat.gen(E1).pow(2 * n + 1)), &tower)?;
    let rhs = &h * &e1.push_power(2 * n + 1);
    out.push(CheckReport::new(
        format!("projection formula on the e1 stage, n = {n}"),
        lhs == rhs,
        "",
    ));

    let (poly, _) = expand_power(&pullback_class(&cat), n + 3, |_| true)?;
    let poly = &poly + &(&cat.gen(E2).pow(n + 1) * &cat.gen(E3[2]).pow(2));
    let reference = eliminate(&poly, &tower)?;
    let commute = [[2, 1, 0], [1, 0, 2]]
        .iter()
        .map(|&o| tower_with_e3_order(&cat, o).and_then(|t| eliminate(&poly, &t)))
        .collect::<Result<Vec<_>>>()?
        .iter()
        .all(|r| r == &reference);
    out.push(CheckReport::new(
        format!("e3 stages commute, n = {n}"),
        commute,
        "",
    ));
    Ok(out)
}

fn degree_under(n: u32, conventions: Conventions) -> Result<BigInt> {
    Ok(degree_with(&Catalog::with_conventions(n, conventions)?)?.degree)
}

/// The degree is the same whichever factor generator lifts classes from
/// `(B0)_red`.
pub fn lift_invariance(n: u32) -> Result<CheckReport> {
    let values = Factor::ALL
        .iter()
        .map(|&f| degree_under(n, Conventions::with_lift(f)))
        .collect::<Result<Vec<_>>>()?;
    let same = values.windows(2).all(|w| w[0] == w[1]);
    let shown: Vec<String> = values.iter().map(ToString::to_string).collect();
    Ok(CheckReport::new(
        format!("lift invariance, n = {n}"),
        same,
        shown.join(" / "),
    ))
}

/// The degree is the same under all six assignments of the roles
/// `F1, F2, F3` to the factors.
pub fn s3_symmetry(n: u32) -> Result<CheckReport> {
    let [a, b, c] = Factor::ALL;
    let roles = [
        [a, b, c],
        [b, a, c],
        [a, c, b],
        [c, b, a],
        [b, c, a],
        [c, a, b],
    ];
    let values = roles
        .iter()
        .map(|&r| {
            degree_under(
                n,
                Conventions {
                    roles: r,
                    ..Conventions::default()
                },
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let same = values.windows(2).all(|w| w[0] == w[1]);
    Ok(CheckReport::new(
        format!("S3 role symmetry, n = {n}"),
        same,
        values[0].to_string(),
    ))
}

/// Everything above for one `n`.
pub fn run(n: u32) -> Result<Vec<CheckReport>> {
    let mut out = charclass_checks(n)?;
    out.push(twist_split_oracle(5)?);
    out.extend(pushforward_checks(n)?);
    out.push(lift_invariance(n)?);
    out.push(s3_symmetry(n)?);
    Ok(out)
}
