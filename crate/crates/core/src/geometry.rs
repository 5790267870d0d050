//! Every space, cycle class and bundle of the three-step resolution tower of
//! the (1,1,1) parametrization, as ambient-lifted classes over
//! `Q[h1..h4, e1, e2, e3_1, e3_2, e3_3]`.
//!
//! `X = P^1 x (P^n)^3` with `h1` the hyperplane class of the `P^1` of
//! coefficients and `h2, h3, h4` the hyperplane classes of the three copies
//! of `P(S_n(1))` (the factors `F1, F2, F3`).
//!
//! The resolution is
//!
//! ```text
//! X''' --(e3_i)--> X'' --(e2)--> X' --(e1)--> X
//! ```
//!
//! blowing up `(B0)_red` (the locus `F1 = F2 = F3`), then `(B0')_red =
//! P(N B0)` inside the first exceptional divisor, then the three disjoint
//! double strict transforms of `B_i = {lambda = mu_i, F_j = F_k}`.
//!
//! Classes supported on a center are written as ambient classes; on
//! `(B0)_red` the three factor classes agree, and one of them (the *lift*)
//! stands in for the common class `h`. The tautological class of each
//! exceptional projective bundle is `-e`.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::charclass::{segre, tangent_projective, twist, whitney_quotient, BundleClass};
use crate::error::{Error, Result};
use crate::pushforward::{supported_push, BlowupStage, Tower};
use crate::ring::{GradedClass, RingSpec};

pub const H1: &str = "h1";
pub const E1: &str = "e1";
pub const E2: &str = "e2";
pub const E3: [&str; 3] = ["e3_1", "e3_2", "e3_3"];
/// Working generator of the ring of `(B0)_red = P^1 x P^n`.
pub const H: &str = "h";

/// One of the three `P^n` factor generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Factor {
    H2,
    H3,
    H4,
}

impl Factor {
    pub const ALL: [Factor; 3] = [Factor::H2, Factor::H3, Factor::H4];

    pub fn name(self) -> &'static str {
        match self {
            Factor::H2 => "h2",
            Factor::H3 => "h3",
            Factor::H4 => "h4",
        }
    }
}

/// Choices that must not change any final integral: which factor generator
/// lifts classes from `(B0)_red`, and which generator carries each of the
/// roles `F1, F2, F3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Conventions {
    pub lift: Factor,
    pub roles: [Factor; 3],
}

impl Default for Conventions {
    fn default() -> Self {
        Conventions {
            lift: Factor::H2,
            roles: [Factor::H2, Factor::H3, Factor::H4],
        }
    }
}

impl Conventions {
    pub fn with_lift(lift: Factor) -> Self {
        Conventions {
            lift,
            ..Self::default()
        }
    }

    fn validate(&self) -> Result<()> {
        let [a, b, c] = self.roles;
        if a == b || b == c || a == c {
            return Err(Error::Precondition(
                "factor roles must be a permutation".into(),
            ));
        }
        Ok(())
    }
}

/// Classes attached to one of the components `B_1, B_2, B_3`.
#[derive(Debug, Clone)]
pub struct Component {
    pub index: usize,
    /// The two factor generators identified on `Z_i` (and on `B_i`).
    pub pair: (Factor, Factor),
    pub z: GradedClass,
    pub n_z_x: BundleClass,
    pub b: GradedClass,
    pub b_cap_b0red: GradedClass,
    /// `s(N_{B_i cap (B0)red} B_i)`, lifted.
    pub segre_n_w_b: GradedClass,
    pub correction_1: GradedClass,
    pub correction_2: GradedClass,
    pub bdtilde: GradedClass,
    pub segre_n_bdtilde: GradedClass,
}

/// The full catalog for one `n`.
#[derive(Debug, Clone)]
pub struct Catalog {
    n: u32,
    conventions: Conventions,
    ring: Arc<RingSpec>,
    b0_ring: Arc<RingSpec>,
    tx: BundleClass,
    t_b0red: BundleClass,
    b0red: GradedClass,
    n_b0red_x_local: BundleClass,
    q_local: BundleClass,
    n_b0red_x: BundleClass,
    q: BundleClass,
    n_b0red_b0: BundleClass,
    b0pred: GradedClass,
    n_b0pred_xp: BundleClass,
    components: [Component; 3],
}

/// The symbol ring `A(X)[e1, e2, e3_i]` for a given `n`.
pub fn symbol_ring(n: u32) -> Result<Arc<RingSpec>> {
    check_n(n)?;
    let cap = 3 * n + 1;
    let names = ["h1", "h2", "h3", "h4", E1, E2, E3[0], E3[1], E3[2]];
    let free = cap + 1;
    RingSpec::new(
        &names,
        &[2, n + 1, n + 1, n + 1, free, free, free, free, free],
        cap,
    )
}

fn check_n(n: u32) -> Result<()> {
    if n < 3 {
        return Err(Error::DimensionOutOfRange(n));
    }
    Ok(())
}

impl Catalog {
    pub fn new(n: u32) -> Result<Self> {
        Self::with_conventions(n, Conventions::default())
    }

    pub fn with_conventions(n: u32, conventions: Conventions) -> Result<Self> {
        check_n(n)?;
        conventions.validate()?;
        let ring = symbol_ring(n)?;
        let b0_ring = RingSpec::new(&[H1, H], &[2, n + 1], n + 1)?;
        let mut cat = Catalog {
            n,
            conventions,
            ring: ring.clone(),
            b0_ring,
            tx: BundleClass::trivial(&ring, 0),
            t_b0red: BundleClass::trivial(&ring, 0),
            b0red: GradedClass::zero(&ring),
            n_b0red_x_local: BundleClass::trivial(&ring, 0),
            q_local: BundleClass::trivial(&ring, 0),
            n_b0red_x: BundleClass::trivial(&ring, 0),
            q: BundleClass::trivial(&ring, 0),
            n_b0red_b0: BundleClass::trivial(&ring, 0),
            b0pred: GradedClass::zero(&ring),
            n_b0pred_xp: BundleClass::trivial(&ring, 0),
            components: [
                placeholder(&ring, 1),
                placeholder(&ring, 2),
                placeholder(&ring, 3),
            ],
        };
        cat.tx = cat.build_tx()?;
        cat.t_b0red = cat.build_t_b0red()?;
        cat.b0red = cat.build_b0red();
        cat.n_b0red_x_local = cat.build_n_b0red_x()?;
        cat.q_local = cat.build_q()?;
        cat.n_b0red_x = cat.lift_bundle(&cat.n_b0red_x_local, conventions.lift)?;
        cat.q = cat.lift_bundle(&cat.q_local, conventions.lift)?;
        cat.n_b0red_b0 = cat.build_n_b0red_b0()?;
        cat.b0pred = cat.build_b0pred()?;
        cat.n_b0pred_xp = cat.n_b0pred_xp_via(conventions.lift)?;
        cat.components = [
            cat.build_component(1)?,
            cat.build_component(2)?,
            cat.build_component(3)?,
        ];
        Ok(cat)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn conventions(&self) -> Conventions {
        self.conventions
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    /// Ring of `(B0)_red = P^1 x P^n`, generators `h1, h`.
    pub fn b0_ring(&self) -> &Arc<RingSpec> {
        &self.b0_ring
    }

    pub fn gen(&self, name: &str) -> GradedClass {
        GradedClass::generator(&self.ring, name).expect("catalog generator")
    }

    fn one(&self) -> GradedClass {
        GradedClass::one(&self.ring)
    }

    fn role(&self, k: usize) -> Factor {
        self.conventions.roles[k - 1]
    }

    pub fn chern_tx(&self) -> &BundleClass {
        &self.tx
    }

    /// `T(B0)_red` on `P^1 x P^n`, in the `(B0)_red` ring.
    pub fn chern_t_b0red(&self) -> &BundleClass {
        &self.t_b0red
    }

    pub fn class_b0red(&self) -> &GradedClass {
        &self.b0red
    }

    pub fn chern_n_b0red_x(&self) -> &BundleClass {
        &self.n_b0red_x
    }

    pub fn chern_q(&self) -> &BundleClass {
        &self.q
    }

    pub fn chern_n_b0red_b0(&self) -> &BundleClass {
        &self.n_b0red_b0
    }

    pub fn class_b0pred(&self) -> &GradedClass {
        &self.b0pred
    }

    pub fn chern_n_b0pred_xp(&self) -> &BundleClass {
        &self.n_b0pred_xp
    }

    pub fn component(&self, i: usize) -> Result<&Component> {
        match i {
            1..=3 => Ok(&self.components[i - 1]),
            _ => Err(Error::BadComponent(i)),
        }
    }

    pub fn components(&self) -> &[Component; 3] {
        &self.components
    }

    /// Restriction to `(B0)_red`: `h2, h3, h4 -> h`.
    pub fn restrict_b0red(&self, c: &GradedClass) -> Result<GradedClass> {
        for sym in [E1, E2, E3[0], E3[1], E3[2]] {
            if c.mentions(sym) {
                return Err(Error::ExceptionalSymbol(sym.to_string()));
            }
        }
        let h = GradedClass::generator(&self.b0_ring, H)?;
        let mut map = BTreeMap::new();
        map.insert(H1.to_string(), GradedClass::generator(&self.b0_ring, H1)?);
        for f in Factor::ALL {
            map.insert(f.name().to_string(), h.clone());
        }
        c.substitute(&map, &self.b0_ring)
    }

    /// Lift from `(B0)_red` to the ambient ring: `h -> lift generator`.
    pub fn lift_b0red(&self, c: &GradedClass) -> Result<GradedClass> {
        self.lift_b0red_via(c, self.conventions.lift)
    }

    fn lift_b0red_via(&self, c: &GradedClass, lift: Factor) -> Result<GradedClass> {
        let mut map = BTreeMap::new();
        map.insert(H1.to_string(), self.gen(H1));
        map.insert(H.to_string(), self.gen(lift.name()));
        c.substitute(&map, &self.ring)
    }

    fn lift_bundle(&self, b: &BundleClass, lift: Factor) -> Result<BundleClass> {
        b.map_chern(|c| self.lift_b0red_via(c, lift))
    }

    fn build_tx(&self) -> Result<BundleClass> {
        let r = &self.ring;
        let mut tx = tangent_projective(r, 1, H1)?;
        for f in Factor::ALL {
            tx = tx.direct_sum(&tangent_projective(r, self.n, f.name())?)?;
        }
        Ok(tx)
    }

    fn build_t_b0red(&self) -> Result<BundleClass> {
        let r = &self.b0_ring;
        tangent_projective(r, 1, H1)?.direct_sum(&tangent_projective(r, self.n, H)?)
    }

    /// `sum_{0 <= i, j <= n} h2^i h3^j h4^{2n-i-j}`, the small diagonal.
    fn build_b0red(&self) -> GradedClass {
        let n = self.n;
        let mut terms = Vec::new();
        for i in 0..=n {
            for j in 0..=n {
                let Some(k) = (2 * n).checked_sub(i + j) else {
                    continue;
                };
                if k > n {
                    continue;
                }
                let m = self
                    .ring
                    .monomial(&[("h2", i), ("h3", j), ("h4", k)])
                    .expect("diagonal monomial in range");
                terms.push((m, crate::ring::rational(1)));
            }
        }
        GradedClass::from_terms(&self.ring, terms)
    }

    /// `0 -> T(B0)red -> TX| -> N -> 0` on `(B0)_red`.
    fn build_n_b0red_x(&self) -> Result<BundleClass> {
        let tx_here = self.tx.map_chern(|c| self.restrict_b0red(c))?;
        whitney_quotient(&tx_here, &self.t_b0red)
    }

    /// `N_{(B0)red} X / N_{(B0)red} B0 = T P^n (x) O_{P^1}(1)` on `(B0)_red`.
    fn build_q(&self) -> Result<BundleClass> {
        let r = &self.b0_ring;
        twist(
            &tangent_projective(r, self.n, H)?,
            &GradedClass::generator(r, H1)?,
        )
    }

    /// From `0 -> TB0| -> TX| -> Q -> 0` and `0 -> T(B0)red -> TB0| -> N -> 0`.
    fn build_n_b0red_b0(&self) -> Result<BundleClass> {
        let tx_here = self.tx.map_chern(|c| self.restrict_b0red(c))?;
        let tb0 = whitney_quotient(&tx_here, &self.q_local)?;
        debug_assert_eq!(tb0.rank(), 2 * self.n + 1);
        let n = whitney_quotient(&tb0, &self.t_b0red)?;
        self.lift_bundle(&n, self.conventions.lift)
    }

    /// Class of the projective subbundle `P(N B0) subset P(N X) = E'`:
    /// `e1 * sum_i c_i(Q) (-e1)^{n-i}`.
    fn build_b0pred(&self) -> Result<GradedClass> {
        let e1 = self.gen(E1);
        let minus_e1 = -&e1;
        let mut acc = GradedClass::zero(&self.ring);
        for i in 0..=self.n {
            let ci = self.q.chern_part(i64::from(i));
            acc = &acc + &(&ci * &minus_e1.pow(self.n - i));
        }
        Ok(&e1 * &acc)
    }

    /// `0 -> Q (x) O_{E'}(1) -> N_{(B0')red} X' -> O_{E'}(-1) -> 0`.
    fn n_b0pred_xp_via(&self, lift: Factor) -> Result<BundleClass> {
        let e1 = self.gen(E1);
        let sub = twist(&self.lift_bundle(&self.q_local, lift)?, &-&e1)?;
        sub.direct_sum(&BundleClass::line(&e1)?)
    }

    /// The pair of factor generators equal on `Z_i`; `i = 1` is `F2 = F3`.
    fn pair(&self, i: usize) -> Result<(Factor, Factor)> {
        match i {
            1 => Ok((self.role(2), self.role(3))),
            2 => Ok((self.role(1), self.role(3))),
            3 => Ok((self.role(1), self.role(2))),
            _ => Err(Error::BadComponent(i)),
        }
    }

    /// Generator standing for the diagonal class on `Z_i`.
    fn pair_lift(&self, pair: (Factor, Factor)) -> Factor {
        if pair.1 == self.conventions.lift {
            pair.1
        } else {
            pair.0
        }
    }

    fn build_component(&self, i: usize) -> Result<Component> {
        let n = self.n;
        let pair = self.pair(i)?;
        let (a, b) = (pair.0.name(), pair.1.name());
        let pair_lift = self.pair_lift(pair);
        let lift = pair_lift.name();
        let h1 = self.gen(H1);
        let one = self.one();

        let mut z = GradedClass::zero(&self.ring);
        for k in 0..=n {
            z = &z + &(&self.gen(a).pow(k) * &self.gen(b).pow(n - k));
        }
        let n_z_x = tangent_projective(&self.ring, n, lift)?;
        let b_class = &h1 * &z;
        let b_cap_b0red = &h1 * &self.b0red;

        // 0 -> T(B_i cap (B0)red) -> T B_i| -> N -> 0 with B_i = pt x P^n x P^n
        // and the intersection its diagonal
        let tb = tangent_projective(&self.ring, n, lift)?
            .direct_sum(&tangent_projective(&self.ring, n, lift)?)?;
        let tw = tangent_projective(&self.ring, n, lift)?;
        let segre_n_w_b = segre(&whitney_quotient(&tb, &tw)?);

        // every integrand below lives over B_i cap (B0)red, where all three
        // factor classes agree, so the pair lift is as good as any

        // excess bundle of the first blow-up: pi^* N_{(B0)red} X / O_{E'}(-1)
        let e1 = self.gen(E1);
        let e2 = self.gen(E2);
        let n_b0red_x = self.lift_bundle(&self.n_b0red_x_local, pair_lift)?;
        let excess_1 = whitney_quotient(&n_b0red_x, &BundleClass::line(&e1)?)?;
        let integrand_1 = excess_1.chern() * &segre_n_w_b;
        let correction_1 = supported_push(&integrand_1, &h1, E1, i64::from(n) - 1)?;

        // second blow-up: the intersection is the exceptional divisor of B_i',
        // with normal bundle O(-1)
        let n_b0pred_xp = self.n_b0pred_xp_via(pair_lift)?;
        let excess_2 = whitney_quotient(&n_b0pred_xp, &BundleClass::line(&e2)?)?;
        let segre_w2 = (&one + &e1).invert_unit()?;
        let integrand_2 = excess_2.chern() * &segre_w2;
        let correction_2 = supported_push(&integrand_2, &h1, E2, i64::from(n) - 1)?;

        let bdtilde = &(&b_class - &correction_1) - &correction_2;

        // N_{Z_i'} X' = N_{Z_i} X (x) O(-E'), then (x) O(-E'') in X''; the
        // factor s(N_{B_i} Z_i) = 1/(1 + h1)|_{B_i} is 1
        let n_z2 = twist(&twist(&n_z_x, &-&e1)?, &-&e2)?;
        let segre_n_bdtilde = segre(&n_z2);

        Ok(Component {
            index: i,
            pair,
            z,
            n_z_x,
            b: b_class,
            b_cap_b0red,
            segre_n_w_b,
            correction_1,
            correction_2,
            bdtilde,
            segre_n_bdtilde,
        })
    }

    /// Pushforward stages in elimination order `e3_1, e3_2, e3_3, e2, e1`.
    pub fn tower(&self) -> Result<Tower> {
        let n = self.n;
        let mut stages = Vec::with_capacity(5);
        for c in &self.components {
            stages.push(BlowupStage::new(
                E3[c.index - 1],
                c.bdtilde.clone(),
                n + 1,
                c.segre_n_bdtilde.clone(),
            )?);
        }
        stages.push(BlowupStage::new(
            E2,
            self.b0pred.clone(),
            n + 1,
            self.n_b0pred_xp.segre(),
        )?);
        stages.push(BlowupStage::new(
            E1,
            self.b0red.clone(),
            2 * n,
            self.n_b0red_x.segre(),
        )?);
        let group = E3.iter().map(|s| s.to_string()).collect();
        Ok(Tower::new(stages, vec![group]))
    }

    /// Every named class and bundle, serialized canonically.
    pub fn dump(&self) -> Vec<(String, String)> {
        let mut out = vec![
            ("c(TX)".to_string(), self.tx.chern().to_string()),
            ("c(T(B0)red)".to_string(), self.t_b0red.chern().to_string()),
            ("[(B0)red]".to_string(), self.b0red.to_string()),
            (
                "c(N_(B0)red X)".to_string(),
                self.n_b0red_x.chern().to_string(),
            ),
            ("c(Q)".to_string(), self.q.chern().to_string()),
            (
                "c(N_(B0)red B0)".to_string(),
                self.n_b0red_b0.chern().to_string(),
            ),
            ("[(B0')red]".to_string(), self.b0pred.to_string()),
            (
                "c(N_(B0')red X')".to_string(),
                self.n_b0pred_xp.chern().to_string(),
            ),
        ];
        for c in &self.components {
            let i = c.index;
            out.push((format!("[Z{i}]"), c.z.to_string()));
            out.push((format!("c(N_Z{i} X)"), c.n_z_x.chern().to_string()));
            out.push((format!("[B{i}]"), c.b.to_string()));
            out.push((format!("[B{i} cap (B0)red]"), c.b_cap_b0red.to_string()));
            out.push((format!("[B{i}'']"), c.bdtilde.to_string()));
            out.push((format!("s(N_B{i}'' X'')"), c.segre_n_bdtilde.to_string()));
        }
        out
    }
}

fn placeholder(ring: &Arc<RingSpec>, index: usize) -> Component {
    let zero = GradedClass::zero(ring);
    Component {
        index,
        pair: (Factor::H2, Factor::H3),
        z: zero.clone(),
        n_z_x: BundleClass::trivial(ring, 0),
        b: zero.clone(),
        b_cap_b0red: zero.clone(),
        segre_n_w_b: zero.clone(),
        correction_1: zero.clone(),
        correction_2: zero.clone(),
        bdtilde: zero.clone(),
        segre_n_bdtilde: zero,
    }
}
