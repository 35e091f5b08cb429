//! The Chebyshev-Frobenius map on the bigon algebra,
//! `Phi: O_{eta^2}(SL(2)) -> O_{q^2}(SL(2))`, `g -> g^N`, and the identities
//! around it: the annulus `T_N(a + d) = a^N + d^N`, the framed square
//! expansion, and negative controls at wrong powers.
//!
//! The source algebra is modelled by the generic ring read in `eta`: a generic
//! scalar `sum c_e w^e` stands for `sum c_e eta^e`, and is pushed to the
//! root of unity by `iota(w^e) = w^{e N^2}`.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::bigon::hopf::{antipode, coproduct, counit, TensorElement};
use crate::bigon::rho::{defining_relations, RhoEngine};
use crate::bigon::{annulus_core, BigonElement, Gen, MonoKind, PbwMonomial};
use crate::poly::RingElement;
use crate::qcomb::{eval_chebyshev, qbinom_at_omega_power};
use crate::report::Report;
use crate::scalar::{Ring, RingTag, RootSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrobeniusError {
    #[error("Frobenius source scalars must be Laurent polynomials in eta, got a scalar in {0}")]
    NotInEtaRing(RingTag),
}

/// `Phi_M`: basis monomial `b^i c^j a^k -> b^{Mi} c^{Mj} a^{Mk}` (likewise for
/// `d`), coefficients through `w^e -> w^{e M^2}` into `target`.
pub fn phi_power(x: &BigonElement, target: &Ring, m: u32) -> Result<BigonElement, FrobeniusError> {
    if let RingTag::Cyclotomic(_) = x.ring().tag() {
        return Err(FrobeniusError::NotInEtaRing(x.ring().tag()));
    }
    let s = (m as i64) * (m as i64);
    let mut out = BigonElement::zero(target);
    for (mono, c) in x.terms() {
        let l = c.as_laurent().expect("generic scalar");
        let coeff = target.omega_terms(l.terms().map(|(e, v)| (e * s, v)));
        let image = match mono.kind() {
            MonoKind::A => PbwMonomial::a_type(m * mono.b(), m * mono.c(), m * mono.a()),
            MonoKind::D => PbwMonomial::d_type(m * mono.b(), m * mono.c(), m * mono.d()),
        };
        out = out.add_ref(&BigonElement::monomial(target, image, coeff));
    }
    Ok(out)
}

/// `Phi_w` with `N = ord(w^8)`.
pub fn phi_bigon(x: &BigonElement, spec: &RootSpec) -> Result<BigonElement, FrobeniusError> {
    phi_power(x, spec.ring(), spec.big_n)
}

fn gen_power(ring: &Ring, g: Gen, m: u32) -> BigonElement {
    BigonElement::from_word(&ring.one(), &vec![g; m as usize])
}

/// `iota_M(w^e) = w^{e M^2}` on generic scalars.
fn iota_power(target: &Ring, c: &Scalar, m: u32) -> Scalar {
    let s = (m as i64) * (m as i64);
    target.omega_terms(c.as_laurent().expect("generic scalar").terms().map(|(e, v)| (e * s, v)))
}

/// Images of the defining relations under `g -> g^M`, each evaluated as an
/// element that must vanish.
fn relation_images(target: &Ring, m: u32) -> Vec<(&'static str, BigonElement)> {
    let generic = Ring::generic();
    defining_relations(&generic)
        .into_iter()
        .map(|(name, rel)| {
            let mut acc = BigonElement::zero(target);
            for (c, w) in rel {
                let mut term = BigonElement::scalar(target, iota_power(target, &c, m));
                for g in w {
                    term = term.mul_ref(&gen_power(target, g, m));
                }
                acc = acc.add_ref(&term);
            }
            (name, acc)
        })
        .collect()
}

/// Both sides of `Delta(g^M) = sum g_1^M (x) g_2^M` for generator `g`.
fn coalgebra_sides(target: &Ring, g: Gen, m: u32) -> (TensorElement, TensorElement) {
    let lhs = coproduct(&gen_power(target, g, m));
    let (i, j) = g.index();
    let mut rhs = TensorElement::zero(target);
    for k in 0..2 {
        let l = gen_power(target, Gen::from_index(i, k), m);
        let r = gen_power(target, Gen::from_index(k, j), m);
        rhs = rhs.add(&TensorElement::pure(&l, &r).unwrap());
    }
    (lhs, rhs)
}

/// Relation preservation, coalgebra compatibility, counit and antipode, and
/// co-R compatibility of `Phi` on generators.
pub fn verify_phi_homomorphism(spec: &RootSpec) -> Report {
    let mut report = Report::new("phi-homomorphism");
    let ring = spec.ring();
    let generic = Ring::generic();
    let n = spec.n;
    let big_n = spec.big_n;
    let zero = BigonElement::zero(ring);
    for (name, img) in relation_images(ring, big_n) {
        report.check(format!("n={n}/relation/{name}"), || (img, zero.clone()));
    }
    for g in Gen::ALL {
        report.check(format!("n={n}/coalgebra/{}", g.symbol()), || coalgebra_sides(ring, g, big_n));
    }
    for g in Gen::ALL {
        let x = BigonElement::generator(&generic, g);
        let px = phi_bigon(&x, spec).unwrap();
        report.check(format!("n={n}/counit/{}", g.symbol()), || {
            (counit(&px), spec.iota(counit(&x).as_laurent().unwrap()))
        });
        report.check(format!("n={n}/antipode/{}", g.symbol()), || {
            (antipode(&px), phi_bigon(&antipode(&x), spec).unwrap())
        });
    }
    let mut engine = RhoEngine::new(ring);
    let mut source = RhoEngine::new(&generic);
    for g in Gen::ALL {
        for h in Gen::ALL {
            let x = BigonElement::generator(&generic, g);
            let y = BigonElement::generator(&generic, h);
            report.check(format!("n={n}/rho/{}{}", g.symbol(), h.symbol()), || {
                let lhs = engine
                    .rho(&phi_bigon(&x, spec).unwrap(), &phi_bigon(&y, spec).unwrap())
                    .unwrap();
                let rhs = spec.iota(source.rho(&x, &y).unwrap().as_laurent().unwrap());
                (lhs, rhs)
            });
        }
    }
    report
}

fn random_element(rng: &mut ChaCha8Rng, ring: &Ring, monos: &[PbwMonomial]) -> BigonElement {
    let terms = rng.gen_range(1..=2);
    let mut x = BigonElement::zero(ring);
    for _ in 0..terms {
        let m = monos[rng.gen_range(0..monos.len())];
        let c = ring.omega_terms([(rng.gen_range(-3..=3), rng.gen_range(-2..=2))]);
        x = x.add_ref(&BigonElement::monomial(ring, m, c));
    }
    x
}

/// `Phi(xy) = Phi(x) Phi(y)` on random pairs of degree `<= 3`, and basis
/// monomials going to distinct unit multiples of basis monomials.
pub fn verify_phi_multiplicative(spec: &RootSpec, samples: usize, seed: u64) -> Report {
    let mut report = Report::new("phi-homomorphism");
    let generic = Ring::generic();
    let monos = PbwMonomial::all_up_to(3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ spec.n as u64);
    let n = spec.n;
    for s in 0..samples {
        let x = random_element(&mut rng, &generic, &monos);
        let y = random_element(&mut rng, &generic, &monos);
        report.check(format!("n={n}/multiplicative/sample{s}"), || {
            let lhs = phi_bigon(&x.mul_ref(&y), spec).unwrap();
            let rhs = phi_bigon(&x, spec).unwrap().mul_ref(&phi_bigon(&y, spec).unwrap());
            (lhs, rhs)
        });
    }
    report.check_with(format!("n={n}/basis-injective"), || {
        let mut seen = BTreeMap::new();
        for m in &monos {
            let img = phi_bigon(&BigonElement::monomial(&generic, *m, generic.one()), spec).unwrap();
            let single = img.len() == 1 && img.terms().values().all(|c| c.inverse().is_ok());
            if !single {
                return (false, format!("Phi({m}) = {img}"), "a unit multiple of one basis monomial".into());
            }
            let target = *img.terms().keys().next().unwrap();
            if let Some(prev) = seen.insert(target, *m) {
                return (false, format!("Phi({prev}) and Phi({m}) collide"), "distinct images".into());
            }
        }
        (true, format!("{} monomials", monos.len()), "distinct unit images".into())
    });
    report
}

/// `T_N(a + d) = a^N + d^N` over the cyclotomic ring.
pub fn verify_annulus_tn(spec: &RootSpec) -> Report {
    let mut report = Report::new("annulus");
    let ring = spec.ring();
    let big_n = spec.big_n;
    report.check(format!("n={}/N={big_n}/T_N(a+d)", spec.n), || {
        let lhs = eval_chebyshev(big_n, &annulus_core(ring));
        let rhs = gen_power(ring, Gen::A, big_n).add_ref(&gen_power(ring, Gen::D, big_n));
        (lhs, rhs)
    });
    report
}

/// `sum c_{r,s} X_+^(r) X_-^(s)` as a formal bimodule element.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareState {
    pub terms: BTreeMap<(u32, u32), Scalar>,
}

impl SquareState {
    fn add_term(&mut self, key: (u32, u32), c: Scalar) {
        if c.is_zero() {
            return;
        }
        let s = match self.terms.get(&key) {
            Some(e) => e + &c,
            None => c,
        };
        if s.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, s);
        }
    }
}

impl fmt::Display for SquareState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|((r, s), c)| format!("({c})*Y[{r},{s}]")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `X^(m)` from `X^(0) = Y_{0,0}` and
/// `X^(k+1) = q^{2k+1} X_+ . X^(k) + q^{-2k-1} X^(k) . X_-`, where
/// `X_+ . Y_{r,s} = Y_{r+1,s}` and `Y_{r,s} . X_- = Y_{r,s+1}`.
pub fn square_framed_expansion(m: u32, ring: &Ring) -> SquareState {
    let mut state = SquareState { terms: BTreeMap::new() };
    state.add_term((0, 0), ring.one());
    for k in 0..m as i64 {
        let mut next = SquareState { terms: BTreeMap::new() };
        for ((r, s), c) in &state.terms {
            next.add_term((r + 1, *s), c.mul_q_pow(2 * k + 1));
            next.add_term((*r, s + 1), c.mul_q_pow(-2 * k - 1));
        }
        state = next;
    }
    state
}

/// `sum_j q^{m^2 - 4mj + 2j^2} [m j]_{q^4} Y_{m-j,j}`.
pub fn square_closed_form(m: u32, ring: &Ring) -> SquareState {
    let mut state = SquareState { terms: BTreeMap::new() };
    let mm = m as i64;
    for j in 0..=mm {
        let binom = qbinom_at_omega_power(mm, j, ring, 8).unwrap();
        let c = binom.mul_q_pow(mm * mm - 4 * mm * j + 2 * j * j);
        state.add_term(((mm - j) as u32, j as u32), c);
    }
    state
}

/// Generic closed form for `m <= m_max`; with a root spec, also the collapse
/// from [`verify_square_collapse`].
pub fn verify_square_expansion(m_max: u32, spec: Option<&RootSpec>) -> Report {
    let mut report = Report::new("square");
    let generic = Ring::generic();
    for m in 0..=m_max {
        report.check(format!("generic/m={m}"), || {
            (square_framed_expansion(m, &generic), square_closed_form(m, &generic))
        });
    }
    if let Some(spec) = spec {
        report.merge(verify_square_collapse(spec));
    }
    report
}

/// `X^(N) = eta^2 Y_{N,0} + eta^-2 Y_{0,N}` at the root of unity.
pub fn verify_square_collapse(spec: &RootSpec) -> Report {
    let mut report = Report::new("square");
    let ring = spec.ring();
    let big_n = spec.big_n;
    report.check(format!("n={}/X^(N)", spec.n), || {
        let mut expected = SquareState { terms: BTreeMap::new() };
        expected.add_term((big_n, 0), spec.eta().pow(2).unwrap());
        expected.add_term((0, big_n), spec.eta().pow(-2).unwrap());
        (square_framed_expansion(big_n, ring), expected)
    });
    report
}

/// Finds which identities break when generators go to `M`-th powers over
/// `ring`; empty means none broke.
pub fn wrong_power_failures(ring: &Ring, m: u32) -> Vec<String> {
    let mut out = Vec::new();
    for g in Gen::ALL {
        let (l, r) = coalgebra_sides(ring, g, m);
        if l != r {
            out.push(format!("Delta({}^{m}) != sum g1^{m} (x) g2^{m}", g.symbol()));
        }
    }
    for (name, img) in relation_images(ring, m) {
        if !img.is_zero() {
            out.push(format!("relation {name} fails at power {m}"));
        }
    }
    out
}

/// At the root of unity: every power `2 <= M <= N + 1` other than `N` must
/// break the coalgebra identity or a relation. Over the generic ring: every
/// `2 <= M <= 6` must break the coalgebra identity and `T_M(a+d) = a^M + d^M`.
pub fn negative_control(spec: Option<&RootSpec>) -> Report {
    let mut report = Report::new("negative-control");
    match spec {
        Some(spec) if spec.n == 1 => {
            report.skip("n=1", "no wrong power below N = 1 to test");
        }
        Some(spec) => {
            let ring = spec.ring();
            for m in 2..=spec.big_n + 1 {
                if m == spec.big_n {
                    continue;
                }
                report.check_with(format!("n={}/N={}/M={m}", spec.n, spec.big_n), || {
                    let fails = wrong_power_failures(ring, m);
                    let found = !fails.is_empty();
                    let lhs = if found { fails[0].clone() } else { "all identities hold".into() };
                    (found, lhs, "some identity fails".into())
                });
            }
        }
        None => {
            let generic = Ring::generic();
            for m in 2..=6 {
                report.check_with(format!("generic/M={m}/coalgebra"), || {
                    let (l, r) = coalgebra_sides(&generic, Gen::A, m);
                    (l != r, l.to_string(), format!("!= {r}"))
                });
                report.check_with(format!("generic/M={m}/annulus"), || {
                    let lhs = eval_chebyshev(m, &annulus_core(&generic));
                    let rhs = gen_power(&generic, Gen::A, m).add_ref(&gen_power(&generic, Gen::D, m));
                    (lhs != rhs, lhs.to_string(), format!("!= {rhs}"))
                });
            }
        }
    }
    report
}
