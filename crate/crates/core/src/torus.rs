//! Quantum tori `x_i x_j = v^{P_ij} x_j x_i` with adjoined central variables,
//! and the Frobenius map `x_i -> x_i^N`, `z -> T_N(z)`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::poly::RingElement;
use crate::qcomb::eval_chebyshev;
use crate::report::Report;
use crate::scalar::{Ring, RootSpec, Scalar, ScalarError};
use crate::Int;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TorusError {
    #[error("commutation matrix is not antisymmetric")]
    NotAntisymmetric,
    #[error("commutation matrix must be square")]
    NotSquare,
    #[error("commutation unit is not invertible: {0}")]
    UnitNotInvertible(#[from] ScalarError),
    #[error("elements belong to different quantum tori")]
    AlgebraMismatch,
    #[error("exponent vector has length {got}, expected {expected}")]
    Dimension { got: usize, expected: usize },
    #[error("source torus must have unit v^(N^2) and the same shape as the target")]
    FrobeniusShape,
    #[error("Weyl ordering needs a unit of the form w^(2k)")]
    NotWeylUnit,
}

/// `T(P; v)` over a scalar ring, with `central` commuting polynomial
/// variables appended.
#[derive(Debug, Clone)]
pub struct TorusAlgebra {
    p: Vec<Vec<i64>>,
    unit: Scalar,
    unit_inv: Scalar,
    // (sign, k) when unit = sign * w^k
    unit_monomial: Option<(Int, i64)>,
    central: usize,
}

impl PartialEq for TorusAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.unit == other.unit && self.central == other.central
    }
}

fn detect_unit_monomial(v: &Scalar) -> Option<(Int, i64)> {
    match v {
        Scalar::Generic(l) => l.as_unit_monomial(),
        Scalar::Cyclotomic(c) => {
            let ring = v.ring();
            (0..c.order() as i64).find_map(|k| {
                let wk = ring.omega_pow(k);
                if *v == wk {
                    Some((1, k))
                } else if *v == wk.neg_ref() {
                    Some((-1, k))
                } else {
                    None
                }
            })
        }
    }
}

impl TorusAlgebra {
    pub fn new(p: Vec<Vec<i64>>, unit: Scalar, central: usize) -> Result<Arc<Self>, TorusError> {
        let r = p.len();
        if p.iter().any(|row| row.len() != r) {
            return Err(TorusError::NotSquare);
        }
        for i in 0..r {
            for j in 0..r {
                if p[i][j] != -p[j][i] {
                    return Err(TorusError::NotAntisymmetric);
                }
            }
        }
        let unit_inv = unit.inverse()?;
        let unit_monomial = detect_unit_monomial(&unit);
        Ok(Arc::new(TorusAlgebra {
            p,
            unit,
            unit_inv,
            unit_monomial,
            central,
        }))
    }

    /// Two generators with `x2 x1 = v x1 x2`.
    pub fn two_generator(unit: Scalar, central: usize) -> Result<Arc<Self>, TorusError> {
        TorusAlgebra::new(vec![vec![0, -1], vec![1, 0]], unit, central)
    }

    pub fn rank(&self) -> usize {
        self.p.len()
    }

    pub fn central_count(&self) -> usize {
        self.central
    }

    pub fn unit(&self) -> &Scalar {
        &self.unit
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.p
    }

    pub fn ring(&self) -> Ring {
        self.unit.ring()
    }

    /// `v^e`.
    pub fn unit_pow(&self, e: i64) -> Scalar {
        match self.unit_monomial {
            Some((s, k)) => {
                let sign = if s < 0 && e.rem_euclid(2) == 1 { -1 } else { 1 };
                self.ring().omega_pow(k * e).scale(sign)
            }
            None if e >= 0 => self.unit.pow(e).unwrap(),
            None => self.unit_inv.pow(-e).unwrap(),
        }
    }

    /// Exponent of `v` picked up by `x^a * x^b -> x^(a+b)`.
    fn reorder_exponent(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut e = 0;
        for i in 0..a.len() {
            if a[i] == 0 {
                continue;
            }
            for j in 0..i {
                e += a[i] * b[j] * self.p[i][j];
            }
        }
        e
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusMonomial {
    pub exps: Vec<i64>,
    pub central: Vec<u32>,
}

#[derive(Debug, Clone)]
pub struct TorusElement {
    alg: Arc<TorusAlgebra>,
    terms: BTreeMap<TorusMonomial, Scalar>,
}

impl PartialEq for TorusElement {
    fn eq(&self, other: &Self) -> bool {
        *self.alg == *other.alg && self.terms == other.terms
    }
}

impl TorusElement {
    pub fn zero(alg: &Arc<TorusAlgebra>) -> Self {
        TorusElement {
            alg: alg.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(alg: &Arc<TorusAlgebra>, c: Scalar) -> Self {
        let mono = TorusMonomial {
            exps: vec![0; alg.rank()],
            central: vec![0; alg.central],
        };
        Self::monomial(alg, mono, c)
    }

    pub fn one(alg: &Arc<TorusAlgebra>) -> Self {
        Self::scalar(alg, alg.ring().one())
    }

    pub fn monomial(alg: &Arc<TorusAlgebra>, mono: TorusMonomial, c: Scalar) -> Self {
        let mut e = Self::zero(alg);
        e.add_term(mono, c);
        e
    }

    /// `x_i^e`.
    pub fn generator_pow(alg: &Arc<TorusAlgebra>, i: usize, e: i64) -> Self {
        let mut exps = vec![0; alg.rank()];
        exps[i] = e;
        let mono = TorusMonomial {
            exps,
            central: vec![0; alg.central],
        };
        Self::monomial(alg, mono, alg.ring().one())
    }

    pub fn generator(alg: &Arc<TorusAlgebra>, i: usize) -> Self {
        Self::generator_pow(alg, i, 1)
    }

    pub fn central_var(alg: &Arc<TorusAlgebra>, j: usize) -> Self {
        let mut central = vec![0; alg.central];
        central[j] = 1;
        let mono = TorusMonomial {
            exps: vec![0; alg.rank()],
            central,
        };
        Self::monomial(alg, mono, alg.ring().one())
    }

    pub fn algebra(&self) -> &Arc<TorusAlgebra> {
        &self.alg
    }

    pub fn terms(&self) -> &BTreeMap<TorusMonomial, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mono: &TorusMonomial) -> Scalar {
        self.terms.get(mono).cloned().unwrap_or_else(|| self.alg.ring().zero())
    }

    fn add_term(&mut self, mono: TorusMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(existing) => {
                let s = &*existing + &c;
                if s.is_zero() {
                    self.terms.remove(&mono);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(mono, c);
            }
        }
    }

    fn same_algebra(&self, other: &Self) -> Result<(), TorusError> {
        if Arc::ptr_eq(&self.alg, &other.alg) || *self.alg == *other.alg {
            Ok(())
        } else {
            Err(TorusError::AlgebraMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, TorusError> {
        self.same_algebra(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(&self.alg);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    /// Product in normal order: generators by ascending index, central
    /// variables last.
    pub fn normal_mul(&self, other: &Self) -> Result<Self, TorusError> {
        self.same_algebra(other)?;
        let mut out = Self::zero(&self.alg);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e = self.alg.reorder_exponent(&ma.exps, &mb.exps);
                let c = &(ca * cb) * &self.alg.unit_pow(e);
                let mono = TorusMonomial {
                    exps: ma.exps.iter().zip(&mb.exps).map(|(x, y)| x + y).collect(),
                    central: ma.central.iter().zip(&mb.central).map(|(x, y)| x + y).collect(),
                };
                out.add_term(mono, c);
            }
        }
        Ok(out)
    }

    /// Weyl-ordered coefficients: `self = sum c_m [x^m]` where
    /// `[x^m] = w^{-k sum_{i<j} P_ij m_i m_j} x_1^{m_1} ... x_r^{m_r}` for unit
    /// `v = w^{2k}`.
    pub fn weyl_coefficients(&self) -> Result<BTreeMap<TorusMonomial, Scalar>, TorusError> {
        let half = weyl_half_exponent(&self.alg)?;
        Ok(self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.mul_omega_pow(half * weyl_form(&self.alg, &m.exps))))
            .collect())
    }

    /// The Weyl-ordered monomial `[x^m]`.
    pub fn weyl_monomial(alg: &Arc<TorusAlgebra>, mono: TorusMonomial) -> Result<Self, TorusError> {
        let half = weyl_half_exponent(alg)?;
        let c = alg.ring().omega_pow(-half * weyl_form(alg, &mono.exps));
        Ok(Self::monomial(alg, mono, c))
    }

    /// Reflection anti-involution: fixes generators, reverses products and
    /// applies `w -> w^-1` to scalars. Computed by literally reversing each
    /// monomial word and multiplying back into normal order.
    pub fn reflection(&self) -> Result<Self, TorusError> {
        weyl_half_exponent(&self.alg)?;
        let mut out = Self::zero(&self.alg);
        for (m, c) in &self.terms {
            let mut central = vec![0; self.alg.central];
            central.copy_from_slice(&m.central);
            let mut word = Self::monomial(
                &self.alg,
                TorusMonomial {
                    exps: vec![0; self.alg.rank()],
                    central,
                },
                c.bar(),
            );
            for i in (0..self.alg.rank()).rev() {
                word = word.normal_mul(&Self::generator_pow(&self.alg, i, m.exps[i]))?;
            }
            out = out.try_add(&word)?;
        }
        Ok(out)
    }

    /// Weyl-ordered rendering, `(c) * [x1^e1 ...] * z1^d1 ...`.
    pub fn render_weyl(&self) -> Result<String, TorusError> {
        let coeffs = self.weyl_coefficients()?;
        Ok(render_terms(coeffs.iter(), true))
    }
}

fn weyl_half_exponent(alg: &TorusAlgebra) -> Result<i64, TorusError> {
    match alg.unit_monomial {
        Some((1, k)) if k % 2 == 0 => Ok(k / 2),
        _ => Err(TorusError::NotWeylUnit),
    }
}

fn weyl_form(alg: &TorusAlgebra, m: &[i64]) -> i64 {
    let mut s = 0;
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            s += alg.p[i][j] * m[i] * m[j];
        }
    }
    s
}

fn render_terms<'a>(terms: impl Iterator<Item = (&'a TorusMonomial, &'a Scalar)>, weyl: bool) -> String {
    let parts: Vec<String> = terms
        .map(|(m, c)| {
            let gens: Vec<String> = m
                .exps
                .iter()
                .enumerate()
                .map(|(i, e)| format!("x{}^{}", i + 1, e))
                .collect();
            let gens = if weyl {
                format!("[{}]", gens.join(" "))
            } else {
                gens.join(" ")
            };
            let mut s = format!("({c}) * {gens}");
            if !m.central.is_empty() {
                let zs: Vec<String> = m
                    .central
                    .iter()
                    .enumerate()
                    .map(|(j, d)| format!("z{}^{}", j + 1, d))
                    .collect();
                s.push_str(" * ");
                s.push_str(&zs.join(" "));
            }
            s
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

impl fmt::Display for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(self.terms.iter(), false))
    }
}

impl RingElement for TorusElement {
    fn one_like(&self) -> Self {
        Self::one(&self.alg)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.try_add(other).expect("torus algebra mismatch")
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.try_add(&other.scale_int(-1)).expect("torus algebra mismatch")
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.normal_mul(other).expect("torus algebra mismatch")
    }
    fn scale_int(&self, k: Int) -> Self {
        self.scale(&self.alg.ring().int(k))
    }
}

/// `F_N`: `x_i -> x_i^N`, `z_j -> T_N(z_j)`, scalars fixed. The source torus
/// must carry unit `v^{N^2}` where `v` is the target's unit.
pub fn frobenius(x: &TorusElement, big_n: u32, target: &Arc<TorusAlgebra>) -> Result<TorusElement, TorusError> {
    let src = &x.alg;
    let nn = big_n as i64;
    if src.p != target.p || src.central != target.central || src.unit != target.unit_pow(nn * nn) {
        return Err(TorusError::FrobeniusShape);
    }
    let threaded: Vec<TorusElement> = (0..target.central)
        .map(|j| eval_chebyshev(big_n, &TorusElement::central_var(target, j)))
        .collect();
    let mut out = TorusElement::zero(target);
    for (m, c) in &x.terms {
        let mono = TorusMonomial {
            exps: m.exps.iter().map(|e| e * nn).collect(),
            central: vec![0; target.central],
        };
        let mut term = TorusElement::monomial(target, mono, c.clone());
        for (j, d) in m.central.iter().enumerate() {
            for _ in 0..*d {
                term = term.normal_mul(&threaded[j])?;
            }
        }
        out = out.try_add(&term)?;
    }
    Ok(out)
}

/// Whether `(x + y)^m = x^m + y^m` when `y x = u x y`; returns both sides.
pub fn freshman_dream(unit: Scalar, m: u32) -> Result<(bool, TorusElement, TorusElement), TorusError> {
    let alg = TorusAlgebra::two_generator(unit, 0)?;
    let x = TorusElement::generator(&alg, 0);
    let y = TorusElement::generator(&alg, 1);
    let lhs = x.add_ref(&y).pow_u(m);
    let rhs = x.pow_u(m).add_ref(&y.pow_u(m));
    Ok((lhs == rhs, lhs, rhs))
}

/// `(x+y)^N = x^N + y^N` for `yx = u xy`, `u = w^{n/N}` of exact order `N`
/// in `Z[w]/Phi_n`; every exponent `2 <= M < N` must leave cross terms.
pub fn verify_freshman_dream(n: u32, big_n: u32) -> Report {
    let mut report = Report::new("freshman-dream");
    if big_n == 0 || n % big_n != 0 {
        report.check_with(format!("n={n}/N={big_n}"), || {
            (false, format!("N={big_n}"), format!("a divisor of n={n}"))
        });
        return report;
    }
    let ring = Ring::cyclotomic(n);
    let unit = ring.omega_pow((n / big_n) as i64);
    report.check_with(format!("n={n}/N={big_n}/(x+y)^N"), || match freshman_dream(unit.clone(), big_n) {
        Ok((ok, l, r)) => (ok, l.to_string(), r.to_string()),
        Err(e) => (false, e.to_string(), String::new()),
    });
    for m in 2..big_n {
        report.check_with(format!("n={n}/N={big_n}/cross-terms-survive(M={m})"), || {
            match freshman_dream(unit.clone(), m) {
                Ok((holds, l, r)) => (!holds, l.to_string(), format!("!= {r}")),
                Err(e) => (false, e.to_string(), String::new()),
            }
        });
    }
    report
}

/// `T_N(x + x^-1 + y) = x^N + x^-N + y^N` for `yx = q^4 xy = w^8 xy`,
/// `N = ord(w^8)`.
pub fn verify_torus_chebyshev(spec: &RootSpec) -> Report {
    let mut report = Report::new("torus-chebyshev");
    let big_n = spec.big_n;
    report.check(format!("n={}/N={big_n}", spec.n), || {
        let alg = TorusAlgebra::two_generator(spec.ring().omega_pow(8), 0).unwrap();
        let x = TorusElement::generator(&alg, 0);
        let x_inv = TorusElement::generator_pow(&alg, 0, -1);
        let y = TorusElement::generator(&alg, 1);
        let lhs = eval_chebyshev(big_n, &x.add_ref(&x_inv).add_ref(&y));
        let nn = big_n as i64;
        let rhs = TorusElement::generator_pow(&alg, 0, nn)
            .add_ref(&TorusElement::generator_pow(&alg, 0, -nn))
            .add_ref(&TorusElement::generator_pow(&alg, 1, nn));
        (lhs, rhs)
    });
    report
}

fn binomial(m: u32, k: u32) -> Int {
    (0..k).fold(1 as Int, |acc, i| acc * (m - i) as Int / (i + 1) as Int)
}

/// Punctured-monogon torus: generators `w = x1`, `y = x2` with
/// `w y = q^4 y w` and a central `z`.
pub fn monogon_algebra() -> Arc<TorusAlgebra> {
    TorusAlgebra::new(vec![vec![0, 1], vec![-1, 0]], Ring::generic().omega_pow(8), 1).unwrap()
}

/// The monogon commutator `[x^m, w]` for `x = y + z`, and the expansion
/// `sum_k C(m,k) (1 - q^{4k}) y^k z^{m-k} w`.
pub fn monogon_commutator(m: u32) -> (TorusElement, TorusElement) {
    let alg = monogon_algebra();
    let g = alg.ring();
    let w = TorusElement::generator(&alg, 0);
    let y = TorusElement::generator(&alg, 1);
    let z = TorusElement::central_var(&alg, 0);
    let xm = y.add_ref(&z).pow_u(m);
    let commutator = xm.mul_ref(&w).sub_ref(&w.mul_ref(&xm));
    let mut expansion = TorusElement::zero(&alg);
    for k in 0..=m {
        let c = g.omega_terms([(0, binomial(m, k)), (8 * k as i64, -binomial(m, k))]);
        let term = y.pow_u(k).mul_ref(&z.pow_u(m - k)).mul_ref(&w).scale(&c);
        expansion = expansion.add_ref(&term);
    }
    (commutator, expansion)
}

/// Non-centrality of `x^m` in the punctured monogon, generic `q`.
pub fn verify_monogon_noncentrality(m: u32) -> Report {
    let mut report = Report::new("monogon");
    let (commutator, expansion) = monogon_commutator(m);
    report.check(format!("m={m}/x^m w - w x^m = sum C(m,k)(1-q^4k) y^k z^(m-k) w"), || {
        (commutator.clone(), expansion.clone())
    });
    report.check(format!("m={m}/w x^m - x^m w = sum C(m,k)(q^4k-1) y^k z^(m-k) w"), || {
        (commutator.scale_int(-1), expansion.scale_int(-1))
    });
    report.check_with(format!("m={m}/commutator-nonzero"), || {
        let nonzero = !commutator.is_zero();
        (nonzero == (m > 0), commutator.to_string(), if m > 0 { "!= 0".into() } else { "0".into() })
    });
    report
}

fn random_antisymmetric(rng: &mut ChaCha8Rng, r: usize) -> Vec<Vec<i64>> {
    let mut p = vec![vec![0; r]; r];
    for i in 0..r {
        for j in i + 1..r {
            let v = rng.gen_range(-2..=2);
            p[i][j] = v;
            p[j][i] = -v;
        }
    }
    p
}

fn random_torus_monomial(rng: &mut ChaCha8Rng, alg: &Arc<TorusAlgebra>) -> TorusElement {
    let mono = TorusMonomial {
        exps: (0..alg.rank()).map(|_| rng.gen_range(-2..=2)).collect(),
        central: (0..alg.central_count()).map(|_| rng.gen_range(0..=1)).collect(),
    };
    let c = alg.ring().omega_pow(rng.gen_range(-3..=3));
    TorusElement::monomial(alg, mono, c)
}

/// `F_N(xy) = F_N(x) F_N(y)` on random monomial pairs, `N = ord(w^8)`, target
/// unit `w^2`.
pub fn verify_torus_frobenius(spec: &RootSpec, samples: usize, seed: u64) -> Report {
    let mut report = Report::new("torus-frobenius");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ spec.n as u64);
    let ring = spec.ring();
    let nn = spec.big_n as i64;
    let p = random_antisymmetric(&mut rng, 3);
    let target = TorusAlgebra::new(p.clone(), ring.omega_pow(2), 1).unwrap();
    let source = TorusAlgebra::new(p, ring.omega_pow(2 * nn * nn), 1).unwrap();
    for s in 0..samples {
        let x = random_torus_monomial(&mut rng, &source);
        let y = random_torus_monomial(&mut rng, &source);
        report.check(format!("n={}/sample{s}", spec.n), || {
            let lhs = frobenius(&x.mul_ref(&y), spec.big_n, &target).unwrap();
            let rhs = frobenius(&x, spec.big_n, &target)
                .unwrap()
                .mul_ref(&frobenius(&y, spec.big_n, &target).unwrap());
            (lhs, rhs)
        });
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_gen(unit: Scalar) -> (Arc<TorusAlgebra>, TorusElement, TorusElement) {
        let alg = TorusAlgebra::two_generator(unit, 0).unwrap();
        let x = TorusElement::generator(&alg, 0);
        let y = TorusElement::generator(&alg, 1);
        (alg, x, y)
    }

    #[test]
    fn one_relation_application() {
        let g = Ring::generic();
        let v = g.omega_pow(2);
        let (alg, x1, x2) = two_gen(v.clone());
        let prod = x2.normal_mul(&x1).unwrap();
        let expected = x1.normal_mul(&x2).unwrap().scale(&v);
        assert_eq!(prod, expected);
        let inv = TorusElement::generator_pow(&alg, 0, -1);
        assert_eq!(x1.normal_mul(&inv).unwrap(), TorusElement::one(&alg));
    }

    #[test]
    fn square_of_sum() {
        // yx = v xy: (x+y)^2 = x^2 + (1+v) xy + y^2
        let g = Ring::generic();
        let v = g.omega_pow(2);
        let (_, x, y) = two_gen(v.clone());
        let lhs = x.add_ref(&y).pow_u(2);
        let cross = x.mul_ref(&y).scale(&(&g.one() + &v));
        let rhs = x.pow_u(2).add_ref(&cross).add_ref(&y.pow_u(2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rejects_bad_input() {
        let g = Ring::generic();
        assert_eq!(
            TorusAlgebra::new(vec![vec![0, 1], vec![1, 0]], g.omega_pow(2), 0).unwrap_err(),
            TorusError::NotAntisymmetric
        );
        assert!(matches!(
            TorusAlgebra::new(vec![vec![0]], g.int(2), 0),
            Err(TorusError::UnitNotInvertible(_))
        ));
        let a = TorusAlgebra::two_generator(g.omega_pow(2), 0).unwrap();
        let b = TorusAlgebra::two_generator(g.omega_pow(4), 0).unwrap();
        assert_eq!(
            TorusElement::one(&a).normal_mul(&TorusElement::one(&b)).unwrap_err(),
            TorusError::AlgebraMismatch
        );
    }

    #[test]
    fn freshman_dream_examples() {
        let c5 = Ring::cyclotomic(5);
        assert!(freshman_dream(c5.omega_pow(1), 5).unwrap().0);
        assert!(!freshman_dream(c5.omega_pow(1), 3).unwrap().0);
        assert!(freshman_dream(Ring::generic().one(), 1).unwrap().0);
        assert!(verify_freshman_dream(12, 12).all_passed());
        assert!(verify_freshman_dream(12, 4).all_passed());
    }

    #[test]
    fn torus_chebyshev_examples() {
        for n in [1, 3, 16, 5, 24] {
            let r = verify_torus_chebyshev(&RootSpec::new(n).unwrap());
            assert!(r.all_passed(), "{r}");
        }
    }

    #[test]
    fn frobenius_on_generators() {
        let spec = RootSpec::new(5).unwrap();
        let ring = spec.ring();
        let target = TorusAlgebra::new(vec![vec![0, 1], vec![-1, 0]], ring.omega_pow(2), 1).unwrap();
        let source = TorusAlgebra::new(vec![vec![0, 1], vec![-1, 0]], ring.omega_pow(50), 1).unwrap();
        let x = TorusElement::generator(&source, 0);
        assert_eq!(frobenius(&x, 5, &target).unwrap(), TorusElement::generator_pow(&target, 0, 5));
        let z = TorusElement::central_var(&source, 0);
        let tz = eval_chebyshev(5, &TorusElement::central_var(&target, 0));
        assert_eq!(frobenius(&z, 5, &target).unwrap(), tz);
        assert_eq!(
            frobenius(&TorusElement::one(&source), 5, &target).unwrap(),
            TorusElement::one(&target)
        );
        assert_eq!(frobenius(&x, 4, &target).unwrap_err(), TorusError::FrobeniusShape);
    }

    #[test]
    fn frobenius_is_multiplicative() {
        for n in [3, 5, 12, 16] {
            let r = verify_torus_frobenius(&RootSpec::new(n).unwrap(), 100, 7);
            assert!(r.all_passed(), "{r}");
        }
    }

    #[test]
    fn monogon_small() {
        let (c, e) = monogon_commutator(0);
        assert!(c.is_zero() && e.is_zero());
        // m = 1: x w - w x = (1 - q^4) y w
        let (c, _) = monogon_commutator(1);
        let alg = monogon_algebra();
        let g = alg.ring();
        let yw = TorusElement::generator(&alg, 1).mul_ref(&TorusElement::generator(&alg, 0));
        assert_eq!(c, yw.scale(&g.omega_terms([(0, 1), (8, -1)])));
        for m in 0..=6 {
            assert!(verify_monogon_noncentrality(m).all_passed());
        }
    }

    #[test]
    fn monogon_literal_orientation_has_opposite_sign() {
        // w x^m - x^m w is the negative of the displayed sum for m >= 1.
        for m in 1..=4 {
            let (commutator, expansion) = monogon_commutator(m);
            assert_ne!(commutator.scale_int(-1), expansion);
        }
    }

    #[test]
    fn weyl_monomials_are_reflection_invariant() {
        let g = Ring::generic();
        let alg = TorusAlgebra::new(
            vec![vec![0, 1, -2], vec![-1, 0, 1], vec![2, -1, 0]],
            g.omega_pow(2),
            0,
        )
        .unwrap();
        for exps in [vec![1, 1, 0], vec![2, -1, 3], vec![-1, -2, 1]] {
            let mono = TorusMonomial { exps: exps.clone(), central: vec![] };
            let wm = TorusElement::weyl_monomial(&alg, mono).unwrap();
            assert_eq!(wm.reflection().unwrap(), wm);
            let inv = TorusElement::weyl_monomial(
                &alg,
                TorusMonomial {
                    exps: exps.iter().map(|e| -e).collect(),
                    central: vec![],
                },
            )
            .unwrap();
            assert_eq!(wm.mul_ref(&inv), TorusElement::one(&alg));
        }
    }

    #[test]
    fn rendering() {
        let g = Ring::generic();
        let (alg, x, y) = two_gen(g.omega_pow(2));
        assert_eq!(y.mul_ref(&x).to_string(), "(1*w^2) * x1^1 x2^1");
        assert_eq!(TorusElement::zero(&alg).to_string(), "0");
        assert_eq!(x.render_weyl().unwrap(), "(1*w^0) * [x1^1 x2^0]");
    }
}
