//! Exact scalars: Laurent polynomials in `w = q^{1/2}` and their images in
//! the cyclotomic rings `Z[w]/Phi_n(w)`.
//!
//! All half-integer powers of `q` are integer powers of `w`, so `q = w^2`
//! throughout the crate.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

use crate::poly::IntPoly;
use crate::Int;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(RingTag, RingTag),
    #[error("element is not invertible: {0}")]
    NotInvertible(String),
    #[error("order must be positive, got {0}")]
    BadOrder(i64),
}

/// Identifies which ring a scalar lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingTag {
    Generic,
    Cyclotomic(u32),
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingTag::Generic => write!(f, "Z[w,w^-1]"),
            RingTag::Cyclotomic(n) => write!(f, "cyc({n})"),
        }
    }
}

/// Returns `Phi_n(x)`, computed by exact division of `x^n - 1` by the
/// cyclotomic polynomials of the proper divisors of `n`.
pub fn cyclotomic_polynomial(n: u32) -> IntPoly {
    assert!(n >= 1, "cyclotomic_polynomial needs n >= 1");
    static CACHE: OnceLock<Mutex<HashMap<u32, IntPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = IntPoly::monomial(1, n as usize);
    num = num.sub(&IntPoly::one());
    for d in (1..n).filter(|d| n % d == 0) {
        let phi_d = cyclotomic_polynomial(d);
        num = num
            .div_exact(&phi_d)
            .expect("x^n - 1 is divisible by Phi_d for d | n");
    }
    cache.lock().unwrap().insert(n, num.clone());
    num
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Order of `w^k` when `w` is a primitive `n`-th root of unity.
pub fn order_of_power(n: u32, k: i64) -> u32 {
    assert!(n >= 1);
    (n as u64 / gcd(n as u64, k.unsigned_abs())) as u32
}

/// `Z[w]/Phi_n(w)` with `w` a primitive `n`-th root of unity.
#[derive(Debug)]
pub struct CyclotomicRing {
    n: u32,
    modulus: IntPoly,
    degree: usize,
    // w^j reduced, for j in 0..n
    powers: Vec<Vec<Int>>,
}

impl CyclotomicRing {
    fn new(n: u32) -> Self {
        let modulus = cyclotomic_polynomial(n);
        let degree = modulus.degree().expect("Phi_n is nonzero");
        let mut ring = CyclotomicRing {
            n,
            modulus,
            degree,
            powers: Vec::with_capacity(n as usize),
        };
        for j in 0..n as usize {
            let mut v = vec![0; j + 1];
            v[j] = 1;
            let reduced = ring.reduce(v);
            ring.powers.push(reduced);
        }
        ring
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &IntPoly {
        &self.modulus
    }

    /// Reduces a coefficient vector (lowest degree first) modulo `Phi_n`.
    fn reduce(&self, mut v: Vec<Int>) -> Vec<Int> {
        let d = self.degree;
        let m = self.modulus.coeffs();
        if v.len() > d {
            for j in (d..v.len()).rev() {
                let c = v[j];
                if c != 0 {
                    v[j] = 0;
                    for i in 0..d {
                        v[j - d + i] -= c * m[i];
                    }
                }
            }
        }
        v.resize(d, 0);
        v
    }

    fn power(&self, e: i64) -> &[Int] {
        &self.powers[e.rem_euclid(self.n as i64) as usize]
    }

    /// Accumulates `sum c * w^e` and reduces once.
    fn from_exponent_terms(&self, terms: impl IntoIterator<Item = (i64, Int)>) -> Vec<Int> {
        let n = self.n as usize;
        let mut acc = vec![0 as Int; n];
        for (e, c) in terms {
            acc[e.rem_euclid(n as i64) as usize] += c;
        }
        self.reduce(acc)
    }

    fn mul(&self, x: &[Int], y: &[Int]) -> Vec<Int> {
        let d = self.degree;
        let mut prod = vec![0 as Int; 2 * d];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        self.reduce(prod)
    }
}

/// A Laurent polynomial in `w` with integer coefficients, stored densely from
/// the lowest nonzero exponent. The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    low: i64,
    coeffs: Vec<Int>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn monomial(c: Int, e: i64) -> Self {
        Self::from_dense(e, vec![c])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Int)>) -> Self {
        let terms: Vec<(i64, Int)> = terms.into_iter().collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let low = terms.iter().map(|t| t.0).min().unwrap();
        let high = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![0; (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::from_dense(low, coeffs)
    }

    fn from_dense(mut low: i64, mut coeffs: Vec<Int>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| **c == 0).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        low += lead as i64;
        Laurent { low, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero terms `(exponent, coefficient)`, exponents ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, Int)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(move |(i, c)| (self.low + i as i64, *c))
    }

    pub fn coeff(&self, e: i64) -> Int {
        let i = e - self.low;
        if i < 0 || i as usize >= self.coeffs.len() {
            0
        } else {
            self.coeffs[i as usize]
        }
    }

    /// If this is `±w^e`, returns `(±1, e)`.
    pub fn as_unit_monomial(&self) -> Option<(Int, i64)> {
        match self.coeffs.as_slice() {
            [c] if *c == 1 || *c == -1 => Some((*c, self.low)),
            _ => None,
        }
    }

    fn combine(&self, other: &Laurent, sign: Int) -> Laurent {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return Laurent::from_dense(other.low, other.coeffs.iter().map(|c| sign * c).collect());
        }
        let low = self.low.min(other.low);
        let high = (self.low + self.coeffs.len() as i64).max(other.low + other.coeffs.len() as i64);
        let mut coeffs = vec![0; (high - low) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[(other.low - low) as usize + i] += sign * c;
        }
        Laurent::from_dense(low, coeffs)
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Laurent) -> Laurent {
        self.combine(other, -1)
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        if self.is_zero() || other.is_zero() {
            return Laurent::zero();
        }
        let mut coeffs = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Laurent::from_dense(self.low + other.low, coeffs)
    }

    pub fn scale(&self, k: Int) -> Laurent {
        Laurent::from_dense(self.low, self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn shift(&self, e: i64) -> Laurent {
        if self.is_zero() {
            return Laurent::zero();
        }
        Laurent {
            low: self.low + e,
            coeffs: self.coeffs.clone(),
        }
    }

    /// `w -> w^-1`.
    pub fn bar(&self) -> Laurent {
        Laurent::from_terms(self.terms().map(|(e, c)| (-e, c)))
    }

    /// `w -> w^scale`.
    pub fn substitute(&self, scale: i64) -> Laurent {
        Laurent::from_terms(self.terms().map(|(e, c)| (e * scale, c)))
    }
}

/// Element of `CyclotomicRing`, a fully reduced coefficient vector.
#[derive(Debug, Clone)]
pub struct CycloElem {
    ring: Arc<CyclotomicRing>,
    coeffs: Vec<Int>,
}

impl CycloElem {
    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn order(&self) -> u32 {
        self.ring.n
    }
}

impl PartialEq for CycloElem {
    fn eq(&self, other: &Self) -> bool {
        self.ring.n == other.ring.n && self.coeffs == other.coeffs
    }
}

impl Eq for CycloElem {}

impl Hash for CycloElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ring.n.hash(state);
        self.coeffs.hash(state);
    }
}

/// Handle on a scalar ring. Cheap to clone.
#[derive(Debug, Clone)]
pub enum Ring {
    Generic,
    Cyclotomic(Arc<CyclotomicRing>),
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.tag() == other.tag()
    }
}

impl Eq for Ring {}

impl Ring {
    pub fn generic() -> Ring {
        Ring::Generic
    }

    /// `Z[w]/Phi_n(w)`. Rings are cached per order.
    pub fn cyclotomic(n: u32) -> Ring {
        assert!(n >= 1, "cyclotomic order must be positive");
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CyclotomicRing>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(r) = cache.lock().unwrap().get(&n) {
            return Ring::Cyclotomic(r.clone());
        }
        let ring = Arc::new(CyclotomicRing::new(n));
        cache.lock().unwrap().insert(n, ring.clone());
        Ring::Cyclotomic(ring)
    }

    pub fn tag(&self) -> RingTag {
        match self {
            Ring::Generic => RingTag::Generic,
            Ring::Cyclotomic(r) => RingTag::Cyclotomic(r.n),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, c: Int) -> Scalar {
        self.omega_terms([(0, c)])
    }

    /// `w^e`.
    pub fn omega_pow(&self, e: i64) -> Scalar {
        self.omega_terms([(e, 1)])
    }

    /// `q^e = w^(2e)`.
    pub fn q_pow(&self, e: i64) -> Scalar {
        self.omega_pow(2 * e)
    }

    /// `sum c * w^e` in this ring.
    pub fn omega_terms(&self, terms: impl IntoIterator<Item = (i64, Int)>) -> Scalar {
        match self {
            Ring::Generic => Scalar::Generic(Laurent::from_terms(terms)),
            Ring::Cyclotomic(r) => Scalar::Cyclotomic(CycloElem {
                coeffs: r.from_exponent_terms(terms),
                ring: r.clone(),
            }),
        }
    }

    /// Image of a Laurent polynomial under `w -> w` (identity on the generic
    /// ring, reduction in a cyclotomic ring).
    pub fn from_laurent(&self, x: &Laurent) -> Scalar {
        self.omega_terms(x.terms())
    }
}

/// An exact scalar. Equality is equality of canonical forms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Generic(Laurent),
    Cyclotomic(CycloElem),
}

impl Scalar {
    pub fn ring(&self) -> Ring {
        match self {
            Scalar::Generic(_) => Ring::Generic,
            Scalar::Cyclotomic(c) => Ring::Cyclotomic(c.ring.clone()),
        }
    }

    pub fn tag(&self) -> RingTag {
        match self {
            Scalar::Generic(_) => RingTag::Generic,
            Scalar::Cyclotomic(c) => RingTag::Cyclotomic(c.ring.n),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Generic(l) => l.is_zero(),
            Scalar::Cyclotomic(c) => c.coeffs.iter().all(|x| *x == 0),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.ring().one()
    }

    pub fn as_laurent(&self) -> Option<&Laurent> {
        match self {
            Scalar::Generic(l) => Some(l),
            Scalar::Cyclotomic(_) => None,
        }
    }

    fn check(&self, other: &Scalar) -> Result<(), ScalarError> {
        if self.tag() == other.tag() {
            Ok(())
        } else {
            Err(ScalarError::RingMismatch(self.tag(), other.tag()))
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Generic(a), Scalar::Generic(b)) => Scalar::Generic(a.add(b)),
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => Scalar::Cyclotomic(CycloElem {
                ring: a.ring.clone(),
                coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
            }),
            _ => unreachable!(),
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Generic(a), Scalar::Generic(b)) => Scalar::Generic(a.mul(b)),
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => Scalar::Cyclotomic(CycloElem {
                ring: a.ring.clone(),
                coeffs: a.ring.mul(&a.coeffs, &b.coeffs),
            }),
            _ => unreachable!(),
        })
    }

    pub fn neg_ref(&self) -> Scalar {
        self.scale(-1)
    }

    pub fn scale(&self, k: Int) -> Scalar {
        match self {
            Scalar::Generic(a) => Scalar::Generic(a.scale(k)),
            Scalar::Cyclotomic(a) => Scalar::Cyclotomic(CycloElem {
                ring: a.ring.clone(),
                coeffs: a.coeffs.iter().map(|c| c * k).collect(),
            }),
        }
    }

    /// Multiplies by `w^e`.
    pub fn mul_omega_pow(&self, e: i64) -> Scalar {
        match self {
            Scalar::Generic(a) => Scalar::Generic(a.shift(e)),
            Scalar::Cyclotomic(a) => {
                if e.rem_euclid(a.ring.n as i64) == 0 {
                    return self.clone();
                }
                Scalar::Cyclotomic(CycloElem {
                    ring: a.ring.clone(),
                    coeffs: a.ring.mul(&a.coeffs, a.ring.power(e)),
                })
            }
        }
    }

    /// Multiplies by `q^e = w^(2e)`.
    pub fn mul_q_pow(&self, e: i64) -> Scalar {
        self.mul_omega_pow(2 * e)
    }

    /// The bar involution `w -> w^-1`.
    pub fn bar(&self) -> Scalar {
        self.galois(-1)
    }

    /// The ring map `w -> w^k`. On a cyclotomic ring this is an automorphism
    /// when `gcd(k, n) = 1`.
    pub fn galois(&self, k: i64) -> Scalar {
        match self {
            Scalar::Generic(a) => Scalar::Generic(a.substitute(k)),
            Scalar::Cyclotomic(a) => Scalar::Cyclotomic(CycloElem {
                ring: a.ring.clone(),
                coeffs: a
                    .ring
                    .from_exponent_terms(a.coeffs.iter().enumerate().map(|(i, c)| (i as i64 * k, *c))),
            }),
        }
    }

    /// Multiplicative inverse. Generic scalars are invertible only when they
    /// are `±w^e`; cyclotomic units are inverted through their norm.
    pub fn inverse(&self) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Generic(a) => match a.as_unit_monomial() {
                Some((s, e)) => Ok(Scalar::Generic(Laurent::monomial(s, -e))),
                None => Err(ScalarError::NotInvertible(self.to_string())),
            },
            Scalar::Cyclotomic(a) => {
                let n = a.ring.n as i64;
                let mut conj = self.ring().one();
                for k in 2..n.max(2) {
                    if gcd(k as u64, n as u64) == 1 {
                        conj = &conj * &self.galois(k);
                    }
                }
                let norm = self * &conj;
                let ring = self.ring();
                if norm == ring.one() {
                    Ok(conj)
                } else if norm == ring.int(-1) {
                    Ok(conj.neg_ref())
                } else {
                    Err(ScalarError::NotInvertible(self.to_string()))
                }
            }
        }
    }

    pub fn pow(&self, e: i64) -> Result<Scalar, ScalarError> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = self.ring().one();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            k >>= 1;
            if k > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.try_add(rhs).expect("scalar ring mismatch")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.try_sub(rhs).expect("scalar ring mismatch")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.try_mul(rhs).expect("scalar ring mismatch")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

/// Root-of-unity context for `w` of order `n`.
#[derive(Debug, Clone)]
pub struct RootSpec {
    pub n: u32,
    /// `ord(w^8)`
    pub big_n: u32,
    /// `ord(w^4)`
    pub n_prime: u32,
    /// `ord(w^2)`
    pub n_double_prime: u32,
    ring: Ring,
}

impl RootSpec {
    pub fn new(n: u32) -> Result<RootSpec, ScalarError> {
        if n == 0 {
            return Err(ScalarError::BadOrder(0));
        }
        Ok(RootSpec {
            n,
            big_n: order_of_power(n, 8),
            n_prime: order_of_power(n, 4),
            n_double_prime: order_of_power(n, 2),
            ring: Ring::cyclotomic(n),
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Exponent `N^2` with `eta = w^(N^2)`.
    pub fn eta_exponent(&self) -> i64 {
        let n = self.big_n as i64;
        n * n
    }

    pub fn eta(&self) -> Scalar {
        self.ring.omega_pow(self.eta_exponent())
    }

    /// `iota`: reads a generic scalar as a Laurent polynomial in `eta` and
    /// pushes it into the cyclotomic ring through `eta = w^(N^2)`.
    pub fn iota(&self, x: &Laurent) -> Scalar {
        let s = self.eta_exponent();
        self.ring.omega_terms(x.terms().map(|(e, c)| (e * s, c)))
    }
}

/// Ring homomorphism `Z[w^±1] -> Z[w]/Phi_n` sending `w` to the primitive root.
pub fn specialize(x: &Scalar, spec: &RootSpec) -> Result<Scalar, ScalarError> {
    match x {
        Scalar::Generic(l) => Ok(spec.ring().from_laurent(l)),
        other => Err(ScalarError::RingMismatch(other.tag(), RingTag::Generic)),
    }
}

fn write_signed_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (i64, Int)>,
    mut term: impl FnMut(&mut fmt::Formatter<'_>, Int, i64) -> fmt::Result,
) -> fmt::Result {
    let mut first = true;
    for (e, c) in terms {
        if first {
            term(f, c, e)?;
            first = false;
        } else if c < 0 {
            write!(f, " - ")?;
            term(f, -c, e)?;
        } else {
            write!(f, " + ")?;
            term(f, c, e)?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Generic(l) => write_signed_terms(f, l.terms(), |f, c, e| write!(f, "{c}*w^{e}")),
            Scalar::Cyclotomic(c) => {
                write!(f, "cyc({}): ", c.ring.n)?;
                let terms = c
                    .coeffs
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| **x != 0)
                    .map(|(i, x)| (i as i64, *x));
                write_signed_terms(f, terms, |f, c, e| match e {
                    0 => write!(f, "{c}"),
                    1 => write!(f, "{c}*w"),
                    _ => write!(f, "{c}*w^{e}"),
                })
            }
        }
    }
}
