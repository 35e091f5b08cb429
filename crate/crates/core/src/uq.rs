//! Divided-power words in `U_{q^2}(sl_2)`, their coproducts, the Hopf pairing
//! with `O_{q^2}(SL(2))`, and Lusztig's Frobenius `f`.
//!
//! On a single generator `t_ij` the pairing is the matrix entry of
//!
//! ```text
//! K -> diag(q^2, q^-2)   K^-1 -> diag(q^-2, q^2)   E -> E_12   F -> E_21
//! ```
//!
//! with divided powers of order `>= 2` acting by zero. Everything else follows
//! from `<xy, u> = <x, u1><y, u2>` and `<x, uv> = <x1, u><x2, v>`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bigon::hopf::{counit, monomial_coproduct, monomial_counit};
use crate::bigon::{BigonElement, Gen, MonoKind, PbwMonomial};
use crate::frobenius::phi_bigon;
use crate::poly::RingElement;
use crate::report::Report;
use crate::scalar::{Ring, RootSpec, Scalar};
use crate::text::{Cursor, ParseError};
use crate::Int;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum UGen {
    K,
    Kinv,
    /// Divided power `E^(p)`, `p >= 1`.
    E(u32),
    /// Divided power `F^(p)`, `p >= 1`.
    F(u32),
}

impl fmt::Display for UGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UGen::K => f.write_str("K"),
            UGen::Kinv => f.write_str("K^-1"),
            UGen::E(p) => write!(f, "E({p})"),
            UGen::F(p) => write!(f, "F({p})"),
        }
    }
}

/// Ordered product of generators; empty is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct UWord(pub Vec<UGen>);

impl UWord {
    pub fn unit() -> Self {
        UWord(Vec::new())
    }

    pub fn single(g: UGen) -> Self {
        UWord(vec![g])
    }

    /// `E^(p)`, the unit when `p = 0`.
    pub fn e(p: u32) -> Self {
        if p == 0 {
            Self::unit()
        } else {
            Self::single(UGen::E(p))
        }
    }

    /// `F^(p)`, the unit when `p = 0`.
    pub fn f(p: u32) -> Self {
        if p == 0 {
            Self::unit()
        } else {
            Self::single(UGen::F(p))
        }
    }

    pub fn k_pow(e: i64) -> Self {
        let g = if e >= 0 { UGen::K } else { UGen::Kinv };
        UWord(vec![g; e.unsigned_abs() as usize])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &UWord) -> UWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        UWord(v)
    }
}

impl fmt::Display for UWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let toks: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        f.write_str(&toks.join(" "))
    }
}

/// Parses whitespace-separated `K`, `K^-1`, `E(p)`, `F(p)`; `1` or the empty
/// string is the unit.
pub fn parse_uword(s: &str) -> Result<UWord, ParseError> {
    let mut cur = Cursor::new(s);
    let mut out = Vec::new();
    if cur.eat('1') {
        cur.expect_end()?;
        return Ok(UWord::unit());
    }
    while !cur.at_end() {
        if cur.eat('K') {
            if cur.eat('^') {
                let start = cur.pos();
                match cur.exponent()? {
                    -1 => out.push(UGen::Kinv),
                    1 => out.push(UGen::K),
                    _ => {
                        return Err(ParseError {
                            pos: start,
                            msg: "only K^1 and K^-1 are tokens".into(),
                        })
                    }
                }
            } else {
                out.push(UGen::K);
            }
        } else if cur.peek() == Some('E') || cur.peek() == Some('F') {
            let is_e = cur.eat('E');
            if !is_e {
                cur.eat('F');
            }
            cur.expect('(')?;
            let start = cur.pos();
            let p = cur.natural()?;
            if p == 0 {
                return Err(ParseError {
                    pos: start,
                    msg: "divided powers start at 1".into(),
                });
            }
            cur.expect(')')?;
            out.push(if is_e { UGen::E(p) } else { UGen::F(p) });
        } else {
            return cur.error("expected K, K^-1, E(p) or F(p)");
        }
    }
    Ok(UWord(out))
}

impl FromStr for UWord {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_uword(s)
    }
}

/// `sum c * u (x) v`.
#[derive(Debug, Clone, PartialEq)]
pub struct UTensorSum(pub Vec<(Scalar, UWord, UWord)>);

impl fmt::Display for UTensorSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.0.iter().map(|(c, u, v)| format!("({c})*{u} (x) {v}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `Delta(K^{+-1})` group-like, and
///
/// ```text
/// Delta(E^(p)) = sum_i q^{2i(p-i)}  E^(p-i) (x) E^(i) K^(p-i)
/// Delta(F^(p)) = sum_i q^{-2i(p-i)} F^(i) K^-(p-i) (x) F^(p-i)
/// ```
pub fn u_coproduct(ring: &Ring, g: UGen) -> UTensorSum {
    let one = ring.one();
    match g {
        UGen::K | UGen::Kinv => UTensorSum(vec![(one, UWord::single(g), UWord::single(g))]),
        UGen::E(p) => UTensorSum(
            (0..=p)
                .map(|i| {
                    let e = 2 * (i as i64) * (p - i) as i64;
                    let right = UWord::e(i).concat(&UWord::k_pow((p - i) as i64));
                    (ring.q_pow(e), UWord::e(p - i), right)
                })
                .collect(),
        ),
        UGen::F(p) => f_coproduct(ring, p, 1),
    }
}

/// `sum_i q^{2 sign i(p-i)} F(i) K^-(p-i) (x) F(p-i)`. Only `sign = 1` is
/// compatible with `F(p) = F^p / [p]!`; `sign = -1` is kept to exhibit that.
pub fn f_coproduct(ring: &Ring, p: u32, sign: i64) -> UTensorSum {
    UTensorSum(
        (0..=p)
            .map(|i| {
                let e = 2 * sign * (i as i64) * (p - i) as i64;
                let left = UWord::f(i).concat(&UWord::k_pow(-((p - i) as i64)));
                (ring.q_pow(e), left, UWord::f(p - i))
            })
            .collect(),
    )
}

/// `[p]!` in `q^2`.
fn qfactorial_q2(ring: &Ring, p: u32) -> Scalar {
    (1..=p as i64).fold(ring.one(), |acc, k| &acc * &ring.omega_terms((0..k).map(|i| (4 * (k - 1 - 2 * i), 1))))
}

/// Coproduct of a word, as the product of the letters' coproducts.
pub fn word_coproduct(ring: &Ring, u: &UWord) -> UTensorSum {
    let mut acc = vec![(ring.one(), UWord::unit(), UWord::unit())];
    for g in &u.0 {
        let dg = u_coproduct(ring, *g);
        let mut next = Vec::with_capacity(acc.len() * dg.0.len());
        for (c1, l1, r1) in &acc {
            for (c2, l2, r2) in &dg.0 {
                next.push((c1 * c2, l1.concat(l2), r1.concat(r2)));
            }
        }
        acc = next;
    }
    UTensorSum(acc)
}

pub fn u_counit(ring: &Ring, u: &UWord) -> Scalar {
    if u.0.iter().all(|g| matches!(g, UGen::K | UGen::Kinv)) {
        ring.one()
    } else {
        ring.zero()
    }
}

/// `<t_ij, g>` for a single generator on each side.
fn generator_pairing(ring: &Ring, x: Gen, g: UGen) -> Scalar {
    let (i, j) = x.index();
    match g {
        UGen::K if i == j => ring.q_pow(if i == 0 { 2 } else { -2 }),
        UGen::Kinv if i == j => ring.q_pow(if i == 0 { -2 } else { 2 }),
        UGen::E(1) if (i, j) == (0, 1) => ring.one(),
        UGen::F(1) if (i, j) == (1, 0) => ring.one(),
        _ => ring.zero(),
    }
}

/// Which side the recursion splits first when both could be split.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitStrategy {
    /// Split the U-word with bigon coproducts whenever it has two letters.
    WordFirst,
    /// Split the bigon monomial with U coproducts whenever it has degree 2.
    MonomialFirst,
}

/// Slot order in `<xy, u>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairingConvention {
    /// `<xy, u> = sum <x, u1><y, u2>`.
    Standard,
    /// `<xy, u> = sum <x, u2><y, u1>`.
    Mirrored,
}

/// Memoized pairing on `(basis monomial, word)`.
pub struct PairingEngine {
    ring: Ring,
    strategy: SplitStrategy,
    convention: PairingConvention,
    memo: HashMap<(PbwMonomial, UWord), Scalar>,
}

fn split_first(m: &PbwMonomial) -> (Gen, PbwMonomial) {
    let g = m.word()[0];
    let (b, c) = (m.b(), m.c());
    let rest = match m.kind() {
        MonoKind::A if b > 0 => PbwMonomial::a_type(b - 1, c, m.a()),
        MonoKind::A if c > 0 => PbwMonomial::a_type(0, c - 1, m.a()),
        MonoKind::A => PbwMonomial::a_type(0, 0, m.a() - 1),
        MonoKind::D if b > 0 => PbwMonomial::d_type(b - 1, c, m.d()),
        MonoKind::D if c > 0 => PbwMonomial::d_type(0, c - 1, m.d()),
        MonoKind::D => PbwMonomial::d_type(0, 0, m.d() - 1),
    };
    (g, rest)
}

/// Necessary conditions for `<m, u> != 0`: every `E(p)`, `F(p)` fits in the
/// degree, and `sum p(E) - sum p(F) = #b - #c` (the weight carried by `m`).
fn weight_compatible(m: &PbwMonomial, u: &UWord) -> bool {
    let mut weight = 0i64;
    for g in &u.0 {
        match g {
            UGen::E(p) | UGen::F(p) if *p > m.degree() => return false,
            UGen::E(p) => weight += *p as i64,
            UGen::F(p) => weight -= *p as i64,
            _ => {}
        }
    }
    weight == m.b() as i64 - m.c() as i64
}

fn divided_index(g: &UGen) -> u32 {
    match g {
        UGen::E(p) | UGen::F(p) => *p,
        _ => 0,
    }
}

/// Appends `v` to `u`, cancelling adjacent `K K^-1` pairs.
fn concat_reduced(u: &UWord, v: &UWord) -> UWord {
    let mut out = u.0.clone();
    for g in &v.0 {
        match (out.last(), g) {
            (Some(UGen::K), UGen::Kinv) | (Some(UGen::Kinv), UGen::K) => {
                out.pop();
            }
            _ => out.push(*g),
        }
    }
    UWord(out)
}

/// Terms `(c, u_head, u_rest)` of `Delta(u)` whose head part can pair
/// nonzero with a single generator: every letter there has divided-power
/// index `<= 1`. Head is the left leg under `Standard`, the right under
/// `Mirrored`.
fn head_splits(ring: &Ring, u: &UWord, convention: PairingConvention) -> Vec<(Scalar, UWord, UWord)> {
    let mut acc = vec![(ring.one(), UWord::unit(), UWord::unit())];
    for g in &u.0 {
        let mut next = Vec::new();
        for (c2, l2, r2) in u_coproduct(ring, *g).0 {
            let (h2, t2) = match convention {
                PairingConvention::Standard => (l2, r2),
                PairingConvention::Mirrored => (r2, l2),
            };
            if h2.0.iter().any(|x| divided_index(x) > 1) {
                continue;
            }
            for (c1, h1, t1) in &acc {
                next.push((c1 * &c2, h1.concat(&h2), concat_reduced(t1, &t2)));
            }
        }
        acc = next;
    }
    acc
}

impl PairingEngine {
    pub fn new(ring: &Ring, strategy: SplitStrategy) -> Self {
        Self::with_convention(ring, strategy, PairingConvention::Standard)
    }

    pub fn with_convention(ring: &Ring, strategy: SplitStrategy, convention: PairingConvention) -> Self {
        PairingEngine {
            ring: ring.clone(),
            strategy,
            convention,
            memo: HashMap::new(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn pair(&mut self, x: &BigonElement, u: &UWord) -> Scalar {
        let mut acc = self.ring.zero();
        for (m, c) in x.terms() {
            let v = self.pair_monomial(m, u);
            acc = &acc + &(c * &v);
        }
        acc
    }

    pub fn pair_monomial(&mut self, m: &PbwMonomial, u: &UWord) -> Scalar {
        if u.is_empty() {
            return monomial_counit(&self.ring, m);
        }
        let deg = m.degree();
        if deg == 0 {
            return u_counit(&self.ring, u);
        }
        if deg == 1 && u.len() == 1 {
            return generator_pairing(&self.ring, m.word()[0], u.0[0]);
        }
        if !weight_compatible(m, u) {
            return self.ring.zero();
        }
        let key = (*m, u.clone());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let split_word = match self.strategy {
            SplitStrategy::WordFirst => u.len() >= 2,
            SplitStrategy::MonomialFirst => deg == 1,
        };
        let v = if split_word {
            self.split_on_word(m, u)
        } else {
            self.split_on_monomial(m, u)
        };
        self.memo.insert(key, v.clone());
        v
    }

    /// `<x, g v> = sum <x1, g><x2, v>`.
    fn split_on_word(&mut self, m: &PbwMonomial, u: &UWord) -> Scalar {
        let head = UWord::single(u.0[0]);
        let tail = UWord(u.0[1..].to_vec());
        let mut acc = self.ring.zero();
        for ((m1, m2), c) in monomial_coproduct(&self.ring, m).terms() {
            let l = self.pair_monomial(m1, &head);
            if l.is_zero() {
                continue;
            }
            let r = self.pair_monomial(m2, &tail);
            acc = &acc + &(&(c * &l) * &r);
        }
        acc
    }

    /// `<g y, u> = sum <g, u1><y, u2>` (slot order per convention).
    fn split_on_monomial(&mut self, m: &PbwMonomial, u: &UWord) -> Scalar {
        let (g, rest) = split_first(m);
        let head = PbwMonomial::generator(g);
        let mut acc = self.ring.zero();
        for (c, for_head, for_rest) in head_splits(&self.ring, u, self.convention) {
            let l = self.pair_monomial(&head, &for_head);
            if l.is_zero() {
                continue;
            }
            let r = self.pair_monomial(&rest, &for_rest);
            acc = &acc + &(&(&c * &l) * &r);
        }
        acc
    }
}

/// `<x, u>` with the default strategy.
pub fn hopf_pair(x: &BigonElement, u: &UWord) -> Scalar {
    PairingEngine::new(x.ring(), SplitStrategy::MonomialFirst).pair(x, u)
}

/// `R_u(x) = sum <x1, u> x2`, computed from the twisted rule
/// `R_g(xy) = sum R_{g1}(x) R_{g2}(y)` and `R_{uv} = R_v R_u`. Gives a third
/// route to the pairing: `<x, u> = eps(R_u(x))`.
pub fn right_action(x: &BigonElement, u: &UWord) -> BigonElement {
    let mut cur = x.clone();
    for g in &u.0 {
        cur = cur.map_monomials(|m| action_monomial(x.ring(), m, *g));
    }
    cur
}

fn action_generator(ring: &Ring, x: Gen, g: UGen) -> BigonElement {
    let (i, j) = x.index();
    let mut out = BigonElement::zero(ring);
    for k in 0..2 {
        let gk = Gen::from_index(i, k);
        let c = generator_pairing(ring, gk, g);
        if !c.is_zero() {
            out = out.add_ref(&BigonElement::monomial(ring, PbwMonomial::generator(Gen::from_index(k, j)), c));
        }
    }
    out
}

fn action_monomial(ring: &Ring, m: &PbwMonomial, g: UGen) -> BigonElement {
    match m.degree() {
        0 => BigonElement::scalar(ring, u_counit(ring, &UWord::single(g))),
        1 => action_generator(ring, m.word()[0], g),
        _ => {
            let (head, rest) = split_first(m);
            let head = BigonElement::generator(ring, head);
            let rest = BigonElement::monomial(ring, rest, ring.one());
            let mut out = BigonElement::zero(ring);
            for (c, u1, u2) in u_coproduct(ring, g).0 {
                let l = right_action(&head, &u1);
                if l.is_zero() {
                    continue;
                }
                let r = right_action(&rest, &u2);
                out = out.add_ref(&l.mul_ref(&r).scale(&c));
            }
            out
        }
    }
}

/// Lusztig's `f` on a word: `K^{+-1} -> (-1)^{N+1} K^{+-1}`, `E^(p) -> E^(p/N)`
/// when `N | p` and zero otherwise, `F` likewise. The sign is returned as an
/// integer; `None` is zero.
pub fn lusztig_frobenius(u: &UWord, spec: &RootSpec) -> Option<(Int, UWord)> {
    let n = spec.big_n;
    let k_sign: Int = if (n + 1) % 2 == 0 { 1 } else { -1 };
    let mut sign: Int = 1;
    let mut out = Vec::with_capacity(u.len());
    for g in &u.0 {
        match *g {
            UGen::K | UGen::Kinv => {
                sign *= k_sign;
                out.push(*g);
            }
            UGen::E(p) if p % n == 0 => out.push(UGen::E(p / n)),
            UGen::F(p) if p % n == 0 => out.push(UGen::F(p / n)),
            _ => return None,
        }
    }
    Some((sign, UWord(out)))
}

/// How the sign `(-1)^{N+1}` attached to `K^{+-1}` by the Frobenius map
/// enters the pairing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KSign {
    /// As a scalar factor on the image word.
    Scalar,
    /// As a central group-like `s` with `<x, s u> = (-1)^{deg x} <x, u>`;
    /// agrees with `Scalar` on odd-degree monomials.
    Central,
}

/// Both sides of `<Phi(x), u> = iota(<x, f(u)>)` for a basis monomial.
pub struct DualSides<'a> {
    spec: &'a RootSpec,
    outer: PairingEngine,
    inner: PairingEngine,
}

impl<'a> DualSides<'a> {
    pub fn new(spec: &'a RootSpec) -> Self {
        DualSides {
            spec,
            outer: PairingEngine::new(spec.ring(), SplitStrategy::MonomialFirst),
            inner: PairingEngine::new(&Ring::generic(), SplitStrategy::MonomialFirst),
        }
    }

    pub fn sides(&mut self, m: &PbwMonomial, u: &UWord, mode: KSign) -> (Scalar, Scalar) {
        let generic = Ring::generic();
        let x = BigonElement::monomial(&generic, *m, generic.one());
        let lhs = self.outer.pair(&phi_bigon(&x, self.spec).expect("generic input"), u);
        let rhs = match lusztig_frobenius(u, self.spec) {
            None => self.spec.ring().zero(),
            Some((sign, fu)) => {
                let sign = if mode == KSign::Central && m.degree() % 2 == 0 { 1 } else { sign };
                let v = self.inner.pair(&x, &fu);
                self.spec.iota(v.as_laurent().expect("generic pairing")).scale(sign)
            }
        };
        (lhs, rhs)
    }
}

/// Divided-power tables for powers of a single generator.
pub fn verify_pairing_tables(m_max: u32, p_max: u32) -> Report {
    let mut report = Report::new("pairing-tables");
    let ring = Ring::generic();
    let mut engine = PairingEngine::new(&ring, SplitStrategy::MonomialFirst);
    let delta = |b: bool| if b { ring.one() } else { ring.zero() };
    let pw = |g: Gen, m: u32| BigonElement::from_word(&ring.one(), &vec![g; m as usize]);
    for m in 1..=m_max {
        let k = UWord::single(UGen::K);
        for (g, expected) in [
            (Gen::A, ring.q_pow(2 * m as i64)),
            (Gen::D, ring.q_pow(-2 * m as i64)),
            (Gen::B, ring.zero()),
            (Gen::C, ring.zero()),
        ] {
            report.check(format!("<{}^{m}, K>", g.symbol()), || (engine.pair(&pw(g, m), &k), expected));
        }
        for p in 0..=p_max {
            let e = UWord::e(p);
            let f = UWord::f(p);
            for (g, on_e, on_f) in [
                (Gen::A, p == 0, p == 0),
                (Gen::D, p == 0, p == 0),
                (Gen::B, m == p, false),
                (Gen::C, false, m == p),
            ] {
                report.check(format!("<{}^{m}, E({p})>", g.symbol()), || {
                    (engine.pair(&pw(g, m), &e), delta(on_e))
                });
                report.check(format!("<{}^{m}, F({p})>", g.symbol()), || {
                    (engine.pair(&pw(g, m), &f), delta(on_f))
                });
            }
        }
    }
    report
}

fn random_uword(rng: &mut ChaCha8Rng, max_len: usize, big_n: u32) -> UWord {
    let len = rng.gen_range(0..=max_len);
    let p = |rng: &mut ChaCha8Rng| match rng.gen_range(0..4) {
        0 => 1,
        1 => big_n,
        2 => 2 * big_n,
        _ => rng.gen_range(1..=2 * big_n),
    };
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        let pick = rng.gen_range(0..4);
        out.push(match pick {
            0 => UGen::K,
            1 => UGen::Kinv,
            2 => UGen::E(p(rng)),
            _ => UGen::F(p(rng)),
        });
    }
    UWord(out)
}

/// `<Phi(x), u>` at the root of unity against `iota(<x, f(u)>)` in the
/// eta-ring: generator pairs, then random monomials of degree
/// `<= degree_bound` against random words of length `<= 3`.
pub fn verify_dual_frobenius(spec: &RootSpec, degree_bound: u32, samples: usize, seed: u64) -> Report {
    let mut report = Report::new("dual-frobenius");
    let mut sides = DualSides::new(spec);
    let n = spec.big_n;
    let mut run = |report: &mut Report, id: String, m: PbwMonomial, u: UWord| {
        report.check(id, || sides.sides(&m, &u, KSign::Central));
    };
    let gens = [
        UWord::single(UGen::K),
        UWord::single(UGen::Kinv),
        UWord::e(1),
        UWord::f(1),
        UWord::e(n),
        UWord::f(n),
        UWord::unit(),
    ];
    let tag = spec.n;
    for g in Gen::ALL {
        for u in &gens {
            run(&mut report, format!("n={tag}/<Phi({}), {u}>", g.symbol()), PbwMonomial::generator(g), u.clone());
        }
    }
    run(&mut report, format!("n={tag}/<Phi(1), 1>"), PbwMonomial::ONE, UWord::unit());
    let monos = PbwMonomial::all_up_to(degree_bound);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((spec.n as u64) << 32));
    for s in 0..samples {
        let m = monos[rng.gen_range(0..monos.len())];
        let u = random_uword(&mut rng, 3, n);
        run(&mut report, format!("n={tag}/sample{s}/<Phi({m}), {u}>"), m, u);
    }
    report
}

/// Agreement of the two split strategies and the action route, plus
/// `<x, K K^-1> = eps(x)` and integrality in `q`.
pub fn verify_pairing_consistency(ring: &Ring, degree_bound: u32, samples: usize, seed: u64) -> Report {
    let mut report = Report::new("pairing-consistency");
    let mut word_first = PairingEngine::new(ring, SplitStrategy::WordFirst);
    let mut mono_first = PairingEngine::new(ring, SplitStrategy::MonomialFirst);
    let monos = PbwMonomial::all_up_to(degree_bound);
    let kk = UWord(vec![UGen::K, UGen::Kinv]);
    for m in &monos {
        let x = BigonElement::monomial(ring, *m, ring.one());
        report.check(format!("<{m}, K K^-1> = eps"), || (mono_first.pair(&x, &kk), counit(&x)));
        let p = m.degree();
        if p >= 2 {
            let fact = qfactorial_q2(ring, p);
            for (letter, divided) in [(UGen::E(1), UWord::e(p)), (UGen::F(1), UWord::f(p))] {
                let power = UWord(vec![letter; p as usize]);
                report.check(format!("<{m}, {power}> = [{p}]! <{m}, {divided}>"), || {
                    (word_first.pair(&x, &power), &fact * &mono_first.pair(&x, &divided))
                });
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for s in 0..samples {
        let m = monos[rng.gen_range(0..monos.len())];
        let u = random_uword(&mut rng, 3, 2);
        let x = BigonElement::monomial(ring, m, ring.one());
        report.check_with(format!("sample{s}/<{m}, {u}>"), || {
            let a = word_first.pair(&x, &u);
            let b = mono_first.pair(&x, &u);
            let c = counit(&right_action(&x, &u));
            let integral = match a.as_laurent() {
                Some(l) => l.terms().all(|(e, _)| e % 2 == 0),
                None => true,
            };
            let ok = a == b && b == c && integral;
            (ok, format!("{a} | {b} | {c}"), format!("integral={integral}"))
        });
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g() -> Ring {
        Ring::generic()
    }

    #[test]
    fn scalar_k_sign_breaks_duality_at_even_n() {
        // N = 2 and N = 4: -K is not group-like, so <Phi(d^2), K> sees no sign
        for n in [16, 32] {
            let spec = RootSpec::new(n).unwrap();
            let mut sides = DualSides::new(&spec);
            let d2 = PbwMonomial::d_type(0, 0, 2);
            let k = UWord::single(UGen::K);
            let (l, r) = sides.sides(&d2, &k, KSign::Scalar);
            assert_eq!(l, r.neg_ref());
            let (l, r) = sides.sides(&d2, &k, KSign::Central);
            assert_eq!(l, r);
            let d = PbwMonomial::generator(Gen::D);
            let (l, r) = sides.sides(&d, &k, KSign::Scalar);
            assert_eq!(l, r);
        }
    }

    #[test]
    fn central_sign_duality_on_all_small_monomials() {
        for n in [3, 4, 8, 12, 16, 24, 32] {
            let spec = RootSpec::new(n).unwrap();
            let big_n = spec.big_n;
            let mut sides = DualSides::new(&spec);
            let words = [
                UWord(vec![UGen::K, UGen::K]),
                UWord(vec![UGen::Kinv, UGen::E(big_n)]),
                UWord(vec![UGen::E(big_n), UGen::K, UGen::F(big_n)]),
                UWord(vec![UGen::F(2 * big_n), UGen::Kinv]),
            ];
            for m in PbwMonomial::all_up_to(3) {
                for u in &words {
                    let (l, r) = sides.sides(&m, u, KSign::Central);
                    assert_eq!(l, r, "n={n} <Phi({m}), {u}>");
                }
            }
        }
    }

    #[test]
    fn negative_f_exponent_breaks_divided_powers() {
        let r = g();
        let mut eng = PairingEngine::new(&r, SplitStrategy::MonomialFirst);
        let c = BigonElement::generator(&r, Gen::C);
        let split = |eng: &mut PairingEngine, sign: i64| {
            f_coproduct(&r, 2, sign)
                .0
                .iter()
                .fold(r.zero(), |acc, (k, u, v)| &acc + &(k * &(&eng.pair(&c, u) * &eng.pair(&c, v))))
        };
        let c2 = c.mul_ref(&c);
        let by_word = eng.pair(&c2, &UWord(vec![UGen::F(1), UGen::F(1)]));
        let fact = qfactorial_q2(&r, 2);
        assert_eq!(split(&mut eng, 1), r.one());
        assert_eq!(&fact * &split(&mut eng, 1), by_word);
        assert_eq!(split(&mut eng, -1), r.q_pow(-4));
        assert_ne!(&fact * &split(&mut eng, -1), by_word);
    }

    #[test]
    fn coproduct_examples() {
        let r = g();
        assert_eq!(
            u_coproduct(&r, UGen::K),
            UTensorSum(vec![(r.one(), UWord::single(UGen::K), UWord::single(UGen::K))])
        );
        let de = u_coproduct(&r, UGen::E(1));
        assert_eq!(
            de.0,
            vec![
                (r.one(), UWord::e(1), UWord::single(UGen::K)),
                (r.one(), UWord::unit(), UWord::e(1)),
            ]
        );
        let df = u_coproduct(&r, UGen::F(1));
        assert_eq!(
            df.0,
            vec![
                (r.one(), UWord::single(UGen::Kinv), UWord::f(1)),
                (r.one(), UWord::f(1), UWord::unit()),
            ]
        );
    }

    #[test]
    fn pairing_examples() {
        let r = g();
        let a = BigonElement::generator(&r, Gen::A);
        let k = UWord::single(UGen::K);
        assert_eq!(hopf_pair(&a, &k), r.q_pow(2));
        let b2 = BigonElement::from_word(&r.one(), &[Gen::B, Gen::B]);
        assert!(hopf_pair(&b2, &UWord::e(2)).is_one());
        assert!(hopf_pair(&b2, &UWord::e(1)).is_zero());
        let a3 = BigonElement::from_word(&r.one(), &[Gen::A; 3]);
        assert_eq!(hopf_pair(&a3, &k), r.q_pow(6));
        assert!(hopf_pair(&BigonElement::generator(&r, Gen::B), &UWord::unit()).is_zero());
        assert!(hopf_pair(&BigonElement::one(&r), &UWord::unit()).is_one());
    }

    #[test]
    fn tables() {
        let rep = verify_pairing_tables(6, 7);
        assert!(rep.all_passed(), "{rep}");
    }

    #[test]
    fn strategies_agree() {
        let rep = verify_pairing_consistency(&g(), 4, 300, 1);
        assert!(rep.all_passed(), "{rep}");
        let rep = verify_pairing_consistency(&Ring::cyclotomic(9), 3, 60, 2);
        assert!(rep.all_passed(), "{rep}");
    }

    #[test]
    fn mirrored_convention_disagrees_with_word_splitting() {
        let r = g();
        let mut mirrored = PairingEngine::with_convention(&r, SplitStrategy::MonomialFirst, PairingConvention::Mirrored);
        let mut word_first = PairingEngine::new(&r, SplitStrategy::WordFirst);
        let monos = PbwMonomial::all_up_to(2);
        let words = [
            UWord(vec![UGen::E(1), UGen::K]),
            UWord(vec![UGen::K, UGen::E(1)]),
            UWord(vec![UGen::F(1), UGen::E(1)]),
        ];
        let mut disagreements = 0;
        for m in &monos {
            let x = BigonElement::monomial(&r, *m, r.one());
            for u in &words {
                if mirrored.pair(&x, u) != word_first.pair(&x, u) {
                    disagreements += 1;
                }
            }
        }
        assert!(disagreements > 0);
    }

    #[test]
    fn lusztig_examples() {
        let s = RootSpec::new(5).unwrap();
        assert_eq!(lusztig_frobenius(&UWord::e(5), &s), Some((1, UWord::e(1))));
        assert_eq!(lusztig_frobenius(&UWord::e(1), &s), None);
        assert_eq!(lusztig_frobenius(&UWord::single(UGen::K), &s), Some((1, UWord::single(UGen::K))));
        let s16 = RootSpec::new(16).unwrap();
        assert_eq!(lusztig_frobenius(&UWord::single(UGen::K), &s16), Some((-1, UWord::single(UGen::K))));
        assert_eq!(lusztig_frobenius(&UWord::unit(), &s16), Some((1, UWord::unit())));
    }

    #[test]
    fn dual_frobenius_small_orders() {
        for n in [1, 3, 5, 8, 12, 16] {
            let rep = verify_dual_frobenius(&RootSpec::new(n).unwrap(), 2, 40, 3);
            assert!(rep.all_passed(), "{rep}");
        }
    }

    #[test]
    fn uword_text() {
        let u = UWord(vec![UGen::K, UGen::Kinv, UGen::E(3), UGen::F(1)]);
        assert_eq!(u.to_string(), "K K^-1 E(3) F(1)");
        assert_eq!(parse_uword(&u.to_string()).unwrap(), u);
        assert_eq!(parse_uword("1").unwrap(), UWord::unit());
        assert_eq!(parse_uword("  ").unwrap(), UWord::unit());
        assert!(parse_uword("E(0)").is_err());
        assert!(parse_uword("K^2").is_err());
        assert!(parse_uword("G").is_err());
        assert!(parse_uword("E(").is_err());
    }
}
