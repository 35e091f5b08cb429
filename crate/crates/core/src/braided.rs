//! Braided tensor square `O (x)_ O` of the bigon algebra: the triangle
//! algebra, with multiplication twisted by the co-R-matrix.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bigon::hopf::monomial_coproduct;
use crate::bigon::rho::RhoEngine;
use crate::bigon::{monomial_product, parse_monomial, unify_ring, BigonElement, Gen, PbwMonomial};
use crate::frobenius::phi_bigon;
use crate::report::Report;
use crate::scalar::{Ring, RootSpec, Scalar, ScalarError};
use crate::text::{Cursor, ParseError};

/// Which coproduct legs feed the co-R-matrix when `y` (left factor's right
/// slot) passes `x~` (right factor's left slot).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BraidSlots {
    /// `rho(y_1 (x) x~_1) (x x~_2) (x) (y_2 y~)`.
    FirstLegs,
    /// `rho(y_2 (x) x~_2) (x x~_1) (x) (y_1 y~)`.
    SecondLegs,
    /// `rho(x~_1 (x) y_1) (x x~_2) (x) (y_2 y~)`.
    FirstLegsSwapped,
    /// `rho(x~_2 (x) y_2) (x x~_1) (x) (y_1 y~)`.
    SecondLegsSwapped,
}

impl BraidSlots {
    /// The right regular coaction: associative and compatible with `Phi (x) Phi`.
    pub const STANDARD: BraidSlots = BraidSlots::SecondLegs;

    pub const ALL: [BraidSlots; 4] = [
        BraidSlots::FirstLegs,
        BraidSlots::SecondLegs,
        BraidSlots::FirstLegsSwapped,
        BraidSlots::SecondLegsSwapped,
    ];
}

/// Sum of `c * (x (x) y)` over PBW monomial pairs, no zero coefficients.
#[derive(Debug, Clone)]
pub struct BraidedElement {
    ring: Ring,
    terms: BTreeMap<(PbwMonomial, PbwMonomial), Scalar>,
}

impl PartialEq for BraidedElement {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl BraidedElement {
    pub fn zero(ring: &Ring) -> Self {
        BraidedElement {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::term(ring, PbwMonomial::ONE, PbwMonomial::ONE, ring.one())
    }

    pub fn term(ring: &Ring, x: PbwMonomial, y: PbwMonomial, c: Scalar) -> Self {
        let mut out = Self::zero(ring);
        out.add_term(x, y, c);
        out
    }

    /// `x (x) y`.
    pub fn pure(x: &BigonElement, y: &BigonElement) -> Result<Self, ScalarError> {
        if x.ring() != y.ring() {
            return Err(ScalarError::RingMismatch(x.ring().tag(), y.ring().tag()));
        }
        let mut out = Self::zero(x.ring());
        for (mx, cx) in x.terms() {
            for (my, cy) in y.terms() {
                out.add_term(*mx, *my, cx * cy);
            }
        }
        Ok(out)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<(PbwMonomial, PbwMonomial), Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, x: PbwMonomial, y: PbwMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (x, y);
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

    pub fn try_add(&self, other: &Self) -> Result<Self, ScalarError> {
        if self.ring != other.ring {
            return Err(ScalarError::RingMismatch(self.ring.tag(), other.ring.tag()));
        }
        let mut out = self.clone();
        for ((x, y), c) in &other.terms {
            out.add_term(*x, *y, c.clone());
        }
        Ok(out)
    }

    /// `(x (x) y)(x' (x) y') = xx' (x) yy'`, ignoring the braiding.
    pub fn componentwise_mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.ring);
        for ((x1, y1), c1) in &self.terms {
            for ((x2, y2), c2) in &other.terms {
                let c = c1 * c2;
                accumulate(&mut out, &self.ring, x1, x2, y1, y2, &c);
            }
        }
        out
    }
}

fn accumulate(out: &mut BraidedElement, ring: &Ring, x: &PbwMonomial, x2: &PbwMonomial, y: &PbwMonomial, y2: &PbwMonomial, c: &Scalar) {
    let left = monomial_product(ring, x, x2);
    let right = monomial_product(ring, y, y2);
    for (ml, cl) in &left {
        let cl = c * cl;
        for (mr, cr) in &right {
            out.add_term(*ml, *mr, &cl * cr);
        }
    }
}

impl fmt::Display for BraidedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((x, y), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*({x}) (x) ({y})")?;
        }
        Ok(())
    }
}

/// Parses `(scalar)*(b^i c^j a^k) (x) (b^i c^j d^l) + ...`; `0` is the empty
/// sum.
pub fn parse_braided(s: &str, default_ring: &Ring) -> Result<BraidedElement, ParseError> {
    let mut cur = Cursor::new(s);
    if cur.eat_str("0") && cur.at_end() {
        return Ok(BraidedElement::zero(default_ring));
    }
    let mut cur = Cursor::new(s);
    let mut ring: Option<Ring> = None;
    let mut terms = Vec::new();
    loop {
        cur.expect('(')?;
        let c = cur.scalar()?;
        cur.expect(')')?;
        cur.expect('*')?;
        unify_ring(&cur, &mut ring, &c)?;
        cur.expect('(')?;
        let x = parse_monomial(&mut cur)?;
        cur.expect(')')?;
        cur.expect_str("(x)")?;
        cur.expect('(')?;
        let y = parse_monomial(&mut cur)?;
        cur.expect(')')?;
        terms.push((x, y, c));
        if cur.at_end() {
            break;
        }
        cur.expect('+')?;
    }
    let ring = ring.unwrap_or_else(|| default_ring.clone());
    let mut out = BraidedElement::zero(&ring);
    for (x, y, c) in terms {
        out.add_term(x, y, c);
    }
    Ok(out)
}

impl FromStr for BraidedElement {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_braided(s, &Ring::generic())
    }
}

/// Braided multiplication with a cached co-R-matrix on monomial pairs.
pub struct BraidedProduct {
    ring: Ring,
    slots: BraidSlots,
    engine: RhoEngine,
    rho_memo: HashMap<(PbwMonomial, PbwMonomial), Scalar>,
}

impl BraidedProduct {
    pub fn new(ring: &Ring, slots: BraidSlots) -> Self {
        BraidedProduct {
            ring: ring.clone(),
            slots,
            engine: RhoEngine::new(ring),
            rho_memo: HashMap::new(),
        }
    }

    fn rho(&mut self, u: &PbwMonomial, v: &PbwMonomial) -> Scalar {
        if let Some(s) = self.rho_memo.get(&(*u, *v)) {
            return s.clone();
        }
        let x = BigonElement::monomial(&self.ring, *u, self.ring.one());
        let y = BigonElement::monomial(&self.ring, *v, self.ring.one());
        let s = self.engine.rho(&x, &y).expect("same ring");
        self.rho_memo.insert((*u, *v), s.clone());
        s
    }

    pub fn multiply(&mut self, p: &BraidedElement, q: &BraidedElement) -> Result<BraidedElement, ScalarError> {
        if p.ring != self.ring || q.ring != self.ring {
            return Err(ScalarError::RingMismatch(p.ring.tag(), q.ring.tag()));
        }
        let ring = self.ring.clone();
        let mut out = BraidedElement::zero(&ring);
        for ((x, y), c1) in &p.terms {
            let dy = monomial_coproduct(&ring, y);
            for ((xt, yt), c2) in &q.terms {
                let dxt = monomial_coproduct(&ring, xt);
                let c = c1 * c2;
                for ((y1, y2), cy) in dy.terms() {
                    for ((x1, x2), cx) in dxt.terms() {
                        let (r, x_keep, y_keep) = match self.slots {
                            BraidSlots::FirstLegs => (self.rho(y1, x1), x2, y2),
                            BraidSlots::SecondLegs => (self.rho(y2, x2), x1, y1),
                            BraidSlots::FirstLegsSwapped => (self.rho(x1, y1), x2, y2),
                            BraidSlots::SecondLegsSwapped => (self.rho(x2, y2), x1, y1),
                        };
                        if r.is_zero() {
                            continue;
                        }
                        let k = &(&c * cy) * &(cx * &r);
                        accumulate(&mut out, &ring, x, x_keep, y_keep, yt, &k);
                    }
                }
            }
        }
        Ok(out)
    }
}

/// One-shot braided product with the given slot convention.
pub fn braided_multiply(p: &BraidedElement, q: &BraidedElement, slots: BraidSlots) -> Result<BraidedElement, ScalarError> {
    BraidedProduct::new(p.ring(), slots).multiply(p, q)
}

fn random_pure(rng: &mut ChaCha8Rng, ring: &Ring, monos: &[PbwMonomial]) -> BraidedElement {
    let x = monos[rng.gen_range(0..monos.len())];
    let y = monos[rng.gen_range(0..monos.len())];
    let c = ring.omega_terms([(2 * rng.gen_range(-2..=2), rng.gen_range(1..=3))]);
    BraidedElement::term(ring, x, y, c)
}

fn gen_pure(ring: &Ring, left: Option<Gen>, right: Option<Gen>) -> BraidedElement {
    let side = |g: Option<Gen>| g.map_or(PbwMonomial::ONE, PbwMonomial::generator);
    BraidedElement::term(ring, side(left), side(right), ring.one())
}

/// Associativity on random triples of pure tensors with factors of degree
/// `<= 2`, plus the unit and factor-subalgebra laws.
pub fn verify_braided_associativity(samples: usize, seed: u64, slots: BraidSlots) -> Report {
    let mut report = Report::new("braided");
    let ring = Ring::generic();
    let mut prod = BraidedProduct::new(&ring, slots);
    let one = BraidedElement::one(&ring);
    let monos = PbwMonomial::all_up_to(2);
    for x in &monos {
        for y in &monos {
            let p = BraidedElement::term(&ring, *x, *y, ring.one());
            report.check(format!("unit-left/({x}) (x) ({y})"), || (prod.multiply(&one, &p).unwrap(), p.clone()));
            report.check(format!("unit-right/({x}) (x) ({y})"), || (prod.multiply(&p, &one).unwrap(), p.clone()));
        }
    }
    for x in &monos {
        for y in &monos {
            let l = BraidedElement::term(&ring, *x, PbwMonomial::ONE, ring.one());
            let lt = BraidedElement::term(&ring, *y, PbwMonomial::ONE, ring.one());
            let r = BraidedElement::term(&ring, PbwMonomial::ONE, *x, ring.one());
            let rt = BraidedElement::term(&ring, PbwMonomial::ONE, *y, ring.one());
            report.check(format!("left-factor/({x})({y})"), || {
                (prod.multiply(&l, &lt).unwrap(), l.componentwise_mul(&lt))
            });
            report.check(format!("right-factor/({x})({y})"), || {
                (prod.multiply(&r, &rt).unwrap(), r.componentwise_mul(&rt))
            });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut triples = vec![(
        "a(x)1, 1(x)a, a(x)1".to_string(),
        gen_pure(&ring, Some(Gen::A), None),
        gen_pure(&ring, None, Some(Gen::A)),
        gen_pure(&ring, Some(Gen::A), None),
    )];
    for s in 0..samples {
        let p = random_pure(&mut rng, &ring, &monos);
        let q = random_pure(&mut rng, &ring, &monos);
        let r = random_pure(&mut rng, &ring, &monos);
        triples.push((format!("sample{s}"), p, q, r));
    }
    for (id, p, q, r) in triples {
        report.check(format!("associative/{id}"), || {
            let pq = prod.multiply(&p, &q).unwrap();
            let qr = prod.multiply(&q, &r).unwrap();
            (prod.multiply(&pq, &r).unwrap(), prod.multiply(&p, &qr).unwrap())
        });
    }
    report
}

/// `Phi (x) Phi` on the braided square.
pub fn phi_braided(p: &BraidedElement, spec: &RootSpec) -> BraidedElement {
    let ring = spec.ring();
    let generic = Ring::generic();
    let mut out = BraidedElement::zero(ring);
    for ((x, y), c) in p.terms() {
        let px = phi_bigon(&BigonElement::monomial(&generic, *x, c.clone()), spec).expect("generic source");
        let py = phi_bigon(&BigonElement::monomial(&generic, *y, generic.one()), spec).expect("generic source");
        out = out.try_add(&BraidedElement::pure(&px, &py).unwrap()).unwrap();
    }
    out
}

/// `(Phi (x) Phi)(PQ) = (Phi (x) Phi)(P) (Phi (x) Phi)(Q)` on generator pure
/// tensors and random degree `<= 2` samples.
pub fn verify_phi_braided(spec: &RootSpec, samples: usize, seed: u64, slots: BraidSlots) -> Report {
    let mut report = Report::new("braided");
    let generic = Ring::generic();
    let mut source = BraidedProduct::new(&generic, slots);
    let mut target = BraidedProduct::new(spec.ring(), slots);
    let n = spec.n;
    let mut pairs = Vec::new();
    let sides: Vec<Option<Gen>> = std::iter::once(None).chain(Gen::ALL.map(Some)).collect();
    for l in &sides {
        for r in &sides {
            if l.is_some() == r.is_some() {
                continue;
            }
            pairs.push(gen_pure(&generic, *l, *r));
        }
    }
    let mut cases = Vec::new();
    for p in &pairs {
        for q in &pairs {
            cases.push((format!("gens/[{p}]*[{q}]"), p.clone(), q.clone()));
        }
    }
    let monos = PbwMonomial::all_up_to(2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ n as u64);
    for s in 0..samples {
        let p = random_pure(&mut rng, &generic, &monos);
        let q = random_pure(&mut rng, &generic, &monos);
        cases.push((format!("sample{s}"), p, q));
    }
    for (id, p, q) in cases {
        report.check(format!("n={n}/phi/{id}"), || {
            let lhs = phi_braided(&source.multiply(&p, &q).unwrap(), spec);
            let rhs = target.multiply(&phi_braided(&p, spec), &phi_braided(&q, spec)).unwrap();
            (lhs, rhs)
        });
    }
    report
}
