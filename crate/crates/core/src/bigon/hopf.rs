//! Coproduct, counit and antipode of the matrix coalgebra
//! `Delta(t_ij) = sum_k t_ik (x) t_kj` on `[[a, b], [c, d]]`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use super::{monomial_product, BigonElement, Gen, PbwMonomial};
use crate::poly::RingElement;
use crate::report::Report;
use crate::scalar::{Ring, RingTag, Scalar, ScalarError};

/// Element of the tensor square, multiplied componentwise.
#[derive(Debug, Clone)]
pub struct TensorElement {
    ring: Ring,
    terms: BTreeMap<(PbwMonomial, PbwMonomial), Scalar>,
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl TensorElement {
    pub fn zero(ring: &Ring) -> Self {
        TensorElement {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        let mut t = Self::zero(ring);
        t.add_term(PbwMonomial::ONE, PbwMonomial::ONE, ring.one());
        t
    }

    /// `x (x) y`.
    pub fn pure(x: &BigonElement, y: &BigonElement) -> Result<Self, ScalarError> {
        if x.ring() != y.ring() {
            return Err(ScalarError::RingMismatch(x.ring().tag(), y.ring().tag()));
        }
        let mut t = Self::zero(x.ring());
        for (mx, cx) in x.terms() {
            for (my, cy) in y.terms() {
                t.add_term(*mx, *my, cx * cy);
            }
        }
        Ok(t)
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
        match self.terms.get_mut(&key) {
            Some(e) => {
                let s = &*e + &c;
                if s.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *e = s;
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((x, y), c) in &other.terms {
            out.add_term(*x, *y, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(&self.ring);
        for ((x, y), v) in &self.terms {
            out.add_term(*x, *y, v * c);
        }
        out
    }

    /// `(x (x) y)(x' (x) y') = xx' (x) yy'`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.ring);
        for ((x1, y1), c1) in &self.terms {
            for ((x2, y2), c2) in &other.terms {
                let c = c1 * c2;
                let left = monomial_product(&self.ring, x1, x2);
                let right = monomial_product(&self.ring, y1, y2);
                for (ml, cl) in &left {
                    let cl = &c * cl;
                    for (mr, cr) in &right {
                        out.add_term(*ml, *mr, &cl * cr);
                    }
                }
            }
        }
        out
    }

    /// `sum f(x_i) * g(y_i)` contracted by multiplication, both factors
    /// produced by the given maps.
    pub fn contract(&self, mut f: impl FnMut(&PbwMonomial) -> BigonElement, mut g: impl FnMut(&PbwMonomial) -> BigonElement) -> BigonElement {
        let mut out = BigonElement::zero(&self.ring);
        for ((x, y), c) in &self.terms {
            out = out.add_ref(&f(x).mul_ref(&g(y)).scale(c));
        }
        out
    }

    /// Swaps the tensor factors.
    pub fn flip(&self) -> Self {
        let mut out = Self::zero(&self.ring);
        for ((x, y), c) in &self.terms {
            out.add_term(*y, *x, c.clone());
        }
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((x, y), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*{x} (x) {y}")?;
        }
        Ok(())
    }
}

fn generator_coproduct(ring: &Ring, g: Gen) -> TensorElement {
    let (i, j) = g.index();
    let mut t = TensorElement::zero(ring);
    for k in 0..2 {
        t.add_term(
            PbwMonomial::generator(Gen::from_index(i, k)),
            PbwMonomial::generator(Gen::from_index(k, j)),
            ring.one(),
        );
    }
    t
}

fn tensor_pow(t: &TensorElement, e: u32) -> TensorElement {
    let mut acc = TensorElement::one(t.ring());
    for _ in 0..e {
        acc = acc.mul(t);
    }
    acc
}

thread_local! {
    // Per-thread memo of coproducts of basis monomials.
    static COPRODUCT_MEMO: RefCell<HashMap<(RingTag, PbwMonomial), TensorElement>> = RefCell::new(HashMap::new());
}

pub fn monomial_coproduct(ring: &Ring, m: &PbwMonomial) -> TensorElement {
    let key = (ring.tag(), *m);
    if let Some(t) = COPRODUCT_MEMO.with(|memo| memo.borrow().get(&key).cloned()) {
        return t;
    }
    let t = tensor_pow(&generator_coproduct(ring, Gen::B), m.b())
        .mul(&tensor_pow(&generator_coproduct(ring, Gen::C), m.c()))
        .mul(&tensor_pow(&generator_coproduct(ring, Gen::A), m.a()))
        .mul(&tensor_pow(&generator_coproduct(ring, Gen::D), m.d()));
    COPRODUCT_MEMO.with(|memo| memo.borrow_mut().insert(key, t.clone()));
    t
}

pub fn coproduct(x: &BigonElement) -> TensorElement {
    let mut out = TensorElement::zero(x.ring());
    for (m, c) in x.terms() {
        out = out.add(&monomial_coproduct(x.ring(), m).scale(c));
    }
    out
}

pub fn monomial_counit(ring: &Ring, m: &PbwMonomial) -> Scalar {
    if m.b() == 0 && m.c() == 0 {
        ring.one()
    } else {
        ring.zero()
    }
}

pub fn counit(x: &BigonElement) -> Scalar {
    x.terms()
        .iter()
        .filter(|(m, _)| m.b() == 0 && m.c() == 0)
        .fold(x.ring().zero(), |acc, (_, c)| &acc + c)
}

fn generator_antipode(ring: &Ring, g: Gen) -> BigonElement {
    match g {
        Gen::A => BigonElement::generator(ring, Gen::D),
        Gen::D => BigonElement::generator(ring, Gen::A),
        Gen::B => BigonElement::generator(ring, Gen::B).scale(&ring.q_pow(2).neg_ref()),
        Gen::C => BigonElement::generator(ring, Gen::C).scale(&ring.q_pow(-2).neg_ref()),
    }
}

/// Antipode on a basis monomial: reverse the word, apply the generator rule.
pub fn monomial_antipode(ring: &Ring, m: &PbwMonomial) -> BigonElement {
    let mut acc = BigonElement::one(ring);
    for g in m.word().iter().rev() {
        acc = acc.mul_ref(&generator_antipode(ring, *g));
    }
    acc
}

pub fn antipode(x: &BigonElement) -> BigonElement {
    x.map_monomials(|m| monomial_antipode(x.ring(), m))
}

type Triple = BTreeMap<(PbwMonomial, PbwMonomial, PbwMonomial), Scalar>;

fn add_triple(t: &mut Triple, key: (PbwMonomial, PbwMonomial, PbwMonomial), c: Scalar) {
    if c.is_zero() {
        return;
    }
    let s = match t.get(&key) {
        Some(e) => e + &c,
        None => c,
    };
    if s.is_zero() {
        t.remove(&key);
    } else {
        t.insert(key, s);
    }
}

fn render_triple(t: &Triple) -> String {
    if t.is_empty() {
        return "0".into();
    }
    t.iter()
        .map(|((x, y, z), c)| format!("({c})*{x} (x) {y} (x) {z}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn coassociativity_sides(ring: &Ring, m: &PbwMonomial) -> (Triple, Triple) {
    let delta = monomial_coproduct(ring, m);
    let mut left = Triple::new();
    let mut right = Triple::new();
    for ((x, y), c) in delta.terms() {
        for ((x1, x2), c1) in monomial_coproduct(ring, x).terms() {
            add_triple(&mut left, (*x1, *x2, *y), c * c1);
        }
        for ((y1, y2), c2) in monomial_coproduct(ring, y).terms() {
            add_triple(&mut right, (*x, *y1, *y2), c * c2);
        }
    }
    (left, right)
}

/// Coassociativity, counit and antipode laws on every basis monomial of
/// degree `<= degree_bound`.
pub fn verify_hopf_axioms(ring: &Ring, degree_bound: u32) -> Report {
    let mut report = Report::new("hopf-axioms");
    let tag = ring.tag();
    for m in PbwMonomial::all_up_to(degree_bound) {
        let x = BigonElement::monomial(ring, m, ring.one());
        let delta = monomial_coproduct(ring, &m);
        report.check_with(format!("{tag}/{m}/coassociativity"), || {
            let (l, r) = coassociativity_sides(ring, &m);
            (l == r, render_triple(&l), render_triple(&r))
        });
        report.check(format!("{tag}/{m}/(eps (x) id)Delta"), || {
            let l = delta.contract(
                |a| BigonElement::scalar(ring, monomial_counit(ring, a)),
                |b| BigonElement::monomial(ring, *b, ring.one()),
            );
            (l, x.clone())
        });
        report.check(format!("{tag}/{m}/(id (x) eps)Delta"), || {
            let r = delta.contract(
                |a| BigonElement::monomial(ring, *a, ring.one()),
                |b| BigonElement::scalar(ring, monomial_counit(ring, b)),
            );
            (r, x.clone())
        });
        let eps = BigonElement::scalar(ring, monomial_counit(ring, &m));
        report.check(format!("{tag}/{m}/S(x1)x2"), || {
            let l = delta.contract(
                |a| monomial_antipode(ring, a),
                |b| BigonElement::monomial(ring, *b, ring.one()),
            );
            (l, eps.clone())
        });
        report.check(format!("{tag}/{m}/x1S(x2)"), || {
            let r = delta.contract(
                |a| BigonElement::monomial(ring, *a, ring.one()),
                |b| monomial_antipode(ring, b),
            );
            (r, eps.clone())
        });
    }
    report
}
