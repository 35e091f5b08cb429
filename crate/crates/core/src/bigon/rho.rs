//! The co-R-matrix `rho`, given on generators by
//!
//! ```text
//! rho(a,a) = rho(d,d) = q    rho(a,d) = rho(d,a) = q^-1    rho(b,c) = q - q^-3
//! ```
//!
//! and zero on the other generator pairs. Two ways of extending it to words
//! are provided; only [`RhoConvention::ReverseRight`] respects the relations.
//!
//! The default evaluation does not expand coproducts. With
//! `pi(x)_kl = rho(x, t_kl)` multiplicative, the map
//! `Lambda(x) = (pi (x) id) Delta(x)` is an algebra map into 2x2 matrices, and
//! `rho(x, y' t_kl) = rho(Lambda(x)_kl, y')`, so the second argument is
//! consumed one letter at a time from the right.

use std::collections::HashMap;

use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::hopf::{coproduct, counit};
use super::{render_word, BigonElement, Gen, PbwMonomial};
use crate::poly::RingElement;
use crate::report::Report;
use crate::scalar::{Ring, Scalar, ScalarError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RhoConvention {
    /// `rho(xy, z) = rho(x, z1) rho(y, z2)`, `rho(x, yz) = rho(x1, z) rho(x2, y)`.
    ReverseRight,
    /// `rho(xy, z) = rho(x, z2) rho(y, z1)`, `rho(x, yz) = rho(x1, y) rho(x2, z)`.
    ReverseLeft,
}

pub fn rho_generator(ring: &Ring, x: Gen, y: Gen) -> Scalar {
    use Gen::*;
    match (x, y) {
        (A, A) | (D, D) => ring.q_pow(1),
        (A, D) | (D, A) => ring.q_pow(-1),
        (B, C) => &ring.q_pow(1) - &ring.q_pow(-3),
        _ => ring.zero(),
    }
}

fn counit_word(ring: &Ring, w: &[Gen]) -> Scalar {
    if w.iter().all(|g| matches!(g, Gen::A | Gen::D)) {
        ring.one()
    } else {
        ring.zero()
    }
}

/// All `(w1, w2)` with `Delta(w) = sum w1 (x) w2` letter by letter.
fn coproduct_words(w: &[Gen]) -> Vec<(Vec<Gen>, Vec<Gen>)> {
    let mut out = vec![(Vec::new(), Vec::new())];
    for g in w {
        let (i, j) = g.index();
        let mut next = Vec::with_capacity(out.len() * 2);
        for (l, r) in &out {
            for k in 0..2 {
                let mut l2 = l.clone();
                let mut r2 = r.clone();
                l2.push(Gen::from_index(i, k));
                r2.push(Gen::from_index(k, j));
                next.push((l2, r2));
            }
        }
        out = next;
    }
    out
}

type WordMemo = HashMap<(Vec<Gen>, Vec<Gen>), Scalar>;

fn rho_words_memo(ring: &Ring, conv: RhoConvention, u: &[Gen], v: &[Gen], memo: &mut WordMemo) -> Scalar {
    if u.is_empty() {
        return counit_word(ring, v);
    }
    if v.is_empty() {
        return counit_word(ring, u);
    }
    if u.len() == 1 && v.len() == 1 {
        return rho_generator(ring, u[0], v[0]);
    }
    let key = (u.to_vec(), v.to_vec());
    if let Some(s) = memo.get(&key) {
        return s.clone();
    }
    let mut acc = ring.zero();
    if u.len() >= 2 {
        let (x, y) = u.split_at(1);
        for (v1, v2) in coproduct_words(v) {
            let (vx, vy) = match conv {
                RhoConvention::ReverseRight => (&v1, &v2),
                RhoConvention::ReverseLeft => (&v2, &v1),
            };
            let l = rho_words_memo(ring, conv, x, vx, memo);
            if l.is_zero() {
                continue;
            }
            acc = &acc + &(&l * &rho_words_memo(ring, conv, y, vy, memo));
        }
    } else {
        let (y, z) = v.split_at(1);
        for (u1, u2) in coproduct_words(u) {
            let (first, second) = match conv {
                RhoConvention::ReverseRight => (z, y),
                RhoConvention::ReverseLeft => (y, z),
            };
            let l = rho_words_memo(ring, conv, &u1, first, memo);
            if l.is_zero() {
                continue;
            }
            acc = &acc + &(&l * &rho_words_memo(ring, conv, &u2, second, memo));
        }
    }
    memo.insert(key, acc.clone());
    acc
}

/// `rho` on a pair of words by direct recursion on the convolution laws,
/// expanding coproducts letter by letter.
pub fn rho_words(ring: &Ring, conv: RhoConvention, u: &[Gen], v: &[Gen]) -> Scalar {
    rho_words_memo(ring, conv, u, v, &mut HashMap::new())
}

/// Bilinear extension of [`rho_words`] over the basis words.
pub fn co_r_matrix_naive(x: &BigonElement, y: &BigonElement, conv: RhoConvention) -> Result<Scalar, ScalarError> {
    let ring = x.ring();
    if ring != y.ring() {
        return Err(ScalarError::RingMismatch(ring.tag(), y.ring().tag()));
    }
    let mut memo = HashMap::new();
    let mut acc = ring.zero();
    for (mx, cx) in x.terms() {
        let wx = mx.word();
        for (my, cy) in y.terms() {
            let r = rho_words_memo(ring, conv, &wx, &my.word(), &mut memo);
            acc = &acc + &(&(cx * cy) * &r);
        }
    }
    Ok(acc)
}

type Matrix = [[BigonElement; 2]; 2];

fn mat_mul(x: &Matrix, y: &Matrix) -> Matrix {
    std::array::from_fn(|k| std::array::from_fn(|l| x[k][0].mul_ref(&y[0][l]).add_ref(&x[k][1].mul_ref(&y[1][l]))))
}

/// Evaluates `rho(x, y)` through the matrices `Lambda`; memoizes `Lambda` on
/// basis monomials.
pub struct RhoEngine {
    ring: Ring,
    generators: [Matrix; 4],
    memo: HashMap<PbwMonomial, Matrix>,
}

impl RhoEngine {
    pub fn new(ring: &Ring) -> Self {
        let zero = BigonElement::zero(ring);
        let gen = |g| BigonElement::generator(ring, g);
        let q = ring.q_pow(1);
        let qi = ring.q_pow(-1);
        let kappa = &q - &ring.q_pow(-3);
        let lam_a = [
            [gen(Gen::A).scale(&q), zero.clone()],
            [gen(Gen::C).scale(&kappa), gen(Gen::A).scale(&qi)],
        ];
        let lam_b = [
            [gen(Gen::B).scale(&q), zero.clone()],
            [gen(Gen::D).scale(&kappa), gen(Gen::B).scale(&qi)],
        ];
        let lam_c = [
            [gen(Gen::C).scale(&qi), zero.clone()],
            [zero.clone(), gen(Gen::C).scale(&q)],
        ];
        let lam_d = [
            [gen(Gen::D).scale(&qi), zero.clone()],
            [zero.clone(), gen(Gen::D).scale(&q)],
        ];
        RhoEngine {
            ring: ring.clone(),
            generators: [lam_a, lam_b, lam_c, lam_d],
            memo: HashMap::new(),
        }
    }

    fn generator_matrix(&self, g: Gen) -> &Matrix {
        &self.generators[g as usize]
    }

    fn monomial_matrix(&mut self, m: &PbwMonomial) -> Matrix {
        if let Some(x) = self.memo.get(m) {
            return x.clone();
        }
        let one = BigonElement::one(&self.ring);
        let zero = BigonElement::zero(&self.ring);
        let mut acc: Matrix = [[one.clone(), zero.clone()], [zero, one]];
        for g in m.word() {
            acc = mat_mul(&acc, self.generator_matrix(g));
        }
        self.memo.insert(*m, acc.clone());
        acc
    }

    /// `Lambda(x)_h = sum rho(x1, h) x2`.
    fn lambda(&mut self, x: &BigonElement, h: Gen) -> BigonElement {
        let (k, l) = h.index();
        let mut out = BigonElement::zero(&self.ring);
        for (m, c) in x.terms() {
            let mat = self.monomial_matrix(m);
            out = out.add_ref(&mat[k][l].scale(c));
        }
        out
    }

    pub fn rho(&mut self, x: &BigonElement, y: &BigonElement) -> Result<Scalar, ScalarError> {
        if x.ring() != y.ring() || *x.ring() != self.ring {
            return Err(ScalarError::RingMismatch(x.ring().tag(), y.ring().tag()));
        }
        let mut acc = self.ring.zero();
        for (my, cy) in y.terms() {
            let mut cur = x.clone();
            for h in my.word().iter().rev() {
                if cur.is_zero() {
                    break;
                }
                cur = self.lambda(&cur, *h);
            }
            acc = &acc + &(cy * &counit(&cur));
        }
        Ok(acc)
    }
}

/// `rho(x, y)` with the relation-respecting convention.
pub fn co_r_matrix(x: &BigonElement, y: &BigonElement) -> Result<Scalar, ScalarError> {
    RhoEngine::new(x.ring()).rho(x, y)
}

pub fn co_r_matrix_with(x: &BigonElement, y: &BigonElement, conv: RhoConvention) -> Result<Scalar, ScalarError> {
    match conv {
        RhoConvention::ReverseRight => co_r_matrix(x, y),
        RhoConvention::ReverseLeft => co_r_matrix_naive(x, y, conv),
    }
}

/// Defining relations as formal sums of words that must vanish.
pub fn defining_relations(ring: &Ring) -> Vec<(&'static str, Vec<(Scalar, Vec<Gen>)>)> {
    use Gen::*;
    let one = ring.one();
    let m = |e: i64| ring.q_pow(e).neg_ref();
    vec![
        ("ca-q^2ac", vec![(one.clone(), vec![C, A]), (m(2), vec![A, C])]),
        ("ba-q^2ab", vec![(one.clone(), vec![B, A]), (m(2), vec![A, B])]),
        ("db-q^2bd", vec![(one.clone(), vec![D, B]), (m(2), vec![B, D])]),
        ("dc-q^2cd", vec![(one.clone(), vec![D, C]), (m(2), vec![C, D])]),
        ("bc-cb", vec![(one.clone(), vec![B, C]), (one.neg_ref(), vec![C, B])]),
        (
            "ad-q^-2bc-1",
            vec![(one.clone(), vec![A, D]), (m(-2), vec![B, C]), (one.neg_ref(), vec![])],
        ),
        (
            "da-q^2cb-1",
            vec![(one.clone(), vec![D, A]), (m(2), vec![C, B]), (one.neg_ref(), vec![])],
        ),
    ]
}

/// `rho(r, g) = 0 = rho(g, r)` for each relation `r` and generator `g`,
/// evaluated on words with the given convention.
pub fn verify_relation_respect(ring: &Ring, conv: RhoConvention) -> Report {
    let mut report = Report::new("cobraiding");
    let mut memo = HashMap::new();
    for (name, rel) in defining_relations(ring) {
        for g in Gen::ALL {
            for left in [true, false] {
                let id = if left {
                    format!("{conv:?}/rho({name}, {})", g.symbol())
                } else {
                    format!("{conv:?}/rho({}, {name})", g.symbol())
                };
                report.check(id, || {
                    let mut acc = ring.zero();
                    for (c, w) in &rel {
                        let r = if left {
                            rho_words_memo(ring, conv, w, &[g], &mut memo)
                        } else {
                            rho_words_memo(ring, conv, &[g], w, &mut memo)
                        };
                        acc = &acc + &(c * &r);
                    }
                    (acc, ring.zero())
                });
            }
        }
    }
    report
}

/// Which way round the braiding law is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BraidingForm {
    /// `rho(x1, y1) x2 y2 = y1 x1 rho(x2, y2)`, the form that accompanies the
    /// convolution laws of [`RhoConvention::ReverseRight`].
    Standard,
    /// `rho(x1, y1) y2 x2 = x1 y1 rho(x2, y2)`.
    Reversed,
}

/// Both sides of the braiding law in the given form.
pub fn braiding_sides(
    engine: &mut RhoEngine,
    x: &BigonElement,
    y: &BigonElement,
    form: BraidingForm,
) -> (BigonElement, BigonElement) {
    let ring = x.ring().clone();
    let dx = coproduct(x);
    let dy = coproduct(y);
    let mut lhs = BigonElement::zero(&ring);
    let mut rhs = BigonElement::zero(&ring);
    for ((x1, x2), cx) in dx.terms() {
        let x1e = BigonElement::monomial(&ring, *x1, ring.one());
        let x2e = BigonElement::monomial(&ring, *x2, ring.one());
        for ((y1, y2), cy) in dy.terms() {
            let c = cx * cy;
            let y1e = BigonElement::monomial(&ring, *y1, ring.one());
            let y2e = BigonElement::monomial(&ring, *y2, ring.one());
            let r1 = engine.rho(&x1e, &y1e).unwrap();
            if !r1.is_zero() {
                let prod = match form {
                    BraidingForm::Standard => x2e.mul_ref(&y2e),
                    BraidingForm::Reversed => y2e.mul_ref(&x2e),
                };
                lhs = lhs.add_ref(&prod.scale(&(&c * &r1)));
            }
            let r2 = engine.rho(&x2e, &y2e).unwrap();
            if !r2.is_zero() {
                let prod = match form {
                    BraidingForm::Standard => y1e.mul_ref(&x1e),
                    BraidingForm::Reversed => x1e.mul_ref(&y1e),
                };
                rhs = rhs.add_ref(&prod.scale(&(&c * &r2)));
            }
        }
    }
    (lhs, rhs)
}

/// Relation respect, unit laws, agreement of the two evaluation routes up to
/// degree 2, and the braiding law on all monomial pairs of degree
/// `<= degree_bound` plus `samples` random pairs of elements of that degree.
pub fn verify_cobraiding(ring: &Ring, degree_bound: u32, samples: usize, seed: u64) -> Report {
    let mut report = verify_relation_respect(ring, RhoConvention::ReverseRight);
    let mut engine = RhoEngine::new(ring);
    let one = BigonElement::one(ring);
    let small = PbwMonomial::all_up_to(2);
    for m in &small {
        let x = BigonElement::monomial(ring, *m, ring.one());
        report.check(format!("unit/rho(1, {m})"), || (engine.rho(&one, &x).unwrap(), counit(&x)));
        report.check(format!("unit/rho({m}, 1)"), || (engine.rho(&x, &one).unwrap(), counit(&x)));
    }
    for mx in &small {
        for my in &small {
            let x = BigonElement::monomial(ring, *mx, ring.one());
            let y = BigonElement::monomial(ring, *my, ring.one());
            report.check(format!("oracle/rho({mx}, {my})"), || {
                (
                    engine.rho(&x, &y).unwrap(),
                    co_r_matrix_naive(&x, &y, RhoConvention::ReverseRight).unwrap(),
                )
            });
        }
    }
    let monos = PbwMonomial::all_up_to(degree_bound);
    for mx in &monos {
        for my in &monos {
            let x = BigonElement::monomial(ring, *mx, ring.one());
            let y = BigonElement::monomial(ring, *my, ring.one());
            report.check(format!("braiding/{}|{}", render_word(&mx.word()), render_word(&my.word())), || {
                braiding_sides(&mut engine, &x, &y, BraidingForm::Standard)
            });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random_element = |rng: &mut ChaCha8Rng| {
        let mut x = BigonElement::zero(ring);
        for _ in 0..rng.gen_range(1..=3) {
            let m = monos[rng.gen_range(0..monos.len())];
            let c = ring.omega_terms([(2 * rng.gen_range(-3..=3), rng.gen_range(-3..=3))]);
            x = x.add_ref(&BigonElement::monomial(ring, m, c));
        }
        x
    };
    for s in 0..samples {
        let x = random_element(&mut rng);
        let y = random_element(&mut rng);
        report.check(format!("braiding/sample{s}"), || braiding_sides(&mut engine, &x, &y, BraidingForm::Standard));
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
    fn generator_table() {
        let r = g();
        let a = BigonElement::generator(&r, Gen::A);
        let b = BigonElement::generator(&r, Gen::B);
        let c = BigonElement::generator(&r, Gen::C);
        assert_eq!(co_r_matrix(&a, &a).unwrap(), r.q_pow(1));
        assert_eq!(co_r_matrix(&b, &c).unwrap(), &r.q_pow(1) - &r.q_pow(-3));
        assert!(co_r_matrix(&c, &b).unwrap().is_zero());
        let x = a.mul_ref(&a).add_ref(&b);
        assert_eq!(co_r_matrix(&BigonElement::one(&r), &x).unwrap(), counit(&x));
    }

    #[test]
    fn fast_route_matches_words_on_degree_three() {
        let r = g();
        let ms = PbwMonomial::all_up_to(3);
        let mut engine = RhoEngine::new(&r);
        for x in ms.iter().filter(|m| m.degree() >= 2) {
            for y in ms.iter().filter(|m| m.degree() == 3) {
                let ex = BigonElement::monomial(&r, *x, r.one());
                let ey = BigonElement::monomial(&r, *y, r.one());
                assert_eq!(
                    engine.rho(&ex, &ey).unwrap(),
                    co_r_matrix_naive(&ex, &ey, RhoConvention::ReverseRight).unwrap(),
                    "{x} {y}"
                );
            }
        }
    }

    #[test]
    fn chosen_convention_respects_relations() {
        let rep = verify_relation_respect(&g(), RhoConvention::ReverseRight);
        assert!(rep.all_passed(), "{rep}");
    }

    #[test]
    fn other_convention_breaks_relations() {
        let rep = verify_relation_respect(&g(), RhoConvention::ReverseLeft);
        assert!(rep.failed() > 0);
        println!("{rep}");
    }

    #[test]
    fn cobraiding_holds() {
        let rep = verify_cobraiding(&g(), 2, 40, 5);
        assert!(rep.all_passed(), "{rep}");
        let rep = verify_cobraiding(&Ring::cyclotomic(20), 2, 10, 6);
        assert!(rep.all_passed(), "{rep}");
    }

    #[test]
    fn braiding_on_a_a() {
        let r = g();
        let a = BigonElement::generator(&r, Gen::A);
        for form in [BraidingForm::Standard, BraidingForm::Reversed] {
            let (l, rr) = braiding_sides(&mut RhoEngine::new(&r), &a, &a, form);
            assert_eq!(l, a.mul_ref(&a).scale(&r.q_pow(1)));
            assert_eq!(l, rr);
        }
    }

    #[test]
    fn reversed_braiding_form_fails_on_a_b() {
        // rho(a,a) ba = q^3 ab against ab rho(a,d) = q^-1 ab
        let r = g();
        let a = BigonElement::generator(&r, Gen::A);
        let b = BigonElement::generator(&r, Gen::B);
        let mut engine = RhoEngine::new(&r);
        let (l, rr) = braiding_sides(&mut engine, &a, &b, BraidingForm::Reversed);
        let ab = a.mul_ref(&b);
        assert_eq!(l, ab.scale(&r.q_pow(3)));
        assert_eq!(rr, ab.scale(&r.q_pow(-1)));
        let (l, rr) = braiding_sides(&mut engine, &a, &b, BraidingForm::Standard);
        assert_eq!(l, ab.scale(&r.q_pow(1)));
        assert_eq!(l, rr);
    }
}
