//! Normal forms by one-relation-at-a-time rewriting.
//!
//! Rules, each replacing an adjacent pair:
//!
//! ```text
//! cb -> bc       ab -> q^-2 ba    ac -> q^-2 ca    db -> q^2 bd    dc -> q^2 cd
//! ad -> 1 + q^-2 bc               da -> 1 + q^2 bc
//! ```
//!
//! Every rule lowers `(#a * #d, inversions)` lexicographically, where
//! inversions count pairs out of the order `b < c < a, d`.

use std::collections::BTreeMap;

use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{BigonElement, Gen, PbwMonomial};
use crate::report::Report;
use crate::scalar::{Ring, Scalar};

/// Which redex to contract when a word has several.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
    Random(u64),
}

fn rank(g: Gen) -> u8 {
    match g {
        Gen::B => 0,
        Gen::C => 1,
        Gen::A | Gen::D => 2,
    }
}

/// Right-hand side of the rule for the pair `(x, y)`, as `(q-exponent,
/// replacement)` summands, or `None` if `xy` is not a redex.
pub fn rule(x: Gen, y: Gen) -> Option<Vec<(i64, Vec<Gen>)>> {
    use Gen::*;
    Some(match (x, y) {
        (C, B) => vec![(0, vec![B, C])],
        (A, B) => vec![(-2, vec![B, A])],
        (A, C) => vec![(-2, vec![C, A])],
        (D, B) => vec![(2, vec![B, D])],
        (D, C) => vec![(2, vec![C, D])],
        (A, D) => vec![(0, vec![]), (-2, vec![B, C])],
        (D, A) => vec![(0, vec![]), (2, vec![B, C])],
        _ => return None,
    })
}

pub fn redexes(word: &[Gen]) -> Vec<usize> {
    (0..word.len().saturating_sub(1))
        .filter(|&p| rule(word[p], word[p + 1]).is_some())
        .collect()
}

/// Termination measure: `(#a * #d, inversions)`.
pub fn measure(word: &[Gen]) -> (usize, usize) {
    let na = word.iter().filter(|g| **g == Gen::A).count();
    let nd = word.iter().filter(|g| **g == Gen::D).count();
    let mut inv = 0;
    for i in 0..word.len() {
        for j in i + 1..word.len() {
            if rank(word[i]) > rank(word[j]) {
                inv += 1;
            }
        }
    }
    (na * nd, inv)
}

/// Contracts the redex at `pos`.
pub fn rewrite_at(word: &[Gen], pos: usize) -> Option<Vec<(i64, Vec<Gen>)>> {
    let rhs = rule(word[pos], word[pos + 1])?;
    Some(
        rhs.into_iter()
            .map(|(e, mid)| {
                let mut w = word[..pos].to_vec();
                w.extend(mid);
                w.extend_from_slice(&word[pos + 2..]);
                (e, w)
            })
            .collect(),
    )
}

fn word_monomial(word: &[Gen]) -> PbwMonomial {
    let count = |g| word.iter().filter(|x| **x == g).count() as u32;
    let (b, c, a, d) = (count(Gen::B), count(Gen::C), count(Gen::A), count(Gen::D));
    if d > 0 {
        PbwMonomial::d_type(b, c, d)
    } else {
        PbwMonomial::a_type(b, c, a)
    }
}

/// Normal form of `coeff * word` with the leftmost strategy.
pub fn normal_form(coeff: &Scalar, word: &[Gen]) -> BigonElement {
    normal_form_with(coeff, word, Strategy::Leftmost)
}

/// Normal form of `coeff * word`. Words are kept in a pool so equal words
/// produced along different branches are merged before being rewritten.
pub fn normal_form_with(coeff: &Scalar, word: &[Gen], strategy: Strategy) -> BigonElement {
    let ring = coeff.ring();
    let mut rng = match strategy {
        Strategy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut pool: BTreeMap<Vec<Gen>, Scalar> = BTreeMap::new();
    pool.insert(word.to_vec(), coeff.clone());
    let mut out = BigonElement::zero(&ring);
    while let Some((w, c)) = pool.pop_first() {
        if c.is_zero() {
            continue;
        }
        let reds = redexes(&w);
        if reds.is_empty() {
            out.add_term(word_monomial(&w), c);
            continue;
        }
        let pos = match (&strategy, rng.as_mut()) {
            (Strategy::Leftmost, _) => reds[0],
            (Strategy::Rightmost, _) => reds[reds.len() - 1],
            (_, Some(r)) => reds[r.gen_range(0..reds.len())],
            (_, None) => unreachable!(),
        };
        for (e, nw) in rewrite_at(&w, pos).unwrap() {
            let term = c.mul_q_pow(e);
            let slot = pool.entry(nw).or_insert_with(|| ring.zero());
            *slot = &*slot + &term;
        }
    }
    out
}

fn random_word(rng: &mut ChaCha8Rng, max_len: usize) -> Vec<Gen> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| Gen::ALL[rng.gen_range(0..4)]).collect()
}

/// Normal-forms random words under leftmost, rightmost and randomized
/// strategies and compares them with the closed-form product.
pub fn verify_confluence(ring: &Ring, words: usize, max_len: usize, seed: u64) -> Report {
    let mut report = Report::new("confluence");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let one = ring.one();
    for i in 0..words {
        let w = random_word(&mut rng, max_len);
        let strategy_seed = rng.gen();
        report.check_with(format!("word{i}:{}", super::render_word(&w)), || {
            let reference = BigonElement::from_word(&one, &w);
            let results = [
                normal_form_with(&one, &w, Strategy::Leftmost),
                normal_form_with(&one, &w, Strategy::Rightmost),
                normal_form_with(&one, &w, Strategy::Random(strategy_seed)),
            ];
            let ok = results.iter().all(|r| *r == reference);
            let lhs = results.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(" | ");
            (ok, lhs, reference.to_string())
        });
    }
    report
}
