//! Quantum integers, Gaussian binomials, Chebyshev polynomials and the scalar
//! identities that hold at roots of unity.

use thiserror::Error;

use crate::poly::{IntPoly, RingElement};
use crate::report::Report;
use crate::scalar::{Ring, RootSpec, Scalar};
use crate::Int;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QcombError {
    #[error("Gaussian binomial needs 0 <= k <= n, got n={n}, k={k}")]
    Domain { n: i64, k: i64 },
}

/// Balanced quantum integer `[n]_q = (q^n - q^-n)/(q - q^-1)` as a generic
/// scalar in `w` (with `q = w^2`).
pub fn qint(n: i64) -> Scalar {
    let m = n.abs();
    let sign: Int = if n < 0 { -1 } else { 1 };
    Ring::generic().omega_terms((0..m).map(|i| (2 * (m - 1 - 2 * i), sign)))
}

/// `[n]_q! = [n]_q [n-1]_q ... [1]_q`.
pub fn qfactorial(n: u32) -> Scalar {
    (1..=n as i64).fold(Ring::generic().one(), |acc, i| &acc * &qint(i))
}

/// Gaussian binomial as a polynomial in `q`, from the product formula
/// `prod_{i<k} (1 - q^{n-i}) / (1 - q^{i+1})` by exact division.
pub fn qbinom_poly(n: i64, k: i64) -> Result<IntPoly, QcombError> {
    if n < 0 || k < 0 || k > n {
        return Err(QcombError::Domain { n, k });
    }
    let one = IntPoly::one();
    let mut num = IntPoly::one();
    let mut den = IntPoly::one();
    for i in 0..k {
        num = num.mul(&one.sub(&IntPoly::monomial(1, (n - i) as usize)));
        den = den.mul(&one.sub(&IntPoly::monomial(1, (i + 1) as usize)));
    }
    Ok(num
        .div_exact(&den)
        .expect("Gaussian binomial quotient is exact"))
}

/// The row `{n brack k}`, `k = 0..=n`, as polynomials in `q`, built with
/// `{n k} = q^k {n-1 k} + {n-1 k-1}`.
pub fn qbinom_row(n: u32) -> Vec<IntPoly> {
    let mut row = vec![IntPoly::one()];
    for m in 1..=n as usize {
        let mut next = Vec::with_capacity(m + 1);
        next.push(IntPoly::one());
        for k in 1..m {
            next.push(row[k].shift(k).add(&row[k - 1]));
        }
        next.push(IntPoly::one());
        row = next;
    }
    row
}

/// Gaussian binomial as a generic scalar, `q = w^2`.
pub fn qbinom(n: i64, k: i64) -> Result<Scalar, QcombError> {
    qbinom_at_omega_power(n, k, &Ring::generic(), 2)
}

/// `{n brack k}_{q'}` with `q' = w^e` in `ring`.
pub fn qbinom_at_omega_power(n: i64, k: i64, ring: &Ring, e: i64) -> Result<Scalar, QcombError> {
    let p = qbinom_poly(n, k)?;
    Ok(ring.omega_terms(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(j, c)| (e * j as i64, *c)),
    ))
}

/// Chebyshev polynomial of the first kind, `T_0 = 2`, `T_1 = x`,
/// `T_n = x T_{n-1} - T_{n-2}`.
pub fn chebyshev_t(n: u32) -> IntPoly {
    let mut prev = IntPoly::new(vec![2]);
    if n == 0 {
        return prev;
    }
    let mut cur = IntPoly::monomial(1, 1);
    for _ in 1..n {
        let next = cur.shift(1).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Evaluates `T_n(x)` in any ring by running the three-term recursion there.
pub fn eval_chebyshev<R: RingElement>(n: u32, x: &R) -> R {
    let mut prev = x.one_like().scale_int(2);
    if n == 0 {
        return prev;
    }
    let mut cur = x.clone();
    for _ in 1..n {
        let next = x.mul_ref(&cur).sub_ref(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Pascal identity `{n k} = q^k {n-1 k} + {n-1 k-1}` for all `0 < k < n <= n_max`.
pub fn verify_pascal(n_max: i64) -> Report {
    let mut report = Report::new("qfacts");
    let g = Ring::generic();
    for n in 1..=n_max {
        for k in 0..=n {
            report.check(format!("pascal(n={n},k={k})"), || {
                let lhs = qbinom(n, k).unwrap();
                let first = if k <= n - 1 {
                    qbinom(n - 1, k).unwrap().mul_q_pow(k)
                } else {
                    g.zero()
                };
                let second = if k >= 1 { qbinom(n - 1, k - 1).unwrap() } else { g.zero() };
                (lhs, &first + &second)
            });
        }
    }
    report
}

/// `{N brack k}_{w^8}` vanishes for `0 < k < N` and is `1` at `k = 0, N`,
/// where `N = ord(w^8)`.
pub fn verify_qbinom_vanishing(spec: &RootSpec) -> Report {
    let mut report = Report::new("qfacts");
    let big_n = spec.big_n as i64;
    let ring = spec.ring();
    let row = qbinom_row(spec.big_n);
    for k in 0..=big_n {
        report.check(format!("n={}/qbinom(N={big_n},k={k})", spec.n), || {
            let poly = &row[k as usize];
            let val = ring.omega_terms(poly.coeffs().iter().enumerate().map(|(j, c)| (8 * j as i64, *c)));
            let expected = if k == 0 || k == big_n { ring.one() } else { ring.zero() };
            (val, expected)
        });
    }
    report
}

/// The scalar ledger behind the root-of-unity arguments: each identity is
/// checked in `Z[w]/Phi_n` with `q = w^2`.
pub fn verify_root_identities(spec: &RootSpec) -> Report {
    let mut report = verify_qbinom_vanishing(spec);
    report.suite = "root-identities".into();
    let ring = spec.ring();
    let n = spec.n;
    let big_n = spec.big_n as i64;
    let w = ring.omega_pow(1);
    let q = ring.omega_pow(2);
    let eta = spec.eta();

    report.check(format!("n={n}/root:w^(8N)=1"), || (w.pow(8 * big_n).unwrap(), ring.one()));
    report.check_with(format!("n={n}/root:ord(w^8)=N"), || {
        let first = (1..=big_n).find(|k| w.pow(8 * k).unwrap().is_one());
        (first == Some(big_n), format!("{first:?}"), format!("Some({big_n})"))
    });

    report.check(format!("n={n}/(ii)T_N(-w^4-w^-4)"), || {
        let x = ring.omega_terms([(4, -1), (-4, -1)]);
        let lhs = eval_chebyshev(spec.big_n, &x);
        let rhs = -&(&eta.pow(4).unwrap() + &eta.pow(-4).unwrap());
        (lhs, rhs)
    });
    report.check(format!("n={n}/(iii)trivial-arc"), || {
        let lhs = &q.pow(-(big_n * (big_n - 1) / 2)).unwrap() * &w.pow(-big_n).unwrap();
        (lhs, eta.inverse().unwrap())
    });
    report.check(format!("n={n}/(iv)state-exchange"), || {
        (q.pow(big_n * big_n).unwrap(), eta.pow(2).unwrap())
    });
    report.check(format!("n={n}/(v)transparency-sign"), || {
        let mu: Int = if (spec.n_prime + 1) % 2 == 0 { 1 } else { -1 };
        (w.pow(4 * big_n).unwrap(), ring.int(mu))
    });
    report.check(format!("n={n}/(vi)w^(2N'')=1"), || {
        (w.pow(2 * spec.n_double_prime as i64).unwrap(), ring.one())
    });
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_matches_product_formula() {
        for n in 0..=12u32 {
            for (k, p) in qbinom_row(n).iter().enumerate() {
                assert_eq!(*p, qbinom_poly(n as i64, k as i64).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn qint_examples() {
        let g = Ring::generic();
        assert!(qint(0).is_zero());
        assert_eq!(qint(1), g.one());
        assert_eq!(qint(2), g.omega_terms([(2, 1), (-2, 1)]));
        assert_eq!(qint(-3), qint(3).neg_ref());
    }

    #[test]
    fn qint_matches_defining_quotient() {
        // (q - q^-1) [n]_q = q^n - q^-n
        let g = Ring::generic();
        for n in -6..=6i64 {
            let lhs = &g.omega_terms([(2, 1), (-2, -1)]) * &qint(n);
            assert_eq!(lhs, g.omega_terms([(2 * n, 1), (-2 * n, -1)]));
        }
    }

    #[test]
    fn qbinom_examples() {
        assert_eq!(qbinom_poly(7, 0).unwrap(), IntPoly::one());
        assert_eq!(qbinom_poly(4, 2).unwrap().coeffs(), &[1, 1, 2, 1, 1]);
        assert_eq!(qbinom_poly(3, 1).unwrap().coeffs(), &[1, 1, 1]);
        assert!(qbinom_poly(2, 3).is_err());
        assert!(qbinom_poly(-1, 0).is_err());
    }

    #[test]
    fn qbinom_at_one_is_binomial() {
        for n in 0..12i64 {
            let mut binom: Int = 1;
            for k in 0..=n {
                let p = qbinom_poly(n, k).unwrap();
                assert_eq!(p.coeffs().iter().sum::<Int>(), binom);
                binom = binom * (n - k) as Int / (k + 1) as Int;
            }
        }
    }

    #[test]
    fn chebyshev_examples() {
        assert_eq!(chebyshev_t(0).coeffs(), &[2]);
        assert_eq!(chebyshev_t(1).coeffs(), &[0, 1]);
        assert_eq!(chebyshev_t(2).coeffs(), &[-2, 0, 1]);
        assert_eq!(chebyshev_t(3).coeffs(), &[0, -3, 0, 1]);
    }

    #[test]
    fn chebyshev_on_laurent_sum() {
        // T_m(x + x^-1) = x^m + x^-m
        let g = Ring::generic();
        let x = g.omega_terms([(1, 1), (-1, 1)]);
        for m in 0..=20u32 {
            let expected = if m == 0 {
                g.int(2)
            } else {
                g.omega_terms([(m as i64, 1), (-(m as i64), 1)])
            };
            assert_eq!(eval_chebyshev(m, &x), expected, "m={m}");
            assert_eq!(chebyshev_t(m).eval(&x), expected, "horner m={m}");
        }
    }

    #[test]
    fn pascal_small() {
        assert!(verify_pascal(12).all_passed());
    }

    #[test]
    fn root_identities_examples() {
        for n in [1, 5, 16] {
            let r = verify_root_identities(&RootSpec::new(n).unwrap());
            assert!(r.all_passed(), "{r}");
        }
        assert!(RootSpec::new(5).unwrap().eta().is_one());
    }
}
