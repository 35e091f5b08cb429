use proptest::prelude::*;

use qfrob::bigon::{coproduct, counit, normal_form, normal_form_with, parse_element, BigonElement, Gen, PbwMonomial, Strategy as Rewrite};
use qfrob::braided::{braided_multiply, parse_braided, phi_braided, BraidSlots, BraidedElement};
use qfrob::frobenius::phi_bigon;
use qfrob::qcomb::qbinom;
use qfrob::torus::{TorusAlgebra, TorusElement};
use qfrob::uq::{parse_uword, PairingEngine, SplitStrategy, UGen, UWord};
use qfrob::{Ring, RootSpec, Scalar};

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 64,
        ..ProptestConfig::default()
    }
}

fn laurent_terms() -> impl Strategy<Value = Vec<(i64, i128)>> {
    prop::collection::vec((-12i64..=12, -5i128..=5), 0..5)
}

fn ring_choice() -> impl Strategy<Value = Ring> {
    prop_oneof![
        Just(Ring::generic()),
        (1u32..=40).prop_map(Ring::cyclotomic),
    ]
}

fn scalar_in(ring: Ring) -> impl Strategy<Value = Scalar> {
    laurent_terms().prop_map(move |t| ring.omega_terms(t))
}

fn scalar_triple() -> impl Strategy<Value = (Scalar, Scalar, Scalar)> {
    ring_choice().prop_flat_map(|r| (scalar_in(r.clone()), scalar_in(r.clone()), scalar_in(r)))
}

fn gen() -> impl Strategy<Value = Gen> {
    prop_oneof![Just(Gen::A), Just(Gen::B), Just(Gen::C), Just(Gen::D)]
}

fn monomial(max_deg: u32) -> impl Strategy<Value = PbwMonomial> {
    let all = PbwMonomial::all_up_to(max_deg);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn element_in(ring: Ring, max_deg: u32) -> impl Strategy<Value = BigonElement> {
    prop::collection::vec((monomial(max_deg), -3i64..=3, -3i128..=3), 0..4).prop_map(move |ts| {
        let mut x = BigonElement::zero(&ring);
        for (m, e, c) in ts {
            x = x.try_add(&BigonElement::monomial(&ring, m, ring.omega_pow(e).scale(c))).unwrap();
        }
        x
    })
}

fn braided_in(ring: Ring) -> impl Strategy<Value = BraidedElement> {
    prop::collection::vec((monomial(1), monomial(1), -2i64..=2, -2i128..=2), 0..3).prop_map(move |ts| {
        let mut p = BraidedElement::zero(&ring);
        for (x, y, e, c) in ts {
            p.add_term(x, y, ring.omega_pow(e).scale(c));
        }
        p
    })
}

fn ugen() -> impl Strategy<Value = UGen> {
    prop_oneof![
        Just(UGen::K),
        Just(UGen::Kinv),
        (1u32..=3).prop_map(UGen::E),
        (1u32..=3).prop_map(UGen::F),
    ]
}

fn root_order() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![1u32, 3, 4, 5, 8, 12, 16, 24])
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn scalar_ring_laws((x, y, z) in scalar_triple()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).is_zero());
        prop_assert_eq!(x.bar().bar(), x.clone());
    }

    #[test]
    fn omega_powers_are_units(r in ring_choice(), e in -40i64..=40) {
        let u = r.omega_pow(e);
        prop_assert_eq!(&u * &u.inverse().unwrap(), r.one());
        prop_assert_eq!(u.inverse().unwrap(), r.omega_pow(-e));
    }

    #[test]
    fn scalar_text_round_trip(x in ring_choice().prop_flat_map(scalar_in)) {
        let parsed: Scalar = x.to_string().parse().unwrap();
        prop_assert_eq!(parsed, x);
    }

    #[test]
    fn qbinom_symmetric(n in 0i64..=14, k in 0i64..=14) {
        prop_assume!(k <= n);
        prop_assert_eq!(qbinom(n, k).unwrap(), qbinom(n, n - k).unwrap());
    }

    #[test]
    fn rewriting_strategies_agree(word in prop::collection::vec(gen(), 0..9), seed in any::<u64>()) {
        let one = Ring::generic().one();
        let left = normal_form_with(&one, &word, Rewrite::Leftmost);
        prop_assert_eq!(&left, &normal_form_with(&one, &word, Rewrite::Rightmost));
        prop_assert_eq!(&left, &normal_form_with(&one, &word, Rewrite::Random(seed)));
    }

    #[test]
    fn normal_form_respects_concatenation(u in prop::collection::vec(gen(), 0..6), v in prop::collection::vec(gen(), 0..6)) {
        let one = Ring::generic().one();
        let uv: Vec<Gen> = u.iter().chain(v.iter()).copied().collect();
        let prod = normal_form(&one, &u).try_mul(&normal_form(&one, &v)).unwrap();
        prop_assert_eq!(normal_form(&one, &uv), prod);
    }

    #[test]
    fn bigon_product_associative(
        (x, y, z) in ring_choice().prop_flat_map(|r| (element_in(r.clone(), 2), element_in(r.clone(), 2), element_in(r, 2)))
    ) {
        let left = x.try_mul(&y).unwrap().try_mul(&z).unwrap();
        let right = x.try_mul(&y.try_mul(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn coproduct_and_counit_multiplicative(x in element_in(Ring::generic(), 2), y in element_in(Ring::generic(), 2)) {
        let xy = x.try_mul(&y).unwrap();
        prop_assert_eq!(coproduct(&xy), coproduct(&x).mul(&coproduct(&y)));
        prop_assert_eq!(counit(&xy), &counit(&x) * &counit(&y));
    }

    #[test]
    fn bigon_text_round_trip(x in ring_choice().prop_flat_map(|r| element_in(r, 3))) {
        let parsed = parse_element(&x.to_string(), x.ring()).unwrap();
        prop_assert_eq!(parsed, x);
    }

    #[test]
    fn phi_multiplicative(n in root_order(), x in element_in(Ring::generic(), 2), y in element_in(Ring::generic(), 2)) {
        let spec = RootSpec::new(n).unwrap();
        let xy = x.try_mul(&y).unwrap();
        let lhs = phi_bigon(&xy, &spec).unwrap();
        let rhs = phi_bigon(&x, &spec).unwrap().try_mul(&phi_bigon(&y, &spec).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pairing_strategies_agree(m in monomial(3), u in prop::collection::vec(ugen(), 0..4)) {
        let g = Ring::generic();
        let u = UWord(u);
        let x = BigonElement::monomial(&g, m, g.one());
        let word_first = PairingEngine::new(&g, SplitStrategy::WordFirst).pair(&x, &u);
        let mono_first = PairingEngine::new(&g, SplitStrategy::MonomialFirst).pair(&x, &u);
        prop_assert_eq!(word_first, mono_first);
    }

    #[test]
    fn uword_text_round_trip(u in prop::collection::vec(ugen(), 0..6)) {
        let u = UWord(u);
        prop_assert_eq!(parse_uword(&u.to_string()).unwrap(), u);
    }

    #[test]
    fn braided_unit_and_associativity(
        (p, q, r) in (braided_in(Ring::generic()), braided_in(Ring::generic()), braided_in(Ring::generic()))
    ) {
        let s = BraidSlots::STANDARD;
        let one = BraidedElement::one(&Ring::generic());
        prop_assert_eq!(braided_multiply(&one, &p, s).unwrap(), p.clone());
        prop_assert_eq!(braided_multiply(&p, &one, s).unwrap(), p.clone());
        let left = braided_multiply(&braided_multiply(&p, &q, s).unwrap(), &r, s).unwrap();
        let right = braided_multiply(&p, &braided_multiply(&q, &r, s).unwrap(), s).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn phi_braided_multiplicative(n in root_order(), p in braided_in(Ring::generic()), q in braided_in(Ring::generic())) {
        let spec = RootSpec::new(n).unwrap();
        let s = BraidSlots::STANDARD;
        let lhs = phi_braided(&braided_multiply(&p, &q, s).unwrap(), &spec);
        let rhs = braided_multiply(&phi_braided(&p, &spec), &phi_braided(&q, &spec), s).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn braided_text_round_trip(p in braided_in(Ring::cyclotomic(12))) {
        prop_assert_eq!(parse_braided(&p.to_string(), p.ring()).unwrap(), p);
    }

    #[test]
    fn torus_reflection_anti_involution(
        a in prop::collection::vec((-3i64..=3, -3i64..=3), 1..3),
        b in prop::collection::vec((-3i64..=3, -3i64..=3), 1..3),
    ) {
        let g = Ring::generic();
        let alg = TorusAlgebra::two_generator(g.q_pow(2), 0).unwrap();
        let build = |ts: &[(i64, i64)]| {
            let mut out = TorusElement::zero(&alg);
            for &(i, j) in ts {
                let m = TorusElement::generator_pow(&alg, 0, i).normal_mul(&TorusElement::generator_pow(&alg, 1, j)).unwrap();
                out = out.try_add(&m).unwrap();
            }
            out
        };
        let (x, y) = (build(&a), build(&b));
        let xy = x.normal_mul(&y).unwrap();
        let rev = y.reflection().unwrap().normal_mul(&x.reflection().unwrap()).unwrap();
        prop_assert_eq!(xy.reflection().unwrap(), rev);
        prop_assert_eq!(x.reflection().unwrap().reflection().unwrap(), x);
    }
}
