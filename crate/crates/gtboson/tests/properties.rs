use gtboson::exact::rat;
use gtboson::gelfand::{
    enumerate_fundamental_words, enumerate_patterns, lr_exponents_of_rows, pattern_phi, phi_monomial, validate_pattern,
    BinaryWord, IrrepLabel,
};
use gtboson::polyengine::{bargmann_inner, det, ExactPoly, Monomial, SqrtRational, VarId};
use num_rational::BigRational;
use proptest::prelude::*;

fn ratio() -> impl Strategy<Value = BigRational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn radicand() -> impl Strategy<Value = BigRational> {
    (0i64..=60, 1i64..=20).prop_map(|(n, d)| rat(n, d))
}

fn sqrt_rational() -> impl Strategy<Value = SqrtRational> {
    (ratio(), radicand()).prop_map(|(q, r)| SqrtRational::new(q, r).unwrap())
}

/// Polynomials in `z[1..2,1..2]` of the given slot.
fn poly(slot: u8) -> impl Strategy<Value = ExactPoly> {
    let term = (prop::collection::vec(0u32..3, 4), -5i64..=5).prop_map(move |(e, c)| {
        let m = Monomial::from_pairs((0..4).map(|i| (VarId::z(slot, i / 2 + 1, i % 2 + 1), e[i])));
        ExactPoly::term(m, rat(c, 1))
    });
    prop::collection::vec(term, 0..5).prop_map(|ts| ts.into_iter().fold(ExactPoly::default(), |a, t| a + t))
}

fn triangle() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4).prop_flat_map(|n| {
        (0..n).map(|t| prop::collection::vec(0i64..=4, n - t)).collect::<Vec<_>>()
    })
}

proptest! {
    #[test]
    fn sqrt_canonical_form(q in ratio(), r in radicand(), s in 1i64..=7) {
        let a = SqrtRational::new(q.clone(), r.clone()).unwrap();
        let b = SqrtRational::new(q.clone() / rat(s, 1), r.clone() * rat(s * s, 1)).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.signed_square(), if q < rat(0, 1) { -(&q * &q * &r) } else { &q * &q * &r });
        prop_assert_eq!(SqrtRational::parse_compact(&a.to_compact()).unwrap(), a);
    }

    #[test]
    fn sqrt_multiplication(a in sqrt_rational(), b in sqrt_rational(), c in sqrt_rational()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!((&a * &b).square(), a.square() * b.square());
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a);
        }
    }

    #[test]
    fn bargmann_symmetric_and_bilinear(p in poly(0), q in poly(0), r in poly(0)) {
        prop_assert_eq!(bargmann_inner(&p, &q), bargmann_inner(&q, &p));
        prop_assert_eq!(bargmann_inner(&(&p + &q), &r), bargmann_inner(&p, &r) + bargmann_inner(&q, &r));
        prop_assert!(bargmann_inner(&p, &p) >= rat(0, 1));
    }

    #[test]
    fn bargmann_factorizes(p1 in poly(1), q1 in poly(1), p2 in poly(2), q2 in poly(2)) {
        let lhs = bargmann_inner(&(&p1 * &p2), &(&q1 * &q2));
        prop_assert_eq!(lhs, bargmann_inner(&p1, &q1) * bargmann_inner(&p2, &q2));
    }

    #[test]
    fn determinant_is_multilinear(
        m in prop::collection::vec(prop::collection::vec(-6i64..=6, 3), 3),
        v in prop::collection::vec(-6i64..=6, 3),
        row in 0usize..3,
        c in -4i64..=4,
    ) {
        let to_q = |rows: &Vec<Vec<i64>>| rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect::<Vec<_>>()).collect::<Vec<_>>();
        let mut with_v = m.clone();
        with_v[row] = v.clone();
        let mut combined = m.clone();
        for j in 0..3 {
            combined[row][j] = c * m[row][j] + v[j];
        }
        prop_assert_eq!(det(&to_q(&combined)), rat(c, 1) * det(&to_q(&m)) + det(&to_q(&with_v)));
        let mut swapped = m.clone();
        swapped.swap(0, 2);
        prop_assert_eq!(det(&to_q(&swapped)), -det(&to_q(&m)));
    }

    #[test]
    fn validity_is_nonnegative_exponents(rows in triangle()) {
        let lr = lr_exponents_of_rows(&rows).unwrap();
        prop_assert_eq!(validate_pattern(&rows).unwrap(), lr.all_nonnegative());
    }

    #[test]
    fn complement_is_an_involution(bits in prop::collection::vec(any::<bool>(), 1..=7)) {
        prop_assume!(bits.iter().any(|&b| b));
        let w = BinaryWord::new(bits.clone()).unwrap();
        if w.is_all_ones() {
            prop_assert!(w.complement().is_err());
        } else {
            let c = w.complement().unwrap();
            prop_assert_eq!(c.popcount(), w.n() - w.popcount());
            prop_assert_eq!(c.complement().unwrap(), w);
        }
    }
}

#[test]
fn phi_is_injective_on_patterns() {
    for n in 1..=4 {
        for l in gtboson::gelfand::labels_up_to(n, 3) {
            let mut monos: Vec<Monomial> = enumerate_patterns(&l).iter().map(|p| pattern_phi(p, 0)).collect();
            let len = monos.len();
            monos.sort();
            monos.dedup();
            assert_eq!(monos.len(), len, "{l}");
        }
    }
}

#[test]
fn phi_is_injective_on_words() {
    for n in 1..=6 {
        let words = enumerate_fundamental_words(n);
        let mut monos: Vec<(usize, Monomial)> = words.iter().map(|w| (w.popcount(), phi_monomial(w, 0))).collect();
        monos.sort();
        monos.dedup();
        assert_eq!(monos.len(), words.len());
        assert_eq!(words.len(), (1 << n) - 1);
    }
}

#[test]
fn label_rejection_names_inequality() {
    let e = IrrepLabel::new(vec![1, 2, 0]).unwrap_err().to_string();
    assert!(e.contains("h[1] ≥ h[2]"), "{e}");
}
