use proptest::prelude::*;
use qes_core::families::ScaleMap;
use qes_core::rational::{int, ratio};
use qes_core::riccati::sqrt_poly_part;
use qes_core::sturm::{count_real_roots, sturm_isolate};
use qes_core::{Parity, Poly, Var};

/// Sum of up to six monomials `c E^i t^j` with `i, j ≤ 4`.
fn poly_et() -> impl Strategy<Value = Poly> {
    prop::collection::vec((0usize..=4, 0usize..=4, -9i64..=9), 0..6).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(i, j, c)| {
                let t = Poly::monomial(Var::T, j, Poly::from(c));
                Poly::monomial(Var::E, i, t)
            })
            .sum()
    })
}

fn int_coeffs(max_degree: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-12i64..=12, 1..=max_degree + 1)
}

fn from_ints(var: Var, coeffs: &[i64]) -> Poly {
    Poly::from_coeffs(var, coeffs.iter().map(|&c| Poly::from(c)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(a in poly_et(), b in poly_et(), c in poly_et()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn divrem_round_trip(a in poly_et(), b in int_coeffs(4), lead in 1i64..=5) {
        let mut b = b;
        b.push(lead);
        let b = from_ints(Var::E, &b);
        let (q, r) = a.divrem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        let deg_b = b.degree_in(Var::E).unwrap();
        prop_assert!(r.degree_in(Var::E).map_or(true, |d| d < deg_b));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn sqrt_part_recovers_root(
        q in int_coeffs(3),
        lead in 1i64..=6,
        lead_den in 1i64..=4,
        r in int_coeffs(3),
    ) {
        let mut q: Vec<Poly> = q.into_iter().map(Poly::from).collect();
        q.push(Poly::constant(ratio(lead, lead_den)));
        let q = Poly::from_coeffs(Var::X, q);
        let m = q.degree_in(Var::X).unwrap();
        let r = from_ints(Var::X, &r[..r.len().min(m)]);
        let p = &(&q * &q) + &r;
        prop_assert_eq!(sqrt_poly_part(&p).unwrap(), q);
    }

    #[test]
    fn sturm_counts_distinct_integer_roots(roots in prop::collection::btree_set(-20i64..=20, 1..=6)) {
        let e = Poly::var(Var::E);
        let p: Poly = roots.iter().map(|&k| &e - &Poly::from(k)).product();
        prop_assert_eq!(count_real_roots(&p).unwrap(), roots.len());
        let intervals = sturm_isolate(&p).unwrap();
        prop_assert_eq!(intervals.len(), roots.len());
        for (iv, &k) in intervals.iter().zip(&roots) {
            prop_assert!(iv.lo < int(k) && int(k) <= iv.hi);
        }
    }

    #[test]
    fn scale_map_round_trip(
        qn in 1i64..=9, qd in 1i64..=9,
        tn in -20i64..=20, td in 1i64..=7,
        jn in -10i64..=30, jd in 1i64..=4,
        odd in any::<bool>(),
    ) {
        let parity = if odd { Parity::Odd } else { Parity::Even };
        let m = ScaleMap::new(ratio(qn, qd), ratio(tn, td), ratio(jn, jd)).unwrap();
        let v = m.forward_for(parity);
        prop_assert_eq!(ScaleMap::backward_for(&v, parity).unwrap(), m);
    }
}
