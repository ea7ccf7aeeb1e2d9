use std::collections::BTreeSet;

use num_bigint::BigUint;
use projcode::codes::{
    hamming_weight, is_projective, is_projective_via_cij, is_simplex_vector, lucas_binom_mod_p, monomial_equivalent,
    simplex_equations_literal, simplex_equations_satisfied, weight_distribution, MonomialMap,
};
use projcode::constructions::{bracket, gaussian_binomial};
use projcode::graphs::grassmann_distance;
use projcode::linalg::{parse_matrix, rref_generic, rref_packed, Matrix};
use projcode::{Elem, Field, Gf, Subspace};
use proptest::prelude::*;

const ORDERS: [u64; 7] = [2, 3, 4, 5, 7, 8, 9];

fn gf(q: u64) -> Gf {
    Field::with_order(q).unwrap()
}

/// (q, rows, cols, entries) with entries below q.
fn raw_matrix(
    orders: &'static [u64],
    rows: std::ops::RangeInclusive<usize>,
    cols: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = Matrix> {
    (prop::sample::select(orders), rows, cols).prop_flat_map(|(q, r, c)| {
        prop::collection::vec(0..q as u16, r * c)
            .prop_map(move |data| Matrix::new(&gf(q), r, c, data.into_iter().map(Elem).collect()).unwrap())
    })
}

/// Two generator matrices with the same field and number of columns.
fn matrix_pair() -> impl Strategy<Value = (Matrix, Matrix)> {
    (prop::sample::select(&ORDERS[..]), 1..=6usize, 1..=4usize, 1..=4usize).prop_flat_map(|(q, n, a, b)| {
        (
            prop::collection::vec(0..q as u16, a * n),
            prop::collection::vec(0..q as u16, b * n),
        )
            .prop_map(move |(x, y)| {
                let f = gf(q);
                (
                    Matrix::new(&f, a, n, x.into_iter().map(Elem).collect()).unwrap(),
                    Matrix::new(&f, b, n, y.into_iter().map(Elem).collect()).unwrap(),
                )
            })
    })
}

fn pascal_mod(a: u64, b: u64, p: u64) -> u64 {
    if b > a {
        return 0;
    }
    let num: BigUint = (a - b + 1..=a).map(BigUint::from).product();
    let den: BigUint = (1..=b).map(BigUint::from).product();
    let c = num / den;
    (c % p).try_into().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms(q in prop::sample::select(&ORDERS[..]), a in 0u16..9, b in 0u16..9, c in 0u16..9) {
        let f = gf(q);
        let [a, b, c] = [a, b, c].map(|v| Elem(v % q as u16));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
            prop_assert_eq!(f.pow(a, q - 1), Elem::ONE);
        }
        prop_assert_eq!(f.pow(a, q), a);
    }

    #[test]
    fn dimension_formula((a, b) in matrix_pair()) {
        let (x, y) = (Subspace::span(&a), Subspace::span(&b));
        let sum = x.sum(&y).unwrap();
        let meet = x.intersection(&y).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), x.dim() + y.dim());
        prop_assert_eq!(meet.dim(), x.intersect_dim(&y).unwrap());
        prop_assert!(meet.is_subspace_of(&x).unwrap() && meet.is_subspace_of(&y).unwrap());
        prop_assert!(x.is_subspace_of(&sum).unwrap() && y.is_subspace_of(&sum).unwrap());
    }

    #[test]
    fn canonical_form_is_a_span_invariant(m in raw_matrix(&ORDERS, 1..=5, 1..=7), mix in prop::collection::vec(0u16..9, 25)) {
        let f = m.field().clone();
        let s = Subspace::span(&m);
        prop_assert_eq!(&Subspace::span(s.basis()), &s);
        // Rows replaced by random combinations of themselves, keeping the originals' span if the mix is invertible.
        let r = m.rows();
        let p = Matrix::new(&f, r, r, (0..r * r).map(|i| Elem(mix[i % mix.len()] % f.q() as u16)).collect()).unwrap();
        let mixed = p.mul(&m).unwrap();
        let t = Subspace::span(&mixed);
        prop_assert!(t.is_subspace_of(&s).unwrap());
        if p.rank() == r {
            prop_assert_eq!(&t, &s);
        }
        prop_assert_eq!(s.dim(), m.rank());
    }

    #[test]
    fn packed_matches_generic(m in raw_matrix(&[2], 1..=10, 1..=150)) {
        prop_assert_eq!(rref_packed(&m).unwrap(), rref_generic(&m));
    }

    #[test]
    fn text_round_trip(m in raw_matrix(&ORDERS, 1..=4, 1..=9)) {
        prop_assert_eq!(parse_matrix(&m.to_text()).unwrap(), m);
    }

    #[test]
    fn lucas_matches_binomial(p in prop::sample::select(vec![2u64, 3, 5, 7, 11]), a in 0u64..400, b in 0u64..400) {
        prop_assert_eq!(lucas_binom_mod_p(a, b, p).unwrap(), pascal_mod(a, b, p));
    }

    #[test]
    fn projectivity_criteria_agree(m in raw_matrix(&[2, 3, 4, 5], 2..=3, 2..=8)) {
        let c = Subspace::span(&m);
        prop_assume!(c.dim() >= 2);
        prop_assert_eq!(is_projective(&c).unwrap(), is_projective_via_cij(&c).unwrap());
    }

    #[test]
    fn hyperplanes_and_superspaces(m in raw_matrix(&[2, 3, 4], 1..=3, 2..=5)) {
        let x = Subspace::span(&m);
        prop_assume!(x.dim() >= 1);
        let f = x.field().clone();
        let q = f.q() as u64;
        let hs = x.hyperplanes().unwrap();
        prop_assert_eq!(hs.len() as u128, bracket(x.dim() as u32, q));
        prop_assert_eq!(hs.iter().collect::<BTreeSet<_>>().len(), hs.len());
        for h in &hs {
            prop_assert_eq!(h.dim() + 1, x.dim());
            prop_assert!(h.is_subspace_of(&x).unwrap());
        }
        let full = Subspace::full(&f, x.ambient_dim());
        for d in x.dim()..=x.ambient_dim() {
            let sup = x.superspaces_in(&full, d).unwrap();
            let want = gaussian_binomial((x.ambient_dim() - x.dim()) as u32, (d - x.dim()) as u32, q);
            prop_assert_eq!(BigUint::from(sup.len()), want);
            prop_assert!(sup.iter().all(|s| s.dim() == d && x.is_subspace_of(s).unwrap()));
        }
    }

    #[test]
    fn grassmann_distance_is_a_metric((a, b) in matrix_pair(), c in prop::collection::vec(0u16..9, 24)) {
        let (x, y) = (Subspace::span(&a), Subspace::span(&b));
        prop_assume!(x.dim() == y.dim());
        let f = x.field().clone();
        let k = x.dim();
        let n = x.ambient_dim();
        let z = Subspace::span(&Matrix::new(&f, k, n, (0..k * n).map(|i| Elem(c[i % c.len()] % f.q() as u16)).collect()).unwrap());
        prop_assume!(z.dim() == k);
        let d = |u: &Subspace, v: &Subspace| grassmann_distance(u, v).unwrap();
        prop_assert_eq!(d(&x, &y), d(&y, &x));
        prop_assert_eq!(d(&x, &x), 0);
        prop_assert!(d(&x, &z) <= d(&x, &y) + d(&y, &z));
    }

    #[test]
    fn weight_distribution_is_invariant_under_monomial_maps(
        m in raw_matrix(&[2, 3, 4], 1..=3, 2..=6),
        seed in prop::collection::vec(0usize..1000, 12),
    ) {
        let c = Subspace::span(&m);
        let f = c.field().clone();
        let n = c.ambient_dim();
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, seed[i] % (i + 1));
        }
        let nonzero: Vec<Elem> = f.nonzero_elements().collect();
        let scalars: Vec<Elem> = (0..n).map(|i| nonzero[seed[i + 6] % nonzero.len()]).collect();
        let image = MonomialMap { perm, scalars }.apply(&c);
        let dist = weight_distribution(&c).unwrap();
        prop_assert_eq!(dist.values().sum::<u64>() + 1, (f.q() as u64).pow(c.dim() as u32));
        prop_assert_eq!(&weight_distribution(&image).unwrap(), &dist);
        let found = monomial_equivalent(&c, &image).unwrap();
        prop_assert!(found.is_some());
        prop_assert_eq!(found.unwrap().apply(&c), image);
    }

    #[test]
    fn simplex_equations_match_weight(
        (q, k) in prop::sample::select(vec![(2u64, 3usize), (3, 2), (4, 2), (5, 2), (8, 2), (9, 2), (2, 4)]),
        raw in prop::collection::vec((0u16..9, any::<bool>()), 20),
        exact in any::<bool>(),
    ) {
        let f = gf(q);
        let n = bracket(k as u32, q) as usize;
        let w = q.pow(k as u32 - 1) as usize;
        let mut v: Vec<Elem> = raw[..n].iter().map(|&(e, keep)| if keep { Elem(e % q as u16) } else { Elem::ZERO }).collect();
        if exact {
            // Force weight w: first w positions nonzero, rest zero.
            for (i, e) in v.iter_mut().enumerate() {
                *e = if i < w { Elem(1 + e.0 % (q as u16 - 1)) } else { Elem::ZERO };
            }
        }
        prop_assume!(hamming_weight(&v) > 0);
        let fast = simplex_equations_satisfied(&v, &f, k).unwrap();
        prop_assert_eq!(fast, simplex_equations_literal(&v, &f, k).unwrap());
        prop_assert_eq!(fast, is_simplex_vector(&v, &f, k).unwrap());
    }
}
