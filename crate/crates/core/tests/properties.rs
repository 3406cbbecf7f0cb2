use jordan_limits::chains::ie::{brute_check, solve_ie};
use jordan_limits::deform::{apply_toric, bracket_laurent, exp_ad_laurent, subspace_limit, Subspace};
use jordan_limits::exact::{laurent_normalize, rat, LaurentPoly, QMatrix, Rational};
use jordan_limits::ideals::Partition;
use jordan_limits::liealg::{Element, LieModel};
use jordan_limits::roots::TypeTag;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, cols), rows)
}

fn to_q(ints: &[Vec<i64>]) -> QMatrix {
    QMatrix::from_rows(ints.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
}

fn fraction_free_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            for c in col + 1..cols {
                m[r][c] = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

fn partition() -> impl Strategy<Value = Partition> {
    (1usize..=12).prop_flat_map(|n| {
        let all = Partition::all(n);
        (0..all.len()).prop_map(move |k| all[k].clone())
    })
}

fn model_for(k: usize) -> LieModel {
    let (t, n) = [(TypeTag::A, 4), (TypeTag::B, 3), (TypeTag::C, 3), (TypeTag::D, 4), (TypeTag::G2, 2)][k];
    LieModel::build(t, n).unwrap()
}

fn element(model: &LieModel, coeffs: &[i64], nilpotent: bool) -> Element {
    let lo = if nilpotent { model.rank() } else { 0 };
    Element::from_terms((lo..model.dim()).zip(coeffs).map(|(i, &c)| (i, rat(c))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_matches_fraction_free_elimination(ints in matrix(5, 8)) {
        prop_assert_eq!(to_q(&ints).rank(), fraction_free_rank(&ints));
    }

    #[test]
    fn kernel_is_annihilated_and_complements_rank(r in 1usize..6, c in 1usize..8, seed in matrix(6, 8)) {
        let ints: Vec<Vec<i64>> = seed[..r].iter().map(|row| row[..c].to_vec()).collect();
        let m = to_q(&ints);
        let kernel = m.kernel();
        prop_assert_eq!(m.rank() + kernel.len(), c);
        for v in &kernel {
            prop_assert!(m.apply(v).iter().all(Zero::is_zero));
        }
        let (_, reduced) = m.rref();
        prop_assert_eq!(reduced.rref().1, reduced);
    }

    #[test]
    fn normalize_strips_the_valuation(exps in prop::collection::vec(-4i64..4, 1..5), shift in -3i64..3) {
        let v: Vec<LaurentPoly> = exps.iter().map(|&e| LaurentPoly::monomial(rat(1), e)).collect();
        let moved: Vec<LaurentPoly> = v.iter().map(|p| p.shift(shift)).collect();
        let (s0, n0) = laurent_normalize(&v).unwrap();
        let (s1, n1) = laurent_normalize(&moved).unwrap();
        prop_assert_eq!(s1, s0 + shift);
        prop_assert_eq!(n0, n1);
    }

    #[test]
    fn inequality_solutions_pass_the_brute_check(mu in partition()) {
        let s = solve_ie(&mu).unwrap();
        prop_assert!(brute_check(&mu, &s.z).is_ok());
        prop_assert_eq!(s.w.iter().sum::<i64>(), 0);
    }

    #[test]
    fn self_bracket_vanishes(k in 0usize..5, coeffs in prop::collection::vec(-3i64..=3, 40)) {
        let model = model_for(k);
        let x = element(&model, &coeffs, false);
        prop_assert!(model.bracket(&x, &x).is_zero());
    }

    #[test]
    fn exp_ad_is_an_automorphism(
        k in 0usize..5,
        a in prop::collection::vec(-2i64..=2, 40),
        b in prop::collection::vec(-2i64..=2, 40),
        c in prop::collection::vec(-2i64..=2, 40),
    ) {
        let model = model_for(k);
        let x = element(&model, &a, true);
        let (u, v) = (element(&model, &b, false), element(&model, &c, false));
        let lift = |e: &Element| -> Vec<LaurentPoly> {
            e.to_dense(model.dim()).into_iter().map(LaurentPoly::constant).collect()
        };
        let g = |w: &[LaurentPoly]| exp_ad_laurent(&model, &x, &Rational::one(), -1, w);
        prop_assert_eq!(g(&lift(&model.bracket(&u, &v))), bracket_laurent(&model, &g(&lift(&u)), &g(&lift(&v))));
    }

    #[test]
    fn toric_limits_of_root_spans_are_fixed(k in 0usize..5, m in prop::collection::vec(-3i64..=3, 4), pick in prop::collection::vec(any::<bool>(), 20)) {
        let model = model_for(k);
        let roots: Vec<usize> = (0..model.sys().len()).filter(|&a| pick[a % pick.len()]).collect();
        prop_assume!(!roots.is_empty());
        let s = Subspace::from_roots(&model, &roots);
        let f = apply_toric(&s, &m[..model.rank()], &model).unwrap();
        prop_assert_eq!(subspace_limit(&f).unwrap(), s);
    }
}
