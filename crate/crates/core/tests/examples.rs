use jordan_limits::chains::examples::{ranee, sp6};
use jordan_limits::chains::exceptional::stated_j_basis;
use jordan_limits::chains::{chain_for, run_suite, AlgebraContext};
use jordan_limits::deform::{apply_toric, exp_ad_laurent, subspace_limit, DeformationStep, Subspace};
use jordan_limits::exact::{LaurentPoly, QMatrix, Rational};
use jordan_limits::ideals::{
    classify_bcd, highest_weight_check, ideal_a, minus_root, partition_of_ideal_a, plus_root, AbelianIdeal, BcdClass,
    Partition,
};
use jordan_limits::liealg::LieModel;
use jordan_limits::roots::{upward_closure_test, RootSystem, TypeTag};
use num_traits::One;

fn ctx(tag: TypeTag, rank: usize) -> AlgebraContext {
    AlgebraContext::new(tag, rank).unwrap()
}

fn passes(ctx: &AlgebraContext, ideal: &AbelianIdeal) -> bool {
    let chain = chain_for(ctx, ideal).unwrap();
    chain.run(&ctx.model).unwrap().iter().all(|o| o.equal)
}

fn labels(sys: &RootSystem, ls: &[&str]) -> Vec<usize> {
    ls.iter().map(|l| sys.parse_label(l).unwrap()).collect()
}

#[test]
fn sl4_centralizer_of_lambda_is_three_dimensional() {
    // Strictly upper 4×4 matrices commuting with the shift, solved by hand.
    let mut shift = QMatrix::zeros(4, 4);
    for i in 0..3 {
        shift[(i, i + 1)] = Rational::one();
    }
    let positions: Vec<(usize, usize)> = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).collect();
    let columns: Vec<Vec<Rational>> = positions
        .iter()
        .map(|&(i, j)| {
            let mut e = QMatrix::zeros(4, 4);
            e[(i, j)] = Rational::one();
            let c = shift.commutator(&e);
            (0..4).flat_map(|r| (0..4).map(move |s| (r, s))).map(|(r, s)| c[(r, s)].clone()).collect()
        })
        .collect();
    let system = QMatrix::from_rows(columns).transpose();
    assert_eq!(system.kernel().len(), 3);

    let c = ctx(TypeTag::A, 3);
    assert_eq!(c.jordan.centralizer.dim(), 3);
}

#[test]
fn f4_upward_closure() {
    let model = LieModel::build(TypeTag::F4, 4).unwrap();
    let sys = model.sys();
    assert!(upward_closure_test(&labels(sys, &["2342", "1342", "1242", "1232"]), sys));
    assert!(!upward_closure_test(&labels(sys, &["1232"]), sys));
    assert!(upward_closure_test(&[sys.maximal()], sys));
}

#[test]
fn type_a_round_trip_for_partitions_of_seven() {
    let sys = RootSystem::new(TypeTag::A, 7).unwrap();
    let all = Partition::all(7);
    assert_eq!(all.len(), 15);
    for mu in all {
        let ideal = ideal_a(&mu, &sys).unwrap();
        assert_eq!(ideal.roots.len(), 7);
        assert_eq!(partition_of_ideal_a(&ideal, &sys).unwrap(), mu);
    }
}

#[test]
fn classification_examples() {
    for n in 3..=7 {
        let sys = RootSystem::new(TypeTag::B, n).unwrap();
        let mut roots = vec![sys.parse_label("e1").unwrap()];
        roots.extend((2..=n).map(|j| plus_root(&sys, 1, j).unwrap()));
        let ideal = AbelianIdeal { roots, type_class: None };
        assert_eq!(classify_bcd(&ideal, &sys).unwrap(), BcdClass::BCase1, "B{n}");
    }
    for n in 5..=7 {
        let sys = RootSystem::new(TypeTag::D, n).unwrap();
        let mut roots = vec![plus_root(&sys, 2, 3).unwrap(), minus_root(&sys, 1, n).unwrap()];
        roots.extend((2..n).map(|j| plus_root(&sys, 1, j).unwrap()));
        let ideal = AbelianIdeal { roots, type_class: None };
        assert_eq!(classify_bcd(&ideal, &sys).unwrap(), BcdClass::DCase3, "D{n}");
    }
    for n in 3..=7 {
        let c = ctx(TypeTag::C, n);
        assert!(c.ideals.iter().all(|i| i.type_class == Some(BcdClass::PlusOnly)), "C{n}");
    }
}

#[test]
fn highest_weight_rejects_padded_top_root() {
    let sys = RootSystem::new(TypeTag::B, 3).unwrap();
    assert!(!highest_weight_check(&[sys.maximal(), sys.simple(0)], &sys));
    let f4 = RootSystem::new(TypeTag::F4, 4).unwrap();
    assert!(highest_weight_check(&labels(&f4, &["2342", "1342", "1242", "1232"]), &f4));
}

#[test]
fn ranee_closed_forms() {
    let a2 = ctx(TypeTag::A, 2);
    let want = Subspace::from_elements(&a2.model, &[a2.model.lambda(), a2.model.root_vector(a2.model.sys().maximal())]);
    assert_eq!(ranee(&a2).steps[0].step.apply(&Subspace::cartan(&a2.model), &a2.model).unwrap(), want);

    let g2 = ctx(TypeTag::G2, 2);
    let top = g2.model.sys().parse_label("32").unwrap();
    let want = Subspace::from_elements(&g2.model, &[g2.model.lambda(), g2.model.root_vector(top)]);
    assert_eq!(want, g2.jordan.centralizer);
    assert!(ranee(&g2).run(&g2.model).unwrap()[0].equal);
}

#[test]
fn sp6_unipotent_example() {
    // exp(t⁻¹ ad E₂₅)(tΛ) = tΛ − (E₁₅ + E₂₆).
    let c = ctx(TypeTag::C, 3);
    let model = &c.model;
    let real = model.realization().unwrap();
    let x = real.to_element(model, &real.e(2, 5)).unwrap();
    let lambda = model.lambda();
    let t_lambda: Vec<LaurentPoly> =
        lambda.to_dense(model.dim()).into_iter().map(|c| LaurentPoly::monomial(c, 1)).collect();
    let got = exp_ad_laurent(model, &x, &Rational::one(), -1, &t_lambda);
    let shifted = real.e(1, 5).add(&real.e(2, 6));
    let constant = real.to_element(model, &shifted).unwrap().to_dense(model.dim());
    let want_linear = lambda.to_dense(model.dim());
    for (i, p) in got.iter().enumerate() {
        assert_eq!(p.coeff(1), want_linear[i]);
        assert_eq!(p.coeff(0), -constant[i].clone());
        assert!(p.terms().all(|(e, _)| e == 0 || e == 1));
    }
}

#[test]
fn sp6_chains() {
    let c = ctx(TypeTag::C, 3);
    let ex = sp6(&c).unwrap();
    assert!(ex.to_k.run(&c.model).unwrap().iter().all(|o| o.equal));
    for chain in &ex.to_ideals {
        assert!(chain.run(&c.model).unwrap().iter().all(|o| o.equal));
    }
    assert_eq!(c.ideals.len(), 2);
    assert!(c.ideals.iter().all(|i| passes(&c, i)));
}

#[test]
fn toric_limits_of_root_lines() {
    let model = LieModel::build(TypeTag::B, 3).unwrap();
    for a in 0..model.sys().len() {
        let line = Subspace::from_roots(&model, &[a]);
        let f = apply_toric(&line, &[2, -1, 3], &model).unwrap();
        assert_eq!(subspace_limit(&f).unwrap(), line);
        let f = apply_toric(&line, &[0, 0, 0], &model).unwrap();
        assert!(f.generators().iter().flatten().all(|p| p.terms().all(|(e, _)| e == 0)));
    }
}

#[test]
fn d_case3_chains() {
    for n in 5..=7 {
        let c = ctx(TypeTag::D, n);
        let ideal = c.ideals.iter().find(|i| i.type_class == Some(BcdClass::DCase3)).unwrap();
        assert!(passes(&c, ideal), "D{n}");
    }
}

#[test]
fn b_case1_is_one_toric_step_from_k() {
    let c = ctx(TypeTag::B, 5);
    let ideal = c.ideals.iter().find(|i| i.type_class == Some(BcdClass::BCase1)).unwrap();
    let mut m = vec![0; 5];
    m[0] = -1;
    assert_eq!(DeformationStep::toric(m).apply(&c.k.subspace, &c.model).unwrap(), ideal.subspace(&c.model));
}

#[test]
fn d4_case_ii_by_lambda_four() {
    let c = ctx(TypeTag::D, 4);
    let ideal = c.ideals.iter().find(|i| i.type_class == Some(BcdClass::D4Special(2))).unwrap();
    assert_eq!(
        DeformationStep::toric(vec![0, 0, 0, -1]).apply(&c.k.subspace, &c.model).unwrap(),
        ideal.subspace(&c.model)
    );
}

#[test]
fn e8_alpha_two_finish_also_works() {
    let c = ctx(TypeTag::E8, 8);
    let sys = c.model.sys();
    assert_eq!(c.ideals.len(), 2);
    let other = c.ideals.iter().find(|i| !i.contains(sys.parse_label("1354321/3").unwrap())).unwrap();
    let step = DeformationStep::unipotent_root(&c.model, sys.simple(1));
    assert_eq!(step.apply(&c.k.subspace, &c.model).unwrap(), other.subspace(&c.model));
}

#[test]
fn stated_f4_e6_e7_bases_lie_in_j() {
    for (tag, rank) in [(TypeTag::F4, 4), (TypeTag::E6, 6), (TypeTag::E7, 7)] {
        let c = ctx(tag, rank);
        for (h, terms) in stated_j_basis(tag) {
            assert!(c.jordan.centralizer.contains_element(&c.combination(&terms).unwrap()), "{tag} f{h}");
        }
    }
}

#[test]
fn e8_f7_as_printed_misses_j_and_the_corrected_one_is_in_it() {
    let c = ctx(TypeTag::E8, 8);
    let (_, mut f7) = stated_j_basis(TypeTag::E8).into_iter().find(|(h, _)| *h == 7).unwrap();
    assert!(!c.jordan.centralizer.contains_element(&c.combination(&f7).unwrap()));
    let entry = f7.iter_mut().find(|(_, l)| *l == "1111111/0").unwrap();
    entry.0 = -3;
    assert!(c.jordan.centralizer.contains_element(&c.combination(&f7).unwrap()));
}

#[test]
fn serial_and_parallel_suites_agree() {
    let configs = [(TypeTag::A, 5), (TypeTag::B, 4), (TypeTag::C, 4), (TypeTag::D, 5), (TypeTag::F4, 4), (TypeTag::E6, 6)];
    let serial = serde_json::to_string(&run_suite(&configs, false, false).unwrap()).unwrap();
    let parallel = serde_json::to_string(&run_suite(&configs, true, false).unwrap()).unwrap();
    assert_eq!(serial, parallel);
    let again = serde_json::to_string(&run_suite(&configs, true, false).unwrap()).unwrap();
    assert_eq!(parallel, again);
}

#[test]
fn certificate_without_timing() {
    let g2 = ctx(TypeTag::G2, 2);
    let cert = jordan_limits::chains::certify(&g2, &g2.ideals[0], false);
    assert!(cert.pass);
    assert_eq!(cert.millis, 0);
    assert_eq!(cert.steps.len(), 1);
    assert_eq!(cert.steps[0].kind, "unipotent");
}
