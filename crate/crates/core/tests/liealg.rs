use jordan_limits::exact::rat;
use jordan_limits::liealg::{Element, LieModel};
use jordan_limits::roots::TypeTag;

fn models() -> Vec<LieModel> {
    let mut out = Vec::new();
    for n in 1..=7 {
        out.push(LieModel::build(TypeTag::A, n).unwrap());
    }
    for n in 2..=7 {
        out.push(LieModel::build(TypeTag::B, n).unwrap());
        out.push(LieModel::build(TypeTag::C, n).unwrap());
    }
    for n in 4..=7 {
        out.push(LieModel::build(TypeTag::D, n).unwrap());
    }
    for t in [TypeTag::G2, TypeTag::F4, TypeTag::E6, TypeTag::E7] {
        out.push(LieModel::build(t, t.fixed_rank().unwrap()).unwrap());
    }
    out
}

#[test]
fn bracket_tables_are_valid_chevalley_data() {
    for m in models() {
        let name = format!("{}{}", m.sys().tag(), m.rank());
        assert!(m.antisymmetry_violations().is_empty(), "{name} antisymmetry");
        assert!(m.jacobi_violations().is_empty(), "{name} Jacobi");
        assert!(m.kurtzke_violations().is_empty(), "{name} normalization");
        assert!(m.weight_violations().is_empty(), "{name} weights");
    }
}

#[test]
fn e8_bracket_table_is_valid() {
    let m = LieModel::build(TypeTag::E8, 8).unwrap();
    assert!(m.antisymmetry_violations().is_empty());
    assert!(m.jacobi_violations().is_empty());
    assert!(m.kurtzke_violations().is_empty());
}

#[test]
fn simply_laced_normalization_is_one() {
    let m = LieModel::build(TypeTag::E6, 6).unwrap();
    let sys = m.sys();
    for i in 0..6 {
        let ai = sys.simple(i);
        for b in 0..sys.len() {
            if sys.height(b) >= 2 && sys.sum(ai, b).is_some() {
                assert_eq!(m.constant(ai, b), &rat(1));
            }
        }
    }
}

#[test]
fn g2_short_string_constant() {
    let m = LieModel::build(TypeTag::G2, 2).unwrap();
    let sys = m.sys();
    let a1 = sys.simple(0);
    let a12 = sys.find(&[1, 1]).unwrap();
    let a21 = sys.find(&[2, 1]).unwrap();
    assert_eq!(sys.sum(a1, a12), Some(a21));
    assert_eq!(m.constant(a1, a12), &rat(2));
}

#[test]
fn maximal_root_vector_is_central_in_n() {
    for m in models() {
        let top = m.root_vector(m.sys().maximal());
        for b in 0..m.sys().len() {
            assert!(m.bracket(&top, &m.root_vector(b)).is_zero());
        }
    }
}

#[test]
fn sp6_worked_example_bracket() {
    let m = LieModel::build(TypeTag::C, 3).unwrap();
    let r = m.realization().unwrap();
    let e25 = r.e(2, 5);
    let lambda = r.to_matrix(&m, &m.lambda());
    // [E25, Λ] = −(E15 + E26).
    let expect = r.e(1, 5).add(&r.e(2, 6)).scale(&rat(-1));
    assert_eq!(e25.commutator(&lambda), expect);
    let x = r.to_element(&m, &e25).unwrap();
    let y = m.bracket(&x, &m.lambda());
    assert_eq!(r.to_matrix(&m, &y), expect);
}

#[test]
fn b3_lambda_cube_commutes_with_lambda() {
    let m = LieModel::build(TypeTag::B, 3).unwrap();
    let r = m.realization().unwrap();
    let lam = r.to_matrix(&m, &m.lambda());
    let cube = r.to_element(&m, &lam.pow(3)).unwrap();
    assert!(m.bracket(&m.lambda(), &cube).is_zero());
    assert!(!cube.is_zero());
}

#[test]
fn self_bracket_vanishes() {
    let m = LieModel::build(TypeTag::D, 5).unwrap();
    let x = Element::from_terms((0..m.sys().len()).map(|a| (m.x(a), rat(a as i64 % 5 - 2))));
    assert!(m.bracket(&x, &x).is_zero());
}
