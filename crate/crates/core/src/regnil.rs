//! The principal nilpotent `Λ`, its centralizer `J`, and the abelian
//! subalgebra `K` in the closure of the orbit of `J` whose basis has one
//! full-support element per height in the top window.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::deform::{subspace_limit, apply_unipotent_element, Subspace};
use crate::error::{Error, Result};
use crate::exact::{format_rational, rat, ratio, QMatrix, Rational};
use crate::liealg::{Element, LieModel};
use crate::roots::TypeTag;

#[derive(Clone, Debug)]
pub struct JordanData {
    pub lambda: Element,
    pub centralizer: Subspace,
    /// Height of each reduced basis vector, ascending.
    pub graded_heights: Vec<i64>,
    /// `Z = Ẽ_{1,n} − Ẽ_{1,n+1}` in type D.
    pub z_element: Option<Element>,
}

/// Height of a homogeneous element of `n`, `None` otherwise.
pub fn homogeneous_height(model: &LieModel, x: &Element) -> Option<i64> {
    let mut hs = x.support().map(|i| model.root_of(i).map(|a| model.sys().height(a)));
    let first = hs.next()??;
    hs.all(|h| h == Some(first)).then_some(first)
}

/// Splits a graded subspace into its height components.
pub fn graded_components(model: &LieModel, s: &Subspace) -> Result<Vec<(i64, Vec<Element>)>> {
    let mut out: Vec<(i64, Vec<Element>)> = Vec::new();
    for x in s.elements() {
        let h = homogeneous_height(model, &x)
            .ok_or_else(|| Error::Consistency(format!("non-homogeneous basis vector {}", model.format_element(&x))))?;
        match out.iter_mut().find(|(k, _)| *k == h) {
            Some((_, v)) => v.push(x),
            None => out.push((h, vec![x])),
        }
    }
    out.sort_by_key(|(h, _)| *h);
    Ok(out)
}

/// `J = z_n(Λ)` as the kernel of `ad Λ` on the nilradical.
pub fn jordan_subalgebra(model: &LieModel) -> Result<JordanData> {
    let lambda = model.lambda();
    let ad = model.ad_matrix(&lambda);
    let n = model.rank();
    let roots = model.sys().len();
    let mut restricted = QMatrix::zeros(model.dim(), roots);
    for i in 0..model.dim() {
        for a in 0..roots {
            restricted[(i, a)] = ad[(i, n + a)].clone();
        }
    }
    let kernel: Vec<Vec<Rational>> = restricted
        .kernel()
        .into_iter()
        .map(|v| {
            let mut full = vec![Rational::zero(); n];
            full.extend(v);
            full
        })
        .collect();
    let centralizer = Subspace::span(model.dim(), kernel);
    if centralizer.dim() != n {
        return Err(Error::Consistency(format!("dim J = {} but rank is {n}", centralizer.dim())));
    }
    let graded_heights = graded_components(model, &centralizer)?
        .into_iter()
        .flat_map(|(h, v)| std::iter::repeat_n(h, v.len()))
        .collect();
    let z_element = (model.sys().tag() == TypeTag::D).then(|| z_element(model)).transpose()?;
    Ok(JordanData { lambda, centralizer, graded_heights, z_element })
}

/// `Λ^k` as a matrix power, decomposed into basis coordinates.
pub fn lambda_power(model: &LieModel, k: u32) -> Result<Element> {
    let real = model.realization().ok_or_else(|| Error::Unsupported("no matrix realization".into()))?;
    let m = real.to_matrix(model, &model.lambda()).pow(k);
    if !real.contains(&m) {
        return Err(Error::Unsupported(format!("Λ^{k} is not in the Lie algebra")));
    }
    real.to_element(model, &m)
}

fn z_element(model: &LieModel) -> Result<Element> {
    let real = model.realization().ok_or_else(|| Error::Unsupported("no matrix realization".into()))?;
    let n = model.rank();
    real.to_element(model, &real.tilde(1, n).sub(&real.tilde(1, n + 1)))
}

/// The nilpotent `S` with `K = lim exp(t⁻¹ ad S)(J)` for classical types.
pub fn build_s(model: &LieModel) -> Result<Element> {
    let tag = model.sys().tag();
    if tag == TypeTag::A {
        return Ok(Element::zero());
    }
    let real = model.realization().ok_or_else(|| Error::Unsupported(format!("no matrix S for {tag}")))?;
    let n = model.rank();
    let size = real.size();
    let mut s = QMatrix::zeros(size, size);
    let mut add = |c: Rational, m: QMatrix| s = s.lin_comb(&c, &m);
    match (tag, n % 2 == 1) {
        (TypeTag::B, true) => {
            let m = (n - 1) / 2;
            for i in 1..=m + 1 {
                add(rat(i as i64), real.tilde(i, n + i));
            }
        }
        (TypeTag::B, false) => {
            let m = n / 2;
            for i in 1..=m + 1 {
                add(rat(i as i64), real.tilde(i, i + n - 1));
            }
        }
        (TypeTag::C, true) => {
            for i in 1..=n {
                add(ratio(-1, 2), real.e(i, n + i));
            }
        }
        (TypeTag::C, false) => {
            add(ratio(1, 2), real.e(1, n));
            add(ratio(-1, 2), real.e(n + 1, 2 * n));
            for i in 1..n {
                add(ratio(-1, 2), real.e(i + 1, n + i));
            }
        }
        (TypeTag::D, true) => {
            for (i, a) in [(1, 2), (2, 1)] {
                add(rat(a), real.tilde(i, i + n - 2));
            }
            for i in 2..=n.div_ceil(2) {
                let b = if i == 2 { 1 } else { -(i as i64) };
                add(rat(b), real.tilde(i, i + n - 1));
            }
        }
        (TypeTag::D, false) => {
            for i in 1..=n / 2 {
                add(rat(-(i as i64)), real.tilde(i, i + n));
            }
        }
        _ => return Err(Error::Unsupported(format!("no matrix S for {tag}"))),
    }
    if !real.contains(&s) {
        return Err(Error::Consistency("S is not in the Lie algebra".into()));
    }
    real.to_element(model, &s)
}

/// Generators of `K` in the closed forms of the classical constructions.
pub fn predicted_k_generators(model: &LieModel) -> Result<Vec<Element>> {
    let tag = model.sys().tag();
    let n = model.rank() as u32;
    let s = build_s(model)?;
    let pw = |k: u32| lambda_power(model, k);
    let comm = |k: u32| -> Result<Element> { Ok(model.bracket(&s, &pw(k)?)) };
    let mut out = Vec::new();
    match tag {
        TypeTag::A => {
            for k in 1..=n {
                out.push(pw(k)?);
            }
        }
        TypeTag::B => {
            let shift = if n % 2 == 1 { n } else { n - 1 };
            for l in n..=2 * n - 1 {
                out.push(if l % 2 == 0 { comm(l - shift)? } else { pw(l)? });
            }
        }
        TypeTag::C => {
            let real = model.realization().unwrap();
            let la = lambda_a(n as usize);
            for k in 1..=n {
                if 2 * k > n + (n + 1) % 2 {
                    out.push(pw(2 * k - 1)?);
                } else {
                    let e = if n % 2 == 1 { 2 * k - 1 } else { 2 * k - 2 };
                    out.push(real.to_element(model, &upper_block(&la.pow(e)))?);
                }
            }
        }
        TypeTag::D => {
            out.push(z_element(model)?);
            let shift = if n % 2 == 1 { n - 2 } else { n - 1 };
            for l in n - 1..=2 * n - 3 {
                out.push(if l % 2 == 0 { comm(l - shift)? } else { pw(l)? });
            }
        }
        _ => return Err(Error::Unsupported(format!("no closed-form K for {tag}"))),
    }
    Ok(out)
}

/// `Λ_A = Σ_{i<n} E_{i,i+1}` of size `n`.
pub fn lambda_a(n: usize) -> QMatrix {
    let mut m = QMatrix::zeros(n, n);
    for i in 0..n - 1 {
        m[(i, i + 1)] = Rational::one();
    }
    m
}

/// `[[O, B], [O, O]]`.
pub fn upper_block(b: &QMatrix) -> QMatrix {
    let n = b.rows();
    let mut m = QMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            m[(i, n + j)] = b[(i, j)].clone();
        }
    }
    m
}

/// One unipotent step of a `K` construction.
#[derive(Clone, Debug, Serialize)]
pub struct KStep {
    pub element: Vec<(String, String)>,
    #[serde(skip)]
    pub raw: Element,
}

#[derive(Clone, Debug)]
pub struct KBasis {
    pub subspace: Subspace,
    /// `(i, Λ^{(i)})` for every height in the window, ascending.
    pub generators: Vec<(i64, Element)>,
    /// Type D: `Z`, the extra height-`(n−1)` generator.
    pub z: Option<Element>,
    pub steps: Vec<KStep>,
    /// Chosen `(a, b)` for the two-term steps of E6/E7/E8.
    pub params: Option<(i64, i64)>,
    /// Observations recorded while building (e.g. which branch fired).
    pub notes: Vec<String>,
}

impl KBasis {
    /// `c_α` of `Λ^{(i)}` for every root of height `i`.
    pub fn coefficient_table(&self, model: &LieModel) -> Vec<(String, String)> {
        self.generators
            .iter()
            .flat_map(|(_, g)| model.element_terms(g))
            .collect()
    }

    pub fn generator(&self, height: i64) -> Option<&Element> {
        self.generators.iter().find(|(h, _)| *h == height).map(|(_, g)| g)
    }
}

/// Lowest height of the window occupied by `K`.
pub fn window_start(model: &LieModel) -> i64 {
    let top = model.sys().height(model.sys().maximal());
    let n = model.rank() as i64;
    if model.sys().tag() == TypeTag::D {
        top - (n - 2)
    } else {
        top - (n - 1)
    }
}

/// Whether `x` is supported on exactly the roots of height `h`.
pub fn full_support(model: &LieModel, x: &Element, h: i64) -> bool {
    let roots = model.sys().at_height(h);
    x.terms().len() == roots.len() && roots.iter().all(|&a| !x.coeff(model.x(a)).is_zero())
}

/// Unipotent elements defining `K` for exceptional types, parameterized by `(a, b)`.
fn exceptional_steps(model: &LieModel, ab: (i64, i64)) -> Result<Vec<Element>> {
    let sys = model.sys();
    let x = |s: &str| -> Result<Element> { Ok(model.root_vector(sys.parse_label(s)?)) };
    let two = |p: &str, q: &str| -> Result<Element> {
        Ok(x(p)?.scale(&rat(ab.0)).add(&x(q)?.scale(&rat(ab.1))))
    };
    Ok(match sys.tag() {
        TypeTag::G2 => vec![x("21")?],
        TypeTag::F4 => vec![x("1242")?, x("0121")?, x("0001")?],
        TypeTag::E6 => vec![two("01111/1", "01210/1")?],
        TypeTag::E7 => vec![
            x("124321/2")?,
            x("123210/1")?,
            x("012210/1")?,
            two("001100/1", "111000/0")?,
        ],
        TypeTag::E8 => vec![
            x("2465421/3")?,
            x("2343321/2")?,
            x("1233221/1")?,
            x("1232210/1")?,
            x("1111110/1")?,
            two("0011100/0", "0110000/1")?,
        ],
        t => return Err(Error::Unsupported(format!("{t} is not exceptional"))),
    })
}

/// Parameter choices tried in order for the two-term steps.
pub const AB_CANDIDATES: [(i64, i64); 5] = [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1)];

/// Runs successive unipotent limits from `J`.
pub fn unipotent_chain(model: &LieModel, start: &Subspace, steps: &[Element]) -> Result<Vec<Subspace>> {
    let mut cur = start.clone();
    let mut out = Vec::with_capacity(steps.len());
    for x in steps {
        cur = subspace_limit(&apply_unipotent_element(&cur, x, model)?)?;
        out.push(cur.clone());
    }
    Ok(out)
}

/// Generators by height, plus notes.
type Shape = (Vec<(i64, Element)>, Vec<String>);

/// Checks the graded shape of a candidate `K` and extracts its basis.
fn shape_k(model: &LieModel, k: &Subspace, z: Option<&Element>) -> std::result::Result<Shape, String> {
    let n = model.rank();
    if k.dim() != n {
        return Err(format!("dim K = {}", k.dim()));
    }
    if !k.is_abelian(model) {
        return Err("K is not abelian".into());
    }
    let comps = graded_components(model, k).map_err(|e| e.to_string())?;
    let lo = window_start(model);
    let top = model.sys().height(model.sys().maximal());
    let mut gens = Vec::new();
    let mut notes = Vec::new();
    for h in lo..=top {
        let Some((_, v)) = comps.iter().find(|(k, _)| *k == h) else {
            return Err(format!("no component at height {h}"));
        };
        let expected = if z.is_some() && h == lo { 2 } else { 1 };
        if v.len() != expected {
            return Err(format!("component at height {h} has dimension {}", v.len()));
        }
        let g = if expected == 1 {
            v[0].clone()
        } else {
            let z = z.unwrap();
            let (idx_m, idx_p) = d_special_indices(model);
            let choice = (0..8).find_map(|c| {
                let g = v[0].add_scaled(&rat(c), &v[1]);
                let det = &g.coeff(idx_m) * &z.coeff(idx_p) - &g.coeff(idx_p) * &z.coeff(idx_m);
                (full_support(model, &g, h) && !det.is_zero()).then_some((c, g))
            });
            let Some((c, g)) = choice else {
                return Err(format!("no admissible Λ^({h}) in the height-{h} component"));
            };
            notes.push(format!("Λ^({h}) = first reduced row + {c} × second reduced row"));
            g
        };
        if !full_support(model, &g, h) {
            return Err(format!("Λ^({h}) has a vanishing coefficient"));
        }
        gens.push((h, g));
    }
    if let Some(z) = z {
        if !k.contains_element(z) {
            return Err("Z is not in K".into());
        }
    }
    Ok((gens, notes))
}

/// Basis indices of `X_{ε₁−ε_n}` and `X_{ε₁+ε_n}` in type D.
pub fn d_special_indices(model: &LieModel) -> (usize, usize) {
    let n = model.rank();
    let sys = model.sys();
    let m = sys.parse_label(&format!("e1-e{n}")).expect("D root");
    let p = sys.parse_label(&format!("e1+e{n}")).expect("D root");
    (model.x(m), model.x(p))
}

/// Builds `K` and validates its defining properties.
pub fn build_k(model: &LieModel) -> Result<KBasis> {
    let tag = model.sys().tag();
    let jd = jordan_subalgebra(model)?;
    if tag.is_classical() {
        let s = build_s(model)?;
        let k = if s.is_zero() {
            jd.centralizer.clone()
        } else {
            subspace_limit(&apply_unipotent_element(&jd.centralizer, &s, model)?)?
        };
        let (generators, mut notes) =
            shape_k(model, &k, jd.z_element.as_ref()).map_err(Error::DegenerateParameter)?;
        if tag == TypeTag::D {
            let z = jd.z_element.as_ref().unwrap();
            let sz = model.bracket(&s, z);
            notes.push(if sz.is_zero() {
                "[S, Z] = 0".to_string()
            } else {
                format!("[S, Z] = {} (height {:?})", model.format_element(&sz), homogeneous_height(model, &sz))
            });
        }
        let steps = if s.is_zero() { vec![] } else { vec![KStep { element: model.element_terms(&s), raw: s }] };
        return Ok(KBasis { subspace: k, generators, z: jd.z_element, steps, params: None, notes });
    }
    let needs_params = matches!(tag, TypeTag::E6 | TypeTag::E7 | TypeTag::E8);
    let candidates: &[(i64, i64)] = if needs_params { &AB_CANDIDATES } else { &[(1, 1)] };
    let mut failures = Vec::new();
    for &ab in candidates {
        let xs = exceptional_steps(model, ab)?;
        let k = unipotent_chain(model, &jd.centralizer, &xs)?.pop().unwrap();
        match shape_k(model, &k, None) {
            Ok((generators, mut notes)) => {
                if needs_params {
                    notes.push(format!("(a, b) = ({}, {})", ab.0, ab.1));
                }
                let steps = xs.into_iter().map(|x| KStep { element: model.element_terms(&x), raw: x }).collect();
                return Ok(KBasis {
                    subspace: k,
                    generators,
                    z: None,
                    steps,
                    params: needs_params.then_some(ab),
                    notes,
                });
            }
            Err(e) => failures.push(format!("(a, b) = {ab:?}: {e}")),
        }
    }
    Err(Error::DegenerateParameter(failures.join("; ")))
}

/// Pretty form of a coefficient table entry.
pub fn describe(model: &LieModel, x: &Element) -> String {
    x.terms()
        .iter()
        .map(|(i, c)| format!("{} {}", format_rational(c), model.basis_label(*i)))
        .collect::<Vec<_>>()
        .join(", ")
}
