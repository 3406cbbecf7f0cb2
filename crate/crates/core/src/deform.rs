//! One-parameter deformations of subspaces and their limits at `t → 0`.
//!
//! A [`SubspaceFamily`] is a list of generators with Laurent-polynomial
//! coordinates. [`subspace_limit`] computes the fiber at `t = 0` of the
//! induced map to the Grassmannian by Gaussian elimination on constant
//! terms, dividing a generator by `t` whenever its constant term becomes
//! dependent on the previous ones.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{laurent_normalize, rat, LaurentPoly, QMatrix, Rational};
use crate::liealg::{Element, LieModel};

/// A subspace in reduced row-echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    /// Span of the given vectors.
    pub fn span(ambient: usize, vectors: Vec<Vec<Rational>>) -> Self {
        let (rank, red) = QMatrix::from_rows_with_cols(vectors, ambient).rref();
        Self { ambient, basis: red.row_vecs().into_iter().take(rank).collect() }
    }

    pub fn from_elements(model: &LieModel, xs: &[Element]) -> Self {
        let d = model.dim();
        Self::span(d, xs.iter().map(|x| x.to_dense(d)).collect())
    }

    /// Span of the root vectors `X_α` for the given root indices.
    pub fn from_roots(model: &LieModel, roots: &[usize]) -> Self {
        let xs: Vec<Element> = roots.iter().map(|&a| model.root_vector(a)).collect();
        Self::from_elements(model, &xs)
    }

    /// The Cartan subalgebra.
    pub fn cartan(model: &LieModel) -> Self {
        let xs: Vec<Element> = (0..model.rank()).map(|i| Element::basis(model.h(i))).collect();
        Self::from_elements(model, &xs)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn elements(&self) -> Vec<Element> {
        self.basis.iter().map(|v| Element::from_dense(v)).collect()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        QMatrix::from_rows_with_cols(rows, self.ambient).rank() == self.dim()
    }

    pub fn contains_element(&self, x: &Element) -> bool {
        self.contains(&x.to_dense(self.ambient))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Constant family spanned by this subspace's basis.
    pub fn constant_family(&self) -> SubspaceFamily {
        SubspaceFamily {
            ambient: self.ambient,
            generators: self
                .basis
                .iter()
                .map(|v| v.iter().map(|c| LaurentPoly::constant(c.clone())).collect())
                .collect(),
        }
    }

    /// All pairwise brackets vanish.
    pub fn is_abelian(&self, model: &LieModel) -> bool {
        let xs = self.elements();
        xs.iter().enumerate().all(|(i, x)| xs[i + 1..].iter().all(|y| model.bracket(x, y).is_zero()))
    }
}

/// Generators with Laurent-polynomial coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceFamily {
    ambient: usize,
    generators: Vec<Vec<LaurentPoly>>,
}

impl SubspaceFamily {
    /// Checks that the generators are independent at a generic `t`
    /// (evaluating at `t = 1`, then 2, then 3).
    pub fn new(ambient: usize, generators: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        assert!(generators.iter().all(|g| g.len() == ambient));
        let f = Self { ambient, generators };
        let k = f.generators.len();
        let best = (1..=3).map(|t0| f.eval(&rat(t0)).rank()).max().unwrap_or(0);
        if best != k {
            return Err(Error::RankCollapse { expected: k, found: best });
        }
        Ok(f)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn generators(&self) -> &[Vec<LaurentPoly>] {
        &self.generators
    }

    /// Generator matrix at `t = t0`.
    pub fn eval(&self, t0: &Rational) -> QMatrix {
        QMatrix::from_rows_with_cols(
            self.generators.iter().map(|g| g.iter().map(|p| p.eval(t0)).collect()).collect(),
            self.ambient,
        )
    }

    /// Generator coordinates as `(exponent, "p/q")` lists.
    pub fn to_pairs(&self) -> Vec<Vec<Vec<(i64, String)>>> {
        self.generators.iter().map(|g| g.iter().map(LaurentPoly::to_pairs).collect()).collect()
    }
}

/// `ad x` applied coefficientwise to a Laurent vector.
pub fn ad_laurent(model: &LieModel, x: &Element, v: &[LaurentPoly]) -> Vec<LaurentPoly> {
    let mut out = vec![LaurentPoly::zero(); v.len()];
    for (i, a) in x.terms() {
        for (j, p) in v.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            if let Some((k, c)) = model.basis_bracket(*i, j) {
                out[k] = out[k].add_scaled(&(c * a), p);
            }
        }
    }
    out
}

/// Bracket of two Laurent vectors.
pub fn bracket_laurent(model: &LieModel, u: &[LaurentPoly], v: &[LaurentPoly]) -> Vec<LaurentPoly> {
    let mut out = vec![LaurentPoly::zero(); u.len()];
    for (i, p) in u.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        for (j, q) in v.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            if let Some((k, c)) = model.basis_bracket(i, j) {
                out[k] = out[k].add_scaled(&c, &(p * q));
            }
        }
    }
    out
}

/// `exp(c·t^e·ad x)` applied to a Laurent vector; `x` must lie in `n`.
pub fn exp_ad_laurent(model: &LieModel, x: &Element, c: &Rational, e: i64, v: &[LaurentPoly]) -> Vec<LaurentPoly> {
    debug_assert!(x.support().all(|i| model.root_of(i).is_some()));
    let mut out = v.to_vec();
    let mut term = v.to_vec();
    let mut k = 0i64;
    loop {
        term = ad_laurent(model, x, &term);
        if term.iter().all(LaurentPoly::is_zero) {
            return out;
        }
        k += 1;
        let factor = c / Rational::from_integer(k.into());
        term = term.iter().map(|p| p.scale(&factor).shift(e)).collect();
        for (o, p) in out.iter_mut().zip(&term) {
            *o = &*o + p;
        }
        assert!(k as usize <= model.dim(), "ad x is not nilpotent");
    }
}

/// `exp(t⁻¹ ad x)(s)` for a nilpotent `x ∈ n`.
pub fn apply_unipotent_element(s: &Subspace, x: &Element, model: &LieModel) -> Result<SubspaceFamily> {
    let gens = s
        .constant_family()
        .generators
        .iter()
        .map(|g| exp_ad_laurent(model, x, &Rational::one(), -1, g))
        .collect();
    SubspaceFamily::new(s.ambient, gens)
}

/// `exp(t⁻¹ ad X_β)(s)`.
pub fn apply_unipotent(s: &Subspace, beta: usize, model: &LieModel) -> Result<SubspaceFamily> {
    apply_unipotent_element(s, &model.root_vector(beta), model)
}

/// Multiplies the `X_α` coordinate by `t^{exps[α]}`; Cartan coordinates are fixed.
pub fn apply_root_scaling(s: &Subspace, exps: &[i64], model: &LieModel) -> Result<SubspaceFamily> {
    let gens = s
        .basis
        .iter()
        .map(|v| {
            v.iter()
                .enumerate()
                .map(|(idx, c)| match model.root_of(idx) {
                    Some(a) => LaurentPoly::monomial(c.clone(), exps[a]),
                    None => LaurentPoly::constant(c.clone()),
                })
                .collect()
        })
        .collect();
    SubspaceFamily::new(s.ambient, gens)
}

/// `(m, α) = Σ m_j d_j`.
pub fn toric_pairing(m: &[i64], simple_coords: &[i64]) -> i64 {
    m.iter().zip(simple_coords).map(|(a, b)| a * b).sum()
}

/// Toric deformation: `X_α ↦ t^{(m,α)} X_α`.
pub fn apply_toric(s: &Subspace, m: &[i64], model: &LieModel) -> Result<SubspaceFamily> {
    let exps: Vec<i64> = model.sys().roots().iter().map(|r| toric_pairing(m, &r.simple)).collect();
    apply_root_scaling(s, &exps, model)
}

/// `Ad(diag(t^{w_1}, …, t^{w_N}))(s)` in the matrix realization.
pub fn apply_diag(s: &Subspace, w: &[i64], model: &LieModel) -> Result<SubspaceFamily> {
    let real = model.realization().ok_or_else(|| Error::Unsupported("no matrix realization".into()))?;
    assert_eq!(w.len(), real.size());
    let mut exps = Vec::with_capacity(model.sys().len());
    for a in 0..model.sys().len() {
        let (p, q) = real.position(a);
        let e = w[p] - w[q];
        let m = real.root_matrix(a);
        for i in 0..real.size() {
            for j in 0..real.size() {
                if !m[(i, j)].is_zero() && w[i] - w[j] != e {
                    return Err(Error::Unsupported("diagonal matrix is not in the group".into()));
                }
            }
        }
        exps.push(e);
    }
    apply_root_scaling(s, &exps, model)
}

/// `Ad(g)(s)` for a constant invertible matrix `g`.
pub fn apply_matrix_conjugation(s: &Subspace, g: &QMatrix, model: &LieModel) -> Result<Subspace> {
    let real = model.realization().ok_or_else(|| Error::Unsupported("no matrix realization".into()))?;
    let inv = g.inverse().ok_or(Error::Singular)?;
    let xs = s
        .elements()
        .iter()
        .map(|x| {
            let m = real.to_matrix(model, x);
            real.to_element(model, &(&(g * &m) * &inv))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Subspace::from_elements(model, &xs))
}

/// Permutation matrix with `P_{π(i), i} = 1` (zero-based `π`).
pub fn permutation_matrix(perm: &[usize]) -> QMatrix {
    let n = perm.len();
    let mut p = QMatrix::zeros(n, n);
    for (i, &j) in perm.iter().enumerate() {
        p[(j, i)] = Rational::one();
    }
    p
}

/// The fiber at `t = 0`.
pub fn subspace_limit(f: &SubspaceFamily) -> Result<Subspace> {
    let mut normalized = Vec::with_capacity(f.generators.len());
    let mut guard = 1usize;
    for g in &f.generators {
        let (_, v) = laurent_normalize(g)?;
        guard += v.iter().filter_map(LaurentPoly::degree).max().unwrap_or(0).max(0) as usize;
        normalized.push(v);
    }
    let mut pivots: Vec<(usize, Vec<LaurentPoly>)> = Vec::new();
    let mut shifts = 0usize;
    for mut g in normalized {
        loop {
            for (col, p) in &pivots {
                let c = g[*col].coeff(0);
                if !c.is_zero() {
                    g = g.iter().zip(p).map(|(x, y)| x.add_scaled(&-c.clone(), y)).collect();
                }
            }
            if let Some(col) = g.iter().position(|x| !x.coeff(0).is_zero()) {
                let inv = g[col].coeff(0).recip();
                pivots.push((col, g.iter().map(|x| x.scale(&inv)).collect()));
                break;
            }
            let (_, v) = laurent_normalize(&g).map_err(|_| Error::RankCollapse {
                expected: f.generators.len(),
                found: pivots.len(),
            })?;
            g = v;
            shifts += 1;
            if shifts > guard {
                return Err(Error::NonTermination(guard));
            }
        }
    }
    Ok(Subspace::span(
        f.ambient,
        pivots.iter().map(|(_, p)| p.iter().map(|x| x.coeff(0)).collect()).collect(),
    ))
}

/// A single deformation applied to an exact subspace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DeformationStep {
    /// No change.
    Identity,
    /// `lim exp(t⁻¹ ad x)`, with `x` given as `(label, "p/q")` terms.
    Unipotent {
        #[serde(skip)]
        element: Element,
        terms: Vec<(String, String)>,
    },
    /// `lim Ad(χ(t))` with `X_α ↦ t^{(m,α)} X_α`.
    Toric { m: Vec<i64> },
    /// `lim Ad(diag(t^w))` in the matrix realization.
    DiagMatrix { w: Vec<i64> },
    /// Constant conjugation by a permutation matrix (one-based images).
    Permutation { images: Vec<usize> },
}

impl DeformationStep {
    pub fn unipotent(model: &LieModel, element: Element) -> Self {
        let terms = model.element_terms(&element);
        DeformationStep::Unipotent { element, terms }
    }

    pub fn unipotent_root(model: &LieModel, beta: usize) -> Self {
        Self::unipotent(model, model.root_vector(beta))
    }

    pub fn toric(m: Vec<i64>) -> Self {
        DeformationStep::Toric { m }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            DeformationStep::Identity => "identity",
            DeformationStep::Unipotent { .. } => "unipotent",
            DeformationStep::Toric { .. } => "toric",
            DeformationStep::DiagMatrix { .. } => "diag_matrix",
            DeformationStep::Permutation { .. } => "permutation",
        }
    }

    /// Applies the step and takes the limit.
    pub fn apply(&self, s: &Subspace, model: &LieModel) -> Result<Subspace> {
        match self {
            DeformationStep::Identity => Ok(s.clone()),
            DeformationStep::Unipotent { element, .. } => subspace_limit(&apply_unipotent_element(s, element, model)?),
            DeformationStep::Toric { m } => subspace_limit(&apply_toric(s, m, model)?),
            DeformationStep::DiagMatrix { w } => subspace_limit(&apply_diag(s, w, model)?),
            DeformationStep::Permutation { images } => {
                let perm: Vec<usize> = images.iter().map(|i| i - 1).collect();
                apply_matrix_conjugation(s, &permutation_matrix(&perm), model)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::TypeTag;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        terms.iter().fold(LaurentPoly::zero(), |acc, &(c, e)| &acc + &LaurentPoly::monomial(rat(c), e))
    }

    #[test]
    fn constant_family_limit() {
        let s = Subspace::span(3, vec![vec![rat(1), rat(2), rat(0)], vec![rat(0), rat(1), rat(1)]]);
        assert_eq!(subspace_limit(&s.constant_family()).unwrap(), s);
    }

    #[test]
    fn collapsing_pair() {
        // span{(1, t), (1, 0)} → span{(1,0), (0,1)}.
        let f = SubspaceFamily::new(2, vec![vec![lp(&[(1, 0)]), lp(&[(1, 1)])], vec![lp(&[(1, 0)]), lp(&[])]]).unwrap();
        let lim = subspace_limit(&f).unwrap();
        assert_eq!(lim.dim(), 2);
        // Line through (1, t⁻¹) → (0, 1).
        let g = SubspaceFamily::new(2, vec![vec![lp(&[(1, 0)]), lp(&[(1, -1)])]]).unwrap();
        assert_eq!(subspace_limit(&g).unwrap(), Subspace::span(2, vec![vec![rat(0), rat(1)]]));
    }

    #[test]
    fn rank_collapse_rejected() {
        let g = vec![lp(&[(1, 0)]), lp(&[(1, 1)])];
        assert!(SubspaceFamily::new(2, vec![g.clone(), g]).is_err());
    }

    #[test]
    fn toric_zero_is_constant() {
        let m = LieModel::build(TypeTag::B, 3).unwrap();
        let lam = Subspace::from_elements(&m, &[m.lambda()]);
        let f = apply_toric(&lam, &[0, 0, 0], &m).unwrap();
        assert_eq!(f, lam.constant_family());
    }
}
