//! Bracket models of the Borel subalgebra `b = h ⊕ n`.
//!
//! Basis order is `[H_1, …, H_n, X_α for α ∈ Δ⁺ in canonical order]`, so
//! basis index `i < n` is a Cartan element and `n + k` is the root vector of
//! root index `k`. The model stores `N_{α,β}` with `[X_α, X_β] = N_{α,β} X_{α+β}`
//! and the weights `α(H_i) = ⟨α, α_i^∨⟩`.

pub mod classical;
pub mod kurtzke;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::exact::{format_rational, QMatrix, Rational};
use crate::roots::{RootSystem, TypeTag};

pub use classical::{classical_model, MatrixRealization};
pub use kurtzke::{kurtzke_model, kurtzke_scaling};

/// Sparse vector in basis coordinates: sorted indices, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Element {
    terms: Vec<(usize, Rational)>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(idx: usize) -> Self {
        Self { terms: vec![(idx, Rational::one())] }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut v: Vec<(usize, Rational)> = terms.into_iter().collect();
        v.sort_by_key(|(i, _)| *i);
        let mut out: Vec<(usize, Rational)> = Vec::with_capacity(v.len());
        for (i, c) in v {
            match out.last_mut() {
                Some((j, d)) if *j == i => *d += c,
                _ => out.push((i, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Self { terms: out }
    }

    pub fn from_dense(v: &[Rational]) -> Self {
        Self { terms: v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect() }
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); dim];
        for (i, c) in &self.terms {
            v[*i] = c.clone();
        }
        v
    }

    pub fn terms(&self) -> &[(usize, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, idx: usize) -> Rational {
        self.terms
            .binary_search_by_key(&idx, |(i, _)| *i)
            .map_or_else(|_| Rational::zero(), |k| self.terms[k].1.clone())
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.terms.iter().map(|(i, _)| *i)
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: &Rational, other: &Self) -> Self {
        Self::from_terms(self.terms.iter().cloned().chain(other.terms.iter().map(|(i, x)| (*i, x * c))))
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(&Rational::one(), other)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(&-Rational::one(), other)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(i, x)| (*i, x * c)).collect() }
    }
}

/// Bracket model of the Borel subalgebra of a simple Lie algebra.
#[derive(Clone, Debug)]
pub struct LieModel {
    sys: RootSystem,
    constants: Vec<Vec<Rational>>,
    weights: Vec<Vec<i64>>,
    realization: Option<MatrixRealization>,
}

#[derive(Serialize)]
pub struct BracketEntry {
    pub left: String,
    pub right: String,
    pub sum: String,
    pub value: String,
}

impl LieModel {
    /// Assembles a model from structure constants; weights come from the
    /// Cartan pairing of the root system.
    pub fn from_constants(sys: RootSystem, constants: Vec<Vec<Rational>>, realization: Option<MatrixRealization>) -> Self {
        let weights = (0..sys.rank()).map(|i| (0..sys.len()).map(|a| sys.cartan_pairing(a, i)).collect()).collect();
        Self { sys, constants, weights, realization }
    }

    /// Classical types use the matrix realization, exceptional types the
    /// normalized Chevalley constants.
    pub fn build(tag: TypeTag, rank: usize) -> Result<Self> {
        if tag.is_classical() {
            classical_model(tag, rank)
        } else {
            kurtzke_model(tag)
        }
    }

    pub fn sys(&self) -> &RootSystem {
        &self.sys
    }

    pub fn rank(&self) -> usize {
        self.sys.rank()
    }

    pub fn dim(&self) -> usize {
        self.sys.rank() + self.sys.len()
    }

    pub fn realization(&self) -> Option<&MatrixRealization> {
        self.realization.as_ref()
    }

    /// Basis index of `H_{i+1}`.
    pub fn h(&self, i: usize) -> usize {
        i
    }

    /// Basis index of `X_α` for root index `a`.
    pub fn x(&self, a: usize) -> usize {
        self.sys.rank() + a
    }

    /// Root index of a basis index, `None` for Cartan elements.
    pub fn root_of(&self, idx: usize) -> Option<usize> {
        idx.checked_sub(self.sys.rank())
    }

    pub fn root_vector(&self, a: usize) -> Element {
        Element::basis(self.x(a))
    }

    /// `N_{α,β}`, zero when `α + β` is not a root.
    pub fn constant(&self, a: usize, b: usize) -> &Rational {
        &self.constants[a][b]
    }

    /// `α(H_i)`.
    pub fn weight(&self, i: usize, a: usize) -> i64 {
        self.weights[i][a]
    }

    /// `[e_i, e_j]` for basis vectors, as a multiple of a single basis vector.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Option<(usize, Rational)> {
        let n = self.rank();
        match (self.root_of(i), self.root_of(j)) {
            (None, None) => None,
            (None, Some(b)) => {
                let w = self.weights[i][b];
                (w != 0).then(|| (j, Rational::from_integer(w.into())))
            }
            (Some(a), None) => {
                let w = self.weights[j][a];
                (w != 0).then(|| (i, Rational::from_integer((-w).into())))
            }
            (Some(a), Some(b)) => {
                let s = self.sys.sum(a, b)?;
                let c = &self.constants[a][b];
                (!c.is_zero()).then(|| (n + s, c.clone()))
            }
        }
    }

    pub fn bracket(&self, x: &Element, y: &Element) -> Element {
        let mut acc = vec![Rational::zero(); self.dim()];
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                if let Some((k, c)) = self.basis_bracket(*i, *j) {
                    acc[k] += c * a * b;
                }
            }
        }
        Element::from_dense(&acc)
    }

    /// Matrix of `ad x` in basis coordinates (column `j` is `[x, e_j]`).
    pub fn ad_matrix(&self, x: &Element) -> QMatrix {
        let d = self.dim();
        let mut m = QMatrix::zeros(d, d);
        for (i, a) in x.terms() {
            for j in 0..d {
                if let Some((k, c)) = self.basis_bracket(*i, j) {
                    m[(k, j)] += c * a;
                }
            }
        }
        m
    }

    /// Sum of the simple root vectors.
    pub fn lambda(&self) -> Element {
        Element::from_terms((0..self.rank()).map(|i| (self.x(self.sys.simple(i)), Rational::one())))
    }

    pub fn basis_label(&self, idx: usize) -> String {
        match self.root_of(idx) {
            None => format!("H{}", idx + 1),
            Some(a) => format!("X[{}]", self.sys.label(a)),
        }
    }

    /// Sorted `(label, "p/q")` pairs.
    pub fn element_terms(&self, x: &Element) -> Vec<(String, String)> {
        x.terms().iter().map(|(i, c)| (self.basis_label(*i), format_rational(c))).collect()
    }

    /// Human-readable element, e.g. `2*X[1242] - X[0121]`.
    pub fn format_element(&self, x: &Element) -> String {
        if x.is_zero() {
            return "0".into();
        }
        x.terms()
            .iter()
            .map(|(i, c)| format!("{}*{}", format_rational(c), self.basis_label(*i)))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Nonzero `N_{α,β}` entries for auditing.
    pub fn bracket_table(&self) -> Vec<BracketEntry> {
        let sys = &self.sys;
        let mut out = Vec::new();
        for a in 0..sys.len() {
            for b in 0..sys.len() {
                if let Some(s) = sys.sum(a, b) {
                    out.push(BracketEntry {
                        left: sys.label(a),
                        right: sys.label(b),
                        sum: sys.label(s),
                        value: format_rational(&self.constants[a][b]),
                    });
                }
            }
        }
        out
    }

    /// Positive triples `(α, β, γ)` violating the Jacobi identity.
    pub fn jacobi_violations(&self) -> Vec<(usize, usize, usize)> {
        jacobi_violations(&self.sys, &self.constants)
    }

    /// `(i, β)` pairs with `N_{α_i,β} ≠ p + 1` for non-simple `β`.
    pub fn kurtzke_violations(&self) -> Vec<(usize, usize)> {
        let sys = &self.sys;
        let mut bad = Vec::new();
        for i in 0..sys.rank() {
            let ai = sys.simple(i);
            for b in 0..sys.len() {
                if sys.height(b) < 2 || sys.sum(ai, b).is_none() {
                    continue;
                }
                let want = Rational::from_integer((sys.string_down(i, b) + 1).into());
                if self.constants[ai][b] != want {
                    bad.push((i, b));
                }
            }
        }
        bad
    }

    /// Antisymmetry and support checks on the constant table.
    pub fn antisymmetry_violations(&self) -> Vec<(usize, usize)> {
        let sys = &self.sys;
        let mut bad = Vec::new();
        for a in 0..sys.len() {
            for b in 0..sys.len() {
                let n_ab = &self.constants[a][b];
                let ok = n_ab == &-self.constants[b][a].clone()
                    && (sys.sum(a, b).is_some() != n_ab.is_zero());
                if !ok {
                    bad.push((a, b));
                }
            }
        }
        bad
    }

    /// `(i, α, β)` with `(α+β)(H_i) ≠ α(H_i) + β(H_i)`.
    pub fn weight_violations(&self) -> Vec<(usize, usize, usize)> {
        let sys = &self.sys;
        let mut bad = Vec::new();
        for a in 0..sys.len() {
            for b in 0..sys.len() {
                if let Some(s) = sys.sum(a, b) {
                    for i in 0..sys.rank() {
                        if self.weights[i][s] != self.weights[i][a] + self.weights[i][b] {
                            bad.push((i, a, b));
                        }
                    }
                }
            }
        }
        bad
    }
}

/// Jacobi violations for a raw constant table over positive roots.
pub fn jacobi_violations(sys: &RootSystem, n: &[Vec<Rational>]) -> Vec<(usize, usize, usize)> {
    // [X_a,[X_b,X_c]] coefficient on X_{a+b+c}.
    let nested = |a: usize, b: usize, c: usize| -> Rational {
        match sys.sum(b, c) {
            Some(bc) if sys.sum(a, bc).is_some() => &n[b][c] * &n[a][bc],
            _ => Rational::zero(),
        }
    };
    let r = sys.len();
    let mut bad = Vec::new();
    for a in 0..r {
        for b in a + 1..r {
            for c in b + 1..r {
                let total = nested(a, b, c) + nested(b, c, a) + nested(c, a, b);
                if !total.is_zero() {
                    bad.push((a, b, c));
                }
            }
        }
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn element_canonical() {
        let e = Element::from_terms([(3, rat(1)), (1, rat(2)), (3, rat(-1))]);
        assert_eq!(e.terms(), &[(1, rat(2))]);
        assert!(e.sub(&e).is_zero());
    }

    #[test]
    fn cartan_action_on_lambda() {
        let m = LieModel::build(TypeTag::A, 3).unwrap();
        let c = [rat(2), rat(-1), rat(5)];
        let lambda = m.lambda();
        // H with α_i(H) = c_i, written in the coroot basis via the inverse Cartan matrix.
        let cartan = QMatrix::from_rows(
            (0..3).map(|i| (0..3).map(|j| rat(m.weight(j, m.sys().simple(i)))).collect()).collect(),
        );
        let coeffs = cartan.inverse().unwrap().apply(&c);
        let h = Element::from_terms(coeffs.into_iter().enumerate());
        let expect = Element::from_terms((0..3).map(|i| (m.x(m.sys().simple(i)), c[i].clone())));
        assert_eq!(m.bracket(&h, &lambda), expect);
    }
}
