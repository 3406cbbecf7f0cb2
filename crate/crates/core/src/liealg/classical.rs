//! Matrix realizations of `sl(n+1)`, `so(2n+1)`, `sp(2n)`, `so(2n)`.
//!
//! Each positive root has a primary matrix position (1-based):
//! `ε_i − ε_j ↦ (i, j)`, `ε_i + ε_j ↦ (i, N+1−j)`, `2ε_i ↦ (i, N+1−i)`,
//! `ε_i ↦ (i, n+1)`. For B, C, D the root matrix is `E_{p,q} ± E_{N+1−q,N+1−p}`
//! with the sign forced by `XᵗF + FX = 0`. Root matrices are then rescaled so
//! that the structure constants satisfy the Chevalley normalization.

use num_traits::{One, Zero};

use super::kurtzke::{kurtzke_scaling, rescale};
use super::{Element, LieModel};
use crate::error::{Error, Result};
use crate::exact::{QMatrix, Rational};
use crate::roots::{RootSystem, TypeTag};

#[derive(Clone, Debug)]
pub struct MatrixRealization {
    tag: TypeTag,
    rank: usize,
    size: usize,
    form: Option<QMatrix>,
    /// Zero-based primary position of each root.
    positions: Vec<(usize, usize)>,
    /// `X_α` as matrices, after normalization.
    root_matrices: Vec<QMatrix>,
    /// Diagonal matrices of the coroots `H_i`.
    coroots: Vec<QMatrix>,
}

/// Matrix unit `E_{i,j}` (1-based) of size `size`.
pub fn unit(size: usize, i: usize, j: usize) -> QMatrix {
    let mut m = QMatrix::zeros(size, size);
    m[(i - 1, j - 1)] = Rational::one();
    m
}

impl MatrixRealization {
    pub fn tag(&self) -> TypeTag {
        self.tag
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn form(&self) -> Option<&QMatrix> {
        self.form.as_ref()
    }

    pub fn root_matrix(&self, a: usize) -> &QMatrix {
        &self.root_matrices[a]
    }

    pub fn coroot(&self, i: usize) -> &QMatrix {
        &self.coroots[i]
    }

    /// Zero-based primary position of root `a`.
    pub fn position(&self, a: usize) -> (usize, usize) {
        self.positions[a]
    }

    /// `E_{i,j}` (1-based) in this realization's size.
    pub fn e(&self, i: usize, j: usize) -> QMatrix {
        unit(self.size, i, j)
    }

    /// `Ẽ_{i,j} = E_{i,j} − E_{N+1−j, N+1−i}` (1-based).
    pub fn tilde(&self, i: usize, j: usize) -> QMatrix {
        let n = self.size;
        self.e(i, j).sub(&self.e(n + 1 - j, n + 1 - i))
    }

    /// Anti-transpose `A′ = (a_{N+1−j, N+1−i})`.
    pub fn antitranspose(a: &QMatrix) -> QMatrix {
        let n = a.rows();
        let mut out = QMatrix::zeros(n, a.cols());
        for i in 0..n {
            for j in 0..a.cols() {
                out[(i, j)] = a[(a.cols() - 1 - j, n - 1 - i)].clone();
            }
        }
        out
    }

    /// True when `m` lies in the Lie algebra (trace zero or `mᵗF + Fm = 0`).
    pub fn contains(&self, m: &QMatrix) -> bool {
        match &self.form {
            None => m.trace().is_zero(),
            Some(f) => (&m.transpose() * f).add(&(f * m)).is_zero(),
        }
    }

    pub fn to_matrix(&self, model: &LieModel, x: &Element) -> QMatrix {
        let mut out = QMatrix::zeros(self.size, self.size);
        for (idx, c) in x.terms() {
            let m = match model.root_of(*idx) {
                Some(a) => &self.root_matrices[a],
                None => &self.coroots[*idx],
            };
            out = out.lin_comb(c, m);
        }
        out
    }

    /// Decomposes a Borel matrix into basis coordinates.
    pub fn to_element(&self, model: &LieModel, m: &QMatrix) -> Result<Element> {
        let mut terms = Vec::new();
        let mut rest = m.clone();
        for (a, &(p, q)) in self.positions.iter().enumerate() {
            let c = &m[(p, q)] / &self.root_matrices[a][(p, q)];
            if !c.is_zero() {
                rest = rest.lin_comb(&-c.clone(), &self.root_matrices[a]);
                terms.push((model.x(a), c));
            }
        }
        let diag: Vec<Rational> = (0..self.size).map(|i| rest[(i, i)].clone()).collect();
        if diag.iter().any(|d| !d.is_zero()) {
            let cols: Vec<Vec<Rational>> =
                self.coroots.iter().map(|h| (0..self.size).map(|i| h[(i, i)].clone()).collect()).collect();
            let r = self.rank;
            let mut aug = QMatrix::zeros(self.size, r + 1);
            for i in 0..self.size {
                for (k, col) in cols.iter().enumerate() {
                    aug[(i, k)] = col[i].clone();
                }
                aug[(i, r)] = diag[i].clone();
            }
            let (rank, red) = aug.rref();
            let pivots = red.pivot_columns();
            if pivots.contains(&r) || rank != pivots.len() {
                return Err(Error::Consistency("diagonal part outside the Cartan subalgebra".into()));
            }
            for (row, &k) in pivots.iter().enumerate() {
                let c = red[(row, r)].clone();
                rest = rest.lin_comb(&-c.clone(), &self.coroots[k]);
                terms.push((model.h(k), c));
            }
        }
        if !rest.is_zero() {
            return Err(Error::Consistency("matrix is not in the Borel subalgebra".into()));
        }
        Ok(Element::from_terms(terms))
    }
}

fn primary_position(tag: TypeTag, n: usize, size: usize, eps: &[i64]) -> (usize, usize) {
    let nz: Vec<(usize, i64)> = eps.iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, &c)| (k + 1, c)).collect();
    let pos = match nz.as_slice() {
        [(i, 1), (j, -1)] => (*i, *j),
        [(i, 1), (j, 1)] => (*i, size + 1 - j),
        [(i, 2)] => (*i, size + 1 - i),
        [(i, 1)] if tag == TypeTag::B => (*i, n + 1),
        _ => unreachable!("unexpected classical root {eps:?}"),
    };
    (pos.0 - 1, pos.1 - 1)
}

fn form_matrix(tag: TypeTag, n: usize, size: usize) -> Option<QMatrix> {
    let mut f = QMatrix::zeros(size, size);
    match tag {
        TypeTag::A => return None,
        TypeTag::B | TypeTag::D => {
            for i in 0..size {
                f[(i, size - 1 - i)] = Rational::one();
            }
        }
        _ => {
            for i in 0..n {
                f[(i, size - 1 - i)] = Rational::one();
                f[(n + i, n - 1 - i)] = -Rational::one();
            }
        }
    }
    Some(f)
}

/// Builds the matrix realization and the normalized bracket model.
pub fn classical_model(tag: TypeTag, rank: usize) -> Result<LieModel> {
    if !tag.is_classical() {
        return Err(Error::Unsupported(format!("{tag} has no classical realization")));
    }
    let sys = RootSystem::new(tag, rank)?;
    let n = sys.rank();
    let size = match tag {
        TypeTag::A => n + 1,
        TypeTag::B => 2 * n + 1,
        _ => 2 * n,
    };
    let form = form_matrix(tag, n, size);
    let mut positions = Vec::with_capacity(sys.len());
    let mut mats = Vec::with_capacity(sys.len());
    for root in sys.roots() {
        let (p, q) = primary_position(tag, n, size, root.epsilon.as_ref().unwrap());
        let e = unit(size, p + 1, q + 1);
        let m = if tag == TypeTag::A || (p, q) == (size - 1 - q, size - 1 - p) {
            e
        } else {
            let mirror = unit(size, size - q, size - p);
            let f = form.as_ref().unwrap();
            [-Rational::one(), Rational::one()]
                .into_iter()
                .map(|s| e.lin_comb(&s, &mirror))
                .find(|m| (&m.transpose() * f).add(&(f * m)).is_zero())
                .ok_or_else(|| Error::Consistency("no invariant root matrix".into()))?
        };
        positions.push((p, q));
        mats.push(m);
    }

    let r = sys.len();
    let mut raw = vec![vec![Rational::zero(); r]; r];
    for a in 0..r {
        for b in 0..r {
            let comm = mats[a].commutator(&mats[b]);
            match sys.sum(a, b) {
                Some(s) => {
                    let (p, q) = positions[s];
                    let c = &comm[(p, q)] / &mats[s][(p, q)];
                    if c.is_zero() || comm != mats[s].scale(&c) {
                        return Err(Error::Consistency(format!(
                            "[X_{}, X_{}] is not a nonzero multiple of X_{}",
                            sys.label(a),
                            sys.label(b),
                            sys.label(s)
                        )));
                    }
                    raw[a][b] = c;
                }
                None if !comm.is_zero() => {
                    return Err(Error::Consistency(format!(
                        "[X_{}, X_{}] should vanish",
                        sys.label(a),
                        sys.label(b)
                    )));
                }
                None => {}
            }
        }
    }
    let scale = kurtzke_scaling(&sys, &raw)?;
    let constants = rescale(&sys, &raw, &scale);
    let root_matrices = mats.iter().zip(&scale).map(|(m, c)| m.scale(c)).collect();

    let coroots = (0..n)
        .map(|i| {
            let a = sys.simple(i);
            let eps = sys.root(a).epsilon.as_ref().unwrap();
            let norm: i64 = eps.iter().map(|x| x * x).sum();
            let v: Vec<Rational> = eps.iter().map(|&x| Rational::new((2 * x).into(), norm.into())).collect();
            let mut h = QMatrix::zeros(size, size);
            match tag {
                TypeTag::A => {
                    for (k, x) in v.iter().enumerate() {
                        h[(k, k)] = x.clone();
                    }
                }
                _ => {
                    for (k, x) in v.iter().enumerate() {
                        h[(k, k)] = x.clone();
                        h[(size - 1 - k, size - 1 - k)] = -x.clone();
                    }
                }
            }
            h
        })
        .collect();

    let real = MatrixRealization { tag, rank: n, size, form, positions, root_matrices, coroots };
    Ok(LieModel::from_constants(sys, constants, Some(real)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn simple_root_matrices_match_examples() {
        let m = classical_model(TypeTag::B, 3).unwrap();
        let r = m.realization().unwrap();
        // X_{α_1} = E_{1,2} − E_{6,7}, X_{α_3} = E_{3,4} − E_{4,5} in so(7).
        assert_eq!(r.root_matrix(m.sys().simple(0)), &r.e(1, 2).sub(&r.e(6, 7)));
        assert_eq!(r.root_matrix(m.sys().simple(2)), &r.e(3, 4).sub(&r.e(4, 5)));
        let c = classical_model(TypeTag::C, 3).unwrap();
        let rc = c.realization().unwrap();
        assert_eq!(rc.root_matrix(c.sys().simple(2)), &rc.e(3, 4));
        let d = classical_model(TypeTag::D, 4).unwrap();
        let rd = d.realization().unwrap();
        assert_eq!(rd.root_matrix(d.sys().simple(3)), &rd.e(3, 5).sub(&rd.e(4, 6)));
    }

    #[test]
    fn sl4_bracket_from_matrices() {
        let m = classical_model(TypeTag::A, 3).unwrap();
        let r = m.realization().unwrap();
        let comm = r.e(1, 2).commutator(&r.e(2, 3));
        assert_eq!(comm, r.e(1, 3));
        let (a1, a2) = (m.sys().simple(0), m.sys().simple(1));
        let s = m.sys().sum(a1, a2).unwrap();
        let lhs = r.root_matrix(a1).commutator(r.root_matrix(a2));
        assert_eq!(lhs, r.root_matrix(s).scale(m.constant(a1, a2)));
        assert_eq!(crate::exact::rational::abs(m.constant(a1, a2)), rat(1));
    }

    #[test]
    fn coroot_weights_agree_with_pairing() {
        for (tag, n) in [(TypeTag::A, 4), (TypeTag::B, 3), (TypeTag::C, 4), (TypeTag::D, 5)] {
            let m = classical_model(tag, n).unwrap();
            let r = m.realization().unwrap();
            for i in 0..n {
                for a in 0..m.sys().len() {
                    let x = r.root_matrix(a);
                    let comm = r.coroot(i).commutator(x);
                    assert_eq!(comm, x.scale(&rat(m.weight(i, a))), "{tag}{n} H{i} root {a}");
                }
            }
        }
    }

    #[test]
    fn matrix_round_trip() {
        let m = classical_model(TypeTag::C, 3).unwrap();
        let r = m.realization().unwrap();
        let x = Element::from_terms([(0, rat(2)), (m.x(4), rat(-3)), (m.x(8), rat(1))]);
        let mat = r.to_matrix(&m, &x);
        assert!(r.contains(&mat));
        assert_eq!(r.to_element(&m, &mat).unwrap(), x);
    }
}
