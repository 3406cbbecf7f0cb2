//! Normalized Chevalley constants on the positive roots.
//!
//! Exceptional types: constants are propagated level by level with the
//! Jacobi identity (each level's solution space is one-dimensional, the
//! freedom being the scale of the new root vector), then every root vector
//! is rescaled so that `[X_{α_i}, X_β] = (p+1) X_{β+α_i}` for non-simple `β`.

use std::collections::{HashMap, VecDeque};

use num_traits::{One, Zero};

use super::LieModel;
use crate::error::{Error, Result};
use crate::exact::{QMatrix, Rational};
use crate::roots::{RootSystem, TypeTag};

/// Builds the model of an exceptional type.
pub fn kurtzke_model(tag: TypeTag) -> Result<LieModel> {
    let rank = tag
        .fixed_rank()
        .ok_or_else(|| Error::Unsupported(format!("{tag} is not exceptional")))?;
    let sys = RootSystem::new(tag, rank)?;
    let raw = jacobi_constants(&sys)?;
    let scale = kurtzke_scaling(&sys, &raw)?;
    let constants = rescale(&sys, &raw, &scale);
    Ok(LieModel::from_constants(sys, constants, None))
}

/// Any valid constant table, determined by Jacobi propagation up the heights.
pub fn jacobi_constants(sys: &RootSystem) -> Result<Vec<Vec<Rational>>> {
    let r = sys.len();
    let mut n = vec![vec![Rational::zero(); r]; r];
    for xi in 0..r {
        if sys.height(xi) < 2 {
            continue;
        }
        let pairs: Vec<(usize, usize)> =
            (0..xi).filter_map(|a| sys.diff(xi, a).filter(|&b| a < b).map(|b| (a, b))).collect();
        let col: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        let unknown = |x: usize, y: usize| -> (usize, Rational) {
            if x < y {
                (col[&(x, y)], Rational::one())
            } else {
                (col[&(y, x)], -Rational::one())
            }
        };
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for a in 0..xi {
            for b in a + 1..xi {
                let coords: Vec<i64> = (0..sys.rank())
                    .map(|k| sys.root(xi).simple[k] - sys.root(a).simple[k] - sys.root(b).simple[k])
                    .collect();
                let Some(c) = sys.find(&coords).filter(|&c| c > b) else { continue };
                // N_{b,c} N_{a,b+c} + N_{c,a} N_{b,c+a} + N_{a,b} N_{c,a+b} = 0
                let mut row = vec![Rational::zero(); pairs.len()];
                for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                    if let Some(yz) = sys.sum(y, z) {
                        let (k, sign) = unknown(x, yz);
                        row[k] += &n[y][z] * sign;
                    }
                }
                if row.iter().any(|v| !v.is_zero()) {
                    rows.push(row);
                }
            }
        }
        let kernel = QMatrix::from_rows_with_cols(rows, pairs.len()).kernel();
        if kernel.len() != 1 {
            return Err(Error::Consistency(format!(
                "Jacobi system at {} has {}-dimensional solution space",
                sys.label(xi),
                kernel.len()
            )));
        }
        let v = &kernel[0];
        let i = (0..sys.rank())
            .find(|&i| sys.diff(xi, sys.simple(i)).is_some())
            .expect("non-simple root has a simple predecessor");
        let rest = sys.diff(xi, sys.simple(i)).unwrap();
        let (k, sign) = unknown(sys.simple(i), rest);
        if v[k].is_zero() {
            return Err(Error::Consistency(format!("vanishing constant at {}", sys.label(xi))));
        }
        let want = Rational::from_integer((sys.string_down(i, rest) + 1).into()) * sign;
        let factor = want / &v[k];
        for (&(a, b), x) in pairs.iter().zip(v) {
            let val = x * &factor;
            if val.is_zero() {
                return Err(Error::Consistency(format!("vanishing constant at {}", sys.label(xi))));
            }
            n[b][a] = -val.clone();
            n[a][b] = val;
        }
    }
    Ok(n)
}

/// Scalars `c_α` (simple roots fixed to 1) such that `c_α c_β / c_{α+β} · N`
/// satisfies the normalization for every simple `α_i` and non-simple `β`.
///
/// Components of the constraint graph are seeded with `c = 1` at their first
/// root in canonical order.
pub fn kurtzke_scaling(sys: &RootSystem, n: &[Vec<Rational>]) -> Result<Vec<Rational>> {
    let r = sys.len();
    // Edge β → β+α_i with c_{β+α_i} = c_β · ratio.
    let mut adj: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); r];
    let mut edges = Vec::new();
    for i in 0..sys.rank() {
        let ai = sys.simple(i);
        for b in 0..r {
            if sys.height(b) < 2 {
                continue;
            }
            let Some(s) = sys.sum(ai, b) else { continue };
            let raw = &n[ai][b];
            if raw.is_zero() {
                return Err(Error::Consistency(format!("zero constant N({}, {})", sys.label(ai), sys.label(b))));
            }
            let ratio = raw / Rational::from_integer((sys.string_down(i, b) + 1).into());
            adj[b].push((s, ratio.clone()));
            adj[s].push((b, ratio.recip()));
            edges.push((b, s, ratio));
        }
    }
    let mut c: Vec<Option<Rational>> = vec![None; r];
    for (k, ck) in c.iter_mut().enumerate() {
        if sys.height(k) == 1 {
            *ck = Some(Rational::one());
        }
    }
    for start in 0..r {
        if c[start].is_some() {
            continue;
        }
        c[start] = Some(Rational::one());
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let cu = c[u].clone().unwrap();
            for (v, ratio) in &adj[u] {
                if c[*v].is_none() {
                    c[*v] = Some(&cu * ratio);
                    queue.push_back(*v);
                }
            }
        }
    }
    let c: Vec<Rational> = c.into_iter().map(Option::unwrap).collect();
    for (b, s, ratio) in &edges {
        if c[*s] != &c[*b] * ratio {
            return Err(Error::Consistency(format!(
                "normalization infeasible along {} -> {}",
                sys.label(*b),
                sys.label(*s)
            )));
        }
    }
    Ok(c)
}

/// Constants after replacing `X_α` by `c_α X_α`.
pub fn rescale(sys: &RootSystem, n: &[Vec<Rational>], c: &[Rational]) -> Vec<Vec<Rational>> {
    let r = sys.len();
    let mut out = vec![vec![Rational::zero(); r]; r];
    for a in 0..r {
        for b in 0..r {
            if let Some(s) = sys.sum(a, b) {
                out[a][b] = &n[a][b] * &c[a] * &c[b] / &c[s];
            }
        }
    }
    out
}
