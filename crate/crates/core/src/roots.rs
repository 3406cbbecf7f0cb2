//! Positive root systems in Bourbaki labeling.
//!
//! Roots are generated by closure from the simple roots using root strings:
//! for a positive root `β` and simple `α_i`, `β + α_i` is a root exactly when
//! `p − ⟨β, α_i^∨⟩ ≥ 1`, where `p` is the length of the downward `α_i`-string
//! through `β`. Classical types additionally carry ε-coordinates.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TypeTag {
    A,
    B,
    C,
    D,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl TypeTag {
    pub const ALL: [TypeTag; 9] = [
        TypeTag::A,
        TypeTag::B,
        TypeTag::C,
        TypeTag::D,
        TypeTag::G2,
        TypeTag::F4,
        TypeTag::E6,
        TypeTag::E7,
        TypeTag::E8,
    ];

    /// Rank of an exceptional type, `None` for the classical series.
    pub fn fixed_rank(self) -> Option<usize> {
        match self {
            TypeTag::G2 => Some(2),
            TypeTag::F4 => Some(4),
            TypeTag::E6 => Some(6),
            TypeTag::E7 => Some(7),
            TypeTag::E8 => Some(8),
            _ => None,
        }
    }

    pub fn is_classical(self) -> bool {
        self.fixed_rank().is_none()
    }

    pub fn min_rank(self) -> usize {
        match self {
            TypeTag::A => 1,
            TypeTag::B | TypeTag::C => 2,
            TypeTag::D => 4,
            other => other.fixed_rank().unwrap(),
        }
    }

    /// Checks the rank and resolves it for exceptional types.
    pub fn resolve_rank(self, rank: Option<usize>) -> Result<usize> {
        match (self.fixed_rank(), rank) {
            (Some(r), None) => Ok(r),
            (Some(r), Some(k)) if k == r => Ok(r),
            (Some(r), Some(k)) => Err(Error::Unsupported(format!("{self} has rank {r}, not {k}"))),
            (None, None) => Err(Error::Unsupported(format!("type {self} needs a rank"))),
            (None, Some(k)) if k >= self.min_rank() => Ok(k),
            (None, Some(k)) => Err(Error::Unsupported(format!(
                "type {self} needs rank >= {}, got {k}",
                self.min_rank()
            ))),
        }
    }
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TypeTag::A => "A",
            TypeTag::B => "B",
            TypeTag::C => "C",
            TypeTag::D => "D",
            TypeTag::G2 => "G2",
            TypeTag::F4 => "F4",
            TypeTag::E6 => "E6",
            TypeTag::E7 => "E7",
            TypeTag::E8 => "E8",
        };
        f.write_str(s)
    }
}

impl FromStr for TypeTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TypeTag::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown type {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Root {
    /// Coefficients over the simple roots.
    pub simple: Vec<i64>,
    /// ε-coordinates (classical types only).
    pub epsilon: Option<Vec<i64>>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.simple.iter().sum()
    }
}

/// A positive root system. Roots are referred to by their index in
/// canonical order: by height, then lexicographically on simple coordinates.
#[derive(Clone, Debug)]
pub struct RootSystem {
    tag: TypeTag,
    rank: usize,
    roots: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    sums: Vec<Vec<Option<usize>>>,
    gram: Vec<Vec<i64>>,
    maximal: usize,
}

/// Convenience wrapper for [`RootSystem::new`].
pub fn build_root_system(tag: TypeTag, rank: usize) -> Result<RootSystem> {
    RootSystem::new(tag, rank)
}

/// Height of a root.
pub fn height(r: &Root) -> i64 {
    r.height()
}

/// True when `set` is closed under adding positive roots.
pub fn upward_closure_test(set: &[usize], sys: &RootSystem) -> bool {
    sys.is_upward_closed(set)
}

fn simple_epsilon(tag: TypeTag, n: usize) -> Option<Vec<Vec<i64>>> {
    let unit = |dim: usize, i: usize| {
        let mut v = vec![0; dim];
        v[i] = 1;
        v
    };
    let diff = |dim: usize, i: usize, j: usize| {
        let mut v = unit(dim, i);
        v[j] -= 1;
        v
    };
    let mut out: Vec<Vec<i64>> = match tag {
        TypeTag::A => return Some((0..n).map(|i| diff(n + 1, i, i + 1)).collect()),
        TypeTag::B | TypeTag::C | TypeTag::D => (0..n - 1).map(|i| diff(n, i, i + 1)).collect(),
        _ => return None,
    };
    out.push(match tag {
        TypeTag::B => unit(n, n - 1),
        TypeTag::C => {
            let mut v = vec![0; n];
            v[n - 1] = 2;
            v
        }
        _ => {
            let mut v = vec![0; n];
            v[n - 2] = 1;
            v[n - 1] = 1;
            v
        }
    });
    Some(out)
}

fn exceptional_gram(tag: TypeTag) -> Vec<Vec<i64>> {
    let n = tag.fixed_rank().unwrap();
    let mut g = vec![vec![0; n]; n];
    let mut link = |i: usize, j: usize, v: i64| {
        g[i - 1][j - 1] = v;
        g[j - 1][i - 1] = v;
    };
    match tag {
        TypeTag::G2 => {
            link(1, 2, -3);
            g[0][0] = 2;
            g[1][1] = 6;
        }
        TypeTag::F4 => {
            link(1, 2, -2);
            link(2, 3, -2);
            link(3, 4, -1);
            g[0][0] = 4;
            g[1][1] = 4;
            g[2][2] = 2;
            g[3][3] = 2;
        }
        _ => {
            for (i, j) in [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4), (6, 7), (7, 8)] {
                if j <= n {
                    link(i, j, -1);
                }
            }
            for (i, row) in g.iter_mut().enumerate() {
                row[i] = 2;
            }
        }
    }
    g
}

impl RootSystem {
    pub fn new(tag: TypeTag, rank: usize) -> Result<Self> {
        let n = tag.resolve_rank(Some(rank))?;
        let eps = simple_epsilon(tag, n);
        let gram = match &eps {
            Some(e) => (0..n)
                .map(|i| (0..n).map(|j| e[i].iter().zip(&e[j]).map(|(a, b)| a * b).sum()).collect())
                .collect(),
            None => exceptional_gram(tag),
        };
        let pair = |x: &[i64], i: usize| -> i64 { (0..n).map(|k| x[k] * gram[k][i]).sum() };

        let mut found: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        let mut seen: std::collections::HashSet<Vec<i64>> = found.iter().cloned().collect();
        let mut level = found.clone();
        while !level.is_empty() {
            let mut next = Vec::new();
            for beta in &level {
                for i in 0..n {
                    let mut down = beta.clone();
                    let mut p = 0;
                    loop {
                        down[i] -= 1;
                        if down[i] < 0 || !seen.contains(&down) {
                            break;
                        }
                        p += 1;
                    }
                    let cartan = 2 * pair(beta, i) / gram[i][i];
                    if p - cartan >= 1 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if seen.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            found.extend(next.iter().cloned());
            level = next;
        }
        found.sort_by(|a, b| (a.iter().sum::<i64>(), a).cmp(&(b.iter().sum::<i64>(), b)));

        let roots: Vec<Root> = found
            .into_iter()
            .map(|simple| {
                let epsilon = eps.as_ref().map(|e| {
                    let dim = e[0].len();
                    (0..dim).map(|k| (0..n).map(|i| simple[i] * e[i][k]).sum()).collect()
                });
                Root { simple, epsilon }
            })
            .collect();
        let index: HashMap<Vec<i64>, usize> =
            roots.iter().enumerate().map(|(k, r)| (r.simple.clone(), k)).collect();
        let sums = roots
            .iter()
            .map(|a| {
                roots
                    .iter()
                    .map(|b| {
                        let s: Vec<i64> = a.simple.iter().zip(&b.simple).map(|(x, y)| x + y).collect();
                        index.get(&s).copied()
                    })
                    .collect()
            })
            .collect();
        let maximal = roots.len() - 1;
        let sys = Self { tag, rank: n, roots, index, sums, gram, maximal };
        let top = sys.roots.len();
        if (0..top).any(|k| !sys.leq(k, maximal)) {
            return Err(Error::Consistency("maximal root is not unique".into()));
        }
        Ok(sys)
    }

    pub fn tag(&self) -> TypeTag {
        self.tag
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, k: usize) -> &Root {
        &self.roots[k]
    }

    pub fn height(&self, k: usize) -> i64 {
        self.roots[k].height()
    }

    /// Index of the maximal root γ₀.
    pub fn maximal(&self) -> usize {
        self.maximal
    }

    /// Index of the simple root `α_{i+1}` (zero-based `i`).
    pub fn simple(&self, i: usize) -> usize {
        let mut v = vec![0; self.rank];
        v[i] = 1;
        self.index[&v]
    }

    pub fn find(&self, simple_coords: &[i64]) -> Option<usize> {
        self.index.get(simple_coords).copied()
    }

    /// Index of `α + β` when it is a positive root.
    pub fn sum(&self, a: usize, b: usize) -> Option<usize> {
        self.sums[a][b]
    }

    /// Index of `β − α` when it is a positive root.
    pub fn diff(&self, b: usize, a: usize) -> Option<usize> {
        let d: Vec<i64> =
            self.roots[b].simple.iter().zip(&self.roots[a].simple).map(|(x, y)| x - y).collect();
        self.find(&d)
    }

    /// `α ≤ β` in the root order: `β − α` has nonnegative simple coordinates.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.roots[a].simple.iter().zip(&self.roots[b].simple).all(|(x, y)| x <= y)
    }

    /// Integer-valued symmetric form on simple roots.
    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// `(α, β)` in the normalized form.
    pub fn inner(&self, a: usize, b: usize) -> i64 {
        let (x, y) = (&self.roots[a].simple, &self.roots[b].simple);
        (0..self.rank).map(|i| (0..self.rank).map(|j| x[i] * self.gram[i][j] * y[j]).sum::<i64>()).sum()
    }

    /// `⟨α, α_i^∨⟩ = 2(α, α_i)/(α_i, α_i)`.
    pub fn cartan_pairing(&self, a: usize, i: usize) -> i64 {
        let x = &self.roots[a].simple;
        let p: i64 = (0..self.rank).map(|k| x[k] * self.gram[k][i]).sum();
        2 * p / self.gram[i][i]
    }

    /// `max{k : β − kα_i ∈ Δ⁺}`.
    pub fn string_down(&self, i: usize, b: usize) -> i64 {
        let mut v = self.roots[b].simple.clone();
        let mut p = 0;
        loop {
            v[i] -= 1;
            if self.find(&v).is_none() {
                return p;
            }
            p += 1;
        }
    }

    /// Closed under adding positive roots.
    pub fn is_upward_closed(&self, set: &[usize]) -> bool {
        let mut member = vec![false; self.len()];
        for &a in set {
            member[a] = true;
        }
        set.iter().all(|&a| (0..self.len()).all(|b| self.sum(a, b).is_none_or(|s| member[s])))
    }

    /// No two members sum to a root.
    pub fn is_abelian(&self, set: &[usize]) -> bool {
        set.iter().all(|&a| set.iter().all(|&b| self.sum(a, b).is_none()))
    }

    /// Roots of a given height, in canonical order.
    pub fn at_height(&self, h: i64) -> Vec<usize> {
        (0..self.len()).filter(|&k| self.height(k) == h).collect()
    }

    /// Exponents of the simple Lie algebra, ascending.
    pub fn exponents(&self) -> Vec<i64> {
        let n = self.rank as i64;
        let mut e: Vec<i64> = match self.tag {
            TypeTag::A => (1..=n).collect(),
            TypeTag::B | TypeTag::C => (1..=n).map(|k| 2 * k - 1).collect(),
            TypeTag::D => (1..n).map(|k| 2 * k - 1).chain([n - 1]).collect(),
            TypeTag::G2 => vec![1, 5],
            TypeTag::F4 => vec![1, 5, 7, 11],
            TypeTag::E6 => vec![1, 4, 5, 7, 8, 11],
            TypeTag::E7 => vec![1, 5, 7, 9, 11, 13, 17],
            TypeTag::E8 => vec![1, 7, 11, 13, 17, 19, 23, 29],
        };
        e.sort();
        e
    }

    /// Printable label: ε-notation for classical types, digit strings otherwise.
    pub fn label(&self, k: usize) -> String {
        let r = &self.roots[k];
        if let Some(eps) = &r.epsilon {
            return epsilon_label(eps);
        }
        let d: Vec<String> = r.simple.iter().map(i64::to_string).collect();
        match self.tag {
            TypeTag::E6 | TypeTag::E7 | TypeTag::E8 => {
                let top: String = std::iter::once(&d[0]).chain(&d[2..]).cloned().collect();
                format!("{top}/{}", d[1])
            }
            _ => d.concat(),
        }
    }

    /// Inverse of [`RootSystem::label`].
    pub fn parse_label(&self, s: &str) -> Result<usize> {
        let bad = || Error::Parse(format!("{s:?} is not a positive root of {}", self.tag));
        let s = s.trim();
        if self.tag.is_classical() {
            let eps = parse_epsilon(s, self.roots[0].epsilon.as_ref().unwrap().len()).ok_or_else(bad)?;
            return self.roots.iter().position(|r| r.epsilon.as_ref() == Some(&eps)).ok_or_else(bad);
        }
        let digits = |t: &str| -> Option<Vec<i64>> {
            t.chars().map(|c| c.to_digit(10).map(i64::from)).collect()
        };
        let coords = match self.tag {
            TypeTag::E6 | TypeTag::E7 | TypeTag::E8 => {
                let (top, bottom) = s.split_once('/').ok_or_else(bad)?;
                let top = digits(top).ok_or_else(bad)?;
                let bottom = digits(bottom).ok_or_else(bad)?;
                if top.len() + 1 != self.rank || bottom.len() != 1 {
                    return Err(bad());
                }
                let mut v = vec![top[0], bottom[0]];
                v.extend_from_slice(&top[1..]);
                v
            }
            _ => digits(s).ok_or_else(bad)?,
        };
        if coords.len() != self.rank {
            return Err(bad());
        }
        self.find(&coords).ok_or_else(bad)
    }
}

fn epsilon_label(eps: &[i64]) -> String {
    let mut out = String::new();
    for (k, &c) in eps.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let sign = if c < 0 { "-" } else if out.is_empty() { "" } else { "+" };
        let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
        out.push_str(&format!("{sign}{mag}e{}", k + 1));
    }
    out
}

fn parse_epsilon(s: &str, dim: usize) -> Option<Vec<i64>> {
    let mut v = vec![0; dim];
    let mut rest = s;
    while !rest.is_empty() {
        let sign = match rest.as_bytes()[0] {
            b'-' => {
                rest = &rest[1..];
                -1
            }
            b'+' => {
                rest = &rest[1..];
                1
            }
            _ => 1,
        };
        let e = rest.find('e')?;
        let mag: i64 = if e == 0 { 1 } else { rest[..e].parse().ok()? };
        rest = &rest[e + 1..];
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let idx: usize = rest[..end].parse().ok()?;
        if idx == 0 || idx > dim {
            return None;
        }
        v[idx - 1] += sign * mag;
        rest = &rest[end..];
    }
    Some(v)
}
