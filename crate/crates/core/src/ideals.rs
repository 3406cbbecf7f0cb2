//! `n`-dimensional abelian ideals of the Borel subalgebra, as upward-closed
//! abelian sets of positive roots.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::deform::Subspace;
use crate::error::{Error, Result};
use crate::liealg::LieModel;
use crate::roots::{RootSystem, TypeTag};

/// Shape of a B/C/D ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BcdClass {
    /// Only roots `ε_i + ε_j` (`i ≤ j`).
    PlusOnly,
    /// `{ε₁, ε₁+ε_j}` in type B.
    BCase1,
    /// `{ε₁−ε_n, ε₁+ε_j}` in type D.
    DCase2,
    /// `{ε₂+ε₃, ε₁−ε_n, ε₁+ε_j (j<n)}` in type D, `n ≥ 5`.
    DCase3,
    /// Any D4 ideal; sub-case 1, 2 or 3.
    D4Special(u8),
}

impl fmt::Display for BcdClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BcdClass::PlusOnly => write!(f, "plus_only"),
            BcdClass::BCase1 => write!(f, "B_case1"),
            BcdClass::DCase2 => write!(f, "D_case2"),
            BcdClass::DCase3 => write!(f, "D_case3"),
            BcdClass::D4Special(k) => write!(f, "D4_special({})", ["i", "ii", "iii"][*k as usize - 1]),
        }
    }
}

impl Serialize for BcdClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianIdeal {
    /// Root indices, descending canonical order (maximal root first).
    pub roots: Vec<usize>,
    pub type_class: Option<BcdClass>,
}

impl AbelianIdeal {
    pub fn labels(&self, sys: &RootSystem) -> Vec<String> {
        self.roots.iter().map(|&a| sys.label(a)).collect()
    }

    pub fn subspace(&self, model: &LieModel) -> Subspace {
        Subspace::from_roots(model, &self.roots)
    }

    pub fn contains(&self, a: usize) -> bool {
        self.roots.contains(&a)
    }

    /// Stable identifier: the labels joined by commas.
    pub fn id(&self, sys: &RootSystem) -> String {
        self.labels(sys).join(",")
    }
}

/// A partition `μ₁ ≥ μ₂ ≥ … ≥ μ_l > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition(pub Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        parts.retain(|&p| p > 0);
        if parts.is_empty() {
            return Err(Error::Parse("empty partition".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All partitions of `n`, parts in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            go(n, n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part {p:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::Parse(format!("zero part in {s:?}")));
        }
        Partition::new(parts)
    }
}

/// All upward-closed abelian sets of `n` positive roots.
pub fn enumerate_ideals(model: &LieModel) -> Vec<AbelianIdeal> {
    let sys = model.sys();
    let n = sys.rank();
    let top = sys.height(sys.maximal());
    let floor = top - n as i64 + 1;
    // Candidates in descending canonical order: every upper cover precedes its root.
    let candidates: Vec<usize> = (0..sys.len()).rev().filter(|&a| sys.height(a) >= floor).collect();
    let covers: Vec<Vec<usize>> = candidates
        .iter()
        .map(|&a| (0..n).filter_map(|i| sys.sum(a, sys.simple(i))).collect())
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    descend(sys, &candidates, &covers, 0, n, &mut chosen, &mut out);
    let mut ideals: Vec<AbelianIdeal> = out
        .into_iter()
        .map(|roots| {
            let mut ideal = AbelianIdeal { roots, type_class: None };
            if matches!(sys.tag(), TypeTag::B | TypeTag::C | TypeTag::D) {
                ideal.type_class = classify_bcd(&ideal, sys).ok();
            }
            ideal
        })
        .collect();
    ideals.sort_by_key(|a| ideal_key(sys, a));
    ideals
}

fn descend(
    sys: &RootSystem,
    candidates: &[usize],
    covers: &[Vec<usize>],
    pos: usize,
    n: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if chosen.len() == n {
        out.push(chosen.clone());
        return;
    }
    if pos == candidates.len() {
        return;
    }
    let a = candidates[pos];
    let closed = covers[pos].iter().all(|c| chosen.contains(c));
    let commutes = chosen.iter().all(|&b| sys.sum(a, b).is_none()) && sys.sum(a, a).is_none();
    if closed && commutes {
        chosen.push(a);
        descend(sys, candidates, covers, pos + 1, n, chosen, out);
        chosen.pop();
    }
    descend(sys, candidates, covers, pos + 1, n, chosen, out);
}

/// Sort key: the roots in `≺`-order for B/C/D, descending canonical order otherwise.
fn ideal_key(sys: &RootSystem, ideal: &AbelianIdeal) -> Vec<(usize, usize)> {
    if matches!(sys.tag(), TypeTag::B | TypeTag::C | TypeTag::D) {
        let mut v: Vec<(usize, usize)> =
            ideal.roots.iter().map(|&a| epsilon_pair(sys, a).map(|(i, j)| (j, i)).unwrap_or((0, 0))).collect();
        v.sort();
        v
    } else {
        ideal.roots.iter().map(|&a| (usize::MAX - a, 0)).collect()
    }
}

/// `(i, j)` with the root equal to `ε_i + ε_j` (`i ≤ j`, one-based); `None`
/// for roots of another form.
pub fn epsilon_pair(sys: &RootSystem, a: usize) -> Option<(usize, usize)> {
    let e = sys.root(a).epsilon.as_ref()?;
    let pos: Vec<usize> = e.iter().enumerate().filter(|(_, &v)| v > 0).map(|(k, _)| k + 1).collect();
    if e.iter().any(|&v| v < 0) {
        return None;
    }
    match (pos.as_slice(), sys.tag()) {
        ([i], TypeTag::C) if e[i - 1] == 2 => Some((*i, *i)),
        ([i, j], _) => Some((*i, *j)),
        _ => None,
    }
}

/// Smallest `ε` index occurring in a classical root.
pub fn epsilon_first(sys: &RootSystem, a: usize) -> Option<usize> {
    let e = sys.root(a).epsilon.as_ref()?;
    e.iter().position(|&v| v != 0).map(|k| k + 1)
}

/// Root index of `ε_i − ε_j` for `i < j` (one-based).
pub fn minus_root(sys: &RootSystem, i: usize, j: usize) -> Option<usize> {
    let label = format!("e{i}-e{j}");
    sys.parse_label(&label).ok()
}

/// Root index of `ε_i + ε_j`, `2ε_i` when `i = j` in type C, `ε_i` when `j = 0` in type B.
pub fn plus_root(sys: &RootSystem, i: usize, j: usize) -> Option<usize> {
    let label = if j == 0 {
        format!("e{i}")
    } else if i == j {
        format!("2e{i}")
    } else {
        format!("e{i}+e{j}")
    };
    sys.parse_label(&label).ok()
}

/// The type-A partition `μ` with `ideal = a_μ`.
pub fn partition_of_ideal_a(ideal: &AbelianIdeal, sys: &RootSystem) -> Result<Partition> {
    if sys.tag() != TypeTag::A {
        return Err(Error::Unsupported("partition only defined in type A".into()));
    }
    let n = sys.rank();
    let mut parts = Vec::new();
    for k in 1..=n {
        let col = n + 2 - k;
        let count = (1..col).take_while(|&j| minus_root(sys, j, col).is_some_and(|a| ideal.contains(a))).count();
        if count == 0 {
            break;
        }
        parts.push(count);
    }
    let mu = Partition::new(parts)?;
    let rebuilt = ideal_a(&mu, sys)?;
    let mut want = ideal.roots.clone();
    want.sort();
    let mut got = rebuilt.roots.clone();
    got.sort();
    if got != want {
        return Err(Error::Consistency(format!("ideal is not of the form a_μ for μ = {mu}")));
    }
    Ok(mu)
}

fn ideal_from_positions(sys: &RootSystem, positions: impl IntoIterator<Item = (usize, usize)>) -> Result<AbelianIdeal> {
    let mut roots = positions
        .into_iter()
        .map(|(i, j)| minus_root(sys, i, j).ok_or_else(|| Error::Consistency(format!("no root E_({i},{j})"))))
        .collect::<Result<Vec<_>>>()?;
    roots.sort_unstable_by(|a, b| b.cmp(a));
    Ok(AbelianIdeal { roots, type_class: None })
}

/// `a_μ = ⊕_k ⊕_{j ≤ μ_k} ℂ E_{j, n−k+2}`.
pub fn ideal_a(mu: &Partition, sys: &RootSystem) -> Result<AbelianIdeal> {
    let n = mu.size();
    if sys.tag() != TypeTag::A || sys.rank() != n {
        return Err(Error::Unsupported(format!("a_μ needs type A of rank {n}")));
    }
    let pos = mu.parts().iter().enumerate().flat_map(|(k, &m)| (1..=m).map(move |j| (j, n - k + 1)));
    ideal_from_positions(sys, pos)
}

/// `a′_μ = ⊕_k ⊕_{j ≤ μ_k} ℂ E_{μ₁+1−j, μ₁+Σ_{i>k} μ_i+1}`.
pub fn ideal_a_prime(mu: &Partition, sys: &RootSystem) -> Result<AbelianIdeal> {
    let n = mu.size();
    if sys.tag() != TypeTag::A || sys.rank() != n {
        return Err(Error::Unsupported(format!("a′_μ needs type A of rank {n}")));
    }
    let p = mu.parts();
    let m1 = p[0];
    let pos = (0..p.len()).flat_map(|k| {
        let tail: usize = p[k + 1..].iter().sum();
        (1..=p[k]).map(move |j| (m1 + 1 - j, m1 + tail + 1))
    });
    ideal_from_positions(sys, pos)
}

/// Classification of a B/C/D ideal.
pub fn classify_bcd(ideal: &AbelianIdeal, sys: &RootSystem) -> Result<BcdClass> {
    let n = sys.rank();
    let tag = sys.tag();
    let set = |pairs: &[(usize, usize)], minus: bool| -> Vec<usize> {
        let mut v: Vec<usize> = pairs.iter().filter_map(|&(i, j)| plus_root(sys, i, j)).collect();
        if minus {
            v.extend(minus_root(sys, 1, n));
        }
        v.sort_unstable();
        v
    };
    let mut have = ideal.roots.clone();
    have.sort_unstable();
    let first_row = |upto: usize| -> Vec<(usize, usize)> { (2..=upto).map(|j| (1, j)).collect() };
    if tag == TypeTag::D && n == 4 {
        let cases = [
            set(&first_row(4), true),
            set(&[vec![(2, 3)], first_row(4)].concat(), false),
            set(&[vec![(2, 3)], first_row(3)].concat(), true),
        ];
        return cases
            .iter()
            .position(|c| *c == have)
            .map(|k| BcdClass::D4Special(k as u8 + 1))
            .ok_or_else(|| Error::Consistency("unclassifiable D4 ideal".into()));
    }
    if ideal.roots.iter().all(|&a| epsilon_pair(sys, a).is_some()) {
        return Ok(BcdClass::PlusOnly);
    }
    match tag {
        TypeTag::B if have == set(&[vec![(1, 0)], first_row(n)].concat(), false) => Ok(BcdClass::BCase1),
        TypeTag::D if have == set(&first_row(n), true) => Ok(BcdClass::DCase2),
        TypeTag::D if have == set(&[vec![(2, 3)], first_row(n - 1)].concat(), true) => Ok(BcdClass::DCase3),
        _ => Err(Error::Consistency(format!("unclassifiable ideal {:?}", ideal.labels(sys)))),
    }
}

/// `X_{α_i}` annihilates the wedge of the ideal's root vectors.
pub fn highest_weight_check(roots: &[usize], sys: &RootSystem) -> bool {
    (0..sys.rank()).all(|i| {
        roots
            .iter()
            .all(|&b| sys.sum(b, sys.simple(i)).is_none_or(|s| roots.contains(&s)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(tag: TypeTag, rank: usize) -> usize {
        enumerate_ideals(&LieModel::build(tag, rank).unwrap()).len()
    }

    #[test]
    fn partitions_counted() {
        let p: Vec<usize> = (1..=10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(p, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn partition_parse() {
        assert_eq!("4,4,1".parse::<Partition>().unwrap(), Partition(vec![4, 4, 1]));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(TypeTag::G2, 2), 1);
        assert_eq!(count(TypeTag::C, 3), 2);
        assert_eq!(count(TypeTag::D, 4), 3);
        assert_eq!(count(TypeTag::A, 5), 7);
    }

    #[test]
    fn non_closed_set_fails_highest_weight() {
        let sys = RootSystem::new(TypeTag::B, 3).unwrap();
        let set = vec![sys.maximal(), sys.simple(0)];
        assert!(!highest_weight_check(&set, &sys));
        assert!(highest_weight_check(&[sys.maximal()], &sys));
    }
}
