//! Chains for types B, C, D.
//!
//! Ideals made only of roots `ε_i + ε_j` are reached from `K` in `n` steps,
//! one per root in the order `≺` (by `j`, then `i`). The remaining shapes
//! use one to three steps each.

use num_traits::Zero;
use serde::Serialize;

use super::{AlgebraContext, Chain, ChainStep};
use crate::deform::{DeformationStep, Subspace};
use crate::error::{Error, Result};
use crate::ideals::{epsilon_first, epsilon_pair, minus_root, plus_root, AbelianIdeal, BcdClass};
use crate::liealg::{Element, LieModel};
use crate::roots::{RootSystem, TypeTag};

/// Where a root of the ideal sits in the partition `M₁ ⊔ M₂ ⊔ L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Part {
    M1,
    M2,
    L,
}

/// Combinatorial data of a plus-only ideal.
#[derive(Clone, Debug, Serialize)]
pub struct BcdPlan {
    /// `α(1), …, α(n)` as root indices.
    pub order: Vec<usize>,
    /// `(i, j)` of each `α(l)`.
    pub pairs: Vec<(usize, usize)>,
    pub parts: Vec<Part>,
    /// Positions (zero-based) of the sources.
    pub sources: Vec<usize>,
    /// Position of `s(α(l))`.
    pub source_of: Vec<usize>,
    /// `t_1, …, t_{n+1}`; `None` is `∞`.
    pub t: Vec<Option<usize>>,
}

impl BcdPlan {
    pub fn new(sys: &RootSystem, ideal: &AbelianIdeal) -> Result<Self> {
        let tag = sys.tag();
        let mut keyed = ideal
            .roots
            .iter()
            .map(|&a| {
                epsilon_pair(sys, a)
                    .map(|p| (p, a))
                    .ok_or_else(|| Error::Unsupported(format!("{} is not of the form ε_i + ε_j", sys.label(a))))
            })
            .collect::<Result<Vec<_>>>()?;
        keyed.sort_by_key(|&((i, j), _)| (j, i));
        let order: Vec<usize> = keyed.iter().map(|&(_, a)| a).collect();
        let pairs: Vec<(usize, usize)> = keyed.iter().map(|&(p, _)| p).collect();
        let n = order.len();

        let mut parts = vec![Part::L; n];
        for p in 0..n {
            let h = sys.height(order[p]);
            let min_i = (0..n).filter(|&q| sys.height(order[q]) == h).map(|q| pairs[q].0).min().unwrap();
            if pairs[p].0 == min_i {
                parts[p] = if min_i == 1 { Part::M1 } else { Part::M2 };
            }
        }

        let sources: Vec<usize> = (0..n)
            .filter(|&p| (0..n).all(|q| q == p || !sys.leq(order[q], order[p])))
            .collect();
        for &p in &sources {
            let (i, j) = pairs[p];
            let above = |i2: usize, j2: usize| pairs.contains(&(i2, j2));
            if above(i + 1, j) || above(i, j + 1) {
                return Err(Error::Consistency(format!("source {} has a lower neighbour", sys.label(order[p]))));
            }
        }
        let source_of = (0..n)
            .map(|p| {
                sources
                    .iter()
                    .copied()
                    .find(|&s| sys.leq(order[s], order[p]))
                    .ok_or_else(|| Error::Consistency("root without source".into()))
            })
            .collect::<Result<Vec<_>>>()?;

        let special = |(i, j): (usize, usize)| match tag {
            TypeTag::C => i == j,
            _ => i + 1 == j,
        };
        let mut t = vec![None];
        for l in 2..=n + 1 {
            let prev = l - 2;
            let infinite = parts[prev] != Part::M2
                && (0..n).any(|q| special(pairs[q]) && sys.leq(order[q], order[prev]));
            t.push(if infinite { None } else { (0..l - 1).map(|q| pairs[source_of[q]].0).min() });
        }
        Ok(Self { order, pairs, parts, sources, source_of, t })
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// One-based positions of the roots in a given part.
    pub fn positions(&self, part: Part) -> Vec<usize> {
        (0..self.len()).filter(|&p| self.parts[p] == part).map(|p| p + 1).collect()
    }
}

/// `P_{≤k}`: keeps the root terms whose first `ε` index is at most `k`.
pub fn truncate(sys: &RootSystem, model: &LieModel, x: &Element, k: Option<usize>) -> Element {
    let Some(k) = k else { return x.clone() };
    Element::from_terms(
        x.terms()
            .iter()
            .filter(|(idx, _)| model.root_of(*idx).is_some_and(|a| epsilon_first(sys, a).is_some_and(|i| i <= k)))
            .cloned(),
    )
}

fn unit_vector(n: usize, i: usize, c: i64) -> Vec<i64> {
    let mut m = vec![0; n];
    m[i - 1] = c;
    m
}

/// Height of the maximal root.
fn top_height(sys: &RootSystem) -> i64 {
    sys.height(sys.maximal())
}

/// `β = α₄ + … + α_{n−2} + α_n` in `D_n`, `n ≥ 5`.
pub fn d_beta(sys: &RootSystem) -> Result<usize> {
    let n = sys.rank();
    let mut v = vec![0; n];
    for k in 4..=n - 2 {
        v[k - 1] = 1;
    }
    v[n - 1] = 1;
    sys.find(&v).ok_or_else(|| Error::Consistency("α₄ + … + α_{n−2} + α_n is not a root".into()))
}

/// The combination `Λ^{(n−1)} − cZ` annihilated by `ad X_β` in `D_n`.
pub fn killed_combination(ctx: &AlgebraContext, beta: usize) -> Result<Element> {
    let model = &ctx.model;
    let n = model.rank() as i64;
    let z = ctx.k.z.as_ref().ok_or_else(|| Error::Unsupported("Z exists only in type D".into()))?;
    let lam = ctx.k.generator(n - 1).ok_or_else(|| Error::Consistency("K has no Λ^(n−1)".into()))?;
    let xb = model.root_vector(beta);
    let bl = model.bracket(&xb, lam);
    let bz = model.bracket(&xb, z);
    let (idx, cz) = bz.terms().first().cloned().ok_or_else(|| Error::Consistency("[X_β, Z] = 0".into()))?;
    let g = lam.sub(&z.scale(&(bl.coeff(idx) / cz)));
    if !model.bracket(&xb, &g).is_zero() {
        return Err(Error::Consistency("[X_β, Λ^(n−1)] and [X_β, Z] are not proportional".into()));
    }
    Ok(g)
}

/// `Γ′`: the combination killed by `X_β`, `β = α₄ + … + α_{n−2} + α_n`.
/// It has no `ε₁ − ε_n` term. In `D₄` this is `Λ^{(3)}` itself.
pub fn gamma_prime(ctx: &AlgebraContext) -> Result<Element> {
    if ctx.rank() == 4 {
        let n = ctx.rank() as i64;
        return ctx.k.generator(n - 1).cloned().ok_or_else(|| Error::Consistency("K has no Λ^(3)".into()));
    }
    killed_combination(ctx, d_beta(ctx.model.sys())?)
}

/// `Λ^{(h)}` as used by the chains: `Γ′` at height `n − 1` in type D.
fn lam(ctx: &AlgebraContext, h: i64) -> Result<Element> {
    if ctx.tag() == TypeTag::D && h == ctx.rank() as i64 - 1 {
        return gamma_prime(ctx);
    }
    ctx.k.generator(h).cloned().ok_or_else(|| Error::Consistency(format!("K has no generator at height {h}")))
}

/// `Θ_k`.
fn theta(ctx: &AlgebraContext, k: usize) -> Result<Element> {
    if ctx.tag() == TypeTag::D && k == 1 {
        return ctx.k.z.clone().ok_or_else(|| Error::Consistency("missing Z".into()));
    }
    lam(ctx, top_height(ctx.model.sys()) - ctx.rank() as i64 + k as i64)
}

/// `𝔞_l` for `l = 1, …, n+1`.
pub fn intermediate(ctx: &AlgebraContext, plan: &BcdPlan, l: usize) -> Result<Subspace> {
    let model = &ctx.model;
    let sys = model.sys();
    let n = plan.len();
    let tl = plan.t[l - 1];
    let done = l - 1;
    let in_y = |p: usize| p < done;
    let l_count = (0..done).filter(|&p| plan.parts[p] == Part::L).count();
    let m2_done: Vec<usize> = (0..done).filter(|&p| plan.parts[p] == Part::M2).collect();
    let shares_source = |p: usize| m2_done.iter().any(|&q| plan.source_of[q] == plan.source_of[p]);

    let mut gens: Vec<Element> = (0..done).map(|p| model.root_vector(plan.order[p])).collect();
    let min_ht = plan.order.iter().map(|&a| sys.height(a)).min().unwrap();
    let base = top_height(sys) - n as i64;
    for k in (l_count + 1)..usize::MAX {
        if base + k as i64 >= min_ht {
            break;
        }
        gens.push(truncate(sys, model, &theta(ctx, k)?, tl));
    }
    for p in (0..n).filter(|&p| !in_y(p)) {
        match plan.parts[p] {
            Part::M1 => gens.push(truncate(sys, model, &lam(ctx, sys.height(plan.order[p]))?, tl)),
            Part::M2 if shares_source(p) => gens.push(model.root_vector(plan.order[p])),
            Part::M2 => gens.push(truncate(sys, model, &lam(ctx, sys.height(plan.order[p]))?, tl)),
            Part::L => {}
        }
    }
    let s = Subspace::from_elements(model, &gens);
    if s.dim() != n {
        return Err(Error::Consistency(format!("dim 𝔞_{l} = {} ≠ {n}", s.dim())));
    }
    Ok(s)
}

/// The simple roots of `ε_i + ε_j` in the order used to split off `β`.
fn split_sequence(tag: TypeTag, n: usize, i: usize, j: usize) -> Vec<usize> {
    match tag {
        TypeTag::B => (i..=n).chain((j..=n).rev()).collect(),
        TypeTag::C => (i..=n).chain((j..n).rev()).collect(),
        _ => (i..=n - 2).chain([n]).chain((j..n).rev()).collect(),
    }
}

/// The deformation taking `𝔞_l` to `𝔞_{l+1}`.
pub fn step_for(ctx: &AlgebraContext, plan: &BcdPlan, l: usize) -> Result<DeformationStep> {
    let model = &ctx.model;
    let sys = model.sys();
    let tag = sys.tag();
    let n = sys.rank();
    let p = l - 1;
    let (tl, tnext) = (plan.t[l - 1], plan.t[l]);
    match plan.parts[p] {
        Part::M1 => match (tl == tnext, tnext) {
            (true, _) => Ok(DeformationStep::Identity),
            (false, Some(t)) => Ok(DeformationStep::toric(unit_vector(n, t, -1))),
            (false, None) => Err(Error::Consistency(format!("t_{} = ∞ after an M₁ root", l + 1))),
        },
        Part::L => {
            if tag == TypeTag::D && l == 3 {
                return Ok(DeformationStep::unipotent_root(model, d_beta(sys)?));
            }
            let l_count = (0..p).filter(|&q| plan.parts[q] == Part::L).count();
            let h = (top_height(sys) - n as i64 + l_count as i64 + 1) as usize;
            let min_ht = plan.order.iter().map(|&a| sys.height(a)).min().unwrap();
            if h as i64 >= min_ht {
                return Err(Error::Consistency(format!("split height {h} is not below min ht(Y) = {min_ht}")));
            }
            let (i, j) = plan.pairs[p];
            let seq = split_sequence(tag, n, i, j);
            let mut v = vec![0; n];
            for &k in &seq[h..] {
                v[k - 1] += 1;
            }
            let beta = sys.find(&v).ok_or_else(|| Error::Consistency(format!("tail {v:?} is not a root")))?;
            Ok(DeformationStep::unipotent_root(model, beta))
        }
        Part::M2 => {
            let earlier = (0..p).any(|q| plan.parts[q] == Part::M2 && plan.source_of[q] == plan.source_of[p]);
            if tl == tnext && earlier {
                return Ok(DeformationStep::Identity);
            }
            let t = tnext.ok_or_else(|| Error::Consistency(format!("t_{} = ∞ at an M₂ root", l + 1)))?;
            let mut m = unit_vector(n, t, -2);
            m[plan.pairs[p].1 - 1] -= 1;
            Ok(DeformationStep::toric(m))
        }
    }
}

/// `K = 𝔞_1 → 𝔞_2 → … → 𝔞_{n+1}`.
pub fn chain_plus_only(ctx: &AlgebraContext, ideal: &AbelianIdeal) -> Result<Chain> {
    let plan = BcdPlan::new(ctx.model.sys(), ideal)?;
    let start = intermediate(ctx, &plan, 1)?;
    if start != ctx.k.subspace {
        return Err(Error::Consistency("𝔞_1 ≠ K".into()));
    }
    let mut steps = Vec::with_capacity(plan.len());
    for l in 1..=plan.len() {
        let target = if l == plan.len() { ideal.subspace(&ctx.model) } else { intermediate(ctx, &plan, l + 1)? };
        steps.push(ChainStep { step: step_for(ctx, &plan, l)?, target });
    }
    Ok(Chain { start, steps })
}

/// Chains for `B_case1`, `D_case2`, `D_case3` and the three `D₄` ideals.
pub fn chain_exceptional_class(ctx: &AlgebraContext, ideal: &AbelianIdeal, class: BcdClass) -> Result<Chain> {
    let model = &ctx.model;
    let sys = model.sys();
    let n = sys.rank();
    let k = ctx.k.subspace.clone();
    let end = ideal.subspace(model);
    let toric = |i: usize, c: i64| DeformationStep::toric(unit_vector(n, i, c));
    let steps = match class {
        BcdClass::BCase1 | BcdClass::DCase2 | BcdClass::D4Special(1) => {
            vec![ChainStep { step: toric(1, -1), target: end }]
        }
        BcdClass::D4Special(2) => vec![ChainStep { step: toric(4, -1), target: end }],
        BcdClass::D4Special(3) => vec![ChainStep { step: toric(3, -1), target: end }],
        BcdClass::DCase3 => {
            // Mirror of the `ε₁ + ε_n` case under `ε_n ↦ −ε_n`.
            let root = |r: Option<usize>| r.ok_or_else(|| Error::Consistency("missing root".into()));
            let beta = root(minus_root(sys, 4, n))?;
            let g = killed_combination(ctx, beta)?;
            if !g.coeff(model.x(root(plus_root(sys, 1, n))?)).is_zero()
                || g.coeff(model.x(root(minus_root(sys, 1, n))?)).is_zero()
            {
                return Err(Error::Consistency("Γ″ is not supported on ε₁ − ε_n alone among ε₁ ± ε_n".into()));
            }
            let mut a1 = vec![model.root_vector(root(plus_root(sys, 1, 4))?), g];
            for h in n as i64..=2 * n as i64 - 3 {
                a1.push(lam(ctx, h)?);
            }
            vec![
                ChainStep { step: DeformationStep::unipotent_root(model, beta), target: Subspace::from_elements(model, &a1) },
                ChainStep { step: toric(1, -1), target: end },
            ]
        }
        other => return Err(Error::Unsupported(format!("no direct chain for {other}"))),
    };
    Ok(Chain { start: k, steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::enumerate_ideals;

    #[test]
    fn split_sequences_sum_to_the_root() {
        let sys = RootSystem::new(TypeTag::D, 6).unwrap();
        let seq = split_sequence(TypeTag::D, 6, 2, 4);
        let mut v = vec![0; 6];
        for k in seq {
            v[k - 1] += 1;
        }
        assert_eq!(sys.find(&v), plus_root(&sys, 2, 4));
    }

    #[test]
    fn t_is_non_increasing() {
        for (tag, n) in [(TypeTag::B, 5), (TypeTag::C, 5), (TypeTag::D, 6)] {
            let model = LieModel::build(tag, n).unwrap();
            for ideal in enumerate_ideals(&model) {
                if ideal.type_class != Some(BcdClass::PlusOnly) {
                    continue;
                }
                let plan = BcdPlan::new(model.sys(), &ideal).unwrap();
                let as_num = |t: Option<usize>| t.unwrap_or(usize::MAX);
                assert!(plan.t.windows(2).all(|w| as_num(w[0]) >= as_num(w[1])));
            }
        }
    }
}
