//! Explicit deformation chains from `J` to every `n`-dimensional abelian
//! ideal, their exact verification, and JSON certificates.

pub mod bcd;
pub mod examples;
pub mod exceptional;
pub mod ie;
pub mod type_a;

use std::time::Instant;

use serde::Serialize;

use crate::deform::{DeformationStep, Subspace};
use crate::error::{Error, Result};
use crate::ideals::{enumerate_ideals, partition_of_ideal_a, AbelianIdeal, BcdClass};
use crate::liealg::{Element, LieModel};
use crate::regnil::{build_k, jordan_subalgebra, JordanData, KBasis};
use crate::roots::TypeTag;

/// A deformation together with the subspace its limit must equal.
#[derive(Clone, Debug)]
pub struct ChainStep {
    pub step: DeformationStep,
    pub target: Subspace,
}

#[derive(Clone, Debug)]
pub struct Chain {
    pub start: Subspace,
    pub steps: Vec<ChainStep>,
}

/// Outcome of one step: the exact limit and whether it hit the target.
#[derive(Clone, Debug)]
pub struct StepOutcome {
    pub computed: Subspace,
    pub equal: bool,
}

impl Chain {
    /// Applies every step to the previous limit. Stops at the first error.
    pub fn run(&self, model: &LieModel) -> Result<Vec<StepOutcome>> {
        let mut cur = self.start.clone();
        let mut out = Vec::with_capacity(self.steps.len());
        for s in &self.steps {
            let computed = s.step.apply(&cur, model)?;
            let equal = computed == s.target;
            cur = computed.clone();
            out.push(StepOutcome { computed, equal });
        }
        Ok(out)
    }

    /// Prepends the steps of `other`, which must end where `self` starts.
    pub fn after(mut self, other: Chain) -> Chain {
        let mut steps = other.steps;
        steps.append(&mut self.steps);
        self.start = other.start;
        self.steps = steps;
        self
    }
}

/// The Lie algebra data shared by every chain of one type and rank.
#[derive(Clone, Debug)]
pub struct AlgebraContext {
    pub model: LieModel,
    pub jordan: JordanData,
    pub k: KBasis,
    pub ideals: Vec<AbelianIdeal>,
}

impl AlgebraContext {
    pub fn new(tag: TypeTag, rank: usize) -> Result<Self> {
        let model = LieModel::build(tag, rank)?;
        let jordan = jordan_subalgebra(&model)?;
        let k = build_k(&model)?;
        let ideals = enumerate_ideals(&model);
        Ok(Self { model, jordan, k, ideals })
    }

    pub fn tag(&self) -> TypeTag {
        self.model.sys().tag()
    }

    pub fn rank(&self) -> usize {
        self.model.rank()
    }

    /// Graded component of `J` at height `h` (one-dimensional except in
    /// `D_{2m}` at height `2m − 1`).
    pub fn j_component(&self, h: i64) -> Result<Element> {
        crate::regnil::graded_components(&self.model, &self.jordan.centralizer)?
            .into_iter()
            .find(|(k, v)| *k == h && v.len() == 1)
            .map(|(_, mut v)| v.pop().unwrap())
            .ok_or_else(|| Error::Consistency(format!("J has no one-dimensional component at height {h}")))
    }

    /// The steps `J → K`, each targeting `K` itself.
    pub fn j_to_k(&self) -> Chain {
        let steps = match self.k.steps.as_slice() {
            [] => vec![],
            [s] => vec![ChainStep {
                step: DeformationStep::unipotent(&self.model, s.raw.clone()),
                target: self.k.subspace.clone(),
            }],
            _ => unreachable!("multi-step K constructions carry their own targets"),
        };
        Chain { start: self.jordan.centralizer.clone(), steps }
    }
}

/// Builds the verified chain for one ideal.
pub fn chain_for(ctx: &AlgebraContext, ideal: &AbelianIdeal) -> Result<Chain> {
    let model = &ctx.model;
    match ctx.tag() {
        TypeTag::A => {
            let mu = partition_of_ideal_a(ideal, model.sys())?;
            type_a::chain_a(model, &ctx.jordan.centralizer, &mu)
        }
        TypeTag::B | TypeTag::C | TypeTag::D => {
            let class = ideal.type_class.ok_or_else(|| Error::Consistency("unclassified ideal".into()))?;
            let tail = match class {
                BcdClass::PlusOnly => bcd::chain_plus_only(ctx, ideal)?,
                _ => bcd::chain_exceptional_class(ctx, ideal, class)?,
            };
            Ok(tail.after(ctx.j_to_k()))
        }
        _ => exceptional::chain(ctx, ideal),
    }
}

/// One `(label, coefficient)` list per basis vector.
pub type BasisTerms = Vec<Vec<(String, String)>>;

pub fn basis_terms(model: &LieModel, s: &Subspace) -> BasisTerms {
    s.elements().iter().map(|x| model.element_terms(x)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct StepRecord {
    pub kind: String,
    pub params: serde_json::Value,
    pub target_basis: BasisTerms,
    pub computed_basis: BasisTerms,
    pub equal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    #[serde(rename = "type")]
    pub type_name: String,
    pub rank: usize,
    pub ideal: Vec<String>,
    pub steps: Vec<StepRecord>,
    pub pass: bool,
    pub millis: u64,
}

fn step_params(step: &DeformationStep) -> serde_json::Value {
    let mut v = serde_json::to_value(step).unwrap_or(serde_json::Value::Null);
    if let Some(obj) = v.as_object_mut() {
        obj.remove("kind");
    }
    v
}

/// Builds and runs the chain, recording failures in the certificate.
pub fn certify(ctx: &AlgebraContext, ideal: &AbelianIdeal, timing: bool) -> Certificate {
    let started = Instant::now();
    let model = &ctx.model;
    let sys = model.sys();
    let mut steps = Vec::new();
    let mut pass = false;
    let mut failure = None;
    match chain_for(ctx, ideal).and_then(|c| c.run(model).map(|o| (c, o))) {
        Ok((chain, outcomes)) => {
            let end = ideal.subspace(model);
            pass = outcomes.iter().all(|o| o.equal)
                && outcomes.last().map_or(chain.start == end, |o| o.computed == end);
            for (s, o) in chain.steps.iter().zip(outcomes) {
                steps.push(StepRecord {
                    kind: s.step.kind().to_string(),
                    params: step_params(&s.step),
                    target_basis: basis_terms(model, &s.target),
                    computed_basis: basis_terms(model, &o.computed),
                    equal: o.equal,
                });
            }
        }
        Err(e) => failure = Some(e),
    }
    if let Some(e) = failure {
        steps.push(StepRecord {
            kind: "error".into(),
            params: serde_json::Value::String(e.to_string()),
            target_basis: vec![],
            computed_basis: vec![],
            equal: false,
        });
    }
    Certificate {
        type_name: sys.tag().to_string(),
        rank: sys.rank(),
        ideal: ideal.labels(sys),
        steps,
        pass,
        millis: if timing { started.elapsed().as_millis() as u64 } else { 0 },
    }
}

/// Every configured `(type, rank)` pair of the full suite.
pub fn all_configurations() -> Vec<(TypeTag, usize)> {
    let mut out: Vec<(TypeTag, usize)> = (1..=8).map(|n| (TypeTag::A, n)).collect();
    out.extend((2..=7).map(|n| (TypeTag::B, n)));
    out.extend((2..=7).map(|n| (TypeTag::C, n)));
    out.extend((4..=7).map(|n| (TypeTag::D, n)));
    for t in [TypeTag::G2, TypeTag::F4, TypeTag::E6, TypeTag::E7, TypeTag::E8] {
        out.push((t, t.fixed_rank().unwrap()));
    }
    out
}

/// Maps `f` over `items`, in parallel when the `parallel` feature is on and
/// `parallel` is true. Output order always matches input order.
pub fn map_tasks<T, U, F>(items: Vec<T>, parallel: bool, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        use rayon::prelude::*;
        return items.into_par_iter().map(f).collect();
    }
    let _ = parallel;
    items.into_iter().map(f).collect()
}

/// Per-configuration checks that precede the ideal chains.
#[derive(Clone, Debug, Serialize)]
pub struct ConfigSummary {
    #[serde(rename = "type")]
    pub type_name: String,
    pub rank: usize,
    /// `lim exp(t⁻¹ ad Λ)(𝔥) = J`.
    pub ranee: bool,
    /// Heights of the generators of `K`.
    pub k_heights: Vec<i64>,
    pub k_params: Option<(i64, i64)>,
    pub k_notes: Vec<String>,
    pub ideals: usize,
    pub passed: usize,
}

/// Output of [`run_suite`]: summaries in configuration order, certificates
/// in (configuration, ideal) order.
#[derive(Clone, Debug, Serialize)]
pub struct Suite {
    pub configs: Vec<ConfigSummary>,
    pub certificates: Vec<Certificate>,
}

impl Suite {
    pub fn all_pass(&self) -> bool {
        self.configs.iter().all(|c| c.ranee && c.passed == c.ideals)
    }
}

fn ranee_holds(ctx: &AlgebraContext) -> bool {
    examples::ranee(ctx).run(&ctx.model).is_ok_and(|o| o.iter().all(|s| s.equal))
}

/// Certificates for every ideal of every configuration.
pub fn run_suite(configs: &[(TypeTag, usize)], parallel: bool, timing: bool) -> Result<Suite> {
    let contexts = map_tasks(configs.to_vec(), parallel, |(t, n)| AlgebraContext::new(t, n));
    let contexts = contexts.into_iter().collect::<Result<Vec<_>>>()?;
    let ranee = map_tasks(contexts.iter().collect(), parallel, ranee_holds);
    let tasks: Vec<(&AlgebraContext, &AbelianIdeal)> =
        contexts.iter().flat_map(|c| c.ideals.iter().map(move |i| (c, i))).collect();
    let certificates = map_tasks(tasks, parallel, |(c, i)| certify(c, i, timing));
    let mut offset = 0;
    let summaries = contexts
        .iter()
        .zip(ranee)
        .map(|(c, ranee)| {
            let mine = &certificates[offset..offset + c.ideals.len()];
            offset += c.ideals.len();
            ConfigSummary {
                type_name: c.tag().to_string(),
                rank: c.rank(),
                ranee,
                k_heights: c.k.generators.iter().map(|(h, _)| *h).collect(),
                k_params: c.k.params,
                k_notes: c.k.notes.clone(),
                ideals: c.ideals.len(),
                passed: mine.iter().filter(|x| x.pass).count(),
            }
        })
        .collect();
    Ok(Suite { configs: summaries, certificates })
}
