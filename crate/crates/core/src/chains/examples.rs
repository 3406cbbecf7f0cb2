//! Small chains with closed-form targets.

use super::{AlgebraContext, Chain, ChainStep};
use crate::deform::{DeformationStep, Subspace};
use crate::error::{Error, Result};
use crate::ideals::plus_root;
use crate::regnil::lambda_power;
use crate::roots::TypeTag;

/// `𝔥 → lim exp(t⁻¹ ad Λ)(𝔥)`, which must equal `J`.
pub fn ranee(ctx: &AlgebraContext) -> Chain {
    let model = &ctx.model;
    Chain {
        start: Subspace::cartan(model),
        steps: vec![ChainStep {
            step: DeformationStep::unipotent(model, model.lambda()),
            target: ctx.jordan.centralizer.clone(),
        }],
    }
}

/// The three branches in `sp(6)`: `J → K` by `X_{2ε₂}`, and
/// `K → 𝔞_i` by `d₁ = diag(1,t,1,1,t⁻¹,1)`, `d₂ = diag(t,1,1,1,1,t⁻¹)`.
pub struct Sp6Example {
    pub to_k: Chain,
    pub to_ideals: [Chain; 2],
}

pub fn sp6(ctx: &AlgebraContext) -> Result<Sp6Example> {
    if (ctx.tag(), ctx.rank()) != (TypeTag::C, 3) {
        return Err(Error::Unsupported("the sp(6) example needs C3".into()));
    }
    let model = &ctx.model;
    let sys = model.sys();
    let root = |i, j| plus_root(sys, i, j).ok_or_else(|| Error::Consistency("missing root".into()));
    let k = Subspace::from_elements(
        model,
        &[model.root_vector(root(1, 2)?), lambda_power(model, 3)?, lambda_power(model, 5)?],
    );
    let to_k = Chain {
        start: ctx.jordan.centralizer.clone(),
        steps: vec![ChainStep { step: DeformationStep::unipotent_root(model, root(2, 2)?), target: k.clone() }],
    };
    let a1 = Subspace::from_roots(model, &[root(1, 3)?, root(1, 2)?, root(1, 1)?]);
    let a2 = Subspace::from_roots(model, &[root(1, 2)?, root(1, 1)?, root(2, 2)?]);
    let diag = |w: [i64; 6], target: Subspace| Chain {
        start: k.clone(),
        steps: vec![ChainStep { step: DeformationStep::DiagMatrix { w: w.to_vec() }, target }],
    };
    Ok(Sp6Example { to_k, to_ideals: [diag([0, 1, 0, 0, -1, 0], a1), diag([1, 0, 0, 0, 0, -1], a2)] })
}
