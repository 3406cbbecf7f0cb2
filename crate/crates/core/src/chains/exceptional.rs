//! Chains for G2, F4, E6, E7, E8.
//!
//! Targets are written as spans of root vectors, graded pieces `f_h` of `J`,
//! and, where the construction leaves them implicit, the generators
//! `Λ^{(h)}` of `K`.

use super::{AlgebraContext, Chain, ChainStep};
use crate::deform::{DeformationStep, Subspace};
use crate::error::{Error, Result};
use crate::exact::rat;
use crate::ideals::AbelianIdeal;
use crate::liealg::Element;
use crate::roots::TypeTag;

/// A target: root labels, heights of `J` components, heights of `K` generators.
struct Span<'a> {
    roots: &'a [&'a str],
    j: &'a [i64],
    k: &'a [i64],
}

const fn span<'a>(roots: &'a [&'a str], j: &'a [i64], k: &'a [i64]) -> Span<'a> {
    Span { roots, j, k }
}

impl AlgebraContext {
    fn root_element(&self, label: &str) -> Result<Element> {
        Ok(self.model.root_vector(self.model.sys().parse_label(label)?))
    }

    fn build_span(&self, s: &Span<'_>) -> Result<Subspace> {
        let mut gens = Vec::new();
        for r in s.roots {
            gens.push(self.root_element(r)?);
        }
        for &h in s.j {
            gens.push(self.j_component(h)?);
        }
        for &h in s.k {
            gens.push(self.k.generator(h).cloned().ok_or_else(|| Error::Consistency(format!("K has no Λ^({h})")))?);
        }
        let out = Subspace::from_elements(&self.model, &gens);
        if out.dim() != gens.len() {
            return Err(Error::Consistency("target generators are dependent".into()));
        }
        Ok(out)
    }

    /// Linear combination of root vectors from `(coefficient, label)` pairs.
    pub fn combination(&self, terms: &[(i64, &str)]) -> Result<Element> {
        terms.iter().try_fold(Element::zero(), |acc, &(c, l)| Ok(acc.add_scaled(&rat(c), &self.root_element(l)?)))
    }
}

fn unipotent(ctx: &AlgebraContext, label: &str) -> Result<DeformationStep> {
    Ok(DeformationStep::unipotent(&ctx.model, ctx.root_element(label)?))
}

fn toric(ctx: &AlgebraContext, entries: &[(usize, i64)]) -> DeformationStep {
    let mut m = vec![0; ctx.rank()];
    for &(i, c) in entries {
        m[i - 1] = c;
    }
    DeformationStep::toric(m)
}

/// The steps of the `K` construction with their intermediate targets.
fn k_prefix(ctx: &AlgebraContext) -> Result<Vec<ChainStep>> {
    let targets: Vec<Subspace> = match ctx.tag() {
        TypeTag::G2 | TypeTag::F4 => return Ok(vec![]),
        TypeTag::E6 => vec![ctx.k.subspace.clone()],
        TypeTag::E7 => vec![
            ctx.build_span(&span(&["134321/2", "234321/2"], &[5, 7, 9, 11, 13], &[]))?,
            ctx.build_span(&span(&["124321/2", "134321/2", "234321/2"], &[7, 9, 11, 13], &[]))?,
            ctx.build_span(&span(&["123321/2", "124321/2", "134321/2", "234321/2"], &[9, 11, 13], &[]))?,
            ctx.build_span(&span(&["123321/2", "124321/2", "134321/2", "234321/2"], &[11, 13], &[12]))?,
        ],
        TypeTag::E8 => {
            let top = ["2465432/3", "2465431/3", "2465421/3", "2465321/3", "2464321/3", "2454321/3"];
            vec![
                ctx.build_span(&span(&top[..2], &[7, 11, 13, 17, 19, 23], &[]))?,
                ctx.build_span(&span(&top[..3], &[11, 13, 17, 19, 23], &[]))?,
                ctx.build_span(&span(&top[..4], &[13, 17, 19, 23], &[]))?,
                ctx.build_span(&span(&top[..5], &[17, 19, 23], &[]))?,
                ctx.build_span(&span(&top[..6], &[19, 23], &[]))?,
                ctx.build_span(&span(&top[..6], &[23], &[22]))?,
            ]
        }
        t => return Err(Error::Unsupported(format!("{t} is not exceptional"))),
    };
    if targets.len() != ctx.k.steps.len() {
        return Err(Error::Consistency("K construction and targets disagree in length".into()));
    }
    Ok(ctx
        .k
        .steps
        .iter()
        .zip(targets)
        .map(|(s, target)| ChainStep { step: DeformationStep::unipotent(&ctx.model, s.raw.clone()), target })
        .collect())
}

fn has(ctx: &AlgebraContext, ideal: &AbelianIdeal, label: &str) -> Result<bool> {
    Ok(ideal.contains(ctx.model.sys().parse_label(label)?))
}

/// Steps after `K` for one ideal.
fn finish(ctx: &AlgebraContext, ideal: &AbelianIdeal) -> Result<Vec<ChainStep>> {
    let end = ideal.subspace(&ctx.model);
    let last = |step: DeformationStep| ChainStep { step, target: end.clone() };
    Ok(match ctx.tag() {
        TypeTag::G2 => vec![last(unipotent(ctx, "21")?)],
        TypeTag::F4 => {
            let f5 = ctx.combination(&[(2, "0122"), (-1, "1121"), (1, "1220")])?;
            let f7 = ctx.combination(&[(1, "1222"), (-1, "1231")])?;
            let roots = |ls: &[&str]| -> Result<Vec<Element>> { ls.iter().map(|l| ctx.root_element(l)).collect() };
            let a1 = [vec![f5, f7.clone()], roots(&["1342", "2342"])?].concat();
            let a2 = [vec![f7], roots(&["1242", "1342", "2342"])?].concat();
            vec![
                ChainStep { step: unipotent(ctx, "1242")?, target: Subspace::from_elements(&ctx.model, &a1) },
                ChainStep { step: unipotent(ctx, "0121")?, target: Subspace::from_elements(&ctx.model, &a2) },
                last(unipotent(ctx, "0001")?),
            ]
        }
        TypeTag::E6 => {
            let common = ["12321/2", "12321/1", "12221/1", "11221/1", "12211/1"];
            let mid = ChainStep { step: unipotent(ctx, "00110/0")?, target: ctx.build_span(&span(&common, &[7], &[]))? };
            let m = if has(ctx, ideal, "01221/1")? {
                toric(ctx, &[(1, 1)])
            } else if has(ctx, ideal, "11211/1")? {
                toric(ctx, &[(1, -1), (6, -1)])
            } else {
                toric(ctx, &[(6, 1)])
            };
            vec![mid, last(m)]
        }
        TypeTag::E7 => {
            let high = ["234321/2", "134321/2", "124321/2", "123321/2", "123321/1", "123221/2"];
            let k_prime = || -> Result<ChainStep> {
                Ok(ChainStep { step: unipotent(ctx, "000011/0")?, target: ctx.build_span(&span(&high, &[], &[12]))? })
            };
            if has(ctx, ideal, "123210/2")? {
                vec![last(toric(ctx, &[(2, -1)]))]
            } else if has(ctx, ideal, "123211/2")? {
                vec![k_prime()?, last(toric(ctx, &[(2, -1)]))]
            } else {
                vec![k_prime()?, last(toric(ctx, &[(2, 1)]))]
            }
        }
        TypeTag::E8 => {
            if has(ctx, ideal, "1354321/3")? {
                vec![last(toric(ctx, &[(2, -1)]))]
            } else {
                vec![last(unipotent(ctx, "0100000/0")?)]
            }
        }
        t => return Err(Error::Unsupported(format!("{t} is not exceptional"))),
    })
}

pub fn chain(ctx: &AlgebraContext, ideal: &AbelianIdeal) -> Result<Chain> {
    let mut steps = k_prefix(ctx)?;
    steps.extend(finish(ctx, ideal)?);
    Ok(Chain { start: ctx.jordan.centralizer.clone(), steps })
}

/// The bases of `J` in the closed forms listed for F4, E6, E7, E8, as
/// `(height, terms)`.
pub fn stated_j_basis(tag: TypeTag) -> Vec<(i64, Vec<(i64, &'static str)>)> {
    match tag {
        TypeTag::F4 => vec![
            (5, vec![(2, "0122"), (-1, "1121"), (1, "1220")]),
            (7, vec![(1, "1222"), (-1, "1231")]),
            (11, vec![(1, "2342")]),
        ],
        TypeTag::E6 => vec![
            (4, vec![(1, "01111/0"), (-1, "00111/1"), (-1, "11110/0"), (1, "11100/1")]),
            (5, vec![(1, "01111/1"), (-1, "01210/1"), (1, "11110/1"), (-2, "11111/0")]),
            (7, vec![(1, "01221/1"), (-1, "11211/1"), (1, "12210/1")]),
            (8, vec![(1, "11221/1"), (-1, "12211/1")]),
            (11, vec![(1, "12321/2")]),
        ],
        TypeTag::E7 => vec![
            (
                5,
                vec![(1, "012100/1"), (-1, "111100/1"), (-1, "011110/1"), (2, "111110/0"), (-2, "011111/0"), (3, "001111/1")],
            ),
            (7, vec![(1, "122100/1"), (-1, "112110/1"), (1, "012210/1"), (-1, "012111/1"), (2, "111111/1")]),
            (9, vec![(1, "122111/1"), (-1, "112211/1"), (1, "012221/1")]),
            (11, vec![(1, "123210/2"), (-1, "123211/1"), (1, "122221/1")]),
            (13, vec![(1, "123221/2"), (-1, "123321/1")]),
            (17, vec![(1, "234321/2")]),
        ],
        TypeTag::E8 => vec![
            (
                7,
                vec![
                    (1, "1221000/1"),
                    (-1, "1121100/1"),
                    (1, "0122100/1"),
                    (-1, "0121110/1"),
                    (2, "1111110/1"),
                    (-2, "1111111/0"),
                    (1, "0111111/1"),
                ],
            ),
            (
                11,
                vec![
                    (1, "1232100/2"),
                    (-1, "1232110/1"),
                    (1, "1222210/1"),
                    (1, "1222111/1"),
                    (-2, "1122211/1"),
                    (2, "0122221/1"),
                ],
            ),
            (
                13,
                vec![(1, "1222221/1"), (-1, "1232211/1"), (1, "1233210/1"), (-1, "1232210/2"), (2, "1232111/2")],
            ),
            (17, vec![(1, "2343210/2"), (-1, "1343211/2"), (1, "1243221/2"), (-1, "1233321/2")]),
            (19, vec![(1, "2343221/2"), (-1, "1343321/2"), (1, "1244321/2")]),
            (23, vec![(1, "2454321/2"), (-1, "2354321/3")]),
            (29, vec![(1, "2465432/3")]),
        ],
        _ => vec![],
    }
}
