//! Integer solutions of the inequality system `(IE_μ)` and the diagonal
//! weight `w` they induce.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideals::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IeSolution {
    pub mu: Partition,
    /// `z_1..z_n`, every entry divisible by `n+1`.
    pub z: Vec<i64>,
    /// `w_1..w_{n+1}`.
    pub w: Vec<i64>,
}

/// One-based `i(h)` for `1 ≤ h ≤ n`.
pub fn i_of_h(mu: &Partition, h: usize) -> usize {
    let p = mu.parts();
    let mut tail: usize = p.iter().sum();
    for &part in p {
        tail -= part;
        if tail < h && h <= tail + part {
            return p[0] + 1 - (h - tail);
        }
    }
    unreachable!("h out of range")
}

/// `z_j(h) = z_j + … + z_{j+h−1}` with one-based `j`.
pub fn window_sum(z: &[i64], j: usize, h: usize) -> i64 {
    z[j - 1..j - 1 + h].iter().sum()
}

/// A violated constraint of `(IE_μ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Window { h: usize, j: usize },
    Positivity(usize),
    Zero,
    Length,
}

/// Evaluates every inequality of `(IE_μ)` directly.
pub fn brute_check(mu: &Partition, z: &[i64]) -> std::result::Result<(), Violation> {
    let n = mu.size();
    if z.len() != n {
        return Err(Violation::Length);
    }
    let m1 = mu.parts()[0];
    if z[m1 - 1] != 0 {
        return Err(Violation::Zero);
    }
    if let Some(i) = (1..=n).find(|&i| i != m1 && z[i - 1] <= 0) {
        return Err(Violation::Positivity(i));
    }
    for h in 1..=n {
        let ih = i_of_h(mu, h);
        let base = window_sum(z, ih, h);
        for j in 1..=n + 1 - h {
            if j != ih && window_sum(z, j, h) <= base {
                return Err(Violation::Window { h, j });
            }
        }
    }
    Ok(())
}

fn raw_solution(mu: &Partition) -> Vec<i64> {
    let p = mu.parts();
    let n = mu.size();
    if p.len() == 1 {
        let mut z = vec![1; n];
        z[n - 1] = 0;
        return z;
    }
    if p.len() == 2 && p[0] == p[1] {
        let m = p[0];
        if m == 1 {
            return vec![0, 1];
        }
        let mut z = vec![2; n];
        z[m - 1] = 0;
        z[m] = 3;
        z[n - 1] = 1;
        return z;
    }
    if p[1] < p[0] {
        let mut smaller = p.to_vec();
        smaller[0] -= 1;
        let sub = raw_solution(&Partition(smaller));
        // Strictly above every window of `z′`.
        let mut z = vec![sub.iter().sum::<i64>() + 1];
        z.extend(sub);
        return z;
    }
    let m = p[0];
    let tail = Partition(p[1..].to_vec());
    let mut sub = raw_solution(&tail);
    let split = n + 1 < 3 * m;
    if split {
        sub.iter_mut().for_each(|x| *x *= 2);
    }
    let total: i64 = sub.iter().sum();
    let mut z = Vec::with_capacity(n);
    for i in 1..=n {
        z.push(if i <= n - m {
            sub[i - 1]
        } else if i == n + 1 - m {
            total
        } else if split && i == 2 * m {
            1
        } else {
            sub[i - m - 1]
        });
    }
    z
}

/// `w_j = (Σ_{k≥j} (n+1−k) z_k − Σ_{k<j} k z_k) / (n+1)`.
pub fn weights_from_z(z: &[i64]) -> Result<Vec<i64>> {
    let n = z.len() as i64;
    (1..=n + 1)
        .map(|j| {
            let num: i64 = (1..=n)
                .map(|k| if k >= j { (n + 1 - k) * z[k as usize - 1] } else { -k * z[k as usize - 1] })
                .sum();
            if num % (n + 1) != 0 {
                return Err(Error::Inequality(format!("w_{j} is not an integer")));
            }
            Ok(num / (n + 1))
        })
        .collect()
}

/// Solves `(IE_μ)`, scales into `(n+1)ℤ`, and derives `w`; all invariants
/// are re-checked before returning.
pub fn solve_ie(mu: &Partition) -> Result<IeSolution> {
    let n = mu.size();
    let z: Vec<i64> = raw_solution(mu).into_iter().map(|x| x * (n as i64 + 1)).collect();
    brute_check(mu, &z).map_err(|v| Error::Inequality(format!("{mu}: {v:?}")))?;
    let w = weights_from_z(&z)?;
    if w.iter().sum::<i64>() != 0 {
        return Err(Error::Inequality(format!("{mu}: Σw ≠ 0")));
    }
    for h in 1..=n {
        for j in 1..=n + 1 - h {
            if w[j - 1] - w[j + h - 1] != window_sum(&z, j, h) {
                return Err(Error::Inequality(format!("{mu}: w_{j} − w_{} ≠ z_{j}({h})", j + h)));
            }
        }
    }
    Ok(IeSolution { mu: mu.clone(), z, w })
}
