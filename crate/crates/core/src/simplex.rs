//! Dense primal simplex over exact rationals.
//!
//! Solves `max cᵀx` subject to `Ax ≤ b`, `x ≥ 0` with `b ≥ 0`, starting from
//! the slack basis. Pivoting follows Bland's rule (least improving column,
//! least basic index on ratio ties), so the method terminates without
//! cycling. Shadow prices of the rows are returned as the dual solution.

use num_traits::{Signed, Zero};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub value: Rational,
    /// Optimal `x`.
    pub primal: Vec<Rational>,
    /// Row prices `y ≥ 0` with `Aᵀy ≥ c` and `bᵀy = value`.
    pub dual: Vec<Rational>,
    pub pivots: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal(LpSolution),
    Unbounded,
}

pub fn maximize(
    objective: &[Rational],
    rows: &[Vec<Rational>],
    rhs: &[Rational],
    budget: &mut Budget,
) -> Result<LpOutcome> {
    let n = objective.len();
    let m = rows.len();
    if rhs.len() != m || rows.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidArgument("inconsistent LP dimensions".into()));
    }
    if rhs.iter().any(|b| b.is_negative()) {
        return Err(Error::InvalidArgument(
            "right-hand sides must be non-negative".into(),
        ));
    }
    let width = n + m;
    // tableau[i] = [row coefficients | slack identity], value column separate
    let mut tableau: Vec<Vec<Rational>> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut t = row.clone();
            t.resize(width, Rational::zero());
            t[n + i] = Rational::from_integer(1.into());
            t
        })
        .collect();
    let mut values: Vec<Rational> = rhs.to_vec();
    let mut reduced: Vec<Rational> = objective.to_vec();
    reduced.resize(width, Rational::zero());
    let mut basis: Vec<usize> = (n..width).collect();
    let mut pivots = 0;

    loop {
        budget.charge((m * width) as u64 + 1)?;
        let Some(enter) = (0..width).find(|&j| reduced[j].is_positive()) else {
            break;
        };
        let mut leave: Option<usize> = None;
        for i in 0..m {
            let a = &tableau[i][enter];
            if !a.is_positive() {
                continue;
            }
            let better = match leave {
                None => true,
                Some(l) => {
                    let lhs = &values[i] * &tableau[l][enter];
                    let rhs = &values[l] * a;
                    lhs < rhs || (lhs == rhs && basis[i] < basis[l])
                }
            };
            if better {
                leave = Some(i);
            }
        }
        let Some(row) = leave else {
            return Ok(LpOutcome::Unbounded);
        };
        pivot(&mut tableau, &mut values, &mut reduced, row, enter);
        basis[row] = enter;
        pivots += 1;
    }

    let mut primal = vec![Rational::zero(); n];
    for (i, &var) in basis.iter().enumerate() {
        if var < n {
            primal[var] = values[i].clone();
        }
    }
    let dual: Vec<Rational> = (0..m).map(|i| -reduced[n + i].clone()).collect();
    let value = primal
        .iter()
        .zip(objective)
        .fold(Rational::zero(), |acc, (x, c)| acc + x * c);
    Ok(LpOutcome::Optimal(LpSolution {
        value,
        primal,
        dual,
        pivots,
    }))
}

fn pivot(
    tableau: &mut [Vec<Rational>],
    values: &mut [Rational],
    reduced: &mut [Rational],
    row: usize,
    col: usize,
) {
    let p = tableau[row][col].clone();
    for a in tableau[row].iter_mut() {
        *a = &*a / &p;
    }
    values[row] = &values[row] / &p;
    let pivot_row = tableau[row].clone();
    let pivot_value = values[row].clone();
    for (i, r) in tableau.iter_mut().enumerate() {
        if i == row || r[col].is_zero() {
            continue;
        }
        let factor = r[col].clone();
        for (a, b) in r.iter_mut().zip(&pivot_row) {
            if !b.is_zero() {
                *a -= &factor * b;
            }
        }
        values[i] -= &factor * &pivot_value;
    }
    let factor = reduced[col].clone();
    if !factor.is_zero() {
        for (a, b) in reduced.iter_mut().zip(&pivot_row) {
            if !b.is_zero() {
                *a -= &factor * b;
            }
        }
    }
}
