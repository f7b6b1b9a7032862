//! Dense-tableau two-phase primal simplex over exact rationals with Bland's
//! rule. Free variables are pivoted into the basis up front and their rows
//! are then ignored by the ratio test.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

impl Relation {
    pub fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
            Relation::Ge => lhs >= rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LpRow {
    pub coeffs: Vec<(usize, Rational)>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl LpRow {
    pub fn new(coeffs: Vec<(usize, Rational)>, relation: Relation, rhs: impl Into<Rational>) -> Self {
        LpRow { coeffs, relation, rhs: rhs.into() }
    }

    pub fn lhs(&self, x: &[Rational]) -> Rational {
        self.coeffs.iter().map(|(j, a)| a * &x[*j]).sum()
    }

    pub fn is_satisfied(&self, x: &[Rational]) -> bool {
        self.relation.holds(&self.lhs(x), &self.rhs)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    pub lo: Option<Rational>,
    pub hi: Option<Rational>,
}

impl Bound {
    pub fn free() -> Self {
        Bound::default()
    }

    pub fn between(lo: impl Into<Rational>, hi: impl Into<Rational>) -> Self {
        Bound { lo: Some(lo.into()), hi: Some(hi.into()) }
    }

    pub fn nonneg() -> Self {
        Bound { lo: Some(Rational::zero()), hi: None }
    }

    fn contains(&self, x: &Rational) -> bool {
        self.lo.as_ref().is_none_or(|lo| lo <= x) && self.hi.as_ref().is_none_or(|hi| x <= hi)
    }
}

/// `max c·x` subject to `rows` and `bounds`; an empty `bounds` means every
/// variable is free.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearProgram {
    pub num_vars: usize,
    pub rows: Vec<LpRow>,
    pub bounds: Vec<Bound>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LpOutcome {
    pub status: LpStatus,
    pub value: Option<Rational>,
    pub witness: Option<Vec<Rational>>,
}

impl LpOutcome {
    fn without_point(status: LpStatus) -> Self {
        LpOutcome { status, value: None, witness: None }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LpError {
    #[error("variable index {index} out of range for {num_vars} variables")]
    DimensionMismatch { index: usize, num_vars: usize },
    #[error("{given} bounds given for {num_vars} variables")]
    BoundsMismatch { given: usize, num_vars: usize },
    #[error("objective has {given} entries for {num_vars} variables")]
    ObjectiveMismatch { given: usize, num_vars: usize },
    #[error("empty bound interval for variable {0}")]
    EmptyBound(usize),
    #[error("internal error: witness fails {0}")]
    WitnessCheck(String),
}

/// One-shot solve.
pub fn simplex_max(lp: &LinearProgram, objective: &[Rational]) -> Result<LpOutcome, LpError> {
    match LpSession::new(lp)? {
        Some(mut session) => session.maximize(objective),
        None => Ok(LpOutcome::without_point(LpStatus::Infeasible)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ColKind {
    Free,
    NonNeg,
    Artificial,
}

/// `x_j = offset + sign * y_col`.
#[derive(Clone, Debug)]
struct Transform {
    col: usize,
    offset: Rational,
    negate: bool,
}

/// A feasible tableau that can be re-optimized for many objectives; each
/// solve warm-starts from the previous optimal basis.
#[derive(Clone, Debug)]
pub struct LpSession {
    lp: LinearProgram,
    transforms: Vec<Transform>,
    kinds: Vec<ColKind>,
    tableau: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    /// Rows whose basic variable is free; excluded from ratio tests.
    free_row: Vec<bool>,
    pivots: usize,
}

impl LpSession {
    /// Runs phase 1. `Ok(None)` means the system is infeasible.
    pub fn new(lp: &LinearProgram) -> Result<Option<Self>, LpError> {
        validate(lp)?;
        let n = lp.num_vars;
        let mut kinds = Vec::new();
        let mut transforms = Vec::with_capacity(n);
        let mut extra_rows = Vec::new();
        for j in 0..n {
            let bound = lp.bounds.get(j).cloned().unwrap_or_default();
            let col = kinds.len();
            match (bound.lo, bound.hi) {
                (None, None) => {
                    kinds.push(ColKind::Free);
                    transforms.push(Transform { col, offset: Rational::zero(), negate: false });
                }
                (Some(lo), hi) => {
                    kinds.push(ColKind::NonNeg);
                    if let Some(hi) = hi {
                        if hi < lo {
                            return Err(LpError::EmptyBound(j));
                        }
                        extra_rows.push((col, &hi - &lo));
                    }
                    transforms.push(Transform { col, offset: lo, negate: false });
                }
                (None, Some(hi)) => {
                    kinds.push(ColKind::NonNeg);
                    transforms.push(Transform { col, offset: hi, negate: true });
                }
            }
        }

        // rows over internal columns, before slacks
        let mut internal: Vec<(Vec<(usize, Rational)>, Relation, Rational)> = Vec::new();
        for row in &lp.rows {
            let mut coeffs: Vec<(usize, Rational)> = Vec::new();
            let mut rhs = row.rhs.clone();
            for (j, a) in &row.coeffs {
                let t = &transforms[*j];
                rhs = &rhs - &(a * &t.offset);
                let a = if t.negate { -a } else { a.clone() };
                match coeffs.iter_mut().find(|(c, _)| *c == t.col) {
                    Some((_, existing)) => *existing = &*existing + &a,
                    None => coeffs.push((t.col, a)),
                }
            }
            coeffs.retain(|(_, a)| !a.is_zero());
            if coeffs.is_empty() {
                if !row.relation.holds(&Rational::zero(), &rhs) {
                    return Ok(None);
                }
                continue;
            }
            internal.push((coeffs, row.relation, rhs));
        }
        for (col, width) in extra_rows {
            internal.push((vec![(col, Rational::one())], Relation::Le, width));
        }

        let m = internal.len();
        let slack_count = internal.iter().filter(|r| r.1 != Relation::Eq).count();
        let base_cols = kinds.len();
        kinds.extend(std::iter::repeat_n(ColKind::NonNeg, slack_count));
        let mut tableau = vec![vec![Rational::zero(); kinds.len()]; m];
        let mut rhs = Vec::with_capacity(m);
        let mut slack = base_cols;
        for (i, (coeffs, rel, b)) in internal.into_iter().enumerate() {
            for (c, a) in coeffs {
                tableau[i][c] = a;
            }
            match rel {
                Relation::Le => {
                    tableau[i][slack] = Rational::one();
                    slack += 1;
                }
                Relation::Ge => {
                    tableau[i][slack] = -Rational::one();
                    slack += 1;
                }
                Relation::Eq => {}
            }
            rhs.push(b);
        }

        let mut s = LpSession {
            lp: lp.clone(),
            transforms,
            kinds,
            tableau,
            rhs,
            basis: vec![usize::MAX; m],
            free_row: vec![false; m],
            pivots: 0,
        };
        if !s.phase_one() {
            return Ok(None);
        }
        Ok(Some(s))
    }

    pub fn num_pivots(&self) -> usize {
        self.pivots
    }

    fn phase_one(&mut self) -> bool {
        let m = self.rhs.len();
        // free columns into the basis
        for col in 0..self.kinds.len() {
            if self.kinds[col] != ColKind::Free {
                continue;
            }
            if let Some(r) = (0..m).find(|&r| self.basis[r] == usize::MAX && !self.tableau[r][col].is_zero()) {
                self.pivot(r, col, None);
                self.free_row[r] = true;
            }
        }
        for r in 0..m {
            if !self.free_row[r] && self.rhs[r].is_negative() {
                for a in self.tableau[r].iter_mut() {
                    *a = -&*a;
                }
                self.rhs[r] = -&self.rhs[r];
            }
        }
        // unit columns give a starting basis; artificials fill the rest
        for r in 0..m {
            if self.free_row[r] {
                continue;
            }
            let unit = (0..self.kinds.len()).find(|&c| {
                self.kinds[c] == ColKind::NonNeg
                    && !self.basis.contains(&c)
                    && self.tableau[r][c] == Rational::one()
                    && (0..m).all(|i| i == r || self.tableau[i][c].is_zero())
            });
            let col = match unit {
                Some(c) => c,
                None => {
                    let c = self.kinds.len();
                    self.kinds.push(ColKind::Artificial);
                    for (i, row) in self.tableau.iter_mut().enumerate() {
                        row.push(if i == r { Rational::one() } else { Rational::zero() });
                    }
                    c
                }
            };
            self.basis[r] = col;
        }
        let costs: Vec<Rational> = self
            .kinds
            .iter()
            .map(|k| if *k == ColKind::Artificial { -Rational::one() } else { Rational::zero() })
            .collect();
        let mut reduced = self.reduced_costs(&costs);
        let optimal = self.iterate(&mut reduced, true);
        debug_assert!(optimal, "phase 1 is bounded");
        let infeasibility: Rational =
            (0..m).filter(|&r| self.kinds[self.basis[r]] == ColKind::Artificial).map(|r| self.rhs[r].clone()).sum();
        if !infeasibility.is_zero() {
            return false;
        }
        // drive zero-level artificials out; rows with nothing to pivot on are redundant
        let mut r = 0;
        while r < self.rhs.len() {
            if self.kinds[self.basis[r]] == ColKind::Artificial {
                let replacement = (0..self.kinds.len()).find(|&c| {
                    self.kinds[c] == ColKind::NonNeg && !self.tableau[r][c].is_zero() && !self.basis.contains(&c)
                });
                match replacement {
                    Some(c) => self.pivot(r, c, None),
                    None => {
                        self.tableau.remove(r);
                        self.rhs.remove(r);
                        self.basis.remove(r);
                        self.free_row.remove(r);
                        continue;
                    }
                }
            }
            r += 1;
        }
        // artificial columns are dead from here on
        let keep: Vec<usize> = (0..self.kinds.len()).filter(|&c| self.kinds[c] != ColKind::Artificial).collect();
        if keep.len() < self.kinds.len() {
            let mut remap = vec![usize::MAX; self.kinds.len()];
            for (new, &old) in keep.iter().enumerate() {
                remap[old] = new;
            }
            for row in &mut self.tableau {
                *row = keep.iter().map(|&c| row[c].clone()).collect();
            }
            self.kinds = keep.iter().map(|&c| self.kinds[c]).collect();
            for b in &mut self.basis {
                *b = remap[*b];
            }
        }
        true
    }

    fn reduced_costs(&self, costs: &[Rational]) -> Vec<Rational> {
        let mut d = costs.to_vec();
        for (r, row) in self.tableau.iter().enumerate() {
            let cb = &costs[self.basis[r]];
            if cb.is_zero() {
                continue;
            }
            for (c, a) in row.iter().enumerate() {
                if !a.is_zero() {
                    d[c] = &d[c] - &(cb * a);
                }
            }
        }
        d
    }

    /// Bland's rule iterations; `false` on unboundedness.
    fn iterate(&mut self, reduced: &mut Vec<Rational>, allow_artificial: bool) -> bool {
        loop {
            let entering = (0..self.kinds.len()).find(|&c| {
                let k = self.kinds[c];
                (k == ColKind::NonNeg || (allow_artificial && k == ColKind::Artificial)) && reduced[c].is_positive()
            });
            let Some(col) = entering else { return true };
            let mut best: Option<(usize, Rational)> = None;
            for r in 0..self.rhs.len() {
                if self.free_row[r] || !self.tableau[r][col].is_positive() {
                    continue;
                }
                let ratio = &self.rhs[r] / &self.tableau[r][col];
                let better = match &best {
                    None => true,
                    Some((br, bv)) => ratio < *bv || (ratio == *bv && self.basis[r] < self.basis[*br]),
                };
                if better {
                    best = Some((r, ratio));
                }
            }
            let Some((row, _)) = best else { return false };
            self.pivot(row, col, Some(reduced));
        }
    }

    fn pivot(&mut self, row: usize, col: usize, reduced: Option<&mut Vec<Rational>>) {
        self.pivots += 1;
        let p = self.tableau[row][col].clone();
        if p != Rational::one() {
            for a in self.tableau[row].iter_mut() {
                if !a.is_zero() {
                    *a = &*a / &p;
                }
            }
            self.rhs[row] = &self.rhs[row] / &p;
        }
        let support: Vec<usize> = (0..self.tableau[row].len()).filter(|&c| !self.tableau[row][c].is_zero()).collect();
        let pivot_row = self.tableau[row].clone();
        let pivot_rhs = self.rhs[row].clone();
        for r in 0..self.tableau.len() {
            if r == row || self.tableau[r][col].is_zero() {
                continue;
            }
            let f = self.tableau[r][col].clone();
            for &c in &support {
                self.tableau[r][c] = &self.tableau[r][c] - &(&f * &pivot_row[c]);
            }
            if !pivot_rhs.is_zero() {
                self.rhs[r] = &self.rhs[r] - &(&f * &pivot_rhs);
            }
        }
        if let Some(d) = reduced {
            let f = d[col].clone();
            if !f.is_zero() {
                for &c in &support {
                    d[c] = &d[c] - &(&f * &pivot_row[c]);
                }
            }
        }
        self.basis[row] = col;
    }

    /// Maximizes `objective · x`, starting from the current basis.
    pub fn maximize(&mut self, objective: &[Rational]) -> Result<LpOutcome, LpError> {
        if objective.len() != self.lp.num_vars {
            return Err(LpError::ObjectiveMismatch { given: objective.len(), num_vars: self.lp.num_vars });
        }
        let mut costs = vec![Rational::zero(); self.kinds.len()];
        for (j, c) in objective.iter().enumerate() {
            let t = &self.transforms[j];
            costs[t.col] = if t.negate { -c } else { c.clone() };
        }
        let mut reduced = self.reduced_costs(&costs);
        let basic: Vec<bool> = {
            let mut b = vec![false; self.kinds.len()];
            for &c in &self.basis {
                b[c] = true;
            }
            b
        };
        // a nonbasic free column only touches free rows: any drift is unbounded
        if (0..self.kinds.len()).any(|c| self.kinds[c] == ColKind::Free && !basic[c] && !reduced[c].is_zero()) {
            return Ok(LpOutcome::without_point(LpStatus::Unbounded));
        }
        if !self.iterate(&mut reduced, false) {
            return Ok(LpOutcome::without_point(LpStatus::Unbounded));
        }
        let witness = self.current_point();
        let value: Rational = objective.iter().zip(&witness).map(|(c, x)| c * x).sum();
        self.check_witness(&witness)?;
        Ok(LpOutcome { status: LpStatus::Optimal, value: Some(value), witness: Some(witness) })
    }

    fn current_point(&self) -> Vec<Rational> {
        let mut y = vec![Rational::zero(); self.kinds.len()];
        for (r, &c) in self.basis.iter().enumerate() {
            y[c] = self.rhs[r].clone();
        }
        self.transforms.iter().map(|t| if t.negate { &t.offset - &y[t.col] } else { &t.offset + &y[t.col] }).collect()
    }

    fn check_witness(&self, x: &[Rational]) -> Result<(), LpError> {
        for (i, row) in self.lp.rows.iter().enumerate() {
            if !row.is_satisfied(x) {
                return Err(LpError::WitnessCheck(format!("row {i}")));
            }
        }
        for (j, b) in self.lp.bounds.iter().enumerate() {
            if !b.contains(&x[j]) {
                return Err(LpError::WitnessCheck(format!("bounds of variable {j}")));
            }
        }
        Ok(())
    }
}

fn validate(lp: &LinearProgram) -> Result<(), LpError> {
    if !lp.bounds.is_empty() && lp.bounds.len() != lp.num_vars {
        return Err(LpError::BoundsMismatch { given: lp.bounds.len(), num_vars: lp.num_vars });
    }
    for row in &lp.rows {
        if let Some((index, _)) = row.coeffs.iter().find(|(j, _)| *j >= lp.num_vars) {
            return Err(LpError::DimensionMismatch { index: *index, num_vars: lp.num_vars });
        }
    }
    Ok(())
}
