//! First, second and variable Zagreb indices, and the exact verdict on
//! `M1/n <= M2/m`.

use serde::Serialize;
use thiserror::Error;

use crate::exact::{self, Overflow};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("graph has no vertices or no edges; the index ratios are undefined")]
    EmptyGraph,
    #[error("vertex {0} is isolated and lambda is negative")]
    IsolatedVertexWithNegativeLambda(usize),
    #[error(transparent)]
    Overflow(#[from] Overflow),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// `M1/n < M2/m`.
    HoldsStrict,
    HoldsWithEquality,
    /// `M1/n > M2/m`: the graph is a counterexample.
    Fails,
}

impl Verdict {
    pub fn from_comparison(c: i128) -> Self {
        match c.signum() {
            1 => Verdict::HoldsStrict,
            0 => Verdict::HoldsWithEquality,
            _ => Verdict::Fails,
        }
    }

    pub fn holds(self) -> bool {
        self != Verdict::Fails
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    pub n: usize,
    pub m: usize,
    pub m1: u128,
    pub m2: u128,
    /// `m2 * n - m1 * m`.
    pub comparison: i128,
    pub verdict: Verdict,
}

/// `M1 = Σ d_i²`.
pub fn first_zagreb(g: &Graph) -> u128 {
    g.degrees().iter().map(|&d| (d as u128) * (d as u128)).sum()
}

/// `M2 = Σ_{ij ∈ E} d_i d_j`.
pub fn second_zagreb(g: &Graph) -> u128 {
    let d = g.degrees();
    g.edges()
        .iter()
        .map(|&(u, v)| (d[u] as u128) * (d[v] as u128))
        .sum()
}

/// Decides the conjecture by the sign of `M2·n − M1·m`.
pub fn compare_indices(g: &Graph) -> Result<IndexReport, IndexError> {
    let (n, m) = (g.order(), g.size());
    if n == 0 || m == 0 {
        return Err(IndexError::EmptyGraph);
    }
    let m1 = first_zagreb(g);
    let m2 = second_zagreb(g);
    let to_i = |x: u128| i128::try_from(x).map_err(|_| Overflow);
    let comparison = exact::sub(
        exact::mul(to_i(m2)?, exact::int(n))?,
        exact::mul(to_i(m1)?, exact::int(m))?,
    )?;
    Ok(IndexReport {
        n,
        m,
        m1,
        m2,
        comparison,
        verdict: Verdict::from_comparison(comparison),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VariableIndexValue {
    pub lambda: f64,
    pub value: f64,
}

fn check_isolated(g: &Graph, lambda: f64) -> Result<(), IndexError> {
    if lambda < 0.0 {
        if let Some(v) = g.degrees().iter().position(|&d| d == 0) {
            return Err(IndexError::IsolatedVertexWithNegativeLambda(v));
        }
    }
    Ok(())
}

/// `Σ d_i^{2λ}`. With `λ = 0` every vertex contributes 1, isolated ones
/// included.
pub fn variable_first_zagreb(g: &Graph, lambda: f64) -> Result<VariableIndexValue, IndexError> {
    check_isolated(g, lambda)?;
    let value = g
        .degrees()
        .iter()
        .map(|&d| (d as f64).powf(2.0 * lambda))
        .sum();
    Ok(VariableIndexValue { lambda, value })
}

/// `Σ_{ij ∈ E} (d_i d_j)^λ`.
pub fn variable_second_zagreb(
    g: &Graph,
    lambda: f64,
) -> Result<VariableIndexValue, IndexError> {
    check_isolated(g, lambda)?;
    let d = g.degrees();
    let value = g
        .edges()
        .iter()
        .map(|&(u, v)| ((d[u] * d[v]) as f64).powf(lambda))
        .sum();
    Ok(VariableIndexValue { lambda, value })
}
