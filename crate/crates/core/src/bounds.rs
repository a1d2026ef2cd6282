//! Lower and upper bounds on `M1/n` and `M2/m`, each paired with the
//! structural condition under which it is attained.
//!
//! Every check is stated in the direction `lhs <= rhs`. Lower bounds put the
//! bound on the left and the index on the right. λ-free checks are decided
//! with exact fractions; variable-λ checks use doubles with a relative
//! tolerance of [`REL_TOL`] and an absolute floor of [`ABS_TOL`].

use std::cmp::Ordering;

use serde::Serialize;
use thiserror::Error;

use crate::exact::{self, Fraction, Overflow};
use crate::families::subdivide;
use crate::graph::{classify, Graph, GraphClass};
use crate::indices::{
    compare_indices, first_zagreb, second_zagreb, variable_first_zagreb, variable_second_zagreb,
    IndexError, Verdict,
};

pub const REL_TOL: f64 = 1e-9;
pub const ABS_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundError {
    #[error("bound needs at least one vertex and one edge")]
    EmptyGraph,
    #[error("bound needs at least two vertices")]
    TooFewVertices,
    #[error("{bound:?} is not defined for lambda = {lambda}")]
    LambdaOutOfRange { bound: BoundName, lambda: f64 },
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error(transparent)]
    Overflow(#[from] Overflow),
}

impl From<IndexError> for BoundError {
    fn from(e: IndexError) -> Self {
        match e {
            IndexError::EmptyGraph => BoundError::EmptyGraph,
            IndexError::IsolatedVertexWithNegativeLambda(v) => BoundError::IsolatedVertex(v),
            IndexError::Overflow(o) => BoundError::Overflow(o),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundName {
    /// `4m²/n <= M1`
    M1Lower,
    /// `4m³/n² <= M2`
    M2Lower,
    /// `M1/n <= Δ·M1/2m`
    CommonUpperVertex,
    /// `M2/m <= Δ·M1/2m`
    CommonUpperEdge,
    /// `M1 <= m(2m/(n−1) + (n−2)Δ/(n−1) + (Δ−δ)(1 − Δ/(n−1)))`
    DasUpper,
    /// `n(2m/n)^{2λ} <= λM1`
    VariableM1Lower,
    /// `m(2m/n)^{2λ} <= λM2`
    VariableM2Lower,
    /// `λM1/n <= Δ·λM1/2m`
    VariableUpperVertex,
    /// `λM2/m <= Δ·λM1/2m`
    VariableUpperEdge,
    /// `M1(S)/(n+m) <= M2(S)/2m` on the subdivision `S` of `G`
    Subdivision,
}

impl BoundName {
    pub fn key(&self) -> &'static str {
        match self {
            BoundName::M1Lower => "m1_lower",
            BoundName::M2Lower => "m2_lower",
            BoundName::CommonUpperVertex => "common_upper_vertex",
            BoundName::CommonUpperEdge => "common_upper_edge",
            BoundName::DasUpper => "das_upper",
            BoundName::VariableM1Lower => "variable_m1_lower",
            BoundName::VariableM2Lower => "variable_m2_lower",
            BoundName::VariableUpperVertex => "variable_upper_vertex",
            BoundName::VariableUpperEdge => "variable_upper_edge",
            BoundName::Subdivision => "subdivision",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Quantity {
    Exact(Fraction),
    Real(f64),
}

impl Quantity {
    pub fn to_f64(self) -> f64 {
        match self {
            Quantity::Exact(f) => f.to_f64(),
            Quantity::Real(x) => x,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundCheck {
    pub name: BoundName,
    pub lambda: Option<f64>,
    pub lhs: Quantity,
    pub rhs: Quantity,
    pub satisfied: bool,
    pub tight: bool,
    pub equality_condition_met: bool,
}

impl BoundCheck {
    fn exact(
        name: BoundName,
        lhs: Fraction,
        rhs: Fraction,
        equality_condition_met: bool,
    ) -> Result<Self, Overflow> {
        let ord = lhs.try_cmp(&rhs)?;
        Ok(Self {
            name,
            lambda: None,
            lhs: Quantity::Exact(lhs),
            rhs: Quantity::Exact(rhs),
            satisfied: ord != Ordering::Greater,
            tight: ord == Ordering::Equal,
            equality_condition_met,
        })
    }

    fn approx(name: BoundName, lambda: f64, lhs: f64, rhs: f64, equality_condition_met: bool) -> Self {
        let tol = (REL_TOL * lhs.abs().max(rhs.abs())).max(ABS_TOL);
        Self {
            name,
            lambda: Some(lambda),
            lhs: Quantity::Real(lhs),
            rhs: Quantity::Real(rhs),
            satisfied: lhs <= rhs + tol,
            tight: (lhs - rhs).abs() <= tol,
            equality_condition_met,
        }
    }

    /// Tightness agrees with the structural equality condition.
    pub fn characterized(&self) -> bool {
        self.tight == self.equality_condition_met
    }
}

fn frac(num: i128, den: i128) -> Fraction {
    Fraction::new(num, den)
}

fn to_i(x: u128) -> Result<i128, Overflow> {
    i128::try_from(x).map_err(|_| Overflow)
}

/// `M1 >= 4m²/n`, tight exactly for regular graphs.
pub fn check_m1_lower(g: &Graph) -> Result<BoundCheck, BoundError> {
    let (n, m) = (exact::int(g.order()), exact::int(g.size()));
    if n == 0 {
        return Err(BoundError::EmptyGraph);
    }
    let lhs = frac(exact::mul(4, exact::mul(m, m)?)?, n);
    let rhs = Fraction::integer(to_i(first_zagreb(g))?);
    let regular = g.max_degree() == g.min_degree();
    Ok(BoundCheck::exact(BoundName::M1Lower, lhs, rhs, regular)?)
}

/// `M2 >= 4m³/n²`, tight exactly for regular graphs.
pub fn check_m2_lower(g: &Graph) -> Result<BoundCheck, BoundError> {
    let (n, m) = (exact::int(g.order()), exact::int(g.size()));
    if n == 0 {
        return Err(BoundError::EmptyGraph);
    }
    let lhs = frac(exact::mul(4, exact::mul(m, exact::mul(m, m)?)?)?, exact::mul(n, n)?);
    let rhs = Fraction::integer(to_i(second_zagreb(g))?);
    let regular = g.max_degree() == g.min_degree();
    Ok(BoundCheck::exact(BoundName::M2Lower, lhs, rhs, regular)?)
}

/// Both sides of the common upper bound `Δ·M1/2m`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CommonUpper {
    pub vertex_side: BoundCheck,
    pub edge_side: BoundCheck,
}

impl CommonUpper {
    /// Equality in both inequalities at once; happens exactly for regular
    /// graphs. The edge side alone can be tight on a disconnected graph whose
    /// components are regular of different degrees.
    pub fn jointly_tight(&self) -> bool {
        self.vertex_side.tight && self.edge_side.tight
    }

    pub fn satisfied(&self) -> bool {
        self.vertex_side.satisfied && self.edge_side.satisfied
    }
}

pub fn check_common_upper(g: &Graph) -> Result<CommonUpper, BoundError> {
    let (n, m) = (exact::int(g.order()), exact::int(g.size()));
    if n == 0 || m == 0 {
        return Err(BoundError::EmptyGraph);
    }
    let max_deg = exact::int(g.max_degree());
    let m1 = to_i(first_zagreb(g))?;
    let m2 = to_i(second_zagreb(g))?;
    let upper = frac(exact::mul(max_deg, m1)?, exact::mul(2, m)?);
    let regular = g.max_degree() == g.min_degree();
    Ok(CommonUpper {
        vertex_side: BoundCheck::exact(BoundName::CommonUpperVertex, frac(m1, n), upper, regular)?,
        edge_side: BoundCheck::exact(BoundName::CommonUpperEdge, frac(m2, m), upper, regular)?,
    })
}

/// One component is `K_{Δ+1}`, every other vertex is isolated.
pub fn is_complete_plus_isolated(g: &Graph) -> bool {
    let max_deg = g.max_degree();
    let (labels, count) = g.component_labels();
    let mut sizes = vec![0usize; count];
    for &c in &labels {
        sizes[c] += 1;
    }
    let nontrivial: Vec<usize> = (0..count).filter(|&c| sizes[c] > 1).collect();
    match nontrivial[..] {
        [] => false,
        [c] => {
            sizes[c] == max_deg + 1
                && labels
                    .iter()
                    .zip(g.degrees())
                    .all(|(&l, &d)| if l == c { d == max_deg } else { d == 0 })
        }
        _ => false,
    }
}

/// Das's upper bound on `M1` in terms of `n, m, Δ, δ`. Disconnected graphs
/// and `δ = 0` are allowed.
pub fn check_das_upper(g: &Graph) -> Result<BoundCheck, BoundError> {
    let n = g.order();
    if n < 2 {
        return Err(BoundError::TooFewVertices);
    }
    let class = classify(g);
    let (n, m) = (exact::int(n), exact::int(g.size()));
    let (max_deg, min_deg) = (exact::int(class.max_degree), exact::int(class.min_degree));
    // m·(2m + (n−2)Δ + (Δ−δ)(n−1−Δ)) / (n−1)
    let inner = exact::add(
        exact::add(exact::mul(2, m)?, exact::mul(n - 2, max_deg)?)?,
        exact::mul(max_deg - min_deg, n - 1 - max_deg)?,
    )?;
    let rhs = frac(exact::mul(m, inner)?, n - 1);
    let lhs = Fraction::integer(to_i(first_zagreb(g))?);
    let condition = das_equality_condition(g, &class);
    Ok(BoundCheck::exact(BoundName::DasUpper, lhs, rhs, condition)?)
}

fn das_equality_condition(g: &Graph, class: &GraphClass) -> bool {
    class.is_star || class.is_regular || is_complete_plus_isolated(g)
}

fn require_no_isolated(g: &Graph) -> Result<(), BoundError> {
    if g.order() == 0 {
        return Err(BoundError::EmptyGraph);
    }
    match g.degrees().iter().position(|&d| d == 0) {
        Some(v) => Err(BoundError::IsolatedVertex(v)),
        None => Ok(()),
    }
}

fn average_degree(g: &Graph) -> f64 {
    2.0 * g.size() as f64 / g.order() as f64
}

/// `λM1 >= n(2m/n)^{2λ}` for `λ >= 1/2`, no isolated vertices.
pub fn check_variable_m1_lower(g: &Graph, lambda: f64) -> Result<BoundCheck, BoundError> {
    if !(lambda >= 0.5) {
        return Err(BoundError::LambdaOutOfRange { bound: BoundName::VariableM1Lower, lambda });
    }
    require_no_isolated(g)?;
    let lhs = g.order() as f64 * average_degree(g).powf(2.0 * lambda);
    let rhs = variable_first_zagreb(g, lambda)?.value;
    // at λ = 1/2 both sides are 2m
    let condition = lambda == 0.5 || g.max_degree() == g.min_degree();
    Ok(BoundCheck::approx(BoundName::VariableM1Lower, lambda, lhs, rhs, condition))
}

/// `λM2 >= m(2m/n)^{2λ}` for `λ >= 0`, no isolated vertices.
pub fn check_variable_m2_lower(g: &Graph, lambda: f64) -> Result<BoundCheck, BoundError> {
    if !(lambda >= 0.0) {
        return Err(BoundError::LambdaOutOfRange { bound: BoundName::VariableM2Lower, lambda });
    }
    require_no_isolated(g)?;
    let lhs = g.size() as f64 * average_degree(g).powf(2.0 * lambda);
    let rhs = variable_second_zagreb(g, lambda)?.value;
    // at λ = 0 both sides are m
    let condition = lambda == 0.0 || g.max_degree() == g.min_degree();
    Ok(BoundCheck::approx(BoundName::VariableM2Lower, lambda, lhs, rhs, condition))
}

/// Both variable lower bounds; requires `λ >= 1/2`.
pub fn check_variable_lower(g: &Graph, lambda: f64) -> Result<(BoundCheck, BoundCheck), BoundError> {
    Ok((check_variable_m1_lower(g, lambda)?, check_variable_m2_lower(g, lambda)?))
}

/// `λM1/n <= Δ·λM1/2m` and `λM2/m <= Δ·λM1/2m` for `λ >= 0`.
pub fn check_variable_upper(g: &Graph, lambda: f64) -> Result<(BoundCheck, BoundCheck), BoundError> {
    if !(lambda >= 0.0) {
        return Err(BoundError::LambdaOutOfRange { bound: BoundName::VariableUpperEdge, lambda });
    }
    let (n, m) = (g.order() as f64, g.size() as f64);
    if g.order() == 0 || g.size() == 0 {
        return Err(BoundError::EmptyGraph);
    }
    let vm1 = variable_first_zagreb(g, lambda)?.value;
    let vm2 = variable_second_zagreb(g, lambda)?.value;
    let upper = g.max_degree() as f64 * vm1 / (2.0 * m);
    let regular = g.max_degree() == g.min_degree();
    Ok((
        BoundCheck::approx(BoundName::VariableUpperVertex, lambda, vm1 / n, upper, regular),
        BoundCheck::approx(BoundName::VariableUpperEdge, lambda, vm2 / m, upper, regular),
    ))
}

/// The conjecture on the subdivision graph `S(G)`; tight exactly when `G`
/// is regular.
pub fn check_subdivision_theorem(g: &Graph) -> Result<BoundCheck, BoundError> {
    if g.order() == 0 || g.size() == 0 {
        return Err(BoundError::EmptyGraph);
    }
    let s = subdivide(g);
    let report = compare_indices(&s)?;
    let lhs = frac(to_i(report.m1)?, exact::int(report.n));
    let rhs = frac(to_i(report.m2)?, exact::int(report.m));
    let regular = g.max_degree() == g.min_degree();
    Ok(BoundCheck {
        name: BoundName::Subdivision,
        lambda: None,
        lhs: Quantity::Exact(lhs),
        rhs: Quantity::Exact(rhs),
        satisfied: report.verdict != Verdict::Fails,
        tight: report.verdict == Verdict::HoldsWithEquality,
        equality_condition_met: regular,
    })
}
