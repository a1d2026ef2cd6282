//! Named graphs and the counterexample family `C(a, b)`.
//!
//! `C(a, b)` is an `(a + 1)`-vertex star with a chain of `b` triangles hung
//! off one leaf. Labels are fixed: centre `0`, leaves `1..=a`, then each
//! triangle as `(v_i, u_i, w_i)`. Leaf `1` carries the chain, `u_i` is joined
//! to `v_{i+1}`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::exact::isqrt;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("unrecognised family spec {0:?} (expected star:N, cycle:N, path:N, complete:N, cab:A,B or s6k3)")]
    BadSpec(String),
}

fn out_of_range(msg: impl Into<String>) -> FamilyError {
    FamilyError::ParameterOutOfRange(msg.into())
}

/// Closed-form predictions for `C(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub a: u64,
    pub b: u64,
    pub predicted_n: u64,
    pub predicted_m: u64,
    pub predicted_m1: u64,
    pub predicted_m2: u64,
    pub predicted_cycles: u64,
}

impl FamilySpec {
    pub fn new(a: u64, b: u64) -> Result<Self, FamilyError> {
        if a < 3 || b < 1 {
            return Err(out_of_range(format!("C(a, b) needs a >= 3 and b >= 1, got a={a}, b={b}")));
        }
        Ok(Self {
            a,
            b,
            predicted_n: a + 3 * b + 1,
            predicted_m: a + 4 * b,
            predicted_m1: a * a + a + 22 * b - 2,
            predicted_m2: a * a + a + 30 * b - 8,
            predicted_cycles: b,
        })
    }
}

pub fn build_counterexample_family(a: usize, b: usize) -> Result<Graph, FamilyError> {
    FamilySpec::new(a as u64, b as u64)?;
    let n = a + 3 * b + 1;
    let mut edges = Vec::with_capacity(a + 4 * b);
    edges.extend((1..=a).map(|leaf| (0, leaf)));
    let triangle = |i: usize| {
        let v = a + 1 + 3 * i;
        (v, v + 1, v + 2)
    };
    for i in 0..b {
        let (v, u, w) = triangle(i);
        if i == 0 {
            edges.push((1, v));
        } else {
            let (_, prev_u, _) = triangle(i - 1);
            edges.push((prev_u, v));
        }
        edges.extend([(v, u), (u, w), (v, w)]);
    }
    Ok(Graph::from_normalized(n, edges))
}

/// Left-hand side of the `C(a, b)` conjecture inequality,
/// `a²(1−b) + a(7b−5) + (2b² + 14b − 8)`. Equals `M2·n − M1·m` of `C(a, b)`.
pub fn family_margin(a: i128, b: i128) -> i128 {
    a * a * (1 - b) + a * (7 * b - 5) + (2 * b * b + 14 * b - 8)
}

/// `8b³ + 97b² − 158b + 57`.
pub fn discriminant(b: i128) -> i128 {
    8 * b * b * b + 97 * b * b - 158 * b + 57
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThresholdResult {
    pub b: u64,
    pub discriminant: i128,
    /// Smallest `a >= 3` for which `C(a, b)` is a counterexample.
    pub a_min: Option<u64>,
    /// Larger real root of the margin quadratic in `a`; `C(a, b)` fails
    /// exactly when `a` exceeds it.
    pub root: f64,
}

/// Finds `a_min` by scanning the exact sign of [`family_margin`] upward
/// from `a = 3`. Terminates because the leading coefficient `1 − b` is
/// negative.
pub fn threshold_a(b: u64) -> Result<ThresholdResult, FamilyError> {
    if b < 2 {
        return Err(out_of_range(format!(
            "threshold needs b >= 2 (b = {b} leaves the margin linear and always positive)"
        )));
    }
    if b > 1_000_000 {
        return Err(out_of_range(format!("b = {b} is too large")));
    }
    let bi = b as i128;
    let mut a = 3i128;
    while family_margin(a, bi) >= 0 {
        a += 1;
    }
    let d = discriminant(bi);
    let root = ((7 * bi - 5) as f64 + (d as f64).sqrt()) / (2 * (bi - 1)) as f64;
    Ok(ThresholdResult {
        b,
        discriminant: d,
        a_min: Some(a as u64),
        root,
    })
}

/// `floor(((7b − 5) + √D) / (2(b − 1)))` computed without rounding, for
/// `b >= 2`.
pub fn root_floor_exact(b: i128) -> i128 {
    let d = discriminant(b);
    let (num_lin, den) = (7 * b - 5, 2 * (b - 1));
    // largest t with num_lin + √d >= den·t
    let mut t = (num_lin + isqrt(d)) / den;
    let above = |t: i128| {
        let gap = den * t - num_lin;
        gap <= 0 || gap * gap <= d
    };
    while above(t + 1) {
        t += 1;
    }
    while !above(t) {
        t -= 1;
    }
    t
}

/// Inserts a degree-two vertex on every edge. Edge `k = (u, v)` gets the
/// new vertex `n + k` and becomes `(u, n + k)`, `(v, n + k)`.
pub fn subdivide(g: &Graph) -> Graph {
    let n = g.order();
    let mut edges = Vec::with_capacity(2 * g.size());
    for (k, &(u, v)) in g.edges().iter().enumerate() {
        edges.push((u, n + k));
        edges.push((v, n + k));
    }
    Graph::from_normalized(n + g.size(), edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NamedFamily {
    Star,
    Cycle,
    Path,
    Complete,
}

/// `size` is the vertex count, so `(Star, 6)` is `K_{1,5}`.
pub fn build_named(family: NamedFamily, size: usize) -> Result<Graph, FamilyError> {
    let min = match family {
        NamedFamily::Star => 2,
        NamedFamily::Cycle => 3,
        NamedFamily::Path | NamedFamily::Complete => 1,
    };
    if size < min {
        return Err(out_of_range(format!("{family:?} needs at least {min} vertices, got {size}")));
    }
    let edges: Vec<_> = match family {
        NamedFamily::Star => (1..size).map(|v| (0, v)).collect(),
        NamedFamily::Path => (1..size).map(|v| (v - 1, v)).collect(),
        NamedFamily::Cycle => (1..size).map(|v| (v - 1, v)).chain([(0, size - 1)]).collect(),
        NamedFamily::Complete => (0..size)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .collect(),
    };
    Ok(Graph::from_normalized(size, edges))
}

/// A six-vertex star next to a triangle.
pub fn build_disconnected_counterexample() -> Graph {
    let star = build_named(NamedFamily::Star, 6).unwrap();
    let triangle = build_named(NamedFamily::Complete, 3).unwrap();
    star.disjoint_union(&triangle)
}

/// Short textual names for the graphs above: `star:6`, `cycle:5`, `path:3`,
/// `complete:4`, `cab:12,2`, `s6k3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyRef {
    Named(NamedFamily, usize),
    Cab(usize, usize),
    StarPlusTriangle,
}

impl FamilyRef {
    pub fn build(&self) -> Result<Graph, FamilyError> {
        match *self {
            FamilyRef::Named(f, n) => build_named(f, n),
            FamilyRef::Cab(a, b) => build_counterexample_family(a, b),
            FamilyRef::StarPlusTriangle => Ok(build_disconnected_counterexample()),
        }
    }
}

impl FromStr for FamilyRef {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FamilyError::BadSpec(s.to_string());
        let (name, params) = s.split_once(':').unwrap_or((s, ""));
        let nums: Vec<usize> = if params.is_empty() {
            Vec::new()
        } else {
            params
                .split(',')
                .map(|p| p.trim().parse().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        };
        let named = |f| match nums[..] {
            [n] => Ok(FamilyRef::Named(f, n)),
            _ => Err(bad()),
        };
        match name.trim().to_ascii_lowercase().as_str() {
            "star" => named(NamedFamily::Star),
            "cycle" => named(NamedFamily::Cycle),
            "path" => named(NamedFamily::Path),
            "complete" => named(NamedFamily::Complete),
            "cab" => match nums[..] {
                [a, b] => Ok(FamilyRef::Cab(a, b)),
                _ => Err(bad()),
            },
            "s6k3" if nums.is_empty() => Ok(FamilyRef::StarPlusTriangle),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for FamilyRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyRef::Named(fam, n) => {
                let name = match fam {
                    NamedFamily::Star => "star",
                    NamedFamily::Cycle => "cycle",
                    NamedFamily::Path => "path",
                    NamedFamily::Complete => "complete",
                };
                write!(f, "{name}:{n}")
            }
            FamilyRef::Cab(a, b) => write!(f, "cab:{a},{b}"),
            FamilyRef::StarPlusTriangle => write!(f, "s6k3"),
        }
    }
}
