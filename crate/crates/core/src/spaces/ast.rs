use std::fmt;

use crate::error::{Error, Result};
use crate::fga::AbelianGroup;

/// Abstract syntax of a space expression.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SpaceExpr {
    /// The one-point space.
    Point,
    /// `S^n`, `n ≥ 1`.
    Sphere(u32),
    /// `M(A, n)`, `n ≥ 2`.
    Moore {
        group: AbelianGroup,
        degree: u32,
    },
    /// `K(G, n)`, `n ≥ 1`.
    Em {
        group: AbelianGroup,
        degree: u32,
    },
    /// `T^k`, `k ≥ 1`.
    Torus(u32),
    /// Pseudo-projective plane `P_q`: a 2-cell attached to `S^1` by a degree
    /// `q` map; `P_0` is `S^1`.
    PseudoProjective(u64),
    /// `times`-fold reduced suspension.
    Suspension {
        times: u32,
        inner: Box<SpaceExpr>,
    },
    Wedge(Vec<SpaceExpr>),
    Product(Vec<SpaceExpr>),
}

impl SpaceExpr {
    pub fn moore(group: AbelianGroup, degree: u32) -> Result<Self> {
        if degree < 2 {
            return Err(Error::InvalidInput(moore_degree_message(degree)));
        }
        Ok(SpaceExpr::Moore { group, degree })
    }

    pub fn em(group: AbelianGroup, degree: u32) -> Result<Self> {
        if degree < 1 {
            return Err(Error::InvalidInput("K(G, n) requires n >= 1".into()));
        }
        Ok(SpaceExpr::Em { group, degree })
    }

    pub fn suspend(self, times: u32) -> Self {
        match times {
            0 => self,
            _ => SpaceExpr::Suspension {
                times,
                inner: Box::new(self),
            },
        }
    }

    /// Wedge of `parts`; a single part stands for itself and none for a point.
    pub fn wedge_of(mut parts: Vec<SpaceExpr>) -> Self {
        match parts.len() {
            0 => SpaceExpr::Point,
            1 => parts.pop().unwrap(),
            _ => SpaceExpr::Wedge(parts),
        }
    }

    pub fn product_of(mut parts: Vec<SpaceExpr>) -> Self {
        match parts.len() {
            0 => SpaceExpr::Point,
            1 => parts.pop().unwrap(),
            _ => SpaceExpr::Product(parts),
        }
    }
}

pub(crate) fn moore_degree_message(degree: u32) -> String {
    format!(
        "M(A, {degree}) is not defined: Moore spaces need degree n >= 2, \
         since M(A, 1) fails to exist or be unique in general"
    )
}

/// Canonical printer; its output parses back to the same tree.
impl fmt::Display for SpaceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceExpr::Point => f.write_str("pt"),
            SpaceExpr::Sphere(n) => write!(f, "S^{n}"),
            SpaceExpr::Moore { group, degree } => write!(f, "M({group}, {degree})"),
            SpaceExpr::Em { group, degree } => write!(f, "K({group}, {degree})"),
            SpaceExpr::Torus(k) => write!(f, "T^{k}"),
            SpaceExpr::PseudoProjective(q) => write!(f, "P_{q}"),
            SpaceExpr::Suspension { times, inner } => write!(f, "susp^{times}({inner})"),
            SpaceExpr::Wedge(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" v ")?;
                    }
                    match p {
                        SpaceExpr::Wedge(_) => write!(f, "({p})")?,
                        _ => write!(f, "{p}")?,
                    }
                }
                Ok(())
            }
            SpaceExpr::Product(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" x ")?;
                    }
                    match p {
                        SpaceExpr::Wedge(_) | SpaceExpr::Product(_) => write!(f, "({p})")?,
                        _ => write!(f, "{p}")?,
                    }
                }
                Ok(())
            }
        }
    }
}
