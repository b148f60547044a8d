//! The projective plane PG(2, q) and its orthogonal polarity graph.
//!
//! Points are normalised so the first nonzero coordinate is 1. Two distinct
//! points are adjacent when `x1*y1 + x2*y2 + x3*y3 = 0`; self-orthogonal
//! (absolute) points get no loop, which is what makes their degree q instead
//! of q + 1.

use thiserror::Error;

use crate::gf::{Field, FieldElement};
use crate::graph::Graph;

/// Largest polarity graph order built with a dense adjacency matrix.
pub const MAX_POLARITY_ORDER: usize = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("PG(2,{q}) has {order} points, above the dense limit {limit}")]
    TooLarge { q: u64, order: usize, limit: usize },
    #[error("expected {expected} absolute points, found {found}")]
    AbsoluteCount { expected: u64, found: usize },
}

/// Normalised homogeneous coordinates, stored as field element indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    pub coords: [u32; 3],
}

impl ProjPoint {
    pub fn elements(&self, field: &Field) -> [FieldElement; 3] {
        self.coords.map(|c| field.element(c as u64))
    }
}

/// Points with x1 = 1 first (lexicographic in (x2, x3)), then (0, 1, x3), then (0, 0, 1).
pub fn projective_points(field: &Field) -> Vec<ProjPoint> {
    let q = field.order() as u32;
    let mut points = Vec::with_capacity((q * q + q + 1) as usize);
    for a in 0..q {
        for b in 0..q {
            points.push(ProjPoint { coords: [1, a, b] });
        }
    }
    for b in 0..q {
        points.push(ProjPoint { coords: [0, 1, b] });
    }
    points.push(ProjPoint { coords: [0, 0, 1] });
    points
}

fn dot(t: &crate::gf::FieldTables, u: &ProjPoint, v: &ProjPoint) -> u32 {
    let s = t.add(t.mul(u.coords[0], v.coords[0]), t.mul(u.coords[1], v.coords[1]));
    t.add(s, t.mul(u.coords[2], v.coords[2]))
}

/// The orthogonal polarity graph `ER_q` on the points of PG(2, q).
pub fn er_graph(field: &Field) -> Result<Graph, GeometryError> {
    let q = field.order();
    let order = (q * q + q + 1) as usize;
    if order > MAX_POLARITY_ORDER {
        return Err(GeometryError::TooLarge { q, order, limit: MAX_POLARITY_ORDER });
    }
    let tables = field.tables();
    let points = projective_points(field);
    let mut g = Graph::empty(order);
    for (i, u) in points.iter().enumerate() {
        for (j, v) in points.iter().enumerate().skip(i + 1) {
            if dot(&tables, u, v) == 0 {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// Indices of the self-orthogonal points. The count is checked against q + 1.
pub fn absolute_points(field: &Field) -> Result<Vec<usize>, GeometryError> {
    let tables = field.tables();
    let found: Vec<usize> = projective_points(field)
        .iter()
        .enumerate()
        .filter(|(_, p)| dot(&tables, p, p) == 0)
        .map(|(i, _)| i)
        .collect();
    let expected = field.order() + 1;
    if found.len() as u64 != expected {
        return Err(GeometryError::AbsoluteCount { expected, found: found.len() });
    }
    Ok(found)
}

/// Builds the field for prime power `q` and returns `(ER_q, absolute points)`.
pub fn polarity_graph(q: u64) -> Result<(Graph, Vec<usize>), crate::Error> {
    let (p, e) = crate::arith::prime_power(q).ok_or(crate::Error::NotPrimePower(q))?;
    let field = Field::new(p, e)?;
    Ok((er_graph(&field)?, absolute_points(&field)?))
}
