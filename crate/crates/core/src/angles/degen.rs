//! Which triple intersections a configuration can reach with its fixed
//! angles held constant, and the resulting ladder or box pattern.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Triangular face next to the fixed quadrilateral face that shrinks to a
/// point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Direction {
    Top,
    Bottom,
    Left,
    Right,
}

impl Direction {
    pub const ALL: [Direction; 4] = [Direction::Top, Direction::Bottom, Direction::Left, Direction::Right];

    /// Fixed angles replaced by their complements on crossing the triple
    /// intersection, as a bit mask over `(a, b, c, d)`.
    pub fn complement_mask(self) -> u8 {
        match self {
            Direction::Top => 0b0011,
            Direction::Bottom => 0b1100,
            Direction::Left => 0b0110,
            Direction::Right => 0b1001,
        }
    }

    pub fn opposite(self) -> Direction {
        match self {
            Direction::Top => Direction::Bottom,
            Direction::Bottom => Direction::Top,
            Direction::Left => Direction::Right,
            Direction::Right => Direction::Left,
        }
    }

    pub fn is_vertical(self) -> bool {
        matches!(self, Direction::Top | Direction::Bottom)
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Direction::Top => "top",
            Direction::Bottom => "bottom",
            Direction::Left => "left",
            Direction::Right => "right",
        };
        f.write_str(s)
    }
}

/// Permitted degenerations, with ties reported instead of rejected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegenerationReport {
    /// `None` when `a + b = c + d`.
    pub vertical: Option<Direction>,
    /// `None` when `a + d = b + c`.
    pub horizontal: Option<Direction>,
    /// Both ties and `a = d`: the limit has two tangent circles.
    pub tangent: bool,
}

pub fn degeneration_report(x: &[Scalar; 4]) -> DegenerationReport {
    let [a, b, c, d] = *x;
    let vertical = match (a + b).cmp_tol(&(c + d)) {
        Ordering::Greater => Some(Direction::Bottom),
        Ordering::Less => Some(Direction::Top),
        Ordering::Equal => None,
    };
    let horizontal = match (a + d).cmp_tol(&(b + c)) {
        Ordering::Greater => Some(Direction::Left),
        Ordering::Less => Some(Direction::Right),
        Ordering::Equal => None,
    };
    let tangent = vertical.is_none() && horizontal.is_none() && a.cmp_tol(&d) == Ordering::Equal;
    DegenerationReport { vertical, horizontal, tangent }
}

/// The two permitted degenerations, vertical first.
pub fn degeneration_directions(x: &[Scalar; 4]) -> Result<[Direction; 2]> {
    let r = degeneration_report(x);
    match (r.vertical, r.horizontal) {
        (Some(v), Some(h)) => Ok([v, h]),
        _ => {
            let mut what = Vec::new();
            if r.vertical.is_none() {
                what.push("a+b = c+d");
            }
            if r.horizontal.is_none() {
                what.push("a+d = b+c");
            }
            let mut msg = format!("{}: quadruple intersection", what.join(", "));
            if r.tangent {
                msg.push_str(", tangent circles");
            }
            Err(Error::BoundaryTie(msg))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Pattern {
    Ladder,
    Box,
}

/// Ladder or box pattern of the configurations reachable from `(a, b, c,
/// d)`, with the index of the angle left unchanged by both permitted moves.
/// Opposite pairs are `(a, c)` and `(b, d)`.
pub fn ladder_or_box(x: &[Scalar; 4]) -> Result<(Pattern, usize)> {
    let dirs = degeneration_directions(x).map_err(|e| match e {
        Error::BoundaryTie(m) => Error::AmbiguousOnBoundary(m),
        e => e,
    })?;
    let touched = dirs[0].complement_mask() | dirs[1].complement_mask();
    let unchanged = (0..4).find(|j| touched >> j & 1 == 0).expect("two moves touch three angles");
    let own = x[unchanged] + x[(unchanged + 2) % 4];
    let other = x[(unchanged + 1) % 4] + x[(unchanged + 3) % 4];
    match own.cmp_tol(&other) {
        Ordering::Less => Ok((Pattern::Ladder, unchanged)),
        Ordering::Greater => Ok((Pattern::Box, unchanged)),
        Ordering::Equal => Err(Error::AmbiguousOnBoundary("sums of opposite angles are equal".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: [f64; 4]) -> [Scalar; 4] {
        v.map(Scalar::Float)
    }

    #[test]
    fn directions() {
        assert_eq!(degeneration_directions(&q([0.6, 0.6, 0.5, 0.4])).unwrap(), [Direction::Bottom, Direction::Right]);
        assert!(matches!(degeneration_directions(&q([0.6, 0.5, 0.6, 0.5])), Err(Error::BoundaryTie(_))));
        let sym = degeneration_report(&q([0.7; 4]));
        assert_eq!((sym.vertical, sym.horizontal, sym.tangent), (None, None, true));
    }

    #[test]
    fn ladder_and_box() {
        // a+b<c+d, a+d<b+c, a+c<b+d
        assert_eq!(ladder_or_box(&q([0.5, 0.7, 0.65, 0.75])).unwrap(), (Pattern::Ladder, 2));
        // a+b<c+d, a+d<b+c, a+c>b+d
        assert_eq!(ladder_or_box(&q([0.6, 0.62, 0.9, 0.7])).unwrap().0, Pattern::Box);
        assert!(matches!(ladder_or_box(&q([0.5, 0.7, 0.7, 0.5])), Err(Error::AmbiguousOnBoundary(_))));
        assert!(matches!(ladder_or_box(&q([0.55, 0.7, 0.75, 0.6])), Err(Error::AmbiguousOnBoundary(_))));
    }
}
