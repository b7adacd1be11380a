//! Angle logic: the pyramid of fixed angles, the fixed angles of a net,
//! feasibility, degenerations and the closure condition.

mod degen;
mod pyramid;
mod scalar;
pub mod table;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use degen::{degeneration_directions, degeneration_report, ladder_or_box, DegenerationReport, Direction, Pattern};
pub use pyramid::{pyramid_membership, pyramid_membership_f64, Facet, LinForm, Membership};
pub use scalar::{Scalar, FLOAT_EPS};

use crate::builders::{Family, NetLabel};
use crate::error::{Error, Result};

/// Names of the fractional parts, in corner order.
pub const FRACTION_NAMES: [&str; 4] = ["α", "β", "γ", "δ"];

/// Corner angles of a quadrilateral in units of `π`, split into integer
/// parts (the corner orders) and fractional parts in `(0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AngleVector {
    pub int: [usize; 4],
    pub frac: [Scalar; 4],
}

impl AngleVector {
    pub fn new(int: [usize; 4], frac: [Scalar; 4]) -> Result<AngleVector> {
        for (j, f) in frac.iter().enumerate() {
            if f.sign() != Ordering::Greater || f.cmp_tol(&Scalar::int(1)) != Ordering::Less {
                return Err(Error::InfeasibleAngles(format!(
                    "fractional part {} = {f} is not in (0,1)",
                    FRACTION_NAMES[j]
                )));
            }
        }
        Ok(AngleVector { int, frac })
    }

    /// Splits full angles into integer and fractional parts.
    pub fn from_angles(angles: [Scalar; 4]) -> Result<AngleVector> {
        let mut int = [0; 4];
        let mut frac = [Scalar::int(0); 4];
        for j in 0..4 {
            let x = angles[j];
            if x.sign() != Ordering::Greater {
                return Err(Error::InfeasibleAngles(format!("angle {x} is not positive")));
            }
            let mut n = x.floor();
            let mut f = x - Scalar::int(n);
            // Floats just below an integer.
            if f.cmp_tol(&Scalar::int(1)) == Ordering::Equal {
                n += 1;
                f = Scalar::int(0);
            }
            int[j] = n as usize;
            frac[j] = f;
        }
        AngleVector::new(int, frac)
    }

    pub fn from_f64(angles: [f64; 4]) -> Result<AngleVector> {
        AngleVector::from_angles(angles.map(Scalar::Float))
    }

    /// Sum of the integer parts.
    pub fn sigma(&self) -> usize {
        self.int.iter().sum()
    }

    pub fn is_exact(&self) -> bool {
        self.frac.iter().all(Scalar::is_exact)
    }

    pub fn angles(&self) -> [Scalar; 4] {
        let mut out = self.frac;
        for j in 0..4 {
            out[j] = out[j] + Scalar::int(self.int[j] as i64);
        }
        out
    }

    /// Parses `a0=0.3 a1=1.8 a2=0.5 a3=2.45` (full angles), `alpha=3/10 ...`
    /// (fractional parts; integer parts default to 0) or four positional
    /// full angles separated by commas or spaces. With `exact`, decimals are
    /// read as rationals.
    pub fn parse(s: &str, exact: bool) -> Result<AngleVector> {
        let tokens: Vec<&str> = s.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()).collect();
        let bad = |m: &str| Error::Parse(format!("angles `{s}`: {m}"));
        let mut full: [Option<Scalar>; 4] = [None; 4];
        let mut frac: [Option<Scalar>; 4] = [None; 4];
        let mut positional = Vec::new();
        for t in tokens {
            match t.split_once('=') {
                Some((k, v)) => {
                    let v = Scalar::parse(v, exact)?;
                    let slot = match k {
                        "a0" | "a1" | "a2" | "a3" => &mut full[k[1..].parse::<usize>().unwrap_or(0)],
                        "alpha" | "α" => &mut frac[0],
                        "beta" | "β" => &mut frac[1],
                        "gamma" | "γ" => &mut frac[2],
                        "delta" | "δ" => &mut frac[3],
                        _ => return Err(bad(&format!("unknown key `{k}`"))),
                    };
                    if slot.replace(v).is_some() {
                        return Err(bad(&format!("`{k}` given twice")));
                    }
                }
                None => positional.push(Scalar::parse(t, exact)?),
            }
        }
        if !positional.is_empty() {
            if positional.len() != 4 || full.iter().chain(&frac).any(Option::is_some) {
                return Err(bad("expected exactly four angles"));
            }
            return AngleVector::from_angles([positional[0], positional[1], positional[2], positional[3]]);
        }
        let mut angles = [Scalar::int(0); 4];
        for j in 0..4 {
            angles[j] = match (full[j], frac[j]) {
                (Some(a), None) => a,
                (None, Some(f)) if f.sign() == Ordering::Greater && f.cmp_tol(&Scalar::int(1)) == Ordering::Less => f,
                (None, Some(f)) => return Err(bad(&format!("fractional part {f} is not in (0,1)"))),
                (None, None) => return Err(bad(&format!("missing angle {j}"))),
                (Some(_), Some(_)) => return Err(bad(&format!("angle {j} given twice"))),
            };
        }
        AngleVector::from_angles(angles)
    }
}

impl FromStr for AngleVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<AngleVector> {
        AngleVector::parse(s, false)
    }
}

impl fmt::Display for AngleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.angles();
        write!(f, "a0={} a1={} a2={} a3={}", a[0], a[1], a[2], a[3])
    }
}

/// Fixed angles `(a, b, c, d)` of a quadrilateral face of the four-circle
/// configuration, each either a fractional part or its complement.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FixedAngleQuad {
    pub values: [Scalar; 4],
    pub complement: [bool; 4],
}

impl FixedAngleQuad {
    pub fn mask(&self) -> u8 {
        (0..4).filter(|&j| self.complement[j]).fold(0, |m, j| m | 1 << j)
    }

    pub fn complement_count(&self) -> usize {
        self.complement.iter().filter(|&&c| c).count()
    }

    pub fn to_f64(&self) -> [f64; 4] {
        self.values.map(|v| v.to_f64())
    }

    /// `(α, 1-β, ...)`-style names of the four values.
    pub fn names(&self) -> [String; 4] {
        let mut out: [String; 4] = Default::default();
        for j in 0..4 {
            out[j] =
                if self.complement[j] { format!("1-{}", FRACTION_NAMES[j]) } else { FRACTION_NAMES[j].to_string() };
        }
        out
    }
}

/// Applies a complement mask to fractional parts.
pub fn apply_mask(frac: &[Scalar; 4], mask: u8) -> FixedAngleQuad {
    let mut values = *frac;
    let mut complement = [false; 4];
    for j in 0..4 {
        if mask >> j & 1 == 1 {
            values[j] = frac[j].complement();
            complement[j] = true;
        }
    }
    FixedAngleQuad { values, complement }
}

/// Complement mask of the primitive core of `label`. Pseudo-diagonals and
/// digons do not change it.
pub fn complement_mask_for(label: &NetLabel) -> Result<u8> {
    let core = label.core();
    if core.family == Family::P {
        return Ok(0);
    }
    table::lookup(core.family, core.barred, core.k, core.l).ok_or_else(|| Error::UnknownLabel(core.to_string()))
}

pub fn fixed_angles_for_net(label: &NetLabel, angles: &AngleVector) -> Result<FixedAngleQuad> {
    Ok(apply_mask(&angles.frac, complement_mask_for(label)?))
}

/// One inequality behind a feasibility verdict, in terms of the
/// fractional parts.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub facet: Facet,
    /// `form > 0` must hold; the form is over `α, β, γ, δ`.
    pub form: LinForm,
    pub text: String,
    pub value: Scalar,
    pub tight: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Feasibility {
    pub feasible: bool,
    pub quad: FixedAngleQuad,
    /// Violated or tight inequalities; empty when feasible.
    pub witnesses: Vec<Witness>,
    /// The defining condition, e.g. `0 < α+β-γ+δ-1 < 2min(α,β,1-γ,δ)`.
    pub condition: String,
}

pub fn net_feasible(label: &NetLabel, angles: &AngleVector) -> Result<Feasibility> {
    let quad = fixed_angles_for_net(label, angles)?;
    let mask = quad.mask();
    let mut witnesses = Vec::new();
    // Cube facets hold automatically for values built from (0,1) parts.
    for facet in [Facet::Area, Facet::Digon(0), Facet::Digon(1), Facet::Digon(2), Facet::Digon(3)] {
        let form = facet.form().substitute(mask);
        let value = form.eval(&angles.frac);
        let s = value.sign();
        if s != Ordering::Greater {
            let text = match facet {
                Facet::Digon(j) => {
                    let area = Facet::Area.form().substitute(mask).render(FRACTION_NAMES);
                    format!("{area} < 2({})", quad.names()[j])
                }
                _ => format!("{} > 0", form.render(FRACTION_NAMES)),
            };
            witnesses.push(Witness { facet, form, text, value, tight: s == Ordering::Equal });
        }
    }
    let area = Facet::Area.form().substitute(mask).render(FRACTION_NAMES);
    let condition = format!("0 < {area} < 2min({})", quad.names().join(","));
    Ok(Feasibility { feasible: witnesses.is_empty(), quad, witnesses, condition })
}

/// L1 distance from the fractional parts to the integer points whose
/// coordinate sum has parity `parity`.
pub fn lattice_distance(frac: &[Scalar; 4], parity: usize) -> Scalar {
    let mut round = [0i64; 4];
    let mut dist = Scalar::int(0);
    let mut penalty: Option<Scalar> = None;
    for j in 0..4 {
        let x = frac[j];
        let lo = Scalar::int(x.floor());
        let up = lo + Scalar::int(1);
        let (r, d, other) = if (x - lo).cmp_tol(&(up - x)) != Ordering::Greater {
            (x.floor(), x - lo, up - x)
        } else {
            (x.floor() + 1, up - x, x - lo)
        };
        round[j] = r;
        dist = dist + d;
        let extra = other - d;
        if penalty.is_none_or(|p| extra.cmp_tol(&p) == Ordering::Less) {
            penalty = Some(extra);
        }
    }
    let sum: i64 = round.iter().sum();
    if sum.rem_euclid(2) as usize == parity % 2 {
        dist
    } else {
        dist + penalty.unwrap_or(Scalar::int(0))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ClosureReport {
    /// Distance to the odd lattice when `Σ` is even and to the even lattice
    /// when `Σ` is odd.
    pub distance: Scalar,
    /// All fractional parts equal `1/2`: a rectangle, never generic.
    pub centre: bool,
    pub satisfied: bool,
}

pub fn closure_report(angles: &AngleVector) -> ClosureReport {
    let parity = (angles.sigma() + 1) % 2;
    let distance = lattice_distance(&angles.frac, parity);
    let half = Scalar::ratio(1, 2);
    let centre = angles.frac.iter().all(|f| f.cmp_tol(&half) == Ordering::Equal);
    let satisfied = distance.cmp_tol(&Scalar::int(1)) == Ordering::Greater && !centre;
    ClosureReport { distance, centre, satisfied }
}

/// Necessary condition for a generic quadrilateral with these angles.
pub fn closure_condition(angles: &AngleVector) -> bool {
    closure_report(angles).satisfied
}

#[cfg(test)]
mod tests {
    use super::*;

    fn av(s: &str) -> AngleVector {
        AngleVector::parse(s, true).unwrap()
    }

    #[test]
    fn parse_forms() {
        let a = av("a0=0.3 a1=1.8 a2=0.5 a3=2.45");
        assert_eq!(a.int, [0, 1, 0, 2]);
        assert_eq!(a.frac[1], Scalar::ratio(4, 5));
        assert_eq!(av("0.3,1.8,0.5,2.45"), a);
        let b = av("alpha=3/10 beta=4/5 gamma=1/2 delta=9/20");
        assert_eq!(b.frac, a.frac);
        assert_eq!(b.int, [0; 4]);
        assert!(AngleVector::parse("0.3,1,0.5,2.45", true).is_err());
        assert!(AngleVector::parse("a0=0.3", true).is_err());
    }

    #[test]
    fn x_examples() {
        let angles = av("alpha=3/10 beta=4/5 gamma=1/2 delta=9/20");
        let x01: NetLabel = "X[0,1]".parse().unwrap();
        let q = fixed_angles_for_net(&x01, &angles).unwrap();
        assert_eq!(q.complement, [false, false, true, false]);
        let f = net_feasible(&x01, &angles).unwrap();
        assert!(f.feasible);
        assert_eq!(f.condition, "0 < α+β-γ+δ-1 < 2min(α,β,1-γ,δ)");
        let x11: NetLabel = "X[1,1]".parse().unwrap();
        assert_eq!(fixed_angles_for_net(&x11, &angles).unwrap().complement, [true, false, true, false]);
        let x12: NetLabel = "X[1,2]".parse().unwrap();
        assert_eq!(fixed_angles_for_net(&x12, &angles).unwrap().complement, [true, false, false, false]);
        let p0 = NetLabel::p0();
        assert_eq!(fixed_angles_for_net(&p0, &angles).unwrap().mask(), 0);
    }

    #[test]
    fn closure_examples() {
        let c = closure_report(&av("alpha=1/2 beta=1/2 gamma=1/2 delta=1/2"));
        assert!(c.centre && !c.satisfied);
        assert_eq!(c.distance, Scalar::int(2));
        let r = closure_report(&av("alpha=3/5 beta=3/5 gamma=3/5 delta=3/5"));
        assert_eq!(r.distance, Scalar::ratio(9, 5));
        assert!(r.satisfied);
    }
}
