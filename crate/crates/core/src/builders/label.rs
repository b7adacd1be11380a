//! Symbolic net labels and their text syntax.
//!
//! Grammar, whitespace-separated:
//!
//! ```text
//! label  := core [ "mu=" N ] { "+" digon }
//! core   := "P0" | FAM [ "'" ] [ "bar" ] "[" K "," L "]"
//! FAM    := X | Z | R | S | U | V | W
//! digon  := ("D15" | "D24") "@side" J [ "x" COUNT ]
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    P,
    X,
    XPrime,
    Z,
    ZPrime,
    R,
    S,
    U,
    V,
    VPrime,
    W,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::P,
        Family::X,
        Family::XPrime,
        Family::Z,
        Family::ZPrime,
        Family::R,
        Family::S,
        Family::U,
        Family::V,
        Family::VPrime,
        Family::W,
    ];

    pub fn letter(self) -> &'static str {
        match self {
            Family::P => "P",
            Family::X | Family::XPrime => "X",
            Family::Z | Family::ZPrime => "Z",
            Family::R => "R",
            Family::S => "S",
            Family::U => "U",
            Family::V | Family::VPrime => "V",
            Family::W => "W",
        }
    }

    pub fn is_prime(self) -> bool {
        matches!(self, Family::XPrime | Family::ZPrime | Family::VPrime)
    }

    /// Families whose bar is the reflection fixing `a1, a3` rather than the
    /// one fixing `a0, a2`.
    pub fn bar_fixes_a1(self) -> bool {
        matches!(self, Family::U | Family::V | Family::VPrime | Family::W)
    }

    fn from_parts(letter: char, prime: bool) -> Option<Family> {
        Some(match (letter, prime) {
            ('X', false) => Family::X,
            ('X', true) => Family::XPrime,
            ('Z', false) => Family::Z,
            ('Z', true) => Family::ZPrime,
            ('R', false) => Family::R,
            ('S', false) => Family::S,
            ('U', false) => Family::U,
            ('V', false) => Family::V,
            ('V', true) => Family::VPrime,
            ('W', false) => Family::W,
            _ => return None,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DigonKind {
    D15,
    D24,
}

impl DigonKind {
    /// Kind forced by the order of the side it is glued to.
    pub fn for_side_order(order: usize) -> DigonKind {
        if order % 2 == 1 {
            DigonKind::D15
        } else {
            DigonKind::D24
        }
    }
}

/// `count` digons stacked on side `s_side`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DigonRecord {
    pub side: usize,
    pub kind: DigonKind,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NetLabel {
    pub family: Family,
    pub barred: bool,
    pub k: usize,
    pub l: usize,
    pub mu: usize,
    pub digons: Vec<DigonRecord>,
}

impl NetLabel {
    pub fn new(family: Family, barred: bool, k: usize, l: usize) -> NetLabel {
        NetLabel { family, barred, k, l, mu: 0, digons: Vec::new() }
    }

    pub fn p0() -> NetLabel {
        NetLabel::new(Family::P, false, 0, 0)
    }

    pub fn with_mu(mut self, mu: usize) -> NetLabel {
        self.mu = mu;
        self
    }

    pub fn with_digon(mut self, side: usize, kind: DigonKind, count: usize) -> NetLabel {
        self.digons.push(DigonRecord { side, kind, count });
        self
    }

    /// Label of the irreducible primitive core.
    pub fn core(&self) -> NetLabel {
        NetLabel::new(self.family, self.barred, self.k, self.l)
    }

    pub fn is_primitive(&self) -> bool {
        self.mu == 0 && self.digons.is_empty()
    }

    /// Checks the parameter ranges of each family.
    pub fn check(&self) -> Result<()> {
        let (k, l) = (self.k, self.l);
        let ok = match self.family {
            Family::P => k == 0 && l == 0 && !self.barred,
            Family::X | Family::Z => k + l >= 1,
            Family::XPrime | Family::ZPrime => true,
            Family::R | Family::S => k >= l && l >= 1,
            Family::U => k >= 1 && l >= 1,
            // `V[k,1]` names the same net as `Z[k,0]`; it is accepted because
            // chain diagrams use it.
            Family::V | Family::VPrime => k >= 1 && l >= 1,
            Family::W => k >= 2 && l >= 2,
        };
        if !ok {
            return Err(Error::InvalidLabel(format!("{self}: parameters out of range")));
        }
        if self.mu > 0 && matches!(self.family, Family::R | Family::S) {
            return Err(Error::NoEligibleFace);
        }
        for d in &self.digons {
            if d.side > 3 || d.count == 0 {
                return Err(Error::InvalidLabel(format!("{self}: bad digon record")));
            }
        }
        Ok(())
    }

    /// Corner orders of the primitive core, in the normalised labelling.
    pub fn core_corner_orders(&self) -> [usize; 4] {
        let (k, l) = (self.k, self.l);
        let unbarred = match self.family {
            Family::P => [0, 0, 0, 0],
            Family::X => [0, 0, 0, k + l],
            Family::XPrime => [0, 0, 0, k + l + 1],
            Family::Z => [0, 1, 0, k + l],
            Family::ZPrime => [0, 1, 0, k + l + 1],
            Family::R | Family::S => [0, 0, l, k],
            Family::U | Family::V | Family::VPrime | Family::W => [0, l, 0, k],
        };
        if self.barred && !self.family.bar_fixes_a1() {
            [unbarred[0], unbarred[3], unbarred[2], unbarred[1]]
        } else {
            unbarred
        }
    }

    /// Sum of the integer parts `Σ` of the core.
    pub fn sigma(&self) -> usize {
        self.core_corner_orders().iter().sum::<usize>() + 4 * self.mu
    }
}

impl fmt::Display for NetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family == Family::P {
            write!(f, "P0")?;
        } else {
            write!(f, "{}", self.family.letter())?;
            if self.family.is_prime() {
                write!(f, "'")?;
            }
            if self.barred {
                write!(f, "bar")?;
            }
            write!(f, "[{},{}]", self.k, self.l)?;
        }
        if self.mu > 0 {
            write!(f, " mu={}", self.mu)?;
        }
        for d in &self.digons {
            let kind = match d.kind {
                DigonKind::D15 => "D15",
                DigonKind::D24 => "D24",
            };
            write!(f, " + {kind}@side{}", d.side)?;
            if d.count > 1 {
                write!(f, " x{}", d.count)?;
            }
        }
        Ok(())
    }
}

impl FromStr for NetLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<NetLabel> {
        let bad = |m: &str| Error::Parse(format!("label `{s}`: {m}"));
        let mut parts = s.split('+');
        let head = parts.next().ok_or_else(|| bad("empty"))?.trim();
        let mut words = head.split_whitespace();
        let core = words.next().ok_or_else(|| bad("empty"))?;
        let mut label = parse_core(core).ok_or_else(|| bad("unrecognised family"))?;
        for w in words {
            let v = w.strip_prefix("mu=").ok_or_else(|| bad("expected mu=N"))?;
            label.mu = v.parse().map_err(|_| bad("mu must be an integer"))?;
        }
        for part in parts {
            let mut w = part.split_whitespace();
            let spec = w.next().ok_or_else(|| bad("empty digon"))?;
            let (kind, side) = spec.split_once("@side").ok_or_else(|| bad("expected D15@sideJ"))?;
            let kind = match kind {
                "D15" => DigonKind::D15,
                "D24" => DigonKind::D24,
                _ => return Err(bad("digon kind must be D15 or D24")),
            };
            let side: usize = side.parse().map_err(|_| bad("side index"))?;
            let count = match w.next() {
                None => 1,
                Some(c) => c.strip_prefix('x').and_then(|c| c.parse().ok()).ok_or_else(|| bad("count xN"))?,
            };
            if w.next().is_some() {
                return Err(bad("trailing text"));
            }
            label.digons.push(DigonRecord { side, kind, count });
        }
        label.check()?;
        Ok(label)
    }
}

fn parse_core(s: &str) -> Option<NetLabel> {
    if s == "P0" || s == "P" {
        return Some(NetLabel::p0());
    }
    let mut chars = s.chars();
    let letter = chars.next()?;
    let mut rest = chars.as_str();
    let prime = rest.starts_with('\'');
    if prime {
        rest = &rest[1..];
    }
    let barred = rest.starts_with("bar");
    if barred {
        rest = &rest[3..];
    }
    let inner = rest.strip_prefix('[')?.strip_suffix(']')?;
    let (k, l) = inner.split_once(',')?;
    let family = Family::from_parts(letter, prime)?;
    Some(NetLabel::new(family, barred, k.trim().parse().ok()?, l.trim().parse().ok()?))
}
