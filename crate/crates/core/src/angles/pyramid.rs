//! The open pyramid `Π` of fixed angles of a quadrilateral face.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use super::scalar::Scalar;

/// One defining inequality of `Π`, written as `form > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Facet {
    /// `x_j > 0`.
    Lower(usize),
    /// `x_j < 1`.
    Upper(usize),
    /// Positive area: `a + b + c + d - 2 > 0`.
    Area,
    /// Area below the digon at corner `j`: `a + b + c + d - 2 < 2 x_j`.
    Digon(usize),
}

impl Facet {
    pub const ALL: [Facet; 13] = [
        Facet::Area,
        Facet::Digon(0),
        Facet::Digon(1),
        Facet::Digon(2),
        Facet::Digon(3),
        Facet::Lower(0),
        Facet::Lower(1),
        Facet::Lower(2),
        Facet::Lower(3),
        Facet::Upper(0),
        Facet::Upper(1),
        Facet::Upper(2),
        Facet::Upper(3),
    ];

    /// Coefficients and constant of the form that must be positive.
    pub fn form(self) -> LinForm {
        match self {
            Facet::Lower(j) => LinForm::unit(j, 1, 0),
            Facet::Upper(j) => LinForm::unit(j, -1, 1),
            Facet::Area => LinForm { coef: [1; 4], constant: -2 },
            Facet::Digon(j) => {
                let mut coef = [-1; 4];
                coef[j] = 1;
                LinForm { coef, constant: 2 }
            }
        }
    }
}

impl fmt::Display for Facet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const N: [char; 4] = ['a', 'b', 'c', 'd'];
        match self {
            Facet::Lower(j) => write!(f, "{} > 0", N[*j]),
            Facet::Upper(j) => write!(f, "{} < 1", N[*j]),
            Facet::Area => write!(f, "a+b+c+d-2 > 0"),
            Facet::Digon(j) => write!(f, "a+b+c+d-2 < 2{}", N[*j]),
        }
    }
}

/// Integer linear form `Σ coef_j x_j + constant`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LinForm {
    pub coef: [i64; 4],
    pub constant: i64,
}

impl LinForm {
    fn unit(j: usize, c: i64, constant: i64) -> LinForm {
        let mut coef = [0; 4];
        coef[j] = c;
        LinForm { coef, constant }
    }

    pub fn eval(&self, x: &[Scalar; 4]) -> Scalar {
        let mut s = Scalar::int(self.constant);
        for j in 0..4 {
            if self.coef[j] != 0 {
                s = s + x[j] * self.coef[j];
            }
        }
        s
    }

    /// Rewrites the form in variables `y` where `x_j = 1 - y_j` for every
    /// `j` in `mask` and `x_j = y_j` otherwise.
    pub fn substitute(&self, mask: u8) -> LinForm {
        let mut out = *self;
        for j in 0..4 {
            if mask >> j & 1 == 1 {
                out.constant += self.coef[j];
                out.coef[j] = -self.coef[j];
            }
        }
        out
    }

    /// Human-readable form over the given variable names.
    pub fn render(&self, names: [&str; 4]) -> String {
        let mut s = String::new();
        for j in 0..4 {
            let c = self.coef[j];
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if s.is_empty() {
                ""
            } else {
                "+"
            };
            let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
            s.push_str(&format!("{sign}{mag}{}", names[j]));
        }
        if self.constant != 0 || s.is_empty() {
            if self.constant > 0 && !s.is_empty() {
                s.push('+');
            }
            s.push_str(&self.constant.to_string());
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Membership {
    Interior,
    /// Closed pyramid, with the listed inequalities tight.
    Boundary(Vec<Facet>),
    /// Outside, with the listed inequalities violated.
    Outside(Vec<Facet>),
}

impl Membership {
    pub fn is_interior(&self) -> bool {
        matches!(self, Membership::Interior)
    }
}

/// Classifies `(a, b, c, d)` against the open pyramid `Π`.
pub fn pyramid_membership(x: &[Scalar; 4]) -> Membership {
    let mut tight = Vec::new();
    let mut violated = Vec::new();
    for facet in Facet::ALL {
        match facet.form().eval(x).sign() {
            Ordering::Greater => {}
            Ordering::Equal => tight.push(facet),
            Ordering::Less => violated.push(facet),
        }
    }
    if !violated.is_empty() {
        Membership::Outside(violated)
    } else if !tight.is_empty() {
        Membership::Boundary(tight)
    } else {
        Membership::Interior
    }
}

/// Convenience wrapper for floats.
pub fn pyramid_membership_f64(x: [f64; 4]) -> Membership {
    pyramid_membership(&x.map(Scalar::Float))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let half = [Scalar::ratio(1, 2); 4];
        assert_eq!(pyramid_membership(&half), Membership::Boundary(vec![Facet::Area]));
        assert!(pyramid_membership(&[Scalar::ratio(3, 5); 4]).is_interior());
        let v = [0, 0, 1, 1].map(Scalar::int);
        assert!(matches!(pyramid_membership(&v), Membership::Boundary(_)));
        let apex = [Scalar::int(1); 4];
        assert!(matches!(pyramid_membership(&apex), Membership::Boundary(_)));
        let out = [0.1, 0.1, 0.1, 0.1].map(Scalar::Float);
        assert!(matches!(pyramid_membership(&out), Membership::Outside(_)));
    }

    #[test]
    fn rendering() {
        let f = Facet::Area.form().substitute(0b0100);
        assert_eq!(f.render(["α", "β", "γ", "δ"]), "α+β-γ+δ-1");
        assert_eq!(Facet::Digon(0).form().render(["a", "b", "c", "d"]), "a-b-c-d+2");
    }
}
