//! Exhaustive decision procedures for the loop identities used by the
//! central-loop construction. Each check returns an [`IdentityReport`] whose
//! witness is the lexicographically first failing tuple.

use std::fmt;
use std::str::FromStr;

use crate::magma::LoopStructure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityName {
    /// `(xx)(yz) = (x(xy))z`
    LeftCentral,
    /// `(zy)(xx) = z((yx)x)`
    RightCentral,
    /// `x(y(yz)) = ((xy)y)z`
    Central,
    /// `x(xy) = (xx)y`
    LeftAlternative,
    /// `(yx)x = y(xx)`
    RightAlternative,
    PowerAssociative,
    NuclearSquare,
    Steiner,
    Associative,
}

impl IdentityName {
    pub const ALL: [IdentityName; 9] = [
        IdentityName::LeftCentral,
        IdentityName::RightCentral,
        IdentityName::Central,
        IdentityName::LeftAlternative,
        IdentityName::RightAlternative,
        IdentityName::PowerAssociative,
        IdentityName::NuclearSquare,
        IdentityName::Steiner,
        IdentityName::Associative,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityName::LeftCentral => "lc",
            IdentityName::RightCentral => "rc",
            IdentityName::Central => "c",
            IdentityName::LeftAlternative => "left-alt",
            IdentityName::RightAlternative => "right-alt",
            IdentityName::PowerAssociative => "power-assoc",
            IdentityName::NuclearSquare => "nuclear-square",
            IdentityName::Steiner => "steiner",
            IdentityName::Associative => "associative",
        }
    }

    pub fn check(self, l: &LoopStructure) -> IdentityReport {
        match self {
            IdentityName::LeftCentral => is_lc(l),
            IdentityName::RightCentral => is_rc(l),
            IdentityName::Central => is_c(l),
            IdentityName::LeftAlternative => is_left_alternative(l),
            IdentityName::RightAlternative => is_right_alternative(l),
            IdentityName::PowerAssociative => is_power_associative(l),
            IdentityName::NuclearSquare => is_nuclear_square(l),
            IdentityName::Steiner => is_steiner(l),
            IdentityName::Associative => is_associative(l),
        }
    }

    /// Re-evaluates the identity at a witness. `true` means the identity holds there.
    pub fn holds_at(self, l: &LoopStructure, w: &Witness) -> bool {
        let m = |a, b| l.mul(a, b);
        let e = &w.elements;
        match self {
            IdentityName::LeftCentral => lc_at(l, e[0], e[1], e[2]),
            IdentityName::RightCentral => rc_at(l, e[0], e[1], e[2]),
            IdentityName::Central => c_at(l, e[0], e[1], e[2]),
            IdentityName::LeftAlternative => m(e[0], m(e[0], e[1])) == m(m(e[0], e[0]), e[1]),
            IdentityName::RightAlternative => m(m(e[1], e[0]), e[0]) == m(e[1], m(e[0], e[0])),
            IdentityName::PowerAssociative => {
                let p = |k: usize| (0..k).fold(l.identity(), |acc, _| m(e[0], acc));
                m(p(e[1]), p(e[2])) == p(e[1] + e[2])
            }
            IdentityName::NuclearSquare => {
                let s = m(e[0], e[0]);
                match w.clause {
                    SquareClause::LEFT => nucleus_left(l, s, e[1], e[2]),
                    SquareClause::MIDDLE => nucleus_middle(l, s, e[1], e[2]),
                    _ => nucleus_right(l, s, e[1], e[2]),
                }
            }
            IdentityName::Steiner => match w.clause {
                SteinerClause::SQUARE => m(e[0], e[0]) == l.identity(),
                SteinerClause::RIGHT_INVERSE => m(m(e[1], e[0]), e[0]) == e[1],
                _ => m(e[0], e[1]) == m(e[1], e[0]),
            },
            IdentityName::Associative => m(m(e[0], e[1]), e[2]) == m(e[0], m(e[1], e[2])),
        }
    }
}

impl fmt::Display for IdentityName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        IdentityName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| format!("unknown identity {s:?}"))
    }
}

/// Clause labels for [`IdentityName::Steiner`] witnesses.
pub struct SteinerClause;

impl SteinerClause {
    pub const SQUARE: &'static str = "x^2=e";
    pub const RIGHT_INVERSE: &'static str = "yx.x=y";
    pub const COMMUTATIVE: &'static str = "xy=yx";
}

/// Clause labels for [`IdentityName::NuclearSquare`] witnesses.
pub struct SquareClause;

impl SquareClause {
    pub const LEFT: &'static str = "(x2.y)z=x2.yz";
    pub const MIDDLE: &'static str = "(y.x2)z=y.x2z";
    pub const RIGHT: &'static str = "(yz)x2=y.zx2";
}

/// A failing tuple. For most identities the elements are the variables in
/// `(x, y, z)` order; for power-associativity they are `(x, i, j)` with
/// exponents `i, j` such that `x^i·x^j ≠ x^(i+j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub elements: Vec<usize>,
    pub clause: &'static str,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))?;
        if !self.clause.is_empty() {
            write!(f, " clause {}", self.clause)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: IdentityName,
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl IdentityReport {
    fn from_witness(identity: IdentityName, witness: Option<Witness>) -> Self {
        IdentityReport { identity, holds: witness.is_none(), witness }
    }

    pub fn describe(&self) -> String {
        match &self.witness {
            None => format!("{} identity", self.identity),
            Some(w) => format!("{} identity at {}", self.identity, w),
        }
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} holds={}", self.identity, self.holds)?;
        if let Some(w) = &self.witness {
            write!(f, " witness={w}")?;
        }
        Ok(())
    }
}

fn first_pair(n: usize, f: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
    (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).find(|&(x, y)| !f(x, y)).map(|(x, y)| vec![x, y])
}

fn first_triple(n: usize, f: impl Fn(usize, usize, usize) -> bool) -> Option<Vec<usize>> {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !f(x, y, z) {
                    return Some(vec![x, y, z]);
                }
            }
        }
    }
    None
}

fn lc_at(l: &LoopStructure, x: usize, y: usize, z: usize) -> bool {
    let m = |a, b| l.mul(a, b);
    m(m(x, x), m(y, z)) == m(m(x, m(x, y)), z)
}

fn rc_at(l: &LoopStructure, x: usize, y: usize, z: usize) -> bool {
    let m = |a, b| l.mul(a, b);
    m(m(z, y), m(x, x)) == m(z, m(m(y, x), x))
}

fn c_at(l: &LoopStructure, x: usize, y: usize, z: usize) -> bool {
    let m = |a, b| l.mul(a, b);
    m(x, m(y, m(y, z))) == m(m(m(x, y), y), z)
}

fn nucleus_left(l: &LoopStructure, s: usize, y: usize, z: usize) -> bool {
    l.mul(l.mul(s, y), z) == l.mul(s, l.mul(y, z))
}

fn nucleus_middle(l: &LoopStructure, s: usize, y: usize, z: usize) -> bool {
    l.mul(l.mul(y, s), z) == l.mul(y, l.mul(s, z))
}

fn nucleus_right(l: &LoopStructure, s: usize, y: usize, z: usize) -> bool {
    l.mul(l.mul(y, z), s) == l.mul(y, l.mul(z, s))
}

fn plain(elements: Option<Vec<usize>>) -> Option<Witness> {
    elements.map(|elements| Witness { elements, clause: "" })
}

pub fn is_lc(l: &LoopStructure) -> IdentityReport {
    let w = plain(first_triple(l.order(), |x, y, z| lc_at(l, x, y, z)));
    IdentityReport::from_witness(IdentityName::LeftCentral, w)
}

pub fn is_rc(l: &LoopStructure) -> IdentityReport {
    let w = plain(first_triple(l.order(), |x, y, z| rc_at(l, x, y, z)));
    IdentityReport::from_witness(IdentityName::RightCentral, w)
}

pub fn is_c(l: &LoopStructure) -> IdentityReport {
    let w = plain(first_triple(l.order(), |x, y, z| c_at(l, x, y, z)));
    IdentityReport::from_witness(IdentityName::Central, w)
}

pub fn is_left_alternative(l: &LoopStructure) -> IdentityReport {
    let m = |a, b| l.mul(a, b);
    let w = plain(first_pair(l.order(), |x, y| m(x, m(x, y)) == m(m(x, x), y)));
    IdentityReport::from_witness(IdentityName::LeftAlternative, w)
}

pub fn is_right_alternative(l: &LoopStructure) -> IdentityReport {
    let m = |a, b| l.mul(a, b);
    let w = plain(first_pair(l.order(), |x, y| m(m(y, x), x) == m(y, m(x, x))));
    IdentityReport::from_witness(IdentityName::RightAlternative, w)
}

pub fn is_power_associative(l: &LoopStructure) -> IdentityReport {
    let w = l.elements().find_map(|x| {
        l.power_ambiguity(x).map(|(i, j, _, _)| Witness { elements: vec![x, i, j], clause: "" })
    });
    IdentityReport::from_witness(IdentityName::PowerAssociative, w)
}

pub fn is_nuclear_square(l: &LoopStructure) -> IdentityReport {
    let mut witness = None;
    'outer: for x in l.elements() {
        let s = l.square(x);
        for y in l.elements() {
            for z in l.elements() {
                let clause = if !nucleus_left(l, s, y, z) {
                    SquareClause::LEFT
                } else if !nucleus_middle(l, s, y, z) {
                    SquareClause::MIDDLE
                } else if !nucleus_right(l, s, y, z) {
                    SquareClause::RIGHT
                } else {
                    continue;
                };
                witness = Some(Witness { elements: vec![x, y, z], clause });
                break 'outer;
            }
        }
    }
    IdentityReport::from_witness(IdentityName::NuclearSquare, witness)
}

/// Checks `x² = e`, then `yx·x = y`, then `xy = yx`; the witness names the
/// first clause that fails.
pub fn is_steiner(l: &LoopStructure) -> IdentityReport {
    let m = |a, b| l.mul(a, b);
    let e = l.identity();
    let w = if let Some(x) = l.elements().find(|&x| m(x, x) != e) {
        Some(Witness { elements: vec![x], clause: SteinerClause::SQUARE })
    } else if let Some(el) = first_pair(l.order(), |x, y| m(m(y, x), x) == y) {
        Some(Witness { elements: el, clause: SteinerClause::RIGHT_INVERSE })
    } else {
        first_pair(l.order(), |x, y| m(x, y) == m(y, x))
            .map(|elements| Witness { elements, clause: SteinerClause::COMMUTATIVE })
    };
    IdentityReport::from_witness(IdentityName::Steiner, w)
}

pub fn is_associative(l: &LoopStructure) -> IdentityReport {
    let m = |a, b| l.mul(a, b);
    let w = plain(first_triple(l.order(), |x, y, z| m(m(x, y), z) == m(x, m(y, z))));
    IdentityReport::from_witness(IdentityName::Associative, w)
}

pub fn all_reports(l: &LoopStructure) -> Vec<IdentityReport> {
    IdentityName::ALL.iter().map(|n| n.check(l)).collect()
}
