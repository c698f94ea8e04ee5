//! The five parastrophes (conjugates) of a quasigroup and the report relating
//! them to the constructed autotopisms of a C-loop.

use std::fmt;
use std::str::FromStr;

use crate::autotopism::construct_in_c_loop;
use crate::error::{Error, Result};
use crate::identities::{is_c, is_steiner};
use crate::magma::{CayleyTable, LoopStructure};
use crate::perm::Perm;

/// Which conjugate of `x·y = z` to form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParastropheKind {
    /// `y∘x = z`: the transpose.
    Star,
    /// `x∘z = y`: left division.
    RightDivision,
    /// `z∘y = x`: right division.
    LeftDivision,
    /// `z∘x = y`: transpose of [`ParastropheKind::RightDivision`].
    RightDivisionStar,
    /// `y∘z = x`: transpose of [`ParastropheKind::LeftDivision`].
    LeftDivisionStar,
}

impl ParastropheKind {
    pub const ALL: [ParastropheKind; 5] = [
        ParastropheKind::Star,
        ParastropheKind::RightDivision,
        ParastropheKind::LeftDivision,
        ParastropheKind::RightDivisionStar,
        ParastropheKind::LeftDivisionStar,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ParastropheKind::Star => "star",
            ParastropheKind::RightDivision => "rdiv",
            ParastropheKind::LeftDivision => "ldiv",
            ParastropheKind::RightDivisionStar => "rdiv-star",
            ParastropheKind::LeftDivisionStar => "ldiv-star",
        }
    }
}

impl fmt::Display for ParastropheKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ParastropheKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        ParastropheKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown parastrophe kind {s:?}"))
    }
}

pub fn parastrophe(q: &CayleyTable, kind: ParastropheKind) -> CayleyTable {
    let n = q.order();
    let mut cells = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            let z = q.mul(x, y);
            let (row, col, val) = match kind {
                ParastropheKind::Star => (y, x, z),
                ParastropheKind::RightDivision => (x, z, y),
                ParastropheKind::LeftDivision => (z, y, x),
                ParastropheKind::RightDivisionStar => (z, x, y),
                ParastropheKind::LeftDivisionStar => (y, z, x),
            };
            cells[row * n + col] = val;
        }
    }
    CayleyTable::from_cells_unchecked(n, cells)
}

pub fn tables_equal(a: &CayleyTable, b: &CayleyTable) -> bool {
    a == b
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentRow {
    pub x: usize,
    pub alpha1_s2: Perm,
    pub beta2_t1: Perm,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub rows: Vec<ComponentRow>,
    /// Every `α₁S₂` and every `β₂T₁` is the identity.
    pub components_identity: bool,
    /// Whether each parastrophe equals the loop, in [`ParastropheKind::ALL`] order.
    pub equal: [(ParastropheKind, bool); 5],
}

impl EquivalenceReport {
    fn kind_equal(&self, kind: ParastropheKind) -> bool {
        self.equal.iter().find(|(k, _)| *k == kind).map(|(_, b)| *b).unwrap_or(false)
    }

    /// Both division parastrophes equal the loop.
    pub fn divisions_equal(&self) -> bool {
        self.kind_equal(ParastropheKind::RightDivision) && self.kind_equal(ParastropheKind::LeftDivision)
    }

    /// The transpose and both starred divisions equal the loop.
    pub fn others_equal(&self) -> bool {
        [ParastropheKind::Star, ParastropheKind::RightDivisionStar, ParastropheKind::LeftDivisionStar]
            .into_iter()
            .all(|k| self.kind_equal(k))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            out.push_str(&format!("x={} alpha1S2={} beta2T1={}\n", r.x, r.alpha1_s2, r.beta2_t1));
        }
        out.push_str(&format!("components_identity={}\n", self.components_identity));
        for (k, b) in &self.equal {
            out.push_str(&format!("parastrophe {k} equal={b}\n"));
        }
        out.push_str(&format!("divisions_equal={}\n", self.divisions_equal()));
        out.push_str(&format!("others_equal={}\n", self.others_equal()));
        out
    }
}

fn require_c(l: &LoopStructure) -> Result<()> {
    let c = is_c(l);
    if c.holds {
        Ok(())
    } else {
        Err(Error::IdentityFails(Box::new(c)))
    }
}

/// Per-element components of the constructed autotopisms and the
/// parastrophe equalities, with the biconditional between "all components are
/// the identity" and "both division parastrophes equal the loop", and the
/// implication to the remaining three, enforced as errors.
pub fn equivalence_report(l: &LoopStructure) -> Result<EquivalenceReport> {
    require_c(l)?;
    let mut rows = Vec::with_capacity(l.order());
    for x in l.elements() {
        let c = construct_in_c_loop(l, x)?;
        rows.push(ComponentRow { x, alpha1_s2: c.alpha1_s2().clone(), beta2_t1: c.beta2_t1().clone() });
    }
    let components_identity = rows.iter().all(|r| r.alpha1_s2.is_identity() && r.beta2_t1.is_identity());
    let equal = ParastropheKind::ALL.map(|k| (k, tables_equal(l.table(), &parastrophe(l.table(), k))));
    let report = EquivalenceReport { rows, components_identity, equal };
    if report.components_identity != report.divisions_equal() {
        return Err(Error::TheoremViolation(format!(
            "components identity = {} but division parastrophes equal = {}",
            report.components_identity,
            report.divisions_equal()
        )));
    }
    if report.divisions_equal() && !report.others_equal() {
        return Err(Error::TheoremViolation(
            "division parastrophes equal the loop but the other three do not".into(),
        ));
    }
    Ok(report)
}

/// All `α₁S₂` and `β₂T₁` are the identity. Checked against [`is_steiner`].
pub fn steiner_criterion(l: &LoopStructure) -> Result<bool> {
    let report = equivalence_report(l)?;
    let steiner = is_steiner(l).holds;
    if report.components_identity != steiner {
        return Err(Error::TheoremViolation(format!(
            "component criterion = {} but Steiner check = {steiner}",
            report.components_identity
        )));
    }
    Ok(report.components_identity)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::magma::as_loop;
    use ParastropheKind::*;

    #[test]
    fn kinds_parse() {
        for k in ParastropheKind::ALL {
            assert_eq!(k.as_str().parse::<ParastropheKind>().unwrap(), k);
        }
        assert!("inverse".parse::<ParastropheKind>().is_err());
    }

    #[test]
    fn defining_clauses() {
        let q = fixtures::table1();
        for kind in ParastropheKind::ALL {
            let p = parastrophe(&q, kind);
            for x in 0..12 {
                for y in 0..12 {
                    let z = q.mul(x, y);
                    let ok = match kind {
                        Star => p.mul(y, x) == z,
                        RightDivision => p.mul(x, z) == y,
                        LeftDivision => p.mul(z, y) == x,
                        RightDivisionStar => p.mul(z, x) == y,
                        LeftDivisionStar => p.mul(y, z) == x,
                    };
                    assert!(ok, "{kind} at {x},{y}");
                }
            }
        }
    }

    #[test]
    fn z2_is_totally_symmetric() {
        let z2 = fixtures::cyclic(2);
        for k in ParastropheKind::ALL {
            assert_eq!(parastrophe(&z2, k), z2);
        }
    }

    #[test]
    fn table1_right_division() {
        let q = fixtures::table1();
        let rdiv = parastrophe(&q, RightDivision);
        assert_eq!(rdiv.mul(4, 0), 5);
        assert!(!tables_equal(&q, &rdiv));
        assert!(tables_equal(&q, &q));
        let z3 = fixtures::cyclic(3);
        assert!(tables_equal(&z3, &parastrophe(&z3, Star)));
        assert!(!tables_equal(&z3, &fixtures::cyclic(2)));
    }

    #[test]
    fn involutions_and_derivations() {
        for (_, q) in fixtures::small_groups().into_iter().chain([("t1", fixtures::table1())]) {
            assert_eq!(parastrophe(&parastrophe(&q, Star), Star), q);
            assert_eq!(parastrophe(&parastrophe(&q, RightDivision), RightDivision), q);
            assert_eq!(parastrophe(&parastrophe(&q, LeftDivision), LeftDivision), q);
            // the starred conjugates and the transpose are composites of the two divisions
            let rdiv = parastrophe(&q, RightDivision);
            let ldiv = parastrophe(&q, LeftDivision);
            assert_eq!(parastrophe(&rdiv, LeftDivision), parastrophe(&q, LeftDivisionStar));
            assert_eq!(parastrophe(&ldiv, RightDivision), parastrophe(&q, RightDivisionStar));
            assert_eq!(parastrophe(&parastrophe(&rdiv, LeftDivision), RightDivision), parastrophe(&q, Star));
            assert_eq!(parastrophe(&rdiv, Star), parastrophe(&q, RightDivisionStar));
            assert_eq!(parastrophe(&ldiv, Star), parastrophe(&q, LeftDivisionStar));
        }
    }

    #[test]
    fn star_keeps_identity() {
        let s3 = fixtures::symmetric3();
        let t = parastrophe(&s3, Star);
        assert_ne!(t, s3);
        assert_eq!(as_loop(t).unwrap().identity(), 0);
    }

    #[test]
    fn report_on_table1() {
        let l = fixtures::table1_loop();
        let r = equivalence_report(&l).unwrap();
        assert_eq!(r.rows[4].alpha1_s2.to_cycle_string(), "(0 1 2)(3 4 5)(6 7 8)(9 10 11)");
        assert!(!r.components_identity);
        assert!(!r.divisions_equal());
        assert!(!steiner_criterion(&l).unwrap());
    }

    #[test]
    fn report_on_steiner_and_groups() {
        for k in 0..=3 {
            let l = as_loop(fixtures::elementary_abelian(k)).unwrap();
            let r = equivalence_report(&l).unwrap();
            assert!(r.components_identity && r.divisions_equal() && r.others_equal());
            assert!(steiner_criterion(&l).unwrap());
        }
        let z4 = as_loop(fixtures::cyclic(4)).unwrap();
        let r = equivalence_report(&z4).unwrap();
        assert_eq!(r.rows[1].alpha1_s2, z4.left_translation(2).unwrap().inverse());
        assert!(!r.rows[1].alpha1_s2.is_identity());
        assert!(!steiner_criterion(&z4).unwrap());
    }

    #[test]
    fn report_requires_c_loop() {
        let l = as_loop(fixtures::order5_nonassociative()).unwrap();
        assert_eq!(equivalence_report(&l).unwrap_err().kind(), "identity-fails");
        assert!(steiner_criterion(&l).is_err());
    }
}
