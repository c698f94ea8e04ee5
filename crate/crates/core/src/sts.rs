//! Triple systems: the family of CS-autotopism triples of a non-Steiner
//! C-loop, and checks of the Steiner triple system axioms.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::autotopism::{compose_atp, cs_pair, Autotopism};
use crate::error::{Error, Result};
use crate::identities::{is_c, is_steiner};
use crate::magma::LoopStructure;
use crate::perm::Perm;

/// A ground set with a family of 3-element index sets over it. Triples are
/// unordered; the stored order is only the order they were produced in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleSystem<T> {
    ground: Vec<T>,
    triples: Vec<[usize; 3]>,
}

impl<T> TripleSystem<T> {
    /// Only checks that triple members index into the ground set; the axioms
    /// are checked by [`verify_sts`].
    pub fn new(ground: Vec<T>, triples: Vec<[usize; 3]>) -> Result<Self> {
        for (i, t) in triples.iter().enumerate() {
            if let Some(&point) = t.iter().find(|&&p| p >= ground.len()) {
                return Err(Error::TriplePointOutOfRange { triple: i, point, size: ground.len() });
            }
        }
        Ok(TripleSystem { ground, triples })
    }

    pub fn ground(&self) -> &[T] {
        &self.ground
    }

    pub fn triples(&self) -> &[[usize; 3]] {
        &self.triples
    }
}

impl TripleSystem<usize> {
    /// Ground set `0..points`.
    pub fn on_points(points: usize, triples: Vec<[usize; 3]>) -> Result<Self> {
        Self::new((0..points).collect(), triples)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairFailure {
    /// No triple contains the pair.
    Uncovered { a: usize, b: usize },
    /// More than one triple contains the pair.
    CoveredTwice { a: usize, b: usize, first: usize, second: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StsReport {
    /// First triple with a repeated member.
    pub repeated_member: Option<usize>,
    /// First pair of distinct points, in lexicographic order, not covered by
    /// exactly one triple.
    pub pair_failure: Option<PairFailure>,
}

impl StsReport {
    pub fn passes(&self) -> bool {
        self.repeated_member.is_none() && self.pair_failure.is_none()
    }
}

impl std::fmt::Display for StsReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.repeated_member {
            None => writeln!(f, "distinct_members=pass")?,
            Some(t) => writeln!(f, "distinct_members=fail triple={t}")?,
        }
        match self.pair_failure {
            None => write!(f, "unique_cover=pass"),
            Some(PairFailure::Uncovered { a, b }) => write!(f, "unique_cover=fail pair=({a},{b}) uncovered"),
            Some(PairFailure::CoveredTwice { a, b, first, second }) => {
                write!(f, "unique_cover=fail pair=({a},{b}) in triples {first} and {second}")
            }
        }
    }
}

pub fn verify_sts<T>(t: &TripleSystem<T>) -> StsReport {
    let repeated_member = t.triples.iter().position(|&[a, b, c]| a == b || b == c || a == c);
    let n = t.ground.len();
    let mut cover: Vec<Option<usize>> = vec![None; n * n];
    let mut twice: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
    for (i, tr) in t.triples.iter().enumerate() {
        for (p, q) in [(tr[0], tr[1]), (tr[0], tr[2]), (tr[1], tr[2])] {
            if p == q {
                continue;
            }
            let (a, b) = (p.min(q), p.max(q));
            match cover[a * n + b] {
                None => cover[a * n + b] = Some(i),
                Some(first) => {
                    twice.entry((a, b)).or_insert((first, i));
                }
            }
        }
    }
    let mut pair_failure = None;
    'scan: for a in 0..n {
        for b in a + 1..n {
            if let Some(&(first, second)) = twice.get(&(a, b)) {
                pair_failure = Some(PairFailure::CoveredTwice { a, b, first, second });
                break 'scan;
            }
            if cover[a * n + b].is_none() {
                pair_failure = Some(PairFailure::Uncovered { a, b });
                break 'scan;
            }
        }
    }
    StsReport { repeated_member, pair_failure }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CardinalityReport {
    pub triples: usize,
    pub residue: usize,
    /// The count is 1 or 3 mod 6.
    pub admissible: bool,
}

pub fn cardinality_check<T>(t: &TripleSystem<T>) -> CardinalityReport {
    let triples = t.triples.len();
    let residue = triples % 6;
    CardinalityReport { triples, residue, admissible: residue == 1 || residue == 3 }
}

/// Where a triple came from: base index and element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Source {
    pub base: usize,
    pub x: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dropped {
    pub source: Source,
    pub reason: String,
}

/// The family built from CS pairs. Each triple is stored as
/// `[first, second, product]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsFamily {
    pub system: TripleSystem<Autotopism>,
    /// Every `(base, x)` that produced each triple.
    pub sources: Vec<Vec<Source>>,
    pub dropped: Vec<Dropped>,
}

impl CsFamily {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# index set: (base, x) in lexicographic order over x with x^2 != e");
        let _ = writeln!(out, "ground {}", self.system.ground.len());
        for (i, a) in self.system.ground.iter().enumerate() {
            let _ = writeln!(out, "q{i} = {a}");
        }
        let _ = writeln!(out, "triples {}", self.system.triples.len());
        for (t, src) in self.system.triples.iter().zip(&self.sources) {
            let from: Vec<String> = src.iter().map(|s| format!("b{}x{}", s.base, s.x)).collect();
            let _ = writeln!(out, "{{q{}, q{}, q{}}} from {}", t[0], t[1], t[2], from.join(" "));
        }
        for d in &self.dropped {
            let _ = writeln!(out, "dropped b{}x{}: {}", d.source.base, d.source.x, d.reason);
        }
        out
    }
}

/// Builds the triples `{(S₁,T₁,ℛ₁), (S₂,T₂,ℛ₂), (S₁S₂,T₁T₂,ℛ₁ℛ₂)}` for every
/// base (in order) and every `x` with `x² ≠ e` (in element order). Equal
/// autotopisms are merged in the ground set and equal triples are merged,
/// keeping every source. An empty `bases` means the identity triple only.
pub fn build_cs_family(l: &LoopStructure, bases: &[Autotopism]) -> Result<CsFamily> {
    let c = is_c(l);
    if !c.holds {
        return Err(Error::IdentityFails(Box::new(c)));
    }
    if is_steiner(l).holds {
        return Err(Error::SteinerInput);
    }
    let default = [Autotopism::identity(l)];
    let bases = if bases.is_empty() { &default[..] } else { bases };

    let mut ground: Vec<Autotopism> = Vec::new();
    let mut index: HashMap<Autotopism, usize> = HashMap::new();
    let mut intern = |a: Autotopism| -> usize {
        *index.entry(a.clone()).or_insert_with(|| {
            ground.push(a);
            ground.len() - 1
        })
    };
    let mut triples: Vec<[usize; 3]> = Vec::new();
    let mut sources: Vec<Vec<Source>> = Vec::new();
    let mut dropped = Vec::new();

    for (bi, base) in bases.iter().enumerate() {
        for x in l.elements().filter(|&x| l.square(x) != l.identity()) {
            let source = Source { base: bi, x };
            let pair = cs_pair(l, x, base)?;
            let product = compose_atp(l, &pair.first, &pair.second)?;
            let t = [intern(pair.first), intern(pair.second), intern(product)];
            if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
                dropped.push(Dropped { source, reason: format!("members collide: q{} q{} q{}", t[0], t[1], t[2]) });
                continue;
            }
            let mut key = t;
            key.sort_unstable();
            match triples.iter().position(|s| {
                let mut s = *s;
                s.sort_unstable();
                s == key
            }) {
                Some(i) => sources[i].push(source),
                None => {
                    triples.push(t);
                    sources.push(vec![source]);
                }
            }
        }
    }
    if triples.is_empty() {
        return Err(Error::EmptyFamily);
    }
    Ok(CsFamily { system: TripleSystem::new(ground, triples)?, sources, dropped })
}

/// Parses base autotopisms, one per line as `U ; V ; W` in cycle notation.
/// Blank lines and lines starting with `#` are skipped. Each triple is verified.
pub fn parse_bases(text: &str, l: &LoopStructure) -> Result<Vec<Autotopism>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = trimmed.split(';').collect();
        if parts.len() != 3 {
            return Err(Error::BasesFormat { line: line_no, message: format!("expected 3 components, found {}", parts.len()) });
        }
        let perms = parts
            .iter()
            .map(|p| Perm::parse_cycles(p, l.order()))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::BasesFormat { line: line_no, message: e.to_string() })?;
        let [u, v, w]: [Perm; 3] = perms.try_into().expect("three components");
        out.push(Autotopism::verify(l, u, v, w).map_err(|e| Error::BasesFormat { line: line_no, message: e.to_string() })?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::magma::as_loop;

    fn fano() -> TripleSystem<usize> {
        TripleSystem::on_points(7, fixtures::FANO.to_vec()).unwrap()
    }

    #[test]
    fn fano_passes() {
        let r = verify_sts(&fano());
        assert!(r.passes(), "{r}");
        let c = cardinality_check(&fano());
        assert_eq!((c.triples, c.residue, c.admissible), (7, 1, true));
    }

    #[test]
    fn violations_are_reported() {
        let mut twice = fixtures::FANO.to_vec();
        twice.push([0, 1, 2]);
        let r = verify_sts(&TripleSystem::on_points(7, twice).unwrap());
        assert_eq!(r.repeated_member, None);
        assert_eq!(r.pair_failure, Some(PairFailure::CoveredTwice { a: 0, b: 1, first: 0, second: 7 }));

        let mut repeated = fixtures::FANO.to_vec();
        repeated[3] = [3, 3, 6];
        let r = verify_sts(&TripleSystem::on_points(7, repeated).unwrap());
        assert_eq!(r.repeated_member, Some(3));
        assert!(!r.passes());

        let r = verify_sts(&TripleSystem::on_points(4, vec![[0, 1, 2]]).unwrap());
        assert_eq!(r.pair_failure, Some(PairFailure::Uncovered { a: 0, b: 3 }));
    }

    #[test]
    fn cardinality_rule() {
        let expect = [false, true, false, true, false, false];
        for r in 0..30usize {
            let t = TripleSystem::on_points(3, vec![[0, 1, 2]; r]).unwrap();
            assert_eq!(cardinality_check(&t).admissible, expect[r % 6], "r={r}");
        }
    }

    #[test]
    fn out_of_range_triple() {
        assert_eq!(
            TripleSystem::on_points(3, vec![[0, 1, 3]]),
            Err(Error::TriplePointOutOfRange { triple: 0, point: 3, size: 3 })
        );
    }

    #[test]
    fn steiner_inputs_are_rejected() {
        for t in [fixtures::cyclic(1), fixtures::cyclic(2), fixtures::elementary_abelian(3)] {
            assert_eq!(build_cs_family(&as_loop(t).unwrap(), &[]), Err(Error::SteinerInput));
        }
    }

    #[test]
    fn table1_family_shape() {
        let l = fixtures::table1_loop();
        let fam = build_cs_family(&l, &[]).unwrap();
        // squares split the non-identity-square elements into two classes
        assert_eq!(fam.system.triples().len(), 2);
        assert_eq!(fam.system.ground().len(), 6);
        assert!(fam.dropped.is_empty());
        let xs: Vec<Vec<usize>> = fam.sources.iter().map(|s| s.iter().map(|s| s.x).collect()).collect();
        assert_eq!(xs, vec![vec![1, 4, 7, 9], vec![2, 5, 8, 10]]);
        for t in fam.system.triples() {
            let g = fam.system.ground();
            assert_eq!(compose_atp(&l, &g[t[0]], &g[t[1]]).unwrap(), g[t[2]]);
            assert_ne!(g[t[0]], g[t[1]]);
        }
    }

    #[test]
    fn bases_file() {
        let l = fixtures::table1_loop();
        let text = "# base triples\n() ; () ; ()\n(0 1 2)(3 4 5)(6 7 8)(9 10 11) ; (0 2 1)(3 5 4)(6 8 7)(9 11 10) ; ()\n\n";
        let bases = parse_bases(text, &l).unwrap();
        assert_eq!(bases.len(), 2);
        assert!(bases[0].is_identity());
        assert!(matches!(parse_bases("() ; ()\n", &l), Err(Error::BasesFormat { line: 1, .. })));
        assert!(matches!(parse_bases("(0 1) ; () ; ()\n", &l), Err(Error::BasesFormat { line: 1, .. })));
        assert!(matches!(parse_bases("(0 1 ; () ; ()\n", &l), Err(Error::BasesFormat { line: 1, .. })));
    }
}
