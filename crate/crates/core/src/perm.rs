//! Permutations of `{0..n-1}` acting on the right.
//!
//! A map is written after its argument (`i·p`), so `compose(p, q)` is "apply
//! `p`, then `q`". Every translation, autotopism component and constructed map
//! in this crate is a [`Perm`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    /// Builds a permutation from its image sequence, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidDegree);
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::NotBijection { value: v });
            }
            seen[v] = true;
        }
        Ok(Perm { images })
    }

    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDegree);
        }
        Ok(Perm { images: (0..n).collect() })
    }

    /// Callers guarantee `images` is a bijection.
    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Perm::from_images(images.clone()).is_ok());
        Perm { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of `i`. Panics if `i >= degree`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `i·compose(p, q) = (i·p)·q`.
    pub fn compose(&self, q: &Perm) -> Result<Perm> {
        if self.degree() != q.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: q.degree() });
        }
        Ok(Perm { images: self.images.iter().map(|&i| q.images[i]).collect() })
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Perm { images: inv }
    }

    pub fn pow(&self, k: i64) -> Perm {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut exp = k.unsigned_abs();
        let mut acc = Perm { images: (0..self.degree()).collect() };
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.compose(&sq).expect("same degree");
            }
            sq = sq.compose(&sq).expect("same degree");
            exp >>= 1;
        }
        acc
    }

    /// Disjoint cycles of length at least two, each starting at its smallest
    /// point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut i = self.images[start];
            while i != start {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Order of the permutation in the symmetric group.
    pub fn order(&self) -> usize {
        fn gcd(a: usize, b: usize) -> usize {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.cycles().iter().fold(1, |acc, c| acc / gcd(acc, c.len()) * c.len())
    }

    /// Canonical cycle notation; the identity is `()`.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    s.push(' ');
                }
                s.push_str(&p.to_string());
            }
            s.push(')');
        }
        s
    }

    /// Parses disjoint cycle notation on `n` points. Fixed points may be
    /// omitted or written as singletons, and `()` denotes the identity.
    pub fn parse_cycles(s: &str, n: usize) -> Result<Perm> {
        if n == 0 {
            return Err(Error::InvalidDegree);
        }
        let err = |position: usize, message: &str| Error::CycleParse { position, message: message.to_string() };
        let bytes = s.as_bytes();
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        let mut pos = 0;
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        loop {
            skip_ws(&mut pos);
            if pos == bytes.len() {
                break;
            }
            if bytes[pos] != b'(' {
                return Err(err(pos, "expected '('"));
            }
            pos += 1;
            let mut cycle: Vec<usize> = Vec::new();
            loop {
                skip_ws(&mut pos);
                if pos == bytes.len() {
                    return Err(err(pos, "unclosed cycle"));
                }
                match bytes[pos] {
                    b')' => {
                        pos += 1;
                        break;
                    }
                    b'0'..=b'9' => {
                        let start = pos;
                        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                            pos += 1;
                        }
                        let point: usize = s[start..pos].parse().map_err(|_| err(start, "number too large"))?;
                        if point >= n {
                            return Err(err(start, &format!("point {point} is not below {n}")));
                        }
                        if used[point] {
                            return Err(err(start, &format!("point {point} repeated")));
                        }
                        used[point] = true;
                        cycle.push(point);
                    }
                    _ => return Err(err(pos, "unexpected character")),
                }
            }
            for (k, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Perm { images })
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self.to_cycle_string())
    }
}

/// Parses cycle notation with the degree taken as one more than the largest
/// point mentioned. Prefer [`Perm::parse_cycles`] when the degree is known.
impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Perm> {
        let max = s
            .split(|c: char| !c.is_ascii_digit())
            .filter_map(|t| t.parse::<usize>().ok())
            .max()
            .unwrap_or(0);
        Perm::parse_cycles(s, max + 1)
    }
}

pub fn identity_perm(n: usize) -> Result<Perm> {
    Perm::identity(n)
}

pub fn compose(p: &Perm, q: &Perm) -> Result<Perm> {
    p.compose(q)
}

pub fn invert(p: &Perm) -> Perm {
    p.inverse()
}

pub fn power(p: &Perm, k: i64) -> Perm {
    p.pow(k)
}

pub fn parse_cycles(s: &str, n: usize) -> Result<Perm> {
    Perm::parse_cycles(s, n)
}

pub fn format_cycles(p: &Perm) -> String {
    p.to_cycle_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str, n: usize) -> Perm {
        Perm::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn identity_cases() {
        assert_eq!(identity_perm(3).unwrap().images(), &[0, 1, 2]);
        assert_eq!(identity_perm(12).unwrap().apply(7), 7);
        assert_eq!(identity_perm(1).unwrap().images(), &[0]);
        assert_eq!(identity_perm(0), Err(Error::InvalidDegree));
    }

    #[test]
    fn compose_three_cycles() {
        let c = p("(0 1 2)", 3);
        let d = p("(0 2 1)", 3);
        assert!(compose(&c, &d).unwrap().is_identity());
        // 0 -> 1 -> 2, 1 -> 2 -> 0, 2 -> 0 -> 1
        assert_eq!(compose(&c, &c).unwrap(), d);
        assert_eq!(compose(&c, &identity_perm(3).unwrap()).unwrap(), c);
    }

    #[test]
    fn compose_is_right_action() {
        let a = p("(0 1)", 3);
        let b = p("(1 2)", 3);
        // 0·a = 1, 1·b = 2
        assert_eq!(compose(&a, &b).unwrap().apply(0), 2);
        assert_eq!(compose(&b, &a).unwrap().apply(0), 1);
    }

    #[test]
    fn compose_degree_mismatch() {
        let a = identity_perm(3).unwrap();
        let b = identity_perm(4).unwrap();
        assert_eq!(compose(&a, &b), Err(Error::DegreeMismatch { left: 3, right: 4 }));
    }

    #[test]
    fn invert_cases() {
        assert_eq!(invert(&p("(0 1 2)", 3)), p("(0 2 1)", 3));
        assert!(invert(&identity_perm(5).unwrap()).is_identity());
        let a = p("(0 1 2)(3 4 5)(6 7 8)(9 10 11)", 12);
        assert_eq!(invert(&a).to_cycle_string(), "(0 2 1)(3 5 4)(6 8 7)(9 11 10)");
    }

    #[test]
    fn power_cases() {
        let c = p("(0 1 2)", 3);
        assert!(power(&c, 3).is_identity());
        assert!(power(&c, 0).is_identity());
        assert_eq!(power(&c, -1), invert(&c));
        assert_eq!(power(&c, -4), invert(&c));
    }

    #[test]
    fn parse_and_format() {
        let a = p("(0 1 2)(3 4 5)(6 7 8)(9 10 11)", 12);
        assert_eq!(a.images(), &[1, 2, 0, 4, 5, 3, 7, 8, 6, 10, 11, 9]);
        assert_eq!(format_cycles(&identity_perm(12).unwrap()), "()");
        let mu = p("(0 13 5 14)(1 15 4 12)(2 9 10 8)(3 7 11 6)", 16);
        assert_eq!(mu.degree(), 16);
        assert_eq!(mu.order(), 4);
        // singletons, stray whitespace, unordered cycles
        assert_eq!(p("  ( 4 3 ) (0)(2 1 )", 5).to_cycle_string(), "(1 2)(3 4)");
        assert!(p("()", 4).is_identity());
        assert!(p("", 4).is_identity());
    }

    #[test]
    fn parse_errors_carry_position() {
        let e = Perm::parse_cycles("(0 1)(1 2)", 3).unwrap_err();
        assert!(matches!(e, Error::CycleParse { position: 6, .. }), "{e:?}");
        let e = Perm::parse_cycles("(0 3)", 3).unwrap_err();
        assert!(matches!(e, Error::CycleParse { position: 3, .. }), "{e:?}");
        let e = Perm::parse_cycles("(0 1", 3).unwrap_err();
        assert!(matches!(e, Error::CycleParse { position: 4, .. }), "{e:?}");
        let e = Perm::parse_cycles("0 1)", 3).unwrap_err();
        assert!(matches!(e, Error::CycleParse { position: 0, .. }), "{e:?}");
        let e = Perm::parse_cycles("(0 ,1)", 3).unwrap_err();
        assert!(matches!(e, Error::CycleParse { position: 3, .. }), "{e:?}");
    }

    #[test]
    fn from_images_rejects_non_bijections() {
        assert_eq!(Perm::from_images(vec![0, 0, 1]), Err(Error::NotBijection { value: 0 }));
        assert_eq!(Perm::from_images(vec![0, 3, 1]), Err(Error::NotBijection { value: 3 }));
        assert_eq!(Perm::from_images(vec![]), Err(Error::InvalidDegree));
    }

    #[test]
    fn from_str_infers_degree() {
        let a: Perm = "(0 2)".parse().unwrap();
        assert_eq!(a.degree(), 3);
    }

    fn arb_perm(max_n: usize) -> impl Strategy<Value = Perm> {
        (1..=max_n)
            .prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|v| Perm::from_images(v).unwrap())
    }

    fn arb_triple(max_n: usize) -> impl Strategy<Value = (Perm, Perm, Perm)> {
        (1..=max_n).prop_flat_map(|n| {
            let one = || Just((0..n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Perm::from_images(v).unwrap());
            (one(), one(), one())
        })
    }

    proptest! {
        #[test]
        fn cycle_notation_round_trips(a in arb_perm(20)) {
            let s = format_cycles(&a);
            prop_assert_eq!(parse_cycles(&s, a.degree()).unwrap(), a);
        }

        #[test]
        fn group_axioms((a, b, c) in arb_triple(9)) {
            let id = identity_perm(a.degree()).unwrap();
            let ab_c = a.compose(&b).unwrap().compose(&c).unwrap();
            let a_bc = a.compose(&b.compose(&c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
            prop_assert_eq!(a.compose(&id).unwrap(), a.clone());
            prop_assert_eq!(id.compose(&a).unwrap(), a.clone());
            prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
            prop_assert!(a.inverse().compose(&a).unwrap().is_identity());
        }

        #[test]
        fn power_matches_repeated_composition(a in arb_perm(8), k in -6i64..=6) {
            let mut expect = identity_perm(a.degree()).unwrap();
            let step = if k < 0 { a.inverse() } else { a.clone() };
            for _ in 0..k.unsigned_abs() {
                expect = expect.compose(&step).unwrap();
            }
            prop_assert_eq!(power(&a, k), expect);
            prop_assert!(power(&a, a.order() as i64).is_identity());
        }
    }
}
