//! Autotopisms `(U, V, W)` of a loop, satisfying `xU·yV = (x·y)W`.
//!
//! Components act on the right and triples compose componentwise, so
//! `compose_atp(a, b)` applies `a` first. For a C-loop and an element `x`,
//! the left and right central triples `(L_x², I, L_x²)` and `(I, R_x², R_x²)`
//! multiplied onto a base autotopism give the CS pair
//! `(S₁, T₁, ℛ₁)`, `(S₂, T₂, ℛ₂)`, from which
//! `(α₁S₂, β₁T₂, γ₁ℛ₂) = (S₁⁻¹S₂, T₁⁻¹T₂, ℛ₁⁻¹ℛ₂)` is constructed.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result, Side};
use crate::identities::is_c;
use crate::magma::LoopStructure;
use crate::perm::Perm;

/// Largest order accepted by [`enumerate_autotopisms`].
pub const ENUMERATION_LIMIT: usize = 8;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Autotopism {
    u: Perm,
    v: Perm,
    w: Perm,
}

impl Autotopism {
    pub fn verify(l: &LoopStructure, u: Perm, v: Perm, w: Perm) -> Result<Self> {
        let n = l.order();
        for p in [&u, &v, &w] {
            if p.degree() != n {
                return Err(Error::DegreeMismatch { left: n, right: p.degree() });
            }
        }
        if let Some((x, y)) = first_failure(l, &u, &v, &w) {
            return Err(Error::NotAutotopism { x, y });
        }
        Ok(Autotopism { u, v, w })
    }

    pub fn identity(l: &LoopStructure) -> Self {
        let id = Perm::identity(l.order()).expect("loops are nonempty");
        Autotopism { u: id.clone(), v: id.clone(), w: id }
    }

    pub fn u(&self) -> &Perm {
        &self.u
    }

    pub fn v(&self) -> &Perm {
        &self.v
    }

    pub fn w(&self) -> &Perm {
        &self.w
    }

    pub fn components(&self) -> [&Perm; 3] {
        [&self.u, &self.v, &self.w]
    }

    pub fn order(&self) -> usize {
        self.u.degree()
    }

    pub fn is_identity(&self) -> bool {
        self.components().iter().all(|p| p.is_identity())
    }

    /// Componentwise product of two autotopisms of the same loop. Closure of
    /// the autotopism group makes re-verification unnecessary here.
    fn product(&self, other: &Autotopism) -> Result<Autotopism> {
        Ok(Autotopism {
            u: self.u.compose(&other.u)?,
            v: self.v.compose(&other.v)?,
            w: self.w.compose(&other.w)?,
        })
    }
}

impl fmt::Display for Autotopism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.u, self.v, self.w)
    }
}

fn first_failure(l: &LoopStructure, u: &Perm, v: &Perm, w: &Perm) -> Option<(usize, usize)> {
    let n = l.order();
    (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| l.mul(u.apply(x), v.apply(y)) != w.apply(l.mul(x, y)))
}

pub fn verify(l: &LoopStructure, u: Perm, v: Perm, w: Perm) -> Result<Autotopism> {
    Autotopism::verify(l, u, v, w)
}

/// Componentwise composite, re-verified against `l`.
pub fn compose_atp(l: &LoopStructure, a: &Autotopism, b: &Autotopism) -> Result<Autotopism> {
    let p = a.product(b)?;
    Autotopism::verify(l, p.u, p.v, p.w)
}

pub fn invert_atp(l: &LoopStructure, a: &Autotopism) -> Result<Autotopism> {
    Autotopism::verify(l, a.u.inverse(), a.v.inverse(), a.w.inverse())
}

fn check_x(l: &LoopStructure, x: usize) -> Result<()> {
    if x >= l.order() {
        return Err(Error::ElementOutOfRange { element: x, order: l.order() });
    }
    Ok(())
}

/// `(L_x², I, L_x²)`; it is an autotopism for every `x` exactly when `l` is an LC-loop.
pub fn lc_autotopism(l: &LoopStructure, x: usize) -> Result<Autotopism> {
    check_x(l, x)?;
    let lx2 = l.left_translation(x)?.pow(2);
    let id = Perm::identity(l.order())?;
    Autotopism::verify(l, lx2.clone(), id, lx2).map_err(|e| match e {
        Error::NotAutotopism { x: a, y: b } => Error::NotCentral { side: Side::Left, x, pair: (a, b) },
        other => other,
    })
}

/// `(I, R_x², R_x²)`; it is an autotopism for every `x` exactly when `l` is an RC-loop.
pub fn rc_autotopism(l: &LoopStructure, x: usize) -> Result<Autotopism> {
    check_x(l, x)?;
    let rx2 = l.right_translation(x)?.pow(2);
    let id = Perm::identity(l.order())?;
    Autotopism::verify(l, id, rx2.clone(), rx2).map_err(|e| match e {
        Error::NotAutotopism { x: a, y: b } => Error::NotCentral { side: Side::Right, x, pair: (a, b) },
        other => other,
    })
}

/// The pair `(S₁, T₁, ℛ₁) = base·(L_x², I, L_x²)` and
/// `(S₂, T₂, ℛ₂) = base·(I, R_x², R_x²)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CsPair {
    pub x: usize,
    pub base: Autotopism,
    pub first: Autotopism,
    pub second: Autotopism,
}

pub fn cs_pair(l: &LoopStructure, x: usize, base: &Autotopism) -> Result<CsPair> {
    let first = compose_atp(l, base, &lc_autotopism(l, x)?)?;
    let second = compose_atp(l, base, &rc_autotopism(l, x)?)?;
    Ok(CsPair { x, base: base.clone(), first, second })
}

fn chain(perms: &[&Perm]) -> Perm {
    let (head, rest) = perms.split_first().expect("nonempty chain");
    rest.iter().fold((*head).clone(), |acc, p| acc.compose(p).expect("equal degrees"))
}

impl CsPair {
    /// `(S₁⁻¹S₂, T₁⁻¹T₂, ℛ₁⁻¹ℛ₂)`, the constructed autotopism in factored form.
    pub fn forward_factored(&self) -> (Perm, Perm, Perm) {
        let (a, b) = (&self.first, &self.second);
        (
            chain(&[&a.u.inverse(), &b.u]),
            chain(&[&a.v.inverse(), &b.v]),
            chain(&[&a.w.inverse(), &b.w]),
        )
    }

    /// `(S₂⁻¹S₁, T₂⁻¹T₁, ℛ₂⁻¹ℛ₁)`.
    pub fn inverse_factored(&self) -> (Perm, Perm, Perm) {
        let (a, b) = (&self.first, &self.second);
        (
            chain(&[&b.u.inverse(), &a.u]),
            chain(&[&b.v.inverse(), &a.v]),
            chain(&[&b.w.inverse(), &a.w]),
        )
    }

    /// Checks the four relations
    /// `L_x² = S₂⁻¹S₁`, `R_x² = T₁⁻¹T₂`, `R_x⁻²L_x² = ℛ₂⁻¹ℛ₁` and
    /// `ℛ₁⁻¹ℛ₂T₂⁻¹T₁S₂⁻¹S₁ = I`.
    pub fn check_relations(&self, l: &LoopStructure) -> Result<()> {
        let lx2 = l.left_translation(self.x)?.pow(2);
        let rx2 = l.right_translation(self.x)?.pow(2);
        let (s1, t1, r1) = (&self.first.u, &self.first.v, &self.first.w);
        let (s2, t2, r2) = (&self.second.u, &self.second.v, &self.second.w);
        let fail = |what: &str| Err(Error::TheoremViolation(format!("x={}: {what}", self.x)));
        if chain(&[&s2.inverse(), s1]) != lx2 {
            return fail("L_x^2 != S2^-1 S1");
        }
        if chain(&[&t1.inverse(), t2]) != rx2 {
            return fail("R_x^2 != T1^-1 T2");
        }
        if chain(&[&rx2.inverse(), &lx2]) != chain(&[&r2.inverse(), r1]) {
            return fail("R_x^-2 L_x^2 != R2^-1 R1");
        }
        let loop_product = chain(&[&r1.inverse(), r2, &t2.inverse(), t1, &s2.inverse(), s1]);
        if !loop_product.is_identity() {
            return fail("R1^-1 R2 T2^-1 T1 S2^-1 S1 != I");
        }
        Ok(())
    }
}

/// The constructed autotopism `(α₁S₂, β₁T₂, γ₁ℛ₂)` for one element together
/// with its inverse `(α₂S₁, β₂T₁, γ₂ℛ₁)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constructed {
    pub x: usize,
    pub square: usize,
    pub forward: Autotopism,
    pub inverse: Autotopism,
    /// `x² = e`, so both triples are the identity.
    pub trivial: bool,
}

impl Constructed {
    /// `α₁S₂`, the first component of the forward triple.
    pub fn alpha1_s2(&self) -> &Perm {
        self.forward.u()
    }

    /// `β₁T₂`.
    pub fn beta1_t2(&self) -> &Perm {
        self.forward.v()
    }

    /// `γ₁ℛ₂`.
    pub fn gamma1_r2(&self) -> &Perm {
        self.forward.w()
    }

    /// `β₂T₁`, the second component of the inverse triple.
    pub fn beta2_t1(&self) -> &Perm {
        self.inverse.v()
    }
}

/// Builds the autotopism of a C-loop attached to `x`.
///
/// Computed directly: `α₁S₂ = L_{x²}⁻¹`, `β₁T₂ = R_{x²}` and
/// `γ₁ℛ₂ : z ↦ (x⁻²·z)·x²`. The second bracketing `x⁻²·(z·x²)` is compared
/// at every point.
pub fn constructed_autotopism(l: &LoopStructure, x: usize) -> Result<Constructed> {
    let c = is_c(l);
    if !c.holds {
        return Err(Error::IdentityFails(Box::new(c)));
    }
    construct_in_c_loop(l, x)
}

/// Same as [`constructed_autotopism`] without the C-identity pre-check.
pub(crate) fn construct_in_c_loop(l: &LoopStructure, x: usize) -> Result<Constructed> {
    check_x(l, x)?;
    let e = l.identity();
    let square = l.square(x);
    if square == e {
        let id = Autotopism::identity(l);
        return Ok(Constructed { x, square, forward: id.clone(), inverse: id, trivial: true });
    }
    let u = l.left_translation(square)?.inverse();
    let v = l.right_translation(square)?;
    let inv_square = l.element_power(x, -2)?;
    let mut w = Vec::with_capacity(l.order());
    for z in l.elements() {
        let left = l.mul(l.mul(inv_square, z), square);
        let right = l.mul(inv_square, l.mul(z, square));
        if left != right {
            return Err(Error::BracketingMismatch { z, left, right });
        }
        w.push(left);
    }
    let w = Perm::from_images(w)?;
    let forward = Autotopism::verify(l, u, v, w)?;
    let inverse = invert_atp(l, &forward)?;
    Ok(Constructed { x, square, forward, inverse, trivial: false })
}

/// Every autotopism of a loop of order at most [`ENUMERATION_LIMIT`], sorted.
///
/// Setting `y = e` in `xU·yV = (xy)W` gives `W = U·R_b` with `b = eV`, and
/// setting `x = e` gives `yV = a \ yW` with `a = eU`. So each pair `(U, b)`
/// determines at most one candidate, which is then fully verified.
pub fn enumerate_autotopisms(l: &LoopStructure) -> Result<Vec<Autotopism>> {
    let n = l.order();
    if n > ENUMERATION_LIMIT {
        return Err(Error::EnumerationTooLarge { order: n, max: ENUMERATION_LIMIT });
    }
    let e = l.identity();
    let table = l.table();
    let mut out = Vec::new();
    for images in (0..n).permutations(n) {
        let u = Perm::from_images_unchecked(images);
        let a = u.apply(e);
        for b in 0..n {
            let w: Vec<usize> = (0..n).map(|x| l.mul(u.apply(x), b)).collect();
            let v: Vec<usize> = (0..n).map(|y| table.left_div(a, w[y])).collect();
            let (v, w) = (Perm::from_images_unchecked(v), Perm::from_images_unchecked(w));
            if first_failure(l, &u, &v, &w).is_none() {
                out.push(Autotopism { u: u.clone(), v, w });
            }
        }
    }
    out.sort();
    Ok(out)
}
