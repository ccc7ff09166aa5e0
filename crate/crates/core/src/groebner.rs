//! Buchberger's algorithm in two variables, normal forms, and
//! standard-monomial bases of Artinian quotients.
//!
//! The monomial order is fixed to deglex with `x > y` so every output is
//! reproducible bit-for-bit. All inputs in this crate are homogeneous, which
//! keeps S-polynomial degrees equal to their lcm degree and justifies the
//! degree cutoff below.

use crate::field::FieldSpec;
use crate::poly::{BiPoly, IdealGens, Monomial};

/// A reduced Groebner basis: monic, auto-reduced, sorted by leading
/// monomial. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    field: FieldSpec,
    basis: Vec<BiPoly>,
}

impl GroebnerBasis {
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn basis(&self) -> &[BiPoly] {
        &self.basis
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.basis.iter().map(|g| g.leading().expect("nonzero").0)
    }

    /// Remainder of `f` on division by the basis: zero iff `f` lies in the
    /// ideal, supported on standard monomials otherwise, and linear in `f`.
    pub fn normal_form(&self, f: &BiPoly) -> BiPoly {
        let mut rem = BiPoly::zero(self.field);
        let mut work = f.clone();
        'outer: while let Some((lm, lc)) = work.leading().map(|(m, c)| (*m, c.clone())) {
            for g in &self.basis {
                let (glm, _) = g.leading().expect("basis polynomials are nonzero");
                if glm.divides(&lm) {
                    // g is monic, so the reducer is lc * (lm/glm) * g
                    let mult = g.mul_term(&glm.quotient_of(&lm), &lc);
                    work = work.sub(&mult).expect("same field");
                    continue 'outer;
                }
            }
            // leading term irreducible: move it to the remainder
            let t = BiPoly::term(self.field, lm, lc);
            rem = rem.add(&t).expect("same field");
            work = work.sub(&t).expect("same field");
        }
        rem
    }

    pub fn contains(&self, f: &BiPoly) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Degree-`d` monomials not divisible by any leading monomial; their
    /// classes form a basis of the degree-`d` part of the quotient.
    /// Descending deglex order (`x^d` first).
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        Monomial::all_of_degree(d)
            .into_iter()
            .filter(|m| !self.leading_monomials().any(|lm| lm.divides(m)))
            .collect()
    }

    /// `Some(top)` when the quotient is Artinian, with `top` the least
    /// degree from which every graded piece vanishes. Artinian here means
    /// the leading monomials contain a pure power of `x` and of `y`; once a
    /// degree has no standard monomials, neither does any larger one.
    pub fn artinian_top_degree(&self) -> Option<u32> {
        let px = self
            .leading_monomials()
            .filter(|m| m.y_exp == 0)
            .map(|m| m.x_exp)
            .min()?;
        let py = self
            .leading_monomials()
            .filter(|m| m.x_exp == 0)
            .map(|m| m.y_exp)
            .min()?;
        Some(
            (0..=px + py)
                .find(|d| self.standard_monomials(*d).is_empty())
                .expect("no standard monomials of degree px+py-1 or higher"),
        )
    }
}

/// Compute the reduced Groebner basis of a homogeneous ideal.
pub fn buchberger(gens: &IdealGens) -> GroebnerBasis {
    let field = gens.field();
    let mut basis: Vec<BiPoly> = Vec::new();
    for g in gens.gens() {
        basis.push(make_monic(g));
    }
    basis.dedup();

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }

    while !pairs.is_empty() {
        // normal selection: smallest lcm degree first
        let best = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, (i, j))| pair_lcm(&basis, *i, *j).degree())
            .map(|(k, _)| k)
            .unwrap();
        let (i, j) = pairs.swap_remove(best);
        let lcm = pair_lcm(&basis, i, j);
        let (lmi, _) = basis[i].leading().unwrap();
        let (lmj, _) = basis[j].leading().unwrap();
        // coprime leading monomials: the S-polynomial reduces to zero
        if lcm == lmi.mul(lmj) {
            continue;
        }
        // degree cutoff: once pure powers x^px, y^py are in the basis, every
        // monomial of degree >= px+py-1 is divisible by one of them, so any
        // homogeneous S-polynomial of that degree reduces to zero
        if let Some(bound) = pure_power_bound(&basis) {
            if lcm.degree() >= bound {
                continue;
            }
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let gb_view = GroebnerBasis {
            field,
            basis: basis.clone(),
        };
        let rem = gb_view.normal_form(&s);
        if !rem.is_zero() {
            let rem = make_monic(&rem);
            for k in 0..basis.len() {
                pairs.push((k, basis.len()));
            }
            basis.push(rem);
        }
    }

    reduce_basis(field, basis)
}

fn pair_lcm(basis: &[BiPoly], i: usize, j: usize) -> Monomial {
    let (lmi, _) = basis[i].leading().unwrap();
    let (lmj, _) = basis[j].leading().unwrap();
    lmi.lcm(lmj)
}

fn pure_power_bound(basis: &[BiPoly]) -> Option<u32> {
    let lms = basis.iter().map(|g| g.leading().unwrap().0);
    let px = lms
        .clone()
        .filter(|m| m.y_exp == 0)
        .map(|m| m.x_exp)
        .min()?;
    let py = lms.filter(|m| m.x_exp == 0).map(|m| m.y_exp).min()?;
    Some(px + py - 1)
}

fn s_polynomial(f: &BiPoly, g: &BiPoly) -> BiPoly {
    let (lmf, _) = f.leading().unwrap();
    let (lmg, _) = g.leading().unwrap();
    let lcm = lmf.lcm(lmg);
    // both inputs are monic
    let fm = f.mul_term(&lmf.quotient_of(&lcm), &f.field().one());
    let gm = g.mul_term(&lmg.quotient_of(&lcm), &g.field().one());
    fm.sub(&gm).expect("same field")
}

fn make_monic(f: &BiPoly) -> BiPoly {
    let (_, lc) = f.leading().expect("monic of zero polynomial");
    f.scale(&lc.inv().expect("leading coefficient is nonzero"))
}

/// Minimalize and inter-reduce, then sort by leading monomial for a
/// canonical result.
fn reduce_basis(field: FieldSpec, mut basis: Vec<BiPoly>) -> GroebnerBasis {
    // drop any element whose leading monomial another element's divides
    let mut keep: Vec<BiPoly> = Vec::new();
    basis.sort_by_key(|g| *g.leading().unwrap().0);
    for (k, g) in basis.iter().enumerate() {
        let lm = g.leading().unwrap().0;
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(j, h)| j != k && h.leading().unwrap().0.divides(lm) && (j < k || h.leading().unwrap().0 != lm));
        if !redundant {
            keep.push(g.clone());
        }
    }
    // reduce the tail of each element against the others
    let mut reduced = Vec::with_capacity(keep.len());
    for k in 0..keep.len() {
        let others = GroebnerBasis {
            field,
            basis: keep
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != k)
                .map(|(_, h)| h.clone())
                .collect(),
        };
        let r = others.normal_form(&keep[k]);
        if !r.is_zero() {
            reduced.push(make_monic(&r));
        }
    }
    reduced.sort_by_key(|g| *g.leading().unwrap().0);
    GroebnerBasis {
        field,
        basis: reduced,
    }
}
