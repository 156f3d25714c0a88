//! Buchberger's algorithm over the rationals in degrevlex order (X > Y > Z),
//! and the smoothness test for plane quartics built on it.
//!
//! The smoothness test uses the cone argument: the partial derivatives of a
//! homogeneous `F` cut out a cone in affine 3-space, and that cone is the
//! origin alone exactly when the quotient by `(F_X, F_Y, F_Z)` is finite
//! dimensional. By Euler's identity `F` itself lies in that ideal, so the
//! curve is smooth iff the cone is trivial.

use std::borrow::Borrow;

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{Axis, Monomial, Polynomial};

/// Generators of an ideal. Never contains the zero polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealBasis {
    generators: Vec<Polynomial>,
}

impl IdealBasis {
    pub fn new(generators: Vec<Polynomial>) -> Result<Self> {
        if generators.iter().any(Polynomial::is_zero) {
            return Err(Error::ZeroPolynomial);
        }
        Ok(IdealBasis { generators })
    }

    /// Builds a basis from arbitrary polynomials, discarding zeros.
    pub fn from_nonzero<I: IntoIterator<Item = Polynomial>>(polys: I) -> Self {
        IdealBasis {
            generators: polys.into_iter().filter(|p| !p.is_zero()).collect(),
        }
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }
}

/// A reduced Gröbner basis in degrevlex order, sorted by descending leading
/// monomial. Every element is monic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| *g.leading_term().expect("basis elements are nonzero").0)
            .collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, &self.elements)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn is_zero_dimensional(&self) -> bool {
        quotient_is_finite_dimensional(self)
    }
}

pub fn leading_monomial(f: &Polynomial) -> Result<Monomial> {
    f.leading_term().map(|(m, _)| *m).ok_or(Error::ZeroPolynomial)
}

/// Result of multivariate division: `f = sum(quotients[i] * basis[i]) + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Reduces `f` modulo `basis`, taking at each step the largest remaining
/// term and the first basis element whose leading monomial divides it.
/// With `full` unset, stops at the first irreducible leading term and keeps
/// the tail as is. `on_step(i, c, m)` is told that `c * m * basis[i]` was
/// subtracted.
fn reduce_with<P, F>(f: &Polynomial, basis: &[P], full: bool, mut on_step: F) -> Polynomial
where
    P: Borrow<Polynomial>,
    F: FnMut(usize, &BigRational, &Monomial),
{
    let leads: Vec<(Monomial, BigRational)> = basis
        .iter()
        .map(|g| {
            let (m, c) = g.borrow().leading_term().expect("basis elements must be nonzero");
            (*m, c.clone())
        })
        .collect();

    let mut rest = f.clone();
    let mut remainder = Polynomial::zero();
    while let Some((m, c)) = rest.leading_term() {
        let (m, c) = (*m, c.clone());
        let divisor = leads
            .iter()
            .enumerate()
            .find_map(|(i, (lm, lc))| lm.divide_into(&m).map(|q| (i, q, lc)));
        match divisor {
            Some((i, shift, lc)) => {
                let factor = &c / lc;
                rest.sub_scaled_shifted(&factor, &shift, basis[i].borrow());
                on_step(i, &factor, &shift);
            }
            None if !full => return &remainder + &rest,
            None => {
                rest.add_term(m, -c.clone());
                remainder.add_term(m, c);
            }
        }
    }
    remainder
}

/// Remainder of `f` on division by `basis`: no term of the result is
/// divisible by any leading monomial of `basis`.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    reduce_with(f, basis, true, |_, _, _| {})
}

/// Division with quotients, for ideal-membership certificates.
pub fn divide(f: &Polynomial, basis: &[Polynomial]) -> Division {
    let mut quotients = vec![Polynomial::zero(); basis.len()];
    let remainder = reduce_with(f, basis, true, |i, c, m| quotients[i].add_term(*m, c.clone()));
    Division {
        quotients,
        remainder,
    }
}

pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (mf, cf) = f.leading_term().expect("nonzero");
    let (mg, cg) = g.leading_term().expect("nonzero");
    let lcm = mf.lcm(mg);
    let a = f.shift(&mf.divide_into(&lcm).unwrap()).scale(&cf.recip());
    let b = g.shift(&mg.divide_into(&lcm).unwrap()).scale(&cg.recip());
    &a - &b
}

/// A polynomial together with (optionally) its expression in terms of the
/// original generators.
#[derive(Clone)]
struct Tracked {
    poly: Polynomial,
    cofactors: Option<Vec<Polynomial>>,
}

impl Tracked {
    fn lm(&self) -> Monomial {
        *self.poly.leading_term().expect("nonzero").0
    }

    fn scaled(&self, c: &BigRational) -> Tracked {
        Tracked {
            poly: self.poly.scale(c),
            cofactors: self
                .cofactors
                .as_ref()
                .map(|cs| cs.iter().map(|q| q.scale(c)).collect()),
        }
    }

    fn monic(self) -> Tracked {
        let lc = self.poly.leading_term().expect("nonzero").1.clone();
        if lc.is_one() {
            self
        } else {
            self.scaled(&lc.recip())
        }
    }

    /// `self -= c * m * other`.
    fn sub_scaled_shifted(&mut self, c: &BigRational, m: &Monomial, other: &Tracked) {
        self.poly.sub_scaled_shifted(c, m, &other.poly);
        if let (Some(mine), Some(theirs)) = (self.cofactors.as_mut(), other.cofactors.as_ref()) {
            for (a, b) in mine.iter_mut().zip(theirs) {
                a.sub_scaled_shifted(c, m, b);
            }
        }
    }

    /// Reduction modulo `basis` (see [`reduce_with`]), updating cofactors
    /// alongside.
    fn reduce(&self, basis: &[&Tracked], full: bool) -> Tracked {
        let polys: Vec<&Polynomial> = basis.iter().map(|t| &t.poly).collect();
        let mut steps = Vec::new();
        let remainder = reduce_with(&self.poly, &polys, full, |i, c, m| {
            if self.cofactors.is_some() {
                steps.push((i, c.clone(), *m))
            }
        });
        let cofactors = self.cofactors.as_ref().map(|cs| {
            let mut cs = cs.clone();
            for (i, c, m) in &steps {
                let theirs = basis[*i].cofactors.as_ref().expect("tracked basis");
                for (a, b) in cs.iter_mut().zip(theirs) {
                    a.sub_scaled_shifted(c, m, b);
                }
            }
            cs
        });
        Tracked {
            poly: remainder,
            cofactors,
        }
    }
}

fn s_pair(f: &Tracked, g: &Tracked) -> Tracked {
    let (mf, mg) = (f.lm(), g.lm());
    let lcm = mf.lcm(&mg);
    // Both inputs are monic inside the main loop.
    let mut s = Tracked {
        poly: f.poly.shift(&mf.divide_into(&lcm).unwrap()),
        cofactors: f.cofactors.as_ref().map(|cs| {
            cs.iter()
                .map(|q| q.shift(&mf.divide_into(&lcm).unwrap()))
                .collect()
        }),
    };
    s.sub_scaled_shifted(&BigRational::one(), &mg.divide_into(&lcm).unwrap(), g);
    s
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Gebauer-Möller update after appending `basis[k]`: forms the new pairs
/// `(i, k)` that survive the chain and coprime criteria, prunes old pairs
/// made redundant by the new leading monomial, and retires basis elements
/// whose leading monomial it divides.
fn update_pairs(basis: &[Tracked], active: &mut Vec<bool>, pairs: &mut Vec<Pair>, k: usize) {
    let h = basis[k].lm();
    let candidates: Vec<Pair> = (0..k)
        .filter(|&i| active[i])
        .map(|i| Pair {
            i,
            j: k,
            lcm: basis[i].lm().lcm(&h),
        })
        .collect();

    // Drop a new pair when another new pair has a strictly smaller lcm
    // dividing it, or an equal lcm and an earlier index.
    let mut kept: Vec<&Pair> = Vec::new();
    for (a, p) in candidates.iter().enumerate() {
        let coprime = basis[p.i].lm().is_coprime(&h);
        let dominated = candidates.iter().enumerate().any(|(b, q)| {
            b != a && q.lcm.divides(&p.lcm) && (q.lcm != p.lcm || (b < a && !coprime))
        });
        if coprime || !dominated {
            kept.push(p);
        }
    }
    // Among pairs sharing an lcm keep one, and none at all if any of them
    // has coprime leading monomials.
    let mut fresh: Vec<Pair> = Vec::new();
    for p in &kept {
        let same: Vec<&&Pair> = kept.iter().filter(|q| q.lcm == p.lcm).collect();
        if same.iter().any(|q| basis[q.i].lm().is_coprime(&h)) {
            continue;
        }
        if same[0].i == p.i {
            fresh.push(Pair { i: p.i, j: k, lcm: p.lcm });
        }
    }

    pairs.retain(|p| {
        !(h.divides(&p.lcm)
            && h.lcm(&basis[p.i].lm()) != p.lcm
            && h.lcm(&basis[p.j].lm()) != p.lcm)
    });
    pairs.extend(fresh);

    for i in 0..k {
        if active[i] && h.divides(&basis[i].lm()) {
            active[i] = false;
        }
    }
    active.push(true);
}

fn run_buchberger(ideal: &IdealBasis, track: bool) -> Vec<Tracked> {
    let n = ideal.generators.len();
    let mut basis: Vec<Tracked> = ideal
        .generators
        .iter()
        .enumerate()
        .map(|(j, g)| {
            let cofactors = track.then(|| {
                (0..n)
                    .map(|k| if k == j { Polynomial::one() } else { Polynomial::zero() })
                    .collect()
            });
            Tracked {
                poly: g.clone(),
                cofactors,
            }
            .monic()
        })
        .collect();

    let mut pairs: Vec<Pair> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    for k in 0..basis.len() {
        update_pairs(&basis, &mut active, &mut pairs, k);
    }

    // Normal strategy: smallest lcm degree first, ties by pair index.
    while let Some(pos) = pairs
        .iter()
        .enumerate()
        .min_by_key(|(_, p)| (p.lcm.degree(), p.i, p.j))
        .map(|(pos, _)| pos)
    {
        let Pair { i, j, .. } = pairs.swap_remove(pos);
        let s = s_pair(&basis[i], &basis[j]);
        let refs: Vec<&Tracked> = basis.iter().collect();
        let h = s.reduce(&refs, false);
        if h.poly.is_zero() {
            continue;
        }
        basis.push(h.monic());
        update_pairs(&basis, &mut active, &mut pairs, basis.len() - 1);
    }

    // Minimalize: drop elements whose leading monomial is divisible by that
    // of another (keeping the earliest among equal leading monomials).
    let leads: Vec<Monomial> = basis.iter().map(Tracked::lm).collect();
    let keep: Vec<usize> = (0..basis.len())
        .filter(|&i| {
            !(0..basis.len()).any(|j| {
                j != i && leads[j].divides(&leads[i]) && (leads[j] != leads[i] || j < i)
            })
        })
        .collect();
    let minimal: Vec<Tracked> = keep.iter().map(|&i| basis[i].clone()).collect();

    // Interreduce tails.
    let mut reduced: Vec<Tracked> = (0..minimal.len())
        .map(|i| {
            let others: Vec<&Tracked> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, t)| t)
                .collect();
            minimal[i].reduce(&others, true).monic()
        })
        .collect();
    reduced.sort_by_key(|t| std::cmp::Reverse(t.lm()));
    reduced
}

/// Reduced Gröbner basis of the ideal, in degrevlex order.
pub fn buchberger(ideal: &IdealBasis) -> GroebnerBasis {
    let elements: Vec<Polynomial> = run_buchberger(ideal, false)
        .into_iter()
        .map(|t| t.poly)
        .collect();
    debug_assert!(is_reduced_groebner_basis(&elements));
    GroebnerBasis { elements }
}

/// Like [`buchberger`], also returning for each basis element `g` the
/// cofactors `c` with `g = sum(c[j] * generators[j])`.
pub fn buchberger_with_cofactors(ideal: &IdealBasis) -> (GroebnerBasis, Vec<Vec<Polynomial>>) {
    let (elements, cofactors) = run_buchberger(ideal, true)
        .into_iter()
        .map(|t| (t.poly, t.cofactors.expect("tracked")))
        .unzip();
    (GroebnerBasis { elements }, cofactors)
}

/// Checks monicity, reducedness, and Buchberger's S-pair criterion.
pub fn is_reduced_groebner_basis(elements: &[Polynomial]) -> bool {
    if elements.iter().any(Polynomial::is_zero) {
        return false;
    }
    let leads: Vec<Monomial> = elements
        .iter()
        .map(|g| *g.leading_term().unwrap().0)
        .collect();
    for (i, g) in elements.iter().enumerate() {
        if !g.leading_term().unwrap().1.is_one() {
            return false;
        }
        for (j, lm) in leads.iter().enumerate() {
            if i != j && g.monomials().any(|m| lm.divides(m)) {
                return false;
            }
        }
    }
    for i in 0..elements.len() {
        for j in (i + 1)..elements.len() {
            if !normal_form(&s_polynomial(&elements[i], &elements[j]), elements).is_zero() {
                return false;
            }
        }
    }
    true
}

/// True iff every variable has a pure power among the leading monomials,
/// i.e. the quotient ring is finite dimensional. A unit leading monomial
/// (the whole ring) also counts.
pub fn quotient_is_finite_dimensional(gb: &GroebnerBasis) -> bool {
    let leads = gb.leading_monomials();
    if leads.contains(&Monomial::ONE) {
        return true;
    }
    Axis::ALL
        .iter()
        .all(|&a| leads.iter().any(|m| m.pure_power_axis() == Some(a)))
}

fn validate_quartic(f: &Polynomial) -> Result<()> {
    match f.homogeneous_degree()? {
        None => Err(Error::ZeroPolynomial),
        Some(4) => Ok(()),
        Some(d) => Err(Error::WrongDegree {
            expected: 4,
            found: d,
        }),
    }
}

/// Whether the projective plane quartic `f = 0` is smooth.
pub fn smoothness_check(f: &Polynomial) -> Result<bool> {
    validate_quartic(f)?;
    let ideal = IdealBasis::from_nonzero(f.gradient());
    Ok(quotient_is_finite_dimensional(&buchberger(&ideal)))
}
