//! The torsion criterion for the Ceresa class of a smooth plane quartic `C`.
//!
//! If an automorphism `σ` of `C` fixes a point `p ∈ C`, it preserves the
//! Ceresa class of `C` based at `p`. When 1 is not an eigenvalue of `σ` on the
//! tangent space `Λ³V* ⊕ (Λ²V* ⊗ V)` of the intermediate Jacobian, `σ` has
//! finitely many fixed points there, so the class is torsion.
//!
//! Only diagonal `σ = diag(ω^a, ω^b, ω^c)` are handled, which turns the whole
//! check into arithmetic on exponents mod `n`.

use std::fmt;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::character::CharacterMultiset;
use crate::error::{Error, Result};
use crate::groebner::smoothness_check;
use crate::poly::{Axis, Monomial, Polynomial};

/// `σ(X, Y, Z) = (ω^a X, ω^b Y, ω^c Z)` for a primitive `order`-th root of
/// unity `ω`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagonalAutomorphism {
    order: u32,
    exps: [u32; 3],
}

impl DiagonalAutomorphism {
    pub fn new(order: u32, exps: [i64; 3]) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidAutomorphism("order must be at least 1".into()));
        }
        let n = order as i64;
        Ok(DiagonalAutomorphism {
            order,
            exps: exps.map(|e| e.rem_euclid(n) as u32),
        })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn exponents(&self) -> [u32; 3] {
        self.exps
    }

    pub fn exponent(&self, axis: Axis) -> u32 {
        self.exps[axis.index()]
    }

    fn residue(&self, e: i64) -> u32 {
        e.rem_euclid(self.order as i64) as u32
    }

    /// Exponent of the scalar by which `σ` pulls back `X^i Y^j Z^k`.
    pub fn monomial_character(&self, m: &Monomial) -> u32 {
        let e = m.exponents();
        self.residue((0..3).map(|i| e[i] as i64 * self.exps[i] as i64).sum())
    }

    /// All three exponents equal: `σ` is a scalar matrix, the identity on ℙ².
    pub fn is_projective_identity(&self) -> bool {
        self.exps[0] == self.exps[1] && self.exps[1] == self.exps[2]
    }

    /// The same projective map with the linear lift multiplied by `ω^t`.
    pub fn shifted(&self, t: i64) -> Self {
        Self::new(self.order, self.exps.map(|e| e as i64 + t)).unwrap()
    }

    /// `σ` written in terms of the primitive root `ω^u`.
    pub fn scaled(&self, u: u32) -> Self {
        Self::new(self.order, self.exps.map(|e| e as i64 * u as i64)).unwrap()
    }

    /// Matches [`Polynomial::permuted`]: the exponent of variable `i` moves to `perm[i]`.
    pub fn permuted(&self, perm: [Axis; 3]) -> Self {
        let mut exps = [0u32; 3];
        for (i, target) in perm.iter().enumerate() {
            exps[target.index()] = self.exps[i];
        }
        DiagonalAutomorphism {
            order: self.order,
            exps,
        }
    }
}

impl fmt::Display for DiagonalAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.exps;
        write!(f, "order {} exponents ({a},{b},{c})", self.order)
    }
}

/// Units of `Z/n`, ascending. For `n = 1` this is `[0]`.
pub fn units_mod(n: u32) -> Vec<u32> {
    (0..n).filter(|u| u.gcd(&n) == 1).collect()
}

/// The common character `e_λ` of all monomials of `f`, so that
/// `f ∘ σ = ω^{e_λ} f`.
pub fn semi_invariance_exponent(f: &Polynomial, sigma: &DiagonalAutomorphism) -> Result<u32> {
    let mut monos = f.terms_descending().map(|(m, _)| *m);
    let first = monos.next().ok_or(Error::ZeroPolynomial)?;
    let first_character = sigma.monomial_character(&first);
    for m in monos {
        let c = sigma.monomial_character(&m);
        if c != first_character {
            return Err(Error::NotSemiInvariant {
                first,
                first_character,
                second: m,
                second_character: c,
            });
        }
    }
    Ok(first_character)
}

/// A coordinate point of ℙ² that `σ` fixes, with the value of the curve's
/// equation there (the coefficient of the pure power of that variable).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinatePoint {
    pub axis: Axis,
    pub value: BigRational,
}

impl CoordinatePoint {
    pub fn on_curve(&self) -> bool {
        self.value.is_zero()
    }
}

/// A coordinate line fixed pointwise by `σ`, spanned by the coordinate
/// points of `axes`. `meets_curve` is set when the curve's equation does not
/// vanish identically on the line, so the curve meets it in 1 to 4 points,
/// each fixed by `σ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedLine {
    pub axes: [Axis; 2],
    pub meets_curve: bool,
}

impl FixedLine {
    pub fn label(&self) -> String {
        format!("{}{}", self.axes[0], self.axes[1])
    }

    /// The coordinate whose vanishing defines the line.
    pub fn equation_axis(&self) -> Axis {
        Axis::ALL
            .into_iter()
            .find(|a| !self.axes.contains(a))
            .expect("two of three axes")
    }
}

/// Fixed points of `σ` on ℙ², intersected with the curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedLocus {
    /// `σ` is the identity on ℙ²; every point of the curve is fixed.
    pub degenerate: bool,
    /// Isolated fixed points of `σ` on ℙ² (all coordinate points), on or off the curve.
    pub points: Vec<CoordinatePoint>,
    pub lines: Vec<FixedLine>,
}

impl FixedLocus {
    pub fn points_on_curve(&self) -> impl Iterator<Item = &CoordinatePoint> {
        self.points.iter().filter(|p| p.on_curve())
    }

    /// Whether the curve has a fixed point usable as a base point, excluding
    /// the degenerate case.
    pub fn has_fixed_point_on_curve(&self) -> bool {
        !self.degenerate
            && (self.points_on_curve().next().is_some() || self.lines.iter().any(|l| l.meets_curve))
    }
}

fn validate_quartic(f: &Polynomial) -> Result<()> {
    match f.homogeneous_degree()? {
        None => Err(Error::ZeroPolynomial),
        Some(4) => Ok(()),
        Some(found) => Err(Error::WrongDegree { expected: 4, found }),
    }
}

pub fn fixed_locus_on_curve(f: &Polynomial, sigma: &DiagonalAutomorphism) -> Result<FixedLocus> {
    validate_quartic(f)?;
    semi_invariance_exponent(f, sigma)?;

    if sigma.is_projective_identity() {
        return Ok(FixedLocus {
            degenerate: true,
            points: Vec::new(),
            lines: Vec::new(),
        });
    }

    let point = |axis: Axis| CoordinatePoint {
        axis,
        value: f.coefficient(&Monomial::pure_power(axis, 4)),
    };

    // An axis is an isolated fixed point iff its exponent differs from both
    // others; two equal exponents span a pointwise-fixed line.
    let mut points = Vec::new();
    let mut lines = Vec::new();
    for axis in Axis::ALL {
        let e = sigma.exponent(axis);
        let shared = Axis::ALL
            .into_iter()
            .filter(|&b| b != axis && sigma.exponent(b) == e)
            .collect::<Vec<_>>();
        match shared.as_slice() {
            [] => points.push(point(axis)),
            [other] if axis < *other => {
                let off = Axis::ALL
                    .into_iter()
                    .find(|a| *a != axis && a != other)
                    .unwrap();
                let vanishes = f.monomials().all(|m| m.exponent(off) > 0);
                lines.push(FixedLine {
                    axes: [axis, *other],
                    meets_curve: !vanishes,
                });
            }
            _ => {}
        }
    }
    Ok(FixedLocus {
        degenerate: false,
        points,
        lines,
    })
}

/// Character of `σ` on `V = H⁰(C, K_C)`.
///
/// `V` is spanned by `L·(X dZ − Z dX)/F_Y` for linear forms `L`. The form
/// `X dZ − Z dX` pulls back with exponent `a + c`, and `F_Y ∘ σ = ω^{e_λ − b} F_Y`,
/// so `L` contributes its own exponent plus `S = a + b + c − e_λ`.
pub fn v_character(sigma: &DiagonalAutomorphism, lambda_exp: u32) -> CharacterMultiset {
    let [a, b, c] = sigma.exponents().map(|e| e as i64);
    let s = a + b + c - lambda_exp as i64;
    CharacterMultiset::new(sigma.order(), [a + s, b + s, c + s])
}

/// Character of `σ` on `T₀𝔍 = H^{0,3} ⊕ H^{1,2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentSpectrum {
    /// `Λ³V*`
    pub h03: CharacterMultiset,
    /// `Λ²V* ⊗ V`
    pub h12: CharacterMultiset,
    pub full: CharacterMultiset,
}

pub fn tangent_spectrum(v: &CharacterMultiset) -> Result<TangentSpectrum> {
    let h03 = v.wedge3()?.dual();
    let h12 = v.wedge2()?.dual().tensor(v)?;
    let full = h03.direct_sum(&h12)?;
    Ok(TangentSpectrum { h03, h12, full })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Torsion,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Torsion => "torsion",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionCertificate {
    pub curve: Polynomial,
    pub sigma: DiagonalAutomorphism,
    pub smooth: bool,
    pub lambda_exp: u32,
    pub fixed_locus: FixedLocus,
    pub v_character: CharacterMultiset,
    pub h03_character: CharacterMultiset,
    pub h12_character: CharacterMultiset,
    pub tangent_spectrum: CharacterMultiset,
    pub verdict: Verdict,
    pub reasons: Vec<String>,
}

impl TorsionCertificate {
    /// Character on `Λ²V*`.
    pub fn wedge2_dual_character(&self) -> CharacterMultiset {
        self.v_character
            .wedge2()
            .expect("V is 3-dimensional")
            .dual()
    }

    /// The verdict implied by the stored fields.
    pub fn recomputed_verdict(&self) -> Verdict {
        if self.smooth
            && self.fixed_locus.has_fixed_point_on_curve()
            && !self.tangent_spectrum.contains_trivial()
        {
            Verdict::Torsion
        } else {
            Verdict::Inconclusive
        }
    }
}

/// Runs the full criterion on `(f, σ)`.
///
/// Input errors (wrong degree, inhomogeneous, zero, not semi-invariant) are
/// returned as `Err`. A singular curve still yields a certificate, with an
/// inconclusive verdict.
pub fn certify(f: &Polynomial, sigma: &DiagonalAutomorphism) -> Result<TorsionCertificate> {
    validate_quartic(f)?;
    let smooth = smoothness_check(f)?;
    let lambda_exp = semi_invariance_exponent(f, sigma)?;
    let fixed_locus = fixed_locus_on_curve(f, sigma)?;
    let v = v_character(sigma, lambda_exp);
    let spectrum = tangent_spectrum(&v)?;

    let mut reasons = Vec::new();
    if smooth {
        reasons.push("curve is smooth".to_string());
    } else {
        reasons.push("curve is singular".to_string());
    }
    if fixed_locus.degenerate {
        reasons.push("automorphism acts as the identity on P^2".to_string());
    } else {
        for p in fixed_locus.points_on_curve() {
            reasons.push(format!("fixed point {} lies on the curve", p.axis.point_label()));
        }
        for line in fixed_locus.lines.iter().filter(|l| l.meets_curve) {
            reasons.push(format!(
                "pointwise-fixed line {}=0 meets the curve",
                line.equation_axis()
            ));
        }
        if !fixed_locus.has_fixed_point_on_curve() {
            reasons.push("no fixed point of the automorphism lies on the curve".to_string());
        }
    }
    if spectrum.h03.contains_trivial() {
        reasons.push("eigenvalue 1 on H^{0,3} (exponent 0)".to_string());
    }
    if spectrum.h12.contains_trivial() {
        reasons.push("eigenvalue 1 on H^{1,2} (exponent 0)".to_string());
    }
    if !spectrum.full.contains_trivial() {
        reasons.push("no eigenvalue 1 on the tangent space".to_string());
    }

    let mut cert = TorsionCertificate {
        curve: f.clone(),
        sigma: *sigma,
        smooth,
        lambda_exp,
        fixed_locus,
        v_character: v,
        h03_character: spectrum.h03,
        h12_character: spectrum.h12,
        tangent_spectrum: spectrum.full,
        verdict: Verdict::Inconclusive,
        reasons,
    };
    cert.verdict = cert.recomputed_verdict();
    Ok(cert)
}
