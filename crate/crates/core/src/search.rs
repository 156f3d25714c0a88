//! Enumeration of quartics invariant under a diagonal automorphism.
//!
//! The search walks a grid of cells `(n, exponent triple, e_λ)`. Every cell
//! fixes the automorphism and its character on the curve, which already
//! determines the tangent spectrum, so cells whose spectrum contains the
//! trivial character are counted but not enumerated. Inside a live cell every
//! coefficient assignment over the invariant support is screened for a fixed
//! point on the curve, tested for smoothness, and certified.

use std::collections::HashSet;

use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::ceresa::{
    certify, fixed_locus_on_curve, tangent_spectrum, units_mod, v_character,
    DiagonalAutomorphism, TorsionCertificate, Verdict,
};
use crate::error::{Error, Result};
use crate::groebner::smoothness_check;
use crate::poly::{Axis, Monomial, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub order_min: u32,
    pub order_max: u32,
    pub coefficient_alphabet: Vec<BigRational>,
    /// Maximum number of nonzero coefficients per candidate.
    pub max_support: Option<usize>,
    /// Enumerate one exponent triple per symmetry class and report each
    /// curve once per class.
    pub dedup: bool,
}

impl SearchConfig {
    pub fn new(order_min: u32, order_max: u32) -> Self {
        SearchConfig {
            order_min,
            order_max,
            coefficient_alphabet: vec![BigRational::zero(), BigRational::from_integer(1.into())],
            max_support: None,
            dedup: true,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.order_min < 1 {
            return Err(Error::Config("order_min must be at least 1".into()));
        }
        if self.order_min > self.order_max {
            return Err(Error::Config(format!(
                "empty order range {}..{}",
                self.order_min, self.order_max
            )));
        }
        if self.coefficient_alphabet.iter().all(Zero::is_zero) {
            return Err(Error::Config(
                "coefficient alphabet needs a nonzero value".into(),
            ));
        }
        if self.max_support == Some(0) {
            return Err(Error::Config("max_support must be at least 1".into()));
        }
        Ok(())
    }

    fn sorted_alphabet(&self) -> Vec<BigRational> {
        let mut a = self.coefficient_alphabet.clone();
        a.sort();
        a.dedup();
        a
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchHit {
    pub certificate: TorsionCertificate,
    /// Monomials with nonzero coefficient, descending.
    pub support: Vec<Monomial>,
}

impl SearchHit {
    pub fn curve(&self) -> &Polynomial {
        &self.certificate.curve
    }

    pub fn sigma(&self) -> &DiagonalAutomorphism {
        &self.certificate.sigma
    }

    /// `(n, exponents, e_λ)`
    pub fn parameters(&self) -> (u32, [u32; 3], u32) {
        let s = self.sigma();
        (s.order(), s.exponents(), self.certificate.lambda_exp)
    }
}

/// Counters for one run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// `(n, triple, e_λ)` cells with nonempty invariant support.
    pub cells: u64,
    /// Coefficient vectors in those cells, after the support filters.
    pub candidates: u64,
    /// Candidates in cells with a nontrivial spectrum and with a fixed point
    /// on the curve; these are the ones tested for smoothness.
    pub screened: u64,
    pub smooth: u64,
    pub hits: u64,
}

impl std::ops::AddAssign for SearchStats {
    fn add_assign(&mut self, o: Self) {
        self.cells += o.cells;
        self.candidates += o.candidates;
        self.screened += o.screened;
        self.smooth += o.smooth;
        self.hits += o.hits;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub hits: Vec<SearchHit>,
    pub stats: SearchStats,
}

/// Degree-4 monomials on which `σ` acts by `ω^{lambda_exp}`, descending.
pub fn invariant_support(sigma: &DiagonalAutomorphism, lambda_exp: u32) -> Vec<Monomial> {
    Monomial::all_of_degree(4)
        .into_iter()
        .filter(|m| sigma.monomial_character(m) == lambda_exp % sigma.order())
        .collect()
}

const PERMUTATIONS: [[Axis; 3]; 6] = [
    [Axis::X, Axis::Y, Axis::Z],
    [Axis::X, Axis::Z, Axis::Y],
    [Axis::Y, Axis::X, Axis::Z],
    [Axis::Y, Axis::Z, Axis::X],
    [Axis::Z, Axis::X, Axis::Y],
    [Axis::Z, Axis::Y, Axis::X],
];

fn permute_triple(e: [u32; 3], perm: [Axis; 3]) -> [u32; 3] {
    let mut out = [0; 3];
    for (i, target) in perm.iter().enumerate() {
        out[target.index()] = e[i];
    }
    out
}

/// Least element of `{u·e + t}` over units `u` and shifts `t`: the same
/// cyclic group of projective maps, written with another generator and lift.
fn lift_class_min(n: u32, e: [u32; 3]) -> [u32; 3] {
    let units = units_mod(n);
    let mut best: Option<[u32; 3]> = None;
    for &u in &units {
        for t in 0..n {
            let cand = e.map(|x| ((x as u64 * u as u64 + t as u64) % n as u64) as u32);
            if best.is_none_or(|b| cand < b) {
                best = Some(cand);
            }
        }
    }
    best.expect("at least one unit")
}

/// Least element of the orbit of `e` under coordinate permutations, shifts
/// and unit scalings.
pub fn canonical_triple(n: u32, e: [u32; 3]) -> [u32; 3] {
    PERMUTATIONS
        .iter()
        .map(|&perm| lift_class_min(n, permute_triple(e, perm)))
        .min()
        .unwrap()
}

/// One representative (the least element) per orbit of exponent triples
/// mod `n`, ascending.
pub fn canonical_exponent_triples(n: u32) -> Vec<[u32; 3]> {
    let mut reps: Vec<[u32; 3]> = (0..n)
        .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| [a, b, c])))
        .map(|e| canonical_triple(n, e))
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    reps.sort_unstable();
    reps
}

fn triples_for_order(n: u32, dedup: bool) -> Vec<[u32; 3]> {
    let triples: Vec<[u32; 3]> = if dedup {
        canonical_exponent_triples(n)
    } else {
        (0..n)
            .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| [a, b, c])))
            .collect()
    };
    triples
        .into_iter()
        .filter(|e| n == 1 || !(e[0] == e[1] && e[1] == e[2]))
        .collect()
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of coefficient vectors of length `len` with between 1 and `cap`
/// nonzero entries.
fn candidate_count(len: usize, alphabet: &[BigRational], cap: usize) -> u64 {
    let nonzero = alphabet.iter().filter(|c| !c.is_zero()).count() as u64;
    let has_zero = alphabet.len() as u64 > nonzero;
    let len = len as u64;
    if has_zero {
        (1..=len.min(cap as u64))
            .map(|j| binomial(len, j).saturating_mul(nonzero.saturating_pow(j as u32)))
            .fold(0u64, u64::saturating_add)
    } else if len <= cap as u64 {
        nonzero.saturating_pow(len as u32)
    } else {
        0
    }
}

struct CellResult {
    hits: Vec<SearchHit>,
    stats: SearchStats,
}

fn process_cell(
    sigma: DiagonalAutomorphism,
    lambda_exp: u32,
    alphabet: &[BigRational],
    max_support: Option<usize>,
) -> CellResult {
    let support = invariant_support(&sigma, lambda_exp);
    let cap = max_support.unwrap_or(support.len());
    let mut stats = SearchStats {
        cells: 1,
        ..Default::default()
    };
    let mut hits = Vec::new();

    let v = v_character(&sigma, lambda_exp);
    let spectrum = tangent_spectrum(&v).expect("V has dimension 3");
    if spectrum.full.contains_trivial() {
        stats.candidates = candidate_count(support.len(), alphabet, cap);
        return CellResult { hits, stats };
    }

    // Odometer over alphabet indices, last position fastest.
    let mut idx = vec![0usize; support.len()];
    loop {
        let nonzero = idx.iter().filter(|&&i| !alphabet[i].is_zero()).count();
        if nonzero >= 1 && nonzero <= cap {
            stats.candidates += 1;
            let f = Polynomial::from_terms(
                idx.iter()
                    .zip(&support)
                    .map(|(&i, m)| (alphabet[i].clone(), *m)),
            );
            let locus = fixed_locus_on_curve(&f, &sigma).expect("invariant support");
            if locus.has_fixed_point_on_curve() {
                stats.screened += 1;
                if smoothness_check(&f).expect("nonzero quartic") {
                    stats.smooth += 1;
                    let certificate = certify(&f, &sigma).expect("invariant support");
                    debug_assert_eq!(certificate.lambda_exp, lambda_exp);
                    if certificate.verdict == Verdict::Torsion {
                        stats.hits += 1;
                        hits.push(SearchHit {
                            support: f.terms_descending().map(|(m, _)| *m).collect(),
                            certificate,
                        });
                    }
                }
            }
        }

        let mut pos = idx.len();
        loop {
            if pos == 0 {
                return CellResult { hits, stats };
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < alphabet.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Chooses a canonical way of writing the pair `(curve, σ)` up to joint
/// relabeling of the coordinates and a change of lift or primitive root:
/// coordinate points off the curve come first, then the exponent triple is
/// least within its lift class, then the curve is least.
pub fn canonical_presentation(
    curve: &Polynomial,
    sigma: &DiagonalAutomorphism,
) -> (Polynomial, DiagonalAutomorphism) {
    let n = sigma.order();
    PERMUTATIONS
        .iter()
        .map(|&perm| {
            let f = curve.permuted(perm);
            let on_curve: Vec<bool> = Axis::ALL
                .iter()
                .map(|&a| f.coefficient(&Monomial::pure_power(a, 4)).is_zero())
                .collect();
            let e = lift_class_min(n, permute_triple(sigma.exponents(), perm));
            (on_curve, e, f)
        })
        .min()
        .map(|(_, e, f)| {
            let s = DiagonalAutomorphism::new(n, e.map(i64::from)).unwrap();
            (f, s)
        })
        .unwrap()
}

fn present(hit: &SearchHit) -> SearchHit {
    let (f, sigma) = canonical_presentation(hit.curve(), hit.sigma());
    let certificate = certify(&f, &sigma).expect("presentation of a certified hit");
    SearchHit {
        support: f.terms_descending().map(|(m, _)| *m).collect(),
        certificate,
    }
}

/// Runs the search and calls `on_hit` for every hit in output order.
pub fn run_search_streaming<F>(config: &SearchConfig, mut on_hit: F) -> Result<SearchStats>
where
    F: FnMut(&SearchHit),
{
    config.validate()?;
    let alphabet = config.sorted_alphabet();
    let mut total = SearchStats::default();

    for n in config.order_min..=config.order_max {
        let cells: Vec<(DiagonalAutomorphism, u32)> = triples_for_order(n, config.dedup)
            .into_iter()
            .flat_map(|e| {
                let sigma = DiagonalAutomorphism::new(n, e.map(i64::from)).unwrap();
                let mut lambdas: Vec<u32> = Monomial::all_of_degree(4)
                    .iter()
                    .map(|m| sigma.monomial_character(m))
                    .collect();
                lambdas.sort_unstable();
                lambdas.dedup();
                lambdas.into_iter().map(move |l| (sigma, l))
            })
            .collect();

        let results: Vec<CellResult> = cells
            .par_iter()
            .map(|&(sigma, l)| process_cell(sigma, l, &alphabet, config.max_support))
            .collect();

        let mut seen = HashSet::new();
        for cell in results {
            let mut stats = cell.stats;
            for hit in cell.hits {
                if config.dedup {
                    let hit = present(&hit);
                    if !seen.insert((hit.curve().clone(), *hit.sigma())) {
                        stats.hits -= 1;
                        continue;
                    }
                    on_hit(&hit);
                } else {
                    on_hit(&hit);
                }
            }
            total += stats;
        }
    }
    Ok(total)
}

pub fn run_search(config: &SearchConfig) -> Result<SearchOutcome> {
    let mut hits = Vec::new();
    let stats = run_search_streaming(config, |h| hits.push(h.clone()))?;
    Ok(SearchOutcome { hits, stats })
}
