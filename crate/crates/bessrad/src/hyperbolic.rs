// Copyright 2026 the Bessrad Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Exact rational-arithmetic verification of the hyperbolic-polynomial
//! facts the radius theory rests on.
//!
//! Two statements are machine-checked here, with every count produced by
//! Sturm chains over `BigRational` (no floating point in the decision
//! path):
//!
//! 1. **Pencil structure.** For a hyperbolic polynomial `p` (all roots
//!    real) with `p(0) != 0` and a constant `C`, the pencil
//!    `q(x) = C p(x) - x p'(x)` is again hyperbolic, and it has exactly
//!    one root in the gap `(0, x1)` below the smallest positive root `x1`
//!    of `p` precisely when `C < 0`. In ascending coefficients the pencil
//!    is diagonal: `q_k = (C - k) p_k`.
//!
//! 2. **Zero precedence.** For the degree-`M` truncation `P` of the
//!    normalized derivative series (exact rational coefficients from the
//!    term recurrence) and `a < 0`, the smallest positive root of the
//!    pencil `a P - x P'` strictly precedes the smallest positive root of
//!    `P`. The certificate is a pair of disjoint rational isolation
//!    intervals. A floating-point cross-check confirms the corresponding
//!    sign change of the full (untruncated) weighted section.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::params::{Order, TruncationPolicy};
use crate::series::{self, Weights};
use crate::tolerances;
use crate::zeros::{self, ZeroFamily};

/// Dense univariate polynomial with exact rational coefficients in
/// ascending order. The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

fn rat(x: f64) -> Result<BigRational> {
    BigRational::from_float(x)
        .ok_or_else(|| Error::Domain(format!("cannot convert {x} to a rational")))
}

fn sign(x: &BigRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

impl Poly {
    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros.
    pub fn new(mut coeffs: Vec<BigRational>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Exact conversion from `f64` coefficients (every finite `f64` is a
    /// dyadic rational).
    pub fn from_f64(coeffs: &[f64]) -> Result<Poly> {
        let coeffs = coeffs.iter().map(|&c| rat(c)).collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(coeffs))
    }

    /// Ascending coefficients (empty for the zero polynomial).
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; 0 for constants and for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly { coeffs: vec![] };
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
            .collect();
        Poly::new(coeffs)
    }

    /// Long division: `self = q * d + r` with `deg r < deg d`.
    fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.degree() < d.degree() || self.is_zero() {
            return (Poly { coeffs: vec![] }, self.clone());
        }
        let mut rem = self.coeffs.clone();
        let dn = d.degree();
        let lead = &d.coeffs[dn];
        let mut quot = vec![BigRational::zero(); rem.len() - dn];
        for k in (dn..rem.len()).rev() {
            let q = &rem[k] / lead;
            if !q.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    let idx = k - dn + i;
                    rem[idx] = &rem[idx] - &q * dc;
                }
            }
            quot[k - dn] = q;
        }
        rem.truncate(dn);
        (Poly::new(quot), Poly::new(rem))
    }

    fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    /// Rescales so the leading coefficient has absolute value 1, keeping
    /// its sign (a positive rescale preserves every Sturm sign pattern).
    fn normalized(&self) -> Poly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lead) => {
                let scale = lead.abs();
                Poly {
                    coeffs: self.coeffs.iter().map(|c| c / &scale).collect(),
                }
            }
        }
    }

    fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Monic greatest common divisor.
    fn gcd(a: &Poly, b: &Poly) -> Poly {
        let mut a = a.normalized();
        let mut b = b.normalized();
        while !b.is_zero() {
            let r = a.rem(&b).normalized();
            a = b;
            b = r;
        }
        a
    }

    /// Square-free part `self / gcd(self, self')`.
    fn square_free(&self) -> Poly {
        if self.is_constant() {
            return self.clone();
        }
        let g = Poly::gcd(self, &self.derivative());
        if g.is_constant() {
            return self.clone();
        }
        let (q, r) = self.div_rem(&g);
        debug_assert!(r.is_zero(), "gcd must divide exactly");
        q
    }

    /// Divides out a known rational root once (synthetic division).
    fn deflate(&self, root: &BigRational) -> Poly {
        debug_assert!(self.eval(root).is_zero());
        let m = self.degree();
        let mut out = vec![BigRational::zero(); m];
        let mut carry = BigRational::zero();
        for k in (1..=m).rev() {
            carry = &self.coeffs[k] + &carry * root;
            out[k - 1] = carry.clone();
        }
        Poly::new(out)
    }

    /// A rational `B` with every complex root in `|x| <= B` (Cauchy).
    fn root_bound(&self) -> BigRational {
        let lead = self.coeffs.last().expect("nonzero polynomial").abs();
        let mut best = BigRational::zero();
        for c in &self.coeffs[..self.degree()] {
            let ratio = c.abs() / &lead;
            if ratio > best {
                best = ratio;
            }
        }
        best + BigRational::one()
    }
}

/// Precomputed Sturm chain; counts *distinct* real roots in `(a, b]`
/// provided neither endpoint is a root of the head polynomial.
struct SturmChain {
    chain: Vec<Poly>,
}

impl SturmChain {
    fn new(p: &Poly) -> SturmChain {
        let mut chain = vec![p.normalized()];
        if !p.is_constant() {
            chain.push(p.derivative().normalized());
            loop {
                let k = chain.len();
                let r = chain[k - 2].rem(&chain[k - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push(r.neg().normalized());
            }
        }
        SturmChain { chain }
    }

    fn variations(&self, x: &BigRational) -> usize {
        let mut last = 0i8;
        let mut v = 0;
        for p in &self.chain {
            let s = sign(&p.eval(x));
            if s != 0 {
                if last != 0 && s != last {
                    v += 1;
                }
                last = s;
            }
        }
        v
    }

    fn count_distinct(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }
}

/// Number of real roots of `p` in `(lo, hi]`, counted with multiplicity,
/// by exact rational arithmetic (endpoints converted exactly from `f64`).
///
/// # Errors
///
/// [`Error::Domain`] for the zero polynomial or `lo >= hi`.
pub fn count_real_roots(p: &Poly, lo: f64, hi: f64) -> Result<usize> {
    let lo = rat(lo)?;
    let hi = rat(hi)?;
    count_rational(p, &lo, &hi)
}

fn count_rational(p: &Poly, lo: &BigRational, hi: &BigRational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::Domain(
            "root counting of the zero polynomial is indeterminate".to_string(),
        ));
    }
    if lo >= hi {
        return Err(Error::Domain(format!(
            "root counting needs lo < hi, got [{lo}, {hi}]"
        )));
    }
    let mut p = p.clone();
    let mut count = 0usize;
    // The interval is open at lo, closed at hi: roots sitting exactly on
    // an endpoint are divided out first (counted only at hi).
    while !p.is_constant() && p.eval(hi).is_zero() {
        p = p.deflate(hi);
        count += 1;
    }
    while !p.is_constant() && p.eval(lo).is_zero() {
        p = p.deflate(lo);
    }
    if p.is_constant() {
        return Ok(count);
    }
    count += SturmChain::new(&p).count_distinct(lo, hi);
    // Each root of multiplicity k recurs in gcd(p, p') with multiplicity
    // k - 1; recurse to convert distinct counts into multiplicity counts.
    let g = Poly::gcd(&p, &p.derivative());
    if !g.is_constant() {
        count += count_rational(&g, lo, hi)?;
    }
    Ok(count)
}

/// Total number of real roots (with multiplicity), via a Cauchy bound.
pub fn count_real_roots_total(p: &Poly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::Domain(
            "root counting of the zero polynomial is indeterminate".to_string(),
        ));
    }
    if p.is_constant() {
        return Ok(0);
    }
    let b = p.root_bound() + BigRational::one();
    count_rational(p, &-b.clone(), &b)
}

/// Polynomial `sum_k C(m, k) mu_k x^k` built from the first `m + 1`
/// shifted moments.
///
/// # Errors
///
/// [`Error::LengthMismatch`] when fewer than `m + 1` moments are given.
pub fn jensen_poly(maclaurin_mu: &[BigRational], m: usize) -> Result<Poly> {
    if maclaurin_mu.len() < m + 1 {
        return Err(Error::LengthMismatch(format!(
            "need {} moments for degree {m}, got {}",
            m + 1,
            maclaurin_mu.len()
        )));
    }
    let mut coeffs = Vec::with_capacity(m + 1);
    let mut binom = BigInt::one();
    for (k, mu) in maclaurin_mu.iter().take(m + 1).enumerate() {
        coeffs.push(mu * BigRational::from_integer(binom.clone()));
        // C(m, k+1) = C(m, k) (m - k) / (k + 1), exact at every step.
        binom = binom * BigInt::from(m - k) / BigInt::from(k + 1);
    }
    Ok(Poly::new(coeffs))
}

/// Result of the pencil verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PencilReport {
    /// Degree of `q = C p - x p'` (it drops below `deg p` when `C` equals
    /// the degree of `p`).
    pub degree: usize,
    /// Real roots of `q` counted with multiplicity.
    pub real_roots: usize,
    /// Whether `q` is hyperbolic (`real_roots == degree`).
    pub hyperbolic: bool,
    /// Roots of `q` in the gap `(0, x1)` below the smallest positive root
    /// of `p`.
    pub roots_in_gap: usize,
}

/// Isolates the smallest positive root of `p` (assumed square-free) into
/// a rational interval `(a, b]` containing it alone, with no roots in
/// `(0, a]`.
fn isolate_smallest_positive(p: &Poly) -> Result<(BigRational, BigRational)> {
    let chain = SturmChain::new(p);
    let mut a = BigRational::zero();
    let mut b = p.root_bound() + BigRational::one();
    if p.eval(&a).is_zero() {
        return Err(Error::Domain(
            "smallest positive root isolation needs p(0) != 0".to_string(),
        ));
    }
    if chain.count_distinct(&a, &b) == 0 {
        return Err(Error::Domain("polynomial has no positive roots".to_string()));
    }
    for _ in 0..tolerances::EXACT_BISECT_MAX_ITERS {
        if chain.count_distinct(&a, &b) == 1 {
            return Ok((a, b));
        }
        let mid = (&a + &b) / BigRational::from_integer(BigInt::from(2));
        if chain.count_distinct(&a, &mid) >= 1 {
            b = mid;
        } else {
            a = mid;
        }
    }
    Err(Error::IllConditioned(
        "could not isolate the smallest positive root (clustered roots?)".to_string(),
    ))
}

/// Halves `(a, b]` while keeping the unique root of `p` (tracked by its
/// Sturm chain) inside.
fn halve_keeping_root(
    chain: &SturmChain,
    a: &mut BigRational,
    b: &mut BigRational,
) {
    let mid = (&*a + &*b) / BigRational::from_integer(BigInt::from(2));
    if chain.count_distinct(a, &mid) >= 1 {
        *b = mid;
    } else {
        *a = mid;
    }
}

/// Verifies the pencil structure for a hyperbolic `p` with `p(0) != 0`:
/// forms `q = C p - x p'` exactly, counts its real roots, and counts its
/// roots in the gap below the smallest positive root of `p`.
///
/// # Errors
///
/// [`Error::Domain`] if `p` is constant, `p(0) = 0`, `p` is not
/// hyperbolic, or `p` has no positive roots; [`Error::IllConditioned`] if
/// exact bisection cannot separate `q`'s roots from `p`'s smallest
/// (shared or clustered roots).
pub fn verify_hyperbolic_pencil(p: &Poly, c: &BigRational) -> Result<PencilReport> {
    if p.is_constant() {
        return Err(Error::Domain(
            "pencil verification needs a nonconstant polynomial".to_string(),
        ));
    }
    if p.eval(&BigRational::zero()).is_zero() {
        return Err(Error::Domain(
            "pencil verification needs p(0) != 0".to_string(),
        ));
    }
    if count_real_roots_total(p)? != p.degree() {
        return Err(Error::Domain(
            "pencil verification needs a hyperbolic polynomial".to_string(),
        ));
    }
    // q_k = (C - k) p_k in ascending coefficients.
    let q = Poly::new(
        p.coefficients()
            .iter()
            .enumerate()
            .map(|(k, pk)| (c - BigRational::from_integer(BigInt::from(k))) * pk)
            .collect(),
    );
    if q.is_zero() {
        return Err(Error::Domain(
            "pencil degenerated to the zero polynomial".to_string(),
        ));
    }
    let degree = q.degree();
    let real_roots = count_real_roots_total(&q)?;
    let hyperbolic = real_roots == degree;

    // Gap count: isolate x1 of p, shrink its interval until q has no
    // roots inside the ambiguous part, then count q on (0, a].
    let p_sf = p.square_free();
    let (mut a, mut b) = isolate_smallest_positive(&p_sf)?;
    let p_chain = SturmChain::new(&p_sf);
    let q_sf = q.square_free();
    let q_chain = SturmChain::new(&q_sf);
    let mut separated = false;
    for _ in 0..tolerances::EXACT_BISECT_MAX_ITERS {
        if a.is_positive() && q_chain.count_distinct(&a, &b) == 0 {
            separated = true;
            break;
        }
        halve_keeping_root(&p_chain, &mut a, &mut b);
    }
    if !separated {
        return Err(Error::IllConditioned(
            "could not separate pencil roots from the smallest root of p".to_string(),
        ));
    }
    let zero = BigRational::zero();
    let roots_in_gap = count_rational(&q, &zero, &a)?;
    Ok(PencilReport {
        degree,
        real_roots,
        hyperbolic,
        roots_in_gap,
    })
}

/// Result of the truncated-section precedence verification.
#[derive(Debug, Clone)]
pub struct PrecedenceReport {
    /// Rational isolation interval of the pencil's smallest positive root
    /// (endpoints rounded to `f64` for reporting).
    pub pencil_interval: (f64, f64),
    /// Rational isolation interval of the truncation's smallest positive
    /// root.
    pub section_interval: (f64, f64),
    /// Whether the pencil root certifiably precedes the section root
    /// (disjoint intervals, pencil first).
    pub precedes: bool,
    /// Floating-point cross-check on the untruncated series: the weighted
    /// section is negative near the origin and positive at the first zero
    /// of the plain series.
    pub function_sign_change: bool,
}

/// Exact ascending coefficients `(-1)^k c_k` of the degree-`terms`
/// truncation of the normalized series in the `u`-variable.
fn section_poly_exact(nu: &BigRational, n: u32, terms: usize) -> Result<Poly> {
    let mut coeffs = Vec::with_capacity(terms + 1);
    let mut c = BigRational::one();
    coeffs.push(c.clone());
    for m in 1..=terms {
        let mf = BigRational::from_integer(BigInt::from(m));
        let two_m = BigRational::from_integer(BigInt::from(2 * m));
        let one = BigRational::one();
        let nf = BigRational::from_integer(BigInt::from(n));
        let f1 = &two_m + nu - &one;
        let f2 = &two_m + nu;
        let g1 = &two_m + nu - &nf - &one;
        let g2 = &two_m + nu - &nf;
        let g3 = &mf + nu;
        let den = &mf * &g1 * &g2 * &g3;
        if den.is_zero() {
            return Err(Error::Domain(format!(
                "series coefficient {m} has a vanishing denominator for nu = {nu}, n = {n}"
            )));
        }
        c = c * f1 * f2 / den;
        let signed = if m % 2 == 1 { -c.clone() } else { c.clone() };
        coeffs.push(signed);
    }
    Ok(Poly::new(coeffs))
}

/// Verifies, in exact arithmetic, that for `a < 0` the smallest positive
/// root of the pencil `a P - x P'` of the degree-`terms` series truncation
/// `P` strictly precedes the smallest positive root of `P` itself, and
/// cross-checks the corresponding sign change on the full series.
///
/// # Errors
///
/// [`Error::Domain`] for `a >= 0` or `terms` outside
/// `2..=`[`tolerances::MAX_SECTION_ORDER`]; [`Error::IllConditioned`] if
/// the two roots cannot be separated within the bisection budget.
pub fn verify_zero_precedence(
    order: &Order,
    a: f64,
    terms: usize,
    policy: &TruncationPolicy,
) -> Result<PrecedenceReport> {
    if !(a < 0.0) {
        return Err(Error::Domain(format!(
            "precedence verification needs a < 0, got {a}"
        )));
    }
    if !(2..=tolerances::MAX_SECTION_ORDER).contains(&terms) {
        return Err(Error::Domain(format!(
            "truncation order must be in 2..={}, got {terms}",
            tolerances::MAX_SECTION_ORDER
        )));
    }
    let nu_rat = rat(order.nu())?;
    let a_rat = rat(a)?;
    let p = section_poly_exact(&nu_rat, order.n(), terms)?;
    // Pencil in diagonal form: w_k = (a - k) p_k.
    let w = Poly::new(
        p.coefficients()
            .iter()
            .enumerate()
            .map(|(k, pk)| (&a_rat - BigRational::from_integer(BigInt::from(k))) * pk)
            .collect(),
    );

    let p_sf = p.square_free();
    let w_sf = w.square_free();
    let (mut pa, mut pb) = isolate_smallest_positive(&p_sf)?;
    let (mut wa, mut wb) = isolate_smallest_positive(&w_sf)?;
    let p_chain = SturmChain::new(&p_sf);
    let w_chain = SturmChain::new(&w_sf);
    let mut precedes = None;
    for _ in 0..tolerances::EXACT_BISECT_MAX_ITERS {
        if wb <= pa {
            precedes = Some(true);
            break;
        }
        if pb <= wa {
            precedes = Some(false);
            break;
        }
        // Halve the wider interval.
        if (&pb - &pa) >= (&wb - &wa) {
            halve_keeping_root(&p_chain, &mut pa, &mut pb);
        } else {
            halve_keeping_root(&w_chain, &mut wa, &mut wb);
        }
    }
    let precedes = precedes.ok_or_else(|| {
        Error::IllConditioned(
            "could not separate the pencil root from the truncation root".to_string(),
        )
    })?;

    // Function-level cross-check on the untruncated series: the section
    // with weight 2a - 2m is 2a < 0 at the origin and positive at the
    // first zero of the plain series.
    let (nu, n) = (order.nu(), order.n());
    let weight = Weights::new([2.0 * a, -2.0, 0.0, 0.0]);
    let near0 = series::sections_z(nu, n, &[weight], tolerances::SCAN_START, policy)?.values[0];
    let j1 = zeros::first_zero(ZeroFamily::JDeriv, order, policy)?;
    let at_j1 = series::sections_z(nu, n, &[weight], j1, policy)?.values[0];
    let function_sign_change = near0 < 0.0 && at_j1 > 0.0;

    let to_f64 = |r: &BigRational| -> f64 {
        use num_traits::ToPrimitive;
        r.to_f64().unwrap_or(f64::NAN)
    };
    Ok(PrecedenceReport {
        pencil_interval: (to_f64(&wa), to_f64(&wb)),
        section_interval: (to_f64(&pa), to_f64(&pb)),
        precedes,
        function_sign_change,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[f64]) -> Poly {
        Poly::from_f64(coeffs).unwrap()
    }

    #[test]
    fn counting_handles_multiplicity_and_endpoints() {
        // (x - 1)^2 (x - 3) = -3 + 7x - 5x^2 + x^3.
        let p = poly(&[-3.0, 7.0, -5.0, 1.0]);
        assert_eq!(count_real_roots(&p, 0.0, 4.0).unwrap(), 3);
        assert_eq!(count_real_roots(&p, 0.0, 2.0).unwrap(), 2);
        assert_eq!(count_real_roots(&p, 2.0, 4.0).unwrap(), 1);
        // hi exactly on the double root: included with multiplicity.
        assert_eq!(count_real_roots(&p, 0.0, 1.0).unwrap(), 2);
        // lo exactly on it: excluded.
        assert_eq!(count_real_roots(&p, 1.0, 3.0).unwrap(), 1);
        assert_eq!(count_real_roots_total(&p).unwrap(), 3);
        // Not hyperbolic: x^2 + 1.
        assert_eq!(count_real_roots_total(&poly(&[1.0, 0.0, 1.0])).unwrap(), 0);
    }

    #[test]
    fn jensen_of_unit_moments_is_binomial() {
        let mu: Vec<BigRational> = (0..6).map(|_| BigRational::one()).collect();
        let p = jensen_poly(&mu, 5).unwrap();
        // (1 + x)^5.
        let want = [1.0, 5.0, 10.0, 10.0, 5.0, 1.0];
        for (k, c) in p.coefficients().iter().enumerate() {
            assert_eq!(c, &rat(want[k]).unwrap());
        }
        assert!(matches!(
            jensen_poly(&mu[..3], 5),
            Err(Error::LengthMismatch(_))
        ));
    }

    #[test]
    fn pencil_examples() {
        // p = (1 - x)(1 - x/2), C = -1: two real pencil roots 1 -+ 3^{-1/2},
        // exactly one in the gap (0, 1).
        let p = poly(&[1.0, -1.5, 0.5]);
        let rep = verify_hyperbolic_pencil(&p, &rat(-1.0).unwrap()).unwrap();
        assert_eq!(rep.degree, 2);
        assert!(rep.hyperbolic);
        assert_eq!(rep.roots_in_gap, 1);

        // p = 1 - x, C = -2: single pencil root 2/3, inside the gap.
        let p = poly(&[1.0, -1.0]);
        let rep = verify_hyperbolic_pencil(&p, &rat(-2.0).unwrap()).unwrap();
        assert!(rep.hyperbolic);
        assert_eq!(rep.roots_in_gap, 1);

        // Same p with C = +1: the pencil degenerates to a constant; no
        // root in the gap.
        let rep = verify_hyperbolic_pencil(&p, &rat(1.0).unwrap()).unwrap();
        assert_eq!(rep.degree, 0);
        assert_eq!(rep.roots_in_gap, 0);

        // Nonnegative C below the degree: still no roots in the gap.
        let p = poly(&[1.0, -1.5, 0.5]);
        let rep = verify_hyperbolic_pencil(&p, &rat(0.5).unwrap()).unwrap();
        assert!(rep.hyperbolic);
        assert_eq!(rep.roots_in_gap, 0);

        // Non-hyperbolic input is rejected.
        assert!(matches!(
            verify_hyperbolic_pencil(&poly(&[1.0, 0.0, 1.0]), &rat(-1.0).unwrap()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn precedence_for_a_fractional_order() {
        let policy = TruncationPolicy::default();
        let order = Order::new(2.5, 0).unwrap();
        let rep = verify_zero_precedence(&order, -0.5, 8, &policy).unwrap();
        assert!(rep.precedes, "{rep:?}");
        assert!(rep.function_sign_change, "{rep:?}");
        assert!(rep.pencil_interval.1 <= rep.section_interval.0);

        assert!(matches!(
            verify_zero_precedence(&order, 0.5, 8, &policy),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            verify_zero_precedence(&order, -0.5, 1, &policy),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn exact_coefficients_match_float_recurrence() {
        let nu = rat(2.5).unwrap();
        let p = section_poly_exact(&nu, 1, 4).unwrap();
        use num_traits::ToPrimitive;
        // Same recurrence in f64.
        let mut c = 1.0f64;
        for (m, coeff) in p.coefficients().iter().enumerate() {
            let got = coeff.to_f64().unwrap();
            let want = if m % 2 == 1 { -c } else { c };
            assert!((got - want).abs() <= 1e-15 * want.abs(), "m = {m}");
            let mf = m as f64 + 1.0;
            c *= (2.0 * mf + 2.5 - 1.0) * (2.0 * mf + 2.5)
                / (mf * (2.0 * mf + 2.5 - 2.0) * (2.0 * mf + 2.5 - 1.0 - 0.0) * (mf + 2.5));
        }
    }
}
