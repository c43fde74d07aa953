//! Cyclotomic polynomials over Z and arithmetic in the finite field
//! F_p[z]/(Phi_m(z)) that realizes the residue ring of Z[zeta_mp] modulo
//! (1 - zeta_p) when p is inert.
//!
//! Field elements are coefficient vectors of length phi(m) with entries fully
//! reduced mod p; the class of z is a primitive m-th root of unity.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::bigarith::{
    self, divisors, euler_phi_u64, factor, is_prime, multiplicative_order, pk_minus_one_factor_with,
    FactorSettings, Factorization, Natural,
};
use crate::cache::FactorCache;
use crate::error::{Error, Result};

/// Dense integer polynomial, coefficients in ascending degree, canonical
/// (no zero leading coefficient). The empty vector is the zero polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// z^n - 1.
    pub fn z_pow_minus_one(n: u64) -> Self {
        let mut coeffs = vec![BigInt::zero(); n as usize + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n as usize] = BigInt::one();
        IntPoly { coeffs }
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Coefficients reduced into [0, p), padded or truncated to the natural
    /// length of the polynomial.
    pub fn coeffs_mod(&self, p: u64) -> Vec<u64> {
        let p_big = BigInt::from(p);
        self.coeffs
            .iter()
            .map(|c| c.mod_floor(&p_big).to_u64().expect("residue fits u64"))
            .collect()
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }

    /// Exact division by a monic divisor; panics if the division leaves a
    /// remainder (an internal invariant for cyclotomic construction).
    fn div_exact(&self, divisor: &IntPoly) -> IntPoly {
        let d = divisor.degree().expect("divisor must be nonzero");
        assert!(
            divisor.coeffs[d].is_one(),
            "div_exact expects a monic divisor"
        );
        let n = match self.degree() {
            None => return IntPoly::zero(),
            Some(n) => n,
        };
        assert!(n >= d, "degree underflow in exact division");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - d + 1];
        for i in (d..=n).rev() {
            let c = std::mem::take(&mut rem[i]);
            if c.is_zero() {
                continue;
            }
            for (j, m) in divisor.coeffs.iter().enumerate().take(d) {
                rem[i - d + j] -= &c * m;
            }
            quot[i - d] = c;
        }
        assert!(
            rem.iter().all(|c| c.is_zero()),
            "nonzero remainder in exact division"
        );
        IntPoly::from_coeffs(quot)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            if k > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if k == 1 {
                    write!(f, "z")?;
                } else {
                    write!(f, "z^{k}")?;
                }
            }
        }
        Ok(())
    }
}

/// The m-th cyclotomic polynomial over the integers, monic of degree phi(m),
/// computed by repeated exact division of z^m - 1 by Phi_d for proper
/// divisors d. Panics on m = 0.
pub fn cyclotomic_poly(m: u64) -> IntPoly {
    assert!(m >= 1, "cyclotomic_poly requires m >= 1");
    let mut memo = HashMap::new();
    cyclo_rec(m, &mut memo)
}

fn cyclo_rec(m: u64, memo: &mut HashMap<u64, IntPoly>) -> IntPoly {
    if let Some(hit) = memo.get(&m) {
        return hit.clone();
    }
    let result = if m == 1 {
        IntPoly::from_i64(&[-1, 1])
    } else {
        let mut quotient = IntPoly::z_pow_minus_one(m);
        for d in divisors(m) {
            if d == m {
                continue;
            }
            let phi_d = cyclo_rec(d, memo);
            quotient = quotient.div_exact(&phi_d);
        }
        quotient
    };
    memo.insert(m, result.clone());
    result
}

/// Factorization state of the multiplicative group order N = p^phi(m) - 1.
#[derive(Clone, Debug)]
pub enum GroupOrderFactors {
    Complete(Factorization),
    /// Budget ran out: the factored part plus composite cofactors, with
    /// `found * product(cofactors) = N`.
    Partial {
        found: Factorization,
        cofactors: Vec<Natural>,
    },
}

impl GroupOrderFactors {
    pub fn is_complete(&self) -> bool {
        matches!(self, GroupOrderFactors::Complete(_))
    }
}

/// The realized finite field F_p[z]/(Phi_m(z)) for p inert mod m.
#[derive(Clone, Debug)]
pub struct FieldSpec {
    m: u64,
    p: u64,
    degree: usize,
    /// Phi_m mod p, ascending, monic, length degree + 1.
    modulus: Vec<u64>,
    group_order: Natural,
    factors: GroupOrderFactors,
}

/// A residue class: coefficient vector of length `FieldSpec::degree`,
/// entries in [0, p).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElem {
    coeffs: Vec<u64>,
}

impl FieldElem {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Build the field for an inert prime, factoring the group order through the
/// algebraic split of p^phi(m) - 1. Unbudgeted: always returns complete
/// factors or an error.
pub fn make_field(m: u64, p: u64) -> Result<FieldSpec> {
    make_field_with(m, p, &FactorSettings::default(), None)
}

/// `make_field` with factoring budget/seed/cache. If the budget expires the
/// spec carries partial group-order factors instead of failing.
pub fn make_field_with(
    m: u64,
    p: u64,
    settings: &FactorSettings,
    cache: Option<&mut FactorCache>,
) -> Result<FieldSpec> {
    if m == 0 {
        return Err(Error::Domain("m must be >= 1".into()));
    }
    let p_big = Natural::from(p);
    if !is_prime(&p_big) {
        return Err(Error::ExpectedPrime(p_big));
    }
    if m.is_multiple_of(p) {
        return Err(Error::NotCoprime {
            a: p_big,
            n: Natural::from(m),
        });
    }
    let degree = euler_phi_u64(m);
    let m_big = Natural::from(m);
    let phi_fact = factor(&Natural::from(degree))?;
    let f = multiplicative_order(&p_big, &m_big, &phi_fact)?
        .to_u64()
        .expect("order of p mod m fits u64");
    if f != degree {
        return Err(Error::NotInert {
            m,
            p,
            residue_degree: f,
            split_count: degree / f,
        });
    }
    let modulus = cyclotomic_poly(m).coeffs_mod(p);
    debug_assert_eq!(modulus.len(), degree as usize + 1);
    debug_assert_eq!(*modulus.last().unwrap(), 1);

    let group_order = p_big.pow(degree as u32) - 1u32;
    let factors = match pk_minus_one_factor_with(&p_big, degree as u32, settings, cache) {
        Ok(f) => GroupOrderFactors::Complete(f),
        Err(Error::BudgetExhausted(partial)) => GroupOrderFactors::Partial {
            found: partial.found_part(),
            cofactors: partial.cofactors,
        },
        Err(e) => return Err(e),
    };
    Ok(FieldSpec {
        m,
        p,
        degree: degree as usize,
        modulus,
        group_order,
        factors,
    })
}

impl FieldSpec {
    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Phi_m mod p, ascending coefficients, monic.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// N = p^phi(m) - 1, the order of the multiplicative group.
    pub fn group_order(&self) -> &Natural {
        &self.group_order
    }

    pub fn group_order_factors(&self) -> &GroupOrderFactors {
        &self.factors
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem {
            coeffs: vec![0; self.degree],
        }
    }

    pub fn one(&self) -> FieldElem {
        self.scalar(1)
    }

    pub fn scalar(&self, a: u64) -> FieldElem {
        let mut coeffs = vec![0; self.degree];
        coeffs[0] = a % self.p;
        FieldElem { coeffs }
    }

    /// The class of z, a primitive m-th root of unity.
    pub fn z(&self) -> FieldElem {
        self.monomial(1)
    }

    /// z^e reduced mod Phi_m; e may be any machine integer.
    pub fn monomial(&self, e: u64) -> FieldElem {
        let e = (e % self.m) as usize;
        if e < self.degree {
            let mut coeffs = vec![0; self.degree];
            coeffs[e] = 1 % self.p;
            return FieldElem { coeffs };
        }
        let mut raw = vec![0u64; e + 1];
        raw[e] = 1;
        self.reduce(raw)
    }

    /// Build an element from raw coefficients (length at most `degree`),
    /// reducing entries mod p.
    pub fn elem(&self, coeffs: &[u64]) -> FieldElem {
        assert!(
            coeffs.len() <= self.degree,
            "coefficient vector longer than field degree"
        );
        let mut out = vec![0; self.degree];
        for (i, &c) in coeffs.iter().enumerate() {
            out[i] = c % self.p;
        }
        FieldElem { coeffs: out }
    }

    pub fn is_zero(&self, x: &FieldElem) -> bool {
        x.coeffs.iter().all(|&c| c == 0)
    }

    fn check(&self, x: &FieldElem) {
        assert_eq!(
            x.coeffs.len(),
            self.degree,
            "element does not belong to this field"
        );
    }

    pub fn add(&self, x: &FieldElem, y: &FieldElem) -> FieldElem {
        self.check(x);
        self.check(y);
        let coeffs = x
            .coeffs
            .iter()
            .zip(&y.coeffs)
            .map(|(&a, &b)| {
                let s = a + b;
                if s >= self.p {
                    s - self.p
                } else {
                    s
                }
            })
            .collect();
        FieldElem { coeffs }
    }

    pub fn sub(&self, x: &FieldElem, y: &FieldElem) -> FieldElem {
        self.check(x);
        self.check(y);
        let coeffs = x
            .coeffs
            .iter()
            .zip(&y.coeffs)
            .map(|(&a, &b)| if a >= b { a - b } else { a + self.p - b })
            .collect();
        FieldElem { coeffs }
    }

    pub fn neg(&self, x: &FieldElem) -> FieldElem {
        self.check(x);
        let coeffs = x
            .coeffs
            .iter()
            .map(|&a| if a == 0 { 0 } else { self.p - a })
            .collect();
        FieldElem { coeffs }
    }

    pub fn mul(&self, x: &FieldElem, y: &FieldElem) -> FieldElem {
        self.check(x);
        self.check(y);
        if self.degree == 0 {
            return self.zero();
        }
        let mut prod = vec![0u64; 2 * self.degree - 1];
        for (i, &a) in x.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let cell = &mut prod[i + j];
                *cell = ((*cell as u128 + a as u128 * b as u128) % self.p as u128) as u64;
            }
        }
        self.reduce(prod)
    }

    /// Long division of `raw` by the monic modulus, returning the remainder
    /// as a field element.
    fn reduce(&self, mut raw: Vec<u64>) -> FieldElem {
        let d = self.degree;
        let p = self.p as u128;
        for i in (d..raw.len()).rev() {
            let c = raw[i] as u128;
            if c == 0 {
                continue;
            }
            raw[i] = 0;
            for j in 0..d {
                let mj = self.modulus[j] as u128;
                if mj == 0 {
                    continue;
                }
                let cell = raw[i - d + j] as u128;
                raw[i - d + j] = ((cell + c * (p - mj)) % p) as u64;
            }
        }
        raw.truncate(d);
        raw.resize(d, 0);
        FieldElem { coeffs: raw }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm on
    /// polynomials over Z/pZ. Errors on zero.
    pub fn inv(&self, x: &FieldElem) -> Result<FieldElem> {
        self.check(x);
        if self.is_zero(x) {
            return Err(Error::DivisionByZero);
        }
        let p = self.p;
        // r0 = modulus, r1 = x; track s with s0 = 0, s1 = 1 so that
        // s * x = r (mod modulus) throughout.
        let mut r0: Vec<u64> = trim(self.modulus.clone());
        let mut r1: Vec<u64> = trim(x.coeffs.clone());
        let mut s0: Vec<u64> = Vec::new();
        let mut s1: Vec<u64> = vec![1];
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1, p);
            let qs1 = poly_mul(&q, &s1, p);
            let s_next = poly_sub(&s0, &qs1, p);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s_next;
        }
        // r0 is a nonzero constant: the modulus is irreducible and x != 0.
        assert_eq!(r0.len(), 1, "gcd with the irreducible modulus must be constant");
        let c_inv = bigarith::pow_mod_u64(r0[0], p - 2, p);
        let inv_poly = poly_scale(&s0, c_inv, p);
        Ok(self.elem(&inv_poly))
    }

    /// Square-and-multiply exponentiation; 0^0 = 1 by convention.
    pub fn pow(&self, x: &FieldElem, e: &Natural) -> FieldElem {
        self.check(x);
        if e.is_zero() {
            return self.one();
        }
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, x);
            }
        }
        acc
    }

    pub fn pow_u64(&self, x: &FieldElem, e: u64) -> FieldElem {
        self.pow(x, &Natural::from(e))
    }

    /// Least o >= 1 with x^o = 1, by dividing primes out of the factored
    /// group order. Errors on zero input or incomplete factorization.
    pub fn element_order(&self, x: &FieldElem) -> Result<Natural> {
        if self.is_zero(x) {
            return Err(Error::DivisionByZero);
        }
        match &self.factors {
            GroupOrderFactors::Complete(f) => Ok(self.descend_order(x, &self.group_order, f)),
            GroupOrderFactors::Partial { .. } => Err(Error::OrderUnavailable),
        }
    }

    /// A certified divisor of the true order of x, equal to the true order
    /// when the group-order factorization is complete. With partial factors
    /// N = F * C this is the exact order of x^C, which always divides both
    /// ord(x) and F.
    pub fn certified_order_divisor(&self, x: &FieldElem) -> Result<Natural> {
        if self.is_zero(x) {
            return Err(Error::DivisionByZero);
        }
        match &self.factors {
            GroupOrderFactors::Complete(f) => Ok(self.descend_order(x, &self.group_order, f)),
            GroupOrderFactors::Partial { found, cofactors } => {
                let mut c = Natural::one();
                for co in cofactors {
                    c *= co;
                }
                let y = self.pow(x, &c);
                let f_val = found.value();
                Ok(self.descend_order(&y, &f_val, found))
            }
        }
    }

    fn descend_order(&self, x: &FieldElem, bound: &Natural, factors: &Factorization) -> Natural {
        let one = self.one();
        let mut order = bound.clone();
        for (q, e) in factors.pairs() {
            for _ in 0..*e {
                if !(&order % q).is_zero() {
                    break;
                }
                let candidate = &order / q;
                if self.pow(x, &candidate) == one {
                    order = candidate;
                } else {
                    break;
                }
            }
        }
        order
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let poly = IntPoly::from_coeffs(self.modulus.iter().map(|&c| BigInt::from(c)).collect());
        write!(f, "F_{}[z]/({})", self.p, poly)
    }
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = ((out[i + j] as u128 + x as u128 * y as u128) % p as u128) as u64;
        }
    }
    trim(out)
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            if x >= y {
                x - y
            } else {
                x + p - y
            }
        })
        .collect();
    trim(out)
}

fn poly_scale(a: &[u64], c: u64, p: u64) -> Vec<u64> {
    trim(
        a.iter()
            .map(|&x| ((x as u128 * c as u128) % p as u128) as u64)
            .collect(),
    )
}

/// Division with remainder over Z/pZ; divisor need not be monic.
fn poly_divmod(num: &[u64], den: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    assert!(!den.is_empty(), "division by the zero polynomial");
    if num.len() < den.len() {
        return (Vec::new(), num.to_vec());
    }
    let lead_inv = bigarith::pow_mod_u64(*den.last().unwrap(), p - 2, p);
    let mut rem = num.to_vec();
    let mut quot = vec![0u64; num.len() - den.len() + 1];
    for i in (den.len() - 1..num.len()).rev() {
        let c = bigarith::mul_mod_u64(rem[i], lead_inv, p);
        if c == 0 {
            continue;
        }
        quot[i - (den.len() - 1)] = c;
        for (j, &dj) in den.iter().enumerate() {
            let idx = i - (den.len() - 1) + j;
            let sub = bigarith::mul_mod_u64(c, dj, p);
            rem[idx] = if rem[idx] >= sub {
                rem[idx] - sub
            } else {
                rem[idx] + p - sub
            };
        }
    }
    (trim(quot), trim(rem))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_poly(1), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), IntPoly::from_i64(&[1, 1]));
        assert_eq!(cyclotomic_poly(3), IntPoly::from_i64(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(4), IntPoly::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(9), IntPoly::from_i64(&[1, 0, 0, 1, 0, 0, 1]));
        assert_eq!(cyclotomic_poly(12), IntPoly::from_i64(&[1, 0, -1, 0, 1]));
        // first index with a coefficient outside {-1, 0, 1}
        let phi105 = cyclotomic_poly(105);
        assert!(phi105.coeffs().iter().any(|c| *c == BigInt::from(-2)));
    }

    #[test]
    fn degrees_sum_to_m() {
        for m in 1..=100u64 {
            let total: usize = divisors(m)
                .into_iter()
                .map(|d| cyclotomic_poly(d).degree().unwrap())
                .sum();
            assert_eq!(total as u64, m);
        }
    }

    #[test]
    fn value_at_one() {
        // Phi_m(1) = q for prime powers q^k, 1 otherwise (m > 1)
        let one = BigInt::one();
        for m in 2..=100u64 {
            let v = cyclotomic_poly(m).eval(&one);
            match bigarith::prime_power(m) {
                Some((q, _)) => assert_eq!(v, BigInt::from(q), "Phi_{m}(1)"),
                None => assert_eq!(v, one, "Phi_{m}(1)"),
            }
        }
        assert_eq!(cyclotomic_poly(1).eval(&one), BigInt::zero());
    }

    #[test]
    fn display_format() {
        assert_eq!(cyclotomic_poly(9).to_string(), "z^6 + z^3 + 1");
        assert_eq!(cyclotomic_poly(1).to_string(), "z - 1");
        assert_eq!(cyclotomic_poly(12).to_string(), "z^4 - z^2 + 1");
    }

    #[test]
    fn make_field_basics() {
        let f = make_field(3, 5).unwrap();
        assert_eq!(f.degree(), 2);
        assert_eq!(f.group_order(), &Natural::from(24u32));

        let f = make_field(9, 5).unwrap();
        assert_eq!(f.degree(), 6);
        assert_eq!(f.group_order(), &Natural::from(15624u32));

        match make_field(13, 5) {
            Err(Error::NotInert {
                residue_degree,
                split_count,
                ..
            }) => {
                assert_eq!(residue_degree, 4);
                assert_eq!(split_count, 3);
            }
            other => panic!("expected inertness violation, got {other:?}"),
        }
    }

    #[test]
    fn z_is_a_primitive_mth_root() {
        for (m, p) in [(3, 5), (4, 3), (9, 5), (5, 13), (2, 11)] {
            let f = make_field(m, p).unwrap();
            let z = f.z();
            assert_eq!(f.pow_u64(&z, m), f.one(), "z^{m} = 1");
            for k in 1..m {
                assert_ne!(f.pow_u64(&z, k), f.one(), "z^{k} != 1 below {m}");
            }
        }
    }

    #[test]
    fn hand_reduced_product() {
        // (1 + z)^2 = 1 + 2z + z^2 and z^2 = -z - 1 mod Phi_3, so the
        // product is z.
        let f = make_field(3, 5).unwrap();
        let x = f.elem(&[1, 1]);
        assert_eq!(f.mul(&x, &x), f.elem(&[0, 1]));
    }

    #[test]
    fn mul_identities() {
        let f = make_field(9, 5).unwrap();
        let x = f.elem(&[2, 0, 1, 4, 0, 3]);
        assert_eq!(f.add(&x, &f.zero()), x);
        assert_eq!(f.mul(&x, &f.one()), x);
        let zm1 = f.monomial(8); // z^{m-1}
        assert_eq!(f.mul(&f.z(), &zm1), f.one());
        assert_eq!(f.add(&x, &f.neg(&x)), f.zero());
        assert_eq!(f.sub(&x, &x), f.zero());
    }

    #[test]
    fn inverses() {
        let f = make_field(9, 5).unwrap();
        assert_eq!(f.inv(&f.one()).unwrap(), f.one());
        // scalar inverse lands in the prime subfield: a^{p-2}
        let a = f.scalar(3);
        let expected = f.scalar(bigarith::pow_mod_u64(3, 3, 5));
        assert_eq!(f.inv(&a).unwrap(), expected);
        assert!(matches!(f.inv(&f.zero()), Err(Error::DivisionByZero)));

        let x = f.elem(&[1, 2, 0, 0, 3, 1]);
        let xi = f.inv(&x).unwrap();
        assert_eq!(f.mul(&x, &xi), f.one());
    }

    #[test]
    fn pow_edges() {
        let f = make_field(3, 5).unwrap();
        let x = f.elem(&[2, 3]);
        assert_eq!(f.pow(&f.zero(), &Natural::zero()), f.one(), "0^0 = 1");
        assert_eq!(f.pow(&x, &Natural::zero()), f.one());
        assert_eq!(f.pow(&x, f.group_order()), f.one(), "Lagrange");
    }

    #[test]
    fn element_orders() {
        let f = make_field(3, 5).unwrap();
        assert_eq!(f.element_order(&f.one()).unwrap(), Natural::one());
        assert_eq!(f.element_order(&f.z()).unwrap(), Natural::from(3u32));
        // ord(2 mod 5) = 4
        assert_eq!(f.element_order(&f.scalar(2)).unwrap(), Natural::from(4u32));
        // 1 - z has full order 24 in F_25
        let x = f.sub(&f.one(), &f.z());
        assert_eq!(f.element_order(&x).unwrap(), Natural::from(24u32));
        assert!(matches!(
            f.element_order(&f.zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn order_matches_brute_force_small() {
        for (m, p) in [(3u64, 5u64), (4, 3), (5, 3), (2, 11)] {
            let f = make_field(m, p).unwrap();
            // walk a few sample elements through repeated multiplication
            for seed in 1..32u64 {
                let coeffs: Vec<u64> = (0..f.degree() as u64)
                    .map(|i| (seed * 7 + i * 13) % p)
                    .collect();
                let x = f.elem(&coeffs);
                if f.is_zero(&x) {
                    continue;
                }
                let mut acc = x.clone();
                let mut count = 1u64;
                while acc != f.one() {
                    acc = f.mul(&acc, &x);
                    count += 1;
                }
                assert_eq!(
                    f.element_order(&x).unwrap(),
                    Natural::from(count),
                    "order of {x} in F_{p}^{}",
                    f.degree()
                );
            }
        }
    }

    #[test]
    fn certified_divisor_with_partial_factors() {
        let mut f = make_field(3, 5).unwrap();
        let x = f.sub(&f.one(), &f.z()); // true order 24
        // pretend only the 3-part was factored: N = 24 = 3 * 8
        f.factors = GroupOrderFactors::Partial {
            found: factor(&Natural::from(3u32)).unwrap(),
            cofactors: vec![Natural::from(8u32)],
        };
        assert!(matches!(f.element_order(&x), Err(Error::OrderUnavailable)));
        let div = f.certified_order_divisor(&x).unwrap();
        assert_eq!(div, Natural::from(3u32)); // ord(x^8) = 24 / gcd(24, 8)
    }

    #[test]
    fn degree_one_field() {
        let f = make_field(2, 11).unwrap();
        assert_eq!(f.degree(), 1);
        assert_eq!(f.group_order(), &Natural::from(10u32));
        let z = f.z();
        assert_eq!(z, f.scalar(10)); // z = -1 mod (z + 1)
        assert_eq!(f.element_order(&z).unwrap(), Natural::from(2u32));
    }
}
