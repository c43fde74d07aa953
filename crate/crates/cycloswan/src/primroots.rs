//! Primitive-root testing and least-inert-prime searches.
//!
//! An odd prime p is inert in Q(zeta_m) exactly when p is a primitive root
//! mod m, which confines m to 4, q^n, or 2q^n for an odd prime q. Two search
//! strategies are implemented: the arithmetic-progression walk from the least
//! primitive root (which finds the least prime *congruent to it*), and the
//! direct scan over odd primes (which finds the true least inert prime > 2).

use serde::Serialize;

use crate::bigarith::{
    self, euler_phi_u64, factor, is_prime_u64, multiplicative_order, prime_power, Natural,
};
use crate::error::{Error, Result};

/// Cap on the progression walk; Dirichlet guarantees termination long before
/// this for genuine primitive roots.
const PROGRESSION_CAP: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMethod {
    Progression,
    Direct,
    TwoMReduction,
}

/// One row of an inert-prime table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InertRecord {
    pub m: u64,
    pub least_primitive_root: u64,
    pub inert_prime: u64,
    pub method: SearchMethod,
}

/// Which table to generate: the progression-method table admits every m with
/// primitive roots (including m = 2 mod 4); the direct table restricts to
/// m not congruent to 2 mod 4 and scans for the true least inert prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableMode {
    Progression,
    Direct,
}

/// Does an inert odd prime exist for m, i.e. is m = 4, q^n, or 2q^n with q an
/// odd prime? Errors below m = 3.
pub fn inert_prime_exists(m: u64) -> Result<bool> {
    if m < 3 {
        return Err(Error::MTooSmall(m));
    }
    if m == 4 {
        return Ok(true);
    }
    let odd_part = if m.is_multiple_of(2) { m / 2 } else { m };
    if odd_part % 2 == 0 {
        // 4 | m with m != 4
        return Ok(false);
    }
    Ok(matches!(prime_power(odd_part), Some((q, _)) if q > 2))
}

/// Is r a primitive root mod m, i.e. does r have order phi(m)?
/// Non-units are never primitive roots; defined for all m >= 1.
pub fn is_primitive_root(r: u64, m: u64) -> bool {
    if m <= 1 {
        return true;
    }
    if bigarith::gcd(&Natural::from(r), &Natural::from(m)) != Natural::from(1u32) {
        return false;
    }
    let phi = euler_phi_u64(m);
    let phi_fact = factor(&Natural::from(phi)).expect("phi >= 1");
    let order = multiplicative_order(&Natural::from(r), &Natural::from(m), &phi_fact)
        .expect("coprimality checked");
    order == Natural::from(phi)
}

/// Least r >= 2 that is a primitive root mod m; requires m admissible.
pub fn least_primitive_root(m: u64) -> Result<u64> {
    if !inert_prime_exists(m)? {
        return Err(Error::NoPrimitiveRoot(m));
    }
    let phi = euler_phi_u64(m);
    let phi_fact = factor(&Natural::from(phi)).expect("phi >= 1");
    let m_big = Natural::from(m);
    let mut r = 2u64;
    loop {
        if bigarith::gcd(&Natural::from(r), &m_big) == Natural::from(1u32) {
            let order = multiplicative_order(&Natural::from(r), &m_big, &phi_fact)
                .expect("coprimality checked");
            if order == Natural::from(phi) {
                return Ok(r);
            }
        }
        r += 1;
    }
}

/// The progression method: if r > 2 and prime, take it; otherwise walk
/// r + m, r + 2m, ... to the first prime. Equivalently, the least prime > 2
/// congruent to r mod m. `r` should be the least primitive root mod m.
pub fn progression_prime(m: u64, r: u64) -> Result<u64> {
    if r > 2 && is_prime_u64(r) {
        return Ok(r);
    }
    let mut candidate = r;
    for _ in 0..PROGRESSION_CAP {
        candidate += m;
        if is_prime_u64(candidate) {
            return Ok(candidate);
        }
    }
    Err(Error::ProgressionCapExceeded(PROGRESSION_CAP))
}

/// Scan odd primes 3, 5, 7, ... for the first p coprime to m that is a
/// primitive root mod m: the true least inert prime greater than 2.
pub fn least_inert_prime_direct(m: u64) -> Result<u64> {
    if !inert_prime_exists(m)? {
        return Err(Error::NoPrimitiveRoot(m));
    }
    let mut p = 3u64;
    loop {
        if is_prime_u64(p) && !m.is_multiple_of(p) && is_primitive_root(p, m) {
            return Ok(p);
        }
        p += 2;
    }
}

/// For m an odd prime power, the least primitive root mod 2m equals the least
/// primitive root mod m that is greater than 2.
pub fn two_m_reduction(m: u64) -> Result<u64> {
    match prime_power(m) {
        Some((q, _)) if q > 2 => {}
        _ => return Err(Error::NotOddPrimePower(m)),
    }
    let r = least_primitive_root(2 * m)?;
    // units mod 2m are odd, so an even primitive root is impossible
    assert!(r % 2 == 1, "primitive root mod 2m must be odd");
    Ok(r)
}

/// Generate an inert-prime table over an inclusive range of m values,
/// skipping inadmissible m. Rows come back sorted by m.
pub fn generate_table(
    range: std::ops::RangeInclusive<u64>,
    mode: TableMode,
) -> Result<Vec<InertRecord>> {
    let mut rows = Vec::new();
    for m in range {
        if m < 3 || !inert_prime_exists(m)? {
            continue;
        }
        if mode == TableMode::Direct && m % 4 == 2 {
            continue;
        }
        let r = least_primitive_root(m)?;
        let record = match mode {
            TableMode::Progression => InertRecord {
                m,
                least_primitive_root: r,
                inert_prime: progression_prime(m, r)?,
                method: SearchMethod::Progression,
            },
            TableMode::Direct => InertRecord {
                m,
                least_primitive_root: r,
                inert_prime: least_inert_prime_direct(m)?,
                method: SearchMethod::Direct,
            },
        };
        rows.push(record);
    }
    Ok(rows)
}
