//! Symbolic cyclotomic-unit generators for Z[zeta_mp] and their images under
//! the reduction map h sending zeta_mp to z and zeta_p to 1.
//!
//! Two generator families span the cyclotomic units modulo roots of unity:
//! "frac" units (1 - zeta_d^a)/(1 - zeta_d) for prime-power divisors d of mp,
//! and "flat" units 1 - zeta_d^a for non-prime-power divisors. Roots of unity
//! (-1 and zeta_mp itself) are carried along as extra generators; the reduced
//! set collapses each flat family to one Galois-orbit representative and the
//! frac family at d = p to a single generator of full order p - 1.

use num_integer::Integer as _;
use num_traits::One as _;
use serde::Serialize;

use crate::bigarith::{divisors, gcd, is_prime_u64, prime_power, Natural};
use crate::cyclofield::{FieldElem, FieldSpec};
use crate::error::{Error, Result};
use crate::primroots::least_primitive_root;

/// A symbolic cyclotomic-unit generator for n = mp.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum UnitGen {
    /// (1 - zeta_d^a)/(1 - zeta_d): d a prime-power divisor of mp with d > 1,
    /// a in (Z/dZ)^* and a != 1.
    Frac { d: u64, a: u64 },
    /// 1 - zeta_d^a: d a non-prime-power divisor of mp, a in (Z/dZ)^*.
    Flat { d: u64, a: u64 },
    /// The root of unity -1.
    MinusOne,
    /// The root of unity zeta_mp.
    Zeta,
}

impl UnitGen {
    pub fn is_root_of_unity(&self) -> bool {
        matches!(self, UnitGen::MinusOne | UnitGen::Zeta)
    }
}

impl std::fmt::Display for UnitGen {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            UnitGen::Frac { d, a } => write!(f, "frac(d={d}, a={a})"),
            UnitGen::Flat { d, a } => write!(f, "flat(d={d}, a={a})"),
            UnitGen::MinusOne => write!(f, "-1"),
            UnitGen::Zeta => write!(f, "zeta"),
        }
    }
}

fn validate_pair(m: u64, p: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::Domain("m must be >= 1".into()));
    }
    if !is_prime_u64(p) {
        return Err(Error::ExpectedPrime(Natural::from(p)));
    }
    if m.is_multiple_of(p) {
        return Err(Error::NotCoprime {
            a: Natural::from(p),
            n: Natural::from(m),
        });
    }
    m.checked_mul(p)
        .ok_or_else(|| Error::Domain("m * p overflows".into()))
}

/// The full generating set for the cyclotomic units of Z[zeta_mp], plus the
/// roots of unity -1 and zeta_mp (the latter only when mp is not a prime
/// power). Deterministic order: frac generators by (d, a), then flat by
/// (d, a), then the roots.
pub fn enumerate_generators(m: u64, p: u64) -> Result<Vec<UnitGen>> {
    let n = validate_pair(m, p)?;
    let divs = divisors(n);
    let mut gens = Vec::new();
    for &d in &divs {
        if d > 1 && prime_power(d).is_some() {
            for a in 2..d {
                if gcd(&Natural::from(a), &Natural::from(d)) == Natural::from(1u32) {
                    gens.push(UnitGen::Frac { d, a });
                }
            }
        }
    }
    for &d in &divs {
        if d > 1 && prime_power(d).is_none() {
            for a in 1..d {
                if gcd(&Natural::from(a), &Natural::from(d)) == Natural::from(1u32) {
                    gens.push(UnitGen::Flat { d, a });
                }
            }
        }
    }
    gens.push(UnitGen::MinusOne);
    if prime_power(n).is_none() {
        gens.push(UnitGen::Zeta);
    }
    Ok(gens)
}

/// Exponent of z in the image of zeta_d^a: with zeta_d = zeta_mp^{mp/d} and
/// zeta_mp mapped to z (of order m), this is ((mp/d) * a) mod m.
fn z_exponent(n: u64, m: u64, d: u64, a: u64) -> u64 {
    (((n / d) % m) as u128 * (a % m) as u128 % m as u128) as u64
}

/// The image of a generator in F_p[z]/(Phi_m). For frac generators at d = p
/// the quotient degenerates to the geometric sum 1 + zeta_p + ... and the
/// image is the scalar a.
pub fn image_of_generator(g: &UnitGen, spec: &FieldSpec) -> Result<FieldElem> {
    let m = spec.m();
    let p = spec.p();
    let n = m * p;
    match g {
        UnitGen::Frac { d, a } => {
            if !n.is_multiple_of(*d) {
                return Err(Error::Domain(format!("d = {d} does not divide mp = {n}")));
            }
            let e1 = z_exponent(n, m, *d, 1);
            if e1 == 0 {
                // happens exactly for d = p: both 1 - zeta_d^a and 1 - zeta_d
                // lie in the ideal, and the quotient reduces to the scalar a
                assert_eq!(*d, p, "degenerate frac exponent away from d = p");
                return Ok(spec.scalar(*a));
            }
            let ea = z_exponent(n, m, *d, *a);
            assert_ne!(ea, 0, "frac numerator vanished for a unit exponent");
            let num = spec.sub(&spec.one(), &spec.monomial(ea));
            let den = spec.sub(&spec.one(), &spec.monomial(e1));
            Ok(spec.mul(&num, &spec.inv(&den)?))
        }
        UnitGen::Flat { d, a } => {
            if !n.is_multiple_of(*d) {
                return Err(Error::Domain(format!("d = {d} does not divide mp = {n}")));
            }
            let e = z_exponent(n, m, *d, *a);
            assert_ne!(e, 0, "flat image vanished for a unit exponent");
            Ok(spec.sub(&spec.one(), &spec.monomial(e)))
        }
        UnitGen::MinusOne => Ok(spec.scalar(p - 1)),
        UnitGen::Zeta => Ok(spec.z()),
    }
}

/// Fast path and oracle for the frac family at d = p: the image of
/// (1 - zeta_p^a)/(1 - zeta_p) is the scalar a, whose order is the order of
/// a mod p. Requires 1 <= a < p.
pub fn image_frac_p(a: u64, spec: &FieldSpec) -> Result<FieldElem> {
    if a == 0 || a >= spec.p() {
        return Err(Error::Domain(format!(
            "a = {a} is outside 1..{}",
            spec.p()
        )));
    }
    Ok(spec.scalar(a))
}

/// The shortened generator list whose image orders already determine the full
/// subgroup order:
///
/// - every frac generator at divisors of m is kept (no two are conjugate),
/// - the frac family at d = p collapses to one generator of order p - 1,
/// - each flat family collapses to the orbit representative 1 - zeta_d,
/// - both roots of unity are kept.
///
/// For m = 2 and m = 4 the orbit collapse is not applied and the full
/// enumeration is returned; the construction requires m = 2, 4, or an odd
/// prime power.
pub fn reduced_generator_set(m: u64, p: u64) -> Result<Vec<UnitGen>> {
    let n = validate_pair(m, p)?;
    if m == 2 || m == 4 {
        return enumerate_generators(m, p);
    }
    let (q, i) = match prime_power(m) {
        Some((q, i)) if q > 2 => (q, i),
        _ => return Err(Error::InadmissibleM(m)),
    };
    debug_assert_eq!(n, m * p);
    let mut gens = Vec::new();
    for j in 1..=i {
        let d = q.pow(j);
        for a in 2..d {
            if gcd(&Natural::from(a), &Natural::from(d)) == Natural::from(1u32) {
                gens.push(UnitGen::Frac { d, a });
            }
        }
    }
    // one frac generator at d = p whose image generates all of F_p^*
    let g = least_primitive_root(p)?;
    gens.push(UnitGen::Frac { d: p, a: g });
    // one flat representative per level: 1 - zeta_{p q^j}
    for j in 1..=i {
        gens.push(UnitGen::Flat { d: p * q.pow(j), a: 1 });
    }
    gens.push(UnitGen::MinusOne);
    gens.push(UnitGen::Zeta);
    gens.sort();
    Ok(gens)
}

/// Apply the Galois automorphism zeta -> zeta^{t'} with t' = 1 mod p and
/// t' = t mod m (the action of Gal(Q(zeta_mp)/Q(zeta_p)) = (Z/mZ)^*).
///
/// Flat generators map to flat generators (a -> t'a mod d) and the frac
/// family at d = p is fixed pointwise. Frac generators at divisors of m and
/// zeta itself are only fixed by the trivial action; conjugating them by a
/// nontrivial t yields a product of generators, not a generator, so that
/// case is an error.
pub fn galois_conjugate(g: &UnitGen, t: u64, m: u64, p: u64) -> Result<UnitGen> {
    validate_pair(m, p)?;
    if gcd(&Natural::from(t), &Natural::from(m)) != Natural::from(1u32) {
        return Err(Error::NotCoprime {
            a: Natural::from(t),
            n: Natural::from(m),
        });
    }
    let n = m * p;
    let t_prime = crt_lift(t % m, m, p);
    match g {
        UnitGen::Flat { d, a } => {
            let td = t_prime % d;
            let a_new = ((td as u128 * *a as u128) % *d as u128) as u64;
            debug_assert!(gcd(&Natural::from(a_new), &Natural::from(*d)).is_one());
            Ok(UnitGen::Flat { d: *d, a: a_new })
        }
        UnitGen::Frac { d, a } => {
            if t_prime % d == 1 {
                Ok(UnitGen::Frac { d: *d, a: *a })
            } else {
                Err(Error::ConjugationNotClosed { t })
            }
        }
        UnitGen::MinusOne => Ok(UnitGen::MinusOne),
        UnitGen::Zeta => {
            if t_prime % n == 1 {
                Ok(UnitGen::Zeta)
            } else {
                Err(Error::ConjugationNotClosed { t })
            }
        }
    }
}

/// The unique t' in [0, mp) with t' = 1 (mod p) and t' = t (mod m).
fn crt_lift(t: u64, m: u64, p: u64) -> u64 {
    if m == 1 {
        return 1;
    }
    // t' = 1 + p*k with k = (t - 1) * p^{-1} mod m
    let p_inv = mod_inverse_u64(p % m, m);
    let k = ((t + m - 1) % m) as u128 * p_inv as u128 % m as u128;
    (1 + p as u128 * k) as u64
}

fn mod_inverse_u64(a: u64, m: u64) -> u64 {
    // extended Euclid; a must be a unit mod m
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    assert_eq!(old_r, 1, "inverse of a non-unit");
    old_s.rem_euclid(m as i128) as u64
}

/// The order of the subgroup of F^* generated by the images of `gens`: since
/// the group is cyclic this is the lcm of the element orders.
pub fn subgroup_order_of_images(gens: &[UnitGen], spec: &FieldSpec) -> Result<Natural> {
    let mut acc = Natural::from(1u32);
    for g in gens {
        let image = image_of_generator(g, spec)?;
        let order = spec.element_order(&image)?;
        acc = acc.lcm(&order);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclofield::make_field;

    #[test]
    fn generator_census_3_5() {
        let gens = enumerate_generators(3, 5).unwrap();
        // frac at d in {3, 5}: 1 + 3; flat at d = 15: phi(15) = 8; two roots
        assert_eq!(gens.len(), 14);
        let fracs = gens
            .iter()
            .filter(|g| matches!(g, UnitGen::Frac { .. }))
            .count();
        let flats = gens
            .iter()
            .filter(|g| matches!(g, UnitGen::Flat { .. }))
            .count();
        assert_eq!(fracs, 4);
        assert_eq!(flats, 8);
        assert!(gens.contains(&UnitGen::MinusOne));
        assert!(gens.contains(&UnitGen::Zeta));
    }

    #[test]
    fn generator_census_9_5() {
        let gens = enumerate_generators(9, 5).unwrap();
        let frac_ds: std::collections::BTreeSet<u64> = gens
            .iter()
            .filter_map(|g| match g {
                UnitGen::Frac { d, .. } => Some(*d),
                _ => None,
            })
            .collect();
        let flat_ds: std::collections::BTreeSet<u64> = gens
            .iter()
            .filter_map(|g| match g {
                UnitGen::Flat { d, .. } => Some(*d),
                _ => None,
            })
            .collect();
        assert_eq!(frac_ds.into_iter().collect::<Vec<_>>(), vec![3, 5, 9]);
        assert_eq!(flat_ds.into_iter().collect::<Vec<_>>(), vec![15, 45]);
    }

    #[test]
    fn prime_power_n_has_no_flats_and_no_zeta() {
        // hypothetical m = 1: n = p is a prime power
        let gens = enumerate_generators(1, 7).unwrap();
        assert!(gens.iter().all(|g| !matches!(g, UnitGen::Flat { .. })));
        assert!(!gens.contains(&UnitGen::Zeta));
        assert!(gens.contains(&UnitGen::MinusOne));
    }

    #[test]
    fn coprimality_enforced() {
        assert!(matches!(
            enumerate_generators(10, 5),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn frac_at_p_is_scalar() {
        let spec = make_field(3, 5).unwrap();
        for a in 2..5u64 {
            let via_general = image_of_generator(&UnitGen::Frac { d: 5, a }, &spec).unwrap();
            let via_fast = image_frac_p(a, &spec).unwrap();
            assert_eq!(via_general, via_fast);
            assert_eq!(via_general, spec.scalar(a));
        }
        assert!(image_frac_p(0, &spec).is_err());
        assert!(image_frac_p(5, &spec).is_err());
    }

    #[test]
    fn flat_image_exponent() {
        // d = mp = 15, a = 1: e = (15/15 * 1) mod 3 = 1, image 1 - z
        let spec = make_field(3, 5).unwrap();
        let img = image_of_generator(&UnitGen::Flat { d: 15, a: 1 }, &spec).unwrap();
        let expected = spec.sub(&spec.one(), &spec.z());
        assert_eq!(img, expected);
        // 1 - z and 1 - z^2 are Frobenius conjugates, so equal order
        let img2 = image_of_generator(&UnitGen::Flat { d: 15, a: 2 }, &spec).unwrap();
        assert_eq!(
            spec.element_order(&img).unwrap(),
            spec.element_order(&img2).unwrap()
        );
    }

    #[test]
    fn root_images() {
        let spec = make_field(3, 5).unwrap();
        let z = image_of_generator(&UnitGen::Zeta, &spec).unwrap();
        assert_eq!(z, spec.z());
        assert_eq!(spec.element_order(&z).unwrap(), Natural::from(3u32));
        let minus_one = image_of_generator(&UnitGen::MinusOne, &spec).unwrap();
        assert_eq!(minus_one, spec.scalar(4));
        assert_eq!(
            spec.element_order(&minus_one).unwrap(),
            Natural::from(2u32)
        );
    }

    #[test]
    fn reduced_set_9_5() {
        let gens = reduced_generator_set(9, 5).unwrap();
        // frac(3,2); frac(9, a in {2,4,5,7,8}); frac(5, 2) marker;
        // flat reps at 15 and 45; two roots
        assert_eq!(gens.len(), 1 + 5 + 1 + 2 + 2);
        assert!(gens.contains(&UnitGen::Frac { d: 5, a: 2 }));
        assert!(gens.contains(&UnitGen::Flat { d: 15, a: 1 }));
        assert!(gens.contains(&UnitGen::Flat { d: 45, a: 1 }));
    }

    #[test]
    fn reduced_set_m4_falls_back_to_full() {
        let full = enumerate_generators(4, 7).unwrap();
        let reduced = reduced_generator_set(4, 7).unwrap();
        assert_eq!(full, reduced);
    }

    #[test]
    fn reduced_set_rejects_non_prime_powers() {
        assert!(matches!(
            reduced_generator_set(15, 2),
            Err(Error::InadmissibleM(15))
        ));
    }

    #[test]
    fn conjugation_identity_and_flats() {
        let (m, p) = (9u64, 5u64);
        for g in enumerate_generators(m, p).unwrap() {
            assert_eq!(galois_conjugate(&g, 1, m, p).unwrap(), g);
        }
        // t = 2: flat(45, 1) moves within its family
        let g = UnitGen::Flat { d: 45, a: 1 };
        let conj = galois_conjugate(&g, 2, m, p).unwrap();
        match conj {
            UnitGen::Flat { d: 45, a } => {
                assert_ne!(a, 1);
                assert!(gcd(&Natural::from(a), &Natural::from(45u64)).is_one());
            }
            other => panic!("expected a flat generator, got {other:?}"),
        }
        // frac at d = p is fixed by every conjugation
        let g = UnitGen::Frac { d: 5, a: 3 };
        assert_eq!(galois_conjugate(&g, 2, m, p).unwrap(), g);
        // frac at a divisor of m is not conjugation-closed
        let g = UnitGen::Frac { d: 9, a: 2 };
        assert!(matches!(
            galois_conjugate(&g, 2, m, p),
            Err(Error::ConjugationNotClosed { t: 2 })
        ));
    }

    #[test]
    fn conjugation_preserves_image_orders() {
        let (m, p) = (9u64, 5u64);
        let spec = make_field(m, p).unwrap();
        let flats: Vec<UnitGen> = enumerate_generators(m, p)
            .unwrap()
            .into_iter()
            .filter(|g| matches!(g, UnitGen::Flat { .. }))
            .collect();
        for t in [2u64, 4, 5, 7, 8] {
            for g in &flats {
                let conj = galois_conjugate(g, t, m, p).unwrap();
                let o1 = spec
                    .element_order(&image_of_generator(g, &spec).unwrap())
                    .unwrap();
                let o2 = spec
                    .element_order(&image_of_generator(&conj, &spec).unwrap())
                    .unwrap();
                assert_eq!(o1, o2, "t = {t}, g = {g}");
            }
        }
    }

    #[test]
    fn flat_orbit_covers_family_images() {
        // the orbit of the representative hits every distinct flat image,
        // for every non-prime-power divisor level
        for (m, p) in [(9u64, 5u64), (25, 3), (13, 7), (27, 5)] {
            let spec = make_field(m, p).unwrap();
            let flat_ds: std::collections::BTreeSet<u64> = enumerate_generators(m, p)
                .unwrap()
                .into_iter()
                .filter_map(|g| match g {
                    UnitGen::Flat { d, .. } => Some(d),
                    _ => None,
                })
                .collect();
            for d in flat_ds {
                let family: std::collections::HashSet<FieldElem> = (1..d)
                    .filter(|a| gcd(&Natural::from(*a), &Natural::from(d)).is_one())
                    .map(|a| image_of_generator(&UnitGen::Flat { d, a }, &spec).unwrap())
                    .collect();
                let rep = UnitGen::Flat { d, a: 1 };
                let orbit: std::collections::HashSet<FieldElem> = (1..m)
                    .filter(|t| gcd(&Natural::from(*t), &Natural::from(m)).is_one())
                    .map(|t| {
                        let conj = galois_conjugate(&rep, t, m, p).unwrap();
                        image_of_generator(&conj, &spec).unwrap()
                    })
                    .collect();
                assert_eq!(family, orbit, "m = {m}, p = {p}, d = {d}");
            }
        }
    }

    #[test]
    fn empty_generator_set_gives_trivial_subgroup() {
        let spec = make_field(3, 5).unwrap();
        assert_eq!(
            subgroup_order_of_images(&[], &spec).unwrap(),
            Natural::one()
        );
    }

    #[test]
    fn subgroup_orders_3_5_and_9_5() {
        let spec = make_field(3, 5).unwrap();
        let gens = enumerate_generators(3, 5).unwrap();
        assert_eq!(
            subgroup_order_of_images(&gens, &spec).unwrap(),
            Natural::from(24u32)
        );

        let spec = make_field(9, 5).unwrap();
        let gens = enumerate_generators(9, 5).unwrap();
        assert_eq!(
            subgroup_order_of_images(&gens, &spec).unwrap(),
            Natural::from(15624u32 / 7)
        );
    }
}
