//! Property suites: sampled algebraic laws for the integer substrate, the
//! field arithmetic, and the unit-image machinery.

use num_traits::{One, Zero};
use proptest::prelude::*;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cycloswan::bigarith::{
    euler_phi, factor, gcd, is_prime, is_prime_u64, multiplicative_order, pk_minus_one_factor,
    Natural,
};
use cycloswan::cyclofield::{make_field, FieldElem, FieldSpec};
use cycloswan::primroots::is_primitive_root;
use cycloswan::units::{enumerate_generators, image_frac_p, image_of_generator, UnitGen};

fn nat(n: u128) -> Natural {
    Natural::from(n)
}

proptest! {
    #[test]
    fn gcd_divides_both_and_absorbs_common_divisors(
        d in 1u64..10_000,
        x in 0u64..100_000,
        y in 0u64..100_000,
    ) {
        let a = nat((d as u128) * (x as u128));
        let b = nat((d as u128) * (y as u128));
        let g = gcd(&a, &b);
        if !g.is_zero() {
            prop_assert!((&a % &g).is_zero());
            prop_assert!((&b % &g).is_zero());
        }
        // d is a common divisor, so it divides the gcd (or both are zero)
        if !(a.is_zero() && b.is_zero()) {
            prop_assert!((&g % nat(d as u128)).is_zero());
        }
    }

    #[test]
    fn factorizations_multiply_back_and_are_prime(n in 1u64..2_000_000_000) {
        let f = factor(&nat(n as u128)).unwrap();
        prop_assert_eq!(f.value(), nat(n as u128));
        for (q, e) in f.pairs() {
            prop_assert!(is_prime(q), "{} claimed prime", q);
            prop_assert!(*e >= 1);
        }
        // strictly increasing primes
        for w in f.pairs().windows(2) {
            prop_assert!(w[0].0 < w[1].0);
        }
    }

    #[test]
    fn phi_is_multiplicative_on_coprime_pairs(a in 1u64..3_000, b in 1u64..3_000) {
        if gcd(&nat(a as u128), &nat(b as u128)).is_one() {
            let lhs = euler_phi(&nat((a as u128) * (b as u128))).unwrap();
            let rhs = euler_phi(&nat(a as u128)).unwrap() * euler_phi(&nat(b as u128)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn order_certificate(a in 2u64..500, n in 3u64..500) {
        if gcd(&nat(a as u128), &nat(n as u128)).is_one() {
            let phi = euler_phi(&nat(n as u128)).unwrap();
            let bound = factor(&phi).unwrap();
            let o = multiplicative_order(&nat(a as u128), &nat(n as u128), &bound).unwrap();
            let one = Natural::one();
            prop_assert_eq!(
                cycloswan::bigarith::mod_pow(&nat(a as u128), &o, &nat(n as u128)).unwrap(),
                one.clone()
            );
            for (q, _) in factor(&o).unwrap().pairs() {
                let reduced = &o / q;
                prop_assert_ne!(
                    cycloswan::bigarith::mod_pow(&nat(a as u128), &reduced, &nat(n as u128)).unwrap(),
                    one.clone()
                );
            }
        }
    }

    #[test]
    fn algebraic_split_agrees_with_direct_factoring(
        p_idx in 0usize..4,
        k in 1u32..12,
    ) {
        let p = [2u64, 3, 5, 7][p_idx];
        let value = (p as u128).pow(k);
        if value <= 1_000_000_000_000_000 {
            let direct = factor(&(nat(value) - 1u32)).unwrap();
            let split = pk_minus_one_factor(&nat(p as u128), k).unwrap();
            prop_assert_eq!(direct, split);
        }
    }
}

/// Deterministic sample of a field element.
fn sample_elem(spec: &FieldSpec, rng: &mut ChaCha8Rng) -> FieldElem {
    let coeffs: Vec<u64> = (0..spec.degree())
        .map(|_| rng.next_u64() % spec.p())
        .collect();
    spec.elem(&coeffs)
}

fn sample_nonzero(spec: &FieldSpec, rng: &mut ChaCha8Rng) -> FieldElem {
    loop {
        let x = sample_elem(spec, rng);
        if !spec.is_zero(&x) {
            return x;
        }
    }
}

#[test]
fn field_axioms_hold_on_samples() {
    for (m, p) in [(3u64, 5u64), (9, 5), (13, 7), (4, 7), (2, 11)] {
        let spec = make_field(m, p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..200 {
            let x = sample_elem(&spec, &mut rng);
            let y = sample_elem(&spec, &mut rng);
            let z = sample_elem(&spec, &mut rng);
            assert_eq!(spec.add(&x, &y), spec.add(&y, &x));
            assert_eq!(spec.mul(&x, &y), spec.mul(&y, &x));
            assert_eq!(
                spec.mul(&spec.mul(&x, &y), &z),
                spec.mul(&x, &spec.mul(&y, &z))
            );
            assert_eq!(
                spec.mul(&x, &spec.add(&y, &z)),
                spec.add(&spec.mul(&x, &y), &spec.mul(&x, &z))
            );
            if !spec.is_zero(&x) {
                let xi = spec.inv(&x).unwrap();
                assert_eq!(spec.mul(&x, &xi), spec.one());
            }
        }
    }
}

#[test]
fn fermat_and_order_certificates_on_samples() {
    for (m, p) in [(3u64, 5u64), (9, 5), (5, 13)] {
        let spec = make_field(m, p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let one = spec.one();
        for _ in 0..100 {
            let x = sample_nonzero(&spec, &mut rng);
            assert_eq!(spec.pow(&x, spec.group_order()), one, "Lagrange");
            let o = spec.element_order(&x).unwrap();
            assert_eq!(spec.pow(&x, &o), one);
            for (q, _) in factor(&o).unwrap().pairs() {
                assert_ne!(spec.pow(&x, &(&o / q)), one, "order minimality");
            }
        }
    }
}

#[test]
fn element_order_matches_repeated_multiplication_for_small_fields() {
    // group orders up to 10^5: walk x, x^2, x^3, ... directly
    for (m, p) in [(3u64, 5u64), (4, 3), (5, 3), (7, 3), (4, 7), (2, 11)] {
        let spec = make_field(m, p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..40 {
            let x = sample_nonzero(&spec, &mut rng);
            let mut acc = x.clone();
            let mut count = 1u64;
            while acc != spec.one() {
                acc = spec.mul(&acc, &x);
                count += 1;
            }
            assert_eq!(spec.element_order(&x).unwrap(), Natural::from(count));
        }
    }
}

#[test]
fn make_field_agrees_with_primitive_root_test() {
    for m in 3u64..=40 {
        for p in [3u64, 5, 7, 11, 13] {
            if m % p == 0 {
                continue;
            }
            let built = make_field(m, p).is_ok();
            let primitive = is_primitive_root(p, m);
            assert_eq!(built, primitive, "m = {m}, p = {p}");
        }
    }
}

#[test]
fn frac_family_at_p_matches_scalar_orders() {
    for (m, p) in [(3u64, 5u64), (9, 5), (13, 7), (4, 7)] {
        let spec = make_field(m, p).unwrap();
        for a in 2..p {
            let img = image_of_generator(&UnitGen::Frac { d: p, a }, &spec).unwrap();
            assert_eq!(img, image_frac_p(a, &spec).unwrap());
            let expected = multiplicative_order(
                &nat(a as u128),
                &nat(p as u128),
                &factor(&nat((p - 1) as u128)).unwrap(),
            )
            .unwrap();
            assert_eq!(spec.element_order(&img).unwrap(), expected);
        }
    }
}

#[test]
fn generator_images_are_nonzero_units() {
    for (m, p) in [(3u64, 5u64), (9, 5), (13, 7), (4, 7), (25, 3)] {
        let spec = make_field(m, p).unwrap();
        for g in enumerate_generators(m, p).unwrap() {
            let img = image_of_generator(&g, &spec).unwrap();
            assert!(!spec.is_zero(&img), "h({g}) = 0 for m={m}, p={p}");
        }
    }
}

#[test]
fn deterministic_primality_on_small_integers() {
    // cross-check the u64 path against naive trial division
    for n in 0u64..2_000 {
        let naive = n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
        assert_eq!(is_prime_u64(n), naive, "n = {n}");
    }
}
