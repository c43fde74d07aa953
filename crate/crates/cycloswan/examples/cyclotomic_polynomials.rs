//! Cyclotomic polynomial construction.
//!
//! Phi_m is built by exact division: z^m - 1 divided by Phi_d for every
//! proper divisor d of m. This example prints small cases and checks two
//! classical identities.
//!
//! Run with: cargo run -p cycloswan --example cyclotomic_polynomials

use cycloswan::bigarith::{divisors, prime_power};
use cycloswan::cyclofield::{cyclotomic_poly, IntPoly};
use num_bigint::BigInt;
use num_traits::One;

fn main() {
    println!("=== Small cyclotomic polynomials ===\n");
    for m in 1..=12u64 {
        println!("Phi_{m:<2} = {}", cyclotomic_poly(m));
    }
    println!("\nPhi_105 is the first with a coefficient outside -1, 0, 1:");
    println!("Phi_105 = {}", cyclotomic_poly(105));

    println!("\n=== Identity: product of Phi_d over d | m equals z^m - 1 ===\n");
    for m in [12u64, 30, 45] {
        let mut product = IntPoly::from_i64(&[1]);
        for d in divisors(m) {
            product = product.mul(&cyclotomic_poly(d));
        }
        assert_eq!(product, IntPoly::z_pow_minus_one(m));
        println!("m = {m}: product of {} pieces gives z^{m} - 1  (checked)", divisors(m).len());
    }

    println!("\n=== Identity: Phi_m(1) detects prime powers ===\n");
    let one = BigInt::one();
    for m in [7u64, 9, 16, 45, 97, 100] {
        let v = cyclotomic_poly(m).eval(&one);
        match prime_power(m) {
            Some((q, k)) => {
                assert_eq!(v, BigInt::from(q));
                println!("Phi_{m}(1) = {v}  (m = {q}^{k})");
            }
            None => {
                assert_eq!(v, one);
                println!("Phi_{m}(1) = {v}  (m has several prime factors)");
            }
        }
    }

    println!("\n=== Reduction mod p ===\n");
    let phi9 = cyclotomic_poly(9);
    println!("Phi_9 over Z:      {phi9}");
    println!("Phi_9 mod 5:       coefficients {:?}", phi9.coeffs_mod(5));
    println!("degree phi(9) = 6, and 5 is a primitive root mod 9, so Phi_9");
    println!("stays irreducible mod 5 and F_5[z]/(Phi_9) is the field of 5^6 elements.");
}
