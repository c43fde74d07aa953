//! Integer factorization: trial division, Brent rho, the algebraic split,
//! time budgets, and the on-disk cache.
//!
//! Run with: cargo run -p cycloswan --example factoring

use std::time::Duration;

use cycloswan::bigarith::{
    factor, factor_with, is_prime, pk_minus_one_factor, FactorSettings, Natural,
};
use cycloswan::cache::FactorCache;
use cycloswan::Error;

fn main() {
    println!("=== Plain factoring ===\n");
    let n = Natural::from(205_891_132_094_648u64); // 3^30 - 1
    let f = factor(&n).unwrap();
    println!("{n} = {f}");
    assert_eq!(f.value(), n);
    for (q, _) in f.pairs() {
        assert!(is_prime(q));
    }
    println!("(product and primality of every factor re-checked)");

    println!("\n=== The algebraic split p^k - 1 = product of Phi_d(p) ===\n");
    let split = pk_minus_one_factor(&Natural::from(5u32), 36).unwrap();
    println!("5^36 - 1 = {split}");
    println!("value: {}", split.value());
    println!("Each cyclotomic piece is far smaller than the 25-digit total,");
    println!("so the split factors numbers that direct methods would fight.");

    println!("\n=== Time budgets fail soft ===\n");
    // a semiprime with two ~19-digit prime factors: hopeless in a millisecond
    let p = Natural::from(2_305_843_009_213_693_951u64); // 2^61 - 1
    let hard = &p * &p * &p;
    let settings = FactorSettings {
        time_budget: Some(Duration::from_millis(1)),
        seed: 7,
    };
    match factor_with(&hard, &settings, None) {
        Err(Error::BudgetExhausted(partial)) => {
            println!("budget expired as expected: {partial}");
            assert_eq!(partial.value(), hard, "nothing lost, nothing invented");
        }
        other => panic!("expected budget exhaustion, got {other:?}"),
    }

    println!("\n=== The factorization cache ===\n");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("factors.json");
    {
        let (mut cache, _) = FactorCache::load(&path);
        let n = Natural::from(2_384_185_791_015_624u64); // 5^22 - 1
        let f = factor_with(&n, &FactorSettings::default(), Some(&mut cache)).unwrap();
        println!("first run factors {n} = {f}");
        cache.save().unwrap();
        println!("cache saved with {} entries", cache.len());
    }
    {
        let (mut cache, warnings) = FactorCache::load(&path);
        assert!(warnings.is_empty());
        println!("reloaded cache has {} entries; second run is a lookup", cache.len());
        let n = Natural::from(2_384_185_791_015_624u64);
        let f = factor_with(&n, &FactorSettings::default(), Some(&mut cache)).unwrap();
        assert_eq!(f.value(), n);
    }
}
