//! Inert-prime searches.
//!
//! An odd prime p stays prime in Q(zeta_m) exactly when p is a primitive root
//! mod m, which happens for some p only when m = 4, q^n, or 2q^n (q an odd
//! prime). This example walks through the three search strategies and prints
//! both bundled tables.
//!
//! Run with: cargo run -p cycloswan --example inert_primes

use cycloswan::primroots::{
    generate_table, inert_prime_exists, least_inert_prime_direct, least_primitive_root,
    progression_prime, two_m_reduction, TableMode,
};

fn main() {
    println!("=== Which m admit an inert odd prime? ===\n");
    for m in [3u64, 4, 8, 9, 12, 15, 41, 98] {
        println!(
            "m = {m:>2}: {}",
            if inert_prime_exists(m).unwrap() {
                "yes (m = 4, q^n, or 2q^n)"
            } else {
                "no"
            }
        );
    }

    println!("\n=== The progression method vs the direct scan ===\n");
    println!("The progression method takes the least primitive root r and walks");
    println!("r, r + m, r + 2m, ... to the first prime. That prime is congruent");
    println!("to r, which need not make it the least inert prime overall.\n");
    for m in [3u64, 13, 25, 41, 53] {
        let r = least_primitive_root(m).unwrap();
        let via_progression = progression_prime(m, r).unwrap();
        let direct = least_inert_prime_direct(m).unwrap();
        println!(
            "m = {m:>2}: least primitive root {r}, progression finds {via_progression}, \
             direct scan finds {direct}"
        );
    }

    println!("\n=== The 2m reduction ===\n");
    println!("For an odd prime power m, the least primitive root mod 2m is the");
    println!("least *odd* primitive root mod m, skipping even dead ends like the");
    println!("least primitive root 2:\n");
    for m in [3u64, 9, 25, 41] {
        let r = least_primitive_root(m).unwrap();
        let reduced = two_m_reduction(m).unwrap();
        println!("m = {m:>2}: least primitive root {r}, via 2m = {}: {reduced}", 2 * m);
    }

    println!("\n=== Progression table (every admissible m < 100) ===\n");
    let table = generate_table(3..=100, TableMode::Progression).unwrap();
    println!("m   r   p");
    for row in &table {
        println!(
            "{:<3} {:<3} {}",
            row.m, row.least_primitive_root, row.inert_prime
        );
    }
    println!("({} rows)", table.len());

    println!("\n=== Direct table (m not 2 mod 4, true least inert prime) ===\n");
    let table = generate_table(3..=100, TableMode::Direct).unwrap();
    println!("m   p");
    for row in &table {
        println!("{:<3} {}", row.m, row.inert_prime);
    }
    println!("({} rows)", table.len());
}
