//! Arithmetic in F_p[z]/(Phi_m(z)).
//!
//! When p is inert mod m the quotient is the field of p^phi(m) elements and
//! the class of z is a primitive m-th root of unity. This example exercises
//! the ring operations, inversion, exponentiation, and element orders.
//!
//! Run with: cargo run -p cycloswan --example finite_fields

use cycloswan::cyclofield::make_field;
use cycloswan::Natural;

fn main() {
    println!("=== Building fields ===\n");
    let f = make_field(9, 5).unwrap();
    println!("field: {f}");
    println!("degree: {}", f.degree());
    println!("group order N = {} = {}", f.group_order(), match f.group_order_factors() {
        cycloswan::cyclofield::GroupOrderFactors::Complete(fact) => fact.to_string(),
        _ => unreachable!("small field factors completely"),
    });

    println!("\nA non-inert prime is rejected with the split data:");
    match make_field(13, 5) {
        Err(e) => println!("make_field(13, 5): {e}"),
        Ok(_) => unreachable!(),
    }

    println!("\n=== Ring operations ===\n");
    let x = f.elem(&[1, 2, 0, 0, 3, 1]);
    let y = f.elem(&[4, 0, 1, 0, 0, 2]);
    println!("x = {x}");
    println!("y = {y}");
    println!("x + y = {}", f.add(&x, &y));
    println!("x - y = {}", f.sub(&x, &y));
    println!("x * y = {}", f.mul(&x, &y));

    let xi = f.inv(&x).unwrap();
    println!("x^-1 = {xi}");
    println!("x * x^-1 = {} (should be 1)", f.mul(&x, &xi));

    println!("\n=== z is a primitive m-th root of unity ===\n");
    let z = f.z();
    for k in [1u64, 3, 8, 9] {
        println!("z^{k} = {}", f.pow_u64(&z, k));
    }
    println!("order of z: {}", f.element_order(&z).unwrap());

    println!("\n=== Lagrange and element orders ===\n");
    println!("x^N = {} (should be 1)", f.pow(&x, f.group_order()));
    let ord = f.element_order(&x).unwrap();
    println!("order of x: {ord}");
    // certificate: x^o = 1 and x^(o/q) != 1 for every prime q | o
    assert_eq!(f.pow(&x, &ord), f.one());
    for q in [2u32, 3, 7, 31] {
        let q = Natural::from(q);
        if (&ord % &q) == Natural::from(0u32) {
            let reduced = &ord / &q;
            assert_ne!(f.pow(&x, &reduced), f.one());
            println!("x^(o/{q}) != 1  (certificate holds)");
        }
    }

    println!("\n=== Scalars live in the prime subfield ===\n");
    let a = f.scalar(2);
    println!("order of 2 in F_5 subfield: {}", f.element_order(&a).unwrap());
}
