//! Cyclotomic-unit generators and their images.
//!
//! The cyclotomic units of Z[zeta_mp] are generated (modulo roots of unity)
//! by two families: "frac" units (1 - zeta_d^a)/(1 - zeta_d) for prime-power
//! divisors d of mp, and "flat" units 1 - zeta_d^a for the other divisors.
//! Reducing modulo (1 - zeta_p) sends zeta_mp to z and zeta_p to 1, so every
//! image is an explicit element of F_p[z]/(Phi_m). Galois conjugation over
//! Q(zeta_p) permutes each flat family transitively, which is why one
//! representative per family suffices for order computations.
//!
//! Run with: cargo run -p cycloswan --example cyclotomic_units

use cycloswan::cyclofield::make_field;
use cycloswan::units::{
    enumerate_generators, galois_conjugate, image_frac_p, image_of_generator,
    reduced_generator_set, subgroup_order_of_images, UnitGen,
};

fn main() {
    let (m, p) = (9u64, 5u64);
    let spec = make_field(m, p).unwrap();

    println!("=== Full generator set for m = {m}, p = {p} ===\n");
    let gens = enumerate_generators(m, p).unwrap();
    println!("{} generators; images and orders:", gens.len());
    for g in &gens {
        let img = image_of_generator(g, &spec).unwrap();
        let ord = spec.element_order(&img).unwrap();
        println!("  {g:<18} image={img}  order={ord}");
    }

    println!("\n=== The frac family at d = p collapses to scalars ===\n");
    for a in 2..p {
        let via_general = image_of_generator(&UnitGen::Frac { d: p, a }, &spec).unwrap();
        let via_scalar = image_frac_p(a, &spec).unwrap();
        assert_eq!(via_general, via_scalar);
        println!(
            "(1 - zeta_{p}^{a})/(1 - zeta_{p})  ->  {a}, order {}",
            spec.element_order(&via_scalar).unwrap()
        );
    }

    println!("\n=== Galois conjugation moves flats around their orbit ===\n");
    let rep = UnitGen::Flat { d: 45, a: 1 };
    for t in [1u64, 2, 4, 5, 7, 8] {
        let conj = galois_conjugate(&rep, t, m, p).unwrap();
        let img = image_of_generator(&conj, &spec).unwrap();
        println!(
            "t = {t}: {conj:<18} image={img}  order={}",
            spec.element_order(&img).unwrap()
        );
    }
    println!("(orders agree along the orbit, so one representative suffices)");

    println!("\n=== Reduced generator set ===\n");
    let reduced = reduced_generator_set(m, p).unwrap();
    println!("{} generators instead of {}:", reduced.len(), gens.len());
    for g in &reduced {
        println!("  {g}");
    }

    let full_order = subgroup_order_of_images(&gens, &spec).unwrap();
    let reduced_order = subgroup_order_of_images(&reduced, &spec).unwrap();
    println!("\nsubgroup order from the full set:    {full_order}");
    println!("subgroup order from the reduced set: {reduced_order}");
    assert_eq!(full_order, reduced_order);
    println!(
        "N / subgroup = {} / {full_order} = {}",
        spec.group_order(),
        spec.group_order() / &full_order
    );
}
