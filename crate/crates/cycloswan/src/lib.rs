//! # cycloswan
//!
//! Swan subgroup orders of cyclotomic group rings Z[zeta_m][C_p], computed
//! inside the finite field F_p[z]/(Phi_m(z)).
//!
//! For an odd prime p that stays prime (is *inert*) in Q(zeta_m), the Swan
//! subgroup of the group ring Z[zeta_m][C_p] is cyclic of order
//! N / |h(units)|, where N = p^phi(m) - 1 is the order of the multiplicative
//! group of the residue field and h reduces the units of Z[zeta_mp] modulo
//! (1 - zeta_p). This crate realizes that field concretely, pushes the
//! cyclotomic-unit generators through h, and reads the subgroup order off the
//! lcm of the image orders (the group is cyclic). When phi(mp) <= 72 the
//! cyclotomic units are the full unit group and the answer is exact;
//! otherwise it is an upper bound.
//!
//! ## Start with the examples
//!
//! Each major capability has a runnable walkthrough:
//!
//! ```bash
//! cargo run -p cycloswan --example inert_primes          # inert-prime searches and both tables
//! cargo run -p cycloswan --example cyclotomic_polynomials
//! cargo run -p cycloswan --example finite_fields         # F_p[z]/(Phi_m) arithmetic and orders
//! cargo run -p cycloswan --example cyclotomic_units      # generators, images, orbit reduction
//! cargo run -p cycloswan --example swan_orders           # the headline computation
//! cargo run -p cycloswan --example factoring             # trial division + rho, budgets, cache
//! cargo run -p cycloswan --example verify_tables         # recompute the bundled tables
//! ```
//!
//! ## Library layout
//!
//! - [`bigarith`] — big-integer gcd/modpow, Miller-Rabin, trial division plus
//!   Brent rho factoring with time budgets, Euler phi, multiplicative orders,
//!   and the algebraic split p^k - 1 = prod Phi_d(p).
//! - [`primroots`] — primitive-root tests, the progression and direct
//!   inert-prime searches, and the 2m reduction.
//! - [`cyclofield`] — cyclotomic polynomials over Z and full arithmetic in
//!   F_p[z]/(Phi_m(z)), including element orders against the factored group
//!   order.
//! - [`units`] — symbolic cyclotomic-unit generators, their images under the
//!   reduction map, Galois conjugation, and the orbit-reduced generator set.
//! - [`swan`] — the Swan order computation, exactness classification, the
//!   brute-force closure oracle, and reference-table verification.
//! - [`tables`] — the bundled reference tables (JSON resources).
//! - [`cache`] — the optional on-disk factorization cache.
//! - [`cli`] — the `cycloswan` command-line interface; the binary is a thin
//!   shim over [`cli::run`].
//!
//! ## Quick taste
//!
//! ```
//! use cycloswan::swan::{swan_order, Method};
//!
//! let result = swan_order(9, 5, Method::Both).unwrap();
//! assert_eq!(result.cokernel_order.to_string(), "7");
//! ```

pub mod bigarith;
pub mod cache;
pub mod cli;
pub mod cyclofield;
pub mod error;
pub mod primroots;
pub mod swan;
pub mod tables;
pub mod units;

pub use bigarith::{Factorization, Natural};
pub use cyclofield::{FieldElem, FieldSpec, IntPoly};
pub use error::{Error, Result};
pub use swan::{swan_order, Exactness, Method, SwanResult};
pub use units::UnitGen;
