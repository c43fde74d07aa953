//! Crate-wide error type.

use num_bigint::BigUint;
use thiserror::Error;

use crate::bigarith::PartialFactorization;

#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(BigUint),

    #[error("{a} and {n} are not coprime")]
    NotCoprime { a: BigUint, n: BigUint },

    #[error("0 has no prime factorization")]
    FactorOfZero,

    #[error("expected a prime, got {0}")]
    ExpectedPrime(BigUint),

    #[error("time budget exhausted; {0}")]
    BudgetExhausted(PartialFactorization),

    #[error("m = {0} admits no primitive roots (m must be 4, q^n, or 2q^n for an odd prime q)")]
    NoPrimitiveRoot(u64),

    #[error("m must be at least 3, got {0}")]
    MTooSmall(u64),

    #[error("arithmetic progression scan gave up after {0} steps")]
    ProgressionCapExceeded(u64),

    #[error("m = {0} must be an odd prime power")]
    NotOddPrimePower(u64),

    #[error(
        "p = {p} is not inert for m = {m}: residue degree f = {residue_degree}, \
         so (p) splits into {split_count} primes of degree {residue_degree}"
    )]
    NotInert {
        m: u64,
        p: u64,
        residue_degree: u64,
        split_count: u64,
    },

    #[error("division by zero in the field")]
    DivisionByZero,

    #[error("group order factorization is incomplete; exact element order unavailable")]
    OrderUnavailable,

    #[error("m = {0} is outside the reduced-set construction (need m = 2, 4, or an odd prime power)")]
    InadmissibleM(u64),

    #[error("conjugation by t = {t} does not carry this generator to another generator")]
    ConjugationNotClosed { t: u64 },

    #[error("group order {order} exceeds the closure ceiling {ceiling}")]
    ClosureCeilingExceeded { order: BigUint, ceiling: u64 },

    #[error("full and reduced generator sets disagree: {full} vs {reduced}")]
    MethodDisagreement { full: BigUint, reduced: BigUint },

    #[error("{0}")]
    Domain(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
