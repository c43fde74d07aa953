//! Arbitrary-precision integer arithmetic: gcd, modular exponentiation,
//! primality testing, factorization, Euler phi, and multiplicative orders.
//!
//! Everything here is deterministic: the probabilistic pieces (Miller-Rabin
//! witnesses above 2^64, Pollard rho polynomials) draw from a ChaCha stream
//! seeded by the caller, so identical inputs give identical outputs.

use std::fmt;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cache::FactorCache;
use crate::cyclofield::cyclotomic_poly;
use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative integer. `BigUint` keeps a canonical limb
/// representation and round-trips exactly through decimal strings.
pub type Natural = BigUint;

/// Trial division covers every prime below this bound before Pollard rho runs.
pub const TRIAL_DIVISION_BOUND: u32 = 1_000_000;

/// Default seed for the probabilistic pieces when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0;

/// Deterministic Miller-Rabin witness set, sufficient for all n < 2^64.
const MR_WITNESSES_U64: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Random witnesses used above 2^64; error probability < 4^-64 = 2^-128.
const MR_RANDOM_ROUNDS: usize = 64;

/// Knobs for `factor_with` and everything built on it.
#[derive(Clone, Debug)]
pub struct FactorSettings {
    /// Wall-clock budget for one factorization call. `None` means unbounded.
    pub time_budget: Option<Duration>,
    /// Seed for rho polynomials and large-input Miller-Rabin witnesses.
    pub seed: u64,
}

impl Default for FactorSettings {
    fn default() -> Self {
        FactorSettings {
            time_budget: None,
            seed: DEFAULT_SEED,
        }
    }
}

/// A complete prime factorization: strictly increasing primes with positive
/// exponents whose product is the factored value. The empty list represents 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pairs: Vec<(Natural, u32)>,
}

impl Factorization {
    /// Build from (prime, exponent) pairs; sorts and merges duplicates.
    pub(crate) fn from_pairs(mut pairs: Vec<(Natural, u32)>) -> Self {
        pairs.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(Natural, u32)> = Vec::with_capacity(pairs.len());
        for (p, e) in pairs {
            if e == 0 {
                continue;
            }
            match merged.last_mut() {
                Some(last) if last.0 == p => last.1 += e,
                _ => merged.push((p, e)),
            }
        }
        Factorization { pairs: merged }
    }

    pub fn pairs(&self) -> &[(Natural, u32)] {
        &self.pairs
    }

    /// Product of prime^exponent over all pairs; 1 for the empty list.
    pub fn value(&self) -> Natural {
        let mut v = Natural::one();
        for (p, e) in &self.pairs {
            v *= p.pow(*e);
        }
        v
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, e)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// What survived when a factorization ran out of time: the prime part found so
/// far, the composite cofactors still standing, and (for the algebraic p^k - 1
/// split) which cyclotomic pieces Phi_d(p) failed.
#[derive(Clone, Debug)]
pub struct PartialFactorization {
    pub found: Vec<(Natural, u32)>,
    pub cofactors: Vec<Natural>,
    pub failed_pieces: Vec<u64>,
}

impl PartialFactorization {
    /// Product of everything, found and unfactored alike.
    pub fn value(&self) -> Natural {
        let mut v = Factorization::from_pairs(self.found.clone()).value();
        for c in &self.cofactors {
            v *= c;
        }
        v
    }

    /// The fully factored part as a `Factorization`.
    pub fn found_part(&self) -> Factorization {
        Factorization::from_pairs(self.found.clone())
    }
}

impl fmt::Display for PartialFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "found {}", self.found_part())?;
        write!(f, "; unfactored cofactors: ")?;
        for (i, c) in self.cofactors.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        if !self.failed_pieces.is_empty() {
            write!(f, " (failed pieces: ")?;
            for (i, d) in self.failed_pieces.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "Phi_{d}(p)")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Greatest common divisor; gcd(0, 0) = 0.
pub fn gcd(a: &Natural, b: &Natural) -> Natural {
    a.gcd(b)
}

/// Least common multiple; lcm(0, x) = 0.
pub fn lcm(a: &Natural, b: &Natural) -> Natural {
    a.lcm(b)
}

/// base^exp mod modulus by square-and-multiply; exp = 0 gives 1.
///
/// Errors if modulus < 2.
pub fn mod_pow(base: &Natural, exp: &Natural, modulus: &Natural) -> Result<Natural> {
    if modulus < &Natural::from(2u32) {
        return Err(Error::ModulusTooSmall(modulus.clone()));
    }
    Ok(base.modpow(exp, modulus))
}

/// Primality test: deterministic Miller-Rabin below 2^64 (fixed witness set),
/// 64 seeded random witnesses above.
pub fn is_prime(n: &Natural) -> bool {
    is_prime_with(n, DEFAULT_SEED)
}

/// `is_prime` with an explicit seed for the above-2^64 witness stream.
pub fn is_prime_with(n: &Natural, seed: u64) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    // n > 2^64, necessarily odd unless divisible by 2.
    if n.is_even() {
        return false;
    }
    for &q in small_primes().iter().take(100) {
        if (n % q).is_zero() {
            return false;
        }
    }
    let one = Natural::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let two = Natural::from(2u32);
    let span = n - Natural::from(3u32); // witnesses in [2, n-2]
    'witness: for _ in 0..MR_RANDOM_ROUNDS {
        let w = &two + random_below(&mut rng, &span);
        let mut x = w.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Complete prime factorization of n >= 1; n = 1 gives the empty list.
pub fn factor(n: &Natural) -> Result<Factorization> {
    factor_with(n, &FactorSettings::default(), None)
}

/// `factor` with a time budget, seed, and optional on-disk cache.
///
/// On budget expiry the error carries the prime part found so far and the
/// surviving composite cofactors.
pub fn factor_with(
    n: &Natural,
    settings: &FactorSettings,
    mut cache: Option<&mut FactorCache>,
) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::FactorOfZero);
    }
    let deadline = settings.time_budget.map(|b| Instant::now() + b);
    let mut rng = ChaCha8Rng::seed_from_u64(settings.seed);
    match factor_impl(n, deadline, settings.seed, &mut rng, &mut cache) {
        Ok(pairs) => Ok(Factorization::from_pairs(pairs)),
        Err(partial) => Err(Error::BudgetExhausted(partial)),
    }
}

/// Factor p^k - 1 through the algebraic split p^k - 1 = prod_{d | k} Phi_d(p),
/// factoring each piece separately and merging. Equals `factor(p^k - 1)`.
pub fn pk_minus_one_factor(p: &Natural, k: u32) -> Result<Factorization> {
    pk_minus_one_factor_with(p, k, &FactorSettings::default(), None)
}

/// `pk_minus_one_factor` with budget/seed/cache. A budget error identifies
/// which pieces Phi_d(p) were left unfactored.
pub fn pk_minus_one_factor_with(
    p: &Natural,
    k: u32,
    settings: &FactorSettings,
    mut cache: Option<&mut FactorCache>,
) -> Result<Factorization> {
    if !is_prime_with(p, settings.seed) {
        return Err(Error::ExpectedPrime(p.clone()));
    }
    if k == 0 {
        return Err(Error::Domain("pk_minus_one_factor requires k >= 1".into()));
    }
    let deadline = settings.time_budget.map(|b| Instant::now() + b);
    let mut rng = ChaCha8Rng::seed_from_u64(settings.seed);
    let p_int = num_bigint::BigInt::from(p.clone());

    let mut found: Vec<(Natural, u32)> = Vec::new();
    let mut cofactors: Vec<Natural> = Vec::new();
    let mut failed: Vec<u64> = Vec::new();
    for d in divisors(u64::from(k)) {
        let piece = cyclotomic_poly(d).eval(&p_int);
        let piece: Natural = piece
            .to_biguint()
            .expect("Phi_d(p) is positive for p >= 2");
        if piece.is_one() {
            continue;
        }
        if expired(deadline) {
            cofactors.push(piece);
            failed.push(d);
            continue;
        }
        match factor_impl(&piece, deadline, settings.seed, &mut rng, &mut cache) {
            Ok(pairs) => found.extend(pairs),
            Err(partial) => {
                found.extend(partial.found);
                cofactors.extend(partial.cofactors);
                failed.push(d);
            }
        }
    }
    if failed.is_empty() {
        Ok(Factorization::from_pairs(found))
    } else {
        Err(Error::BudgetExhausted(PartialFactorization {
            found,
            cofactors,
            failed_pieces: failed,
        }))
    }
}

/// Euler phi of n >= 1, computed from the factorization of n.
pub fn euler_phi(n: &Natural) -> Result<Natural> {
    if n.is_zero() {
        return Err(Error::Domain("euler_phi requires n >= 1".into()));
    }
    let mut phi = Natural::one();
    for (q, e) in factor(n)?.pairs() {
        phi *= q.pow(e - 1) * (q - 1u32);
    }
    Ok(phi)
}

/// Euler phi on machine integers; panics on n = 0.
pub fn euler_phi_u64(n: u64) -> u64 {
    assert!(n > 0, "euler_phi_u64 requires n >= 1");
    let mut phi = 1u64;
    for (q, e) in factor_u64(n) {
        phi *= q.pow(e - 1) * (q - 1);
    }
    phi
}

/// Least f >= 1 with a^f = 1 (mod n). `bound` must be a factorization of some
/// multiple of the true order (callers typically pass `factor(phi(n))`).
///
/// Errors if gcd(a, n) != 1.
pub fn multiplicative_order(a: &Natural, n: &Natural, bound: &Factorization) -> Result<Natural> {
    if !gcd(a, n).is_one() {
        return Err(Error::NotCoprime {
            a: a.clone(),
            n: n.clone(),
        });
    }
    if n.is_one() {
        return Ok(Natural::one());
    }
    let one = Natural::one();
    let mut order = bound.value();
    for (q, e) in bound.pairs() {
        for _ in 0..*e {
            if !(&order % q).is_zero() {
                break;
            }
            let candidate = &order / q;
            if mod_pow(a, &candidate, n)? == one {
                order = candidate;
            } else {
                break;
            }
        }
    }
    Ok(order)
}

/// All divisors of n in ascending order; empty for n = 0.
pub fn divisors(n: u64) -> Vec<u64> {
    if n == 0 {
        return Vec::new();
    }
    let mut divs = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n.is_multiple_of(i) {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

/// Complete factorization on machine integers; panics on n = 0.
pub fn factor_u64(n: u64) -> Vec<(u64, u32)> {
    assert!(n > 0, "factor_u64 requires n >= 1");
    let mut pairs = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    factor_u64_into(n, 0, &mut pairs, &mut rng);
    pairs.sort_unstable();
    merge_u64_pairs(&mut pairs);
    pairs
}

/// Is n a prime power q^j with j >= 1? Returns (q, j) if so.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let pairs = factor_u64(n);
    if pairs.len() == 1 {
        Some(pairs[0])
    } else {
        None
    }
}

/// Deterministic Miller-Rabin for machine integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &w in &MR_WITNESSES_U64 {
        if n == w {
            return true;
        }
        if n.is_multiple_of(w) {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &w in &MR_WITNESSES_U64 {
        let mut x = pow_mod_u64(w, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub(crate) fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let bound = TRIAL_DIVISION_BOUND as usize;
        let mut sieve = vec![true; bound + 1];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2usize;
        while i * i <= bound {
            if sieve[i] {
                let mut j = i * i;
                while j <= bound {
                    sieve[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        (2..=bound).filter(|&i| sieve[i]).map(|i| i as u32).collect()
    })
}

fn expired(deadline: Option<Instant>) -> bool {
    deadline.is_some_and(|d| Instant::now() >= d)
}

/// Uniform-ish value in [0, bound); bound must be nonzero. The tiny modulo
/// bias is irrelevant for witness and rho-parameter sampling.
fn random_below(rng: &mut ChaCha8Rng, bound: &Natural) -> Natural {
    debug_assert!(!bound.is_zero());
    let bytes = (bound.bits() as usize + 15) / 8;
    let mut buf = vec![0u8; bytes];
    rng.fill_bytes(&mut buf);
    Natural::from_bytes_le(&buf) % bound
}

/// Core factorization: trial division, then Brent rho with recursion.
/// Returns unsorted (prime, exponent) pairs or the partial state on expiry.
fn factor_impl(
    n: &Natural,
    deadline: Option<Instant>,
    seed: u64,
    rng: &mut ChaCha8Rng,
    cache: &mut Option<&mut FactorCache>,
) -> std::result::Result<Vec<(Natural, u32)>, PartialFactorization> {
    if n.is_one() {
        return Ok(Vec::new());
    }
    if let Some(c) = cache {
        if let Some(hit) = c.get(n) {
            return Ok(hit.to_vec());
        }
    }
    let mut pairs: Vec<(Natural, u32)> = Vec::new();
    let mut rest = n.clone();

    if rest.to_u64().is_none() {
        // Trial division while the number is still oversized.
        let primes = small_primes();
        let mut i = 0usize;
        while i < primes.len() {
            if i.is_multiple_of(8192) && expired(deadline) {
                return Err(PartialFactorization {
                    found: pairs,
                    cofactors: vec![rest],
                    failed_pieces: Vec::new(),
                });
            }
            let q = primes[i];
            let mut e = 0u32;
            while (&rest % q).is_zero() {
                rest /= q;
                e += 1;
            }
            if e > 0 {
                pairs.push((Natural::from(q), e));
            }
            if rest.is_one() || rest.to_u64().is_some() {
                break;
            }
            i += 1;
        }
    }

    if let Some(small) = rest.to_u64() {
        if small > 1 {
            let mut small_pairs = Vec::new();
            factor_u64_into(small, 0, &mut small_pairs, rng);
            pairs.extend(small_pairs.into_iter().map(|(q, e)| (Natural::from(q), e)));
        }
    } else {
        // rest > 2^64 with no prime factor below the trial bound.
        let mut stack = vec![rest];
        while let Some(c) = stack.pop() {
            if let Some(small) = c.to_u64() {
                let mut small_pairs = Vec::new();
                factor_u64_into(small, 0, &mut small_pairs, rng);
                pairs.extend(small_pairs.into_iter().map(|(q, e)| (Natural::from(q), e)));
                continue;
            }
            if is_prime_with(&c, seed) {
                pairs.push((c, 1));
                continue;
            }
            if expired(deadline) {
                stack.push(c);
                return Err(PartialFactorization {
                    found: pairs,
                    cofactors: stack,
                    failed_pieces: Vec::new(),
                });
            }
            match brent_rho_big(&c, rng, deadline) {
                Some(d) => {
                    stack.push(&c / &d);
                    stack.push(d);
                }
                None => {
                    stack.push(c);
                    return Err(PartialFactorization {
                        found: pairs,
                        cofactors: stack,
                        failed_pieces: Vec::new(),
                    });
                }
            }
        }
    }

    if let Some(c) = cache {
        c.insert(n.clone(), &pairs);
    }
    Ok(pairs)
}

/// Factor a machine integer, starting trial division at prime index `start`.
fn factor_u64_into(mut n: u64, start: usize, pairs: &mut Vec<(u64, u32)>, rng: &mut ChaCha8Rng) {
    let primes = small_primes();
    let mut i = start;
    while i < primes.len() {
        let q = primes[i] as u64;
        if q * q > n {
            break;
        }
        let mut e = 0u32;
        while n.is_multiple_of(q) {
            n /= q;
            e += 1;
        }
        if e > 0 {
            pairs.push((q, e));
        }
        i += 1;
    }
    if n == 1 {
        return;
    }
    if is_prime_u64(n) || n < (TRIAL_DIVISION_BOUND as u64).pow(2) {
        // No factor below the trial bound and n below its square: prime.
        pairs.push((n, 1));
        return;
    }
    let d = brent_rho_u64(n, rng);
    factor_u64_into(d, start, pairs, rng);
    factor_u64_into(n / d, start, pairs, rng);
}

fn merge_u64_pairs(pairs: &mut Vec<(u64, u32)>) {
    let mut merged: Vec<(u64, u32)> = Vec::with_capacity(pairs.len());
    for &(p, e) in pairs.iter() {
        match merged.last_mut() {
            Some(last) if last.0 == p => last.1 += e,
            _ => merged.push((p, e)),
        }
    }
    *pairs = merged;
}

/// Brent's cycle-finding variant of Pollard rho on machine integers.
/// Input must be odd, composite, and free of factors below the trial bound.
fn brent_rho_u64(n: u64, rng: &mut ChaCha8Rng) -> u64 {
    loop {
        let y0 = 2 + rng.next_u64() % (n - 2);
        let c = 1 + rng.next_u64() % (n - 1);
        if let Some(d) = brent_round_u64(n, y0, c) {
            if d != n {
                return d;
            }
        }
    }
}

fn brent_round_u64(n: u64, y0: u64, c: u64) -> Option<u64> {
    let step = |y: u64| (mul_mod_u64(y, y, n) + c) % n;
    let batch = 128u64;
    let mut y = y0;
    let mut g = 1u64;
    let mut r = 1u64;
    let mut q = 1u64;
    let mut x = 0u64;
    let mut ys = 0u64;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = step(y);
        }
        let mut k = 0u64;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..batch.min(r - k) {
                y = step(y);
                q = mul_mod_u64(q, x.abs_diff(y), n);
            }
            g = gcd_u64(q, n);
            k += batch;
        }
        r *= 2;
    }
    if g == n {
        loop {
            ys = step(ys);
            g = gcd_u64(x.abs_diff(ys), n);
            if g > 1 {
                break;
            }
        }
    }
    if g > 1 && g < n {
        Some(g)
    } else {
        None
    }
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// Brent rho over big integers; `None` means the deadline expired mid-search.
fn brent_rho_big(n: &Natural, rng: &mut ChaCha8Rng, deadline: Option<Instant>) -> Option<Natural> {
    let one = Natural::one();
    let two = Natural::from(2u32);
    let span = n - &two;
    loop {
        let y0 = &two + random_below(rng, &span);
        let c = &one + random_below(rng, &(n - &one));
        match brent_round_big(n, &y0, &c, deadline) {
            Ok(Some(d)) if &d != n => return Some(d),
            Ok(_) => continue,
            Err(()) => return None,
        }
    }
}

fn brent_round_big(
    n: &Natural,
    y0: &Natural,
    c: &Natural,
    deadline: Option<Instant>,
) -> std::result::Result<Option<Natural>, ()> {
    let one = Natural::one();
    let step = |y: &Natural| (y * y + c) % n;
    let abs_diff = |a: &Natural, b: &Natural| if a >= b { a - b } else { b - a };
    let batch = 128u64;
    let mut y = y0.clone();
    let mut g = one.clone();
    let mut r = 1u64;
    let mut q = one.clone();
    let mut x = Natural::zero();
    let mut ys = Natural::zero();
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = step(&y);
        }
        let mut k = 0u64;
        while k < r && g.is_one() {
            if expired(deadline) {
                return Err(());
            }
            ys = y.clone();
            for _ in 0..batch.min(r - k) {
                y = step(&y);
                q = q * abs_diff(&x, &y) % n;
            }
            g = gcd(&q, n);
            k += batch;
        }
        r *= 2;
    }
    if &g == n {
        loop {
            if expired(deadline) {
                return Err(());
            }
            ys = step(&ys);
            g = gcd(&abs_diff(&x, &ys), n);
            if !g.is_one() {
                break;
            }
        }
    }
    if !g.is_one() && &g != n {
        Ok(Some(g))
    } else {
        Ok(None)
    }
}
