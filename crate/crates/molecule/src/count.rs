//! Exact integer counting of main-molecule hyperbolic components.
//!
//! `M(n)`, the number of period-`n` hyperbolic components attached to the
//! main cardioid through a chain of satellite components, is computed three
//! independent ways:
//!
//! * [`molecule_count_direct`] sums `phi(d_1) * ... * phi(d_k)` over every
//!   ordered factorization `n = d_1 * ... * d_k` with all parts > 1;
//! * [`molecule_count_recursive`] uses the divisor recursion
//!   `M(n) = sum_{d | n, d > 1} phi(d) * M(n / d)`;
//! * closed forms: [`molecule_count_prime_power`] gives
//!   `(p - 1) * (2p - 1)^(k - 1)` for `n = p^k`, and
//!   [`molecule_count_squarefree`] gives `N(m) * (p_1 - 1) * ... * (p_m - 1)`
//!   for squarefree `n`, with `N(m)` the ordered Bell number.
//!
//! [`total_component_count`] counts period-`n` components in the whole
//! Mandelbrot set (Mobius inversion of `2^(n-1)`) and serves as an upper
//! bound and as the oracle for the full parameter-plane sweep.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Arbitrary-precision nonnegative count.
///
/// `M(p^k)` and the ordered Bell numbers grow geometrically, so counts are
/// kept exact and unbounded. Values round-trip through decimal strings.
pub type BigCount = BigUint;

/// Default cap on how many ordered factorizations an enumeration will visit.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("n must be a positive integer")]
    ZeroInput,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} appears more than once: input is not squarefree")]
    DuplicatePrime(u64),
    #[error("product of the given primes overflows a 64-bit integer")]
    ProductTooLarge,
    #[error("{n} has {required} ordered factorizations, over the enumeration budget of {budget}")]
    BudgetExceeded { n: u64, required: u128, budget: u64 },
}

/// Deterministic primality check by trial division; inputs are desk-scale.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    if n % 3 == 0 {
        return n == 3;
    }
    let mut d = 5;
    while d <= n / d {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// Prime factorization `n = p_1^e_1 * ... * p_r^e_r` with primes strictly
/// increasing. The factorization of 1 is the empty product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeFactorization {
    pairs: Vec<(u64, u32)>,
}

impl PrimeFactorization {
    /// Factor `n` by trial division up to `sqrt(n)`.
    pub fn of(n: u64) -> Result<Self, CountError> {
        if n == 0 {
            return Err(CountError::ZeroInput);
        }
        let mut pairs = Vec::new();
        let mut m = n;
        let mut p: u64 = 2;
        while p <= m / p {
            if m % p == 0 {
                let mut e = 0u32;
                while m % p == 0 {
                    m /= p;
                    e += 1;
                }
                pairs.push((p, e));
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if m > 1 {
            pairs.push((m, 1));
        }
        Ok(Self { pairs })
    }

    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    pub fn value(&self) -> u64 {
        self.pairs.iter().map(|&(p, e)| p.pow(e)).product()
    }

    pub fn is_squarefree(&self) -> bool {
        self.pairs.iter().all(|&(_, e)| e == 1)
    }

    /// True for `n = p^k` with `k >= 1`.
    pub fn is_prime_power(&self) -> bool {
        self.pairs.len() == 1
    }

    pub fn distinct_primes(&self) -> Vec<u64> {
        self.pairs.iter().map(|&(p, _)| p).collect()
    }
}

/// Euler totient via the product formula over the prime factorization.
pub fn euler_phi(n: u64) -> Result<BigCount, CountError> {
    Ok(BigUint::from(euler_phi_u64(n)?))
}

/// Totient as a machine integer; `phi(n) <= n` so this never overflows.
pub(crate) fn euler_phi_u64(n: u64) -> Result<u64, CountError> {
    let f = PrimeFactorization::of(n)?;
    let mut phi = 1u64;
    for &(p, e) in f.pairs() {
        phi *= p.pow(e - 1) * (p - 1);
    }
    Ok(phi)
}

/// All divisors of `n` in strictly increasing order, including 1 and `n`.
pub fn divisors(n: u64) -> Result<Vec<u64>, CountError> {
    if n == 0 {
        return Err(CountError::ZeroInput);
    }
    Ok(divisors_unchecked(n))
}

fn divisors_unchecked(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d <= n / d {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Mobius function: 0 if `n` has a squared prime factor, else `(-1)^r`.
pub fn mobius(n: u64) -> Result<i8, CountError> {
    let f = PrimeFactorization::of(n)?;
    if !f.is_squarefree() {
        return Ok(0);
    }
    Ok(if f.pairs().len() % 2 == 0 { 1 } else { -1 })
}

/// An ordered tuple of integers > 1 whose product is the target.
///
/// The target 1 is represented by the empty tuple, so the sum defining
/// `M(n)` needs no special base case.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedFactorization {
    parts: Vec<u64>,
}

impl OrderedFactorization {
    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn product(&self) -> u64 {
        self.parts.iter().product()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// Number of ordered factorizations of `n` into parts > 1 without
/// materializing them; the empty factorization of 1 counts once.
pub fn ordered_factorization_count(n: u64) -> Result<u128, CountError> {
    if n == 0 {
        return Err(CountError::ZeroInput);
    }
    let mut memo: HashMap<u64, u128> = HashMap::new();
    Ok(factorization_count_rec(n, &mut memo))
}

fn factorization_count_rec(m: u64, memo: &mut HashMap<u64, u128>) -> u128 {
    if m == 1 {
        return 1;
    }
    if let Some(&c) = memo.get(&m) {
        return c;
    }
    let mut total: u128 = 0;
    for d in divisors_unchecked(m) {
        if d >= 2 {
            total = total.saturating_add(factorization_count_rec(m / d, memo));
        }
    }
    memo.insert(m, total);
    total
}

/// Every ordered factorization of `n` into parts > 1, each exactly once, in
/// lexicographic order by successive parts. `n = 1` yields the empty tuple.
pub fn ordered_factorizations(n: u64) -> Result<Vec<OrderedFactorization>, CountError> {
    ordered_factorizations_with_budget(n, DEFAULT_ENUMERATION_BUDGET)
}

pub fn ordered_factorizations_with_budget(
    n: u64,
    budget: u64,
) -> Result<Vec<OrderedFactorization>, CountError> {
    let required = ordered_factorization_count(n)?;
    if required > budget as u128 {
        return Err(CountError::BudgetExceeded { n, required, budget });
    }
    let mut out = Vec::with_capacity(required as usize);
    let mut parts = Vec::new();
    emit_factorizations(n, &mut parts, &mut out);
    Ok(out)
}

fn emit_factorizations(m: u64, parts: &mut Vec<u64>, out: &mut Vec<OrderedFactorization>) {
    if m == 1 {
        out.push(OrderedFactorization { parts: parts.clone() });
        return;
    }
    for d in divisors_unchecked(m) {
        if d >= 2 {
            parts.push(d);
            emit_factorizations(m / d, parts, out);
            parts.pop();
        }
    }
}

/// `M(n)` as the sum of `phi(d_1) * ... * phi(d_k)` over ordered
/// factorizations of `n`; `M(1) = 1` from the empty product.
pub fn molecule_count_direct(n: u64) -> Result<BigCount, CountError> {
    molecule_count_direct_with_budget(n, DEFAULT_ENUMERATION_BUDGET)
}

pub fn molecule_count_direct_with_budget(n: u64, budget: u64) -> Result<BigCount, CountError> {
    let required = ordered_factorization_count(n)?;
    if required > budget as u128 {
        return Err(CountError::BudgetExceeded { n, required, budget });
    }
    let divs = divisors_unchecked(n);
    let mut phi = HashMap::with_capacity(divs.len());
    let mut proper: HashMap<u64, Vec<u64>> = HashMap::with_capacity(divs.len());
    for &v in &divs {
        phi.insert(v, euler_phi_u64(v)?);
        proper.insert(
            v,
            divs.iter().copied().filter(|&d| d >= 2 && v % d == 0 && d <= v).collect(),
        );
    }
    // each term is < n, so a u128 accumulator over <= budget terms is exact
    let mut total: u128 = 0;
    walk_factorizations(n, 1, &phi, &proper, &mut total);
    Ok(BigUint::from(total))
}

fn walk_factorizations(
    m: u64,
    term: u64,
    phi: &HashMap<u64, u64>,
    proper: &HashMap<u64, Vec<u64>>,
    total: &mut u128,
) {
    if m == 1 {
        *total += term as u128;
        return;
    }
    for &d in &proper[&m] {
        walk_factorizations(m / d, term * phi[&d], phi, proper, total);
    }
}

/// `M(n)` by the divisor recursion `M(n) = sum_{d | n, d > 1} phi(d) M(n/d)`,
/// evaluated bottom-up over the divisor lattice of `n`.
pub fn molecule_count_recursive(n: u64) -> Result<BigCount, CountError> {
    if n == 0 {
        return Err(CountError::ZeroInput);
    }
    let divs = divisors_unchecked(n);
    let mut table: HashMap<u64, BigUint> = HashMap::with_capacity(divs.len());
    table.insert(1, BigUint::one());
    for &v in divs.iter().filter(|&&v| v > 1) {
        let mut acc = BigUint::zero();
        for &d in divs.iter().filter(|&&d| d > 1 && d <= v && v % d == 0) {
            acc += &table[&(v / d)] * euler_phi_u64(d)?;
        }
        table.insert(v, acc);
    }
    Ok(table.remove(&n).expect("n is its own divisor"))
}

/// Closed form `M(p^k) = (p - 1) * (2p - 1)^(k - 1)` for prime `p`.
pub fn molecule_count_prime_power(p: u64, k: u32) -> Result<BigCount, CountError> {
    if k == 0 {
        return Err(CountError::ZeroInput);
    }
    if !is_prime(p) {
        return Err(CountError::NotPrime(p));
    }
    Ok(BigUint::from(p - 1) * BigUint::from(2 * p - 1).pow(k - 1))
}

/// Ordered Bell number `N(m)`: the number of ordered set partitions of an
/// m-element set. `N(0) = 1` and `N(m) = sum_{k=1}^{m} C(m, k) N(m - k)`.
pub fn ordered_bell(m: u32) -> BigCount {
    let m = m as usize;
    let mut bell: Vec<BigUint> = Vec::with_capacity(m + 1);
    bell.push(BigUint::one());
    for i in 1..=m {
        let mut acc = BigUint::zero();
        let mut binom = BigUint::one();
        for k in 1..=i {
            // C(i, k) = C(i, k - 1) * (i - k + 1) / k, exactly
            binom = binom * (i - k + 1) / k;
            acc += &binom * &bell[i - k];
        }
        bell.push(acc);
    }
    bell.pop().expect("vector holds m + 1 entries")
}

fn validate_distinct_primes(primes: &[u64]) -> Result<(), CountError> {
    for &p in primes {
        if !is_prime(p) {
            return Err(CountError::NotPrime(p));
        }
    }
    let mut sorted = primes.to_vec();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(CountError::DuplicatePrime(w[0]));
        }
    }
    Ok(())
}

/// Closed form `M(p_1 ... p_m) = N(m) * (p_1 - 1) * ... * (p_m - 1)` for a
/// squarefree product of distinct primes. The empty list gives `M(1) = 1`.
pub fn molecule_count_squarefree(primes: &[u64]) -> Result<BigCount, CountError> {
    validate_distinct_primes(primes)?;
    let mut product = BigUint::one();
    for &p in primes {
        product *= p - 1;
    }
    Ok(ordered_bell(primes.len() as u32) * product)
}

/// The exact ratio `M(n) / (N(m) * n)` for `n = p_1 ... p_m` squarefree.
///
/// `M(n)` is taken from the general divisor recursion and `N(m)` from the
/// ordered Bell recursion, so the value can be checked independently against
/// the product `(1 - 1/p_1) * ... * (1 - 1/p_m)`.
pub fn asymptotic_ratio(primes: &[u64]) -> Result<BigRational, CountError> {
    validate_distinct_primes(primes)?;
    let mut n: u64 = 1;
    for &p in primes {
        n = n.checked_mul(p).ok_or(CountError::ProductTooLarge)?;
    }
    let m = molecule_count_recursive(n)?;
    let denom = ordered_bell(primes.len() as u32) * BigUint::from(n);
    Ok(BigRational::new(BigInt::from(m), BigInt::from(denom)))
}

/// Total number of hyperbolic components of exact period `n` in the whole
/// Mandelbrot set: `nu(n) = sum_{d | n} mu(n / d) * 2^(d - 1)`.
pub fn total_component_count(n: u64) -> Result<BigCount, CountError> {
    if n == 0 {
        return Err(CountError::ZeroInput);
    }
    let mut acc = BigInt::zero();
    for d in divisors_unchecked(n) {
        let pow = BigInt::one() << (d - 1) as usize;
        match mobius(n / d)? {
            1 => acc += pow,
            -1 => acc -= pow,
            _ => {}
        }
    }
    Ok(acc.to_biguint().expect("component counts are nonnegative"))
}
