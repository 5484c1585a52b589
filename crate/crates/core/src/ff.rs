//! Arithmetic in GF(p) and GF(p^n).
//!
//! Elements are coefficient vectors over the polynomial basis `1, t, ..., t^(n-1)`
//! reduced modulo a monic irreducible polynomial. The canonical integer encoding of
//! an element is `sum(coeffs[i] * p^i)`; it is the on-disk form and the order used
//! for every "smallest element" choice in this crate.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("modulus must have {expected} coefficients, got {got}")]
    ModulusLength { expected: usize, got: usize },
    #[error("modulus is not monic")]
    NotMonic,
    #[error("modulus coefficient {0} is not reduced mod p")]
    CoefficientOutOfRange(u64),
    #[error("modulus is reducible over GF({0})")]
    Reducible(u64),
    #[error("field order {p}^{n} does not fit in 64 bits")]
    TooLarge { p: u64, n: u32 },
    #[error("encoding {0} is outside the field")]
    EncodingOutOfRange(u64),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("zero is not a member of the multiplicative group")]
    ZeroResidue,
    #[error("power index must be at least 2, got {0}")]
    BadPowerIndex(u64),
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Returns `(p, e)` with `q = p^e` when `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && q % p != 0 {
        p += 1;
    }
    if q % p != 0 {
        // q itself is prime
        return Some((q, 1));
    }
    let mut rest = q;
    let mut e = 0;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn checked_order(p: u64, n: u32) -> Result<u64, FieldError> {
    p.checked_pow(n).ok_or(FieldError::TooLarge { p, n })
}

// Polynomials over GF(p): coefficient vectors, constant term first, no trailing zeros
// except for the zero polynomial which is empty.

fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

/// Remainder of `a` modulo the monic polynomial `m`.
fn poly_rem_monic(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = r[r.len() - 1];
        let shift = r.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            let idx = shift + i;
            r[idx] = (r[idx] + (p - c * lead % p)) % p;
        }
        trim(&mut r);
    }
    r
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-`p` digits of `code`.
fn monic_from_code(p: u64, deg: u32, mut code: u64) -> Vec<u64> {
    let mut poly = Vec::with_capacity(deg as usize + 1);
    for _ in 0..deg {
        poly.push(code % p);
        code /= p;
    }
    poly.push(1);
    poly
}

/// Irreducibility by trial division with every monic polynomial of degree `1..=deg/2`.
pub fn is_irreducible(p: u64, poly: &[u64]) -> bool {
    let deg = poly.len().saturating_sub(1) as u32;
    if deg == 0 {
        return false;
    }
    if deg == 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        for code in 0..p.pow(d) {
            let divisor = monic_from_code(p, d, code);
            if poly_rem_monic(poly, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Smallest monic irreducible polynomial of degree `n` over GF(p), ordered by the
/// base-`p` value of its non-leading coefficients (the same order as element encodings).
///
/// For `n = 1` this is `t`.
pub fn find_irreducible(p: u64, n: u32) -> Result<Vec<u64>, FieldError> {
    if !is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    if n == 0 {
        return Err(FieldError::ZeroDegree);
    }
    let count = checked_order(p, n)?;
    (0..count)
        .map(|code| monic_from_code(p, n, code))
        .find(|poly| is_irreducible(p, poly))
        .ok_or(FieldError::Reducible(p))
}

/// Parameters of GF(p^n): characteristic, degree and the reducing polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    pub n: u32,
    /// Monic irreducible polynomial, constant term first; length `n + 1`.
    pub modulus: Vec<u64>,
}

impl FieldSpec {
    pub fn new(p: u64, n: u32, modulus: Vec<u64>) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if n == 0 {
            return Err(FieldError::ZeroDegree);
        }
        checked_order(p, n)?;
        if modulus.len() != n as usize + 1 {
            return Err(FieldError::ModulusLength {
                expected: n as usize + 1,
                got: modulus.len(),
            });
        }
        if let Some(&c) = modulus.iter().find(|&&c| c >= p) {
            return Err(FieldError::CoefficientOutOfRange(c));
        }
        if modulus[n as usize] != 1 {
            return Err(FieldError::NotMonic);
        }
        if !is_irreducible(p, &modulus) {
            return Err(FieldError::Reducible(p));
        }
        Ok(Self { p, n, modulus })
    }

    /// GF(p^n) with the modulus chosen by [`find_irreducible`].
    pub fn with_default_modulus(p: u64, n: u32) -> Result<Self, FieldError> {
        let modulus = find_irreducible(p, n)?;
        Ok(Self { p, n, modulus })
    }

    /// GF(q) for a prime power `q`.
    pub fn for_order(q: u64) -> Result<Self, FieldError> {
        let (p, n) = prime_power(q).ok_or(FieldError::NotPrime(q))?;
        Self::with_default_modulus(p, n)
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.n)
    }
}

/// Coefficients of an element over the basis `1, t, ..., t^(n-1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(pub Vec<u64>);

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }
}

/// A finite field built from a validated [`FieldSpec`].
#[derive(Debug, Clone)]
pub struct Field {
    spec: FieldSpec,
    order: u64,
}

impl Field {
    pub fn new(spec: FieldSpec) -> Self {
        let order = spec.order();
        Self { spec, order }
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn characteristic(&self) -> u64 {
        self.spec.p
    }

    pub fn degree(&self) -> u32 {
        self.spec.n
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(vec![0; self.spec.n as usize])
    }

    pub fn one(&self) -> FieldElement {
        let mut c = vec![0; self.spec.n as usize];
        c[0] = 1;
        FieldElement(c)
    }

    pub fn decode(&self, mut enc: u64) -> Result<FieldElement, FieldError> {
        if enc >= self.order {
            return Err(FieldError::EncodingOutOfRange(enc));
        }
        let p = self.spec.p;
        let coeffs = (0..self.spec.n)
            .map(|_| {
                let d = enc % p;
                enc /= p;
                d
            })
            .collect();
        Ok(FieldElement(coeffs))
    }

    pub fn encode(&self, a: &FieldElement) -> u64 {
        a.0.iter().rev().fold(0, |acc, &c| acc * self.spec.p + c)
    }

    /// Element for a value of the prime subfield.
    pub fn from_int(&self, v: u64) -> FieldElement {
        let mut c = vec![0; self.spec.n as usize];
        c[0] = v % self.spec.p;
        FieldElement(c)
    }

    pub fn is_zero(&self, a: &FieldElement) -> bool {
        a.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.spec.p;
        FieldElement(a.0.iter().zip(&b.0).map(|(x, y)| (x + y) % p).collect())
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.spec.p;
        FieldElement(a.0.iter().zip(&b.0).map(|(x, y)| (x + p - y) % p).collect())
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        let p = self.spec.p;
        FieldElement(a.0.iter().map(|x| (p - x) % p).collect())
    }

    /// Multiplication by an element of the prime subfield.
    pub fn scale(&self, s: u64, a: &FieldElement) -> FieldElement {
        let p = self.spec.p;
        let s = s % p;
        FieldElement(a.0.iter().map(|x| x * s % p).collect())
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.spec.p;
        let n = self.spec.n as usize;
        let mut prod = vec![0u64; 2 * n - 1];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        let mut r = poly_rem_monic(&prod, &self.spec.modulus, p);
        r.resize(n, 0);
        FieldElement(r)
    }

    pub fn pow(&self, a: &FieldElement, mut e: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement, FieldError> {
        if self.is_zero(a) {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.pow(a, self.order - 2))
    }

    /// Membership of `a` in the subgroup of `k`-th powers of the multiplicative group,
    /// tested as `a^((q-1)/g) = 1` with `g = gcd(k, q-1)`.
    pub fn is_kth_power(&self, a: &FieldElement, k: u64) -> Result<bool, FieldError> {
        if k < 2 {
            return Err(FieldError::BadPowerIndex(k));
        }
        if self.is_zero(a) {
            return Err(FieldError::ZeroResidue);
        }
        let g = gcd(k, self.order - 1);
        Ok(self.pow(a, (self.order - 1) / g) == self.one())
    }

    pub fn is_square(&self, a: &FieldElement) -> Result<bool, FieldError> {
        self.is_kth_power(a, 2)
    }

    /// `{x^2 : x != 0}`, sorted by encoding.
    pub fn squares(&self) -> Vec<FieldElement> {
        self.kth_powers(2)
    }

    /// `{x^k : x != 0}`, sorted by encoding.
    pub fn kth_powers(&self, k: u64) -> Vec<FieldElement> {
        let mut seen = vec![false; self.order as usize];
        for enc in 1..self.order {
            let x = self.decode(enc).expect("in range");
            seen[self.encode(&self.pow(&x, k)) as usize] = true;
        }
        seen.iter()
            .enumerate()
            .filter(|(_, &s)| s)
            .map(|(e, _)| self.decode(e as u64).expect("in range"))
            .collect()
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order).map(|e| self.decode(e).expect("in range"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn gf(q: u64) -> Field {
        Field::new(FieldSpec::for_order(q).unwrap())
    }

    /// All monic degree-`n` polynomials that split as a product of two monic factors,
    /// found by multiplying every pair rather than by division.
    fn reducible_by_products(p: u64, n: u32) -> HashSet<Vec<u64>> {
        let mut out = HashSet::new();
        for d in 1..=n / 2 {
            for a in 0..p.pow(d) {
                let fa = monic_from_code(p, d, a);
                for b in 0..p.pow(n - d) {
                    let fb = monic_from_code(p, n - d, b);
                    let mut prod = vec![0; (n + 1) as usize];
                    for (i, x) in fa.iter().enumerate() {
                        for (j, y) in fb.iter().enumerate() {
                            prod[i + j] = (prod[i + j] + x * y) % p;
                        }
                    }
                    out.insert(prod);
                }
            }
        }
        out
    }

    #[test]
    fn irreducible_examples() {
        assert_eq!(find_irreducible(3, 1).unwrap(), vec![0, 1]);
        assert_eq!(find_irreducible(3, 2).unwrap(), vec![1, 0, 1]);
        assert_eq!(find_irreducible(5, 2).unwrap(), vec![2, 0, 1]);
    }

    #[test]
    fn irreducible_matches_product_enumeration() {
        for (p, n) in [(3u64, 2u32), (3, 3), (3, 4), (3, 5), (5, 2), (5, 3), (7, 2), (7, 3), (11, 2), (13, 2), (3, 8)] {
            if p.pow(n) > 10_000 {
                continue;
            }
            let reducible = reducible_by_products(p, n);
            let found = find_irreducible(p, n).unwrap();
            assert!(!reducible.contains(&found), "p={p} n={n}");
            let code = found[..n as usize].iter().rev().fold(0, |acc, &c| acc * p + c);
            for smaller in 0..code {
                assert!(reducible.contains(&monic_from_code(p, n, smaller)));
            }
        }
    }

    #[test]
    fn spec_rejects_bad_input() {
        assert_eq!(FieldSpec::new(9, 1, vec![0, 1]), Err(FieldError::NotPrime(9)));
        assert_eq!(FieldSpec::new(5, 2, vec![1, 0, 1]), Err(FieldError::Reducible(5)));
        assert_eq!(FieldSpec::new(5, 2, vec![2, 0, 2]), Err(FieldError::NotMonic));
        assert!(matches!(FieldSpec::new(5, 2, vec![2, 1]), Err(FieldError::ModulusLength { .. })));
    }

    #[test]
    fn arithmetic_examples() {
        let f13 = gf(13);
        let s = f13.add(&f13.from_int(9), &f13.from_int(5));
        assert_eq!(f13.encode(&s), 1);

        let f9 = gf(9);
        assert_eq!(f9.spec().modulus, vec![1, 0, 1]);
        let t = f9.decode(3).unwrap();
        assert_eq!(t.coeffs(), &[0, 1]);
        assert_eq!(f9.encode(&f9.mul(&t, &t)), 2);

        for q in [13, 9, 25, 27] {
            let f = gf(q);
            for a in f.elements().skip(1) {
                assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
            }
            assert_eq!(f.inv(&f.zero()), Err(FieldError::ZeroInverse));
        }
    }

    #[test]
    fn euler_criterion_examples() {
        let f13 = gf(13);
        assert!(f13.is_square(&f13.from_int(3)).unwrap());
        assert!(!f13.is_square(&f13.from_int(2)).unwrap());
        assert_eq!(f13.is_square(&f13.zero()), Err(FieldError::ZeroResidue));
        for q in [5, 9, 13, 17, 25, 29, 49, 81, 125] {
            let f = gf(q);
            assert!(f.is_square(&f.neg(&f.one())).unwrap(), "q={q}");
        }
        let f7 = gf(7);
        assert!(!f7.is_square(&f7.neg(&f7.one())).unwrap());
    }

    #[test]
    fn squares_examples() {
        let enc = |f: &Field| f.squares().iter().map(|x| f.encode(x)).collect::<Vec<_>>();
        assert_eq!(enc(&gf(13)), vec![1, 3, 4, 9, 10, 12]);
        assert_eq!(enc(&gf(5)), vec![1, 4]);
        for q in [3, 7, 9, 11, 25, 27, 49, 121, 125] {
            assert_eq!(gf(q).squares().len() as u64, (q - 1) / 2);
        }
    }

    #[test]
    fn squares_agree_with_euler_criterion() {
        for q in [5, 9, 13, 25, 27, 49, 81, 125, 169] {
            let f = gf(q);
            let by_euler: Vec<_> = f
                .elements()
                .skip(1)
                .filter(|a| f.is_square(a).unwrap())
                .collect();
            assert_eq!(by_euler, f.squares(), "q={q}");
        }
    }

    #[test]
    fn kth_power_uses_gcd() {
        let f13 = gf(13);
        let cubes: Vec<u64> = f13.elements().skip(1)
            .filter(|a| f13.is_kth_power(a, 3).unwrap())
            .map(|a| f13.encode(&a))
            .collect();
        assert_eq!(cubes, vec![1, 5, 8, 12]);
        // gcd(5, 12) = 1: everything is a fifth power
        assert!(f13.elements().skip(1).all(|a| f13.is_kth_power(&a, 5).unwrap()));
        assert_eq!(f13.is_kth_power(&f13.one(), 1), Err(FieldError::BadPowerIndex(1)));
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(13), Some((13, 1)));
        assert_eq!(prime_power(125), Some((5, 3)));
        assert_eq!(prime_power(81), Some((3, 4)));
        assert_eq!(prime_power(45), None);
    }

    proptest! {
        #[test]
        fn encoding_round_trip(q in prop::sample::select(vec![9u64, 25, 27, 49, 81, 121, 125, 169, 343]), seed in any::<u64>()) {
            let f = gf(q);
            let e = seed % q;
            prop_assert_eq!(f.encode(&f.decode(e).unwrap()), e);
        }

        #[test]
        fn quadratic_character_is_multiplicative(
            q in prop::sample::select(vec![9u64, 13, 25, 27, 29, 49, 81, 125]),
            a in 1u64..1000, b in 1u64..1000,
        ) {
            let f = gf(q);
            let x = f.decode(1 + a % (q - 1)).unwrap();
            let y = f.decode(1 + b % (q - 1)).unwrap();
            let sx = f.is_square(&x).unwrap();
            let sy = f.is_square(&y).unwrap();
            prop_assert_eq!(f.is_square(&f.mul(&x, &y)).unwrap(), sx == sy);
        }

        #[test]
        fn field_axioms(q in prop::sample::select(vec![9u64, 25, 27, 49, 125]), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
            let f = gf(q);
            let (x, y, z) = (f.decode(a % q).unwrap(), f.decode(b % q).unwrap(), f.decode(c % q).unwrap());
            prop_assert_eq!(f.mul(&x, &f.add(&y, &z)), f.add(&f.mul(&x, &y), &f.mul(&x, &z)));
            prop_assert_eq!(f.mul(&f.mul(&x, &y), &z), f.mul(&x, &f.mul(&y, &z)));
            prop_assert_eq!(f.add(&x, &f.neg(&x)), f.zero());
            prop_assert_eq!(f.sub(&x, &y), f.add(&x, &f.neg(&y)));
        }
    }
}
