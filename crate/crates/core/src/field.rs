//! Arithmetic in GF(p^t).
//!
//! Elements are identified with their coefficient vectors over GF(p) in the
//! basis `1, x, ..., x^(t-1)`, and the vector `(c_0, ..., c_{t-1})` is read as
//! the base-p integer `c_0 + c_1 p + ... + c_{t-1} p^(t-1)`. That integer is the
//! element's *index*, and the enumeration `alpha_0, ..., alpha_{q-1}` of the
//! field is the index order. In particular `alpha_0 = 0` and `alpha_1 = 1`,
//! and for prime fields the enumeration is the natural `0, 1, ..., p-1`.
//!
//! The modulus is the smallest monic irreducible polynomial of degree `t`
//! (coefficient vectors compared as base-p integers), so two fields built
//! from the same `(p, t)` are interchangeable.
//!
//! Multiplication goes through exp/log tables built from a primitive element;
//! addition is XOR in characteristic 2, a table for small odd fields and
//! digit-wise otherwise.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

/// Identifies the field an element belongs to. Fields with equal `(p, t)`
/// share an identifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldId(u32);

impl FieldId {
    fn new(p: u32, t: u32) -> Self {
        FieldId(p * 32 + t)
    }
}

/// An element of a [`Field`], stored as its enumeration index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    index: u32,
    field: FieldId,
}

impl FieldElement {
    /// Position of the element in the field enumeration.
    pub fn index(self) -> u32 {
        self.index
    }

    pub fn field_id(self) -> FieldId {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.index == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index)
    }
}

struct Tables {
    p: u32,
    t: u32,
    q: u32,
    id: FieldId,
    modulus: Vec<u32>,
    /// `exp[k] = g^k` for `k < 2(q-1)`, doubled so products of logs need no reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Option<Vec<u16>>,
    /// `p^i` for `i < t`.
    radix: Vec<u32>,
}

/// The finite field GF(p^t). Cloning is cheap; the tables are shared.
#[derive(Clone)]
pub struct Field {
    inner: Arc<Tables>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.inner.id == other.inner.id
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.inner.p, self.inner.t)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn to_digits(mut value: u32, p: u32, len: usize) -> Vec<u32> {
    let mut digits = vec![0; len];
    for digit in digits.iter_mut() {
        *digit = value % p;
        value /= p;
    }
    digits
}

fn from_digits(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // Fermat; p is prime and a != 0 mod p.
    let (mut base, mut exp, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    acc as u32
}

/// Remainder of `num` divided by `den` over GF(p). Coefficients low to high;
/// `den` must have a nonzero leading coefficient.
fn poly_rem(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    let mut rem: Vec<u64> = num.iter().map(|&c| c as u64).collect();
    let dlen = den.len();
    let lead_inv = inv_mod(den[dlen - 1], p) as u64;
    let p64 = p as u64;
    while rem.len() >= dlen {
        let top = *rem.last().unwrap() % p64;
        if top != 0 {
            let factor = top * lead_inv % p64;
            let shift = rem.len() - dlen;
            for (k, &c) in den.iter().enumerate() {
                let sub = factor * c as u64 % p64;
                rem[shift + k] = (rem[shift + k] + p64 - sub) % p64;
            }
        }
        rem.pop();
    }
    rem.into_iter().map(|c| c as u32).collect()
}

fn poly_mulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
    let mut rem = poly_rem(&prod, modulus, p);
    rem.resize(modulus.len() - 1, 0);
    rem
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-p
/// digits of `low`.
fn monic(low: u32, p: u32, deg: usize) -> Vec<u32> {
    let mut coeffs = to_digits(low, p, deg);
    coeffs.push(1);
    coeffs
}

fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let t = poly.len() - 1;
    for deg in 1..=t / 2 {
        for low in 0..p.pow(deg as u32) {
            let divisor = monic(low, p, deg);
            if poly_rem(poly, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u32, t: usize) -> Vec<u32> {
    if t == 1 {
        return vec![0, 1];
    }
    (0..p.pow(t as u32))
        .map(|low| monic(low, p, t))
        .find(|poly| is_irreducible(poly, p))
        .expect("an irreducible polynomial of every degree exists")
}

impl Field {
    /// Builds GF(p^t) with the deterministic modulus described in the module docs.
    pub fn new(p: u64, t: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        let too_big = Error::UnsupportedSize {
            p,
            t,
            max: MAX_FIELD_ORDER,
        };
        if t == 0 || t > 16 {
            return Err(too_big);
        }
        let q = p
            .checked_pow(t as u32)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or(too_big)?;
        let (p, t, q) = (p as u32, t as u32, q as u32);
        let modulus = smallest_irreducible(p, t as usize);

        let mut neg = vec![0u32; q as usize];
        for (index, slot) in neg.iter_mut().enumerate() {
            let digits: Vec<u32> = to_digits(index as u32, p, t as usize)
                .into_iter()
                .map(|c| (p - c) % p)
                .collect();
            *slot = from_digits(&digits, p);
        }

        let (exp, log) = Self::build_log_tables(p, t, q, &modulus);

        let add = (p != 2 && q <= 256).then(|| {
            let mut table = vec![0u16; (q * q) as usize];
            for a in 0..q {
                let da = to_digits(a, p, t as usize);
                for b in 0..q {
                    let db = to_digits(b, p, t as usize);
                    let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                    table[(a * q + b) as usize] = from_digits(&sum, p) as u16;
                }
            }
            table
        });

        let radix = (0..t).map(|i| p.pow(i)).collect();
        Ok(Field {
            inner: Arc::new(Tables {
                p,
                t,
                q,
                id: FieldId::new(p, t),
                modulus,
                exp,
                log,
                neg,
                add,
                radix,
            }),
        })
    }

    fn build_log_tables(p: u32, t: u32, q: u32, modulus: &[u32]) -> (Vec<u32>, Vec<u32>) {
        let order = (q - 1) as usize;
        for candidate in 1..q {
            let g = to_digits(candidate, p, t as usize);
            let mut exp = Vec::with_capacity(2 * order);
            let mut current = to_digits(1, p, t as usize);
            let mut primitive = true;
            for k in 0..order {
                let index = from_digits(&current, p);
                if k > 0 && index == 1 {
                    primitive = false;
                    break;
                }
                exp.push(index);
                current = poly_mulmod(&current, &g, modulus, p);
            }
            if !primitive {
                continue;
            }
            let mut log = vec![0u32; q as usize];
            for (k, &e) in exp.iter().enumerate() {
                log[e as usize] = k as u32;
            }
            exp.extend_from_within(..);
            return (exp, log);
        }
        unreachable!("the multiplicative group of a finite field is cyclic")
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.p
    }

    pub fn degree(&self) -> u32 {
        self.inner.t
    }

    /// Number of elements `q = p^t`.
    pub fn order(&self) -> u32 {
        self.inner.q
    }

    pub fn id(&self) -> FieldId {
        self.inner.id
    }

    /// The defining polynomial, coefficients low to high (monic, degree t).
    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn contains(&self, a: FieldElement) -> bool {
        a.field == self.inner.id && a.index < self.inner.q
    }

    pub fn zero(&self) -> FieldElement {
        self.wrap(0)
    }

    pub fn one(&self) -> FieldElement {
        self.wrap(1)
    }

    fn wrap(&self, index: u32) -> FieldElement {
        FieldElement {
            index,
            field: self.inner.id,
        }
    }

    /// The element `alpha_index`.
    pub fn element(&self, index: u32) -> Result<FieldElement> {
        if index >= self.inner.q {
            return Err(Error::Parse(format!(
                "element index {index} out of range for {self}"
            )));
        }
        Ok(self.wrap(index))
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        self.wrap(n.rem_euclid(self.inner.p as i64) as u32)
    }

    /// `alpha_0, ..., alpha_{q-1}` in index order.
    pub fn enumerate(&self) -> Vec<FieldElement> {
        (0..self.inner.q).map(|i| self.wrap(i)).collect()
    }

    /// Coefficient vector of `a` over GF(p), low degree first.
    pub fn coefficients(&self, a: FieldElement) -> Vec<u32> {
        to_digits(a.index, self.inner.p, self.inner.t as usize)
    }

    /// The primitive element the log tables are built on.
    pub fn generator(&self) -> FieldElement {
        self.wrap(self.inner.exp[1 % self.inner.exp.len()])
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(self.contains(a) && self.contains(b));
        let inner = &*self.inner;
        let index = if inner.p == 2 {
            a.index ^ b.index
        } else if let Some(table) = &inner.add {
            table[(a.index * inner.q + b.index) as usize] as u32
        } else if inner.t == 1 {
            (a.index + b.index) % inner.p
        } else {
            let (mut x, mut y, mut out) = (a.index, b.index, 0);
            for &r in &inner.radix {
                out += ((x % inner.p + y % inner.p) % inner.p) * r;
                x /= inner.p;
                y /= inner.p;
            }
            out
        };
        self.wrap(index)
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        debug_assert!(self.contains(a));
        self.wrap(self.inner.neg[a.index as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(self.contains(a) && self.contains(b));
        if a.index == 0 || b.index == 0 {
            return self.zero();
        }
        let inner = &*self.inner;
        let k = inner.log[a.index as usize] + inner.log[b.index as usize];
        self.wrap(inner.exp[k as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inner = &*self.inner;
        let order = inner.q - 1;
        let k = (order - inner.log[a.index as usize]) % order;
        Ok(self.wrap(inner.exp[k as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e`, with `0^0 = 1`.
    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        debug_assert!(self.contains(a));
        if e == 0 {
            return self.one();
        }
        if a.is_zero() {
            return self.zero();
        }
        let inner = &*self.inner;
        let order = (inner.q - 1) as u64;
        let k = (inner.log[a.index as usize] as u64 * (e % order)) % order;
        self.wrap(inner.exp[k as usize])
    }

    fn check(&self, a: FieldElement) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn checked_add(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add(a, b))
    }

    pub fn checked_sub(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.sub(a, b))
    }

    pub fn checked_mul(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    /// Serialized form of the field: the pair `(p, t)`.
    pub fn params(&self) -> (u32, u32) {
        (self.inner.p, self.inner.t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Schoolbook multiplication through the coefficient vectors, independent
    /// of the log tables.
    fn slow_mul(f: &Field, a: FieldElement, b: FieldElement) -> FieldElement {
        let prod = poly_mulmod(
            &f.coefficients(a),
            &f.coefficients(b),
            f.modulus(),
            f.characteristic(),
        );
        f.element(from_digits(&prod, f.characteristic())).unwrap()
    }

    fn small_fields() -> Vec<Field> {
        [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (13, 1)]
            .iter()
            .map(|&(p, t)| Field::new(p, t).unwrap())
            .collect()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Field::new(4, 1).unwrap_err(), Error::NonPrimeCharacteristic(4));
        assert_eq!(Field::new(1, 3).unwrap_err(), Error::NonPrimeCharacteristic(1));
        assert!(matches!(
            Field::new(2, 17),
            Err(Error::UnsupportedSize { .. })
        ));
        assert!(matches!(
            Field::new(257, 2),
            Err(Error::UnsupportedSize { .. })
        ));
        assert!(matches!(Field::new(3, 0), Err(Error::UnsupportedSize { .. })));
        assert!(Field::new(2, 16).is_ok());
    }

    #[test]
    fn moduli() {
        assert_eq!(Field::new(2, 1).unwrap().modulus(), &[0, 1]);
        // x^2 + x + 1 is the only irreducible quadratic over GF(2).
        assert_eq!(Field::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(Field::new(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(Field::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(Field::new(2, 4).unwrap().modulus(), &[1, 1, 0, 0, 1]);
    }

    #[test]
    fn gf4_quadratic_search_is_exhaustive() {
        // x^2, x^2+1 = (x+1)^2 and x^2+x = x(x+1) are reducible over GF(2).
        let irreducible: Vec<u32> = (0..4)
            .filter(|&low| is_irreducible(&monic(low, 2, 2), 2))
            .collect();
        assert_eq!(irreducible, vec![3]);
    }

    #[test]
    fn enumeration() {
        let gf2 = Field::new(2, 1).unwrap();
        let idx = |f: &Field| f.enumerate().iter().map(|e| e.index()).collect::<Vec<_>>();
        assert_eq!(idx(&gf2), vec![0, 1]);
        let gf5 = Field::new(5, 1).unwrap();
        assert_eq!(idx(&gf5), vec![0, 1, 2, 3, 4]);
        let gf4 = Field::new(2, 2).unwrap();
        let coeffs: Vec<Vec<u32>> = gf4.enumerate().into_iter().map(|e| gf4.coefficients(e)).collect();
        assert_eq!(coeffs, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert!(gf4.enumerate()[0].is_zero());
    }

    #[test]
    fn small_products() {
        let gf5 = Field::new(5, 1).unwrap();
        let two = gf5.element(2).unwrap();
        let three = gf5.element(3).unwrap();
        assert_eq!(gf5.mul(two, three), gf5.one());
        let gf2 = Field::new(2, 1).unwrap();
        assert_eq!(gf2.add(gf2.one(), gf2.one()), gf2.zero());
        // In GF(4) = GF(2)[x]/(x^2+x+1): x * x = x + 1.
        let gf4 = Field::new(2, 2).unwrap();
        let x = gf4.element(2).unwrap();
        assert_eq!(gf4.mul(x, x).index(), 3);
    }

    #[test]
    fn errors() {
        let gf4 = Field::new(2, 2).unwrap();
        let gf5 = Field::new(5, 1).unwrap();
        assert_eq!(gf4.inv(gf4.zero()), Err(Error::DivisionByZero));
        assert_eq!(gf4.checked_add(gf4.one(), gf5.one()), Err(Error::FieldMismatch));
        assert_eq!(gf4.checked_mul(gf5.one(), gf4.one()), Err(Error::FieldMismatch));
        assert_eq!(gf4.inv(gf5.one()), Err(Error::FieldMismatch));
        assert!(gf4.element(4).is_err());
        // Same parameters, same field.
        assert_eq!(Field::new(2, 2).unwrap(), gf4);
    }

    #[test]
    fn exhaustive_axioms_small_fields() {
        for f in small_fields() {
            let elems = f.enumerate();
            let p = f.characteristic() as u64;
            for &a in &elems {
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                assert_eq!(f.pow(a, f.order() as u64), a, "x^q = x in {f}");
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                    assert_eq!(f.pow(a, f.order() as u64 - 1), f.one());
                }
                for &b in &elems {
                    assert_eq!(f.mul(a, b), slow_mul(&f, a, b));
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.sub(f.add(a, b), b), a);
                    // Frobenius
                    assert_eq!(
                        f.pow(f.add(a, b), p),
                        f.add(f.pow(a, p), f.pow(b, p))
                    );
                    for &c in &elems {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn generator_has_full_order() {
        for f in small_fields() {
            let g = f.generator();
            let mut seen = std::collections::HashSet::new();
            let mut x = f.one();
            for _ in 0..f.order() - 1 {
                assert!(seen.insert(x.index()));
                x = f.mul(x, g);
            }
            assert_eq!(x, f.one());
        }
    }

    fn large_field() -> impl Strategy<Value = (u64, u64)> {
        prop::sample::select(vec![(2u64, 8u64), (3, 5), (5, 3), (31, 2), (251, 1), (2, 16), (257, 1)])
    }

    proptest! {
        #[test]
        fn randomized_axioms((p, t) in large_field(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
            let f = Field::new(p, t).unwrap();
            let q = f.order();
            let (a, b, c) = (f.element(a % q).unwrap(), f.element(b % q).unwrap(), f.element(c % q).unwrap());
            prop_assert_eq!(f.mul(a, b), slow_mul(&f, a, b));
            prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            let pc = f.characteristic() as u64;
            prop_assert_eq!(f.pow(f.add(a, b), pc), f.add(f.pow(a, pc), f.pow(b, pc)));
            if !b.is_zero() {
                prop_assert_eq!(f.mul(f.div(a, b).unwrap(), b), a);
            }
        }
    }
}
