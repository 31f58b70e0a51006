//! Generalized Reed-Muller codes `RM_d` over GF(q)^m.
//!
//! Codeword coordinates follow the point order of GF(q)^m: points are
//! ordered lexicographically by the enumeration indices of their
//! coordinates, last coordinate fastest. Point number `r` therefore has the
//! base-q digits of `r` as its index tuple.
//!
//! The information set of `RM_d` is the set of points whose index tuple lies
//! in `L_d = { i : 0 <= i_l <= q-1, |i| <= d }`, listed in graded-lex order of
//! the tuples. Construction checks that the monomial evaluation matrix on it
//! is invertible and keeps the inverse for interpolation.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement, FieldId};
use crate::linalg::Matrix;
use crate::mpoly::{MVPoly, MultiIndex};

/// Exact binomial coefficient. Panics on `u128` overflow.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for r in 0..k {
        // acc * (n - r) is divisible by r + 1 at every step.
        acc = acc
            .checked_mul((n - r) as u128)
            .expect("binomial coefficient overflows u128")
            / (r + 1) as u128;
    }
    acc
}

/// Number of points in GF(q)^m.
pub fn num_points(q: u32, m: usize) -> usize {
    (q as usize).pow(m as u32)
}

/// Index tuple (base-q digits, most significant first) of point number `r`.
pub fn point_digits(mut r: usize, q: u32, m: usize) -> Vec<u32> {
    let mut digits = vec![0; m];
    for slot in digits.iter_mut().rev() {
        *slot = (r % q as usize) as u32;
        r /= q as usize;
    }
    digits
}

/// Inverse of [`point_digits`].
pub fn point_number(digits: &[u32], q: u32) -> usize {
    digits.iter().fold(0, |acc, &d| acc * q as usize + d as usize)
}

/// All points of GF(q)^m in codeword order.
pub fn all_points(field: &Field, m: usize) -> Vec<Vec<FieldElement>> {
    let q = field.order();
    (0..num_points(q, m))
        .map(|r| {
            point_digits(r, q, m)
                .into_iter()
                .map(|i| field.element(i).expect("digit below q"))
                .collect()
        })
        .collect()
}

/// `K_d`: exponent tuples with entries in `0..q` and weight exactly `d`, lexicographic.
pub fn exponents_of_weight(q: u32, m: usize, d: i64) -> Vec<MultiIndex> {
    if d < 0 {
        return Vec::new();
    }
    MultiIndex::with_weight(m, d as u64, q - 1)
}

/// `L_d`: exponent tuples with entries in `0..q` and weight at most `d`, graded-lex.
pub fn exponents_up_to(q: u32, m: usize, d: i64) -> Vec<MultiIndex> {
    let top = d.min(m as i64 * (q as i64 - 1));
    (0..=top).flat_map(|w| exponents_of_weight(q, m, w)).collect()
}

/// `k_d = |L_d|` by direct enumeration of all tuples in `{0..q-1}^m`.
pub fn rm_dimension_enumerated(q: u32, m: usize, d: i64) -> u128 {
    if d < 0 {
        return 0;
    }
    let count = (0..num_points(q, m))
        .filter(|&r| {
            point_digits(r, q, m).iter().map(|&x| x as i64).sum::<i64>() <= d
        })
        .count();
    count as u128
}

/// `k_d = dim RM_d` from the identity
/// `binom(m+d, m) = sum_{j=0}^{floor(d/q)} binom(m-1+j, m-1) k_{d-jq}`,
/// solved for `k_d`. Negative degrees give 0 and `d >= m(q-1)` gives `q^m`.
pub fn rm_dimension(q: u32, m: usize, d: i64) -> u128 {
    assert!(m >= 1, "at least one variable");
    if d < 0 {
        return 0;
    }
    if d >= m as i64 * (q as i64 - 1) {
        return (q as u128).pow(m as u32);
    }
    let (m64, q64) = (m as u64, q as i64);
    let mut k = binomial(m64 + d as u64, m64);
    let mut j = 1i64;
    while j * q64 <= d {
        k -= binomial(m64 - 1 + j as u64, m64 - 1) * rm_dimension(q, m, d - j * q64);
        j += 1;
    }
    k
}

/// The code `RM_d = { ev(F) : deg F <= d }` on GF(q)^m, with its information
/// set and the cached interpolation matrix.
#[derive(Debug)]
pub struct RMCode {
    field: Field,
    m: usize,
    d: i64,
    points: Vec<Vec<FieldElement>>,
    exponents: Vec<MultiIndex>,
    infoset: Vec<usize>,
    interpolation: Matrix,
}

type CacheKey = (FieldId, usize, i64);

fn cache() -> &'static Mutex<HashMap<CacheKey, Arc<RMCode>>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Arc<RMCode>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

impl RMCode {
    /// Builds `RM_d` for `0 <= d <= m(q-1)`.
    pub fn new(field: &Field, m: usize, d: i64) -> Result<RMCode> {
        if m == 0 {
            return Err(Error::InvalidParameter("m must be at least 1".into()));
        }
        let q = field.order();
        let max = m as i64 * (q as i64 - 1);
        if d < 0 || d > max {
            return Err(Error::DegreeOutOfRange { d, limit: max + 1 });
        }
        let points = all_points(field, m);
        let exponents = exponents_up_to(q, m, d);
        let infoset: Vec<usize> = exponents
            .iter()
            .map(|e| point_number(e.entries(), q))
            .collect();

        let k = exponents.len();
        let mut data = Vec::with_capacity(k * k);
        for &r in &infoset {
            for e in &exponents {
                data.push(monomial_at(field, e, &points[r]));
            }
        }
        let interpolation = Matrix::from_rows(k, k, data)
            .inverse(field)
            .ok_or(Error::InvalidInformationSet { m, d })?;

        Ok(RMCode {
            field: field.clone(),
            m,
            d,
            points,
            exponents,
            infoset,
            interpolation,
        })
    }

    /// Like [`RMCode::new`], but shares one instance per `(q, m, d)` across
    /// the process.
    pub fn shared(field: &Field, m: usize, d: i64) -> Result<Arc<RMCode>> {
        let key = (field.id(), m, d);
        let mut guard = cache().lock().expect("code cache poisoned");
        if let Some(code) = guard.get(&key) {
            return Ok(Arc::clone(code));
        }
        let code = Arc::new(RMCode::new(field, m, d)?);
        guard.insert(key, Arc::clone(&code));
        Ok(code)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn num_vars(&self) -> usize {
        self.m
    }

    pub fn degree(&self) -> i64 {
        self.d
    }

    /// `n = q^m`.
    pub fn length(&self) -> usize {
        self.points.len()
    }

    /// `k_d`.
    pub fn dimension(&self) -> usize {
        self.exponents.len()
    }

    pub fn points(&self) -> &[Vec<FieldElement>] {
        &self.points
    }

    /// The monomial basis `L_d`, graded-lex.
    pub fn exponents(&self) -> &[MultiIndex] {
        &self.exponents
    }

    /// Point numbers of the information set, in message order.
    pub fn information_set(&self) -> &[usize] {
        &self.infoset
    }

    pub fn information_set_points(&self) -> Vec<Vec<FieldElement>> {
        self.infoset.iter().map(|&r| self.points[r].clone()).collect()
    }

    fn check_poly(&self, poly: &MVPoly) -> Result<()> {
        if poly.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        if poly.arity() != self.m {
            return Err(Error::ArityMismatch {
                expected: self.m,
                got: poly.arity(),
            });
        }
        if poly.degree() > self.d {
            return Err(Error::DegreeTooLarge {
                degree: poly.degree(),
                bound: self.d,
            });
        }
        let top = poly.max_individual_degree();
        if top >= self.field.order() as i64 {
            return Err(Error::NotReduced {
                exponent: top,
                q: self.field.order(),
            });
        }
        Ok(())
    }

    /// `ev(F) = (F(P_1), ..., F(P_n))`.
    pub fn encode(&self, poly: &MVPoly) -> Result<Vec<FieldElement>> {
        self.check_poly(poly)?;
        Ok(poly.evaluate_grid())
    }

    /// The restriction of a codeword to the information set.
    pub fn restrict(&self, codeword: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if codeword.len() != self.length() {
            return Err(Error::LengthMismatch {
                expected: self.length(),
                got: codeword.len(),
            });
        }
        Ok(self.infoset.iter().map(|&r| codeword[r]).collect())
    }

    /// The unique `F` with exponents in `L_d` taking the given values on the
    /// information set.
    pub fn interpolate(&self, values: &[FieldElement]) -> Result<MVPoly> {
        if values.len() != self.dimension() {
            return Err(Error::LengthMismatch {
                expected: self.dimension(),
                got: values.len(),
            });
        }
        if !values.iter().all(|&v| self.field.contains(v)) {
            return Err(Error::FieldMismatch);
        }
        let coeffs = self.interpolation.mul_vec(&self.field, values);
        let mut poly = MVPoly::zero(&self.field, self.m);
        for (e, c) in self.exponents.iter().zip(coeffs) {
            poly.add_term(e.clone(), c);
        }
        Ok(poly)
    }
}

fn monomial_at(field: &Field, exponent: &MultiIndex, point: &[FieldElement]) -> FieldElement {
    exponent
        .entries()
        .iter()
        .zip(point)
        .fold(field.one(), |acc, (&e, &x)| field.mul(acc, field.pow(x, e as u64)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u64, t: u64) -> Field {
        Field::new(p, t).unwrap()
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(rm_dimension(2, 2, 1), 3);
        assert_eq!(rm_dimension_enumerated(2, 2, 1), 3);
        assert_eq!(rm_dimension(4, 2, 5), 15);
        assert_eq!(rm_dimension(3, 2, -1), 0);
        assert_eq!(rm_dimension(3, 2, 4), 9);
        assert_eq!(rm_dimension(3, 2, 40), 9);
        assert_eq!(rm_dimension(5, 3, 0), 1);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(7, 2), 21);
        assert_eq!(binomial(2, 5), 0);
        assert_eq!(binomial(60, 30), 118264581564861424);
    }

    #[test]
    fn point_order() {
        assert_eq!(point_digits(5, 3, 2), vec![1, 2]);
        assert_eq!(point_number(&[1, 2], 3), 5);
        let f = gf(2, 1);
        let idx: Vec<Vec<u32>> = all_points(&f, 2)
            .iter()
            .map(|p| p.iter().map(|x| x.index()).collect())
            .collect();
        assert_eq!(idx, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn exponent_sets() {
        let k2 = exponents_of_weight(4, 2, 2);
        assert_eq!(k2.len(), 3);
        let l = exponents_up_to(2, 2, 1);
        let tuples: Vec<&[u32]> = l.iter().map(|e| e.entries()).collect();
        assert_eq!(tuples, vec![&[0, 0][..], &[0, 1], &[1, 0]]);
        for q in 2..6u32 {
            for d in 0..10i64 {
                let sum: usize = (0..=d).map(|w| exponents_of_weight(q, 2, w).len()).sum();
                assert_eq!(sum, exponents_up_to(q, 2, d).len());
            }
        }
    }

    #[test]
    fn information_set_examples() {
        let f = gf(2, 1);
        let code = RMCode::new(&f, 2, 1).unwrap();
        let pts: Vec<Vec<u32>> = code
            .information_set_points()
            .iter()
            .map(|p| p.iter().map(|x| x.index()).collect())
            .collect();
        assert_eq!(pts, vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
        let full = RMCode::new(&gf(3, 1), 2, 4).unwrap();
        let mut all = full.information_set().to_vec();
        assert_eq!(all[..4], [0, 1, 3, 2]);
        all.sort();
        assert_eq!(all, (0..9).collect::<Vec<_>>());
        let zero = RMCode::new(&gf(5, 1), 3, 0).unwrap();
        assert_eq!(zero.information_set(), &[0]);
        assert!(matches!(
            RMCode::new(&f, 2, 3),
            Err(Error::DegreeOutOfRange { .. })
        ));
    }

    #[test]
    fn encode_examples() {
        let f = gf(2, 1);
        let code = RMCode::new(&f, 2, 1).unwrap();
        let zero = MVPoly::zero(&f, 2);
        assert!(code.encode(&zero).unwrap().iter().all(|x| x.is_zero()));
        let one = MVPoly::constant(&f, 2, f.one());
        assert!(code.encode(&one).unwrap().iter().all(|&x| x == f.one()));
        let x1 = MVPoly::variable(&f, 2, 0);
        let idx: Vec<u32> = code.encode(&x1).unwrap().iter().map(|x| x.index()).collect();
        assert_eq!(idx, vec![0, 0, 1, 1]);
        let x1x2 = x1.multiply(&MVPoly::variable(&f, 2, 1)).unwrap();
        assert!(matches!(code.encode(&x1x2), Err(Error::DegreeTooLarge { .. })));
        let code3 = RMCode::new(&f, 2, 2).unwrap();
        assert!(matches!(
            code3.encode(&x1.pow(2)),
            Err(Error::NotReduced { .. })
        ));
    }

    #[test]
    fn interpolate_examples() {
        let f = gf(3, 1);
        let code = RMCode::new(&f, 2, 2).unwrap();
        assert!(code.interpolate(&[f.zero(); 6]).unwrap().is_zero());
        assert!(matches!(
            code.interpolate(&[f.zero()]),
            Err(Error::LengthMismatch { .. })
        ));
        let c = RMCode::new(&f, 2, 0).unwrap();
        let two = f.element(2).unwrap();
        assert_eq!(c.interpolate(&[two]).unwrap(), MVPoly::constant(&f, 2, two));
    }

    #[test]
    fn shared_instances() {
        let f = gf(2, 2);
        let a = RMCode::shared(&f, 2, 3).unwrap();
        let b = RMCode::shared(&Field::new(2, 2).unwrap(), 2, 3).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }

    proptest! {
        #[test]
        fn round_trip(
            (p, t) in prop::sample::select(vec![(2u64, 1u64), (3, 1), (2, 2), (5, 1)]),
            m in 1usize..=3,
            d_frac in 0.0f64..=1.0,
            coeffs in prop::collection::vec(any::<u32>(), 125),
        ) {
            let f = gf(p, t);
            let q = f.order();
            let d = (d_frac * (m as f64 * (q as f64 - 1.0))).round() as i64;
            let code = RMCode::shared(&f, m, d).unwrap();
            let mut poly = MVPoly::zero(&f, m);
            for (e, c) in code.exponents().iter().zip(&coeffs) {
                poly.add_term(e.clone(), f.element(c % q).unwrap());
            }
            let cw = code.encode(&poly).unwrap();
            let info = code.restrict(&cw).unwrap();
            prop_assert_eq!(code.interpolate(&info).unwrap(), poly);
        }
    }
}
