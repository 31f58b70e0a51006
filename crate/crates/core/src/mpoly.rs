//! Sparse multivariate polynomials over GF(q) and their Hasse derivatives.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

/// An exponent or derivative-order tuple in N^m.
///
/// The `Ord` impl is graded lexicographic (total degree first, then
/// lexicographic on the entries). The componentwise partial order is
/// available through [`MultiIndex::le`] and [`MultiIndex::lt`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Self {
        MultiIndex(entries)
    }

    pub fn zero(m: usize) -> Self {
        MultiIndex(vec![0; m])
    }

    /// `e_l`, the unit vector along variable `l`.
    pub fn unit(m: usize, l: usize) -> Self {
        let mut entries = vec![0; m];
        entries[l] = 1;
        MultiIndex(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    /// `|i| = i_1 + ... + i_m`.
    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &MultiIndex) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self <= other` and `self != other`.
    pub fn lt(&self, other: &MultiIndex) -> bool {
        self.le(other) && self != other
    }

    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        if !other.le(self) {
            return None;
        }
        Some(MultiIndex(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.0.len(), other.0.len());
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// All tuples of arity `m` with weight `< bound`, graded-lex ordered.
    pub fn all_below_weight(m: usize, bound: u64) -> Vec<MultiIndex> {
        (0..bound)
            .flat_map(|w| Self::with_weight(m, w, u32::MAX))
            .collect()
    }

    /// All tuples of arity `m` with weight exactly `w` and every entry
    /// `<= cap`, in lexicographic order.
    pub fn with_weight(m: usize, w: u64, cap: u32) -> Vec<MultiIndex> {
        fn rec(m: usize, w: u64, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
            if prefix.len() + 1 == m {
                if w <= cap as u64 {
                    prefix.push(w as u32);
                    out.push(MultiIndex(prefix.clone()));
                    prefix.pop();
                }
                return;
            }
            for e in 0..=w.min(cap as u64) {
                prefix.push(e as u32);
                rec(m, w - e, cap, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if m == 0 {
            if w == 0 {
                out.push(MultiIndex(Vec::new()));
            }
            return out;
        }
        rec(m, w, cap, &mut Vec::with_capacity(m), &mut out);
        out
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// `binom(n, k) mod p` by Lucas' theorem.
pub fn lucas_binomial(mut n: u64, mut k: u64, p: u32) -> u32 {
    let p64 = p as u64;
    let mut acc = 1u64;
    while k > 0 {
        let (ni, ki) = (n % p64, k % p64);
        if ki > ni {
            return 0;
        }
        acc = acc * small_binomial(ni, ki, p64) % p64;
        n /= p64;
        k /= p64;
    }
    acc as u32
}

/// `binom(n, k) mod p` for `k <= n < p`.
fn small_binomial(n: u64, k: u64, p: u64) -> u64 {
    let k = k.min(n - k);
    let (mut num, mut den) = (1u64, 1u64);
    for r in 0..k {
        num = num * ((n - r) % p) % p;
        den = den * ((r + 1) % p) % p;
    }
    // den is a product of integers below p, hence invertible.
    let (mut base, mut exp, mut inv) = (den, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            inv = inv * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    num * inv % p
}

/// `binom(j, i) = prod_l binom(j_l, i_l)` as an element of the prime subfield.
/// Zero when some `i_l > j_l`.
pub fn multi_binomial(j: &MultiIndex, i: &MultiIndex, field: &Field) -> FieldElement {
    let p = field.characteristic();
    let mut acc = 1u64;
    for (&jl, &il) in j.entries().iter().zip(i.entries()) {
        if il > jl {
            return field.zero();
        }
        acc = acc * lucas_binomial(jl as u64, il as u64, p) as u64 % p as u64;
        if acc == 0 {
            break;
        }
    }
    field.from_int(acc as i64)
}

/// A polynomial in `m` variables, stored as a map from exponent to nonzero
/// coefficient. Terms iterate in graded-lex order.
#[derive(Clone, PartialEq, Eq)]
pub struct MVPoly {
    field: Field,
    m: usize,
    terms: BTreeMap<MultiIndex, FieldElement>,
}

impl fmt::Debug for MVPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MVPoly[{}; m={}]({})", self.field, self.m, self.to_text())
    }
}

impl MVPoly {
    pub fn zero(field: &Field, m: usize) -> Self {
        MVPoly {
            field: field.clone(),
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: &Field, m: usize, c: FieldElement) -> Self {
        Self::monomial(field, MultiIndex::zero(m), c)
    }

    pub fn monomial(field: &Field, exponent: MultiIndex, c: FieldElement) -> Self {
        let mut poly = Self::zero(field, exponent.arity());
        poly.add_term(exponent, c);
        poly
    }

    /// The variable `X_{l+1}` (zero-based `l`).
    pub fn variable(field: &Field, m: usize, l: usize) -> Self {
        Self::monomial(field, MultiIndex::unit(m, l), field.one())
    }

    /// Sums the given terms; repeated exponents accumulate.
    pub fn from_terms(
        field: &Field,
        m: usize,
        terms: impl IntoIterator<Item = (MultiIndex, FieldElement)>,
    ) -> Result<Self> {
        let mut poly = Self::zero(field, m);
        for (exponent, c) in terms {
            if exponent.arity() != m {
                return Err(Error::ArityMismatch {
                    expected: m,
                    got: exponent.arity(),
                });
            }
            if !field.contains(c) {
                return Err(Error::FieldMismatch);
            }
            poly.add_term(exponent, c);
        }
        Ok(poly)
    }

    pub(crate) fn add_term(&mut self, exponent: MultiIndex, c: FieldElement) {
        debug_assert_eq!(exponent.arity(), self.m);
        if c.is_zero() {
            return;
        }
        let field = &self.field;
        match self.terms.entry(exponent) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = field.add(*slot.get(), c);
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn arity(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded-lex order of the exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, FieldElement)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn coefficient(&self, exponent: &MultiIndex) -> FieldElement {
        self.terms
            .get(exponent)
            .copied()
            .unwrap_or_else(|| self.field.zero())
    }

    /// Total degree; `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        // Graded order puts the highest weight last.
        self.terms
            .keys()
            .next_back()
            .map_or(-1, |e| e.weight() as i64)
    }

    /// Largest exponent of any single variable; `-1` for the zero polynomial.
    pub fn max_individual_degree(&self) -> i64 {
        self.terms
            .keys()
            .flat_map(|e| e.entries().iter().map(|&x| x as i64))
            .max()
            .unwrap_or(-1)
    }

    fn check_compatible(&self, other: &MVPoly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.m != other.m {
            return Err(Error::ArityMismatch {
                expected: self.m,
                got: other.m,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &MVPoly) -> Result<MVPoly> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MVPoly) -> Result<MVPoly> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), self.field.neg(c));
        }
        Ok(out)
    }

    pub fn scale(&self, c: FieldElement) -> MVPoly {
        let mut out = Self::zero(&self.field, self.m);
        for (e, a) in self.terms() {
            out.add_term(e.clone(), self.field.mul(a, c));
        }
        out
    }

    pub fn multiply(&self, other: &MVPoly) -> Result<MVPoly> {
        self.check_compatible(other)?;
        let mut out = Self::zero(&self.field, self.m);
        for (ea, a) in self.terms() {
            for (eb, b) in other.terms() {
                out.add_term(ea.add(eb), self.field.mul(a, b));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut e: u32) -> MVPoly {
        let mut acc = Self::constant(&self.field, self.m, self.field.one());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.multiply(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.multiply(&base).expect("same ring");
            }
        }
        acc
    }

    /// `F(P)`.
    pub fn evaluate(&self, point: &[FieldElement]) -> Result<FieldElement> {
        if point.len() != self.m {
            return Err(Error::ArityMismatch {
                expected: self.m,
                got: point.len(),
            });
        }
        if !point.iter().all(|&x| self.field.contains(x)) {
            return Err(Error::FieldMismatch);
        }
        Ok(self.eval_unchecked(point))
    }

    pub(crate) fn eval_unchecked(&self, point: &[FieldElement]) -> FieldElement {
        let f = &self.field;
        let mut acc = f.zero();
        for (e, c) in self.terms() {
            let mut term = c;
            for (&x, &k) in point.iter().zip(e.entries()) {
                term = f.mul(term, f.pow(x, k as u64));
                if term.is_zero() {
                    break;
                }
            }
            acc = f.add(acc, term);
        }
        acc
    }

    /// Values at every point of GF(q)^m, points ordered by their index
    /// tuples with the last coordinate varying fastest.
    pub fn evaluate_grid(&self) -> Vec<FieldElement> {
        let f = &self.field;
        let q = f.order() as usize;
        let max_exp = self
            .terms
            .keys()
            .flat_map(|e| e.entries().iter().copied())
            .max()
            .unwrap_or(0) as usize;
        // powers[x][k] = x^k
        let powers: Vec<Vec<FieldElement>> = f
            .enumerate()
            .into_iter()
            .map(|x| {
                let mut row = Vec::with_capacity(max_exp + 1);
                let mut acc = f.one();
                for _ in 0..=max_exp {
                    row.push(acc);
                    acc = f.mul(acc, x);
                }
                row
            })
            .collect();
        let terms: Vec<(&[u32], FieldElement)> =
            self.terms.iter().map(|(e, &c)| (e.entries(), c)).collect();
        grid_rec(f, &powers, q, self.m, &terms)
    }

    /// The Hasse derivative `H(F, i) = sum_{j >= i} f_j binom(j, i) X^(j - i)`.
    pub fn hasse_derivative(&self, order: &MultiIndex) -> Result<MVPoly> {
        if order.arity() != self.m {
            return Err(Error::ArityMismatch {
                expected: self.m,
                got: order.arity(),
            });
        }
        let mut out = Self::zero(&self.field, self.m);
        for (e, c) in self.terms() {
            if let Some(rest) = e.checked_sub(order) {
                let b = multi_binomial(e, order, &self.field);
                out.add_term(rest, self.field.mul(c, b));
            }
        }
        Ok(out)
    }

    /// Text form: `coeff_index:e1,...,em` terms joined by `;`, graded-lex
    /// order. The zero polynomial is written `0`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms()
            .map(|(e, c)| {
                let exps: Vec<String> = e.entries().iter().map(|x| x.to_string()).collect();
                format!("{}:{}", c.index(), exps.join(","))
            })
            .collect::<Vec<_>>()
            .join(";")
    }

    /// Parses the text form produced by [`MVPoly::to_text`]. Whitespace
    /// around terms is ignored, `#` starts a comment running to the end of
    /// the line, and a bare `0` (or nothing) is the zero polynomial.
    pub fn parse_text(field: &Field, m: usize, text: &str) -> Result<MVPoly> {
        let stripped: String = text
            .lines()
            .map(|line| line.split('#').next().unwrap_or(""))
            .collect::<Vec<_>>()
            .join(" ");
        let mut poly = Self::zero(field, m);
        for term in stripped.split(';').map(str::trim).filter(|t| !t.is_empty()) {
            if term == "0" {
                continue;
            }
            let (coeff, exps) = term
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("term `{term}` lacks `:`")))?;
            let coeff: u32 = coeff
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient in `{term}`")))?;
            let exps: Vec<u32> = exps
                .split(',')
                .map(|x| x.trim().parse::<u32>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Parse(format!("bad exponent in `{term}`")))?;
            if exps.len() != m {
                return Err(Error::ArityMismatch {
                    expected: m,
                    got: exps.len(),
                });
            }
            poly.add_term(MultiIndex::new(exps), field.element(coeff)?);
        }
        Ok(poly)
    }
}

/// Grid evaluation of `sum c X^e` over the variables remaining in the
/// exponent slices: split on the first exponent, evaluate each cofactor on the
/// smaller grid, then combine.
fn grid_rec(
    f: &Field,
    powers: &[Vec<FieldElement>],
    q: usize,
    arity: usize,
    terms: &[(&[u32], FieldElement)],
) -> Vec<FieldElement> {
    if arity == 0 {
        let c = terms.iter().fold(f.zero(), |acc, &(_, c)| f.add(acc, c));
        return vec![c];
    }
    let mut groups: BTreeMap<u32, Vec<(&[u32], FieldElement)>> = BTreeMap::new();
    for &(e, c) in terms {
        groups.entry(e[0]).or_default().push((&e[1..], c));
    }
    let inner = q.pow(arity as u32 - 1);
    let mut out = vec![f.zero(); q * inner];
    for (k, group) in groups {
        let values = grid_rec(f, powers, q, arity - 1, &group);
        for (x, block) in out.chunks_mut(inner).enumerate() {
            let xk = powers[x][k as usize];
            if xk.is_zero() {
                continue;
            }
            for (slot, &v) in block.iter_mut().zip(&values) {
                *slot = f.add(*slot, f.mul(xk, v));
            }
        }
    }
    out
}

/// `V_j = prod_l (X_l^q - X_l)^(j_l)`, expanded.
pub fn vanishing_poly(j: &MultiIndex, field: &Field, m: usize) -> MVPoly {
    assert_eq!(j.arity(), m, "multi-index arity must equal the number of variables");
    let q = field.order();
    let mut acc = MVPoly::constant(field, m, field.one());
    for (l, &jl) in j.entries().iter().enumerate() {
        if jl == 0 {
            continue;
        }
        let mut xq = vec![0; m];
        xq[l] = q;
        let factor = MVPoly::from_terms(
            field,
            m,
            [
                (MultiIndex::new(xq), field.one()),
                (MultiIndex::unit(m, l), field.neg(field.one())),
            ],
        )
        .expect("well-formed terms");
        acc = acc.multiply(&factor.pow(jl)).expect("same ring");
    }
    acc
}
