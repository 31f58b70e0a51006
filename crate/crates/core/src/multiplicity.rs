//! Multiplicity codes and their systematic encoding.
//!
//! A codeword of `MRM^s_d` lists, at every point `P` of GF(q)^m, the Hasse
//! derivatives `H(F, j)(P)` for all `j` of weight below `s`. The slots `j` are
//! ordered graded-lex, which refines the componentwise partial order.
//!
//! Systematic encoding rests on the decomposition
//! `F = sum_{|j| <= d/q} F_j * V_j` with `V_j = prod_l (X_l^q - X_l)^(j_l)` and
//! `deg F_j <= d_j = min(m(q-1), d - |j| q)`. Since `V_j(P + Z)` does not depend
//! on `P`, the Leibniz rule gives, at every point,
//!
//! ```text
//! H(F, i)(P) = sum_{j <= i} sum_{j <= v <= i} H(F_j, i - v)(P) * c(j, v)
//! ```
//!
//! where `c(j, v)` is the `Z^v` coefficient of `prod_l (Z_l^q - Z_l)^(j_l)`. It
//! vanishes unless `v >= j`, and `c(j, j) = (-1)^|j|`. Reading this forward
//! produces codeword symbols from the components; reading it backward
//! recovers `F_i(P)` from a message symbol once every `F_j` with `j < i` is
//! known, and `F_i` itself then comes from `RM_{d_i}` interpolation.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::mpoly::{multi_binomial, vanishing_poly, MVPoly, MultiIndex};
use crate::reed_muller::{all_points, binomial, RMCode};

/// Upper bound on the code length `n = q^m`.
pub const MAX_CODE_LENGTH: usize = 4096;

/// `n` positions, each holding the `sigma` symbols `H(F, j)(P)`, `j in S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Codeword {
    n: usize,
    sigma: usize,
    symbols: Vec<FieldElement>, // position-major
}

impl Codeword {
    pub fn new(n: usize, sigma: usize, symbols: Vec<FieldElement>) -> Result<Self> {
        if symbols.len() != n * sigma {
            return Err(Error::LengthMismatch {
                expected: n * sigma,
                got: symbols.len(),
            });
        }
        Ok(Codeword { n, sigma, symbols })
    }

    pub fn num_positions(&self) -> usize {
        self.n
    }

    pub fn symbols_per_position(&self) -> usize {
        self.sigma
    }

    #[inline]
    pub fn get(&self, position: usize, slot: usize) -> FieldElement {
        self.symbols[position * self.sigma + slot]
    }

    pub fn position(&self, position: usize) -> &[FieldElement] {
        &self.symbols[position * self.sigma..(position + 1) * self.sigma]
    }

    pub fn symbols(&self) -> &[FieldElement] {
        &self.symbols
    }
}

/// `k` field symbols indexed by the information set, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Message(Vec<FieldElement>);

impl Message {
    pub fn new(symbols: Vec<FieldElement>) -> Self {
        Message(symbols)
    }

    pub fn symbols(&self) -> &[FieldElement] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// The components `F_j`, `|j| <= floor(d/q)`, of `F = sum F_j V_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    components: BTreeMap<MultiIndex, MVPoly>,
}

impl Decomposition {
    pub fn new(components: BTreeMap<MultiIndex, MVPoly>) -> Self {
        Decomposition { components }
    }

    pub fn get(&self, j: &MultiIndex) -> Option<&MVPoly> {
        self.components.get(j)
    }

    /// Components in graded-lex order of `j`.
    pub fn iter(&self) -> impl Iterator<Item = (&MultiIndex, &MVPoly)> {
        self.components.iter()
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

/// One summand `coeff * H(F_component, order)(P)` of the expansion of `H(F, i)(P)`.
#[derive(Clone, Copy, Debug)]
struct PlanTerm {
    component: usize,
    order: usize,
    coeff: FieldElement,
}

/// Parameters and precomputed data of `MRM^s_d` over GF(q)^m.
#[derive(Debug)]
pub struct MultCode {
    field: Field,
    m: usize,
    s: u32,
    d: i64,
    points: Vec<Vec<FieldElement>>,
    slots: Vec<MultiIndex>,
    slot_of: HashMap<MultiIndex, usize>,
    component_degrees: Vec<i64>,
    /// Slots `0..num_components` are exactly those with `d_j >= 0`.
    num_components: usize,
    subcodes: Vec<Arc<RMCode>>,
    message_offsets: Vec<usize>,
    infoset: Vec<(usize, usize)>,
    /// `plans[i]` expands `H(F, i)(P)`; the diagonal term, when present, comes last.
    plans: Vec<Vec<PlanTerm>>,
}

impl MultCode {
    /// Builds `MRM^s_d` for `0 <= d < s q`.
    pub fn new(field: &Field, m: usize, s: u32, d: i64) -> Result<MultCode> {
        if m == 0 {
            return Err(Error::InvalidParameter("m must be at least 1".into()));
        }
        if s == 0 {
            return Err(Error::InvalidParameter("s must be at least 1".into()));
        }
        let q = field.order();
        let limit = s as i64 * q as i64;
        if d < 0 || d >= limit {
            return Err(Error::DegreeOutOfRange { d, limit });
        }
        let n = (q as usize)
            .checked_pow(m as u32)
            .filter(|&n| n <= MAX_CODE_LENGTH)
            .ok_or_else(|| {
                Error::InvalidParameter(format!("code length q^m exceeds {MAX_CODE_LENGTH}"))
            })?;

        let slots = MultiIndex::all_below_weight(m, s as u64);
        let slot_of: HashMap<MultiIndex, usize> =
            slots.iter().enumerate().map(|(k, j)| (j.clone(), k)).collect();
        let saturated = m as i64 * (q as i64 - 1);
        let component_degrees: Vec<i64> = slots
            .iter()
            .map(|j| saturated.min(d - j.weight() as i64 * q as i64))
            .collect();
        let num_components = component_degrees.iter().take_while(|&&dj| dj >= 0).count();
        debug_assert!(component_degrees[num_components..].iter().all(|&dj| dj < 0));

        let subcodes = component_degrees[..num_components]
            .iter()
            .map(|&dj| RMCode::shared(field, m, dj))
            .collect::<Result<Vec<_>>>()?;

        let mut infoset = Vec::new();
        let mut message_offsets = Vec::with_capacity(num_components);
        for (slot, sub) in subcodes.iter().enumerate() {
            message_offsets.push(infoset.len());
            infoset.extend(sub.information_set().iter().map(|&r| (slot, r)));
        }
        let k = binomial(m as u64 + d as u64, m as u64);
        if infoset.len() as u128 != k {
            // The information set always has binom(m+d, m) elements.
            return Err(Error::InvalidParameter(format!(
                "information set has {} elements, expected {k}",
                infoset.len()
            )));
        }

        let mut code = MultCode {
            field: field.clone(),
            m,
            s,
            d,
            points: all_points(field, m),
            slots,
            slot_of,
            component_degrees,
            num_components,
            subcodes,
            message_offsets,
            infoset,
            plans: Vec::new(),
        };
        debug_assert_eq!(code.points.len(), n);
        code.plans = code.build_plans();
        Ok(code)
    }

    /// `c(j, v) = H(V_j, v)(P)` for every component `j` and slot `v`; the
    /// value is the same at every point, so it is read off at the origin.
    fn vanishing_constants(&self) -> Vec<Vec<FieldElement>> {
        let origin = vec![self.field.zero(); self.m];
        self.slots[..self.num_components]
            .iter()
            .map(|j| {
                let v_j = vanishing_poly(j, &self.field, self.m);
                self.slots
                    .iter()
                    .map(|v| {
                        v_j.hasse_derivative(v)
                            .expect("arity matches")
                            .eval_unchecked(&origin)
                    })
                    .collect()
            })
            .collect()
    }

    fn build_plans(&self) -> Vec<Vec<PlanTerm>> {
        let constants = self.vanishing_constants();
        self.slots
            .iter()
            .enumerate()
            .map(|(i_slot, i)| {
                let mut plan = Vec::new();
                let mut diagonal = None;
                for (c, j) in self.slots[..self.num_components].iter().enumerate() {
                    if !j.le(i) {
                        continue;
                    }
                    for (v_slot, v) in self.slots.iter().enumerate() {
                        if !(j.le(v) && v.le(i)) {
                            continue;
                        }
                        let coeff = constants[c][v_slot];
                        if coeff.is_zero() {
                            continue;
                        }
                        let u = i.checked_sub(v).expect("v <= i");
                        let term = PlanTerm {
                            component: c,
                            order: self.slot_of[&u],
                            coeff,
                        };
                        if c == i_slot {
                            diagonal = Some(term);
                        } else {
                            plan.push(term);
                        }
                    }
                }
                plan.extend(diagonal);
                plan
            })
            .collect()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn num_vars(&self) -> usize {
        self.m
    }

    pub fn multiplicity(&self) -> u32 {
        self.s
    }

    pub fn degree(&self) -> i64 {
        self.d
    }

    /// `n = q^m`.
    pub fn length(&self) -> usize {
        self.points.len()
    }

    /// `sigma = binom(m+s-1, m)`.
    pub fn sigma(&self) -> usize {
        self.slots.len()
    }

    /// `k = binom(m+d, m)`.
    pub fn dimension(&self) -> usize {
        self.infoset.len()
    }

    pub fn points(&self) -> &[Vec<FieldElement>] {
        &self.points
    }

    /// The derivative orders `S`, graded-lex.
    pub fn slots(&self) -> &[MultiIndex] {
        &self.slots
    }

    pub fn slot_of(&self, j: &MultiIndex) -> Option<usize> {
        self.slot_of.get(j).copied()
    }

    /// `d_j` for each slot (negative when the slot carries no component).
    pub fn component_degrees(&self) -> &[i64] {
        &self.component_degrees
    }

    /// The components `j` with `|j| <= floor(d/q)`, graded-lex.
    pub fn components(&self) -> &[MultiIndex] {
        &self.slots[..self.num_components]
    }

    /// The Reed-Muller code `RM_{d_j}` of component `j` (by slot).
    pub fn subcode(&self, slot: usize) -> Option<&RMCode> {
        self.subcodes.get(slot).map(|c| &**c)
    }

    /// The information set as `(slot, point number)` pairs, in message order.
    pub fn information_set(&self) -> &[(usize, usize)] {
        &self.infoset
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
        Ok(())
    }

    fn check_message(&self, message: &Message) -> Result<()> {
        if message.len() != self.dimension() {
            return Err(Error::LengthMismatch {
                expected: self.dimension(),
                got: message.len(),
            });
        }
        if !message.symbols().iter().all(|&x| self.field.contains(x)) {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    /// `ev^s(F)`: all Hasse derivatives of order in `S` at every point.
    pub fn ev_s(&self, poly: &MVPoly) -> Result<Codeword> {
        self.check_poly(poly)?;
        let (n, sigma) = (self.length(), self.sigma());
        let mut symbols = vec![self.field.zero(); n * sigma];
        for (slot, v) in self.slots.iter().enumerate() {
            let derivative = poly.hasse_derivative(v)?;
            if derivative.is_zero() {
                continue;
            }
            for (r, value) in derivative.evaluate_grid().into_iter().enumerate() {
                symbols[r * sigma + slot] = value;
            }
        }
        Codeword::new(n, sigma, symbols)
    }

    /// Splits `F` into components `F_j` with `deg F_j <= d_j`, by rewriting
    /// every variable power `X^(tq + r)` as `X^r ((X^q - X) + X)^t` and expanding
    /// until all remaining powers of `X` are below `q`.
    pub fn decompose(&self, poly: &MVPoly) -> Result<Decomposition> {
        self.check_poly(poly)?;
        let mut reducer = PowerReducer::new(&self.field);
        let mut components: BTreeMap<MultiIndex, MVPoly> = self
            .components()
            .iter()
            .map(|j| (j.clone(), MVPoly::zero(&self.field, self.m)))
            .collect();

        for (exponent, coeff) in poly.terms() {
            // Partial products over the variables seen so far: (j, reduced exponent) -> coeff.
            let mut partial: Vec<(Vec<u32>, Vec<u32>, FieldElement)> =
                vec![(Vec::new(), Vec::new(), coeff)];
            for &u in exponent.entries() {
                let expansion = reducer.reduce(u);
                let mut next = Vec::with_capacity(partial.len() * expansion.len());
                for (j, r, c) in &partial {
                    for &(wi, xr, cu) in expansion {
                        let mut j = j.clone();
                        let mut r = r.clone();
                        j.push(wi);
                        r.push(xr);
                        next.push((j, r, self.field.mul(*c, cu)));
                    }
                }
                partial = next;
            }
            for (j, r, c) in partial {
                let j = MultiIndex::new(j);
                let component = components.get_mut(&j).ok_or_else(|| {
                    // Unreachable for deg F <= d since |j| q <= deg F.
                    Error::DegreeTooLarge {
                        degree: poly.degree(),
                        bound: self.d,
                    }
                })?;
                component.add_term(MultiIndex::new(r), c);
            }
        }
        Ok(Decomposition { components })
    }

    /// `F = sum_j F_j V_j`.
    pub fn recompose(&self, decomposition: &Decomposition) -> Result<MVPoly> {
        let mut out = MVPoly::zero(&self.field, self.m);
        for (j, component) in decomposition.iter() {
            let bound = self
                .slot_of(j)
                .filter(|&slot| slot < self.num_components)
                .map(|slot| self.component_degrees[slot])
                .unwrap_or(-1);
            if component.field() != &self.field {
                return Err(Error::FieldMismatch);
            }
            if component.arity() != self.m || j.arity() != self.m {
                return Err(Error::ArityMismatch {
                    expected: self.m,
                    got: component.arity().min(j.arity()),
                });
            }
            if component.degree() > bound {
                return Err(Error::ComponentDegreeTooLarge {
                    component: j.to_string(),
                    degree: component.degree(),
                    bound,
                });
            }
            if component.is_zero() {
                continue;
            }
            let term = component.multiply(&vanishing_poly(j, &self.field, self.m))?;
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// `H(F, i)(P)` computed from the components of `F` alone.
    pub fn derivative_from_components(
        &self,
        decomposition: &Decomposition,
        slot: usize,
        point: usize,
    ) -> Result<FieldElement> {
        if slot >= self.sigma() || point >= self.length() {
            return Err(Error::InvalidParameter(format!(
                "coordinate (slot {slot}, point {point}) out of range"
            )));
        }
        let p = &self.points[point];
        let mut acc = self.field.zero();
        for term in &self.plans[slot] {
            let j = &self.slots[term.component];
            if let Some(component) = decomposition.get(j) {
                let value = component
                    .hasse_derivative(&self.slots[term.order])?
                    .evaluate(p)?;
                acc = self.field.add(acc, self.field.mul(term.coeff, value));
            }
        }
        Ok(acc)
    }

    /// Solves the expansion of `H(F, i)(P) = message symbol` for `F_i(P)`,
    /// given the derivatives of the earlier components at `P`.
    fn recover_component_value(
        &self,
        slot: usize,
        symbol: FieldElement,
        mut earlier: impl FnMut(usize, usize) -> FieldElement,
    ) -> FieldElement {
        let f = &self.field;
        let plan = &self.plans[slot];
        let (diagonal, rest) = plan.split_last().expect("component slots have a diagonal term");
        debug_assert_eq!(diagonal.component, slot);
        let mut acc = symbol;
        for term in rest {
            acc = f.sub(acc, f.mul(term.coeff, earlier(term.component, term.order)));
        }
        // The diagonal coefficient is (-1)^|i|, its own inverse.
        f.mul(acc, diagonal.coeff)
    }

    fn message_values<'a>(&self, message: &'a Message, slot: usize) -> &'a [FieldElement] {
        let start = self.message_offsets[slot];
        let len = self.subcodes[slot].dimension();
        &message.symbols()[start..start + len]
    }

    /// Recovers the components `F_j` from a message. Components are handled
    /// in graded-lex order, so every `j' < j` is known when `j` is reached.
    pub fn components_from_message(&self, message: &Message) -> Result<Decomposition> {
        self.check_message(message)?;
        let mut components: Vec<MVPoly> = Vec::with_capacity(self.num_components);
        // derivatives[c][u]: H(F_c, u) over all points, filled on first use.
        let mut derivatives: Vec<Vec<Option<Vec<FieldElement>>>> =
            Vec::with_capacity(self.num_components);
        for slot in 0..self.num_components {
            let sub = &self.subcodes[slot];
            let symbols = self.message_values(message, slot);
            let mut values = Vec::with_capacity(symbols.len());
            for (&r, &symbol) in sub.information_set().iter().zip(symbols) {
                let value = self.recover_component_value(slot, symbol, |c, u| {
                    let grid = derivatives[c][u].get_or_insert_with(|| {
                        components[c]
                            .hasse_derivative(&self.slots[u])
                            .expect("arity matches")
                            .evaluate_grid()
                    });
                    grid[r]
                });
                values.push(value);
            }
            components.push(sub.interpolate(&values)?);
            derivatives.push(vec![None; self.sigma()]);
        }
        Ok(Decomposition {
            components: self.slots[..self.num_components]
                .iter()
                .cloned()
                .zip(components)
                .collect(),
        })
    }

    /// Systematic encoding: recover the components from the message,
    /// recompose `F` and return `ev^s(F)`.
    pub fn systematic_encode(&self, message: &Message) -> Result<Codeword> {
        let decomposition = self.components_from_message(message)?;
        let poly = self.recompose(&decomposition)?;
        self.ev_s(&poly)
    }

    /// The unique `F` of degree `<= d` whose derivatives on the information
    /// set are the message symbols.
    pub fn message_polynomial(&self, message: &Message) -> Result<MVPoly> {
        self.recompose(&self.components_from_message(message)?)
    }

    /// Systematic encoding without forming `F`: each component's Hasse
    /// derivatives are tabulated over all points as soon as the component is
    /// interpolated, and every codeword symbol is assembled from the tables.
    pub fn systematic_encode_fast(&self, message: &Message) -> Result<Codeword> {
        self.check_message(message)?;
        let f = &self.field;
        let (n, sigma) = (self.length(), self.sigma());
        // tables[c][u][r] = H(F_c, u)(P_r)
        let mut tables: Vec<Vec<Vec<FieldElement>>> = Vec::with_capacity(self.num_components);
        for slot in 0..self.num_components {
            let sub = &self.subcodes[slot];
            let symbols = self.message_values(message, slot);
            let values: Vec<FieldElement> = sub
                .information_set()
                .iter()
                .zip(symbols)
                .map(|(&r, &symbol)| {
                    self.recover_component_value(slot, symbol, |c, u| tables[c][u][r])
                })
                .collect();
            let component = sub.interpolate(&values)?;
            let table = self
                .slots
                .iter()
                .map(|u| {
                    let derivative = component.hasse_derivative(u).expect("arity matches");
                    derivative.evaluate_grid()
                })
                .collect();
            tables.push(table);
        }

        let mut symbols = vec![f.zero(); n * sigma];
        for (slot, plan) in self.plans.iter().enumerate() {
            for r in 0..n {
                let mut acc = f.zero();
                for term in plan {
                    acc = f.add(acc, f.mul(term.coeff, tables[term.component][term.order][r]));
                }
                symbols[r * sigma + slot] = acc;
            }
        }
        Codeword::new(n, sigma, symbols)
    }

    /// The restriction of a codeword to the information set.
    pub fn extract_message(&self, codeword: &Codeword) -> Result<Message> {
        if codeword.num_positions() != self.length()
            || codeword.symbols_per_position() != self.sigma()
        {
            return Err(Error::ShapeMismatch {
                positions: self.length(),
                symbols: self.sigma(),
                got_positions: codeword.num_positions(),
                got_symbols: codeword.symbols_per_position(),
            });
        }
        Ok(Message(
            self.infoset
                .iter()
                .map(|&(slot, r)| codeword.get(r, slot))
                .collect(),
        ))
    }

    /// All monomials of total degree `<= d`, graded-lex: the coefficient
    /// order used for non-systematic encoding.
    pub fn monomial_basis(&self) -> Vec<MultiIndex> {
        MultiIndex::all_below_weight(self.m, self.d as u64 + 1)
    }

    /// Non-systematic encoding: `ev^s` of the polynomial whose coefficients
    /// on [`MultCode::monomial_basis`] are the message symbols.
    pub fn monomial_encode(&self, message: &Message) -> Result<Codeword> {
        self.check_message(message)?;
        let poly = MVPoly::from_terms(
            &self.field,
            self.m,
            self.monomial_basis().into_iter().zip(message.symbols().iter().copied()),
        )?;
        self.ev_s(&poly)
    }
}

/// Memoized univariate rewriting of `X^u` as `sum_i P_i(X) (X^q - X)^i` with
/// `deg P_i < q`, stored as `(i, power of X, coefficient)` triples.
struct PowerReducer<'a> {
    field: &'a Field,
    memo: HashMap<u32, Vec<(u32, u32, FieldElement)>>,
}

impl<'a> PowerReducer<'a> {
    fn new(field: &'a Field) -> Self {
        PowerReducer {
            field,
            memo: HashMap::new(),
        }
    }

    fn reduce(&mut self, u: u32) -> &[(u32, u32, FieldElement)] {
        if !self.memo.contains_key(&u) {
            let expansion = self.compute(u);
            self.memo.insert(u, expansion);
        }
        &self.memo[&u]
    }

    fn compute(&mut self, u: u32) -> Vec<(u32, u32, FieldElement)> {
        let f = self.field;
        let q = f.order();
        if u < q {
            return vec![(0, u, f.one())];
        }
        let (t, r) = (u / q, u % q);
        // X^u = X^r (W + X)^t = sum_i binom(t, i) X^(r + t - i) W^i, W = X^q - X.
        let mut acc: BTreeMap<(u32, u32), FieldElement> = BTreeMap::new();
        for i in 0..=t {
            let b = multi_binomial(
                &MultiIndex::new(vec![t]),
                &MultiIndex::new(vec![i]),
                f,
            );
            if b.is_zero() {
                continue;
            }
            // r + t - i < u, so the recursion terminates.
            for &(wi, xr, c) in self.reduce(r + t - i) {
                let entry = acc.entry((i + wi, xr)).or_insert_with(|| f.zero());
                *entry = f.add(*entry, f.mul(b, c));
            }
        }
        acc.into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((wi, xr), c)| (wi, xr, c))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf(p: u64, t: u64) -> Field {
        Field::new(p, t).unwrap()
    }

    fn mi(e: &[u32]) -> MultiIndex {
        MultiIndex::new(e.to_vec())
    }

    fn random_message(rng: &mut ChaCha8Rng, code: &MultCode) -> Message {
        let f = code.field();
        Message::new(
            (0..code.dimension())
                .map(|_| f.element(rng.gen_range(0..f.order())).unwrap())
                .collect(),
        )
    }

    fn random_poly(rng: &mut ChaCha8Rng, code: &MultCode) -> MVPoly {
        let f = code.field();
        MVPoly::from_terms(
            f,
            code.num_vars(),
            code.monomial_basis()
                .into_iter()
                .map(|e| (e, f.element(rng.gen_range(0..f.order())).unwrap())),
        )
        .unwrap()
    }

    #[test]
    fn parameters() {
        let code = MultCode::new(&gf(2, 2), 2, 2, 5).unwrap();
        assert_eq!((code.length(), code.sigma(), code.dimension()), (16, 3, 21));
        assert_eq!(code.component_degrees(), &[5, 1, 1]);
        let sizes: Vec<usize> = (0..3).map(|s| code.subcode(s).unwrap().dimension()).collect();
        assert_eq!(sizes, vec![15, 3, 3]);

        let small = MultCode::new(&gf(2, 1), 1, 2, 1).unwrap();
        assert_eq!((small.length(), small.sigma(), small.dimension()), (2, 2, 2));
        assert!(matches!(
            MultCode::new(&gf(2, 1), 1, 1, 2),
            Err(Error::DegreeOutOfRange { d: 2, limit: 2 })
        ));
        assert!(matches!(
            MultCode::new(&gf(2, 1), 1, 1, -1),
            Err(Error::DegreeOutOfRange { .. })
        ));
        assert!(MultCode::new(&gf(2, 1), 0, 1, 0).is_err());
        assert!(MultCode::new(&gf(2, 1), 1, 0, 0).is_err());
        assert!(MultCode::new(&gf(2, 1), 13, 1, 0).is_err());
    }

    #[test]
    fn ev_s_examples() {
        let f = gf(2, 1);
        let code = MultCode::new(&f, 1, 2, 1).unwrap();
        let cw = code.ev_s(&MVPoly::variable(&f, 1, 0)).unwrap();
        let idx: Vec<u32> = cw.symbols().iter().map(|x| x.index()).collect();
        assert_eq!(idx, vec![0, 1, 1, 1]);

        let f3 = gf(3, 1);
        let code = MultCode::new(&f3, 2, 2, 3).unwrap();
        let c = f3.element(2).unwrap();
        let cw = code.ev_s(&MVPoly::constant(&f3, 2, c)).unwrap();
        for r in 0..code.length() {
            assert_eq!(cw.get(r, 0), c);
            assert!(cw.position(r)[1..].iter().all(|x| x.is_zero()));
        }
        let too_big = MVPoly::variable(&f3, 2, 0).pow(4);
        assert!(matches!(code.ev_s(&too_big), Err(Error::DegreeTooLarge { .. })));
    }

    #[test]
    fn decompose_examples() {
        let f = gf(3, 1);
        let code = MultCode::new(&f, 1, 2, 3).unwrap();
        let x = MVPoly::variable(&f, 1, 0);
        let dec = code.decompose(&x.pow(3)).unwrap();
        assert_eq!(dec.get(&mi(&[0])).unwrap(), &x);
        assert_eq!(dec.get(&mi(&[1])).unwrap(), &MVPoly::constant(&f, 1, f.one()));
        assert_eq!(code.recompose(&dec).unwrap(), x.pow(3));

        let low = MultCode::new(&f, 2, 2, 2).unwrap();
        let poly = MVPoly::variable(&f, 2, 0).multiply(&MVPoly::variable(&f, 2, 1)).unwrap();
        let dec = low.decompose(&poly).unwrap();
        assert_eq!(dec.len(), 1);
        assert_eq!(dec.get(&mi(&[0, 0])).unwrap(), &poly);

        let zero = code.decompose(&MVPoly::zero(&f, 1)).unwrap();
        assert!(zero.iter().all(|(_, c)| c.is_zero()));
    }

    #[test]
    fn recompose_rejects_bad_components() {
        let f = gf(2, 1);
        let code = MultCode::new(&f, 1, 2, 2).unwrap();
        let x = MVPoly::variable(&f, 1, 0);
        let mut comps = BTreeMap::new();
        comps.insert(mi(&[1]), x.clone());
        assert!(matches!(
            code.recompose(&Decomposition::new(comps)),
            Err(Error::ComponentDegreeTooLarge { .. })
        ));
        let mut comps = BTreeMap::new();
        comps.insert(mi(&[0]), x.pow(2));
        assert!(matches!(
            code.recompose(&Decomposition::new(comps)),
            Err(Error::ComponentDegreeTooLarge { .. })
        ));
    }

    #[test]
    fn decomposition_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for (p, t) in [(2, 1), (3, 1), (2, 2)] {
            let f = gf(p, t);
            for m in 1..=2 {
                for s in 1..=3u32 {
                    for d in 0..(s * f.order()) as i64 {
                        let code = MultCode::new(&f, m, s, d).unwrap();
                        for _ in 0..5 {
                            let poly = random_poly(&mut rng, &code);
                            let dec = code.decompose(&poly).unwrap();
                            for (slot, j) in code.components().iter().enumerate() {
                                assert!(dec.get(j).unwrap().degree() <= code.component_degrees()[slot]);
                            }
                            assert_eq!(code.recompose(&dec).unwrap(), poly);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn systematic_round_trip_and_fast_path() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for (p, t) in [(2, 1), (3, 1), (2, 2)] {
            let f = gf(p, t);
            for m in 1..=2 {
                for s in 1..=3u32 {
                    for d in 0..(s * f.order()) as i64 {
                        let code = MultCode::new(&f, m, s, d).unwrap();
                        let msg = random_message(&mut rng, &code);
                        let cw = code.systematic_encode(&msg).unwrap();
                        assert_eq!(code.extract_message(&cw).unwrap(), msg);
                        assert_eq!(code.systematic_encode_fast(&msg).unwrap(), cw);
                    }
                }
            }
        }
    }

    #[test]
    fn zero_message() {
        let f = gf(2, 2);
        let code = MultCode::new(&f, 2, 2, 5).unwrap();
        let msg = Message::new(vec![f.zero(); 21]);
        let cw = code.systematic_encode(&msg).unwrap();
        assert!(cw.symbols().iter().all(|x| x.is_zero()));
        assert_eq!(code.systematic_encode_fast(&msg).unwrap(), cw);
        assert_eq!(code.extract_message(&cw).unwrap(), msg);
    }

    #[test]
    fn message_errors() {
        let f = gf(2, 2);
        let code = MultCode::new(&f, 2, 2, 5).unwrap();
        let short = Message::new(vec![f.zero(); 20]);
        assert!(matches!(code.systematic_encode(&short), Err(Error::LengthMismatch { .. })));
        assert!(matches!(
            code.systematic_encode_fast(&short),
            Err(Error::LengthMismatch { .. })
        ));
        let g = gf(3, 1);
        let alien = Message::new(vec![g.zero(); 21]);
        assert_eq!(code.systematic_encode(&alien), Err(Error::FieldMismatch));
        let cw = Codeword::new(16, 2, vec![f.zero(); 32]).unwrap();
        assert!(matches!(code.extract_message(&cw), Err(Error::ShapeMismatch { .. })));
    }

    #[test]
    fn forward_expansion_matches_direct_derivatives() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let f = gf(3, 1);
        let code = MultCode::new(&f, 2, 3, 7).unwrap();
        for _ in 0..5 {
            let poly = random_poly(&mut rng, &code);
            let dec = code.decompose(&poly).unwrap();
            let cw = code.ev_s(&poly).unwrap();
            for slot in 0..code.sigma() {
                for r in 0..code.length() {
                    assert_eq!(code.derivative_from_components(&dec, slot, r).unwrap(), cw.get(r, slot));
                }
            }
        }
    }

    #[test]
    fn monomial_encoding_matches_systematic_polynomial() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let f = gf(2, 2);
        let code = MultCode::new(&f, 2, 2, 5).unwrap();
        let poly = random_poly(&mut rng, &code);
        let coeffs = Message::new(code.monomial_basis().iter().map(|e| poly.coefficient(e)).collect());
        let cw = code.monomial_encode(&coeffs).unwrap();
        assert_eq!(cw, code.ev_s(&poly).unwrap());
        let msg = code.extract_message(&cw).unwrap();
        assert_eq!(code.message_polynomial(&msg).unwrap(), poly);
    }
}
