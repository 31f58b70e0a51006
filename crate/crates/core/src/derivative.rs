//! Systematic encoding of derivative codes, the univariate case `m = 1`.
//!
//! Works with dense coefficient vectors and Newton interpolation on
//! `alpha_0, ..., alpha_{d_j}`, and uses the closed form of the Hasse
//! derivatives of `(X^q - X)^j`, so it shares no code path with the
//! multivariate encoder beyond the field itself.

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::mpoly::lucas_binomial;
use crate::multiplicity::{Codeword, Message, MultCode};

/// Coefficients, lowest degree first.
type Dense = Vec<FieldElement>;

fn binom(field: &Field, n: u64, k: u64) -> FieldElement {
    if k > n {
        return field.zero();
    }
    field.from_int(lucas_binomial(n, k, field.characteristic()) as i64)
}

/// `H(F, v)(x)` for dense `F`.
fn hasse_at(field: &Field, poly: &[FieldElement], v: usize, x: FieldElement) -> FieldElement {
    let mut acc = field.zero();
    for e in (v..poly.len()).rev() {
        let c = field.mul(poly[e], binom(field, e as u64, v as u64));
        acc = field.add(field.mul(acc, x), c);
    }
    acc
}

/// The `Z^v` coefficient of `(Z^q - Z)^j`, which is `H((X^q - X)^j, v)` at
/// any point of GF(q).
fn vanishing_coefficient(field: &Field, j: u64, v: u64) -> FieldElement {
    // (Z^q - Z)^j = sum_k binom(j, k) Z^(qk) (-Z)^(j-k), of degree j + k(q-1).
    let step = field.order() as u64 - 1;
    if v < j || !(v - j).is_multiple_of(step) {
        return field.zero();
    }
    let k = (v - j) / step;
    if k > j {
        return field.zero();
    }
    let b = binom(field, j, k);
    if (j - k) % 2 == 1 {
        field.neg(b)
    } else {
        b
    }
}

fn newton_interpolate(field: &Field, xs: &[FieldElement], ys: &[FieldElement]) -> Dense {
    let n = xs.len();
    let mut coef = ys.to_vec();
    for level in 1..n {
        for k in (level..n).rev() {
            let num = field.sub(coef[k], coef[k - 1]);
            let den = field.sub(xs[k], xs[k - level]);
            coef[k] = field.div(num, den).expect("interpolation nodes are distinct");
        }
    }
    // Expand the Newton form from the innermost term outward.
    let mut poly: Dense = vec![field.zero()];
    for k in (0..n).rev() {
        // poly = poly * (X - xs[k]) + coef[k]
        let mut next = vec![field.zero(); poly.len() + 1];
        for (e, &c) in poly.iter().enumerate() {
            next[e + 1] = field.add(next[e + 1], c);
            next[e] = field.sub(next[e], field.mul(c, xs[k]));
        }
        next[0] = field.add(next[0], coef[k]);
        poly = next;
    }
    poly
}

fn mul_dense(field: &Field, a: &[FieldElement], b: &[FieldElement]) -> Dense {
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = field.add(out[i + j], field.mul(x, y));
        }
    }
    out
}

/// Systematic encoding for `m = 1`. The message is laid out as for
/// [`MultCode::systematic_encode`]: derivative order `i` outer, points
/// `alpha_0, ..., alpha_{d_i}` inner.
pub fn derivative_encode(message: &Message, code: &MultCode) -> Result<Codeword> {
    if code.num_vars() != 1 {
        return Err(Error::NotUnivariate(code.num_vars()));
    }
    if message.len() != code.dimension() {
        return Err(Error::LengthMismatch {
            expected: code.dimension(),
            got: message.len(),
        });
    }
    let field = code.field();
    if !message.symbols().iter().all(|&x| field.contains(x)) {
        return Err(Error::FieldMismatch);
    }
    let q = field.order() as i64;
    let s = code.multiplicity() as usize;
    let d = code.degree();
    let sign = |k: usize| if k.is_multiple_of(2) { field.one() } else { field.neg(field.one()) };

    let mut components: Vec<Dense> = Vec::new();
    let mut offset = 0;
    for i in 0..s {
        let d_i = (q - 1).min(d - i as i64 * q);
        if d_i < 0 {
            break;
        }
        let xs: Vec<FieldElement> = (0..=d_i as u32).map(|k| field.element(k)).collect::<Result<_>>()?;
        let ys: Vec<FieldElement> = xs
            .iter()
            .enumerate()
            .map(|(k, &x)| {
                let mut acc = message.symbols()[offset + k];
                for (j, f_j) in components.iter().enumerate() {
                    for v in j..=i {
                        let c = vanishing_coefficient(field, j as u64, v as u64);
                        if !c.is_zero() {
                            acc = field.sub(acc, field.mul(hasse_at(field, f_j, i - v, x), c));
                        }
                    }
                }
                field.mul(sign(i), acc)
            })
            .collect();
        offset += xs.len();
        components.push(newton_interpolate(field, &xs, &ys));
    }

    // F = sum_j F_j (X^q - X)^j
    let mut w: Dense = vec![field.zero(); q as usize + 1];
    w[1] = field.neg(field.one());
    w[q as usize] = field.one();
    let mut w_pow: Dense = vec![field.one()];
    let mut poly: Dense = vec![field.zero()];
    for f_j in &components {
        let term = mul_dense(field, f_j, &w_pow);
        if term.len() > poly.len() {
            poly.resize(term.len(), field.zero());
        }
        for (e, &c) in term.iter().enumerate() {
            poly[e] = field.add(poly[e], c);
        }
        w_pow = mul_dense(field, &w_pow, &w);
    }

    let mut symbols = Vec::with_capacity(code.length() * s);
    for x in field.enumerate() {
        for v in 0..s {
            symbols.push(hasse_at(field, &poly, v, x));
        }
    }
    Codeword::new(code.length(), s, symbols)
}
