//! The group algebra F_q D_{2n}, D_{2n} = <a, b | a^n = b^2 = 1, ab = ba^{-1}>.
//!
//! Elements are stored as two coefficient vectors: `alpha[i]` is the
//! coefficient of `a^i` and `beta[i]` the coefficient of `b a^i`. The
//! coordinate map to F_q^{2n} places `a^i` at position `i` and `b a^i` at
//! position `n + i`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{gcd, Field, Fq};
use crate::linalg::Matrix;

/// A group element `b^flip a^power`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub flip: bool,
    pub power: usize,
}

/// Context for F_q D_{2n}; validates `gcd(2n, q) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DihedralAlgebra {
    field: Field,
    n: usize,
}

impl DihedralAlgebra {
    pub fn new(field: &Field, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidN);
        }
        let order = 2 * n as u64;
        if gcd(order, field.q()) != 1 {
            return Err(Error::CharDividesOrder { p: field.p(), order });
        }
        Ok(DihedralAlgebra {
            field: field.clone(),
            n,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension over F_q, i.e. the code length 2n.
    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement {
            field: self.field.clone(),
            n: self.n,
            alpha: vec![Fq::ZERO; self.n],
            beta: vec![Fq::ZERO; self.n],
        }
    }

    pub fn one(&self) -> AlgebraElement {
        self.monomial(GroupElement { flip: false, power: 0 })
    }

    pub fn monomial(&self, g: GroupElement) -> AlgebraElement {
        let mut u = self.zero();
        let slot = if g.flip { &mut u.beta } else { &mut u.alpha };
        slot[g.power % self.n] = Fq::ONE;
        u
    }

    /// `a^k`
    pub fn a_pow(&self, k: usize) -> AlgebraElement {
        self.monomial(GroupElement { flip: false, power: k })
    }

    /// `b a^k`
    pub fn b_a_pow(&self, k: usize) -> AlgebraElement {
        self.monomial(GroupElement { flip: true, power: k })
    }

    pub fn element(&self, alpha: Vec<Fq>, beta: Vec<Fq>) -> Result<AlgebraElement> {
        for v in [&alpha, &beta] {
            if v.len() != self.n {
                return Err(Error::LengthMismatch {
                    expected: self.n,
                    got: v.len(),
                });
            }
        }
        Ok(AlgebraElement {
            field: self.field.clone(),
            n: self.n,
            alpha,
            beta,
        })
    }

    /// The 2n group elements in coordinate order.
    pub fn group_elements(&self) -> impl Iterator<Item = GroupElement> {
        let n = self.n;
        [false, true]
            .into_iter()
            .flat_map(move |flip| (0..n).map(move |power| GroupElement { flip, power }))
    }

    /// Inverse of the coordinate map.
    pub fn phi_inv(&self, v: &[Fq]) -> Result<AlgebraElement> {
        if v.len() != 2 * self.n {
            return Err(Error::LengthMismatch {
                expected: 2 * self.n,
                got: v.len(),
            });
        }
        self.element(v[..self.n].to_vec(), v[self.n..].to_vec())
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> AlgebraElement {
        let mut draw = || (0..self.n).map(|_| self.field.random(rng)).collect();
        let alpha = draw();
        let beta = draw();
        AlgebraElement {
            field: self.field.clone(),
            n: self.n,
            alpha,
            beta,
        }
    }

    /// RREF basis (in coordinates) of the left ideal generated by `gens`.
    pub fn left_ideal_basis(&self, gens: &[AlgebraElement]) -> Result<Matrix> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let mut rows = Vec::with_capacity(gens.len() * self.dim());
        for gen in gens {
            self.check(gen)?;
            for g in self.group_elements() {
                rows.push(self.monomial(g).checked_mul(gen)?.phi());
            }
        }
        Ok(Matrix::from_rows(&self.field, self.dim(), rows)?.row_basis())
    }

    /// Parses `c0 + c1*a + c2*a^2 + d0*b + d1*b*a + d2*b*a^2`. Coefficients are
    /// integers, bracketed residue lists, or parenthesized field text.
    pub fn parse(&self, text: &str) -> Result<AlgebraElement> {
        let bad = || Error::ParseAlgebraElement(text.to_string());
        let f = &self.field;
        let mut u = self.zero();
        for (negative, term) in split_terms(text).ok_or_else(bad)? {
            let (coeff, mono) = split_coefficient(&term);
            let c = match coeff {
                Some(c) => f.parse(c).map_err(|_| bad())?,
                None => Fq::ONE,
            };
            let c = if negative { f.neg(c) } else { c };
            let g = parse_monomial(mono).ok_or_else(bad)?;
            let slot = if g.flip { &mut u.beta } else { &mut u.alpha };
            let idx = g.power % self.n;
            slot[idx] = f.add(slot[idx], c);
        }
        Ok(u)
    }

    fn check(&self, u: &AlgebraElement) -> Result<()> {
        if u.n != self.n || u.field != self.field {
            return Err(Error::MixedContexts);
        }
        Ok(())
    }
}

/// An element of F_q D_{2n}.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    field: Field,
    n: usize,
    alpha: Vec<Fq>,
    beta: Vec<Fq>,
}

impl AlgebraElement {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Coefficients of `a^0 .. a^{n-1}`.
    pub fn alpha(&self) -> &[Fq] {
        &self.alpha
    }

    /// Coefficients of `b a^0 .. b a^{n-1}`.
    pub fn beta(&self) -> &[Fq] {
        &self.beta
    }

    pub fn algebra(&self) -> DihedralAlgebra {
        DihedralAlgebra {
            field: self.field.clone(),
            n: self.n,
        }
    }

    fn same_context(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.field != other.field {
            return Err(Error::MixedContexts);
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.iter().chain(&self.beta).all(|v| v.is_zero())
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.alpha.iter().chain(&self.beta).filter(|v| !v.is_zero()).count()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_context(other)?;
        let f = &self.field;
        let zip = |x: &[Fq], y: &[Fq]| x.iter().zip(y).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(AlgebraElement {
            field: f.clone(),
            n: self.n,
            alpha: zip(&self.alpha, &other.alpha),
            beta: zip(&self.beta, &other.beta),
        })
    }

    pub fn scale(&self, c: Fq) -> Self {
        let f = &self.field;
        AlgebraElement {
            field: f.clone(),
            n: self.n,
            alpha: self.alpha.iter().map(|&v| f.mul(c, v)).collect(),
            beta: self.beta.iter().map(|&v| f.mul(c, v)).collect(),
        }
    }

    /// Product under `a^i a^j = a^{i+j}`, `a^i (b a^j) = b a^{j-i}`,
    /// `(b a^i) a^j = b a^{i+j}` and `(b a^i)(b a^j) = a^{j-i}`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_context(other)?;
        let f = &self.field;
        let n = self.n;
        let mut alpha = vec![Fq::ZERO; n];
        let mut beta = vec![Fq::ZERO; n];
        let acc = |slot: &mut Vec<Fq>, k: usize, x: Fq, y: Fq| slot[k] = f.add(slot[k], f.mul(x, y));
        for i in 0..n {
            let (ai, bi) = (self.alpha[i], self.beta[i]);
            if ai.is_zero() && bi.is_zero() {
                continue;
            }
            for j in 0..n {
                let (aj, bj) = (other.alpha[j], other.beta[j]);
                let sum = (i + j) % n;
                let diff = (j + n - i) % n;
                if !ai.is_zero() {
                    acc(&mut alpha, sum, ai, aj);
                    acc(&mut beta, diff, ai, bj);
                }
                if !bi.is_zero() {
                    acc(&mut beta, sum, bi, aj);
                    acc(&mut alpha, diff, bi, bj);
                }
            }
        }
        Ok(AlgebraElement {
            field: f.clone(),
            n,
            alpha,
            beta,
        })
    }

    /// `sum a_g g  ->  sum a_g g^{-1}`: `a^i -> a^{-i}`, `b a^i` fixed.
    pub fn involution(&self) -> Self {
        let n = self.n;
        AlgebraElement {
            field: self.field.clone(),
            n,
            alpha: (0..n).map(|i| self.alpha[(n - i) % n]).collect(),
            beta: self.beta.clone(),
        }
    }

    /// Coordinates `(a^0, .., a^{n-1}, b a^0, .., b a^{n-1})`.
    pub fn phi(&self) -> Vec<Fq> {
        self.alpha.iter().chain(&self.beta).copied().collect()
    }

    /// `c0 + c1*a + .. + d0*b + d1*b*a + ..` omitting zero terms.
    pub fn to_text(&self) -> String {
        let f = &self.field;
        let mut terms = Vec::new();
        for (flip, coeffs) in [(false, &self.alpha), (true, &self.beta)] {
            for (i, &c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mono = match (flip, i) {
                    (false, 0) => String::new(),
                    (false, 1) => "a".into(),
                    (false, _) => format!("a^{i}"),
                    (true, 0) => "b".into(),
                    (true, 1) => "b*a".into(),
                    (true, _) => format!("b*a^{i}"),
                };
                let mut coeff = f.format(c);
                if coeff.contains(['x', '+']) {
                    coeff = format!("({coeff})");
                }
                terms.push(match (mono.is_empty(), c == Fq::ONE) {
                    (true, _) => coeff,
                    (false, true) => mono,
                    (false, false) => format!("{coeff}*{mono}"),
                });
            }
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    pub fn to_json(&self) -> AlgebraElementJson {
        let f = &self.field;
        AlgebraElementJson {
            alpha: self.alpha.iter().map(|&v| f.coeffs(v)).collect(),
            beta: self.beta.iter().map(|&v| f.coeffs(v)).collect(),
        }
    }

    pub fn from_json(alg: &DihedralAlgebra, doc: &AlgebraElementJson) -> Result<Self> {
        let conv = |v: &Vec<Vec<u64>>| -> Result<Vec<Fq>> { v.iter().map(|c| alg.field.from_coeffs(c)).collect() };
        alg.element(conv(&doc.alpha)?, conv(&doc.beta)?)
    }
}

/// `{"alpha":[..],"beta":[..]}`, each coefficient a little-endian residue list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraElementJson {
    pub alpha: Vec<Vec<u64>>,
    pub beta: Vec<Vec<u64>>,
}

/// Splits at top-level `+`/`-` (outside parentheses and brackets).
fn split_terms(text: &str) -> Option<Vec<(bool, String)>> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return None;
    }
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut negative = false;
    let mut current = String::new();
    for ch in compact.chars() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        if depth == 0 && (ch == '+' || ch == '-') {
            if !current.is_empty() {
                out.push((negative, std::mem::take(&mut current)));
            } else if !out.is_empty() {
                return None;
            }
            negative = ch == '-';
            continue;
        }
        current.push(ch);
    }
    if current.is_empty() || depth != 0 {
        return None;
    }
    out.push((negative, current));
    Some(out)
}

/// `(coeff)*mono`, `[..]*mono`, `3*mono`, `3mono`, `mono` or a bare coefficient.
fn split_coefficient(term: &str) -> (Option<&str>, &str) {
    if let Some(rest) = term.strip_prefix('(') {
        if let Some(close) = rest.find(')') {
            let coeff = &rest[..close];
            let mono = rest[close + 1..].trim_start_matches('*');
            return (Some(coeff), mono);
        }
    }
    if term.starts_with('[') {
        if let Some(close) = term.find(']') {
            let mono = term[close + 1..].trim_start_matches('*');
            return (Some(&term[..=close]), mono);
        }
    }
    let split = term.find(|c: char| !c.is_ascii_digit()).unwrap_or(term.len());
    if split == 0 {
        return (None, term);
    }
    (Some(&term[..split]), term[split..].trim_start_matches('*'))
}

fn parse_monomial(mono: &str) -> Option<GroupElement> {
    if mono.is_empty() || mono == "1" {
        return Some(GroupElement { flip: false, power: 0 });
    }
    let (flip, rest) = match mono.strip_prefix('b') {
        Some(r) => (true, r.trim_start_matches('*')),
        None => (false, mono),
    };
    let power = match rest {
        "" => 0,
        "a" => 1,
        r => r.strip_prefix("a^")?.parse().ok()?,
    };
    Some(GroupElement { flip, power })
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    /// Panics on mixed contexts; use [`AlgebraElement::checked_add`] otherwise.
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_add(rhs).expect("algebra elements from different algebras")
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(self.field.neg(Fq::ONE))
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self + &(-rhs)
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    /// Panics on mixed contexts; use [`AlgebraElement::checked_mul`] otherwise.
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_mul(rhs).expect("algebra elements from different algebras")
    }
}
