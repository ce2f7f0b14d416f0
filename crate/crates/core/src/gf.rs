//! Finite fields GF(p) and GF(p^m).
//!
//! A [`Field`] is a cheap, shareable handle to an immutable [`FieldCtx`]. Field
//! elements are stored in their canonical integer encoding [`Fq`]: the
//! little-endian residue list `c_0, c_1, .., c_{m-1}` of the polynomial
//! representative is packed as `c_0 + c_1 p + .. + c_{m-1} p^{m-1}`. Bulk
//! structures (matrices, algebra elements) hold one `Field` plus raw `Fq`
//! values; [`FieldElement`] pairs a value with its field for the public,
//! context-checked API.

use std::fmt;
use std::ops::{Add, Deref, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result, Witness};

/// Largest extension degree the stack buffers below accommodate (`q < 2^32`).
const MAX_DEGREE: usize = 32;

/// Canonical integer encoding of a field element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fq(pub(crate) u32);

impl Fq {
    pub const ZERO: Fq = Fq(0);
    pub const ONE: Fq = Fq(1);

    pub fn index(self) -> u64 {
        self.0 as u64
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Immutable description of GF(p^m) = GF(p)[x]/(modulus).
#[derive(Debug)]
pub struct FieldCtx {
    p: u64,
    m: usize,
    modulus: Vec<u64>,
    q: u64,
    generator: OnceLock<Fq>,
}

impl FieldCtx {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Monic modulus, little-endian, length `m + 1`.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }
}

/// Shared handle to a validated field.
#[derive(Clone)]
pub struct Field(Arc<FieldCtx>);

impl Deref for Field {
    type Target = FieldCtx;
    fn deref(&self) -> &FieldCtx {
        &self.0
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.p == other.p && self.modulus == other.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}; {})", self.q, self.spec())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec())
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors, ascending.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Builds GF(p^m) from a prime and a monic, irreducible modulus (little-endian).
///
/// A degree-one modulus such as `x` (`[0, 1]`) yields the prime field.
pub fn make_field(p: u64, modulus: &[u64]) -> Result<Field> {
    if !is_prime(p) || p > u32::MAX as u64 {
        return Err(Error::NotPrime(p));
    }
    let mut modulus = modulus.to_vec();
    if let Some(&c) = modulus.iter().find(|&&c| c >= p) {
        return Err(Error::CoefficientOutOfRange { value: c, p });
    }
    while modulus.last() == Some(&0) {
        modulus.pop();
    }
    if modulus.len() < 2 {
        return Err(Error::DegreeTooSmall);
    }
    if *modulus.last().unwrap() != 1 {
        return Err(Error::NotMonic);
    }
    let m = modulus.len() - 1;
    let q = (0..m)
        .try_fold(1u64, |acc, _| acc.checked_mul(p))
        .filter(|&q| q <= u32::MAX as u64 && m <= MAX_DEGREE)
        .ok_or(Error::FieldTooLarge { p, m })?;
    if let Some(w) = poly::reducibility_witness(&modulus, p) {
        return Err(Error::Reducible { witness: w });
    }
    Ok(Field(Arc::new(FieldCtx {
        p,
        m,
        modulus,
        q,
        generator: OnceLock::new(),
    })))
}

impl Field {
    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<Field> {
        make_field(p, &[0, 1])
    }

    /// Parses `"p=5;mod=[2,0,1]"`; `mod` may be omitted for a prime field.
    pub fn from_spec(spec: &str) -> Result<Field> {
        let bad = || Error::ParseField(spec.to_string());
        let mut p = None;
        let mut modulus = None;
        for part in spec.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = part.split_once('=').ok_or_else(bad)?;
            match key.trim() {
                "p" => p = Some(value.trim().parse::<u64>().map_err(|_| bad())?),
                "mod" => modulus = Some(parse_u64_list(value).ok_or_else(bad)?),
                _ => return Err(bad()),
            }
        }
        let p = p.ok_or_else(bad)?;
        make_field(p, &modulus.unwrap_or_else(|| vec![0, 1]))
    }

    pub fn spec(&self) -> String {
        format!("p={};mod={}", self.p, list_string(&self.modulus))
    }

    pub fn zero(&self) -> Fq {
        Fq::ZERO
    }

    pub fn one(&self) -> Fq {
        Fq::ONE
    }

    /// All q elements in ascending encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        (0..self.q as u32).map(Fq)
    }

    /// Image of an integer under Z -> GF(p) -> GF(q).
    pub fn from_int(&self, v: i64) -> Fq {
        Fq(v.rem_euclid(self.p as i64) as u32)
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<Fq> {
        if coeffs.len() > self.m && coeffs[self.m..].iter().any(|&c| c != 0) {
            return Err(Error::LengthMismatch {
                expected: self.m,
                got: coeffs.len(),
            });
        }
        let mut v = 0u64;
        for &c in coeffs.iter().take(self.m).rev() {
            if c >= self.p {
                return Err(Error::CoefficientOutOfRange { value: c, p: self.p });
            }
            v = v * self.p + c;
        }
        Ok(Fq(v as u32))
    }

    /// Exactly `m` little-endian residues.
    pub fn coeffs(&self, x: Fq) -> Vec<u64> {
        let mut buf = [0u64; MAX_DEGREE];
        self.unpack(x, &mut buf);
        buf[..self.m].to_vec()
    }

    pub fn random<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> Fq {
        Fq(rng.gen_range(0..self.q) as u32)
    }

    pub fn element(&self, x: Fq) -> FieldElement {
        FieldElement {
            field: self.clone(),
            value: x,
        }
    }

    #[inline]
    fn unpack(&self, x: Fq, out: &mut [u64; MAX_DEGREE]) {
        let mut v = x.0 as u64;
        for c in out.iter_mut().take(self.m) {
            *c = v % self.p;
            v /= self.p;
        }
    }

    #[inline]
    fn pack(&self, c: &[u64]) -> Fq {
        let mut v = 0u64;
        for &d in c[..self.m].iter().rev() {
            v = v * self.p + d;
        }
        Fq(v as u32)
    }

    #[inline]
    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        let p = self.p;
        if self.m == 1 {
            let s = a.0 as u64 + b.0 as u64;
            return Fq(if s >= p { s - p } else { s } as u32);
        }
        let (mut x, mut y) = ([0u64; MAX_DEGREE], [0u64; MAX_DEGREE]);
        self.unpack(a, &mut x);
        self.unpack(b, &mut y);
        for i in 0..self.m {
            x[i] = (x[i] + y[i]) % p;
        }
        self.pack(&x)
    }

    #[inline]
    pub fn neg(&self, a: Fq) -> Fq {
        let p = self.p;
        if self.m == 1 {
            return Fq(if a.0 == 0 { 0 } else { (p - a.0 as u64) as u32 });
        }
        let mut x = [0u64; MAX_DEGREE];
        self.unpack(a, &mut x);
        for c in x.iter_mut().take(self.m) {
            *c = (p - *c) % p;
        }
        self.pack(&x)
    }

    #[inline]
    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        let p = self.p;
        if self.m == 1 {
            return Fq(((a.0 as u64 * b.0 as u64) % p) as u32);
        }
        if a.is_zero() || b.is_zero() {
            return Fq::ZERO;
        }
        let m = self.m;
        let (mut x, mut y) = ([0u64; MAX_DEGREE], [0u64; MAX_DEGREE]);
        self.unpack(a, &mut x);
        self.unpack(b, &mut y);
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..m {
            if x[i] == 0 {
                continue;
            }
            for j in 0..m {
                prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
            }
        }
        // Reduce with the monic modulus from the top degree down.
        for d in (m..2 * m - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for k in 0..m {
                let t = (c * self.modulus[k]) % p;
                prod[d - m + k] = (prod[d - m + k] + p - t) % p;
            }
        }
        self.pack(&prod[..m])
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Fq) -> Option<Fq> {
        if a.is_zero() {
            return None;
        }
        Some(self.pow_u(a, self.q - 2))
    }

    pub fn div(&self, a: Fq, b: Fq) -> Option<Fq> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow_u(&self, a: Fq, mut e: u64) -> Fq {
        let mut base = a;
        let mut acc = Fq::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Signed exponent; `None` when a negative power of zero is requested.
    pub fn pow(&self, a: Fq, e: i64) -> Option<Fq> {
        if e >= 0 {
            Some(self.pow_u(a, e as u64))
        } else {
            self.inv(a).map(|ai| self.pow_u(ai, e.unsigned_abs()))
        }
    }

    /// Least t >= 1 with a^t = 1.
    pub fn order(&self, a: Fq) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        let mut t = self.q - 1;
        for r in prime_factors(self.q - 1) {
            while t.is_multiple_of(r) && self.pow_u(a, t / r) == Fq::ONE {
                t /= r;
            }
        }
        Ok(t)
    }

    /// Smallest element (by encoding) of order q - 1.
    pub fn generator(&self) -> Fq {
        *self.0.generator.get_or_init(|| {
            self.elements()
                .skip(1)
                .find(|&x| self.order(x).ok() == Some(self.q - 1))
                .expect("multiplicative group of a finite field is cyclic")
        })
    }

    /// Canonical primitive n-th root of unity: `g^((q-1)/n)` for the canonical generator g.
    pub fn primitive_nth_root(&self, n: u64) -> Result<Fq> {
        if n == 0 || !(self.q - 1).is_multiple_of(n) {
            return Err(Error::NoSuchRoot { n, q: self.q });
        }
        Ok(self.pow_u(self.generator(), (self.q - 1) / n))
    }

    /// Polynomial text in x, descending powers, e.g. `3x+4`.
    pub fn format(&self, a: Fq) -> String {
        let c = self.coeffs(a);
        let mut terms = Vec::new();
        for (i, &ci) in c.iter().enumerate().rev() {
            if ci == 0 {
                continue;
            }
            let coeff = if ci == 1 && i > 0 {
                String::new()
            } else {
                ci.to_string()
            };
            terms.push(match i {
                0 => coeff,
                1 => format!("{coeff}x"),
                _ => format!("{coeff}x^{i}"),
            });
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }

    /// Little-endian list text, e.g. `[4,3]`.
    pub fn format_list(&self, a: Fq) -> String {
        list_string(&self.coeffs(a))
    }

    /// Accepts the list form `[4,3]`, polynomial text `3x+4` / `3*x^2-1`, or a signed integer.
    pub fn parse(&self, text: &str) -> Result<Fq> {
        let t = text.trim();
        let bad = || Error::ParseElement(text.to_string());
        if t.starts_with('[') {
            let c = parse_u64_list(t).ok_or_else(bad)?;
            return self.from_coeffs(&c);
        }
        let t: String = t.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(bad());
        }
        let mut acc = Fq::ZERO;
        let mut rest = t.as_str();
        while !rest.is_empty() {
            let negative = rest.starts_with('-');
            if rest.starts_with('+') || rest.starts_with('-') {
                rest = &rest[1..];
            }
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (term, tail) = rest.split_at(end);
            rest = tail;
            let v = self.parse_term(term).ok_or_else(bad)?;
            acc = if negative { self.sub(acc, v) } else { self.add(acc, v) };
        }
        Ok(acc)
    }

    fn parse_term(&self, term: &str) -> Option<Fq> {
        if term.is_empty() {
            return None;
        }
        let Some(xpos) = term.find('x') else {
            let v: u64 = term.parse().ok()?;
            return Some(self.from_int((v % self.p) as i64));
        };
        let coeff = term[..xpos].trim_end_matches('*');
        let coeff = if coeff.is_empty() {
            1
        } else {
            coeff.parse::<u64>().ok()? % self.p
        };
        let power = match &term[xpos + 1..] {
            "" => 1,
            s => s.strip_prefix('^')?.parse::<u64>().ok()?,
        };
        let x = if self.m == 1 {
            // x is the root of the modulus x - c0 in a prime field.
            self.neg(Fq(self.modulus[0] as u32))
        } else {
            Fq(self.p as u32)
        };
        Some(self.mul(self.from_int(coeff as i64), self.pow_u(x, power)))
    }
}

fn list_string(c: &[u64]) -> String {
    let parts: Vec<String> = c.iter().map(u64::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn parse_u64_list(text: &str) -> Option<Vec<u64>> {
    let inner = text.trim().strip_prefix('[')?.strip_suffix(']')?;
    if inner.trim().is_empty() {
        return Some(Vec::new());
    }
    inner.split(',').map(|s| s.trim().parse().ok()).collect()
}

/// A field value together with its field.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: Fq,
}

/// Operation selector for [`arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    /// Inverse of the first operand; the second is ignored.
    Inv,
    Pow(i64),
}

/// Context-checked binary arithmetic.
pub fn arith(a: &FieldElement, b: &FieldElement, op: ArithOp) -> Result<FieldElement> {
    if a.field != b.field {
        return Err(Error::MixedContexts);
    }
    let f = &a.field;
    let v = match op {
        ArithOp::Add => f.add(a.value, b.value),
        ArithOp::Sub => f.sub(a.value, b.value),
        ArithOp::Mul => f.mul(a.value, b.value),
        ArithOp::Div => f.div(a.value, b.value).ok_or(Error::DivisionByZero)?,
        ArithOp::Inv => f.inv(a.value).ok_or(Error::DivisionByZero)?,
        ArithOp::Pow(e) => f.pow(a.value, e).ok_or(Error::DivisionByZero)?,
    };
    Ok(f.element(v))
}

impl FieldElement {
    pub fn new(field: &Field, value: Fq) -> Self {
        field.element(value)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> Fq {
        self.value
    }

    pub fn coeffs(&self) -> Vec<u64> {
        self.field.coeffs(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn inv(&self) -> Result<FieldElement> {
        arith(self, self, ArithOp::Inv)
    }

    pub fn pow(&self, e: i64) -> Result<FieldElement> {
        arith(self, self, ArithOp::Pow(e))
    }

    pub fn checked_div(&self, rhs: &FieldElement) -> Result<FieldElement> {
        arith(self, rhs, ArithOp::Div)
    }

    pub fn order(&self) -> Result<u64> {
        self.field.order(self.value)
    }
}

/// Multiplicative order of a nonzero element.
pub fn element_order(x: &FieldElement) -> Result<u64> {
    x.order()
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.format(self.value))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format(self.value))
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $op:expr) => {
        impl $tr<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            /// Panics if the operands live in different fields.
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                arith(self, rhs, $op).expect("field elements from different fields")
            }
        }
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, ArithOp::Add);
binop!(Sub, sub, ArithOp::Sub);
binop!(Mul, mul, ArithOp::Mul);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.field.element(self.field.neg(self.value))
    }
}

/// Dense polynomials over GF(p), little-endian, used only for irreducibility.
mod poly {
    use super::Witness;

    fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn inv_mod(a: u64, p: u64) -> u64 {
        let mut acc = 1u64;
        let (mut base, mut e) = (a % p, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    }

    fn rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        let mut r = trim(a.to_vec());
        let f = trim(f.to_vec());
        let df = f.len() - 1;
        let lead_inv = inv_mod(f[df], p);
        while r.len() > df {
            let d = r.len() - 1;
            let c = r[d] * lead_inv % p;
            for k in 0..=df {
                let t = c * f[k] % p;
                r[d - df + k] = (r[d - df + k] + p - t) % p;
            }
            r = trim(r);
        }
        r
    }

    fn mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        rem(&prod, f, p)
    }

    fn powmod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut b = rem(base, f, p);
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(&acc, &b, f, p);
            }
            b = mulmod(&b, &b, f, p);
            e >>= 1;
        }
        acc
    }

    fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        if let Some(&lead) = a.last() {
            let li = inv_mod(lead, p);
            a.iter_mut().for_each(|c| *c = *c * li % p);
        }
        a
    }

    fn eval(f: &[u64], x: u64, p: u64) -> u64 {
        f.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
    }

    /// `None` iff `f` (monic, degree >= 1) is irreducible over GF(p).
    pub(super) fn reducibility_witness(f: &[u64], p: u64) -> Option<Witness> {
        let m = f.len() - 1;
        if m == 1 {
            return None;
        }
        if m <= 3 {
            return (0..p).find(|&r| eval(f, r, p) == 0).map(Witness::Root);
        }
        // gcd(x^(p^k) - x, f) exposes every factor of degree k.
        let mut h = vec![0u64, 1];
        for k in 1..=m / 2 {
            h = powmod(&h, p, f, p);
            let mut diff = h.clone();
            diff.resize(diff.len().max(2), 0);
            diff[1] = (diff[1] + p - 1) % p;
            let g = gcd(f, &diff, p);
            if g.len() == f.len() {
                // f is a product of degree-k factors; find one directly.
                return Some(Witness::Factor(monic_divisor_of_degree(f, k, p)));
            }
            if g.len() > 1 {
                return Some(Witness::Factor(g));
            }
        }
        None
    }

    /// Smallest (by encoding) monic divisor of degree `k`; one must exist.
    fn monic_divisor_of_degree(f: &[u64], k: usize, p: u64) -> Vec<u64> {
        let count = p.pow(k as u32);
        (0..count)
            .map(|mut v| {
                let mut c: Vec<u64> = (0..k)
                    .map(|_| {
                        let d = v % p;
                        v /= p;
                        d
                    })
                    .collect();
                c.push(1);
                c
            })
            .find(|c| rem(f, c, p).is_empty())
            .expect("equal-degree factor exists")
    }

}
