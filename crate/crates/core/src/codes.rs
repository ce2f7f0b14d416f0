//! Dihedral MDS code constructions and minimum-distance verification.
//!
//! Three families live in F_q D_{2n} (n odd, n | q - 1), with twist index s and
//! twist scalar beta:
//!
//! - `2n-2`:       `sum_{j != s, n-s} R e_j  +  R(e_s + beta b e_{n-s})`, a [2n, 2n-2, 3] code
//! - `2n-3-minus`: the same with `R e_0` replaced by `R (1-b)/2 e_0`, a [2n, 2n-3, 4] code
//! - `2n-3-plus`:  the same with `R (1+b)/2 e_0`, a [2n, 2n-3, 4] code

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::dihedral::{AlgebraElement, DihedralAlgebra};
use crate::error::{Error, Result};
use crate::gf::{gcd, Field, Fq};
use crate::idempotent::{cyclic_family, minus_half, plus_half};
use crate::linalg::{Matrix, MatrixJson};

/// Default bound on the number of codewords exhaustive search may visit.
pub const DEFAULT_CAP: u128 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    TwoNMinus2,
    TwoNMinus3Minus,
    TwoNMinus3Plus,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 3] = [
        FamilyKind::TwoNMinus2,
        FamilyKind::TwoNMinus3Minus,
        FamilyKind::TwoNMinus3Plus,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyKind::TwoNMinus2 => "2n-2",
            FamilyKind::TwoNMinus3Minus => "2n-3-minus",
            FamilyKind::TwoNMinus3Plus => "2n-3-plus",
        }
    }

    /// Dimension the construction is proven to reach.
    pub fn expected_dimension(self, n: usize) -> usize {
        match self {
            FamilyKind::TwoNMinus2 => 2 * n - 2,
            _ => 2 * n - 3,
        }
    }

    pub fn expected_distance(self) -> usize {
        match self {
            FamilyKind::TwoNMinus2 => 3,
            _ => 4,
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown family {s:?}; expected 2n-2, 2n-3-minus or 2n-3-plus"))
    }
}

/// Family selector with twist parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeFamily {
    pub kind: FamilyKind,
    /// Twist index, `1 <= s <= (n-1)/2`, `gcd(s, n) = 1`.
    pub s: usize,
    /// Twist scalar; `None` selects the canonical primitive element of F_q^*.
    pub beta: Option<Fq>,
}

impl CodeFamily {
    pub fn new(kind: FamilyKind) -> Self {
        CodeFamily { kind, s: 1, beta: None }
    }

    pub fn with_s(mut self, s: usize) -> Self {
        self.s = s;
        self
    }

    pub fn with_beta(mut self, beta: Fq) -> Self {
        self.beta = Some(beta);
        self
    }
}

/// Parameters a code was built from.
#[derive(Debug, Clone)]
pub struct Construction {
    pub algebra: DihedralAlgebra,
    pub kind: FamilyKind,
    pub s: usize,
    pub beta: Fq,
    pub xi: Fq,
}

/// A linear code given by an RREF generator matrix.
#[derive(Debug)]
pub struct LinearCode {
    generator: Matrix,
    construction: Option<Construction>,
    distance: OnceLock<usize>,
}

impl Clone for LinearCode {
    fn clone(&self) -> Self {
        let distance = OnceLock::new();
        if let Some(&d) = self.distance.get() {
            let _ = distance.set(d);
        }
        LinearCode {
            generator: self.generator.clone(),
            construction: self.construction.clone(),
            distance,
        }
    }
}

impl LinearCode {
    /// Row-reduces an arbitrary generator matrix; dependent rows are dropped.
    pub fn from_generator(g: &Matrix) -> Self {
        LinearCode {
            generator: g.row_basis(),
            construction: None,
            distance: OnceLock::new(),
        }
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn construction(&self) -> Option<&Construction> {
        self.construction.as_ref()
    }

    pub fn field(&self) -> &Field {
        self.generator.field()
    }

    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    /// Minimum distance if it has been computed.
    pub fn cached_distance(&self) -> Option<usize> {
        self.distance.get().copied()
    }

    /// Minimum distance via `method`, cached after the first computation.
    pub fn distance(&self, method: DistanceMethod, cap: u128) -> Result<usize> {
        if let Some(&d) = self.distance.get() {
            return Ok(d);
        }
        let d = min_distance(self, method, cap)?;
        Ok(*self.distance.get_or_init(|| d))
    }

    /// Singleton bound `length - k + 1`.
    pub fn singleton_bound(&self) -> usize {
        self.length() - self.k() + 1
    }

    /// Parity-check matrix: a basis of the dual code.
    pub fn parity_check(&self) -> Matrix {
        self.generator.kernel_basis()
    }

    /// Checks closure under left multiplication by `a` and `b` in F_q D_{2n}.
    pub fn is_left_ideal(&self, alg: &DihedralAlgebra) -> Result<bool> {
        if self.length() != alg.dim() || self.field() != alg.field() {
            return Err(Error::MixedContexts);
        }
        let gens = [alg.a_pow(1), alg.b_a_pow(0)];
        for r in 0..self.k() {
            let u = alg.phi_inv(self.generator.row(r))?;
            for g in &gens {
                if !self.generator.row_space_contains(&(g * &u).phi())? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn to_json(&self, style: Style) -> Result<CodeJson> {
        let g = generator_matrix_presentation(self, style)?;
        let c = self.construction.as_ref();
        Ok(CodeJson {
            field: self.field().spec(),
            n: c.map(|c| c.algebra.n()),
            family: c.map(|c| c.kind.to_string()),
            s: c.map(|c| c.s),
            beta: c.map(|c| self.field().coeffs(c.beta)),
            style: style.to_string(),
            length: self.length(),
            k: self.k(),
            generator: g.to_json(),
        })
    }

    /// Rebuilds a code from its serialized generator matrix. Construction
    /// fields in the document are informational only.
    pub fn from_json(doc: &CodeJson) -> Result<LinearCode> {
        let g = Matrix::from_json(&doc.generator)?;
        if g.cols() != doc.length {
            return Err(Error::LengthMismatch {
                expected: doc.length,
                got: g.cols(),
            });
        }
        Ok(LinearCode::from_generator(&g))
    }
}

/// Builds one of the three dihedral MDS families.
pub fn construct_code(field: &Field, n: usize, family: CodeFamily) -> Result<LinearCode> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenN(n));
    }
    if n < 3 {
        return Err(Error::NTooSmall(n));
    }
    let alg = DihedralAlgebra::new(field, n)?;
    let idem = cyclic_family(&alg)?;
    let s = family.s;
    if s == 0 || s > (n - 1) / 2 || gcd(s as u64, n as u64) != 1 {
        return Err(Error::NotCoprime { s, n });
    }
    let beta = family.beta.unwrap_or_else(|| field.generator());
    check_beta(field, n, family.kind, beta)?;

    let e = &idem.members;
    let twisted = &e[s] + &alg.b_a_pow(0).scale(beta).checked_mul(&e[n - s])?;
    let mut gens: Vec<AlgebraElement> = Vec::with_capacity(n);
    gens.push(match family.kind {
        FamilyKind::TwoNMinus2 => e[0].clone(),
        FamilyKind::TwoNMinus3Minus => minus_half(&e[0]),
        FamilyKind::TwoNMinus3Plus => plus_half(&e[0]),
    });
    gens.push(twisted);
    gens.extend((1..n).filter(|&j| j != s && j != n - s).map(|j| e[j].clone()));

    let generator = alg.left_ideal_basis(&gens)?;
    Ok(LinearCode {
        generator,
        construction: Some(Construction {
            algebra: alg,
            kind: family.kind,
            s,
            beta,
            xi: idem.xi,
        }),
        distance: OnceLock::new(),
    })
}

fn check_beta(field: &Field, n: usize, kind: FamilyKind, beta: Fq) -> Result<()> {
    if beta.is_zero() {
        return Err(Error::ZeroBeta);
    }
    match kind {
        FamilyKind::TwoNMinus2 | FamilyKind::TwoNMinus3Minus => {
            let order = field.order(beta)?;
            let bound = 2 * n as u64;
            if order <= bound {
                return Err(Error::BadOrder { order, bound });
            }
        }
        FamilyKind::TwoNMinus3Plus => {
            if field.pow_u(beta, n as u64) == Fq::ONE {
                return Err(Error::BetaIsNthRoot { n });
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    /// Canonical reduced row echelon form.
    Rref,
    /// Idempotent rows `n phi(e_j)`, `n phi(b e_j)` in the textbook layout.
    Paper,
}

impl fmt::Display for Style {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Style::Rref => "rref",
            Style::Paper => "paper",
        })
    }
}

impl FromStr for Style {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "rref" => Ok(Style::Rref),
            "paper" => Ok(Style::Paper),
            _ => Err(format!("unknown style {s:?}; expected rref or paper")),
        }
    }
}

/// The generator matrix in the requested layout.
///
/// `Paper` lists, scaled by n: the e_0 rows (`phi(e_0), phi(b e_0)`, or the
/// single row `phi((1 -+ b)/2 e_0)` scaled by 2n), then
/// `phi(e_s + beta b e_{n-s})`, `phi(b e_s + beta e_{n-s})`, then
/// `phi(e_j), phi(b e_j)` for the remaining j in ascending order.
pub fn generator_matrix_presentation(code: &LinearCode, style: Style) -> Result<Matrix> {
    match style {
        Style::Rref => Ok(code.generator.clone()),
        Style::Paper => {
            let c = code.construction.as_ref().ok_or(Error::UnsupportedStyle)?;
            let alg = &c.algebra;
            let f = alg.field();
            let n = alg.n();
            let scale_n = f.from_int(n as i64);
            let scale_2n = f.from_int(2 * n as i64);
            let e = cyclic_family(alg)?.members;
            let b = alg.b_a_pow(0);
            let mut rows: Vec<AlgebraElement> = Vec::new();
            match c.kind {
                FamilyKind::TwoNMinus2 => {
                    rows.push(e[0].scale(scale_n));
                    rows.push((&b * &e[0]).scale(scale_n));
                }
                FamilyKind::TwoNMinus3Minus => rows.push(minus_half(&e[0]).scale(scale_2n)),
                FamilyKind::TwoNMinus3Plus => rows.push(plus_half(&e[0]).scale(scale_2n)),
            }
            let twisted = &e[c.s] + &(&b * &e[n - c.s]).scale(c.beta);
            rows.push(twisted.scale(scale_n));
            rows.push((&b * &twisted).scale(scale_n));
            for j in (1..n).filter(|&j| j != c.s && j != n - c.s) {
                rows.push(e[j].scale(scale_n));
                rows.push((&b * &e[j]).scale(scale_n));
            }
            Matrix::from_rows(f, alg.dim(), rows.iter().map(AlgebraElement::phi).collect())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceMethod {
    /// Enumerate every nonzero codeword.
    Exhaustive,
    /// Smallest number of linearly dependent parity-check columns.
    Dual,
    /// Exhaustive when `q^k - 1 <= cap`, dual otherwise.
    Auto,
}

impl FromStr for DistanceMethod {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "exhaustive" => Ok(DistanceMethod::Exhaustive),
            "dual" => Ok(DistanceMethod::Dual),
            "auto" => Ok(DistanceMethod::Auto),
            _ => Err(format!("unknown method {s:?}; expected exhaustive, dual or auto")),
        }
    }
}

/// Number of nonzero codewords, saturating.
pub fn nonzero_codewords(q: u64, k: usize) -> u128 {
    (0..k)
        .try_fold(1u128, |acc, _| acc.checked_mul(q as u128))
        .map_or(u128::MAX, |v| v - 1)
}

/// Minimum Hamming weight of a nonzero codeword.
pub fn min_distance(code: &LinearCode, method: DistanceMethod, cap: u128) -> Result<usize> {
    if code.k() == 0 {
        return Err(Error::ZeroCode);
    }
    let needed = nonzero_codewords(code.field().q(), code.k());
    match method {
        DistanceMethod::Exhaustive => {
            if needed > cap {
                return Err(Error::CapExceeded { needed, cap });
            }
            Ok(exhaustive_distance(&code.generator))
        }
        DistanceMethod::Dual => Ok(dual_distance(&code.parity_check(), code.length())),
        DistanceMethod::Auto if needed <= cap => Ok(exhaustive_distance(&code.generator)),
        DistanceMethod::Auto => Ok(dual_distance(&code.parity_check(), code.length())),
    }
}

/// Walks all q^k messages depth-first, adding precomputed row multiples.
fn exhaustive_distance(g: &Matrix) -> usize {
    let f = g.field();
    let (k, len) = (g.rows(), g.cols());
    let elements: Vec<Fq> = f.elements().collect();
    // multiples[r][c] = elements[c] * row r
    let multiples: Vec<Vec<Vec<Fq>>> = (0..k)
        .map(|r| {
            elements
                .iter()
                .map(|&c| g.row(r).iter().map(|&v| f.mul(c, v)).collect())
                .collect()
        })
        .collect();
    let mut partial = vec![vec![Fq::ZERO; len]; k + 1];
    let mut best = len;
    let mut digits = vec![0usize; k];
    let mut level = 0;
    // Iterative DFS: partial[level + 1] = partial[level] + digits[level] * row[level].
    loop {
        if level == k {
            let w = partial[k].iter().filter(|v| !v.is_zero()).count();
            if w > 0 && w < best {
                best = w;
                if best == 1 {
                    return 1;
                }
            }
            // backtrack to the deepest level with digits left
            loop {
                if level == 0 {
                    return best;
                }
                level -= 1;
                digits[level] += 1;
                if digits[level] < elements.len() {
                    break;
                }
                digits[level] = 0;
            }
        }
        let (lo, hi) = partial.split_at_mut(level + 1);
        let add = &multiples[level][digits[level]];
        for ((dst, &a), &b) in hi[0].iter_mut().zip(&lo[level]).zip(add) {
            *dst = f.add(a, b);
        }
        level += 1;
    }
}

/// Least w such that some w columns of `h` are linearly dependent.
fn dual_distance(h: &Matrix, len: usize) -> usize {
    if h.rows() == 0 {
        return 1;
    }
    for w in 1..=len {
        let mut subset: Vec<usize> = (0..w).collect();
        loop {
            if h.columns_rank(&subset).expect("indices are valid") < w {
                return w;
            }
            if !next_combination(&mut subset, len) {
                break;
            }
        }
    }
    unreachable!("any rank(H) + 1 columns are dependent")
}

/// Advances to the next w-subset of `0..len` in lexicographic order.
pub(crate) fn next_combination(c: &mut [usize], len: usize) -> bool {
    let w = c.len();
    for i in (0..w).rev() {
        if c[i] < len - w + i {
            c[i] += 1;
            for j in i + 1..w {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MdsVerdict {
    Mds,
    NotMds { d: usize, bound: usize },
}

impl MdsVerdict {
    pub fn is_mds(self) -> bool {
        self == MdsVerdict::Mds
    }
}

/// MDS iff d = length - k + 1, distance via [`DistanceMethod::Auto`] and [`DEFAULT_CAP`].
pub fn is_mds(code: &LinearCode) -> Result<MdsVerdict> {
    mds_verdict(code, DistanceMethod::Auto, DEFAULT_CAP)
}

pub fn mds_verdict(code: &LinearCode, method: DistanceMethod, cap: u128) -> Result<MdsVerdict> {
    let d = code.distance(method, cap)?;
    let bound = code.singleton_bound();
    Ok(if d == bound {
        MdsVerdict::Mds
    } else {
        MdsVerdict::NotMds { d, bound }
    })
}

/// Serialized code: field spec, optional construction parameters, generator matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeJson {
    pub field: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub beta: Option<Vec<u64>>,
    pub style: String,
    pub length: usize,
    pub k: usize,
    pub generator: MatrixJson,
}

/// `{"length","k","d","mds"}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Analysis {
    pub length: usize,
    pub k: usize,
    pub d: usize,
    pub mds: bool,
}

pub fn analyze(code: &LinearCode, method: DistanceMethod, cap: u128) -> Result<Analysis> {
    let verdict = mds_verdict(code, method, cap)?;
    Ok(Analysis {
        length: code.length(),
        k: code.k(),
        d: code.distance(method, cap)?,
        mds: verdict.is_mds(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub family: String,
    pub s: usize,
    pub beta: Vec<u64>,
    pub length: usize,
    pub k: usize,
    pub d: usize,
    pub mds: bool,
}

/// Every family for every admissible twist index s, with the default beta.
pub fn sweep(field: &Field, n: usize, method: DistanceMethod, cap: u128) -> Result<Vec<SweepRow>> {
    let mut out = Vec::new();
    for s in (1..=(n.saturating_sub(1)) / 2).filter(|&s| gcd(s as u64, n as u64) == 1) {
        for kind in FamilyKind::ALL {
            let code = construct_code(field, n, CodeFamily::new(kind).with_s(s))?;
            let a = analyze(&code, method, cap)?;
            let beta = code.construction().map(|c| field.coeffs(c.beta)).unwrap_or_default();
            out.push(SweepRow {
                family: kind.to_string(),
                s,
                beta,
                length: a.length,
                k: a.k,
                d: a.d,
                mds: a.mds,
            });
        }
    }
    Ok(out)
}
