//! Split Wedderburn decomposition of F_q D_{2n} for odd n with n | q - 1:
//!
//! ```text
//! F_q D_{2n}  ~=  (F_q + F_q)  +  M_2(F_q)^{(n-1)/2}
//! a  ->  (1, 1)  x  diag(xi^j, xi^{-j})
//! b  ->  (1,-1)  x  [[0,1],[1,0]]
//! ```
//!
//! plus the left-ideal classification built on it: every left ideal is the
//! preimage of a direct sum of summand ideals.

use rand::Rng;

use crate::dihedral::{AlgebraElement, DihedralAlgebra};
use crate::error::{Error, Result};
use crate::gf::{Field, Fq};
use crate::linalg::Matrix;

/// 2x2 block, row-major.
pub type Block = [[Fq; 2]; 2];

/// Image of an algebra element: a pair in F_q^2 and (n-1)/2 matrices in M_2(F_q).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedderburnTuple {
    pub gamma: [Fq; 2],
    pub blocks: Vec<Block>,
}

impl WedderburnTuple {
    pub fn zero(block_count: usize) -> Self {
        WedderburnTuple {
            gamma: [Fq::ZERO; 2],
            blocks: vec![[[Fq::ZERO; 2]; 2]; block_count],
        }
    }

    pub fn one(block_count: usize) -> Self {
        WedderburnTuple {
            gamma: [Fq::ONE; 2],
            blocks: vec![[[Fq::ONE, Fq::ZERO], [Fq::ZERO, Fq::ONE]]; block_count],
        }
    }

    pub fn add(&self, other: &Self, f: &Field) -> Self {
        WedderburnTuple {
            gamma: [
                f.add(self.gamma[0], other.gamma[0]),
                f.add(self.gamma[1], other.gamma[1]),
            ],
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(x, y)| {
                    let mut s = [[Fq::ZERO; 2]; 2];
                    for r in 0..2 {
                        for c in 0..2 {
                            s[r][c] = f.add(x[r][c], y[r][c]);
                        }
                    }
                    s
                })
                .collect(),
        }
    }

    /// Componentwise product: pairs pointwise, blocks as matrices.
    pub fn mul(&self, other: &Self, f: &Field) -> Self {
        WedderburnTuple {
            gamma: [
                f.mul(self.gamma[0], other.gamma[0]),
                f.mul(self.gamma[1], other.gamma[1]),
            ],
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(x, y)| {
                    let mut p = [[Fq::ZERO; 2]; 2];
                    for r in 0..2 {
                        for c in 0..2 {
                            p[r][c] = f.add(f.mul(x[r][0], y[0][c]), f.mul(x[r][1], y[1][c]));
                        }
                    }
                    p
                })
                .collect(),
        }
    }

    /// `[g0, g1, B1_00, B1_01, B1_10, B1_11, B2_00, ..]`, length 2n.
    pub fn flatten(&self) -> Vec<Fq> {
        let mut v = self.gamma.to_vec();
        for b in &self.blocks {
            v.extend([b[0][0], b[0][1], b[1][0], b[1][1]]);
        }
        v
    }

    pub fn unflatten(v: &[Fq]) -> Self {
        WedderburnTuple {
            gamma: [v[0], v[1]],
            blocks: v[2..].chunks(4).map(|c| [[c[0], c[1]], [c[2], c[3]]]).collect(),
        }
    }
}

/// The isomorphism P for one `(F_q, n)` together with its inverse.
#[derive(Debug, Clone)]
pub struct Wedderburn {
    algebra: DihedralAlgebra,
    xi: Fq,
    /// `xi^k` for `k = 0..n`.
    xi_pows: Vec<Fq>,
    /// Column c is the flattened image of the c-th monomial.
    transform: Matrix,
    inverse: Matrix,
}

impl Wedderburn {
    pub fn new(alg: &DihedralAlgebra) -> Result<Self> {
        let n = alg.n();
        if n.is_multiple_of(2) {
            return Err(Error::EvenN(n));
        }
        let f = alg.field().clone();
        let xi = f.primitive_nth_root(n as u64)?;
        let xi_pows = (0..n).map(|k| f.pow_u(xi, k as u64)).collect();
        let mut w = Wedderburn {
            algebra: alg.clone(),
            xi,
            xi_pows,
            transform: Matrix::zeros(&f, 0, 0),
            inverse: Matrix::zeros(&f, 0, 0),
        };
        let cols: Vec<Vec<Fq>> = alg
            .group_elements()
            .map(|g| w.map_unchecked(&alg.monomial(g)).flatten())
            .collect();
        w.transform = Matrix::from_rows(&f, 2 * n, cols)?.transpose();
        w.inverse = w.transform.inverse().ok_or(Error::SingularTransform)?;
        Ok(w)
    }

    pub fn algebra(&self) -> &DihedralAlgebra {
        &self.algebra
    }

    pub fn xi(&self) -> Fq {
        self.xi
    }

    /// Number of M_2 blocks, (n-1)/2.
    pub fn block_count(&self) -> usize {
        (self.algebra.n() - 1) / 2
    }

    /// The 2n x 2n matrix of P on the monomial basis.
    pub fn transform(&self) -> &Matrix {
        &self.transform
    }

    fn xi_pow(&self, e: i64) -> Fq {
        let n = self.algebra.n() as i64;
        self.xi_pows[e.rem_euclid(n) as usize]
    }

    pub fn map(&self, u: &AlgebraElement) -> Result<WedderburnTuple> {
        if u.algebra() != self.algebra {
            return Err(Error::MixedContexts);
        }
        Ok(self.map_unchecked(u))
    }

    /// `gamma = (sum alpha + sum beta, sum alpha - sum beta)`,
    /// block j = `[[sum alpha_i xi^{ij}, sum beta_i xi^{-ij}], [sum beta_i xi^{ij}, sum alpha_i xi^{-ij}]]`.
    fn map_unchecked(&self, u: &AlgebraElement) -> WedderburnTuple {
        let f = self.algebra.field();
        let total = |v: &[Fq]| v.iter().fold(Fq::ZERO, |acc, &c| f.add(acc, c));
        let (sa, sb) = (total(u.alpha()), total(u.beta()));
        let twisted = |v: &[Fq], j: i64| {
            v.iter()
                .enumerate()
                .fold(Fq::ZERO, |acc, (i, &c)| f.add(acc, f.mul(c, self.xi_pow(i as i64 * j))))
        };
        let blocks = (1..=self.block_count() as i64)
            .map(|j| {
                [
                    [twisted(u.alpha(), j), twisted(u.beta(), -j)],
                    [twisted(u.beta(), j), twisted(u.alpha(), -j)],
                ]
            })
            .collect();
        WedderburnTuple {
            gamma: [f.add(sa, sb), f.sub(sa, sb)],
            blocks,
        }
    }

    pub fn inverse(&self, t: &WedderburnTuple) -> Result<AlgebraElement> {
        if t.blocks.len() != self.block_count() {
            return Err(Error::LengthMismatch {
                expected: self.block_count(),
                got: t.blocks.len(),
            });
        }
        let coords = self.inverse.apply(&t.flatten())?;
        self.algebra.phi_inv(&coords)
    }

    /// Runs `trials` random checks of `P(uv) = P(u)P(v)` and `P(u+v) = P(u)+P(v)`.
    pub fn check_homomorphism<R: Rng + ?Sized>(&self, trials: usize, rng: &mut R) -> HomomorphismReport {
        let f = self.algebra.field();
        let mut passed = 0;
        for _ in 0..trials {
            let u = self.algebra.random_element(rng);
            let v = self.algebra.random_element(rng);
            let (pu, pv) = (self.map_unchecked(&u), self.map_unchecked(&v));
            let mul_ok = self.map_unchecked(&(&u * &v)) == pu.mul(&pv, f);
            let add_ok = self.map_unchecked(&(&u + &v)) == pu.add(&pv, f);
            if mul_ok && add_ok {
                passed += 1;
            }
        }
        HomomorphismReport {
            trials,
            passed,
            failed: trials - passed,
        }
    }

    /// Generator matrix (RREF, coordinates) of the left ideal `P^{-1}(spec)`.
    pub fn code_from_ideal_spec(&self, spec: &IdealSpec) -> Result<Matrix> {
        let f = self.algebra.field();
        let count = self.block_count();
        if spec.summands.len() != count + 1 {
            return Err(Error::InvalidIdealSpec(format!(
                "expected {} summands, got {}",
                count + 1,
                spec.summands.len()
            )));
        }
        spec.validate()?;
        let mut tuples = Vec::new();
        let pair = |g: [Fq; 2]| {
            let mut t = WedderburnTuple::zero(count);
            t.gamma = g;
            t
        };
        match spec.summands[0] {
            Summand::Zero => {}
            Summand::Full => tuples.extend([pair([Fq::ONE, Fq::ZERO]), pair([Fq::ZERO, Fq::ONE])]),
            Summand::First => tuples.push(pair([Fq::ONE, Fq::ZERO])),
            Summand::Second => tuples.push(pair([Fq::ZERO, Fq::ONE])),
            Summand::Row(..) => unreachable!("validated"),
        }
        for (j, s) in spec.summands[1..].iter().enumerate() {
            let block = |b: Block| {
                let mut t = WedderburnTuple::zero(count);
                t.blocks[j] = b;
                t
            };
            let (o, z) = (Fq::ONE, Fq::ZERO);
            match *s {
                Summand::Zero => {}
                Summand::Full => {
                    tuples.extend([[[o, z], [z, z]], [[z, o], [z, z]], [[z, z], [o, z]], [[z, z], [z, o]]].map(block))
                }
                // M_2 [[x,y],[0,0]] is spanned by the row (x,y) in either row.
                Summand::Row(x, y) => tuples.extend([[[x, y], [z, z]], [[z, z], [x, y]]].map(block)),
                Summand::First | Summand::Second => unreachable!("validated"),
            }
        }
        if tuples.is_empty() {
            return Ok(Matrix::zeros(f, 0, self.algebra.dim()));
        }
        let rows = tuples
            .iter()
            .map(|t| self.inverse(t).map(|u| u.phi()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_rows(f, self.algebra.dim(), rows)?.row_basis())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomomorphismReport {
    pub trials: usize,
    pub passed: usize,
    pub failed: usize,
}

/// Left ideal of one Wedderburn summand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Summand {
    Zero,
    Full,
    /// `F_q + 0` inside the pair summand.
    First,
    /// `0 + F_q` inside the pair summand.
    Second,
    /// `M_2(F_q) [[x, y], [0, 0]]`, stored canonically as `(1, y)` or `(0, 1)`.
    Row(Fq, Fq),
}

impl Summand {
    /// Canonical row ideal; `(x, y) = (0, 0)` is rejected.
    pub fn row(f: &Field, x: Fq, y: Fq) -> Result<Summand> {
        if x.is_zero() {
            if y.is_zero() {
                return Err(Error::InvalidRowSpec);
            }
            return Ok(Summand::Row(Fq::ZERO, Fq::ONE));
        }
        let y = f.div(y, x).expect("x is nonzero");
        Ok(Summand::Row(Fq::ONE, y))
    }
}

/// One summand ideal per Wedderburn component; position 0 is the pair `F_q + F_q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSpec {
    pub summands: Vec<Summand>,
}

impl IdealSpec {
    pub fn new(summands: Vec<Summand>) -> Result<Self> {
        let spec = IdealSpec { summands };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        let Some((head, tail)) = self.summands.split_first() else {
            return Err(Error::InvalidIdealSpec("empty spec".into()));
        };
        if matches!(head, Summand::Row(..)) {
            return Err(Error::InvalidIdealSpec(
                "the pair summand takes Zero, Full, First or Second".into(),
            ));
        }
        for s in tail {
            match s {
                Summand::First | Summand::Second => {
                    return Err(Error::InvalidIdealSpec(
                        "First/Second only apply to the pair summand".into(),
                    ))
                }
                Summand::Row(x, y) if x.is_zero() && y.is_zero() => return Err(Error::InvalidRowSpec),
                _ => {}
            }
        }
        Ok(())
    }

    /// Sum of summand dimensions: M_2 = 4, row = 2, pair = 2, half pair = 1.
    pub fn dimension(&self) -> usize {
        self.summands
            .iter()
            .enumerate()
            .map(|(i, s)| match (i, s) {
                (_, Summand::Zero) => 0,
                (0, Summand::Full) => 2,
                (_, Summand::Full) => 4,
                (_, Summand::First | Summand::Second) => 1,
                (_, Summand::Row(..)) => 2,
            })
            .sum()
    }

    pub fn random<R: Rng + ?Sized>(f: &Field, n: usize, rng: &mut R) -> IdealSpec {
        let head = [Summand::Zero, Summand::Full, Summand::First, Summand::Second][rng.gen_range(0..4)];
        let mut summands = vec![head];
        for _ in 0..(n - 1) / 2 {
            summands.push(match rng.gen_range(0..3) {
                0 => Summand::Zero,
                1 => Summand::Full,
                _ => loop {
                    if let Ok(s) = Summand::row(f, f.random(rng), f.random(rng)) {
                        break s;
                    }
                },
            });
        }
        IdealSpec { summands }
    }
}
