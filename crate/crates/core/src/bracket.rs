//! Bracket 5-tuples of 3-tangles and the algebra built on them.
//!
//! A tuple `[a, b, c, d, e]` stands for `a<1_3> + b<U1> + c<U2> + d<r> + e<s>`.
//! Composition is the bilinear extension of [`tl3::multiply`], with every
//! circle produced by a product becoming a factor of `x`.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::BracketError;
use crate::poly::{BivariatePoly, Polynomial};
use crate::tl3::{self, TlElement};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct BracketVector {
    pub a: Polynomial,
    pub b: Polynomial,
    pub c: Polynomial,
    pub d: Polynomial,
    pub e: Polynomial,
}

impl BracketVector {
    pub fn new(a: Polynomial, b: Polynomial, c: Polynomial, d: Polynomial, e: Polynomial) -> Self {
        BracketVector { a, b, c, d, e }
    }

    pub fn from_array([a, b, c, d, e]: [Polynomial; 5]) -> Self {
        BracketVector { a, b, c, d, e }
    }

    /// Tuple with integer constant entries.
    pub fn from_ints(v: [i64; 5]) -> Self {
        Self::from_array(v.map(Polynomial::constant))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// The identity tangle `1_3`.
    pub fn unit() -> Self {
        Self::basis(TlElement::Id3)
    }

    pub fn basis(e: TlElement) -> Self {
        let mut v = Self::zero();
        v[e] = Polynomial::one();
        v
    }

    pub fn to_array(&self) -> [Polynomial; 5] {
        [
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
            self.e.clone(),
        ]
    }

    pub fn iter(&self) -> impl Iterator<Item = (TlElement, &Polynomial)> {
        TlElement::ALL.into_iter().map(move |e| (e, &self[e]))
    }

    /// Top-bottom reflection of the underlying tangle: `b <-> c`, `d <-> e`.
    pub fn mirror(&self) -> Self {
        Self::new(
            self.a.clone(),
            self.c.clone(),
            self.b.clone(),
            self.e.clone(),
            self.d.clone(),
        )
    }

    /// Exchange the `r` and `s` slots only.
    pub fn swap_rs(&self) -> Self {
        Self::new(
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.e.clone(),
            self.d.clone(),
        )
    }

    pub fn scale(&self, k: &Polynomial) -> Self {
        Self::from_array(self.to_array().map(|p| &p * k))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for e in TlElement::ALL {
            out[e] += &other[e];
        }
        out
    }

    /// Sum of all five entries evaluated at `x = 1`.
    pub fn state_count(&self) -> BigInt {
        self.iter().map(|(_, p)| p.evaluate_i64(1)).sum()
    }
}

impl Index<TlElement> for BracketVector {
    type Output = Polynomial;

    fn index(&self, e: TlElement) -> &Polynomial {
        match e {
            TlElement::Id3 => &self.a,
            TlElement::U1 => &self.b,
            TlElement::U2 => &self.c,
            TlElement::R => &self.d,
            TlElement::S => &self.e,
        }
    }
}

impl IndexMut<TlElement> for BracketVector {
    fn index_mut(&mut self, e: TlElement) -> &mut Polynomial {
        match e {
            TlElement::Id3 => &mut self.a,
            TlElement::U1 => &mut self.b,
            TlElement::U2 => &mut self.c,
            TlElement::R => &mut self.d,
            TlElement::S => &mut self.e,
        }
    }
}

impl fmt::Display for BracketVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{},{},{},{},{}]",
            self.a, self.b, self.c, self.d, self.e
        )
    }
}

/// Which diagram carries the label `r`.
///
/// `Table` is the convention of the multiplication table (`s = U1·U2`).
/// `Swapped` relabels so that `r = U1·U2`; products under it are the
/// table products conjugated by [`BracketVector::swap_rs`].
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum RsConvention {
    #[default]
    Table,
    Swapped,
}

/// Product of the tangles `v` (left) and `w` (right).
pub fn compose(v: &BracketVector, w: &BracketVector) -> BracketVector {
    let mut out = BracketVector::zero();
    for (left, p) in v.iter() {
        if p.is_zero() {
            continue;
        }
        for (right, q) in w.iter() {
            if q.is_zero() {
                continue;
            }
            let prod = tl3::multiply(left, right);
            out[prod.element] += &(p * q).shift(prod.loops as usize);
        }
    }
    out
}

pub fn compose_with(
    v: &BracketVector,
    w: &BracketVector,
    convention: RsConvention,
) -> BracketVector {
    match convention {
        RsConvention::Table => compose(v, w),
        RsConvention::Swapped => compose(&v.swap_rs(), &w.swap_rs()).swap_rs(),
    }
}

/// `v` composed with itself `n` times; the unit tuple for `n = 0`.
pub fn power(v: &BracketVector, n: usize) -> BracketVector {
    (0..n).fold(BracketVector::unit(), |acc, _| compose(v, &acc))
}

/// All of `power(v, 0..=n)`.
pub fn powers(v: &BracketVector, n: usize) -> Vec<BracketVector> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(BracketVector::unit());
    for k in 0..n {
        out.push(compose(v, &out[k]));
    }
    out
}

/// Bracket of the closure: each basis diagram weighted by `x^loops`.
pub fn closure(v: &BracketVector) -> Polynomial {
    v.iter()
        .map(|(e, p)| p.shift(tl3::closure_loops(e) as usize))
        .sum()
}

/// 5×5 matrix over `Z[x]`, rows and columns in basis order (a, b, c, d, e).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StatesMatrix {
    pub entries: [[Polynomial; 5]; 5],
}

impl StatesMatrix {
    pub fn identity() -> Self {
        let mut entries: [[Polynomial; 5]; 5] = Default::default();
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = Polynomial::one();
        }
        StatesMatrix { entries }
    }

    pub fn from_rows(rows: [[Polynomial; 5]; 5]) -> Self {
        StatesMatrix { entries: rows }
    }

    pub fn get(&self, row: usize, col: usize) -> &Polynomial {
        &self.entries[row][col]
    }

    pub fn apply(&self, w: &BracketVector) -> BracketVector {
        let w = w.to_array();
        BracketVector::from_array(std::array::from_fn(|i| {
            self.entries[i].iter().zip(&w).map(|(m, x)| m * x).sum()
        }))
    }

    pub fn mul(&self, other: &StatesMatrix) -> StatesMatrix {
        StatesMatrix {
            entries: std::array::from_fn(|i| {
                std::array::from_fn(|j| {
                    (0..5)
                        .map(|k| &self.entries[i][k] * &other.entries[k][j])
                        .sum()
                })
            }),
        }
    }

    pub fn pow(&self, n: usize) -> StatesMatrix {
        (0..n).fold(Self::identity(), |acc, _| self.mul(&acc))
    }

    /// Conjugate by the permutation `perm` of basis indices:
    /// result[perm[i]][perm[j]] = self[i][j].
    pub fn permuted(&self, perm: [usize; 5]) -> StatesMatrix {
        let mut entries: [[Polynomial; 5]; 5] = Default::default();
        for i in 0..5 {
            for j in 0..5 {
                entries[perm[i]][perm[j]] = self.entries[i][j].clone();
            }
        }
        StatesMatrix { entries }
    }
}

impl fmt::Display for StatesMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Matrix `M` with `compose(v, w) = M · w` for every `w`, built one column
/// per basis element.
pub fn states_matrix(v: &BracketVector) -> StatesMatrix {
    states_matrix_with(v, RsConvention::Table)
}

pub fn states_matrix_with(v: &BracketVector, convention: RsConvention) -> StatesMatrix {
    let mut entries: [[Polynomial; 5]; 5] = Default::default();
    for (j, basis) in TlElement::ALL.into_iter().enumerate() {
        let column = compose_with(v, &BracketVector::basis(basis), convention).to_array();
        for (i, value) in column.into_iter().enumerate() {
            entries[i][j] = value;
        }
    }
    StatesMatrix { entries }
}

/// The pair `p` and `q^2` governing the non-trivial eigenvalues
/// `(p ± q) / 2` of the states matrix.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PqInvariants {
    pub p: Polynomial,
    pub qsq: Polynomial,
}

impl PqInvariants {
    /// `(p^2 - q^2) / 4`, the product of the two eigenvalues.
    pub fn eigen_product(&self) -> Result<Polynomial, BracketError> {
        let diff = &(&self.p * &self.p) - &self.qsq;
        diff.div_exact_scalar(&BigInt::from(4))
            .ok_or_else(|| BracketError::NotDivisibleByFour(diff.to_string()))
    }
}

pub fn pq_invariants(v: &BracketVector) -> PqInvariants {
    let BracketVector { a, b, c, d, e } = v;
    let x = Polynomial::x();
    let two = Polynomial::constant(2);
    let four = Polynomial::constant(4);
    let p = &(&(b + c) * &x) + &(&(&two * a) + &(d + e));
    let x2_coeff = &(&(&(b * b) - &(&two * &(b * c))) + &(c * c)) + &(&four * &(d * e));
    let x1_coeff = &two * &(&(b + c) * &(d + e));
    let x0_coeff = &(&(&four * &(b * c)) + &(d * d)) + &(&(e * e) - &(&two * &(d * e)));
    let qsq = &(&(&x2_coeff * &x.pow(2)) + &(&x1_coeff * &x)) + &x0_coeff;
    PqInvariants { p, qsq }
}

/// Closure bracket of the `n`-th power, evaluated without square roots.
///
/// With `u_n = x(λ+^n + λ-^n)` for the eigenvalues `λ± = (p ± q)/2`,
/// `u_0 = 2x`, `u_1 = px`, `u_{n+1} = p u_n - m u_{n-1}` where `m = (p^2-q^2)/4`.
/// The result is `x a^n (x^2 - 2) + u_n`.
pub fn closed_form_bracket(v: &BracketVector, n: usize) -> Result<Polynomial, BracketError> {
    let pq = pq_invariants(v);
    let m = pq.eigen_product()?;
    let x = Polynomial::x();
    let mut prev = &Polynomial::constant(2) * &x;
    let mut cur = &pq.p * &x;
    let u = if n == 0 {
        prev
    } else {
        for _ in 1..n {
            let next = &(&pq.p * &cur) - &(&m * &prev);
            prev = std::mem::replace(&mut cur, next);
        }
        cur
    };
    let kink = &x * &Polynomial::from_i64s(&[-2, 0, 1]);
    Ok(&(&kink * &v.a.pow(n as u32)) + &u)
}

/// Coefficients `[c2, c1, c0]` of the order-3 recurrence
/// `t_{n+3} = c2 t_{n+2} + c1 t_{n+1} + c0 t_n` satisfied by every entry of
/// `power(v, n)`; it comes from `(λ - a)(λ^2 - pλ + m)`.
pub fn tuple_recurrence(v: &BracketVector) -> Result<[Polynomial; 3], BracketError> {
    let pq = pq_invariants(v);
    let m = pq.eigen_product()?;
    let a = &v.a;
    Ok([a + &pq.p, -(&(a * &pq.p) + &m), a * &m])
}

/// `det(M - λI)` by Berkowitz's division-free algorithm.
pub fn charpoly(m: &StatesMatrix) -> BivariatePoly {
    let rows: Vec<Vec<Polynomial>> = m.entries.iter().map(|r| r.to_vec()).collect();
    let descending = berkowitz(&rows);
    let n = rows.len();
    // `descending` holds det(λI - M) from λ^n down; flip to ascending and
    // multiply by (-1)^n.
    let sign = if n.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    BivariatePoly::from_coeffs(
        descending
            .into_iter()
            .rev()
            .map(|c| c.scale(&sign))
            .collect(),
    )
}

/// Coefficients of `det(λI - A)` from the leading power down.
fn berkowitz(a: &[Vec<Polynomial>]) -> Vec<Polynomial> {
    let n = a.len();
    if n == 0 {
        return vec![Polynomial::one()];
    }
    let mut poly = vec![Polynomial::one(), -&a[0][0]];
    for r in 1..n {
        // Leading r×r block A', row R = a[r][..r], column S = a[..r][r].
        let row = &a[r][..r];
        let mut col: Vec<Polynomial> = (0..r).map(|i| a[i][r].clone()).collect();
        let mut toeplitz = Vec::with_capacity(r + 2);
        toeplitz.push(Polynomial::one());
        toeplitz.push(-&a[r][r]);
        for k in 0..r {
            let dot: Polynomial = row.iter().zip(&col).map(|(x, y)| x * y).sum();
            toeplitz.push(-dot);
            if k + 1 < r {
                col = (0..r)
                    .map(|i| (0..r).map(|j| &a[i][j] * &col[j]).sum())
                    .collect();
            }
        }
        let mut next = vec![Polynomial::zero(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, c) in poly.iter().enumerate() {
                if i >= j && i - j < toeplitz.len() {
                    *slot += &(&toeplitz[i - j] * c);
                }
            }
        }
        poly = next;
    }
    poly
}

/// `-(λ - a)(λ^2 - pλ + m)^2`, the factored form `charpoly` must match.
pub fn charpoly_factored(v: &BracketVector) -> Result<BivariatePoly, BracketError> {
    let pq = pq_invariants(v);
    let m = pq.eigen_product()?;
    let lam = BivariatePoly::var();
    let linear = &lam - &BivariatePoly::constant(v.a.clone());
    let quadratic = BivariatePoly::from_coeffs(vec![m, -&pq.p, Polynomial::one()]);
    Ok(-&(&linear * &quadratic.pow(2)))
}
