//! Rational generating functions `Σ_n <closure(B^n)> y^n` and the
//! coefficient triangles `s_B(n, k)` read off them.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bracket::{pq_invariants, BracketVector};
use crate::error::{BracketError, SeriesError};
use crate::generators::Generator;
use crate::poly::{BivariatePoly, Coefficient, Polynomial};

/// `numerator / denominator`, both polynomials in `y` over `Z[x]`. The
/// denominator's constant term is `1` or `-1`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RationalTerm {
    numerator: BivariatePoly,
    denominator: BivariatePoly,
}

impl RationalTerm {
    pub fn new(numerator: BivariatePoly, denominator: BivariatePoly) -> Result<Self, SeriesError> {
        let d0 = denominator.coeff(0);
        if d0 != Polynomial::one() && d0 != -Polynomial::one() {
            return Err(SeriesError::NonUnitDenominator(d0.to_string()));
        }
        Ok(RationalTerm {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &BivariatePoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &BivariatePoly {
        &self.denominator
    }

    /// Series coefficients `c_0..=c_n` from `D · Σ c_k y^k = N`, i.e.
    /// `c_k = d_0 (N_k - Σ_{j≥1} d_j c_{k-j})` since `d_0 = ±1`.
    pub fn expand(&self, n: usize) -> Vec<Polynomial> {
        let d = self.denominator.coeffs();
        let inv = &d[0];
        let mut out: Vec<Polynomial> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.numerator.coeff(k);
            for j in 1..d.len().min(k + 1) {
                acc -= &(&d[j] * &out[k - j]);
            }
            out.push(&acc * inv);
        }
        out
    }
}

impl fmt::Display for RationalTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})/({})",
            self.numerator.render("y"),
            self.denominator.render("y")
        )
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RationalGf {
    pub terms: Vec<RationalTerm>,
}

impl RationalGf {
    pub fn expand(&self, n: usize) -> Vec<Polynomial> {
        let mut out = vec![Polynomial::zero(); n + 1];
        for term in &self.terms {
            for (slot, c) in out.iter_mut().zip(term.expand(n)) {
                *slot += &c;
            }
        }
        out
    }
}

impl fmt::Display for RationalGf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `x(2 - p y)/(1 - p y + m y^2) + x(x^2 - 2)/(1 - a y)` with
/// `m = (p^2 - q^2)/4`.
pub fn gf_from_tuple(v: &BracketVector) -> Result<RationalGf, BracketError> {
    let pq = pq_invariants(v);
    let m = pq.eigen_product()?;
    let x = Polynomial::x();
    let one = Polynomial::one();
    let first = RationalTerm::new(
        BivariatePoly::from_coeffs(vec![&Polynomial::constant(2) * &x, -(&pq.p * &x)]),
        BivariatePoly::from_coeffs(vec![one.clone(), -&pq.p, m]),
    )
    .expect("constant term is 1");
    let second = RationalTerm::new(
        BivariatePoly::constant(&x * &Polynomial::from_i64s(&[-2, 0, 1])),
        BivariatePoly::from_coeffs(vec![one, -&v.a]),
    )
    .expect("constant term is 1");
    Ok(RationalGf {
        terms: vec![first, second],
    })
}

pub fn expand(gf: &RationalGf, n: usize) -> Vec<Polynomial> {
    gf.expand(n)
}

/// Rows `n = 0..`, row `n` listing the `x^k` coefficients of the `n`-th
/// closure bracket for `k = 0..=deg`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoefficientTriangle {
    pub rows: Vec<Vec<BigInt>>,
}

impl Serialize for CoefficientTriangle {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<Coefficient>> = self
            .rows
            .iter()
            .map(|r| r.iter().cloned().map(Coefficient).collect())
            .collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CoefficientTriangle {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<Coefficient>>::deserialize(deserializer)?;
        Ok(CoefficientTriangle {
            rows: rows
                .into_iter()
                .map(|r| r.into_iter().map(|c| c.0).collect())
                .collect(),
        })
    }
}

impl CoefficientTriangle {
    pub fn from_polynomials(polys: &[Polynomial]) -> Self {
        CoefficientTriangle {
            rows: polys.iter().map(|p| p.coeffs().to_vec()).collect(),
        }
    }

    pub fn from_u64_rows(rows: &[&[u64]]) -> Self {
        CoefficientTriangle {
            rows: rows
                .iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        }
    }

    pub fn row(&self, n: usize) -> Option<&[BigInt]> {
        self.rows.get(n).map(Vec::as_slice)
    }

    /// Entry `k` of every row, zero where the row is shorter.
    pub fn column(&self, k: usize) -> Vec<BigInt> {
        self.rows
            .iter()
            .map(|r| r.get(k).cloned().unwrap_or_default())
            .collect()
    }

    pub fn row_sums(&self) -> Vec<BigInt> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.rows.iter().flatten().all(|v| !v.is_negative())
    }

    /// Row by row, `k` ascending.
    pub fn row_major(&self) -> Vec<BigInt> {
        self.rows.iter().flatten().cloned().collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for CoefficientTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, row) in self.rows.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{n}: {}", cells.join(" "))?;
        }
        Ok(())
    }
}

pub fn coefficient_table(g: Generator, n: usize) -> CoefficientTriangle {
    let gf = gf_from_tuple(&g.tuple()).expect("generator tuples have integral m");
    CoefficientTriangle::from_polynomials(&gf.expand(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::{closed_form_bracket, closure, power};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    fn big_row(r: &[u64]) -> Vec<BigInt> {
        r.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn t_generating_function_shape() {
        let gf = gf_from_tuple(&Generator::T.tuple()).unwrap();
        let first = &gf.terms[0];
        assert_eq!(first.numerator().coeffs(), &[p(&[0, 2]), p(&[0, -3, -2])]);
        assert_eq!(
            first.denominator().coeffs(),
            &[p(&[1]), p(&[-3, -2]), p(&[1, 2, 1])]
        );
        let second = &gf.terms[1];
        assert_eq!(second.numerator().coeffs(), &[p(&[0, -2, 0, 1])]);
        assert_eq!(second.denominator().coeffs(), &[p(&[1]), p(&[-1])]);
    }

    #[test]
    fn e_denominator() {
        let gf = gf_from_tuple(&Generator::E.tuple()).unwrap();
        assert_eq!(gf.terms[0].denominator().coeff(2), p(&[16, 48, 52, 24, 4]));
        assert_eq!(gf.terms[1].denominator().coeff(1), p(&[-4, -4, -1]));
    }

    #[test]
    fn identity_tuple_series_is_constant() {
        let gf = gf_from_tuple(&BracketVector::unit()).unwrap();
        assert_eq!(
            gf.terms[0].denominator().coeffs(),
            &[p(&[1]), p(&[-2]), p(&[1])]
        );
        assert!(gf.expand(6).iter().all(|c| *c == p(&[0, 0, 0, 1])));
    }

    #[test]
    fn expansions() {
        let t = gf_from_tuple(&Generator::T.tuple()).unwrap();
        assert_eq!(
            t.expand(2),
            vec![p(&[0, 0, 0, 1]), p(&[0, 1, 2, 1]), p(&[0, 5, 8, 3])]
        );
        let c = gf_from_tuple(&Generator::C.tuple()).unwrap();
        assert_eq!(c.expand(1), vec![p(&[0, 0, 0, 1]), p(&[0, 1, 3, 3, 1])]);
        assert_eq!(c.expand(0), vec![p(&[0, 0, 0, 1])]);
    }

    #[test]
    fn negative_unit_denominator_expands() {
        let term = RationalTerm::new(
            BivariatePoly::constant(p(&[1])),
            BivariatePoly::from_coeffs(vec![p(&[-1]), p(&[1])]),
        )
        .unwrap();
        // 1/(y - 1) = -1 - y - y^2 - …
        assert_eq!(term.expand(2), vec![p(&[-1]), p(&[-1]), p(&[-1])]);
        assert!(RationalTerm::new(
            BivariatePoly::constant(p(&[1])),
            BivariatePoly::constant(p(&[2]))
        )
        .is_err());
    }

    #[test]
    fn table_rows() {
        assert_eq!(
            coefficient_table(Generator::T, 5).row(5).unwrap(),
            big_row(&[0, 121, 340, 356, 170, 35, 2]).as_slice()
        );
        assert_eq!(
            coefficient_table(Generator::C, 4).row(4).unwrap(),
            big_row(&[0, 225, 796, 1186, 1008, 569, 232, 67, 12, 1]).as_slice()
        );
        assert_eq!(
            coefficient_table(Generator::E, 5).row(5).unwrap(),
            big_row(&[
                0, 10201, 59660, 156624, 244280, 252460, 182544, 94960, 35904, 9800, 1880, 242, 20,
                1
            ])
            .as_slice()
        );
    }

    #[test]
    fn csv_and_columns() {
        let t = coefficient_table(Generator::T, 2);
        assert_eq!(t.to_csv(), "0,0,0,1\n0,1,2,1\n0,5,8,3\n");
        assert_eq!(t.column(1), big_row(&[0, 1, 5]));
        assert_eq!(t.column(9), big_row(&[0, 0, 0]));
        assert_eq!(t.row_sums(), big_row(&[1, 4, 16]));
    }

    #[test]
    fn agrees_with_closed_form_and_powers() {
        let v = BracketVector::new(p(&[1, -2]), p(&[3]), p(&[0, 1]), p(&[-1, 1]), p(&[2]));
        let series = gf_from_tuple(&v).unwrap().expand(10);
        for (n, c) in series.iter().enumerate() {
            assert_eq!(c, &closed_form_bracket(&v, n).unwrap());
            assert_eq!(c, &closure(&power(&v, n)));
        }
    }
}
