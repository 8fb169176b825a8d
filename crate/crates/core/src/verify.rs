//! Self-checks run by the `verify` command. Each returns a one-line summary
//! on success or names the first identity that failed and where.

use std::fmt;

use thiserror::Error;

use crate::bracket::{
    charpoly, charpoly_factored, closed_form_bracket, closure, powers, states_matrix,
    tuple_recurrence,
};
use crate::error::DiagramError;
use crate::generators::{generator_diagram, Generator};
use crate::oracle::{enumerate_states_with, EnumerationOptions, StateSum};
use crate::reference::published_table;
use crate::series::{coefficient_table, gf_from_tuple};
use crate::tl3::TlElement;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("FAIL {identity} at {location}")]
    Mismatch { identity: String, location: String },
    #[error(transparent)]
    Refused(#[from] DiagramError),
}

fn mismatch(identity: &str, location: impl fmt::Display) -> VerifyError {
    VerifyError::Mismatch {
        identity: identity.to_string(),
        location: location.to_string(),
    }
}

/// Compare rows `0..=rows` against the published table (clamped to the rows
/// that were published).
pub fn verify_tables(g: Generator, rows: usize) -> Result<String, VerifyError> {
    let published = published_table(g);
    let last = rows.min(published.rows.len() - 1);
    let computed = coefficient_table(g, last);
    for n in 0..=last {
        if computed.row(n) != published.row(n) {
            return Err(mismatch("published table row", format!("{g} row {n}")));
        }
    }
    Ok(format!("PASS tables {g}: rows 0..={last} match"))
}

/// Brute-force state sums of the `n`-th power diagrams against the algebra,
/// for both the open tangle and its closure.
pub fn verify_oracle(
    g: Generator,
    max_n: usize,
    opts: EnumerationOptions,
) -> Result<String, VerifyError> {
    generator_diagram(g)?;
    let algebra = powers(&g.tuple(), max_n);
    for (n, expected) in algebra.iter().enumerate() {
        let d = g.power_diagram(n);
        match enumerate_states_with(&d, opts)? {
            StateSum::Tangle(v) if v == *expected => {}
            _ => return Err(mismatch("oracle tuple = power", format!("{g}^{n}"))),
        }
        match enumerate_states_with(&d.closure(), opts)? {
            StateSum::Closed(p) if p == closure(expected) => {}
            _ => {
                return Err(mismatch(
                    "oracle closure = closure(power)",
                    format!("{g}^{n}"),
                ))
            }
        }
    }
    Ok(format!("PASS oracle {g}: n = 0..={max_n}"))
}

pub fn verify_charpoly(g: Generator) -> Result<String, VerifyError> {
    let v = g.tuple();
    let expected = charpoly_factored(&v).map_err(|e| mismatch("(p^2-q^2)/4 integral", e))?;
    if charpoly(&states_matrix(&v)) != expected {
        return Err(mismatch("det(M - λI) = -(λ-a)(λ²-pλ+m)²", g));
    }
    Ok(format!("PASS charpoly {g}"))
}

/// Closure of powers, closed form and series agree for `n ≤ max_n`, and each
/// tuple entry follows the order-3 recurrence.
pub fn verify_recurrence(g: Generator, max_n: usize) -> Result<String, VerifyError> {
    let v = g.tuple();
    let seq = powers(&v, max_n + 3);
    let series = gf_from_tuple(&v)
        .map_err(|e| mismatch("generating function", e))?
        .expand(max_n);
    for (n, coeff) in series.iter().enumerate() {
        let direct = closure(&seq[n]);
        let closed = closed_form_bracket(&v, n).map_err(|e| mismatch("closed form", e))?;
        if direct != closed {
            return Err(mismatch(
                "closure(power) = closed form",
                format!("{g} n={n}"),
            ));
        }
        if direct != *coeff {
            return Err(mismatch(
                "closure(power) = series coefficient",
                format!("{g} n={n}"),
            ));
        }
    }
    let [c2, c1, c0] = tuple_recurrence(&v).map_err(|e| mismatch("recurrence", e))?;
    for n in 0..=max_n {
        for e in TlElement::ALL {
            let rhs = &(&(&c2 * &seq[n + 2][e]) + &(&c1 * &seq[n + 1][e])) + &(&c0 * &seq[n][e]);
            if seq[n + 3][e] != rhs {
                return Err(mismatch(
                    "order-3 tuple recurrence",
                    format!("{g} n={n} slot {e}"),
                ));
            }
        }
    }
    Ok(format!("PASS recurrence {g}: n = 0..={max_n}"))
}
