//! The five-element diagram monoid on three strands.
//!
//! Products are read left to right: `multiply(a, b)` glues the right boundary
//! of `a` to the left boundary of `b`. The two "diagonal" elements are fixed
//! by `r = U2·U1` and `s = U1·U2`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum TlElement {
    #[serde(rename = "1_3")]
    Id3,
    U1,
    U2,
    #[serde(rename = "r")]
    R,
    #[serde(rename = "s")]
    S,
}

impl TlElement {
    /// Basis order used by bracket tuples: (1_3, U1, U2, r, s).
    pub const ALL: [TlElement; 5] = [
        TlElement::Id3,
        TlElement::U1,
        TlElement::U2,
        TlElement::R,
        TlElement::S,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Self> {
        Self::ALL.get(i).copied()
    }

    pub fn name(self) -> &'static str {
        match self {
            TlElement::Id3 => "1_3",
            TlElement::U1 => "U1",
            TlElement::U2 => "U2",
            TlElement::R => "r",
            TlElement::S => "s",
        }
    }

    /// Top-bottom reflection: swaps U1 with U2 and r with s.
    pub fn mirror(self) -> Self {
        match self {
            TlElement::Id3 => TlElement::Id3,
            TlElement::U1 => TlElement::U2,
            TlElement::U2 => TlElement::U1,
            TlElement::R => TlElement::S,
            TlElement::S => TlElement::R,
        }
    }
}

impl fmt::Display for TlElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TlElement {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        Self::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| ParseError::Element(s.to_string()))
    }
}

/// `loops` disjoint circles next to `element`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct ScaledTl {
    pub loops: u32,
    pub element: TlElement,
}

impl ScaledTl {
    pub const fn new(loops: u32, element: TlElement) -> Self {
        ScaledTl { loops, element }
    }

    /// Multiply two loop-scaled elements, accumulating circles.
    pub fn then(self, other: ScaledTl) -> ScaledTl {
        let prod = multiply(self.element, other.element);
        ScaledTl::new(self.loops + other.loops + prod.loops, prod.element)
    }
}

impl From<TlElement> for ScaledTl {
    fn from(element: TlElement) -> Self {
        ScaledTl::new(0, element)
    }
}

const fn st(loops: u32, element: TlElement) -> ScaledTl {
    ScaledTl::new(loops, element)
}

use TlElement::{Id3, R, S, U1, U2};

// Rows: left factor, columns: right factor, both in basis order.
const TABLE: [[ScaledTl; 5]; 5] = [
    [st(0, Id3), st(0, U1), st(0, U2), st(0, R), st(0, S)],
    [st(0, U1), st(1, U1), st(0, S), st(0, U1), st(1, S)],
    [st(0, U2), st(0, R), st(1, U2), st(1, R), st(0, U2)],
    [st(0, R), st(1, R), st(0, U2), st(0, R), st(1, U2)],
    [st(0, S), st(0, U1), st(1, S), st(1, U1), st(0, S)],
];

pub fn multiply(left: TlElement, right: TlElement) -> ScaledTl {
    TABLE[left.index()][right.index()]
}

/// Circles produced by joining left endpoint i to right endpoint i.
pub fn closure_loops(e: TlElement) -> u32 {
    match e {
        TlElement::Id3 => 3,
        TlElement::U1 | TlElement::U2 => 2,
        TlElement::R | TlElement::S => 1,
    }
}
