//! The three flat Turk's-head generators: the three-lead Turk's head `T`,
//! the chain sinnet `C` and the figure-eight chain `E`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bracket::BracketVector;
use crate::error::{DiagramError, ParseError};
use crate::oracle::{self, DiagramBuilder, ShadowDiagram, StateSum, TangleLetter, TangleWord};
use crate::poly::Polynomial;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Generator {
    T,
    C,
    E,
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::T, Generator::C, Generator::E];

    pub fn name(self) -> char {
        match self {
            Generator::T => 'T',
            Generator::C => 'C',
            Generator::E => 'E',
        }
    }

    pub fn crossings(self) -> usize {
        match self {
            Generator::T => 2,
            Generator::C => 3,
            Generator::E => 4,
        }
    }

    pub fn tuple(self) -> BracketVector {
        let p = Polynomial::from_i64s;
        match self {
            Generator::T => BracketVector::from_ints([1, 1, 1, 0, 1]),
            Generator::C => BracketVector::new(p(&[2, 1]), p(&[2, 1]), p(&[1]), p(&[]), p(&[1])),
            Generator::E => {
                BracketVector::new(p(&[4, 4, 1]), p(&[2, 1]), p(&[2, 1]), p(&[]), p(&[1]))
            }
        }
    }

    /// Braid word, where the generator is one.
    pub fn word(self) -> Option<TangleWord> {
        match self {
            Generator::T => Some(TangleWord(vec![TangleLetter::X1, TangleLetter::X2])),
            Generator::C | Generator::E => None,
        }
    }

    /// Append one copy of the generator to `builder`.
    ///
    /// `C` is a crossing on the top two strands followed by a vertical clasp
    /// on the bottom two; `E` is a clasp on the top pair followed by one on
    /// the bottom pair.
    pub fn append_to(self, builder: &mut DiagramBuilder) {
        match self {
            Generator::T => {
                builder.crossing(0).crossing(1);
            }
            Generator::C => {
                builder.crossing(0).clasp(1);
            }
            Generator::E => {
                builder.clasp(0).clasp(1);
            }
        }
    }

    /// Diagram of the `n`-fold product of the generator with itself.
    pub fn power_diagram(self, n: usize) -> ShadowDiagram {
        let mut builder = DiagramBuilder::new();
        for _ in 0..n {
            self.append_to(&mut builder);
        }
        builder.build()
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl FromStr for Generator {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        match s {
            "T" => Ok(Generator::T),
            "C" => Ok(Generator::C),
            "E" => Ok(Generator::E),
            _ => Err(ParseError::Generator(s.to_string())),
        }
    }
}

pub fn generator_tuple(name: &str) -> Result<BracketVector, ParseError> {
    name.parse::<Generator>().map(Generator::tuple)
}

/// The stored diagram, checked against the tuple by brute force.
pub fn generator_diagram(g: Generator) -> Result<ShadowDiagram, DiagramError> {
    let d = g.power_diagram(1);
    match oracle::enumerate_states(&d)? {
        StateSum::Tangle(v) if v == g.tuple() && d.crossing_count() == g.crossings() => Ok(d),
        _ => Err(DiagramError::GeneratorSelfCheck { name: g.name() }),
    }
}
