use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("cannot parse polynomial {input:?}: {reason}")]
    Polynomial { input: String, reason: String },
    #[error("unknown tangle letter {0:?} (expected X1, X2, U1 or U2)")]
    Letter(String),
    #[error("unknown generator {0:?} (expected T, C or E)")]
    Generator(String),
    #[error("unknown diagram element {0:?} (expected 1_3, U1, U2, r or s)")]
    Element(String),
    #[error("malformed b-file line {line}: {text:?}")]
    BFile { line: usize, text: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("edge {edge:?} has {count} endpoints, expected 2")]
    EdgeEndpoints { edge: String, count: usize },
    #[error("boundary pairing is not one of the five planar matchings: {0}")]
    NonPlanarPairing(String),
    #[error("choice vector has {got} bits for {expected} crossings")]
    ChoiceLength { expected: usize, got: usize },
    #[error("diagram has {crossings} crossings, above the limit of {limit}")]
    CrossingLimit { crossings: usize, limit: usize },
    #[error("stored diagram for generator {name} does not reproduce its bracket tuple")]
    GeneratorSelfCheck { name: char },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BracketError {
    #[error("p^2 - q^2 = {0} is not divisible by 4")]
    NotDivisibleByFour(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("denominator constant term {0} is not 1 or -1")]
    NonUnitDenominator(String),
}
