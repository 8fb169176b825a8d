//! Brute-force state sums over planar shadow diagrams.
//!
//! A diagram is a list of flat 4-valent crossings, each given by the four
//! incident edge labels in cyclic order, plus (for a 3-tangle) the edges that
//! end on the six boundary points. Every edge label must occur exactly twice.
//! A state picks one of the two smoothings at every crossing; circles are
//! counted with a union-find over edges.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bracket::BracketVector;
use crate::error::{DiagramError, ParseError};
use crate::poly::Polynomial;
use crate::tl3::TlElement;

pub const DEFAULT_CROSSING_LIMIT: usize = 24;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Boundary {
    /// Left endpoints, top to bottom.
    #[serde(rename = "L")]
    pub left: [String; 3],
    /// Right endpoints, top to bottom.
    #[serde(rename = "R")]
    pub right: [String; 3],
}

/// JSON boundary: `[L1, L2, L3, R1, R2, R3]`, or `[]`/`null` for a closed
/// diagram. The `{"L": [...], "R": [...]}` object form is also accepted.
mod boundary_serde {
    use super::Boundary;
    use serde::{de::Error, Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        List(Vec<String>),
        Object(Boundary),
    }

    pub fn serialize<S: Serializer>(b: &Option<Boundary>, s: S) -> Result<S::Ok, S::Error> {
        let list: Vec<&String> = match b {
            Some(b) => b.left.iter().chain(&b.right).collect(),
            None => Vec::new(),
        };
        list.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Boundary>, D::Error> {
        match Option::<Repr>::deserialize(d)? {
            None => Ok(None),
            Some(Repr::Object(b)) => Ok(Some(b)),
            Some(Repr::List(v)) if v.is_empty() => Ok(None),
            Some(Repr::List(v)) => {
                let [l1, l2, l3, r1, r2, r3]: [String; 6] =
                    v.try_into().map_err(|v: Vec<String>| {
                        D::Error::invalid_length(v.len(), &"0 or 6 boundary edges")
                    })?;
                Ok(Some(Boundary {
                    left: [l1, l2, l3],
                    right: [r1, r2, r3],
                }))
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ShadowDiagram {
    pub crossings: Vec<[String; 4]>,
    #[serde(with = "boundary_serde", default)]
    pub boundary: Option<Boundary>,
    #[serde(default)]
    pub free_loops: usize,
}

impl ShadowDiagram {
    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_closed(&self) -> bool {
        self.boundary.is_none()
    }

    /// A closed diagram made of `n` crossingless circles.
    pub fn circles(n: usize) -> Self {
        ShadowDiagram {
            crossings: Vec::new(),
            boundary: None,
            free_loops: n,
        }
    }

    /// Join left endpoint i to right endpoint i. Closed diagrams are
    /// returned unchanged.
    pub fn closure(&self) -> ShadowDiagram {
        let Some(boundary) = &self.boundary else {
            return self.clone();
        };
        let mut labels = Labels::default();
        let crossings: Vec<[usize; 4]> = self
            .crossings
            .iter()
            .map(|c| c.clone().map(|e| labels.id(e)))
            .collect();
        let left = boundary.left.clone().map(|e| labels.id(e));
        let right = boundary.right.clone().map(|e| labels.id(e));
        let mut merger = EdgeMerger::new(labels.len(), self.free_loops);
        for i in 0..3 {
            merger.join(left[i], right[i]);
        }
        merger.finish(&crossings, None)
    }

    /// Relabel crossings by `order` (crossing `order[k]` becomes crossing `k`).
    pub fn permute_crossings(&self, order: &[usize]) -> ShadowDiagram {
        ShadowDiagram {
            crossings: order.iter().map(|&k| self.crossings[k].clone()).collect(),
            boundary: self.boundary.clone(),
            free_loops: self.free_loops,
        }
    }
}

#[derive(Default)]
struct Labels {
    map: HashMap<String, usize>,
}

impl Labels {
    fn id(&mut self, label: String) -> usize {
        let n = self.map.len();
        *self.map.entry(label).or_insert(n)
    }

    fn len(&self) -> usize {
        self.map.len()
    }
}

/// Merges edges whose free ends are glued together; gluing the two ends of
/// one edge closes it into a crossingless circle.
struct EdgeMerger {
    parent: Vec<usize>,
    free_loops: usize,
}

impl EdgeMerger {
    fn new(edges: usize, free_loops: usize) -> Self {
        EdgeMerger {
            parent: (0..edges).collect(),
            free_loops,
        }
    }

    fn fresh(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.parent.len() - 1
    }

    fn find(&mut self, mut e: usize) -> usize {
        while self.parent[e] != e {
            self.parent[e] = self.parent[self.parent[e]];
            e = self.parent[e];
        }
        e
    }

    fn join(&mut self, e: usize, f: usize) {
        let (re, rf) = (self.find(e), self.find(f));
        if re == rf {
            self.free_loops += 1;
        } else {
            self.parent[rf] = re;
        }
    }

    /// Relabel surviving edges as `e0, e1, …` in order of first appearance.
    fn finish(
        mut self,
        crossings: &[[usize; 4]],
        boundary: Option<([usize; 3], [usize; 3])>,
    ) -> ShadowDiagram {
        let mut names: HashMap<usize, String> = HashMap::new();
        let mut name = |m: &mut EdgeMerger, e: usize| {
            let root = m.find(e);
            let n = names.len();
            names.entry(root).or_insert_with(|| format!("e{n}")).clone()
        };
        let crossings = crossings
            .iter()
            .map(|c| c.map(|e| name(&mut self, e)))
            .collect();
        let boundary = boundary.map(|(l, r)| Boundary {
            left: l.map(|e| name(&mut self, e)),
            right: r.map(|e| name(&mut self, e)),
        });
        ShadowDiagram {
            crossings,
            boundary,
            free_loops: self.free_loops,
        }
    }
}

/// Builds 3-tangle diagrams left to right.
///
/// Strands are indexed 0, 1, 2 from the top.
pub struct DiagramBuilder {
    merger: EdgeMerger,
    left: [usize; 3],
    frontier: [usize; 3],
    crossings: Vec<[usize; 4]>,
}

impl Default for DiagramBuilder {
    fn default() -> Self {
        Self::new()
    }
}

impl DiagramBuilder {
    pub fn new() -> Self {
        let mut merger = EdgeMerger::new(0, 0);
        let left = [merger.fresh(), merger.fresh(), merger.fresh()];
        DiagramBuilder {
            merger,
            left,
            frontier: left,
            crossings: Vec::new(),
        }
    }

    fn check_strand(i: usize) {
        assert!(i < 2, "strand index {i} out of range for a 3-tangle");
    }

    /// A crossing of strands `i` and `i+1`. Its horizontal smoothing is the
    /// identity, its vertical smoothing is `U_{i+1}`.
    pub fn crossing(&mut self, i: usize) -> &mut Self {
        Self::check_strand(i);
        let (nw, sw) = (self.frontier[i], self.frontier[i + 1]);
        let (ne, se) = (self.merger.fresh(), self.merger.fresh());
        self.crossings.push([nw, ne, se, sw]);
        self.frontier[i] = ne;
        self.frontier[i + 1] = se;
        self
    }

    /// Cap strands `i`, `i+1` on the left and open a cup on the right.
    pub fn cup_cap(&mut self, i: usize) -> &mut Self {
        Self::check_strand(i);
        self.merger.join(self.frontier[i], self.frontier[i + 1]);
        let cup = self.merger.fresh();
        self.frontier[i] = cup;
        self.frontier[i + 1] = cup;
        self
    }

    /// Two crossings of strands `i`, `i+1` stacked vertically, enclosing a
    /// bigon; its bracket is `(x+2)<1> + <U_{i+1}>` on those two strands.
    pub fn clasp(&mut self, i: usize) -> &mut Self {
        Self::check_strand(i);
        let (west_top, west_bottom) = (self.frontier[i], self.frontier[i + 1]);
        let east_top = self.merger.fresh();
        let east_bottom = self.merger.fresh();
        let inner_left = self.merger.fresh();
        let inner_right = self.merger.fresh();
        self.crossings
            .push([west_top, east_top, inner_right, inner_left]);
        self.crossings
            .push([inner_left, inner_right, east_bottom, west_bottom]);
        self.frontier[i] = east_top;
        self.frontier[i + 1] = east_bottom;
        self
    }

    pub fn letter(&mut self, letter: TangleLetter) -> &mut Self {
        match letter {
            TangleLetter::X1 => self.crossing(0),
            TangleLetter::X2 => self.crossing(1),
            TangleLetter::U1Cap => self.cup_cap(0),
            TangleLetter::U2Cap => self.cup_cap(1),
        }
    }

    pub fn build(self) -> ShadowDiagram {
        let boundary = Some((self.left, self.frontier));
        self.merger.finish(&self.crossings, boundary)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum TangleLetter {
    X1,
    X2,
    #[serde(rename = "U1")]
    U1Cap,
    #[serde(rename = "U2")]
    U2Cap,
}

impl TangleLetter {
    pub const ALL: [TangleLetter; 4] = [
        TangleLetter::X1,
        TangleLetter::X2,
        TangleLetter::U1Cap,
        TangleLetter::U2Cap,
    ];

    /// Bracket tuple of the one-letter tangle.
    pub fn tuple(self) -> BracketVector {
        match self {
            TangleLetter::X1 => BracketVector::from_ints([1, 1, 0, 0, 0]),
            TangleLetter::X2 => BracketVector::from_ints([1, 0, 1, 0, 0]),
            TangleLetter::U1Cap => BracketVector::basis(TlElement::U1),
            TangleLetter::U2Cap => BracketVector::basis(TlElement::U2),
        }
    }
}

impl fmt::Display for TangleLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TangleLetter::X1 => "X1",
            TangleLetter::X2 => "X2",
            TangleLetter::U1Cap => "U1",
            TangleLetter::U2Cap => "U2",
        })
    }
}

impl FromStr for TangleLetter {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        match s {
            "X1" => Ok(TangleLetter::X1),
            "X2" => Ok(TangleLetter::X2),
            "U1" | "U1CAP" => Ok(TangleLetter::U1Cap),
            "U2" | "U2CAP" => Ok(TangleLetter::U2Cap),
            _ => Err(ParseError::Letter(s.to_string())),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct TangleWord(pub Vec<TangleLetter>);

impl TangleWord {
    pub fn letters(&self) -> &[TangleLetter] {
        &self.0
    }

    /// The word repeated `n` times.
    pub fn repeat(&self, n: usize) -> TangleWord {
        TangleWord(self.0.repeat(n))
    }

    /// Product of the per-letter tuples, computed algebraically.
    pub fn tuple(&self) -> BracketVector {
        self.0.iter().fold(BracketVector::unit(), |acc, l| {
            crate::bracket::compose(&acc, &l.tuple())
        })
    }
}

impl FromStr for TangleWord {
    type Err = ParseError;

    /// Whitespace-separated letters, e.g. `"X1 X2 U1 U2"`.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        s.split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<_>, _>>()
            .map(TangleWord)
    }
}

impl fmt::Display for TangleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

pub fn compile_word(word: &TangleWord) -> ShadowDiagram {
    let mut builder = DiagramBuilder::new();
    for &letter in word.letters() {
        builder.letter(letter);
    }
    builder.build()
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum BoundaryPoint {
    L1,
    L2,
    L3,
    R1,
    R2,
    R3,
}

impl BoundaryPoint {
    pub const ALL: [BoundaryPoint; 6] = [
        BoundaryPoint::L1,
        BoundaryPoint::L2,
        BoundaryPoint::L3,
        BoundaryPoint::R1,
        BoundaryPoint::R2,
        BoundaryPoint::R3,
    ];

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for BoundaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A perfect matching of the six boundary points, stored as a partner table.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Pairing {
    partner: [BoundaryPoint; 6],
}

impl Pairing {
    /// `None` unless `pairs` covers each point exactly once.
    pub fn from_pairs(pairs: &[(BoundaryPoint, BoundaryPoint)]) -> Option<Self> {
        let mut partner: [Option<BoundaryPoint>; 6] = [None; 6];
        for &(p, q) in pairs {
            if p == q || partner[p.index()].is_some() || partner[q.index()].is_some() {
                return None;
            }
            partner[p.index()] = Some(q);
            partner[q.index()] = Some(p);
        }
        if partner.iter().any(Option::is_none) {
            return None;
        }
        Some(Pairing {
            partner: partner.map(Option::unwrap),
        })
    }

    pub fn partner(&self, p: BoundaryPoint) -> BoundaryPoint {
        self.partner[p.index()]
    }

    /// Each pair once, smaller point first, in point order.
    pub fn pairs(&self) -> Vec<(BoundaryPoint, BoundaryPoint)> {
        BoundaryPoint::ALL
            .into_iter()
            .filter_map(|p| {
                let q = self.partner(p);
                (p < q).then_some((p, q))
            })
            .collect()
    }

    /// The matching realised by a diagram element.
    pub fn of_element(e: TlElement) -> Pairing {
        use BoundaryPoint::*;
        let pairs = match e {
            TlElement::Id3 => [(L1, R1), (L2, R2), (L3, R3)],
            TlElement::U1 => [(L1, L2), (R1, R2), (L3, R3)],
            TlElement::U2 => [(L2, L3), (R2, R3), (L1, R1)],
            TlElement::R => [(L2, L3), (L1, R3), (R1, R2)],
            TlElement::S => [(L1, L2), (L3, R1), (R2, R3)],
        };
        Pairing::from_pairs(&pairs).expect("element matchings are perfect")
    }
}

impl fmt::Display for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pairs()
            .iter()
            .map(|(p, q)| format!("{p}{q}"))
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

pub fn classify_boundary(pairing: &Pairing) -> Result<TlElement, DiagramError> {
    TlElement::ALL
        .into_iter()
        .find(|&e| Pairing::of_element(e) == *pairing)
        .ok_or_else(|| DiagramError::NonPlanarPairing(pairing.to_string()))
}

/// Result of smoothing every crossing of a diagram.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Smoothing {
    pub loops: u32,
    /// `None` for closed diagrams.
    pub pairing: Option<Pairing>,
}

/// Closed bracket or tangle tuple, depending on the diagram.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum StateSum {
    Tangle(BracketVector),
    Closed(Polynomial),
}

impl StateSum {
    pub fn into_tangle(self) -> Option<BracketVector> {
        match self {
            StateSum::Tangle(v) => Some(v),
            StateSum::Closed(_) => None,
        }
    }

    pub fn into_closed(self) -> Option<Polynomial> {
        match self {
            StateSum::Closed(p) => Some(p),
            StateSum::Tangle(_) => None,
        }
    }
}

/// Diagram with edges renamed to `0..edges`, validated.
struct IndexedDiagram {
    crossings: Vec<[u32; 4]>,
    boundary: Option<[u32; 6]>,
    edges: usize,
    free_loops: u32,
}

impl IndexedDiagram {
    fn new(d: &ShadowDiagram) -> Result<Self, DiagramError> {
        let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
        let boundary_labels = d
            .boundary
            .iter()
            .flat_map(|b| b.left.iter().chain(b.right.iter()));
        for label in d.crossings.iter().flatten().chain(boundary_labels) {
            *counts.entry(label.as_str()).or_default() += 1;
        }
        if let Some((edge, &count)) = counts.iter().find(|&(_, &c)| c != 2) {
            return Err(DiagramError::EdgeEndpoints {
                edge: edge.to_string(),
                count,
            });
        }
        let ids: HashMap<&str, u32> = counts
            .keys()
            .enumerate()
            .map(|(i, &k)| (k, i as u32))
            .collect();
        let crossings = d
            .crossings
            .iter()
            .map(|c| std::array::from_fn(|k| ids[c[k].as_str()]))
            .collect();
        let boundary = d.boundary.as_ref().map(|b| {
            std::array::from_fn(|k| {
                let label = if k < 3 { &b.left[k] } else { &b.right[k - 3] };
                ids[label.as_str()]
            })
        });
        Ok(IndexedDiagram {
            crossings,
            boundary,
            edges: counts.len(),
            free_loops: d.free_loops as u32,
        })
    }

    /// Smooth with choice bits taken from `state` (bit k = crossing k) and
    /// return (loops, boundary roots).
    fn smooth_state(&self, state: u64, parent: &mut Vec<u32>) -> (u32, Option<[u32; 6]>) {
        parent.clear();
        parent.extend(0..self.edges as u32);
        let mut components = self.edges as u32;
        for (k, c) in self.crossings.iter().enumerate() {
            let (p, q, r, s) = if state >> k & 1 == 0 {
                (c[0], c[1], c[2], c[3])
            } else {
                (c[1], c[2], c[3], c[0])
            };
            components -= union(parent, p, q) as u32;
            components -= union(parent, r, s) as u32;
        }
        match self.boundary {
            None => (components + self.free_loops, None),
            Some(b) => {
                let roots = b.map(|e| find(parent, e));
                let mut distinct = roots;
                distinct.sort_unstable();
                let open = 1 + distinct.windows(2).filter(|w| w[0] != w[1]).count() as u32;
                (components - open + self.free_loops, Some(roots))
            }
        }
    }
}

fn find(parent: &mut [u32], mut e: u32) -> u32 {
    while parent[e as usize] != e {
        let grand = parent[parent[e as usize] as usize];
        parent[e as usize] = grand;
        e = grand;
    }
    e
}

fn union(parent: &mut [u32], a: u32, b: u32) -> bool {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra == rb {
        false
    } else {
        parent[rb as usize] = ra;
        true
    }
}

fn pairing_from_roots(roots: [u32; 6]) -> Result<Pairing, DiagramError> {
    let mut pairs = Vec::with_capacity(3);
    for i in 0..6 {
        let mates: Vec<usize> = (0..6).filter(|&j| j != i && roots[j] == roots[i]).collect();
        match mates.as_slice() {
            [j] if i < *j => pairs.push((BoundaryPoint::ALL[i], BoundaryPoint::ALL[*j])),
            [_] => {}
            _ => {
                return Err(DiagramError::NonPlanarPairing(format!(
                    "boundary point {} joined to {} others",
                    BoundaryPoint::ALL[i],
                    mates.len()
                )))
            }
        }
    }
    Ok(Pairing::from_pairs(&pairs).expect("each point has exactly one mate"))
}

pub fn smooth(d: &ShadowDiagram, choices: &[bool]) -> Result<Smoothing, DiagramError> {
    if choices.len() != d.crossing_count() {
        return Err(DiagramError::ChoiceLength {
            expected: d.crossing_count(),
            got: choices.len(),
        });
    }
    if choices.len() > 64 {
        return Err(DiagramError::CrossingLimit {
            crossings: choices.len(),
            limit: 64,
        });
    }
    let indexed = IndexedDiagram::new(d)?;
    let state = choices
        .iter()
        .enumerate()
        .fold(0u64, |acc, (k, &bit)| acc | (u64::from(bit) << k));
    let (loops, roots) = indexed.smooth_state(state, &mut Vec::new());
    let pairing = roots.map(pairing_from_roots).transpose()?;
    Ok(Smoothing { loops, pairing })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub max_crossings: usize,
    /// Split the state range across threads; the result is identical.
    pub parallel: bool,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            max_crossings: DEFAULT_CROSSING_LIMIT,
            parallel: true,
        }
    }
}

/// `counts[slot][loops]`: number of states landing in basis slot `slot` with
/// `loops` circles. Closed diagrams use slot 0 only.
type Tally = Vec<Vec<u64>>;

fn merge_tallies(mut a: Tally, b: Tally) -> Tally {
    for (row_a, row_b) in a.iter_mut().zip(b) {
        if row_a.len() < row_b.len() {
            row_a.resize(row_b.len(), 0);
        }
        for (x, y) in row_a.iter_mut().zip(row_b) {
            *x += y;
        }
    }
    a
}

const CHUNK: u64 = 1 << 12;

fn tally_range(d: &IndexedDiagram, start: u64, end: u64) -> Result<Tally, DiagramError> {
    let mut tally: Tally = vec![Vec::new(); 5];
    let mut parent = Vec::with_capacity(d.edges);
    let mut cache: HashMap<[u8; 6], usize> = HashMap::new();
    for state in start..end {
        let (loops, roots) = d.smooth_state(state, &mut parent);
        let slot = match roots {
            None => 0,
            Some(roots) => {
                // Normalise roots to first-occurrence ranks so equal pairings share a key.
                let mut key = [0u8; 6];
                for i in 0..6 {
                    key[i] = (0..=i).find(|&j| roots[j] == roots[i]).unwrap() as u8;
                }
                match cache.get(&key) {
                    Some(&slot) => slot,
                    None => {
                        let element = classify_boundary(&pairing_from_roots(roots)?)?;
                        cache.insert(key, element.index());
                        element.index()
                    }
                }
            }
        };
        let row = &mut tally[slot];
        if row.len() <= loops as usize {
            row.resize(loops as usize + 1, 0);
        }
        row[loops as usize] += 1;
    }
    Ok(tally)
}

pub fn enumerate_states(d: &ShadowDiagram) -> Result<StateSum, DiagramError> {
    enumerate_states_with(d, EnumerationOptions::default())
}

pub fn enumerate_states_with(
    d: &ShadowDiagram,
    opts: EnumerationOptions,
) -> Result<StateSum, DiagramError> {
    let crossings = d.crossing_count();
    let limit = opts.max_crossings.min(63);
    if crossings > limit {
        return Err(DiagramError::CrossingLimit { crossings, limit });
    }
    let indexed = IndexedDiagram::new(d)?;
    let total = 1u64 << crossings;
    let tally = if opts.parallel && total > CHUNK {
        (0..total.div_ceil(CHUNK))
            .into_par_iter()
            .map(|chunk| tally_range(&indexed, chunk * CHUNK, ((chunk + 1) * CHUNK).min(total)))
            .try_reduce(|| vec![Vec::new(); 5], |a, b| Ok(merge_tallies(a, b)))?
    } else {
        tally_range(&indexed, 0, total)?
    };
    let to_poly = |row: &Vec<u64>| Polynomial::from_coeffs(row.iter().map(|&c| c.into()).collect());
    Ok(match d.boundary {
        // The empty diagram has one state with no loops, giving the constant 1.
        None => StateSum::Closed(to_poly(&tally[0])),
        Some(_) => {
            let mut v = BracketVector::zero();
            for e in TlElement::ALL {
                v[e] = to_poly(&tally[e.index()]);
            }
            StateSum::Tangle(v)
        }
    })
}
