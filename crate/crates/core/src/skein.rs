//! Kauffman bracket resolution into the canonical basis of each surface.
//!
//! Every crossing is smoothed both ways (`L = q L_+ + q^-1 L_-`), each of the
//! `2^c` crossingless states is reduced to a basis element times a power of
//! the trivial loop value `-q^2 - q^-2`, and the results are summed. An arc
//! with both ends at the same marked point of a disk cuts off an empty disk
//! and kills the whole state.
//!
//! Bases per surface:
//! - annulus: `z^m`, `m` parallel cores;
//! - marked annulus: `theta_n`, the arc `p1 -> p2` of winding `n`;
//! - disk: a non-crossing multiset of chords between distinct marked points
//!   together with the height order of chord ends at each point.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::diagram::{
    build_theta_over_cores, ChordEnd, Component, Diagram, DiagramError, SurfaceModel, Wiring, SMOOTHING,
};
use crate::diagram::{ResolutionChoice, Sign};
use crate::laurent::LaurentPoly;
use crate::sequences::UniPoly;

pub const DEFAULT_CROSSING_CAP: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SkeinError {
    #[error("expected a crossingless diagram, found {0} crossings")]
    HasCrossings(usize),
    #[error("{crossings} crossings exceed the cap of {cap} (2^{crossings} states); raise the cap explicitly")]
    CrossingCapExceeded { crossings: usize, cap: usize },
    #[error("closed component with winding {0} cannot be embedded in the annulus")]
    NonEmbeddedLoop(i64),
    #[error("essential loop alongside the p1-p2 arc in the marked annulus")]
    EssentialLoopWithArc,
    #[error("state has {0} arcs on a marked annulus; expected exactly one")]
    ArcCount(usize),
    #[error("arc on a surface without marked points")]
    UnexpectedArc,
    #[error("closed component with winding {0} on a disk")]
    WindingOnDisk(i64),
    #[error("chords {0} and {1} cross; not realizable as disjoint arcs")]
    CrossingChords(String, String),
    #[error("ideal quotients are only supported on marked disks")]
    NotADisk,
    #[error("ideal generator {0}-{1} is not a boundary arc")]
    NotBoundaryArc(String, String),
    #[error("unknown marked point {0}")]
    UnknownPoint(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Chords of a crossingless disk state, with the height slot of every end.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiskMatching {
    chords: Vec<(ChordEnd, ChordEnd)>,
    labels: Arc<[String]>,
}

impl DiskMatching {
    /// Normalizes and checks that the chords are pairwise non-crossing.
    pub fn new(
        chords: impl IntoIterator<Item = (ChordEnd, ChordEnd)>,
        labels: Arc<[String]>,
    ) -> Result<Self, SkeinError> {
        let mut chords: Vec<(ChordEnd, ChordEnd)> = chords
            .into_iter()
            .map(|(a, b)| if b < a { (b, a) } else { (a, b) })
            .collect();
        chords.sort();
        let m = DiskMatching { chords, labels };
        for (i, a) in m.chords.iter().enumerate() {
            for b in &m.chords[i + 1..] {
                if chords_cross(a, b) {
                    return Err(SkeinError::CrossingChords(m.chord_name(a), m.chord_name(b)));
                }
            }
        }
        Ok(m)
    }

    pub fn chords(&self) -> &[(ChordEnd, ChordEnd)] {
        &self.chords
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Unordered endpoint pairs, lowest point index first.
    pub fn point_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.chords.iter().map(|(a, b)| (a.point, b.point))
    }

    fn ends_at(&self, point: usize) -> usize {
        self.chords
            .iter()
            .map(|(a, b)| (a.point == point) as usize + (b.point == point) as usize)
            .sum()
    }

    fn end_name(&self, e: &ChordEnd) -> String {
        let label = &self.labels[e.point];
        if self.ends_at(e.point) > 1 {
            format!("{label}@{}", e.height)
        } else {
            label.clone()
        }
    }

    fn chord_name(&self, c: &(ChordEnd, ChordEnd)) -> String {
        format!("({},{})", self.end_name(&c.0), self.end_name(&c.1))
    }
}

fn chords_cross(a: &(ChordEnd, ChordEnd), b: &(ChordEnd, ChordEnd)) -> bool {
    let (a0, a1) = (a.0.point, a.1.point);
    let (b0, b1) = (b.0.point, b.1.point);
    if a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1 {
        return false;
    }
    let inside = |x: usize| a0 < x && x < a1;
    inside(b0) != inside(b1)
}

/// A basis element of the skein module of one of the supported surfaces.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BasisElement {
    /// `z^m`.
    AnnulusPower(u32),
    /// `theta_n`.
    AioArc(i64),
    DiskMatching(DiskMatching),
}

impl BasisElement {
    fn rank(&self) -> u8 {
        match self {
            BasisElement::AnnulusPower(_) => 0,
            BasisElement::AioArc(_) => 1,
            BasisElement::DiskMatching(_) => 2,
        }
    }

    /// Canonical descriptor, e.g. `z^3`, `theta_-2`, `chords[(p0,q1),(p1,p2)]`.
    pub fn descriptor(&self) -> String {
        self.to_string()
    }
}

/// Cores by count, arcs by `|n|` with `theta_n` before `theta_-n`, chords
/// lexicographically.
impl Ord for BasisElement {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (BasisElement::AnnulusPower(a), BasisElement::AnnulusPower(b)) => a.cmp(b),
            (BasisElement::AioArc(a), BasisElement::AioArc(b)) => (a.abs(), *a < 0).cmp(&(b.abs(), *b < 0)),
            (BasisElement::DiskMatching(a), BasisElement::DiskMatching(b)) => {
                a.chords.cmp(&b.chords).then_with(|| a.labels.cmp(&b.labels))
            }
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for BasisElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisElement::AnnulusPower(m) => write!(f, "z^{m}"),
            BasisElement::AioArc(n) => write!(f, "theta_{n}"),
            BasisElement::DiskMatching(m) => {
                let parts: Vec<String> = m.chords.iter().map(|c| m.chord_name(c)).collect();
                write!(f, "chords[{}]", parts.join(","))
            }
        }
    }
}

/// A finite `Z[q^{±1}]`-combination of basis elements of one surface.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct SkeinVector {
    terms: BTreeMap<BasisElement, LaurentPoly>,
}

impl SkeinVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(basis: BasisElement, coeff: LaurentPoly) -> Self {
        let mut v = Self::zero();
        v.add_term(basis, coeff);
        v
    }

    pub fn basis(basis: BasisElement) -> Self {
        Self::term(basis, LaurentPoly::one())
    }

    pub fn add_term(&mut self, basis: BasisElement, coeff: LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        debug_assert!(
            self.terms.keys().next().is_none_or(|k| k.rank() == basis.rank()),
            "mixing basis elements of different surfaces"
        );
        match self.terms.get_mut(&basis) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&basis);
                }
            }
            None => {
                self.terms.insert(basis, coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, basis: &BasisElement) -> LaurentPoly {
        self.terms.get(basis).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisElement, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (b, x) in &self.terms {
            out.add_term(b.clone(), x * c);
        }
        out
    }

    pub fn add(&self, other: &SkeinVector) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &SkeinVector) {
        for (b, c) in &other.terms {
            self.add_term(b.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &SkeinVector) -> Self {
        self.add(&other.scale(&LaurentPoly::constant(-1)))
    }

    /// Every coefficient specialized at `q = 1`.
    pub fn specialize_q1(&self) -> Self {
        let mut out = Self::zero();
        for (b, c) in &self.terms {
            out.add_term(b.clone(), LaurentPoly::constant(c.eval_q1()));
        }
        out
    }

    pub fn is_positive(&self) -> bool {
        self.terms.values().all(LaurentPoly::is_positive)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("skein vector serializes")
    }
}

fn coeff_prefix(c: &LaurentPoly) -> (bool, String) {
    if c.is_one() {
        return (false, String::new());
    }
    if (-c).is_one() {
        return (true, String::new());
    }
    match c.as_monomial() {
        Some((k, _)) if k < &BigInt::from(0) => (true, format!("{}·", -c)),
        Some(_) => (false, format!("{c}·")),
        None => (false, format!("({c})·")),
    }
}

/// `q·theta_1 + q^-1·theta_-1`; the zero vector prints as `0`.
impl fmt::Display for SkeinVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            let (neg, prefix) = coeff_prefix(c);
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{prefix}{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SkeinVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkeinVector({self})")
    }
}

/// `[{"basis": "<descriptor>", "coeff": {...}}, ...]` in canonical order.
impl Serialize for SkeinVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            basis: String,
            coeff: &'a LaurentPoly,
        }
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (b, c) in &self.terms {
            seq.serialize_element(&Entry {
                basis: b.descriptor(),
                coeff: c,
            })?;
        }
        seq.end()
    }
}

/// The set of boundary chords spanning an ideal of a marked disk.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IdealSpec {
    generators: BTreeSet<(usize, usize)>,
}

impl IdealSpec {
    pub fn new(generators: impl IntoIterator<Item = (usize, usize)>) -> Self {
        IdealSpec {
            generators: generators.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect(),
        }
    }

    /// Generators given by marked point labels.
    pub fn from_labels(surface: &SurfaceModel, pairs: &[(&str, &str)]) -> Result<Self, SkeinError> {
        let idx = |l: &str| {
            surface
                .point_index(l)
                .ok_or_else(|| SkeinError::UnknownPoint(l.to_string()))
        };
        let gens = pairs
            .iter()
            .map(|(a, b)| Ok((idx(a)?, idx(b)?)))
            .collect::<Result<Vec<_>, SkeinError>>()?;
        Ok(Self::new(gens))
    }

    /// All boundary arcs of a disk.
    pub fn all_boundary(surface: &SurfaceModel) -> Self {
        let n = surface.num_points();
        Self::new(
            (0..n)
                .map(|i| (i, (i + 1) % n))
                .filter(|&(a, b)| surface.adjacent(a, b)),
        )
    }

    /// `gamma_0, …, gamma_{n-1}` with `gamma_i = p_i p_{i+1}` on the ladder
    /// disk with `n` rungs. The arc `p_n p_{n+1}` is deliberately left out.
    pub fn ladder(n: usize) -> Self {
        Self::new((0..n).map(|i| (i, i + 1)))
    }

    pub fn generators(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.generators.iter().copied()
    }

    pub fn validate(&self, surface: &SurfaceModel) -> Result<(), SkeinError> {
        if !matches!(surface, SurfaceModel::Disk { .. }) {
            return Err(SkeinError::NotADisk);
        }
        for &(a, b) in &self.generators {
            if a >= surface.num_points() || b >= surface.num_points() {
                return Err(SkeinError::UnknownPoint(format!("#{}", a.max(b))));
            }
            if !surface.adjacent(a, b) {
                return Err(SkeinError::NotBoundaryArc(surface.label(a), surface.label(b)));
            }
        }
        Ok(())
    }

    /// Whether a basis element has one of the generators as a component.
    pub fn contains(&self, b: &BasisElement) -> bool {
        match b {
            BasisElement::DiskMatching(m) => m.point_pairs().any(|p| self.generators.contains(&p)),
            _ => false,
        }
    }
}

/// Result of reducing a crossingless state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalForm {
    /// The state contains a trivial arc.
    Zero,
    /// `(-q^2 - q^-2)^trivial_loops` times `element`.
    Term { element: BasisElement, trivial_loops: u32 },
}

impl NormalForm {
    pub fn factor(&self) -> LaurentPoly {
        match self {
            NormalForm::Zero => LaurentPoly::zero(),
            NormalForm::Term { trivial_loops, .. } => LaurentPoly::loop_value().pow(*trivial_loops),
        }
    }

    pub fn to_vector(&self) -> SkeinVector {
        match self {
            NormalForm::Zero => SkeinVector::zero(),
            NormalForm::Term { element, .. } => SkeinVector::term(element.clone(), self.factor()),
        }
    }
}

/// Components of a crossingless diagram.
pub fn classify_components(d: &Diagram) -> Result<Vec<Component>, SkeinError> {
    if d.num_crossings() > 0 {
        return Err(SkeinError::HasCrossings(d.num_crossings()));
    }
    Ok(d.strands())
}

/// Reduces a crossingless diagram to a basis element and loop factor.
pub fn normal_form(d: &Diagram) -> Result<NormalForm, SkeinError> {
    let comps = classify_components(d)?;
    let labels: Arc<[String]> = d.surface().labels().into();
    reduce_components(d.surface(), &labels, &comps)
}

pub(crate) fn reduce_components(
    surface: &SurfaceModel,
    labels: &Arc<[String]>,
    comps: &[Component],
) -> Result<NormalForm, SkeinError> {
    let mut trivial_loops = 0u32;
    match surface {
        SurfaceModel::Annulus => {
            let mut cores = 0u32;
            for c in comps {
                match *c {
                    Component::Loop { winding: 0 } => trivial_loops += 1,
                    Component::Loop { winding: 1 } => cores += 1,
                    Component::Loop { winding } => return Err(SkeinError::NonEmbeddedLoop(winding)),
                    Component::Arc { .. } => return Err(SkeinError::UnexpectedArc),
                }
            }
            Ok(NormalForm::Term {
                element: BasisElement::AnnulusPower(cores),
                trivial_loops,
            })
        }
        SurfaceModel::MarkedAnnulus => {
            let mut arcs = Vec::new();
            for c in comps {
                match *c {
                    Component::Loop { winding: 0 } => trivial_loops += 1,
                    Component::Loop { winding: 1 } => return Err(SkeinError::EssentialLoopWithArc),
                    Component::Loop { winding } => return Err(SkeinError::NonEmbeddedLoop(winding)),
                    Component::Arc { start, end, winding } => {
                        // orient p1 -> p2
                        arcs.push(if start.point == 0 { winding } else { -winding });
                        if start.point == end.point {
                            return Err(SkeinError::ArcCount(0));
                        }
                    }
                }
            }
            match arcs[..] {
                [n] => Ok(NormalForm::Term {
                    element: BasisElement::AioArc(n),
                    trivial_loops,
                }),
                _ => Err(SkeinError::ArcCount(arcs.len())),
            }
        }
        SurfaceModel::Disk { .. } => {
            let mut chords = Vec::new();
            for c in comps {
                match *c {
                    Component::Loop { winding: 0 } => trivial_loops += 1,
                    Component::Loop { winding } => return Err(SkeinError::WindingOnDisk(winding)),
                    // a cap at one marked point bounds an empty disk; it kills
                    // the state whatever else is drawn
                    Component::Arc { start, end, .. } if start.point == end.point => return Ok(NormalForm::Zero),
                    Component::Arc { start, end, .. } => chords.push((start, end)),
                }
            }
            Ok(NormalForm::Term {
                element: BasisElement::DiskMatching(DiskMatching::new(chords, labels.clone())?),
                trivial_loops,
            })
        }
    }
}

/// Counters collected while expanding the state sum.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ResolveStats {
    pub crossings: usize,
    pub states: u64,
    pub zero_by_trivial_arc: u64,
    pub zero_by_ideal: u64,
    /// Largest `|winding|` of any closed component met in any state.
    pub max_loop_winding: i64,
    /// Largest `|exponent|` of `q` contributed by the smoothings of one state.
    pub max_state_exponent: i64,
}

impl ResolveStats {
    fn merge(&mut self, o: &ResolveStats) {
        self.states += o.states;
        self.zero_by_trivial_arc += o.zero_by_trivial_arc;
        self.zero_by_ideal += o.zero_by_ideal;
        self.max_loop_winding = self.max_loop_winding.max(o.max_loop_winding);
        self.max_state_exponent = self.max_state_exponent.max(o.max_state_exponent);
    }
}

/// Partial state sum: basis element -> (q exponent, trivial loops) -> count.
#[derive(Default)]
struct Partial {
    terms: HashMap<BasisElement, HashMap<(i64, u32), i64>>,
    stats: ResolveStats,
    error: Option<(u64, SkeinError)>,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        for (b, m) in other.terms {
            let slot = self.terms.entry(b).or_default();
            for (k, n) in m {
                *slot.entry(k).or_default() += n;
            }
        }
        self.stats.merge(&other.stats);
        self.error = match (self.error, other.error) {
            (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
            (a, b) => a.or(b),
        };
        self
    }

    fn into_vector(self) -> SkeinVector {
        let loop_value = LaurentPoly::loop_value();
        let mut powers: Vec<LaurentPoly> = vec![LaurentPoly::one()];
        let mut out = SkeinVector::zero();
        for (b, m) in self.terms {
            let mut coeff = LaurentPoly::zero();
            for ((exp, loops), n) in m {
                while powers.len() <= loops as usize {
                    let next = powers.last().expect("nonempty") * &loop_value;
                    powers.push(next);
                }
                coeff += &powers[loops as usize].shift(exp) * &LaurentPoly::constant(n);
            }
            out.add_term(b, coeff);
        }
        out
    }
}

/// Exhaustive state-sum evaluator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Resolver {
    /// Diagrams with more crossings are refused.
    pub crossing_cap: usize,
    /// Worker threads; `None` uses the global rayon pool, `Some(1)` runs
    /// inline.
    pub threads: Option<usize>,
}

impl Default for Resolver {
    fn default() -> Self {
        Resolver {
            crossing_cap: DEFAULT_CROSSING_CAP,
            threads: None,
        }
    }
}

const CHUNK: u64 = 256;

impl Resolver {
    pub fn with_threads(threads: usize) -> Self {
        Resolver {
            threads: Some(threads),
            ..Self::default()
        }
    }

    pub fn resolve_all(&self, d: &Diagram) -> Result<SkeinVector, SkeinError> {
        self.resolve_with_stats(d, None).map(|(v, _)| v)
    }

    pub fn resolve_all_mod(&self, d: &Diagram, ideal: &IdealSpec) -> Result<SkeinVector, SkeinError> {
        self.resolve_with_stats(d, Some(ideal)).map(|(v, _)| v)
    }

    /// Sums `q^(#positive - #negative)` times the normal form over all
    /// resolution choices, dropping states in `ideal` when one is given.
    pub fn resolve_with_stats(
        &self,
        d: &Diagram,
        ideal: Option<&IdealSpec>,
    ) -> Result<(SkeinVector, ResolveStats), SkeinError> {
        let c = d.num_crossings();
        if c > self.crossing_cap || c >= 63 {
            return Err(SkeinError::CrossingCapExceeded {
                crossings: c,
                cap: self.crossing_cap,
            });
        }
        if let Some(ideal) = ideal {
            ideal.validate(d.surface())?;
        }
        d.validate()?;
        let wiring = Wiring::new(d);
        let labels: Arc<[String]> = d.surface().labels().into();
        let total = 1u64 << c;
        let chunks = total.div_ceil(CHUNK);
        let run_chunk = |mut acc: Partial, chunk: u64| {
            let mut partner = vec![0usize; 4 * c];
            let mut comps = Vec::new();
            let end = ((chunk + 1) * CHUNK).min(total);
            for mask in chunk * CHUNK..end {
                if acc.error.is_some() {
                    break;
                }
                for ci in 0..c {
                    let sign = if mask >> ci & 1 == 1 {
                        Sign::Positive
                    } else {
                        Sign::Negative
                    };
                    for (a, b) in SMOOTHING.pairs(wiring.over(ci), sign) {
                        partner[4 * ci + a as usize] = 4 * ci + b as usize;
                        partner[4 * ci + b as usize] = 4 * ci + a as usize;
                    }
                }
                comps.clear();
                wiring.trace(|s| partner[s], &mut comps);
                let exp = 2 * mask.count_ones() as i64 - c as i64;
                acc.stats.states += 1;
                acc.stats.max_state_exponent = acc.stats.max_state_exponent.max(exp.abs());
                for comp in &comps {
                    if let Component::Loop { winding } = comp {
                        acc.stats.max_loop_winding = acc.stats.max_loop_winding.max(winding.abs());
                    }
                }
                match reduce_components(d.surface(), &labels, &comps) {
                    Err(e) => acc.error = Some((mask, e)),
                    Ok(NormalForm::Zero) => acc.stats.zero_by_trivial_arc += 1,
                    Ok(NormalForm::Term { element, trivial_loops }) => {
                        if ideal.is_some_and(|i| i.contains(&element)) {
                            acc.stats.zero_by_ideal += 1;
                        } else {
                            *acc.terms
                                .entry(element)
                                .or_default()
                                .entry((exp, trivial_loops))
                                .or_default() += 1;
                        }
                    }
                }
            }
            acc
        };
        let sequential = || (0..chunks).fold(Partial::default(), run_chunk);
        let parallel = || {
            (0..chunks)
                .into_par_iter()
                .fold(Partial::default, run_chunk)
                .reduce(Partial::default, Partial::merge)
        };
        let partial = match self.threads {
            Some(1) => sequential(),
            Some(n) => rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map(|pool| pool.install(parallel))
                .unwrap_or_else(|_| sequential()),
            None if wiring.num_crossings() <= 8 => sequential(),
            None => parallel(),
        };
        if let Some((_, e)) = partial.error {
            return Err(e);
        }
        let mut stats = partial.stats.clone();
        stats.crossings = c;
        Ok((partial.into_vector(), stats))
    }

    /// `theta_0 • p(z)`: the radial arc stacked over `p` evaluated at the core.
    pub fn theta_bullet(&self, p: &UniPoly) -> Result<SkeinVector, SkeinError> {
        let mut out = SkeinVector::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out.add_assign(&self.resolve_all(&build_theta_over_cores(k))?.scale(c));
        }
        Ok(out)
    }
}

pub fn resolve_all(d: &Diagram) -> Result<SkeinVector, SkeinError> {
    Resolver::default().resolve_all(d)
}

pub fn resolve_all_mod(d: &Diagram, ideal: &IdealSpec) -> Result<SkeinVector, SkeinError> {
    Resolver::default().resolve_all_mod(d, ideal)
}

pub fn theta_bullet(p: &UniPoly) -> Result<SkeinVector, SkeinError> {
    Resolver::default().theta_bullet(p)
}

/// Value of a single state, `q^exponent` times its normal form.
pub fn state_value(d: &Diagram, choice: &ResolutionChoice) -> Result<SkeinVector, SkeinError> {
    let comps = d.state_components(choice)?;
    let labels: Arc<[String]> = d.surface().labels().into();
    let nf = reduce_components(d.surface(), &labels, &comps)?;
    Ok(nf.to_vector().scale(&LaurentPoly::q_pow(choice.exponent())))
}
