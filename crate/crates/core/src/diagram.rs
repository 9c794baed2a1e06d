//! Combinatorial framed tangle diagrams.
//!
//! A diagram is a 4-valent graph drawn on one of three surface models. Each
//! crossing has four ports numbered `0..4` in clockwise order around the
//! crossing as seen from above (the side the over-strand faces), and the
//! over-strand occupies one diagonal. Edges join two attachment points: a
//! crossing port, or a height slot at a marked boundary point. Annular
//! surfaces carry a radial seam; every edge records how many times it
//! crosses the seam, signed, when traversed from `ends[0]` to `ends[1]`.
//! Crossingless closed components are kept separately as free loops.
//!
//! Seam orientation: traversing the annulus counterclockwise (in the planar
//! picture used by the builders) crosses the seam positively. With this
//! orientation the positive smoothing of the radial arc over the core yields
//! the arc of winding `+1`, see `SMOOTHING` below.
//!
//! Diagrams are only produced by the builders in this module and by
//! [`resolve_crossing`], all of which keep the graph embedded; planarity is
//! not re-checked.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("unknown crossing {0}")]
    UnknownCrossing(CrossingId),
    #[error("invalid builder parameters: {0}")]
    InvalidParameters(String),
    #[error("malformed diagram: {0}")]
    Malformed(String),
}

/// The surface a diagram is drawn on.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SurfaceModel {
    /// A disk with marked points listed in clockwise order.
    Disk { points: Vec<String> },
    /// The annulus without marked points.
    Annulus,
    /// The annulus with `p1` (point 0) on the inner boundary and `p2`
    /// (point 1) on the outer boundary. The seam avoids both.
    MarkedAnnulus,
}

impl SurfaceModel {
    pub fn num_points(&self) -> usize {
        match self {
            SurfaceModel::Disk { points } => points.len(),
            SurfaceModel::Annulus => 0,
            SurfaceModel::MarkedAnnulus => 2,
        }
    }

    pub fn label(&self, point: usize) -> String {
        match self {
            SurfaceModel::Disk { points } => points[point].clone(),
            SurfaceModel::Annulus => format!("#{point}"),
            SurfaceModel::MarkedAnnulus => format!("p{}", point + 1),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.num_points()).map(|i| self.label(i)).collect()
    }

    pub fn point_index(&self, label: &str) -> Option<usize> {
        (0..self.num_points()).find(|&i| self.label(i) == label)
    }

    pub fn is_annular(&self) -> bool {
        !matches!(self, SurfaceModel::Disk { .. })
    }

    /// Whether two marked points of a disk are neighbours in the cyclic order,
    /// i.e. the chord between them is a boundary arc.
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        let n = self.num_points();
        match self {
            SurfaceModel::Disk { .. } if n >= 2 && a < n && b < n && a != b => (a + 1) % n == b || (b + 1) % n == a,
            _ => false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CrossingId(pub u32);

impl fmt::Display for CrossingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c{}", self.0)
    }
}

/// Which diagonal of ports carries the over-strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum OverPair {
    /// Ports 0 and 2.
    Even,
    /// Ports 1 and 3.
    Odd,
}

impl OverPair {
    fn first_port(self) -> u8 {
        match self {
            OverPair::Even => 0,
            OverPair::Odd => 1,
        }
    }

    pub fn other(self) -> Self {
        match self {
            OverPair::Even => OverPair::Odd,
            OverPair::Odd => OverPair::Even,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    /// Exponent of `q` contributed by this smoothing.
    pub fn exponent(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

/// Global chirality of the skein relation. With clockwise port labels and the
/// over-strand on ports `{o, o + 2}`, the positive smoothing joins each
/// over-port `o` to the next port clockwise, `o + 1`. Equivalently: for a
/// vertical over-strand the positive smoothing keeps the north-east and the
/// south-west corners.
pub const SMOOTHING: SmoothingRule = SmoothingRule::OverToClockwiseNext;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmoothingRule {
    OverToClockwiseNext,
    OverToCounterclockwiseNext,
}

impl SmoothingRule {
    pub fn mirror(self) -> Self {
        match self {
            SmoothingRule::OverToClockwiseNext => SmoothingRule::OverToCounterclockwiseNext,
            SmoothingRule::OverToCounterclockwiseNext => SmoothingRule::OverToClockwiseNext,
        }
    }

    /// The two port pairs joined by the smoothing of the given sign.
    pub fn pairs(self, over: OverPair, sign: Sign) -> [(u8, u8); 2] {
        let o = over.first_port();
        let step = match (self, sign) {
            (SmoothingRule::OverToClockwiseNext, Sign::Positive)
            | (SmoothingRule::OverToCounterclockwiseNext, Sign::Negative) => 1,
            _ => 3,
        };
        [(o, (o + step) % 4), (o + 2, (o + 2 + step) % 4)]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Crossing {
    pub id: CrossingId,
    pub over: OverPair,
}

/// A height slot at a marked point; height 0 is the bottom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ChordEnd {
    pub point: usize,
    pub height: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum End {
    Port { crossing: CrossingId, port: u8 },
    Marked { point: usize, height: usize },
}

impl End {
    fn port(crossing: CrossingId, port: u8) -> Self {
        End::Port { crossing, port }
    }

    fn marked(point: usize, height: usize) -> Self {
        End::Marked { point, height }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Edge {
    pub ends: [End; 2],
    /// Signed seam crossings traversing `ends[0] -> ends[1]`.
    pub seam: i64,
}

impl Edge {
    fn new(a: End, b: End, seam: i64) -> Self {
        Edge { ends: [a, b], seam }
    }

    /// Seam count when traversed starting from side `side`.
    fn seam_from(&self, side: usize) -> i64 {
        if side == 0 {
            self.seam
        } else {
            -self.seam
        }
    }
}

/// A crossingless closed component, tracked only by its winding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FreeLoop {
    pub winding: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagram {
    surface: SurfaceModel,
    crossings: Vec<Crossing>,
    edges: Vec<Edge>,
    loops: Vec<FreeLoop>,
}

/// A connected piece of a diagram after following strands (straight through
/// crossings, or along a smoothing).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Component {
    /// Oriented from `start` to `end`; `winding` is the seam total along it.
    Arc {
        start: ChordEnd,
        end: ChordEnd,
        winding: i64,
    },
    /// Winding up to sign; loops are unoriented.
    Loop { winding: i64 },
}

/// A sign for every crossing of a diagram.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct ResolutionChoice(pub BTreeMap<CrossingId, Sign>);

impl ResolutionChoice {
    pub fn uniform(d: &Diagram, sign: Sign) -> Self {
        ResolutionChoice(d.crossings.iter().map(|c| (c.id, sign)).collect())
    }

    /// Bit `i` of `mask` set means crossing number `i` (in id order) is
    /// resolved positively.
    pub fn from_mask(d: &Diagram, mask: u64) -> Self {
        ResolutionChoice(
            d.crossings
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    (
                        c.id,
                        if mask >> i & 1 == 1 {
                            Sign::Positive
                        } else {
                            Sign::Negative
                        },
                    )
                })
                .collect(),
        )
    }

    pub fn exponent(&self) -> i64 {
        self.0.values().map(|s| s.exponent()).sum()
    }
}

impl Diagram {
    pub fn surface(&self) -> &SurfaceModel {
        &self.surface
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn free_loops(&self) -> &[FreeLoop] {
        &self.loops
    }

    pub fn num_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn crossing(&self, id: CrossingId) -> Option<&Crossing> {
        self.crossings
            .binary_search_by_key(&id, |c| c.id)
            .ok()
            .map(|i| &self.crossings[i])
    }

    /// Incident edge ends at each marked point, bottom to top, as
    /// `(edge index, side)`.
    pub fn endpoint_orders(&self) -> Vec<Vec<(usize, usize)>> {
        let mut orders: Vec<BTreeMap<usize, (usize, usize)>> = vec![BTreeMap::new(); self.surface.num_points()];
        for (ei, e) in self.edges.iter().enumerate() {
            for (side, end) in e.ends.iter().enumerate() {
                if let End::Marked { point, height } = *end {
                    if let Some(slot) = orders.get_mut(point) {
                        slot.insert(height, (ei, side));
                    }
                }
            }
        }
        orders.into_iter().map(|m| m.into_values().collect()).collect()
    }

    /// Checks the port and endpoint bijections and the per-surface rules.
    pub fn validate(&self) -> Result<(), DiagramError> {
        let bad = |m: String| Err(DiagramError::Malformed(m));
        if self.crossings.windows(2).any(|w| w[0].id >= w[1].id) {
            return bad("crossing ids not strictly increasing".into());
        }
        let mut ports: HashMap<(CrossingId, u8), usize> = HashMap::new();
        let mut heights: Vec<Vec<usize>> = vec![Vec::new(); self.surface.num_points()];
        for e in &self.edges {
            if !self.surface.is_annular() && e.seam != 0 {
                return bad("seam count on a disk edge".into());
            }
            for end in &e.ends {
                match *end {
                    End::Port { crossing, port } => {
                        if self.crossing(crossing).is_none() {
                            return bad(format!("edge references unknown crossing {crossing}"));
                        }
                        if port > 3 {
                            return bad(format!("port {port} out of range"));
                        }
                        *ports.entry((crossing, port)).or_default() += 1;
                    }
                    End::Marked { point, height } => match heights.get_mut(point) {
                        Some(h) => h.push(height),
                        None => return bad(format!("marked point {point} does not exist")),
                    },
                }
            }
        }
        for c in &self.crossings {
            for p in 0..4u8 {
                match ports.get(&(c.id, p)) {
                    Some(1) => {}
                    Some(k) => return bad(format!("port {p} of {} used {k} times", c.id)),
                    None => return bad(format!("port {p} of {} unused", c.id)),
                }
            }
        }
        for (point, h) in heights.iter_mut().enumerate() {
            h.sort_unstable();
            if h.iter().enumerate().any(|(i, &x)| i != x) {
                return bad(format!("heights at point {point} are not 0..{}", h.len()));
            }
        }
        match &self.surface {
            SurfaceModel::Disk { points } => {
                let mut sorted = points.clone();
                sorted.sort();
                sorted.dedup();
                if sorted.len() != points.len() {
                    return bad("duplicate marked point labels".into());
                }
                if self.loops.iter().any(|l| l.winding != 0) {
                    return bad("winding on a disk loop".into());
                }
            }
            SurfaceModel::Annulus => {}
            SurfaceModel::MarkedAnnulus => {
                if heights.iter().any(|h| h.len() != 1) {
                    return bad("marked annulus needs exactly one arc end at p1 and at p2".into());
                }
            }
        }
        Ok(())
    }

    /// Components obtained by following each strand straight through every
    /// crossing.
    pub fn strands(&self) -> Vec<Component> {
        let wiring = Wiring::new(self);
        let mut out = Vec::new();
        wiring.trace(|slot| slot ^ 2, &mut out);
        out
    }

    /// Components of the crossingless diagram obtained from `choice`.
    pub fn state_components(&self, choice: &ResolutionChoice) -> Result<Vec<Component>, DiagramError> {
        let wiring = Wiring::new(self);
        let mut partner = vec![0usize; 4 * self.crossings.len()];
        for (ci, c) in self.crossings.iter().enumerate() {
            let sign = *choice.0.get(&c.id).ok_or(DiagramError::UnknownCrossing(c.id))?;
            for (a, b) in SMOOTHING.pairs(c.over, sign) {
                partner[4 * ci + a as usize] = 4 * ci + b as usize;
                partner[4 * ci + b as usize] = 4 * ci + a as usize;
            }
        }
        let mut out = Vec::new();
        wiring.trace(|slot| partner[slot], &mut out);
        Ok(out)
    }

    /// Orients every edge canonically and sorts edges and loops, so that two
    /// diagrams built from the same crossings and boundary data compare equal
    /// regardless of construction order.
    pub fn canonicalize(&mut self) {
        for e in &mut self.edges {
            if e.ends[1] < e.ends[0] {
                e.ends.swap(0, 1);
                e.seam = -e.seam;
            }
        }
        self.edges.sort_by(|a, b| a.ends.cmp(&b.ends).then(a.seam.cmp(&b.seam)));
        for l in &mut self.loops {
            l.winding = l.winding.abs();
        }
        self.loops.sort();
    }

    /// The diagram with every crossing switched. Resolving it with
    /// [`SMOOTHING`] gives what the original resolves to under
    /// `SMOOTHING.mirror()`.
    pub fn switch_crossings(&self) -> Self {
        let mut d = self.clone();
        for c in &mut d.crossings {
            c.over = c.over.other();
        }
        d
    }

    pub fn canonical(mut self) -> Self {
        self.canonicalize();
        self
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("diagram serializes")
    }
}

/// Precomputed port/edge incidence used to trace components quickly.
pub(crate) struct Wiring<'a> {
    diagram: &'a Diagram,
    /// For each `4 * crossing index + port`: the edge and side attached there.
    port_edge: Vec<(usize, usize)>,
    /// Slot of every edge end: `Ok(port slot)` or `Err(marked end)`.
    end_slot: Vec<[Result<usize, ChordEnd>; 2]>,
    /// Edge ends at marked points, ordered by point and height.
    marked: Vec<(ChordEnd, usize, usize)>,
}

impl<'a> Wiring<'a> {
    pub(crate) fn new(d: &'a Diagram) -> Self {
        let index: HashMap<CrossingId, usize> = d.crossings.iter().enumerate().map(|(i, c)| (c.id, i)).collect();
        let mut port_edge = vec![(usize::MAX, 0); 4 * d.crossings.len()];
        let mut end_slot = Vec::with_capacity(d.edges.len());
        let mut marked = Vec::new();
        for (ei, e) in d.edges.iter().enumerate() {
            let mut slots = [Ok(0), Ok(0)];
            for (side, end) in e.ends.iter().enumerate() {
                slots[side] = match *end {
                    End::Port { crossing, port } => {
                        let slot = 4 * index[&crossing] + port as usize;
                        port_edge[slot] = (ei, side);
                        Ok(slot)
                    }
                    End::Marked { point, height } => {
                        let ce = ChordEnd { point, height };
                        marked.push((ce, ei, side));
                        Err(ce)
                    }
                };
            }
            end_slot.push(slots);
        }
        marked.sort();
        Wiring {
            diagram: d,
            port_edge,
            end_slot,
            marked,
        }
    }

    pub(crate) fn num_crossings(&self) -> usize {
        self.diagram.crossings.len()
    }

    pub(crate) fn over(&self, ci: usize) -> OverPair {
        self.diagram.crossings[ci].over
    }

    /// Follows edges, jumping between ports of a crossing via `partner`.
    pub(crate) fn trace(&self, partner: impl Fn(usize) -> usize, out: &mut Vec<Component>) {
        let edges = &self.diagram.edges;
        let mut visited = vec![false; edges.len()];
        for &(start, e0, s0) in &self.marked {
            if visited[e0] {
                continue;
            }
            let (mut e, mut side) = (e0, s0);
            let mut winding = 0;
            loop {
                visited[e] = true;
                winding += edges[e].seam_from(side);
                match self.end_slot[e][1 - side] {
                    Err(end) => {
                        out.push(Component::Arc { start, end, winding });
                        break;
                    }
                    Ok(slot) => (e, side) = self.port_edge[partner(slot)],
                }
            }
        }
        for e0 in 0..edges.len() {
            if visited[e0] {
                continue;
            }
            let (mut e, mut side) = (e0, 0);
            let mut winding = 0;
            loop {
                visited[e] = true;
                winding += edges[e].seam_from(side);
                let slot = self.end_slot[e][1 - side].expect("closed strand reached a marked point");
                (e, side) = self.port_edge[partner(slot)];
                if e == e0 {
                    debug_assert_eq!(side, 0);
                    break;
                }
            }
            out.push(Component::Loop { winding: winding.abs() });
        }
        out.extend(self.diagram.loops.iter().map(|l| Component::Loop {
            winding: l.winding.abs(),
        }));
    }
}

/// Replaces crossing `id` by its smoothing of sign `sign`.
pub fn resolve_crossing(d: &Diagram, id: CrossingId, sign: Sign) -> Result<Diagram, DiagramError> {
    let crossing = *d.crossing(id).ok_or(DiagramError::UnknownCrossing(id))?;
    let mut edges = d.edges.clone();
    let mut loops = d.loops.clone();
    let find = |edges: &[Edge], port: u8| -> (usize, usize) {
        let target = End::port(id, port);
        edges
            .iter()
            .enumerate()
            .find_map(|(i, e)| e.ends.iter().position(|x| *x == target).map(|s| (i, s)))
            .expect("validated diagram has every port attached")
    };
    for (a, b) in SMOOTHING.pairs(crossing.over, sign) {
        let (ia, sa) = find(&edges, a);
        let (ib, sb) = find(&edges, b);
        if ia == ib {
            // the edge runs from port a to port b; closing it gives a loop
            let winding = edges[ia].seam_from(sa);
            edges.remove(ia);
            loops.push(FreeLoop { winding: winding.abs() });
        } else {
            let far_a = edges[ia].ends[1 - sa];
            let far_b = edges[ib].ends[1 - sb];
            let seam = -edges[ia].seam_from(sa) + edges[ib].seam_from(sb);
            let (hi, lo) = if ia > ib { (ia, ib) } else { (ib, ia) };
            edges.remove(hi);
            edges.remove(lo);
            edges.push(Edge::new(far_a, far_b, seam));
        }
    }
    Ok(Diagram {
        surface: d.surface.clone(),
        crossings: d.crossings.iter().copied().filter(|c| c.id != id).collect(),
        edges,
        loops,
    })
}

/// Resolves every crossing with the sign given by `choice`, one at a time.
pub fn resolve_all_crossings(d: &Diagram, choice: &ResolutionChoice) -> Result<Diagram, DiagramError> {
    let mut cur = d.clone();
    for c in d.crossings() {
        let sign = *choice.0.get(&c.id).ok_or(DiagramError::UnknownCrossing(c.id))?;
        cur = resolve_crossing(&cur, c.id, sign)?;
    }
    Ok(cur)
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

/// Port names for a crossing of a vertical and a horizontal strand.
const NORTH: u8 = 0;
const EAST: u8 = 1;
const SOUTH: u8 = 2;
const WEST: u8 = 3;

/// `k` parallel copies of the core of the annulus.
pub fn build_core_stack(k: usize) -> Diagram {
    Diagram {
        surface: SurfaceModel::Annulus,
        crossings: Vec::new(),
        edges: Vec::new(),
        loops: vec![FreeLoop { winding: 1 }; k],
    }
}

/// The radial arc from `p1` to `p2` stacked above `k` core circles.
///
/// The arc runs straight up the top of the annulus, crossing the circles in
/// order from the inside out. Each circle leaves its crossing westward
/// (counterclockwise), passes the seam at the bottom, and returns from the
/// east.
pub fn build_theta_over_cores(k: usize) -> Diagram {
    let surface = SurfaceModel::MarkedAnnulus;
    let (p1, p2) = (End::marked(0, 0), End::marked(1, 0));
    if k == 0 {
        return Diagram {
            surface,
            crossings: Vec::new(),
            edges: vec![Edge::new(p1, p2, 0)],
            loops: Vec::new(),
        };
    }
    let ids: Vec<CrossingId> = (0..k as u32).map(CrossingId).collect();
    let crossings = ids
        .iter()
        .map(|&id| Crossing {
            id,
            over: OverPair::Even,
        })
        .collect();
    let mut edges = vec![Edge::new(p1, End::port(ids[0], SOUTH), 0)];
    for w in ids.windows(2) {
        edges.push(Edge::new(End::port(w[0], NORTH), End::port(w[1], SOUTH), 0));
    }
    edges.push(Edge::new(End::port(ids[k - 1], NORTH), p2, 0));
    for &id in &ids {
        edges.push(Edge::new(End::port(id, WEST), End::port(id, EAST), 1));
    }
    Diagram {
        surface,
        crossings,
        edges,
        loops: Vec::new(),
    }
}

/// Labels of the disk with marked points `p_0, …, p_{n+1}, q_n, …, q_1` in
/// clockwise order.
pub fn ladder_points(n: usize) -> Vec<String> {
    let mut v: Vec<String> = (0..=n + 1).map(|i| format!("p{i}")).collect();
    v.extend((1..=n).rev().map(|i| format!("q{i}")));
    v
}

/// Index of `p_i` on the ladder disk.
pub fn ladder_p(i: usize) -> usize {
    i
}

/// Index of `q_i` on the ladder disk with `n` rungs.
pub fn ladder_q(n: usize, i: usize) -> usize {
    2 * n + 2 - i
}

fn ladder_crossing(k: usize, l: usize, m: usize) -> CrossingId {
    // E_{l,m}, column l in 1..=k, row m in 1..=n
    CrossingId(((m - 1) * k + (l - 1)) as u32)
}

/// `x^k y_n` on the ladder disk: `k` vertical strands from `p_0` (bottom) to
/// `p_{n+1}` (top) stacked over the `n` horizontal rungs `p_i q_i`.
///
/// The `p_i` sit on the left side, the `q_i` on the right. Strands are
/// numbered 1..=k from left to right; at both `p_0` and `p_{n+1}` the left
/// strand is the higher one.
pub fn build_xk_yn(k: usize, n: usize) -> Result<Diagram, DiagramError> {
    if k == 0 || n == 0 {
        return Err(DiagramError::InvalidParameters(format!(
            "x^k y_n needs k >= 1 and n >= 1 (got k = {k}, n = {n})"
        )));
    }
    let surface = SurfaceModel::Disk {
        points: ladder_points(n),
    };
    let e = |l, m| ladder_crossing(k, l, m);
    let mut crossings = Vec::with_capacity(k * n);
    for m in 1..=n {
        for l in 1..=k {
            crossings.push(Crossing {
                id: e(l, m),
                over: OverPair::Even,
            });
        }
    }
    let mut edges = Vec::new();
    for l in 1..=k {
        let height = k - l;
        edges.push(Edge::new(
            End::marked(ladder_p(0), height),
            End::port(e(l, 1), SOUTH),
            0,
        ));
        for m in 1..n {
            edges.push(Edge::new(End::port(e(l, m), NORTH), End::port(e(l, m + 1), SOUTH), 0));
        }
        edges.push(Edge::new(
            End::port(e(l, n), NORTH),
            End::marked(ladder_p(n + 1), height),
            0,
        ));
    }
    for m in 1..=n {
        edges.push(Edge::new(End::marked(ladder_p(m), 0), End::port(e(1, m), WEST), 0));
        for l in 1..k {
            edges.push(Edge::new(End::port(e(l, m), EAST), End::port(e(l + 1, m), WEST), 0));
        }
        edges.push(Edge::new(End::port(e(k, m), EAST), End::marked(ladder_q(n, m), 0), 0));
    }
    Ok(Diagram {
        surface,
        crossings,
        edges,
        loops: Vec::new(),
    })
}

/// The all-negative smoothing of `x^k y_n`, for `1 <= k <= n`.
pub fn build_zkn(k: usize, n: usize) -> Result<Diagram, DiagramError> {
    if k > n {
        return Err(DiagramError::InvalidParameters(format!(
            "z_(k,n) needs k <= n (got k = {k}, n = {n})"
        )));
    }
    let d = build_xk_yn(k, n)?;
    let choice = ResolutionChoice::uniform(&d, Sign::Negative);
    Ok(resolve_all_crossings(&d, &choice)?.canonical())
}

/// The disk with points `p0, p1, p2, q1` and the arc `x = p0p2` stacked over
/// `y = p1q1`.
pub fn build_d1_xy() -> Diagram {
    build_xk_yn(1, 1).expect("k = n = 1 is valid")
}

/// A single loop with one self-crossing on a disk without marked points. The
/// sign names the smoothing that splits it into two loops.
pub fn build_kink(sign: Sign) -> Diagram {
    let id = CrossingId(0);
    let over = OverPair::Even;
    let [(a, b), (c, d)] = SMOOTHING.pairs(over, sign);
    Diagram {
        surface: SurfaceModel::Disk { points: Vec::new() },
        crossings: vec![Crossing { id, over }],
        edges: vec![
            Edge::new(End::port(id, a), End::port(id, b), 0),
            Edge::new(End::port(id, c), End::port(id, d), 0),
        ],
        loops: Vec::new(),
    }
}
