//! Oriented planar link diagrams described by PD codes.
//!
//! A crossing is a 4-tuple of arc labels listed counterclockwise, starting
//! from the incoming under-strand. Arcs are the edges between consecutive
//! crossings; crossing-free components are stored separately as loops and
//! written `Loop[a]`.

mod builder;
mod moves;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

pub use builder::{braid_closure, try_braid_closure, Built, Circle, PlanarBuilder};
pub use moves::MoveSpec;
pub(crate) use moves::orient_tuple;

pub type Arc = u32;

/// A position in a crossing tuple: `(crossing index, slot 0..4)`.
pub type Slot = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("malformed PD code: {0}")]
    MalformedSyntax(String),
    #[error("arc {arc} is used {count} times (expected exactly twice)")]
    ArcDegreeError { arc: Arc, count: usize },
    #[error("no coherent orientation for the component through arc {0}")]
    InconsistentOrientation(Arc),
    #[error("linking number needs two distinct components")]
    SameComponent,
    #[error("component {0} does not exist")]
    NoSuchComponent(usize),
    #[error("illegal move site: {0}")]
    IllegalMoveSite(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Arcs in the order they are traversed.
    pub arcs: Vec<Arc>,
    /// True for crossing-free components.
    pub is_loop: bool,
}

/// One side of an arc on the boundary of a face. Faces are walked with the
/// face on the left.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaceEdge {
    pub arc: Arc,
    pub from: Slot,
    pub to: Slot,
    /// Walk direction agrees with the arc's orientation.
    pub forward: bool,
}

#[derive(Debug, Clone)]
pub struct LinkDiagram {
    crossings: Vec<[Arc; 4]>,
    loops: Vec<Arc>,
    /// Lowest arcs of over-only components whose default orientation is flipped.
    free_flips: BTreeSet<Arc>,
    components: Vec<Component>,
    arc_component: BTreeMap<Arc, usize>,
    arc_slots: BTreeMap<Arc, [Slot; 2]>,
    /// Over strand runs from slot 1 to slot 3.
    over_forward: Vec<bool>,
}

impl PartialEq for LinkDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.crossings == other.crossings
            && self.loops == other.loops
            && self.over_forward == other.over_forward
    }
}

impl Eq for LinkDiagram {}

impl LinkDiagram {
    pub fn new(crossings: Vec<[Arc; 4]>, loops: Vec<Arc>) -> Result<Self, DiagramError> {
        Self::with_flips(crossings, loops, BTreeSet::new())
    }

    /// The crossing-free unknot.
    pub fn unknot() -> Self {
        Self::new(Vec::new(), vec![1]).expect("single loop is valid")
    }

    fn with_flips(
        crossings: Vec<[Arc; 4]>,
        mut loops: Vec<Arc>,
        free_flips: BTreeSet<Arc>,
    ) -> Result<Self, DiagramError> {
        if crossings.is_empty() && loops.is_empty() {
            return Err(DiagramError::MalformedSyntax("empty diagram".into()));
        }
        let mut slots: BTreeMap<Arc, Vec<Slot>> = BTreeMap::new();
        for (ci, x) in crossings.iter().enumerate() {
            for (p, &a) in x.iter().enumerate() {
                if a == 0 {
                    return Err(DiagramError::MalformedSyntax("arc labels must be positive".into()));
                }
                slots.entry(a).or_default().push((ci, p));
            }
        }
        for (&a, s) in &slots {
            if s.len() != 2 {
                return Err(DiagramError::ArcDegreeError { arc: a, count: s.len() });
            }
        }
        loops.sort_unstable();
        for w in loops.windows(2) {
            if w[0] == w[1] {
                return Err(DiagramError::ArcDegreeError { arc: w[0], count: 2 });
            }
        }
        for &l in &loops {
            if l == 0 {
                return Err(DiagramError::MalformedSyntax("arc labels must be positive".into()));
            }
            if let Some(s) = slots.get(&l) {
                return Err(DiagramError::ArcDegreeError { arc: l, count: s.len() + 2 });
            }
        }
        let arc_slots: BTreeMap<Arc, [Slot; 2]> =
            slots.into_iter().map(|(a, s)| (a, [s[0], s[1]])).collect();

        let mut d = LinkDiagram {
            crossings,
            loops,
            free_flips,
            components: Vec::new(),
            arc_component: BTreeMap::new(),
            arc_slots,
            over_forward: Vec::new(),
        };
        d.orient()?;
        Ok(d)
    }

    /// Walks the strand starting with `arc`, entering the crossing at `head`.
    /// Returns the arcs visited and the `(crossing, entry slot)` passages.
    fn walk(&self, arc: Arc, head: Slot) -> (Vec<Arc>, Vec<Slot>) {
        let mut arcs = vec![arc];
        let mut passages = Vec::new();
        let mut head = head;
        for _ in 0..=2 * self.crossings.len() {
            passages.push(head);
            let out = (head.0, (head.1 + 2) % 4);
            let next = self.crossings[out.0][out.1];
            if next == arc {
                break;
            }
            arcs.push(next);
            head = self.other_end(next, out);
        }
        (arcs, passages)
    }

    fn other_end(&self, arc: Arc, slot: Slot) -> Slot {
        let [a, b] = self.arc_slots[&arc];
        if a == slot {
            b
        } else {
            a
        }
    }

    fn orient(&mut self) -> Result<(), DiagramError> {
        let n = self.crossings.len();
        let mut over_forward = vec![None::<bool>; n];
        let mut seen: BTreeSet<Arc> = BTreeSet::new();
        let mut comps: Vec<Component> = Vec::new();
        let mut all_arcs: Vec<(Arc, bool)> = self.arc_slots.keys().map(|&a| (a, false)).collect();
        all_arcs.extend(self.loops.iter().map(|&a| (a, true)));
        all_arcs.sort_unstable();
        for (a, is_loop) in all_arcs {
            if seen.contains(&a) {
                continue;
            }
            if is_loop {
                seen.insert(a);
                comps.push(Component { arcs: vec![a], is_loop: true });
                continue;
            }
            let [s0, s1] = self.arc_slots[&a];
            let (arcs0, pass0) = self.walk(a, s0);
            let entered_at_zero = pass0.iter().filter(|s| s.1 == 0).count();
            let entered_at_two = pass0.iter().filter(|s| s.1 == 2).count();
            let forward = match (entered_at_zero, entered_at_two) {
                (0, 0) => {
                    let (arcs1, _) = self.walk(a, s1);
                    let prefer0 = match (arcs0.get(1), arcs1.get(1)) {
                        (Some(x), Some(y)) if x != y => x < y,
                        _ => s0 < s1,
                    };
                    prefer0 != self.free_flips.contains(&a)
                }
                (_, 0) => true,
                (0, _) => false,
                _ => return Err(DiagramError::InconsistentOrientation(a)),
            };
            let (arcs, passages) = if forward { (arcs0, pass0) } else { self.walk(a, s1) };
            for &(ci, p) in &passages {
                if p % 2 == 1 {
                    if over_forward[ci].is_some() {
                        return Err(DiagramError::InconsistentOrientation(a));
                    }
                    over_forward[ci] = Some(p == 1);
                }
            }
            seen.extend(arcs.iter().copied());
            comps.push(Component { arcs, is_loop: false });
        }
        self.over_forward = over_forward
            .into_iter()
            .map(|o| o.ok_or(DiagramError::MalformedSyntax("crossing without an over strand".into())))
            .collect::<Result<_, _>>()?;
        self.arc_component.clear();
        for (i, c) in comps.iter().enumerate() {
            for &a in &c.arcs {
                self.arc_component.insert(a, i);
            }
        }
        self.components = comps;
        Ok(())
    }

    pub fn crossings(&self) -> &[[Arc; 4]] {
        &self.crossings
    }

    pub fn loops(&self) -> &[Arc] {
        &self.loops
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn component_of(&self, arc: Arc) -> Option<usize> {
        self.arc_component.get(&arc).copied()
    }

    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        self.arc_component.keys().copied()
    }

    pub fn max_arc(&self) -> Arc {
        self.arc_component.keys().next_back().copied().unwrap_or(0)
    }

    /// The two slots where `arc` ends, or `None` for loops and unknown labels.
    pub fn arc_slots(&self, arc: Arc) -> Option<[Slot; 2]> {
        self.arc_slots.get(&arc).copied()
    }

    /// `(tail, head)` slots of `arc` with respect to its orientation.
    pub fn arc_ends(&self, arc: Arc) -> Option<(Slot, Slot)> {
        let [a, b] = self.arc_slots(arc)?;
        if self.is_outgoing(a) {
            Some((a, b))
        } else {
            Some((b, a))
        }
    }

    /// Whether the strand leaves its crossing through `slot`.
    pub fn is_outgoing(&self, (ci, p): Slot) -> bool {
        match p {
            0 => false,
            2 => true,
            1 => !self.over_forward[ci],
            _ => self.over_forward[ci],
        }
    }

    /// Component passing under at crossing `i`.
    pub fn under_component(&self, i: usize) -> usize {
        self.arc_component[&self.crossings[i][0]]
    }

    pub fn over_component(&self, i: usize) -> usize {
        self.arc_component[&self.crossings[i][1]]
    }

    /// Sign of crossing `i` by the right-hand rule.
    pub fn crossing_sign(&self, i: usize) -> i8 {
        if self.over_forward[i] {
            -1
        } else {
            1
        }
    }

    pub fn crossing_signs(&self) -> Vec<i8> {
        (0..self.crossings.len()).map(|i| self.crossing_sign(i)).collect()
    }

    pub fn writhe(&self) -> i64 {
        self.crossing_signs().iter().map(|&s| s as i64).sum()
    }

    pub fn linking_number(&self, c1: usize, c2: usize) -> Result<i64, DiagramError> {
        for c in [c1, c2] {
            if c >= self.components.len() {
                return Err(DiagramError::NoSuchComponent(c));
            }
        }
        if c1 == c2 {
            return Err(DiagramError::SameComponent);
        }
        let total: i64 = (0..self.crossings.len())
            .filter(|&i| {
                let (u, o) = (self.under_component(i), self.over_component(i));
                (u == c1 && o == c2) || (u == c2 && o == c1)
            })
            .map(|i| self.crossing_sign(i) as i64)
            .sum();
        Ok(total / 2)
    }

    /// Number of crossings on each component (self-crossings counted once).
    pub fn crossings_on_component(&self, c: usize) -> usize {
        (0..self.crossings.len())
            .filter(|&i| self.under_component(i) == c || self.over_component(i) == c)
            .count()
    }

    /// The same diagram with every crossing switched, which realizes the
    /// mirror image.
    pub fn mirror(&self) -> Self {
        let crossings = self
            .crossings
            .iter()
            .enumerate()
            .map(|(i, x)| if self.over_forward[i] { [x[1], x[2], x[3], x[0]] } else { [x[3], x[0], x[1], x[2]] })
            .collect();
        Self::with_flips(crossings, self.loops.clone(), self.free_flips.clone())
            .expect("mirroring preserves validity")
    }

    /// The same diagram with component `c` traversed backwards.
    pub fn reverse_component(&self, c: usize) -> Result<Self, DiagramError> {
        let comp = self.components.get(c).ok_or(DiagramError::NoSuchComponent(c))?;
        let mut crossings = self.crossings.clone();
        let mut has_under = false;
        for (i, x) in crossings.iter_mut().enumerate() {
            if self.under_component(i) == c {
                *x = [x[2], x[3], x[0], x[1]];
                has_under = true;
            }
        }
        let mut flips = self.free_flips.clone();
        if !has_under && !comp.is_loop {
            let low = *comp.arcs.iter().min().expect("components are nonempty");
            if !flips.remove(&low) {
                flips.insert(low);
            }
        }
        Self::with_flips(crossings, self.loops.clone(), flips)
    }

    /// Faces of the diagram, each walked with the face on the left.
    /// Loops are not part of any face boundary.
    pub fn faces(&self) -> Vec<Vec<FaceEdge>> {
        let mut visited = vec![[false; 4]; self.crossings.len()];
        let mut faces = Vec::new();
        for ci in 0..self.crossings.len() {
            for p in 0..4 {
                if visited[ci][p] {
                    continue;
                }
                let mut face = Vec::new();
                let mut cur = (ci, p);
                while !visited[cur.0][cur.1] {
                    visited[cur.0][cur.1] = true;
                    let arc = self.crossings[cur.0][cur.1];
                    let to = self.other_end(arc, cur);
                    face.push(FaceEdge { arc, from: cur, to, forward: self.is_outgoing(cur) });
                    cur = (to.0, (to.1 + 3) % 4);
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Euler-characteristic check: each connected piece of the projection
    /// has `V - E + F = 2`.
    pub fn is_planar(&self) -> bool {
        let n = self.crossings.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for [a, b] in self.arc_slots.values() {
            let (ra, rb) = (find(&mut parent, a.0), find(&mut parent, b.0));
            parent[ra] = rb;
        }
        let mut verts: BTreeMap<usize, i64> = BTreeMap::new();
        for i in 0..n {
            *verts.entry(find(&mut parent, i)).or_default() += 1;
        }
        let mut faces: BTreeMap<usize, i64> = BTreeMap::new();
        for f in self.faces() {
            *faces.entry(find(&mut parent, f[0].from.0)).or_default() += 1;
        }
        verts.iter().all(|(r, v)| v - 2 * v + faces.get(r).copied().unwrap_or(0) == 2)
    }

    /// PD text, `X[a,b,c,d]` tokens followed by `Loop[a]` tokens.
    pub fn to_pd_string(&self) -> String {
        let mut parts: Vec<String> = self
            .crossings
            .iter()
            .map(|x| format!("X[{},{},{},{}]", x[0], x[1], x[2], x[3]))
            .collect();
        parts.extend(self.loops.iter().map(|l| format!("Loop[{l}]")));
        parts.join(" ")
    }

    /// Renumbers arcs as `1..` in order of first appearance.
    pub fn relabeled(&self) -> Self {
        let mut map: BTreeMap<Arc, Arc> = BTreeMap::new();
        let mut next = 1;
        let mut label = |a: Arc, map: &mut BTreeMap<Arc, Arc>| {
            *map.entry(a).or_insert_with(|| {
                next += 1;
                next - 1
            })
        };
        let crossings = self.crossings.iter().map(|x| x.map(|a| label(a, &mut map))).collect();
        let loops = self.loops.iter().map(|&a| label(a, &mut map)).collect();
        let flips = self.free_flips.iter().filter_map(|a| map.get(a).copied()).collect();
        Self::with_flips(crossings, loops, flips).expect("relabeling preserves validity")
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pd_string())
    }
}

impl std::str::FromStr for LinkDiagram {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_pd(s)
    }
}

/// Parses whitespace-separated `X[a,b,c,d]` and `Loop[a]` tokens. Text from
/// `%` to the end of a line is ignored.
pub fn parse_pd(text: &str) -> Result<LinkDiagram, DiagramError> {
    let cleaned: String = text
        .lines()
        .map(|l| l.split('%').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join(" ");
    let mut crossings = Vec::new();
    let mut loops = Vec::new();
    let mut rest = cleaned.trim_start();
    let bad = |m: &str| DiagramError::MalformedSyntax(m.to_string());
    while !rest.is_empty() {
        let open = rest.find('[').ok_or_else(|| bad(rest))?;
        let head = rest[..open].trim();
        let close = rest.find(']').ok_or_else(|| bad("unterminated token"))?;
        if close < open {
            return Err(bad(rest));
        }
        let nums: Vec<Arc> = rest[open + 1..close]
            .split(',')
            .map(|t| t.trim().parse::<Arc>().map_err(|_| bad(&rest[..=close])))
            .collect::<Result<_, _>>()?;
        match (head, nums.as_slice()) {
            ("X", &[a, b, c, d]) => crossings.push([a, b, c, d]),
            ("Loop", &[a]) => loops.push(a),
            _ => return Err(bad(&rest[..=close])),
        }
        rest = rest[close + 1..].trim_start();
    }
    LinkDiagram::new(crossings, loops)
}

/// Union-find over arc labels; the representative is the smallest label.
#[derive(Debug, Default, Clone)]
pub(crate) struct ArcUnion {
    parent: BTreeMap<Arc, Arc>,
}

impl ArcUnion {
    pub(crate) fn find(&mut self, a: Arc) -> Arc {
        let mut r = a;
        while let Some(&p) = self.parent.get(&r) {
            if p == r {
                break;
            }
            r = p;
        }
        self.parent.insert(a, r);
        r
    }

    pub(crate) fn union(&mut self, a: Arc, b: Arc) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent.insert(hi, lo);
            self.parent.insert(lo, lo);
        }
    }
}

/// Rebuilds a diagram after joining arcs: every label is replaced by its
/// class representative, and classes that no longer meet a crossing become
/// loops.
pub(crate) fn assemble(
    crossings: Vec<[Arc; 4]>,
    old_loops: &[Arc],
    touched: impl IntoIterator<Item = Arc>,
    mut uf: ArcUnion,
) -> Result<LinkDiagram, DiagramError> {
    let crossings: Vec<[Arc; 4]> = crossings.into_iter().map(|x| x.map(|a| uf.find(a))).collect();
    let present: BTreeSet<Arc> = crossings.iter().flatten().copied().collect();
    let mut loops: BTreeSet<Arc> = old_loops.iter().map(|&a| uf.find(a)).collect();
    for a in touched {
        let r = uf.find(a);
        if !present.contains(&r) {
            loops.insert(r);
        }
    }
    LinkDiagram::new(crossings, loops.into_iter().collect())
}
