//! Building diagrams from a sequence of cups, caps, crossings and an
//! optional encircling unknot, read bottom to top.

use std::collections::BTreeMap;

use super::{Arc, ArcUnion, DiagramError, LinkDiagram};

/// An unknotted circle added by [`PlanarBuilder::encircle`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circle {
    /// Component index of the circle in the finished diagram.
    pub component: usize,
    /// Arcs of the other strands that pass through the circle, each with
    /// the sign of the two crossings where it does.
    pub gate: Vec<(Arc, i8)>,
}

#[derive(Debug, Clone)]
pub struct Built {
    pub diagram: LinkDiagram,
    pub circle: Option<Circle>,
}

#[derive(Debug, Clone, Copy)]
struct Column {
    label: Arc,
    up: bool,
}

#[derive(Debug, Default, Clone)]
pub struct PlanarBuilder {
    cols: Vec<Column>,
    crossings: Vec<[Arc; 4]>,
    uf: ArcUnion,
    next: Arc,
    circle: Option<(Arc, Vec<(Arc, i8)>)>,
}

fn bad(msg: impl Into<String>) -> DiagramError {
    DiagramError::MalformedSyntax(msg.into())
}

impl PlanarBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    fn fresh(&mut self) -> Arc {
        self.next += 1;
        self.next
    }

    pub fn width(&self) -> usize {
        self.cols.len()
    }

    /// Opens a cup whose two ends become columns `i` and `i + 1`.
    pub fn cup(&mut self, i: usize, left_up: bool) -> Result<&mut Self, DiagramError> {
        if i > self.cols.len() {
            return Err(bad(format!("cup at {i} on {} columns", self.cols.len())));
        }
        let label = self.fresh();
        self.cols.insert(i, Column { label, up: !left_up });
        self.cols.insert(i, Column { label, up: left_up });
        Ok(self)
    }

    /// Closes columns `i` and `i + 1` with a cap.
    pub fn cap(&mut self, i: usize) -> Result<&mut Self, DiagramError> {
        if i + 1 >= self.cols.len() {
            return Err(bad(format!("cap at {i} on {} columns", self.cols.len())));
        }
        let (l, r) = (self.cols[i], self.cols[i + 1]);
        if l.up == r.up {
            return Err(bad("cap joins two strands running the same way"));
        }
        self.uf.union(l.label, r.label);
        self.cols.drain(i..i + 2);
        Ok(self)
    }

    /// Crosses columns `i` and `i + 1`. With `positive`, the strand from the
    /// bottom left to the top right is over, which is a positive crossing
    /// when both strands run upward.
    pub fn cross(&mut self, i: usize, positive: bool) -> Result<&mut Self, DiagramError> {
        if i + 1 >= self.cols.len() {
            return Err(bad(format!("crossing at {i} on {} columns", self.cols.len())));
        }
        let (l, r) = (self.cols[i], self.cols[i + 1]);
        let (tl, tr) = (self.fresh(), self.fresh());
        // Corners counterclockwise: BL, BR, TR, TL.
        let corners = [l.label, r.label, tr, tl];
        // The under strand joins BR-TL when positive, else BL-TR.
        let (under_bottom, under_up) = if positive { (1, r.up) } else { (0, l.up) };
        let start = if under_up { under_bottom } else { (under_bottom + 2) % 4 };
        self.crossings.push(std::array::from_fn(|k| corners[(start + k) % 4]));
        self.cols[i] = Column { label: tl, up: r.up };
        self.cols[i + 1] = Column { label: tr, up: l.up };
        Ok(self)
    }

    /// Adds an unknotted circle around columns `i..i + s`, passing over them
    /// below and under them above. Only one circle is allowed.
    pub fn encircle(&mut self, i: usize, s: usize) -> Result<&mut Self, DiagramError> {
        if self.circle.is_some() {
            return Err(bad("only one circle is supported"));
        }
        if s == 0 || i + s > self.cols.len() {
            return Err(bad(format!("circle over columns {i}..{} of {}", i + s, self.cols.len())));
        }
        // The circle runs left to right below the strands and back above.
        let lower: Vec<Arc> = (0..=s).map(|_| self.fresh()).collect();
        let mut upper = vec![lower[0]];
        upper.extend((1..s).map(|_| self.fresh()));
        upper.push(lower[s]);
        let mut gate = Vec::with_capacity(s);
        for j in 0..s {
            let col = self.cols[i + j];
            let (sb, g, tnew) = (col.label, self.fresh(), self.fresh());
            let (cl, cr) = (lower[j], lower[j + 1]);
            self.crossings.push(if col.up { [sb, cr, g, cl] } else { [g, cl, sb, cr] });
            let (ul, ur) = (upper[j], upper[j + 1]);
            self.crossings.push([ur, tnew, ul, g]);
            gate.push((g, if col.up { 1 } else { -1 }));
            self.cols[i + j].label = tnew;
        }
        self.circle = Some((lower[0], gate));
        Ok(self)
    }

    /// Finishes the diagram. All columns must have been capped off. Arcs
    /// are renumbered `1..` in order of first appearance.
    pub fn finish(mut self) -> Result<Built, DiagramError> {
        if !self.cols.is_empty() {
            return Err(bad(format!("{} open columns", self.cols.len())));
        }
        let crossings: Vec<[Arc; 4]> =
            self.crossings.iter().map(|x| x.map(|a| self.uf.find(a))).collect();
        let mut all: Vec<Arc> = (1..=self.next).map(|a| self.uf.find(a)).collect();
        all.sort_unstable();
        all.dedup();
        let mut map: BTreeMap<Arc, Arc> = BTreeMap::new();
        for a in crossings.iter().flatten().copied().chain(all.iter().copied()) {
            let n = map.len() as Arc + 1;
            map.entry(a).or_insert(n);
        }
        let present: std::collections::BTreeSet<Arc> = crossings.iter().flatten().copied().collect();
        let loops: Vec<Arc> = all.iter().filter(|a| !present.contains(a)).map(|a| map[a]).collect();
        let crossings = crossings.into_iter().map(|x| x.map(|a| map[&a])).collect();
        let diagram = LinkDiagram::new(crossings, loops)?;
        let circle = self.circle.take().map(|(c_arc, gate)| {
            let c_arc = map[&self.uf.find(c_arc)];
            Circle {
                component: diagram.component_of(c_arc).expect("circle arc exists"),
                gate: gate.into_iter().map(|(g, sg)| (map[&self.uf.find(g)], sg)).collect(),
            }
        });
        Ok(Built { diagram, circle })
    }
}

/// Closure of an `s`-strand braid, with optional axis circle around all
/// strands just above the braid. Letters `k` and `-k` stand for the
/// generator `σ_k` and its inverse, `1 <= k < s`.
pub fn braid_closure(s: usize, word: &[i32], axis: bool) -> Built {
    try_braid_closure(s, word, axis).expect("valid braid word")
}

pub fn try_braid_closure(s: usize, word: &[i32], axis: bool) -> Result<Built, DiagramError> {
    if s == 0 {
        return Err(bad("braid on zero strands"));
    }
    let mut b = PlanarBuilder::new();
    for i in 0..s {
        b.cup(i, true)?;
    }
    for &g in word {
        let k = g.unsigned_abs() as usize;
        if k == 0 || k >= s {
            return Err(bad(format!("generator {g} on {s} strands")));
        }
        b.cross(k - 1, g > 0)?;
    }
    if axis {
        b.encircle(0, s)?;
    }
    for k in (0..s).rev() {
        b.cap(k)?;
    }
    b.finish()
}
