//! Reidemeister moves on PD diagrams.

use std::collections::BTreeSet;

use super::{assemble, Arc, ArcUnion, DiagramError, FaceEdge, LinkDiagram, Slot};

/// A single Reidemeister move and where to apply it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MoveSpec {
    /// Adds a kink of the given sign on `arc`. With `under_first` the strand
    /// passes under at its first visit of the new crossing.
    R1Add { arc: Arc, sign: i8, under_first: bool },
    /// Removes the kink at `crossing`.
    R1Remove { crossing: usize },
    /// Pushes a finger of `over` across `under`, inside the face on the
    /// left (`left = true`) or right of `over`. Both arcs must border that face.
    R2Add { over: Arc, under: Arc, left: bool },
    /// Removes the bigon between two crossings where one strand is over at both.
    R2Remove { first: usize, second: usize },
    /// Slides a strand across the crossing opposite to it in the triangular
    /// face spanned by these three crossings.
    R3 { crossings: [usize; 3] },
}

impl MoveSpec {
    /// Change in crossing count when the move applies.
    pub fn crossing_delta(&self) -> i64 {
        match self {
            MoveSpec::R1Add { .. } => 1,
            MoveSpec::R1Remove { .. } => -1,
            MoveSpec::R2Add { .. } => 2,
            MoveSpec::R2Remove { .. } => -2,
            MoveSpec::R3 { .. } => 0,
        }
    }
}

fn illegal(msg: impl Into<String>) -> DiagramError {
    DiagramError::IllegalMoveSite(msg.into())
}

impl LinkDiagram {
    pub fn apply_move(&self, m: &MoveSpec) -> Result<LinkDiagram, DiagramError> {
        match *m {
            MoveSpec::R1Add { arc, sign, under_first } => self.r1_add(arc, sign, under_first),
            MoveSpec::R1Remove { crossing } => self.r1_remove(crossing),
            MoveSpec::R2Add { over, under, left } => self.r2_add(over, under, left),
            MoveSpec::R2Remove { first, second } => self.r2_remove(first, second),
            MoveSpec::R3 { crossings } => self.r3(crossings),
        }
    }

    fn r1_add(&self, arc: Arc, sign: i8, under_first: bool) -> Result<LinkDiagram, DiagramError> {
        if sign != 1 && sign != -1 {
            return Err(illegal("kink sign must be ±1"));
        }
        let is_loop = self.loops.contains(&arc);
        if !is_loop && self.arc_slots(arc).is_none() {
            return Err(illegal(format!("no arc {arc}")));
        }
        let loop_arc = self.max_arc() + 1;
        let exit = if is_loop { arc } else { self.max_arc() + 2 };
        let mut crossings = self.crossings.clone();
        let mut loops = self.loops.clone();
        if is_loop {
            loops.retain(|&l| l != arc);
        } else {
            let (_, head) = self.arc_ends(arc).expect("arc has ends");
            crossings[head.0][head.1] = exit;
        }
        let (a, b, c) = (arc, loop_arc, exit);
        crossings.push(match (under_first, sign) {
            (true, 1) => [a, c, b, b],
            (true, _) => [a, b, b, c],
            (false, 1) => [b, b, c, a],
            (false, _) => [b, a, c, b],
        });
        LinkDiagram::with_flips(crossings, loops, self.free_flips.clone())
    }

    /// A crossing is a removable kink when one arc occupies two adjacent slots.
    pub fn is_kink(&self, crossing: usize) -> bool {
        self.crossings.get(crossing).is_some_and(|x| (0..4).any(|p| x[p] == x[(p + 1) % 4]))
    }

    fn r1_remove(&self, crossing: usize) -> Result<LinkDiagram, DiagramError> {
        if !self.is_kink(crossing) {
            return Err(illegal(format!("crossing {crossing} is not a kink")));
        }
        self.remove_crossings(&[crossing])
    }

    /// Deletes crossings, joining each strand straight through them.
    pub(crate) fn remove_crossings(&self, which: &[usize]) -> Result<LinkDiagram, DiagramError> {
        let mut uf = ArcUnion::default();
        let mut touched = Vec::new();
        for &i in which {
            let x = self.crossings[i];
            uf.union(x[0], x[2]);
            uf.union(x[1], x[3]);
            touched.extend_from_slice(&x);
        }
        let drop: BTreeSet<usize> = which.iter().copied().collect();
        let crossings = self
            .crossings
            .iter()
            .enumerate()
            .filter(|(i, _)| !drop.contains(i))
            .map(|(_, x)| *x)
            .collect();
        assemble(crossings, &self.loops, touched, uf)
    }

    fn r2_add(&self, over: Arc, under: Arc, left: bool) -> Result<LinkDiagram, DiagramError> {
        if over == under {
            return Err(illegal("R2 needs two distinct arcs"));
        }
        let faces = self.faces();
        let face = faces
            .iter()
            .find(|f| f.iter().any(|e| e.arc == over && e.forward == left) && f.iter().any(|e| e.arc == under))
            .ok_or_else(|| illegal(format!("arcs {over} and {under} share no face on that side")))?;
        let ea: FaceEdge = *face.iter().find(|e| e.arc == over && e.forward == left).expect("found above");
        let eb: FaceEdge = *face.iter().find(|e| e.arc == under).expect("found above");

        // Local frame: `under` runs along +x with the face above it, `over`
        // runs along -x above the face. Segments are numbered along the face
        // walk. The finger of `over` crosses `under` at XR (x = 2) going down
        // and at XL (x = 1) going up.
        let mut next = self.max_arc();
        let mut fresh = || {
            next += 1;
            next
        };
        let mut crossings = self.crossings.clone();
        // Splits an arc into three along the walk direction, keeping the
        // original label on the tail piece and relabeling the head slot.
        let split = |e: &FaceEdge, crossings: &mut Vec<[Arc; 4]>, fresh: &mut dyn FnMut() -> Arc| {
            let mid = fresh();
            let other = fresh();
            if e.forward {
                crossings[e.to.0][e.to.1] = other;
                [e.arc, mid, other]
            } else {
                crossings[e.from.0][e.from.1] = other;
                [other, mid, e.arc]
            }
        };
        let [a1, a2, a3] = split(&ea, &mut crossings, &mut fresh);
        let [b1, b2, b3] = split(&eb, &mut crossings, &mut fresh);
        let sb = eb.forward;
        let sa = ea.forward;

        // Counterclockwise ends starting from +x, with which strand is under
        // and whether that end is incoming.
        // XR: +x b3, +y a1, -x b2, -y a2.
        let xr = orient_tuple([
            (b3, true, !sb),
            (a1, false, sa),
            (b2, true, sb),
            (a2, false, !sa),
        ]);
        // XL: +x b2, +y a3, -x b1, -y a2.
        let xl = orient_tuple([
            (b2, true, !sb),
            (a3, false, !sa),
            (b1, true, sb),
            (a2, false, sa),
        ]);
        crossings.push(xr);
        crossings.push(xl);
        LinkDiagram::with_flips(crossings, self.loops.clone(), self.free_flips.clone())
    }

    /// Bigon faces whose two crossings have one strand over at both.
    pub fn r2_remove_sites(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for f in self.faces() {
            if let Some(pair) = self.bigon_pair(&f) {
                out.push(pair);
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    fn bigon_pair(&self, f: &[FaceEdge]) -> Option<(usize, usize)> {
        if f.len() != 2 {
            return None;
        }
        let (x, y) = (f[0].from.0, f[0].to.0);
        if x == y || f[1].from.0 != y || f[1].to.0 != x {
            return None;
        }
        let over_at = |e: &FaceEdge| (e.from.1 % 2 == 1, e.to.1 % 2 == 1);
        match (over_at(&f[0]), over_at(&f[1])) {
            ((true, true), (false, false)) | ((false, false), (true, true)) => Some((x.min(y), x.max(y))),
            _ => None,
        }
    }

    fn r2_remove(&self, first: usize, second: usize) -> Result<LinkDiagram, DiagramError> {
        let key = (first.min(second), first.max(second));
        if !self.r2_remove_sites().contains(&key) {
            return Err(illegal(format!("no removable bigon between crossings {first} and {second}")));
        }
        self.remove_crossings(&[first, second])
    }

    /// Triangular faces admitting a third move, as crossing triples.
    pub fn r3_sites(&self) -> Vec<[usize; 3]> {
        let mut out: Vec<[usize; 3]> = self
            .faces()
            .iter()
            .filter(|f| self.r3_triangle(f).is_some())
            .map(|f| {
                let mut t = [f[0].from.0, f[1].from.0, f[2].from.0];
                t.sort_unstable();
                t
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    fn r3_triangle(&self, f: &[FaceEdge]) -> Option<()> {
        if f.len() != 3 {
            return None;
        }
        let cs: BTreeSet<usize> = f.iter().map(|e| e.from.0).collect();
        if cs.len() != 3 {
            return None;
        }
        let over_both = f.iter().any(|e| e.from.1 % 2 == 1 && e.to.1 % 2 == 1);
        over_both.then_some(())
    }

    fn r3(&self, triple: [usize; 3]) -> Result<LinkDiagram, DiagramError> {
        let mut want = triple;
        want.sort_unstable();
        let faces = self.faces();
        let face = faces
            .iter()
            .find(|f| {
                self.r3_triangle(f).is_some() && {
                    let mut t = [f[0].from.0, f[1].from.0, f[2].from.0];
                    t.sort_unstable();
                    t == want
                }
            })
            .ok_or_else(|| illegal(format!("crossings {triple:?} do not bound a slidable triangle")))?;

        // Rotating the triangle by a half turn swaps which end of each
        // strand meets which crossing while preserving crossing data: outer
        // slots take the label from the far end of the same strand, and
        // every new tuple starts half a turn later.
        let mid_slots: Vec<(Slot, Slot)> = face.iter().map(|e| (e.from, e.to)).collect();
        let outer_of = |s: Slot| (s.0, (s.1 + 2) % 4);
        let mut crossings = self.crossings.clone();
        for &ci in &want {
            let old = self.crossings[ci];
            let mut new = old;
            for p in 0..4 {
                let here = (ci, p);
                if mid_slots.iter().any(|&(a, b)| a == here || b == here) {
                    continue;
                }
                // `here` is an outer slot; the strand's mid slot is opposite.
                let mid = outer_of(here);
                let far = mid_slots
                    .iter()
                    .find_map(|&(a, b)| if a == mid { Some(b) } else if b == mid { Some(a) } else { None })
                    .expect("outer slot faces a mid edge");
                let far_outer = outer_of(far);
                new[p] = self.crossings[far_outer.0][far_outer.1];
            }
            crossings[ci] = [new[2], new[3], new[0], new[1]];
        }
        LinkDiagram::with_flips(crossings, self.loops.clone(), self.free_flips.clone())
    }

    /// Every legal move site, in a deterministic order.
    pub fn legal_moves(&self) -> Vec<MoveSpec> {
        let mut out = Vec::new();
        let mut arcs: Vec<Arc> = self.arcs().collect();
        arcs.sort_unstable();
        for &arc in &arcs {
            for sign in [1, -1] {
                for under_first in [true, false] {
                    out.push(MoveSpec::R1Add { arc, sign, under_first });
                }
            }
        }
        for crossing in 0..self.crossings.len() {
            if self.is_kink(crossing) {
                out.push(MoveSpec::R1Remove { crossing });
            }
        }
        for f in self.faces() {
            for ea in &f {
                for eb in &f {
                    if ea.arc != eb.arc {
                        out.push(MoveSpec::R2Add { over: ea.arc, under: eb.arc, left: ea.forward });
                    }
                }
            }
        }
        for (first, second) in self.r2_remove_sites() {
            out.push(MoveSpec::R2Remove { first, second });
        }
        for crossings in self.r3_sites() {
            out.push(MoveSpec::R3 { crossings });
        }
        out.dedup();
        out
    }
}

/// Builds a PD tuple from four ends listed counterclockwise, each tagged
/// with whether it belongs to the under strand and whether it is incoming.
pub(crate) fn orient_tuple(ends: [(Arc, bool, bool); 4]) -> [Arc; 4] {
    let start = ends
        .iter()
        .position(|&(_, under, incoming)| under && incoming)
        .expect("under strand has an incoming end");
    std::array::from_fn(|k| ends[(start + k) % 4].0)
}
