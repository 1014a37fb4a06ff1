//! Twisting a knot along an unknotted circle that links it.
//!
//! An [`AnnotatedPair`] is a diagram of a two-component link `k ∪ c` in
//! which `c` is drawn as a round circle: it passes over the strands of `k`
//! crossing its disk once, then under the same strands in reverse order.
//! The strands of `k` between those two rows of crossings form the gate.
//! Twisting `n` times along `c` replaces `c` by `n` full twists of the gate.

use std::collections::HashMap;
use std::ops::RangeInclusive;

use thiserror::Error;

use crate::diagram::{assemble, orient_tuple, Arc, ArcUnion, Built, DiagramError, LinkDiagram};
use crate::fox::{alexander_knot, alexander_link2_with, FoxError};
use crate::laurent::{LPoly, LPoly1, LPoly2, LaurentError, Var};
use crate::par_map;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwistError {
    #[error("the twisting circle meets no strands")]
    EmptyGate,
    #[error("not a twisting pair: {0}")]
    NotAPair(String),
    #[error("linking number {0} is not positive; reverse the circle first")]
    NonPositiveOmega(i64),
    #[error("this check needs linking number 1, found {0}")]
    OmegaNotOne(i64),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Fox(#[from] FoxError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

fn not_pair(msg: impl Into<String>) -> TwistError {
    TwistError::NotAPair(msg.into())
}

/// One strand through the circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct GateStrand {
    arc: Arc,
    /// Crossing where the circle passes over, and the arc's slot there.
    p: usize,
    p_slot: usize,
    /// Crossing where the circle passes under, and the arc's slot there.
    q: usize,
    q_slot: usize,
    /// Runs from the over row to the under row.
    up: bool,
}

/// Local picture of the gate. The frame has `x` along the circle as it
/// crosses over the strands and `y` pointing into the gate; it is
/// `standard` when that frame is counterclockwise in the plane.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Gate {
    strands: Vec<GateStrand>,
    standard: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotatedPair {
    diagram: LinkDiagram,
    c: usize,
    gate: Vec<(Arc, i8)>,
    omega: i64,
    layout: Option<Gate>,
}

impl AnnotatedPair {
    /// Validates `gate` against the diagram. Gate signs are the signs of
    /// the two crossings where each strand meets the circle. The gate may
    /// be given in any order and is stored in the order the circle meets it.
    pub fn new(diagram: LinkDiagram, c: usize, gate: &[(Arc, i8)]) -> Result<Self, TwistError> {
        if diagram.component_count() != 2 {
            return Err(not_pair(format!("{} components", diagram.component_count())));
        }
        if c > 1 {
            return Err(DiagramError::NoSuchComponent(c).into());
        }
        let comp = &diagram.components()[c];
        if comp.is_loop {
            if !gate.is_empty() {
                return Err(not_pair("gate given for a circle without crossings"));
            }
            return Ok(Self { diagram, c, gate: Vec::new(), omega: 0, layout: None });
        }
        // Crossings met by c, in order, with the slot c enters through.
        let passes: Vec<(usize, usize)> =
            comp.arcs.iter().map(|&a| diagram.arc_ends(a).expect("arc has ends").1).collect();
        for &(ci, _) in &passes {
            if diagram.under_component(ci) == diagram.over_component(ci) {
                return Err(not_pair(format!("the circle crosses itself at crossing {ci}")));
            }
        }
        let over: Vec<bool> = passes.iter().map(|&(_, p)| p % 2 == 1).collect();
        let len = over.len();
        let s = len / 2;
        let start = (0..len)
            .find(|&r| (0..len).all(|i| over[(r + i) % len] == (i < s)))
            .ok_or_else(|| not_pair("the circle does not pass over a run of strands and then under them"))?;
        let mut strands = Vec::with_capacity(s);
        let mut standard = None;
        for j in 0..s {
            let p = passes[(start + j) % len].0;
            let q = passes[(start + len - 1 - j) % len].0;
            let xp = diagram.crossings()[p];
            let xq = diagram.crossings()[q];
            let (p_slot, q_slot) = [0usize, 2]
                .iter()
                .find_map(|&ps| {
                    [1usize, 3].iter().find(|&&qs| xq[qs] == xp[ps]).map(|&qs| (ps, qs))
                })
                .ok_or_else(|| not_pair(format!("crossings {p} and {q} share no strand arc")))?;
            let c_out = if diagram.is_outgoing((p, 3)) { 3 } else { 1 };
            let here = p_slot == (c_out + 1) % 4;
            if *standard.get_or_insert(here) != here {
                return Err(not_pair("gate strands lie on both sides of the circle"));
            }
            if diagram.crossing_sign(p) != diagram.crossing_sign(q) {
                return Err(not_pair(format!("crossings {p} and {q} have opposite signs")));
            }
            strands.push(GateStrand { arc: xp[p_slot], p, p_slot, q, q_slot, up: p_slot == 2 });
        }
        let found: Vec<(Arc, i8)> = strands.iter().map(|g| (g.arc, diagram.crossing_sign(g.p))).collect();
        let mut given = gate.to_vec();
        let mut sorted = found.clone();
        given.sort_unstable();
        sorted.sort_unstable();
        if given != sorted {
            return Err(not_pair(format!("gate should be {}", format_gate(&found))));
        }
        let omega = found.iter().map(|&(_, s)| s as i64).sum();
        debug_assert_eq!(Ok(omega), diagram.linking_number(0, 1));
        let layout = Gate { strands, standard: standard.unwrap_or(true) };
        Ok(Self { diagram, c, gate: found, omega, layout: Some(layout) })
    }

    /// A pair from a builder run that added one circle.
    pub fn from_built(b: Built) -> Result<Self, TwistError> {
        let circle = b.circle.ok_or_else(|| not_pair("no circle was added"))?;
        Self::new(b.diagram, circle.component, &circle.gate)
    }

    pub fn diagram(&self) -> &LinkDiagram {
        &self.diagram
    }

    /// Component index of the circle.
    pub fn c(&self) -> usize {
        self.c
    }

    /// Component index of the knot.
    pub fn k(&self) -> usize {
        1 - self.c
    }

    pub fn gate(&self) -> &[(Arc, i8)] {
        &self.gate
    }

    /// Linking number of the knot with the circle.
    pub fn omega(&self) -> i64 {
        self.omega
    }

    /// The same pair with the circle reversed when that makes the linking
    /// number positive.
    pub fn with_positive_omega(&self) -> Result<Self, TwistError> {
        if self.omega >= 0 {
            return Ok(self.clone());
        }
        let d = self.diagram.reverse_component(self.c)?;
        let gate: Vec<(Arc, i8)> = self.gate.iter().map(|&(a, s)| (a, -s)).collect();
        Self::new(d, self.c, &gate)
    }

    /// Splices `n` full twists into the gate and removes the circle.
    pub fn insert_full_twists(&self, n: i64) -> Result<LinkDiagram, TwistError> {
        let gate = self.layout.as_ref().ok_or(TwistError::EmptyGate)?;
        let mut crossings = self.diagram.crossings().to_vec();
        let mut next = self.diagram.max_arc();
        let mut uf = ArcUnion::default();
        let mut touched = Vec::new();
        let mut cols = Vec::with_capacity(gate.strands.len());
        for g in &gate.strands {
            next += 1;
            crossings[g.q][g.q_slot] = next;
            cols.push((g.arc, g.up, next));
        }
        let mut box_cols: Vec<(Arc, bool)> = cols.iter().map(|&(a, up, _)| (a, up)).collect();
        full_twists(&mut crossings, &mut box_cols, &mut next, n, gate.standard);
        for (&(_, _, top), &(label, _)) in cols.iter().zip(&box_cols) {
            uf.union(label, top);
        }
        let mut drop: Vec<usize> = Vec::new();
        for g in &gate.strands {
            for ci in [g.p, g.q] {
                let x = crossings[ci];
                let (a, b) = if ci == g.p { (x[0], x[2]) } else { (x[1], x[3]) };
                uf.union(a, b);
                touched.extend([a, b]);
                drop.push(ci);
            }
        }
        drop.sort_unstable();
        let kept = crossings
            .into_iter()
            .enumerate()
            .filter(|(i, _)| drop.binary_search(i).is_err())
            .map(|(_, x)| x)
            .collect();
        Ok(assemble(kept, self.diagram.loops(), touched, uf)?)
    }

    /// Adds `n` full twists to the strands just outside the gate, keeping
    /// the circle. The result is isotopic to the original pair twisted `n`
    /// times along the circle.
    pub fn twist_keeping_circle(&self, n: i64) -> Result<Self, TwistError> {
        let gate = self.layout.as_ref().ok_or(TwistError::EmptyGate)?;
        let mut crossings = self.diagram.crossings().to_vec();
        let mut next = self.diagram.max_arc();
        let mut uf = ArcUnion::default();
        let mut ends = Vec::with_capacity(gate.strands.len());
        let mut box_cols = Vec::with_capacity(gate.strands.len());
        for g in &gate.strands {
            let slot = (g.p_slot + 2) % 4;
            next += 1;
            box_cols.push((crossings[g.p][slot], g.up));
            crossings[g.p][slot] = next;
            ends.push(next);
        }
        full_twists(&mut crossings, &mut box_cols, &mut next, n, gate.standard);
        for (&end, &(label, _)) in ends.iter().zip(&box_cols) {
            uf.union(label, end);
        }
        let d = assemble(crossings, self.diagram.loops(), Vec::new(), uf)?;
        let c_arc = self.diagram.components()[self.c].arcs[0];
        let c = d.component_of(c_arc).ok_or_else(|| not_pair("circle lost"))?;
        Self::new(d, c, &self.gate)
    }
}

/// Appends `|n|` full twists on the columns, read from the row nearest the
/// circle's over crossings toward the gate. Right-handed for `n > 0`.
fn full_twists(crossings: &mut Vec<[Arc; 4]>, cols: &mut [(Arc, bool)], next: &mut Arc, n: i64, standard: bool) {
    let s = cols.len();
    // In a reflected frame the same geometric twist reads as the mirror word.
    let bl_tr_over = (n > 0) == standard;
    for _ in 0..n.unsigned_abs() {
        for _ in 0..s {
            for i in 0..s.saturating_sub(1) {
                let ((bl, l_up), (br, r_up)) = (cols[i], cols[i + 1]);
                let (tl, tr) = (*next + 1, *next + 2);
                *next += 2;
                // (label, under, incoming) at each corner.
                let bl_e = (bl, !bl_tr_over, l_up);
                let br_e = (br, bl_tr_over, r_up);
                let tr_e = (tr, !bl_tr_over, !l_up);
                let tl_e = (tl, bl_tr_over, !r_up);
                let ends = if standard { [bl_e, br_e, tr_e, tl_e] } else { [bl_e, tl_e, tr_e, br_e] };
                crossings.push(orient_tuple(ends));
                cols[i] = (tl, r_up);
                cols[i + 1] = (tr, l_up);
            }
        }
    }
}

/// Text form of a gate, e.g. `[5+, 9-]`.
pub fn format_gate(gate: &[(Arc, i8)]) -> String {
    let items: Vec<String> =
        gate.iter().map(|&(a, s)| format!("{a}{}", if s > 0 { '+' } else { '-' })).collect();
    format!("[{}]", items.join(", "))
}

pub fn parse_gate(text: &str) -> Result<Vec<(Arc, i8)>, TwistError> {
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| not_pair(format!("gate `{text}` is not bracketed")))?;
    inner
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let (num, sign) = match t.chars().last() {
                Some('+') => (&t[..t.len() - 1], 1),
                Some('-') => (&t[..t.len() - 1], -1),
                _ => return Err(not_pair(format!("gate entry `{t}` lacks a sign"))),
            };
            let arc = num.trim().parse::<Arc>().map_err(|_| not_pair(format!("bad gate entry `{t}`")))?;
            Ok((arc, sign))
        })
        .collect()
}

/// Twist family data: the two-variable Alexander polynomial of `k ∪ c`
/// with `x` on `k` and `y` on `c`, and their linking number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistFamily {
    pub delta2: LPoly2,
    pub omega: i64,
}

impl TwistFamily {
    pub fn new(delta2: LPoly2, omega: i64) -> Self {
        Self { delta2, omega }
    }

    pub fn from_pair(pair: &AnnotatedPair) -> Result<Self, TwistError> {
        let delta2 = alexander_link2_with(pair.diagram(), pair.k())?;
        Ok(Self { delta2, omega: pair.omega() })
    }

    /// The family of the surgery dual pair.
    pub fn dual(&self) -> Self {
        Self { delta2: dual_polynomial(&self.delta2), omega: self.omega }
    }
}

/// Alexander polynomial of the knot twisted `n` times:
/// `Δ(t, t^{nω}) (t - 1) / (t^ω - 1)`, recentered about degree zero. The
/// overall sign is the one inherited from `Δ`.
pub fn family_alexander(fam: &TwistFamily, n: i64) -> Result<LPoly1, TwistError> {
    if fam.omega <= 0 {
        return Err(TwistError::NonPositiveOmega(fam.omega));
    }
    let sub = fam.delta2.substitute_power(Var::Y, n * fam.omega);
    // 1 + t + ... + t^(ω-1)
    let cyclotomic = LPoly1::from_terms((0..fam.omega).map(|e| ([e], 1)));
    Ok(recenter(&sub.exact_div(&cyclotomic)?))
}

/// `Δ(x, y⁻¹)`, recentered with its sign kept.
pub fn dual_polynomial(delta2: &LPoly2) -> LPoly2 {
    recenter(&delta2.invert(Var::Y))
}

/// Symmetrized exponents, original overall sign.
fn recenter<const N: usize>(p: &LPoly<N>) -> LPoly<N> {
    let sym = p.symmetrize().poly;
    let flipped = match (p.lex_min(), sym.lex_min()) {
        (Some((_, a)), Some((_, b))) => a.sign() != b.sign(),
        _ => false,
    };
    if flipped {
        -sym
    } else {
        sym
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cor26Row {
    pub n: i64,
    pub twisted: LPoly1,
    pub dual_twisted: LPoly1,
    pub pass: bool,
}

/// Per-`n` comparison of the family against its dual family twisted `-n` times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cor26Report {
    pub rows: Vec<Cor26Row>,
}

impl Cor26Report {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

pub fn check_cor26(fam: &TwistFamily, range: RangeInclusive<i64>) -> Result<Cor26Report, TwistError> {
    if fam.omega <= 0 {
        return Err(TwistError::NonPositiveOmega(fam.omega));
    }
    if fam.omega != 1 {
        return Err(TwistError::OmegaNotOne(fam.omega));
    }
    let dual = fam.dual();
    let ns: Vec<i64> = range.collect();
    let rows = par_map(&ns, |&n| -> Result<Cor26Row, TwistError> {
        let twisted = family_alexander(fam, n)?;
        let dual_twisted = family_alexander(&dual, -n)?;
        let pass = twisted.equal_up_to_units(&dual_twisted);
        Ok(Cor26Row { n, twisted, dual_twisted, pass })
    });
    Ok(Cor26Report { rows: rows.into_iter().collect::<Result<_, _>>()? })
}

/// Alexander polynomial of each family member together with its class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinctnessReport {
    /// `(n, Δ_n, class index)` in the order of the range.
    pub members: Vec<(i64, LPoly1, usize)>,
    /// Classes of `n` with equal polynomials up to units, ordered by their
    /// first member.
    pub classes: Vec<Vec<i64>>,
}

pub fn distinctness_report(fam: &TwistFamily, range: RangeInclusive<i64>) -> Result<DistinctnessReport, TwistError> {
    let ns: Vec<i64> = range.collect();
    let polys = par_map(&ns, |&n| family_alexander(fam, n));
    let mut index: HashMap<LPoly1, usize> = HashMap::new();
    let mut classes: Vec<Vec<i64>> = Vec::new();
    let mut members = Vec::with_capacity(ns.len());
    for (&n, p) in ns.iter().zip(polys) {
        let p = p?;
        let key = p.normalize_units().poly;
        let next = classes.len();
        let class = *index.entry(key).or_insert(next);
        if class == next {
            classes.push(Vec::new());
        }
        classes[class].push(n);
        members.push((n, p, class));
    }
    Ok(DistinctnessReport { members, classes })
}

/// Alexander polynomial of the twisted knot computed from its diagram.
pub fn twisted_alexander(pair: &AnnotatedPair, n: i64) -> Result<LPoly1, TwistError> {
    Ok(alexander_knot(&pair.insert_full_twists(n)?)?)
}
