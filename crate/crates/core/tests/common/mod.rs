//! Oracles shared by the integration tests. They avoid the crate's own
//! Fox and state-sum code.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use slopekit::diagram::{Arc, LinkDiagram};
use slopekit::laurent::LPoly1;

pub fn t(e: i64) -> LPoly1 {
    LPoly1::monomial(1, [e])
}

pub fn c(k: i64) -> LPoly1 {
    LPoly1::constant(k)
}

/// Cofactor expansion; fine for the 3x3 matrices used here.
pub fn det(m: &[Vec<LPoly1>]) -> LPoly1 {
    match m.len() {
        0 => LPoly1::one(),
        1 => m[0][0].clone(),
        n => (0..n)
            .map(|j| {
                let sub: Vec<Vec<LPoly1>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect()).collect();
                let term = &m[0][j] * &det(&sub);
                if j % 2 == 0 { term } else { -term }
            })
            .sum(),
    }
}

fn identity(n: usize) -> Vec<Vec<LPoly1>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { LPoly1::one() } else { LPoly1::zero() }).collect()).collect()
}

fn matmul(a: &[Vec<LPoly1>], b: &[Vec<LPoly1>]) -> Vec<Vec<LPoly1>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum()).collect()).collect()
}

/// Reduced Burau matrix of `σ_i^{±1}` on `s` strands, `i` one-based.
pub fn burau_generator(s: usize, g: i32) -> Vec<Vec<LPoly1>> {
    let n = s - 1;
    let i = g.unsigned_abs() as usize - 1;
    let mut m = identity(n);
    if g > 0 {
        m[i][i] = -t(1);
        if i > 0 {
            m[i][i - 1] = t(1);
        }
        if i + 1 < n {
            m[i][i + 1] = c(1);
        }
    } else {
        m[i][i] = -t(-1);
        if i > 0 {
            m[i][i - 1] = c(1);
        }
        if i + 1 < n {
            m[i][i + 1] = t(-1);
        }
    }
    m
}

/// One-variable Alexander polynomial of the closed braid, up to units:
/// `det(I - B) (1 - t) / (1 - t^s)`.
pub fn burau_alexander(s: usize, word: &[i32]) -> LPoly1 {
    let mut b = identity(s - 1);
    for &g in word {
        b = matmul(&b, &burau_generator(s, g));
    }
    let i_minus_b: Vec<Vec<LPoly1>> =
        identity(s - 1).iter().zip(&b).map(|(r, q)| r.iter().zip(q).map(|(x, y)| x - y).collect()).collect();
    let num = &det(&i_minus_b) * &(&c(1) - &t(1));
    num.exact_div(&(&c(1) - &t(s as i64))).expect("Burau quotient is exact")
}

/// Jones polynomial of the torus knot `T(p, q)` in the variable `t`.
pub fn torus_jones(p: i64, q: i64) -> LPoly1 {
    let num: LPoly1 = [c(1), -t(p + 1), -t(q + 1), t(p + q)].into_iter().sum();
    let v = num.exact_div(&(&c(1) - &t(2))).unwrap();
    v.shift([(p - 1) * (q - 1) / 2])
}

/// The full twist `(σ1 ⋯ σ_{s-1})^s` raised to `n`.
pub fn full_twist_word(s: usize, n: i64) -> Vec<i32> {
    let one: Vec<i32> = (0..s).flat_map(|_| 1..s as i32).collect();
    let mut out = Vec::new();
    for _ in 0..n.abs() {
        if n > 0 {
            out.extend(&one);
        } else {
            out.extend(one.iter().rev().map(|g| -g));
        }
    }
    out
}

#[derive(Default)]
struct Union(BTreeMap<Arc, Arc>);

impl Union {
    fn find(&mut self, a: Arc) -> Arc {
        let p = *self.0.get(&a).unwrap_or(&a);
        if p == a {
            return a;
        }
        let r = self.find(p);
        self.0.insert(a, r);
        r
    }

    fn join(&mut self, a: Arc, b: Arc) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0.insert(ra.max(rb), ra.min(rb));
        }
    }
}

/// Rebuilds a diagram from kept crossings after joining arcs.
fn rebuild(d: &LinkDiagram, kept: Vec<[Arc; 4]>, mut uf: Union, touched: &[Arc]) -> LinkDiagram {
    let crossings: Vec<[Arc; 4]> = kept.iter().map(|x| x.map(|a| uf.find(a))).collect();
    let used: BTreeSet<Arc> = crossings.iter().flatten().copied().collect();
    let mut loops: BTreeSet<Arc> = d.loops().iter().copied().collect();
    for &a in touched {
        let r = uf.find(a);
        if !used.contains(&r) {
            loops.insert(r);
        }
    }
    LinkDiagram::new(crossings, loops.into_iter().collect()).expect("rebuilt diagram is valid")
}

/// The crossing with its over and under strands exchanged.
pub fn change_crossing(d: &LinkDiagram, i: usize) -> LinkDiagram {
    let mut xs = d.crossings().to_vec();
    let [a, b, cc, dd] = xs[i];
    xs[i] = if d.is_outgoing((i, 3)) { [b, cc, dd, a] } else { [dd, a, b, cc] };
    LinkDiagram::new(xs, d.loops().to_vec()).expect("crossing change is valid")
}

/// The oriented smoothing of crossing `i`.
pub fn smooth_crossing(d: &LinkDiagram, i: usize) -> LinkDiagram {
    let [a, b, cc, dd] = d.crossings()[i];
    let (over_in, over_out) = if d.is_outgoing((i, 3)) { (b, dd) } else { (dd, b) };
    let mut uf = Union::default();
    uf.join(a, over_out);
    uf.join(over_in, cc);
    let kept = d.crossings().iter().enumerate().filter(|&(k, _)| k != i).map(|(_, x)| *x).collect();
    rebuild(d, kept, uf, &[a, b, cc, dd])
}

/// The diagram with component `r` erased.
pub fn delete_component(d: &LinkDiagram, r: usize) -> LinkDiagram {
    let mut uf = Union::default();
    let mut kept = Vec::new();
    let mut touched = Vec::new();
    for (i, x) in d.crossings().iter().enumerate() {
        let (u, o) = (d.under_component(i), d.over_component(i));
        match (u == r, o == r) {
            (true, true) => {}
            (true, false) => {
                uf.join(x[1], x[3]);
                touched.push(x[1]);
            }
            (false, true) => {
                uf.join(x[0], x[2]);
                touched.push(x[0]);
            }
            (false, false) => kept.push(*x),
        }
    }
    let mut out = rebuild(d, kept, uf, &touched);
    let loops: Vec<Arc> = out.loops().iter().copied().filter(|&l| d.component_of(l) != Some(r)).collect();
    if loops.len() != out.loops().len() {
        out = LinkDiagram::new(out.crossings().to_vec(), loops).expect("valid");
    }
    out
}
