//! Kauffman bracket state sum and the Jones polynomial.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::diagram::{Arc, LinkDiagram};
use crate::laurent::LPoly1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BracketError {
    #[error("diagram has {crossings} crossings, above the cap of {cap}")]
    TooLarge { crossings: usize, cap: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StateSumConfig {
    pub max_crossings: usize,
    /// Split the enumeration across threads. Ignored without the
    /// `parallel` feature.
    pub parallel: bool,
}

impl Default for StateSumConfig {
    fn default() -> Self {
        Self { max_crossings: 24, parallel: true }
    }
}

impl StateSumConfig {
    pub fn sequential() -> Self {
        Self { parallel: false, ..Self::default() }
    }
}

/// Precomputed smoothing data: for each crossing, its four arcs as dense
/// indices.
struct StateSpace {
    n: usize,
    arcs: usize,
    crossings: Vec<[u32; 4]>,
}

impl StateSpace {
    fn new(d: &LinkDiagram) -> Self {
        let mut index: BTreeMap<Arc, u32> = BTreeMap::new();
        for a in d.arcs().chain(d.loops().iter().copied()) {
            let next = index.len() as u32;
            index.entry(a).or_insert(next);
        }
        let crossings = d.crossings().iter().map(|x| x.map(|a| index[&a])).collect();
        StateSpace { n: d.crossing_count(), arcs: index.len(), crossings }
    }

    /// Width of the histogram: `a - b` ranges over `-n..=n` in steps of 2,
    /// loops over `1..=arcs`.
    fn loop_slots(&self) -> usize {
        self.arcs + 1
    }

    fn histogram_len(&self) -> usize {
        (self.n + 1) * self.loop_slots()
    }

    /// Adds the states `lo..hi` to `hist`, indexed by (number of B
    /// smoothings, loop count).
    fn accumulate(&self, lo: u64, hi: u64, hist: &mut [u64]) {
        let mut parent = vec![0u32; self.arcs];
        fn find(p: &mut [u32], mut x: u32) -> u32 {
            while p[x as usize] != x {
                let up = p[p[x as usize] as usize];
                p[x as usize] = up;
                x = up;
            }
            x
        }
        for state in lo..hi {
            for (i, p) in parent.iter_mut().enumerate() {
                *p = i as u32;
            }
            let mut classes = self.arcs;
            for (i, x) in self.crossings.iter().enumerate() {
                let pairs = if state >> i & 1 == 0 { [(x[0], x[1]), (x[2], x[3])] } else { [(x[0], x[3]), (x[1], x[2])] };
                for (a, b) in pairs {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    if ra != rb {
                        parent[ra as usize] = rb;
                        classes -= 1;
                    }
                }
            }
            let bs = state.count_ones() as usize;
            hist[bs * self.loop_slots() + classes] += 1;
        }
    }

    fn histogram(&self, parallel: bool) -> Vec<u64> {
        let total = 1u64 << self.n;
        let len = self.histogram_len();
        #[cfg(feature = "parallel")]
        if parallel && self.n >= 10 {
            use rayon::prelude::*;
            let chunk = 1u64 << 8;
            return (0..total.div_ceil(chunk))
                .into_par_iter()
                .fold(
                    || vec![0u64; len],
                    |mut h, c| {
                        self.accumulate(c * chunk, ((c + 1) * chunk).min(total), &mut h);
                        h
                    },
                )
                .reduce(
                    || vec![0u64; len],
                    |mut a, b| {
                        a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                        a
                    },
                );
        }
        let _ = parallel;
        let mut h = vec![0u64; len];
        self.accumulate(0, total, &mut h);
        h
    }
}

/// `⟨D⟩ = Σ_states A^(a-b) δ^(loops-1)` with `δ = -A² - A⁻²`, in variable `A`.
pub fn kauffman_bracket(d: &LinkDiagram, cfg: &StateSumConfig) -> Result<LPoly1, BracketError> {
    let n = d.crossing_count();
    if n > cfg.max_crossings {
        return Err(BracketError::TooLarge { crossings: n, cap: cfg.max_crossings });
    }
    let space = StateSpace::new(d);
    let hist = space.histogram(cfg.parallel);
    let delta: LPoly1 = LPoly1::from_terms([([2], -1), ([-2], -1)]);
    let mut delta_pows = vec![LPoly1::one()];
    let mut out = LPoly1::zero();
    for bs in 0..=n {
        for loops in 1..space.loop_slots() {
            let count = hist[bs * space.loop_slots() + loops];
            if count == 0 {
                continue;
            }
            while delta_pows.len() < loops {
                let next = delta_pows.last().expect("nonempty") * &delta;
                delta_pows.push(next);
            }
            let a_exp = n as i64 - 2 * bs as i64;
            out += &delta_pows[loops - 1].shift([a_exp]).scale(&count.into());
        }
    }
    Ok(out.with_vars(['A']))
}

/// The Jones polynomial, kept in the bracket variable `A` and, when every
/// exponent is a multiple of four, also in `q = A⁻⁴`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JonesPolynomial {
    pub a_form: LPoly1,
    pub q_form: Option<LPoly1>,
}

impl JonesPolynomial {
    fn from_a_form(a_form: LPoly1) -> Self {
        let q_form = a_form.terms().all(|(e, _)| e[0] % 4 == 0).then(|| {
            LPoly1::from_terms(a_form.terms().map(|(e, c)| ([-e[0] / 4], c.clone()))).with_vars(['q'])
        });
        Self { a_form, q_form }
    }

    /// `V` at `q = 1`, which is `A = 1`.
    pub fn value_at_one(&self) -> num_bigint::BigInt {
        self.a_form.evaluate_unit(1)
    }

    /// Jones polynomial of the mirror image.
    pub fn mirror(&self) -> Self {
        Self::from_a_form(self.a_form.mirror().with_vars(['A']))
    }

    /// Equal, possibly after `q ↦ q⁻¹`.
    pub fn equal_up_to_mirror(&self, other: &LPoly1) -> bool {
        match &self.q_form {
            Some(q) => q == other || &q.mirror() == other,
            None => false,
        }
    }
}

impl fmt::Display for JonesPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.q_form {
            Some(q) => write!(f, "{q}"),
            None => write!(f, "{}", self.a_form),
        }
    }
}

/// `V = (-A³)^(-w) ⟨D⟩`.
pub fn jones(d: &LinkDiagram, cfg: &StateSumConfig) -> Result<JonesPolynomial, BracketError> {
    let bracket = kauffman_bracket(d, cfg)?;
    let w = d.writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let a_form = bracket.shift([-3 * w]).scale(&sign.into()).with_vars(['A']);
    Ok(JonesPolynomial::from_a_form(a_form))
}
