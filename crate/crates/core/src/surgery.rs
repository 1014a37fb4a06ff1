//! Surgery slopes, linking matrices and first homology of surgered manifolds.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurgeryError {
    #[error("component {0} has a non-integral framing")]
    NonIntegralFraming(usize),
    #[error("0/0 is not a slope")]
    ZeroSlope,
    #[error("framed link: {0}")]
    Parse(String),
}

/// A slope `p/q` with `q >= 0` and `gcd(p, q) = 1`. `1/0` is `∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slope {
    p: i64,
    q: u64,
}

impl Slope {
    pub fn new(p: i64, q: i64) -> Result<Self, SurgeryError> {
        if p == 0 && q == 0 {
            return Err(SurgeryError::ZeroSlope);
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 || (q == 0 && p < 0) {
            p = -p;
            q = -q;
        }
        Ok(Self { p, q: q as u64 })
    }

    pub fn integer(p: i64) -> Self {
        Self { p, q: 1 }
    }

    pub fn infinity() -> Self {
        Self { p: 1, q: 0 }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn is_infinite(&self) -> bool {
        self.q == 0
    }

    pub fn as_integer(&self) -> Option<i64> {
        (self.q == 1).then_some(self.p)
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.q {
            0 => f.write_str("inf"),
            1 => write!(f, "{}", self.p),
            q => write!(f, "{}/{q}", self.p),
        }
    }
}

impl FromStr for Slope {
    type Err = SurgeryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "inf" || s == "∞" {
            return Ok(Self::infinity());
        }
        let bad = || SurgeryError::Parse(format!("bad slope `{s}`"));
        match s.split_once('/') {
            Some((p, q)) => {
                Self::new(p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?)
            }
            None => Ok(Self::integer(s.parse().map_err(|_| bad())?)),
        }
    }
}

/// Surgery description: pairwise linking numbers and a slope per component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FramedLink {
    linking: Vec<Vec<i64>>,
    framings: Vec<Slope>,
}

impl FramedLink {
    /// All linking numbers zero, all framings `∞`.
    pub fn new(components: usize) -> Self {
        Self { linking: vec![vec![0; components]; components], framings: vec![Slope::infinity(); components] }
    }

    pub fn two_component(lk: i64, f0: Slope, f1: Slope) -> Self {
        let mut fl = Self::new(2);
        fl.set_linking(0, 1, lk);
        fl.framings = vec![f0, f1];
        fl
    }

    pub fn components(&self) -> usize {
        self.framings.len()
    }

    pub fn set_linking(&mut self, i: usize, j: usize, v: i64) {
        self.linking[i][j] = v;
        self.linking[j][i] = v;
    }

    pub fn set_framing(&mut self, i: usize, s: Slope) {
        self.framings[i] = s;
    }

    pub fn linking(&self, i: usize, j: usize) -> i64 {
        self.linking[i][j]
    }

    pub fn framing(&self, i: usize) -> Slope {
        self.framings[i]
    }

    /// Reorders components: new component `i` is old component `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.components();
        let mut out = Self::new(n);
        for i in 0..n {
            out.framings[i] = self.framings[perm[i]];
            for j in 0..n {
                out.linking[i][j] = self.linking[perm[i]][perm[j]];
            }
        }
        out
    }

    /// Parses `components: n`, `lk: i j v` and `framing: i p/q` (or
    /// `framing: i inf`) lines. Blank lines and `%` comments are ignored.
    pub fn parse(text: &str) -> Result<Self, SurgeryError> {
        let bad = |m: String| SurgeryError::Parse(m);
        let mut fl: Option<FramedLink> = None;
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('%').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) =
                line.split_once(':').ok_or_else(|| bad(format!("line {}: expected `key: value`", no + 1)))?;
            let fields: Vec<&str> = rest.split_whitespace().collect();
            let index = |s: &str, fl: &FramedLink| -> Result<usize, SurgeryError> {
                let i: usize = s.parse().map_err(|_| bad(format!("line {}: bad index `{s}`", no + 1)))?;
                if i >= fl.components() {
                    return Err(bad(format!("line {}: no component {i}", no + 1)));
                }
                Ok(i)
            };
            match (key.trim(), fields.as_slice()) {
                ("components", [n]) => {
                    if fl.is_some() {
                        return Err(bad(format!("line {}: repeated `components`", no + 1)));
                    }
                    let n = n.parse().map_err(|_| bad(format!("line {}: bad count", no + 1)))?;
                    fl = Some(FramedLink::new(n));
                }
                ("lk", [i, j, v]) => {
                    let f = fl.as_mut().ok_or_else(|| bad("`components` must come first".into()))?;
                    let (i, j) = (index(i, f)?, index(j, f)?);
                    if i == j {
                        return Err(bad(format!("line {}: linking of a component with itself", no + 1)));
                    }
                    let v = v.parse().map_err(|_| bad(format!("line {}: bad linking number", no + 1)))?;
                    f.set_linking(i, j, v);
                }
                ("framing", [i, s]) => {
                    let f = fl.as_mut().ok_or_else(|| bad("`components` must come first".into()))?;
                    let i = index(i, f)?;
                    f.framings[i] = s.parse()?;
                }
                _ => return Err(bad(format!("line {}: unrecognized `{line}`", no + 1))),
            }
        }
        fl.ok_or_else(|| bad("missing `components` line".into()))
    }
}

impl FromStr for FramedLink {
    type Err = SurgeryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

pub type IntMatrix = Vec<Vec<BigInt>>;

/// Framings on the diagonal, linking numbers off it. Components framed `∞`
/// are left out.
pub fn linking_matrix(fl: &FramedLink) -> Result<IntMatrix, SurgeryError> {
    let mut keep = Vec::new();
    for (i, s) in fl.framings.iter().enumerate() {
        if s.is_infinite() {
            continue;
        }
        s.as_integer().ok_or(SurgeryError::NonIntegralFraming(i))?;
        keep.push(i);
    }
    Ok(keep
        .iter()
        .map(|&i| {
            keep.iter()
                .map(|&j| BigInt::from(if i == j { fl.framings[i].p } else { fl.linking[i][j] }))
                .collect()
        })
        .collect())
}

/// `U · M · V = D` with `U`, `V` unimodular and `D` diagonal with
/// `d₁ | d₂ | …`, all `dᵢ >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// The `min(rows, cols)` diagonal entries.
    pub factors: Vec<BigInt>,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

fn identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

/// Smith normal form, pivoting on the entry of least absolute value.
pub fn smith_normal_form(m: &[Vec<BigInt>]) -> SmithForm {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut a: IntMatrix = m.to_vec();
    let mut u = identity(rows);
    let mut v = identity(cols);

    // Row op: row[dst] += k * row[src], mirrored on U.
    fn add_row(a: &mut IntMatrix, u: &mut IntMatrix, dst: usize, src: usize, k: &BigInt) {
        for mat in [a, u] {
            let s = mat[src].clone();
            for (x, y) in mat[dst].iter_mut().zip(&s) {
                *x += k * y;
            }
        }
    }
    fn add_col(a: &mut IntMatrix, v: &mut IntMatrix, dst: usize, src: usize, k: &BigInt) {
        for mat in [a, v] {
            for row in mat.iter_mut() {
                let s = row[src].clone();
                row[dst] += k * s;
            }
        }
    }

    for t in 0..rows.min(cols) {
        loop {
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| !a[i][j].is_zero())
                .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()));
            let Some((pi, pj)) = pivot else { break };
            a.swap(t, pi);
            u.swap(t, pi);
            for row in a.iter_mut().chain(v.iter_mut()) {
                row.swap(t, pj);
            }
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t].div_floor(&a[t][t]);
                if !q.is_zero() {
                    add_row(&mut a, &mut u, i, t, &-q);
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..cols {
                let q = a[t][j].div_floor(&a[t][t]);
                if !q.is_zero() {
                    add_col(&mut a, &mut v, j, t, &-q);
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match bad {
                Some(i) => add_row(&mut a, &mut u, t, i, &BigInt::one()),
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut().chain(u[t].iter_mut()) {
                *x = -x.clone();
            }
        }
    }
    let factors = (0..rows.min(cols)).map(|i| a[i][i].clone()).collect();
    SmithForm { factors, u, v }
}

/// Invariant factors of `H₁` other than 1; `0` stands for a `Z` summand.
pub fn first_homology(fl: &FramedLink) -> Result<Vec<BigInt>, SurgeryError> {
    let m = linking_matrix(fl)?;
    Ok(smith_normal_form(&m).factors.into_iter().filter(|d| !d.is_one()).collect())
}

/// `H1 = 0`, `H1 = Z`, `H1 = Z/2 + Z/2`, ...
pub fn format_homology(factors: &[BigInt]) -> String {
    if factors.is_empty() {
        return "H1 = 0".into();
    }
    let parts: Vec<String> =
        factors.iter().map(|d| if d.is_zero() { "Z".into() } else { format!("Z/{d}") }).collect();
    format!("H1 = {}", parts.join(" + "))
}

/// Framing of `k` after twisting `n` times along a circle it links `omega`
/// times: `p + n·omega²`.
pub fn slope_after_twist(framing: Slope, n: i64, omega: i64) -> Result<Slope, SurgeryError> {
    let p = framing.as_integer().ok_or(SurgeryError::NonIntegralFraming(0))?;
    Ok(Slope::integer(p + n * omega * omega))
}

/// Integer determinant by fraction-free elimination.
pub fn det_int(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut a = m.to_vec();
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &a[n - 1][n - 1]
}
