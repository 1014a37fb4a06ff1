//! Sparse Laurent polynomials with arbitrary-precision integer coefficients.
//!
//! `LPoly<N>` is a polynomial in `N` variables whose exponents may be
//! negative. The one- and two-variable cases used throughout the crate are
//! aliased as [`LPoly1`] and [`LPoly2`]. Terms are kept in a `BTreeMap`
//! keyed by the exponent vector, so iteration is in lexicographic order and
//! no stored coefficient is ever zero.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type LPoly1 = LPoly<1>;
pub type LPoly2 = LPoly<2>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("cannot parse polynomial term `{0}`")]
    Parse(String),
}

#[derive(Clone)]
pub struct LPoly<const N: usize> {
    terms: BTreeMap<[i64; N], BigInt>,
    vars: [char; N],
}

/// Which variable of a two-variable polynomial an operation targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

impl Var {
    fn index(self) -> usize {
        match self {
            Var::X => 0,
            Var::Y => 1,
        }
    }
}

pub(crate) fn default_vars<const N: usize>() -> [char; N] {
    let names: &[char] = match N {
        1 => &['t'],
        2 => &['x', 'y'],
        _ => &['x', 'y', 'z', 'w', 'u', 'v'],
    };
    std::array::from_fn(|i| names.get(i).copied().unwrap_or('z'))
}

impl<const N: usize> PartialEq for LPoly<N> {
    // Variable names are display metadata only.
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<const N: usize> Eq for LPoly<N> {}

impl<const N: usize> std::hash::Hash for LPoly<N> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl<const N: usize> Default for LPoly<N> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<const N: usize> LPoly<N> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new(), vars: default_vars() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, [0; N])
    }

    pub fn monomial(c: impl Into<BigInt>, exps: [i64; N]) -> Self {
        let mut p = Self::zero();
        p.add_term(exps, c.into());
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = ([i64; N], C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn with_vars(mut self, vars: [char; N]) -> Self {
        self.vars = vars;
        self
    }

    pub fn vars(&self) -> [char; N] {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&[0; N]).is_some_and(|c| c.is_one())
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&[i64; N], &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: [i64; N]) -> BigInt {
        self.terms.get(&exps).cloned().unwrap_or_default()
    }

    pub(crate) fn add_term(&mut self, exps: [i64; N], c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Lexicographically smallest term.
    pub fn lex_min(&self) -> Option<(&[i64; N], &BigInt)> {
        self.terms.iter().next()
    }

    /// Lexicographically largest term.
    pub fn lex_max(&self) -> Option<(&[i64; N], &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Smallest exponent of each variable, or zeros for the zero polynomial.
    pub fn min_exps(&self) -> [i64; N] {
        self.fold_exps(i64::min)
    }

    pub fn max_exps(&self) -> [i64; N] {
        self.fold_exps(i64::max)
    }

    fn fold_exps(&self, f: fn(i64, i64) -> i64) -> [i64; N] {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else { return [0; N] };
        let mut acc = *first;
        for e in it {
            for i in 0..N {
                acc[i] = f(acc[i], e[i]);
            }
        }
        acc
    }

    /// Multiplies by the monomial `vars^shift`.
    pub fn shift(&self, shift: [i64; N]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (std::array::from_fn(|i| e[i] + shift[i]), c.clone()))
            .collect();
        Self { terms, vars: self.vars }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero().with_vars(self.vars);
        }
        let terms = self.terms.iter().map(|(e, c)| (*e, c * k)).collect();
        Self { terms, vars: self.vars }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one().with_vars(self.vars);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replaces each selected variable `v` by `v⁻¹`.
    pub fn invert_vars(&self, which: [bool; N]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (std::array::from_fn(|i| if which[i] { -e[i] } else { e[i] }), c.clone()))
            .collect();
        Self { terms, vars: self.vars }
    }

    /// Evaluates with every variable set to `+1` or `-1`.
    pub fn evaluate_units(&self, values: [i8; N]) -> BigInt {
        assert!(values.iter().all(|v| *v == 1 || *v == -1), "evaluation points must be ±1");
        let mut sum = BigInt::zero();
        for (e, c) in &self.terms {
            let neg = (0..N).filter(|&i| values[i] == -1 && e[i].rem_euclid(2) == 1).count() % 2 == 1;
            if neg {
                sum -= c;
            } else {
                sum += c;
            }
        }
        sum
    }

    /// Divides out the unit `±vars^a` that moves every minimal exponent to
    /// zero and makes the lexicographically first coefficient positive.
    pub fn normalize_units(&self) -> UnitNormalForm<N> {
        let Some((_, lead)) = self.lex_min() else {
            return UnitNormalForm { poly: self.clone(), unit_sign: 1, unit_exps: [0; N] };
        };
        let sign: i8 = if lead.is_negative() { -1 } else { 1 };
        let mins = self.min_exps();
        let mut poly = self.shift(mins.map(|m| -m));
        if sign < 0 {
            poly = -poly;
        }
        UnitNormalForm { poly, unit_sign: sign, unit_exps: mins }
    }

    /// Equality up to multiplication by `±` a monomial.
    pub fn equal_up_to_units(&self, other: &Self) -> bool {
        self.normalize_units().poly == other.normalize_units().poly
    }

    /// Exact division in the Laurent ring: returns `r` with `self = divisor * r`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, LaurentError> {
        let (Some((dmin_e, _)), Some((dlead_e, dlead_c))) = (divisor.lex_min(), divisor.lex_max())
        else {
            return Err(LaurentError::DivisionByZero);
        };
        let (dmin_e, dlead_e, dlead_c) = (*dmin_e, *dlead_e, dlead_c.clone());
        let mut quotient = Self::zero().with_vars(self.vars);
        let Some((pmin_e, _)) = self.lex_min() else { return Ok(quotient) };
        // Lex order is a monomial order on Z^N, so lex_min(q * r) = lex_min(q) + lex_min(r).
        let floor: [i64; N] = std::array::from_fn(|i| pmin_e[i] - dmin_e[i]);
        let mut rem = self.clone();
        while let Some((re, rc)) = rem.lex_max() {
            let qe: [i64; N] = std::array::from_fn(|i| re[i] - dlead_e[i]);
            if qe < floor {
                return Err(LaurentError::NotDivisible);
            }
            let (qc, r) = rc.div_rem(&dlead_c);
            if !r.is_zero() {
                return Err(LaurentError::NotDivisible);
            }
            for (de, dc) in &divisor.terms {
                let e = std::array::from_fn(|i| de[i] + qe[i]);
                rem.add_term(e, -(dc * &qc));
            }
            quotient.add_term(qe, qc);
        }
        Ok(quotient)
    }

    /// Recenters each variable symmetrically about exponent zero when its
    /// exponent spread is even, then fixes the overall sign.
    ///
    /// Variables with odd spread are left at minimal exponent zero and
    /// reported as not centered. The sign is chosen so that the value at
    /// all-ones is positive, or the lexicographically first coefficient is
    /// positive when that value vanishes.
    pub fn symmetrize(&self) -> Symmetrized<N> {
        if self.is_zero() {
            return Symmetrized { poly: self.clone(), centered: [true; N] };
        }
        let base = self.normalize_units().poly;
        let maxs = base.max_exps();
        let centered: [bool; N] = maxs.map(|m| m % 2 == 0);
        let shift: [i64; N] = std::array::from_fn(|i| if centered[i] { -maxs[i] / 2 } else { 0 });
        let mut poly = base.shift(shift);
        let at_one = poly.evaluate_units([1; N]);
        let negate = if at_one.is_zero() {
            poly.lex_min().is_some_and(|(_, c)| c.is_negative())
        } else {
            at_one.is_negative()
        };
        if negate {
            poly = -poly;
        }
        Symmetrized { poly, centered }
    }
}

impl LPoly1 {
    /// Replaces `t` by `t^d`.
    pub fn substitute_power(&self, d: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| ([e[0] * d], c.clone()))).with_vars(self.vars)
    }

    /// `t → t⁻¹`.
    pub fn mirror(&self) -> Self {
        self.invert_vars([true])
    }

    pub fn evaluate_unit(&self, value: i8) -> BigInt {
        self.evaluate_units([value])
    }

    pub fn degree_span(&self) -> Option<(i64, i64)> {
        Some((self.lex_min()?.0[0], self.lex_max()?.0[0]))
    }
}

impl LPoly2 {
    /// Substitutes `target → t^d` and the other variable `→ t`.
    pub fn substitute_power(&self, target: Var, d: i64) -> LPoly1 {
        let ti = target.index();
        LPoly1::from_terms(self.terms.iter().map(|(e, c)| {
            let exp = (0..2).map(|i| if i == ti { e[i] * d } else { e[i] }).sum::<i64>();
            ([exp], c.clone())
        }))
    }

    /// Specializes `x → t^dx`, `y → t^dy`.
    pub fn specialize(&self, dx: i64, dy: i64) -> LPoly1 {
        LPoly1::from_terms(self.terms.iter().map(|(e, c)| ([e[0] * dx + e[1] * dy], c.clone())))
    }

    pub fn invert(&self, var: Var) -> Self {
        let mut which = [false; 2];
        which[var.index()] = true;
        self.invert_vars(which)
    }

    pub fn swap_vars(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| ([e[1], e[0]], c.clone()))).with_vars(self.vars)
    }
}

/// A polynomial with its unit divided out; see [`LPoly::normalize_units`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitNormalForm<const N: usize> {
    pub poly: LPoly<N>,
    pub unit_sign: i8,
    pub unit_exps: [i64; N],
}

impl<const N: usize> UnitNormalForm<N> {
    /// The applied unit `±vars^a` as a polynomial.
    pub fn unit(&self) -> LPoly<N> {
        LPoly::monomial(self.unit_sign, self.unit_exps).with_vars(self.poly.vars)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Symmetrized<const N: usize> {
    pub poly: LPoly<N>,
    /// Per variable: whether the exponent range is symmetric about zero.
    pub centered: [bool; N],
}

impl<const N: usize> Neg for LPoly<N> {
    type Output = LPoly<N>;
    fn neg(mut self) -> Self::Output {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl<const N: usize> Neg for &LPoly<N> {
    type Output = LPoly<N>;
    fn neg(self) -> Self::Output {
        -self.clone()
    }
}

impl<const N: usize> AddAssign<&LPoly<N>> for LPoly<N> {
    fn add_assign(&mut self, rhs: &LPoly<N>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<const N: usize> SubAssign<&LPoly<N>> for LPoly<N> {
    fn sub_assign(&mut self, rhs: &LPoly<N>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl<const N: usize> Add for &LPoly<N> {
    type Output = LPoly<N>;
    fn add(self, rhs: &LPoly<N>) -> LPoly<N> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<const N: usize> Sub for &LPoly<N> {
    type Output = LPoly<N>;
    fn sub(self, rhs: &LPoly<N>) -> LPoly<N> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<const N: usize> Mul for &LPoly<N> {
    type Output = LPoly<N>;
    fn mul(self, rhs: &LPoly<N>) -> LPoly<N> {
        let mut out = LPoly::zero().with_vars(self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(std::array::from_fn(|i| ea[i] + eb[i]), ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<const N: usize> $tr for LPoly<N> {
            type Output = LPoly<N>;
            fn $m(self, rhs: LPoly<N>) -> LPoly<N> {
                (&self).$m(&rhs)
            }
        }
        impl<const N: usize> $tr<&LPoly<N>> for LPoly<N> {
            type Output = LPoly<N>;
            fn $m(self, rhs: &LPoly<N>) -> LPoly<N> {
                (&self).$m(rhs)
            }
        }
        impl<const N: usize> $tr<LPoly<N>> for &LPoly<N> {
            type Output = LPoly<N>;
            fn $m(self, rhs: LPoly<N>) -> LPoly<N> {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<const N: usize> std::iter::Sum for LPoly<N> {
    fn sum<I: Iterator<Item = LPoly<N>>>(iter: I) -> Self {
        let mut acc = LPoly::zero();
        let mut first = true;
        for p in iter {
            if first {
                acc.vars = p.vars;
                first = false;
            }
            acc += &p;
        }
        acc
    }
}

impl<const N: usize> fmt::Display for LPoly<N> {
    /// Sorted term list such as `-1*t^-2 + 2*t^-1 - 1 + 2*t - 1*t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{mag}")?;
            for i in 0..N {
                match e[i] {
                    0 => {}
                    1 => write!(f, "*{}", self.vars[i])?,
                    d => write!(f, "*{}^{}", self.vars[i], d)?,
                }
            }
        }
        Ok(())
    }
}

impl<const N: usize> fmt::Debug for LPoly<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LPoly({self})")
    }
}

impl<const N: usize> LPoly<N> {
    /// Parses the text format written by `Display`, with the given variable
    /// names. Coefficients of `1` and `^1` exponents may be omitted.
    pub fn parse_with_vars(s: &str, vars: [char; N]) -> Result<Self, LaurentError> {
        let mut poly = Self::zero().with_vars(vars);
        for (negative, body) in split_terms(s)? {
            let (e, mut c) = parse_term::<N>(&body, &vars)?;
            if negative {
                c = -c;
            }
            poly.add_term(e, c);
        }
        Ok(poly)
    }
}

impl<const N: usize> FromStr for LPoly<N> {
    type Err = LaurentError;

    /// Two-variable input uses `x`, `y`. One-variable input accepts any
    /// single letter (`t`, `q`, `A`, ...) used consistently.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut vars = default_vars::<N>();
        if N == 1 {
            let letters: Vec<char> = {
                let mut v: Vec<char> = s.chars().filter(|c| c.is_alphabetic()).collect();
                v.sort_unstable();
                v.dedup();
                v
            };
            match letters.as_slice() {
                [] => {}
                [one] => vars[0] = *one,
                _ => return Err(LaurentError::Parse(s.to_string())),
            }
        }
        Self::parse_with_vars(s, vars)
    }
}

fn split_terms(s: &str) -> Result<Vec<(bool, String)>, LaurentError> {
    let err = || LaurentError::Parse(s.to_string());
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut negative = false;
    let mut prev: Option<char> = None;
    for ch in s.chars().filter(|c| !c.is_whitespace()) {
        if (ch == '+' || ch == '-') && prev != Some('^') {
            if !cur.is_empty() {
                out.push((negative, std::mem::take(&mut cur)));
                negative = false;
            }
            negative ^= ch == '-';
        } else {
            cur.push(ch);
        }
        prev = Some(ch);
    }
    if cur.is_empty() {
        return Err(err());
    }
    out.push((negative, cur));
    Ok(out)
}

fn parse_term<const N: usize>(body: &str, vars: &[char; N]) -> Result<([i64; N], BigInt), LaurentError> {
    let err = || LaurentError::Parse(body.to_string());
    let mut exps = [0i64; N];
    let mut coeff = BigInt::one();
    for factor in body.split('*') {
        if factor.is_empty() {
            return Err(err());
        }
        let first = factor.chars().next().ok_or_else(err)?;
        if first.is_ascii_digit() {
            coeff *= factor.parse::<BigInt>().map_err(|_| err())?;
            continue;
        }
        let idx = vars.iter().position(|v| *v == first).ok_or_else(err)?;
        let rest = &factor[first.len_utf8()..];
        let e = if rest.is_empty() {
            1
        } else {
            rest.strip_prefix('^').ok_or_else(err)?.parse::<i64>().map_err(|_| err())?
        };
        exps[idx] += e;
    }
    Ok((exps, coeff))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p1(s: &str) -> LPoly1 {
        s.parse().unwrap()
    }

    fn p2(s: &str) -> LPoly2 {
        s.parse().unwrap()
    }

    #[test]
    fn product_examples() {
        assert_eq!(p1("t - 1") * p1("t^-1 - 1"), p1("-t + 2 - t^-1"));
        assert!((p1("3*t^2 - t") * LPoly1::zero()).is_zero());
    }

    #[test]
    fn rebuilds_first_family_link_polynomial() {
        let theta = p2("x^-1 - 2 + x");
        let y = p2("y");
        let yinv = p2("y^-1");
        let built = -(&theta * &yinv) + LPoly2::one() - &theta * &y;
        let expanded = p2("-1*x^-1*y^-1 + 2*y^-1 - 1*x*y^-1 + 1 - 1*x^-1*y + 2*y - 1*x*y");
        assert_eq!(built, expanded);
        assert_eq!(built.len(), 7);
    }

    #[test]
    fn substitution_examples() {
        let delta = p2("-1*x^-1*y^-1 + 2*y^-1 - 1*x*y^-1 + 1 - 1*x^-1*y + 2*y - 1*x*y");
        assert_eq!(delta.substitute_power(Var::Y, 1), p1("-t^-2 + 2*t^-1 - 1 + 2*t - t^2"));
        assert_eq!(delta.substitute_power(Var::Y, 0), p1("-2*t^-1 + 5 - 2*t"));
        assert_eq!(LPoly2::one().substitute_power(Var::Y, 7), LPoly1::one());
    }

    #[test]
    fn inversion_examples() {
        assert_eq!(p2("x^2*y").invert(Var::X), p2("x^-2*y"));
        let starstar = p2("x^-1*y^-1 - 2*y^-1 + x*y^-1 + x^-2 - 4*x^-1 + 5 - 4*x + x^2 + x^-1*y - 2*y + x*y");
        assert_eq!(starstar.invert(Var::Y), starstar);
        assert_eq!(starstar.invert_vars([true, true]), starstar);
    }

    #[test]
    fn unit_normal_form_examples() {
        let nf = p1("-t^-1 + 2 - t").normalize_units();
        assert_eq!(nf.poly, p1("1 - 2*t + t^2"));
        assert_eq!(nf.unit(), p1("-t^-1"));
        assert_eq!(&nf.unit() * &nf.poly, p1("-t^-1 + 2 - t"));
        assert!(LPoly1::zero().normalize_units().poly.is_zero());
        assert_eq!(
            p1("-2*t^-1 + 5 - 2*t").normalize_units().poly,
            p1("2 - 5*t + 2*t^2").normalize_units().poly
        );
    }

    #[test]
    fn exact_division_examples() {
        assert_eq!(p1("t^2 - 1").exact_div(&p1("t - 1")).unwrap(), p1("t + 1"));
        let p = p2("3*x^-2*y + 7 - x*y^4");
        assert!(p.exact_div(&p).unwrap().is_one());
        assert_eq!(p2("x*y - x - y + 1").exact_div(&p2("x - 1")).unwrap(), p2("y - 1"));
        assert_eq!(p1("t^2 + 1").exact_div(&p1("t - 1")), Err(LaurentError::NotDivisible));
        assert_eq!(p1("2*t + 1").exact_div(&p1("2")), Err(LaurentError::NotDivisible));
        assert_eq!(p1("t").exact_div(&LPoly1::zero()), Err(LaurentError::DivisionByZero));
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(p1("-2*t^-1 + 5 - 2*t").evaluate_unit(1), BigInt::from(1));
        assert_eq!(p1("-2*t^-1 + 5 - 2*t").evaluate_unit(-1), BigInt::from(9));
        assert_eq!(LPoly1::zero().evaluate_unit(1), BigInt::zero());
    }

    #[test]
    fn text_format() {
        let p = p1("-t^-2 + 2*t^-1 - 1 + 2*t - t^2");
        assert_eq!(p.to_string(), "-1*t^-2 + 2*t^-1 - 1 + 2*t - 1*t^2");
        assert_eq!(p1(&p.to_string()), p);
        let q = p2("-1*x^-1*y^-1 + 2*y - 1*x*y");
        assert_eq!(q.to_string(), "-1*x^-1*y^-1 + 2*y - 1*x*y");
        assert_eq!(LPoly2::zero().to_string(), "0");
        assert_eq!(p1("q^-3 - q^3").vars(), ['q']);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("t + * 3".parse::<LPoly1>().is_err());
        assert!("x + z".parse::<LPoly2>().is_err());
        assert!("".parse::<LPoly1>().is_err());
        assert!("t +".parse::<LPoly1>().is_err());
        assert!("t^".parse::<LPoly1>().is_err());
        assert!("t + q".parse::<LPoly1>().is_err());
    }

    #[test]
    fn symmetrize_centers_and_signs() {
        let s = p1("1 - 2*t + t^2").symmetrize();
        assert_eq!(s.poly, p1("t^-1 - 2 + t"));
        let s = p1("2 - 5*t + 2*t^2").symmetrize();
        assert_eq!(s.poly, p1("-2*t^-1 + 5 - 2*t"));
        let s = p2("x*y - x - y + 1").symmetrize();
        assert_eq!(s.centered, [false, false]);
        assert_eq!(s.poly, p2("1 - x - y + x*y"));
    }

    #[test]
    fn pow_matches_repeated_product() {
        let p = p1("t^-1 - 2 + t");
        assert_eq!(p.pow(3), &(&p * &p) * &p);
        assert!(p.pow(0).is_one());
    }
}
