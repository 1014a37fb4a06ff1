//! Wirtinger presentations, Fox derivatives and Alexander polynomials.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::det::{det, minor, Matrix};
use crate::diagram::{Arc, ArcUnion, LinkDiagram};
use crate::laurent::{LPoly, LPoly1, LPoly2, LaurentError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FoxError {
    #[error("component {0} has no crossings; add a kink first")]
    CrossingFreeComponent(usize),
    #[error("expected {expected} components, found {found}")]
    ComponentCountMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// A letter `x_g^{±1}` of a relator word.
pub type Letter = (usize, i8);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WirtingerPresentation {
    /// One relator per crossing, in crossing order.
    pub relators: Vec<Vec<Letter>>,
    /// Component of each generator.
    pub component_of: Vec<usize>,
    /// Generator of each diagram arc. Arcs joined by passing over a
    /// crossing share a generator.
    pub arc_generator: BTreeMap<Arc, usize>,
}

impl WirtingerPresentation {
    pub fn generator_count(&self) -> usize {
        self.component_of.len()
    }
}

/// One generator per over-arc and one relator `x_j^ε x_i x_j^-ε x_k^-1` per
/// crossing, where `i`, `k` are the incoming and outgoing under-arcs, `j` is
/// the over-arc and `ε` the crossing sign.
pub fn wirtinger(d: &LinkDiagram) -> Result<WirtingerPresentation, FoxError> {
    if let Some(c) = d.components().iter().position(|c| c.is_loop) {
        return Err(FoxError::CrossingFreeComponent(c));
    }
    let mut uf = ArcUnion::default();
    for x in d.crossings() {
        uf.union(x[1], x[3]);
    }
    let mut arcs: Vec<Arc> = d.arcs().collect();
    arcs.sort_unstable();
    let mut rep_gen: BTreeMap<Arc, usize> = BTreeMap::new();
    let mut arc_generator = BTreeMap::new();
    let mut component_of = Vec::new();
    for &a in &arcs {
        let r = uf.find(a);
        let next = rep_gen.len();
        let g = *rep_gen.entry(r).or_insert_with(|| {
            component_of.push(d.component_of(a).expect("arc has a component"));
            next
        });
        arc_generator.insert(a, g);
    }
    let relators = d
        .crossings()
        .iter()
        .enumerate()
        .map(|(ci, x)| {
            let (i, j, k) = (arc_generator[&x[0]], arc_generator[&x[1]], arc_generator[&x[2]]);
            let e = d.crossing_sign(ci);
            vec![(j, e), (i, 1), (j, -e), (k, -1)]
        })
        .collect();
    Ok(WirtingerPresentation { relators, component_of, arc_generator })
}

/// Abelianized Fox derivatives of `word` with respect to every generator.
/// `images[g]` is the exponent vector of the monomial that `x_g` maps to.
pub fn fox_row<const N: usize>(word: &[Letter], images: &[[i64; N]]) -> Vec<LPoly<N>> {
    let mut row = vec![LPoly::zero(); images.len()];
    let mut e = [0i64; N];
    for &(g, s) in word {
        if s > 0 {
            row[g] += &LPoly::monomial(1, e);
            e = std::array::from_fn(|v| e[v] + images[g][v]);
        } else {
            e = std::array::from_fn(|v| e[v] - images[g][v]);
            row[g] -= &LPoly::monomial(1, e);
        }
    }
    row
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderMatrix<const N: usize> {
    /// Rows are relators (crossings), columns are generators.
    pub entries: Matrix<N>,
    /// Exponent vector of each generator's image.
    pub images: Vec<[i64; N]>,
}

impl<const N: usize> AlexanderMatrix<N> {
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.images.len()
    }

    /// Checks the fundamental identity `Σ_g ∂r/∂x_g (x_g - 1) = 0` on every row.
    pub fn row_identity_holds(&self) -> bool {
        self.entries.iter().all(|row| {
            let s: LPoly<N> = row
                .iter()
                .zip(&self.images)
                .map(|(e, &img)| e * &(&LPoly::monomial(1, img) - &LPoly::one()))
                .sum();
            s.is_zero()
        })
    }

    /// Determinant after deleting one row and one column. Zero when the
    /// remaining matrix is not square.
    pub fn minor_det(&self, row: usize, col: usize) -> LPoly<N> {
        if self.rows() != self.cols() {
            return LPoly::zero();
        }
        det(&minor(&self.entries, row, col))
    }
}

pub fn fox_matrix<const N: usize>(p: &WirtingerPresentation, images: Vec<[i64; N]>) -> AlexanderMatrix<N> {
    let entries = p.relators.iter().map(|r| fox_row(r, &images)).collect();
    AlexanderMatrix { entries, images }
}

/// Every generator maps to `t`.
pub fn fox_matrix_knot(p: &WirtingerPresentation) -> AlexanderMatrix<1> {
    fox_matrix(p, vec![[1]; p.generator_count()])
}

/// Generators on `x_component` map to `x`, the rest to `y`.
pub fn fox_matrix_link2(p: &WirtingerPresentation, x_component: usize) -> Result<AlexanderMatrix<2>, FoxError> {
    let found = p.component_of.iter().max().map_or(0, |m| m + 1);
    if found != 2 || x_component > 1 {
        return Err(FoxError::ComponentCountMismatch { expected: 2, found });
    }
    let images = p.component_of.iter().map(|&c| if c == x_component { [1, 0] } else { [0, 1] }).collect();
    Ok(fox_matrix(p, images))
}

fn expect_components(d: &LinkDiagram, expected: usize) -> Result<(), FoxError> {
    let found = d.component_count();
    if found != expected {
        return Err(FoxError::ComponentCountMismatch { expected, found });
    }
    Ok(())
}

/// Alexander polynomial of a knot, symmetrized with `Δ(1) = 1`.
pub fn alexander_knot(d: &LinkDiagram) -> Result<LPoly1, FoxError> {
    expect_components(d, 1)?;
    let m = fox_matrix_knot(&wirtinger(d)?);
    Ok(m.minor_det(0, 0).symmetrize().poly)
}

/// Two-variable Alexander polynomial, with `x` on the component holding the
/// lowest arc.
pub fn alexander_link2(d: &LinkDiagram) -> Result<LPoly2, FoxError> {
    alexander_link2_with(d, 0)
}

/// Two-variable Alexander polynomial with `x` on component `x_component`.
pub fn alexander_link2_with(d: &LinkDiagram, x_component: usize) -> Result<LPoly2, FoxError> {
    expect_components(d, 2)?;
    let p = wirtinger(d)?;
    let m = fox_matrix_link2(&p, x_component)?;
    Ok(link_quotient(&m, 0, 0)?.symmetrize().poly)
}

/// `D_j / (m_j - 1)` where `D_j` deletes `row` and the column `col` of a
/// generator with image `m_j`.
pub fn link_quotient(m: &AlexanderMatrix<2>, row: usize, col: usize) -> Result<LPoly2, FoxError> {
    let dj = m.minor_det(row, col);
    let mj = &LPoly::monomial(1, m.images[col]) - &LPoly::one();
    Ok(dj.exact_div(&mj)?)
}
