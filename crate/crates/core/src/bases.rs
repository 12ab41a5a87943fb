//! Explicit layout bases of Z-stabilizer groups and the translated-square
//! ("diagonal space") machinery behind them.
//!
//! Every generator is transcribed as a product of affine literals in the tables
//! below and parsed at construction time; nothing is re-derived, so a
//! transcription slip shows up as a failed rank or span check.

use std::collections::BTreeMap;
use std::time::Instant;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cube::{
    check_m, enumerate_subcubes, fmt_typeset, full_mask, submasks, typeset_mask, LocalSubcube,
    Subcube,
};
use crate::error::{Error, Result};
use crate::f2core::{row_space_equal, F2Matrix};
use crate::qrm::{big_unfolded, qrm_code, CssCode, QrmParams};

// ---------------------------------------------------------------------------
// Generator tables
// ---------------------------------------------------------------------------

/// Edges of the square {1,2} along the Gray path 00, 10, 11, 01 over (x1, x2).
const EDGES_12: [&str; 3] = ["(X2+1)", "X1", "X2"];

/// Edges of the square {3,4} along the Gray path over (x4, x3), the order used
/// by the second axis of the 4-cube planar layout.
const EDGES_43: [&str; 3] = ["(X3+1)", "X4", "X3"];

/// Squares appended to the 4-cube product basis: type {1,2} and type {3,4}.
const SMALL_APPENDED: [&str; 2] = ["X3(X4+1)", "(X1+1)X2"];

/// Edges of the cube {1,2,3} along the Gray path over (x1, x2, x3).
const EDGES_123: [&str; 7] = [
    "(X2+1)(X3+1)",
    "X1(X3+1)",
    "X2(X3+1)",
    "(X1+1)X2",
    "X2X3",
    "X1X3",
    "(X2+1)X3",
];

/// Edges of the cube {4,5,6} along the Gray path over (x6, x5, x4): the
/// three-variable Gray family instantiated with X = X6, Y = X5, Z = X4.
const EDGES_456: [&str; 7] = [
    "(X4+1)(X5+1)",
    "(X4+1)X6",
    "(X4+1)X5",
    "X5(X6+1)",
    "X4X5",
    "X4X6",
    "X4(X5+1)",
];

/// The eight squares appended to the 49 planar product squares of the 6-cube:
/// three upper-left, three upper-right, lower-left, lower-right.
const QRM611_APPENDED: [&str; 8] = [
    "X2X4(X5+1)(X6+1)",
    "X1X4(X5+1)(X6+1)",
    "(X2+1)X4(X5+1)(X6+1)",
    "(X1+1)(X2+1)X3X5",
    "(X1+1)(X2+1)X3X6",
    "(X1+1)(X2+1)X3(X5+1)",
    "X3(X4+1)(X5+1)(X6+1)",
    "(X1+1)(X2+1)(X3+1)X4",
];

/// Squares dropped from the 6-cube planar basis to obtain the big unfolded code:
/// lower-left, grid center, lower-right.
const BIG_UNFOLDED_REMOVED: [&str; 3] = [
    "X3(X4+1)(X5+1)(X6+1)",
    "(X1+1)X2X5(X6+1)",
    "(X1+1)(X2+1)(X3+1)X4",
];

/// Edges of the three squares of the 4×4×4 layout, natural Gray orientation.
const EDGES_34: [&str; 3] = ["(X4+1)", "X3", "X4"];
const EDGES_56: [&str; 3] = ["(X6+1)", "X5", "X6"];

/// Squares of the cube {1,2,3} reused in the 7-cube construction:
/// two of type {1,3}, one of type {1,2}, one of type {2,3}.
const SQUARES_123: [&str; 4] = ["X2", "(X2+1)", "X3", "X1"];

/// Squares of the cube {4,5,6}: two of type {4,6}, one of type {5,6}, one of type {4,5}.
const SQUARES_456: [&str; 4] = ["X5", "(X5+1)", "X4", "X6"];

/// One edge of each type in the cube {1,2,3}.
const ONE_EDGE_EACH_123: [&str; 3] = ["X2X3", "X1X3", "X1X2"];

/// The 6-cube squares of types {1,3}, {1,3}, {1,2}, {2,3} used as the
/// NE-SW block of the 7-cube main layer (extended along coordinate 7).
const QRM722_NE_SW: [&str; 4] = [
    "X2X4(X5+1)(X6+1)",
    "(X2+1)X4(X5+1)(X6+1)",
    "X3(X4+1)(X5+1)(X6+1)",
    "X1X4(X5+1)(X6+1)",
];

/// The 6-cube squares of types {4,6}, {4,6}, {5,6}, {4,5} used as the
/// NW-SE block of the 7-cube main layer (extended along coordinate 7).
const QRM722_NW_SE: [&str; 4] = [
    "(X1+1)(X2+1)X3X5",
    "(X1+1)(X2+1)X3(X5+1)",
    "(X1+1)(X2+1)(X3+1)X4",
    "(X1+1)(X2+1)X3X6",
];

/// The single cubes of type {1,2,3} and {4,5,6} closing the 7-cube basis.
const QRM722_CLOSING: [&str; 2] = ["X4(X5+1)(X6+1)X7", "(X1+1)(X2+1)X3X7"];

/// Fixed values of the two coordinates left over by each boundary slab of the
/// 4×4×4 layout. Slabs sit on the outer faces: the Gray position 0 face for
/// bottom/left/front and position 3 for top/right/back.
const RUBIK_BOTTOM_FIX: &str = "(X5+1)(X6+1)";
const RUBIK_TOP_FIX: &str = "(X5+1)X6";
const RUBIK_LEFT_FIX: &str = "(X1+1)(X2+1)";
const RUBIK_RIGHT_FIX: &str = "(X1+1)X2";
const RUBIK_BACK_FIX: &str = "(X3+1)X4";
const RUBIK_FRONT_FIX: &str = "(X3+1)(X4+1)";

fn local(domain: &[usize], polys: &[&str]) -> Result<Vec<LocalSubcube>> {
    polys
        .iter()
        .map(|p| LocalSubcube::from_poly(domain, p))
        .collect()
}

fn embed_all(m: usize, gens: &[LocalSubcube]) -> Result<Vec<Subcube>> {
    gens.iter().map(|g| g.embed(m)).collect()
}

fn parse_full(m: usize, polys: &[&str]) -> Result<Vec<Subcube>> {
    let domain: Vec<usize> = (1..=m).collect();
    embed_all(m, &local(&domain, polys)?)
}

/// Cartesian product of two families on disjoint coordinate sets, in row-major
/// order (`a` outer, `b` inner).
///
/// # Errors
///
/// Returns [`Error::Validation`] if some pair of domains overlaps.
pub fn product_basis(a: &[LocalSubcube], b: &[LocalSubcube]) -> Result<Vec<LocalSubcube>> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x.product(y)?);
        }
    }
    Ok(out)
}

fn products(families: &[Vec<LocalSubcube>]) -> Result<Vec<LocalSubcube>> {
    let mut acc = families
        .first()
        .cloned()
        .ok_or_else(|| Error::Validation("empty product".into()))?;
    for f in &families[1..] {
        acc = product_basis(&acc, f)?;
    }
    Ok(acc)
}

/// The 49 product squares of the 6-cube planar layout (rows follow the
/// {1,2,3} edges, columns the {4,5,6} edges).
///
/// # Errors
///
/// Propagates table parsing errors.
pub fn qrm611_product_squares() -> Result<Vec<Subcube>> {
    let g = products(&[local(&[1, 2, 3], &EDGES_123)?, local(&[4, 5, 6], &EDGES_456)?])?;
    embed_all(6, &g)
}

/// The 8 appended squares of the 6-cube planar layout.
///
/// # Errors
///
/// Propagates table parsing errors.
pub fn qrm611_appended_squares() -> Result<Vec<Subcube>> {
    parse_full(6, &QRM611_APPENDED)
}

/// The three squares removed to form the big unfolded code.
///
/// # Errors
///
/// Propagates table parsing errors.
pub fn big_unfolded_removed() -> Result<Vec<Subcube>> {
    parse_full(6, &BIG_UNFOLDED_REMOVED)
}

fn qrm611_generators() -> Result<Vec<Subcube>> {
    let mut g = qrm611_product_squares()?;
    g.extend(qrm611_appended_squares()?);
    Ok(g)
}

/// The 54 Z generators of the big unfolded code, in layout order.
///
/// # Errors
///
/// Returns [`Error::Internal`] if a removed square is missing from the 57-element list.
pub fn big_unfolded_generators() -> Result<Vec<Subcube>> {
    let removed = big_unfolded_removed()?;
    let all = qrm611_generators()?;
    for r in &removed {
        if !all.contains(r) {
            return Err(Error::Internal(format!(
                "removed square {r} is not a 6-cube planar generator"
            )));
        }
    }
    Ok(all.into_iter().filter(|g| !removed.contains(g)).collect())
}

// ---------------------------------------------------------------------------
// Named bases
// ---------------------------------------------------------------------------

/// The five shipped layout bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BasisKind {
    /// 11 squares of QRM_4(1,1).
    SmallUnfolded,
    /// 57 squares of QRM_6(1,1).
    Qrm611,
    /// 54 squares of the big unfolded code.
    BigUnfolded,
    /// 42 cubes of QRM_6(1,2) in the 4×4×4 layout.
    Rubik,
    /// 99 cubes of QRM_7(2,2).
    Qrm722,
}

impl BasisKind {
    /// All kinds, in presentation order.
    pub const ALL: [Self; 5] = [
        Self::SmallUnfolded,
        Self::Qrm611,
        Self::BigUnfolded,
        Self::Rubik,
        Self::Qrm722,
    ];

    /// Registry label.
    #[must_use]
    pub fn label(self) -> &'static str {
        match self {
            Self::SmallUnfolded => "small-unfolded",
            Self::Qrm611 => "qrm611",
            Self::BigUnfolded => "big-unfolded",
            Self::Rubik => "rubik",
            Self::Qrm722 => "qrm722",
        }
    }

    /// Expected number of generators.
    #[must_use]
    pub fn expected_size(self) -> usize {
        match self {
            Self::SmallUnfolded => 11,
            Self::Qrm611 => 57,
            Self::BigUnfolded => 54,
            Self::Rubik => 42,
            Self::Qrm722 => 99,
        }
    }

    /// Builds the basis.
    ///
    /// # Errors
    ///
    /// Propagates construction errors.
    pub fn build(self) -> Result<NamedBasis> {
        match self {
            Self::SmallUnfolded => basis_small_unfolded(),
            Self::Qrm611 => basis_qrm611(),
            Self::BigUnfolded => basis_big_unfolded(),
            Self::Rubik => basis_rubik(),
            Self::Qrm722 => basis_qrm722(),
        }
    }
}

impl std::str::FromStr for BasisKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "small-unfolded" => Ok(Self::SmallUnfolded),
            "qrm611" => Ok(Self::Qrm611),
            "big-unfolded" => Ok(Self::BigUnfolded),
            "rubik" | "qrm612" => Ok(Self::Rubik),
            "qrm722" | "qrm722-punctured" => Ok(Self::Qrm722),
            other => Err(Error::Validation(format!("unknown basis label {other:?}"))),
        }
    }
}

/// An ordered list of subcube generators meant to be a basis of a code's
/// Z-stabilizer group.
#[derive(Clone, Debug)]
pub struct NamedBasis {
    label: String,
    m: usize,
    generators: Vec<Subcube>,
    target: CssCode,
}

/// Outcome of checking a [`NamedBasis`] against its target code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisReport {
    /// Basis label.
    pub label: String,
    /// Target code label.
    pub target: String,
    /// Number of generators.
    pub generators: usize,
    /// Rank of the generator indicators.
    pub rank: usize,
    /// Rank of the target's Z generators.
    pub target_rank: usize,
    /// Generators are linearly independent.
    pub independent: bool,
    /// Span equals the target's Z-stabilizer row space.
    pub spans: bool,
    /// Wall-clock time of the check.
    pub runtime_ms: u128,
}

impl BasisReport {
    /// Free and spanning.
    #[must_use]
    pub fn ok(&self) -> bool {
        self.independent && self.spans
    }
}

#[derive(Serialize)]
struct NamedBasisJson<'a> {
    label: &'a str,
    target: &'a str,
    generators: Vec<String>,
}

impl NamedBasis {
    /// Assembles a basis; all generators must live on the target's cube.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Validation`] if a generator's cube differs from the target's.
    pub fn new(label: impl Into<String>, generators: Vec<Subcube>, target: CssCode) -> Result<Self> {
        let m = target
            .cube_dim()
            .ok_or_else(|| Error::Validation("target code is not cube-indexed".into()))?;
        if let Some(g) = generators.iter().find(|g| g.m() != m) {
            return Err(Error::Validation(format!(
                "generator {g} does not live on the {m}-cube"
            )));
        }
        Ok(Self {
            label: label.into(),
            m,
            generators,
            target,
        })
    }

    /// Label.
    #[must_use]
    pub fn label(&self) -> &str {
        &self.label
    }

    /// Cube dimension.
    #[must_use]
    pub fn m(&self) -> usize {
        self.m
    }

    /// Generators in layout order.
    #[must_use]
    pub fn generators(&self) -> &[Subcube] {
        &self.generators
    }

    /// Code whose Z-stabilizer group the basis must generate.
    #[must_use]
    pub fn target(&self) -> &CssCode {
        &self.target
    }

    /// Indicator matrix of the generators.
    #[must_use]
    pub fn matrix(&self) -> F2Matrix {
        F2Matrix::from_rows(
            1 << self.m,
            self.generators.iter().map(Subcube::indicator).collect(),
        )
        .expect("generators live on the target cube")
    }

    /// Checks freeness and span equality with the target's Z generators.
    ///
    /// # Errors
    ///
    /// Propagates dimension errors (cannot happen for well-formed bases).
    pub fn verify(&self) -> Result<BasisReport> {
        let start = Instant::now();
        let mat = self.matrix();
        let rank = mat.rank();
        let target_rank = self.target.hz().rank();
        let spans = row_space_equal(&mat, self.target.hz())?;
        Ok(BasisReport {
            label: self.label.clone(),
            target: self.target.label().to_string(),
            generators: self.generators.len(),
            rank,
            target_rank,
            independent: rank == self.generators.len(),
            spans,
            runtime_ms: start.elapsed().as_millis(),
        })
    }

    /// Count of generators per typeset.
    #[must_use]
    pub fn type_census(&self) -> BTreeMap<u32, usize> {
        type_census(&self.generators)
    }

    /// JSON form `{label, target, generators: ["v+<J>", …]}`.
    #[must_use]
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(NamedBasisJson {
            label: &self.label,
            target: self.target.label(),
            generators: self.generators.iter().map(ToString::to_string).collect(),
        })
        .expect("basis serializes")
    }
}

/// Number of subcubes of each typeset.
#[must_use]
pub fn type_census(gens: &[Subcube]) -> BTreeMap<u32, usize> {
    let mut out = BTreeMap::new();
    for g in gens {
        *out.entry(g.typeset()).or_insert(0) += 1;
    }
    out
}

/// The 11-square planar basis of QRM_4(1,1): 9 products of Gray edges plus the
/// squares `X3(X4+1)` (type {1,2}) and `(X1+1)X2` (type {3,4}).
///
/// # Errors
///
/// Propagates construction errors.
pub fn basis_small_unfolded() -> Result<NamedBasis> {
    let mut g = embed_all(
        4,
        &products(&[local(&[1, 2], &EDGES_12)?, local(&[3, 4], &EDGES_43)?])?,
    )?;
    g.extend(parse_full(4, &SMALL_APPENDED)?);
    NamedBasis::new(
        "small-unfolded",
        g,
        qrm_code(QrmParams::new(4, 1, 1)?)?,
    )
}

/// The 57-square planar basis of QRM_6(1,1): 49 products plus 8 appended squares.
///
/// # Errors
///
/// Propagates construction errors.
pub fn basis_qrm611() -> Result<NamedBasis> {
    NamedBasis::new("qrm611", qrm611_generators()?, qrm_code(QrmParams::new(6, 1, 1)?)?)
}

/// The 54-square planar basis of the big unfolded code.
///
/// # Errors
///
/// Propagates construction errors.
pub fn basis_big_unfolded() -> Result<NamedBasis> {
    NamedBasis::new("big-unfolded", big_unfolded_generators()?, big_unfolded()?)
}

/// The 42 cubes of the 4×4×4 layout of QRM_6(1,2): 27 bulk products and six
/// boundary slabs (3, 2, 3, 2, 3, 2).
///
/// # Errors
///
/// Propagates construction errors.
pub fn basis_rubik() -> Result<NamedBasis> {
    let e12 = local(&[1, 2], &EDGES_12)?;
    let e34 = local(&[3, 4], &EDGES_34)?;
    let e56 = local(&[5, 6], &EDGES_56)?;
    let sq12 = vec![LocalSubcube::whole(&[1, 2])?];
    let sq34 = vec![LocalSubcube::whole(&[3, 4])?];
    let sq56 = vec![LocalSubcube::whole(&[5, 6])?];
    let fix = |d: &[usize], p: &str| -> Result<Vec<LocalSubcube>> { local(d, &[p]) };

    let mut g = Vec::new();
    // bulk
    g.extend(products(&[e12.clone(), e34.clone(), e56.clone()])?);
    // bottom, top
    g.extend(products(&[sq12.clone(), e34, fix(&[5, 6], RUBIK_BOTTOM_FIX)?])?);
    g.extend(products(&[
        sq34.clone(),
        local(&[1, 2], &["X2", "X1"])?,
        fix(&[5, 6], RUBIK_TOP_FIX)?,
    ])?);
    // left, right
    g.extend(products(&[sq34, e56, fix(&[1, 2], RUBIK_LEFT_FIX)?])?);
    g.extend(products(&[
        sq56.clone(),
        local(&[3, 4], &["X4", "X3"])?,
        fix(&[1, 2], RUBIK_RIGHT_FIX)?,
    ])?);
    // back, front
    g.extend(products(&[sq56, e12, fix(&[3, 4], RUBIK_BACK_FIX)?])?);
    g.extend(products(&[
        sq12,
        local(&[5, 6], &["X6", "X5"])?,
        fix(&[3, 4], RUBIK_FRONT_FIX)?,
    ])?);
    NamedBasis::new("rubik", embed_all(6, &g)?, qrm_code(QrmParams::new(6, 1, 2)?)?)
}

/// The 99 cubes of QRM_7(2,2): main layer (49 + 4 + 4, extended along
/// coordinate 7), bottom layer (28, `x7 = 0`), top layer (12, `x7 = 1`) and the
/// two closing cubes.
///
/// # Errors
///
/// Propagates construction errors.
pub fn basis_qrm722() -> Result<NamedBasis> {
    let whole7 = vec![LocalSubcube::whole(&[7])?];
    let mut g = Vec::new();
    // main layer, center
    g.extend(products(&[
        local(&[1, 2, 3], &EDGES_123)?,
        local(&[4, 5, 6], &EDGES_456)?,
        whole7.clone(),
    ])?);
    // main layer, NE-SW and NW-SE
    g.extend(products(&[local(&[1, 2, 3, 4, 5, 6], &QRM722_NE_SW)?, whole7.clone()])?);
    g.extend(products(&[local(&[1, 2, 3, 4, 5, 6], &QRM722_NW_SE)?, whole7])?);
    // bottom layer
    g.extend(products(&[
        local(&[1, 2, 3], &SQUARES_123)?,
        local(&[4, 5, 6], &EDGES_456)?,
        local(&[7], &["(X7+1)"])?,
    ])?);
    // top layer
    g.extend(products(&[
        local(&[1, 2, 3], &ONE_EDGE_EACH_123)?,
        local(&[4, 5, 6], &SQUARES_456)?,
        local(&[7], &["X7"])?,
    ])?);
    let mut cubes = embed_all(7, &g)?;
    cubes.extend(parse_full(7, &QRM722_CLOSING)?);
    NamedBasis::new("qrm722", cubes, qrm_code(QrmParams::new(7, 2, 2)?)?)
}

// ---------------------------------------------------------------------------
// Spans of types and translated squares
// ---------------------------------------------------------------------------

/// Matrix of all subcube indicators whose typeset is one of `types`.
///
/// # Errors
///
/// Returns [`Error::Validation`] if a typeset does not have `dim` elements or
/// exceeds the cube.
pub fn span_of_types(m: usize, dim: usize, types: &[u32]) -> Result<F2Matrix> {
    check_m(m)?;
    for &t in types {
        if t.count_ones() as usize != dim || t & !full_mask(m) != 0 {
            return Err(Error::Validation(format!(
                "typeset {} is not a {dim}-subset of 1..={m}",
                fmt_typeset(t)
            )));
        }
    }
    let rows = enumerate_subcubes(m, dim)?
        .iter()
        .filter(|s| types.contains(&s.typeset()))
        .map(Subcube::indicator)
        .collect();
    F2Matrix::from_rows(1 << m, rows)
}

/// Pairs `(i1, i2)` on the first `f_max` diagonals: `i2 = i1 + m − f` for
/// `f = 1..=f_max`, keeping `i1 < i2 ≤ m`.
#[must_use]
pub fn diagonal_pairs(m: usize, f_max: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for f in 1..=f_max.min(m) {
        let gap = m - f;
        if gap == 0 {
            continue;
        }
        for i1 in 1..=m - gap {
            out.push((i1, i1 + gap));
        }
    }
    out
}

/// Parameters of a diagonal space: per pair `(i1, i2)`, the vertex values of
/// the coordinates outside `[i1, i2]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalParams {
    /// Cube dimension.
    pub m: usize,
    /// Number of diagonals, `1..=m`.
    pub f_max: usize,
    /// Vertex bits (outside `[i1, i2]` only) for each pair.
    pub offsets: BTreeMap<(usize, usize), u32>,
}

fn interval_mask(lo: usize, hi: usize) -> u32 {
    (lo..=hi).fold(0u32, |acc, c| acc | 1 << (c - 1))
}

impl DiagonalParams {
    /// Params with explicit offsets.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Validation`] unless `f_max ∈ 1..=m`, every pair has an
    /// offset, and offsets only touch coordinates outside `[i1, i2]`.
    pub fn new(m: usize, f_max: usize, offsets: BTreeMap<(usize, usize), u32>) -> Result<Self> {
        check_m(m)?;
        if !(1..=m).contains(&f_max) {
            return Err(Error::Validation(format!("f_max {f_max} outside 1..={m}")));
        }
        let pairs = diagonal_pairs(m, f_max);
        if offsets.len() != pairs.len() {
            return Err(Error::Validation("offsets do not match the diagonal pairs".into()));
        }
        for (i1, i2) in pairs {
            let Some(&bits) = offsets.get(&(i1, i2)) else {
                return Err(Error::Validation(format!("missing offset for ({i1},{i2})")));
            };
            if bits & (interval_mask(i1, i2) | !full_mask(m)) != 0 {
                return Err(Error::Validation(format!(
                    "offset for ({i1},{i2}) touches coordinates inside the interval"
                )));
            }
        }
        Ok(Self { m, f_max, offsets })
    }

    /// Params with uniformly random offsets from a seeded ChaCha8 stream.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Validation`] for invalid `m` or `f_max`.
    pub fn random(m: usize, f_max: usize, seed: u64) -> Result<Self> {
        check_m(m)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let offsets = diagonal_pairs(m, f_max)
            .into_iter()
            .map(|(i1, i2)| {
                let outside = full_mask(m) & !interval_mask(i1, i2);
                ((i1, i2), rng.next_u32() & outside)
            })
            .collect();
        Self::new(m, f_max, offsets)
    }
}

/// Squares of type `{i1, i2}` whose coordinates outside `[k1, k2]` equal `fixed`
/// and whose coordinates in `[k1, k2]` range over all values.
///
/// # Errors
///
/// Returns [`Error::Validation`] unless `1 ≤ k1 ≤ i1 < i2 ≤ k2 ≤ m` and `fixed`
/// lies outside `[k1, k2]`.
pub fn translated_squares(
    m: usize,
    k1: usize,
    i1: usize,
    i2: usize,
    k2: usize,
    fixed: u32,
) -> Result<F2Matrix> {
    check_m(m)?;
    if !(1 <= k1 && k1 <= i1 && i1 < i2 && i2 <= k2 && k2 <= m) {
        return Err(Error::Validation(format!(
            "need 1 <= k1 <= i1 < i2 <= k2 <= m, got ({k1},{i1},{i2},{k2}) with m={m}"
        )));
    }
    let window = interval_mask(k1, k2);
    if fixed & (window | !full_mask(m)) != 0 {
        return Err(Error::Validation("fixed bits inside the window".into()));
    }
    let free = (1u32 << (i1 - 1)) | (1u32 << (i2 - 1));
    let moving = window & !free;
    let rows = submasks(moving)
        .map(|w| Subcube::new(m, fixed | w, free).map(|s| s.indicator()))
        .collect::<Result<_>>()?;
    F2Matrix::from_rows(1 << m, rows)
}

/// Generators of the diagonal space: for each pair `(i1, i2)` of the first
/// `f_max` diagonals, all translates inside `[i1, i2]` of the square of type
/// `{i1, i2}` pinned to that pair's offset outside the interval.
///
/// # Errors
///
/// Propagates parameter errors.
pub fn diagonal_space(p: &DiagonalParams) -> Result<F2Matrix> {
    let mut out = F2Matrix::empty(1 << p.m);
    for (i1, i2) in diagonal_pairs(p.m, p.f_max) {
        let block = translated_squares(p.m, i1, i1, i2, i2, p.offsets[&(i1, i2)])?;
        out = out.stack(&block)?;
    }
    Ok(out)
}

/// Span of all squares whose type `{i1, i2}` satisfies `i2 ≥ i1 + m − f_max`.
///
/// # Errors
///
/// Returns [`Error::Validation`] for invalid parameters.
pub fn diagonal_target(m: usize, f_max: usize) -> Result<F2Matrix> {
    let types: Vec<u32> = diagonal_pairs(m, f_max)
        .into_iter()
        .map(|(a, b)| typeset_mask(&[a, b]))
        .collect::<Result<_>>()?;
    span_of_types(m, 2, &types)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn census_sorted(b: &NamedBasis) -> Vec<usize> {
        let mut v: Vec<usize> = b.type_census().values().copied().collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    #[test]
    fn span_of_type_examples() {
        let t16 = typeset_mask(&[1, 6]).unwrap();
        let t15 = typeset_mask(&[1, 5]).unwrap();
        assert_eq!(span_of_types(6, 2, &[t16]).unwrap().rank(), 16);
        assert_eq!(span_of_types(6, 2, &[t16, t15]).unwrap().rank(), 24);
        let all: Vec<u32> = (0u32..16).filter(|t| t.count_ones() == 2).collect();
        assert_eq!(span_of_types(4, 2, &all).unwrap().rank(), 11);
        assert!(span_of_types(4, 2, &[0b111]).is_err());
    }

    #[test]
    fn diagonal_pair_counts() {
        assert_eq!(diagonal_pairs(6, 5).len(), 15);
        assert_eq!(diagonal_pairs(6, 1), vec![(1, 6)]);
        assert_eq!(diagonal_pairs(6, 6).len(), 15);
    }

    #[test]
    fn diagonal_ranks() {
        let p = DiagonalParams::random(6, 5, 7).unwrap();
        assert_eq!(diagonal_space(&p).unwrap().nrows(), 57);
        assert_eq!(diagonal_space(&p).unwrap().rank(), 57);
        let p = DiagonalParams::random(4, 3, 7).unwrap();
        assert_eq!(diagonal_space(&p).unwrap().rank(), 11);
        assert!(DiagonalParams::random(4, 0, 1).is_err());
    }

    #[test]
    fn small_unfolded_census() {
        let b = basis_small_unfolded().unwrap();
        let c = b.type_census();
        let get = |t: &[usize]| c.get(&typeset_mask(t).unwrap()).copied().unwrap_or(0);
        assert_eq!(get(&[1, 4]), 4);
        assert_eq!(get(&[1, 3]), 2);
        assert_eq!(get(&[2, 4]), 2);
        assert_eq!(get(&[2, 3]), 1);
        assert_eq!(get(&[1, 2]), 1);
        assert_eq!(get(&[3, 4]), 1);
    }

    #[test]
    fn qrm611_census_and_products() {
        let b = basis_qrm611().unwrap();
        assert_eq!(census_sorted(&b), vec![16, 8, 8, 4, 4, 4, 2, 2, 2, 2, 1, 1, 1, 1, 1]);
        let prods = qrm611_product_squares().unwrap();
        let m = F2Matrix::from_rows(64, prods.iter().map(Subcube::indicator).collect()).unwrap();
        assert_eq!(m.rank(), 49);
    }

    #[test]
    fn removing_a_generator_breaks_spanning() {
        let b = basis_small_unfolded().unwrap();
        let m = b.matrix().without_row(3).unwrap();
        assert_eq!(m.rank(), 10);
        assert!(!row_space_equal(&m, b.target().hz()).unwrap());
    }

    #[test]
    fn product_with_singleton_keeps_cardinality() {
        let a = local(&[1, 2], &EDGES_12).unwrap();
        let one = vec![LocalSubcube::whole(&[3]).unwrap()];
        assert_eq!(product_basis(&a, &one).unwrap().len(), 3);
        assert!(product_basis(&a, &a).is_err());
    }
}
