//! The m-cube model: vertices, subcubes, products of affine literals, Gray orders.
//!
//! Coordinates are 1-based. A vertex `(x_1, …, x_m)` is stored as the integer
//! `Σ x_i·2^(i−1)` (so `x_1` is the least significant bit), which is also its
//! column index in every indicator vector. Vertex bit strings are printed
//! `x_1 … x_m` left to right.
//!
//! A subcube `v + ⟨J⟩` is the set of vertices agreeing with `v` outside the
//! free-coordinate set `J` (its *type*). The canonical representation has `v`
//! zero on `J`, so structural equality is set equality.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::f2core::BitVec;

/// Largest supported cube dimension (2^16 vertices).
pub const MAX_M: usize = 16;

/// Validates a cube dimension.
///
/// # Errors
///
/// Returns [`Error::Validation`] unless `1 ≤ m ≤ MAX_M`.
pub fn check_m(m: usize) -> Result<()> {
    if (1..=MAX_M).contains(&m) {
        Ok(())
    } else {
        Err(Error::Validation(format!(
            "cube dimension {m} outside 1..={MAX_M}"
        )))
    }
}

/// Mask with bits `0..m` set (all coordinates of the m-cube).
#[must_use]
pub fn full_mask(m: usize) -> u32 {
    if m >= 32 {
        u32::MAX
    } else {
        (1u32 << m) - 1
    }
}

/// Bit mask of a set of 1-based coordinates.
///
/// # Errors
///
/// Returns [`Error::Validation`] for coordinate 0, coordinates above [`MAX_M`],
/// or repeated coordinates.
pub fn typeset_mask(coords: &[usize]) -> Result<u32> {
    let mut mask = 0u32;
    for &c in coords {
        if c == 0 || c > MAX_M {
            return Err(Error::Validation(format!("coordinate {c} out of range")));
        }
        let bit = 1u32 << (c - 1);
        if mask & bit != 0 {
            return Err(Error::Validation(format!("coordinate {c} repeated")));
        }
        mask |= bit;
    }
    Ok(mask)
}

/// The 1-based coordinates of a mask, increasing.
#[must_use]
pub fn mask_coords(mask: u32) -> Vec<usize> {
    (0..32).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}

/// Formats a typeset as `{1,3}`.
#[must_use]
pub fn fmt_typeset(mask: u32) -> String {
    let inner: Vec<String> = mask_coords(mask).iter().map(ToString::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

/// Renders a vertex as the bit string `x_1 … x_m`.
#[must_use]
pub fn vertex_string(m: usize, v: u32) -> String {
    (0..m).map(|i| if v >> i & 1 == 1 { '1' } else { '0' }).collect()
}

/// Parses a bit string `x_1 … x_m` into a vertex.
///
/// # Errors
///
/// Returns [`Error::Parse`] on characters other than `0`/`1` or an unsupported length.
pub fn parse_vertex(s: &str) -> Result<(usize, u32)> {
    let m = s.chars().count();
    if m == 0 || m > MAX_M {
        return Err(Error::Parse(format!("vertex string {s:?} has bad length")));
    }
    let mut v = 0u32;
    for (i, c) in s.chars().enumerate() {
        match c {
            '0' => {}
            '1' => v |= 1 << i,
            _ => return Err(Error::Parse(format!("bad vertex character {c:?}"))),
        }
    }
    Ok((m, v))
}

/// Iterates over every sub-mask of `mask` (including 0 and `mask`).
pub fn submasks(mask: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & mask) };
        Some(cur)
    })
}

/// A subcube `base + ⟨typeset⟩` of the m-cube in canonical form.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subcube {
    m: u8,
    base: u32,
    free: u32,
}

impl Subcube {
    /// Builds a canonical subcube.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Validation`] if `m` is unsupported, `base` or `free`
    /// exceed the cube, or `base` is nonzero on a free coordinate (non-canonical
    /// input is rejected, never normalized).
    pub fn new(m: usize, base: u32, free: u32) -> Result<Self> {
        check_m(m)?;
        let full = full_mask(m);
        if base & !full != 0 || free & !full != 0 {
            return Err(Error::Validation(format!(
                "base {base:#b} or typeset {free:#b} exceeds the {m}-cube"
            )));
        }
        if base & free != 0 {
            return Err(Error::Validation(format!(
                "non-canonical subcube: base {} is nonzero on free coordinates {}",
                vertex_string(m, base),
                fmt_typeset(base & free)
            )));
        }
        Ok(Self {
            m: m as u8,
            base,
            free,
        })
    }

    /// The standard subcube `0…0 + ⟨J⟩`.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Validation`] for invalid `m` or coordinates.
    pub fn standard(m: usize, typeset: &[usize]) -> Result<Self> {
        Self::new(m, 0, typeset_mask(typeset)?)
    }

    /// The whole m-cube.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Validation`] for invalid `m`.
    pub fn full(m: usize) -> Result<Self> {
        Self::new(m, 0, full_mask(m))
    }

    /// Cube dimension `m`.
    #[must_use]
    pub fn m(&self) -> usize {
        usize::from(self.m)
    }

    /// Number of cube vertices `2^m`.
    #[must_use]
    pub fn n(&self) -> usize {
        1usize << self.m
    }

    /// Base vertex (zero on the typeset).
    #[must_use]
    pub fn base(&self) -> u32 {
        self.base
    }

    /// Free-coordinate mask (bit `i−1` for coordinate `i`).
    #[must_use]
    pub fn typeset(&self) -> u32 {
        self.free
    }

    /// Free coordinates, 1-based and increasing.
    #[must_use]
    pub fn coords(&self) -> Vec<usize> {
        mask_coords(self.free)
    }

    /// Dimension `|J|`.
    #[must_use]
    pub fn dim(&self) -> usize {
        self.free.count_ones() as usize
    }

    /// Whether `v` belongs to the subcube.
    #[must_use]
    pub fn contains(&self, v: u32) -> bool {
        (v & !self.free) == self.base
    }

    /// Iterates over the `2^dim` vertices.
    pub fn vertices(&self) -> impl Iterator<Item = u32> + '_ {
        submasks(self.free).map(move |s| self.base | s)
    }

    /// Indicator vector of length `2^m`.
    #[must_use]
    pub fn indicator(&self) -> BitVec {
        let mut v = BitVec::zeros(self.n());
        for x in self.vertices() {
            v.set(x as usize, true);
        }
        v
    }

    /// Intersection with another subcube of the same cube; `None` when empty.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Validation`] if the cubes differ.
    pub fn intersect(&self, other: &Self) -> Result<Option<Self>> {
        if self.m != other.m {
            return Err(Error::Validation("subcubes of different cubes".into()));
        }
        let both_fixed = !self.free & !other.free & full_mask(self.m());
        if (self.base ^ other.base) & both_fixed != 0 {
            return Ok(None);
        }
        let free = self.free & other.free;
        // Coordinates fixed in either operand take that operand's value.
        let base = (self.base & !self.free) | (other.base & !other.free);
        Ok(Some(Self {
            m: self.m,
            base: base & !free,
            free,
        }))
    }

    /// Translation along `coord`: flips the base bit when `coord` is fixed,
    /// returns the subcube unchanged when it is free.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Validation`] unless `1 ≤ coord ≤ m`.
    pub fn translate(&self, coord: usize) -> Result<Self> {
        if coord == 0 || coord > self.m() {
            return Err(Error::Validation(format!(
                "coordinate {coord} outside 1..={}",
                self.m
            )));
        }
        let bit = 1u32 << (coord - 1);
        if self.free & bit != 0 {
            Ok(*self)
        } else {
            Ok(Self {
                base: self.base ^ bit,
                ..*self
            })
        }
    }

    /// The product of affine literals whose evaluation is this subcube's indicator.
    #[must_use]
    pub fn to_monomial(&self) -> Monomial {
        let literals = (1..=self.m())
            .filter(|c| self.free >> (c - 1) & 1 == 0)
            .map(|c| Literal {
                coord: c,
                plus_one: self.base >> (c - 1) & 1 == 0,
            })
            .collect();
        Monomial {
            m: self.m(),
            literals,
        }
    }
}

impl fmt::Display for Subcube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.coords().iter().map(ToString::to_string).collect();
        write!(
            f,
            "{}+<{}>",
            vertex_string(self.m(), self.base),
            inner.join(",")
        )
    }
}

impl fmt::Debug for Subcube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subcube({self})")
    }
}

impl FromStr for Subcube {
    type Err = Error;

    /// Parses the `v+<J>` text form, e.g. `0000+<1,3>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (v, rest) = s
            .split_once('+')
            .ok_or_else(|| Error::Parse(format!("subcube {s:?} lacks '+'")))?;
        let inner = rest
            .strip_prefix('<')
            .and_then(|r| r.strip_suffix('>'))
            .ok_or_else(|| Error::Parse(format!("subcube {s:?} lacks <J>")))?;
        let (m, base) = parse_vertex(v)?;
        let coords: Vec<usize> = inner
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad coordinate {t:?}")))
            })
            .collect::<Result<_>>()?;
        Self::new(m, base, typeset_mask(&coords)?)
    }
}

impl serde::Serialize for Subcube {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Indicator vector of a subcube (free-function form of [`Subcube::indicator`]).
#[must_use]
pub fn subcube_indicator(s: &Subcube) -> BitVec {
    s.indicator()
}

/// One affine literal: `X_coord` (true where `x_coord = 1`) or `X_coord + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Literal {
    /// 1-based coordinate.
    pub coord: usize,
    /// `true` for `X_coord + 1`.
    pub plus_one: bool,
}

/// A product of affine literals over the m-cube, each coordinate at most once.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    m: usize,
    literals: Vec<Literal>,
}

impl Monomial {
    /// Builds a product of literals.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Validation`] for invalid `m`, out-of-range or repeated coordinates.
    pub fn new(m: usize, literals: Vec<Literal>) -> Result<Self> {
        check_m(m)?;
        let coords: Vec<usize> = literals.iter().map(|l| l.coord).collect();
        let mask = typeset_mask(&coords)?;
        if mask & !full_mask(m) != 0 {
            return Err(Error::Validation(format!(
                "literal coordinate outside the {m}-cube"
            )));
        }
        Ok(Self { m, literals })
    }

    /// Parses products such as `X2(X3+1)`, `(X1+1)(X2+1)X3X5` or `1`.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Parse`] on malformed text and [`Error::Validation`] on
    /// repeated or out-of-range coordinates.
    pub fn parse(m: usize, text: &str) -> Result<Self> {
        Self::new(m, parse_literals(text)?)
    }

    /// Cube dimension.
    #[must_use]
    pub fn m(&self) -> usize {
        self.m
    }

    /// The literals in written order.
    #[must_use]
    pub fn literals(&self) -> &[Literal] {
        &self.literals
    }

    /// Polynomial degree (number of literals).
    #[must_use]
    pub fn degree(&self) -> usize {
        self.literals.len()
    }

    /// The subcube on which this product evaluates to 1; its typeset is the
    /// complement of the factored coordinates.
    #[must_use]
    pub fn to_subcube(&self) -> Subcube {
        let (fixed, base) = literal_masks(&self.literals);
        Subcube {
            m: self.m as u8,
            base,
            free: full_mask(self.m) & !fixed,
        }
    }

    /// Evaluation vector over all `2^m` vertices, computed pointwise.
    #[must_use]
    pub fn evaluate(&self) -> BitVec {
        let n = 1usize << self.m;
        let mut out = BitVec::zeros(n);
        for v in 0..n as u32 {
            let value = self
                .literals
                .iter()
                .all(|l| (v >> (l.coord - 1) & 1 == 1) != l.plus_one);
            if value {
                out.set(v as usize, true);
            }
        }
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.literals.is_empty() {
            return f.write_str("1");
        }
        for l in &self.literals {
            if l.plus_one {
                write!(f, "(X{}+1)", l.coord)?;
            } else {
                write!(f, "X{}", l.coord)?;
            }
        }
        Ok(())
    }
}

fn literal_masks(literals: &[Literal]) -> (u32, u32) {
    let mut fixed = 0u32;
    let mut base = 0u32;
    for l in literals {
        let bit = 1u32 << (l.coord - 1);
        fixed |= bit;
        if !l.plus_one {
            base |= bit;
        }
    }
    (fixed, base)
}

fn parse_literals(text: &str) -> Result<Vec<Literal>> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let err = || Error::Parse(format!("malformed product of literals {text:?}"));
    if chars == ['1'] {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut i = 0;
    let read_index = |i: &mut usize| -> Result<usize> {
        if chars.get(*i) != Some(&'X') {
            return Err(err());
        }
        *i += 1;
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        let digits: String = chars[start..*i].iter().collect();
        digits.parse::<usize>().map_err(|_| err())
    };
    while i < chars.len() {
        if chars[i] == '(' {
            i += 1;
            let coord = read_index(&mut i)?;
            if chars.get(i..i + 3) != Some(&['+', '1', ')'][..]) {
                return Err(err());
            }
            i += 3;
            out.push(Literal {
                coord,
                plus_one: true,
            });
        } else {
            let coord = read_index(&mut i)?;
            out.push(Literal {
                coord,
                plus_one: false,
            });
        }
    }
    if out.is_empty() {
        return Err(err());
    }
    Ok(out)
}

/// Evaluation vector of a product of affine literals over the m-cube.
///
/// # Errors
///
/// Returns [`Error::Validation`] if the cube dimension differs from `m`.
pub fn poly_indicator(m: usize, p: &Monomial) -> Result<BitVec> {
    if p.m() != m {
        return Err(Error::Validation(format!(
            "product built for the {}-cube, asked for the {m}-cube",
            p.m()
        )));
    }
    Ok(p.to_subcube().indicator())
}

/// All canonical subcubes of dimension `dim`, ordered by typeset mask then base.
///
/// # Errors
///
/// Returns [`Error::Validation`] for invalid `m` or `dim > m`.
pub fn enumerate_subcubes(m: usize, dim: usize) -> Result<Vec<Subcube>> {
    check_m(m)?;
    if dim > m {
        return Err(Error::Validation(format!(
            "subcube dimension {dim} exceeds cube dimension {m}"
        )));
    }
    let full = full_mask(m);
    let mut out = Vec::new();
    for free in 0..=full {
        if free.count_ones() as usize != dim {
            continue;
        }
        let fixed = full & !free;
        let mut bases: Vec<u32> = submasks(fixed).collect();
        bases.sort_unstable();
        out.extend(bases.into_iter().map(|base| Subcube {
            m: m as u8,
            base,
            free,
        }));
    }
    Ok(out)
}

/// All canonical subcubes of every dimension.
///
/// # Errors
///
/// Returns [`Error::Validation`] for invalid `m`.
pub fn enumerate_all_subcubes(m: usize) -> Result<Vec<Subcube>> {
    let mut out = Vec::new();
    for d in 0..=m {
        out.extend(enumerate_subcubes(m, d)?);
    }
    Ok(out)
}

/// Translation of `s` along `coord` (see [`Subcube::translate`]).
///
/// # Errors
///
/// Returns [`Error::Validation`] for an out-of-range coordinate.
pub fn translate(s: &Subcube, coord: usize) -> Result<Subcube> {
    s.translate(coord)
}

/// The fixed Gray sequences used by every layout, as local vertices
/// (bit `j` = the `j`-th coordinate of the group).
///
/// `k = 1`: 0, 1. `k = 2`: 00, 10, 11, 01. `k = 3`: 000, 100, 110, 010, 011,
/// 111, 101, 001 (strings list the group's coordinates left to right).
///
/// # Errors
///
/// Returns [`Error::Validation`] for any other `k`; generic reflected codes are
/// deliberately not offered because layouts depend on these exact sequences.
pub fn gray_order(k: usize) -> Result<Vec<u32>> {
    let strings: &[&str] = match k {
        1 => &["0", "1"],
        2 => &["00", "10", "11", "01"],
        3 => &["000", "100", "110", "010", "011", "111", "101", "001"],
        _ => {
            return Err(Error::Validation(format!(
                "Gray order only defined for k in 1..=3, got {k}"
            )))
        }
    };
    strings
        .iter()
        .map(|s| parse_vertex(s).map(|(_, v)| v))
        .collect()
}

/// A subcube of the sub-cube spanned by a coordinate set (`domain`), used to
/// assemble product bases before embedding into the full cube.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct LocalSubcube {
    domain: u32,
    base: u32,
    free: u32,
}

impl LocalSubcube {
    /// Parses a product of literals living on the coordinates `domain`; the
    /// domain coordinates not mentioned by the product are free.
    ///
    /// # Errors
    ///
    /// Returns an error on malformed text or literals outside the domain.
    pub fn from_poly(domain: &[usize], text: &str) -> Result<Self> {
        let domain = typeset_mask(domain)?;
        let literals = parse_literals(text)?;
        let coords: Vec<usize> = literals.iter().map(|l| l.coord).collect();
        let fixed = typeset_mask(&coords)?;
        if fixed & !domain != 0 {
            return Err(Error::Validation(format!(
                "{text:?} uses coordinates outside {}",
                fmt_typeset(domain)
            )));
        }
        let (_, base) = literal_masks(&literals);
        Ok(Self {
            domain,
            base,
            free: domain & !fixed,
        })
    }

    /// The whole sub-cube on `domain` (the polynomial 1).
    ///
    /// # Errors
    ///
    /// Returns [`Error::Validation`] on invalid coordinates.
    pub fn whole(domain: &[usize]) -> Result<Self> {
        let d = typeset_mask(domain)?;
        Ok(Self {
            domain: d,
            base: 0,
            free: d,
        })
    }

    /// Coordinate set this subcube lives on.
    #[must_use]
    pub fn domain(&self) -> u32 {
        self.domain
    }

    /// Free coordinates.
    #[must_use]
    pub fn typeset(&self) -> u32 {
        self.free
    }

    /// Cartesian product with a subcube on a disjoint domain.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Validation`] if the domains overlap.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.domain & other.domain != 0 {
            return Err(Error::Validation(format!(
                "product of subcubes on overlapping coordinates {}",
                fmt_typeset(self.domain & other.domain)
            )));
        }
        Ok(Self {
            domain: self.domain | other.domain,
            base: self.base | other.base,
            free: self.free | other.free,
        })
    }

    /// Embeds into the m-cube; the domain must be all of `{1..m}`.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Validation`] if coordinates are missing or extra.
    pub fn embed(&self, m: usize) -> Result<Subcube> {
        if self.domain != full_mask(m) {
            return Err(Error::Validation(format!(
                "subcube on {} cannot embed into the {m}-cube",
                fmt_typeset(self.domain)
            )));
        }
        Subcube::new(m, self.base, self.free)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subcube_text_round_trip() {
        let s: Subcube = "0100+<1,3>".parse().unwrap();
        assert_eq!(s.m(), 4);
        assert_eq!(s.coords(), vec![1, 3]);
        assert_eq!(s.to_string(), "0100+<1,3>");
        assert!("1000+<1>".parse::<Subcube>().is_err());
        assert!("0000+<5>".parse::<Subcube>().is_err());
        assert_eq!("000+<>".parse::<Subcube>().unwrap().dim(), 0);
    }

    #[test]
    fn non_canonical_rejected() {
        assert!(Subcube::new(3, 0b001, 0b001).is_err());
        assert!(Subcube::new(3, 0b1000, 0).is_err());
    }

    #[test]
    fn point_indicator() {
        let s = Subcube::new(2, 0, 0).unwrap();
        assert_eq!(s.indicator().weight(), 1);
    }

    #[test]
    fn edge_polynomial() {
        // X2 X3 (X4+1): x2 = x3 = 1, x4 = 0, x1 free.
        let s = Subcube::new(4, 0b0110, 0b0001).unwrap();
        let p = Monomial::parse(4, "X2X3(X4+1)").unwrap();
        assert_eq!(p.to_subcube(), s);
        assert_eq!(p.evaluate(), s.indicator());
        assert_eq!(s.to_monomial().to_string(), "X2X3(X4+1)");
    }

    #[test]
    fn full_cube_indicator() {
        assert_eq!(Subcube::full(6).unwrap().indicator(), BitVec::ones(64));
        assert_eq!(poly_indicator(3, &Monomial::parse(3, "1").unwrap()).unwrap(), BitVec::ones(8));
    }

    #[test]
    fn x1_times_x3_plus_one_support() {
        let v = poly_indicator(3, &Monomial::parse(3, "X1(X3+1)").unwrap()).unwrap();
        let ones: Vec<String> = v.iter_ones().map(|i| vertex_string(3, i as u32)).collect();
        assert_eq!(ones, vec!["100", "110"]);
    }

    #[test]
    fn repeated_literal_rejected() {
        assert!(Monomial::parse(3, "X1(X1+1)").is_err());
        assert!(Monomial::parse(3, "X4").is_err());
        assert!(Monomial::parse(3, "Y1").is_err());
        assert!(Monomial::parse(3, "(X1+2)").is_err());
    }

    #[test]
    fn subcube_counts() {
        assert_eq!(enumerate_subcubes(3, 1).unwrap().len(), 12);
        assert_eq!(enumerate_subcubes(6, 2).unwrap().len(), 240);
        assert_eq!(enumerate_subcubes(2, 2).unwrap().len(), 1);
        assert!(enumerate_subcubes(2, 3).is_err());
    }

    #[test]
    fn edges_are_adjacent_vertex_pairs() {
        // Cross-check the 12 edges of the 3-cube against pairs at Hamming distance one.
        let mut pairs = Vec::new();
        for a in 0u32..8 {
            for b in (a + 1)..8 {
                if (a ^ b).count_ones() == 1 {
                    pairs.push((a, b));
                }
            }
        }
        let mut edges: Vec<(u32, u32)> = enumerate_subcubes(3, 1)
            .unwrap()
            .iter()
            .map(|e| {
                let v: Vec<u32> = e.vertices().collect();
                (v[0].min(v[1]), v[0].max(v[1]))
            })
            .collect();
        edges.sort_unstable();
        assert_eq!(edges, pairs);
    }

    #[test]
    fn translation_examples() {
        // Standard square of type {2,3} moved along coordinate 1 is the square X1.
        let s = Subcube::standard(3, &[2, 3]).unwrap();
        let t = translate(&s, 1).unwrap();
        assert_eq!(t, Monomial::parse(3, "X1").unwrap().to_subcube());
        assert_eq!(translate(&t, 1).unwrap(), s);
        assert_eq!(translate(&s, 2).unwrap(), s);
        assert!(translate(&s, 4).is_err());
    }

    #[test]
    fn gray_sequences() {
        let show = |k| -> Vec<String> {
            gray_order(k).unwrap().iter().map(|&v| vertex_string(k, v)).collect()
        };
        assert_eq!(show(1), ["0", "1"]);
        assert_eq!(show(2), ["00", "10", "11", "01"]);
        assert_eq!(show(3), ["000", "100", "110", "010", "011", "111", "101", "001"]);
        assert!(gray_order(4).is_err());
        for k in 1..=3 {
            let g = gray_order(k).unwrap();
            for w in g.windows(2) {
                assert_eq!((w[0] ^ w[1]).count_ones(), 1);
            }
        }
    }

    #[test]
    fn intersections() {
        let a = Subcube::standard(6, &[1, 2, 3, 4]).unwrap();
        let b = Subcube::standard(6, &[3, 4, 5, 6]).unwrap();
        let c = a.intersect(&b).unwrap().unwrap();
        assert_eq!(c.coords(), vec![3, 4]);
        let far = Subcube::new(6, 0b100000, 0b001111).unwrap();
        assert!(a.intersect(&far).unwrap().is_none());
    }

    #[test]
    fn local_products() {
        let a = LocalSubcube::from_poly(&[1, 2], "X2").unwrap();
        let b = LocalSubcube::from_poly(&[3, 4], "(X4+1)").unwrap();
        let s = a.product(&b).unwrap().embed(4).unwrap();
        assert_eq!(s, Monomial::parse(4, "X2(X4+1)").unwrap().to_subcube());
        assert!(a.product(&a).is_err());
        assert!(a.embed(4).is_err());
    }
}
