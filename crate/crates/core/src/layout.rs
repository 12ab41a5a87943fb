//! Grid layouts of cube vertices along Gray-code flattenings, generator
//! footprints, and JSON/SVG export.
//!
//! Each spatial axis owns an ordered group of cube coordinates. A vertex's
//! position along the axis is the index of its group bits (first coordinate of
//! the group = lowest bit) in [`gray_order`]. The shipped layouts are
//!
//! | kind     | axes                         | grid    |
//! |----------|------------------------------|---------|
//! | planar-4 | (1,2), (4,3)                 | 4×4     |
//! | planar-6 | (1,2,3), (6,5,4)             | 8×8     |
//! | rubik-6  | (1,2), (3,4), (5,6)          | 4×4×4   |
//! | cube-7   | (1,2,3), (6,5,4), (7)        | 8×8×2   |
//!
//! SVG styling is fixed so output is byte-stable: grid pitch 40 px, margin
//! 30 px, qubits as black dots of radius 4 at `(margin + 40·x, margin + 40·y)`
//! (y grows downward). A box footprint is one rectangle padded 10 px beyond its
//! extreme qubits; a non-box footprint is drawn as a dashed 20 px square around
//! each of its cells. Colors cycle through a six-entry palette by generator id,
//! fill opacity 0.25, stroke width 2.
//!
//! The "heuristic excess cells" figure is the number of grid cells by which
//! non-box footprints fall short of filling their bounding boxes. It is only a
//! rough proxy for the extra qubits needed to make every generator local; no
//! construction for those qubits is implemented.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::bases::{BasisKind, NamedBasis};
use crate::cube::{gray_order, vertex_string, Subcube};
use crate::error::{Error, Result};

/// The shipped layouts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LayoutKind {
    /// 4×4 grid of the 4-cube.
    Planar4,
    /// 8×8 grid of the 6-cube.
    Planar6,
    /// 4×4×4 grid of the 6-cube.
    Rubik6,
    /// 8×8×2 grid of the 7-cube.
    Cube7,
}

impl LayoutKind {
    /// All kinds.
    pub const ALL: [Self; 4] = [Self::Planar4, Self::Planar6, Self::Rubik6, Self::Cube7];

    /// Name used in files and on the command line.
    #[must_use]
    pub fn name(self) -> &'static str {
        match self {
            Self::Planar4 => "planar-4",
            Self::Planar6 => "planar-6",
            Self::Rubik6 => "rubik-6",
            Self::Cube7 => "cube-7",
        }
    }

    /// The layout each shipped basis is drawn on.
    #[must_use]
    pub fn for_basis(kind: BasisKind) -> Self {
        match kind {
            BasisKind::SmallUnfolded => Self::Planar4,
            BasisKind::Qrm611 | BasisKind::BigUnfolded => Self::Planar6,
            BasisKind::Rubik => Self::Rubik6,
            BasisKind::Qrm722 => Self::Cube7,
        }
    }

    /// The layout's spec.
    #[must_use]
    pub fn spec(self) -> LayoutSpec {
        let axes: &[&[usize]] = match self {
            Self::Planar4 => &[&[1, 2], &[4, 3]],
            Self::Planar6 => &[&[1, 2, 3], &[6, 5, 4]],
            Self::Rubik6 => &[&[1, 2], &[3, 4], &[5, 6]],
            Self::Cube7 => &[&[1, 2, 3], &[6, 5, 4], &[7]],
        };
        LayoutSpec {
            kind: self,
            axes: axes.iter().map(|a| a.to_vec()).collect(),
        }
    }
}

impl std::str::FromStr for LayoutKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Validation(format!("unknown layout {s:?}")))
    }
}

/// Axis assignment of a layout: per spatial axis, the ordered coordinate group
/// read along the Gray order of its length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LayoutSpec {
    kind: LayoutKind,
    axes: Vec<Vec<usize>>,
}

impl LayoutSpec {
    /// Layout kind.
    #[must_use]
    pub fn kind(&self) -> LayoutKind {
        self.kind
    }

    /// Coordinate groups per axis.
    #[must_use]
    pub fn axes(&self) -> &[Vec<usize>] {
        &self.axes
    }

    /// Cube dimension.
    #[must_use]
    pub fn m(&self) -> usize {
        self.axes.iter().map(Vec::len).sum()
    }

    /// Number of spatial axes.
    #[must_use]
    pub fn spatial_dims(&self) -> usize {
        self.axes.len()
    }

    /// Grid side length per axis.
    #[must_use]
    pub fn extent(&self) -> Vec<usize> {
        self.axes.iter().map(|a| 1 << a.len()).collect()
    }

    /// Grid position of vertex `v`.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Validation`] if `v` is not a vertex of the cube.
    pub fn position(&self, v: u32) -> Result<Vec<usize>> {
        if v >> self.m() != 0 {
            return Err(Error::Validation(format!(
                "vertex {v} is outside the {}-cube",
                self.m()
            )));
        }
        self.axes
            .iter()
            .map(|group| {
                let local = group
                    .iter()
                    .enumerate()
                    .fold(0u32, |acc, (j, &c)| acc | ((v >> (c - 1)) & 1) << j);
                let order = gray_order(group.len())?;
                order
                    .iter()
                    .position(|&g| g == local)
                    .ok_or_else(|| Error::Internal("Gray order is not a permutation".into()))
            })
            .collect()
    }
}

/// Grid position of every vertex, indexed by vertex.
///
/// # Errors
///
/// Propagates Gray-order errors.
pub fn assign_coordinates(spec: &LayoutSpec) -> Result<Vec<Vec<usize>>> {
    (0..1u32 << spec.m()).map(|v| spec.position(v)).collect()
}

/// Grid image of one generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Footprint {
    /// Index of the generator in its basis.
    pub id: usize,
    /// The generator, as `base+<typeset>`.
    pub generator: String,
    /// Occupied grid cells, sorted.
    pub cells: Vec<Vec<usize>>,
    /// Per-axis `(min, max)`.
    pub bbox: Vec<(usize, usize)>,
    /// Whether the cells fill their bounding box exactly.
    pub contiguous_box: bool,
}

impl Footprint {
    /// Per-axis side lengths of the bounding box.
    #[must_use]
    pub fn sides(&self) -> Vec<usize> {
        self.bbox.iter().map(|(lo, hi)| hi - lo + 1).collect()
    }

    /// Cells of the bounding box not covered by the footprint.
    #[must_use]
    pub fn excess(&self) -> usize {
        self.sides().iter().product::<usize>() - self.cells.len()
    }
}

/// Footprint of generator `g` (with id `id`) under `spec`.
///
/// # Errors
///
/// Returns [`Error::Dimension`] if `g` lives on a different cube.
pub fn footprint(spec: &LayoutSpec, id: usize, g: &Subcube) -> Result<Footprint> {
    if g.m() != spec.m() {
        return Err(Error::Dimension {
            expected: spec.m(),
            found: g.m(),
        });
    }
    let cells: BTreeSet<Vec<usize>> = g.vertices().map(|v| spec.position(v)).collect::<Result<_>>()?;
    let cells: Vec<Vec<usize>> = cells.into_iter().collect();
    let bbox: Vec<(usize, usize)> = (0..spec.spatial_dims())
        .map(|a| {
            let lo = cells.iter().map(|c| c[a]).min().unwrap_or(0);
            let hi = cells.iter().map(|c| c[a]).max().unwrap_or(0);
            (lo, hi)
        })
        .collect();
    let volume: usize = bbox.iter().map(|(lo, hi)| hi - lo + 1).product();
    Ok(Footprint {
        id,
        generator: g.to_string(),
        contiguous_box: volume == cells.len(),
        cells,
        bbox,
    })
}

/// Footprints of every generator of a basis.
///
/// # Errors
///
/// See [`footprint`].
pub fn footprints(spec: &LayoutSpec, basis: &NamedBasis) -> Result<Vec<Footprint>> {
    basis
        .generators()
        .iter()
        .enumerate()
        .map(|(i, g)| footprint(spec, i, g))
        .collect()
}

/// Escapes the characters that are special in XML text.
fn xml_escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Export format.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    /// `{layout, code, qubits, stabilizers, heuristic_excess_cells}`.
    Json,
    /// SVG 1.1 drawing (2D layouts only).
    Svg,
}

impl ExportFormat {
    /// File extension.
    #[must_use]
    pub fn extension(self) -> &'static str {
        match self {
            Self::Json => "json",
            Self::Svg => "svg",
        }
    }
}

impl std::str::FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Self::Json),
            "svg" => Ok(Self::Svg),
            other => Err(Error::Validation(format!("unknown export format {other:?}"))),
        }
    }
}

/// File name `<code>-<layout>.<ext>`.
#[must_use]
pub fn file_name(code: &str, kind: LayoutKind, format: ExportFormat) -> String {
    format!("{code}-{}.{}", kind.name(), format.extension())
}

#[derive(Serialize)]
struct QubitRecord {
    index: u32,
    vertex: String,
    x: usize,
    y: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    z: Option<usize>,
}

#[derive(Serialize)]
struct StabilizerRecord<'a> {
    id: usize,
    generator: &'a str,
    cells: &'a [Vec<usize>],
    contiguous_box: bool,
}

#[derive(Serialize)]
struct LayoutJson<'a> {
    layout: &'static str,
    code: &'a str,
    qubits: Vec<QubitRecord>,
    stabilizers: Vec<StabilizerRecord<'a>>,
    heuristic_excess_cells: usize,
}

const PITCH: usize = 40;
const MARGIN: usize = 30;
const PAD: usize = 10;
const PALETTE: [&str; 6] = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"];

fn svg(spec: &LayoutSpec, basis: &NamedBasis, fps: &[Footprint]) -> String {
    let ext = spec.extent();
    let width = 2 * MARGIN + (ext[0] - 1) * PITCH;
    let height = 2 * MARGIN + (ext[1] - 1) * PITCH;
    let px = |c: usize| MARGIN + c * PITCH;
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, "<title>{} on {}</title>", xml_escape(basis.label()), spec.kind().name());
    let _ = writeln!(out, r#"<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>"#);
    for fp in fps {
        let color = PALETTE[fp.id % PALETTE.len()];
        let _ = writeln!(out, r#"<g id="g{}"><title>{}</title>"#, fp.id, xml_escape(&fp.generator));
        if fp.contiguous_box {
            let (x0, x1) = fp.bbox[0];
            let (y0, y1) = fp.bbox[1];
            let _ = writeln!(
                out,
                r#"<rect x="{}" y="{}" width="{}" height="{}" fill="{color}" fill-opacity="0.25" stroke="{color}" stroke-width="2"/>"#,
                px(x0) - PAD,
                px(y0) - PAD,
                (x1 - x0) * PITCH + 2 * PAD,
                (y1 - y0) * PITCH + 2 * PAD
            );
        } else {
            for c in &fp.cells {
                let _ = writeln!(
                    out,
                    r#"<rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="{color}" stroke-width="2" stroke-dasharray="4 2"/>"#,
                    px(c[0]) - PAD,
                    px(c[1]) - PAD,
                    2 * PAD,
                    2 * PAD
                );
            }
        }
        let _ = writeln!(out, "</g>");
    }
    for x in 0..ext[0] {
        for y in 0..ext[1] {
            let _ = writeln!(out, r#"<circle cx="{}" cy="{}" r="4" fill="black"/>"#, px(x), px(y));
        }
    }
    out.push_str("</svg>\n");
    out
}

/// Renders a basis on a layout.
///
/// # Errors
///
/// Returns [`Error::Unsupported`] for SVG of a 3D layout and
/// [`Error::Dimension`] if the basis lives on a different cube.
pub fn export_layout(spec: &LayoutSpec, basis: &NamedBasis, format: ExportFormat) -> Result<Vec<u8>> {
    if basis.m() != spec.m() {
        return Err(Error::Dimension {
            expected: spec.m(),
            found: basis.m(),
        });
    }
    let fps = footprints(spec, basis)?;
    match format {
        ExportFormat::Svg => {
            if spec.spatial_dims() != 2 {
                return Err(Error::Unsupported(format!(
                    "SVG export needs a 2D layout; {} is {}D",
                    spec.kind().name(),
                    spec.spatial_dims()
                )));
            }
            Ok(svg(spec, basis, &fps).into_bytes())
        }
        ExportFormat::Json => {
            let qubits = assign_coordinates(spec)?
                .into_iter()
                .enumerate()
                .map(|(v, p)| QubitRecord {
                    index: v as u32,
                    vertex: vertex_string(spec.m(), v as u32),
                    x: p[0],
                    y: p[1],
                    z: p.get(2).copied(),
                })
                .collect();
            let doc = LayoutJson {
                layout: spec.kind().name(),
                code: basis.label(),
                qubits,
                stabilizers: fps
                    .iter()
                    .map(|f| StabilizerRecord {
                        id: f.id,
                        generator: &f.generator,
                        cells: &f.cells,
                        contiguous_box: f.contiguous_box,
                    })
                    .collect(),
                heuristic_excess_cells: fps.iter().map(Footprint::excess).sum(),
            };
            let mut bytes = serde_json::to_vec_pretty(&doc)
                .map_err(|e| Error::Internal(format!("layout JSON: {e}")))?;
            bytes.push(b'\n');
            Ok(bytes)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn planar6_example_position() {
        let spec = LayoutKind::Planar6.spec();
        // x1x2x3 = 110, x4x5x6 = 010
        let v = 0b1 | 0b10 | 0b1_0000;
        assert_eq!(spec.position(v).unwrap(), vec![2, 3]);
        assert_eq!(spec.position(0).unwrap(), vec![0, 0]);
    }

    #[test]
    fn layouts_are_bijections() {
        for kind in LayoutKind::ALL {
            let spec = kind.spec();
            let pts: BTreeSet<Vec<usize>> = assign_coordinates(&spec).unwrap().into_iter().collect();
            assert_eq!(pts.len(), 1 << spec.m());
            assert!(pts.iter().all(|p| p.iter().zip(spec.extent()).all(|(c, e)| *c < e)));
        }
    }

    #[test]
    fn svg_refused_for_3d() {
        let b = BasisKind::Rubik.build().unwrap();
        let err = export_layout(&LayoutKind::Rubik6.spec(), &b, ExportFormat::Svg).unwrap_err();
        assert!(matches!(err, Error::Unsupported(_)));
    }
}
