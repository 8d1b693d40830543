//! The path-in-product picture of a double parsing: the word `c` drawn as a
//! lattice path in the rectangle a × b, where rows are the entries of `a`
//! (bottom to top), columns the entries of `b` (left to right), and the
//! rectangle is checkerboard-colored by maximal components. Entries of `c`
//! lying in tiles of both parsings become diagonal unit segments; entries in
//! a connector of one parsing run along an edge of the rectangle.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::parsing::{parse, seams, Element, Seam, SeamKind};
use crate::words::{component_ranges, ExpandedWord};

/// Which edge of the product rectangle an edge-run segment lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeSide {
    Left,
    Right,
    Top,
    Bottom,
}

/// One unit segment of the path, covering one entry of `c`. Coordinates are
/// lattice points: x from 0 to |b|, y from 0 to |a|, origin at the lower
/// left.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Segment {
    /// Entry inside a tile of both parsings: a diagonal of one cell, with
    /// the signs of the two tiles.
    Diagonal {
        from: (usize, usize),
        to: (usize, usize),
        sign_a: i8,
        sign_b: i8,
    },
    /// Entry inside a connector of one parsing: a horizontal or vertical
    /// unit run along an edge of the rectangle.
    EdgeRun {
        from: (usize, usize),
        to: (usize, usize),
        side: EdgeSide,
    },
}

impl Segment {
    pub fn from_point(&self) -> (usize, usize) {
        match *self {
            Segment::Diagonal { from, .. } | Segment::EdgeRun { from, .. } => from,
        }
    }

    pub fn to_point(&self) -> (usize, usize) {
        match *self {
            Segment::Diagonal { to, .. } | Segment::EdgeRun { to, .. } => to,
        }
    }
}

/// Output format of [`render`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Svg,
    Ascii,
}

impl std::str::FromStr for RenderFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "svg" => Ok(RenderFormat::Svg),
            "ascii" => Ok(RenderFormat::Ascii),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

/// The complete picture: entry-level grid sizes, maximal-component
/// boundaries for the checkerboard, the ordered path, and the seams.
#[derive(Debug, Clone)]
pub struct ProductDiagram {
    row_entries: Vec<i8>,
    col_entries: Vec<i8>,
    row_components: Vec<(usize, usize)>,
    col_components: Vec<(usize, usize)>,
    path: Vec<Segment>,
    seams: Vec<Seam>,
    vertical_traversals: usize,
    horizontal_traversals: usize,
}

impl ProductDiagram {
    /// Rows of the rectangle: entries of the first word, bottom to top.
    pub fn row_entries(&self) -> &[i8] {
        &self.row_entries
    }

    /// Columns of the rectangle: entries of the second word, left to right.
    pub fn col_entries(&self) -> &[i8] {
        &self.col_entries
    }

    /// Maximal-component ranges of the rows, bottom to top.
    pub fn row_components(&self) -> &[(usize, usize)] {
        &self.row_components
    }

    /// Maximal-component ranges of the columns, left to right.
    pub fn col_components(&self) -> &[(usize, usize)] {
        &self.col_components
    }

    /// A component cell is white when its row and column component indices
    /// have even sum; the path only crosses white cells diagonally.
    pub fn cell_is_white(&self, row_component: usize, col_component: usize) -> bool {
        (row_component + col_component) % 2 == 0
    }

    pub fn path(&self) -> &[Segment] {
        &self.path
    }

    pub fn seams(&self) -> &[Seam] {
        &self.seams
    }

    /// Number of full bottom-to-top (or top-to-bottom) passes of the path:
    /// the tile count of the row-word parsing.
    pub fn vertical_traversals(&self) -> usize {
        self.vertical_traversals
    }

    /// Number of full left-to-right (or right-to-left) passes: the tile
    /// count of the column-word parsing.
    pub fn horizontal_traversals(&self) -> usize {
        self.horizontal_traversals
    }

    pub fn mixed_seam_count(&self) -> usize {
        self.seams
            .iter()
            .filter(|s| s.kind == SeamKind::Mixed)
            .count()
    }
}

#[derive(Clone, Copy)]
enum EntryPlace {
    Tile { pos: usize, sign: i8, forward: bool },
    Connector { index: usize },
}

/// For each entry of `c`, where it falls in one parsing.
fn places(spans: &[crate::parsing::Span], len: usize) -> Vec<EntryPlace> {
    let mut out = Vec::with_capacity(len);
    for s in spans {
        for k in s.start..s.end {
            match s.element {
                Element::Tile { sign, forward, .. } => out.push(EntryPlace::Tile {
                    pos: k - s.start,
                    sign,
                    forward,
                }),
                Element::Connector { index, .. } => out.push(EntryPlace::Connector { index }),
            }
        }
    }
    debug_assert_eq!(out.len(), len);
    out
}

/// Builds the path picture of `c` in the rectangle a × b. Requires `c` to
/// parse with respect to both `a` and `b` literally; double parsings that do
/// not admit the picture (possible for non-minimal witnesses) are rejected
/// as not representable.
pub fn build_diagram(a: &ExpandedWord, b: &ExpandedWord, c: &ExpandedWord) -> Result<ProductDiagram> {
    let pa = parse(c, a).ok_or(Error::NotADoubleParsing)?;
    let pb = parse(c, b).ok_or(Error::NotADoubleParsing)?;
    let seam_list = seams(c, &pa, &pb)?;

    let rows = a.len();
    let cols = b.len();
    let places_a = places(&pa.spans(), c.len());
    let places_b = places(&pb.spans(), c.len());

    let mut path = Vec::with_capacity(c.len());
    let mut cursor = (0usize, 0usize);
    let mut used: std::collections::BTreeSet<((usize, usize), (usize, usize))> =
        std::collections::BTreeSet::new();

    for k in 0..c.len() {
        let seg = match (places_a[k], places_b[k]) {
            (
                EntryPlace::Tile {
                    pos: pa_pos,
                    sign: sa,
                    forward: fa,
                },
                EntryPlace::Tile {
                    pos: pb_pos,
                    sign: sb,
                    forward: fb,
                },
            ) => {
                let row = if fa { pa_pos } else { rows - 1 - pa_pos };
                let col = if fb { pb_pos } else { cols - 1 - pb_pos };
                let from = (
                    if fb { col } else { col + 1 },
                    if fa { row } else { row + 1 },
                );
                let to = (
                    if fb { col + 1 } else { col },
                    if fa { row + 1 } else { row },
                );
                Segment::Diagonal {
                    from,
                    to,
                    sign_a: sa,
                    sign_b: sb,
                }
            }
            (
                EntryPlace::Tile {
                    pos: pa_pos,
                    forward: fa,
                    ..
                },
                EntryPlace::Connector { index },
            ) => {
                // Column-word connector: vertical run on the left or right
                // edge, right after a forward column tile.
                let side = if index % 2 == 0 {
                    EdgeSide::Right
                } else {
                    EdgeSide::Left
                };
                let x = if side == EdgeSide::Right { cols } else { 0 };
                let row = if fa { pa_pos } else { rows - 1 - pa_pos };
                let from = (x, if fa { row } else { row + 1 });
                let to = (x, if fa { row + 1 } else { row });
                Segment::EdgeRun { from, to, side }
            }
            (
                EntryPlace::Connector { index },
                EntryPlace::Tile {
                    pos: pb_pos,
                    forward: fb,
                    ..
                },
            ) => {
                // Row-word connector: horizontal run on the top or bottom
                // edge, top after a forward row tile.
                let side = if index % 2 == 0 {
                    EdgeSide::Top
                } else {
                    EdgeSide::Bottom
                };
                let y = if side == EdgeSide::Top { rows } else { 0 };
                let col = if fb { pb_pos } else { cols - 1 - pb_pos };
                let from = (if fb { col } else { col + 1 }, y);
                let to = (if fb { col + 1 } else { col }, y);
                Segment::EdgeRun { from, to, side }
            }
            (EntryPlace::Connector { .. }, EntryPlace::Connector { .. }) => {
                return Err(Error::NotRepresentable);
            }
        };
        if seg.from_point() != cursor {
            return Err(Error::NotRepresentable);
        }
        let key = if seg.from_point() <= seg.to_point() {
            (seg.from_point(), seg.to_point())
        } else {
            (seg.to_point(), seg.from_point())
        };
        if !used.insert(key) {
            return Err(Error::NotRepresentable);
        }
        cursor = seg.to_point();
        path.push(seg);
    }
    if cursor != (cols, rows) {
        return Err(Error::NotRepresentable);
    }

    Ok(ProductDiagram {
        row_entries: a.entries().to_vec(),
        col_entries: b.entries().to_vec(),
        row_components: component_ranges(a.entries()),
        col_components: component_ranges(b.entries()),
        path,
        seams: seam_list,
        vertical_traversals: pa.tile_count(),
        horizontal_traversals: pb.tile_count(),
    })
}

const UNIT: usize = 20;
const MARGIN: usize = 40;

fn svg_x(x: usize) -> usize {
    MARGIN + x * UNIT
}

/// SVG y grows downward; diagram y grows upward.
fn svg_y(rows: usize, y: usize) -> usize {
    MARGIN + (rows - y) * UNIT
}

fn render_svg(d: &ProductDiagram) -> Vec<u8> {
    let rows = d.row_entries.len();
    let cols = d.col_entries.len();
    let width = 2 * MARGIN + cols * UNIT;
    let height = 2 * MARGIN + rows * UNIT;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    let _ = writeln!(
        s,
        "<desc>{} vertical traversals, {} horizontal traversals, {} mixed seams</desc>",
        d.vertical_traversals,
        d.horizontal_traversals,
        d.mixed_seam_count()
    );
    let _ = writeln!(s, "<rect width=\"{width}\" height=\"{height}\" fill=\"white\"/>");

    // Checkerboard at component resolution: black cells filled.
    for (i, &(r0, r1)) in d.row_components.iter().enumerate() {
        for (j, &(c0, c1)) in d.col_components.iter().enumerate() {
            if !d.cell_is_white(i, j) {
                let x = svg_x(c0);
                let y = svg_y(rows, r1);
                let w = (c1 - c0) * UNIT;
                let h = (r1 - r0) * UNIT;
                let _ = writeln!(
                    s,
                    "<rect x=\"{x}\" y=\"{y}\" width=\"{w}\" height=\"{h}\" fill=\"#d0d0d0\"/>"
                );
            }
        }
    }

    // Entry-level grid (light) with component boundaries (dark).
    for y in 0..=rows {
        let heavy = y == 0 || y == rows || d.row_components.iter().any(|&(r0, _)| r0 == y);
        let stroke = if heavy { "#404040" } else { "#c8c8c8" };
        let _ = writeln!(
            s,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{stroke}\"/>",
            svg_x(0),
            svg_y(rows, y),
            svg_x(cols),
            svg_y(rows, y)
        );
    }
    for x in 0..=cols {
        let heavy = x == 0 || x == cols || d.col_components.iter().any(|&(c0, _)| c0 == x);
        let stroke = if heavy { "#404040" } else { "#c8c8c8" };
        let _ = writeln!(
            s,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{stroke}\"/>",
            svg_x(x),
            svg_y(rows, 0),
            svg_x(x),
            svg_y(rows, rows)
        );
    }

    // The path, one stroked line per unit segment, with sign-pair labels at
    // diagonal midpoints.
    for seg in &d.path {
        let (fx, fy) = seg.from_point();
        let (tx, ty) = seg.to_point();
        let _ = writeln!(
            s,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#c02020\" stroke-width=\"2\"/>",
            svg_x(fx),
            svg_y(rows, fy),
            svg_x(tx),
            svg_y(rows, ty)
        );
        if let Segment::Diagonal { sign_a, sign_b, .. } = seg {
            let mx = (svg_x(fx) + svg_x(tx)) / 2;
            let my = (svg_y(rows, fy) + svg_y(rows, ty)) / 2;
            let label = format!(
                "({},{})",
                if *sign_a > 0 { "+" } else { "-" },
                if *sign_b > 0 { "+" } else { "-" }
            );
            let _ = writeln!(
                s,
                "<text x=\"{mx}\" y=\"{my}\" font-size=\"7\" text-anchor=\"middle\" fill=\"#2020a0\">{label}</text>"
            );
        }
    }

    // Mixed seams: markers at the corner point where the path turns.
    for seam in &d.seams {
        if seam.kind != SeamKind::Mixed {
            continue;
        }
        let (px, py) = d.path[seam.position].from_point();
        let _ = writeln!(
            s,
            "<circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"none\" stroke=\"#208020\" stroke-width=\"2\"/>",
            svg_x(px),
            svg_y(rows, py)
        );
    }

    let _ = writeln!(s, "</svg>");
    s.into_bytes()
}

fn render_ascii(d: &ProductDiagram) -> Vec<u8> {
    let rows = d.row_entries.len();
    let cols = d.col_entries.len();
    // Character grid: one cell per entry cell plus a one-character border on
    // each side for edge runs.
    let gw = cols + 2;
    let gh = rows + 2;
    let mut grid = vec![vec![' '; gw]; gh];

    // Checkerboard background.
    for (i, &(r0, r1)) in d.row_components.iter().enumerate() {
        for (j, &(c0, c1)) in d.col_components.iter().enumerate() {
            let ch = if d.cell_is_white(i, j) { '.' } else { '#' };
            for r in r0..r1 {
                for c in c0..c1 {
                    grid[gh - 2 - r][c + 1] = ch;
                }
            }
        }
    }

    for seg in &d.path {
        match *seg {
            Segment::Diagonal { from, to, .. } => {
                let row = from.1.min(to.1);
                let col = from.0.min(to.0);
                let rising = (from.0 < to.0) == (from.1 < to.1);
                grid[gh - 2 - row][col + 1] = if rising { '/' } else { '\\' };
            }
            Segment::EdgeRun { from, to, side } => match side {
                EdgeSide::Left | EdgeSide::Right => {
                    let row = from.1.min(to.1);
                    let col = if side == EdgeSide::Left { 0 } else { gw - 1 };
                    grid[gh - 2 - row][col] = '|';
                }
                EdgeSide::Top | EdgeSide::Bottom => {
                    let col = from.0.min(to.0);
                    let r = if side == EdgeSide::Top { 0 } else { gh - 1 };
                    grid[r][col + 1] = '-';
                }
            },
        }
    }

    // Mixed seams: corner markers.
    for seam in &d.seams {
        if seam.kind != SeamKind::Mixed {
            continue;
        }
        let (px, py) = d.path[seam.position].from_point();
        let r = if py == 0 { gh - 1 } else { 0 };
        let c = if px == 0 { 0 } else { gw - 1 };
        grid[r][c] = '*';
    }

    let mut s = String::new();
    for line in &grid {
        let text: String = line.iter().collect();
        s.push_str(text.trim_end());
        s.push('\n');
    }
    let _ = writeln!(
        s,
        "traversals: {} vertical, {} horizontal; mixed seams: {}",
        d.vertical_traversals,
        d.horizontal_traversals,
        d.mixed_seam_count()
    );
    s.into_bytes()
}

/// Renders a diagram to bytes. Deterministic: equal inputs give identical
/// output.
pub fn render(d: &ProductDiagram, format: RenderFormat) -> Vec<u8> {
    match format {
        RenderFormat::Svg => render_svg(d),
        RenderFormat::Ascii => render_ascii(d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(entries: &[i8]) -> ExpandedWord {
        ExpandedWord::new(entries.to_vec()).unwrap()
    }

    fn example() -> (ExpandedWord, ExpandedWord, ExpandedWord) {
        (
            w(&[2, -2, 0, -2]),
            w(&[2, -2, 0, -2, 2, -2, 0, -2]),
            w(&[
                2, -2, 0, -2, 2, -2, 0, -2, 2, 2, 0, 2, -2, 2, 0, 2, -2, -2, 0, -2, 2, -2, 0, -2,
                2, -2, 0, -2,
            ]),
        )
    }

    #[test]
    fn example_traversals_and_seams() {
        let (a, b, c) = example();
        let d = build_diagram(&a, &b, &c).unwrap();
        assert_eq!(d.vertical_traversals(), 5);
        assert_eq!(d.horizontal_traversals(), 3);
        assert_eq!(d.mixed_seam_count(), 2);
        assert_eq!(d.path().len(), c.len());
        assert_eq!(d.row_components().len(), 2);
        assert_eq!(d.col_components().len(), 4);
    }

    #[test]
    fn example_path_geometry() {
        let (a, b, c) = example();
        let d = build_diagram(&a, &b, &c).unwrap();
        assert_eq!(d.path()[0].from_point(), (0, 0));
        assert_eq!(d.path().last().unwrap().to_point(), (b.len(), a.len()));
        for pair in d.path().windows(2) {
            assert_eq!(pair[0].to_point(), pair[1].from_point());
        }
        // Diagonal cell law: the row entry equals the signed column entry.
        for seg in d.path() {
            if let Segment::Diagonal {
                from,
                to,
                sign_a,
                sign_b,
            } = *seg
            {
                let row = from.1.min(to.1);
                let col = from.0.min(to.0);
                assert_eq!(
                    d.row_entries()[row],
                    sign_a * sign_b * d.col_entries()[col]
                );
                assert!(sign_a == sign_b, "minimal witness uses matched signs");
            }
        }
    }

    #[test]
    fn identity_is_single_diagonal() {
        let a = w(&[2, -2, 0, -2]);
        let d = build_diagram(&a, &a, &a).unwrap();
        assert_eq!(d.vertical_traversals(), 1);
        assert_eq!(d.horizontal_traversals(), 1);
        assert!(d
            .path()
            .iter()
            .all(|s| matches!(s, Segment::Diagonal { .. })));
        let points: Vec<_> = d.path().iter().map(|s| s.to_point()).collect();
        assert_eq!(points.last(), Some(&(4, 4)));
        assert!(points.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn non_witness_rejected() {
        let a = w(&[2, -2]);
        let b = w(&[2, 2]);
        let c = w(&[2, 2]);
        assert!(matches!(
            build_diagram(&a, &b, &c),
            Err(Error::NotADoubleParsing)
        ));
    }

    #[test]
    fn render_is_deterministic() {
        let (a, b, c) = example();
        let d = build_diagram(&a, &b, &c).unwrap();
        let svg1 = render(&d, RenderFormat::Svg);
        let svg2 = render(&d, RenderFormat::Svg);
        assert_eq!(svg1, svg2);
        let text = String::from_utf8(svg1).unwrap();
        assert!(text.contains("5 vertical traversals, 3 horizontal traversals, 2 mixed seams"));
        assert!(text.starts_with("<svg"));
        let ascii = String::from_utf8(render(&d, RenderFormat::Ascii)).unwrap();
        assert!(ascii.contains("traversals: 5 vertical, 3 horizontal; mixed seams: 2"));
    }

    #[test]
    fn format_parsing() {
        assert_eq!("svg".parse::<RenderFormat>().unwrap(), RenderFormat::Svg);
        assert_eq!("ascii".parse::<RenderFormat>().unwrap(), RenderFormat::Ascii);
        assert!(matches!(
            "png".parse::<RenderFormat>(),
            Err(Error::UnsupportedFormat(_))
        ));
    }
}
