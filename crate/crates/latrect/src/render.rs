//! ASCII and SVG pictures of cell regions. Both are deterministic.

use std::fmt::Write;

use latrect_core::{bounding_box, Axis, Cell, CellRegion};

/// `#` for a cell, `.` for a hole in the bounding box; highest row first.
pub fn ascii(region: &CellRegion) -> String {
    let Ok(bb) = bounding_box(region) else {
        return String::new();
    };
    let mut out = String::new();
    for (j, _, _) in region.rows().rev() {
        for i in bb.a()..bb.b() {
            out.push(if region.contains_cell(Cell { i, j }) {
                '#'
            } else {
                '.'
            });
        }
        out.push('\n');
    }
    out
}

const SCALE: i64 = 20;
const MARGIN: i64 = 1;

/// One `rect` per cell with one cell of margin. Cells keep lattice
/// coordinates inside a group that flips the y axis, and the viewBox is given
/// in the flipped frame.
pub fn svg(region: &CellRegion, axis: Option<Axis>) -> String {
    let (x0, x1, y0, y1) = match bounding_box(region) {
        Ok(bb) => (bb.a(), bb.b(), bb.c(), bb.d()),
        Err(_) => (0, 0, 0, 0),
    };
    let width = x1 - x0 + 2 * MARGIN;
    let height = y1 - y0 + 2 * MARGIN;
    let left = x0 - MARGIN;
    let top = y1 + MARGIN;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="{} {} {} {}">"#,
        width * SCALE,
        height * SCALE,
        left,
        -top,
        width,
        height
    );
    out.push_str(
        r##"<g transform="scale(1,-1)" fill="#f2c879" stroke="#333333" stroke-width="0.05">"##,
    );
    out.push('\n');
    for cell in region.cells() {
        let _ = writeln!(
            out,
            r#"<rect x="{}" y="{}" width="1" height="1"/>"#,
            cell.i, cell.j
        );
    }
    out.push_str("</g>\n");
    if let Some(axis) = axis {
        let x = axis.doubled_x() as f64 / 2.0;
        let _ = writeln!(
            out,
            r##"<line x1="{x}" y1="{}" x2="{x}" y2="{}" stroke="#1f4e9c" stroke-width="0.08" stroke-dasharray="0.25,0.15"/>"##,
            -top,
            -(y0 - MARGIN)
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use latrect_core::{build, Orientation, ShapeSpec};

    #[test]
    fn ascii_pictures() {
        assert_eq!(ascii(&build(&ShapeSpec::Aztec(1)).unwrap()), "##\n##\n");
        assert_eq!(
            ascii(&build(&ShapeSpec::Biscuit(2)).unwrap()),
            ".#.\n###\n.#.\n"
        );
        assert_eq!(
            ascii(&build(&ShapeSpec::Staircase(3, Orientation::DL)).unwrap()),
            "#..\n##.\n###\n"
        );
        assert_eq!(
            ascii(&build(&ShapeSpec::Staircase(3, Orientation::UR)).unwrap()),
            "###\n.##\n..#\n"
        );
        assert_eq!(ascii(&CellRegion::empty()), "");
    }

    #[test]
    fn svg_is_deterministic() {
        let r = build(&ShapeSpec::Biscuit(3)).unwrap();
        let a = svg(&r, Some(Axis::HalfVertical(0)));
        assert_eq!(a, svg(&r, Some(Axis::HalfVertical(0))));
        assert_eq!(a.matches("<rect ").count(), 13);
        assert!(a.contains(r#"<line x1="0.5""#));
        assert!(a.starts_with("<svg "));
        assert!(a.ends_with("</svg>\n"));
        assert!(!svg(&r, None).contains("<line"));
    }
}
