//! Deterministic SVG renderings of polyominoes and tiling patches.

use std::fmt::Write as _;

use tileforge::bn::SquareFactorization;
use tileforge::polyomino::{tiling_patch, BoundaryWord, PolyominoError};

pub struct RenderSpec {
    pub cell_size: u32,
    pub margin: u32,
    /// Fill colors cycled across copies in a patch.
    pub palette: Vec<String>,
    pub annotate_cuts: bool,
}

impl Default for RenderSpec {
    fn default() -> RenderSpec {
        RenderSpec {
            cell_size: 24,
            margin: 12,
            palette: [
                "#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc949", "#af7aa1",
                "#9c755f",
            ]
            .map(str::to_owned)
            .to_vec(),
            annotate_cuts: false,
        }
    }
}

/// Colors for the dots marking the two factorizations' cut vertices.
const CUT_COLORS: [&str; 2] = ["#d62728", "#1f77b4"];

struct Frame {
    cell: i64,
    margin: i64,
    min_x: i64,
    max_y: i64,
    width: i64,
    height: i64,
}

impl Frame {
    fn around(vertices: impl Iterator<Item = (i64, i64)>, spec: &RenderSpec) -> Frame {
        assert!(spec.cell_size >= 1);
        let mut min_x = i64::MAX;
        let mut max_x = i64::MIN;
        let mut min_y = i64::MAX;
        let mut max_y = i64::MIN;
        for (x, y) in vertices {
            min_x = min_x.min(x);
            max_x = max_x.max(x);
            min_y = min_y.min(y);
            max_y = max_y.max(y);
        }
        assert!(min_x <= max_x, "nothing to render");
        let cell = i64::from(spec.cell_size);
        let margin = i64::from(spec.margin);
        Frame {
            cell,
            margin,
            min_x,
            max_y,
            width: (max_x - min_x) * cell + 2 * margin,
            height: (max_y - min_y) * cell + 2 * margin,
        }
    }

    /// Grid point to pixel point, with the y axis flipped for SVG.
    fn pixel(&self, (x, y): (i64, i64)) -> (i64, i64) {
        (
            self.margin + (x - self.min_x) * self.cell,
            self.margin + (self.max_y - y) * self.cell,
        )
    }
}

fn open_svg(out: &mut String, frame: &Frame) {
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">",
        w = frame.width,
        h = frame.height
    );
}

fn polygon(out: &mut String, frame: &Frame, vertices: &[(i64, i64)], fill: &str) {
    out.push_str("  <polygon points=\"");
    for (i, &v) in vertices.iter().enumerate() {
        let (px, py) = frame.pixel(v);
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{px},{py}");
    }
    let _ = writeln!(
        out,
        "\" fill=\"{fill}\" fill-opacity=\"0.6\" stroke=\"#111111\" stroke-width=\"2\"/>"
    );
}

/// One closed polygon; with `annotate_cuts`, a dot at each cut vertex of
/// each given factorization, one color per factorization.
pub fn render_polyomino(
    p: &BoundaryWord,
    factorizations: &[SquareFactorization],
    spec: &RenderSpec,
) -> String {
    let trace = p.trace((0, 0));
    let frame = Frame::around(trace.iter().copied(), spec);
    let mut out = String::new();
    open_svg(&mut out, &frame);
    polygon(&mut out, &frame, &trace[..trace.len() - 1], &spec.palette[0]);
    if spec.annotate_cuts {
        let radius = (frame.cell / 5).max(2);
        for (which, f) in factorizations.iter().enumerate() {
            let color = CUT_COLORS[which % CUT_COLORS.len()];
            for cut in f.cuts() {
                let (px, py) = frame.pixel(trace[cut]);
                let _ = writeln!(
                    out,
                    "  <circle cx=\"{px}\" cy=\"{py}\" r=\"{radius}\" fill=\"{color}\"/>"
                );
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

/// A rows × cols patch of translated copies, one polygon per copy.
pub fn render_patch(
    p: &BoundaryWord,
    f: &SquareFactorization,
    rows: usize,
    cols: usize,
    spec: &RenderSpec,
) -> Result<String, PolyominoError> {
    let copies = tiling_patch(p, f, rows, cols)?;
    let trace = p.trace((0, 0));
    let outlines: Vec<Vec<(i64, i64)>> = copies
        .iter()
        .map(|((dx, dy), _)| {
            trace[..trace.len() - 1]
                .iter()
                .map(|&(x, y)| (x + dx, y + dy))
                .collect()
        })
        .collect();
    let frame = Frame::around(outlines.iter().flatten().copied(), spec);
    let mut out = String::new();
    open_svg(&mut out, &frame);
    for (i, outline) in outlines.iter().enumerate() {
        polygon(&mut out, &frame, outline, &spec.palette[i % spec.palette.len()]);
    }
    out.push_str("</svg>\n");
    Ok(out)
}
