//! Minimal SVG rendering of braid diagrams: strands run top to bottom, one
//! crossing per row. The under-strand of a classical crossing is drawn
//! with a gap; virtual crossings carry a small circle.

use std::fmt::Write;

use crate::braid::{BraidWord, LetterKind};

const CELL: f64 = 40.0;
const MARGIN: f64 = 20.0;

fn line(svg: &mut String, x1: f64, y1: f64, x2: f64, y2: f64) {
    let _ = write!(
        svg,
        r#"<line x1="{x1:.1}" y1="{y1:.1}" x2="{x2:.1}" y2="{y2:.1}"/>"#
    );
}

/// Piece of a crossing line, drawn from parameter `t0` to `t1` along the
/// segment between the row's top and bottom anchor points.
fn partial_line(svg: &mut String, x1: f64, y1: f64, x2: f64, y2: f64, t0: f64, t1: f64) {
    line(
        svg,
        x1 + (x2 - x1) * t0,
        y1 + (y2 - y1) * t0,
        x1 + (x2 - x1) * t1,
        y1 + (y2 - y1) * t1,
    );
}

/// Renders the diagram to a standalone SVG document.
pub fn render_svg(w: &BraidWord) -> String {
    let n = w.degree();
    let rows = w.len().max(1);
    let width = MARGIN * 2.0 + CELL * (n.saturating_sub(1)) as f64;
    let height = MARGIN * 2.0 + CELL * rows as f64;
    let col_x = |c: usize| MARGIN + CELL * c as f64;
    let row_y = |r: usize| MARGIN + CELL * r as f64;

    let mut svg = String::new();
    let _ = write!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    );
    svg.push_str(r#"<g stroke="black" stroke-width="2" fill="none">"#);

    if w.is_empty() {
        for c in 0..n {
            line(&mut svg, col_x(c), row_y(0), col_x(c), row_y(1));
        }
    }
    for (r, letter) in w.letters().iter().enumerate() {
        let c = letter.index - 1;
        let (y0, y1) = (row_y(r), row_y(r + 1));
        for other in (0..n).filter(|&k| k != c && k != c + 1) {
            line(&mut svg, col_x(other), y0, col_x(other), y1);
        }
        let (xl, xr) = (col_x(c), col_x(c + 1));
        match letter.kind {
            LetterKind::Positive => {
                // left strand dives under the right one
                partial_line(&mut svg, xl, y0, xr, y1, 0.0, 0.35);
                partial_line(&mut svg, xl, y0, xr, y1, 0.65, 1.0);
                line(&mut svg, xr, y0, xl, y1);
            }
            LetterKind::Negative => {
                partial_line(&mut svg, xr, y0, xl, y1, 0.0, 0.35);
                partial_line(&mut svg, xr, y0, xl, y1, 0.65, 1.0);
                line(&mut svg, xl, y0, xr, y1);
            }
            LetterKind::Virtual => {
                line(&mut svg, xl, y0, xr, y1);
                line(&mut svg, xr, y0, xl, y1);
                let (cx, cy) = ((xl + xr) / 2.0, (y0 + y1) / 2.0);
                let _ = write!(
                    svg,
                    r#"<circle cx="{cx:.1}" cy="{cy:.1}" r="6" fill="white"/>"#
                );
            }
        }
    }
    svg.push_str("</g></svg>");
    svg
}
