//! Static pictures of presentations: the axis with its binding points,
//! page 2 as lower semicircles, pages 1 and 3 as upper semicircles.
//!
//! Page 3 passes over page 1; in SVG every crossing gets a white disk
//! (`class="gap"`) painted between the two upper pages, so page 1 shows a
//! break under each page-3 strand. Coordinates are printed with two
//! decimals, which keeps the output byte-stable.

use std::fmt::Write as _;

use threepage::diagram::{intersection_x, projection_crossings};
use threepage::{Arc, ThreePagePresentation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Svg,
    Ascii,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RenderSpec {
    pub format: Format,
    /// Pixels between neighbouring binding points (SVG only).
    pub scale: f64,
    pub point_labels: bool,
    pub page_labels: bool,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec { format: Format::Svg, scale: 40.0, point_labels: true, page_labels: false }
    }
}

const COLORS: [&str; 3] = ["#1f77b4", "#2ca02c", "#d62728"];

pub fn render(p: &ThreePagePresentation, spec: &RenderSpec) -> Result<String, String> {
    if !(spec.scale.is_finite() && spec.scale > 0.0) {
        return Err(format!("scale must be positive (got {})", spec.scale));
    }
    Ok(match spec.format {
        Format::Svg => svg(p, spec),
        Format::Ascii => ascii(p, spec),
    })
}

fn svg(p: &ThreePagePresentation, spec: &RenderSpec) -> String {
    let s = spec.scale;
    let n = p.n() as f64;
    let margin = s;
    let radius = (n - 1.0) / 2.0 * s;
    let width = (n - 1.0) * s + 2.0 * margin;
    let height = 2.0 * (radius + margin);
    let axis = radius + margin;
    let x = |i: f64| margin + (i - 1.0) * s;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        out,
        r##"<line class="axis" x1="0.00" y1="{axis:.2}" x2="{width:.2}" y2="{axis:.2}" stroke="#888888" stroke-width="1"/>"##
    );

    let arc_path = |a: &Arc, upper: bool| {
        let r = (a.hi - a.lo) as f64 / 2.0 * s;
        format!(
            "M {:.2} {axis:.2} A {r:.2} {r:.2} 0 0 {} {:.2} {axis:.2}",
            x(a.lo as f64),
            if upper { 1 } else { 0 },
            x(a.hi as f64)
        )
    };
    let draw_page = |out: &mut String, page: usize, upper: bool| {
        for a in p.page(page).arcs() {
            let _ = writeln!(
                out,
                r#"<path class="arc page{}" d="{}" fill="none" stroke="{}" stroke-width="2"/>"#,
                page + 1,
                arc_path(a, upper),
                COLORS[page]
            );
        }
    };
    draw_page(&mut out, 1, false);
    draw_page(&mut out, 0, true);
    for c in projection_crossings(p) {
        let (num, den) = intersection_x(&c.over, &c.under);
        let cx = num as f64 / den as f64;
        let (lo, hi) = (c.over.lo as f64, c.over.hi as f64);
        let cy = ((cx - lo) * (hi - cx)).max(0.0).sqrt();
        let _ = writeln!(
            out,
            r#"<circle class="gap" cx="{:.2}" cy="{:.2}" r="{:.2}" fill="white"/>"#,
            x(cx),
            axis - cy * s,
            s * 0.15
        );
    }
    draw_page(&mut out, 2, true);

    for i in 1..=p.n() {
        let _ = writeln!(out, r#"<circle class="point" cx="{:.2}" cy="{axis:.2}" r="3.00" fill="black"/>"#, x(i as f64));
        if spec.point_labels {
            let _ = writeln!(
                out,
                r#"<text x="{:.2}" y="{:.2}" font-size="10" text-anchor="middle">{i}</text>"#,
                x(i as f64) - s * 0.2,
                axis + 12.0
            );
        }
    }
    if spec.page_labels {
        for (k, color) in COLORS.iter().enumerate() {
            let _ = writeln!(
                out,
                r#"<text x="4.00" y="{:.2}" font-size="12" fill="{color}">P{}</text>"#,
                14.0 * (k + 1) as f64,
                k + 1
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

/// Character-grid approximation. Page 1 uses `-` and `|`, page 3 uses `=`
/// and `!` and overwrites page 1 where they meet, page 2 hangs below the
/// axis. An arc spanning `d` gaps rises `d / 2 + 1` rows.
fn ascii(p: &ThreePagePresentation, spec: &RenderSpec) -> String {
    let n = p.n() as usize;
    let cols = 3 * (n - 1) + 1;
    let height = |a: &Arc| ((a.hi - a.lo) / 2 + 1) as usize;
    let top = p.page(0).arcs().iter().chain(p.page(2).arcs()).map(height).max().unwrap_or(0);
    let bottom = p.page(1).arcs().iter().map(height).max().unwrap_or(0);
    let axis = top;
    let mut grid = vec![vec![' '; cols]; top + bottom + 1];
    let col = |i: u32| 3 * (i as usize - 1);

    let mut draw = |page: usize, up: bool, h_ch: char, v_ch: char| {
        for a in p.page(page).arcs() {
            let h = height(a);
            let row = |k: usize| if up { axis - k } else { axis + k };
            for k in 1..h {
                grid[row(k)][col(a.lo)] = v_ch;
                grid[row(k)][col(a.hi)] = v_ch;
            }
            for c in col(a.lo)..=col(a.hi) {
                grid[row(h)][c] = h_ch;
            }
            grid[row(h)][col(a.lo)] = '+';
            grid[row(h)][col(a.hi)] = '+';
        }
    };
    draw(1, false, '-', '|');
    draw(0, true, '-', '|');
    draw(2, true, '=', '!');
    for c in 0..cols {
        grid[axis][c] = if c % 3 == 0 { 'o' } else { '.' };
    }

    let mut out = String::new();
    for row in &grid {
        out.push_str(row.iter().collect::<String>().trim_end());
        out.push('\n');
    }
    if spec.point_labels {
        let mut labels = String::new();
        for i in 1..=p.n() {
            let _ = write!(labels, "{:<3}", i);
        }
        out.push_str(labels.trim_end());
        out.push('\n');
    }
    if spec.page_labels {
        out.push_str("P1 -  P2 - (below)  P3 = (over P1)\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> ThreePagePresentation {
        ThreePagePresentation::new(3, [&[(1, 2)], &[(2, 3)], &[(1, 3)]]).unwrap()
    }

    #[test]
    fn ascii_triangle() {
        let spec = RenderSpec { format: Format::Ascii, ..RenderSpec::default() };
        let text = render(&triangle(), &spec).unwrap();
        assert_eq!(text, "+=====+\n!--+  !\no..o..o\n   +--+\n1  2  3\n");
    }

    #[test]
    fn rejects_bad_scale() {
        let spec = RenderSpec { scale: 0.0, ..RenderSpec::default() };
        assert!(render(&triangle(), &spec).is_err());
    }
}
