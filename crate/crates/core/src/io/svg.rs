use std::collections::BTreeSet;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::hyperbolic::{BinaryTile, DiskCenter};
use crate::substitution::{SubstitutionSystem, TileInstance};

use super::fmt_f64;

const FILLS: [&str; 4] = ["#e8c170", "#6f9fd8", "#d27a6c", "#84b77d"];
const STROKE: &str = r##"stroke="#333333" stroke-width="1" vector-effect="non-scaling-stroke""##;

/// Header plus a `viewBox` around `[x0, x1] x [y0, y1]` (after the y flip)
/// with room for `legend_rows` legend lines above the drawing.
fn open_svg(out: &mut String, b: [f64; 4], legend_rows: usize) -> f64 {
    let [x0, y0, x1, y1] = b;
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let pad = 0.02 * span;
    let line = 0.04 * span;
    let top = -(y1 + pad + line * legend_rows as f64);
    let w = x1 - x0 + 2.0 * pad;
    let h = y1 - y0 + 2.0 * pad + line * legend_rows as f64;
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="800" height="{:.0}">"#,
        fmt_f64(x0 - pad),
        fmt_f64(top),
        fmt_f64(w),
        fmt_f64(h),
        800.0 * h / w
    )
    .expect("string write");
    line
}

fn legend_line(out: &mut String, b: [f64; 4], line: f64, row: usize, fill: &str, text: &str) {
    let [x0, _, _, y1] = b;
    let y = -(y1 + line * (row as f64 + 1.0));
    writeln!(
        out,
        r#"<rect x="{}" y="{}" width="{}" height="{}" fill="{fill}" {STROKE}/><text x="{}" y="{}" font-size="{}" font-family="sans-serif">{text}</text>"#,
        fmt_f64(x0),
        fmt_f64(y),
        fmt_f64(0.6 * line),
        fmt_f64(0.6 * line),
        fmt_f64(x0 + line),
        fmt_f64(y + 0.55 * line),
        fmt_f64(0.6 * line),
    )
    .expect("string write");
}

/// Planar tiles as filled polygons, one fill per prototile, with a legend
/// giving each prototile's label and its number of distinct orientations.
pub fn tiles_svg(system: &SubstitutionSystem, tiles: &[TileInstance]) -> Result<String> {
    if system.dimension != 2 {
        return Err(Error::FormatMismatch {
            format: "svg".into(),
            dimension: system.dimension,
        });
    }
    let polys: Vec<Vec<[f64; 3]>> = tiles.iter().map(|t| t.vertices(system)).collect();
    let mut b = [f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY];
    for v in polys.iter().flatten() {
        b = [b[0].min(v[0]), b[1].min(v[1]), b[2].max(v[0]), b[3].max(v[1])];
    }
    if polys.is_empty() {
        b = [0.0, 0.0, 1.0, 1.0];
    }
    let mut out = String::new();
    let line = open_svg(&mut out, b, system.prototiles.len());
    for p in &system.prototiles {
        let orientations: BTreeSet<_> = tiles
            .iter()
            .filter(|t| t.prototile == p.id)
            .map(|t| t.orientation())
            .collect();
        let count = tiles.iter().filter(|t| t.prototile == p.id).count();
        let text = format!("{}: {count} tiles, {} orientations", p.label, orientations.len());
        legend_line(&mut out, b, line, p.id, FILLS[p.id % FILLS.len()], &text);
    }
    writeln!(out, r#"<g transform="scale(1,-1)" {STROKE}>"#).expect("string write");
    for (t, poly) in tiles.iter().zip(&polys) {
        let points: Vec<String> = poly
            .iter()
            .map(|v| format!("{},{}", fmt_f64(v[0]), fmt_f64(v[1])))
            .collect();
        writeln!(
            out,
            r#"<polygon points="{}" fill="{}"/>"#,
            points.join(" "),
            FILLS[t.prototile % FILLS.len()]
        )
        .expect("string write");
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HyperbolicStyle {
    /// Hyperbolic radius of drawn disks.
    pub disk_radius: f64,
    /// Draw the bumps that mark how tiles fit together.
    pub decorations: bool,
}

impl Default for HyperbolicStyle {
    fn default() -> Self {
        Self {
            disk_radius: 0.2,
            decorations: false,
        }
    }
}

/// Binary tiles as rectangles of the upper half-plane (geodesic sides
/// vertical, horocyclic sides horizontal) and disks as Euclidean circles.
pub fn hyperbolic_svg(tiles: &[BinaryTile], centers: &[DiskCenter], style: HyperbolicStyle) -> String {
    let bounds: Vec<[f64; 4]> = tiles.iter().map(|t| t.bounds()).collect();
    let mut b = [f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY];
    for r in &bounds {
        b = [b[0].min(r[0]), b[1].min(r[1]), b[2].max(r[2]), b[3].max(r[3])];
    }
    if bounds.is_empty() {
        b = [0.0, 1.0, 2.0, 2.0];
    }
    let mut out = String::new();
    open_svg(&mut out, b, 0);
    writeln!(out, r#"<g transform="scale(1,-1)" {STROKE}>"#).expect("string write");
    for (t, r) in tiles.iter().zip(&bounds) {
        let [x0, y0, x1, y1] = *r;
        writeln!(
            out,
            r#"<rect x="{}" y="{}" width="{}" height="{}" fill="{}"/>"#,
            fmt_f64(x0),
            fmt_f64(y0),
            fmt_f64(x1 - x0),
            fmt_f64(y1 - y0),
            FILLS[t.level.rem_euclid(2) as usize]
        )
        .expect("string write");
        if style.decorations {
            let (w, h) = (x1 - x0, y1 - y0);
            let mid = x0 + w / 2.0;
            writeln!(
                out,
                r#"<path d="M{} {} L{} {} L{} {} Z M{} {} h{} v{} h{} Z" fill="none"/>"#,
                fmt_f64(mid - 0.05 * w),
                fmt_f64(y1),
                fmt_f64(mid),
                fmt_f64(y1 - 0.1 * h),
                fmt_f64(mid + 0.05 * w),
                fmt_f64(y1),
                fmt_f64(x1),
                fmt_f64(y0 + 0.4 * h),
                fmt_f64(-0.04 * w),
                fmt_f64(0.2 * h),
                fmt_f64(0.04 * w),
            )
            .expect("string write");
        }
    }
    let (ch, sh) = (style.disk_radius.cosh(), style.disk_radius.sinh());
    for c in centers {
        let x = crate::exact::rational_to_f64(&c.x);
        let y = crate::exact::rational_to_f64(&c.y);
        writeln!(
            out,
            r##"<circle cx="{}" cy="{}" r="{}" fill="#ffffff" fill-opacity="0.6"/>"##,
            fmt_f64(x),
            fmt_f64(y * ch),
            fmt_f64(y * sh)
        )
        .expect("string write");
    }
    out.push_str("</g>\n</svg>\n");
    out
}
