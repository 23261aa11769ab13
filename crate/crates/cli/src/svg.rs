//! Log-log scatter of |ratio − 1| against n.

use crate::sweep::SweepTable;
use std::fmt::Write;

const W: f64 = 640.0;
const H: f64 = 420.0;
const PAD: f64 = 60.0;

fn span(lo: f64, hi: f64) -> (f64, f64) {
    if hi > lo {
        (lo, hi)
    } else {
        (lo - 0.5, hi + 0.5)
    }
}

pub fn render_svg(table: &SweepTable, slope: Option<f64>) -> String {
    let pts: Vec<(f64, f64)> = table
        .rows
        .iter()
        .filter(|r| r.ok() && r.ratio_minus_1.is_finite() && r.ratio_minus_1 > 0.0)
        .map(|r| ((r.n as f64).log10(), r.ratio_minus_1.log10()))
        .collect();
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#
    );
    s.push_str("<style>.axis{stroke:#333;stroke-width:1}.marker{fill:#1f77b4}.label{font:12px sans-serif}</style>\n");
    let (x0, x1) = (PAD, W - PAD / 2.0);
    let (y0, y1) = (H - PAD, PAD / 2.0);
    let _ = writeln!(s, r#"<line class="axis" x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}"/>"#);
    let _ = writeln!(s, r#"<line class="axis" x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}"/>"#);
    let _ = writeln!(s, r#"<text class="label" x="{}" y="{}">log10 n</text>"#, (x0 + x1) / 2.0, H - 15.0);
    let _ = writeln!(
        s,
        r#"<text class="label" x="15" y="{}" transform="rotate(-90 15 {})">log10 |ratio - 1|</text>"#,
        (y0 + y1) / 2.0,
        (y0 + y1) / 2.0
    );
    if !pts.is_empty() {
        let (lx, hx) = span(
            pts.iter().map(|p| p.0).fold(f64::INFINITY, f64::min),
            pts.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max),
        );
        let (ly, hy) = span(
            pts.iter().map(|p| p.1).fold(f64::INFINITY, f64::min),
            pts.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max),
        );
        let px = |x: f64| x0 + (x - lx) / (hx - lx) * (x1 - x0);
        let py = |y: f64| y0 + (y - ly) / (hy - ly) * (y1 - y0);
        for (v, anchor) in [(lx, "start"), (hx, "end")] {
            let _ = writeln!(s, r#"<text class="label" x="{:.2}" y="{}" text-anchor="{anchor}">{v:.2}</text>"#, px(v), y0 + 16.0);
        }
        for v in [ly, hy] {
            let _ = writeln!(s, r#"<text class="label" x="{}" y="{:.2}" text-anchor="end">{v:.2}</text>"#, x0 - 4.0, py(v));
        }
        for (x, y) in &pts {
            let _ = writeln!(s, r#"<circle class="marker" cx="{:.2}" cy="{:.2}" r="3"/>"#, px(*x), py(*y));
        }
    }
    let note = match slope {
        Some(k) => format!("fitted slope {k:.3}"),
        None => "fitted slope n/a".to_string(),
    };
    let _ = writeln!(s, r#"<text class="label" x="{}" y="{}" text-anchor="end">{note}</text>"#, x1, y1 + 14.0);
    s.push_str("</svg>\n");
    s
}

pub fn emit_svg(table: &SweepTable, slope: Option<f64>, path: &std::path::Path) -> std::io::Result<()> {
    std::fs::write(path, render_svg(table, slope))
}
