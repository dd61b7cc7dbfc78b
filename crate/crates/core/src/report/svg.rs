//! Standalone SVG of the `(α, β)` quadrant with wall rays, the two
//! chambers next to `W^{ξ_b}`, and polarization markers.

use std::fmt::Write as _;
use std::path::Path;

use crate::chambers::ChamberDecomposition;
use crate::chow::DivisorClass;
use crate::exact::QuadraticNumber;
use crate::moduli::{ModuliReport, Verdict};

use super::document::wall_name;
use super::ReportError;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 520.0;
const MARGIN: f64 = 50.0;
const LEGEND: f64 = 150.0;

/// Ray slopes that bound the shaded chambers: `(C'_b lower, ξ_b, ξ_{b+1})`.
#[derive(Clone, Debug)]
pub struct Shading {
    pub prime_lo: QuadraticNumber,
    pub ray_b: QuadraticNumber,
    pub ray_next: QuadraticNumber,
}

fn colour(v: &Verdict) -> &'static str {
    match v {
        Verdict::Empty => "#c0392b",
        Verdict::NonemptyWithComponent { .. } => "#27ae60",
        Verdict::Decomposition { .. } => "#2980b9",
        Verdict::OutsideCoverage => "#7f8c8d",
    }
}

fn to_f64(d: &DivisorClass) -> (f64, f64) {
    let a = d.a.to_string().parse().unwrap_or(0.0);
    let b = d.b.to_string().parse().unwrap_or(0.0);
    (a, b)
}

struct Frame {
    alpha_max: f64,
    beta_max: f64,
}

impl Frame {
    fn x(&self, alpha: f64) -> f64 {
        MARGIN + alpha / self.alpha_max * (WIDTH - LEGEND - 2.0 * MARGIN)
    }

    fn y(&self, beta: f64) -> f64 {
        HEIGHT - MARGIN - beta / self.beta_max * (HEIGHT - 2.0 * MARGIN)
    }

    /// Where the ray of slope `t` leaves the frame.
    fn exit(&self, t: f64) -> (f64, f64) {
        if t * self.alpha_max <= self.beta_max {
            (self.alpha_max, t * self.alpha_max)
        } else {
            (self.beta_max / t, self.beta_max)
        }
    }
}

pub fn render_svg(dec: &ChamberDecomposition, reports: &[ModuliReport], shading: Option<&Shading>) -> String {
    let slopes: Vec<f64> = dec.rays.iter().map(|r| r.slope.to_f64()).collect();
    let points: Vec<(f64, f64)> = reports.iter().map(|r| to_f64(&r.polarization)).collect();
    let alpha_max = points.iter().map(|p| p.0).fold(1.0, f64::max) * 1.25;
    let top_slope = slopes.iter().copied().fold(0.0, f64::max);
    let beta_max = points.iter().map(|p| p.1).fold(top_slope * alpha_max, f64::max).max(1.0) * 1.1;
    let frame = Frame { alpha_max, beta_max };

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="11">"#
    );
    let _ = writeln!(s, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);

    if let Some(sh) = shading {
        for (lo, hi, fill, name) in [
            (&sh.ray_b, &sh.ray_next, "#d5f5e3", "C_b"),
            (&sh.prime_lo, &sh.ray_b, "#d6eaf8", "C'_b"),
        ] {
            let (x0, y0) = (frame.x(0.0), frame.y(0.0));
            let (a1, b1) = frame.exit(lo.to_f64());
            let (a2, b2) = frame.exit(hi.to_f64());
            let corner = if b1 < beta_max && b2 >= beta_max {
                format!(" {:.2},{:.2}", frame.x(alpha_max), frame.y(beta_max))
            } else {
                String::new()
            };
            let _ = writeln!(
                s,
                r#"<polygon points="{x0:.2},{y0:.2} {:.2},{:.2}{corner} {:.2},{:.2}" fill="{fill}" stroke="none"><title>{name}</title></polygon>"#,
                frame.x(a1),
                frame.y(b1),
                frame.x(a2),
                frame.y(b2)
            );
        }
    }

    // axes
    let _ = writeln!(
        s,
        r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black"/>"#,
        frame.x(0.0),
        frame.y(0.0),
        frame.x(alpha_max),
        frame.y(0.0)
    );
    let _ = writeln!(
        s,
        r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black"/>"#,
        frame.x(0.0),
        frame.y(0.0),
        frame.x(0.0),
        frame.y(beta_max)
    );
    let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}">α (S)</text>"#, frame.x(alpha_max) - 30.0, frame.y(0.0) + 20.0);
    let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}">β (H)</text>"#, frame.x(0.0) - 40.0, frame.y(beta_max) - 8.0);

    for (ray, t) in dec.rays.iter().zip(&slopes) {
        let (a, b) = frame.exit(*t);
        let names: Vec<String> = ray.walls.iter().map(|w| wall_name(&w.xi)).collect();
        let label = format!("{} t={}", names.join("/"), ray.slope.to_decimal(6));
        let _ = writeln!(
            s,
            r##"<line class="ray" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#34495e" stroke-width="1.5"/>"##,
            frame.x(0.0),
            frame.y(0.0),
            frame.x(a),
            frame.y(b)
        );
        let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}">{label}</text>"#, frame.x(a) + 4.0, frame.y(b) - 4.0);
    }

    for (r, (a, b)) in reports.iter().zip(&points) {
        let _ = writeln!(
            s,
            r#"<circle class="polarization" cx="{:.2}" cy="{:.2}" r="4" fill="{}"><title>{} {}</title></circle>"#,
            frame.x(*a),
            frame.y(*b),
            colour(&r.verdict),
            r.polarization,
            r.verdict.label()
        );
    }

    let lx = WIDTH - LEGEND + 10.0;
    let samples = [
        Verdict::Empty,
        Verdict::NonemptyWithComponent { dim_computed: None, dim_stated: None },
        Verdict::Decomposition { region: crate::moduli::ChamberRegion::Complement },
        Verdict::OutsideCoverage,
    ];
    for (i, v) in samples.iter().enumerate() {
        let y = MARGIN + 18.0 * i as f64;
        let _ = writeln!(s, r#"<circle cx="{lx:.2}" cy="{y:.2}" r="4" fill="{}"/>"#, colour(v));
        let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}">{}</text>"#, lx + 10.0, y + 4.0, v.label());
    }
    s.push_str("</svg>\n");
    s
}

pub fn emit_svg(
    dec: &ChamberDecomposition,
    reports: &[ModuliReport],
    shading: Option<&Shading>,
    path: &Path,
) -> Result<(), ReportError> {
    std::fs::write(path, render_svg(dec, reports, shading))
        .map_err(|e| ReportError::Io(format!("{}: {e}", path.display())))
}
