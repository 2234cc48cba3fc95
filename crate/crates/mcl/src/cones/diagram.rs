//! Deterministic renderings of the chamber decomposition: a text table, an
//! SVG picture with the rays at their true angles, and a JSON description.

use super::{base_locus_at, log_model, walls, Space, Wall};
use crate::exact::Rat;
use crate::picard::ExtendedAlpha;
use std::fmt::Write as _;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DiagramFormat {
    Text,
    Svg,
    Json,
}

impl std::str::FromStr for DiagramFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "text" => Ok(DiagramFormat::Text),
            "svg" => Ok(DiagramFormat::Svg),
            "json" => Ok(DiagramFormat::Json),
            other => Err(format!("unknown format `{other}` (text|svg|json)")),
        }
    }
}

/// A slope strictly between two adjacent walls, used to label the open
/// chamber by its base locus and model.
fn midpoint_alpha(upper: &Wall, lower: &Wall) -> ExtendedAlpha {
    match (&upper.alpha, &lower.alpha) {
        (ExtendedAlpha::Infinity, ExtendedAlpha::Finite(a)) => {
            ExtendedAlpha::Finite(a + Rat::one())
        }
        (ExtendedAlpha::Finite(a), ExtendedAlpha::Finite(b)) => {
            ExtendedAlpha::Finite(&(a + b) / &Rat::from_int(2))
        }
        _ => unreachable!("walls are slope-ordered with a single infinite ray"),
    }
}

struct Chamber {
    upper: &'static str,
    lower: &'static str,
    sample: ExtendedAlpha,
}

fn chambers() -> Vec<Chamber> {
    let w = walls();
    w.windows(2)
        .map(|pair| Chamber {
            upper: pair[0].name,
            lower: pair[1].name,
            sample: midpoint_alpha(&pair[0], &pair[1]),
        })
        .collect()
}

pub fn render(space: Space, format: DiagramFormat) -> String {
    match format {
        DiagramFormat::Text => render_text(space),
        DiagramFormat::Svg => render_svg(space),
        DiagramFormat::Json => render_json(space),
    }
}

fn render_text(space: Space) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "effective-cone chambers on {space}");
    let w = walls();
    for (i, wall) in w.iter().enumerate() {
        let _ = writeln!(
            out,
            "ray  {:<5} = {:<8} alpha = {}",
            wall.name,
            wall.ray.to_string(),
            wall.alpha
        );
        if let Some(ch) = chambers().get(i) {
            let bl = base_locus_at(&ch.sample, space);
            let model = log_model(&ch.sample);
            let _ = writeln!(
                out,
                "  chamber ({}, {}):  B = {:<6} model = {}",
                ch.upper,
                ch.lower,
                bl.short_label(),
                model
            );
        }
    }
    out
}

fn render_json(space: Space) -> String {
    let w = walls();
    let walls_json: Vec<serde_json::Value> = w
        .iter()
        .map(|wall| {
            serde_json::json!({
                "name": wall.name,
                "ray": [wall.ray.p.to_string(), wall.ray.q.to_string()],
                "alpha": wall.alpha.to_string(),
            })
        })
        .collect();
    let chambers_json: Vec<serde_json::Value> = chambers()
        .iter()
        .map(|ch| {
            serde_json::json!({
                "between": [ch.upper, ch.lower],
                "base_locus": base_locus_at(&ch.sample, space).json_name(),
                "model": log_model(&ch.sample).json_name(),
            })
        })
        .collect();
    let doc = serde_json::json!({
        "space": space.json_name(),
        "walls": walls_json,
        "chambers": chambers_json,
    });
    serde_json::to_string_pretty(&doc).expect("diagram serializes")
}

const SIZE: f64 = 600.0;
const CENTER: f64 = 300.0;
const RAY_LEN: f64 = 240.0;

fn unit(p: f64, q: f64) -> (f64, f64) {
    let n = (p * p + q * q).sqrt();
    (p / n, q / n)
}

/// Canvas coordinates for a lattice direction; SVG y grows downward.
fn at(p: f64, q: f64, radius: f64) -> (f64, f64) {
    let (ux, uy) = unit(p, q);
    (CENTER + radius * ux, CENTER - radius * uy)
}

fn render_svg(space: Space) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(
        out,
        r#"  <rect width="{SIZE}" height="{SIZE}" fill="white"/>"#
    );
    let w = walls();
    for wall in &w {
        let p = wall.ray.p.to_string().parse::<f64>().unwrap();
        let q = wall.ray.q.to_string().parse::<f64>().unwrap();
        let (x, y) = at(p, q, RAY_LEN);
        let _ = writeln!(
            out,
            r#"  <line class="ray" x1="{CENTER}" y1="{CENTER}" x2="{x:.1}" y2="{y:.1}" stroke="black" stroke-width="2"/>"#
        );
        let (lx, ly) = at(p, q, RAY_LEN + 24.0);
        let label = match wall.name {
            "Delta" => "Δ",
            "Ddeg" => "D_deg",
            other => other,
        };
        let _ = writeln!(
            out,
            r#"  <text class="ray-label" x="{lx:.1}" y="{ly:.1}" text-anchor="middle" font-size="18">{label}</text>"#
        );
    }
    for (i, ch) in chambers().iter().enumerate() {
        let upper = &w[i].ray;
        let lower = &w[i + 1].ray;
        let up = (
            upper.p.to_string().parse::<f64>().unwrap(),
            upper.q.to_string().parse::<f64>().unwrap(),
        );
        let lo = (
            lower.p.to_string().parse::<f64>().unwrap(),
            lower.q.to_string().parse::<f64>().unwrap(),
        );
        let (u1, u2) = unit(up.0, up.1);
        let (l1, l2) = unit(lo.0, lo.1);
        let (bx, by) = (u1 + l1, u2 + l2);
        let (x, y) = at(bx, by, 150.0);
        let bl = base_locus_at(&ch.sample, space);
        let _ = writeln!(
            out,
            r#"  <text class="chamber-label" x="{x:.1}" y="{y:.1}" text-anchor="middle" font-size="16">B = {}</text>"#,
            bl.short_label()
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_lists_the_walls_in_order() {
        let doc: serde_json::Value = serde_json::from_str(&render(Space::Kontsevich, DiagramFormat::Json)).unwrap();
        let names: Vec<&str> = doc["walls"]
            .as_array()
            .unwrap()
            .iter()
            .map(|w| w["name"].as_str().unwrap())
            .collect();
        assert_eq!(names, vec!["Delta", "T", "H", "F", "Ddeg"]);
        assert_eq!(doc["chambers"].as_array().unwrap().len(), 4);
    }

    #[test]
    fn svg_has_five_rays_and_four_chambers() {
        let svg = render(Space::Kontsevich, DiagramFormat::Svg);
        assert_eq!(svg.matches(r#"class="ray""#).count(), 5);
        assert_eq!(svg.matches(r#"class="chamber-label""#).count(), 4);
        assert!(svg.contains("width=\"600\""));
    }

    #[test]
    fn text_diagram_marks_the_nonreduced_chamber_on_the_hilbert_side() {
        let text = render(Space::Hilbert, DiagramFormat::Text);
        assert!(text.contains("chamber (T, H):  B = N"));
        let text_m = render(Space::Kontsevich, DiagramFormat::Text);
        assert!(text_m.contains("chamber (T, H):  B = ∅"));
        // Deterministic output.
        assert_eq!(text, render(Space::Hilbert, DiagramFormat::Text));
    }

    #[test]
    fn rejects_unknown_format_names() {
        assert!("png".parse::<DiagramFormat>().is_err());
        assert!("svg".parse::<DiagramFormat>().is_ok());
    }
}
