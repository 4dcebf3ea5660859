//! Phase diagrams: a phase-valued vector drawn as labelled points on a circle.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::num::Dir;
use crate::tract::Tract;
use crate::vector::FVector;

/// One point on a circle with every label whose entry has that direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    pub dir: Dir,
    pub labels: Vec<String>,
}

/// The diagram of one vector. Zero entries are not drawn.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circle {
    /// Counterclockwise from angle 0.
    pub points: Vec<Point>,
}

impl Circle {
    pub fn of(x: &FVector) -> Result<Self> {
        if !matches!(x.tract(), Tract::Phase | Tract::TropPhase) {
            return Err(Error::UnsupportedTract {
                tract: x.tract(),
                reason: "phase diagrams need phase or tp".into(),
            });
        }
        let mut points: Vec<Point> = Vec::new();
        for (i, s) in x.entries().iter().enumerate() {
            let Some(d) = s.direction() else { continue };
            let label = x.ground().label(i).to_string();
            match points.iter_mut().find(|p| &p.dir == d) {
                Some(p) => p.labels.push(label),
                None => points.push(Point {
                    dir: d.clone(),
                    labels: vec![label],
                }),
            }
        }
        points.sort_by(|a, b| a.dir.angle_cmp(&b.dir));
        Ok(Circle { points })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhaseDiagram {
    pub circles: Vec<Circle>,
}

const R: f64 = 40.0;
const STEP: f64 = 120.0;

impl PhaseDiagram {
    pub fn from_vectors(xs: &[FVector]) -> Result<Self> {
        Ok(PhaseDiagram {
            circles: xs.iter().map(Circle::of).collect::<Result<_>>()?,
        })
    }

    /// SVG 1.1, one circle per vector left to right. Coordinates are the
    /// only floating-point values anywhere in the crate.
    pub fn to_svg(&self) -> String {
        let width = STEP * self.circles.len().max(1) as f64;
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{STEP}" viewBox="0 0 {width} {STEP}">"#
        );
        for (k, c) in self.circles.iter().enumerate() {
            let (cx, cy) = (STEP * (k as f64 + 0.5), STEP / 2.0);
            let _ = writeln!(s, r#"  <g class="circle" data-index="{k}">"#);
            let _ = writeln!(
                s,
                r#"    <circle cx="{cx}" cy="{cy}" r="{R}" fill="none" stroke="black"/>"#
            );
            for p in &c.points {
                let a = p.dir.angle_f64();
                // SVG y grows downward
                let (px, py) = (cx + R * a.cos(), cy - R * a.sin());
                let (lx, ly) = (cx + 1.35 * R * a.cos(), cy - 1.35 * R * a.sin());
                let _ = writeln!(
                    s,
                    r#"    <circle cx="{px:.3}" cy="{py:.3}" r="3" data-dir="{},{}"/>"#,
                    p.dir.x(),
                    p.dir.y()
                );
                let _ = writeln!(
                    s,
                    r#"    <text x="{lx:.3}" y="{ly:.3}" font-size="11" text-anchor="middle" dominant-baseline="middle">{}</text>"#,
                    xml_escape(&p.labels.join(","))
                );
            }
            let _ = writeln!(s, "  </g>");
        }
        s.push_str("</svg>\n");
        s
    }

    pub fn write_svg(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_svg()).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
