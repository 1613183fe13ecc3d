//! Hand-emitted deterministic SVG: polylines and polygons in a viewBox
//! computed from the data bounds plus a 5% margin. No timestamps, fixed
//! styling, fixed number formatting, so identical inputs give identical
//! bytes.

use std::fmt::Write;

use triorbit::Complex64;

const WIDTH: f64 = 1000.0;

pub struct SvgCanvas {
    min_x: f64,
    min_y: f64,
    scale: f64,
    height: f64,
    body: String,
}

impl SvgCanvas {
    /// Fit a canvas around the given points with a 5% margin.
    pub fn fit(points: impl IntoIterator<Item = Complex64>) -> SvgCanvas {
        let mut min_x = f64::INFINITY;
        let mut max_x = f64::NEG_INFINITY;
        let mut min_y = f64::INFINITY;
        let mut max_y = f64::NEG_INFINITY;
        for p in points {
            min_x = min_x.min(p.re);
            max_x = max_x.max(p.re);
            min_y = min_y.min(p.im);
            max_y = max_y.max(p.im);
        }
        if !min_x.is_finite() {
            (min_x, max_x, min_y, max_y) = (0.0, 1.0, 0.0, 1.0);
        }
        let span_x = (max_x - min_x).max(1e-9);
        let span_y = (max_y - min_y).max(1e-9);
        let margin = 0.05 * span_x.max(span_y);
        min_x -= margin;
        max_x += margin;
        min_y -= margin;
        max_y += margin;
        let scale = WIDTH / (max_x - min_x);
        let height = (max_y - min_y) * scale;
        SvgCanvas {
            min_x,
            min_y,
            scale,
            height,
            body: String::new(),
        }
    }

    fn map(&self, p: Complex64) -> (f64, f64) {
        // SVG y axis points down.
        (
            (p.re - self.min_x) * self.scale,
            self.height - (p.im - self.min_y) * self.scale,
        )
    }

    fn points_attr(&self, points: &[Complex64]) -> String {
        let mut out = String::new();
        for (idx, p) in points.iter().enumerate() {
            let (x, y) = self.map(*p);
            if idx > 0 {
                out.push(' ');
            }
            write!(out, "{x:.3},{y:.3}").unwrap();
        }
        out
    }

    pub fn polyline(&mut self, points: &[Complex64], stroke: &str, width: f64) {
        let attr = self.points_attr(points);
        writeln!(
            self.body,
            "<polyline points=\"{attr}\" fill=\"none\" stroke=\"{stroke}\" stroke-width=\"{width:.2}\"/>"
        )
        .unwrap();
    }

    pub fn polygon(&mut self, points: &[Complex64], stroke: &str, width: f64) {
        let attr = self.points_attr(points);
        writeln!(
            self.body,
            "<polygon points=\"{attr}\" fill=\"none\" stroke=\"{stroke}\" stroke-width=\"{width:.2}\"/>"
        )
        .unwrap();
    }

    pub fn circle(&mut self, center: Complex64, radius: f64, fill: &str) {
        let (x, y) = self.map(center);
        writeln!(
            self.body,
            "<circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"{radius:.2}\" fill=\"{fill}\"/>"
        )
        .unwrap();
    }

    pub fn finish(self) -> String {
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {WIDTH:.0} {:.3}\">\n\
             <rect x=\"0\" y=\"0\" width=\"{WIDTH:.0}\" height=\"{:.3}\" fill=\"#ffffff\"/>\n\
             {}</svg>\n",
            self.height, self.height, self.body
        )
    }
}

/// Stroke palette: one color per vertex trajectory, gray for snapshots,
/// darker grays for static triple outlines.
pub const VERTEX_COLORS: [&str; 3] = ["#1f77b4", "#d62728", "#2ca02c"];
pub const SNAPSHOT_COLOR: &str = "#bbbbbb";
pub const TRIPLE_COLORS: [&str; 3] = ["#333333", "#1f77b4", "#d62728"];
