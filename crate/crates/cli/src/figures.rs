//! Reproductions of the published figures: the generic cevian/median sample
//! (fig1-fig3), the Routh coincidences (fig4), the Steiner orbit (fig5),
//! area-preserving orbit families (fig6-fig8), the median orbit (fig9) and
//! the two figure eight orbits (fig10, fig11). Each figure renders to a CSV
//! table and a deterministic SVG.

use std::fmt::Write;

use triorbit::median::{median_apply, MedianLabel};
use triorbit::operator::{CircOp, EtaPair, PQPair};
use triorbit::orbit::{
    cevian_figure8_family, median_figure8_family, median_orbit_family, sample, steiner_family,
    OrbitFamily, OrbitSample, TrigPoly,
};
use triorbit::parse;
use triorbit::scalar::{rat, Mod3, Scalar};
use triorbit::triangle::TriangleTriple;
use triorbit::{ApproxTriple, Complex64, Cyc12, Error};

use crate::svg::{SvgCanvas, SNAPSHOT_COLOR, TRIPLE_COLORS, VERTEX_COLORS};

pub struct FigureOutput {
    pub csv: String,
    pub svg: String,
}

pub const FIGURE_NAMES: [&str; 11] = [
    "fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9", "fig10", "fig11",
];

/// Render a named figure. `samples` controls orbit resolution; fig5 always
/// uses its 17 discrete steps and the static figures ignore it.
pub fn render(name: &str, samples: usize) -> Result<FigureOutput, Error> {
    match name {
        "fig1" => median_sample_figure("00/01"),
        "fig2" => median_sample_figure("01/01"),
        "fig3" => median_sample_figure("02/01"),
        "fig4" => routh_figure(),
        "fig5" => steiner_steps_figure(),
        "fig6" => twin_orbit_figure(&[(1, 2), (1, -4)], samples),
        "fig7" => twin_orbit_figure(&[(8, 1), (-7, 1)], samples),
        "fig8" => twin_orbit_figure(&[(7, 2), (-5, 2)], samples),
        "fig9" => median_orbit_figure(samples),
        "fig10" => orbit_figure(cevian_figure8_family(), None, samples),
        "fig11" => orbit_figure(median_figure8_family(), Some(fig11_base()), samples),
        other => Err(Error::UnknownFigure(other.to_string())),
    }
}

fn fig_base_exact() -> TriangleTriple<Cyc12> {
    parse::parse_exact_triple("(0, 1, (7+8i)/10)").expect("literal parses")
}

fn fig_base_orbit() -> ApproxTriple {
    TriangleTriple::new(
        Complex64::new(0.0, 0.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(0.7, 0.5),
    )
}

fn fig11_base() -> ApproxTriple {
    TriangleTriple::new(
        Complex64::new(0.0, 0.0),
        Complex64::new(4.0, 0.0),
        Complex64::new(3.0, 1.0),
    )
}

fn csv_header() -> String {
    "item,t,vertex,re,im\n".to_string()
}

fn push_triple_rows(csv: &mut String, item: &str, t: f64, triple: &ApproxTriple) {
    for (idx, v) in triple.vertices().iter().enumerate() {
        writeln!(csv, "{item},{t},{idx},{},{}", v.re, v.im).unwrap();
    }
}

fn closed(points: &ApproxTriple) -> [Complex64; 3] {
    *points.vertices()
}

/// fig1-fig3: the base triple, its cevian image under S_{4/5,(2+4i)/3} and
/// one of the three essential median triangles, computed exactly.
fn median_sample_figure(label: &str) -> Result<FigureOutput, Error> {
    let d = fig_base_exact();
    let pq = PQPair::new(
        Cyc12::from_rational(&rat(4, 5)),
        Cyc12::from_re_im(rat(2, 3), rat(4, 3)),
    )?;
    let cevian = CircOp::from_pq(&pq).apply(&d);
    let median = median_apply(MedianLabel::parse(label)?, &EtaPair::from_pq(&pq), &d);

    let items = [
        ("delta", d.to_approx()),
        ("cevian", cevian.to_approx()),
        ("median", median.to_approx()),
    ];
    let mut csv = csv_header();
    for (name, triple) in &items {
        push_triple_rows(&mut csv, name, 0.0, triple);
    }
    let mut canvas = SvgCanvas::fit(
        items
            .iter()
            .flat_map(|(_, t)| t.vertices().iter().copied().collect::<Vec<_>>()),
    );
    for (idx, (_, triple)) in items.iter().enumerate() {
        canvas.polygon(&closed(triple), TRIPLE_COLORS[idx], 2.0);
    }
    for v in items[0].1.vertices() {
        canvas.circle(*v, 4.0, TRIPLE_COLORS[0]);
    }
    Ok(FigureOutput {
        csv,
        svg: canvas.finish(),
    })
}

/// fig4: the six nontrivial fixed-point coincidences M^{label}_{p,q} = S_{p,q}
/// on the base (0, 1, 0.7+0.5i).
fn routh_figure() -> Result<FigureOutput, Error> {
    let panels: [(&str, (i64, i64), (i64, i64)); 6] = [
        ("00/01", (4, 5), (2, 3)),
        ("00/02", (2, 3), (1, 3)),
        ("01/10", (1, 5), (1, 3)),
        ("02/21", (2, 3), (4, 5)),
        ("02/20", (1, 3), (2, 3)),
        ("01/12", (1, 3), (1, 5)),
    ];
    let d = parse::parse_exact_triple("(0, 1, 0.7+0.5i)")?;
    let mut csv = csv_header();
    let mut shapes = Vec::new();
    for (label, p, q) in panels {
        let pq = PQPair::new(
            Cyc12::from_rational(&rat(p.0, p.1)),
            Cyc12::from_rational(&rat(q.0, q.1)),
        )?;
        let image = median_apply(MedianLabel::parse(label)?, &EtaPair::from_pq(&pq), &d);
        debug_assert_eq!(image, CircOp::from_pq(&pq).apply(&d));
        let tag = label.replace('/', "_");
        push_triple_rows(&mut csv, &format!("routh_{tag}_delta"), 0.0, &d.to_approx());
        push_triple_rows(
            &mut csv,
            &format!("routh_{tag}_image"),
            0.0,
            &image.to_approx(),
        );
        shapes.push(image.to_approx());
    }
    let base = d.to_approx();
    let mut canvas = SvgCanvas::fit(
        shapes
            .iter()
            .chain(std::iter::once(&base))
            .flat_map(|t| t.vertices().iter().copied().collect::<Vec<_>>()),
    );
    canvas.polygon(&closed(&base), TRIPLE_COLORS[0], 2.5);
    for (idx, image) in shapes.iter().enumerate() {
        canvas.polygon(
            &closed(image),
            VERTEX_COLORS[idx % VERTEX_COLORS.len()],
            1.5,
        );
    }
    Ok(FigureOutput {
        csv,
        svg: canvas.finish(),
    })
}

/// fig5: the 17 discrete Steiner steps `S[e^{-2 pi i k/17}, e^{2 pi i k/17}]`.
fn steiner_steps_figure() -> Result<FigureOutput, Error> {
    let family = steiner_family(fig_base_orbit());
    let steps = sample(&family, 17);
    let mut csv = csv_header();
    for s in &steps {
        push_triple_rows(&mut csv, "step", s.t, &s.triple);
    }
    let mut canvas = SvgCanvas::fit(
        steps
            .iter()
            .flat_map(|s| s.triple.vertices().iter().copied().collect::<Vec<_>>()),
    );
    for (k, s) in steps.iter().enumerate() {
        let (color, width) = if k == 0 {
            (TRIPLE_COLORS[0], 2.5)
        } else {
            (SNAPSHOT_COLOR, 1.2)
        };
        canvas.polygon(&closed(&s.triple), color, width);
    }
    Ok(FigureOutput {
        csv,
        svg: canvas.finish(),
    })
}

fn orbit_csv_rows(csv: &mut String, item: &str, samples: &[OrbitSample]) {
    for s in samples {
        push_triple_rows(csv, item, s.t, &s.triple);
    }
}

fn draw_orbit(canvas: &mut SvgCanvas, samples: &[OrbitSample]) {
    let n = samples.len();
    for vertex in 0..3 {
        let mut path: Vec<Complex64> = samples
            .iter()
            .map(|s| *s.triple.vertex(vertex))
            .collect();
        path.push(*samples[0].triple.vertex(vertex));
        canvas.polyline(&path, VERTEX_COLORS[vertex], 1.8);
    }
    // Triangle snapshots every n/12 samples.
    let stride = (n / 12).max(1);
    for s in samples.iter().step_by(stride) {
        canvas.polygon(&closed(&s.triple), SNAPSHOT_COLOR, 0.8);
    }
}

fn all_orbit_points<'a>(
    groups: impl IntoIterator<Item = &'a [OrbitSample]>,
) -> Vec<Complex64> {
    groups
        .into_iter()
        .flatten()
        .flat_map(|s| s.triple.vertices().iter().copied().collect::<Vec<_>>())
        .collect()
}

/// A pair of single-frequency area-preserving families on the shared base.
fn twin_orbit_figure(freqs: &[(i64, i64); 2], samples: usize) -> Result<FigureOutput, Error> {
    let mut csv = csv_header();
    let mut sampled = Vec::new();
    for &(m, n) in freqs {
        let family = OrbitFamily::cevian(
            TrigPoly::single(m),
            TrigPoly::single(n),
            fig_base_orbit(),
        );
        let data = sample(&family, samples.max(3));
        orbit_csv_rows(&mut csv, &format!("orbit_m{m}_n{n}"), &data);
        sampled.push(data);
    }
    let mut canvas = SvgCanvas::fit(all_orbit_points(sampled.iter().map(|s| s.as_slice())));
    for data in &sampled {
        draw_orbit(&mut canvas, data);
    }
    Ok(FigureOutput {
        csv,
        svg: canvas.finish(),
    })
}

/// fig9: the median orbit M^{00/01}[e^{-10 pi i t} + 1, e^{4 pi i t} + 1]
/// together with its base triangle.
fn median_orbit_figure(samples: usize) -> Result<FigureOutput, Error> {
    let family = median_orbit_family(Mod3::ZERO, -5, 2, fig_base_orbit());
    orbit_figure(family, Some(fig_base_orbit()), samples)
}

fn orbit_figure(
    family: OrbitFamily,
    base_overlay: Option<ApproxTriple>,
    samples: usize,
) -> Result<FigureOutput, Error> {
    let data = sample(&family, samples.max(3));
    let mut csv = csv_header();
    if let Some(base) = &base_overlay {
        push_triple_rows(&mut csv, "base", 0.0, base);
    }
    orbit_csv_rows(&mut csv, "orbit", &data);
    let mut points = all_orbit_points([data.as_slice()]);
    if let Some(base) = &base_overlay {
        points.extend(base.vertices().iter().copied());
    }
    let mut canvas = SvgCanvas::fit(points);
    if let Some(base) = &base_overlay {
        canvas.polygon(&closed(base), TRIPLE_COLORS[0], 2.0);
    }
    draw_orbit(&mut canvas, &data);
    Ok(FigureOutput {
        csv,
        svg: canvas.finish(),
    })
}

/// Orbit data in the interchange CSV schema `t,vertex,re,im`.
pub fn orbit_csv(samples: &[OrbitSample]) -> String {
    let mut csv = String::from("t,vertex,re,im\n");
    for s in samples {
        for (idx, v) in s.triple.vertices().iter().enumerate() {
            writeln!(csv, "{},{idx},{},{}", s.t, v.re, v.im).unwrap();
        }
    }
    csv
}

/// Orbit rendering shared with the `orbit` subcommand.
pub fn orbit_svg(samples: &[OrbitSample]) -> String {
    let mut canvas = SvgCanvas::fit(all_orbit_points([samples]));
    draw_orbit(&mut canvas, samples);
    canvas.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_figures_render() {
        for name in FIGURE_NAMES {
            let out = render(name, 60).unwrap();
            assert!(out.csv.starts_with("item,t,vertex,re,im\n"), "{name}");
            assert!(out.svg.starts_with("<svg"), "{name}");
            assert!(out.svg.ends_with("</svg>\n"), "{name}");
        }
        assert!(matches!(
            render("fig12", 60),
            Err(Error::UnknownFigure(_))
        ));
    }

    #[test]
    fn figure_output_is_deterministic() {
        for name in ["fig1", "fig5", "fig10"] {
            let a = render(name, 48).unwrap();
            let b = render(name, 48).unwrap();
            assert_eq!(a.csv, b.csv);
            assert_eq!(a.svg, b.svg);
        }
    }

    #[test]
    fn fig5_always_uses_seventeen_steps() {
        let out = render("fig5", 300).unwrap();
        let rows = out.csv.lines().count() - 1;
        assert_eq!(rows, 17 * 3);
    }
}
