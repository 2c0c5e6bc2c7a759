use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::Args;
use dispersion::solvers::DEFAULT_BUDGET;
use dispersion::verify::lemma_radius;
use dispersion::{Instance64, Method, Solution64};

use super::run_solver;
use crate::error::CliResult;
use crate::output::{algorithm_parser, load_instance, num};
use crate::Status;

#[derive(Debug, Args)]
pub struct PlotArgs {
    /// Instance file.
    file: PathBuf,

    /// Solver whose solution is highlighted.
    #[arg(long, short, value_parser = algorithm_parser(), default_value = "framework")]
    algorithm: Method,

    /// Highlight these point indices instead of running a solver.
    #[arg(long, value_delimiter = ',')]
    indices: Option<Vec<usize>>,

    /// Draw a disk of radius cost/λ around each selected point
    /// (λ = 2√3 for gamma 2, 2 for gamma 1).
    #[arg(long)]
    disks: bool,

    /// Output file; stdout when omitted.
    #[arg(long, short)]
    out: Option<PathBuf>,

    /// Width and height of the image in pixels.
    #[arg(long, default_value_t = 600.0)]
    size: f64,
}

/// Affine map from instance coordinates to SVG pixels (y axis flipped).
struct Frame {
    scale: f64,
    min_x: f64,
    max_y: f64,
    margin: f64,
}

impl Frame {
    fn fit(instance: &Instance64, pad: f64, size: f64) -> Self {
        let pts = instance.points();
        let (mut min_x, mut max_x) = (f64::INFINITY, f64::NEG_INFINITY);
        let (mut min_y, mut max_y) = (f64::INFINITY, f64::NEG_INFINITY);
        for p in pts {
            min_x = min_x.min(p.x() - pad);
            max_x = max_x.max(p.x() + pad);
            min_y = min_y.min(p.y() - pad);
            max_y = max_y.max(p.y() + pad);
        }
        let margin = 20.0;
        let span = (max_x - min_x).max(max_y - min_y);
        let scale = if span > 0.0 {
            (size - 2.0 * margin) / span
        } else {
            1.0
        };
        // Center the shorter axis.
        let extra_x = (span - (max_x - min_x)) / 2.0;
        let extra_y = (span - (max_y - min_y)) / 2.0;
        Self {
            scale,
            min_x: min_x - extra_x,
            max_y: max_y + extra_y,
            margin,
        }
    }

    fn x(&self, x: f64) -> f64 {
        self.margin + (x - self.min_x) * self.scale
    }

    fn y(&self, y: f64) -> f64 {
        self.margin + (self.max_y - y) * self.scale
    }
}

fn render(instance: &Instance64, solution: &Solution64, disks: bool, size: f64) -> String {
    let radius = if disks {
        lemma_radius(instance, solution)
    } else {
        0.0
    };
    let frame = Frame::fit(instance, radius, size);
    let px = |v: f64| format!("{v:.2}");
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{s}" height="{s}" viewBox="0 0 {s} {s}">"#,
        s = px(size)
    );
    let _ = writeln!(
        svg,
        "<title>n={} k={} gamma={} mode={} {} cost={}</title>",
        instance.n(),
        instance.k(),
        instance.gamma(),
        instance.mode(),
        solution.method(),
        num(solution.cost())
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    if disks {
        let _ = writeln!(
            svg,
            r##"<g id="disks" fill="#4682b4" fill-opacity="0.12" stroke="#4682b4" stroke-width="1">"##
        );
        for &i in solution.indices() {
            let p = instance.points()[i];
            let _ = writeln!(
                svg,
                r#"<circle cx="{}" cy="{}" r="{}"/>"#,
                px(frame.x(p.x())),
                px(frame.y(p.y())),
                px(radius * frame.scale)
            );
        }
        let _ = writeln!(svg, "</g>");
    }
    let _ = writeln!(svg, r##"<g id="points" fill="#888888">"##);
    for (i, p) in instance.points().iter().enumerate() {
        if solution.indices().binary_search(&i).is_err() {
            let _ = writeln!(
                svg,
                r#"<circle cx="{}" cy="{}" r="3"><title>{i}</title></circle>"#,
                px(frame.x(p.x())),
                px(frame.y(p.y()))
            );
        }
    }
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(
        svg,
        r##"<g id="selected" fill="#dc143c" stroke="black" stroke-width="1">"##
    );
    for &i in solution.indices() {
        let p = instance.points()[i];
        let _ = writeln!(
            svg,
            r#"<circle cx="{}" cy="{}" r="5"><title>{i}</title></circle>"#,
            px(frame.x(p.x())),
            px(frame.y(p.y()))
        );
    }
    let _ = writeln!(svg, "</g>");
    svg.push_str("</svg>\n");
    svg
}

pub fn run(args: &PlotArgs, out: &mut dyn Write) -> CliResult<Status> {
    let instance = load_instance(&args.file)?;
    let solution = match &args.indices {
        Some(indices) => Solution64::new(&instance, indices.clone(), args.algorithm, None)?,
        None => run_solver(&instance, args.algorithm, DEFAULT_BUDGET)?,
    };
    let svg = render(&instance, &solution, args.disks, args.size);
    match &args.out {
        Some(path) => fs::write(path, svg)?,
        None => out.write_all(svg.as_bytes())?,
    }
    Ok(Status::Ok)
}
