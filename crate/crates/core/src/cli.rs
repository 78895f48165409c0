//! The `tropical` command line.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::geometry::polygon::{LatticePolygon, Pt};
use crate::geometry::triangulation::TriangulationSpace;
use crate::geometry::{is_regular, newton_polytope, regular_subdivision, Subdivision};
use crate::hypersurface::{build_curve, build_surface, TropicalComplex};
use crate::intersection::{
    bezout_sum, detect_tangencies, space_curve, stable_intersection_along, Component,
    IntersectionPoint, SpaceCurve,
};
use crate::polynomial::{factor_univariate, roots_univariate, Exponent, TropicalPolynomial};
use crate::rational::{fmt_q, parse_q, Q};
use crate::render::{
    render_curve, render_intersection, render_metric_graph, render_subdivision, RenderSpec,
};
use crate::semiring::TropicalNumber;
use crate::skeleton::{
    canonical_certificate, skeletonize, skeletonize_space_curve, troplanar_census, CensusConfig,
    MetricGraph,
};
use crate::tropicalize::{tropicalize_poly, ValuedPolynomial};

#[derive(Parser, Debug)]
#[command(
    name = "tropical",
    version,
    about = "Exact tropical geometry over the rationals"
)]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Svg,
    Both,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Output kind. Text commands print text unless `json` is requested;
    /// the others default to `both`.
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    /// Output directory. Without one, results go to standard output.
    #[arg(long, env = "TROPICAL_OUT_DIR", global = true)]
    pub out: Option<PathBuf>,
    /// Selects the perturbation direction for `intersect`.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Worker threads for `census`.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Wall-clock budget in seconds for `census` and `triangulations`.
    #[arg(long, global = true)]
    pub budget: Option<f64>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate a tropical polynomial at a point.
    Eval {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        /// Comma-separated rational coordinates.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Roots of a univariate polynomial with multiplicities.
    Roots {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Factor a univariate polynomial into linear factors.
    Factor {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Plane curve with its dual subdivision.
    Curve {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Surface in three-space.
    Surface {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Regular subdivision of the Newton polytope induced by the coefficients.
    Subdivide {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Stable intersection of two plane curves.
    Intersect {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Metric skeleton of a plane curve, or of a graph stored as JSON.
    Skeleton {
        #[arg(required_unless_present = "graph", allow_hyphen_values = true)]
        poly: Option<String>,
        #[arg(long, conflicts_with = "poly")]
        graph: Option<PathBuf>,
    },
    /// Skeletons of smooth tropical plane curves of a given genus.
    Census {
        #[arg(long)]
        genus: u32,
        /// Highest genus accepted.
        #[arg(long, default_value_t = crate::skeleton::DEFAULT_CENSUS_MAX_GENUS)]
        max_genus: u32,
    },
    /// Unimodular triangulations of a lattice polygon.
    Triangulations {
        /// Vertices as `x,y` pairs separated by spaces.
        #[arg(allow_hyphen_values = true)]
        polygon: String,
        /// Count labelled triangulations instead of symmetry classes.
        #[arg(long)]
        labelled: bool,
        /// Also test every triangulation for regularity.
        #[arg(long)]
        regularity: bool,
    },
    /// Curve cut out by two surfaces in three-space.
    Spacecurve {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Tropicalize a polynomial with Puiseux series coefficients read from a file.
    Tropicalize {
        #[arg(required_unless_present = "expr")]
        file: Option<PathBuf>,
        #[arg(long, conflicts_with = "file", allow_hyphen_values = true)]
        expr: Option<String>,
    },
}

/// Process exit status for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::DimensionMismatch { .. } => 2,
        Error::BudgetExceeded(_) => 3,
        _ => 1,
    }
}

/// Parses arguments, runs, and returns the exit status.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = std::io::stdout();
    match run(&cli, &mut stdout.lock()) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

struct Sink<'a> {
    common: &'a Common,
    stdout: &'a mut dyn Write,
}

impl Sink<'_> {
    fn format(&self) -> Format {
        self.common.format.unwrap_or(Format::Both)
    }

    fn text(&mut self, s: &str) -> Result<()> {
        writeln!(self.stdout, "{s}")?;
        Ok(())
    }

    fn file(&mut self, name: &str, body: &str) -> Result<()> {
        match &self.common.out {
            Some(dir) => {
                fs::create_dir_all(dir)?;
                fs::write(dir.join(name), body)?;
                Ok(())
            }
            None => {
                self.stdout.write_all(body.as_bytes())?;
                Ok(())
            }
        }
    }

    /// JSON always, except when only SVG was asked for.
    fn json<T: Serialize>(&mut self, stem: &str, v: &T) -> Result<()> {
        if self.format() == Format::Svg {
            return Ok(());
        }
        let mut s = serde_json::to_string_pretty(v)?;
        s.push('\n');
        self.file(&format!("{stem}.json"), &s)
    }

    /// SVG when asked for; on standard output only if it was asked for alone.
    fn svg(&mut self, stem: &str, body: impl FnOnce() -> String) -> Result<()> {
        match (self.format(), self.common.out.is_some()) {
            (Format::Json, _) | (Format::Both, false) => Ok(()),
            _ => self.file(&format!("{stem}.svg"), &body()),
        }
    }

    fn budget(&self) -> Budget {
        self.common
            .budget
            .map_or_else(Budget::unlimited, Budget::seconds)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalOutput {
    pub value: TropicalNumber,
    pub argmax: Vec<Exponent>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectOutput {
    pub direction: [i64; 2],
    pub points: Vec<IntersectionPoint>,
    pub total: u64,
    /// Product of the degrees, when both inputs have full-degree Newton polygons.
    pub bezout: Option<u64>,
    pub components: Vec<Component>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkeletonOutput {
    pub graph: MetricGraph,
    pub genus: i64,
    pub sprawling: bool,
    /// Absent for graphs too large to canonize.
    pub certificate: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangulationsOutput {
    pub polygon: LatticePolygon,
    pub up_to_symmetry: bool,
    pub count: usize,
    pub regular: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceCurveOutput {
    pub curve: SpaceCurve,
    pub skeleton: SkeletonOutput,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TropicalizeOutput {
    pub input: String,
    pub tropical: TropicalPolynomial,
}

fn parse_point(s: &str) -> Result<Vec<Q>> {
    s.split(',').map(|x| parse_q(x.trim())).collect()
}

fn parse_polygon(s: &str) -> Result<LatticePolygon> {
    let mut pts: Vec<Pt> = Vec::new();
    for (i, tok) in s.split_whitespace().enumerate() {
        let xy: Vec<&str> = tok.split(',').collect();
        let coord = |t: &str| {
            t.trim().parse::<i64>().map_err(|_| Error::Parse {
                pos: i,
                msg: format!("bad lattice point {tok:?}"),
            })
        };
        if xy.len() != 2 {
            return Err(Error::Parse {
                pos: i,
                msg: format!("expected x,y but found {tok:?}"),
            });
        }
        pts.push([coord(xy[0])?, coord(xy[1])?]);
    }
    LatticePolygon::hull(&pts)
}

fn skeleton_output(graph: MetricGraph) -> Result<SkeletonOutput> {
    Ok(SkeletonOutput {
        genus: graph.genus()?,
        sprawling: graph.is_sprawling(),
        certificate: canonical_certificate(&graph, true).ok(),
        graph,
    })
}

/// `(1, K)` for the `seed`-th `K >= 1` not parallel to any edge or ray.
fn seeded_direction(c: &TropicalComplex, d: &TropicalComplex, seed: u64) -> [i64; 2] {
    let dirs: Vec<&[i64]> = [c, d]
        .iter()
        .flat_map(|x| {
            x.edges
                .iter()
                .map(|e| &e.direction[..])
                .chain(x.rays.iter().map(|r| &r.direction[..]))
        })
        .collect();
    let mut k = 0;
    let mut left = seed + 1;
    while left > 0 {
        k += 1;
        if dirs.iter().all(|u| u[0] * k != u[1]) {
            left -= 1;
        }
    }
    [1, k]
}

fn curve_summary(c: &TropicalComplex) -> String {
    let n = c.curve_counts();
    format!(
        "vertices: {}, bounded edges: {}, rays: {}",
        n.vertices, n.bounded_edges, n.rays
    )
}

/// Runs one command, writing text to `stdout` and files where requested.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<()> {
    let mut sink = Sink {
        common: &cli.common,
        stdout,
    };
    let text_json = cli.common.format == Some(Format::Json);
    match &cli.command {
        Command::Eval { poly, at } => {
            let point = parse_point(at)?;
            let p = TropicalPolynomial::parse_in(poly, point.len())?;
            let (value, argmax) = p.evaluate(&point)?;
            if text_json {
                sink.text(&serde_json::to_string(&EvalOutput { value, argmax })?)
            } else {
                let s = if argmax.len() == 1 { "" } else { "s" };
                sink.text(&format!("{value} (argmax: {} term{s})", argmax.len()))
            }
        }
        Command::Roots { poly } => {
            let roots = roots_univariate(&TropicalPolynomial::parse_in(poly, 1)?)?;
            if text_json {
                sink.text(&serde_json::to_string(&roots)?)
            } else {
                let parts: Vec<String> = roots.iter().map(|r| r.to_string()).collect();
                sink.text(&parts.join(" "))
            }
        }
        Command::Factor { poly } => {
            let f = factor_univariate(&TropicalPolynomial::parse_in(poly, 1)?)?;
            if text_json {
                sink.text(&serde_json::to_string(&f)?)
            } else {
                sink.text(&f.to_string())
            }
        }
        Command::Curve { poly } => {
            let c = build_curve(&TropicalPolynomial::parse_in(poly, 2)?)?;
            eprintln!("{}", curve_summary(&c));
            sink.json("curve", &c)?;
            sink.svg("curve", || render_curve(&c, &RenderSpec::default()))
        }
        Command::Surface { poly } => {
            let s = build_surface(&TropicalPolynomial::parse_in(poly, 3)?)?;
            let n = s.surface_counts();
            eprintln!(
                "vertices: {}, edges: {}, rays: {}, bounded 2-cells: {}, unbounded 2-cells: {}",
                n.vertices, n.edges, n.rays, n.bounded_2cells, n.unbounded_2cells
            );
            sink.json("surface", &s)
        }
        Command::Subdivide { poly } => {
            let sub: Subdivision =
                regular_subdivision(&newton_polytope(&TropicalPolynomial::parse(poly)?)?)?;
            eprintln!("cells: {}", sub.cells.len());
            sink.json("subdivision", &sub)?;
            if sub.dim() == 2 {
                sink.svg("subdivision", || render_subdivision(&sub))?;
            }
            Ok(())
        }
        Command::Intersect { f, g } => {
            let (f, g) = (
                TropicalPolynomial::parse_in(f, 2)?,
                TropicalPolynomial::parse_in(g, 2)?,
            );
            let (c, d) = (build_curve(&f)?, build_curve(&g)?);
            let direction = seeded_direction(&c, &d, cli.common.seed);
            let points = stable_intersection_along(&f, &g, direction)?;
            let out = IntersectOutput {
                direction,
                total: points.iter().map(|p| p.multiplicity).sum(),
                bezout: bezout_sum(&f, &g).ok(),
                components: detect_tangencies(&f, &g)?,
                points,
            };
            for p in &out.points {
                let loc: Vec<String> = p.location.iter().map(fmt_q).collect();
                eprintln!("({}) multiplicity {}", loc.join(","), p.multiplicity);
            }
            sink.json("intersection", &out)?;
            sink.svg("intersection", || {
                render_intersection(&c, &d, &out.points, &RenderSpec::default())
            })
        }
        Command::Skeleton { poly, graph } => {
            let g = match (poly, graph) {
                (Some(p), _) => skeletonize(&build_curve(&TropicalPolynomial::parse_in(p, 2)?)?),
                (None, Some(path)) => {
                    // Either a bare graph or the output of this command.
                    let mut v: serde_json::Value =
                        serde_json::from_str(&fs::read_to_string(path)?)?;
                    if let Some(g) = v.get_mut("graph") {
                        v = g.take();
                    }
                    let raw: MetricGraph = serde_json::from_value(v)?;
                    let edges: Vec<(usize, usize, Q)> = raw
                        .edges
                        .iter()
                        .map(|e| (e.a, e.b, e.length.clone()))
                        .collect();
                    MetricGraph::new(raw.n_vertices, &edges)?
                }
                (None, None) => unreachable!("clap requires one input"),
            };
            let out = skeleton_output(g)?;
            eprintln!(
                "genus: {}, vertices: {}, edges: {}",
                out.genus,
                out.graph.n_vertices,
                out.graph.edges.len()
            );
            sink.json("skeleton", &out)?;
            sink.svg("skeleton", || {
                render_metric_graph(&out.graph, &RenderSpec::default())
            })
        }
        Command::Census { genus, max_genus } => census(&mut sink, *genus, *max_genus),
        Command::Triangulations {
            polygon,
            labelled,
            regularity,
        } => {
            let p = parse_polygon(polygon)?;
            let space = TriangulationSpace::new(&p, !labelled);
            let budget = sink.budget();
            let ts = space.enumerate(&budget, |n| eprint!("\rtriangulations: {n}"))?;
            eprintln!();
            let regular = if *regularity {
                let mut k = 0;
                for (i, t) in ts.iter().enumerate() {
                    budget.check("regularity tests")?;
                    if is_regular(&space.to_subdivision(t))?.regular {
                        k += 1;
                    }
                    if i % 64 == 63 || i + 1 == ts.len() {
                        eprint!("\rregularity: {}/{}", i + 1, ts.len());
                    }
                }
                eprintln!();
                Some(k)
            } else {
                None
            };
            let out = TriangulationsOutput {
                polygon: p,
                up_to_symmetry: !labelled,
                count: ts.len(),
                regular,
            };
            match out.regular {
                Some(r) => sink.text(&format!("triangulations: {} (regular: {r})", out.count))?,
                None => sink.text(&format!("triangulations: {}", out.count))?,
            }
            if sink.common.out.is_some() {
                sink.json("triangulations", &out)?;
            }
            Ok(())
        }
        Command::Spacecurve { f, g } => {
            let (f, g) = (
                TropicalPolynomial::parse_in(f, 3)?,
                TropicalPolynomial::parse_in(g, 3)?,
            );
            let curve = space_curve(&f, &g)?;
            let skeleton = skeleton_output(skeletonize_space_curve(&curve))?;
            eprintln!(
                "vertices: {}, bounded edges: {}, rays: {}, genus: {}, smooth: {}",
                curve.vertices.len(),
                curve.edges.len(),
                curve.rays.len(),
                curve.genus,
                curve.smooth
            );
            sink.json("spacecurve", &SpaceCurveOutput { curve, skeleton })
        }
        Command::Tropicalize { file, expr } => {
            let src = match (file, expr) {
                (_, Some(e)) => e.clone(),
                (Some(path), None) => fs::read_to_string(path)?,
                (None, None) => unreachable!("clap requires one input"),
            };
            let f = ValuedPolynomial::parse(src.trim())?;
            let tropical = tropicalize_poly(&f)?;
            if text_json {
                sink.text(&serde_json::to_string(&TropicalizeOutput {
                    input: f.to_string(),
                    tropical,
                })?)
            } else {
                sink.text(&tropical.to_string())
            }
        }
    }
}

fn census(sink: &mut Sink<'_>, genus: u32, max_genus: u32) -> Result<()> {
    let config = CensusConfig {
        budget: sink.budget(),
        max_genus,
    };
    let record = match sink.common.workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::Domain(e.to_string()))?
            .install(|| troplanar_census(genus, &config))?,
        None => troplanar_census(genus, &config)?,
    };
    sink.text(&format!("genus {genus}"))?;
    sink.text(&format!(
        "{:<40} {:>6} {:>8} {:>8} {:>8}",
        "polygon", "hyp", "triang", "regular", "classes"
    ))?;
    for p in &record.polygons {
        let mark = if p.completed { "" } else { " (partial)" };
        sink.text(&format!(
            "{:<40} {:>6} {:>8} {:>8} {:>8}{mark}",
            p.polygon.to_string(),
            if p.hyperelliptic { "yes" } else { "no" },
            p.triangulations,
            p.regular,
            p.classes.len()
        ))?;
    }
    for (i, c) in record.classes.iter().enumerate() {
        let sprawl = if c.sprawling { " sprawling" } else { "" };
        sink.text(&format!(
            "class {i}: {} occurrences {}{sprawl}",
            c.certificate, c.occurrences
        ))?;
    }
    if sink.common.out.is_some() {
        sink.json(&format!("census-g{genus}"), &record)?;
        for (i, c) in record.classes.iter().enumerate() {
            sink.svg(&format!("census-g{genus}-class{i}"), || {
                render_metric_graph(&c.skeleton, &RenderSpec::default())
            })?;
        }
    }
    if record.complete {
        sink.text(&format!("classes: {}", record.classes.len()))
    } else {
        sink.text(&format!("classes: {} (incomplete)", record.classes.len()))?;
        Err(Error::BudgetExceeded(format!(
            "census of genus {genus} did not finish"
        )))
    }
}
