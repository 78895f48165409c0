//! Writes SVG drawings of a curve, an intersection and a skeleton.
//!
//! `cargo run --example render -- OUTPUT_DIR`

use std::path::PathBuf;

use tropical::hypersurface::build_curve;
use tropical::intersection::stable_intersection;
use tropical::render::{render_curve, render_intersection, render_metric_graph, RenderSpec};
use tropical::skeleton::skeletonize;
use tropical::TropicalPolynomial;

fn main() -> tropical::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("tropical-render"));
    std::fs::create_dir_all(&dir)?;
    let spec = RenderSpec::default();

    let f = TropicalPolynomial::parse_in("-1(*)x^2 (+) xy (+) -1(*)y^2 (+) x (+) y (+) -1", 2)?;
    let g =
        TropicalPolynomial::parse_in("-1/2(*)x^2 (+) 1(*)xy (+) -2(*)y^2 (+) x (+) y (+) 0", 2)?;
    let (c, d) = (build_curve(&f)?, build_curve(&g)?);
    std::fs::write(dir.join("quadric.svg"), render_curve(&c, &spec))?;
    std::fs::write(
        dir.join("intersection.svg"),
        render_intersection(&c, &d, &stable_intersection(&f, &g)?, &spec),
    )?;

    let cubic = TropicalPolynomial::parse_in(
        "x^3 (+) y^3 (+) 0 (+) 2(*)x^2y (+) 2(*)xy^2 (+) 2(*)x (+) 2(*)y (+) 2(*)x^2 (+) 2(*)y^2 (+) 4(*)xy",
        2,
    )?;
    let cc = build_curve(&cubic)?;
    std::fs::write(dir.join("cubic.svg"), render_curve(&cc, &spec))?;
    std::fs::write(
        dir.join("cubic-skeleton.svg"),
        render_metric_graph(&skeletonize(&cc), &spec),
    )?;
    println!(
        "wrote quadric.svg, intersection.svg, cubic.svg, cubic-skeleton.svg to {}",
        dir.display()
    );
    Ok(())
}
