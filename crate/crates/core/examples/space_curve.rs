//! Curves in three-space cut out by two tropical surfaces.

use tropical::intersection::{smooth_space_curve_counts, space_curve};
use tropical::rational::fmt_q;
use tropical::skeleton::{canonical_certificate, named, skeletonize_space_curve};
use tropical::TropicalPolynomial;

const QUADRIC: &str = "-3(*)x^2 (+) -4(*)xy (+) xz (+) -7(*)y^2 (+) -2(*)yz (+) -1(*)z^2 (+) x (+) y (+) -2(*)z (+) -7";
const CUBIC: &str = "-23(*)x^3 (+) -15(*)x^2y (+) -7(*)x^2z (+) -15(*)xy^2 (+) xyz (+) -3(*)xz^2 \
    (+) -25(*)y^3 (+) -6(*)y^2z (+) -10(*)yz^2 (+) -20(*)z^3 (+) -2(*)x^2 (+) -6(*)xy (+) -1(*)xz \
    (+) -14(*)y^2 (+) yz (+) -9(*)z^2 (+) -11(*)x (+) -4(*)y (+) -9(*)z (+) -21";

fn main() -> tropical::Result<()> {
    let p = TropicalPolynomial::parse_in("-1(*)x (+) -1(*)y (+) z (+) 1", 3)?;
    let q = TropicalPolynomial::parse_in("-2(*)x (+) 1(*)y (+) 1(*)z (+) -1", 3)?;
    let line = space_curve(&p, &q)?;
    println!(
        "line: {} vertices, {} edges, {} rays",
        line.vertices.len(),
        line.edges.len(),
        line.rays.len()
    );
    for v in &line.vertices {
        let c: Vec<String> = v.coords.iter().map(fmt_q).collect();
        println!("  vertex ({})", c.join(", "));
    }

    let f = TropicalPolynomial::parse_in(QUADRIC, 3)?;
    let g = TropicalPolynomial::parse_in(CUBIC, 3)?;
    let c = space_curve(&f, &g)?;
    println!(
        "quadric x cubic: smooth {}, {} vertices, {} edges, {} rays, genus {} (smooth prediction {:?})",
        c.smooth,
        c.vertices.len(),
        c.edges.len(),
        c.rays.len(),
        c.genus,
        smooth_space_curve_counts(2, 3)
    );
    let skel = skeletonize_space_curve(&c);
    let shape = canonical_certificate(&skel, false)?;
    println!(
        "skeleton: {} vertices, {} edges, genus {}, K3,3: {}",
        skel.n_vertices,
        skel.edges.len(),
        skel.genus()?,
        shape == canonical_certificate(&named::k33(), false)?
    );
    for e in &skel.edges {
        println!("  {} -- {}  length {}", e.a, e.b, fmt_q(&e.length));
    }
    Ok(())
}
