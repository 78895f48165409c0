//! Metric skeletons of tropical curves and their isomorphism classes.

use tropical::hypersurface::build_curve;
use tropical::rational::{fmt_q, q};
use tropical::skeleton::{canonical_certificate, named, skeletonize, skeletonize_embedded};
use tropical::TropicalPolynomial;

fn main() -> tropical::Result<()> {
    // Two cycles, with lattice lengths 2+1+1+3+5 and 6+3+3+1+1+1, joined by a
    // segment of length one, plus a dangling edge that pruning removes.
    let pts = [
        (0, 0),
        (2, 0),
        (3, 1),
        (3, 2),
        (0, 5),
        (10, 0),
        (16, 0),
        (16, 3),
        (13, 3),
        (12, 3),
        (11, 2),
        (-1, 6),
    ];
    let coords: Vec<Vec<_>> = pts.iter().map(|&(x, y)| vec![q(x), q(y)]).collect();
    let edges = [
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 0),
        (5, 6),
        (6, 7),
        (7, 8),
        (8, 9),
        (9, 10),
        (10, 5),
        (2, 5),
        (4, 11),
    ];
    let g = skeletonize_embedded(&coords, &edges);
    println!(
        "embedded graph -> {} vertices, genus {}",
        g.n_vertices,
        g.genus()?
    );
    for e in &g.edges {
        let kind = if e.a == e.b { "loop" } else { "edge" };
        println!("  {kind} {} -- {} length {}", e.a, e.b, fmt_q(&e.length));
    }
    println!("  certificate {}", canonical_certificate(&g, true)?);

    let p = TropicalPolynomial::parse_in(
        "0 (+) x (+) y (+) 3(*)xy (+) 1(*)x^2y (+) 1(*)xy^2 (+) -2(*)x^2 (+) -2(*)y^2",
        2,
    )?;
    let s = skeletonize(&build_curve(&p)?);
    println!(
        "skeleton of {p}: {} vertices, {} edges, genus {}",
        s.n_vertices,
        s.edges.len(),
        s.genus()?
    );

    for (name, h) in [
        ("theta", named::theta()),
        ("dumbbell", named::dumbbell()),
        ("lollipop", named::lollipop()),
    ] {
        println!(
            "{name}: genus {}, trivalent {}, sprawling {}, shape {}",
            h.genus()?,
            h.is_trivalent(),
            h.is_sprawling(),
            canonical_certificate(&h, false)?
        );
    }
    Ok(())
}
