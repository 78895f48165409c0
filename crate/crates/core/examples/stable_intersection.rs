//! Stable intersection of plane curves, two ways, and tangency detection.

use tropical::intersection::{
    bezout_sum, detect_tangencies, mixed_cell_intersection, stable_intersection, Shape,
};
use tropical::rational::fmt_q;
use tropical::TropicalPolynomial;

fn show(f: &str, g: &str) -> tropical::Result<()> {
    let (f, g) = (
        TropicalPolynomial::parse_in(f, 2)?,
        TropicalPolynomial::parse_in(g, 2)?,
    );
    println!("{f}  and  {g}");
    let pts = stable_intersection(&f, &g)?;
    for p in &pts {
        let at: Vec<String> = p.location.iter().map(fmt_q).collect();
        println!(
            "  ({}) multiplicity {}{}",
            at.join(", "),
            p.multiplicity,
            if p.transversal {
                ""
            } else {
                ", not transversal"
            }
        );
    }
    let total: u64 = pts.iter().map(|p| p.multiplicity).sum();
    let oracle: u64 = mixed_cell_intersection(&f, &g)?
        .iter()
        .map(|(_, m)| m)
        .sum();
    println!(
        "  total {total}, from mixed cells {oracle}, degree product {}",
        bezout_sum(&f, &g)?
    );
    for c in detect_tangencies(&f, &g)? {
        if c.tangent {
            let kinds: Vec<&str> = c
                .pieces
                .iter()
                .map(|s| match s {
                    Shape::Point { .. } => "point",
                    Shape::Segment { .. } => "segment",
                    Shape::Ray { .. } => "ray",
                })
                .collect();
            println!(
                "  tangency: {} carrying multiplicity {}",
                kinds.join(" + "),
                c.multiplicity
            );
        }
    }
    Ok(())
}

fn main() -> tropical::Result<()> {
    show("x (+) y (+) 0", "1(*)x (+) y (+) 0")?;
    show(
        "-1(*)x^2 (+) xy (+) -1(*)y^2 (+) x (+) y (+) -1",
        "-1/2(*)x^2 (+) 1(*)xy (+) -2(*)y^2 (+) x (+) y (+) 0",
    )?;
    show("x (+) y (+) 0", "x (+) y (+) 0")?;
    show("x^3 (+) y^3 (+) 0 (+) 2(*)xy", "1(*)x (+) -1(*)y (+) 0")?;
    Ok(())
}
