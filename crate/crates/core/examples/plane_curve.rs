//! A plane tropical curve from its dual subdivision.

use tropical::hypersurface::{build_curve, check_balancing, is_smooth, smooth_curve_counts};
use tropical::rational::fmt_q;
use tropical::TropicalPolynomial;

fn main() -> tropical::Result<()> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "1(*)x^2 (+) 1(*)y^2 (+) 2(*)xy (+) 2(*)x (+) 2(*)y (+) 1".into());
    let p = TropicalPolynomial::parse_in(&text, 2)?;
    let c = build_curve(&p)?;
    let n = c.curve_counts();
    println!("{p}");
    println!("dual cells: {}", c.subdivision.cells.len());
    println!(
        "vertices {}, bounded edges {}, rays {}",
        n.vertices, n.bounded_edges, n.rays
    );
    for v in &c.vertices {
        let xy: Vec<String> = v.coords.iter().map(fmt_q).collect();
        let cell: Vec<String> = c.subdivision.cells[v.dual_cell]
            .iter()
            .map(|&k| format!("{:?}", c.subdivision.config.points[k]))
            .collect();
        println!("  vertex ({}) dual to {}", xy.join(", "), cell.join(" "));
    }
    for r in &c.rays {
        println!(
            "  ray from vertex {} towards {:?}, weight {}",
            r.base,
            r.direction,
            r.weight.unwrap_or(1)
        );
    }
    println!("balanced: {}", check_balancing(&c).balanced);
    if let Some(d) = p.degree() {
        let s = smooth_curve_counts(d as usize);
        println!(
            "smooth: {} (a smooth degree {d} curve has {} vertices, {} bounded edges, {} rays)",
            is_smooth(&c)?,
            s.vertices,
            s.bounded_edges,
            s.rays
        );
    }
    Ok(())
}
