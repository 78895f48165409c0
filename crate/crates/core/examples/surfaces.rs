//! Tropical surfaces in three-space and their cell counts.

use tropical::hypersurface::{build_surface, check_balancing, is_smooth, smooth_surface_counts};
use tropical::TropicalPolynomial;

const QUADRIC: &str = "-3(*)x^2 (+) -4(*)xy (+) xz (+) -7(*)y^2 (+) -2(*)yz (+) -1(*)z^2 (+) x (+) y (+) -2(*)z (+) -7";
const CUBIC: &str = "-23(*)x^3 (+) -15(*)x^2y (+) -7(*)x^2z (+) -15(*)xy^2 (+) xyz (+) -3(*)xz^2 \
    (+) -25(*)y^3 (+) -6(*)y^2z (+) -10(*)yz^2 (+) -20(*)z^3 (+) -2(*)x^2 (+) -6(*)xy (+) -1(*)xz \
    (+) -14(*)y^2 (+) yz (+) -9(*)z^2 (+) -11(*)x (+) -4(*)y (+) -9(*)z (+) -21";

fn main() -> tropical::Result<()> {
    for (name, text) in [
        ("plane", "x (+) y (+) z (+) 0"),
        ("quadric", QUADRIC),
        ("cubic", CUBIC),
    ] {
        let p = TropicalPolynomial::parse_in(text, 3)?;
        let s = build_surface(&p)?;
        let n = s.surface_counts();
        println!(
            "{name}: {} vertices, {} edges, {} rays, {} bounded and {} unbounded 2-cells, smooth {}, balanced {}",
            n.vertices,
            n.edges,
            n.rays,
            n.bounded_2cells,
            n.unbounded_2cells,
            is_smooth(&s)?,
            check_balancing(&s).balanced
        );
        if let Some(d) = p.degree() {
            let (expect, chi) = smooth_surface_counts(d as usize);
            println!("  smooth degree {d} prediction {expect:?}, Euler characteristic {chi}");
        }
    }
    Ok(())
}
