//! Regular subdivisions, unimodular triangulations and the regularity test.

use tropical::budget::Budget;
use tropical::geometry::polygon::LatticePolygon;
use tropical::geometry::triangulation::{count_triangulations_by_segments, TriangulationSpace};
use tropical::geometry::{is_regular, regular_subdivision, PointConfiguration};
use tropical::rational::{fmt_q, q};

fn main() -> tropical::Result<()> {
    let pts = vec![
        vec![0, 0],
        vec![2, 0],
        vec![0, 2],
        vec![1, 0],
        vec![0, 1],
        vec![1, 1],
    ];
    let heights = [0, 0, 0, 1, 1, 1].into_iter().map(|h| Some(q(h))).collect();
    let cfg = PointConfiguration::with_heights(pts, heights)?;
    let sub = regular_subdivision(&cfg)?;
    println!(
        "heights 0,0,0 at corners and 1 at midpoints: cells {:?}",
        sub.cells
    );

    for d in 1..=3 {
        let p = LatticePolygon::standard_triangle(d);
        let labelled =
            TriangulationSpace::new(&p, false).enumerate(&Budget::unlimited(), |_| {})?;
        println!(
            "triangle of size {d}: {} unimodular triangulations (segment count {})",
            labelled.len(),
            count_triangulations_by_segments(&p)
        );
    }

    let t4 = LatticePolygon::standard_triangle(4);
    let space = TriangulationSpace::new(&t4, true);
    let ts = space.enumerate(&Budget::unlimited(), |_| {})?;
    println!(
        "triangle of size 4: {} triangulations up to symmetry",
        ts.len()
    );
    let mut nonregular = Vec::new();
    for t in &ts {
        let sub = space.to_subdivision(t);
        let r = is_regular(&sub)?;
        if !r.regular {
            nonregular.push(sub);
        }
    }
    println!("non-regular: {}", nonregular.len());
    for sub in &nonregular {
        let cells: Vec<Vec<[i64; 2]>> = sub
            .cells
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&k| [space.points[k][0], space.points[k][1]])
                    .collect()
            })
            .collect();
        println!("  {cells:?}");
    }
    let witness = is_regular(&space.to_subdivision(&ts[0]))?;
    let hs: Vec<String> = witness
        .heights
        .iter()
        .map(|h| h.as_ref().map_or("-".into(), fmt_q))
        .collect();
    println!("heights inducing the first one: {}", hs.join(" "));
    Ok(())
}
