//! Which trivalent graphs of a given genus are skeletons of smooth plane curves.
//!
//! `cargo run --release --example census -- 3`

use tropical::skeleton::{troplanar_census, CensusConfig};

fn main() -> tropical::Result<()> {
    let genus: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(2);
    let record = troplanar_census(genus, &CensusConfig::default())?;
    for p in &record.polygons {
        println!(
            "{} {}: {} triangulations, {} regular, realizing classes {:?}",
            if p.hyperelliptic {
                "hyperelliptic"
            } else {
                "nonhyperelliptic"
            },
            p.polygon,
            p.triangulations,
            p.regular,
            p.classes
        );
    }
    for (i, c) in record.classes.iter().enumerate() {
        println!(
            "class {i}: {} vertices, {} edges, sprawling {}, seen {} times, first on polygon {}",
            c.skeleton.n_vertices,
            c.skeleton.edges.len(),
            c.sprawling,
            c.occurrences,
            c.polygon
        );
    }
    println!("classes: {}", record.classes.len());
    Ok(())
}
