use std::path::Path;

use clap::Parser;
use serde::de::DeserializeOwned;
use serde::Serialize;
use tropical::cli::{
    exit_code, run, Cli, IntersectOutput, SkeletonOutput, SpaceCurveOutput, TriangulationsOutput,
};
use tropical::geometry::Subdivision;
use tropical::hypersurface::TropicalComplex;
use tropical::rational::q;

fn run_args(args: &[&str]) -> Result<String, i32> {
    let cli = Cli::try_parse_from(std::iter::once("tropical").chain(args.iter().copied()))
        .map_err(|_| 2)?;
    let mut out = Vec::new();
    run(&cli, &mut out).map_err(|e| exit_code(&e))?;
    Ok(String::from_utf8(out).unwrap())
}

fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(path: &Path) -> T {
    let text = std::fs::read_to_string(path).unwrap();
    let v: T = serde_json::from_str(&text).unwrap();
    let again: T = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(v, again);
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text);
    v
}

fn valid_xml(path: &Path) -> String {
    let text = std::fs::read_to_string(path).unwrap();
    roxmltree::Document::parse(&text).unwrap();
    text
}

#[test]
fn text_commands() {
    assert_eq!(
        run_args(&["roots", "x^2 (+) 2(*)x (+) -1"]).unwrap(),
        "(-3,1) (2,1)\n"
    );
    assert_eq!(
        run_args(&["eval", "x (+) y (+) 0", "--at", "0,0"]).unwrap(),
        "0 (argmax: 3 terms)\n"
    );
    assert_eq!(
        run_args(&["eval", "x (+) y (+) 0", "--at", "-1,1/2"]).unwrap(),
        "1/2 (argmax: 1 term)\n"
    );
    assert_eq!(
        run_args(&["factor", "5(*)x"]).unwrap(),
        "c=5; root -inf^1\n"
    );
    assert_eq!(
        run_args(&["tropicalize", "--expr", "x + t*y + 2"]).unwrap(),
        "x (+) -1(*)y (+) 0\n"
    );
    let json = run_args(&["roots", "x^2 (+) 2(*)x (+) -1", "--format", "json"]).unwrap();
    let roots: Vec<tropical::TropicalRoot> = serde_json::from_str(&json).unwrap();
    assert_eq!(roots.len(), 2);
}

#[test]
fn exit_codes() {
    assert_eq!(run_args(&["roots", "x^2 (+"]), Err(2));
    assert_eq!(run_args(&["nonsense"]), Err(2));
    assert_eq!(run_args(&["roots", "x (+) y"]), Err(2));
    assert_eq!(run_args(&["curve", "x (+) 0"]), Err(1));
    assert_eq!(run_args(&["census", "--genus", "5"]), Err(3));
    assert_eq!(
        run_args(&["triangulations", "0,0 9,0 0,9", "--budget", "0"]),
        Err(3)
    );
}

#[test]
fn curve_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    run_args(&[
        "curve",
        "1(*)x^2 (+) 1(*)y^2 (+) 2(*)xy (+) 2(*)x (+) 2(*)y (+) 1",
        "--out",
        out,
    ])
    .unwrap();
    let c: TropicalComplex = round_trip(&dir.path().join("curve.json"));
    let n = c.curve_counts();
    assert_eq!(
        (
            n.vertices,
            n.bounded_edges,
            n.rays,
            c.subdivision.cells.len()
        ),
        (4, 3, 6, 4)
    );
    let svg = valid_xml(&dir.path().join("curve.svg"));
    assert_eq!(svg, include_str!("golden/quadric.svg"));
    // Four curve vertices on the left, six lattice points on the right.
    assert_eq!(svg.matches("<circle").count(), 10);
    assert_eq!(svg.matches("<polygon").count(), 4);
}

#[test]
fn intersection_and_skeleton_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    run_args(&[
        "intersect",
        "x (+) y (+) 0",
        "1(*)x (+) y (+) 0",
        "--out",
        out,
    ])
    .unwrap();
    let i: IntersectOutput = round_trip(&dir.path().join("intersection.json"));
    assert_eq!(i.points.len(), 1);
    assert_eq!(
        (i.points[0].location.clone(), i.points[0].multiplicity),
        (vec![q(-1), q(0)], 1)
    );
    valid_xml(&dir.path().join("intersection.svg"));

    run_args(&[
        "skeleton",
        "0 (+) x (+) y (+) 3(*)xy (+) 1(*)x^2y (+) 1(*)xy^2",
        "--out",
        out,
    ])
    .unwrap();
    let s: SkeletonOutput = round_trip(&dir.path().join("skeleton.json"));
    // A pentagon with vertices (-3,0), (0,-3), (2,-3), (2,2), (-3,2).
    assert_eq!((s.genus, s.certificate.as_deref()), (1, Some("1:17")));
    let svg = valid_xml(&dir.path().join("skeleton.svg"));
    assert!(svg.contains(">17</text>"));
    let again = tempfile::tempdir().unwrap();
    run_args(&[
        "skeleton",
        "--graph",
        dir.path().join("skeleton.json").to_str().unwrap(),
        "--out",
        again.path().to_str().unwrap(),
    ])
    .map(|_| ())
    .unwrap_or_else(|code| panic!("exit {code}"));
}

#[test]
fn other_json_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    run_args(&[
        "subdivide",
        "x^2 (+) 1(*)x (+) 0 (+) 1(*)y (+) y^2 (+) 1(*)xy",
        "--out",
        out,
    ])
    .unwrap();
    let s: Subdivision = round_trip(&dir.path().join("subdivision.json"));
    assert_eq!(s.cells.len(), 4);
    valid_xml(&dir.path().join("subdivision.svg"));

    run_args(&["surface", "x (+) y (+) z (+) 0", "--out", out]).unwrap();
    let s: TropicalComplex = round_trip(&dir.path().join("surface.json"));
    assert_eq!(s.surface_counts().rays, 4);
    assert!(!dir.path().join("surface.svg").exists());

    run_args(&[
        "spacecurve",
        "-1(*)x (+) -1(*)y (+) z (+) 1",
        "-2(*)x (+) 1(*)y (+) 1(*)z (+) -1",
        "--out",
        out,
    ])
    .unwrap();
    let s: SpaceCurveOutput = round_trip(&dir.path().join("spacecurve.json"));
    assert_eq!((s.curve.vertices.len(), s.skeleton.genus), (2, 0));

    let text = run_args(&[
        "triangulations",
        "0,0 3,0 0,3",
        "--labelled",
        "--regularity",
        "--out",
        out,
    ])
    .unwrap();
    assert_eq!(text, "triangulations: 79 (regular: 79)\n");
    let t: TriangulationsOutput = round_trip(&dir.path().join("triangulations.json"));
    assert_eq!(t.count, 79);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "intersect",
        "-1(*)x^2 (+) xy (+) -1(*)y^2 (+) x (+) y (+) -1",
        "-1/2(*)x^2 (+) 1(*)xy (+) -2(*)y^2 (+) x (+) y (+) 0",
    ];
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    for d in [&a, &b] {
        let mut v = args.to_vec();
        v.extend(["--out", d.path().to_str().unwrap()]);
        run_args(&v).unwrap();
    }
    for f in ["intersection.json", "intersection.svg"] {
        assert_eq!(
            std::fs::read(a.path().join(f)).unwrap(),
            std::fs::read(b.path().join(f)).unwrap()
        );
    }
    // Another perturbation direction, same stable intersection.
    let c = tempfile::tempdir().unwrap();
    let mut v = args.to_vec();
    v.extend(["--out", c.path().to_str().unwrap(), "--seed", "3"]);
    run_args(&v).unwrap();
    let x: IntersectOutput = round_trip(&a.path().join("intersection.json"));
    let y: IntersectOutput = round_trip(&c.path().join("intersection.json"));
    assert_ne!(x.direction, y.direction);
    assert_eq!(x.points, y.points);
}

#[test]
fn census_table() {
    let text = run_args(&["census", "--genus", "2", "--workers", "1"]).unwrap();
    assert!(text.trim_end().ends_with("classes: 2"), "{text}");
}
