//! Valuations, Puiseux series, and tropicalizing classical polynomials.

use tropical::rational::{fmt_q, q, qf};
use tropical::tropicalize::{check_witness, tropicalize_poly, val_p, Puiseux, ValuedPolynomial};

fn main() -> tropical::Result<()> {
    let mut fib = vec![q(1), q(1)];
    while fib.len() < 10 {
        let n = fib.len();
        fib.push(&fib[n - 1] + &fib[n - 2]);
    }
    let vals: Vec<String> = fib
        .iter()
        .map(|f| val_p(f, 2).map(|v| v.map_or("inf".into(), |v| v.to_string())))
        .collect::<tropical::Result<_>>()?;
    println!(
        "2-adic valuations of the first Fibonacci numbers: {}",
        vals.join(", ")
    );

    let f = ValuedPolynomial::parse("x + t*y + 2")?;
    println!("trop({f}) = {}", tropicalize_poly(&f)?);

    // Points on both lines x + y + 1 = 0 and x + 2y + 1 + t = 0, with t replaced by t^r.
    let g = ValuedPolynomial::parse("x + y + 1")?;
    for r in [qf(1, 2), q(1), q(2)] {
        let tr = |s: &str| Puiseux::parse(s).map(|p| p.scale_exponents(&r));
        let witnesses = [
            [tr("-1 + t")?, tr("-t")?],
            [tr("-t")?, tr("-1 + t")?],
            [tr("t^(-1)")?, tr("-t^(-1) - 1")?],
        ];
        for w in &witnesses {
            let rep = check_witness(&g, w)?;
            let image: Vec<String> = rep.image.iter().map(fmt_q).collect();
            println!(
                "r = {}: ({}, {}) -> ({}) root: {}, on the tropical line: {}",
                fmt_q(&r),
                w[0],
                w[1],
                image.join(", "),
                rep.holds(),
                rep.on_tropical_hypersurface
            );
        }
    }
    Ok(())
}
