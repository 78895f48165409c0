//! Roots and factorization of one-variable tropical polynomials.

use tropical::polynomial::{factor_univariate, function_equal, roots_univariate};
use tropical::TropicalPolynomial;

fn main() -> tropical::Result<()> {
    for text in [
        "x^2 (+) 2(*)x (+) -1",
        "x^3 (+) 3(*)x (+) 1",
        "5(*)x",
        "-1(*)x^4 (+) 4(*)x^2 (+) x",
    ] {
        let p = TropicalPolynomial::parse_in(text, 1)?;
        let roots: Vec<String> = roots_univariate(&p)?
            .iter()
            .map(|r| r.to_string())
            .collect();
        let f = factor_univariate(&p)?;
        let back = f.expand();
        println!("{text}");
        println!("  roots   {}", roots.join(" "));
        println!("  factors {f}");
        println!(
            "  expands to {back} (same function: {})",
            function_equal(&p, &back)?
        );
    }
    Ok(())
}
