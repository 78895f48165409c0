//! Max-plus matrix arithmetic: products, determinants, eigenvalues.

use tropical::rational::fmt_q;
use tropical::semiring::{mat_mul, trop_det, trop_eigenvalue, TropicalMatrix};

fn main() -> tropical::Result<()> {
    let a = TropicalMatrix::from_ints(&[&[Some(5), Some(2)], &[Some(-1), Some(8)]])?;
    let b = TropicalMatrix::from_ints(&[&[Some(1), Some(0)], &[Some(2), None]])?;
    println!("A =\n{a}\nB =\n{b}\nA (*) B =\n{}", mat_mul(&a, &b)?);

    let d = trop_det(&a)?;
    println!("det A = {} (singular: {})", d.value, d.singular);
    println!("eigenvalue of A = {}", fmt_q(&trop_eigenvalue(&a)?));

    let c = TropicalMatrix::from_ints(&[
        &[Some(0), Some(3), None],
        &[Some(1), Some(0), Some(4)],
        &[Some(-2), None, Some(0)],
    ])?;
    println!(
        "eigenvalue of\n{c}\n= {} (best cycle mean)",
        fmt_q(&trop_eigenvalue(&c)?)
    );
    Ok(())
}
