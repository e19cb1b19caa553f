// Hilbert function of R/(f) and the isolated-singularity test.

use std::error::Error;

use derham_graded::quotient::{default_scan_bound, hilbert_function, isolated_singularity_check};
use derham_graded::{parse_poly, Hypersurface, Weights};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let w = Weights::new(vec![3, 3, 2])?;
    let h = Hypersurface::new(parse_poly("x1^2 + x2^2 + x3^3", 3)?, w)?;
    let hf = hilbert_function(&h, 0, 12)?;
    for d in 0..=12 {
        println!("dim (R/f)_{d:<2} = {}", hf.get(d).unwrap_or(0));
    }

    let verdict = isolated_singularity_check(&h, default_scan_bound(&h))?;
    println!("isolated: {verdict:?}");

    let cusp_line = Hypersurface::new(parse_poly("x1^2*x2", 2)?, Weights::new(vec![1, 1])?)?;
    let verdict = isolated_singularity_check(&cusp_line, default_scan_bound(&cusp_line))?;
    println!("x1^2*x2: {verdict:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
