// Parsing, weighted degrees and exact division.

use std::error::Error;

use derham_graded::polyring::{divide_exact, euler_apply};
use derham_graded::{parse_poly, Weights};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let w = Weights::new(vec![3, 2])?;
    let f = parse_poly("x1^2 + x2^3", 2)?;
    println!("f = {f}, deg f = {}", f.degree(&w)?);

    // Euler identity: E(f) = deg f * f.
    println!("E(f) = {}", euler_apply(&f, &w));

    for g in ["x1^3 + x1*x2^3", "x1^3 + x2^3*x1 + x1*x2^3"] {
        let g = parse_poly(g, 2)?;
        match divide_exact(&g, &f, &w)? {
            Some(q) => println!("({g}) / f = {q}"),
            None => println!("f does not divide {g}"),
        }
    }

    if let Err(e) = parse_poly("x1^2 + * x2", 2) {
        println!("bad input: {e}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
