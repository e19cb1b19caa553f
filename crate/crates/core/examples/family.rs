// The family x1^2 + ... + x_(n-1)^2 + x_n^m over a small grid.

use std::error::Error;

use derham_graded::bounds::example01;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!("n m  bound verdict       contributing nu");
    for n in 2..=5 {
        for m in 2..=5 {
            let r = example01(n, m)?;
            println!("{n} {m}  {:<5} {:<13} {:?}", r.bound, r.verdict, r.contributing_nu);
        }
    }
    let r = example01(4, 2)?;
    for row in &r.trace {
        println!("nu {} degree {} closed form {} h1 {}", row.nu, row.degree, row.closed_form, row.h1dim);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
