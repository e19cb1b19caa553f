// Rank, nullspace and affine membership over the rationals.

use std::error::Error;

use derham_graded::linalg::{self, q};
use derham_graded::Matrix;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let m = Matrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
    let null = linalg::nullspace_basis(&m);
    println!("rank {} + nullity {} = {} columns", linalg::rank(&m), null.len(), m.cols());
    for v in &null {
        let shown: Vec<String> = v.iter().map(ToString::to_string).collect();
        println!("kernel vector [{}]", shown.join(", "));
    }

    let target = vec![q(5), q(10), q(3)];
    let cols: Vec<_> = (0..m.cols()).map(|c| m.column(c)).collect();
    let x = linalg::in_affine(&target, &cols, &[])?.expect("target lies in the column space");
    let shown: Vec<String> = x.iter().map(ToString::to_string).collect();
    println!("one solution of m x = target: [{}]", shown.join(", "));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
