// Graded operator modules: Eulerian, generalized Eulerian, shifted.

use std::collections::BTreeMap;
use std::error::Error;

use derham_graded::eulerian::{extension_closure_check, GradedOpModule};
use derham_graded::Matrix;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let dims: BTreeMap<i64, usize> = [(0, 1), (2, 2)].into();
    let e = GradedOpModule::eulerian(&dims);
    println!("Eulerian: {} (exponent {:?})", e.is_generalized_eulerian(e.dim()), e.eulerian_exponent());

    let glue: BTreeMap<i64, Matrix> = [(2, Matrix::from_i64(&[&[0, 1], &[0, 0]]))].into();
    let ext = GradedOpModule::extension(&e, &e, &glue)?;
    println!(
        "extension: generalized Eulerian {} (exponent {:?})",
        ext.is_generalized_eulerian(ext.dim()),
        ext.eulerian_exponent()
    );
    println!("closure check: {}", extension_closure_check(&e, &e, &glue)?);

    let shifted = e.shift(1);
    println!("shifted by 1: {}", shifted.is_generalized_eulerian(shifted.dim()));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
