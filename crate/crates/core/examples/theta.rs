// From a top-degree De Rham cycle to a Koszul class.

use std::error::Error;

use derham_graded::derham::slice::differential;
use derham_graded::derham::{pole_order, theta, DeRhamStrand};
use derham_graded::koszul::class_is_zero;
use derham_graded::linalg;
use derham_graded::{parse_poly, Hypersurface, Weights};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let h = Hypersurface::new(parse_poly("x1^2 + x2^3", 2)?, Weights::new(vec![3, 2])?)?;
    let d = -h.omega();
    let strand = DeRhamStrand::build(&h, 1, d, 2);
    let (phi1, _) = differential(&h, &strand);
    for z in linalg::nullspace_basis(&phi1) {
        let v = strand.vector(&h, &z);
        let class = theta(&h, &v)?;
        println!(
            "{}  pole {:?}  ->  class in degree {}, zero: {}",
            v.render(&h),
            pole_order(&h, &v),
            class.degree,
            class_is_zero(&h, &class)?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
