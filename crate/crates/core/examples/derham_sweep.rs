// Truncated De Rham H_1 of R_f, stabilized over pole caps.

use std::error::Error;

use derham_graded::derham::{concentration_check, stabilized_h1, truncated_h1, SweepConfig};
use derham_graded::{parse_poly, Hypersurface, Weights};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let h = Hypersurface::new(parse_poly("x1^2 + x2^2", 2)?, Weights::new(vec![2, 2])?)?;
    let omega = h.omega();

    let t = truncated_h1(&h, -omega, 1, 4)?;
    println!("degree {}: cycles {}, dim {}", t.degree, t.cycle_dim, t.dim);
    for r in &t.representatives {
        println!("  {r}");
    }

    let cfg = SweepConfig::default();
    let s = stabilized_h1(&h, -omega, cfg)?;
    println!("stabilized at -omega: {:?} from sequence {:?}", s.value(), s.sequence());

    let degrees: Vec<i64> = (-omega - 4..=-omega + 4).collect();
    let report = concentration_check(&h, &degrees, cfg)?;
    for e in &report.entries {
        println!("degree {:>3}: {:?} expect zero {}", e.degree, e.outcome.value(), e.expect_zero);
    }
    println!("concentrated at -omega: {}", report.all_ok);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
