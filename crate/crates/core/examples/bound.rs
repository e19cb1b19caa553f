// The candidate-degree bound, the truncated estimate beside it, and the
// pole-order filtration.

use std::error::Error;

use derham_graded::bounds::{filtration_report, theorem2_bound};
use derham_graded::derham::SweepConfig;
use derham_graded::{parse_poly, Hypersurface, Weights};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let h = Hypersurface::new(parse_poly("x1^2 + x2^2", 2)?, Weights::new(vec![2, 2])?)?;
    let cfg = SweepConfig::default();
    let report = theorem2_bound(&h, Some(cfg))?;
    for row in &report.rows {
        println!("nu {} degree {} h1 {}", row.nu, row.degree, row.h1dim);
    }
    println!("bound {}", report.bound);
    if let Some(est) = &report.truncated_estimate {
        println!("truncated estimate {:?}", est.outcome.value());
    }
    println!("divergence {:?}", report.divergence);

    let filt = filtration_report(&h, cfg)?;
    println!("{}", filt.note);
    for step in &filt.steps {
        println!(
            "F_{}: dim {} jump {} eta rank {} injective {}",
            step.nu, step.dim_f, step.jump, step.eta_rank, step.injective
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
