// Elements of R_f: normal forms, pole orders and the Euler identity.

use std::error::Error;

use derham_graded::derham::{eulerian_check_frac, normal_form, pole_order, FracElem, FracVector};
use derham_graded::linalg::q;
use derham_graded::{parse_poly, Hypersurface, Weights};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let h = Hypersurface::new(parse_poly("x1^2 + x2^2", 2)?, Weights::new(vec![2, 2])?)?;
    let p = |s: &str| parse_poly(s, 2);

    // (x1 f, x2 f) / f^2 reduces to (x1, x2) / f.
    let v = FracVector::from_numerators(vec![p("x1^3 + x1*x2^2")?, p("x1^2*x2 + x2^3")?], 2, vec![2, 2]);
    let raw: Vec<String> = v.numerators().iter().map(|a| format!("({a})/f^{}", v.common_pole())).collect();
    println!("{}  ~>  {}", raw.join(", "), normal_form(&h, &v).render(&h));
    println!("pole order {:?}", pole_order(&h, &v));

    let w = FracVector::from_numerators(vec![p("x2")?, p("-x1")?], 1, vec![2, 2]);
    let sum = v.add(&h, &w.scale(&q(-1)));
    println!("difference {} has pole order {:?}", normal_form(&h, &sum).render(&h), pole_order(&h, &sum));

    let e = FracElem::new(p("x1*x2")?, 3);
    println!("E acts on {e} by its degree: {}", eulerian_check_frac(&h, &e));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
