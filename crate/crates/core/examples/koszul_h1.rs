// H_1 of the Koszul complex of A = R/(f) on the partials of f.

use std::error::Error;

use derham_graded::bounds::example01_hypersurface;
use derham_graded::koszul::{euler_characteristics, h1_hilbert, koszul_slice};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (n, m) in [(2, 2), (2, 4), (3, 3)] {
        let h = example01_hypersurface(n, m)?;
        let hf = h1_hilbert(&h, 0, 4 * m as i64)?;
        println!("{} (weights {:?}): H_1 support {:?}", h.f, h.weights.as_slice(), hf.support());
    }

    // The complex really is a complex, and its Euler characteristic agrees
    // with that of its homology.
    let h = example01_hypersurface(3, 2)?;
    for d in 0..=8 {
        let s = koszul_slice(&h, d);
        let ok = (2..=s.top()).all(|p| s.psi(p - 1).mul(s.psi(p)).map(|m| m.is_zero()).unwrap_or(false));
        let (chain, homology) = euler_characteristics(&h, d);
        println!("degree {d}: psi^2 = 0: {ok}, chi(K) = {chain}, chi(H) = {homology}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
