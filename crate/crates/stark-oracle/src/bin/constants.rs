//! Dev helper: prints the double-double constants and a few spot values used
//! by the fast kernel and its unit tests.

use num_complex::Complex64;
use stark_oracle::{airy_origin_dd, airy_series_reference, gamma_ref, pi_ref};

fn main() {
    let ((a_hi, a_lo), (b_hi, b_lo)) = airy_origin_dd();
    println!("AI0  hi={:e} lo={:e}", a_hi, a_lo);
    println!("AIP0 hi={:e} lo={:e}  (value is -Ai'(0))", b_hi, b_lo);
    println!("pi_ref = {:e}  (std: {:e})", pi_ref(), std::f64::consts::PI);
    println!("gamma(0.75) = {:.17e}", gamma_ref(0.75));
    println!("gamma(0.5)  = {:.17e}  sqrt(pi) = {:.17e}", gamma_ref(0.5), std::f64::consts::PI.sqrt());

    for &(re, im) in &[
        (0.0, 0.0),
        (0.5, 0.0),
        (-1.0, 0.0),
        (1.0, 1.0),
        (3.0, 2.0),
        (-5.0, 0.0),
        (8.5, 0.0),
        (-8.5, 3.0),
        (2.0, -7.0),
    ] {
        let z = Complex64::new(re, im);
        let r = airy_series_reference(z);
        println!(
            "z=({re},{im})\n  ai =({:.17e},{:.17e})\n  aip=({:.17e},{:.17e})\n  bi =({:.17e},{:.17e})\n  bip=({:.17e},{:.17e})",
            r.ai.re, r.ai.im, r.aip.re, r.aip.im, r.bi.re, r.bi.im, r.bip.re, r.bip.im
        );
    }
}
