//! Dev helper: stage-by-stage timing of the bigfix primitives.

use num_bigint::BigInt;
use stark_oracle::bigfix::{exp, ln, ln2, ln_bigint, pi, Fx};
use std::time::Instant;

fn main() {
    let t = Instant::now();
    let p = pi();
    eprintln!("pi: {:?} -> {}", t.elapsed(), p.to_f64());
    let t = Instant::now();
    let l2 = ln2();
    eprintln!("ln2: {:?} -> {}", t.elapsed(), l2.to_f64());
    let t = Instant::now();
    let l3 = ln_bigint(&BigInt::from(3), &l2);
    eprintln!("ln3: {:?} -> {}", t.elapsed(), l3.to_f64());
    let t = Instant::now();
    let e1 = exp(&Fx::from_i64(1), &l2);
    eprintln!("exp(1): {:?} -> {}", t.elapsed(), e1.to_f64());
    let t = Instant::now();
    let s3 = Fx::from_i64(3).sqrt();
    eprintln!("sqrt3: {:?} -> {}", t.elapsed(), s3.to_f64());
    let t = Instant::now();
    let _ = ln(&Fx::from_f64(0.7), &l2);
    eprintln!("ln(0.7): {:?}", t.elapsed());
    let t = Instant::now();
    let lg = stark_oracle::gamma::ln_gamma_rational(&BigInt::from(1), &BigInt::from(2));
    eprintln!(
        "ln_gamma(1/2): {:?} -> {} (expect {})",
        t.elapsed(),
        lg.to_f64(),
        std::f64::consts::PI.sqrt().ln()
    );
    let t = Instant::now();
    let g = stark_oracle::gamma::gamma_rational(1, 3);
    eprintln!("gamma(1/3): {:?} -> {}", t.elapsed(), g.to_f64());
}
