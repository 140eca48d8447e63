//! Gamma function to ~300 digits via argument-shifted Stirling series.
//!
//! ln Gamma(x) = ln Gamma(x + N) - ln prod_{j<N} (x + j), with the Stirling
//! tail at x + N summed with exact-rational Bernoulli numbers. Used for the
//! Airy series constants Ai(0), Ai'(0) and as the reference Gamma in tests.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bigfix::{exp, ln, ln_bigint, ln2, pi, Fx};

const SHIFT_N: i64 = 800;
const STIRLING_TERMS: usize = 110;

/// Exact Bernoulli numbers B_0..B_{2*STIRLING_TERMS} as reduced fractions.
fn bernoulli() -> &'static Vec<(BigInt, BigInt)> {
    static B: OnceLock<Vec<(BigInt, BigInt)>> = OnceLock::new();
    B.get_or_init(|| {
        let max = 2 * STIRLING_TERMS;
        let mut b: Vec<(BigInt, BigInt)> = Vec::with_capacity(max + 1);
        b.push((BigInt::one(), BigInt::one()));
        for m in 1..=max {
            // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
            let mut num = BigInt::zero();
            let mut den = BigInt::one();
            let mut binom = BigInt::one(); // C(m+1, 0)
            for (j, (bn, bd)) in b.iter().enumerate().take(m) {
                num = &num * bd + &binom * bn * &den;
                den *= bd;
                if j % 8 == 7 {
                    let g = gcd(num.abs(), den.clone());
                    num /= &g;
                    den /= &g;
                }
                binom = binom * (m as i64 + 1 - j as i64) / (j as i64 + 1);
            }
            num = -num;
            den *= m as i64 + 1;
            let g = gcd(num.abs(), den.clone());
            b.push((num / &g, den / g));
        }
        b
    })
}

fn gcd(mut a: BigInt, mut b: BigInt) -> BigInt {
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    if a.is_zero() {
        BigInt::one()
    } else {
        a
    }
}

fn ln2_cached() -> &'static Fx {
    static V: OnceLock<Fx> = OnceLock::new();
    V.get_or_init(ln2)
}

fn pi_cached() -> &'static Fx {
    static V: OnceLock<Fx> = OnceLock::new();
    V.get_or_init(pi)
}

/// ln Gamma(num/den) for a positive rational argument.
pub fn ln_gamma_rational(num: &BigInt, den: &BigInt) -> Fx {
    assert!(num.is_positive() && den.is_positive());
    let ln2v = ln2_cached();
    let piv = pi_cached();

    // z = x + N as an exact ratio (num + N*den)/den
    let znum = num + den * SHIFT_N;
    let z = Fx::from_ratio(&znum, den);
    let ln_z = ln(&z, ln2v);

    // (z - 1/2) ln z - z + (1/2) ln(2 pi)
    let half = Fx::one().shl(-1);
    let mut acc = z.sub(&half).mul(&ln_z).sub(&z);
    acc = acc.add(&ln(&piv.muli(2), ln2v).shl(-1));

    // Stirling tail: sum B_{2m} / (2m (2m-1) z^{2m-1}), each term formed as an
    // exact rational so no intermediate power underflows the fixed-point grid.
    let bern = bernoulli();
    let znum2 = &znum * &znum;
    let den2 = den * den;
    let mut zp_num = znum.clone(); // znum^{2m-1}
    let mut zp_den = den.clone(); // den^{2m-1}
    for m in 1..=STIRLING_TERMS {
        let (bn, bd) = &bern[2 * m];
        let tnum = bn * &zp_den;
        let tden = bd * ((2 * m) as i64 * (2 * m - 1) as i64) * &zp_num;
        let term = Fx::from_ratio(&tnum, &tden);
        if term.is_zero() {
            break;
        }
        acc = acc.add(&term);
        zp_num *= &znum2;
        zp_den *= &den2;
    }

    // downward shift: ln Gamma(x) = ln Gamma(x+N) - ln prod_{j<N} (x + j den)/den
    // prod (num + j den) is exact; the den^N factor becomes N ln(den).
    let mut prod = BigInt::one();
    for j in 0..SHIFT_N {
        prod *= num + den * j;
    }
    acc = acc.sub(&ln_bigint(&prod, ln2v));
    if !den.is_one() {
        acc = acc.add(&ln_bigint(den, ln2v).muli(SHIFT_N));
    }
    acc
}

pub fn gamma_rational(num: i64, den: i64) -> Fx {
    exp(
        &ln_gamma_rational(&BigInt::from(num), &BigInt::from(den)),
        ln2_cached(),
    )
}

/// Reference Gamma for a positive finite f64 argument (exact dyadic rational).
pub fn gamma_ref(x: f64) -> f64 {
    assert!(x.is_finite() && x > 0.0);
    let fx = Fx::from_f64(x);
    // fx = mant / 2^BITS, an exact rational
    let den = BigInt::one() << crate::bigfix::BITS;
    exp(&ln_gamma_rational(&fx.0, &den), ln2_cached()).to_f64()
}
