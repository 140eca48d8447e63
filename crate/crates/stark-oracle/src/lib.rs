//! Slow, high-precision reference values ("the oracle side" of dual-route
//! checks in the test suites). Everything here is independent of the fast
//! f64 kernels it validates: fixed-point BigInt arithmetic, Maclaurin series
//! summed to extinction, Stirling with exact Bernoulli fractions.

pub mod bigfix;
pub mod gamma;

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_complex::Complex64;

use bigfix::{exp, ln2, ln_bigint, pi, Fx};

#[derive(Clone, Copy, Debug)]
pub struct AiryRef {
    pub ai: Complex64,
    pub aip: Complex64,
    pub bi: Complex64,
    pub bip: Complex64,
}

struct Consts {
    ai0: Fx,  // Ai(0)   = 3^{-2/3} / Gamma(2/3)
    aip0: Fx, // -Ai'(0) = 3^{-1/3} / Gamma(1/3)
    sqrt3: Fx,
}

fn consts() -> &'static Consts {
    static C: OnceLock<Consts> = OnceLock::new();
    C.get_or_init(|| {
        let ln2v = ln2();
        let ln3 = ln_bigint(&BigInt::from(3), &ln2v);
        let g13 = gamma::gamma_rational(1, 3);
        let g23 = gamma::gamma_rational(2, 3);
        Consts {
            ai0: exp(&ln3.muli(2).divi(3).neg(), &ln2v).div(&g23),
            aip0: exp(&ln3.divi(3).neg(), &ln2v).div(&g13),
            sqrt3: Fx::from_i64(3).sqrt(),
        }
    })
}

#[derive(Clone)]
struct CFx {
    re: Fx,
    im: Fx,
}

impl CFx {
    fn from_c(z: Complex64) -> CFx {
        CFx {
            re: Fx::from_f64(z.re),
            im: Fx::from_f64(z.im),
        }
    }

    fn zero() -> CFx {
        CFx {
            re: Fx::zero(),
            im: Fx::zero(),
        }
    }

    fn one() -> CFx {
        CFx {
            re: Fx::one(),
            im: Fx::zero(),
        }
    }

    fn mul(&self, o: &CFx) -> CFx {
        CFx {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    fn add(&self, o: &CFx) -> CFx {
        CFx {
            re: self.re.add(&o.re),
            im: self.im.add(&o.im),
        }
    }

    fn divi(&self, n: i64) -> CFx {
        CFx {
            re: self.re.divi(n),
            im: self.im.divi(n),
        }
    }

    fn muli(&self, n: i64) -> CFx {
        CFx {
            re: self.re.muli(n),
            im: self.im.muli(n),
        }
    }

    fn scale(&self, f: &Fx) -> CFx {
        CFx {
            re: self.re.mul(f),
            im: self.im.mul(f),
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn to_c(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

/// Airy functions by direct Maclaurin summation, terms carried until they
/// vanish at the fixed-point resolution. Intended for |z| <= ~55; beyond
/// that the 2^-1024 grid itself is consumed by cancellation.
///
/// Series families for y'' = zy (f: c0 = 1, g: c1 = 1):
///   tf_k  = a_k z^{3k},        a_{k+1} = a_k /((3k+2)(3k+3))
///   tg_k  = c_k z^{3k+1},      c_{k+1} = c_k /((3k+3)(3k+4))
///   tfp_k = 3k a_k z^{3k-1},   seed z^2/2 at k = 1
///   tgp_k = (3k+1) c_k z^{3k}, seed 1 at k = 0
pub fn airy_series_reference(z: Complex64) -> AiryRef {
    let c = consts();
    let zc = CFx::from_c(z);
    let z2 = zc.mul(&zc);
    let z3 = z2.mul(&zc);

    let mut tf = CFx::one();
    let mut tg = zc.clone();
    let mut tgp = CFx::one();
    let mut tfp = CFx::zero();

    let mut f = tf.clone();
    let mut g = tg.clone();
    let mut gp = tgp.clone();
    let mut fp = CFx::zero();

    let mut k: i64 = 0;
    loop {
        tf = tf.mul(&z3).divi((3 * k + 2) * (3 * k + 3));
        tg = tg.mul(&z3).divi((3 * k + 3) * (3 * k + 4));
        tgp = tgp.mul(&z3).divi((3 * k + 1) * (3 * k + 3));
        tfp = if k == 0 {
            z2.divi(2)
        } else {
            tfp.mul(&z3)
                .muli(k + 1)
                .divi(k * (3 * k + 2) * (3 * k + 3))
        };
        f = f.add(&tf);
        g = g.add(&tg);
        gp = gp.add(&tgp);
        fp = fp.add(&tfp);
        k += 1;
        if (tf.is_zero() && tg.is_zero() && tgp.is_zero() && tfp.is_zero()) || k > 5000 {
            break;
        }
    }

    let nbeta = c.aip0.neg();
    let ai = f.scale(&c.ai0).add(&g.scale(&nbeta));
    let bi = f.scale(&c.ai0).add(&g.scale(&c.aip0)).scale(&c.sqrt3);
    let aip = fp.scale(&c.ai0).add(&gp.scale(&nbeta));
    let bip = fp.scale(&c.ai0).add(&gp.scale(&c.aip0)).scale(&c.sqrt3);
    AiryRef {
        ai: ai.to_c(),
        aip: aip.to_c(),
        bi: bi.to_c(),
        bip: bip.to_c(),
    }
}

pub use gamma::gamma_ref;

/// pi to fixed-point precision, rounded to f64 (sanity anchor for tests).
pub fn pi_ref() -> f64 {
    pi().to_f64()
}

/// Ai(0) and Ai'(0) as double-double pairs (hi, lo), for seeding the fast
/// kernel's compensated series constants.
pub fn airy_origin_dd() -> ((f64, f64), (f64, f64)) {
    let c = consts();
    let split = |v: &Fx| {
        let hi = v.to_f64();
        let lo = v.sub(&Fx::from_f64(hi)).to_f64();
        (hi, lo)
    };
    (split(&c.ai0), split(&c.aip0.neg()))
}
