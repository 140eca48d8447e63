//! Fixed-point big arithmetic: values are `mant / 2^BITS` with a `BigInt`
//! mantissa. Absolute resolution 2^-1024 (~308 decimal digits), unbounded
//! above, which is what the Maclaurin oracle needs: at |z| = 50 the Airy
//! series loses ~205 digits to cancellation and still has to certify 1e-12.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

pub const BITS: u32 = 1024;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Fx(pub BigInt);

impl Fx {
    pub fn zero() -> Fx {
        Fx(BigInt::zero())
    }

    pub fn one() -> Fx {
        Fx(BigInt::from(1) << BITS)
    }

    pub fn from_i64(n: i64) -> Fx {
        Fx(BigInt::from(n) << BITS)
    }

    /// Exact conversion: every finite f64 is a dyadic rational.
    pub fn from_f64(x: f64) -> Fx {
        assert!(x.is_finite(), "bigfix: non-finite input");
        if x == 0.0 {
            return Fx::zero();
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let exp_raw = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (mant, exp) = if exp_raw == 0 {
            (frac, -1074i64) // subnormal
        } else {
            (frac | (1u64 << 52), exp_raw - 1075)
        };
        let shift = exp + BITS as i64;
        let m = BigInt::from(mant) * sign;
        if shift >= 0 {
            Fx(m << shift)
        } else {
            Fx(m >> (-shift))
        }
    }

    /// Ratio num/den as a fixed-point value (den != 0).
    pub fn from_ratio(num: &BigInt, den: &BigInt) -> Fx {
        Fx((num << BITS) / den)
    }

    pub fn to_f64(&self) -> f64 {
        if self.0.is_zero() {
            return 0.0;
        }
        let neg = self.0.is_negative();
        let mag = self.0.magnitude();
        let nbits = mag.bits() as i64;
        // Take the top 64 bits so the conversion never saturates.
        let shift = nbits - 64;
        let top = if shift > 0 {
            (mag >> shift as u64).to_u64().unwrap()
        } else {
            mag.to_u64().unwrap()
        };
        let e = (shift.max(0) - BITS as i64) as i32;
        let v = top as f64 * 2f64.powi(e);
        if neg {
            -v
        } else {
            v
        }
    }

    pub fn add(&self, o: &Fx) -> Fx {
        Fx(&self.0 + &o.0)
    }

    pub fn sub(&self, o: &Fx) -> Fx {
        Fx(&self.0 - &o.0)
    }

    pub fn neg(&self) -> Fx {
        Fx(-&self.0)
    }

    pub fn mul(&self, o: &Fx) -> Fx {
        Fx(shr_trunc(&self.0 * &o.0, BITS as u64))
    }

    pub fn div(&self, o: &Fx) -> Fx {
        Fx((&self.0 << BITS) / &o.0)
    }

    pub fn muli(&self, n: i64) -> Fx {
        Fx(&self.0 * n)
    }

    pub fn divi(&self, n: i64) -> Fx {
        Fx(&self.0 / n)
    }

    pub fn shl(&self, k: i64) -> Fx {
        if k >= 0 {
            Fx(&self.0 << k as u64)
        } else {
            Fx(shr_trunc(self.0.clone(), (-k) as u64))
        }
    }

    pub fn abs(&self) -> Fx {
        Fx(self.0.abs())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn sqrt(&self) -> Fx {
        assert!(!self.0.is_negative(), "bigfix: sqrt of negative");
        Fx(isqrt(&(&self.0 << BITS)))
    }
}

/// Right shift truncating toward zero; BigInt's `>>` floors toward
/// negative infinity, which keeps tiny negative residues alive forever.
fn shr_trunc(v: BigInt, k: u64) -> BigInt {
    if v.is_negative() {
        -((-v) >> k)
    } else {
        v >> k
    }
}

fn isqrt(n: &BigInt) -> BigInt {
    if n.is_zero() {
        return BigInt::zero();
    }
    let mut x: BigInt = BigInt::from(1) << (n.bits().div_ceil(2) as u64);
    loop {
        let y = (&x + n / &x) >> 1u32;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// atan(1/n) via the Taylor series, all-integer inner loop.
fn atan_inv(n: i64) -> Fx {
    let mut xk = (BigInt::from(1) << BITS) / n;
    let n2 = n * n;
    let mut sum = BigInt::zero();
    let mut j: i64 = 1;
    let mut sign = 1i64;
    while !xk.is_zero() {
        sum += &xk / (j * sign);
        xk /= n2;
        j += 2;
        sign = -sign;
    }
    Fx(sum)
}

/// atanh(1/n) via the Taylor series.
fn atanh_inv(n: i64) -> Fx {
    let mut xk = (BigInt::from(1) << BITS) / n;
    let n2 = n * n;
    let mut sum = BigInt::zero();
    let mut j: i64 = 1;
    while !xk.is_zero() {
        sum += &xk / j;
        xk /= n2;
        j += 2;
    }
    Fx(sum)
}

pub fn pi() -> Fx {
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
    atan_inv(5).muli(16).sub(&atan_inv(239).muli(4))
}

pub fn ln2() -> Fx {
    atanh_inv(3).muli(2)
}

/// ln for positive values; argument reduced into [0.5, 1) then atanh series.
pub fn ln(x: &Fx, ln2v: &Fx) -> Fx {
    assert!(!x.is_negative() && !x.is_zero(), "bigfix: ln domain");
    let k = x.0.bits() as i64 - BITS as i64; // x = w * 2^k, w in [0.5, 1)
    let w = x.shl(-k);
    let t = w.sub(&Fx::one()).div(&w.add(&Fx::one()));
    let t2 = t.mul(&t);
    let mut term = t.clone();
    let mut sum = t;
    let mut j: i64 = 3;
    loop {
        term = term.mul(&t2);
        if term.is_zero() {
            break;
        }
        sum = sum.add(&term.divi(j));
        j += 2;
    }
    sum.muli(2).add(&ln2v.muli(k))
}

/// ln of a positive big integer.
pub fn ln_bigint(n: &BigInt, ln2v: &Fx) -> Fx {
    ln(&Fx(n << BITS), ln2v)
}

pub fn exp(x: &Fx, ln2v: &Fx) -> Fx {
    let k = (x.to_f64() / std::f64::consts::LN_2).round() as i64;
    let r = x.sub(&ln2v.muli(k));
    let mut term = Fx::one();
    let mut sum = Fx::one();
    let mut j: i64 = 1;
    loop {
        term = term.mul(&r).divi(j);
        if term.is_zero() {
            break;
        }
        sum = sum.add(&term);
        j += 1;
    }
    sum.shl(k)
}
