//! Scalar abstraction for the numerics core.
//!
//! Everything numeric in this crate is generic over [`Real`], a small
//! extension of `num_traits::Float`. Production paths run on `f64`; the
//! verification paths re-run the same code on [`DoubleDouble`], an
//! unevaluated sum of two `f64` with roughly 31 significant digits. The
//! closed-form symbol-error sums cancel against `C/2` at high SNR, which
//! burns 15-20 digits at the corners of the validation grid; `f64` alone
//! cannot certify those points to the tolerances we target.

use num_traits::{Float, FromPrimitive, Num, NumCast, One, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::num::FpCategory;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Rem, Sub, SubAssign};
use std::sync::OnceLock;

/// Floating-point scalar usable by the analysis and special-function code.
///
/// The constant accessors return correctly-rounded values for the
/// implementing type (for [`DoubleDouble`] they carry the full two-limb
/// precision).
pub trait Real: Float + FromPrimitive + fmt::Debug + fmt::Display + 'static {
    fn pi() -> Self;
    fn two_pi() -> Self;
    fn half_pi() -> Self;
    fn ln_2() -> Self;
    fn euler_gamma() -> Self;
    fn sqrt_pi() -> Self;
    fn ln_sqrt_2pi() -> Self;

    /// Conversion from `f64` that cannot fail.
    fn of(x: f64) -> Self;
    /// Conversion from a small unsigned integer.
    fn of_usize(n: usize) -> Self;
    /// Lossy conversion back to `f64`.
    fn as_f64(self) -> f64;
    /// Build a constant from a two-limb decomposition (`hi + lo`).
    fn of_pair(hi: f64, lo: f64) -> Self {
        Self::of(hi) + Self::of(lo)
    }
}

macro_rules! impl_real_primitive {
    ($t:ty) => {
        impl Real for $t {
            fn pi() -> Self {
                std::f64::consts::PI as $t
            }
            fn two_pi() -> Self {
                (2.0 * std::f64::consts::PI) as $t
            }
            fn half_pi() -> Self {
                std::f64::consts::FRAC_PI_2 as $t
            }
            fn ln_2() -> Self {
                std::f64::consts::LN_2 as $t
            }
            fn euler_gamma() -> Self {
                0.577_215_664_901_532_9_f64 as $t
            }
            fn sqrt_pi() -> Self {
                1.772_453_850_905_516_f64 as $t
            }
            fn ln_sqrt_2pi() -> Self {
                0.918_938_533_204_672_8_f64 as $t
            }
            fn of(x: f64) -> Self {
                x as $t
            }
            fn of_usize(n: usize) -> Self {
                n as $t
            }
            fn as_f64(self) -> f64 {
                self as f64
            }
        }
    };
}

impl_real_primitive!(f32);
impl_real_primitive!(f64);

// ---------------------------------------------------------------------------
// DoubleDouble
// ---------------------------------------------------------------------------

/// Unevaluated sum of two `f64` ("double-double"), ~106 bits of mantissa.
///
/// The representation is kept normalized: `hi` is the `f64` nearest the
/// represented value and `|lo| <= ulp(hi)/2`. Arithmetic follows the
/// classic error-free transformations (Dekker/Knuth; the QD library's
/// accurate variants).
#[derive(Clone, Copy, Default)]
pub struct DoubleDouble {
    hi: f64,
    lo: f64,
}

pub type Dd = DoubleDouble;

#[inline(always)]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline(always)]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline(always)]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl DoubleDouble {
    pub const fn new(hi: f64, lo: f64) -> Self {
        Self { hi, lo }
    }

    #[inline(always)]
    pub fn from_f64(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn hi(self) -> f64 {
        self.hi
    }

    #[inline]
    pub fn lo(self) -> f64 {
        self.lo
    }

    #[inline(always)]
    fn renorm(hi: f64, lo: f64) -> Self {
        let (s, e) = quick_two_sum(hi, lo);
        Self { hi: s, lo: e }
    }

    /// Exact product of two `f64` as a double-double.
    #[inline(always)]
    fn prod(a: f64, b: f64) -> Self {
        let (p, e) = two_prod(a, b);
        Self { hi: p, lo: e }
    }

    /// Multiply by a power of two (exact).
    #[inline(always)]
    fn mul_pwr2(self, k: f64) -> Self {
        Self {
            hi: self.hi * k,
            lo: self.lo * k,
        }
    }

    #[inline]
    pub fn sqr(self) -> Self {
        let (p1, mut p2) = two_prod(self.hi, self.hi);
        p2 += 2.0 * self.hi * self.lo;
        p2 += self.lo * self.lo;
        Self::renorm(p1, p2)
    }

    fn ldexp(self, n: i32) -> Self {
        let f = (n as f64).exp2();
        Self {
            hi: self.hi * f,
            lo: self.lo * f,
        }
    }

    fn inv_factorials() -> &'static [Dd; 18] {
        static TABLE: OnceLock<[Dd; 18]> = OnceLock::new();
        TABLE.get_or_init(|| {
            let mut t = [Dd::from_f64(1.0); 18];
            let mut fact = Dd::from_f64(1.0);
            for (k, slot) in t.iter_mut().enumerate() {
                if k > 0 {
                    fact = fact * Dd::from_f64(k as f64);
                }
                *slot = Dd::from_f64(1.0) / fact;
            }
            t
        })
    }

    fn exp_impl(self) -> Self {
        // Range-reduce to r = (x - m ln 2)/512, Taylor-expand, square back up.
        if self.hi <= -709.0 {
            return Dd::from_f64(0.0);
        }
        if self.hi >= 709.0 {
            return Dd::from_f64(f64::INFINITY);
        }
        if self.hi.is_nan() {
            return self;
        }
        if self.hi == 0.0 {
            return Dd::from_f64(1.0);
        }
        let k = 512.0;
        let inv_k = 1.0 / k;
        let m = (self.hi / std::f64::consts::LN_2 + 0.5).floor();
        let r = (self - dd_consts::LN_2 * Dd::from_f64(m)).mul_pwr2(inv_k);
        let inv_fact = Self::inv_factorials();

        let mut p = r.sqr();
        let mut s = r + p.mul_pwr2(0.5);
        p = p * r;
        let mut t = p * inv_fact[3];
        let thresh = inv_k * f64::EPSILON * 1e-17;
        let mut i = 4;
        loop {
            s = s + t;
            p = p * r;
            t = p * inv_fact[i];
            i += 1;
            if t.hi.abs() <= thresh || i >= 18 {
                break;
            }
        }
        s = s + t;
        for _ in 0..9 {
            s = s.mul_pwr2(2.0) + s.sqr();
        }
        s = s + Dd::from_f64(1.0);
        s.ldexp(m as i32)
    }

    fn ln_impl(self) -> Self {
        if self.hi == 1.0 && self.lo == 0.0 {
            return Dd::from_f64(0.0);
        }
        if self.hi <= 0.0 {
            return if self.hi == 0.0 {
                Dd::from_f64(f64::NEG_INFINITY)
            } else {
                Dd::from_f64(f64::NAN)
            };
        }
        // Newton iteration on exp(x) = a from the f64 seed; two rounds.
        let mut x = Dd::from_f64(self.hi.ln());
        for _ in 0..2 {
            x = x + self * (-x).exp_impl() - Dd::from_f64(1.0);
        }
        x
    }

    fn sin_taylor(x: Dd) -> Dd {
        // |x| <= pi/4
        if x.hi == 0.0 {
            return Dd::from_f64(0.0);
        }
        let thresh = 0.5 * x.hi.abs() * f64::EPSILON * 1e-17;
        let neg_x2 = -x.sqr();
        let mut s = x;
        let mut p = x;
        let mut k = 1.0;
        loop {
            p = p * neg_x2;
            k += 2.0;
            p = p / Dd::from_f64((k - 1.0) * k);
            s = s + p;
            if p.hi.abs() <= thresh {
                break;
            }
        }
        s
    }

    fn cos_taylor(x: Dd) -> Dd {
        if x.hi == 0.0 {
            return Dd::from_f64(1.0);
        }
        let thresh = 0.5 * f64::EPSILON * 1e-17;
        let neg_x2 = -x.sqr();
        let mut s = Dd::from_f64(1.0) + neg_x2.mul_pwr2(0.5);
        let mut p = neg_x2.mul_pwr2(0.5);
        let mut k = 2.0;
        loop {
            p = p * neg_x2;
            k += 2.0;
            p = p / Dd::from_f64((k - 1.0) * k);
            s = s + p;
            if p.hi.abs() <= thresh {
                break;
            }
        }
        s
    }

    fn sin_cos_impl(self) -> (Dd, Dd) {
        if self.hi == 0.0 {
            return (Dd::from_f64(0.0), Dd::from_f64(1.0));
        }
        if !self.hi.is_finite() {
            return (Dd::from_f64(f64::NAN), Dd::from_f64(f64::NAN));
        }
        // Reduce modulo 2*pi, then modulo pi/2 into an octant.
        let z = (self.hi / (2.0 * std::f64::consts::PI)).round();
        let r = self - dd_consts::TWO_PI * Dd::from_f64(z);
        let q = (r.hi / std::f64::consts::FRAC_PI_2).round();
        let t = r - dd_consts::HALF_PI * Dd::from_f64(q);
        let (s, c) = (Self::sin_taylor(t), Self::cos_taylor(t));
        match q as i64 {
            0 => (s, c),
            1 => (c, -s),
            -1 => (-c, s),
            2 | -2 => (-s, -c),
            _ => (s, c), // |q| <= 2 after the reductions above
        }
    }

    fn atan_impl(self) -> Dd {
        if self.hi == 0.0 {
            return Dd::from_f64(0.0);
        }
        if self.hi.is_nan() {
            return self;
        }
        if self.hi.is_infinite() {
            let v = dd_consts::HALF_PI;
            return if self.hi > 0.0 { v } else { -v };
        }
        // Newton on sin(t) - x cos(t) = 0 from the f64 seed.
        let mut t = Dd::from_f64(self.hi.atan());
        for _ in 0..2 {
            let (s, c) = t.sin_cos_impl();
            t = t - (s - self * c) / (c + self * s);
        }
        t
    }

    fn floor_impl(self) -> Dd {
        let fh = self.hi.floor();
        if fh == self.hi {
            Dd::renorm(fh, self.lo.floor())
        } else {
            Dd { hi: fh, lo: 0.0 }
        }
    }

    fn ceil_impl(self) -> Dd {
        let ch = self.hi.ceil();
        if ch == self.hi {
            Dd::renorm(ch, self.lo.ceil())
        } else {
            Dd { hi: ch, lo: 0.0 }
        }
    }
}

impl PartialEq for DoubleDouble {
    fn eq(&self, other: &Self) -> bool {
        self.hi == other.hi && self.lo == other.lo
    }
}

impl PartialOrd for DoubleDouble {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}

impl Add for DoubleDouble {
    type Output = Self;
    #[inline(always)]
    fn add(self, rhs: Self) -> Self {
        let (s1, s2) = two_sum(self.hi, rhs.hi);
        let (t1, t2) = two_sum(self.lo, rhs.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (s1, s2) = quick_two_sum(s1, s2 + t2);
        Self { hi: s1, lo: s2 }
    }
}

impl Sub for DoubleDouble {
    type Output = Self;
    #[inline(always)]
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for DoubleDouble {
    type Output = Self;
    #[inline(always)]
    fn neg(self) -> Self {
        Self {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Mul for DoubleDouble {
    type Output = Self;
    #[inline(always)]
    fn mul(self, rhs: Self) -> Self {
        let (p1, mut p2) = two_prod(self.hi, rhs.hi);
        p2 += self.hi * rhs.lo + self.lo * rhs.hi;
        Self::renorm(p1, p2)
    }
}

impl Div for DoubleDouble {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        if rhs.hi == 0.0 {
            return Self::from_f64(self.hi / rhs.hi);
        }
        let q1 = self.hi / rhs.hi;
        let mut r = self - rhs * Dd::from_f64(q1);
        let q2 = r.hi / rhs.hi;
        r = r - rhs * Dd::from_f64(q2);
        let q3 = r.hi / rhs.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd { hi: s, lo: e } + Dd::from_f64(q3)
    }
}

impl Rem for DoubleDouble {
    type Output = Self;
    fn rem(self, rhs: Self) -> Self {
        let n = (self / rhs).floor_impl();
        self - rhs * n
    }
}

macro_rules! impl_assign {
    ($tr:ident, $m:ident, $op:tt) => {
        impl $tr for DoubleDouble {
            fn $m(&mut self, rhs: Self) {
                *self = *self $op rhs;
            }
        }
    };
}
impl_assign!(AddAssign, add_assign, +);
impl_assign!(SubAssign, sub_assign, -);
impl_assign!(MulAssign, mul_assign, *);
impl_assign!(DivAssign, div_assign, /);

impl Zero for DoubleDouble {
    fn zero() -> Self {
        Self::from_f64(0.0)
    }
    fn is_zero(&self) -> bool {
        self.hi == 0.0 && self.lo == 0.0
    }
}

impl One for DoubleDouble {
    fn one() -> Self {
        Self::from_f64(1.0)
    }
}

/// Error type for `DoubleDouble::from_str_radix`.
#[derive(Debug)]
pub struct ParseDdError;

impl Num for DoubleDouble {
    type FromStrRadixErr = ParseDdError;

    fn from_str_radix(s: &str, radix: u32) -> Result<Self, ParseDdError> {
        if radix != 10 {
            return Err(ParseDdError);
        }
        let s = s.trim();
        let (sign, body) = match s.strip_prefix('-') {
            Some(rest) => (-1.0, rest),
            None => (1.0, s.strip_prefix('+').unwrap_or(s)),
        };
        let (mant, exp10) = match body.find(['e', 'E']) {
            Some(i) => {
                let e: i32 = body[i + 1..].parse().map_err(|_| ParseDdError)?;
                (&body[..i], e)
            }
            None => (body, 0),
        };
        let mut value = Dd::from_f64(0.0);
        let mut frac_digits: i32 = 0;
        let mut seen_dot = false;
        let mut seen_digit = false;
        for ch in mant.chars() {
            match ch {
                '0'..='9' => {
                    seen_digit = true;
                    value = value * Dd::from_f64(10.0)
                        + Dd::from_f64((ch as u8 - b'0') as f64);
                    if seen_dot {
                        frac_digits += 1;
                    }
                }
                '.' if !seen_dot => seen_dot = true,
                _ => return Err(ParseDdError),
            }
        }
        if !seen_digit {
            return Err(ParseDdError);
        }
        let e = exp10 - frac_digits;
        let ten = Dd::from_f64(10.0);
        let scale = Float::powi(ten, e.unsigned_abs() as i32);
        value = if e >= 0 { value * scale } else { value / scale };
        Ok(value * Dd::from_f64(sign))
    }
}

impl ToPrimitive for DoubleDouble {
    fn to_i64(&self) -> Option<i64> {
        let f = self.floor_impl();
        if f.hi.abs() < 9.2e18 {
            Some(f.hi as i64 + f.lo as i64)
        } else {
            None
        }
    }
    fn to_u64(&self) -> Option<u64> {
        self.to_i64().and_then(|v| u64::try_from(v).ok())
    }
    fn to_f64(&self) -> Option<f64> {
        Some(self.hi + self.lo)
    }
    fn to_f32(&self) -> Option<f32> {
        Some((self.hi + self.lo) as f32)
    }
}

impl FromPrimitive for DoubleDouble {
    fn from_i64(n: i64) -> Option<Self> {
        let hi = n as f64;
        let r = n as i128 - hi as i128;
        Some(Dd::renorm(hi, r as f64))
    }
    fn from_u64(n: u64) -> Option<Self> {
        let hi = n as f64;
        let r = n as i128 - hi as i128;
        Some(Dd::renorm(hi, r as f64))
    }
    fn from_f64(n: f64) -> Option<Self> {
        Some(Dd::from_f64(n))
    }
    fn from_f32(n: f32) -> Option<Self> {
        Some(Dd::from_f64(n as f64))
    }
}

impl NumCast for DoubleDouble {
    fn from<T: ToPrimitive>(n: T) -> Option<Self> {
        n.to_f64().map(Dd::from_f64)
    }
}

impl Float for DoubleDouble {
    fn nan() -> Self {
        Dd::from_f64(f64::NAN)
    }
    fn infinity() -> Self {
        Dd::from_f64(f64::INFINITY)
    }
    fn neg_infinity() -> Self {
        Dd::from_f64(f64::NEG_INFINITY)
    }
    fn neg_zero() -> Self {
        Dd::from_f64(-0.0)
    }
    fn min_value() -> Self {
        Dd::new(-f64::MAX, -f64::MAX * f64::EPSILON / 2.0)
    }
    fn min_positive_value() -> Self {
        Dd::from_f64(f64::MIN_POSITIVE)
    }
    fn max_value() -> Self {
        Dd::new(f64::MAX, f64::MAX * f64::EPSILON / 2.0)
    }
    fn epsilon() -> Self {
        // 2^-104
        Dd::from_f64(4.930_380_657_631_324e-32)
    }
    fn is_nan(self) -> bool {
        self.hi.is_nan() || self.lo.is_nan()
    }
    fn is_infinite(self) -> bool {
        self.hi.is_infinite()
    }
    fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }
    fn is_normal(self) -> bool {
        self.hi.is_normal()
    }
    fn classify(self) -> FpCategory {
        self.hi.classify()
    }
    fn floor(self) -> Self {
        self.floor_impl()
    }
    fn ceil(self) -> Self {
        self.ceil_impl()
    }
    fn round(self) -> Self {
        let f = (self + Dd::from_f64(0.5)).floor_impl();
        if self.hi < 0.0 && f - self == Dd::from_f64(0.5) {
            f - Dd::from_f64(1.0)
        } else {
            f
        }
    }
    fn trunc(self) -> Self {
        if self.hi >= 0.0 {
            self.floor_impl()
        } else {
            self.ceil_impl()
        }
    }
    fn fract(self) -> Self {
        self - self.trunc()
    }
    fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }
    fn signum(self) -> Self {
        if self.is_nan() {
            Self::nan()
        } else if self.hi > 0.0 || (self.hi == 0.0 && self.lo > 0.0) {
            Dd::from_f64(1.0)
        } else if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            Dd::from_f64(-1.0)
        } else {
            Dd::from_f64(self.hi.signum())
        }
    }
    fn is_sign_positive(self) -> bool {
        self.hi.is_sign_positive()
    }
    fn is_sign_negative(self) -> bool {
        self.hi.is_sign_negative()
    }
    fn mul_add(self, a: Self, b: Self) -> Self {
        self * a + b
    }
    fn recip(self) -> Self {
        Dd::from_f64(1.0) / self
    }
    fn powi(self, n: i32) -> Self {
        if n == 0 {
            return Dd::from_f64(1.0);
        }
        let mut base = if n < 0 { self.recip() } else { self };
        let mut e = n.unsigned_abs();
        let mut acc = Dd::from_f64(1.0);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base.sqr();
            e >>= 1;
        }
        acc
    }
    fn powf(self, n: Self) -> Self {
        if n.is_zero() {
            return Dd::from_f64(1.0);
        }
        if self.hi == 0.0 {
            return if n.hi > 0.0 {
                Dd::from_f64(0.0)
            } else {
                Self::infinity()
            };
        }
        let ni = n.hi.round();
        if ni == n.hi && n.lo == 0.0 && ni.abs() < 2e9 {
            return Float::powi(self, ni as i32);
        }
        (n * self.ln_impl()).exp_impl()
    }
    fn sqrt(self) -> Self {
        if self.is_zero() {
            return self;
        }
        if self.hi < 0.0 {
            return Self::nan();
        }
        let x = 1.0 / self.hi.sqrt();
        let ax = self.hi * x;
        let d = (self - Dd::prod(ax, ax)).hi;
        Dd::renorm(ax, d * (x * 0.5))
    }
    fn exp(self) -> Self {
        self.exp_impl()
    }
    fn exp2(self) -> Self {
        (self * dd_consts::LN_2).exp_impl()
    }
    fn ln(self) -> Self {
        self.ln_impl()
    }
    fn log(self, base: Self) -> Self {
        self.ln_impl() / base.ln_impl()
    }
    fn log2(self) -> Self {
        self.ln_impl() / dd_consts::LN_2
    }
    fn log10(self) -> Self {
        self.ln_impl() / dd_consts::LN_10
    }
    fn max(self, other: Self) -> Self {
        if self.is_nan() {
            other
        } else if other.is_nan() || self >= other {
            self
        } else {
            other
        }
    }
    fn min(self, other: Self) -> Self {
        if self.is_nan() {
            other
        } else if other.is_nan() || self <= other {
            self
        } else {
            other
        }
    }
    fn abs_sub(self, other: Self) -> Self {
        if self > other {
            self - other
        } else {
            Dd::from_f64(0.0)
        }
    }
    fn cbrt(self) -> Self {
        if self.is_zero() {
            return self;
        }
        let neg = self.hi < 0.0;
        let a = Float::abs(self);
        let mut y = Dd::from_f64(a.hi.cbrt());
        for _ in 0..2 {
            let y2 = y.sqr();
            y = y - (y * y2 - a) / (y2.mul_pwr2(3.0));
        }
        if neg {
            -y
        } else {
            y
        }
    }
    fn hypot(self, other: Self) -> Self {
        let a = Float::abs(self);
        let b = Float::abs(other);
        let (big, small) = if a > b { (a, b) } else { (b, a) };
        if big.is_zero() {
            return big;
        }
        let r = small / big;
        big * Float::sqrt(Dd::from_f64(1.0) + r.sqr())
    }
    fn sin(self) -> Self {
        self.sin_cos_impl().0
    }
    fn cos(self) -> Self {
        self.sin_cos_impl().1
    }
    fn tan(self) -> Self {
        let (s, c) = self.sin_cos_impl();
        s / c
    }
    fn asin(self) -> Self {
        if Float::abs(self) > Dd::from_f64(1.0) {
            return Self::nan();
        }
        let c = Float::sqrt(Dd::from_f64(1.0) - self.sqr());
        Float::atan2(self, c)
    }
    fn acos(self) -> Self {
        if Float::abs(self) > Dd::from_f64(1.0) {
            return Self::nan();
        }
        let s = Float::sqrt(Dd::from_f64(1.0) - self.sqr());
        Float::atan2(s, self)
    }
    fn atan(self) -> Self {
        self.atan_impl()
    }
    fn atan2(self, other: Self) -> Self {
        let y = self;
        let x = other;
        if x.hi == 0.0 && x.lo == 0.0 {
            return if y.hi > 0.0 {
                dd_consts::HALF_PI
            } else if y.hi < 0.0 {
                -dd_consts::HALF_PI
            } else {
                Dd::from_f64(0.0)
            };
        }
        let base = (y / x).atan_impl();
        if x.hi > 0.0 {
            base
        } else if y.hi >= 0.0 {
            base + dd_consts::PI
        } else {
            base - dd_consts::PI
        }
    }
    fn sin_cos(self) -> (Self, Self) {
        self.sin_cos_impl()
    }
    fn exp_m1(self) -> Self {
        if self.hi.abs() < 0.25 {
            // direct series to avoid the cancellation in exp(x) - 1
            let mut term = self;
            let mut sum = self;
            let mut k = 1.0;
            loop {
                k += 1.0;
                term = term * self / Dd::from_f64(k);
                sum = sum + term;
                if term.hi.abs() <= 1e-40 {
                    break;
                }
            }
            sum
        } else {
            self.exp_impl() - Dd::from_f64(1.0)
        }
    }
    fn ln_1p(self) -> Self {
        if self.hi.abs() < 0.25 {
            // Newton on exp_m1(y) = x
            let mut y = Dd::from_f64(self.hi.ln_1p());
            for _ in 0..2 {
                let e = Float::exp_m1(y);
                y = y - (e - self) / (e + Dd::from_f64(1.0));
            }
            y
        } else {
            (Dd::from_f64(1.0) + self).ln_impl()
        }
    }
    fn sinh(self) -> Self {
        if self.hi.abs() < 0.05 {
            let x2 = self.sqr();
            let mut term = self;
            let mut sum = self;
            let mut k = 1.0;
            loop {
                term = term * x2 / Dd::from_f64((k + 1.0) * (k + 2.0));
                sum = sum + term;
                k += 2.0;
                if term.hi.abs() <= 1e-40 {
                    break;
                }
            }
            sum
        } else {
            let e = self.exp_impl();
            (e - e.recip()).mul_pwr2(0.5)
        }
    }
    fn cosh(self) -> Self {
        let e = self.exp_impl();
        (e + e.recip()).mul_pwr2(0.5)
    }
    fn tanh(self) -> Self {
        if self.hi.abs() > 40.0 {
            return Dd::from_f64(self.hi.signum());
        }
        let s = Float::sinh(self);
        let c = Float::sqrt(Dd::from_f64(1.0) + s.sqr());
        s / c
    }
    fn asinh(self) -> Self {
        (self + Float::sqrt(self.sqr() + Dd::from_f64(1.0))).ln_impl()
    }
    fn acosh(self) -> Self {
        if self < Dd::from_f64(1.0) {
            return Self::nan();
        }
        (self + Float::sqrt(self.sqr() - Dd::from_f64(1.0))).ln_impl()
    }
    fn atanh(self) -> Self {
        if Float::abs(self) >= Dd::from_f64(1.0) {
            return Self::nan();
        }
        ((Dd::from_f64(1.0) + self) / (Dd::from_f64(1.0) - self))
            .ln_impl()
            .mul_pwr2(0.5)
    }
    fn integer_decode(self) -> (u64, i16, i8) {
        self.hi.integer_decode()
    }
    fn to_degrees(self) -> Self {
        self * Dd::from_f64(180.0) / dd_consts::PI
    }
    fn to_radians(self) -> Self {
        self * dd_consts::PI / Dd::from_f64(180.0)
    }
}

/// Two-limb constants (generated with 60-digit arithmetic).
mod dd_consts {
    use super::Dd;
    pub const PI: Dd = Dd::new(3.141592653589793, 1.2246467991473532e-16);
    pub const TWO_PI: Dd = Dd::new(6.283185307179586, 2.4492935982947064e-16);
    pub const HALF_PI: Dd = Dd::new(1.5707963267948966, 6.123233995736766e-17);
    pub const LN_2: Dd = Dd::new(0.6931471805599453, 2.3190468138462996e-17);
    pub const LN_10: Dd = Dd::new(2.302585092994046, -2.1707562233822494e-16);
    pub const EULER_GAMMA: Dd = Dd::new(0.5772156649015329, -4.942915152430645e-18);
    pub const SQRT_PI: Dd = Dd::new(1.772453850905516, -7.666586499825799e-17);
    pub const LN_SQRT_2PI: Dd = Dd::new(0.9189385332046728, -3.8782941580672414e-17);
}

impl Real for DoubleDouble {
    fn pi() -> Self {
        dd_consts::PI
    }
    fn two_pi() -> Self {
        dd_consts::TWO_PI
    }
    fn half_pi() -> Self {
        dd_consts::HALF_PI
    }
    fn ln_2() -> Self {
        dd_consts::LN_2
    }
    fn euler_gamma() -> Self {
        dd_consts::EULER_GAMMA
    }
    fn sqrt_pi() -> Self {
        dd_consts::SQRT_PI
    }
    fn ln_sqrt_2pi() -> Self {
        dd_consts::LN_SQRT_2PI
    }
    fn of(x: f64) -> Self {
        Dd::from_f64(x)
    }
    fn of_usize(n: usize) -> Self {
        <Dd as FromPrimitive>::from_u64(n as u64).unwrap()
    }
    fn as_f64(self) -> f64 {
        self.hi + self.lo
    }
    fn of_pair(hi: f64, lo: f64) -> Self {
        Dd::renorm(hi, lo)
    }
}

impl fmt::Debug for DoubleDouble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dd({:e} + {:e})", self.hi, self.lo)
    }
}

impl fmt::Display for DoubleDouble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.is_finite() || self.is_zero() {
            return write!(f, "{}", self.hi);
        }
        let neg = self.hi < 0.0;
        let mut x = Float::abs(*self);
        let mut e10 = (self.hi.abs().log10()).floor() as i32;
        let ten = Dd::from_f64(10.0);
        x = x / Float::powi(ten, e10);
        if x >= ten {
            x = x / ten;
            e10 += 1;
        } else if x < Dd::from_f64(1.0) {
            x = x * ten;
            e10 -= 1;
        }
        let mut digits = String::new();
        for i in 0..33 {
            let d = x.floor_impl().hi as i32;
            let d = d.clamp(0, 9);
            digits.push(char::from(b'0' + d as u8));
            if i == 0 {
                digits.push('.');
            }
            x = (x - Dd::from_f64(d as f64)) * ten;
        }
        write!(f, "{}{digits}e{e10}", if neg { "-" } else { "" })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dd(s: &str) -> Dd {
        <Dd as Num>::from_str_radix(s, 10).unwrap()
    }

    fn rel_err(a: Dd, b: Dd) -> f64 {
        ((a - b) / b).as_f64().abs()
    }

    #[test]
    fn arithmetic_error_free() {
        let a = Dd::from_f64(1.0) / Dd::from_f64(3.0);
        let b = a * Dd::from_f64(3.0);
        assert!((b - Dd::from_f64(1.0)).as_f64().abs() < 1e-31);

        // (1 + 1e-25) - 1 recovers the tiny part exactly-ish
        let x = Dd::from_f64(1.0) + Dd::from_f64(1e-25);
        let y = x - Dd::from_f64(1.0);
        assert!((y.as_f64() - 1e-25).abs() < 1e-41);
    }

    #[test]
    fn sqrt_exp_ln_against_references() {
        // reference limbs generated at 60-digit precision
        let e = Dd::from_f64(1.0).exp();
        let e_ref = Dd::new(2.718281828459045, 1.4456468917292502e-16);
        assert!(rel_err(e, e_ref) < 1e-31, "exp(1) = {e}");

        let l2 = Dd::from_f64(2.0).ln();
        assert!(rel_err(l2, dd_consts::LN_2) < 1e-31, "ln(2) = {l2}");

        let s2 = Dd::from_f64(2.0).sqrt();
        let s2_ref = dd("1.41421356237309504880168872420969807857");
        assert!(rel_err(s2, s2_ref) < 1e-31, "sqrt(2) = {s2}");

        // round trips on a log-spaced grid
        let mut x = 1.3e-8;
        while x < 1e9 {
            let v = Dd::from_f64(x);
            assert!(rel_err(v.ln().exp(), v) < 5e-31, "exp(ln({x}))");
            assert!(rel_err(v.sqrt().sqr(), v) < 5e-31, "sqrt({x})^2");
            x *= 137.0;
        }
    }

    #[test]
    fn exp_extremes() {
        assert!(Dd::from_f64(-800.0).exp().is_zero());
        assert!(Dd::from_f64(800.0).exp().is_infinite());
        let big = Dd::from_f64(700.0).exp();
        assert!((big.as_f64().ln() - 700.0).abs() < 1e-12);
    }

    #[test]
    fn trig_identities() {
        let mut x = -3.0f64;
        while x < 3.0 {
            let v = Dd::from_f64(x);
            let (s, c) = v.sin_cos();
            let one = s.sqr() + c.sqr();
            assert!(
                (one - Dd::from_f64(1.0)).as_f64().abs() < 1e-30,
                "sin2+cos2 at {x}"
            );
            x += 0.37;
        }
        // atan round trip
        let mut t = -20.0;
        while t < 20.0 {
            let v = Dd::from_f64(t);
            let a = v.atan();
            assert!(((a.tan() - v) / (Dd::from_f64(1.0) + v.sqr())).as_f64().abs() < 1e-30);
            t += 1.7;
        }
    }

    #[test]
    fn parse_and_display() {
        let x = dd("3.14159265358979323846264338327950288");
        assert!(rel_err(x, dd_consts::PI) < 1e-32);
        let y = dd("-1.25e-3");
        assert_eq!(y.as_f64(), -1.25e-3);
        let shown = format!("{}", dd_consts::PI);
        assert!(shown.starts_with("3.14159265358979323846264338327950"), "{shown}");
    }

    #[test]
    fn powi_powf() {
        let x = Dd::from_f64(1.7);
        assert!(rel_err(Float::powi(x, 10), dd("201.59939004489994733640362865")) < 1e-29);
        let p = Float::powf(x, Dd::from_f64(0.5));
        assert!(rel_err(p, x.sqrt()) < 1e-31);
    }

    #[test]
    fn floor_round_and_casts() {
        assert_eq!(Float::floor(dd("2.99999999999999999999")).as_f64(), 2.0);
        assert_eq!(Float::ceil(dd("2.0000000000000000001")).as_f64(), 3.0);
        assert_eq!(
            <Dd as FromPrimitive>::from_u64(u64::MAX).unwrap().to_f64().unwrap(),
            u64::MAX as f64
        );
        let n = <Dd as FromPrimitive>::from_u64((1 << 60) + 1).unwrap();
        assert_eq!(n.to_i64(), Some((1 << 60) + 1));
    }
}
