use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

pub const PI: Dd = Dd {
    hi: std::f64::consts::PI,
    lo: 1.2246467991473532e-16,
};
pub const LN2: Dd = Dd {
    hi: std::f64::consts::LN_2,
    lo: 2.3190468138462996e-17,
};

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub fn new(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Dd::new(n as f64) / Dd::new(d as f64)
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    pub fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p, e + self.lo * b);
        Dd { hi, lo }
    }

    pub fn sqr(self) -> Self {
        self * self
    }

    pub fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return Dd::ZERO;
        }
        let y = Dd::new(self.hi.sqrt());
        // one Newton step: y + (x - y²)/(2y)
        y + (self - y.sqr()) / y.mul_f64(2.0)
    }

    pub fn exp(self) -> Self {
        let k = (self.hi / LN2.hi).round();
        let r = self - LN2.mul_f64(k);
        let scaled = r.mul_f64(1.0 / 16.0);
        let mut term = Dd::ONE;
        let mut sum = Dd::ONE;
        for i in 1..=24 {
            term = term * scaled / Dd::new(i as f64);
            sum = sum + term;
        }
        for _ in 0..4 {
            sum = sum.sqr();
        }
        let p = 2f64.powi(k as i32);
        Dd {
            hi: sum.hi * p,
            lo: sum.lo * p,
        }
    }

    pub fn ln(self) -> Self {
        assert!(self.hi > 0.0, "ln of non-positive");
        let mut y = Dd::new(self.hi.ln());
        for _ in 0..2 {
            y = y + self * (-y).exp() - Dd::ONE;
        }
        y
    }

    /// `(sin x, cos x)`.
    pub fn sin_cos(self) -> (Self, Self) {
        let half_pi = PI.mul_f64(0.5);
        let q = (self.hi / half_pi.hi).round();
        let r = self - half_pi.mul_f64(q);
        let r2 = r.sqr();
        let mut s = r;
        let mut term = r;
        for i in 1..=18 {
            term = -(term * r2) / Dd::new(((2 * i) * (2 * i + 1)) as f64);
            s = s + term;
        }
        let mut c = Dd::ONE;
        let mut term = Dd::ONE;
        for i in 1..=18 {
            term = -(term * r2) / Dd::new(((2 * i - 1) * (2 * i)) as f64);
            c = c + term;
        }
        match (q as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    pub fn atan2(y: Dd, x: Dd) -> Dd {
        let mut theta = Dd::new(y.hi.atan2(x.hi));
        for _ in 0..2 {
            let (s, c) = theta.sin_cos();
            // Newton on f(θ) = x sin θ − y cos θ
            let f = x * s - y * c;
            let df = x * c + y * s;
            theta = theta - f / df;
        }
        theta
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, b: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, b: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + Dd::new(q3)
    }
}

/// Complex double-double.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cdd {
    pub re: Dd,
    pub im: Dd,
}

impl Cdd {
    pub fn new(re: Dd, im: Dd) -> Self {
        Cdd { re, im }
    }

    pub fn from_c64(z: Complex64) -> Self {
        Cdd {
            re: Dd::new(z.re),
            im: Dd::new(z.im),
        }
    }

    pub fn real(x: Dd) -> Self {
        Cdd {
            re: x,
            im: Dd::ZERO,
        }
    }

    pub fn to_c64(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn scale(self, x: Dd) -> Self {
        Cdd {
            re: self.re * x,
            im: self.im * x,
        }
    }

    pub fn norm_sqr(self) -> Dd {
        self.re.sqr() + self.im.sqr()
    }

    pub fn norm(self) -> Dd {
        self.norm_sqr().sqrt()
    }

    pub fn conj(self) -> Self {
        Cdd {
            re: self.re,
            im: -self.im,
        }
    }

    pub fn inv(self) -> Self {
        let d = self.norm_sqr();
        Cdd {
            re: self.re / d,
            im: -self.im / d,
        }
    }

    pub fn exp(self) -> Self {
        let m = self.re.exp();
        let (s, c) = self.im.sin_cos();
        Cdd {
            re: m * c,
            im: m * s,
        }
    }

    pub fn ln(self) -> Self {
        Cdd {
            re: self.norm_sqr().ln().mul_f64(0.5),
            im: Dd::atan2(self.im, self.re),
        }
    }

    /// `sin z = sin x cosh y + i cos x sinh y`.
    pub fn sin(self) -> Self {
        let (s, c) = self.re.sin_cos();
        let ey = self.im.exp();
        let emy = Dd::ONE / ey;
        let cosh = (ey + emy).mul_f64(0.5);
        let sinh = (ey - emy).mul_f64(0.5);
        Cdd {
            re: s * cosh,
            im: c * sinh,
        }
    }
}

impl Add for Cdd {
    type Output = Cdd;
    fn add(self, b: Cdd) -> Cdd {
        Cdd {
            re: self.re + b.re,
            im: self.im + b.im,
        }
    }
}

impl Sub for Cdd {
    type Output = Cdd;
    fn sub(self, b: Cdd) -> Cdd {
        Cdd {
            re: self.re - b.re,
            im: self.im - b.im,
        }
    }
}

impl Neg for Cdd {
    type Output = Cdd;
    fn neg(self) -> Cdd {
        Cdd {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Mul for Cdd {
    type Output = Cdd;
    fn mul(self, b: Cdd) -> Cdd {
        Cdd {
            re: self.re * b.re - self.im * b.im,
            im: self.re * b.im + self.im * b.re,
        }
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for Cdd {
    type Output = Cdd;
    fn div(self, b: Cdd) -> Cdd {
        self * b.inv()
    }
}
