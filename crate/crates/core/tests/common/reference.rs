use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::dd::{Cdd, Dd, PI};

/// `B_0 ..= B_n` from the recurrence `Σ_{k<m+1} C(m+1, k) B_k = 0`.
pub fn bernoulli_numbers(n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = vec![BigRational::one()];
    for m in 1..=n {
        let mut acc = BigRational::zero();
        let mut binom = BigInt::one();
        for (k, bk) in b.iter().enumerate() {
            acc += BigRational::from_integer(binom.clone()) * bk;
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

pub fn dd_from_rational(r: &BigRational) -> Dd {
    let hi = r.to_f64().unwrap();
    let rest = r - BigRational::from_float(hi).unwrap();
    Dd {
        hi,
        lo: rest.to_f64().unwrap(),
    }
}

/// `B_{2k}/(2k)!` for `k = 1 ..= m`.
fn em_coefficients(m: usize) -> Vec<Dd> {
    let b = bernoulli_numbers(2 * m);
    let mut fact = BigInt::one();
    let mut out = Vec::new();
    for (n, bn) in b.iter().enumerate().take(2 * m + 1).skip(1) {
        fact *= BigInt::from(n);
        if n.is_multiple_of(2) {
            out.push(dd_from_rational(
                &(bn / BigRational::from_integer(fact.clone())),
            ));
        }
    }
    out
}

/// `n^{-s}`.
pub fn pow_neg(n: u64, s: Cdd) -> Cdd {
    let ln = Dd::new(n as f64).ln();
    Cdd::new(-(s.re * ln), -(s.im * ln)).exp()
}

/// ζ(s) by Euler–Maclaurin with `N = 2 max(50, ⌈2|t|⌉)` and 24 correction terms.
pub fn zeta(s: Complex64) -> Complex64 {
    zeta_dd(Cdd::from_c64(s)).to_c64()
}

pub fn zeta_dd(s: Cdd) -> Cdd {
    let t = s.im.to_f64().abs();
    let n = 2 * 50u64.max((2.0 * t).ceil() as u64);
    let order = 24;
    let mut sum = Cdd::real(Dd::ZERO);
    for k in 1..n {
        sum = sum + pow_neg(k, s);
    }
    let nd = Dd::new(n as f64);
    let n_s = pow_neg(n, s);
    let one = Cdd::real(Dd::ONE);
    sum = sum + n_s.scale(nd) / (s - one);
    sum = sum + n_s.scale(Dd::new(0.5));
    let coeffs = em_coefficients(order);
    let mut factor = (s * n_s).scale(Dd::ONE / nd);
    let inv_n2 = Dd::ONE / (nd * nd);
    for (k, c) in coeffs.iter().enumerate() {
        sum = sum + factor.scale(*c);
        let a = Cdd::real(Dd::new(2.0 * k as f64 + 1.0));
        factor = (factor * (s + a) * (s + a + one)).scale(inv_n2);
    }
    sum
}

/// log Γ(z) by Stirling's series after shifting `|z| ≥ 40`.
pub fn ln_gamma_dd(z: Cdd) -> Cdd {
    let mut w = z;
    let mut shift = Cdd::real(Dd::ZERO);
    let one = Cdd::real(Dd::ONE);
    while w.re.to_f64() < 1.0 || w.norm().to_f64() < 40.0 {
        shift = shift + w.ln();
        w = w + one;
    }
    let b = bernoulli_numbers(40);
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut pow = inv;
    let mut series = Cdd::real(Dd::ZERO);
    for k in 1..=20usize {
        let c = dd_from_rational(
            &(&b[2 * k] / BigRational::from_integer(BigInt::from(2 * k * (2 * k - 1)))),
        );
        series = series + pow.scale(c);
        pow = pow * inv2;
    }
    let half_ln_2pi = PI.mul_f64(2.0).ln().mul_f64(0.5);
    (w - Cdd::real(Dd::new(0.5))) * w.ln() - w + Cdd::real(half_ln_2pi) + series - shift
}

/// χ(s) = 2^s π^{s−1} Γ(1−s) sin(πs/2).
pub fn chi_product(s: Complex64) -> Complex64 {
    let s = Cdd::from_c64(s);
    let one = Cdd::real(Dd::ONE);
    let two_s = s.scale(Dd::new(2.0).ln()).exp();
    let pi_s = (s - one).scale(PI.ln()).exp();
    let gamma = ln_gamma_dd(one - s).exp();
    let sine = s.scale(PI.mul_f64(0.5)).sin();
    (two_s * pi_s * gamma * sine).to_c64()
}

/// `Γ(z)` at double-double precision.
pub fn gamma(z: Complex64) -> Complex64 {
    ln_gamma_dd(Cdd::from_c64(z)).exp().to_c64()
}
