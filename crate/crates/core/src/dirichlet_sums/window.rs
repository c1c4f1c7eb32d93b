use num_complex::Complex64;

use super::{phase, DivisorTable, SumError};
use crate::summation::ComplexSum;

/// A dyadic range `N < n ≤ N'` with `N' ≤ 2N`, at height `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumWindow {
    n: u64,
    n_prime: u64,
    t: f64,
}

impl SumWindow {
    pub fn new(n: u64, n_prime: u64, t: f64) -> Result<Self, SumError> {
        if n < 1 || n_prime <= n || n_prime > 2 * n {
            return Err(SumError::InvalidWindow { n, n_prime });
        }
        if !t.is_finite() {
            return Err(SumError::Domain(format!("t = {t} is not finite")));
        }
        Ok(SumWindow { n, n_prime, t })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn n_prime(&self) -> u64 {
        self.n_prime
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn len(&self) -> u64 {
        self.n_prime - self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// `S(N, t) = Σ_{N < n ≤ N'} n^{it}`, compensated.
pub fn phase_sum(w: &SumWindow) -> Complex64 {
    let mut sum = ComplexSum::new();
    for n in (w.n + 1)..=w.n_prime {
        sum.add(phase(n, w.t));
    }
    sum.value()
}

/// Real weight `f(n)` paired with `d(n) n^{-it}` in [`partial_summation_window`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Weight {
    /// `f(n) = n^{-σ}`.
    NegSigma,
    /// `f(n) = n^{σ-1}`.
    SigmaMinusOne,
}

impl Weight {
    /// `-1 → n^{-σ}`, `+1 → n^{σ-1}`.
    pub fn from_sign(sign: i32) -> Option<Self> {
        match sign {
            -1 => Some(Weight::NegSigma),
            1 => Some(Weight::SigmaMinusOne),
            _ => None,
        }
    }

    fn eval(self, n: u64, sigma: f64) -> f64 {
        let x = n as f64;
        match self {
            Weight::NegSigma => x.powf(-sigma),
            Weight::SigmaMinusOne => x.powf(sigma - 1.0),
        }
    }
}

const AGREEMENT: f64 = 1e-8;

/// `Σ_{N<n≤N'} d(n) f(n) n^{-it}`, computed directly and by Abel summation
/// `S(N') f(N') + Σ_{N<n<N'} S(n) (f(n) − f(n+1))` with
/// `S(u) = Σ_{N<n≤u} d(n) n^{-it}`.
///
/// Returns the direct value. Disagreement beyond `1e-8` relative is an error.
pub fn partial_summation_window(
    w: &SumWindow,
    sigma: f64,
    table: &DivisorTable,
    weight: Weight,
) -> Result<Complex64, SumError> {
    if !(0.5..=1.0).contains(&sigma) {
        return Err(SumError::Domain(format!(
            "sigma = {sigma} outside [1/2, 1]"
        )));
    }
    table.require(w.n_prime)?;
    let mut direct = ComplexSum::new();
    let mut running = ComplexSum::new();
    let mut abel = ComplexSum::new();
    let mut f_here = weight.eval(w.n + 1, sigma);
    for n in (w.n + 1)..=w.n_prime {
        let term = phase(n, -w.t) * table.d(n as usize) as f64;
        direct.add(term * f_here);
        running.add(term);
        if n < w.n_prime {
            let f_next = weight.eval(n + 1, sigma);
            abel.add(running.value() * (f_here - f_next));
            f_here = f_next;
        }
    }
    abel.add(running.value() * f_here);
    let (direct, abel) = (direct.value(), abel.value());
    let scale = direct.norm().max(abel.norm()).max(f64::MIN_POSITIVE);
    if (direct - abel).norm() > AGREEMENT * scale.max(1.0) {
        return Err(SumError::Inconsistent { direct, abel });
    }
    Ok(direct)
}
