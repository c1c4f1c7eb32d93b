use num_complex::Complex64;
use num_integer::Roots;

use super::phase;
use crate::summation::ComplexSum;

/// Prefix sums `P(x) = Σ_{n ≤ x} n^{it}` for `x ≤ max_u`, from which
/// `Σ_{n≤u} d(n) n^{it} = 2 S₁(u,t) − S₂(u,t)²` is read off in `O(√u)` steps.
#[derive(Debug, Clone)]
pub struct HyperbolaSums {
    t: f64,
    prefix: Vec<Complex64>,
}

impl HyperbolaSums {
    pub fn new(max_u: u64, t: f64) -> Self {
        let mut prefix = Vec::with_capacity(max_u as usize + 1);
        let mut acc = ComplexSum::new();
        prefix.push(Complex64::new(0.0, 0.0));
        for n in 1..=max_u {
            acc.add(phase(n, t));
            prefix.push(acc.value());
        }
        HyperbolaSums { t, prefix }
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn max_u(&self) -> u64 {
        (self.prefix.len() - 1) as u64
    }

    /// `Σ_{n ≤ x} n^{it}`.
    pub fn prefix(&self, x: u64) -> Complex64 {
        self.prefix[x as usize]
    }

    /// `S₁(u,t) = Σ_{m ≤ √u} m^{it} Σ_{n ≤ u/m} n^{it}`.
    pub fn s1(&self, u: u64) -> Complex64 {
        assert!(u <= self.max_u(), "u beyond prepared prefix sums");
        let r = u.sqrt();
        let mut sum = ComplexSum::new();
        for m in 1..=r {
            sum.add(phase(m, self.t) * self.prefix(u / m));
        }
        sum.value()
    }

    /// `S₂(u,t) = Σ_{m ≤ √u} m^{it}`.
    pub fn s2(&self, u: u64) -> Complex64 {
        self.prefix(u.sqrt())
    }

    /// `Σ_{n≤u} d(n) n^{it}` via `2 S₁ − S₂²`.
    pub fn divisor_sum(&self, u: u64) -> Complex64 {
        let s2 = self.s2(u);
        self.s1(u) * 2.0 - s2 * s2
    }
}

/// `Σ_{n≤u} d(n) n^{it}` by the hyperbola method; needs no divisor table.
pub fn divisor_phase_sum_hyperbola(u: u64, t: f64) -> Complex64 {
    HyperbolaSums::new(u, t).divisor_sum(u)
}
