use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

const TABLE_LEN: usize = 2 * super::EvalSettings::MAX_BERNOULLI_ORDER + 4;

fn table() -> &'static Vec<BigRational> {
    static TABLE: OnceLock<Vec<BigRational>> = OnceLock::new();
    TABLE.get_or_init(|| akiyama_tanigawa(TABLE_LEN))
}

/// `B_0 .. B_{n-1}` with the `B_1 = +1/2` convention of the algorithm.
fn akiyama_tanigawa(n: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(n);
    let mut row: Vec<BigRational> = Vec::with_capacity(n);
    for m in 0..n {
        row.push(BigRational::new(BigInt::from(1), BigInt::from(m + 1)));
        for j in (1..=m).rev() {
            let diff = &row[j - 1] - &row[j];
            row[j - 1] = diff * BigRational::from_integer(BigInt::from(j));
        }
        out.push(row[0].clone());
    }
    out
}

/// Exact Bernoulli number `B_n` (with `B_1 = -1/2`).
pub fn bernoulli(n: usize) -> BigRational {
    if n == 1 {
        return BigRational::new(BigInt::from(-1), BigInt::from(2));
    }
    if n >= 3 && n % 2 == 1 {
        return BigRational::zero();
    }
    if n < TABLE_LEN {
        table()[n].clone()
    } else {
        akiyama_tanigawa(n + 1).pop().expect("non-empty")
    }
}

/// `B_{2k}/(2k)!` as `f64`, for `k = 1..=order+1`.
pub fn bernoulli_even_over_factorial(order: usize) -> &'static [f64] {
    static COEFFS: OnceLock<Vec<f64>> = OnceLock::new();
    let all = COEFFS.get_or_init(|| {
        let mut fact = BigInt::from(1);
        let mut out = Vec::new();
        for n in 1..TABLE_LEN {
            fact *= BigInt::from(n);
            if n % 2 == 0 {
                let c = bernoulli(n) / BigRational::from_integer(fact.clone());
                out.push(c.to_f64().unwrap_or(0.0));
            }
        }
        out
    });
    &all[..(order + 1).min(all.len())]
}
