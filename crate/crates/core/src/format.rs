//! Text formatting shared by CSV/JSON emitters.

use num_bigint::BigInt;
use num_rational::BigRational;

/// `num/den` always, including integers (`1/1`).
pub fn rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn bigint(n: &BigInt) -> String {
    n.to_string()
}

/// Float with 15 significant digits, `%g`-style: plain notation for
/// moderate exponents, scientific otherwise, trailing zeros trimmed.
pub fn float(x: f64) -> String {
    const SIG: i32 = 15;
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".to_string()
        } else if x > 0.0 {
            "inf".to_string()
        } else {
            "-inf".to_string()
        };
    }
    let sci = format!("{:.*e}", (SIG - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    if (-5..SIG).contains(&exp) {
        let decimals = (SIG - 1 - exp).max(0) as usize;
        trim_zeros(format!("{:.*}", decimals, x))
    } else {
        format!("{}e{}", trim_zeros(mantissa.to_string()), exp)
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fifteen_significant_digits() {
        assert_eq!(
            float(std::f64::consts::PI.powi(2) / 6.0),
            "1.64493406684823"
        );
        assert_eq!(float(-0.5), "-0.5");
        assert_eq!(float(1e-12), "1e-12");
        assert_eq!(float(123456.0), "123456");
        assert_eq!(float(6.02214076e23), "6.02214076e23");
    }

    #[test]
    fn rationals_always_have_denominator() {
        let r = BigRational::new(10.into(), 12.into());
        assert_eq!(rational(&r), "5/6");
        assert_eq!(rational(&BigRational::from_integer(1.into())), "1/1");
    }
}
