//! The reference arithmetic against published constants.

mod common;

use common::reference::{bernoulli_numbers, chi_product, ln_gamma_dd, zeta};
use common::{Cdd, Dd};
use num_complex::Complex64;
use num_rational::BigRational;

fn close(a: Dd, hi: f64, lo: f64, tol: f64) -> bool {
    ((a - Dd { hi, lo }).to_f64()).abs() < tol
}

#[test]
fn elementary_functions() {
    // e = 2.718281828459045 + 1.4456468917292502e-16
    assert!(close(
        Dd::ONE.exp(),
        std::f64::consts::E,
        1.4456468917292502e-16,
        1e-30
    ));
    assert!(close(
        Dd::new(2.0).ln(),
        std::f64::consts::LN_2,
        2.3190468138462996e-17,
        1e-30
    ));
    let (s, c) = (common::dd::PI / Dd::new(6.0)).sin_cos();
    assert!((s - Dd::new(0.5)).to_f64().abs() < 1e-30);
    assert!((c - Dd::new(3.0).sqrt().mul_f64(0.5)).to_f64().abs() < 1e-30);
    let x = Dd::new(1234.5);
    let (s, c) = x.sin_cos();
    assert!(((s.sqr() + c.sqr()) - Dd::ONE).to_f64().abs() < 1e-30);
    assert!((x.ln().exp() - x).to_f64().abs() < 1e-27);
    let z = Cdd::new(Dd::new(-0.3), Dd::new(2.0));
    assert!((z.ln().exp() - z).norm().to_f64() < 1e-30);
}

#[test]
fn bernoulli_recurrence() {
    let b = bernoulli_numbers(12);
    assert_eq!(b[1], BigRational::new((-1).into(), 2.into()));
    assert_eq!(b[12], BigRational::new((-691).into(), 2730.into()));
    assert_eq!(b[11], BigRational::from_integer(0.into()));
}

#[test]
fn reference_values() {
    let z2 = zeta(Complex64::new(2.0, 0.0));
    assert!((z2.re - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-16);
    let zh = zeta(Complex64::new(0.5, 0.0));
    assert!((zh.re + 1.460_354_508_809_586_8).abs() < 1e-15);
    let g = ln_gamma_dd(Cdd::real(Dd::new(0.5))).exp();
    assert!((g.re - common::dd::PI.sqrt()).to_f64().abs() < 1e-29);
    assert!(g.im.to_f64().abs() < 1e-29);
    let g = ln_gamma_dd(Cdd::real(Dd::new(11.0))).exp();
    assert!((g.re - Dd::new(3628800.0)).to_f64().abs() < 1e-22);
    let x = chi_product(Complex64::new(0.5, 0.0));
    assert!((x - Complex64::new(1.0, 0.0)).norm() < 1e-16);
}

#[test]
fn reference_zeta_vanishes_at_first_zero() {
    // γ₁ = 14.134725141734693790457251983562…
    let gamma1 = Dd {
        hi: 14.134725141734695,
        lo: -8.407109157053214e-16,
    };
    let z = common::reference::zeta_dd(Cdd::new(Dd::new(0.5), gamma1));
    assert!(z.norm().to_f64() < 1e-28, "{:e}", z.norm().to_f64());
}
