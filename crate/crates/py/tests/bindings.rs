use num_complex::Complex64;

use cuspzeros_py::{boundary_zeros, eval_ek, predicted_counts, side_real};

#[test]
fn e6_at_i_vanishes() {
    let i = Complex64::new(0.0, 1.0);
    for m in ["lattice", "fourier"] {
        assert!(eval_ek(6, i, m, 1e-14).unwrap().norm() < 1e-10, "{m}");
    }
    assert!(eval_ek(6, i, "nope", 1e-14).is_err());
    // weight 4 cannot reach this accuracy within the lattice radius cap
    assert!(eval_ek(4, i, "lattice", 1e-14).is_err());
}

#[test]
fn bad_pairs_are_value_errors() {
    assert!(predicted_counts(21, 20).is_err());
    assert!(side_real(20, 40, 2.0).is_err());
}

#[test]
fn boundary_zeros_of_56_20() {
    let z = boundary_zeros(56, 20, 16).unwrap();
    assert_eq!((z.a, z.b), (3, 2));
    assert_eq!(z.arc.len(), 3);
    assert!(z.arc.iter().all(|t| (std::f64::consts::FRAC_PI_3..std::f64::consts::FRAC_PI_2).contains(t)));
    assert!(z.side.iter().all(|y| *y > 0.86));
}
