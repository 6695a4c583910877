//! Dense complex-Hermitian eigensolver.
//!
//! Cyclic Jacobi rotations: each (p, q) pivot is phase-rotated to be real,
//! then annihilated by a real Givens rotation. Deterministic sweep order,
//! eigenvalues sorted ascending, degenerate subspaces left in the
//! orthonormal frame the sweeps produce. Plenty at the d ≤ 32 sizes this
//! crate uses.

use num_complex::Complex;

use crate::error::Error;
use crate::float::{lit, Float};
use crate::fock::{Operator, QuantumState};
use crate::Result;

const MAX_SWEEPS: usize = 64;

/// Ascending eigenvalues with orthonormal eigenvectors (`vectors[i]` pairs
/// with `values[i]`).
#[derive(Clone, Debug)]
pub struct Eigensystem<T: Float> {
    pub values: Vec<T>,
    pub vectors: Vec<Vec<Complex<T>>>,
}

impl<T: Float> Eigensystem<T> {
    /// Eigenvector `i` as a state on `op`'s basis.
    pub fn state(&self, op: &Operator<T>, i: usize) -> QuantumState<T> {
        QuantumState::normalized(op.basis(), self.vectors[i].clone())
            .expect("eigenvector normalizable")
    }
}

/// Hermiticity gate used before diagonalizing: absolute defect 1e-12,
/// loosened proportionally for matrices with large entries.
pub fn hermitian_tol<T: Float>(op: &Operator<T>) -> T {
    lit::<T>(1e-12) * T::one().max(op.max_abs())
}

/// Eigendecomposition of a Hermitian operator.
///
/// Rejects inputs whose hermiticity defect exceeds [`hermitian_tol`],
/// reporting the defect. Residuals `‖Mv - λv‖` come out near machine
/// precision, far inside the 1e-10·‖M‖ contract.
pub fn hermitian_eigensolve<T: Float>(op: &Operator<T>) -> Result<Eigensystem<T>> {
    let defect = op.hermiticity_defect();
    if defect > hermitian_tol(op) {
        return Err(Error::NotHermitian { defect: defect.to_f64().unwrap_or(f64::NAN) });
    }
    let d = op.dim();
    // Iterate on the Hermitian average so roundoff in the input cannot leak
    // into the rotations.
    let mut a: Vec<Complex<T>> = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            a.push((op.get(i, j) + op.get(j, i).conj()).scale_by(lit(0.5)));
        }
    }
    let mut v = vec![Complex::new(T::zero(), T::zero()); d * d];
    for i in 0..d {
        v[i * d + i] = Complex::new(T::one(), T::zero());
    }

    let scale = off_norm(&a, d) + diag_norm(&a, d);
    if scale > T::zero() {
        let tol = T::epsilon() * scale;
        let mut converged = false;
        for _ in 0..MAX_SWEEPS {
            if off_norm(&a, d) <= tol {
                converged = true;
                break;
            }
            for p in 0..d.saturating_sub(1) {
                for q in (p + 1)..d {
                    rotate(&mut a, &mut v, d, p, q);
                }
            }
        }
        if !converged && off_norm(&a, d) > tol {
            return Err(Error::NoConvergence(MAX_SWEEPS));
        }
    }

    let diag: Vec<T> = (0..d).map(|i| a[i * d + i].re).collect();
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).expect("finite eigenvalues"));

    let values = order.iter().map(|&i| diag[i]).collect();
    let vectors = order
        .iter()
        .map(|&j| (0..d).map(|i| v[i * d + j]).collect())
        .collect();
    Ok(Eigensystem { values, vectors })
}

fn diag_norm<T: Float>(a: &[Complex<T>], d: usize) -> T {
    (0..d).fold(T::zero(), |s, i| s + a[i * d + i].norm_sqr()).sqrt()
}

fn off_norm<T: Float>(a: &[Complex<T>], d: usize) -> T {
    let mut s = T::zero();
    for p in 0..d {
        for q in (p + 1)..d {
            s += a[p * d + q].norm_sqr();
        }
    }
    (s + s).sqrt()
}

/// Annihilate a[p][q] with the unitary U = D·R, where D puts the pivot
/// phase on column q and R is the classic real Jacobi rotation:
///
///   U[p][p] = c        U[p][q] = s
///   U[q][p] = -s·w̄     U[q][q] = c·w̄      (w = a[p][q] / |a[p][q]|)
///
/// Updates A ← U†·A·U and accumulates V ← V·U.
fn rotate<T: Float>(a: &mut [Complex<T>], v: &mut [Complex<T>], d: usize, p: usize, q: usize) {
    let apq = a[p * d + q];
    let abs_apq = apq.norm();
    if abs_apq == T::zero() {
        return;
    }
    let w = apq.unscale(abs_apq);
    let app = a[p * d + p].re;
    let aqq = a[q * d + q].re;
    let tau = (aqq - app) / (abs_apq + abs_apq);
    let root = (T::one() + tau * tau).sqrt();
    let t = if tau >= T::zero() { (tau + root).recip() } else { (tau - root).recip() };
    let c = (T::one() + t * t).sqrt().recip();
    let s = t * c;

    let uqp = w.conj().scale_by(-s); // U[q][p]
    let uqq = w.conj().scale_by(c); // U[q][q]

    // Columns of A and V (right multiplication by U).
    for r in 0..d {
        let arp = a[r * d + p];
        let arq = a[r * d + q];
        a[r * d + p] = arp.scale_by(c) + arq * uqp;
        a[r * d + q] = arp.scale_by(s) + arq * uqq;

        let vrp = v[r * d + p];
        let vrq = v[r * d + q];
        v[r * d + p] = vrp.scale_by(c) + vrq * uqp;
        v[r * d + q] = vrp.scale_by(s) + vrq * uqq;
    }
    // Rows of A (left multiplication by U†).
    for col in 0..d {
        let apc = a[p * d + col];
        let aqc = a[q * d + col];
        a[p * d + col] = apc.scale_by(c) + aqc * uqp.conj();
        a[q * d + col] = apc.scale_by(s) + aqc * uqq.conj();
    }
    // Annihilated pivot and rotated diagonal, set exactly.
    a[p * d + q] = Complex::new(T::zero(), T::zero());
    a[q * d + p] = Complex::new(T::zero(), T::zero());
    a[p * d + p] = Complex::new(app - t * abs_apq, T::zero());
    a[q * d + q] = Complex::new(aqq + t * abs_apq, T::zero());
}

trait ScaleBy<T: Float> {
    fn scale_by(self, t: T) -> Self;
    fn unscale(self, t: T) -> Self;
}

impl<T: Float> ScaleBy<T> for Complex<T> {
    fn scale_by(self, t: T) -> Self {
        Complex::new(self.re * t, self.im * t)
    }
    fn unscale(self, t: T) -> Self {
        Complex::new(self.re / t, self.im / t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{make_register, Basis};
    use num_complex::Complex64;
    use std::sync::Arc;

    fn basis_of(dim: usize) -> Arc<Basis> {
        // Anonymous register just to host a d-dimensional matrix.
        let k = dim.next_power_of_two().trailing_zeros();
        let labels: Vec<String> = (0..k).map(|i| format!("m{i}")).collect();
        let reg = make_register(&labels, None).unwrap();
        let full = reg.full_basis();
        assert!(full.len() >= dim);
        Arc::new(Basis::from_states(reg, full.states()[..dim].to_vec()))
    }

    fn op_from(rows: &[&[Complex64]]) -> Operator<f64> {
        let d = rows.len();
        let basis = basis_of(d);
        let mut op = Operator::zeros(&basis);
        for (i, row) in rows.iter().enumerate() {
            for (j, z) in row.iter().enumerate() {
                op.set(i, j, *z);
            }
        }
        op
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn pauli_x_spectrum() {
        let op = op_from(&[&[c(0., 0.), c(1., 0.)], &[c(1., 0.), c(0., 0.)]]);
        let eig = hermitian_eigensolve(&op).unwrap();
        assert!((eig.values[0] + 1.0).abs() < 1e-14);
        assert!((eig.values[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn identity_spectrum() {
        let basis = basis_of(4);
        let op = Operator::<f64>::identity(&basis);
        let eig = hermitian_eigensolve(&op).unwrap();
        for v in eig.values {
            assert!((v - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn complex_hermitian_2x2() {
        // [[1, i], [-i, 1]] has eigenvalues 0 and 2.
        let op = op_from(&[&[c(1., 0.), c(0., 1.)], &[c(0., -1.), c(1., 0.)]]);
        let eig = hermitian_eigensolve(&op).unwrap();
        assert!((eig.values[0] - 0.0).abs() < 1e-14);
        assert!((eig.values[1] - 2.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_non_hermitian() {
        let op = op_from(&[&[c(0., 0.), c(1., 0.)], &[c(0.5, 0.), c(0., 0.)]]);
        match hermitian_eigensolve(&op) {
            Err(Error::NotHermitian { defect }) => assert!((defect - 0.5).abs() < 1e-12),
            other => panic!("expected NotHermitian, got {other:?}"),
        }
    }

    #[test]
    fn random_hermitian_residuals_up_to_32() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for &d in &[2usize, 3, 5, 8, 13, 24, 32] {
            let basis = basis_of(d);
            let mut op = Operator::<f64>::zeros(&basis);
            for i in 0..d {
                op.set(i, i, c(rng.gen_range(-5.0..5.0), 0.0));
                for j in (i + 1)..d {
                    let z = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                    op.set(i, j, z);
                    op.set(j, i, z.conj());
                }
            }
            let eig = hermitian_eigensolve(&op).unwrap();
            let scale = op.max_abs();
            // residual ‖Mv − λv‖ ≤ 1e-10·‖M‖ and ascending order
            for k in 0..d {
                let v = &eig.vectors[k];
                let mut res = 0.0f64;
                for i in 0..d {
                    let mut mv = c(0., 0.);
                    for j in 0..d {
                        mv += op.get(i, j) * v[j];
                    }
                    res += (mv - v[i] * eig.values[k]).norm_sqr();
                }
                assert!(res.sqrt() <= 1e-10 * scale, "residual {} at d={d}", res.sqrt());
                if k > 0 {
                    assert!(eig.values[k] >= eig.values[k - 1]);
                }
            }
            // orthonormal columns
            for k in 0..d {
                for l in k..d {
                    let mut dot = c(0., 0.);
                    for i in 0..d {
                        dot += eig.vectors[k][i].conj() * eig.vectors[l][i];
                    }
                    let expect = if k == l { 1.0 } else { 0.0 };
                    assert!((dot.norm() - expect).abs() < 1e-12);
                }
            }
        }
    }
}
