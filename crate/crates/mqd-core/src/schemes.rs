//! The five concrete dot–wire models on their low-energy bases.
//!
//! Every builder assembles the full second-quantized Hamiltonian on its mode
//! register — island charging energy `E_c (2N̂_c - n_g + n_f)²`, dot energies
//! `Σ ε_n n̂_n`, Josephson exchange `(E_J/2)(e^{-iφ̂} + e^{iφ̂})`, and the
//! dot–wire tunneling `Σ λ_n [f† + (-1)^(n-1) e^{-iφ̂} f] d_n + h.c.` — and
//! projects it onto the scheme's declared low-energy basis.
//!
//! Tunneling terms are built from [`transfer_op`], i.e. without fermionic
//! exchange strings, so each matrix element equals its coupling constant.
//! This pins the basis-phase convention: the teleportation block reproduces
//! its analytic 4×4 form entry for entry and the two-wire model carries the
//! coupling-sign structure responsible for the destructive interference of
//! the simultaneous-ramp passage. A strict Jordan–Wigner composition of the
//! same terms differs by basis-state phases that no diagonal gauge removes
//! (an odd number of sign flips around the tunneling loop); the convention
//! here is the one the analytic eigensystem and every population-level
//! check validate.
//!
//! Basis ordering follows the reference figure ordering for each scheme, so
//! populations and CSV columns can be compared directly.

use std::sync::Arc;

use num_complex::Complex;

use crate::error::Error;
use crate::float::{lit, Float};
use crate::fock::{
    make_register, number_op, parity_op, project_subspace, transfer_op, Basis, BasisState,
    ModeRegister, Operator, QuantumState,
};
use crate::Result;

/// Physical parameters, all in units of the tunnel coupling λ.
///
/// `epsilon2` is the second dot's chemical potential where it differs from
/// the first (the crossed-Andreev scheme uses ε₁ = -ε₂ = ε); `t_flip` is the
/// intra-dot spin-flip strength of the spin scheme.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SchemeParams<T: Float> {
    pub epsilon: T,
    pub epsilon2: Option<T>,
    pub e_c: T,
    pub e_j: T,
    pub lambda1: T,
    pub lambda2: T,
    pub lambda3: T,
    pub lambda4: T,
    pub n_g: T,
    pub t_flip: T,
}

impl<T: Float> Default for SchemeParams<T> {
    fn default() -> Self {
        Self {
            epsilon: T::zero(),
            epsilon2: None,
            e_c: T::zero(),
            e_j: T::zero(),
            lambda1: T::one(),
            lambda2: T::one(),
            lambda3: T::one(),
            lambda4: T::one(),
            n_g: T::zero(),
            t_flip: T::one(),
        }
    }
}

impl<T: Float> SchemeParams<T> {
    pub fn teleportation(e_c: T, epsilon: T) -> Self {
        Self { e_c, epsilon, n_g: T::one(), ..Self::default() }
    }

    pub fn teleportation_josephson(e_c: T, epsilon: T, e_j: T) -> Self {
        Self { e_c, epsilon, e_j, n_g: T::one(), ..Self::default() }
    }

    pub fn car(e_c: T, epsilon: T, e_j: T) -> Self {
        Self { e_c, epsilon, e_j, n_g: T::zero(), ..Self::default() }
    }

    pub fn spin_flip(epsilon: T, t_flip: T) -> Self {
        Self { epsilon, t_flip, ..Self::default() }
    }

    pub fn two_wire(epsilon: T) -> Self {
        Self { epsilon, ..Self::default() }
    }

    fn check_finite(&self) -> Result<()> {
        let vals = [
            self.epsilon,
            self.epsilon2.unwrap_or(T::zero()),
            self.e_c,
            self.e_j,
            self.lambda1,
            self.lambda2,
            self.lambda3,
            self.lambda4,
            self.n_g,
            self.t_flip,
        ];
        if vals.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidParams("non-finite parameter".into()));
        }
        Ok(())
    }
}

/// A named control Hamiltonian on the scheme basis.
#[derive(Clone, Debug)]
pub struct NamedControl<T: Float> {
    pub name: String,
    pub op: Operator<T>,
}

/// A named preparation target on the scheme basis.
#[derive(Clone, Debug)]
pub struct NamedTarget<T: Float> {
    pub name: String,
    pub state: QuantumState<T>,
}

/// A built scheme: low-energy basis with ket labels, static `H0`, control
/// Hamiltonians, and Bell targets (first target is the scheme default).
#[derive(Clone, Debug)]
pub struct SchemeModel<T: Float> {
    pub name: String,
    pub register: ModeRegister,
    pub basis: Arc<Basis>,
    pub labels: Vec<String>,
    pub h0: Operator<T>,
    pub controls: Vec<NamedControl<T>>,
    pub targets: Vec<NamedTarget<T>>,
    pub params: SchemeParams<T>,
}

impl<T: Float> SchemeModel<T> {
    /// The scheme's default preparation target.
    pub fn target(&self) -> &QuantumState<T> {
        &self.targets[0].state
    }

    pub fn bell_target(&self, which: &str) -> Result<&QuantumState<T>> {
        self.targets
            .iter()
            .find(|t| t.name == which)
            .map(|t| &t.state)
            .ok_or_else(|| Error::UnknownTarget(which.to_string()))
    }

    pub fn control_index(&self, name: &str) -> Result<usize> {
        self.controls
            .iter()
            .position(|c| c.name == name)
            .ok_or_else(|| Error::UnknownTarget(name.to_string()))
    }

    pub fn control_ops(&self) -> Vec<&Operator<T>> {
        self.controls.iter().map(|c| &c.op).collect()
    }

    /// Index of a basis ket by its label, e.g. `"|0001>"`.
    pub fn state_index(&self, ket: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == ket)
            .ok_or_else(|| Error::UnknownTarget(ket.to_string()))
    }

    /// Unit basis ket by label.
    pub fn ket(&self, label: &str) -> Result<QuantumState<T>> {
        Ok(QuantumState::basis_vector(&self.basis, self.state_index(label)?))
    }

    /// Normalized superposition `Σ amp_i |ket_i⟩` from labeled amplitudes.
    pub fn superposition(&self, terms: &[(T, &str)]) -> Result<QuantumState<T>> {
        let mut amps = vec![Complex::new(T::zero(), T::zero()); self.basis.len()];
        for (a, ket) in terms {
            amps[self.state_index(ket)?] += Complex::new(*a, T::zero());
        }
        QuantumState::normalized(&self.basis, amps)
    }
}

/// Normalized target on `scheme.basis` by label (free-function form of
/// [`SchemeModel::bell_target`]).
pub fn bell_target<T: Float>(scheme: &SchemeModel<T>, which: &str) -> Result<QuantumState<T>> {
    scheme.bell_target(which).cloned()
}

// ---------------------------------------------------------------------------
// Shared assembly pieces
// ---------------------------------------------------------------------------

/// `coeff · op + h.c.`
fn add_hc<T: Float>(h: &mut Operator<T>, op: &Operator<T>, coeff: T) {
    let term = op.scale(coeff);
    *h = h.add(&term).add(&term.adjoint());
}

/// Full-space Hamiltonian of the single-island charge schemes:
/// charging + dot energies + Josephson + tunneling.
pub fn island_hamiltonian<T: Float>(
    basis: &Arc<Basis>,
    params: &SchemeParams<T>,
) -> Result<Operator<T>> {
    params.check_finite()?;
    let reg = basis.register();
    let f = reg.mode_index("f")?;
    let d1 = reg.mode_index("d1")?;
    let d2 = reg.mode_index("d2")?;
    let e_c = params.e_c;
    let n_g = params.n_g;
    let eps1 = params.epsilon;
    let eps2 = params.epsilon2.unwrap_or(params.epsilon);

    let mut h = Operator::from_diagonal(basis, |s| {
        let charge = lit::<T>(2.0 * s.cooper as f64) - n_g
            + if s.occupied(f) { T::one() } else { T::zero() };
        let mut e = e_c * charge * charge;
        if s.occupied(d1) {
            e += eps1;
        }
        if s.occupied(d2) {
            e += eps2;
        }
        e
    });

    // Josephson: (E_J/2)(e^{-iφ̂} + e^{iφ̂})
    if params.e_j != T::zero() {
        let up = transfer_op::<T>(basis, &[], &[], 1)?;
        add_hc(&mut h, &up, params.e_j * lit(0.5));
    }

    // Tunneling λ_n [f† + (-1)^(n-1) e^{-iφ̂} f] d_n + h.c.
    let normal1 = transfer_op::<T>(basis, &["f"], &["d1"], 0)?;
    let anomalous1 = transfer_op::<T>(basis, &[], &["f", "d1"], 1)?;
    add_hc(&mut h, &normal1.add(&anomalous1), params.lambda1);
    let normal2 = transfer_op::<T>(basis, &["f"], &["d2"], 0)?;
    let anomalous2 = transfer_op::<T>(basis, &[], &["f", "d2"], 1)?;
    add_hc(&mut h, &normal2.sub(&anomalous2), params.lambda2);
    Ok(h)
}

/// Full-space Hamiltonian of the intra-dot spin-flip scheme (grounded wire,
/// spin-polarized Majorana couplings, no island terms).
pub fn spin_flip_hamiltonian<T: Float>(
    basis: &Arc<Basis>,
    params: &SchemeParams<T>,
) -> Result<Operator<T>> {
    params.check_finite()?;
    let reg = basis.register();
    let dots = ["d1↓", "d1↑", "d2↓", "d2↑"];
    let idx: Vec<usize> = dots.iter().map(|m| reg.mode_index(m)).collect::<Result<_>>()?;
    let eps = params.epsilon;

    let mut h = Operator::from_diagonal(basis, |s| {
        let n = idx.iter().filter(|&&m| s.occupied(m)).count();
        eps * lit(n as f64)
    });

    // intra-dot spin flip t (d_n↑† d_n↓ + h.c.)
    for n in ["1", "2"] {
        let flip = transfer_op::<T>(basis, &[&format!("d{n}↑")], &[&format!("d{n}↓")], 0)?;
        add_hc(&mut h, &flip, params.t_flip);
    }

    // λ₁ (f† + f) d_1↓ + h.c.
    let t1 = transfer_op::<T>(basis, &["f"], &["d1↓"], 0)?
        .add(&transfer_op::<T>(basis, &[], &["f", "d1↓"], 0)?);
    add_hc(&mut h, &t1, params.lambda1);
    // λ₂ (f† - f) d_2↑ + h.c.
    let t2 = transfer_op::<T>(basis, &["f"], &["d2↑"], 0)?
        .sub(&transfer_op::<T>(basis, &[], &["f", "d2↑"], 0)?);
    add_hc(&mut h, &t2, params.lambda2);
    Ok(h)
}

/// Full-space Hamiltonian of the two-wire scheme. Couplings: λ₁ for
/// d₁↓–wire 1, λ₂ for d₂↑–wire 1, λ₃ for d₂↓–wire 2, λ₄ for d₁↑–wire 2
/// (all four default to 1, which is the convention-reduced form with indices
/// taken mod 2).
pub fn two_wire_hamiltonian<T: Float>(
    basis: &Arc<Basis>,
    params: &SchemeParams<T>,
) -> Result<Operator<T>> {
    params.check_finite()?;
    let reg = basis.register();
    let dots = ["d1↓", "d1↑", "d2↓", "d2↑"];
    let idx: Vec<usize> = dots.iter().map(|m| reg.mode_index(m)).collect::<Result<_>>()?;
    let eps = params.epsilon;

    let mut h = Operator::from_diagonal(basis, |s| {
        let n = idx.iter().filter(|&&m| s.occupied(m)).count();
        eps * lit(n as f64)
    });

    // wire 1: λ₁ (f₁† + f₁) d₁↓ + λ₂ (f₁† - f₁) d₂↑ + h.c.
    let w1a = transfer_op::<T>(basis, &["f1"], &["d1↓"], 0)?
        .add(&transfer_op::<T>(basis, &[], &["f1", "d1↓"], 0)?);
    add_hc(&mut h, &w1a, params.lambda1);
    let w1b = transfer_op::<T>(basis, &["f1"], &["d2↑"], 0)?
        .sub(&transfer_op::<T>(basis, &[], &["f1", "d2↑"], 0)?);
    add_hc(&mut h, &w1b, params.lambda2);
    // wire 2: λ₃ (f₂† - f₂) d₂↓ + λ₄ (f₂† + f₂) d₁↑ + h.c.
    let w2a = transfer_op::<T>(basis, &["f2"], &["d2↓"], 0)?
        .sub(&transfer_op::<T>(basis, &[], &["f2", "d2↓"], 0)?);
    add_hc(&mut h, &w2a, params.lambda3);
    let w2b = transfer_op::<T>(basis, &["f2"], &["d1↑"], 0)?
        .add(&transfer_op::<T>(basis, &[], &["f2", "d1↑"], 0)?);
    add_hc(&mut h, &w2b, params.lambda4);
    Ok(h)
}

/// Total fermion parity on the full register of a scheme, for conservation
/// checks against the full-space Hamiltonians above.
pub fn total_parity_full<T: Float>(basis: &Arc<Basis>) -> Operator<T> {
    let labels: Vec<&str> = basis.register().labels().iter().map(|s| s.as_str()).collect();
    parity_op(basis, &labels).expect("non-empty register")
}

fn island_register() -> ModeRegister {
    make_register(&["d1", "d2", "f"], Some((-1, 1))).expect("static register")
}

fn island_state(n1: u8, n2: u8, nf: u8, nc: i32) -> BasisState {
    BasisState::from_occupations(&[n1, n2, nf], nc)
}

fn island_label(s: &BasisState) -> String {
    format!(
        "|{}{}{}{}>",
        s.occupied(0) as u8,
        s.occupied(1) as u8,
        s.occupied(2) as u8,
        s.cooper
    )
}

/// Spin content of one dot given its (↓, ↑) mode occupations.
fn spin_char(down: bool, up: bool) -> char {
    match (down, up) {
        (false, false) => '0',
        (true, false) => '↓',
        (false, true) => '↑',
        (true, true) => '2', // doubly occupied; excluded from every scheme basis
    }
}

fn project_model_parts<T: Float>(
    h_full: &Operator<T>,
    controls_full: Vec<(&str, Operator<T>)>,
    kept: &[BasisState],
) -> Result<(Operator<T>, Vec<NamedControl<T>>)> {
    let h0 = project_subspace(h_full, kept)?;
    let controls = controls_full
        .into_iter()
        .map(|(name, op)| {
            Ok(NamedControl { name: name.to_string(), op: project_subspace(&op, kept)? })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((h0, controls))
}

fn target_from_amps<T: Float>(
    basis: &Arc<Basis>,
    name: &str,
    amps: &[(usize, f64)],
) -> NamedTarget<T> {
    let mut v = vec![Complex::new(T::zero(), T::zero()); basis.len()];
    for (i, a) in amps {
        v[*i] = Complex::new(lit(*a), T::zero());
    }
    let state = QuantumState::normalized(basis, v).expect("target normalizable");
    NamedTarget { name: name.to_string(), state }
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

/// Teleportation scheme: gate charge n_g = 1, no Josephson exchange. Basis
/// {|0001⟩, |0110⟩, |1010⟩, |1100⟩} in |n₁n₂n_f N_c⟩ notation; target is the
/// Bell state (|1010⟩ - |0110⟩)/√2.
pub fn build_teleportation<T: Float>(params: &SchemeParams<T>) -> Result<SchemeModel<T>> {
    if params.e_j != T::zero() {
        return Err(Error::InvalidParams(
            "teleportation scheme has E_J = 0; use the Josephson builder".into(),
        ));
    }
    if params.n_g != T::one() {
        return Err(Error::InvalidParams("teleportation scheme requires n_g = 1".into()));
    }
    let register = island_register();
    let full = register.full_basis();
    let h_full = island_hamiltonian(&full, params)?;
    let kept = [
        island_state(0, 0, 0, 1),
        island_state(0, 1, 1, 0),
        island_state(1, 0, 1, 0),
        island_state(1, 1, 0, 0),
    ];
    let (h0, controls) = project_model_parts(
        &h_full,
        vec![("H1", number_op(&full, "d1")?), ("H2", number_op(&full, "d2")?)],
        &kept,
    )?;
    let basis = Arc::clone(h0.basis());
    let labels = kept.iter().map(island_label).collect();
    let inv = 0.5f64.sqrt();
    let targets = vec![target_from_amps(&basis, "psi_T", &[(1, -inv), (2, inv)])];
    Ok(SchemeModel {
        name: "teleportation".into(),
        register,
        basis,
        labels,
        h0,
        controls,
        targets,
        params: *params,
    })
}

/// Closed forms for the teleportation eigensystem, in its analytic labeling
/// (E₁…E₄, not ascending):
///
///   E₁ = ε - λA₁   E₂ = E_c + λA₁   E₃ = E_c + 2ε - λA₃   E₄ = ε + λA₃
///
/// with A₁ = (ε - E_c + √((E_c-ε)² + 8λ²))/2λ and A₃ the same form in
/// E_c + ε. Requires λ₁ = λ₂ ≠ 0.
pub fn teleportation_analytic_eigs<T: Float>(
    params: &SchemeParams<T>,
) -> Result<Vec<(T, QuantumState<T>)>> {
    if params.e_j != T::zero() || params.n_g != T::one() {
        return Err(Error::InvalidParams("analytic eigensystem is for the E_J = 0, n_g = 1 scheme".into()));
    }
    if params.lambda1 != params.lambda2 || params.lambda1 == T::zero() {
        return Err(Error::InvalidParams("analytic eigensystem requires λ₁ = λ₂ ≠ 0".into()));
    }
    let model = build_teleportation(params)?;
    let lam = params.lambda1;
    let (e_c, eps) = (params.e_c, params.epsilon);
    let two = lit::<T>(2.0);
    let eight = lit::<T>(8.0);

    let s1 = ((e_c - eps) * (e_c - eps) + eight * lam * lam).sqrt();
    let s3 = ((e_c + eps) * (e_c + eps) + eight * lam * lam).sqrt();
    let a1 = (eps - e_c + s1) / (two * lam);
    let a2 = (e_c - eps + s1) / (two * lam);
    let a3 = (e_c + eps + s3) / (two * lam);

    let e1 = eps - lam * a1;
    let e2 = e_c + lam * a1;
    let e3 = e_c + two * eps - lam * a3;
    let e4 = eps + lam * a3;

    let vec_of = |amps: [T; 4]| {
        let v = amps.iter().map(|a| Complex::new(*a, T::zero())).collect();
        QuantumState::normalized(&model.basis, v).expect("analytic eigenvector")
    };
    // basis order (|0001⟩, |0110⟩, |1010⟩, |1100⟩)
    let v1 = vec_of([-a1, -T::one(), T::one(), T::zero()]);
    let v2 = vec_of([a2, -T::one(), T::one(), T::zero()]);
    let half_a3 = a3 / two;
    let v3 = vec_of([T::zero(), -half_a3, -half_a3, T::one()]);
    let v4 = vec_of([T::zero(), a3.recip(), a3.recip(), T::one()]);
    Ok(vec![(e1, v1), (e2, v2), (e3, v3), (e4, v4)])
}

/// Teleportation scheme with Josephson exchange to a bulk superconductor.
///
/// The six reference states {|0000⟩, |0001⟩, |0110⟩, |1010⟩, |1100⟩, |1101⟩}
/// are kept together with the four charge-excited states
/// {|0111⟩, |011-1⟩, |1011⟩, |101-1⟩} that the Cooper-exchange operator
/// reaches from the Bell pair. Without those, cos φ̂ has no matrix element
/// into the target block at all and Cooper-exchange control is inert; with
/// them it acquires the (detuned, ~4E_c) leverage the control runs rely on.
/// At E_J = 0 the restriction to the four shared states reproduces
/// [`build_teleportation`] exactly.
pub fn build_teleportation_josephson<T: Float>(
    params: &SchemeParams<T>,
) -> Result<SchemeModel<T>> {
    if params.n_g != T::one() {
        return Err(Error::InvalidParams("Josephson teleportation scheme requires n_g = 1".into()));
    }
    let register = island_register();
    let full = register.full_basis();
    let h_full = island_hamiltonian(&full, params)?;
    let kept = [
        island_state(0, 0, 0, 0),
        island_state(0, 0, 0, 1),
        island_state(0, 1, 1, 0),
        island_state(1, 0, 1, 0),
        island_state(1, 1, 0, 0),
        island_state(1, 1, 0, 1),
        island_state(0, 1, 1, 1),
        island_state(0, 1, 1, -1),
        island_state(1, 0, 1, 1),
        island_state(1, 0, 1, -1),
    ];
    let cos_phi = {
        let up = transfer_op::<T>(&full, &[], &[], 1)?;
        up.plus_adjoint().scale(lit(0.5))
    };
    let (h0, controls) = project_model_parts(
        &h_full,
        vec![
            ("H1", number_op(&full, "d1")?),
            ("H2", number_op(&full, "d2")?),
            ("H3", cos_phi),
        ],
        &kept,
    )?;
    let basis = Arc::clone(h0.basis());
    let labels = kept.iter().map(island_label).collect();
    let inv = 0.5f64.sqrt();
    let targets = vec![target_from_amps(&basis, "psi_T", &[(2, -inv), (3, inv)])];
    Ok(SchemeModel {
        name: "teleportation_josephson".into(),
        register,
        basis,
        labels,
        h0,
        controls,
        targets,
        params: *params,
    })
}

/// Crossed-Andreev-reflection scheme: n_g = 0, ε₁ = -ε₂ = ε, eight-state
/// basis; target |ψ_T⁺⟩ = (|0000⟩ + |1100⟩)/√2.
pub fn build_car<T: Float>(params: &SchemeParams<T>) -> Result<SchemeModel<T>> {
    if params.n_g != T::zero() {
        return Err(Error::InvalidParams("CAR scheme requires n_g = 0".into()));
    }
    let mut params = *params;
    match params.epsilon2 {
        None => params.epsilon2 = Some(-params.epsilon),
        Some(e2) => {
            if e2 != -params.epsilon {
                return Err(Error::InvalidParams("CAR scheme requires ε₁ = -ε₂".into()));
            }
        }
    }
    let register = island_register();
    let full = register.full_basis();
    let h_full = island_hamiltonian(&full, &params)?;
    let kept = [
        island_state(0, 0, 0, 0),
        island_state(0, 0, 0, 1),
        island_state(0, 1, 1, -1),
        island_state(0, 1, 1, 0),
        island_state(1, 0, 1, 0),
        island_state(1, 0, 1, -1),
        island_state(1, 1, 0, -1),
        island_state(1, 1, 0, 0),
    ];
    let cos_phi = {
        let up = transfer_op::<T>(&full, &[], &[], 1)?;
        up.plus_adjoint().scale(lit(0.5))
    };
    let (h0, controls) = project_model_parts(
        &h_full,
        vec![
            ("H1", number_op(&full, "d1")?),
            ("H2", number_op(&full, "d2")?),
            ("H3", cos_phi),
        ],
        &kept,
    )?;
    let basis = Arc::clone(h0.basis());
    let labels = kept.iter().map(island_label).collect();
    let inv = 0.5f64.sqrt();
    let targets = vec![target_from_amps(&basis, "psi_T_plus", &[(0, inv), (7, inv)])];
    Ok(SchemeModel {
        name: "car".into(),
        register,
        basis,
        labels,
        h0,
        controls,
        targets,
        params,
    })
}

/// Intra-dot spin-flip scheme on the nine-state |n₁n₂n_f⟩ basis
/// (n = 0, ↓, ↑); target |ψ_T'⟩ = (|↑↑0⟩ - |↓↓0⟩)/√2.
pub fn build_spin_flip<T: Float>(params: &SchemeParams<T>) -> Result<SchemeModel<T>> {
    let register = make_register(&["d1↓", "d1↑", "d2↓", "d2↑", "f"], None)?;
    let full = register.full_basis();
    let h_full = spin_flip_hamiltonian(&full, params)?;
    // |n1 n2 nf⟩ as (d1↓, d1↑, d2↓, d2↑, f) occupations
    let kept = [
        BasisState::from_occupations(&[0, 0, 0, 0, 0], 0), // |000⟩
        BasisState::from_occupations(&[1, 0, 0, 0, 1], 0), // |↓01⟩
        BasisState::from_occupations(&[0, 0, 0, 1, 1], 0), // |0↑1⟩
        BasisState::from_occupations(&[0, 1, 0, 0, 1], 0), // |↑01⟩
        BasisState::from_occupations(&[0, 0, 1, 0, 1], 0), // |0↓1⟩
        BasisState::from_occupations(&[1, 0, 0, 1, 0], 0), // |↓↑0⟩
        BasisState::from_occupations(&[0, 1, 0, 1, 0], 0), // |↑↑0⟩
        BasisState::from_occupations(&[0, 1, 1, 0, 0], 0), // |↑↓0⟩
        BasisState::from_occupations(&[1, 0, 1, 0, 0], 0), // |↓↓0⟩
    ];
    let h1 = number_op::<T>(&full, "d1↓")?.add(&number_op(&full, "d1↑")?);
    let h2 = number_op::<T>(&full, "d2↓")?.add(&number_op(&full, "d2↑")?);
    let (h0, controls) = project_model_parts(&h_full, vec![("H1", h1), ("H2", h2)], &kept)?;
    let basis = Arc::clone(h0.basis());
    let labels = kept
        .iter()
        .map(|s| {
            format!(
                "|{}{}{}>",
                spin_char(s.occupied(0), s.occupied(1)),
                spin_char(s.occupied(2), s.occupied(3)),
                s.occupied(4) as u8
            )
        })
        .collect();
    let inv = 0.5f64.sqrt();
    let targets = vec![target_from_amps(&basis, "psi_T_prime", &[(6, inv), (8, -inv)])];
    Ok(SchemeModel {
        name: "spin_flip".into(),
        register,
        basis,
        labels,
        h0,
        controls,
        targets,
        params: *params,
    })
}

/// Two-wire scheme on the nine-state |n₁n₂ n_f₁ n_f₂⟩ basis. Exposes both
/// Bell targets: |ψ₁⟩ = (|↓↓11⟩ + |↑↑11⟩)/√2 and
/// |ψ₂⟩ = (|↑↓00⟩ + |↓↑00⟩)/√2.
pub fn build_two_wire<T: Float>(params: &SchemeParams<T>) -> Result<SchemeModel<T>> {
    let register = make_register(&["d1↓", "d1↑", "d2↓", "d2↑", "f1", "f2"], None)?;
    let full = register.full_basis();
    let h_full = two_wire_hamiltonian(&full, params)?;
    // (d1↓, d1↑, d2↓, d2↑, f1, f2)
    let kept = [
        BasisState::from_occupations(&[0, 0, 0, 0, 0, 0], 0), // |0000⟩
        BasisState::from_occupations(&[0, 0, 1, 0, 0, 1], 0), // |0↓01⟩
        BasisState::from_occupations(&[1, 0, 0, 0, 1, 0], 0), // |↓010⟩
        BasisState::from_occupations(&[0, 0, 0, 1, 1, 0], 0), // |0↑10⟩
        BasisState::from_occupations(&[0, 1, 0, 0, 0, 1], 0), // |↑001⟩
        BasisState::from_occupations(&[1, 0, 1, 0, 1, 1], 0), // |↓↓11⟩
        BasisState::from_occupations(&[0, 1, 1, 0, 0, 0], 0), // |↑↓00⟩
        BasisState::from_occupations(&[1, 0, 0, 1, 0, 0], 0), // |↓↑00⟩
        BasisState::from_occupations(&[0, 1, 0, 1, 1, 1], 0), // |↑↑11⟩
    ];
    let h1 = number_op::<T>(&full, "d1↓")?.add(&number_op(&full, "d1↑")?);
    let h2 = number_op::<T>(&full, "d2↓")?.add(&number_op(&full, "d2↑")?);
    let (h0, controls) = project_model_parts(&h_full, vec![("H1", h1), ("H2", h2)], &kept)?;
    let basis = Arc::clone(h0.basis());
    let labels = kept
        .iter()
        .map(|s| {
            format!(
                "|{}{}{}{}>",
                spin_char(s.occupied(0), s.occupied(1)),
                spin_char(s.occupied(2), s.occupied(3)),
                s.occupied(4) as u8,
                s.occupied(5) as u8
            )
        })
        .collect();
    let inv = 0.5f64.sqrt();
    let targets = vec![
        target_from_amps(&basis, "psi_1", &[(5, inv), (8, inv)]),
        target_from_amps(&basis, "psi_2", &[(6, inv), (7, inv)]),
    ];
    Ok(SchemeModel {
        name: "two_wire".into(),
        register,
        basis,
        labels,
        h0,
        controls,
        targets,
        params: *params,
    })
}

/// Build a scheme by its name, as used by configuration files.
pub fn build_by_name<T: Float>(name: &str, params: &SchemeParams<T>) -> Result<SchemeModel<T>> {
    match name {
        "teleportation" => build_teleportation(params),
        "teleportation_josephson" => build_teleportation_josephson(params),
        "car" => build_car(params),
        "spin_flip" => build_spin_flip(params),
        "two_wire" => build_two_wire(params),
        other => Err(Error::InvalidParams(format!(
            "unknown scheme `{other}`; expected one of teleportation, \
             teleportation_josephson, car, spin_flip, two_wire"
        ))),
    }
}

pub const SCHEME_NAMES: [&str; 5] =
    ["teleportation", "teleportation_josephson", "car", "spin_flip", "two_wire"];
