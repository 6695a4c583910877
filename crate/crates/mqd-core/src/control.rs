//! Control-field rules: constants, linear ramps for adiabatic passage, and
//! closed-loop Lyapunov feedback with optional square-pulse (bang-bang)
//! shaping.
//!
//! The Lyapunov function is `V = 1 - |⟨ψ_T|ψ⟩|²`. Along
//! `i|ψ̇⟩ = [H0 + Σ f_k H_k]|ψ⟩` its derivative is
//!
//!   dV/dt = -2 |⟨ψ|ψ_T⟩| Σ_k f_k · Im[e^{i·arg⟨ψ|ψ_T⟩} ⟨ψ_T|H_k|ψ⟩]
//!
//! so the feedback law implemented here,
//!
//!   f_k = B_k · Im[e^{i·arg⟨ψ|ψ_T⟩} ⟨ψ_T|H_k|ψ⟩],   B_k > 0,
//!
//! makes V non-increasing whenever the target is an eigenstate of `H0`
//! (which kills the drift term). The sign of the feedback is pinned by that
//! descent condition. When `|⟨ψ|ψ_T⟩|` is below 1e-10 the phase factor is
//! undefined and the field returns 0: free evolution under `H0` bootstraps
//! the overlap, after which feedback engages.
//!
//! A field rule may drive several controls at once (tied fields,
//! `f₁ = f₂`); tied feedback evaluates the law on the summed control
//! operator, which preserves the descent property exactly.

use num_complex::Complex;

use crate::dynamics::{integrate, TimeGrid, Trajectory};
use crate::error::Error;
use crate::float::{lit, Float};
use crate::fock::{Operator, QuantumState};
use crate::schemes::SchemeModel;
use crate::Result;

/// Overlap magnitude below which the Lyapunov phase is undefined and the
/// field is held at zero.
pub const OVERLAP_DEADBAND: f64 = 1e-10;

/// Population threshold used for the first-passage diagnostic.
pub const PASSAGE_THRESHOLD: f64 = 0.9;

/// Linear ramp `f(t) = slope·t + intercept` inside `window`; outside the
/// window the field is 0, or held at the nearer endpoint value when
/// `clamp` is set.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LinearRamp<T: Float> {
    pub slope: T,
    pub intercept: T,
    pub window: (T, T),
    pub clamp: bool,
}

impl<T: Float> LinearRamp<T> {
    pub fn value(&self, t: T) -> T {
        let (lo, hi) = self.window;
        if t < lo {
            if self.clamp {
                self.slope * lo + self.intercept
            } else {
                T::zero()
            }
        } else if t > hi {
            if self.clamp {
                self.slope * hi + self.intercept
            } else {
                T::zero()
            }
        } else {
            self.slope * t + self.intercept
        }
    }
}

/// Build a [`ControlField::LinearRamp`]; the window must be well-ordered.
pub fn linear_ramp<T: Float>(
    slope: T,
    intercept: T,
    window: (T, T),
    clamp: bool,
) -> Result<ControlField<T>> {
    if !(window.0 <= window.1) {
        return Err(Error::InvalidParams(format!(
            "ramp window [{}, {}] is not well-ordered",
            window.0, window.1
        )));
    }
    Ok(ControlField::LinearRamp(LinearRamp { slope, intercept, window, clamp }))
}

/// Closed-loop Lyapunov rule: gain and target state.
#[derive(Clone, Debug)]
pub struct LyapunovRule<T: Float> {
    pub gain: T,
    pub target: QuantumState<T>,
}

/// Square-pulse wrapper: emits ±`amplitude` by the sign of the inner
/// Lyapunov field, with a deadband around zero to suppress chattering at
/// the switching surface.
#[derive(Clone, Debug)]
pub struct BangBangRule<T: Float> {
    pub amplitude: T,
    pub deadband: T,
    pub inner: LyapunovRule<T>,
}

/// A time- or state-dependent field amplitude rule.
#[derive(Clone, Debug)]
pub enum ControlField<T: Float> {
    Constant(T),
    LinearRamp(LinearRamp<T>),
    Lyapunov(LyapunovRule<T>),
    BangBang(BangBangRule<T>),
}

impl<T: Float> ControlField<T> {
    pub fn constant(value: T) -> Self {
        ControlField::Constant(value)
    }

    pub fn lyapunov(gain: T, target: QuantumState<T>) -> Result<Self> {
        if !(gain > T::zero()) {
            return Err(Error::InvalidParams(format!("Lyapunov gain {gain} must be positive")));
        }
        Ok(ControlField::Lyapunov(LyapunovRule { gain, target }))
    }

    /// Defaults the deadband to `1e-8·amplitude`.
    pub fn bang_bang(amplitude: T, deadband: Option<T>, target: QuantumState<T>) -> Result<Self> {
        if !(amplitude > T::zero()) {
            return Err(Error::InvalidParams(format!(
                "bang-bang amplitude {amplitude} must be positive"
            )));
        }
        let deadband = deadband.unwrap_or(lit::<T>(1e-8) * amplitude);
        if deadband < T::zero() {
            return Err(Error::InvalidParams("bang-bang deadband must be ≥ 0".into()));
        }
        Ok(ControlField::BangBang(BangBangRule {
            amplitude,
            deadband,
            inner: LyapunovRule { gain: T::one(), target },
        }))
    }

    pub fn is_feedback(&self) -> bool {
        matches!(self, ControlField::Lyapunov(_) | ControlField::BangBang(_))
    }

    /// Amplitude of a time-dependent (open-loop) rule.
    pub fn open_loop_value(&self, t: T) -> T {
        match self {
            ControlField::Constant(v) => *v,
            ControlField::LinearRamp(r) => r.value(t),
            _ => T::zero(),
        }
    }

    /// Amplitude of a feedback rule from the current state; `h_sum` is the
    /// sum of the control operators this field drives and `n_tied` their
    /// count. The tied amplitude is `B/n · Im[e^{iθ}⟨ψ_T|Σ H_k|ψ⟩]`, i.e.
    /// the gain keeps its per-control meaning while descent is preserved
    /// exactly (the shared amplitude multiplies the summed matrix element).
    pub fn feedback_value(
        &self,
        state: &QuantumState<T>,
        h_sum: &Operator<T>,
        n_tied: usize,
    ) -> Result<T> {
        let share = lit::<T>(n_tied.max(1) as f64).recip();
        match self {
            ControlField::Lyapunov(rule) => {
                Ok(lyapunov_field(state, &rule.target, h_sum, rule.gain)? * share)
            }
            ControlField::BangBang(rule) => {
                let raw =
                    lyapunov_field(state, &rule.inner.target, h_sum, rule.inner.gain)? * share;
                Ok(bang_bang_field(raw, rule.amplitude, rule.deadband))
            }
            _ => Ok(T::zero()),
        }
    }

    /// Target of a feedback rule.
    pub fn feedback_target(&self) -> Option<&QuantumState<T>> {
        match self {
            ControlField::Lyapunov(r) => Some(&r.target),
            ControlField::BangBang(r) => Some(&r.inner.target),
            _ => None,
        }
    }
}

/// Field rule plus the scheme control indices it drives. Listing several
/// controls ties them to one shared amplitude.
#[derive(Clone, Debug)]
pub struct AppliedField<T: Float> {
    pub field: ControlField<T>,
    pub controls: Vec<usize>,
}

impl<T: Float> AppliedField<T> {
    pub fn new(field: ControlField<T>, controls: Vec<usize>) -> Self {
        Self { field, controls }
    }
}

/// `V = 1 - |⟨ψ_T|ψ⟩|²`, in [0, 1].
pub fn lyapunov_value<T: Float>(state: &QuantumState<T>, target: &QuantumState<T>) -> Result<T> {
    if !state.same_basis_as(target) {
        return Err(Error::BasisMismatch);
    }
    Ok(T::one() - target.inner(state).norm_sqr())
}

/// The eigenstate of `h0` with the largest overlap with `reference`,
/// phase-aligned so the overlap is real positive.
///
/// Feedback must aim at a steady state: if the target is not an `H0`
/// eigenstate, the free-drift term of dV/dt does not vanish and descent is
/// lost. The Bell states are eigenstates only up to a small dressing (they
/// sit a detuning below the virtual charge states), and worse, their bare
/// forms lie in a single eigenvalue level of every number-operator control,
/// which makes the feedback matrix element vanish identically. Aiming the
/// law at the dressed eigenstate restores both descent and leverage;
/// populations are still reported against the bare Bell state.
pub fn steady_target<T: Float>(
    h0: &Operator<T>,
    reference: &QuantumState<T>,
) -> Result<QuantumState<T>> {
    let eig = crate::eig::hermitian_eigensolve(h0)?;
    let d = h0.dim();
    let mut best = 0usize;
    let mut best_ov = T::zero();
    for k in 0..d {
        let state = eig.state(h0, k);
        let ov = reference.inner(&state).norm_sqr();
        if ov > best_ov {
            best_ov = ov;
            best = k;
        }
    }
    let state = eig.state(h0, best);
    let ov = reference.inner(&state);
    let mag = ov.norm();
    if mag < lit(OVERLAP_DEADBAND) {
        return Err(Error::InvalidParams(
            "no H0 eigenstate overlaps the reference target".into(),
        ));
    }
    let phase = (ov / Complex::new(mag, T::zero())).conj();
    let amps = state.amps().iter().map(|a| *a * phase).collect();
    QuantumState::new(state.basis(), amps)
}

/// Continuous Lyapunov field `B_k · Im[e^{i·arg⟨ψ|ψ_T⟩} ⟨ψ_T|H_k|ψ⟩]`
/// (sign fixed by the descent condition, see module docs). Returns 0 inside
/// the zero-overlap deadband.
pub fn lyapunov_field<T: Float>(
    state: &QuantumState<T>,
    target: &QuantumState<T>,
    hk: &Operator<T>,
    bk: T,
) -> Result<T> {
    if !(bk > T::zero()) {
        return Err(Error::InvalidParams(format!("Lyapunov gain {bk} must be positive")));
    }
    let defect = hk.hermiticity_defect();
    if defect > crate::eig::hermitian_tol(hk) {
        return Err(Error::NotHermitian { defect: defect.to_f64().unwrap_or(f64::NAN) });
    }
    if !state.same_basis_as(target) {
        return Err(Error::BasisMismatch);
    }
    // ⟨ψ|ψ_T⟩ and its phase
    let overlap = state.inner(target);
    let mag = overlap.norm();
    if mag < lit(OVERLAP_DEADBAND) {
        return Ok(T::zero());
    }
    let phase = overlap / Complex::new(mag, T::zero());
    // ⟨ψ_T|H_k|ψ⟩
    let element = target.inner(&hk.apply(state));
    Ok(bk * (phase * element).im)
}

/// Square-pulse shaping: `+F` above the deadband, `-F` below, 0 inside.
pub fn bang_bang_field<T: Float>(raw: T, amplitude: T, deadband: T) -> T {
    if raw > deadband {
        amplitude
    } else if raw < -deadband {
        -amplitude
    } else {
        T::zero()
    }
}

/// Controller-side record of a closed-loop run.
#[derive(Clone, Debug)]
pub struct ControllerDiagnostics<T: Float> {
    /// V(t) at every recorded time point.
    pub lyapunov: Vec<T>,
    /// Threshold used for `first_passage_time`.
    pub passage_threshold: T,
    /// First time the target population reached the threshold.
    pub first_passage_time: Option<T>,
    /// Field sign flips between consecutive steps, summed over controls.
    pub sign_switches: usize,
}

/// Optional early-stop rule for closed-loop runs.
#[derive(Clone, Copy, Debug)]
pub struct StopRule<T> {
    /// Stop once the target population reaches this value.
    pub population: T,
}

impl<T: Float> Default for StopRule<T> {
    fn default() -> Self {
        Self { population: lit(0.999) }
    }
}

/// Closed-loop evolution: feedback fields are re-evaluated every step from
/// the predictor state, open-loop fields at midpoint times.
///
/// The trajectory (populations, target population, first passage, stop
/// rule) is recorded against `report_target`; the diagnostics V series is
/// evaluated against the feedback law's own target, which is where the
/// monotone-descent guarantee lives. For open-loop field sets the two
/// coincide.
pub fn run_controlled_evolution_reported<T: Float>(
    scheme: &SchemeModel<T>,
    fields: &[AppliedField<T>],
    psi0: &QuantumState<T>,
    grid: &TimeGrid<T>,
    stop: Option<StopRule<T>>,
    report_target: &QuantumState<T>,
) -> Result<(Trajectory<T>, ControllerDiagnostics<T>)> {
    let control_target = fields.iter().find_map(|af| af.field.feedback_target().cloned());

    let out =
        integrate(scheme, fields, psi0, grid, Some(report_target), stop.map(|s| s.population))?;
    let trajectory = out.trajectory;
    let lyapunov = match &control_target {
        Some(tgt) => trajectory
            .states
            .iter()
            .map(|s| lyapunov_value(s, tgt))
            .collect::<Result<Vec<_>>>()?,
        None => trajectory.lyapunov.clone().unwrap_or_default(),
    };
    let threshold = lit(PASSAGE_THRESHOLD);
    let diagnostics = ControllerDiagnostics {
        lyapunov,
        passage_threshold: threshold,
        first_passage_time: trajectory.first_passage(threshold),
        sign_switches: out.sign_switches,
    };
    Ok((trajectory, diagnostics))
}

/// [`run_controlled_evolution_reported`] against the scheme's default
/// target.
pub fn run_controlled_evolution<T: Float>(
    scheme: &SchemeModel<T>,
    fields: &[AppliedField<T>],
    psi0: &QuantumState<T>,
    grid: &TimeGrid<T>,
    stop: Option<StopRule<T>>,
) -> Result<(Trajectory<T>, ControllerDiagnostics<T>)> {
    let report = scheme.target().clone();
    run_controlled_evolution_reported(scheme, fields, psi0, grid, stop, &report)
}
