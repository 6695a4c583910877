//! Occupation-number bases and second-quantized operators.
//!
//! A [`ModeRegister`] fixes an ordered set of fermionic modes plus an
//! optional bounded Cooper-pair counter. Its canonical basis enumerates
//! occupation bit patterns lexicographically (first mode most significant),
//! with the Cooper count ascending within each pattern.
//!
//! Two kinds of ladder operators are provided:
//!
//! * [`creation_op`] / [`annihilation_op`] carry the Jordan–Wigner exchange
//!   sign `(-1)^(occupied modes preceding the target in register order)`, so
//!   mode pairs obey the canonical anticommutation relations.
//! * [`transfer_op`] performs pure occupation bookkeeping: every non-zero
//!   matrix element is exactly the term coefficient, with no exchange
//!   string. The scheme Hamiltonians are assembled from these, which pins
//!   their basis-phase convention to the printed low-energy matrices they
//!   reproduce (see the `schemes` module).
//!
//! Cooper-pair shifts truncate hard at the declared range: amplitudes that
//! would leave the range are annihilated.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex;

use crate::error::Error;
use crate::float::{lit, Float};
use crate::Result;

/// Ordered fermionic modes plus an optional bounded Cooper-pair counter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModeRegister {
    labels: Vec<String>,
    cooper: Option<(i32, i32)>,
}

impl ModeRegister {
    /// `cooper` is an inclusive `[N_min, N_max]` interval; `None` means the
    /// register has no superconducting island.
    pub fn new<S: AsRef<str>>(labels: &[S], cooper: Option<(i32, i32)>) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateMode(l.clone()));
            }
        }
        if let Some((lo, hi)) = cooper {
            if lo > hi {
                return Err(Error::EmptyCooperRange(lo, hi));
            }
        }
        Ok(Self { labels, cooper })
    }

    pub fn n_modes(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn cooper_range(&self) -> Option<(i32, i32)> {
        self.cooper
    }

    pub fn mode_index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownMode(label.to_string()))
    }

    /// Number of states in the canonical basis.
    pub fn dim(&self) -> usize {
        let nc = self.cooper.map_or(1, |(lo, hi)| (hi - lo + 1) as usize);
        (1usize << self.n_modes()) * nc
    }

    /// Canonical basis: occupation bits lexicographic (first mode most
    /// significant), Cooper count ascending within each pattern.
    pub fn full_basis(self: &ModeRegister) -> Arc<Basis> {
        let k = self.n_modes();
        let (lo, hi) = self.cooper.unwrap_or((0, 0));
        let mut states = Vec::with_capacity(self.dim());
        for m in 0..(1u32 << k) {
            let mut occ = 0u32;
            for j in 0..k {
                if (m >> (k - 1 - j)) & 1 == 1 {
                    occ |= 1 << j;
                }
            }
            for c in lo..=hi {
                states.push(BasisState { occ, cooper: c });
            }
        }
        Arc::new(Basis::from_states(self.clone(), states))
    }
}

/// `make_register(["d1", "d2", "f"], Some((-1, 1)))` — ordered modes plus
/// Cooper interval.
pub fn make_register<S: AsRef<str>>(
    fermion_modes: &[S],
    cooper_range: Option<(i32, i32)>,
) -> Result<ModeRegister> {
    ModeRegister::new(fermion_modes, cooper_range)
}

/// One occupation-number ket: a bit per fermionic mode plus the Cooper count.
///
/// Bit `j` of `occ` is the occupation of the register's `j`-th mode. For a
/// register without a Cooper counter, `cooper` is 0.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasisState {
    pub occ: u32,
    pub cooper: i32,
}

impl BasisState {
    /// Build from per-mode occupations in register order.
    pub fn from_occupations(occupations: &[u8], cooper: i32) -> Self {
        let mut occ = 0u32;
        for (j, &n) in occupations.iter().enumerate() {
            if n != 0 {
                occ |= 1 << j;
            }
        }
        BasisState { occ, cooper }
    }

    pub fn occupied(&self, mode: usize) -> bool {
        (self.occ >> mode) & 1 == 1
    }

    /// Total fermion number.
    pub fn fermion_count(&self) -> u32 {
        self.occ.count_ones()
    }

    fn with_mode(&self, mode: usize, filled: bool) -> Self {
        let mut s = *self;
        if filled {
            s.occ |= 1 << mode;
        } else {
            s.occ &= !(1 << mode);
        }
        s
    }
}

impl fmt::Debug for BasisState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BasisState(occ={:b}, Nc={})", self.occ, self.cooper)
    }
}

/// An ordered list of [`BasisState`]s over one register.
///
/// Operators and states are tagged with an `Arc<Basis>`; equality of the
/// underlying register and state list is what "same basis" means.
#[derive(Clone, Debug)]
pub struct Basis {
    register: ModeRegister,
    states: Vec<BasisState>,
    lookup: HashMap<BasisState, usize>,
}

impl PartialEq for Basis {
    fn eq(&self, other: &Self) -> bool {
        self.register == other.register && self.states == other.states
    }
}

impl Basis {
    pub fn from_states(register: ModeRegister, states: Vec<BasisState>) -> Self {
        let lookup = states.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        Self { register, states, lookup }
    }

    pub fn register(&self) -> &ModeRegister {
        &self.register
    }

    pub fn states(&self) -> &[BasisState] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn index_of(&self, s: &BasisState) -> Option<usize> {
        self.lookup.get(s).copied()
    }
}

/// Same basis content (cheap pointer check first).
pub fn bases_equal(a: &Arc<Basis>, b: &Arc<Basis>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

use bases_equal as same_basis;

/// Dense complex matrix on an ordered basis.
#[derive(Clone)]
pub struct Operator<T: Float> {
    basis: Arc<Basis>,
    elems: Vec<Complex<T>>,
}

impl<T: Float> Operator<T> {
    pub fn zeros(basis: &Arc<Basis>) -> Self {
        let d = basis.len();
        Self { basis: Arc::clone(basis), elems: vec![Complex::new(T::zero(), T::zero()); d * d] }
    }

    pub fn identity(basis: &Arc<Basis>) -> Self {
        let mut op = Self::zeros(basis);
        for i in 0..basis.len() {
            op.set(i, i, Complex::new(T::one(), T::zero()));
        }
        op
    }

    pub fn from_diagonal(basis: &Arc<Basis>, f: impl Fn(&BasisState) -> T) -> Self {
        let mut op = Self::zeros(basis);
        for (i, s) in basis.states().iter().enumerate() {
            op.set(i, i, Complex::new(f(s), T::zero()));
        }
        op
    }

    pub fn basis(&self) -> &Arc<Basis> {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex<T> {
        self.elems[row * self.dim() + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, v: Complex<T>) {
        let d = self.dim();
        self.elems[row * d + col] = v;
    }

    #[inline]
    pub fn add_to(&mut self, row: usize, col: usize, v: Complex<T>) {
        let d = self.dim();
        self.elems[row * d + col] += v;
    }

    pub fn elems(&self) -> &[Complex<T>] {
        &self.elems
    }

    pub fn adjoint(&self) -> Self {
        let d = self.dim();
        let mut out = Self::zeros(&self.basis);
        for i in 0..d {
            for j in 0..d {
                out.set(i, j, self.get(j, i).conj());
            }
        }
        out
    }

    pub fn scale(&self, t: T) -> Self {
        self.scale_c(Complex::new(t, T::zero()))
    }

    pub fn scale_c(&self, z: Complex<T>) -> Self {
        let mut out = self.clone();
        for e in &mut out.elems {
            *e *= z;
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert!(same_basis(&self.basis, &other.basis), "operator add: basis mismatch");
        let mut out = self.clone();
        for (a, b) in out.elems.iter_mut().zip(&other.elems) {
            *a += *b;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert!(same_basis(&self.basis, &other.basis), "operator sub: basis mismatch");
        let mut out = self.clone();
        for (a, b) in out.elems.iter_mut().zip(&other.elems) {
            *a -= *b;
        }
        out
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &Self) -> Self {
        assert!(same_basis(&self.basis, &other.basis), "operator mul: basis mismatch");
        let d = self.dim();
        let mut out = Self::zeros(&self.basis);
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a.norm_sqr() == T::zero() {
                    continue;
                }
                for j in 0..d {
                    out.add_to(i, j, a * other.get(k, j));
                }
            }
        }
        out
    }

    /// Plus the Hermitian conjugate: `self + self†`.
    pub fn plus_adjoint(&self) -> Self {
        self.add(&self.adjoint())
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        self.mul(other).add(&other.mul(self))
    }

    pub fn apply(&self, state: &QuantumState<T>) -> QuantumState<T> {
        assert!(same_basis(&self.basis, &state.basis), "operator apply: basis mismatch");
        let d = self.dim();
        let mut amps = vec![Complex::new(T::zero(), T::zero()); d];
        for i in 0..d {
            let mut acc = Complex::new(T::zero(), T::zero());
            for j in 0..d {
                acc += self.get(i, j) * state.amps[j];
            }
            amps[i] = acc;
        }
        QuantumState { basis: Arc::clone(&state.basis), amps }
    }

    pub fn max_abs(&self) -> T {
        self.elems.iter().fold(T::zero(), |m, z| m.max(z.norm()))
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.elems
            .iter()
            .zip(&other.elems)
            .fold(T::zero(), |m, (a, b)| m.max((*a - *b).norm()))
    }

    /// Largest entry of |A - A†|.
    pub fn hermiticity_defect(&self) -> T {
        let d = self.dim();
        let mut defect = T::zero();
        for i in 0..d {
            for j in i..d {
                defect = defect.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        defect
    }

    pub fn is_hermitian(&self, tol: T) -> bool {
        self.hermiticity_defect() <= tol
    }

    /// Expectation value `⟨ψ|A|ψ⟩` (complex; real for Hermitian `A`).
    pub fn expectation(&self, state: &QuantumState<T>) -> Complex<T> {
        state.inner(&self.apply(state))
    }
}

impl<T: Float> fmt::Debug for Operator<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Operator {}x{}:", self.dim(), self.dim())?;
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let z = self.get(i, j);
                write!(f, " {:+.4}{:+.4}i", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Complex amplitude vector on an ordered basis, normalized to 1.
#[derive(Clone, Debug)]
pub struct QuantumState<T: Float> {
    basis: Arc<Basis>,
    amps: Vec<Complex<T>>,
}

impl<T: Float> QuantumState<T> {
    /// Validates the norm to 1e-9.
    pub fn new(basis: &Arc<Basis>, amps: Vec<Complex<T>>) -> Result<Self> {
        if amps.len() != basis.len() {
            return Err(Error::DimensionMismatch(amps.len(), basis.len()));
        }
        let state = Self { basis: Arc::clone(basis), amps };
        let dev = (state.norm() - T::one()).abs();
        if dev > lit(1e-9) {
            return Err(Error::NotNormalized(dev.to_f64().unwrap_or(f64::NAN)));
        }
        Ok(state)
    }

    /// Normalizes the amplitudes; errors on the zero vector.
    pub fn normalized(basis: &Arc<Basis>, amps: Vec<Complex<T>>) -> Result<Self> {
        if amps.len() != basis.len() {
            return Err(Error::DimensionMismatch(amps.len(), basis.len()));
        }
        let n = amps.iter().fold(T::zero(), |a, z| a + z.norm_sqr()).sqrt();
        if n <= T::zero() {
            return Err(Error::NotNormalized(1.0));
        }
        let amps = amps.into_iter().map(|z| z / n).collect();
        Ok(Self { basis: Arc::clone(basis), amps })
    }

    /// Unit vector on the `index`-th basis state.
    pub fn basis_vector(basis: &Arc<Basis>, index: usize) -> Self {
        let mut amps = vec![Complex::new(T::zero(), T::zero()); basis.len()];
        amps[index] = Complex::new(T::one(), T::zero());
        Self { basis: Arc::clone(basis), amps }
    }

    pub fn basis(&self) -> &Arc<Basis> {
        &self.basis
    }

    pub fn amps(&self) -> &[Complex<T>] {
        &self.amps
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn norm(&self) -> T {
        self.amps.iter().fold(T::zero(), |a, z| a + z.norm_sqr()).sqrt()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Complex<T> {
        assert!(same_basis(&self.basis, &other.basis), "inner product: basis mismatch");
        self.amps
            .iter()
            .zip(&other.amps)
            .fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| acc + a.conj() * *b)
    }

    pub fn same_basis_as(&self, other: &Self) -> bool {
        same_basis(&self.basis, &other.basis)
    }

    /// Per-basis-state populations `|amp_i|²`.
    pub fn populations(&self) -> Vec<T> {
        self.amps.iter().map(|z| z.norm_sqr()).collect()
    }
}

fn one<T: Float>() -> Complex<T> {
    Complex::new(T::one(), T::zero())
}

/// Fermionic creation operator with the Jordan–Wigner sign
/// `(-1)^(occupied modes preceding the target in register order)`.
pub fn creation_op<T: Float>(basis: &Arc<Basis>, mode: &str) -> Result<Operator<T>> {
    let m = basis.register().mode_index(mode)?;
    let mut op = Operator::zeros(basis);
    for (col, s) in basis.states().iter().enumerate() {
        if s.occupied(m) {
            continue;
        }
        let preceding = (s.occ & ((1 << m) - 1)).count_ones();
        let sign = if preceding % 2 == 0 { T::one() } else { -T::one() };
        let dst = s.with_mode(m, true);
        if let Some(row) = basis.index_of(&dst) {
            op.add_to(row, col, Complex::new(sign, T::zero()));
        }
    }
    Ok(op)
}

/// Adjoint of [`creation_op`].
pub fn annihilation_op<T: Float>(basis: &Arc<Basis>, mode: &str) -> Result<Operator<T>> {
    Ok(creation_op::<T>(basis, mode)?.adjoint())
}

/// Diagonal occupation-number operator of one mode.
pub fn number_op<T: Float>(basis: &Arc<Basis>, mode: &str) -> Result<Operator<T>> {
    let m = basis.register().mode_index(mode)?;
    Ok(Operator::from_diagonal(basis, |s| if s.occupied(m) { T::one() } else { T::zero() }))
}

/// Occupation-transfer operator without fermionic exchange strings.
///
/// Raises every mode in `raises`, lowers every mode in `lowers`, and shifts
/// the Cooper count by `cooper_shift`; each surviving transition has matrix
/// element exactly 1. States whose occupations don't fit, or whose shifted
/// Cooper count leaves the register range, are annihilated.
pub fn transfer_op<T: Float>(
    basis: &Arc<Basis>,
    raises: &[&str],
    lowers: &[&str],
    cooper_shift: i32,
) -> Result<Operator<T>> {
    let reg = basis.register();
    let r: Vec<usize> = raises.iter().map(|m| reg.mode_index(m)).collect::<Result<_>>()?;
    let l: Vec<usize> = lowers.iter().map(|m| reg.mode_index(m)).collect::<Result<_>>()?;
    for m in &r {
        if l.contains(m) {
            return Err(Error::InvalidParams(format!(
                "mode `{}` both raised and lowered",
                reg.labels()[*m]
            )));
        }
    }
    if cooper_shift != 0 && reg.cooper_range().is_none() {
        return Err(Error::NoCooperRegister);
    }
    let range = reg.cooper_range();
    let mut op = Operator::zeros(basis);
    'col: for (col, s) in basis.states().iter().enumerate() {
        let mut dst = *s;
        for &m in &l {
            if !dst.occupied(m) {
                continue 'col;
            }
            dst = dst.with_mode(m, false);
        }
        for &m in &r {
            if dst.occupied(m) {
                continue 'col;
            }
            dst = dst.with_mode(m, true);
        }
        dst.cooper += cooper_shift;
        if let Some((lo, hi)) = range {
            if dst.cooper < lo || dst.cooper > hi {
                continue;
            }
        }
        if let Some(row) = basis.index_of(&dst) {
            op.add_to(row, col, one());
        }
    }
    Ok(op)
}

/// Cooper-pair shift `|…, N_c⟩ → |…, N_c ± 1⟩` with hard truncation at the
/// register range.
pub fn cooper_shift_op<T: Float>(basis: &Arc<Basis>, direction: i32) -> Result<Operator<T>> {
    if basis.register().cooper_range().is_none() {
        return Err(Error::NoCooperRegister);
    }
    if direction != 1 && direction != -1 {
        return Err(Error::InvalidParams(format!("cooper shift direction {direction}, want ±1")));
    }
    transfer_op(basis, &[], &[], direction)
}

/// Diagonal Cooper-pair number operator.
pub fn cooper_number_op<T: Float>(basis: &Arc<Basis>) -> Result<Operator<T>> {
    if basis.register().cooper_range().is_none() {
        return Err(Error::NoCooperRegister);
    }
    Ok(Operator::from_diagonal(basis, |s| lit::<T>(s.cooper as f64)))
}

/// Diagonal ±1 joint-parity operator of a mode subset: +1 on even occupation.
pub fn parity_op<T: Float>(basis: &Arc<Basis>, modes: &[&str]) -> Result<Operator<T>> {
    if modes.is_empty() {
        return Err(Error::InvalidParams("empty mode subset for parity".into()));
    }
    let reg = basis.register();
    let idx: Vec<usize> = modes.iter().map(|m| reg.mode_index(m)).collect::<Result<_>>()?;
    Ok(Operator::from_diagonal(basis, |s| {
        let n: u32 = idx.iter().map(|&m| s.occupied(m) as u32).sum();
        if n % 2 == 0 {
            T::one()
        } else {
            -T::one()
        }
    }))
}

/// The `|kept| × |kept|` submatrix of `op` in the given order, on a
/// relabeled basis.
pub fn project_subspace<T: Float>(op: &Operator<T>, kept: &[BasisState]) -> Result<Operator<T>> {
    let idx: Vec<usize> = kept
        .iter()
        .map(|s| op.basis().index_of(s).ok_or_else(|| Error::UnknownBasisState(format!("{s:?}"))))
        .collect::<Result<_>>()?;
    let sub = Arc::new(Basis::from_states(op.basis().register().clone(), kept.to_vec()));
    let mut out = Operator::zeros(&sub);
    for (a, &ia) in idx.iter().enumerate() {
        for (b, &ib) in idx.iter().enumerate() {
            out.set(a, b, op.get(ia, ib));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    type Op = Operator<f64>;

    fn reg3() -> ModeRegister {
        make_register(&["d1", "d2", "f"], Some((-1, 1))).unwrap()
    }

    #[test]
    fn register_dimensions() {
        assert_eq!(reg3().dim(), 24);
        assert_eq!(make_register(&["d1", "d2", "f"], None).unwrap().dim(), 8);
        assert_eq!(
            make_register(&["d1↓", "d1↑", "d2↓", "d2↑", "f"], None).unwrap().dim(),
            32
        );
    }

    #[test]
    fn register_rejects_duplicates() {
        assert!(matches!(
            make_register(&["a", "b", "a"], None),
            Err(Error::DuplicateMode(_))
        ));
        assert!(matches!(
            make_register(&["a"], Some((2, 1))),
            Err(Error::EmptyCooperRange(2, 1))
        ));
    }

    #[test]
    fn canonical_enumeration_is_lexicographic() {
        let reg = make_register(&["a", "b"], Some((0, 1))).unwrap();
        let basis = reg.full_basis();
        let pats: Vec<(u32, i32)> = basis.states().iter().map(|s| (s.occ, s.cooper)).collect();
        // occupations (a,b) lexicographic, cooper ascending inside
        let expect = [
            (0b00, 0),
            (0b00, 1),
            (0b10, 0), // (a=0, b=1): bit 1 set
            (0b10, 1),
            (0b01, 0), // (a=1, b=0)
            (0b01, 1),
            (0b11, 0),
            (0b11, 1),
        ];
        assert_eq!(pats, expect);
    }

    #[test]
    fn single_mode_creation() {
        let reg = make_register(&["c"], None).unwrap();
        let basis = reg.full_basis();
        let c_dag: Op = creation_op(&basis, "c").unwrap();
        let vac = QuantumState::basis_vector(&basis, 0);
        let out = c_dag.apply(&vac);
        assert_eq!(out.amps()[1], Cplx64::new(1.0, 0.0));
    }

    use num_complex::Complex64 as Cplx64;

    #[test]
    fn jordan_wigner_sign() {
        // two-mode register [a, b]: b† |10⟩ = -|11⟩
        let reg = make_register(&["a", "b"], None).unwrap();
        let basis = reg.full_basis();
        let b_dag: Op = creation_op(&basis, "b").unwrap();
        let i10 = basis.index_of(&BasisState::from_occupations(&[1, 0], 0)).unwrap();
        let i11 = basis.index_of(&BasisState::from_occupations(&[1, 1], 0)).unwrap();
        assert_eq!(b_dag.get(i11, i10), Cplx64::new(-1.0, 0.0));
    }

    #[test]
    fn anticommutators_on_full_register() {
        let basis = reg3().full_basis();
        let modes = ["d1", "d2", "f"];
        let id: Op = Operator::identity(&basis);
        for a in &modes {
            for b in &modes {
                let ca: Op = annihilation_op(&basis, a).unwrap();
                let cb = annihilation_op(&basis, b).unwrap();
                let cb_dag = creation_op(&basis, b).unwrap();
                // {c_a, c_b} = 0
                assert!(ca.anticommutator(&cb).max_abs() <= 1e-12, "{{{a},{b}}} != 0");
                // {c_a, c_b†} = δ_ab·I
                let acomm = ca.anticommutator(&cb_dag);
                let expect = if a == b { id.clone() } else { Operator::zeros(&basis) };
                assert!(acomm.max_abs_diff(&expect) <= 1e-12, "{{{a},{b}†}} != δ·I");
            }
        }
    }

    #[test]
    fn unknown_mode_rejected() {
        let basis = reg3().full_basis();
        assert!(matches!(creation_op::<f64>(&basis, "q"), Err(Error::UnknownMode(_))));
        assert!(matches!(number_op::<f64>(&basis, "q"), Err(Error::UnknownMode(_))));
    }

    #[test]
    fn cooper_shift_truncates() {
        let reg = make_register(&["a"], Some((0, 1))).unwrap();
        let basis = reg.full_basis();
        let up: Op = cooper_shift_op(&basis, 1).unwrap();
        let s0 = basis.index_of(&BasisState { occ: 0, cooper: 0 }).unwrap();
        let s1 = basis.index_of(&BasisState { occ: 0, cooper: 1 }).unwrap();
        assert_eq!(up.get(s1, s0), Cplx64::new(1.0, 0.0));
        // |...,1⟩ annihilated: column s1 all zero
        for r in 0..basis.len() {
            assert_eq!(up.get(r, s1), Cplx64::new(0.0, 0.0));
        }
    }

    #[test]
    fn cooper_shift_updown_is_boundary_projector() {
        let basis = reg3().full_basis();
        let up: Op = cooper_shift_op(&basis, 1).unwrap();
        let down: Op = cooper_shift_op(&basis, -1).unwrap();
        // shift(+1)·shift(−1) projects onto N_c > N_min
        let proj = up.mul(&down);
        let expect = Operator::from_diagonal(&basis, |s| if s.cooper > -1 { 1.0 } else { 0.0 });
        assert!(proj.max_abs_diff(&expect) <= 1e-12);
    }

    #[test]
    fn cooper_commutation_on_interior() {
        // [N̂_c, shift(+1)] = shift(+1) wherever the shifted state survives
        let basis = reg3().full_basis();
        let up: Op = cooper_shift_op(&basis, 1).unwrap();
        let nc: Op = cooper_number_op(&basis).unwrap();
        let comm = nc.commutator(&up);
        assert!(comm.max_abs_diff(&up) <= 1e-12);
    }

    #[test]
    fn cooper_ops_require_island() {
        let reg = make_register(&["a"], None).unwrap();
        let basis = reg.full_basis();
        assert!(matches!(cooper_shift_op::<f64>(&basis, 1), Err(Error::NoCooperRegister)));
        assert!(matches!(cooper_number_op::<f64>(&basis), Err(Error::NoCooperRegister)));
    }

    #[test]
    fn transfer_has_no_string() {
        // f†d1 across an occupied d2: transfer carries +1 where strict
        // Jordan–Wigner composition would carry −1.
        let reg = make_register(&["d1", "d2", "f"], None).unwrap();
        let basis = reg.full_basis();
        let hop: Op = transfer_op(&basis, &["f"], &["d1"], 0).unwrap();
        let from = basis.index_of(&BasisState::from_occupations(&[1, 1, 0], 0)).unwrap();
        let to = basis.index_of(&BasisState::from_occupations(&[0, 1, 1], 0)).unwrap();
        assert_eq!(hop.get(to, from), Cplx64::new(1.0, 0.0));

        let jw = creation_op::<f64>(&basis, "f").unwrap().mul(&annihilation_op(&basis, "d1").unwrap());
        assert_eq!(jw.get(to, from), Cplx64::new(-1.0, 0.0));
    }

    #[test]
    fn projection_identity_and_single_state() {
        let basis = reg3().full_basis();
        let n: Op = number_op(&basis, "d1").unwrap();
        let full = project_subspace(&n, basis.states()).unwrap();
        assert!(full.max_abs_diff(&n) <= 0.0);

        let s = BasisState::from_occupations(&[1, 0, 0], 0);
        let one = project_subspace(&n, &[s]).unwrap();
        assert_eq!(one.dim(), 1);
        assert_eq!(one.get(0, 0), Cplx64::new(1.0, 0.0));
    }

    #[test]
    fn projection_rejects_foreign_states() {
        let basis = reg3().full_basis();
        let n: Op = number_op(&basis, "d1").unwrap();
        let foreign = BasisState { occ: 0, cooper: 7 };
        assert!(matches!(
            project_subspace(&n, &[foreign]),
            Err(Error::UnknownBasisState(_))
        ));
    }

    #[test]
    fn parity_op_values() {
        let basis = reg3().full_basis();
        let p: Op = parity_op(&basis, &["f"]).unwrap();
        let empty = basis.index_of(&BasisState::from_occupations(&[0, 0, 0], 0)).unwrap();
        let filled = basis.index_of(&BasisState::from_occupations(&[0, 0, 1], 0)).unwrap();
        assert_eq!(p.get(empty, empty).re, 1.0);
        assert_eq!(p.get(filled, filled).re, -1.0);
        assert!(p.mul(&p).max_abs_diff(&Operator::identity(&basis)) <= 1e-12);
    }

    #[test]
    fn state_normalization_checks() {
        let reg = make_register(&["a"], None).unwrap();
        let basis = reg.full_basis();
        let bad = QuantumState::new(&basis, vec![Cplx64::new(0.5, 0.0), Cplx64::new(0.0, 0.0)]);
        assert!(matches!(bad, Err(Error::NotNormalized(_))));
        let ok = QuantumState::normalized(&basis, vec![Cplx64::new(3.0, 0.0), Cplx64::new(4.0, 0.0)])
            .unwrap();
        assert!((ok.norm() - 1.0).abs() < 1e-15);
    }
}
