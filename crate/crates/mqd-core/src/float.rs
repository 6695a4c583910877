//! Scalar abstraction used by every numerical routine in the crate.

use num_traits as nt;

/// Floating-point scalar for states, operators, times, and field amplitudes.
pub trait Float:
    nt::Float
    + nt::FloatConst
    + nt::NumAssign
    + nt::FromPrimitive
    + nt::ToPrimitive
    + std::fmt::Debug
    + std::fmt::Display
    + Default
    + Send
    + Sync
    + 'static
{
}

impl<T> Float for T where
    T: nt::Float
        + nt::FloatConst
        + nt::NumAssign
        + nt::FromPrimitive
        + nt::ToPrimitive
        + std::fmt::Debug
        + std::fmt::Display
        + Default
        + Send
        + Sync
        + 'static
{
}

/// Shorthand for lifting an `f64` literal into the generic scalar.
pub fn lit<T: Float>(x: f64) -> T {
    T::from_f64(x).expect("literal representable in scalar type")
}
