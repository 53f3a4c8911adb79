//! Fourier-side laboratory for the strongly damped wave equation
//! `u_tt - Δu - νΔu_t = 0` and the free wave equation.

pub mod asymptotics;
pub mod error;
pub mod gauss;
pub mod gridlab;
pub mod profiles;
pub mod quadrature;
pub mod sum;
pub mod symbols;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/symbols.md")]
    pub mod symbols {}
    #[doc = include_str!("../../../book/src/quadrature.md")]
    pub mod quadrature {}
    #[doc = include_str!("../../../book/src/grids.md")]
    pub mod grids {}
    #[doc = include_str!("../../../book/src/verification.md")]
    pub mod verification {}
}
