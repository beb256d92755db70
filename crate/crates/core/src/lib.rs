//! Exact calculus of formal WKB operators and their descent data.
//!
//! Everything here is computed over the rationals with no rounding:
//!
//! * [`symbol`] — total symbols `Σ p_j(x;u) τ^j` with sparse polynomial
//!   coefficients, the normal-ordered star composition, the order
//!   filtration, the formal adjoint, and the semiclassical growth-constant
//!   fitter.  Truncation windows track which τ-orders of a result are
//!   exact and are propagated through every operation.
//! * [`involutive`] — the standard linear involutive model
//!   `{u_1 = … = u_d = 0}`, membership in the subring it generates, and
//!   normal forms with left/right actions on the associated simple module.
//! * [`descent`] — finite covering nerves, matrix-algebra gluing data with
//!   the two nonabelian cocycle conditions, and Čech cohomology over `ℤ`
//!   and `ℤ/N` via Smith normal form, including the fractional-power
//!   line-bundle class.
//!
//! All values are immutable after construction and all operations are pure
//! functions, so the whole crate is safe to use from multiple threads.

pub mod descent;
pub mod estimates;
pub mod involutive;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod symbol;
pub mod window;

pub use estimates::{estimate_fit, GrowthBound};
pub use involutive::{InvolutiveModel, LinearVariety, ModuleElement, SymbolSpan};
pub use poly::{poisson_bracket, Monomial, Poly};
pub use rational::{BigInt, Rational};
pub use symbol::{CentralSeries, SymbolError, WkbSymbol};
pub use window::{Floor, TruncationWindow};
