//! Simulator and pulse-sequence compiler for two-qubit gates on the Kane
//! Si:P quantum computer.
//!
//! The crate models two phosphorus donors in silicon whose nuclear spins act
//! as qubits, coupled through their electrons by hyperfine (A) and exchange
//! (J) interactions under a static field B with an optional rotating control
//! field B_ac. On top of the exact 16-dimensional spin model it provides:
//!
//! * [`algebra`] — dense complex linear algebra on the 4- and 16-dimensional
//!   spin spaces: tensor products, Hermitian eigendecomposition, matrix
//!   exponentials, and the magic (Bell) basis.
//! * [`device`] — physical constants, device parameter records, and the
//!   exact one- and two-donor spin Hamiltonians.
//! * [`analytic`] — closed-form second-order results: rotation frequencies,
//!   two-nucleus energies and the ideal interaction unitary.
//! * [`canonical`] — canonical-decomposition engine: interaction content
//!   extraction via the magic basis and gate synthesis from the native
//!   interaction resource.
//! * [`schedule`] — the compiler from named gates / abstract sequences to
//!   timed control schedules (A-gate, J-gate and B_ac settings).
//! * [`propagate`] — exact piecewise-constant propagation of schedules in
//!   the full spin space, plus an independent RK4 integrator used as a
//!   cross-check oracle.
//! * [`report`] — gate quality metrics: fidelity, error, leakage and timing
//!   breakdowns.

pub mod algebra;
pub mod analytic;
pub mod canonical;
pub mod device;
pub mod error;
pub mod gates;
pub mod propagate;
pub mod report;
pub mod schedule;

pub use error::{Error, Result};
