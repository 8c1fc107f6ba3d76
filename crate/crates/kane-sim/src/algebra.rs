//! Dense complex linear algebra on the small spin spaces (4x4, 16x16).
//!
//! Everything here is pure math with no device knowledge: tensor products,
//! Pauli embeddings under a fixed spin ordering, Hermitian eigendecomposition
//! and matrix exponentials, eigenvalues of symmetric unitary matrices, and
//! the magic (Bell) basis change of basis.
//!
//! Spin ordering convention: electrons first, then nuclei. For a single
//! donor the slots are (electron, nucleus); for two donors they are
//! (electron 1, electron 2, nucleus 1, nucleus 2). Within each slot, basis
//! index 0 is the Z = +1 state and index 1 the Z = -1 state, so the
//! polarized electron state (spin down) is index 1 and the nuclear
//! computational |1> is the Z = -1 (anti-aligned, higher-energy) state.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

pub const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const C_ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const C_I: Complex64 = Complex64::new(0.0, 1.0);

/// Default tolerance for unitarity / hermiticity structural checks.
pub const STRUCT_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pauli {
    X,
    Y,
    Z,
}

/// Spin layouts supported by the device model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layout {
    /// One donor: (electron, nucleus), dimension 4.
    OneDonor,
    /// Two donors: (electron 1, electron 2, nucleus 1, nucleus 2), dimension 16.
    TwoDonor,
}

impl Layout {
    pub fn spin_count(self) -> usize {
        match self {
            Layout::OneDonor => 2,
            Layout::TwoDonor => 4,
        }
    }

    pub fn dim(self) -> usize {
        1 << self.spin_count()
    }

    pub fn donor_count(self) -> usize {
        match self {
            Layout::OneDonor => 1,
            Layout::TwoDonor => 2,
        }
    }

    /// Slot index of donor `i`'s electron (0-based donor index).
    pub fn electron_site(self, donor: usize) -> usize {
        donor
    }

    /// Slot index of donor `i`'s nucleus.
    pub fn nucleus_site(self, donor: usize) -> usize {
        self.donor_count() + donor
    }
}

pub fn identity(n: usize) -> CMatrix {
    CMatrix::identity(n, n)
}

pub fn pauli(axis: Pauli) -> CMatrix {
    match axis {
        Pauli::X => CMatrix::from_row_slice(2, 2, &[C_ZERO, C_ONE, C_ONE, C_ZERO]),
        Pauli::Y => CMatrix::from_row_slice(2, 2, &[C_ZERO, -C_I, C_I, C_ZERO]),
        Pauli::Z => CMatrix::from_row_slice(2, 2, &[C_ONE, C_ZERO, C_ZERO, -C_ONE]),
    }
}

/// Tensor product A (x) B.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

pub fn dagger(m: &CMatrix) -> CMatrix {
    m.adjoint()
}

/// Largest entry magnitude.
pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().fold(0.0, |acc, z| acc.max(z.norm()))
}

pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    debug_assert_eq!(a.shape(), b.shape());
    max_abs(&(a - b))
}

pub fn is_unitary(m: &CMatrix, tol: f64) -> bool {
    let n = m.nrows();
    if n != m.ncols() {
        return false;
    }
    max_abs_diff(&(dagger(m) * m), &identity(n)) <= tol
}

pub fn is_hermitian(m: &CMatrix, tol: f64) -> bool {
    m.nrows() == m.ncols() && max_abs_diff(m, &dagger(m)) <= tol * max_abs(m).max(1.0)
}

/// I (x) ... (x) sigma_axis (x) ... (x) I with sigma at `site` under the
/// layout's fixed spin ordering.
pub fn embed_pauli(axis: Pauli, site: usize, layout: Layout) -> Result<CMatrix> {
    let n = layout.spin_count();
    if site >= n {
        return Err(Error::validation(format!(
            "spin site {site} out of range for layout with {n} spins"
        )));
    }
    let mut op = identity(1);
    for s in 0..n {
        let factor = if s == site { pauli(axis) } else { identity(2) };
        op = kron(&op, &factor);
    }
    Ok(op)
}

/// Eigendecomposition of a Hermitian matrix: real eigenvalues and the
/// unitary of eigenvectors (columns), H = V diag(e) V^dag.
pub fn hermitian_eigen(h: &CMatrix) -> Result<(Vec<f64>, CMatrix)> {
    if !is_hermitian(h, 1e-9) {
        return Err(Error::matrix("hermitian_eigen: input is not Hermitian"));
    }
    // Symmetrize to suppress roundoff asymmetry before factorizing.
    let sym = (h + dagger(h)).scale(0.5);
    let eig = nalgebra::linalg::SymmetricEigen::try_new(sym, f64::EPSILON, 0)
        .ok_or_else(|| Error::Eigen("symmetric eigensolver did not converge".into()))?;
    let vals = eig.eigenvalues.iter().copied().collect();
    Ok((vals, eig.eigenvectors))
}

/// exp(-i H t / hbar) for Hermitian H, computed by eigendecomposition.
///
/// `h` is an energy (meV when used with the device model), `t` a duration
/// (microseconds) and `hbar` the matching action constant.
pub fn expm_hermitian(h: &CMatrix, t: f64, hbar: f64) -> Result<CMatrix> {
    let (vals, vecs) = hermitian_eigen(h)?;
    let phases = CVector::from_iterator(
        vals.len(),
        vals.iter().map(|&e| Complex64::from_polar(1.0, -e * t / hbar)),
    );
    let mut scaled = vecs.clone();
    for (j, col) in scaled.column_iter_mut().enumerate() {
        let mut col = col;
        col *= phases[j];
    }
    Ok(scaled * dagger(&vecs))
}

/// Eigenvalues of a complex symmetric unitary matrix, all on the unit
/// circle, sorted by principal argument ascending in (-pi, pi].
///
/// Writes S = X + iY with X, Y real symmetric; unitarity of the symmetric S
/// forces [X, Y] = 0 and X^2 + Y^2 = I, so X and Y share an orthogonal
/// eigenbasis. X is diagonalized first and Y re-diagonalized inside each
/// (near-)degenerate eigenspace of X.
pub fn eig_unit_circle(m: &CMatrix, tol: f64) -> Result<Vec<Complex64>> {
    let n = m.nrows();
    if n != m.ncols() {
        return Err(Error::matrix("eig_unit_circle: matrix not square"));
    }
    if max_abs_diff(m, &m.transpose()) > tol {
        return Err(Error::matrix("eig_unit_circle: matrix not symmetric"));
    }
    if !is_unitary(m, tol) {
        return Err(Error::matrix("eig_unit_circle: matrix not unitary"));
    }

    let x = m.map(|z| Complex64::new(z.re, 0.0));
    let y = m.map(|z| Complex64::new(z.im, 0.0));
    let (xvals, xvecs) = hermitian_eigen(&x)?;

    // Sort the X-eigenpairs so degenerate groups are contiguous.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| xvals[a].partial_cmp(&xvals[b]).unwrap());

    const GROUP_TOL: f64 = 1e-7;
    let mut lambdas = Vec::with_capacity(n);
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && (xvals[order[end]] - xvals[order[end - 1]]).abs() <= GROUP_TOL {
            end += 1;
        }
        let cols: Vec<usize> = order[start..end].to_vec();
        let basis = CMatrix::from_columns(&cols.iter().map(|&c| xvecs.column(c)).collect::<Vec<_>>());
        let y_block = dagger(&basis) * &y * &basis;
        let (yvals, yvecs) = hermitian_eigen(&y_block)?;
        let rotated = &basis * &yvecs;
        let x_block = dagger(&rotated) * &x * &rotated;
        for (k, &yv) in yvals.iter().enumerate() {
            lambdas.push(Complex64::new(x_block[(k, k)].re, yv));
        }
        start = end;
    }

    for l in &lambdas {
        if (l.norm() - 1.0).abs() > tol.max(1e-10) {
            return Err(Error::matrix(format!(
                "eig_unit_circle: eigenvalue {l} is off the unit circle"
            )));
        }
    }
    lambdas.sort_by(|a, b| a.arg().partial_cmp(&b.arg()).unwrap());
    Ok(lambdas)
}

/// The magic (Bell) basis as a 4x4 unitary whose columns are the four
/// magic-basis states expressed in the computational basis.
pub fn magic_basis() -> CMatrix {
    let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let mi = Complex64::new(0.0, -std::f64::consts::FRAC_1_SQRT_2);
    // Columns: (|00>+|11>)/sqrt2, -i(|00>-|11>)/sqrt2,
    //          (|01>-|10>)/sqrt2, -i(|01>+|10>)/sqrt2.
    CMatrix::from_row_slice(
        4,
        4,
        &[
            s, mi, C_ZERO, C_ZERO, //
            C_ZERO, C_ZERO, s, mi, //
            C_ZERO, C_ZERO, -s, mi, //
            s, -mi, C_ZERO, C_ZERO,
        ],
    )
}

/// Q^dag U Q: expresses a computational-basis operator in the magic basis.
pub fn to_magic(u: &CMatrix) -> CMatrix {
    let q = magic_basis();
    dagger(&q) * u * q
}

pub fn from_magic(m: &CMatrix) -> CMatrix {
    let q = magic_basis();
    &q * m * dagger(&q)
}

/// Max-entry deviation between A and e^{i gamma} B where the global phase is
/// fixed from the largest-magnitude entry of B.
pub fn phase_aligned_dev(a: &CMatrix, b: &CMatrix) -> f64 {
    debug_assert_eq!(a.shape(), b.shape());
    let mut idx = (0, 0);
    let mut best = 0.0;
    for i in 0..b.nrows() {
        for j in 0..b.ncols() {
            let m = b[(i, j)].norm();
            if m > best {
                best = m;
                idx = (i, j);
            }
        }
    }
    if best == 0.0 {
        return max_abs(a);
    }
    let ratio = a[idx] / b[idx];
    let phase = if ratio.norm() == 0.0 {
        C_ONE
    } else {
        ratio / ratio.norm()
    };
    max_abs_diff(a, &b.map(|z| z * phase))
}
