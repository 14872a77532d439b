#pragma once

// Discrete-Fourier Poisson inverter and spectral first derivatives on
// periodic grids. All entry points are internally serialized, so they may be
// called from concurrent contexts.

#include "apm/grid.hpp"

namespace apm {

/// Solve the periodic Poisson problem: returns p with
///   p_hat(k) = -rhs_hat(k)/|k|^2  for k != 0,   p_hat(0) = 0.
/// The zero mode of rhs is silently discarded, so the result has zero mean
/// regardless of the compatibility of rhs; this is how the solvability
/// constant of the periodic pressure equation is absorbed.
ScalarField spectral_poisson_solve(const ScalarField& rhs);

/// Gradient by ik multipliers (2D only). Wavenumbers are integers on
/// [-n/2, n/2); the n/2 mode of each odd derivative is zeroed.
VectorField2D spectral_gradient(const ScalarField& p);

/// Divergence by ik multipliers (2D only), same Nyquist convention.
ScalarField spectral_divergence(const VectorField2D& u);

/// Grid mean of f.
double mean(const ScalarField& f);

}  // namespace apm
