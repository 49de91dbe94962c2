#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "eitdist/operator_matrix.hpp"

namespace eitdist {

/// Converged leading eigenpairs of a truncated operator matrix.
/// Eigenvalues are sorted by descending magnitude, positive sign first on
/// ties; eigenvectors hold basis coefficients aligned with
/// signed_indices(kind, N_used) and have their largest-magnitude
/// coefficient fixed real positive.
struct SpectrumResult {
    OperatorKind kind = OperatorKind::DnDiff;
    std::vector<double> eigenvalues;
    std::vector<Eigen::VectorXcd> eigenvectors;
    int N_used = 0;
    bool converged = false;
    double residual = 0.0;
    // metadata for boundary evaluation of eigenfunctions
    MobiusParam mobius{Complex(0.0, 0.0), 0.0, 0.0, 0.5};
    double zeta = 0.0; // rotation removed before the build
};

using MatrixBuilder = std::function<TruncatedOperatorMatrix(int)>;

/// All eigenpairs of one truncation, sorted; keeps at most k pairs
/// (k <= 0 keeps everything). Uses the symmetric similarity path when the
/// Moebius parameter is real, a general complex dense solve otherwise.
SpectrumResult solve_truncation(const TruncatedOperatorMatrix& matrix, int k);

/// Doubles the truncation from max(16, 2k) until the top-k eigenvalue
/// magnitudes move by less than tol, or N exceeds N_max (flagged, not
/// thrown).
SpectrumResult leading_eigenpairs(const MatrixBuilder& builder, int k, double tol,
                                  int N_max = 4096);

/// Convenience wrapper: rotates the inclusion center to the real axis,
/// solves, and records the rotation for eigenfunction evaluation.
SpectrumResult compute_spectrum(const Inclusion& inc, OperatorKind kind, int k,
                                double tol = 1e-12, int N_max = 4096);

struct NormResult {
    double value = 0.0;
    bool converged = false;
    int N_used = 0;
};

/// Operator norm = largest magnitude eigenvalue; requires contrast != 0.
NormResult operator_norm(const Inclusion& inc, OperatorKind kind, double tol = 1e-12,
                         int N_max = 4096);

struct EigenfunctionTrace {
    std::vector<double> theta;
    std::vector<Complex> values; // unit norm in the unweighted boundary norm
};

/// Boundary trace of the k'th eigenfunction on a uniform grid of the given
/// size, rotated back to the original inclusion orientation.
EigenfunctionTrace eigenfunction_trace(const SpectrumResult& result, int k,
                                       int grid_size);

} // namespace eitdist
