#pragma once

#include <stdexcept>

namespace eitdist {

/// Concentric problem: conductivity 1 + A inside B_{0,r}, 1 outside.
class ConcentricSpec {
public:
    ConcentricSpec(double r, double contrast);

    double r() const { return r_; }
    double contrast() const { return contrast_; }

private:
    double r_;
    double contrast_;
};

/// Eigenvalue of the Dirichlet-to-Neumann map on the Fourier mode e^{in theta}:
/// |n| (2 + A(1 + r^{2|n|})) / (2 + A(1 - r^{2|n|})).
double dn_eigenvalue(const ConcentricSpec& spec, long n);

/// Eigenvalue of the DN difference against the homogeneous disk:
/// 2 A r^{2|n|} |n| / (2 + A(1 - r^{2|n|})).
double dn_diff_eigenvalue(const ConcentricSpec& spec, long n);

/// Eigenvalue of the Neumann-to-Dirichlet map, n != 0; reciprocal of the
/// DN eigenvalue.
double nd_eigenvalue(const ConcentricSpec& spec, long n);

/// Eigenvalue of the ND difference against the homogeneous disk, n != 0:
/// -2 A r^{2|n|} / ((2 + A(1 + r^{2|n|})) |n|). Decays monotonically in |n|.
double nd_diff_eigenvalue(const ConcentricSpec& spec, long n);

/// Operator norm of the concentric DN difference, max_n |lambda_n| by scan.
double dn_diff_norm(const ConcentricSpec& spec);

/// Operator norm of the concentric ND difference; attained at n = 1.
double nd_diff_norm(const ConcentricSpec& spec);

} // namespace eitdist
