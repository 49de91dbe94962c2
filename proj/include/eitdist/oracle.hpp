#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "eitdist/operator_matrix.hpp"
#include "eitdist/spectra.hpp"

namespace eitdist {

/// Boundary data sampled on a uniform theta grid.
struct BoundaryFunction {
    std::vector<Complex> samples;

    int size() const { return static_cast<int>(samples.size()); }
};

BoundaryFunction make_fourier_mode(int n, int M);
bool is_mean_free(const BoundaryFunction& f, double rel_tol = 1e-12);

/// Trapezoid inner products on the sample grid; weight_exponent in
/// {-1, 0, +1} selects J^{-1/2}, unweighted, or J^{+1/2}.
Complex boundary_inner(const BoundaryFunction& f, const BoundaryFunction& g,
                       Complex a, int weight_exponent);
double boundary_norm(const BoundaryFunction& f, Complex a, int weight_exponent);

struct ApplyResult {
    BoundaryFunction value;
    bool full_accuracy = true; // false when composed-function tail energy
                               // beyond the truncation exceeds 1e-10 of total
};

/// Grid size paired with a concentric truncation K: max(1024, 8K), so the
/// Jacobian tail (decaying like rho^|n|) is oversampled 8x.
int oracle_grid_size(int K);

/// Operator application through the transformation law, by composition with
/// the boundary angle map and Fourier multiplication with the concentric
/// spectrum. Deliberately O(M^2); shares no code with the closed-form
/// matrix entries.
class DiskOracle {
public:
    DiskOracle(const Inclusion& inc, int M);

    int grid_size() const { return M_; }
    const MobiusParam& mobius() const { return mp_; }

    /// (Lambda(gamma_{C,R}) - Lambda(1)) f with the concentric operator
    /// truncated at Fourier index K; requires M >= 8K.
    ApplyResult apply_dn_diff(const BoundaryFunction& f, int K) const;

    /// R(gamma_{C,R}) - R(1) (NdDiff) or R(gamma_{C,R}) (NdFull) applied to
    /// mean-free data.
    ApplyResult apply_nd(const BoundaryFunction& g, int K, OperatorKind kind) const;

    /// Samples of f composed with M_a on the uniform grid.
    BoundaryFunction compose(const BoundaryFunction& f) const;

    BoundaryFunction sample_phi(int n) const;
    BoundaryFunction sample_psi(int n) const;

    /// Weighted-inner-product matrix entries, the independent check of the
    /// closed-form representations.
    Complex dn_matrix_entry(int m, int n, int K) const;
    Complex nd_matrix_entry(int n, int m, int K, OperatorKind kind) const;

private:
    Eigen::VectorXcd analyze(const BoundaryFunction& f) const;
    BoundaryFunction evaluate_at_images(const Eigen::VectorXcd& coeff) const;

    Inclusion inc_;
    MobiusParam mp_;
    int M_;
    int n_max_;
    std::vector<double> theta_;
    std::vector<double> image_angle_; // arg M_a(e^{i theta_j})
    std::vector<double> jacobian_;
    Eigen::MatrixXcd eval_at_images_; // series evaluation at the image angles
    Eigen::MatrixXcd analysis_;       // uniform-grid Fourier analysis
};

/// Convenience wrappers constructing a throwaway plan.
ApplyResult apply_dn_diff(const Inclusion& inc, const BoundaryFunction& f, int K);
ApplyResult apply_nd_diff(const Inclusion& inc, const BoundaryFunction& g, int K);

struct PowerIterationResult {
    double norm = 0.0;
    bool converged = false; // relative change <= 1e-6 at the final iteration
    int iterations = 0;
};

/// Rayleigh-quotient estimate of the largest eigenvalue magnitude of a
/// self-adjoint operator on the sample space.
PowerIterationResult norm_by_power_iteration(
    const std::function<BoundaryFunction(const BoundaryFunction&)>& op, int M,
    int max_iterations, unsigned seed, bool mean_free = false);

} // namespace eitdist
