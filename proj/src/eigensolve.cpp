#include "eitdist/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace eitdist {

namespace {

void fix_phase(Eigen::VectorXcd& v) {
    int imax = 0;
    double best = 0.0;
    for (int i = 0; i < v.size(); ++i) {
        double m = std::abs(v[i]);
        if (m > best) { best = m; imax = i; }
    }
    if (best == 0.0) return;
    v *= std::conj(v[imax]) / best;
}

// magnitude descending, positive first on ties
std::vector<int> sort_order(const std::vector<double>& vals) {
    std::vector<int> order(vals.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        double ma = std::abs(vals[static_cast<size_t>(a)]);
        double mb = std::abs(vals[static_cast<size_t>(b)]);
        if (ma != mb) return ma > mb;
        return vals[static_cast<size_t>(a)] > vals[static_cast<size_t>(b)];
    });
    return order;
}

} // namespace

SpectrumResult solve_truncation(const TruncatedOperatorMatrix& matrix, int k) {
    SpectrumResult res;
    res.kind = matrix.kind();
    res.N_used = matrix.truncation();
    res.mobius = matrix.mobius();

    const int dim = matrix.dim();
    std::vector<double> vals;
    std::vector<Eigen::VectorXcd> vecs;

    const bool real_param = std::abs(matrix.mobius().a.imag()) < 1e-14;
    if (real_param) {
        auto subset = matrix.nonzero_factor_indices();
        if (!subset.empty()) {
            Eigen::MatrixXd sym = matrix.symmetrized_action(subset);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
            const auto& lam = matrix.diagonal_factors();
            for (int j = 0; j < sym.rows(); ++j) {
                vals.push_back(solver.eigenvalues()[j]);
                Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
                for (int i = 0; i < sym.rows(); ++i) {
                    int s = subset[static_cast<size_t>(i)];
                    v[s] = solver.eigenvectors()(i, j) / std::sqrt(std::abs(lam[s]));
                }
                vecs.push_back(std::move(v));
            }
        }
        // indices with a vanishing eigenvalue factor span the kernel
        for (int i = 0; i < dim; ++i) {
            if (std::find(subset.begin(), subset.end(), i) != subset.end()) continue;
            vals.push_back(0.0);
            Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
            v[i] = 1.0;
            vecs.push_back(std::move(v));
        }
    } else {
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(matrix.action());
        for (int j = 0; j < dim; ++j) {
            vals.push_back(solver.eigenvalues()[j].real());
            vecs.push_back(solver.eigenvectors().col(j));
        }
    }

    auto order = sort_order(vals);
    int keep = (k <= 0) ? dim : std::min(k, dim);
    for (int i = 0; i < keep; ++i) {
        int j = order[static_cast<size_t>(i)];
        res.eigenvalues.push_back(vals[static_cast<size_t>(j)]);
        Eigen::VectorXcd v = vecs[static_cast<size_t>(j)];
        v.normalize();
        fix_phase(v);
        res.eigenvectors.push_back(std::move(v));
    }
    return res;
}

SpectrumResult leading_eigenpairs(const MatrixBuilder& builder, int k, double tol,
                                  int N_max) {
    if (k < 1) throw std::invalid_argument("at least one eigenpair must be requested");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

    int N = std::max(16, 2 * k);
    SpectrumResult prev = solve_truncation(builder(N), k);
    while (2 * N <= N_max) {
        N *= 2;
        SpectrumResult cur = solve_truncation(builder(N), k);
        double residual = 0.0;
        size_t count = std::min(prev.eigenvalues.size(), cur.eigenvalues.size());
        for (size_t i = 0; i < count; ++i)
            residual = std::max(residual, std::abs(std::abs(cur.eigenvalues[i]) -
                                                   std::abs(prev.eigenvalues[i])));
        cur.residual = residual;
        if (residual < tol) {
            cur.converged = true;
            return cur;
        }
        prev = std::move(cur);
    }
    prev.converged = false;
    return prev;
}

SpectrumResult compute_spectrum(const Inclusion& inc, OperatorKind kind, int k,
                                double tol, int N_max) {
    RotatedInclusion rot = rotate_to_real(inc);
    MatrixBuilder builder = [&rot, kind](int N) {
        return build_operator(rot.inclusion, N, kind);
    };
    SpectrumResult res = leading_eigenpairs(builder, k, tol, N_max);
    res.zeta = rot.zeta;
    return res;
}

NormResult operator_norm(const Inclusion& inc, OperatorKind kind, double tol,
                         int N_max) {
    if (inc.contrast() == 0.0)
        throw std::invalid_argument("operator norm requires a nonzero contrast");
    SpectrumResult res = compute_spectrum(inc, kind, 1, tol, N_max);
    return NormResult{std::abs(res.eigenvalues.at(0)), res.converged, res.N_used};
}

EigenfunctionTrace eigenfunction_trace(const SpectrumResult& result, int k,
                                       int grid_size) {
    if (k < 0 || static_cast<size_t>(k) >= result.eigenvectors.size())
        throw std::out_of_range("eigenpair index out of range");
    if (grid_size < 64)
        throw std::invalid_argument("trace grid must have at least 64 points");

    const Eigen::VectorXcd& coeff = result.eigenvectors[static_cast<size_t>(k)];
    auto idx = signed_indices(result.kind, result.N_used);
    const Complex a = result.mobius.a;
    const double inv_sqrt2pi = 1.0 / std::sqrt(kTwoPi);

    EigenfunctionTrace trace;
    trace.theta.resize(static_cast<size_t>(grid_size));
    trace.values.resize(static_cast<size_t>(grid_size));
    const int N = result.N_used;
    for (int j = 0; j < grid_size; ++j) {
        double theta = kTwoPi * j / grid_size;
        double arg = theta - result.zeta; // rotate back to the build frame
        double psi = mobius_boundary_angle(a, arg);
        Complex step = std::polar(1.0, psi);
        Complex phase = std::polar(1.0, -static_cast<double>(N) * psi);
        Complex sum = 0.0;
        for (size_t i = 0; i < idx.size(); ++i) {
            int m = idx[i];
            // advance the running phase e^{i m psi} from the previous index
            if (i > 0) {
                int dm = m - idx[i - 1];
                for (int s = 0; s < dm; ++s) phase *= step;
            }
            sum += coeff[static_cast<Eigen::Index>(i)] * phase;
        }
        Complex value = sum * inv_sqrt2pi;
        if (result.kind != OperatorKind::DnDiff)
            value *= jacobian_sqrt_boundary(a, arg);
        trace.theta[static_cast<size_t>(j)] = theta;
        trace.values[static_cast<size_t>(j)] = value;
    }

    double norm2 = 0.0;
    for (const Complex& v : trace.values) norm2 += std::norm(v);
    norm2 *= kTwoPi / grid_size;
    double scale = 1.0 / std::sqrt(norm2);
    for (Complex& v : trace.values) v *= scale;
    return trace;
}

} // namespace eitdist
