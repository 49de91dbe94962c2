#include "eitdist/operator_matrix.hpp"

#include <cmath>
#include <ostream>

#include "eitdist/format.hpp"
#include "eitdist/spectra.hpp"

namespace eitdist {

const char* kind_name(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::DnDiff: return "dn_diff";
        case OperatorKind::NdDiff: return "nd_diff";
        case OperatorKind::NdFull: return "nd_full";
    }
    return "unknown";
}

std::vector<int> signed_indices(OperatorKind kind, int N) {
    std::vector<int> idx;
    if (kind == OperatorKind::DnDiff) {
        idx.reserve(2 * N + 1);
        for (int m = -N; m <= N; ++m) idx.push_back(m);
    } else {
        idx.reserve(2 * N);
        for (int m = -N; m <= -1; ++m) idx.push_back(m);
        for (int m = 1; m <= N; ++m) idx.push_back(m);
    }
    return idx;
}

TruncatedOperatorMatrix::TruncatedOperatorMatrix(OperatorKind kind, int N,
                                                 Eigen::MatrixXcd entries,
                                                 Inclusion inclusion, MobiusParam mobius)
    : kind_(kind), N_(N), entries_(std::move(entries)),
      inclusion_(std::move(inclusion)), mobius_(mobius) {
    ConcentricSpec spec(mobius_.r, inclusion_.contrast());
    lambda_.resize(dim());
    auto idx = signed_indices(kind_, N_);
    for (int i = 0; i < dim(); ++i) {
        int m = idx[static_cast<size_t>(i)];
        if (kind_ == OperatorKind::DnDiff)
            lambda_[i] = dn_diff_eigenvalue(spec, m);
        else if (kind_ == OperatorKind::NdDiff)
            lambda_[i] = nd_diff_eigenvalue(spec, m);
        else
            lambda_[i] = nd_eigenvalue(spec, m);
    }
}

int TruncatedOperatorMatrix::storage_index(int m) const {
    if (kind_ == OperatorKind::DnDiff) {
        if (m < -N_ || m > N_) throw std::out_of_range("signed index out of range");
        return m + N_;
    }
    if (m == 0 || m < -N_ || m > N_) throw std::out_of_range("signed index out of range");
    return m < 0 ? m + N_ : m + N_ - 1;
}

int TruncatedOperatorMatrix::signed_index(int i) const {
    if (i < 0 || i >= dim()) throw std::out_of_range("storage index out of range");
    if (kind_ == OperatorKind::DnDiff) return i - N_;
    return i < N_ ? i - N_ : i - N_ + 1;
}

Complex TruncatedOperatorMatrix::entry(int first, int second) const {
    return entries_(storage_index(first), storage_index(second));
}

Eigen::MatrixXcd TruncatedOperatorMatrix::action() const {
    if (kind_ == OperatorKind::DnDiff) return entries_.transpose();
    return entries_;
}

std::vector<int> TruncatedOperatorMatrix::nonzero_factor_indices(double floor) const {
    std::vector<int> keep;
    for (int i = 0; i < dim(); ++i)
        if (std::abs(lambda_[i]) > floor) keep.push_back(i);
    return keep;
}

Eigen::MatrixXd TruncatedOperatorMatrix::symmetrized_action(
    const std::vector<int>& subset) const {
    const int n = static_cast<int>(subset.size());
    Eigen::MatrixXcd act = action();
    Eigen::MatrixXd sym(n, n);
    for (int i = 0; i < n; ++i) {
        double di = std::sqrt(std::abs(lambda_[subset[static_cast<size_t>(i)]]));
        for (int j = 0; j < n; ++j) {
            double dj = std::sqrt(std::abs(lambda_[subset[static_cast<size_t>(j)]]));
            sym(i, j) = act(subset[static_cast<size_t>(i)],
                            subset[static_cast<size_t>(j)]).real() * di / dj;
        }
    }
    return sym;
}

Eigen::VectorXcd TruncatedOperatorMatrix::nd_zero_column() const {
    if (kind_ == OperatorKind::DnDiff)
        throw std::invalid_argument("zero-index augmentation applies to ND matrices only");
    Eigen::VectorXcd col = Eigen::VectorXcd::Zero(dim());
    auto idx = signed_indices(kind_, N_);
    for (int i = 0; i < dim(); ++i) {
        Complex s = 0.0;
        for (int j = 0; j < dim(); ++j)
            s += fourier_coeff_h(mobius_.a, idx[static_cast<size_t>(j)]) * entries_(i, j);
        col[i] = -s;
    }
    return col;
}

void TruncatedOperatorMatrix::write_text(std::ostream& os) const {
    os << "# eitdist matrix v1\n";
    os << "# kind=" << kind_name(kind_) << " N=" << N_
       << " C_re=" << fmt17(inclusion_.center().real())
       << " C_im=" << fmt17(inclusion_.center().imag())
       << " R=" << fmt17(inclusion_.radius())
       << " A=" << fmt17(inclusion_.contrast())
       << " a_re=" << fmt17(mobius_.a.real())
       << " a_im=" << fmt17(mobius_.a.imag())
       << " r=" << fmt17(mobius_.r) << "\n";
    auto idx = signed_indices(kind_, N_);
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) {
            Complex v = entries_(i, j);
            if (v == Complex(0.0, 0.0)) continue;
            os << idx[static_cast<size_t>(i)] << ' ' << idx[static_cast<size_t>(j)]
               << ' ' << fmt17(v.real()) << ' ' << fmt17(v.imag()) << '\n';
        }
}

TruncatedOperatorMatrix build_dn_diff(const Inclusion& inc, int N) {
    if (N < 1) throw std::invalid_argument("truncation must be at least 1");
    MobiusParam mp = to_concentric(inc);
    ConcentricSpec spec(mp.r, inc.contrast());
    const double rho2 = mp.rho * mp.rho;
    const double diag_factor = (1.0 + rho2) / (1.0 - rho2);
    const Complex sub = -mp.a / (1.0 - rho2);            // m - n = 1
    const Complex super = -std::conj(mp.a) / (1.0 - rho2); // m - n = -1
    const int dim = 2 * N + 1;
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(dim, dim);
    for (int m = -N; m <= N; ++m) {
        double lam = dn_diff_eigenvalue(spec, m);
        int i = m + N;
        M(i, i) = diag_factor * lam;
        if (m - 1 >= -N) M(i, i - 1) = sub * lam;
        if (m + 1 <= N) M(i, i + 1) = super * lam;
    }
    return TruncatedOperatorMatrix(OperatorKind::DnDiff, N, std::move(M), inc, mp);
}

TruncatedOperatorMatrix build_nd(const Inclusion& inc, int N, OperatorKind kind) {
    if (N < 1) throw std::invalid_argument("truncation must be at least 1");
    if (kind == OperatorKind::DnDiff)
        throw std::invalid_argument("build_nd requires an ND kind");
    MobiusParam mp = to_concentric(inc);
    ConcentricSpec spec(mp.r, inc.contrast());
    auto idx = signed_indices(kind, N);
    const int dim = 2 * N;
    // h_k for |k| <= 2N
    std::vector<Complex> h(static_cast<size_t>(4 * N + 1));
    for (int k = -2 * N; k <= 2 * N; ++k)
        h[static_cast<size_t>(k + 2 * N)] = fourier_coeff_h(mp.a, k);
    auto hat = [&](int k) { return h[static_cast<size_t>(k + 2 * N)]; };
    Eigen::MatrixXcd M(dim, dim);
    for (int i = 0; i < dim; ++i) {
        int n = idx[static_cast<size_t>(i)];
        for (int j = 0; j < dim; ++j) {
            int m = idx[static_cast<size_t>(j)];
            double lam = (kind == OperatorKind::NdDiff) ? nd_diff_eigenvalue(spec, m)
                                                        : nd_eigenvalue(spec, m);
            M(i, j) = lam * (hat(n - m) - std::conj(hat(m)) * hat(n));
        }
    }
    return TruncatedOperatorMatrix(kind, N, std::move(M), inc, mp);
}

TruncatedOperatorMatrix build_operator(const Inclusion& inc, int N, OperatorKind kind) {
    if (kind == OperatorKind::DnDiff) return build_dn_diff(inc, N);
    return build_nd(inc, N, kind);
}

RotatedInclusion rotate_to_real(const Inclusion& inc) {
    double c = std::abs(inc.center());
    if (c == 0.0) return RotatedInclusion{inc, 0.0};
    double zeta = normalize_angle(std::arg(inc.center()));
    return RotatedInclusion{Inclusion(Complex(c, 0.0), inc.radius(), inc.contrast()), zeta};
}

} // namespace eitdist
