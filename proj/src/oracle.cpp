#include "eitdist/oracle.hpp"

#include <cmath>
#include <random>

namespace eitdist {

namespace {

constexpr double kTailBudget = 1e-10;
constexpr double kStagnationTol = 1e-6;

Eigen::VectorXcd to_vector(const BoundaryFunction& f) {
    return Eigen::Map<const Eigen::VectorXcd>(f.samples.data(),
                                              static_cast<Eigen::Index>(f.samples.size()));
}

BoundaryFunction from_vector(const Eigen::VectorXcd& v) {
    BoundaryFunction f;
    f.samples.assign(v.data(), v.data() + v.size());
    return f;
}

} // namespace

BoundaryFunction make_fourier_mode(int n, int M) {
    BoundaryFunction f;
    f.samples.resize(static_cast<size_t>(M));
    for (int j = 0; j < M; ++j)
        f.samples[static_cast<size_t>(j)] = std::polar(1.0, n * kTwoPi * j / M);
    return f;
}

bool is_mean_free(const BoundaryFunction& f, double rel_tol) {
    Complex mean = 0.0;
    double peak = 0.0;
    for (const Complex& v : f.samples) {
        mean += v;
        peak = std::max(peak, std::abs(v));
    }
    mean /= static_cast<double>(f.samples.size());
    return std::abs(mean) <= rel_tol * std::max(peak, 1e-300);
}

Complex boundary_inner(const BoundaryFunction& f, const BoundaryFunction& g,
                       Complex a, int weight_exponent) {
    if (f.size() != g.size())
        throw std::invalid_argument("sample grids must match");
    const int M = f.size();
    Complex sum = 0.0;
    for (int j = 0; j < M; ++j) {
        Complex term = f.samples[static_cast<size_t>(j)] *
                       std::conj(g.samples[static_cast<size_t>(j)]);
        if (weight_exponent != 0) {
            double J = jacobian_sqrt_boundary(a, kTwoPi * j / M);
            term *= (weight_exponent > 0) ? J : 1.0 / J;
        }
        sum += term;
    }
    return sum * (kTwoPi / M);
}

double boundary_norm(const BoundaryFunction& f, Complex a, int weight_exponent) {
    return std::sqrt(boundary_inner(f, f, a, weight_exponent).real());
}

int oracle_grid_size(int K) { return std::max(1024, 8 * K); }

DiskOracle::DiskOracle(const Inclusion& inc, int M)
    : inc_(inc), mp_(to_concentric(inc)), M_(M), n_max_(M / 2 - 1) {
    if (M < 8) throw std::invalid_argument("oracle grid too small");
    theta_.resize(static_cast<size_t>(M_));
    image_angle_.resize(static_cast<size_t>(M_));
    jacobian_.resize(static_cast<size_t>(M_));
    for (int j = 0; j < M_; ++j) {
        double theta = kTwoPi * j / M_;
        theta_[static_cast<size_t>(j)] = theta;
        image_angle_[static_cast<size_t>(j)] = mobius_boundary_angle(mp_.a, theta);
        jacobian_[static_cast<size_t>(j)] = jacobian_sqrt_boundary(mp_, theta);
    }
    const int modes = 2 * n_max_ + 1;
    eval_at_images_.resize(M_, modes);
    analysis_.resize(modes, M_);
    for (int j = 0; j < M_; ++j)
        for (int n = -n_max_; n <= n_max_; ++n) {
            eval_at_images_(j, n + n_max_) =
                std::polar(1.0, n * image_angle_[static_cast<size_t>(j)]);
            analysis_(n + n_max_, j) =
                std::polar(1.0 / M_, -n * theta_[static_cast<size_t>(j)]);
        }
}

Eigen::VectorXcd DiskOracle::analyze(const BoundaryFunction& f) const {
    if (f.size() != M_)
        throw std::invalid_argument("sample grid does not match the oracle plan");
    return analysis_ * to_vector(f);
}

BoundaryFunction DiskOracle::evaluate_at_images(const Eigen::VectorXcd& coeff) const {
    return from_vector(eval_at_images_ * coeff);
}

BoundaryFunction DiskOracle::compose(const BoundaryFunction& f) const {
    return evaluate_at_images(analyze(f));
}

ApplyResult DiskOracle::apply_dn_diff(const BoundaryFunction& f, int K) const {
    if (K < 1) throw std::invalid_argument("concentric truncation must be at least 1");
    if (M_ < 8 * K)
        throw std::invalid_argument("oracle grid must oversample the truncation 8x");
    ConcentricSpec spec(mp_.r, inc_.contrast());

    Eigen::VectorXcd composed_coeff = analysis_ * (eval_at_images_ * analyze(f));
    double total = composed_coeff.squaredNorm();
    double tail = 0.0;
    Eigen::VectorXcd scaled = Eigen::VectorXcd::Zero(composed_coeff.size());
    for (int n = -n_max_; n <= n_max_; ++n) {
        if (std::abs(n) > K)
            tail += std::norm(composed_coeff[n + n_max_]);
        else
            scaled[n + n_max_] = dn_diff_eigenvalue(spec, n) * composed_coeff[n + n_max_];
    }
    ApplyResult out;
    out.full_accuracy = (total == 0.0) || (tail <= kTailBudget * total);
    out.value = evaluate_at_images(scaled);
    for (int j = 0; j < M_; ++j)
        out.value.samples[static_cast<size_t>(j)] *= jacobian_[static_cast<size_t>(j)];
    return out;
}

ApplyResult DiskOracle::apply_nd(const BoundaryFunction& g, int K,
                                 OperatorKind kind) const {
    if (kind == OperatorKind::DnDiff)
        throw std::invalid_argument("apply_nd requires an ND kind");
    if (K < 1) throw std::invalid_argument("concentric truncation must be at least 1");
    if (M_ < 8 * K)
        throw std::invalid_argument("oracle grid must oversample the truncation 8x");
    if (!is_mean_free(g))
        throw std::invalid_argument("ND operators act on mean-free data");
    ConcentricSpec spec(mp_.r, inc_.contrast());

    // J^{1/2} M_a g
    BoundaryFunction t = compose(g);
    for (int j = 0; j < M_; ++j)
        t.samples[static_cast<size_t>(j)] *= jacobian_[static_cast<size_t>(j)];
    Eigen::VectorXcd coeff = analyze(t);
    double total = coeff.squaredNorm();
    double tail = 0.0;
    Eigen::VectorXcd scaled = Eigen::VectorXcd::Zero(coeff.size());
    for (int n = -n_max_; n <= n_max_; ++n) {
        if (n == 0) continue;
        if (std::abs(n) > K) {
            tail += std::norm(coeff[n + n_max_]);
        } else {
            double lam = (kind == OperatorKind::NdDiff) ? nd_diff_eigenvalue(spec, n)
                                                        : nd_eigenvalue(spec, n);
            scaled[n + n_max_] = lam * coeff[n + n_max_];
        }
    }
    ApplyResult out;
    out.full_accuracy = (total == 0.0) || (tail <= kTailBudget * total);
    out.value = evaluate_at_images(scaled);
    // grounding projection P = Id - L
    Complex mean = 0.0;
    for (const Complex& v : out.value.samples) mean += v;
    mean /= static_cast<double>(M_);
    for (Complex& v : out.value.samples) v -= mean;
    return out;
}

BoundaryFunction DiskOracle::sample_phi(int n) const {
    BoundaryFunction f;
    f.samples.resize(static_cast<size_t>(M_));
    const double amp = 1.0 / std::sqrt(kTwoPi);
    for (int j = 0; j < M_; ++j)
        f.samples[static_cast<size_t>(j)] =
            std::polar(amp, n * image_angle_[static_cast<size_t>(j)]);
    return f;
}

BoundaryFunction DiskOracle::sample_psi(int n) const {
    if (n == 0)
        throw std::invalid_argument("psi basis excludes the zero index");
    BoundaryFunction f = sample_phi(n);
    for (int j = 0; j < M_; ++j)
        f.samples[static_cast<size_t>(j)] *= jacobian_[static_cast<size_t>(j)];
    return f;
}

Complex DiskOracle::dn_matrix_entry(int m, int n, int K) const {
    BoundaryFunction image = apply_dn_diff(sample_phi(m), K).value;
    return boundary_inner(image, sample_phi(n), mp_.a, +1);
}

Complex DiskOracle::nd_matrix_entry(int n, int m, int K, OperatorKind kind) const {
    BoundaryFunction image = apply_nd(sample_psi(m), K, kind).value;
    return boundary_inner(image, sample_psi(n), mp_.a, -1);
}

ApplyResult apply_dn_diff(const Inclusion& inc, const BoundaryFunction& f, int K) {
    return DiskOracle(inc, f.size()).apply_dn_diff(f, K);
}

ApplyResult apply_nd_diff(const Inclusion& inc, const BoundaryFunction& g, int K) {
    return DiskOracle(inc, g.size()).apply_nd(g, K, OperatorKind::NdDiff);
}

PowerIterationResult norm_by_power_iteration(
    const std::function<BoundaryFunction(const BoundaryFunction&)>& op, int M,
    int max_iterations, unsigned seed, bool mean_free) {
    if (max_iterations < 50)
        throw std::invalid_argument("power iteration needs at least 50 iterations");
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    BoundaryFunction v;
    v.samples.resize(static_cast<size_t>(M));
    for (Complex& s : v.samples) s = Complex(dist(rng), dist(rng));
    if (mean_free) {
        Complex mean = 0.0;
        for (const Complex& s : v.samples) mean += s;
        mean /= static_cast<double>(M);
        for (Complex& s : v.samples) s -= mean;
    }

    PowerIterationResult res;
    double prev = 0.0;
    for (int it = 0; it < max_iterations; ++it) {
        BoundaryFunction w = op(v);
        Complex num = boundary_inner(w, v, 0.0, 0);
        Complex den = boundary_inner(v, v, 0.0, 0);
        double rayleigh = std::abs(num / den);
        res.norm = rayleigh;
        res.iterations = it + 1;
        double change = std::abs(rayleigh - prev);
        if (it >= 1 && change <= 1e-10 * std::max(rayleigh, 1e-300)) {
            res.converged = true;
            return res;
        }
        res.converged = change <= kStagnationTol * std::max(rayleigh, 1e-300);
        prev = rayleigh;
        double scale = 1.0 / std::sqrt(boundary_inner(w, w, 0.0, 0).real());
        for (Complex& s : w.samples) s *= scale;
        v = std::move(w);
    }
    return res;
}

} // namespace eitdist
