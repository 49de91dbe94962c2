#include "eitdist/bounds.hpp"

#include <atomic>
#include <cmath>
#include <thread>

namespace eitdist {

namespace {

constexpr double kBoundSlack = 1e-9; // relative to the upper bound

// runs f(i) for i in [0, n) on the given number of workers, results indexed
template <class F>
void run_indexed(int n, int threads, F&& f) {
    if (threads <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) f(i);
    };
    std::vector<std::thread> pool;
    int count = std::min(threads, n);
    pool.reserve(static_cast<size_t>(count));
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

// Moebius depth parameter of the ball whose image of B_{0,r} has center c:
// c r^2 rho^2 + (1 - r^2) rho - c = 0.
double rho_for_center(double c, double r) {
    if (c == 0.0) return 0.0;
    double A = c * r * r;
    double B = 1.0 - r * r;
    double disc = B * B + 4.0 * A * c;
    return (-B + std::sqrt(disc)) / (2.0 * A);
}

} // namespace

BoundInterval dn_bound_interval(double rho) {
    if (!(rho >= 0.0 && rho < 1.0))
        throw std::invalid_argument("depth parameter rho must lie in [0,1)");
    return BoundInterval{(1.0 - rho) / (1.0 + rho),
                         std::sqrt((1.0 - rho * rho) / (1.0 + rho * rho))};
}

BoundInterval nd_bound_interval(double rho) {
    if (!(rho >= 0.0 && rho < 1.0))
        throw std::invalid_argument("depth parameter rho must lie in [0,1)");
    return BoundInterval{(1.0 - rho) / (1.0 + rho),
                         std::sqrt(1.0 + rho * rho) / (1.0 - rho * rho)};
}

std::vector<BoundsReport> verify_bounds(double r, double contrast,
                                        const std::vector<double>& rho_grid,
                                        OperatorKind kind, double tol, int threads) {
    ConcentricSpec spec(r, contrast);
    double concentric = (kind == OperatorKind::DnDiff) ? dn_diff_norm(spec)
                                                       : nd_diff_norm(spec);
    std::vector<BoundsReport> reports(rho_grid.size());
    run_indexed(static_cast<int>(rho_grid.size()), threads, [&](int i) {
        double rho = rho_grid[static_cast<size_t>(i)];
        BoundsReport rep;
        rep.rho = rho;
        rep.kind = kind;
        BoundInterval bounds = (kind == OperatorKind::DnDiff) ? dn_bound_interval(rho)
                                                              : nd_bound_interval(rho);
        rep.lower = bounds.lower;
        rep.upper = bounds.upper;
        rep.concentric_norm = concentric;
        Inclusion inc = from_concentric(Complex(rho, 0.0), r, contrast);
        NormResult norm = operator_norm(inc, kind, tol);
        rep.nonconcentric_norm = norm.value;
        rep.converged = norm.converged;
        rep.ratio = concentric / norm.value;
        double eps = kBoundSlack * rep.upper;
        rep.in_bounds = (rep.ratio >= rep.lower - eps) && (rep.ratio <= rep.upper + eps);
        reports[static_cast<size_t>(i)] = rep;
    });
    return reports;
}

std::vector<FixedSizeReport> verify_fixed_size(double radius, double contrast,
                                               const std::vector<double>& c_grid,
                                               OperatorKind kind, int k, double tol,
                                               int threads) {
    for (double c : c_grid)
        if (!(c >= 0.0 && c <= 1.0 - radius))
            throw std::invalid_argument("center must satisfy |C| <= 1 - R");
    ConcentricSpec spec(radius, contrast);
    double concentric = (kind == OperatorKind::DnDiff) ? dn_diff_norm(spec)
                                                       : nd_diff_norm(spec);
    std::vector<FixedSizeReport> reports(c_grid.size());
    run_indexed(static_cast<int>(c_grid.size()), threads, [&](int i) {
        double c = c_grid[static_cast<size_t>(i)];
        FixedSizeReport rep;
        rep.c = c;
        rep.rho_small = rho_for_center(c, radius);
        Inclusion inc(Complex(c, 0.0), radius, contrast);
        SpectrumResult spectrum = compute_spectrum(inc, kind, k, tol);
        rep.converged = spectrum.converged;
        for (double v : spectrum.eigenvalues) rep.leading.push_back(std::abs(v));
        rep.norm = rep.leading.empty() ? 0.0 : rep.leading.front();
        if (kind == OperatorKind::DnDiff) {
            double factor = dn_bound_interval(rep.rho_small).upper;
            rep.bound_ok = concentric <= factor * rep.norm + kBoundSlack * concentric;
        } else {
            rep.bound_ok = true;
        }
        reports[static_cast<size_t>(i)] = rep;
    });
    return reports;
}

std::vector<MonotonicityReport> verify_monotonicity(Complex center,
                                                    const std::vector<double>& radii,
                                                    double contrast, double tol) {
    for (double R : radii)
        if (!(std::abs(center) + R < 1.0))
            throw std::invalid_argument("nested balls must stay inside the unit disk");
    std::vector<MonotonicityReport> reports;
    reports.reserve(radii.size());
    for (double R : radii) {
        Inclusion inc(center, R, contrast);
        NormResult norm = operator_norm(inc, OperatorKind::DnDiff, tol);
        reports.push_back(MonotonicityReport{R, norm.value, norm.converged});
    }
    return reports;
}

} // namespace eitdist
