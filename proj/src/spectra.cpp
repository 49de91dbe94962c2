#include "eitdist/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace eitdist {

namespace {

// r^{2|n|} via exp to avoid pow-loop drift for very large |n|
double r_pow_2n(double r, long n) {
    long m = std::labs(n);
    if (m == 0) return 1.0;
    return std::exp(2.0 * static_cast<double>(m) * std::log(r));
}

} // namespace

ConcentricSpec::ConcentricSpec(double r, double contrast) : r_(r), contrast_(contrast) {
    if (!(r > 0.0 && r < 1.0))
        throw std::invalid_argument("concentric radius must lie in (0,1)");
    if (!(contrast > -1.0))
        throw std::invalid_argument("contrast must exceed -1");
}

double dn_eigenvalue(const ConcentricSpec& spec, long n) {
    if (n == 0) return 0.0;
    double A = spec.contrast();
    double q = r_pow_2n(spec.r(), n);
    return static_cast<double>(std::labs(n)) * (2.0 + A * (1.0 + q)) / (2.0 + A * (1.0 - q));
}

double dn_diff_eigenvalue(const ConcentricSpec& spec, long n) {
    if (n == 0) return 0.0;
    double A = spec.contrast();
    double q = r_pow_2n(spec.r(), n);
    return 2.0 * A * q * static_cast<double>(std::labs(n)) / (2.0 + A * (1.0 - q));
}

double nd_eigenvalue(const ConcentricSpec& spec, long n) {
    if (n == 0)
        throw std::invalid_argument("ND eigenvalue requires a nonzero index");
    double A = spec.contrast();
    double q = r_pow_2n(spec.r(), n);
    return (2.0 + A * (1.0 - q)) / (2.0 + A * (1.0 + q)) / static_cast<double>(std::labs(n));
}

double nd_diff_eigenvalue(const ConcentricSpec& spec, long n) {
    if (n == 0)
        throw std::invalid_argument("ND difference eigenvalue requires a nonzero index");
    double A = spec.contrast();
    double q = r_pow_2n(spec.r(), n);
    return -2.0 * A * q / ((2.0 + A * (1.0 + q)) * static_cast<double>(std::labs(n)));
}

double dn_diff_norm(const ConcentricSpec& spec) {
    // |lambda_n| <= 2|A| n r^{2n}, so the scan may stop once the bound
    // drops below the running maximum past the bound's own peak.
    double A = std::abs(spec.contrast());
    double best = 0.0;
    double peak_n = -1.0 / (2.0 * std::log(spec.r()));
    for (long n = 1;; ++n) {
        best = std::max(best, std::abs(dn_diff_eigenvalue(spec, n)));
        double bound = 2.0 * A * static_cast<double>(n) * r_pow_2n(spec.r(), n);
        if (static_cast<double>(n) > peak_n && bound < best) break;
    }
    return best;
}

double nd_diff_norm(const ConcentricSpec& spec) {
    return std::abs(nd_diff_eigenvalue(spec, 1));
}

} // namespace eitdist
