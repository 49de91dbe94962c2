// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Kept independent of doctest so the output stays a plain list.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "eitdist/bounds.hpp"
#include "eitdist/eigensolve.hpp"
#include "eitdist/oracle.hpp"
#include "eitdist/spectra.hpp"

using namespace eitdist;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(const char* name, bool ok) {
    std::printf("%-42s %s\n", name, ok ? "PASS" : "FAIL");
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Inclusion random_inclusion(std::mt19937& rng, double rho_cap) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (;;) {
        double c = uni(rng) * 0.9;
        double ang = uni(rng) * kTwoPi - kPi;
        double R = 0.02 + uni(rng) * (0.95 - c - 0.02);
        if (c + R >= 0.97) continue;
        double A = -0.9 + 5.0 * uni(rng);
        if (std::abs(A) < 0.05) continue;
        Inclusion inc(std::polar(c, ang), R, A);
        if (to_concentric(inc).rho <= rho_cap) return inc;
    }
}

bool criterion_roundtrip() {
    auto start = Clock::now();
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    bool ok = true;
    for (int i = 0; i < 10000; ++i) {
        double rho = uni(rng) * 0.95;
        double ang = uni(rng) * kTwoPi - kPi;
        double r = 0.01 + uni(rng) * 0.95;
        Inclusion inc = from_concentric(std::polar(rho, ang), r, 1.0);
        MobiusParam mp = to_concentric(inc);
        Inclusion back = from_concentric(mp.a, mp.r, 1.0);
        ok = ok && std::abs(back.center() - inc.center()) < 1e-13 &&
             std::abs(back.radius() - inc.radius()) < 1e-13;
    }
    return ok && seconds_since(start) < 1.0;
}

bool criterion_matrix_oracle() {
    auto start = Clock::now();
    std::mt19937 rng(202);
    for (int trial = 0; trial < 50; ++trial) {
        Inclusion inc = random_inclusion(rng, 0.9);
        const int K = 48;
        DiskOracle oracle(inc, oracle_grid_size(K));
        const Complex a = oracle.mobius().a;

        // one operator application per column, shared across all rows
        auto dn = build_dn_diff(inc, 16);
        std::vector<BoundaryFunction> phi;
        for (int n = -16; n <= 16; ++n) phi.push_back(oracle.sample_phi(n));
        for (int m = -16; m <= 16; ++m) {
            BoundaryFunction image =
                oracle.apply_dn_diff(phi[static_cast<size_t>(m + 16)], K).value;
            for (int n = -16; n <= 16; ++n) {
                Complex entry =
                    boundary_inner(image, phi[static_cast<size_t>(n + 16)], a, +1);
                if (std::abs(dn.entry(m, n) - entry) >= 1e-10) return false;
            }
        }

        auto nd = build_nd(inc, 12, OperatorKind::NdDiff);
        auto idx = signed_indices(OperatorKind::NdDiff, 12);
        std::vector<BoundaryFunction> psi;
        for (int n : idx) psi.push_back(oracle.sample_psi(n));
        for (size_t jm = 0; jm < idx.size(); ++jm) {
            BoundaryFunction image =
                oracle.apply_nd(psi[jm], K, OperatorKind::NdDiff).value;
            for (size_t jn = 0; jn < idx.size(); ++jn) {
                Complex entry = boundary_inner(image, psi[jn], a, -1);
                if (std::abs(nd.entry(idx[jn], idx[jm]) - entry) >= 1e-10) return false;
            }
        }
    }
    return seconds_since(start) < 30.0;
}

bool criterion_convergence() {
    Inclusion inc(Complex(0.7, 0.0), 0.2, 2.0);
    auto coarse = solve_truncation(build_dn_diff(inc, 128), 5);
    auto fine = solve_truncation(build_dn_diff(inc, 256), 5);
    for (size_t i = 0; i < 5; ++i)
        if (std::abs(std::abs(coarse.eigenvalues[i]) - std::abs(fine.eigenvalues[i])) >=
            1e-12)
            return false;
    return true;
}

bool sweep_in_bounds(double r, OperatorKind kind, bool ratio_below_one) {
    std::vector<double> rho_grid;
    for (int i = 0; i <= 19; ++i) rho_grid.push_back(0.05 * i);
    auto reports = verify_bounds(r, 2.0, rho_grid, kind, 1e-12, 1);
    for (const auto& rep : reports) {
        if (!rep.converged) continue;
        if (!rep.in_bounds) return false;
        if (ratio_below_one && rep.ratio > 1.0 + 1e-9) return false;
        if (!ratio_below_one && rep.ratio < 1.0 - 1e-9) return false;
    }
    return true;
}

bool criterion_dn_bounds() {
    auto start = Clock::now();
    for (double r : {0.01, 0.1, 0.5, 0.9})
        if (!sweep_in_bounds(r, OperatorKind::DnDiff, true)) return false;
    return seconds_since(start) < 300.0;
}

bool criterion_nd_bounds() {
    for (double r : {0.01, 0.1, 0.5})
        if (!sweep_in_bounds(r, OperatorKind::NdDiff, false)) return false;
    return true;
}

bool criterion_depth_monotonicity() {
    std::vector<double> prev_leading;
    double prev_nd = 0.0;
    for (int i = 0; i <= 8; ++i) {
        double c = 0.1 * i;
        Inclusion inc(Complex(c, 0.0), 0.1, 2.0);
        auto dn = compute_spectrum(inc, OperatorKind::DnDiff, 10, 1e-12);
        if (!dn.converged) return false;
        std::vector<double> leading;
        for (double v : dn.eigenvalues) leading.push_back(std::abs(v));
        if (!prev_leading.empty())
            for (size_t j = 0; j < leading.size(); ++j)
                if (leading[j] < prev_leading[j] * (1.0 - 1e-10)) return false;
        prev_leading = leading;

        auto nd = operator_norm(inc, OperatorKind::NdDiff, 1e-12);
        if (!nd.converged) return false;
        if (i > 0 && nd.value < prev_nd * (1.0 - 1e-10)) return false;
        prev_nd = nd.value;
    }
    return true;
}

bool criterion_size_monotonicity() {
    for (double A : {2.0, -0.5}) {
        auto reports = verify_monotonicity(Complex(0.3, 0.0), {0.1, 0.2, 0.3}, A);
        for (const auto& rep : reports)
            if (!rep.converged) return false;
        if (!(reports[1].norm > reports[0].norm)) return false;
        if (!(reports[2].norm > reports[1].norm)) return false;
    }
    return true;
}

bool criterion_power_iteration() {
    std::mt19937 rng(303);
    for (int trial = 0; trial < 10; ++trial) {
        Inclusion inc = random_inclusion(rng, 0.75);
        OperatorKind kind = (trial % 2 == 0) ? OperatorKind::DnDiff
                                             : OperatorKind::NdDiff;
        double matrix = operator_norm(inc, kind, 1e-12).value;

        const int K = 64;
        const int M = oracle_grid_size(K);
        DiskOracle oracle(inc, M);
        auto op = [&](const BoundaryFunction& f) {
            if (kind == OperatorKind::DnDiff) return oracle.apply_dn_diff(f, K).value;
            return oracle.apply_nd(f, K, kind).value;
        };
        auto power = norm_by_power_iteration(op, M, 800, 404 + trial,
                                             kind != OperatorKind::DnDiff);
        if (std::abs(power.norm - matrix) > 1e-6 * matrix) return false;
    }
    return true;
}

bool criterion_properties() {
    std::mt19937 rng(505);
    std::uniform_real_distribution<double> uni(0.0, 1.0);

    // involution of the disk automorphism
    for (int i = 0; i < 500; ++i) {
        Complex a = std::polar(uni(rng) * 0.95, uni(rng) * kTwoPi);
        Complex x = std::polar(uni(rng), uni(rng) * kTwoPi);
        if (std::abs(mobius_apply(a, mobius_apply(a, x)) - x) > 1e-12) return false;
    }

    // rotation equivariance of the concentric map
    for (int i = 0; i < 200; ++i) {
        double c = uni(rng) * 0.7, R = 0.02 + uni(rng) * 0.2;
        if (c + R >= 0.97) continue;
        double ang = uni(rng) * kTwoPi - kPi;
        MobiusParam base = to_concentric(Inclusion(Complex(c, 0.0), R, 1.0));
        MobiusParam rot = to_concentric(Inclusion(std::polar(c, ang), R, 1.0));
        if (std::abs(rot.a - base.a * std::polar(1.0, ang)) > 1e-12) return false;
        if (std::abs(rot.r - base.r) > 1e-12) return false;
    }

    // weighted orthonormality of the transformed bases
    {
        Complex a(0.35, -0.2);
        const int M = 4096;
        for (int m : {-6, -1, 2, 7})
            for (int n : {-6, 0, 2, 5}) {
                Complex ip = 0.0;
                for (int j = 0; j < M; ++j) {
                    double t = kTwoPi * j / M;
                    ip += basis_phi(a, m, t) * std::conj(basis_phi(a, n, t)) *
                          jacobian_sqrt_boundary(a, t);
                }
                ip *= kTwoPi / M;
                double expected = (m == n) ? 1.0 : 0.0;
                if (std::abs(ip - expected) > 1e-10) return false;
            }
    }

    // spectrum of the complex representation stays real
    {
        Inclusion inc(Complex(0.3, -0.5), 0.1, 4.0);
        auto mat = build_operator(inc, 32, OperatorKind::NdDiff);
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(mat.action(), false);
        if (es.eigenvalues().imag().cwiseAbs().maxCoeff() > 1e-10) return false;
    }

    // ND eigenvalue monotone decay and DN non-monotonicity at r = 0.95
    {
        ConcentricSpec nd(0.6, 2.0);
        for (int n = 2; n <= 60; ++n)
            if (std::abs(nd_diff_eigenvalue(nd, n)) >
                std::abs(nd_diff_eigenvalue(nd, n - 1)) * (1.0 + 1e-14))
                return false;
        ConcentricSpec dn(0.95, 2.0);
        bool witness = false;
        for (int n = 1; n < 200; ++n)
            if (std::abs(dn_diff_eigenvalue(dn, n + 1)) >
                std::abs(dn_diff_eigenvalue(dn, n)))
                witness = true;
        if (!witness) return false;
    }

    // ratio insensitivity to the contrast at r = 0.1, rho = 0.5
    {
        double lo = 1e300, hi = 0.0;
        for (double A : {0.1, 2.0, 10.0}) {
            auto rep = verify_bounds(0.1, A, {0.5}, OperatorKind::DnDiff, 1e-12, 1);
            if (!rep.at(0).converged) return false;
            lo = std::min(lo, rep[0].ratio);
            hi = std::max(hi, rep[0].ratio);
        }
        if (hi - lo >= 0.02) return false;
    }
    return true;
}

} // namespace

int main() {
    report("1. geometry round-trip", criterion_roundtrip());
    report("2. matrix-entry oracle equivalence", criterion_matrix_oracle());
    report("3. eigenvalue convergence N=128 vs N=256", criterion_convergence());
    report("4. dn bound membership", criterion_dn_bounds());
    report("5. nd bound membership", criterion_nd_bounds());
    report("6. depth monotonicity", criterion_depth_monotonicity());
    report("7. inclusion-size monotonicity", criterion_size_monotonicity());
    report("8. power-iteration cross-check", criterion_power_iteration());
    report("9. property suites", criterion_properties());
    return failures == 0 ? 0 : 1;
}
