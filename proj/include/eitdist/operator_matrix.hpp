#pragma once

#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

#include "eitdist/geometry.hpp"

namespace eitdist {

enum class OperatorKind {
    DnDiff, // Lambda(gamma_{C,R}) - Lambda(1), tridiagonal in the phi basis
    NdDiff, // R(gamma_{C,R}) - R(1), dense in the psi basis
    NdFull, // R(gamma_{C,R}) itself, dense in the psi basis
};

const char* kind_name(OperatorKind kind);

/// Signed Fourier indices in storage order: -N..N for the DN difference
/// (index 0 kept as an identically zero row/column), -N..-1,1..N for ND.
std::vector<int> signed_indices(OperatorKind kind, int N);

/// Exact truncated matrix representation of a boundary-operator difference
/// in the Moebius-transformed basis. Entries come from closed forms only.
class TruncatedOperatorMatrix {
public:
    TruncatedOperatorMatrix(OperatorKind kind, int N, Eigen::MatrixXcd entries,
                            Inclusion inclusion, MobiusParam mobius);

    OperatorKind kind() const { return kind_; }
    int truncation() const { return N_; }
    int dim() const { return static_cast<int>(entries_.rows()); }
    const Eigen::MatrixXcd& entries() const { return entries_; }
    const Inclusion& inclusion() const { return inclusion_; }
    const MobiusParam& mobius() const { return mobius_; }

    int storage_index(int signed_index) const;
    int signed_index(int storage_index) const;

    /// Entry addressed by signed indices. For the DN difference the first
    /// index carries the eigenvalue factor (row m uses lambda_m); for ND
    /// the first index is n in lambda_m (h_{n-m} - conj(h_m) h_n).
    Complex entry(int first, int second) const;

    /// Matrix acting on basis-coefficient vectors (DN stores the transpose
    /// of the action, matching the inner-product indexing).
    Eigen::MatrixXcd action() const;

    /// Diagonal eigenvalue factors lambda_m in storage order.
    const Eigen::VectorXd& diagonal_factors() const { return lambda_; }

    /// Diagonal similarity with diag(sqrt|lambda_m|); real symmetric for
    /// real a and single-signed lambda. Requires all lambda_m nonzero,
    /// so the DN index 0 must be excluded by the caller (see action()).
    Eigen::MatrixXd symmetrized_action(const std::vector<int>& storage_subset) const;

    /// Storage indices with |lambda_m| above the given floor.
    std::vector<int> nonzero_factor_indices(double floor = 0.0) const;

    /// ND augmentation column A_{n,0} = -sum_{k != 0} h_k A_{n,k} extending
    /// the representation to H(gamma) P on all of L^2 (off by default; the
    /// corresponding row A_{0,m} is identically zero).
    Eigen::VectorXcd nd_zero_column() const;

    /// Plain-text export: '#' header lines, then "m n re im" per nonzero entry.
    void write_text(std::ostream& os) const;

private:
    OperatorKind kind_;
    int N_;
    Eigen::MatrixXcd entries_;
    Inclusion inclusion_;
    MobiusParam mobius_;
    Eigen::VectorXd lambda_;
};

TruncatedOperatorMatrix build_dn_diff(const Inclusion& inc, int N);
TruncatedOperatorMatrix build_nd(const Inclusion& inc, int N, OperatorKind kind);
TruncatedOperatorMatrix build_operator(const Inclusion& inc, int N, OperatorKind kind);

struct RotatedInclusion {
    Inclusion inclusion; // center rotated to the nonnegative real axis
    double zeta;         // rotation angle removed from the original center
};

/// Rotating the center to the real axis leaves the spectrum unchanged and
/// makes the matrices real.
RotatedInclusion rotate_to_real(const Inclusion& inc);

} // namespace eitdist
