#pragma once

#include <Eigen/Core>

#include <functional>
#include <span>
#include <vector>

#include "bethesym/rational_function.hpp"

namespace bethesym {

using RfMatrix = Eigen::Matrix<Rf, Eigen::Dynamic, Eigen::Dynamic>;
using RfVector = Eigen::Matrix<Rf, Eigen::Dynamic, 1>;
using WeightMatrix = Eigen::Matrix<Rf, 4, 4>;

enum class DetMethod { Cofactor, FractionFree };

/// Cofactor expansion along the first row.
template <typename Derived>
typename Derived::Scalar determinant_cofactor(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    const auto n = m.rows();
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    Scalar acc(0);
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> minor(n - 1, n - 1);
    for (Eigen::Index c = 0; c < n; ++c) {
        if (m(0, c) == Scalar(0)) continue;
        for (Eigen::Index i = 1; i < n; ++i) {
            Eigen::Index jj = 0;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (j == c) continue;
                minor(i - 1, jj++) = m(i, j);
            }
        }
        Scalar term = m(0, c) * determinant_cofactor(minor);
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/// Bareiss fraction-free elimination. Rows are cleared of denominators first
/// so every intermediate division is an exact Laurent-polynomial division.
Rf determinant_fraction_free(const RfMatrix& m);

/// Dispatch: cofactor below dimension 4, fraction-free from 4 up.
Rf determinant(const RfMatrix& m, DetMethod method);
Rf determinant(const RfMatrix& m);

/// Signed or plain sum of term(sigma) over all permutations of {1..n},
/// visited in lexicographic order. sigma is passed 1-based.
Rf permutation_sum(int n, const std::function<Rf(std::span<const int>)>& term, bool signed_sum,
                   int cap = 7);

template <typename ScalarT>
Eigen::Matrix<ScalarT, Eigen::Dynamic, Eigen::Dynamic> kronecker(
    const Eigen::Matrix<ScalarT, Eigen::Dynamic, Eigen::Dynamic>& a,
    const Eigen::Matrix<ScalarT, Eigen::Dynamic, Eigen::Dynamic>& b) {
    Eigen::Matrix<ScalarT, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                               a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            for (Eigen::Index k = 0; k < b.rows(); ++k)
                for (Eigen::Index l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

/// Embeds a two-space operator into a chain of `spaces` qubit spaces
/// (space 0 = most significant bit). The 4x4 block indexes (s1, s2) pairs.
RfMatrix embed_pair(const WeightMatrix& op, int s1, int s2, int spaces);

bool matrices_equal(const RfMatrix& a, const RfMatrix& b);
int count_differing_entries(const RfMatrix& a, const RfMatrix& b);
bool is_zero_matrix(const RfMatrix& a);

}  // namespace bethesym
