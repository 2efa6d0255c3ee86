#include "bethesym/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "bethesym/errors.hpp"

namespace bethesym {

Rf determinant_fraction_free(const RfMatrix& m) {
    const Eigen::Index n = m.rows();
    if (n == 0) return Rf(1);

    // Clear denominators row by row: row i scaled by the product of its entry
    // denominators is polynomial; the determinant divides out the scales.
    std::vector<std::vector<LaurentPolynomial>> a(n);
    Rf scale(1);
    for (Eigen::Index i = 0; i < n; ++i) {
        LaurentPolynomial rowden(1);
        for (Eigen::Index j = 0; j < n; ++j) rowden *= m(i, j).den();
        scale = scale * Rf(rowden);
        a[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n));
        for (Eigen::Index j = 0; j < n; ++j) {
            LaurentPolynomial e = m(i, j).num();
            for (Eigen::Index k = 0; k < n; ++k)
                if (k != j) e *= m(i, k).den();
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e;
        }
    }

    int sign = 1;
    LaurentPolynomial prev(1);
    for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(n); ++k) {
        if (a[k][k].is_zero()) {
            std::size_t piv = k + 1;
            while (piv < static_cast<std::size_t>(n) && a[piv][k].is_zero()) ++piv;
            if (piv == static_cast<std::size_t>(n)) return Rf(0);
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < static_cast<std::size_t>(n); ++i) {
            for (std::size_t j = k + 1; j < static_cast<std::size_t>(n); ++j) {
                LaurentPolynomial t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                a[i][j] = exact_divide(t, prev);
            }
            a[i][k] = LaurentPolynomial();
        }
        prev = a[k][k];
    }
    LaurentPolynomial det = a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    Rf result = Rf(det) / scale;
    return sign < 0 ? -result : result;
}

Rf determinant(const RfMatrix& m, DetMethod method) {
    if (m.rows() != m.cols() || m.rows() < 1) throw ShapeMismatch("determinant needs a square matrix");
    return method == DetMethod::Cofactor ? determinant_cofactor(m) : determinant_fraction_free(m);
}

Rf determinant(const RfMatrix& m) {
    if (m.rows() != m.cols() || m.rows() < 1) throw ShapeMismatch("determinant needs a square matrix");
    return m.rows() < 4 ? determinant_cofactor(m) : determinant_fraction_free(m);
}

Rf permutation_sum(int n, const std::function<Rf(std::span<const int>)>& term, bool signed_sum,
                   int cap) {
    if (n < 1) throw ShapeMismatch("permutation_sum needs n >= 1");
    if (n > cap)
        throw CapExceeded("permutation_sum: n = " + std::to_string(n) + " exceeds cap " +
                          std::to_string(cap));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    Rf acc(0);
    do {
        Rf t = term(std::span<const int>(perm.data(), perm.size()));
        if (signed_sum) {
            int inv = 0;
            for (std::size_t i = 0; i < perm.size(); ++i)
                for (std::size_t j = i + 1; j < perm.size(); ++j)
                    if (perm[i] > perm[j]) ++inv;
            if (inv % 2) t = -t;
        }
        acc += t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

RfMatrix embed_pair(const WeightMatrix& op, int s1, int s2, int spaces) {
    const int dim = 1 << spaces;
    RfMatrix out = RfMatrix::Zero(dim, dim);
    auto bit = [spaces](int state, int space) { return (state >> (spaces - 1 - space)) & 1; };
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            bool spectator_ok = true;
            for (int s = 0; s < spaces; ++s)
                if (s != s1 && s != s2 && bit(r, s) != bit(c, s)) {
                    spectator_ok = false;
                    break;
                }
            if (!spectator_ok) continue;
            int rr = bit(r, s1) * 2 + bit(r, s2);
            int cc = bit(c, s1) * 2 + bit(c, s2);
            out(r, c) = op(rr, cc);
        }
    }
    return out;
}

bool matrices_equal(const RfMatrix& a, const RfMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

int count_differing_entries(const RfMatrix& a, const RfMatrix& b) {
    int n = 0;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) ++n;
    return n;
}

bool is_zero_matrix(const RfMatrix& a) {
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero()) return false;
    return true;
}

}  // namespace bethesym
