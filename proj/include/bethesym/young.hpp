#pragma once

#include <vector>

#include "bethesym/errors.hpp"

namespace bethesym {

/// Weakly decreasing nonnegative parts, zero-padded to a declared row count.
class YoungDiagram {
  public:
    YoungDiagram() = default;
    YoungDiagram(std::vector<int> parts, int rows);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int j) const { return parts_.at(static_cast<std::size_t>(j)); }  // 0-based
    bool fits_in_box(int width) const { return parts_.empty() || parts_[0] <= width; }
    bool is_empty() const;

    /// lambda_j = x_{N-j+1} - N + j - 1 for strictly increasing positions x.
    static YoungDiagram from_positions(const std::vector<int>& x);
    /// Inverse transform; positions are 1-based and strictly increasing.
    std::vector<int> to_positions() const;

    /// Reflection in the rows x width box: lambda^vee_j = width - lambda_{N+1-j}.
    YoungDiagram complement_in_box(int width) const;

    /// hat(lambda)_i = #{ j : lambda_j <= M - i }, i = 1..M.
    YoungDiagram hat(int M) const;

    /// lambda = ((M-1)^{n_{M-1}}, ..., 1^{n_1}, 0^{n_0}) for site occupations n.
    static YoungDiagram from_occupations(const std::vector<int>& occupations);

    friend bool operator==(const YoungDiagram& a, const YoungDiagram& b) {
        return a.parts_ == b.parts_;
    }

  private:
    std::vector<int> parts_;
};

/// All diagrams with at most `rows` rows inside a box of the given width,
/// each zero-padded to `rows`.
std::vector<YoungDiagram> diagrams_in_box(int rows, int width);

/// Strictly decreasing positive levels x^{(N)} > ... > x^{(1)}, adjacent
/// levels weakly interlacing: x_j^{(k)} >= x_j^{(k-1)} >= x_{j+1}^{(k)}.
/// Level k has k parts; x^{(0)} = empty is implicit.
using StrictPartitionChain = std::vector<std::vector<int>>;

/// All chains below the fixed top level (top first in each result).
std::vector<StrictPartitionChain> interlacing_chains(const std::vector<int>& top);

}  // namespace bethesym
