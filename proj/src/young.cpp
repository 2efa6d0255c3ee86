#include "bethesym/young.hpp"

#include <algorithm>
#include <string>

namespace bethesym {

YoungDiagram::YoungDiagram(std::vector<int> parts, int rows) : parts_(std::move(parts)) {
    if (static_cast<int>(parts_.size()) > rows)
        throw ShapeMismatch("more parts than declared rows");
    parts_.resize(static_cast<std::size_t>(rows), 0);
    for (std::size_t j = 0; j < parts_.size(); ++j) {
        if (parts_[j] < 0) throw ShapeMismatch("negative part");
        if (j > 0 && parts_[j] > parts_[j - 1])
            throw ShapeMismatch("parts must be weakly decreasing");
    }
}

bool YoungDiagram::is_empty() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 0; });
}

YoungDiagram YoungDiagram::from_positions(const std::vector<int>& x) {
    const int n = static_cast<int>(x.size());
    for (int i = 0; i < n; ++i) {
        if (x[static_cast<std::size_t>(i)] < 1)
            throw NotStrictlyIncreasing("positions must be >= 1");
        if (i > 0 && x[static_cast<std::size_t>(i)] <= x[static_cast<std::size_t>(i - 1)])
            throw NotStrictlyIncreasing("positions must be strictly increasing");
    }
    std::vector<int> parts(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j)
        parts[static_cast<std::size_t>(j - 1)] = x[static_cast<std::size_t>(n - j)] - n + j - 1;
    return YoungDiagram(parts, n);
}

std::vector<int> YoungDiagram::to_positions() const {
    const int n = rows();
    std::vector<int> x(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        x[static_cast<std::size_t>(i - 1)] = parts_[static_cast<std::size_t>(n - i)] + i;
    return x;
}

YoungDiagram YoungDiagram::complement_in_box(int width) const {
    if (!parts_.empty() && parts_[0] > width)
        throw BoxViolation("part " + std::to_string(parts_[0]) + " exceeds box width " +
                           std::to_string(width));
    const int n = rows();
    std::vector<int> parts(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        parts[static_cast<std::size_t>(j)] = width - parts_[static_cast<std::size_t>(n - 1 - j)];
    return YoungDiagram(parts, n);
}

YoungDiagram YoungDiagram::hat(int M) const {
    std::vector<int> parts(static_cast<std::size_t>(M));
    for (int i = 1; i <= M; ++i) {
        int c = 0;
        for (int p : parts_)
            if (p <= M - i) ++c;
        parts[static_cast<std::size_t>(i - 1)] = c;
    }
    return YoungDiagram(parts, M);
}

YoungDiagram YoungDiagram::from_occupations(const std::vector<int>& occupations) {
    std::vector<int> parts;
    const int M = static_cast<int>(occupations.size());
    for (int site = M - 1; site >= 0; --site) {
        if (occupations[static_cast<std::size_t>(site)] < 0)
            throw ShapeMismatch("negative occupation");
        for (int k = 0; k < occupations[static_cast<std::size_t>(site)]; ++k)
            parts.push_back(site);
    }
    return YoungDiagram(parts, static_cast<int>(parts.size()));
}

std::vector<YoungDiagram> diagrams_in_box(int rows, int width) {
    std::vector<YoungDiagram> out;
    std::vector<int> parts(static_cast<std::size_t>(rows), 0);
    auto rec = [&](auto&& self, int row, int maxpart) -> void {
        if (row == rows) {
            out.emplace_back(parts, rows);
            return;
        }
        for (int p = maxpart; p >= 0; --p) {
            parts[static_cast<std::size_t>(row)] = p;
            self(self, row + 1, p);
        }
    };
    rec(rec, 0, width);
    return out;
}

std::vector<StrictPartitionChain> interlacing_chains(const std::vector<int>& top) {
    std::vector<StrictPartitionChain> out;
    StrictPartitionChain chain{top};
    auto rec = [&](auto&& self, const std::vector<int>& level) -> void {
        const int k = static_cast<int>(level.size());
        if (k == 1) {
            out.push_back(chain);
            return;
        }
        std::vector<int> lower(static_cast<std::size_t>(k - 1));
        auto fill = [&](auto&& fillself, int j) -> void {
            if (j == k - 1) {
                chain.push_back(lower);
                self(self, lower);
                chain.pop_back();
                return;
            }
            int hi = level[static_cast<std::size_t>(j)];
            int lo = std::max(level[static_cast<std::size_t>(j + 1)], 1);
            if (j > 0) hi = std::min(hi, lower[static_cast<std::size_t>(j - 1)] - 1);
            for (int v = hi; v >= lo; --v) {
                lower[static_cast<std::size_t>(j)] = v;
                fillself(fillself, j + 1);
            }
        };
        fill(fill, 0);
    };
    if (!top.empty()) rec(rec, top);
    else out.push_back({});
    return out;
}

}  // namespace bethesym
