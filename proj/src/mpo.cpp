#include "bethesym/mpo.hpp"

#include <string>

namespace bethesym {

namespace {

RfMatrix two_by_two(const Rf& a00, const Rf& a01, const Rf& a10, const Rf& a11) {
    RfMatrix m(2, 2);
    m << a00, a01, a10, a11;
    return m;
}

}  // namespace

MpoChain build_mpo_chain(const Rf& p, const Rf& q, const std::vector<Rf>& spectral,
                         const Caps& caps) {
    const int n = static_cast<int>(spectral.size());
    if (n < 1 || n > caps.max_mpo_level)
        throw CapExceeded("auxiliary chain level " + std::to_string(n) + " exceeds cap " +
                          std::to_string(caps.max_mpo_level));

    MpoChain ch;
    ch.level = n;
    ch.spectral = spectral;
    ch.p = p;
    ch.q = q;

    const Rf pi = p.reciprocal();
    const Rf u1 = spectral[0];
    ch.d_op = two_by_two(1 - p * q * u1, 0, 0, u1 - pi * q);
    ch.c_op = two_by_two(0, 1 - q * q, 0, 0);
    ch.g = RfMatrix::Identity(2, 2);
    ch.g_inv = RfMatrix::Identity(2, 2);
    ch.script_d = ch.d_op;
    ch.script_c_parts = {ch.c_op};

    for (int m = 1; m < n; ++m) {
        const Rf& u = spectral[static_cast<std::size_t>(m)];
        const Eigen::Index dim = ch.d_op.rows();

        RfMatrix d_next = RfMatrix::Zero(2 * dim, 2 * dim);
        d_next.topLeftCorner(dim, dim) = (1 - p * q * u) * ch.d_op;
        d_next.bottomLeftCorner(dim, dim) = ((1 - p * p) * u) * ch.c_op;
        d_next.bottomRightCorner(dim, dim) = (u - pi * q) * ch.d_op;

        RfMatrix c_next = RfMatrix::Zero(2 * dim, 2 * dim);
        c_next.topLeftCorner(dim, dim) = (-(p * p) * (1 - pi * q * u)) * ch.c_op;
        c_next.topRightCorner(dim, dim) = (1 - q * q) * ch.d_op;
        c_next.bottomRightCorner(dim, dim) = (u - p * q) * ch.c_op;

        RfMatrix script_d_inv = RfMatrix::Zero(dim, dim);
        for (Eigen::Index i = 0; i < dim; ++i) script_d_inv(i, i) = ch.script_d(i, i).reciprocal();
        RfMatrix h_sum = RfMatrix::Zero(dim, dim);
        for (int j = 0; j < m; ++j) {
            const Rf& uj = ch.spectral[static_cast<std::size_t>(j)];
            Rf coef = ((1 - p * p) * u * (1 - p * q * uj)) / ((1 - q * q) * (uj - u));
            h_sum += coef * ch.script_c_parts[static_cast<std::size_t>(j)];
        }
        RfMatrix h = script_d_inv * h_sum;

        RfMatrix g_next = RfMatrix::Zero(2 * dim, 2 * dim);
        g_next.topLeftCorner(dim, dim) = ch.g;
        g_next.bottomLeftCorner(dim, dim) = ch.g * h;
        g_next.bottomRightCorner(dim, dim) = ch.g;
        RfMatrix g_inv_next = RfMatrix::Zero(2 * dim, 2 * dim);
        g_inv_next.topLeftCorner(dim, dim) = ch.g_inv;
        g_inv_next.bottomLeftCorner(dim, dim) = -(h * ch.g_inv);
        g_inv_next.bottomRightCorner(dim, dim) = ch.g_inv;

        RfMatrix script_d_next = RfMatrix::Zero(2 * dim, 2 * dim);
        script_d_next.topLeftCorner(dim, dim) = (1 - p * q * u) * ch.script_d;
        script_d_next.bottomRightCorner(dim, dim) = (u - pi * q) * ch.script_d;

        std::vector<RfMatrix> script_c_next;
        script_c_next.reserve(static_cast<std::size_t>(m) + 1);
        for (int j = 0; j < m; ++j) {
            const Rf& uj = ch.spectral[static_cast<std::size_t>(j)];
            RfMatrix part = RfMatrix::Zero(2 * dim, 2 * dim);
            Rf c_top = ((u - p * p * uj) * (1 - p * q * u)) / (uj - u);
            Rf c_bot = ((u - pi * q) * (p * p * uj - u)) / (uj - u);
            part.topLeftCorner(dim, dim) = c_top * ch.script_c_parts[static_cast<std::size_t>(j)];
            part.bottomRightCorner(dim, dim) = c_bot * ch.script_c_parts[static_cast<std::size_t>(j)];
            script_c_next.push_back(std::move(part));
        }
        RfMatrix last = RfMatrix::Zero(2 * dim, 2 * dim);
        last.topRightCorner(dim, dim) = (1 - q * q) * ch.script_d;
        script_c_next.push_back(std::move(last));

        ch.d_op = std::move(d_next);
        ch.c_op = std::move(c_next);
        ch.g = std::move(g_next);
        ch.g_inv = std::move(g_inv_next);
        ch.script_d = std::move(script_d_next);
        ch.script_c_parts = std::move(script_c_next);
    }

    ch.c_parts.clear();
    ch.c_parts.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        ch.c_parts.push_back(ch.g * ch.script_c_parts[static_cast<std::size_t>(j)] * ch.g_inv);
    return ch;
}

namespace {

const RfMatrix& part(const MpoChain& ch, int j, bool scripted) {
    return scripted ? ch.script_c_parts.at(static_cast<std::size_t>(j - 1))
                    : ch.c_parts.at(static_cast<std::size_t>(j - 1));
}

const RfMatrix d_block(const MpoChain& ch, bool scripted) {
    return scripted ? ch.script_d : ch.d_op;
}

}  // namespace

RfMatrix mpo_rel2_residual(const MpoChain& ch, int j, bool scripted) {
    const Rf& uj = ch.spectral.at(static_cast<std::size_t>(j - 1));
    Rf coef = (uj - ch.p.reciprocal() * ch.q) / (1 - ch.p * ch.q * uj);
    const RfMatrix& cj = part(ch, j, scripted);
    RfMatrix d = d_block(ch, scripted);
    return RfMatrix(cj * d - coef * (d * cj));
}

RfMatrix mpo_rel3_residual(const MpoChain& ch, int j, bool scripted) {
    const RfMatrix& cj = part(ch, j, scripted);
    return RfMatrix(cj * cj);
}

RfMatrix mpo_rel4_residual(const MpoChain& ch, int j, int k, bool scripted) {
    const Rf& uj = ch.spectral.at(static_cast<std::size_t>(j - 1));
    const Rf& uk = ch.spectral.at(static_cast<std::size_t>(k - 1));
    Rf coef = ((ch.p * uj - ch.q) * (1 - ch.p * ch.q * uk)) /
              ((ch.p * uk - ch.q) * (1 - ch.p * ch.q * uj));
    const RfMatrix& cj = part(ch, j, scripted);
    const RfMatrix& ck = part(ch, k, scripted);
    return RfMatrix(cj * ck + coef * (ck * cj));
}

Rf mpo_trace_wavefunction(const MpoChain& ch, int sites, const std::vector<int>& positions) {
    const int n = ch.level;
    if (static_cast<int>(positions.size()) != n)
        throw ShapeMismatch("position count differs from chain level");
    const Eigen::Index dim = ch.d_op.rows();
    RfMatrix acc = RfMatrix::Identity(dim, dim);
    auto mul_d = [&](int count) {
        for (int i = 0; i < count; ++i) acc = acc * ch.d_op;
    };
    mul_d(sites - positions.back());
    for (int i = n - 1; i > 0; --i) {
        acc = acc * ch.c_op;
        mul_d(positions[static_cast<std::size_t>(i)] - positions[static_cast<std::size_t>(i - 1)] - 1);
    }
    acc = acc * ch.c_op;
    mul_d(positions.front() - 1);
    return acc(0, dim - 1);
}

}  // namespace bethesym
