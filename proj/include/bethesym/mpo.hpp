#pragma once

#include <vector>

#include "bethesym/lattice.hpp"

namespace bethesym {

/// Single-site row transfer operators of the Felderhof chain on the tensor
/// product of n auxiliary spaces (2^n dimensional; auxiliary space n is the
/// most significant bit), together with the change of basis that diagonalizes
/// the vacuum block and the resulting decomposition of the raising block.
struct MpoChain {
    int level = 0;
    std::vector<Rf> spectral;
    Rf p, q;

    RfMatrix d_op;                      // quantum-vacuum block
    RfMatrix c_op;                      // quantum-raising block
    std::vector<RfMatrix> c_parts;      // c_op = sum_j c_parts[j]
    RfMatrix g, g_inv;                  // d_op = g * script_d * g_inv
    RfMatrix script_d;                  // diagonal
    std::vector<RfMatrix> script_c_parts;
};

MpoChain build_mpo_chain(const Rf& p, const Rf& q, const std::vector<Rf>& spectral,
                         const Caps& caps = default_caps());

/// Residual of c^{(j)} d - ((u_j - q/p)/(1 - p q u_j)) d c^{(j)}.
RfMatrix mpo_rel2_residual(const MpoChain& chain, int j, bool scripted = false);
/// (c^{(j)})^2.
RfMatrix mpo_rel3_residual(const MpoChain& chain, int j, bool scripted = false);
/// Residual of c^{(j)} c^{(k)} + (p u_j - q)(1 - p q u_k) / ((p u_k - q)(1 - p q u_j)) c^{(k)} c^{(j)}.
RfMatrix mpo_rel4_residual(const MpoChain& chain, int j, int k, bool scripted = false);

/// <0...0| d^{M-x_N} c d^{x_N - x_{N-1} - 1} ... c d^{x_1 - 1} |1...1>,
/// the row-ordered contraction of the wavefunction overlap.
Rf mpo_trace_wavefunction(const MpoChain& chain, int sites, const std::vector<int>& positions);

}  // namespace bethesym
