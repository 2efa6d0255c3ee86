#pragma once

#include <vector>

#include "bethesym/lattice.hpp"
#include "bethesym/young.hpp"

namespace bethesym {

/// Indexed alpha/gamma parameter families for the factorial and symplectic
/// determinants. base_index is 1 for the factorial family, 0 for symplectic.
struct ParameterSets {
    std::vector<Rf> alpha;
    std::vector<Rf> gamma;
    int base_index = 1;

    const Rf& alpha_at(int j) const;  // paper index
    const Rf& gamma_at(int j) const;
    int top_index() const { return base_index + static_cast<int>(alpha.size()) - 1; }
};

/// Bialternant Schur polynomial det(z_j^{lambda_k + N - k}) / Vandermonde.
/// Polynomial arguments go through verified exact division.
Rf schur(const YoungDiagram& lambda, const std::vector<Rf>& z);

/// det(z_j^{lambda_k + N - k} (1 + beta z_j)^{k-1}) / Vandermonde.
Rf grothendieck(const YoungDiagram& lambda, const std::vector<Rf>& z, const Rf& beta);

/// Wavefunction of the q,beta six-vertex chain: prefactor times a symmetric-
/// group sum over spectral orderings.
Rf qbeta_closed_form(int sites, const std::vector<int>& positions, const std::vector<Rf>& us,
                     const Rf& q, const Rf& beta, const Caps& caps = default_caps());

/// Free-fermion chain overlaps in determinant form. Particle mode pairs with
/// configurations against the vacuum, hole mode with hole positions against
/// the fully occupied state.
Rf felderhof_closed_form(int sites, const std::vector<int>& positions, const std::vector<Rf>& us,
                         const Rf& p, const Rf& q, WavefunctionMode mode);

/// Overlap at the consecutive configuration x_j = j for sites == particles,
/// equivalently the homogeneous domain-wall value.
Rf felderhof_step_closed(int sites, int particles, const std::vector<Rf>& us, const Rf& p,
                         const Rf& q);

/// Product form of the inhomogeneous domain-wall overlap.
Rf ik_determinant(int sites, const std::vector<Rf>& us, const std::vector<Rf>& qs,
                  const std::vector<Rf>& vs, const Rf& p);

enum class ScalarProductConvention {
    AsPrinted,    // second numerator term carries (-beta*u - 1/u)^M
    InverseBeta,  // second numerator term carries (-u/beta - 1/u)^M
};

/// Off-shell scalar product determinant of the five-vertex chain. The
/// InverseBeta reading is the one that matches the lattice contraction; the
/// other is kept so the resolution stays checkable.
Rf scalar_product_determinant(int sites, const std::vector<Rf>& us, const std::vector<Rf>& vs,
                              const Rf& beta,
                              ScalarProductConvention convention = ScalarProductConvention::InverseBeta);

/// Closed form of sum_{lambda in L^N box} G_lambda(z) G_{lambda^vee}(w).
Rf cauchy_rhs(int n, int box_width, const std::vector<Rf>& zs, const std::vector<Rf>& ws,
              const Rf& beta);

/// Direct summation side of the same identity.
Rf cauchy_lhs_sum(int n, int box_width, const std::vector<Rf>& zs, const std::vector<Rf>& ws,
                  const Rf& beta);

/// Homogeneous domain-wall overlap written through w_j = (u_j - q/p)/(1 - p q u_j).
Rf felderhof_dwbp_closed(int sites, const std::vector<Rf>& us, const Rf& p, const Rf& q);

/// Pairwise factors of the free-fermion overlap products;
/// arguments in the printed slot order.
Rf felderhof_pair_bracket_w(const Rf& wj, const Rf& wk, const Rf& p, const Rf& q);
Rf felderhof_pair_bracket_z(const Rf& zj, const Rf& zk, const Rf& p, const Rf& q);
Rf felderhof_w_transform(const Rf& u, const Rf& p, const Rf& q);
Rf felderhof_z_transform(const Rf& u, const Rf& p, const Rf& q);

/// det(f_{mu_j}(z_k)) / Vandermonde with
/// f_mu(z) = prod_{j=1}^{mu} (alpha_j + (1 - alpha_j gamma_j) z) *
///           prod_{j=mu+2}^{total_length} (1 - gamma_j z).
Rf gen_factorial_schur(const YoungDiagram& lambda, const std::vector<Rf>& z,
                       const ParameterSets& params, int total_length);

/// det(g_{mu_j}(z_k) - g_{mu_j}(1/z_k)) / det(z_k^{N-j+1} - z_k^{-(N-j+1)}) with
/// g_mu(z) = prod_{j=0}^{mu} (alpha_j + (1 - alpha_j gamma_j) z) *
///           prod_{j=mu+2}^{total_length} (1 - gamma_j z) *
///           prod_{j=1}^{total_length} (1 - gamma_j / z).
Rf gen_symplectic_schur(const YoungDiagram& lambda, const std::vector<Rf>& z,
                        const ParameterSets& params, int total_length);

/// Interlacing-chain sum; equals schur() for every beta (checked elsewhere).
Rf schur_combinatorial(const YoungDiagram& lambda, const std::vector<Rf>& z, const Rf& beta,
                       const Caps& caps = default_caps());

}  // namespace bethesym
