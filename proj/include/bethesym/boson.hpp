#pragma once

#include <vector>

#include "bethesym/lattice.hpp"

namespace bethesym {

/// Occupation configuration of the truncated Fock chain, sites 0..M-1.
struct FockState {
    std::vector<int> occupations;

    int total() const;
    static std::vector<FockState> enumerate(int sites, int particles);
};

/// The 2(truncation+1)-dimensional weight operator [[1/v - beta v pi, phi_dag],
/// [phi, v]] on auxiliary tensor truncated Fock space (auxiliary bit first).
RfMatrix boson_l_operator(const Rf& v, const Rf& beta, int truncation);

/// Local phase-algebra operators on the (truncation+1)-dimensional space:
/// annihilation, creation, number, and vacuum projection.
RfMatrix phase_annihilation(int truncation);
RfMatrix phase_creation(int truncation);
RfMatrix phase_number(int truncation);
RfMatrix phase_vacuum_projector(int truncation);

/// <target| B(v_1)...B(v_N) |vacuum> on the truncated Fock chain. Truncating
/// local occupancy at the particle count is exact: each raising operator adds
/// one boson in total, so no site ever exceeds it.
Rf boson_wavefunction(int sites, int particles, const FockState& target,
                      const std::vector<Rf>& spectral, const Rf& beta,
                      const Caps& caps = default_caps());

/// <vacuum| C(v_1)...C(v_N) |target>.
Rf boson_dual_wavefunction(int sites, int particles, const FockState& target,
                           const std::vector<Rf>& spectral, const Rf& beta,
                           const Caps& caps = default_caps());

}  // namespace bethesym
