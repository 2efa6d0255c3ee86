#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "bethesym/model.hpp"

namespace bethesym {

struct Caps {
    int max_sites = 10;        // 2^M quantum space bound
    int max_permutation = 7;   // n! sum bound
    int max_mpo_level = 6;     // 2^n auxiliary chain bound
    int max_boson_sites = 6;
    int max_boson_particles = 4;
};

inline const Caps& default_caps() {
    static const Caps caps;
    return caps;
}

/// Basis configuration of the spin chain. Site j (1-based) is bit j-1, so the
/// integer index of a configuration reads its occupations in binary.
struct LatticeState {
    std::vector<int> bits;  // 0/1 per site

    static LatticeState from_positions(const std::vector<int>& positions, int sites);
    static LatticeState vacuum(int sites) { return LatticeState{std::vector<int>(static_cast<std::size_t>(sites), 0)}; }
    static LatticeState full(int sites) { return LatticeState{std::vector<int>(static_cast<std::size_t>(sites), 1)}; }

    std::uint32_t index() const;
    std::vector<int> positions() const;       // occupied sites, increasing
    std::vector<int> hole_positions() const;  // empty sites, increasing
    int particle_count() const;
};

using SparseState = std::map<std::uint32_t, Rf>;

enum class MonodromyTag { A, B, C, D };

/// Sparse matrix of a monodromy element on the 2^sites quantum space,
/// keyed by (in-state, out-state).
struct BigOperator {
    int sites = 0;
    std::map<std::pair<std::uint32_t, std::uint32_t>, Rf> entries;

    SparseState apply(const SparseState& state) const;
};

/// Applies one monodromy element T = L_M ... L_1 (site 1 contracted first).
SparseState apply_monodromy_element(const ModelSpec& spec, MonodromyTag tag, const Rf& u, int sites,
                                    const SparseState& state);

BigOperator monodromy_element(const ModelSpec& spec, MonodromyTag tag, const Rf& u, int sites,
                              const Caps& caps = default_caps());

enum class WavefunctionMode { Particle, Dual, Hole };

/// Particle: <target| B(u_1)...B(u_N) |vacuum> with B(u_1) contracted first.
/// Dual:     <vacuum| C(u_1)...C(u_N) |target>.
/// Hole:     <full| B(u_1)...B(u_N) |holes at target positions>, B(u_N) first;
///           the opposite application order is what reproduces the closed
///           determinant form of the hole overlap.
Rf wavefunction_bruteforce(const ModelSpec& spec, int sites, int particles,
                           const std::vector<int>& target_positions, const std::vector<Rf>& spectral,
                           WavefunctionMode mode, const Caps& caps = default_caps());

/// <full| B(u_1)...B(u_M) |vacuum>, B(u_1) contracted first.
Rf dwbp_bruteforce(const ModelSpec& spec, int sites, const std::vector<Rf>& spectral,
                   const Caps& caps = default_caps());

/// <vacuum| C(u_1)...C(u_N) B(v_1)...B(v_N) |vacuum>.
Rf scalar_product_bruteforce(const ModelSpec& spec, int sites, const std::vector<Rf>& us,
                             const std::vector<Rf>& vs, const Caps& caps = default_caps());

/// Builds both sides of R_ab(u1/u2) L_aj(u1) L_bj(u2) = L_bj(u2) L_aj(u1) R_ab(u1/u2)
/// as 8x8 matrices and counts differing entries (0 = relation holds).
int check_ybe(const ModelSpec& spec, const ModelSpec& r_spec, const Rf& u1, const Rf& u2);

}  // namespace bethesym
