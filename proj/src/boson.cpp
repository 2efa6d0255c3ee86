#include "bethesym/boson.hpp"

#include <map>
#include <string>

namespace bethesym {

int FockState::total() const {
    int n = 0;
    for (int o : occupations) n += o;
    return n;
}

std::vector<FockState> FockState::enumerate(int sites, int particles) {
    std::vector<FockState> out;
    std::vector<int> occ(static_cast<std::size_t>(sites), 0);
    auto rec = [&](auto&& self, int site, int left) -> void {
        if (site == sites - 1) {
            occ[static_cast<std::size_t>(site)] = left;
            out.push_back(FockState{occ});
            return;
        }
        for (int k = left; k >= 0; --k) {
            occ[static_cast<std::size_t>(site)] = k;
            self(self, site + 1, left - k);
        }
    };
    if (sites > 0) rec(rec, 0, particles);
    return out;
}

RfMatrix boson_l_operator(const Rf& v, const Rf& beta, int truncation) {
    if (truncation < 1) throw ShapeMismatch("truncation must be at least 1");
    const int d = truncation + 1;
    RfMatrix m = RfMatrix::Zero(2 * d, 2 * d);
    m.topLeftCorner(d, d) = v.reciprocal() * RfMatrix::Identity(d, d) -
                            (beta * v) * phase_vacuum_projector(truncation);
    m.topRightCorner(d, d) = phase_creation(truncation);
    m.bottomLeftCorner(d, d) = phase_annihilation(truncation);
    m.bottomRightCorner(d, d) = v * RfMatrix::Identity(d, d);
    return m;
}

RfMatrix phase_annihilation(int truncation) {
    RfMatrix m = RfMatrix::Zero(truncation + 1, truncation + 1);
    for (int n = 1; n <= truncation; ++n) m(n - 1, n) = 1;
    return m;
}

RfMatrix phase_creation(int truncation) {
    RfMatrix m = RfMatrix::Zero(truncation + 1, truncation + 1);
    for (int n = 0; n < truncation; ++n) m(n + 1, n) = 1;
    return m;
}

RfMatrix phase_number(int truncation) {
    RfMatrix m = RfMatrix::Zero(truncation + 1, truncation + 1);
    for (int n = 0; n <= truncation; ++n) m(n, n) = n;
    return m;
}

RfMatrix phase_vacuum_projector(int truncation) {
    RfMatrix m = RfMatrix::Zero(truncation + 1, truncation + 1);
    m(0, 0) = 1;
    return m;
}

namespace {

using FockKey = std::vector<int>;
using FockSparse = std::map<FockKey, Rf>;

void check_caps(int sites, int particles, const Caps& caps) {
    if (sites < 1 || sites > caps.max_boson_sites)
        throw CapExceeded("boson chain length " + std::to_string(sites) + " exceeds cap " +
                          std::to_string(caps.max_boson_sites));
    if (particles < 0 || particles > caps.max_boson_particles)
        throw CapExceeded("boson particle count " + std::to_string(particles) + " exceeds cap " +
                          std::to_string(caps.max_boson_particles));
}

/// One row of L = [[1/v - beta v pi, phi_dag], [phi, v]] across sites 0..M-1,
/// site 0 contracted first; aux endpoints select the monodromy block.
FockSparse apply_boson_element(const FockSparse& state, int sites, int truncation, const Rf& v,
                               const Rf& beta, int aux_out, int aux_in) {
    const Rf vi = v.reciprocal();
    FockSparse out;
    for (const auto& [occ, coeff] : state) {
        std::map<std::pair<int, FockKey>, Rf> frontier;
        frontier[{aux_in, occ}] = Rf(1);
        for (int j = 0; j < sites; ++j) {
            std::map<std::pair<int, FockKey>, Rf> next;
            auto add = [&](int aux, FockKey key, const Rf& w) {
                auto [it, fresh] = next.try_emplace({aux, std::move(key)}, w);
                if (!fresh) it->second += w;
            };
            for (const auto& [key, w] : frontier) {
                const auto& [aux, o] = key;
                const int n = o[static_cast<std::size_t>(j)];
                if (aux == 0) {
                    Rf diag = n == 0 ? vi - beta * v : vi;
                    add(0, o, w * diag);
                    if (n > 0) {  // annihilation, aux 0 -> 1
                        FockKey o2 = o;
                        --o2[static_cast<std::size_t>(j)];
                        add(1, std::move(o2), w);
                    }
                } else {
                    add(1, o, w * v);
                    if (n < truncation) {  // creation, aux 1 -> 0
                        FockKey o2 = o;
                        ++o2[static_cast<std::size_t>(j)];
                        add(0, std::move(o2), w);
                    }
                }
            }
            frontier = std::move(next);
        }
        for (const auto& [key, w] : frontier) {
            if (key.first != aux_out || w.is_zero()) continue;
            Rf val = coeff * w;
            auto [it, fresh] = out.try_emplace(key.second, val);
            if (!fresh) it->second += val;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace

Rf boson_wavefunction(int sites, int particles, const FockState& target,
                      const std::vector<Rf>& spectral, const Rf& beta, const Caps& caps) {
    check_caps(sites, particles, caps);
    if (static_cast<int>(target.occupations.size()) != sites)
        throw ShapeMismatch("target must list one occupation per site");
    if (target.total() != particles) throw ShapeMismatch("target occupations must sum to N");
    if (static_cast<int>(spectral.size()) != particles)
        throw ShapeMismatch("one spectral parameter per particle");
    FockSparse state{{FockKey(static_cast<std::size_t>(sites), 0), Rf(1)}};
    for (const Rf& v : spectral)
        state = apply_boson_element(state, sites, particles, v, beta, 0, 1);
    auto it = state.find(target.occupations);
    return it == state.end() ? Rf(0) : it->second;
}

Rf boson_dual_wavefunction(int sites, int particles, const FockState& target,
                           const std::vector<Rf>& spectral, const Rf& beta, const Caps& caps) {
    check_caps(sites, particles, caps);
    if (static_cast<int>(target.occupations.size()) != sites)
        throw ShapeMismatch("target must list one occupation per site");
    if (target.total() != particles) throw ShapeMismatch("target occupations must sum to N");
    if (static_cast<int>(spectral.size()) != particles)
        throw ShapeMismatch("one spectral parameter per particle");
    FockSparse state{{target.occupations, Rf(1)}};
    for (const Rf& v : spectral)
        state = apply_boson_element(state, sites, particles, v, beta, 1, 0);
    auto it = state.find(FockKey(static_cast<std::size_t>(sites), 0));
    return it == state.end() ? Rf(0) : it->second;
}

}  // namespace bethesym
