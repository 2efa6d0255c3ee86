#include "bethesym/lattice.hpp"

#include <algorithm>
#include <string>

namespace bethesym {

LatticeState LatticeState::from_positions(const std::vector<int>& positions, int sites) {
    LatticeState s = vacuum(sites);
    int prev = 0;
    for (int x : positions) {
        if (x <= prev) throw NotStrictlyIncreasing("positions must be strictly increasing");
        if (x < 1 || x > sites) throw ShapeMismatch("position out of range");
        s.bits[static_cast<std::size_t>(x - 1)] = 1;
        prev = x;
    }
    return s;
}

std::uint32_t LatticeState::index() const {
    std::uint32_t idx = 0;
    for (std::size_t j = 0; j < bits.size(); ++j)
        if (bits[j]) idx |= (1u << j);
    return idx;
}

std::vector<int> LatticeState::positions() const {
    std::vector<int> x;
    for (std::size_t j = 0; j < bits.size(); ++j)
        if (bits[j]) x.push_back(static_cast<int>(j) + 1);
    return x;
}

std::vector<int> LatticeState::hole_positions() const {
    std::vector<int> x;
    for (std::size_t j = 0; j < bits.size(); ++j)
        if (!bits[j]) x.push_back(static_cast<int>(j) + 1);
    return x;
}

int LatticeState::particle_count() const {
    int n = 0;
    for (int b : bits) n += b;
    return n;
}

SparseState BigOperator::apply(const SparseState& state) const {
    SparseState out;
    for (const auto& [key, w] : entries) {
        auto it = state.find(key.first);
        if (it == state.end()) continue;
        Rf v = it->second * w;
        auto [oit, fresh] = out.try_emplace(key.second, v);
        if (!fresh) oit->second += v;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

namespace {

struct AuxEndpoints {
    int out, in;
};

AuxEndpoints endpoints(MonodromyTag tag) {
    switch (tag) {
        case MonodromyTag::A: return {0, 0};
        case MonodromyTag::B: return {0, 1};
        case MonodromyTag::C: return {1, 0};
        case MonodromyTag::D: return {1, 1};
    }
    return {0, 0};
}

void check_sites_cap(int sites, const Caps& caps) {
    if (sites < 1 || sites > caps.max_sites)
        throw CapExceeded("lattice length " + std::to_string(sites) + " exceeds cap " +
                          std::to_string(caps.max_sites));
}

// One row of the lattice contracted against a single basis ket.
void walk_basis_state(const std::vector<WeightMatrix>& site_ops, int sites, AuxEndpoints ends,
                      std::uint32_t basis, const Rf& coeff, SparseState& out) {
    // frontier over (aux bit, partial out-configuration)
    std::map<std::pair<int, std::uint32_t>, Rf> frontier;
    frontier[{ends.in, 0}] = Rf(1);
    for (int j = 0; j < sites; ++j) {
        const WeightMatrix& L = site_ops[static_cast<std::size_t>(j)];
        const int s_in = (basis >> j) & 1;
        std::map<std::pair<int, std::uint32_t>, Rf> next;
        for (const auto& [key, w] : frontier) {
            const auto& [aux, prefix] = key;
            for (int aux2 = 0; aux2 < 2; ++aux2) {
                for (int s_out = 0; s_out < 2; ++s_out) {
                    const Rf& lw = L(aux2 * 2 + s_out, aux * 2 + s_in);
                    if (lw.is_zero()) continue;
                    std::pair<int, std::uint32_t> nk{aux2,
                                                     prefix | (static_cast<std::uint32_t>(s_out) << j)};
                    Rf v = w * lw;
                    auto [it, fresh] = next.try_emplace(nk, v);
                    if (!fresh) it->second += v;
                }
            }
        }
        frontier = std::move(next);
    }
    for (const auto& [key, w] : frontier) {
        if (key.first != ends.out || w.is_zero()) continue;
        Rf v = coeff * w;
        auto [it, fresh] = out.try_emplace(key.second, v);
        if (!fresh) it->second += v;
    }
}

std::vector<WeightMatrix> site_operators(const ModelSpec& spec, const Rf& u, int sites) {
    std::vector<WeightMatrix> ops;
    ops.reserve(static_cast<std::size_t>(sites));
    const bool site_dependent = !spec.site_lists.empty();
    if (!site_dependent) {
        WeightMatrix L = build_l_operator(spec, u, 1);
        for (int j = 0; j < sites; ++j) ops.push_back(L);
    } else {
        for (int j = 1; j <= sites; ++j) ops.push_back(build_l_operator(spec, u, j));
    }
    return ops;
}

}  // namespace

SparseState apply_monodromy_element(const ModelSpec& spec, MonodromyTag tag, const Rf& u, int sites,
                                    const SparseState& state) {
    const auto ops = site_operators(spec, u, sites);
    const AuxEndpoints ends = endpoints(tag);
    SparseState out;
    for (const auto& [basis, coeff] : state) walk_basis_state(ops, sites, ends, basis, coeff, out);
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

BigOperator monodromy_element(const ModelSpec& spec, MonodromyTag tag, const Rf& u, int sites,
                              const Caps& caps) {
    check_sites_cap(sites, caps);
    const auto ops = site_operators(spec, u, sites);
    const AuxEndpoints ends = endpoints(tag);
    BigOperator big;
    big.sites = sites;
    const std::uint32_t dim = 1u << sites;
    for (std::uint32_t basis = 0; basis < dim; ++basis) {
        SparseState column;
        walk_basis_state(ops, sites, ends, basis, Rf(1), column);
        for (auto& [out_state, w] : column)
            if (!w.is_zero()) big.entries[{basis, out_state}] = w;
    }
    return big;
}

Rf wavefunction_bruteforce(const ModelSpec& spec, int sites, int particles,
                           const std::vector<int>& target_positions, const std::vector<Rf>& spectral,
                           WavefunctionMode mode, const Caps& caps) {
    check_sites_cap(sites, caps);
    if (static_cast<int>(spectral.size()) != particles)
        throw ShapeMismatch("spectral parameter count differs from operator count");
    if (static_cast<int>(target_positions.size()) != particles)
        throw ShapeMismatch(mode == WavefunctionMode::Hole
                                ? "hole count differs from operator count"
                                : "target particle count differs from operator count");

    switch (mode) {
        case WavefunctionMode::Particle: {
            SparseState state{{0u, Rf(1)}};
            for (const Rf& u : spectral)
                state = apply_monodromy_element(spec, MonodromyTag::B, u, sites, state);
            const auto target = LatticeState::from_positions(target_positions, sites);
            auto it = state.find(target.index());
            return it == state.end() ? Rf(0) : it->second;
        }
        case WavefunctionMode::Dual: {
            const auto target = LatticeState::from_positions(target_positions, sites);
            SparseState state{{target.index(), Rf(1)}};
            for (const Rf& u : spectral)
                state = apply_monodromy_element(spec, MonodromyTag::C, u, sites, state);
            auto it = state.find(0u);
            return it == state.end() ? Rf(0) : it->second;
        }
        case WavefunctionMode::Hole: {
            auto full = LatticeState::full(sites);
            for (int x : target_positions) {
                if (x < 1 || x > sites) throw ShapeMismatch("hole position out of range");
                full.bits[static_cast<std::size_t>(x - 1)] = 0;
            }
            SparseState state{{full.index(), Rf(1)}};
            for (auto it = spectral.rbegin(); it != spectral.rend(); ++it)
                state = apply_monodromy_element(spec, MonodromyTag::B, *it, sites, state);
            auto it = state.find((1u << sites) - 1u);
            return it == state.end() ? Rf(0) : it->second;
        }
    }
    return Rf(0);
}

Rf dwbp_bruteforce(const ModelSpec& spec, int sites, const std::vector<Rf>& spectral,
                   const Caps& caps) {
    check_sites_cap(sites, caps);
    if (static_cast<int>(spectral.size()) != sites)
        throw ShapeMismatch("domain-wall overlap needs one spectral parameter per site");
    SparseState state{{0u, Rf(1)}};
    for (const Rf& u : spectral)
        state = apply_monodromy_element(spec, MonodromyTag::B, u, sites, state);
    auto it = state.find((1u << sites) - 1u);
    return it == state.end() ? Rf(0) : it->second;
}

Rf scalar_product_bruteforce(const ModelSpec& spec, int sites, const std::vector<Rf>& us,
                             const std::vector<Rf>& vs, const Caps& caps) {
    check_sites_cap(sites, caps);
    if (us.size() != vs.size()) throw ShapeMismatch("scalar product needs |us| == |vs|");
    if (static_cast<int>(us.size()) > sites)
        throw ShapeMismatch("more operators than lattice sites");
    SparseState state{{0u, Rf(1)}};
    for (const Rf& v : vs) state = apply_monodromy_element(spec, MonodromyTag::B, v, sites, state);
    for (const Rf& u : us) state = apply_monodromy_element(spec, MonodromyTag::C, u, sites, state);
    auto it = state.find(0u);
    return it == state.end() ? Rf(0) : it->second;
}

int check_ybe(const ModelSpec& spec, const ModelSpec& r_spec, const Rf& u1, const Rf& u2) {
    WeightMatrix Laj = build_l_operator(spec, u1, 1);
    WeightMatrix Lbj = build_l_operator(spec, u2, 1);
    WeightMatrix Rab = build_r_matrix(r_spec, u1 / u2);
    RfMatrix A = embed_pair(Laj, 0, 2, 3);
    RfMatrix B = embed_pair(Lbj, 1, 2, 3);
    RfMatrix R = embed_pair(Rab, 0, 1, 3);
    RfMatrix lhs = R * A * B;
    RfMatrix rhs = B * A * R;
    return count_differing_entries(lhs, rhs);
}

}  // namespace bethesym
