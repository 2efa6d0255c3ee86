#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bethesym/linalg.hpp"

namespace bethesym {

enum class ModelKind {
    XXZ,
    GeneralizedXXZ,
    QBeta,
    FiveVertex,
    SixVertexBeta,
    Felderhof,
    InhomFelderhof,
    GeneralizedFelderhof,
};

const char* model_kind_name(ModelKind kind);
std::optional<ModelKind> model_kind_from_name(const std::string& name);

/// One of the eight vertex models with its bound parameters. Scalars and
/// site lists hold exact rational functions; a symbolic parameter is simply
/// a variable-valued entry. `perturb` adds +1 to one weight entry after
/// construction (negative-control hook for the verification suite).
struct ModelSpec {
    ModelKind kind = ModelKind::XXZ;
    std::map<std::string, Rf> scalars;
    std::map<std::string, std::vector<Rf>> site_lists;
    int sites = 0;  // declared lattice length, 0 = unconstrained
    std::optional<std::pair<int, int>> perturb;

    const Rf& scalar(const std::string& name) const;
    const std::vector<Rf>& site_list(const std::string& name) const;
};

ModelSpec make_xxz(const Rf& q);
ModelSpec make_generalized_xxz(const std::vector<Rf>& alphas /*alpha1..alpha6*/, const Rf& q);
ModelSpec make_qbeta(const Rf& q, const Rf& beta);
ModelSpec make_five_vertex(const Rf& beta);
ModelSpec make_six_vertex_beta(const Rf& beta);
ModelSpec make_felderhof(const Rf& p, const Rf& q);
ModelSpec make_inhom_felderhof(const Rf& p, const std::vector<Rf>& qs, const std::vector<Rf>& vs);
ModelSpec make_generalized_felderhof(const Rf& t, const std::vector<Rf>& alphas,
                                     const std::vector<Rf>& gammas);

struct Validation {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Exact constraint check; violations are data, not exceptions.
Validation validate_model(const ModelSpec& spec);

/// The 4x4 weight matrix at the given site (1-based where site lists exist),
/// rows/columns indexed by (auxiliary bit, quantum bit) as 00,01,10,11.
WeightMatrix build_l_operator(const ModelSpec& spec, const Rf& u, int site = 1);

/// R-matrix of the generalized Felderhof family on two auxiliary spaces,
/// a function of the spectral ratio and t alone (entries stay rational in t).
WeightMatrix generalized_felderhof_r(const Rf& ratio, const Rf& t);

/// R-matrix of the beta six-vertex weights: the t = 1 member of the family
/// above transported by the spectral gauge that swaps the crossing entries.
WeightMatrix six_vertex_beta_r(const Rf& ratio);

/// Resolves the weight matrix an r_spec contributes to a Yang-Baxter check:
/// the model's own matrix at the spectral ratio, except the generalized
/// Felderhof family which supplies its dedicated R.
WeightMatrix build_r_matrix(const ModelSpec& r_spec, const Rf& ratio);

}  // namespace bethesym
