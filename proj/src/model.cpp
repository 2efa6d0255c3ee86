#include "bethesym/model.hpp"

#include <array>

namespace bethesym {

const char* model_kind_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::XXZ: return "XXZ";
        case ModelKind::GeneralizedXXZ: return "GeneralizedXXZ";
        case ModelKind::QBeta: return "QBeta";
        case ModelKind::FiveVertex: return "FiveVertex";
        case ModelKind::SixVertexBeta: return "SixVertexBeta";
        case ModelKind::Felderhof: return "Felderhof";
        case ModelKind::InhomFelderhof: return "InhomFelderhof";
        case ModelKind::GeneralizedFelderhof: return "GeneralizedFelderhof";
    }
    return "?";
}

std::optional<ModelKind> model_kind_from_name(const std::string& name) {
    static const std::array<ModelKind, 8> kinds = {
        ModelKind::XXZ,           ModelKind::GeneralizedXXZ, ModelKind::QBeta,
        ModelKind::FiveVertex,    ModelKind::SixVertexBeta,  ModelKind::Felderhof,
        ModelKind::InhomFelderhof, ModelKind::GeneralizedFelderhof};
    for (ModelKind k : kinds)
        if (name == model_kind_name(k)) return k;
    return std::nullopt;
}

const Rf& ModelSpec::scalar(const std::string& name) const {
    auto it = scalars.find(name);
    if (it == scalars.end())
        throw InvalidModel(std::string(model_kind_name(kind)) + ": missing parameter " + name);
    return it->second;
}

const std::vector<Rf>& ModelSpec::site_list(const std::string& name) const {
    auto it = site_lists.find(name);
    if (it == site_lists.end())
        throw InvalidModel(std::string(model_kind_name(kind)) + ": missing site list " + name);
    return it->second;
}

ModelSpec make_xxz(const Rf& q) {
    ModelSpec s;
    s.kind = ModelKind::XXZ;
    s.scalars["q"] = q;
    return s;
}

ModelSpec make_generalized_xxz(const std::vector<Rf>& alphas, const Rf& q) {
    if (alphas.size() != 6) throw InvalidModel("GeneralizedXXZ needs alpha1..alpha6");
    ModelSpec s;
    s.kind = ModelKind::GeneralizedXXZ;
    s.scalars["q"] = q;
    for (int i = 0; i < 6; ++i)
        s.scalars["alpha" + std::to_string(i + 1)] = alphas[static_cast<std::size_t>(i)];
    return s;
}

ModelSpec make_qbeta(const Rf& q, const Rf& beta) {
    ModelSpec s;
    s.kind = ModelKind::QBeta;
    s.scalars["q"] = q;
    s.scalars["beta"] = beta;
    return s;
}

ModelSpec make_five_vertex(const Rf& beta) {
    ModelSpec s;
    s.kind = ModelKind::FiveVertex;
    s.scalars["beta"] = beta;
    return s;
}

ModelSpec make_six_vertex_beta(const Rf& beta) {
    ModelSpec s;
    s.kind = ModelKind::SixVertexBeta;
    s.scalars["beta"] = beta;
    return s;
}

ModelSpec make_felderhof(const Rf& p, const Rf& q) {
    ModelSpec s;
    s.kind = ModelKind::Felderhof;
    s.scalars["p"] = p;
    s.scalars["q"] = q;
    return s;
}

ModelSpec make_inhom_felderhof(const Rf& p, const std::vector<Rf>& qs, const std::vector<Rf>& vs) {
    ModelSpec s;
    s.kind = ModelKind::InhomFelderhof;
    s.scalars["p"] = p;
    s.site_lists["q"] = qs;
    s.site_lists["v"] = vs;
    s.sites = static_cast<int>(qs.size());
    return s;
}

ModelSpec make_generalized_felderhof(const Rf& t, const std::vector<Rf>& alphas,
                                     const std::vector<Rf>& gammas) {
    ModelSpec s;
    s.kind = ModelKind::GeneralizedFelderhof;
    s.scalars["t"] = t;
    s.site_lists["alpha"] = alphas;
    s.site_lists["gamma"] = gammas;
    s.sites = static_cast<int>(alphas.size());
    return s;
}

Validation validate_model(const ModelSpec& spec) {
    Validation v;
    auto fail = [&](const std::string& msg) {
        v.ok = false;
        v.violations.push_back(msg);
    };
    if (spec.kind == ModelKind::GeneralizedXXZ) {
        const Rf& q = spec.scalar("q");
        std::array<Rf, 7> a;
        for (int i = 1; i <= 6; ++i)
            a[static_cast<std::size_t>(i)] = spec.scalar("alpha" + std::to_string(i));
        Rf c1 = (1 - q) * a[1] * a[2] + a[3] * a[6] - a[4] * a[5];
        Rf c2 = (q * q - q) * a[1] * a[2] + q * q * a[3] * a[6] - a[4] * a[5];
        if (!c1.is_zero()) fail("(1-q)*a1*a2 + a3*a6 - a4*a5 != 0");
        if (!c2.is_zero()) fail("(q^2-q)*a1*a2 + q^2*a3*a6 - a4*a5 != 0");
    }
    for (const auto& [name, list] : spec.site_lists) {
        if (spec.sites > 0 && static_cast<int>(list.size()) != spec.sites)
            fail("site list " + name + " has length " + std::to_string(list.size()) +
                 ", expected " + std::to_string(spec.sites));
    }
    return v;
}

namespace {

WeightMatrix weights_xxz(const Rf& u, const Rf& q) {
    WeightMatrix m = WeightMatrix::Zero();
    Rf ui = u.reciprocal();
    m(0, 0) = u - q * ui;
    m(1, 1) = q * (u - ui);
    m(1, 2) = 1 - q;
    m(2, 1) = 1 - q;
    m(2, 2) = u - ui;
    m(3, 3) = u - q * ui;
    return m;
}

WeightMatrix weights_generalized_xxz(const Rf& u, const Rf& q, const std::array<Rf, 7>& a) {
    WeightMatrix m = WeightMatrix::Zero();
    Rf ui = u.reciprocal();
    m(0, 0) = a[3] * u + a[4] * ui;
    m(1, 1) = a[3] * q * u + a[4] * ui;
    m(1, 2) = (1 - q) * a[1];
    m(2, 1) = (1 - q) * a[2];
    m(2, 2) = a[5] * u + a[6] * ui;
    m(3, 3) = a[5] * u + a[6] * q * ui;
    return m;
}

WeightMatrix weights_qbeta(const Rf& u, const Rf& q, const Rf& beta) {
    WeightMatrix m = WeightMatrix::Zero();
    Rf ui = u.reciprocal();
    Rf bi = beta.reciprocal();
    m(0, 0) = u + q * beta * ui;
    m(1, 1) = q * (u + beta * ui);
    m(1, 2) = 1 - q;
    m(2, 1) = 1 - q;
    m(2, 2) = -(bi * u) - ui;
    m(3, 3) = -(bi * u) - q * ui;
    return m;
}

WeightMatrix weights_five_vertex(const Rf& u, const Rf& beta) {
    WeightMatrix m = WeightMatrix::Zero();
    m(0, 0) = u;
    m(1, 2) = 1;
    m(2, 1) = 1;
    m(2, 2) = -(beta.reciprocal() * u) - u.reciprocal();
    m(3, 3) = -(beta.reciprocal() * u);
    return m;
}

WeightMatrix weights_six_vertex_beta(const Rf& v, const Rf& beta) {
    WeightMatrix m = WeightMatrix::Zero();
    m(0, 0) = 1 - beta * v;
    m(1, 1) = 1 + beta * v;
    m(1, 2) = 2 * v;
    m(2, 1) = 1;
    m(2, 2) = v;
    m(3, 3) = v;
    return m;
}

WeightMatrix weights_felderhof(const Rf& u, const Rf& p, const Rf& q) {
    WeightMatrix m = WeightMatrix::Zero();
    Rf pi = p.reciprocal();
    m(0, 0) = 1 - p * q * u;
    m(1, 1) = -(p * p) * (1 - pi * q * u);
    m(1, 2) = 1 - q * q;
    m(2, 1) = (1 - p * p) * u;
    m(2, 2) = u - pi * q;
    m(3, 3) = u - p * q;
    return m;
}

WeightMatrix weights_generalized_felderhof(const Rf& z, const Rf& t, const Rf& alpha,
                                           const Rf& gamma) {
    WeightMatrix m = WeightMatrix::Zero();
    m(0, 0) = 1 - gamma * z;
    m(1, 1) = t + gamma * z;
    m(1, 2) = 1;
    m(2, 1) = (t + 1) * z;
    m(2, 2) = alpha + (1 - alpha * gamma) * z;
    m(3, 3) = -(t * alpha) + (1 - alpha * gamma) * z;
    return m;
}

}  // namespace

WeightMatrix build_l_operator(const ModelSpec& spec, const Rf& u, int site) {
    Validation v = validate_model(spec);
    if (!v.ok) throw InvalidModel(v.violations.front());
    WeightMatrix m;
    switch (spec.kind) {
        case ModelKind::XXZ:
            m = weights_xxz(u, spec.scalar("q"));
            break;
        case ModelKind::GeneralizedXXZ: {
            std::array<Rf, 7> a;
            for (int i = 1; i <= 6; ++i)
                a[static_cast<std::size_t>(i)] = spec.scalar("alpha" + std::to_string(i));
            m = weights_generalized_xxz(u, spec.scalar("q"), a);
            break;
        }
        case ModelKind::QBeta:
            m = weights_qbeta(u, spec.scalar("q"), spec.scalar("beta"));
            break;
        case ModelKind::FiveVertex:
            m = weights_five_vertex(u, spec.scalar("beta"));
            break;
        case ModelKind::SixVertexBeta:
            m = weights_six_vertex_beta(u, spec.scalar("beta"));
            break;
        case ModelKind::Felderhof:
            m = weights_felderhof(u, spec.scalar("p"), spec.scalar("q"));
            break;
        case ModelKind::InhomFelderhof: {
            const auto& qs = spec.site_list("q");
            const auto& vs = spec.site_list("v");
            if (site < 1 || site > static_cast<int>(qs.size()))
                throw InvalidModel("site index out of range");
            const std::size_t j = static_cast<std::size_t>(site - 1);
            m = weights_felderhof(u / vs[j], spec.scalar("p"), qs[j]);
            break;
        }
        case ModelKind::GeneralizedFelderhof: {
            const auto& alphas = spec.site_list("alpha");
            const auto& gammas = spec.site_list("gamma");
            if (site < 1 || site > static_cast<int>(alphas.size()))
                throw InvalidModel("site index out of range");
            const std::size_t j = static_cast<std::size_t>(site - 1);
            m = weights_generalized_felderhof(u, spec.scalar("t"), alphas[j], gammas[j]);
            break;
        }
    }
    if (spec.perturb) m(spec.perturb->first, spec.perturb->second) += 1;
    return m;
}

WeightMatrix generalized_felderhof_r(const Rf& ratio, const Rf& t) {
    WeightMatrix m = WeightMatrix::Zero();
    m(0, 0) = 1 + t * ratio;
    m(1, 1) = t * (1 - ratio);
    m(1, 2) = 1 + t;
    m(2, 1) = (1 + t) * ratio;
    m(2, 2) = ratio - 1;
    m(3, 3) = ratio + t;
    return m;
}

WeightMatrix six_vertex_beta_r(const Rf& ratio) {
    WeightMatrix m = WeightMatrix::Zero();
    m(0, 0) = 1 + ratio;
    m(1, 1) = 1 - ratio;
    m(1, 2) = 2 * ratio;
    m(2, 1) = 2;
    m(2, 2) = ratio - 1;
    m(3, 3) = ratio + 1;
    return m;
}

WeightMatrix build_r_matrix(const ModelSpec& r_spec, const Rf& ratio) {
    if (r_spec.kind == ModelKind::GeneralizedFelderhof)
        return generalized_felderhof_r(ratio, r_spec.scalar("t"));
    if (r_spec.kind == ModelKind::SixVertexBeta) return six_vertex_beta_r(ratio);
    return build_l_operator(r_spec, ratio, 1);
}

}  // namespace bethesym
