#include <doctest.h>

#include "bethesym/model.hpp"
#include "test_support.hpp"

using namespace bethesym;
using namespace bethesym::testing;

TEST_CASE("qbeta weights reduce to the five-vertex weights at q=0") {
    Rf u = var("u1"), beta = var("beta");
    WeightMatrix qb = build_l_operator(make_qbeta(Rf(0), beta), u);
    WeightMatrix fv = build_l_operator(make_five_vertex(beta), u);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(qb(i, j) == fv(i, j));
}

TEST_CASE("felderhof entry (01,01)") {
    Rf u = var("u1"), p = var("p"), q = var("q");
    WeightMatrix m = build_l_operator(make_felderhof(p, q), u);
    CHECK(m(1, 1) == -(p * p) * (1 - p.pow(-1) * q * u));
}

TEST_CASE("xxz corner entry") {
    Rf u = var("u1"), q = var("q");
    WeightMatrix m = build_l_operator(make_xxz(q), u);
    CHECK(m(0, 0) == u - q * u.pow(-1));
    CHECK(m(1, 2) == 1 - q);
}

TEST_CASE("validate_model") {
    Rf q = var("q"), beta = var("beta");
    SUBCASE("the q,beta parameter choice satisfies both constraints") {
        std::vector<Rf> a = {Rf(1), Rf(1), Rf(1), q * beta, -beta.reciprocal(), Rf(-1)};
        CHECK(validate_model(make_generalized_xxz(a, q)).ok);
    }
    SUBCASE("all-ones parameters violate the first constraint") {
        std::vector<Rf> a(6, Rf(1));
        Validation v = validate_model(make_generalized_xxz(a, q));
        CHECK_FALSE(v.ok);
        CHECK(v.violations.size() >= 1);
    }
    SUBCASE("xxz has no constraints") {
        CHECK(validate_model(make_xxz(q)).ok);
    }
    SUBCASE("site list length must match") {
        ModelSpec bad = make_inhom_felderhof(var("p"), {q, q}, {Rf(1)});
        CHECK_FALSE(validate_model(bad).ok);
        CHECK_THROWS_AS(build_l_operator(bad, var("u1"), 1), InvalidModel);
    }
}

TEST_CASE("all model kinds conserve occupation (six-vertex zero pattern)") {
    Rf u = var("u1"), q = var("q"), beta = var("beta"), p = var("p"), t = var("t");
    std::vector<ModelSpec> specs = {
        make_xxz(q),
        make_generalized_xxz({Rf(1), Rf(1), Rf(1), q * beta, -beta.reciprocal(), Rf(-1)}, q),
        make_qbeta(q, beta),
        make_five_vertex(beta),
        make_six_vertex_beta(beta),
        make_felderhof(p, q),
        make_inhom_felderhof(p, {q}, {Rf(1)}),
        make_generalized_felderhof(t, {var("alpha1")}, {var("gamma1")}),
    };
    for (const auto& spec : specs) {
        WeightMatrix m = build_l_operator(spec, u, 1);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                int occ_out = (r >> 1) + (r & 1), occ_in = (c >> 1) + (c & 1);
                if (occ_out != occ_in) CHECK(m(r, c).is_zero());
            }
    }
}

TEST_CASE("perturbation hook") {
    ModelSpec spec = make_felderhof(var("p"), var("q"));
    spec.perturb = {{0, 0}};
    WeightMatrix pert = build_l_operator(spec, var("u1"));
    spec.perturb.reset();
    WeightMatrix base = build_l_operator(spec, var("u1"));
    CHECK(pert(0, 0) == base(0, 0) + 1);
    CHECK(pert(1, 2) == base(1, 2));
}

TEST_CASE("model kind names round trip") {
    CHECK(model_kind_from_name("Felderhof") == ModelKind::Felderhof);
    CHECK(model_kind_from_name("nope") == std::nullopt);
    CHECK(std::string(model_kind_name(ModelKind::QBeta)) == "QBeta");
}

TEST_CASE("every model satisfies its commutation relation") {
    PointSampler s(171);
    for (int rep = 0; rep < 3; ++rep) {
        auto pt = s.sample({"u1", "u2", "q", "beta", "p", "t", "alpha1", "gamma1", "v1"},
                           {var("u1") - var("u2"), var("q") * var("q") - 1,
                            var("p") * var("p") - 1});
        Rf u1(pt.at(var_id("u1"))), u2(pt.at(var_id("u2"))), q(pt.at(var_id("q")));
        Rf beta(pt.at(var_id("beta"))), p(pt.at(var_id("p"))), t(pt.at(var_id("t")));
        Rf a1(pt.at(var_id("alpha1"))), g1(pt.at(var_id("gamma1"))), v1(pt.at(var_id("v1")));

        CHECK(check_ybe(make_xxz(q), make_xxz(q), u1, u2) == 0);
        std::vector<Rf> alphas = {Rf(1), Rf(1), Rf(1), q * beta, -beta.reciprocal(), Rf(-1)};
        CHECK(check_ybe(make_generalized_xxz(alphas, q), make_xxz(q), u1, u2) == 0);
        CHECK(check_ybe(make_qbeta(q, beta), make_xxz(q), u1, u2) == 0);
        CHECK(check_ybe(make_five_vertex(beta), make_xxz(Rf(0)), u1, u2) == 0);
        ModelSpec svb = make_six_vertex_beta(beta);
        CHECK(check_ybe(svb, svb, u1, u2) == 0);
        CHECK(check_ybe(make_felderhof(p, q), make_felderhof(p, p), u1, u2) == 0);
        CHECK(check_ybe(make_inhom_felderhof(p, {q}, {v1}), make_felderhof(p, p), u1, u2) == 0);
        ModelSpec gf = make_generalized_felderhof(t, {a1}, {g1});
        CHECK(check_ybe(gf, gf, u1, u2) == 0);
    }
}
