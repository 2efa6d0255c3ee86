#include "bethesym/symfunc.hpp"

#include <algorithm>
#include <string>

#include "bethesym/linalg.hpp"

namespace bethesym {

namespace {

Rf vandermonde(const std::vector<Rf>& z) {
    Rf v(1);
    for (std::size_t j = 0; j < z.size(); ++j)
        for (std::size_t k = j + 1; k < z.size(); ++k) v *= z[j] - z[k];
    return v;
}

/// Alternant quotient. With polynomial inputs the division runs through
/// exact_divide, so a non-divisible alternant (a transcription error) is
/// caught instead of silently absorbed into a rational function.
Rf alternant_quotient(const RfMatrix& m, const Rf& denom) {
    Rf det = determinant(m);
    if (det.is_polynomial() && denom.is_polynomial() && !denom.num().is_constant())
        return Rf(exact_divide(det.num(), denom.num()));
    if (denom.is_zero()) throw SingularPoint("alternant denominator vanishes");
    return det / denom;
}

}  // namespace

const Rf& ParameterSets::alpha_at(int j) const {
    return alpha.at(static_cast<std::size_t>(j - base_index));
}

const Rf& ParameterSets::gamma_at(int j) const {
    return gamma.at(static_cast<std::size_t>(j - base_index));
}

Rf schur(const YoungDiagram& lambda, const std::vector<Rf>& z) {
    const int n = static_cast<int>(z.size());
    if (lambda.rows() != n) throw ShapeMismatch("diagram rows must equal variable count");
    if (n == 0) return Rf(1);
    RfMatrix m(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            m(j, k) = z[static_cast<std::size_t>(j)].pow(lambda.part(k) + n - k - 1);
    return alternant_quotient(m, vandermonde(z));
}

Rf grothendieck(const YoungDiagram& lambda, const std::vector<Rf>& z, const Rf& beta) {
    const int n = static_cast<int>(z.size());
    if (lambda.rows() != n) throw ShapeMismatch("diagram rows must equal variable count");
    if (n == 0) return Rf(1);
    RfMatrix m(n, n);
    for (int j = 0; j < n; ++j) {
        const Rf& zj = z[static_cast<std::size_t>(j)];
        Rf onebz = 1 + beta * zj;
        for (int k = 0; k < n; ++k) m(j, k) = zj.pow(lambda.part(k) + n - k - 1) * onebz.pow(k);
    }
    return alternant_quotient(m, vandermonde(z));
}

Rf qbeta_closed_form(int sites, const std::vector<int>& positions, const std::vector<Rf>& us,
                     const Rf& q, const Rf& beta, const Caps& caps) {
    const int n = static_cast<int>(us.size());
    if (static_cast<int>(positions.size()) != n)
        throw ShapeMismatch("positions and spectral parameters must agree");
    if (n == 0) return Rf(1);
    const Rf bi = beta.reciprocal();

    Rf pre(1);
    std::vector<Rf> ratio(static_cast<std::size_t>(n));  // (-u/beta - 1/u)/(u + q beta/u)
    for (int j = 0; j < n; ++j) {
        const Rf& u = us[static_cast<std::size_t>(j)];
        Rf top = u + q * beta * u.reciprocal();
        Rf bot = -(bi * u) - u.reciprocal();
        pre *= (1 - q) * top.pow(sites) / bot;
        ratio[static_cast<std::size_t>(j)] = bot / top;
    }
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            Rf r = us[static_cast<std::size_t>(k)].pow(2) / us[static_cast<std::size_t>(j)].pow(2);
            pre *= (q - r) / (1 - r);
        }

    Rf sum = permutation_sum(
        n,
        [&](std::span<const int> sigma) {
            Rf term(1);
            for (int j = 0; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    if (sigma[static_cast<std::size_t>(j)] <= sigma[static_cast<std::size_t>(k)])
                        continue;
                    Rf r = us[static_cast<std::size_t>(sigma[static_cast<std::size_t>(j)] - 1)].pow(2) /
                           us[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)] - 1)].pow(2);
                    term *= (1 - q * r) / (q - r);
                }
            for (int j = 0; j < n; ++j)
                term *= ratio[static_cast<std::size_t>(sigma[static_cast<std::size_t>(j)] - 1)].pow(
                    positions[static_cast<std::size_t>(j)]);
            return term;
        },
        /*signed_sum=*/false, caps.max_permutation);
    return pre * sum;
}

Rf felderhof_closed_form(int sites, const std::vector<int>& positions, const std::vector<Rf>& us,
                         const Rf& p, const Rf& q, WavefunctionMode mode) {
    const int n = static_cast<int>(us.size());
    if (static_cast<int>(positions.size()) != n)
        throw ShapeMismatch("positions and spectral parameters must agree");
    if (n == 0) return Rf(1);
    if (mode == WavefunctionMode::Dual)
        throw ShapeMismatch("no closed dual form for this family");
    const Rf pi = p.reciprocal();

    Rf pre(1);
    std::vector<Rf> w(static_cast<std::size_t>(n));
    if (mode == WavefunctionMode::Particle) {
        for (int j = 0; j < n; ++j) {
            const Rf& u = us[static_cast<std::size_t>(j)];
            pre *= (1 - q * q) * (1 - p * q * u).pow(sites - 1);
            w[static_cast<std::size_t>(j)] = (u - pi * q) / (1 - p * q * u);
        }
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const Rf& uj = us[static_cast<std::size_t>(j)];
                const Rf& uk = us[static_cast<std::size_t>(k)];
                pre *= (uk - p * p * uj) / (uk - uj);
            }
    } else {
        for (int j = 0; j < n; ++j) {
            const Rf& u = us[static_cast<std::size_t>(j)];
            Rf base = -(p * p) * (1 - pi * q * u);
            pre *= (1 - q * q) * base.pow(sites - 1);
            w[static_cast<std::size_t>(j)] = (u - p * q) / base;
        }
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const Rf& uj = us[static_cast<std::size_t>(j)];
                const Rf& uk = us[static_cast<std::size_t>(k)];
                pre *= (p * p * uk - uj) / (p * p * (uk - uj));
            }
    }

    RfMatrix m(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            m(j, k) = w[static_cast<std::size_t>(j)].pow(positions[static_cast<std::size_t>(k)] - 1);
    return pre * determinant(m);
}

Rf felderhof_step_closed(int sites, int particles, const std::vector<Rf>& us, const Rf& p,
                         const Rf& q) {
    if (static_cast<int>(us.size()) != particles)
        throw ShapeMismatch("spectral parameter count must equal particle count");
    Rf val = (1 - q * q).pow(particles * (particles + 1) / 2);
    for (const Rf& u : us) val *= (u - p.reciprocal() * q).pow(sites - particles);
    for (int j = 0; j < particles; ++j)
        for (int k = j + 1; k < particles; ++k)
            val *= us[static_cast<std::size_t>(k)] - p * p * us[static_cast<std::size_t>(j)];
    return val;
}

Rf ik_determinant(int sites, const std::vector<Rf>& us, const std::vector<Rf>& qs,
                  const std::vector<Rf>& vs, const Rf& p) {
    const std::size_t m = static_cast<std::size_t>(sites);
    if (us.size() != m || qs.size() != m || vs.size() != m)
        throw ShapeMismatch("all three site lists must have length equal to the lattice size");
    Rf val(1);
    for (std::size_t j = 0; j < m; ++j)
        val *= (1 - qs[j] * qs[j]) / vs[j].pow(sites - 1);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = j + 1; k < m; ++k)
            val *= (vs[k] - qs[j] * qs[k] * vs[j]) * (us[k] - p * p * us[j]);
    return val;
}

Rf scalar_product_determinant(int sites, const std::vector<Rf>& us, const std::vector<Rf>& vs,
                              const Rf& beta, ScalarProductConvention convention) {
    const int n = static_cast<int>(us.size());
    if (static_cast<int>(vs.size()) != n) throw ShapeMismatch("|us| must equal |vs|");
    if (n == 0) return Rf(1);
    const Rf bi = beta.reciprocal();

    Rf pre(1);
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            Rf du = us[static_cast<std::size_t>(j)].pow(2) - us[static_cast<std::size_t>(k)].pow(2);
            Rf dv = vs[static_cast<std::size_t>(k)].pow(2) - vs[static_cast<std::size_t>(j)].pow(2);
            if (du.is_zero() || dv.is_zero())
                throw SingularPoint("coinciding squared spectral parameters");
            pre /= du * dv;
        }

    RfMatrix qmat(n, n);
    for (int j = 0; j < n; ++j) {
        const Rf& u = us[static_cast<std::size_t>(j)];
        Rf second_base = convention == ScalarProductConvention::AsPrinted
                             ? -(beta * u) - u.reciprocal()
                             : -(bi * u) - u.reciprocal();
        for (int k = 0; k < n; ++k) {
            const Rf& v = vs[static_cast<std::size_t>(k)];
            Rf num = u.pow(sites) * (-(bi * v) - v.reciprocal()).pow(sites) * v.pow(2 * (n - 1)) -
                     v.pow(sites) * second_base.pow(sites) * u.pow(2 * (n - 1));
            Rf den = v / u - u / v;
            if (den.is_zero()) throw SingularPoint("u_j = +/- v_k collision");
            qmat(j, k) = num / den;
        }
    }
    return pre * determinant(qmat);
}

Rf cauchy_rhs(int n, int box_width, const std::vector<Rf>& zs, const std::vector<Rf>& ws,
              const Rf& beta) {
    if (static_cast<int>(zs.size()) != n || static_cast<int>(ws.size()) != n)
        throw ShapeMismatch("|zs| = |ws| = N required");
    Rf pre(1);
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            Rf d = (zs[static_cast<std::size_t>(j)] - zs[static_cast<std::size_t>(k)]) *
                   (ws[static_cast<std::size_t>(k)] - ws[static_cast<std::size_t>(j)]);
            if (d.is_zero()) throw SingularPoint("coinciding variables");
            pre /= d;
        }
    RfMatrix m(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            const Rf& z = zs[static_cast<std::size_t>(j)];
            const Rf& w = ws[static_cast<std::size_t>(k)];
            Rf den = z - w;
            if (den.is_zero()) throw SingularPoint("z_j = w_k collision");
            m(j, k) =
                (z.pow(box_width + n) * (1 + beta * w).pow(n - 1) -
                 w.pow(box_width + n) * (1 + beta * z).pow(n - 1)) /
                den;
        }
    return pre * determinant(m);
}

Rf cauchy_lhs_sum(int n, int box_width, const std::vector<Rf>& zs, const std::vector<Rf>& ws,
                  const Rf& beta) {
    Rf sum(0);
    for (const YoungDiagram& lambda : diagrams_in_box(n, box_width))
        sum += grothendieck(lambda, zs, beta) *
               grothendieck(lambda.complement_in_box(box_width), ws, beta);
    return sum;
}

Rf felderhof_w_transform(const Rf& u, const Rf& p, const Rf& q) {
    return (u - p.reciprocal() * q) / (1 - p * q * u);
}

Rf felderhof_z_transform(const Rf& u, const Rf& p, const Rf& q) {
    return (u - p * q) / (1 - p.reciprocal() * q * u);
}

Rf felderhof_pair_bracket_w(const Rf& wj, const Rf& wk, const Rf& p, const Rf& q) {
    Rf num = p * p * q * (p * p - 1) * wj * wk + p * (p * p - q * q) * wk +
             p * (p * p * q * q - 1) * wj + q * (p * p - 1);
    return num / (p * (q * q - 1));
}

Rf felderhof_pair_bracket_z(const Rf& zj, const Rf& zk, const Rf& p, const Rf& q) {
    Rf num = q * (1 - p * p) * zj * zk + p * (q * q - p * p) * zk + p * (1 - p * p * q * q) * zj +
             p * p * q * (1 - p * p);
    return num / (-p * (q * q - 1));
}

Rf felderhof_dwbp_closed(int sites, const std::vector<Rf>& us, const Rf& p, const Rf& q) {
    if (static_cast<int>(us.size()) != sites)
        throw ShapeMismatch("domain-wall form needs one parameter per site");
    Rf val(1);
    std::vector<Rf> w;
    w.reserve(us.size());
    for (const Rf& u : us) w.push_back(felderhof_w_transform(u, p, q));
    for (const Rf& wj : w) val *= (1 - q * q).pow(sites) / (1 + p * q * wj).pow(sites - 1);
    // the pair factor carries the later parameter in the first slot; the
    // printed slot order belongs to the reversed operator ordering
    for (std::size_t j = 0; j < w.size(); ++j)
        for (std::size_t k = j + 1; k < w.size(); ++k)
            val *= felderhof_pair_bracket_w(w[k], w[j], p, q);
    return val;
}

Rf gen_factorial_schur(const YoungDiagram& lambda, const std::vector<Rf>& z,
                       const ParameterSets& params, int total_length) {
    const int n = static_cast<int>(z.size());
    if (lambda.rows() != n) throw ShapeMismatch("diagram rows must equal variable count");
    if (params.base_index != 1) throw ShapeMismatch("factorial family indexes parameters from 1");
    if (n == 0) return Rf(1);
    const int mu_max = lambda.part(0) + n - 1;
    if (mu_max > total_length - 1)
        throw ShapeMismatch("lambda_1 + N - 1 = " + std::to_string(mu_max) +
                            " exceeds total_length - 1");
    auto f = [&](int mu, const Rf& x) {
        Rf r(1);
        for (int j = 1; j <= mu; ++j)
            r *= params.alpha_at(j) + (1 - params.alpha_at(j) * params.gamma_at(j)) * x;
        for (int j = mu + 2; j <= total_length; ++j) r *= 1 - params.gamma_at(j) * x;
        return r;
    };
    RfMatrix m(n, n);
    for (int j = 0; j < n; ++j) {
        const int mu = lambda.part(j) + n - (j + 1);
        for (int k = 0; k < n; ++k) m(j, k) = f(mu, z[static_cast<std::size_t>(k)]);
    }
    return alternant_quotient(m, vandermonde(z));
}

Rf gen_symplectic_schur(const YoungDiagram& lambda, const std::vector<Rf>& z,
                        const ParameterSets& params, int total_length) {
    const int n = static_cast<int>(z.size());
    if (lambda.rows() != n) throw ShapeMismatch("diagram rows must equal variable count");
    if (params.base_index != 0) throw ShapeMismatch("symplectic family indexes parameters from 0");
    if (n == 0) return Rf(1);
    const int mu_max = lambda.part(0) + n - 1;
    if (mu_max > total_length - 1)
        throw ShapeMismatch("lambda_1 + N - 1 exceeds total_length - 1");
    for (const Rf& x : z)
        if (x.is_constant()) {
            Rational c = x.constant_value();
            if (c.is_zero() || c == Rational(1) || c == Rational(-1))
                throw SingularPoint("symplectic variables must avoid 0 and +/-1");
        }
    auto g = [&](int mu, const Rf& x) {
        Rf r(1);
        for (int j = 0; j <= mu; ++j)
            r *= params.alpha_at(j) + (1 - params.alpha_at(j) * params.gamma_at(j)) * x;
        for (int j = mu + 2; j <= total_length; ++j) r *= 1 - params.gamma_at(j) * x;
        for (int j = 1; j <= total_length; ++j) r *= 1 - params.gamma_at(j) * x.reciprocal();
        return r;
    };
    RfMatrix m(n, n);
    RfMatrix denm(n, n);
    for (int j = 0; j < n; ++j) {
        const int mu = lambda.part(j) + n - (j + 1);
        for (int k = 0; k < n; ++k) {
            const Rf& x = z[static_cast<std::size_t>(k)];
            m(j, k) = g(mu, x) - g(mu, x.reciprocal());
            denm(j, k) = x.pow(n - j) - x.pow(-(n - j));
        }
    }
    Rf den = determinant(denm);
    if (den.is_zero()) throw SingularPoint("symplectic denominator alternant vanishes");
    return determinant(m) / den;
}

Rf schur_combinatorial(const YoungDiagram& lambda, const std::vector<Rf>& z, const Rf& beta,
                       const Caps& caps) {
    (void)caps;  // the enumeration bound below is a formula-specific constant
    const int n = static_cast<int>(z.size());
    if (lambda.rows() != n) throw ShapeMismatch("diagram rows must equal variable count");
    if (n == 0) return Rf(1);
    if (n > 4 || lambda.part(0) + n > 8)
        throw CapExceeded("interlacing-chain enumeration bound exceeded");

    std::vector<int> top(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j)
        top[static_cast<std::size_t>(j - 1)] = lambda.part(j - 1) + n - j + 1;

    Rf total(0);
    for (const StrictPartitionChain& chain : interlacing_chains(top)) {
        // chain[i] = level n - i; the empty level 0 is implicit
        Rf term(1);
        for (int k = 1; k <= n; ++k) {
            const std::vector<int>& xk = chain[static_cast<std::size_t>(n - k)];
            static const std::vector<int> empty_level;
            const std::vector<int>& xk1 =
                k >= 2 ? chain[static_cast<std::size_t>(n - k + 1)] : empty_level;
            const Rf& zk = z[static_cast<std::size_t>(k - 1)];
            long esum = -1;
            for (int v : xk) esum += v;
            for (int v : xk1) esum -= v;
            term *= zk.pow(esum);
            int fresh = 0;
            for (int v : xk)
                if (std::find(xk1.begin(), xk1.end(), v) == xk1.end()) ++fresh;
            term *= ((2 * (1 + beta * zk)) / (1 + 2 * beta * zk)).pow(fresh - 1);
            for (int j = 1; j <= k - 1; ++j) {
                bool coincide = xk1[static_cast<std::size_t>(j - 1)] == xk[static_cast<std::size_t>(j)];
                term *= coincide ? Rf(1) : 1 + 2 * beta * zk;
            }
        }
        total += term;
    }
    Rf den(1);
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            const Rf& a = z[static_cast<std::size_t>(j)];
            const Rf& b = z[static_cast<std::size_t>(k)];
            den *= a + b + 2 * beta * a * b;
        }
    if (den.is_zero()) throw SingularPoint("pair denominator vanishes");
    return total / den;
}

}  // namespace bethesym
