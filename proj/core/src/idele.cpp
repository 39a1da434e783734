#include "linkgenus/idele.hpp"

#include <set>

#include "linkgenus/smith.hpp"
#include "residue_box.hpp"

namespace linkgenus {

TorusClass BaseIdele::at(const std::string& knot) const {
    auto it = support.find(knot);
    return it == support.end() ? TorusClass{0, 0} : it->second;
}

void BaseIdele::set(const std::string& knot, TorusClass v) {
    if (v.is_zero())
        support.erase(knot);
    else
        support[knot] = std::move(v);
}

BaseIdele BaseIdele::operator+(const BaseIdele& o) const {
    BaseIdele out = *this;
    for (const auto& [k, v] : o.support) out.set(k, out.at(k) + v);
    return out;
}

BaseIdele BaseIdele::operator-(const BaseIdele& o) const {
    BaseIdele out = *this;
    for (const auto& [k, v] : o.support) out.set(k, out.at(k) - v);
    return out;
}

BaseIdele BaseIdele::operator-() const {
    BaseIdele out;
    for (const auto& [k, v] : support) out.support.emplace(k, -v);
    return out;
}

BaseIdele UnitIdele::as_idele() const {
    BaseIdele out;
    for (const auto& [k, m] : mu) out.set(k, {0, m});
    return out;
}

Int UnitIdele::at(const std::string& knot) const {
    auto it = mu.find(knot);
    return it == mu.end() ? Int(0) : it->second;
}

Chain2 Chain2::surface(const std::string& knot, Int coeff) {
    Chain2 a;
    if (coeff != 0) a.coeffs[knot] = std::move(coeff);
    return a;
}

Int Chain2::at(const std::string& knot) const {
    auto it = coeffs.find(knot);
    return it == coeffs.end() ? Int(0) : it->second;
}

Chain2 Chain2::operator+(const Chain2& o) const {
    Chain2 out = *this;
    for (const auto& [k, v] : o.coeffs) {
        Int s = out.at(k) + v;
        if (s == 0)
            out.coeffs.erase(k);
        else
            out.coeffs[k] = s;
    }
    return out;
}

namespace {

void require_support_in_window(const LinkWindow& w, const std::map<std::string, TorusClass>& m) {
    for (const auto& [k, v] : m)
        if (!w.has(k)) throw ValidationError("unknown knot label \"" + k + "\"");
}

} // namespace

BaseIdele delta(const LinkWindow& w, const Chain2& a) {
    for (const auto& [k, v] : a.coeffs)
        if (!w.has(k)) throw ValidationError("unknown knot label \"" + k + "\"");
    BaseIdele out;
    for (const auto& knot : w.knots()) {
        Int l = a.at(knot);
        Int m = 0;
        for (const auto& [other, coeff] : a.coeffs) {
            if (other == knot) continue;
            m -= w.lk(knot, other) * coeff;
        }
        out.set(knot, {l, m});
    }
    return out;
}

Decomposition decompose(const LinkWindow& w, const BaseIdele& x) {
    require_support_in_window(w, x.support);
    Decomposition out;
    for (const auto& [k, v] : x.support)
        if (v.lambda != 0) out.chain.coeffs[k] = v.lambda;
    BaseIdele rest = x - delta(w, out.chain);
    for (const auto& [k, v] : rest.support) {
        internal_check(v.lambda == 0, "decompose: residual longitude part at \"" + k + "\"");
        out.unit.mu[k] = v.mu;
    }
    return out;
}

BaseIdele norm(const LinkWindow& w, const CoverSpec& cover, const CoverIdele& a) {
    BaseIdele out;
    for (const auto& [knot, fiber] : a.support) {
        KnotSplitting s = splitting_invariants(w, cover, knot);
        if (Int(fiber.size()) != s.c)
            throw ValidationError("fiber over \"" + knot + "\" has " +
                                  std::to_string(fiber.size()) + " components, expected " +
                                  to_string(s.c));
        Int L = 0, M = 0;
        for (const TorusClass& t : fiber) {
            L += t.lambda;
            M += t.mu;
        }
        TorusClass img{s.d * L, s.e * M + s.lattice.t * L};
        out.set(knot, img);
    }
    return out;
}

CoverIdele deck_act(const CoverSpec& cover, const Int& k, const CoverIdele& a) {
    Int kk = mod_norm(k, cover.n);
    CoverIdele out;
    for (const auto& [knot, fiber] : a.support) {
        std::size_t c = fiber.size();
        if (c == 0) continue;
        std::size_t shift = to_size(mod_norm(kk, Int(c)), "deck_act");
        std::vector<TorusClass> rotated(c);
        for (std::size_t j = 0; j < c; ++j) rotated[(j + shift) % c] = fiber[j];
        out.support[knot] = std::move(rotated);
    }
    return out;
}

Int artin_symbol(const LinkWindow& w, const CoverSpec& cover, const BaseIdele& x) {
    require_support_in_window(w, x.support);
    Int sym = 0;
    for (const auto& [knot, v] : x.support) {
        auto [mu_char, lambda_char] = extend_character(w, cover, knot);
        sym += v.lambda * lambda_char + v.mu * mu_char;
    }
    return mod_norm(sym, cover.n);
}

namespace {

// Rows are ordered (lambda_K0, mu_K0, lambda_K1, mu_K1, ...); one column per
// relator. delta(S_K) columns for every window knot come first.
IntMatrix relator_matrix(const LinkWindow& w, std::size_t extra_cols) {
    std::size_t k = w.size();
    IntMatrix m(2 * k, k + extra_cols);
    for (std::size_t j = 0; j < k; ++j) {
        BaseIdele b = delta(w, Chain2::surface(w.knots()[j]));
        for (std::size_t i = 0; i < k; ++i) {
            TorusClass t = b.at(w.knots()[i]);
            m.at(2 * i, j) = t.lambda;
            m.at(2 * i + 1, j) = t.mu;
        }
    }
    return m;
}

} // namespace

FinAbGroup window_homology(const LinkWindow& w, const std::vector<std::string>& sublink) {
    std::set<std::string> sub;
    for (const auto& k : sublink) {
        if (!w.has(k)) throw ValidationError("sublink knot \"" + k + "\" is not in the window");
        if (!sub.insert(k).second) throw ValidationError("sublink knot \"" + k + "\" listed twice");
    }
    std::size_t k = w.size();
    IntMatrix m = relator_matrix(w, k - sub.size());
    std::size_t col = k;
    for (std::size_t i = 0; i < k; ++i) {
        if (sub.count(w.knots()[i])) continue; // meridians of sublink knots stay alive
        m.at(2 * i + 1, col) = 1;
        ++col;
    }
    return cokernel(m);
}

FinAbGroup reciprocity_quotient(const LinkWindow& w, const CoverSpec& cover) {
    std::size_t k = w.size();
    IntMatrix m = relator_matrix(w, 2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        KnotSplitting s = splitting_invariants(w, cover, w.knots()[i]);
        TorusClass bmu = s.beta_mu(), bla = s.beta_lambda();
        m.at(2 * i, k + 2 * i) = bmu.lambda;
        m.at(2 * i + 1, k + 2 * i) = bmu.mu;
        m.at(2 * i, k + 2 * i + 1) = bla.lambda;
        m.at(2 * i + 1, k + 2 * i + 1) = bla.mu;
    }
    return cokernel(m);
}

LinkWindow enrich_for_reciprocity(const LinkWindow& w, const CoverSpec& cover) {
    CoverSpec cov = canonicalize_cover(w, cover);
    if (cov.branch.empty()) return w; // degree-1 covers need nothing

    std::vector<Int> es;
    std::vector<std::string> branch_knots;
    for (const auto& [knot, a] : cov.branch) {
        branch_knots.push_back(knot);
        es.push_back(residue_order(a, cov.n));
    }
    if ([&] { Int p = 1; for (const Int& e : es) p *= e; return p; }() > 1000000)
        throw PreconditionError("enrich_for_reciprocity: character orders multiply past desk scale");
    detail::ResidueBox box(es);

    // Relator contributed by knot K once longitudes and unbranched meridians
    // are eliminated: t_K mu_K + d_K * sum lk(K, K_i) mu_{K_i}.
    auto mu_relator = [&](const LinkWindow& win, const std::string& knot) {
        KnotSplitting s = splitting_invariants(win, cov, knot);
        std::vector<Int> v(es.size(), Int(0));
        for (std::size_t i = 0; i < branch_knots.size(); ++i) {
            Int coef = branch_knots[i] == knot ? s.lattice.t : s.d * win.lk(knot, branch_knots[i]);
            v[i] = mod_norm(coef, es[i]);
        }
        return box.encode(v);
    };

    LinkWindow cur = w;
    std::vector<std::size_t> gens;
    for (const auto& knot : cur.knots()) gens.push_back(mu_relator(cur, knot));
    std::vector<bool> reached = detail::subgroup_closure(box, gens);

    // Symbol kernel elements in mixed-radix order; add each missing one as a
    // synthetic knot (Frobenius 0, so it lands as exactly that relator).
    for (std::size_t idx = 0; idx < box.total; ++idx) {
        std::vector<Int> x = box.decode(idx);
        Int sym = 0;
        for (std::size_t i = 0; i < x.size(); ++i) sym += x[i] * cov.branch[i].second;
        if (mod_norm(sym, cov.n) != 0 || reached[idx]) continue;
        std::vector<Int> linking(cur.size(), Int(0));
        for (std::size_t i = 0; i < branch_knots.size(); ++i)
            linking[cur.index_of(branch_knots[i])] = x[i];
        cur = add_synthetic_knot(cur, linking);
        gens.push_back(idx);
        reached = detail::subgroup_closure(box, gens);
    }
    return cur;
}

} // namespace linkgenus
