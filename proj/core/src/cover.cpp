#include "linkgenus/cover.hpp"

#include <set>

namespace linkgenus {

bool CoverSpec::is_branch(const std::string& knot) const {
    for (const auto& [k, a] : branch)
        if (k == knot) return true;
    return false;
}

const Int& CoverSpec::branch_value(const std::string& knot) const {
    for (const auto& [k, a] : branch)
        if (k == knot) return a;
    throw ValidationError("\"" + knot + "\" is not a branch knot");
}

std::vector<std::string> validate_cover(const LinkWindow& w, const CoverSpec& cover) {
    std::vector<std::string> out;
    if (cover.n < 1) out.push_back("covering degree must be >= 1, got " + to_string(cover.n));
    std::set<std::string> seen;
    Int g = cover.n < 1 ? Int(1) : cover.n;
    for (const auto& [knot, a] : cover.branch) {
        if (!w.has(knot)) out.push_back("branch knot \"" + knot + "\" is not in the window");
        if (!seen.insert(knot).second) out.push_back("branch knot \"" + knot + "\" listed twice");
        if (cover.n >= 1) {
            Int r = mod_norm(a, cover.n);
            if (r == 0)
                out.push_back("branch character at \"" + knot + "\" is 0 mod " + to_string(cover.n) +
                              " (the knot would be unbranched)");
            g = gcd(g, r);
        }
    }
    if (cover.n >= 1 && g != 1)
        out.push_back("character values and degree share the factor " + to_string(g) +
                      "; the total character is not onto Z/" + to_string(cover.n));
    return out;
}

CoverSpec canonicalize_cover(const LinkWindow& w, const CoverSpec& cover) {
    std::vector<std::string> bad = validate_cover(w, cover);
    if (!bad.empty()) {
        std::string msg = "invalid cover:";
        for (const auto& m : bad) msg += "\n  " + m;
        throw ValidationError(msg);
    }
    CoverSpec out;
    out.n = cover.n;
    for (const auto& knot : w.knots())
        if (cover.is_branch(knot)) out.branch.emplace_back(knot, mod_norm(cover.branch_value(knot), cover.n));
    return out;
}

std::pair<Int, Int> extend_character(const LinkWindow& w, const CoverSpec& cover,
                                     const std::string& knot) {
    if (!w.has(knot)) throw ValidationError("unknown knot label \"" + knot + "\"");
    Int mu = cover.is_branch(knot) ? mod_norm(cover.branch_value(knot), cover.n) : Int(0);
    // The longitude of `knot` is homologous in the complement of L_0 to the
    // sum of the branch meridians it links.
    Int la = 0;
    for (const auto& [bk, a] : cover.branch) {
        if (!w.has(bk)) throw ValidationError("branch knot \"" + bk + "\" is not in the window");
        if (bk == knot) continue;
        la += w.lk(knot, bk) * a;
    }
    return {mu, mod_norm(la, cover.n)};
}

KnotSplitting splitting_invariants(const LinkWindow& w, const CoverSpec& cover,
                                   const std::string& knot) {
    auto [mu, la] = extend_character(w, cover, knot);
    KnotSplitting s;
    s.knot = knot;
    s.mu_char = mu;
    s.lambda_char = la;
    s.lattice = torus_kernel_lattice(cover.n, mu, la);
    s.e = s.lattice.e;
    s.d = s.lattice.d;
    Int de = s.d * s.e;
    internal_check(cover.n % de == 0, "splitting_invariants: decomposition order does not divide n");
    s.c = cover.n / de;
    return s;
}

std::vector<KnotSplitting> all_splittings(const LinkWindow& w, const CoverSpec& cover) {
    std::vector<KnotSplitting> out;
    out.reserve(w.size());
    for (const auto& knot : w.knots()) out.push_back(splitting_invariants(w, cover, knot));
    return out;
}

} // namespace linkgenus
