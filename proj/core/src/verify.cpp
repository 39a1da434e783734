#include "linkgenus/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace linkgenus {

Int Rng::below(const Int& n) {
    internal_check(n > 0, "Rng::below needs a positive bound");
    return Int(eng_() % to_size(n, "random draw"));
}

Int Rng::range(long lo, long hi) {
    internal_check(lo <= hi, "Rng::range needs lo <= hi");
    return Int(lo) + below(Int(hi) - Int(lo) + 1);
}

std::size_t Rng::index(std::size_t n) { return to_size(below(Int(n)), "random index"); }

bool Rng::coin() { return (eng_() & 1) != 0; }

LinkWindow random_window(Rng& rng, std::size_t max_knots) {
    std::size_t k = 1 + rng.index(max_knots);
    std::vector<std::string> knots;
    for (std::size_t i = 0; i < k; ++i) knots.push_back("K" + std::to_string(i + 1));
    IntMatrix lk(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) lk.at(i, j) = lk.at(j, i) = rng.range(-3, 3);
    return LinkWindow(knots, lk);
}

CoverSpec random_cover(Rng& rng, const LinkWindow& w, const Int& max_n) {
    CoverSpec cover;
    cover.n = 1 + rng.below(max_n);
    if (cover.n == 1) return cover;
    for (int attempt = 0; attempt < 20; ++attempt) {
        cover.branch.clear();
        for (const auto& knot : w.knots())
            if (rng.coin()) cover.branch.emplace_back(knot, 1 + rng.below(cover.n - 1));
        if (cover.branch.empty())
            cover.branch.emplace_back(w.knots()[rng.index(w.size())], 1 + rng.below(cover.n - 1));
        Int g = cover.n;
        for (const auto& [knot, a] : cover.branch) g = boost::multiprecision::gcd(g, a);
        if (g == 1) return canonicalize_cover(w, cover);
    }
    cover.branch.front().second = 1;
    return canonicalize_cover(w, cover);
}

CoverIdele random_norm_zero_idele(Rng& rng, const LinkWindow& w, const CoverSpec& cover) {
    CoverIdele x;
    for (const auto& knot : w.knots()) {
        if (!rng.coin()) continue;
        std::size_t c = to_size(splitting_invariants(w, cover, knot).c, "fiber size");
        std::vector<TorusClass> r(c);
        for (auto& v : r) v = TorusClass{rng.range(-4, 4), rng.range(-4, 4)};
        std::vector<TorusClass> fiber(c);
        for (std::size_t j = 0; j < c; ++j) fiber[j] = r[j] - r[(j + 1) % c];
        x.support[knot] = std::move(fiber);
    }
    return x;
}

Cycle1 random_cycle(Rng& rng, const LinkWindow& w, const CoverSpec& cover) {
    Cycle1 z;
    for (const auto& knot : w.knots()) {
        if (cover.is_branch(knot) || !rng.coin()) continue;
        Int c = splitting_invariants(w, cover, knot).c;
        z.terms.push_back({knot, rng.below(c), rng.range(-3, 3)});
    }
    return z;
}

FinAbGroup oracle_sum_of_cyclics(const std::vector<Int>& ms) {
    // prime -> prime-power parts, largest first
    std::map<Int, std::vector<Int>> parts;
    for (Int m : ms) {
        internal_check(m >= 1, "oracle_sum_of_cyclics needs positive orders");
        for (Int p = 2; p * p <= m; ++p) {
            Int power = 1;
            while (m % p == 0) {
                power *= p;
                m /= p;
            }
            if (power > 1) parts[p].push_back(power);
        }
        if (m > 1) parts[m].push_back(m);
    }
    std::size_t count = 0;
    for (auto& [p, ps] : parts) {
        std::sort(ps.begin(), ps.end(), std::greater<Int>());
        count = std::max(count, ps.size());
    }
    FinAbGroup out;
    for (std::size_t j = count; j-- > 0;) {
        Int factor = 1;
        for (const auto& [p, ps] : parts)
            if (j < ps.size()) factor *= ps[j];
        out.invariant_factors.push_back(factor); // j descending = factors ascending
    }
    return out;
}

namespace {

struct TrialOutcome {
    bool ok = true;
    std::string instance;
};
using TrialFn = std::function<TrialOutcome(Rng&, const VerifyCaps&)>;

std::string dump_instance(const LinkWindow& w, const CoverSpec& cover) {
    return "window " + to_json(w).dump() + " cover " + to_json(cover).dump();
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::vector<Int> divisors(const Int& n) {
    std::vector<Int> out;
    for (Int d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

Int order_product(const CoverSpec& cover) {
    Int p = 1;
    for (const auto& [knot, a] : cover.branch) p *= residue_order(a, cover.n);
    return p;
}

// Redraws until the branch-order product is small enough for enumeration-based
// checks; falls back to a single unit-character branch knot.
CoverSpec bounded_cover(Rng& rng, const LinkWindow& w, const VerifyCaps& caps, const Int& cap) {
    for (int attempt = 0; attempt < 32; ++attempt) {
        CoverSpec cover = random_cover(rng, w, caps.max_n);
        if (order_product(cover) <= cap) return cover;
    }
    CoverSpec cover;
    cover.n = 1 + rng.below(std::min(caps.max_n, cap));
    if (cover.n > 1) cover.branch.emplace_back(w.knots()[rng.index(w.size())], 1);
    return cover;
}

TrialOutcome check_satz90(Rng& rng, const VerifyCaps& caps) {
    LinkWindow w = random_window(rng, caps.max_knots);
    CoverSpec cover = random_cover(rng, w, caps.max_n);
    CoverIdele a = random_norm_zero_idele(rng, w, cover);
    CoverIdele b = hilbert90_solve(cover, a);
    CoverIdele rot = deck_act(cover, 1, b);
    bool ok = true;
    for (const auto& [knot, fiber] : a.support) {
        if (fiber.empty()) continue;
        auto itb = b.support.find(knot);
        auto itr = rot.support.find(knot);
        if (itb == b.support.end() || itr == rot.support.end() ||
            itb->second.size() != fiber.size() || itr->second.size() != fiber.size()) {
            ok = false;
            break;
        }
        for (std::size_t j = 0; j < fiber.size() && ok; ++j)
            ok = (itr->second[j] - itb->second[j]) == fiber[j];
    }
    return {ok, dump_instance(w, cover) + " idele " + to_json(a).dump()};
}

TrialOutcome check_tate(Rng& rng, const VerifyCaps& caps) {
    LinkWindow w = random_window(rng, caps.max_knots);
    CoverSpec cover = random_cover(rng, w, caps.max_n);
    const std::string& knot = w.knots()[rng.index(w.size())];
    CyclicModule ind = induced_module(w, cover, knot);
    ind.check();
    KnotSplitting s = splitting_invariants(w, cover, knot);
    Int de = s.d * s.e;
    bool ok = tate_h1(ind).is_trivial() && tate_h0(ind) == oracle_sum_of_cyclics({de, de});

    std::vector<Int> divs = divisors(cover.n);
    Int so = divs[rng.index(divs.size())];
    CyclicModule coset = coset_module(cover.n, so);
    coset.check();
    ok = ok && tate_h1(coset).is_trivial() && tate_h0(coset) == oracle_sum_of_cyclics({so});
    return {ok, dump_instance(w, cover) + " knot \"" + knot + "\" subgroup order " + to_string(so)};
}

TrialOutcome check_genus_count(Rng& rng, const VerifyCaps& caps) {
    LinkWindow w = random_window(rng, caps.max_knots);
    CoverSpec cover = bounded_cover(rng, w, caps, 4096);
    std::vector<GenusVector> image = genus_image(cover);
    Int expected = order_product(cover) / cover.n;
    bool ok = Int(image.size()) == expected && genus_number(cover) == expected;
    std::set<GenusVector> seen;
    for (const auto& v : image) {
        ok = ok && sigma(cover, v) == 0 && seen.insert(v).second;
        if (!ok) break;
    }
    if (ok && !image.empty()) {
        // spot-check closure under addition
        const GenusVector& u = image[rng.index(image.size())];
        const GenusVector& v = image[rng.index(image.size())];
        GenusVector sum;
        for (std::size_t i = 0; i < u.size(); ++i)
            sum.push_back(mod_norm(u[i] + v[i],
                                    residue_order(cover.branch[i].second, cover.n)));
        ok = seen.count(sum) != 0;
    }
    return {ok, dump_instance(w, cover)};
}

TrialOutcome check_genus_generation(Rng& rng, const VerifyCaps& caps) {
    LinkWindow w = random_window(rng, caps.max_knots);
    CoverSpec cover = bounded_cover(rng, w, caps, 256);
    std::vector<GenusVector> image = genus_image(cover);
    bool ok = true;
    std::size_t tried = 0;
    for (std::size_t i = 0; i < image.size() && ok && tried < 16; ++i, ++tried) {
        const GenusVector& target = image[image.size() <= 16 ? i : rng.index(image.size())];
        RealizeResult res = realize_class(w, cover, target, 4);
        ok = res.found && chi(res.window, cover, res.witness) == target;
    }
    if (ok) {
        Cycle1 z = random_cycle(rng, w, cover);
        ok = sigma(cover, chi(w, cover, z)) == 0;
    }
    return {ok, dump_instance(w, cover)};
}

TrialOutcome check_splitting(Rng& rng, const VerifyCaps& caps) {
    LinkWindow w = random_window(rng, caps.max_knots);
    CoverSpec cover = random_cover(rng, w, caps.max_n);
    bool ok = true;
    for (const KnotSplitting& s : all_splittings(w, cover)) {
        ok = ok && s.c * s.d * s.e == cover.n;
        ok = ok && mod_norm(s.mu_char * s.e, cover.n) == 0;
        ok = ok && (cover.is_branch(s.knot) || s.mu_char == 0);
        for (TorusClass v : {s.beta_mu(), s.beta_lambda()}) {
            ok = ok && s.lattice.contains(v);
            ok = ok && mod_norm(s.lambda_char * v.lambda + s.mu_char * v.mu, cover.n) == 0;
        }
        if (!ok) break;
    }
    return {ok, dump_instance(w, cover)};
}

TrialOutcome check_window_homology(Rng& rng, const VerifyCaps& caps) {
    LinkWindow w = random_window(rng, caps.max_knots);
    std::vector<std::string> sublink;
    for (const auto& knot : w.knots())
        if (rng.coin()) sublink.push_back(knot);
    FinAbGroup h = window_homology(w, sublink);
    bool ok = h.free_rank == sublink.size() && h.invariant_factors.empty();
    std::string subs;
    for (const auto& s : sublink) subs += " \"" + s + "\"";
    return {ok, "window " + to_json(w).dump() + " sublink" + (subs.empty() ? " (empty)" : subs)};
}

TrialOutcome check_reciprocity(Rng& rng, const VerifyCaps& caps) {
    LinkWindow w = random_window(rng, caps.max_knots);
    CoverSpec cover = bounded_cover(rng, w, caps, 256);
    LinkWindow enriched = enrich_for_reciprocity(w, cover);
    FinAbGroup q = reciprocity_quotient(enriched, cover);
    bool ok = cover.n == 1
                  ? q.is_trivial()
                  : q.free_rank == 0 && q.invariant_factors == std::vector<Int>{cover.n};
    return {ok, dump_instance(w, cover) + " quotient " + to_string(q)};
}

TrialOutcome check_commuting_diagram(Rng& rng, const VerifyCaps& caps) {
    LinkWindow w = random_window(rng, caps.max_knots);
    CoverSpec cover = random_cover(rng, w, caps.max_n);
    Cycle1 z = random_cycle(rng, w, cover);
    DiagramCheck direct = commuting_diagram_check(w, cover, z);
    Cycle1 shifted = z;
    for (auto& t : shifted.terms) {
        Int c = splitting_invariants(w, cover, t.knot).c;
        t.component = mod_norm(t.component + 1, c);
    }
    DiagramCheck moved = commuting_diagram_check(w, cover, shifted);
    bool ok = direct.commutes && moved.commutes && direct.direct == moved.direct;
    return {ok, dump_instance(w, cover) + " cycle " + to_json(z).dump()};
}

std::string minimize(const TrialFn& fn, const VerifyCaps& caps, std::uint64_t base,
                     const std::string& first) {
    for (std::size_t k = 1; k <= caps.max_knots; ++k)
        for (Int n = 1; n <= caps.max_n; ++n)
            for (std::uint64_t s = 0; s < 20; ++s) {
                VerifyCaps sub = caps;
                sub.max_knots = k;
                sub.max_n = n;
                Rng rng(base ^ (0x5bd1e995ULL + s + 131 * k + 1009 * to_size(n, "minimize")));
                TrialOutcome out = fn(rng, sub);
                if (!out.ok)
                    return "smallest reproduction (knots<=" + std::to_string(k) + ", n<=" +
                           to_string(n) + "): " + out.instance;
            }
    return "no smaller reproduction found; first failure: " + first;
}

CheckResult run_check(const std::string& name, const VerifyCaps& caps, const TrialFn& fn) {
    CheckResult res{name, true, caps.trials, ""};
    std::uint64_t base = caps.seed * 0x9e3779b97f4a7c15ULL ^ fnv1a(name);
    for (std::size_t t = 0; t < caps.trials; ++t) {
        Rng rng(base + t);
        TrialOutcome out = fn(rng, caps);
        if (out.ok) continue;
        res.passed = false;
        res.detail = minimize(fn, caps, base, out.instance);
        break;
    }
    return res;
}

} // namespace

bool VerifyReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

VerifyReport run_verify(const VerifyCaps& caps) {
    std::vector<std::pair<std::string, TrialFn>> plan = {
        {"01-satz90-roundtrip", check_satz90},
        {"02-tate-cyclic", check_tate},
        {"03-genus-count", check_genus_count},
        {"04-genus-generation", check_genus_generation},
        {"05-splitting-balance", check_splitting},
        {"06-window-homology", check_window_homology},
        {"07-reciprocity", check_reciprocity},
        {"08-commuting-diagram", check_commuting_diagram},
    };
    VerifyReport report;
    for (auto& [name, fn] : plan) {
        TrialFn wrapped = fn;
        if (caps.fail_injected == name)
            wrapped = [fn](Rng& rng, const VerifyCaps& c) {
                TrialOutcome out = fn(rng, c);
                out.ok = false;
                return out;
            };
        report.checks.push_back(run_check(name, caps, wrapped));
    }
    return report;
}

} // namespace linkgenus
