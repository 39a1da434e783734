// Microbenchmarks for the hot paths: Smith reduction, the norm-one descent,
// genus class enumeration, and the reciprocity quotient.

#include <benchmark/benchmark.h>

#include "linkgenus/genus.hpp"
#include "linkgenus/smith.hpp"
#include "linkgenus/tate.hpp"
#include "linkgenus/verify.hpp"

namespace lg = linkgenus;
using lg::Int;

namespace {

lg::IntMatrix dense_matrix(std::size_t n, std::uint64_t seed) {
    lg::Rng rng(seed);
    lg::IntMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m.at(r, c) = rng.range(-9, 9);
    return m;
}

// One branch knot plus an unlinked satellite: the satellite's fiber has n
// components, so the descent walks a long orbit.
struct DescentCase {
    lg::LinkWindow window;
    lg::CoverSpec cover;
    lg::CoverIdele idele;
};

DescentCase descent_case(const Int& n) {
    lg::LinkWindow w({"K", "J"}, lg::IntMatrix{{0, 0}, {0, 0}});
    lg::CoverSpec cover{n, {{"K", 1}}};
    cover = lg::canonicalize_cover(w, cover);
    // J is unbranched and unlinked, so its fiber has n components. Fill the
    // whole fiber with canceling halves to make the descent walk all of it.
    std::size_t c = lg::to_size(n, "bench fiber");
    std::vector<lg::TorusClass> fiber(c);
    for (std::size_t j = 0; j < c; ++j) {
        fiber[j].lambda = (j < c / 2) ? 1 : -1;
        fiber[j].mu = (j < c / 2) ? -2 : 2;
    }
    lg::CoverIdele a;
    a.support["J"] = std::move(fiber);
    return {w, cover, a};
}

lg::CoverSpec wide_cover(lg::LinkWindow& w, const Int& n, std::size_t branch_knots) {
    std::vector<std::string> knots;
    for (std::size_t i = 0; i < branch_knots; ++i) knots.push_back("K" + std::to_string(i + 1));
    w = lg::LinkWindow(knots, lg::IntMatrix(branch_knots, branch_knots));
    lg::CoverSpec cover;
    cover.n = n;
    for (const auto& k : knots) cover.branch.emplace_back(k, 1);
    return lg::canonicalize_cover(w, cover);
}

// Dense random inputs hit intermediate entry blowup past ~11x11 (minutes per
// reduction); window-scale relator lattices, the actual workload, stay small.
void BM_smith_normal_form(benchmark::State& state) {
    lg::IntMatrix m = dense_matrix(static_cast<std::size_t>(state.range(0)), 42);
    for (auto _ : state) {
        lg::SmithDecomposition s = lg::smith_normal_form(m);
        benchmark::DoNotOptimize(s.s);
    }
}
BENCHMARK(BM_smith_normal_form)->Arg(6)->Arg(8)->Arg(10);

void BM_hilbert90_solve(benchmark::State& state) {
    DescentCase c = descent_case(state.range(0));
    for (auto _ : state) {
        lg::CoverIdele b = lg::hilbert90_solve(c.cover, c.idele);
        benchmark::DoNotOptimize(b.support);
    }
}
BENCHMARK(BM_hilbert90_solve)->Arg(16)->Arg(64)->Arg(256);

void BM_genus_image(benchmark::State& state) {
    lg::LinkWindow w;
    lg::CoverSpec cover = wide_cover(w, 8, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        std::vector<lg::GenusVector> img = lg::genus_image(cover);
        benchmark::DoNotOptimize(img);
    }
}
BENCHMARK(BM_genus_image)->Arg(3)->Arg(4)->Arg(5);

void BM_reciprocity_quotient(benchmark::State& state) {
    lg::Rng rng(11);
    lg::LinkWindow w = lg::random_window(rng, static_cast<std::size_t>(state.range(0)));
    lg::CoverSpec cover = lg::random_cover(rng, w, 8);
    lg::LinkWindow rich = lg::enrich_for_reciprocity(w, cover);
    for (auto _ : state) {
        lg::FinAbGroup q = lg::reciprocity_quotient(rich, cover);
        benchmark::DoNotOptimize(q);
    }
}
BENCHMARK(BM_reciprocity_quotient)->Arg(3)->Arg(5);

} // namespace

BENCHMARK_MAIN();
