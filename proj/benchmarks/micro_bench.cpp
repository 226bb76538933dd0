// Microbenchmarks for the hot paths: singular-locus construction, the
// labeling solver, orbit classification, and cyclotomic multiplication.

#include <benchmark/benchmark.h>

#include "arrangio/arrangement.hpp"
#include "arrangio/generators.hpp"
#include "arrangio/ss_config.hpp"

namespace {

using namespace arrangio;

void BM_singular_locus(benchmark::State& state) {
  const Arrangement a = boroczky(size_t(state.range(0)));
  for (auto _ : state) {
    const SingularLocus locus = singular_locus(a);
    benchmark::DoNotOptimize(locus.points.data());
  }
}
BENCHMARK(BM_singular_locus)->Arg(4)->Arg(6)->Arg(8)->Arg(12);

void BM_realize_template_over_q(benchmark::State& state) {
  const SSConfig cfg = bm_template(size_t(state.range(0)));
  const FieldPtr q = Field::rationals();
  for (auto _ : state) {
    const SolveResult r = realize_or_refute(cfg, q);
    benchmark::DoNotOptimize(r.outcome);
  }
}
BENCHMARK(BM_realize_template_over_q)->Arg(4)->Arg(6)->Arg(8);

void BM_classify_labelings(benchmark::State& state) {
  const size_t m = size_t(state.range(0));
  for (auto _ : state) {
    const SearchResult r = search_classify(m, true);
    benchmark::DoNotOptimize(r.classes.data());
  }
}
BENCHMARK(BM_classify_labelings)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_cyclotomic_mul(benchmark::State& state) {
  const FieldPtr f = Field::cyclotomic(unsigned(state.range(0)));
  std::vector<std::pair<long, Rational>> ta, tb;
  for (unsigned k = 0; k < f->degree(); ++k) {
    ta.emplace_back(long(k), make_rational(long(k) + 1, 3));
    tb.emplace_back(long(k), make_rational(2, long(k) + 5));
  }
  const FieldElement a = f->zeta_combination(ta);
  const FieldElement b = f->zeta_combination(tb);
  for (auto _ : state) {
    const FieldElement c = a * b;
    benchmark::DoNotOptimize(c.payload());
  }
}
BENCHMARK(BM_cyclotomic_mul)->Arg(12)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
