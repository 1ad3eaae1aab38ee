#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "fermat/bounds.hpp"
#include "fermat/eliminate.hpp"
#include "fermat/frey.hpp"
#include "fermat/screen.hpp"

using namespace fermat;

static void BM_ResultantDuodecic(benchmark::State& state)
{
    const Polynomial target = Polynomial::monomial(1, 12) - Polynomial::constant(9);
    const Polynomial p{9, -5, 1};
    for (auto _ : state)
        benchmark::DoNotOptimize(resultant(p, target));
}
BENCHMARK(BM_ResultantDuodecic);

static void BM_ComputeCk(benchmark::State& state)
{
    const CkCase which = state.range(0) ? CkCase::Duodecic : CkCase::Quartic;
    for (auto _ : state)
        benchmark::DoNotOptimize(compute_ck(which));
}
BENCHMARK(BM_ComputeCk)->Arg(0)->Arg(1);

static void BM_RayClassGroup(benchmark::State& state)
{
    const QuadraticField f = QuadraticField::supported(67);
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(ray_class_group(f, m));
}
BENCHMARK(BM_RayClassGroup)->DenseRange(1, 3);

static void BM_FreyLargeExponent(benchmark::State& state)
{
    const QuadraticField f = QuadraticField::supported(43);
    const RingElement a(f, 2, 1), b(f, 3, -1), c(f, 5, 2);
    const auto p = static_cast<unsigned long>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(frey_invariants(a, b, c, p));
}
BENCHMARK(BM_FreyLargeExponent)->Arg(101)->Arg(1009)->Arg(10007);

static void BM_PrimesUpToNorm(benchmark::State& state)
{
    const QuadraticField f = QuadraticField::supported(7);
    const auto bound = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(primes_up_to_norm(f, bound));
}
BENCHMARK(BM_PrimesUpToNorm)->Arg(1000)->Arg(10000);

static void BM_EliminateCmFixture(benchmark::State& state)
{
    const QuadraticField f = QuadraticField::supported(19);
    std::ifstream in(std::string(FERMAT_DATA_DIR) + "/forms/cm_d19.forms");
    const ParsedForms forms = parse_forms(in);
    const auto primes = elimination_primes(f, 50);
    for (auto _ : state)
        benchmark::DoNotOptimize(verdict(forms.records.front(), Integer(47), primes));
}
BENCHMARK(BM_EliminateCmFixture);

static void BM_ScreenCorpus(benchmark::State& state)
{
    std::ifstream in(std::string(FERMAT_DATA_DIR) + "/fields/sample_corpus.csv");
    const ParsedCorpus corpus = parse_field_records(in);
    for (auto _ : state)
        benchmark::DoNotOptimize(screen_pp3(corpus.records, 50));
}
BENCHMARK(BM_ScreenCorpus);
BENCHMARK_MAIN();
