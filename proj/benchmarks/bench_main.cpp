#include "hyperforms/group.hpp"
#include "hyperforms/identities.hpp"
#include "hyperforms/sequences.hpp"
#include "hyperforms/zetaforms.hpp"

#include <benchmark/benchmark.h>

using namespace hyperforms;

static void BM_BallLogExp(benchmark::State &state)
{
  const long digits = state.range(0);
  const BallReal x(Rational(7, 3), digits);
  for (auto _ : state)
    benchmark::DoNotOptimize(exp(log(x, digits), digits));
}
BENCHMARK(BM_BallLogExp)->Arg(50)->Arg(200)->Arg(1000);

static void BM_PfqBalanced3F2(benchmark::State &state)
{
  PfqSpec spec{{Rational(1, 2), Rational(3, 2), Rational(2)}, {Rational(7, 2), Rational(4)}, 1};
  for (auto _ : state)
    benchmark::DoNotOptimize(eval_pfq(spec, state.range(0)));
}
BENCHMARK(BM_PfqBalanced3F2)->Arg(40)->Arg(100)->Arg(300);

static void BM_FamilyForm(benchmark::State &state)
{
  const Family f = static_cast<Family>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(build_form(f, n));
  state.SetLabel(family_name(f));
}
BENCHMARK(BM_FamilyForm)
    ->Args({static_cast<long>(Family::catalan_wt), 8})
    ->Args({static_cast<long>(Family::log2_r), 20})
    ->Args({static_cast<long>(Family::pi2_r), 10});

static void BM_RecurrenceFit(benchmark::State &state)
{
  for (auto _ : state)
    benchmark::DoNotOptimize(fit_recurrence(Family::log2_r, 2, 1, 1, 14));
}
BENCHMARK(BM_RecurrenceFit);

static void BM_IdentityPoint(benchmark::State &state)
{
  const ParamMap p = {{"a", Rational(2)}, {"b", Rational(3, 2)}, {"c", Rational(2)}, {"d", Rational(5)}};
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_identity(IdentityId::eq_3f2_7f6, p, state.range(0)));
}
BENCHMARK(BM_IdentityPoint)->Arg(40)->Arg(100);

static void BM_GroupClosure(benchmark::State &state)
{
  for (auto _ : state)
    benchmark::DoNotOptimize(generate_subgroup(group_generators()));
}
BENCHMARK(BM_GroupClosure);

static void BM_OrbitInvariant(benchmark::State &state)
{
  const ParamMatrix m = build_matrix(Rational(2), Rational(3), Rational(5, 2), Rational(7), Rational(13, 2));
  for (auto _ : state)
    benchmark::DoNotOptimize(orbit_invariant_check(m, 30, 1));
}
BENCHMARK(BM_OrbitInvariant)->Unit(benchmark::kMillisecond);

static void BM_ZetaForm(benchmark::State &state)
{
  const ZetaFormSpec spec{static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), ZetaVariant::r, false};
  for (auto _ : state)
    benchmark::DoNotOptimize(zeta_form(spec));
}
BENCHMARK(BM_ZetaForm)->Args({8, 4})->Args({8, 10})->Args({40, 3});

static void BM_Asymptotics(benchmark::State &state)
{
  for (auto _ : state)
    benchmark::DoNotOptimize(asymptotics(static_cast<int>(state.range(0)), 60));
}
BENCHMARK(BM_Asymptotics)->Arg(8)->Arg(40)->Arg(42)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
