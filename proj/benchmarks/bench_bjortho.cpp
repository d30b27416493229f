#include <benchmark/benchmark.h>

#include <bjortho/bjortho.hpp>
#include <sstream>

using namespace bjo;

namespace {

LinearMap op(const std::string& rows, const Space& s) {
  std::vector<Vector> m;
  std::stringstream ss(rows);
  std::string row;
  while (std::getline(ss, row, ';')) m.push_back(parse_vector(row));
  return LinearMap(m, s, s);
}

const char* kNames[] = {"linf2", "decagon", "l2linf", "regular-polygon-12", "fig6-prism"};

void BM_NormEval(benchmark::State& state) {
  Space s = catalog_space(kNames[state.range(0)]);
  Vector x = s.dim() == 2 ? parse_vector("3/7,-11/5") : parse_vector("3/7,-11/5,1/3");
  for (auto _ : state) benchmark::DoNotOptimize(norm_eval(s, x));
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_NormEval)->DenseRange(0, 4);

void BM_MinimizeOffset(benchmark::State& state) {
  Space s = catalog_space(kNames[state.range(0)]);
  Vector x = s.dim() == 2 ? parse_vector("1,3") : parse_vector("1,3,-2");
  Vector y = s.dim() == 2 ? parse_vector("2,-1/3") : parse_vector("2,-1/3,1");
  for (auto _ : state) benchmark::DoNotOptimize(minimize_offset(s, x, y));
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_MinimizeOffset)->DenseRange(0, 4);

void BM_EpsBStar(benchmark::State& state) {
  Space s = catalog_space("decagon");
  Vector x = parse_vector("2,2"), y = parse_vector("-1,3/2");
  for (auto _ : state) benchmark::DoNotOptimize(eps_b_star(s, x, y));
}
BENCHMARK(BM_EpsBStar);

void BM_PropertyP(benchmark::State& state) {
  Space s = state.range(0) == 0 ? catalog_space("decagon") : Space::regular_polygon(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(property_p(s));
  state.SetLabel(s.label());
}
BENCHMARK(BM_PropertyP)->Arg(0)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_PropertyP1Prism(benchmark::State& state) {
  Space s = catalog_space("fig6-prism");
  for (auto _ : state) benchmark::DoNotOptimize(property_p1(s));
}
BENCHMARK(BM_PropertyP1Prism)->Unit(benchmark::kMillisecond);

void BM_GlobalD(benchmark::State& state) {
  Space s = catalog_space("l2linf");
  SamplingOptions opts;
  opts.samples = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(global_d_constant(s, opts));
}
BENCHMARK(BM_GlobalD)->RangeMultiplier(4)->Range(256, 4096)->Unit(benchmark::kMillisecond);

void BM_OperatorNorm(benchmark::State& state) {
  Space s = catalog_space(state.range(0) ? "l2linf" : "linf3");
  LinearMap t = state.range(0) ? op("1,2;-1/2,3", s) : op("1,2,0;-1/2,3,1;0,1,1", s);
  for (auto _ : state) benchmark::DoNotOptimize(operator_norm(t));
  state.SetLabel(s.label());
}
BENCHMARK(BM_OperatorNorm)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_MakePair(benchmark::State& state) {
  Space s = catalog_space("linf3");
  LinearMap a = op("1,2,0;-1/2,3,1;0,1,1", s), t = op("0,1,0;1,0,-1;2,1/3,0", s);
  for (auto _ : state) benchmark::DoNotOptimize(make_orthogonal_pair(a, t));
}
BENCHMARK(BM_MakePair)->Unit(benchmark::kMicrosecond);

void BM_SupInfEpsilon(benchmark::State& state) {
  Space s = catalog_space("linf2");
  LinearMap t = op("1,0;0,1/2", s), a = op("0,1;1,0", s);
  SamplingOptions opts;
  opts.samples = 1024;
  for (auto _ : state) benchmark::DoNotOptimize(sup_inf_epsilon(t, a, opts));
}
BENCHMARK(BM_SupInfEpsilon)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
