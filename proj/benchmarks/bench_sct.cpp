#include <benchmark/benchmark.h>

#include <sct/dual_graph.hpp>
#include <sct/edge_face.hpp>
#include <sct/generators.hpp>
#include <sct/graph.hpp>
#include <sct/io.hpp>
#include <sct/triangulation.hpp>
#include <sct/vertex_colouring.hpp>

namespace {

void BM_BuildCrossPolytope(benchmark::State& state) {
  int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    sct::Triangulation t = sct::cross_polytope_boundary(d);
    benchmark::DoNotOptimize(t.chambers.data());
  }
}
BENCHMARK(BM_BuildCrossPolytope)->DenseRange(2, 10);

void BM_DualGraph(benchmark::State& state) {
  sct::Triangulation t =
      sct::cross_polytope_boundary(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    sct::DualGraph g = sct::dual_graph(t);
    benchmark::DoNotOptimize(g.edges.data());
  }
}
BENCHMARK(BM_DualGraph)->DenseRange(2, 8);

void BM_ColourDPlus1(benchmark::State& state) {
  sct::Triangulation t =
      sct::cross_polytope_boundary(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto psi = sct::colour_d_plus_1(t);
    benchmark::DoNotOptimize(psi);
  }
}
BENCHMARK(BM_ColourDPlus1)->DenseRange(2, 8);

void BM_BruteforceSubdivision(benchmark::State& state) {
  sct::Triangulation octa = sct::cross_polytope_boundary(2);
  for (auto _ : state) {
    auto witness = sct::bruteforce_subdivision(octa);
    benchmark::DoNotOptimize(witness);
  }
}
BENCHMARK(BM_BruteforceSubdivision);

void BM_ExactSkeletonColouring(benchmark::State& state) {
  sct::Triangulation t =
      sct::cyclic_polytope_boundary(static_cast<int>(state.range(0)));
  sct::Graph g = sct::skeleton(t);
  for (auto _ : state) {
    auto psi = sct::exact_graph_colouring(g, t.num_vertices);
    benchmark::DoNotOptimize(psi);
  }
}
BENCHMARK(BM_ExactSkeletonColouring)->DenseRange(5, 9);

void BM_DerivePathColouring(benchmark::State& state) {
  sct::Triangulation sb3 = sct::simplex_boundary(3);
  for (auto _ : state) {
    auto pc = sct::derive_path_colouring(sb3);
    benchmark::DoNotOptimize(pc);
  }
}
BENCHMARK(BM_DerivePathColouring);

void BM_SerializeRoundtrip(benchmark::State& state) {
  sct::Triangulation t =
      sct::cross_polytope_boundary(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::string text = sct::triangulation_json(t);
    sct::Triangulation back = sct::parse_triangulation(text);
    benchmark::DoNotOptimize(back.chambers.data());
  }
}
BENCHMARK(BM_SerializeRoundtrip)->DenseRange(2, 8);

}  // namespace

BENCHMARK_MAIN();
