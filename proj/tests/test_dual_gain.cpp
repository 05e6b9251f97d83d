// Dual graphs, f-cycles, permutation algebra, gain walks, balance,
// spanning-tree propagation, and the exact graph colouring backstop.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include <sct/dual_graph.hpp>
#include <sct/gains.hpp>
#include <sct/triangulation.hpp>
#include <sct/vertex_colouring.hpp>

#include "helpers.hpp"

using namespace sct;
using sct::testing::all_permutations;
using sct::testing::complete_graph;
using sct::testing::sphere_corpus;
using sct::testing::thrown_code;

namespace {

Permutation random_permutation(int k, std::mt19937_64& rng) {
  std::vector<int> img(k);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

GainAssignment random_gains(const DualGraph& g, int k, std::mt19937_64& rng) {
  GainAssignment gains(static_cast<int>(g.edges.size()), k);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
    gains.set_gain(e, random_permutation(k, rng));
  return gains;
}

// Gains derived from a random potential phi (gain of e is phi[s]^-1 *
// phi[t]), which makes every closed walk balanced by construction.
struct PotentialGains {
  std::vector<Permutation> phi;
  GainAssignment gains;
};

PotentialGains potential_gains(const DualGraph& g, int k,
                               std::mt19937_64& rng) {
  PotentialGains out;
  for (int v = 0; v < g.chamber_count; ++v)
    out.phi.push_back(random_permutation(k, rng));
  out.gains = GainAssignment(static_cast<int>(g.edges.size()), k);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    const auto& edge = g.edges[e];
    out.gains.set_gain(e, out.phi[edge.s].inverse() * out.phi[edge.t]);
  }
  return out;
}

// Two chambers joined by two parallel edges: the smallest multigraph with a
// potentially unbalanced cycle.  Not realisable as a dual graph, fabricated
// directly.
DualGraph two_chamber_multigraph() {
  DualGraph g;
  g.chamber_count = 2;
  g.edges.push_back({0, 1, {0}});
  g.edges.push_back({0, 1, {1}});
  g.rebuild_incidence();
  return g;
}

}  // namespace

TEST_CASE("permutation composition applies the right factor first") {
  Permutation a({1, 0, 2});  // swap 0,1
  Permutation b({0, 2, 1});  // swap 1,2
  CHECK((a * b).images() == std::vector<int>{1, 2, 0});  // 0->1->2->0
  CHECK((b * a).images() == std::vector<int>{2, 0, 1});
}

TEST_CASE("permutation group laws over all of S_4") {
  auto s4 = all_permutations(4);
  CHECK(s4.size() == 24);
  Permutation id = Permutation::identity(4);
  int even = 0;
  for (const auto& p : s4) {
    CHECK(p * p.inverse() == id);
    CHECK(p.inverse() * p == id);
    CHECK(p.parity() == p.inverse().parity());
    if (p.parity() == 1) ++even;
    for (const auto& q : s4)
      CHECK((p * q).parity() == p.parity() * q.parity());
  }
  CHECK(even == 12);
  CHECK(id.is_identity());
  CHECK(id.parity() == 1);
  CHECK(Permutation({1, 0, 2, 3}).parity() == -1);
  CHECK(Permutation({1, 2, 0}).parity() == 1);
}

TEST_CASE("permutation validation") {
  CHECK(thrown_code([] { Permutation({0, 0, 1}); }) == ErrorCode::BadParams);
  CHECK(thrown_code([] { Permutation({0, 2}); }) == ErrorCode::BadParams);
  CHECK(thrown_code([] { Permutation({-1, 0}); }) == ErrorCode::BadParams);
  CHECK(thrown_code([] {
          Permutation({0, 1}) * Permutation({0, 1, 2});
        }) == ErrorCode::BadParams);
}

TEST_CASE("duals of simplex boundaries are complete graphs") {
  for (int d = 2; d <= 4; ++d) {
    DualGraph g = dual_graph(simplex_boundary(d));
    CHECK(g.chamber_count == d + 2);
    CHECK(g.edges.size() == static_cast<std::size_t>((d + 2) * (d + 1) / 2));
    Graph simple = dual_as_graph(g);
    for (int u = 0; u < g.chamber_count; ++u)
      for (int v = u + 1; v < g.chamber_count; ++v)
        CHECK(simple.adjacent(u, v));
  }
}

TEST_CASE("the octahedron dual is the cube graph") {
  DualGraph g = dual_graph(cross_polytope_boundary(2));
  CHECK(g.chamber_count == 8);
  CHECK(g.edges.size() == 12);
  Graph simple = dual_as_graph(g);
  CHECK(is_bipartite(simple));
  // chamber indices encode the axis choices as bits, so dual adjacency is
  // Hamming distance one
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      int bits = i ^ j;
      bool hamming_one = bits == 1 || bits == 2 || bits == 4;
      CHECK(simple.adjacent(i, j) == hamming_one);
    }
}

TEST_CASE("dual edges carry their shared facet") {
  for (const auto& [name, t] : sphere_corpus()) {
    CAPTURE(name);
    DualGraph g = dual_graph(t);
    CHECK(g.edges.size() == cells(t, t.dim - 1).size());
    std::vector<Cell> seen;
    for (const auto& e : g.edges) {
      CHECK(e.s < e.t);
      CHECK(static_cast<int>(e.cell.size()) == t.dim);
      CHECK(contains_cell(t.chambers[e.s], e.cell));
      CHECK(contains_cell(t.chambers[e.t], e.cell));
      seen.push_back(e.cell);
    }
    CHECK(std::is_sorted(seen.begin(), seen.end()));
    // every chamber has d+1 incident dual edges
    for (const auto& inc : g.incident)
      CHECK(static_cast<int>(inc.size()) == t.dim + 1);
  }
}

TEST_CASE("f-cycles walk the chambers around each low cell") {
  Triangulation octa = cross_polytope_boundary(2);
  DualGraph g = dual_graph(octa);
  auto cycles = f_cycles(octa, g);
  REQUIRE(cycles.size() == 6);
  for (const auto& c : cycles) CHECK(c.length() == 4);

  auto tri = f_cycles(simplex_boundary(2), dual_graph(simplex_boundary(2)));
  REQUIRE(tri.size() == 4);
  for (const auto& c : tri) CHECK(c.length() == 3);
}

TEST_CASE("f-cycle structure across the corpus") {
  for (const auto& [name, t] : sphere_corpus()) {
    CAPTURE(name);
    DualGraph g = dual_graph(t);
    auto cycles = f_cycles(t, g);
    CHECK(cycles.size() == cells(t, t.dim - 2).size());
    std::vector<int> edge_uses(g.edges.size(), 0);
    for (const auto& c : cycles) {
      REQUIRE(c.length() >= 3);
      CHECK(c.length() == incidence_count(t, c.f));
      // starts at the smallest chamber of the star
      CHECK(c.chambers[0] ==
            *std::min_element(c.chambers.begin(), c.chambers.end()));
      std::set<int> star;
      for (int i = 0; i < c.length(); ++i) {
        const auto& e = g.edges[c.edges[i]];
        CHECK(contains_cell(e.cell, c.f));
        int a = c.chambers[i];
        int b = c.chambers[(i + 1) % c.length()];
        CHECK(((e.s == a && e.t == b) || (e.s == b && e.t == a)));
        CHECK(contains_cell(t.chambers[a], c.f));
        star.insert(a);
        ++edge_uses[c.edges[i]];
      }
      CHECK(static_cast<int>(star.size()) == c.length());
    }
    // every dual edge lies in exactly d f-cycles: its facet has d vertices,
    // hence d sub-cells of size d-1
    for (int uses : edge_uses) CHECK(uses == t.dim);
  }
}

TEST_CASE("walk gains accumulate left to right") {
  Triangulation sb2 = simplex_boundary(2);
  DualGraph g = dual_graph(sb2);
  // locate the edges {0,1} and {1,2} of the K_4 dual
  int e01 = -1, e12 = -1;
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    if (g.edges[e].s == 0 && g.edges[e].t == 1) e01 = e;
    if (g.edges[e].s == 1 && g.edges[e].t == 2) e12 = e;
  }
  REQUIRE(e01 >= 0);
  REQUIRE(e12 >= 0);

  GainAssignment gains(static_cast<int>(g.edges.size()), 3);
  Permutation rho1({1, 0, 2});
  Permutation rho2({0, 2, 1});
  gains.set_gain(e01, rho1);
  gains.set_gain(e12, rho2);

  Permutation total = walk_gain(g, gains, {0, {e01, e12}});
  CHECK(total == rho1 * rho2);
  CHECK(total.images() == std::vector<int>{1, 2, 0});

  // acting on any chamber colouring step by step agrees with acting once
  for (const auto& sigma : all_permutations(3))
    CHECK((sigma * rho1) * rho2 == sigma * total);

  // the reverse walk carries the inverse
  Permutation back = walk_gain(g, gains, {2, {e12, e01}});
  CHECK(back == total.inverse());

  // out-and-back walks cancel
  Permutation there_and_back =
      walk_gain(g, gains, {0, {e01, e12, e12, e01}});
  CHECK(there_and_back.is_identity());

  CHECK(walk_gain(g, gains, {3, {}}).is_identity());
}

TEST_CASE("walk validation") {
  Triangulation sb2 = simplex_boundary(2);
  DualGraph g = dual_graph(sb2);
  GainAssignment gains(static_cast<int>(g.edges.size()), 3);
  CHECK(thrown_code([&] { walk_gain(g, gains, {9, {}}); }) ==
        ErrorCode::NotAWalk);
  CHECK(thrown_code([&] { walk_gain(g, gains, {0, {99}}); }) ==
        ErrorCode::NotAWalk);
  // edge {1,2} does not touch chamber 0... find it first
  int e12 = -1;
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
    if (g.edges[e].s == 1 && g.edges[e].t == 2) e12 = e;
  CHECK(thrown_code([&] { walk_gain(g, gains, {0, {e12}}); }) ==
        ErrorCode::NotAWalk);
  // open walks cannot be tested for balance
  int e01 = -1;
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
    if (g.edges[e].s == 0 && g.edges[e].t == 1) e01 = e;
  CHECK(thrown_code([&] { is_balanced(g, gains, {0, {e01}}); }) ==
        ErrorCode::NotClosed);
}

TEST_CASE("parallel dual edges can make an unbalanced two-cycle") {
  DualGraph g = two_chamber_multigraph();
  Walk cycle{0, {0, 1}};

  GainAssignment same(2, 3);
  Permutation rho({1, 2, 0});
  same.set_gain(0, rho);
  same.set_gain(1, rho.inverse());  // traversing backwards yields rho again
  CHECK(walk_gain(g, same, cycle) == rho * rho);
  CHECK_FALSE(is_balanced(g, same, cycle));

  GainAssignment cancelling(2, 3);
  cancelling.set_gain(0, rho);
  cancelling.set_gain(1, rho);
  CHECK(is_balanced(g, cancelling, cycle));
}

TEST_CASE("identity gains balance every f-cycle") {
  for (const auto& [name, t] : sphere_corpus()) {
    if (t.chamber_count() > 30) continue;
    CAPTURE(name);
    DualGraph g = dual_graph(t);
    GainAssignment gains(static_cast<int>(g.edges.size()), t.dim + 1);
    for (const auto& c : f_cycles(t, g))
      CHECK(is_balanced(g, gains, fcycle_walk(c)));
  }
}

TEST_CASE("balance verdicts survive rotation and reversal") {
  Triangulation octa = cross_polytope_boundary(2);
  DualGraph g = dual_graph(octa);
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 10; ++trial) {
    GainAssignment gains = random_gains(g, 4, rng);
    for (const auto& c : f_cycles(octa, g)) {
      Walk base = fcycle_walk(c);
      bool verdict = is_balanced(g, gains, base);
      for (int r = 1; r < c.length(); ++r) {
        Walk rotated;
        rotated.start = c.chambers[r];
        for (int i = 0; i < c.length(); ++i)
          rotated.edges.push_back(c.edges[(r + i) % c.length()]);
        CHECK(is_balanced(g, gains, rotated) == verdict);
      }
      Walk reversed{base.start,
                    {base.edges.rbegin(), base.edges.rend()}};
      CHECK(is_balanced(g, gains, reversed) == verdict);
    }
  }
}

TEST_CASE("propagation recovers a potential from its gains") {
  std::mt19937_64 rng(77);
  for (const auto& [name, t] : sphere_corpus()) {
    if (t.chamber_count() > 20) continue;
    CAPTURE(name);
    DualGraph g = dual_graph(t);
    auto [phi, gains] = potential_gains(g, t.dim + 1, rng);

    // seeding the root with its own potential value reproduces it exactly
    auto recovered = propagate(g, gains, 0, phi[0]);
    REQUIRE(recovered.size() == phi.size());
    for (std::size_t v = 0; v < phi.size(); ++v) CHECK(recovered[v] == phi[v]);

    // seeding with the identity shifts everything by one left factor
    auto shifted = propagate(g, gains, 0, Permutation::identity(t.dim + 1));
    for (std::size_t v = 0; v < phi.size(); ++v)
      CHECK(shifted[v] == phi[0].inverse() * phi[v]);

    // two roots differ by a constant left factor
    int other = t.chamber_count() - 1;
    auto from_other =
        propagate(g, gains, other, Permutation::identity(t.dim + 1));
    Permutation q = from_other[0] * shifted[0].inverse();
    for (std::size_t v = 0; v < phi.size(); ++v)
      CHECK(from_other[v] == q * shifted[v]);
  }
}

TEST_CASE("every root and every seed give the same assignment up to a factor") {
  std::mt19937_64 rng(909);
  for (const auto& [name, t] : sphere_corpus()) {
    if (t.chamber_count() > 50) continue;
    CAPTURE(name);
    DualGraph g = dual_graph(t);
    auto [phi, gains] = potential_gains(g, t.dim + 1, rng);
    auto base = propagate(g, gains, 0, Permutation::identity(t.dim + 1));
    for (int root = 0; root < t.chamber_count(); ++root) {
      for (const Permutation& seed :
           {Permutation::identity(t.dim + 1),
            random_permutation(t.dim + 1, rng)}) {
        auto got = propagate(g, gains, root, seed);
        REQUIRE(got.size() == base.size());
        CHECK(got[root] == seed);
        Permutation q = got[0] * base[0].inverse();
        for (std::size_t v = 0; v < got.size(); ++v)
          CHECK(got[v] == q * base[v]);
      }
    }
  }
}

TEST_CASE("propagation checks every edge relation") {
  for (const auto& [name, t] : sphere_corpus()) {
    if (t.chamber_count() > 20) continue;
    CAPTURE(name);
    DualGraph g = dual_graph(t);
    std::mt19937_64 rng(5);
    auto [phi, gains] = potential_gains(g, t.dim + 1, rng);
    auto result = propagate(g, gains, 0, phi[0]);
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
      CHECK(result[g.edges[e].t] ==
            result[g.edges[e].s] * gains.gain(e, true));
  }
}

TEST_CASE("unbalanced gains are rejected during propagation") {
  // facet-agreement gains on an odd-incidence sphere cannot propagate
  Triangulation sb2 = simplex_boundary(2);
  DualGraph g = dual_graph(sb2);
  GainAssignment gains = facet_agreement_gains(sb2, g);
  CHECK(thrown_code([&] {
          propagate(g, gains, 0, Permutation::identity(3));
        }) == ErrorCode::Unbalanced);
}

TEST_CASE("propagation validates its inputs") {
  DualGraph g = two_chamber_multigraph();
  GainAssignment gains(2, 3);
  CHECK(thrown_code([&] {
          propagate(g, gains, 5, Permutation::identity(3));
        }) == ErrorCode::BadParams);
  CHECK(thrown_code([&] {
          propagate(g, gains, 0, Permutation::identity(4));
        }) == ErrorCode::BadParams);

  DualGraph lonely;
  lonely.chamber_count = 3;
  lonely.edges.push_back({0, 1, {0}});
  lonely.rebuild_incidence();
  GainAssignment one(1, 3);
  CHECK(thrown_code([&] {
          propagate(lonely, one, 0, Permutation::identity(3));
        }) == ErrorCode::DisconnectedDual);
}

TEST_CASE("exact colouring on fixed graphs") {
  Graph k4 = complete_graph(4);
  CHECK_FALSE(exact_graph_colouring(k4, 3).has_value());
  auto four = exact_graph_colouring(k4, 4);
  REQUIRE(four.has_value());
  CHECK(four->colours == std::vector<int>{0, 1, 2, 3});

  Graph c5(5);
  for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  CHECK_FALSE(exact_graph_colouring(c5, 2).has_value());
  auto three = exact_graph_colouring(c5, 3);
  REQUIRE(three.has_value());
  CHECK(three->colours == std::vector<int>{0, 1, 0, 1, 2});
  CHECK(verify_proper(c5, *three));
}

TEST_CASE("exact colouring agrees with exhaustive enumeration") {
  std::mt19937_64 rng(424242);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) g.add_edge(u, v);
    for (int k = 2; k <= 4; ++k) {
      CAPTURE(trial);
      CAPTURE(k);
      // first proper colouring in lexicographic order, by brute force
      std::optional<std::vector<int>> expected;
      std::vector<int> assign(n, 0);
      long total = 1;
      for (int i = 0; i < n; ++i) total *= k;
      for (long code = 0; code < total && !expected; ++code) {
        long rest = code;
        for (int i = n - 1; i >= 0; --i) {
          assign[i] = static_cast<int>(rest % k);
          rest /= k;
        }
        if (verify_proper(g, {k, assign})) expected = assign;
      }
      auto got = exact_graph_colouring(g, k);
      CHECK(got.has_value() == expected.has_value());
      if (got && expected) CHECK(got->colours == *expected);
    }
  }
}

TEST_CASE("bipartiteness detection") {
  Graph even(6);
  for (int i = 0; i < 6; ++i) even.add_edge(i, (i + 1) % 6);
  CHECK(is_bipartite(even));

  Graph odd(5);
  for (int i = 0; i < 5; ++i) odd.add_edge(i, (i + 1) % 5);
  CHECK_FALSE(is_bipartite(odd));

  Graph mixed(7);  // triangle plus a separate path
  mixed.add_edge(0, 1);
  mixed.add_edge(1, 2);
  mixed.add_edge(0, 2);
  mixed.add_edge(4, 5);
  mixed.add_edge(5, 6);
  CHECK_FALSE(is_bipartite(mixed));

  CHECK(is_bipartite(Graph(3)));
  CHECK(is_bipartite(Graph(0)));
}

TEST_CASE("graph construction guards") {
  Graph g(3);
  CHECK(thrown_code([&] { g.add_edge(1, 1); }) == ErrorCode::BadParams);
  CHECK(thrown_code([&] { g.add_edge(0, 3); }) == ErrorCode::UnknownVertex);
  g.add_edge(2, 0);
  g.add_edge(0, 2);  // duplicate collapses
  CHECK(g.edge_count() == 1);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 2}});
}
