#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "flagcsm/csm.hpp"
#include "flagcsm/errors.hpp"
#include "flagcsm/grassmann.hpp"
#include "flagcsm/rules.hpp"
#include "oracles.hpp"

using namespace flagcsm;

namespace {

Partition L(const char* s) { return Partition::parse(s); }

std::map<Partition, MPoly> read_golden(const std::string& name, int n) {
  std::ifstream in(std::string(FLAGCSM_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::map<Partition, MPoly> out;
  std::string line;
  while (std::getline(in, line)) {
    auto colon = line.find(" : ");
    if (colon == std::string::npos) continue;
    out.emplace(Partition::parse(line.substr(0, colon)), MPoly::parse(n, line.substr(colon + 3)));
  }
  return out;
}

std::map<Partition, MPoly> as_polys(const std::map<Partition, Integer>& m, int n) {
  std::map<Partition, MPoly> out;
  for (const auto& [p, c] : m) out.emplace(p, MPoly(n, Rational(c)));
  return out;
}

std::map<Partition, MPoly> padded(const std::map<Partition, MPoly>& m, int k) {
  std::map<Partition, MPoly> out;
  for (const auto& [p, c] : m) out.emplace(p.padded(k), c);
  return out;
}

}  // namespace

TEST_CASE("boundary labels") {
  auto v = boundary_vertical_steps(L("4,2,2,0"), 4, 9);
  std::vector<int> vert;
  for (int s = 1; s <= 9; ++s)
    if (v[s]) vert.push_back(s);
  auto w = grassmannian_from_partition(L("4,2,2,0"), 4, 9);
  CHECK(vert == w.image({1, 2, 3, 4}));
}

TEST_CASE("rim hook additions") {
  auto hooks = rim_hook_additions(L("4,2,2,0"), 4, 9, 1, 5);
  const RimHook* h = nullptr;
  for (const auto& x : hooks)
    if (x.outer == L("4,4,3,0")) h = &x;
  REQUIRE(h != nullptr);
  CHECK(h->labels == std::vector<int>{4, 5, 6, 7});
  CHECK(h->tau == 4);
  CHECK(h->height == 1);
  CHECK(h->size == 3);
  CHECK(h->tail == std::pair<int, int>{3, 3});

  auto first = rim_hook_additions(L("0,0"), 2, 4, 1, 1);
  REQUIRE(first.size() == 1);
  CHECK(first[0].outer == L("1,0"));
  CHECK(first[0].tau == 2);
  CHECK(first[0].cells == std::vector<std::pair<int, int>>{{1, 1}});

  CHECK_THROWS_AS(rim_hook_additions(L("3"), 1, 3, 1, 1), ShapeOverflow);
}

TEST_CASE("rim hooks match the cell description and permutation labels in 3x3") {
  const int k = 3, n = 6;
  for (const auto& lam : partitions_in_rectangle(k, n)) {
    const auto wl = grassmannian_from_partition(lam, k, n);
    for (const auto& h : rim_hook_additions(lam, k, n, 1, n)) {
      CHECK(h.outer.contains(lam));
      CHECK(h.size == h.outer.size() - lam.size());
      CHECK(static_cast<int>(h.cells.size()) == h.size);
      // Connected, no 2x2 block, height = rows - 1.
      std::set<std::pair<int, int>> cells(h.cells.begin(), h.cells.end());
      std::set<int> rows;
      for (auto [r, c] : h.cells) {
        rows.insert(r);
        CHECK_FALSE((cells.count({r + 1, c}) && cells.count({r, c + 1}) && cells.count({r + 1, c + 1})));
      }
      CHECK(h.height == static_cast<int>(rows.size()) - 1);
      CHECK(*rows.rbegin() - *rows.begin() + 1 == static_cast<int>(rows.size()));

      const auto wm = grassmannian_from_partition(h.outer, k, n);
      const auto rel = wl.inverse() * wm;
      CHECK(h.labels == wl.image(rel.nonfixed_set()));
      CHECK(h.height == rel.k_height(k));
    }
    // Every covering rim hook from the cell side is found.
    std::size_t expected = 0;
    for (const auto& mu : partitions_in_rectangle(k, n)) {
      if (mu == lam || !mu.contains(lam)) continue;
      auto heights = oracle::rim_hook_tableau_heights(mu, lam, mu.size() - lam.size());
      expected += heights.size();
    }
    CHECK(rim_hook_additions(lam, k, n, 1, n).size() == expected);
  }
}

TEST_CASE("lifting partition paths") {
  const int k = 2, n = 4;
  auto u = grassmannian_from_partition(L("0,0"), k, n);
  CHECK(lift_path({L("0,0")}, u, k).size() == 0);
  for (const auto& lam : partitions_in_rectangle(k, n))
    for (const auto& w : all_perms(n)) {
      if (grassmannian_partition(w, k) != lam) continue;
      for (const auto& h1 : rim_hook_additions(lam, k, n, 1, n)) {
        auto one = lift_path({lam, h1.outer}, w, k);
        REQUIRE(one.size() == 1);
        CHECK(one.edges[0].tau == h1.tau);
        CHECK(grassmannian_partition(one.end(), k) == h1.outer);
        for (const auto& h2 : rim_hook_additions(h1.outer, k, n, 1, n)) {
          auto two = lift_path({lam, h1.outer, h2.outer}, w, k);
          CHECK(two.labels() == std::vector<int>{h1.tau, h2.tau});
          CHECK(grassmannian_partition(two.end(), k) == h2.outer);
        }
      }
    }
  CHECK_THROWS_AS(lift_path({L("1,0")}, u, k), UsageError);
  CHECK_THROWS_AS(lift_path({L("0,0"), L("2,2")}, u, k), UsageError);
}

TEST_CASE("pushforward") {
  CohClass unit(Basis::Csm, true, 4);
  unit.add(Permutation::parse("3142"), MPoly(4, 1));
  auto p = pushforward(unit, 2);
  REQUIRE(p.size() == 1);
  CHECK(p.begin()->first == grassmannian_partition(Permutation::parse("3142"), 2));

  CohClass bad(Basis::Schubert, true, 4);
  bad.add(Permutation::parse("2134"), MPoly(4, 1));
  CHECK_THROWS_AS(pushforward(bad, 2), UsageError);
}

TEST_CASE("parabolic rules against the flag variety in 2x2 and 2x3") {
  for (int n : {4, 5}) {
    const int k = 2;
    for (const auto& lam : partitions_in_rectangle(k, n)) {
      const auto wl = grassmannian_from_partition(lam, k, n);
      for (int a = 0; a <= 2; ++a)
        for (int b = 0; a + b <= 2; ++b) {
          auto want = pushforward(pieri_hook_csm(wl, k, {a, b}, false), k);
          CHECK(as_polys(parabolic_pieri(lam, k, n, {a, b}), n) == padded(want, k));
          if (n == 4) {
            auto direct = pushforward(oracle_product(wl, hook_multiplier(n, k, {a, b}), Basis::Csm, false), k);
            CHECK(padded(direct, k) == padded(want, k));
          }
        }
      for (int r = 1; r <= 3; ++r) {
        auto want = pushforward(mn_schubert(wl, k, r, true), k);
        CHECK(padded(parabolic_mn(lam, k, n, r), k) == padded(want, k));
        if (n == 4) {
          auto direct = pushforward(oracle_product(wl, powersum_multiplier(n, k, r), Basis::Schubert, true), k);
          CHECK(padded(direct, k) == padded(want, k));
        }
      }
    }
  }
}

TEST_CASE("worked Grassmannian examples") {
  const Partition lam = L("3,2,0");
  auto e3 = parabolic_pieri(lam, 3, 7, {0, 2});
  auto h3 = parabolic_pieri(lam, 3, 7, {2, 0});
  auto s21 = parabolic_pieri(lam, 3, 7, {1, 1});
  CHECK(e3.at(L("4,4,4")) == 2);
  CHECK(h3.at(L("4,4,4")) == 4);
  CHECK(s21.at(L("4,4,4")) == 8);
  CHECK(padded(as_polys(e3, 7), 3) == padded(read_golden("grassmann_pieri_320_e3.txt", 7), 3));
  CHECK(padded(as_polys(h3, 7), 3) == padded(read_golden("grassmann_pieri_320_h3.txt", 7), 3));
  CHECK(padded(as_polys(s21, 7), 3) == padded(read_golden("grassmann_pieri_320_s21.txt", 7), 3));

  auto mn = parabolic_mn(L("4,2,2,0"), 4, 9, 3);
  CHECK(mn.at(L("4,4,2,0")) == MPoly::parse(9, "t5 + t6 + t7"));
  CHECK(mn.at(L("4,4,3,0")) == MPoly(9, -1));
  CHECK(padded(mn, 4) == padded(read_golden("grassmann_mn_4220_r3.txt", 9), 4));
}

TEST_CASE("partition graph export") {
  CHECK(partitions_in_rectangle(2, 4).size() == 6);
  const std::string g = export_partition_dot(2, 4);
  CHECK(g.rfind("digraph partitions_k2_n4 {", 0) == 0);
  std::size_t edges = 0, dashed = 0;
  for (std::size_t pos = 0; (pos = g.find("->", pos)) != std::string::npos; ++pos) ++edges;
  for (std::size_t pos = 0; (pos = g.find("dashed", pos)) != std::string::npos; ++pos) ++dashed;
  // Every pair lambda < mu with mu/lambda a rim hook, counted through cells.
  std::size_t want = 0, want_dashed = 0;
  for (const auto& a : partitions_in_rectangle(2, 4))
    for (const auto& b : partitions_in_rectangle(2, 4)) {
      if (a == b || !b.contains(a)) continue;
      const int s = b.size() - a.size();
      if (!oracle::rim_hook_tableau_heights(b, a, s).empty()) {
        ++want;
        want_dashed += s > 1;
      }
    }
  CHECK(edges == want);
  CHECK(dashed == want_dashed);
  // The one-row and one-column rectangles.
  CHECK(export_partition_dot(1, 4).find("\"0\" -> \"3\" [label=\"1\", style=dashed];") != std::string::npos);
  CHECK(export_partition_dot(3, 4).find("\"0,0,0\" -> \"1,1,1\" [label=\"1\", style=dashed];") != std::string::npos);
}
