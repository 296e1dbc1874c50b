#include <doctest.h>

#include <random>
#include <sstream>

#include "pursuit/analysis.hpp"
#include "pursuit/cop_strategies.hpp"
#include "pursuit/errors.hpp"

using namespace pursuit;

namespace {

// Goodness straight from the definition, by recursion over free axes.
bool good_oracle(const Graph& g, const VertexSet& dirty, int k, const Slice& s, bool very) {
  const int m = s.dimension();
  if (m == 0) {
    bool any = false;
    s.members(g).for_each([&](Vertex v) { any = dirty.contains(v); });
    return any;
  }
  const int need = (very ? m : m - 1) * k + 1;
  for (int axis : s.free_axes()) {
    int count = 0;
    for (int v = 1; v <= s.n(); ++v) count += good_oracle(g, dirty, k, s.fix(axis, v), very) ? 1 : 0;
    if (count < need) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("goodness table agrees with the definition") {
  std::mt19937 rng(17);
  for (int d = 1; d <= 3; ++d) {
    const int n = 4;
    const Graph g = build_hamming(d, n);
    for (int trial = 0; trial < 15; ++trial) {
      VertexSet dirty(g.vertex_count());
      const unsigned density = 2 + rng() % 6;
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (rng() % 8 < density) dirty.insert(v);
      }
      for (int k = 0; k <= 2; ++k) {
        const GoodnessContext ctx{d, n, k, dirty, {}};
        const GoodnessTable table(g, ctx);
        for (const Slice& s : all_slices(d, n)) {
          CHECK(table.good(s) == good_oracle(g, dirty, k, s, false));
          CHECK(table.very_good(s) == good_oracle(g, dirty, k, s, true));
          CHECK(good_slice(g, ctx, s) == table.good(s));
          CHECK(very_good_slice(g, ctx, s) == table.very_good(s));
        }
      }
    }
  }
}

TEST_CASE("goodness extremes") {
  const Graph g = build_hamming(3, 5);
  const Slice whole({0, 0, 0}, 5);
  const GoodnessContext all{3, 5, 1, g.all_vertices(), {}};
  CHECK(good_slice(g, all, whole));
  CHECK(very_good_slice(g, all, whole));
  const GoodnessContext none{3, 5, 1, VertexSet(g.vertex_count()), {}};
  CHECK_FALSE(good_slice(g, none, whole));
  // Very good implies good.
  std::mt19937 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    VertexSet dirty(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (rng() % 3 != 0) dirty.insert(v);
    }
    const GoodnessTable t(g, GoodnessContext{3, 5, 1, dirty, {}});
    for (const Slice& s : all_slices(3, 5)) {
      if (t.very_good(s)) CHECK(t.good(s));
    }
  }
}

TEST_CASE("monitor holds below the threshold") {
  for (auto [d, n] : {std::pair{2, 4}, std::pair{2, 7}, std::pair{3, 5}}) {
    const int k = (n - 1) / (d + 1);
    const Graph g = build_hamming(d, n);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      RandomCops cops(seed);
      const auto r = run_search(GameSpec{g, d - 1, k, Mode::Search, 100, 0}, cops);
      const auto m = monitor_goodness(g, d - 1, r.trace, k);
      CHECK(m.violations == 0);
      CHECK(m.dirty_never_empty);
      CHECK(m.checks > 0);
    }
  }
}

TEST_CASE("monitor flags a winning search") {
  const Graph g = build_hamming(2, 4);
  RookSearch s;
  const auto r = run_search(GameSpec{g, 1, 2, Mode::Search, 0, 0}, s);
  REQUIRE(r.outcome == Outcome::CopsWin);
  const auto m = monitor_goodness(g, 1, r.trace, 2);
  CHECK_FALSE(m.dirty_never_empty);
  CHECK(m.violations > 0);
}

TEST_CASE("monitor preconditions") {
  const Graph g = build_hamming(2, 4);
  CHECK_THROWS_AS(monitor_goodness(g, 0, Trace{}, 1), UnsupportedMode);
  CHECK_THROWS_AS(monitor_goodness(build_cycle(5), 1, Trace{}, 1), ArgumentError);
}

TEST_CASE("slice lemmas hold exhaustively on small cases") {
  for (int d = 1; d <= 3; ++d) {
    for (int n = 2; n <= 4; ++n) {
      const auto c = check_slice_containment(d, n);
      CHECK(c.violations == 0);
      CHECK(c.checks > 0);
      const auto s = check_slice_sight(d, n);
      CHECK(s.violations == 0);
    }
  }
}

TEST_CASE("propagation properties on instrumented runs") {
  const Graph g = build_hamming(3, 3);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    RandomCops cops(seed);
    const auto r = run_search(GameSpec{g, 2, 1, Mode::Search, 30, 0}, cops);
    const auto rep = check_goodness_propagation(g, r.trace, 1);
    CHECK(rep.violations == 0);
    CHECK(rep.checks > 0);
  }
}

TEST_CASE("bound table") {
  const auto rows = bound_table(2, {3, 4, 5, 6, 7, 8, 9});
  REQUIRE(rows.size() == 7);
  for (const auto& r : rows) {
    CHECK(r.lower == (r.n + 2) / 3);
    CHECK(r.upper == (r.n + 3) / 3);
    REQUIRE(r.achieved.has_value());
    CHECK(r.lower <= *r.achieved);
    CHECK(*r.achieved <= r.upper);
    if (r.exact) {
      CHECK(r.lower <= *r.exact);
      CHECK(*r.exact <= *r.achieved);
    }
  }
  CHECK(rows[0].exact == 2);
  CHECK(rows[1].exact == 2);
  CHECK_FALSE(rows[2].exact.has_value());
  const std::string csv = bound_table_csv(rows);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "d,n,lower,exact,achieved,upper");
  std::getline(in, line);
  CHECK(line == "2,3,1,2,2,2");
  std::getline(in, line);
  std::getline(in, line);
  CHECK(line == "2,5,2,,2,2");
  CHECK_THROWS_AS(bound_table(1, {3}), ArgumentError);
}

TEST_CASE("bound table in three dimensions") {
  const auto rows = bound_table(3, {3, 4});
  for (const auto& r : rows) {
    REQUIRE(r.achieved.has_value());
    CHECK(r.lower <= *r.achieved);
    CHECK(*r.achieved <= r.upper);
  }
}

TEST_CASE("theorem reports") {
  CHECK(theorem_ids().size() == 13);
  CHECK_THROWS_AS(verify_theorem("thm9.9"), ArgumentError);
  VerifyParams wide;
  wide.n = {40};
  CHECK_THROWS_AS(verify_theorem("thm3.2", wide), ArgumentError);
  VerifyParams small;
  small.n = {3, 4};
  const auto j = verify_theorem("thm3.2", small);
  CHECK(j["theorem"] == "thm3.2");
  CHECK(j["status"] == "pass");
  REQUIRE(j["checks"].is_array());
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("detail"));
    CHECK((c["status"] == "pass" || c["status"] == "skip"));
  }
}
