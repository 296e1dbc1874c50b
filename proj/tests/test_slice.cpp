#include <doctest.h>

#include "pursuit/errors.hpp"
#include "pursuit/slice.hpp"

using namespace pursuit;

TEST_CASE("slice counts") {
  for (int d = 1; d <= 3; ++d) {
    for (int n = 2; n <= 4; ++n) {
      const auto slices = all_slices(d, n);
      std::size_t total = 1;
      for (int i = 0; i < d; ++i) total *= static_cast<std::size_t>(n + 1);
      CHECK(slices.size() == total);
      const Graph g = build_hamming(d, n);
      for (const Slice& s : slices) {
        std::size_t members = 1;
        for (int i = 0; i < s.dimension(); ++i) members *= static_cast<std::size_t>(n);
        CHECK(s.member_count() == members);
        CHECK(s.members(g).count() == members);
        CHECK(Slice::from_index(s.index(), d, n) == s);
      }
    }
  }
}

TEST_CASE("parallel classes partition the slice") {
  const Graph g = build_hamming(3, 3);
  for (const Slice& s : all_slices(3, 3)) {
    if (s.dimension() == 0) continue;
    const auto classes = parallel_classes(s);
    CHECK(classes.size() == static_cast<std::size_t>(s.dimension()));
    for (const auto& cls : classes) {
      VertexSet cover(g.vertex_count());
      std::size_t total = 0;
      for (const Slice& t : cls) {
        CHECK(t.dimension() == s.dimension() - 1);
        CHECK(slice_contains(s, t));
        cover |= t.members(g);
        total += t.member_count();
      }
      CHECK(cover == s.members(g));
      CHECK(total == s.member_count());
      for (std::size_t i = 0; i < cls.size(); ++i) {
        for (std::size_t j = i + 1; j < cls.size(); ++j) CHECK(slices_disjoint(cls[i], cls[j]));
      }
    }
  }
}

TEST_CASE("cop sight of a slice matches the ball") {
  for (int d = 1; d <= 3; ++d) {
    const Graph g = build_hamming(d, 3);
    for (int ell = 0; ell <= d; ++ell) {
      for (const Slice& s : all_slices(d, 3)) {
        const VertexSet members = s.members(g);
        for (Vertex cop = 0; cop < g.vertex_count(); cop += 2) {
          CHECK(cop_sees_slice(g, cop, s, ell) == members.is_subset_of(g.ball(cop, ell)));
        }
      }
    }
  }
}

TEST_CASE("slice text form") {
  const Slice s({0, 4, 2}, 5);
  CHECK(s.to_string() == "(*,4,2)");
  CHECK(s.dimension() == 1);
  CHECK(s.free_axes() == std::vector<int>{0});
  CHECK(s.fix(0, 3).to_string() == "(3,4,2)");
  CHECK_THROWS_AS(s.fix(1, 1), ArgumentError);
  CHECK(Slice::from_wire(s.to_wire(), 5) == s);
}
