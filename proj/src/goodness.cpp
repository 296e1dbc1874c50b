#include <algorithm>
#include <climits>
#include <sstream>

#include "pursuit/analysis.hpp"
#include "pursuit/errors.hpp"

namespace pursuit {

namespace {

Vertex slice_vertex(const Graph& g, const Slice& s) { return g.vertex_at(s.pattern()); }

void check_context(const Graph& g, const GoodnessContext& ctx, const Slice& s) {
  if (!g.is_hamming() || g.dimension() != ctx.d || g.alphabet() != ctx.n || s.d() != ctx.d || s.n() != ctx.n) {
    throw ArgumentError("slice " + s.to_string() + " is not a slice of H(" + std::to_string(ctx.d) + "," +
                        std::to_string(ctx.n) + ")");
  }
}

bool seen_by_any(const Graph& g, const std::vector<Vertex>& cops, const Slice& s, int ell) {
  return std::any_of(cops.begin(), cops.end(), [&](Vertex c) { return cop_sees_slice(g, c, s, ell); });
}

bool is_search_snapshot(const TraceEvent& e) { return e.kind == EventKind::Place || e.kind == EventKind::Move; }

}  // namespace

bool good_slice(const Graph& g, const GoodnessContext& ctx, const Slice& s) {
  check_context(g, ctx, s);
  const int m = s.dimension();
  if (m == 0) return ctx.dirty.contains(slice_vertex(g, s));
  for (int axis : s.free_axes()) {
    int count = 0;
    for (int v = 1; v <= ctx.n; ++v) count += good_slice(g, ctx, s.fix(axis, v)) ? 1 : 0;
    if (count < (m - 1) * ctx.k + 1) return false;
  }
  return true;
}

bool very_good_slice(const Graph& g, const GoodnessContext& ctx, const Slice& s) {
  check_context(g, ctx, s);
  const int m = s.dimension();
  if (m == 0) return ctx.dirty.contains(slice_vertex(g, s));
  for (int axis : s.free_axes()) {
    int count = 0;
    for (int v = 1; v <= ctx.n; ++v) count += very_good_slice(g, ctx, s.fix(axis, v)) ? 1 : 0;
    if (count < m * ctx.k + 1) return false;
  }
  return true;
}

GoodnessTable::GoodnessTable(const Graph& g, const GoodnessContext& ctx) {
  std::size_t total = 1;
  for (int i = 0; i < ctx.d; ++i) total *= static_cast<std::size_t>(ctx.n + 1);
  good_.assign(total, 0);
  very_good_.assign(total, 0);
  for (int m = 0; m <= ctx.d; ++m) {
    for (const Slice& s : all_slices(ctx.d, ctx.n, m)) {
      const std::size_t at = s.index();
      if (m == 0) {
        good_[at] = very_good_[at] = ctx.dirty.contains(slice_vertex(g, s)) ? 1 : 0;
        continue;
      }
      bool good = true;
      bool very = true;
      for (int axis : s.free_axes()) {
        int gc = 0;
        int vc = 0;
        for (int v = 1; v <= ctx.n; ++v) {
          const std::size_t sub = s.fix(axis, v).index();
          gc += good_[sub];
          vc += very_good_[sub];
        }
        good = good && gc >= (m - 1) * ctx.k + 1;
        very = very && vc >= m * ctx.k + 1;
      }
      good_[at] = good ? 1 : 0;
      very_good_[at] = very ? 1 : 0;
    }
  }
}

GoodnessReport monitor_goodness(const Graph& g, int ell, const Trace& trace, int k) {
  if (!g.is_hamming()) throw ArgumentError("the goodness monitor needs a Hamming graph");
  const int d = g.dimension();
  const int n = g.alphabet();
  if (ell != d - 1) throw UnsupportedMode("the goodness monitor needs visibility d-1");
  if (trace.mode != Mode::Search) throw UnsupportedMode("the goodness monitor reads search traces");

  std::vector<Slice> slices;
  for (int m = 0; m < d; ++m) {
    auto part = all_slices(d, n, m);
    slices.insert(slices.end(), part.begin(), part.end());
  }
  const Slice whole(std::vector<int>(static_cast<std::size_t>(d), Slice::kFree), n);
  std::size_t slice_ids = 1;
  for (int i = 0; i < d; ++i) slice_ids *= static_cast<std::size_t>(n + 1);
  std::vector<int> last_seen(slice_ids, INT_MIN / 2);

  GoodnessReport report;
  auto violate = [&](int round, const Slice& s, const std::string& why) {
    ++report.violations;
    if (!report.first) report.first = GoodnessViolation{round, s.to_string(), why};
  };
  for (const TraceEvent& e : trace.events) {
    if (!is_search_snapshot(e)) continue;
    ++report.snapshots;
    const int r = e.round;
    for (const Slice& s : slices) {
      if (seen_by_any(g, e.cops, s, ell)) last_seen[s.index()] = r;
    }
    const GoodnessTable table(g, GoodnessContext{d, n, k, e.dirty, e.cops});
    ++report.checks;
    if (!table.good(whole)) violate(r, whole, "the whole graph is not good");
    for (const Slice& s : slices) {
      if (last_seen[s.index()] >= r - d + s.dimension()) continue;
      ++report.checks;
      if (!table.good(s)) violate(r, s, "unseen for " + std::to_string(d - s.dimension()) + " rounds but not good");
    }
    if (e.dirty.empty()) report.dirty_never_empty = false;
  }
  return report;
}

SliceLemmaReport check_slice_containment(int d, int n) {
  const Graph g = build_hamming(d, n);
  const auto slices = all_slices(d, n);
  std::vector<VertexSet> members;
  for (const Slice& s : slices) members.push_back(s.members(g));
  SliceLemmaReport report;
  for (std::size_t i = 0; i < slices.size(); ++i) {
    for (std::size_t j = 0; j < slices.size(); ++j) {
      ++report.checks;
      const bool brute = members[j].is_subset_of(members[i]);
      if (slice_contains(slices[i], slices[j]) != brute) {
        if (report.violations++ == 0) {
          report.first = slices[i].to_string() + " vs " + slices[j].to_string();
        }
      }
    }
  }
  return report;
}

SliceLemmaReport check_slice_sight(int d, int n) {
  const Graph g = build_hamming(d, n);
  const int ell = d - 1;
  SliceLemmaReport report;
  auto fail = [&](const std::string& what) {
    if (report.violations++ == 0) report.first = what;
  };
  std::vector<VertexSet> balls;
  for (Vertex c = 0; c < g.vertex_count(); ++c) balls.push_back(g.ball(c, ell));
  auto sees = [&](Vertex c, const Slice& s) { return s.members(g).is_subset_of(balls[c]); };

  for (int m = 0; m < d; ++m) {
    for (const Slice& s : all_slices(d, n, m)) {
      for (Vertex c = 0; c < g.vertex_count(); ++c) {
        // Property (1): all of S, or exactly one sub-slice per parallel class.
        if (m >= 1) {
          ++report.checks;
          if (!sees(c, s)) {
            for (const auto& cls : parallel_classes(s)) {
              const auto seen = std::count_if(cls.begin(), cls.end(), [&](const Slice& t) { return sees(c, t); });
              if (seen != 1) fail("cop at vertex " + std::to_string(c) + " sees " + std::to_string(seen) +
                                  " slices of one class in " + s.to_string());
            }
          }
        }
      }
      // Property (2): two distinct (m+1)-slices through S meet exactly in S.
      std::vector<Slice> parents;
      for (int axis = 0; axis < d; ++axis) {
        if (s.pattern()[static_cast<std::size_t>(axis)] == Slice::kFree) continue;
        auto p = s.pattern();
        p[static_cast<std::size_t>(axis)] = Slice::kFree;
        parents.emplace_back(p, n);
      }
      for (std::size_t i = 0; i < parents.size(); ++i) {
        for (std::size_t j = i + 1; j < parents.size(); ++j) {
          ++report.checks;
          if ((parents[i].members(g) & parents[j].members(g)) != s.members(g)) {
            fail(parents[i].to_string() + " and " + parents[j].to_string() + " do not meet in " + s.to_string());
          }
          for (Vertex c = 0; c < g.vertex_count(); ++c) {
            ++report.checks;
            if (!sees(c, parents[i]) && !sees(c, parents[j]) && sees(c, s)) {
              fail("cop at vertex " + std::to_string(c) + " sees " + s.to_string() + " but neither parent");
            }
          }
        }
      }
    }
  }
  return report;
}

SliceLemmaReport check_goodness_propagation(const Graph& g, const Trace& trace, int k) {
  if (!g.is_hamming()) throw ArgumentError("goodness propagation needs a Hamming graph");
  const int d = g.dimension();
  const int n = g.alphabet();
  const int ell = d - 1;
  std::vector<Slice> slices;
  for (int m = 0; m < d; ++m) {
    auto part = all_slices(d, n, m);
    slices.insert(slices.end(), part.begin(), part.end());
  }
  SliceLemmaReport report;
  auto fail = [&](int round, const std::string& what) {
    if (report.violations++ == 0) report.first = "round " + std::to_string(round) + ": " + what;
  };
  const auto& ev = trace.events;
  for (std::size_t i = 0; i + 1 < ev.size(); ++i) {
    const TraceEvent& a = ev[i];
    const TraceEvent& b = ev[i + 1];
    const GoodnessTable before(g, GoodnessContext{d, n, k, a.dirty, a.cops});
    const GoodnessTable after(g, GoodnessContext{d, n, k, b.dirty, b.cops});
    if (is_search_snapshot(a) && b.kind == EventKind::Recontaminate) {
      // Property (3): a good parent before recontamination makes an unseen S very good.
      for (const Slice& s : slices) {
        if (seen_by_any(g, a.cops, s, ell)) continue;
        bool parent_good = false;
        for (int axis = 0; axis < d && !parent_good; ++axis) {
          if (s.pattern()[static_cast<std::size_t>(axis)] == Slice::kFree) continue;
          auto p = s.pattern();
          p[static_cast<std::size_t>(axis)] = Slice::kFree;
          parent_good = before.good(Slice(p, n));
        }
        if (!parent_good) continue;
        ++report.checks;
        if (!after.very_good(s)) fail(a.round, s.to_string() + " has a good parent but is not very good");
      }
    } else if (a.kind == EventKind::Recontaminate && b.kind == EventKind::Move) {
      // Property (4): very good and not seen after the move keeps S good.
      for (const Slice& s : slices) {
        if (!before.very_good(s) || seen_by_any(g, b.cops, s, ell)) continue;
        ++report.checks;
        if (!after.good(s)) fail(b.round, s.to_string() + " was very good but is not good after the move");
      }
    }
  }
  return report;
}

}  // namespace pursuit
