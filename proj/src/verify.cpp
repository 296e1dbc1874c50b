#include <algorithm>
#include <cmath>
#include <functional>

#include "pursuit/analysis.hpp"
#include "pursuit/cop_strategies.hpp"
#include "pursuit/errors.hpp"
#include "pursuit/registry.hpp"
#include "pursuit/robber_strategies.hpp"
#include "pursuit/solver.hpp"

namespace pursuit {

namespace {

using Json = nlohmann::ordered_json;

int ceil_div(int a, int b) { return (a + b - 1) / b; }

class Checks {
 public:
  void add(const std::string& name, bool pass, const std::string& detail = "") {
    list_.push_back({{"name", name}, {"status", pass ? "pass" : "fail"}, {"detail", detail}});
    ok_ = ok_ && pass;
  }
  void skip(const std::string& name, const std::string& detail) {
    list_.push_back({{"name", name}, {"status", "skip"}, {"detail", detail}});
  }
  // Runs `body`, turning library exceptions into a failed check.
  void guard(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const SizeError& e) {
      skip(name, std::string("over budget: ") + e.what());
    } catch (const std::exception& e) {
      add(name, false, e.what());
    }
  }
  bool ok() const noexcept { return ok_; }
  Json take() { return std::move(list_); }

 private:
  Json list_ = Json::array();
  bool ok_ = true;
};

std::vector<int> range_or(const std::vector<int>& given, int lo, int hi) {
  if (!given.empty()) return given;
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

void envelope(const std::vector<int>& values, int lo, int hi, const std::string& what) {
  for (int v : values) {
    if (v < lo || v > hi) {
      throw ArgumentError(what + "=" + std::to_string(v) + " is outside the envelope " + std::to_string(lo) + ".." +
                          std::to_string(hi));
    }
  }
}

std::string tag(const std::string& base, int d, int n) {
  return base + " H(" + std::to_string(d) + "," + std::to_string(n) + ")";
}

RunResult search_run(const Graph& g, int ell, int k, CopStrategy& cops, const EventHook& hook = {},
                     int max_rounds = 0) {
  GameSpec spec{g, ell, k, Mode::Search, max_rounds, 0};
  RunOptions opts;
  opts.on_event = hook;
  return run_search(spec, cops, opts);
}

RunResult capture_run(const Graph& g, int ell, int k, CopStrategy& cops, RobberStrategy& robber,
                      const EventHook& hook = {}, int max_rounds = 0) {
  GameSpec spec{g, ell, k, Mode::Capture, max_rounds, 0};
  RunOptions opts;
  opts.on_event = hook;
  return run_capture(spec, cops, robber, opts);
}

std::string outcome_detail(const RunResult& r) {
  return to_string(r.outcome) + " after " + std::to_string(r.rounds_used) + " rounds";
}

// Remembers where the wrapped robber really is.
class Tracked final : public RobberStrategy {
 public:
  explicit Tracked(std::unique_ptr<RobberStrategy> inner) : inner_(std::move(inner)) {}
  std::string name() const override { return inner_->name(); }
  Vertex place(const Graph& g, int ell, const std::vector<Vertex>& cops, const Lookahead& la) override {
    return at = inner_->place(g, ell, cops, la);
  }
  Vertex next_move(const RobberView& view) override { return at = inner_->next_move(view); }
  Vertex at = 0;

 private:
  std::unique_ptr<RobberStrategy> inner_;
};

std::unique_ptr<RobberStrategy> battery_robber(const std::string& name, const Graph& g, int ell, int k,
                                               std::uint64_t seed) {
  return make_robber_strategy(name, g, ell, k, seed);
}

// ---- per-theorem suites ----

void obs31(Checks& c, const VerifyParams& p) {
  const auto ns = range_or(p.n, 2, 6);
  envelope(ns, 1, 8, "n");
  for (int n : ns) {
    const Graph g = build_clique(n);
    const int want = ceil_div(n, 2);
    c.guard(tag("search number", 1, n), [&] {
      const int got = search_number(g, 0);
      c.add(tag("search number", 1, n), got == want, "solver " + std::to_string(got) + ", formula " + std::to_string(want));
    });
    c.guard(tag("clique-sweep", 1, n), [&] {
      auto s = make_cop_strategy("clique-sweep");
      const auto r = search_run(g, 0, want, *s);
      c.add(tag("clique-sweep wins", 1, n), r.outcome == Outcome::CopsWin, outcome_detail(r));
    });
    if (n <= 5) {
      c.guard(tag("capture number", 1, n), [&] {
        const int got = capture_number(g, 1);
        c.add(tag("capture number at visibility 1", 1, n), got == 1, "solver " + std::to_string(got));
      });
    }
  }
}

void thm32(Checks& c, const VerifyParams& p) {
  const auto ns = range_or(p.n, 3, 7);
  envelope(ns, 3, 30, "n");
  for (int n : ns) {
    c.guard(tag("rook-search", 2, n), [&] {
      const Graph g = build_hamming(2, n);
      const int k = ceil_div(n + 1, 3);
      RookSearch s;
      c.add(tag("rook-search cop count", 2, n), s.required_cops(g, 1) == k, std::to_string(s.required_cops(g, 1)));
      int mismatches = 0;
      const auto r = search_run(g, 1, k, s, [&](const EngineState&, const TraceEvent& e) {
        if ((e.kind != EventKind::Place && e.kind != EventKind::Move) || e.dirty.empty()) return;
        if (s.normalization().clean_rectangle(g) != g.all_vertices() - spread_ignoring_cops(g, e.dirty)) ++mismatches;
      });
      c.add(tag("rook-search wins", 2, n), r.outcome == Outcome::CopsWin, outcome_detail(r));
      c.add(tag("clean set matches the normalized rectangle", 2, n), mismatches == 0,
            std::to_string(mismatches) + " mismatched rounds");
    });
    if (n == 3) {
      c.guard("solver search number H(2,3)", [&] {
        const int got = search_number(build_hamming(2, 3), 1);
        c.add("solver search number H(2,3)", got == 2, std::to_string(got));
      });
    }
  }
}

void thm33(Checks& c, const VerifyParams& p) {
  const auto ns = range_or(p.n, 3, 5);
  envelope(ns, 3, 10, "n");
  const int rounds = p.runs > 0 ? p.runs : 1000;
  for (int n : ns) {
    const Graph g = build_hamming(2, n);
    const int k = ceil_div(n + 1, 2);
    c.guard(tag("rook-capture", 2, n), [&] {
      RookCapture probe;
      c.add(tag("rook-capture cop count", 2, n), probe.required_cops(g, 1) == k,
            std::to_string(probe.required_cops(g, 1)));
      std::vector<std::string> robbers{"evasion-line", "greedy-distance", "uniform-random"};
      if (n == 3) robbers.push_back("solver-optimal");
      for (const auto& name : robbers) {
        RookCapture s;
        auto robber = battery_robber(name, g, 1, k, p.seed);
        const auto r = capture_run(g, 1, k, s, *robber);
        c.add(tag("rook-capture catches " + name, 2, n), r.outcome == Outcome::Capture, outcome_detail(r));
      }
    });
    if (n == 3) {
      c.guard("solver capture number H(2,3)", [&] {
        const int got = capture_number(g, 1);
        c.add("solver capture number H(2,3)", got == 2, std::to_string(got));
      });
    }
    if (n % 2 == 0) {
      c.guard(tag("evasion-line", 2, n), [&] {
        const int half = n / 2;
        auto trial = [&](CopStrategy& cops) {
          Tracked robber(make_evasion_line());
          int broken = 0;
          const auto r = capture_run(g, 1, half, cops, robber, [&](const EngineState& s, const TraceEvent& e) {
            if (e.kind == EventKind::Move && !s.captured && !EvasionLine::line_free(g, s.cops, robber.at)) ++broken;
          }, rounds);
          return std::pair{r, broken};
        };
        RookCapture weak(false);
        const auto [r, broken] = trial(weak);
        c.add(tag("evasion-line survives rook-capture-noguard", 2, n), r.outcome == Outcome::Timeout && broken == 0,
              outcome_detail(r) + ", invariant breaks " + std::to_string(broken));
        int lost = 0;
        for (int i = 0; i < 50; ++i) {
          RandomCops cops(p.seed + static_cast<std::uint64_t>(i));
          const auto [rr, bb] = trial(cops);
          if (rr.outcome != Outcome::Timeout || bb != 0) ++lost;
        }
        c.add(tag("evasion-line survives random cops", 2, n), lost == 0, std::to_string(lost) + " of 50 runs lost");
      });
    }
  }
}

void thm34(Checks& c, const VerifyParams& p) {
  const auto ns = range_or(p.n, 3, 6);
  envelope(ns, 2, 10, "n");
  for (int n : ns) {
    c.guard(tag("secure-set", 2, n), [&] {
      const Graph g = build_hamming(2, n);
      const int k = ceil_div(n * n + n, 4);
      SecureSetSweep s;
      c.add(tag("secure-set cop count", 2, n), s.required_cops(g, 0) == k, std::to_string(s.required_cops(g, 0)));
      int leaks = 0;
      const auto r = search_run(g, 0, k, s, [&](const EngineState&, const TraceEvent& e) {
        if (e.kind != EventKind::Move) return;
        if (e.dirty != g.all_vertices() - s.discovered() || s.secure_set(g).intersects(e.dirty)) ++leaks;
      });
      c.add(tag("secure-set wins", 2, n), r.outcome == Outcome::CopsWin, outcome_detail(r));
      const auto m = audit_monotonicity(r.trace);
      c.add(tag("secure-set trace is weakly monotone", 2, n), m != Monotonicity::None, to_string(m));
      c.add(tag("dirty set equals the undiscovered set", 2, n), leaks == 0, std::to_string(leaks) + " rounds differ");
    });
    if (n == 3) {
      c.guard("solver H(2,3) visibility 0 with 2 cops", [&] {
        const auto v = solve_search(build_hamming(2, 3), 0, 2);
        c.add("solver H(2,3) visibility 0 with 2 cops", v.verdict == Verdict::RobberWins, to_string(v.verdict));
      });
    }
  }
}

// Inner clean vertices, lifted, must be clean in the outer game at every
// half-move boundary.
template <typename Lift, typename Project>
EventHook fiber_hook(const Graph& outer, const Lift& lift, Project project, int& breaks) {
  return [&outer, &lift, project, &breaks](const EngineState&, const TraceEvent& e) {
    const InnerGame& inner = lift.inner();
    VertexSet inner_dirty = inner.state().dirty;
    if (e.kind == EventKind::Recontaminate) {
      inner_dirty = spread(inner.spec().graph, inner_dirty, inner.state().cops, inner.spec().ell);
    }
    for (Vertex v = 0; v < outer.vertex_count(); ++v) {
      if (e.dirty.contains(v) && !inner_dirty.contains(project(v))) {
        ++breaks;
        return;
      }
    }
  };
}

void prop41(Checks& c, const VerifyParams& p) {
  const auto ns = range_or(p.n, 3, 6);
  envelope(ns, 3, 8, "n");
  for (int n : ns) {
    c.guard(tag("lift-dim:rook-search", 3, n), [&] {
      const Graph g = build_hamming(3, n);
      const int k = ceil_div(n + 1, 3);
      LiftDimension s(make_rook_search());
      c.add(tag("lift-dim:rook-search cop count", 3, n), s.required_cops(g, 2) == k,
            std::to_string(s.required_cops(g, 2)));
      int breaks = 0;
      const auto nn = static_cast<Vertex>(n);
      const auto r = search_run(g, 2, k, s, fiber_hook(g, s, [nn](Vertex v) { return v / nn; }, breaks));
      c.add(tag("lift-dim:rook-search wins at visibility 2", 3, n), r.outcome == Outcome::CopsWin, outcome_detail(r));
      c.add(tag("clean inner vertices have clean fibers", 3, n), breaks == 0, std::to_string(breaks) + " breaks");
    });
  }
  for (int n : ns) {
    c.guard(tag("lift-dim:clique-sweep", 2, n), [&] {
      const Graph g = build_hamming(2, n);
      const int k = ceil_div(n, 2);
      LiftDimension s(make_clique_sweep());
      int breaks = 0;
      const auto nn = static_cast<Vertex>(n);
      const auto r = search_run(g, 1, k, s, fiber_hook(g, s, [nn](Vertex v) { return v / nn; }, breaks));
      c.add(tag("lift-dim:clique-sweep wins at visibility 1", 2, n),
            r.outcome == Outcome::CopsWin && s.required_cops(g, 1) == k, outcome_detail(r));
      c.add(tag("clique fibers stay clean", 2, n), breaks == 0, std::to_string(breaks) + " breaks");
    });
  }
}

void cylinder(Checks& c, int n) {
  c.guard(tag("lift-cylinder:clique-sweep", 2, n), [&] {
    const Graph g = build_hamming(2, n);
    const int k = n * ceil_div(n, 2);
    LiftCylinder s(make_clique_sweep());
    int breaks = 0;
    const auto r = search_run(g, 0, k, s,
                              fiber_hook(g, s, [&g](Vertex v) { return LiftCylinder::project(g, v); }, breaks));
    c.add(tag("lift-cylinder:clique-sweep wins at visibility 0", 2, n),
          r.outcome == Outcome::CopsWin && s.required_cops(g, 0) == k, outcome_detail(r));
    c.add(tag("cylinder fibers of inner clean vertices stay clean", 2, n), breaks == 0,
          std::to_string(breaks) + " breaks");
  });
}

void prop42(Checks& c, const VerifyParams& p) {
  const auto ns = range_or(p.n, 3, 4);
  envelope(ns, 3, 5, "n");
  for (int n : ns) {
    c.guard(tag("lift-group:rook-search", 2, n), [&] {
      const Graph g = build_hamming(2, n);
      const int k = n * ceil_div(n + 1, 3);
      LiftGroup s(make_rook_search());
      c.add(tag("lift-group:rook-search cop count", 2, n), s.required_cops(g, 0) == k,
            std::to_string(s.required_cops(g, 0)));
      int breaks = 0;
      const auto r = search_run(g, 0, k, s, fiber_hook(g, s, [](Vertex v) { return v; }, breaks));
      c.add(tag("lift-group:rook-search wins at visibility 0", 2, n), r.outcome == Outcome::CopsWin,
            outcome_detail(r));
      c.add(tag("mirrored clean set stays clean", 2, n), breaks == 0, std::to_string(breaks) + " breaks");
    });
    cylinder(c, n);
  }
}

void cor43(Checks& c, const VerifyParams& p) {
  const auto ns = range_or(p.n, 3, 6);
  envelope(ns, 3, 12, "n");
  const std::vector<std::pair<int, int>> shapes{{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {4, 3}};
  for (auto [d, ell] : shapes) {
    for (int n : ns) {
      const std::string base = "d=" + std::to_string(d) + " ell=" + std::to_string(ell) + " n=" + std::to_string(n);
      c.guard("composed count " + base, [&, d = d, ell = ell] {
        std::string name = "rook-search";
        for (int i = 0; i < ell - 1; ++i) name = "lift-dim:" + name;
        for (int i = 0; i < d - 1 - ell; ++i) name = "lift-cylinder:" + name;
        auto s = make_cop_strategy(name);
        const Graph g = build_hamming(d, n);
        const int got = s->required_cops(g, ell);
        const double scale = std::pow(static_cast<double>(n), d - ell);
        const int want = static_cast<int>(std::pow(static_cast<double>(n), d - ell - 1)) * ceil_div(n + 1, 3);
        c.add("composed count " + base, got == want && got / scale <= 1.0 / 3 + 1.0 / n,
              name + " uses " + std::to_string(got) + ", ratio " + std::to_string(got / scale));
        if (g.vertex_count() <= 256) {
          const auto r = search_run(g, ell, got, *s);
          c.add("composed strategy wins " + base, r.outcome == Outcome::CopsWin, outcome_detail(r));
        }
      });
    }
  }
}

void lem44(Checks& c, const VerifyParams& p) {
  const auto ds = range_or(p.d, 1, 3);
  const auto ns = range_or(p.n, 2, 4);
  envelope(ds, 1, 4, "d");
  envelope(ns, 1, 5, "n");
  for (int d : ds) {
    for (int n : ns) {
      const auto r = check_slice_containment(d, n);
      c.add(tag("slice containment", d, n), r.violations == 0,
            std::to_string(r.checks) + " pairs" + (r.first.empty() ? "" : ", first: " + r.first));
    }
  }
}

void lem45(Checks& c, const VerifyParams& p) {
  const auto ds = range_or(p.d, 1, 3);
  const auto ns = range_or(p.n, 2, 4);
  envelope(ds, 1, 4, "d");
  envelope(ns, 2, 5, "n");
  for (int d : ds) {
    for (int n : ns) {
      const auto r = check_slice_sight(d, n);
      c.add(tag("cop sight over slices", d, n), r.violations == 0,
            std::to_string(r.checks) + " checks" + (r.first.empty() ? "" : ", first: " + r.first));
    }
  }
  const int runs = p.runs > 0 ? p.runs : 100;
  const Graph g = build_hamming(3, 3);
  int checks = 0;
  int violations = 0;
  std::string first;
  for (int i = 0; i < runs; ++i) {
    std::unique_ptr<CopStrategy> cops;
    if (i % 4 == 3) {
      cops = std::make_unique<GreedyCops>();
    } else {
      cops = std::make_unique<RandomCops>(p.seed + static_cast<std::uint64_t>(i));
    }
    const auto run = search_run(g, 2, 1, *cops, {}, 40);
    const auto r = check_goodness_propagation(g, run.trace, 1);
    checks += r.checks;
    violations += r.violations;
    if (first.empty()) first = r.first;
  }
  c.add("goodness propagation H(3,3)", violations == 0,
        std::to_string(runs) + " runs, " + std::to_string(checks) + " checks" + (first.empty() ? "" : ", first: " + first));
}

void thm48(Checks& c, const VerifyParams& p) {
  std::vector<std::pair<int, int>> shapes{{2, 4}, {2, 7}, {3, 5}, {3, 7}};
  if (!p.n.empty() || !p.d.empty()) {
    shapes.clear();
    for (int d : range_or(p.d, 2, 3)) {
      for (int n : range_or(p.n, 4, 7)) shapes.emplace_back(d, n);
    }
  }
  for (auto [d, n] : shapes) {
    envelope({d}, 2, 3, "d");
    envelope({n}, 3, 9, "n");
  }
  const int runs = p.runs > 0 ? p.runs : 3;
  for (auto [d, n] : shapes) {
    const int k = (n - 1) / (d + 1);
    if (k < 1) {
      c.skip(tag("goodness monitor", d, n), "no cops below the threshold");
      continue;
    }
    const Graph g = build_hamming(d, n);
    for (int i = 0; i <= runs; ++i) {
      std::unique_ptr<CopStrategy> cops;
      std::string who = "greedy";
      if (i < runs) {
        cops = std::make_unique<RandomCops>(p.seed + static_cast<std::uint64_t>(i));
        who = "random#" + std::to_string(i);
      } else {
        cops = std::make_unique<GreedyCops>();
      }
      const auto r = search_run(g, d - 1, k, *cops, {}, 200);
      const auto m = monitor_goodness(g, d - 1, r.trace, k);
      c.add(tag("goodness monitor " + who, d, n), m.violations == 0 && m.dirty_never_empty,
            std::to_string(m.checks) + " checks, " + std::to_string(m.violations) + " violations" +
                (m.first ? ", first at round " + std::to_string(m.first->round) + " " + m.first->slice : ""));
    }
  }
}

void lem53(Checks& c, const VerifyParams& p) {
  const auto ns = range_or(p.n, 3, 5);
  envelope(ns, 3, 8, "n");
  auto corner_ok = [](const Graph& g, int& leaks) {
    return [&g, &leaks](const EngineState&, const TraceEvent& e) {
      if (e.kind != EventKind::Move && e.kind != EventKind::Place) return;
      e.dirty.for_each([&](Vertex v) {
        const auto x = g.coords(v);
        if (std::find(x.begin(), x.end(), g.alphabet()) != x.end()) ++leaks;
      });
    };
  };
  for (int n : ns) {
    c.guard(tag("corner-guard:rook-search", 2, n + 1), [&] {
      const Graph g = build_hamming(2, n + 1);
      CornerGuard s(make_rook_search());
      const int k = ceil_div(n + 1, 3) + 1;
      int leaks = 0;
      const auto r = search_run(g, 1, k, s, corner_ok(g, leaks));
      c.add(tag("corner-guard:rook-search wins", 2, n + 1),
            r.outcome == Outcome::CopsWin && s.required_cops(g, 1) == k, outcome_detail(r));
      c.add(tag("guard keeps the outer layer clean", 2, n + 1), leaks == 0, std::to_string(leaks) + " dirty sightings");
    });
  }
  c.guard("corner-guard:lift-dim:rook-search H(3,4)", [&] {
    const Graph g = build_hamming(3, 4);
    auto s = make_cop_strategy("corner-guard:lift-dim:rook-search");
    const int k = s->required_cops(g, 2);
    int leaks = 0;
    const auto r = search_run(g, 2, k, *s, corner_ok(g, leaks));
    c.add("corner-guard:lift-dim:rook-search wins H(3,4)", r.outcome == Outcome::CopsWin && k == 3,
          outcome_detail(r) + " with " + std::to_string(k) + " cops");
    c.add("guard keeps the outer layer clean H(3,4)", leaks == 0, std::to_string(leaks) + " dirty sightings");
  });
}

void chase_suite(Checks& c, const VerifyParams& p, const std::string& cop_name) {
  const auto ds = range_or(p.d, 2, 3);
  const auto ns = range_or(p.n, 3, 5);
  envelope(ds, 1, 4, "d");
  envelope(ns, 2, 6, "n");
  const bool protect = cop_name == "protect-chase";
  for (int d : ds) {
    for (int n : ns) {
      const Graph g = build_hamming(d, n);
      const int bound = d * (d - 1) + 1;
      std::vector<std::string> robbers{"greedy-distance", "uniform-random", "stationary", "evasion-line", "dash-to-ones"};
      if (g.vertex_count() <= 27) robbers.push_back("solver-optimal");
      for (const auto& name : robbers) {
        c.guard(tag(cop_name + " vs " + name, d, n), [&] {
          auto cops = make_cop_strategy(cop_name);
          auto robber = battery_robber(name, g, d, d, p.seed);
          int unsafe = 0;
          int stalls = 0;
          std::optional<Vertex> robber_at;
          std::vector<int> progress;
          bool await_capture = false;
          const auto r = capture_run(g, d, d, *cops, *robber, [&](const EngineState& s, const TraceEvent& e) {
            if (e.robber) robber_at = e.robber;
            if (!protect || !robber_at) return;
            if (e.kind == EventKind::See && e.phase == Phase::RobberTurn) {
              await_capture = *robber_at == 0;
              if (progress.empty()) progress = ProtectChase::progress(g, s.cops, *robber_at);
            }
            if (e.kind == EventKind::Capture && e.phase == Phase::RobberTurn) await_capture = false;
            if (e.kind != EventKind::Move && e.kind != EventKind::Capture) return;
            if (e.phase != Phase::CopTurn || e.kind == EventKind::Capture) {
              if (e.kind == EventKind::Capture) await_capture = false;
              return;
            }
            if (await_capture && !s.captured) ++unsafe;
            await_capture = false;
            // Coordinates where the robber reads 1 are matched by the last cop.
            const auto rc = g.coords(*robber_at);
            const auto last = g.coords(s.cops[static_cast<std::size_t>(d - 1)]);
            for (int i = 0; i < d; ++i) {
              if (rc[static_cast<std::size_t>(i)] == 1 && last[static_cast<std::size_t>(i)] != 1) ++unsafe;
            }
            const auto now = ProtectChase::progress(g, s.cops, *robber_at);
            bool grew = false;
            for (std::size_t i = 0; i < now.size() && i < progress.size(); ++i) {
              if (now[i] < progress[i]) ++stalls;
              if (now[i] > progress[i]) grew = true;
            }
            if (!progress.empty() && !grew && !s.captured) ++stalls;
            progress = now;
          });
          const int moves = r.rounds_used - 1;
          c.add(tag(cop_name + " catches " + name, d, n), r.outcome == Outcome::Capture && moves <= bound,
                outcome_detail(r) + ", " + std::to_string(moves) + " cop moves, bound " + std::to_string(bound));
          if (protect) {
            c.add(tag("all-ones vertex protected vs " + name, d, n), unsafe == 0, std::to_string(unsafe) + " lapses");
            c.add(tag("progress measure grows vs " + name, d, n), stalls == 0, std::to_string(stalls) + " stalls");
          }
        });
      }
    }
  }
}

}  // namespace

std::vector<BoundRow> bound_table(int d, const std::vector<int>& ns) {
  if (d < 2) throw ArgumentError("bound_table needs d >= 2");
  std::vector<BoundRow> rows;
  for (int n : ns) {
    if (n < 3) throw ArgumentError("bound_table needs n >= 3");
    BoundRow row;
    row.d = d;
    row.n = n;
    row.lower = ceil_div(n, d + 1);
    row.upper = ceil_div(n + 1, 3);
    const Graph g = build_hamming(d, n);
    std::string name = "rook-search";
    for (int i = 0; i < d - 2; ++i) name = "lift-dim:" + name;
    auto s = make_cop_strategy(name);
    const int k = s->required_cops(g, d - 1);
    if (search_run(g, d - 1, k, *s).outcome == Outcome::CopsWin) row.achieved = k;
    if (g.vertex_count() <= 16) {
      try {
        row.exact = search_number(g, d - 1);
      } catch (const SizeError&) {
      }
    }
    rows.push_back(row);
  }
  return rows;
}

std::string bound_table_csv(const std::vector<BoundRow>& rows) {
  std::string out = "d,n,lower,exact,achieved,upper\n";
  auto cell = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
  for (const auto& r : rows) {
    out += std::to_string(r.d) + "," + std::to_string(r.n) + "," + std::to_string(r.lower) + "," + cell(r.exact) +
           "," + cell(r.achieved) + "," + std::to_string(r.upper) + "\n";
  }
  return out;
}

std::vector<std::string> theorem_ids() {
  return {"obs3.1", "thm3.2", "thm3.3", "thm3.4", "prop4.1", "prop4.2", "cor4.3",
          "lem4.4", "lem4.5", "thm4.8", "lem5.3", "lem5.4", "lem5.5"};
}

nlohmann::ordered_json verify_theorem(const std::string& id, const VerifyParams& params) {
  using Suite = void (*)(Checks&, const VerifyParams&);
  static const std::vector<std::pair<std::string, Suite>> suites{
      {"obs3.1", obs31},   {"thm3.2", thm32},   {"thm3.3", thm33}, {"thm3.4", thm34}, {"prop4.1", prop41},
      {"prop4.2", prop42}, {"cor4.3", cor43},   {"lem4.4", lem44}, {"lem4.5", lem45}, {"thm4.8", thm48},
      {"lem5.3", lem53},
      {"lem5.4", [](Checks& c, const VerifyParams& p) { chase_suite(c, p, "coordinate-chase"); }},
      {"lem5.5", [](Checks& c, const VerifyParams& p) { chase_suite(c, p, "protect-chase"); }},
  };
  const auto it = std::find_if(suites.begin(), suites.end(), [&](const auto& s) { return s.first == id; });
  if (it == suites.end()) throw ArgumentError("unknown theorem id: " + id);
  Checks checks;
  it->second(checks, params);
  Json report;
  report["theorem"] = id;
  report["params"] = {{"n", params.n}, {"d", params.d}, {"seed", params.seed}, {"runs", params.runs}};
  const bool ok = checks.ok();
  report["checks"] = checks.take();
  report["status"] = ok ? "pass" : "fail";
  return report;
}

}  // namespace pursuit
