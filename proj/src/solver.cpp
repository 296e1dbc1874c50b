#include "pursuit/solver.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>

#include "pursuit/errors.hpp"

namespace pursuit {

std::string to_string(Verdict v) { return v == Verdict::CopsWin ? "COPS_WIN" : "ROBBER_WINS"; }

std::uint64_t pack_cops(std::vector<Vertex> cops) {
  std::sort(cops.begin(), cops.end());
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < cops.size(); ++i) out |= std::uint64_t{cops[i]} << (8 * i);
  return out;
}

std::vector<Vertex> unpack_cops(std::uint64_t packed, int k) {
  std::vector<Vertex> out(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) out[static_cast<std::size_t>(i)] = static_cast<Vertex>((packed >> (8 * i)) & 0xffu);
  return out;
}

std::size_t state_space_estimate(const Graph& g, int k) {
  const std::size_t v = g.vertex_count();
  // multisets of size k times the subsets of V, saturating
  double configs = 1;
  for (int i = 1; i <= k; ++i) configs = configs * static_cast<double>(v + static_cast<std::size_t>(i) - 1) / i;
  const double total = configs * std::pow(2.0, static_cast<double>(std::min<std::size_t>(v, 62)));
  return total >= 1.8e19 ? std::numeric_limits<std::size_t>::max() : static_cast<std::size_t>(total);
}

namespace {

std::uint64_t pack_raw(const std::vector<Vertex>& cops) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < cops.size(); ++i) out |= std::uint64_t{cops[i]} << (8 * i);
  return out;
}

struct Board {
  Board(const Graph& graph, int ell_, int k_) : g(graph), ell(ell_), k(k_) {
    if (k < 1) throw ArgumentError("the solver needs at least one cop");
    if (g.vertex_count() == 0) throw ArgumentError("the solver needs a nonempty graph");
    if (g.vertex_count() > kSolverMaxVertices || k > kSolverMaxCops) {
      throw SizeError("solver handles at most " + std::to_string(kSolverMaxVertices) + " vertices and " +
                          std::to_string(kSolverMaxCops) + " cops; estimated state space " +
                          std::to_string(state_space_estimate(g, k)),
                      state_space_estimate(g, k));
    }
    const std::size_t n = g.vertex_count();
    full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    for (Vertex v = 0; v < n; ++v) {
      ball.push_back(g.ball(v, ell).mask64());
      closed.push_back(g.closed_neighborhood(v).mask64());
      std::vector<Vertex> opts{v};
      for (Vertex w : g.neighbors(v)) opts.push_back(w);
      options.push_back(std::move(opts));
    }
  }

  std::uint64_t seen(const std::vector<Vertex>& cops) const {
    std::uint64_t m = 0;
    for (Vertex c : cops) m |= ball[c];
    return m;
  }
  static std::uint64_t occupied(const std::vector<Vertex>& cops) {
    std::uint64_t m = 0;
    for (Vertex c : cops) m |= std::uint64_t{1} << c;
    return m;
  }
  std::uint64_t grow(std::uint64_t m) const {
    std::uint64_t out = m;
    while (m != 0) {
      out |= closed[static_cast<std::size_t>(std::countr_zero(m))];
      m &= m - 1;
    }
    return out;
  }

  // Joint moves from a sorted configuration, one per distinct resulting multiset.
  std::vector<std::vector<Vertex>> moves(const std::vector<Vertex>& cops) const {
    std::vector<std::vector<Vertex>> out;
    std::vector<std::uint64_t> keys;
    std::vector<Vertex> cur(cops.size());
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == cops.size()) {
        const auto key = pack_cops(cur);
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
          keys.push_back(key);
          out.push_back(cur);
        }
        return;
      }
      for (Vertex w : options[cops[i]]) {
        cur[i] = w;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
    return out;
  }

  std::vector<std::vector<Vertex>> placements() const {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> cur(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int i, Vertex from) -> void {
      if (i == k) {
        out.push_back(cur);
        return;
      }
      for (Vertex v = from; v < g.vertex_count(); ++v) {
        cur[static_cast<std::size_t>(i)] = v;
        self(self, i + 1, v);
      }
    };
    rec(rec, 0, 0);
    return out;
  }

  const Graph& g;
  int ell;
  int k;
  std::uint64_t full = 0;
  std::vector<std::uint64_t> ball;
  std::vector<std::uint64_t> closed;
  std::vector<std::vector<Vertex>> options;
};

// Vertex permutations of a Hamming graph used to canonicalize states.
struct Symmetry {
  Symmetry(const Graph& g, bool enabled) {
    if (!enabled || !g.is_hamming()) return;
    const int d = g.dimension();
    const int n = g.alphabet();
    double order = 1;
    for (int i = 2; i <= d; ++i) order *= i;
    for (int i = 2; i <= n; ++i) order *= std::pow(static_cast<double>(i), d);
    if (order > 50000) throw SizeError("symmetry group too large to enumerate", static_cast<std::size_t>(order));
    std::vector<int> axes(static_cast<std::size_t>(d));
    std::iota(axes.begin(), axes.end(), 0);
    std::vector<int> base(static_cast<std::size_t>(n));
    std::iota(base.begin(), base.end(), 1);
    std::vector<std::vector<int>> values;
    do {
      values.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    do {
      std::vector<std::size_t> choice(static_cast<std::size_t>(d), 0);
      while (true) {
        std::vector<Vertex> perm(g.vertex_count());
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
          const auto c = g.coords(v);
          std::vector<int> img(c.size());
          for (int i = 0; i < d; ++i) {
            const auto src = static_cast<std::size_t>(axes[static_cast<std::size_t>(i)]);
            img[static_cast<std::size_t>(i)] = values[choice[static_cast<std::size_t>(i)]][static_cast<std::size_t>(c[src] - 1)];
          }
          perm[v] = g.vertex_at(img);
        }
        perms.push_back(std::move(perm));
        std::size_t i = 0;
        while (i < choice.size() && ++choice[i] == values.size()) choice[i++] = 0;
        if (i == choice.size()) break;
      }
    } while (std::next_permutation(axes.begin(), axes.end()));
  }

  bool active() const noexcept { return !perms.empty(); }

  InfoKey canon(const std::vector<Vertex>& cops, std::uint64_t mask) const {
    InfoKey best{pack_cops(cops), mask};
    std::vector<Vertex> img(cops.size());
    for (const auto& p : perms) {
      for (std::size_t i = 0; i < cops.size(); ++i) img[i] = p[cops[i]];
      std::uint64_t m = 0;
      for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
        m |= std::uint64_t{1} << p[static_cast<std::size_t>(std::countr_zero(bits))];
      }
      const InfoKey key{pack_cops(img), m};
      if (key < best) best = key;
    }
    return best;
  }

  std::vector<std::vector<Vertex>> perms;
};

[[noreturn]] void over_budget(const Graph& g, int k, std::size_t explored) {
  throw SizeError("state budget exceeded after " + std::to_string(explored) + " states; estimated state space " +
                      std::to_string(state_space_estimate(g, k)),
                  state_space_estimate(g, k));
}

}  // namespace

GameValue solve_search(const Graph& g, int ell, int k, const SolverOptions& options) {
  const Board b(g, ell, k);
  const Symmetry sym(g, options.symmetry);
  GameValue out;
  out.mode = Mode::Search;
  out.ell = ell;
  out.k = k;

  // Node: cops and dirty set right after a cop turn.
  struct Node {
    InfoKey key;
    int parent;
    std::uint64_t move;  // aligned with the parent's sorted cops
  };
  std::vector<Node> nodes;
  std::unordered_map<InfoKey, int, InfoKeyHash> index;
  auto canon = [&](const std::vector<Vertex>& cops, std::uint64_t mask) {
    return sym.active() ? sym.canon(cops, mask) : InfoKey{pack_cops(cops), mask};
  };
  auto spread_of = [&](const Node& node) {
    const auto cops = unpack_cops(node.key.cops, k);
    return node.key.mask | (b.grow(node.key.mask) & ~b.seen(cops));
  };
  auto finish = [&](int last, const std::vector<Vertex>* final_move, const std::vector<Vertex>& placement) {
    out.verdict = Verdict::CopsWin;
    out.states_explored = nodes.size();
    if (sym.active()) return out;
    CopPolicy policy;
    policy.k = k;
    if (last < 0) {
      policy.placement = placement;
      out.witness = std::move(policy);
      return out;
    }
    policy.moves[InfoKey{nodes[static_cast<std::size_t>(last)].key.cops, spread_of(nodes[static_cast<std::size_t>(last)])}] =
        *final_move;
    int j = last;
    while (nodes[static_cast<std::size_t>(j)].parent >= 0) {
      const Node& p = nodes[static_cast<std::size_t>(nodes[static_cast<std::size_t>(j)].parent)];
      policy.moves[InfoKey{p.key.cops, spread_of(p)}] = unpack_cops(nodes[static_cast<std::size_t>(j)].move, k);
      j = nodes[static_cast<std::size_t>(j)].parent;
    }
    policy.placement = unpack_cops(nodes[static_cast<std::size_t>(j)].key.cops, k);
    out.witness = std::move(policy);
    return out;
  };

  for (const auto& c : b.placements()) {
    const std::uint64_t dirty = b.full & ~b.seen(c);
    if (dirty == 0) return finish(-1, nullptr, c);
    const InfoKey key = canon(c, dirty);
    if (index.emplace(key, static_cast<int>(nodes.size())).second) nodes.push_back({key, -1, 0});
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto cops = unpack_cops(nodes[i].key.cops, k);
    const std::uint64_t grown = spread_of(nodes[i]);
    for (const auto& m : b.moves(cops)) {
      const std::uint64_t dirty = grown & ~b.seen(m);
      if (dirty == 0) return finish(static_cast<int>(i), &m, {});
      const InfoKey key = canon(m, dirty);
      if (index.emplace(key, static_cast<int>(nodes.size())).second) {
        nodes.push_back({key, static_cast<int>(i), pack_raw(m)});
        if (nodes.size() > options.budget.states) over_budget(g, k, nodes.size());
      }
    }
  }
  out.verdict = Verdict::RobberWins;
  out.states_explored = nodes.size();
  return out;
}

int search_number(const Graph& g, int ell, const SolverOptions& options) {
  const int top = static_cast<int>(std::min<std::size_t>(g.vertex_count(), kSolverMaxCops));
  for (int k = 1; k <= top; ++k) {
    if (solve_search(g, ell, k, options).verdict == Verdict::CopsWin) return k;
  }
  throw SizeError("no winning cop count up to " + std::to_string(top), state_space_estimate(g, top));
}

std::optional<CaptureSolution::Label> CaptureSolution::label(const std::vector<Vertex>& cops,
                                                             const VertexSet& candidates) const {
  if (static_cast<int>(cops.size()) != k_ || candidates.universe() != universe_) return std::nullopt;
  const auto it = labels_.find(InfoKey{pack_cops(cops), candidates.mask64()});
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

// With ell at least the diameter every candidate set is a singleton, so the
// game is classical cops and robbers: label (cops, robber) pairs by rounds.
struct CaptureBuilder {
  static std::shared_ptr<const CaptureSolution> perfect(const Board& b, const SolverOptions& options) {
    const Graph& g = b.g;
    const int k = b.k;
    const std::size_t nv = g.vertex_count();
    const auto configs = b.placements();
    const std::size_t nc = configs.size();
    if (2 * nc * nv > options.budget.states) over_budget(g, k, 2 * nc * nv);
    std::unordered_map<std::uint64_t, int> config_index;
    for (std::size_t i = 0; i < nc; ++i) config_index.emplace(pack_cops(configs[i]), static_cast<int>(i));
    std::vector<std::vector<std::pair<int, std::uint64_t>>> succ(nc);
    std::vector<std::uint64_t> occ(nc);
    for (std::size_t i = 0; i < nc; ++i) {
      occ[i] = Board::occupied(configs[i]);
      for (const auto& m : b.moves(configs[i])) succ[i].emplace_back(config_index.at(pack_cops(m)), pack_raw(m));
    }
    // cop_depth[c * nv + r]: cops to move; robber_depth: robber to move.
    std::vector<int> cop_depth(nc * nv, -1);
    std::vector<int> robber_depth(nc * nv, -1);
    std::vector<int> choice(nc * nv, -1);
    for (int t = 1;; ++t) {
      bool changed = false;
      for (std::size_t c = 0; c < nc; ++c) {
        for (Vertex r = 0; r < nv; ++r) {
          const std::size_t at = c * nv + r;
          if (cop_depth[at] >= 0 || ((occ[c] >> r) & 1u)) continue;
          for (std::size_t j = 0; j < succ[c].size(); ++j) {
            const auto next = static_cast<std::size_t>(succ[c][j].first);
            const int rd = robber_depth[next * nv + r];
            if (((occ[next] >> r) & 1u) || (rd >= 0 && rd < t)) {
              cop_depth[at] = t;
              choice[at] = static_cast<int>(j);
              changed = true;
              break;
            }
          }
        }
      }
      for (std::size_t c = 0; c < nc; ++c) {
        for (Vertex r = 0; r < nv; ++r) {
          const std::size_t at = c * nv + r;
          if (robber_depth[at] >= 0 || ((occ[c] >> r) & 1u)) continue;
          bool caught = true;
          for (std::uint64_t opts = b.closed[r] & ~occ[c]; opts != 0; opts &= opts - 1) {
            if (cop_depth[c * nv + static_cast<std::size_t>(std::countr_zero(opts))] < 0) {
              caught = false;
              break;
            }
          }
          if (caught) {
            robber_depth[at] = t;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }

    auto sol = std::make_shared<CaptureSolution>();
    sol->k_ = k;
    sol->ell_ = b.ell;
    sol->states_ = 2 * nc * nv;
    sol->universe_ = nv;
    int best = -1;
    int best_depth = 0;
    for (std::size_t c = 0; c < nc; ++c) {
      int depth = 0;
      bool win = true;
      for (Vertex r = 0; r < nv && win; ++r) {
        if ((occ[c] >> r) & 1u) continue;
        const int d = cop_depth[c * nv + r];
        if (d < 0) win = false;
        depth = std::max(depth, d);
      }
      if (win && (best < 0 || depth < best_depth)) {
        best = static_cast<int>(c);
        best_depth = depth;
      }
    }
    sol->verdict_ = best >= 0 ? Verdict::CopsWin : Verdict::RobberWins;
    CopPolicy policy;
    policy.k = k;
    if (best >= 0) policy.placement = configs[static_cast<std::size_t>(best)];
    for (std::size_t c = 0; c < nc; ++c) {
      for (Vertex r = 0; r < nv; ++r) {
        if ((occ[c] >> r) & 1u) continue;
        const std::size_t at = c * nv + r;
        const InfoKey key{pack_cops(configs[c]), std::uint64_t{1} << r};
        sol->labels_.emplace(key, CaptureSolution::Label{cop_depth[at] >= 0, std::max(cop_depth[at], 0)});
        if (best >= 0 && choice[at] >= 0) {
          policy.moves[key] = unpack_cops(succ[c][static_cast<std::size_t>(choice[at])].second, k);
        }
      }
    }
    if (best >= 0) sol->witness_ = std::move(policy);
    return sol;
  }
};

std::shared_ptr<const CaptureSolution> analyze_capture(const Graph& g, int ell, int k, const SolverOptions& options) {
  const Board b(g, ell, k);
  if (!options.symmetry && ell >= g.diameter()) return CaptureBuilder::perfect(b, options);
  const Symmetry sym(g, options.symmetry);
  auto canon = [&](const std::vector<Vertex>& cops, std::uint64_t mask) {
    return sym.active() ? sym.canon(cops, mask) : InfoKey{pack_cops(cops), mask};
  };

  // Cop nodes: cops to move with the candidate set. Robber nodes: robber to
  // move after the cops' move. A cop move is a hyperedge to robber nodes.
  std::unordered_map<InfoKey, int, InfoKeyHash> cop_index;
  std::unordered_map<InfoKey, int, InfoKeyHash> robber_index;
  std::vector<InfoKey> cop_keys;
  std::vector<InfoKey> robber_keys;
  std::vector<int> hyper_owner;
  std::vector<std::uint64_t> hyper_move;
  std::vector<std::vector<int>> hyper_members;
  std::vector<std::vector<int>> robber_succ;
  std::deque<std::pair<bool, int>> work;  // (is_cop_node, id)

  auto budget_check = [&] {
    if (cop_keys.size() + robber_keys.size() > options.budget.states) {
      over_budget(g, k, cop_keys.size() + robber_keys.size());
    }
  };
  auto cop_node = [&](const std::vector<Vertex>& cops, std::uint64_t cand) {
    const InfoKey key = canon(cops, cand);
    auto [it, fresh] = cop_index.emplace(key, static_cast<int>(cop_keys.size()));
    if (fresh) {
      cop_keys.push_back(key);
      work.emplace_back(true, it->second);
      budget_check();
    }
    return it->second;
  };
  auto robber_node = [&](const std::vector<Vertex>& cops, std::uint64_t cand) {
    const InfoKey key = canon(cops, cand);
    auto [it, fresh] = robber_index.emplace(key, static_cast<int>(robber_keys.size()));
    if (fresh) {
      robber_keys.push_back(key);
      robber_succ.emplace_back();
      work.emplace_back(false, it->second);
      budget_check();
    }
    return it->second;
  };
  // Split a candidate set into visible singletons and one hidden remainder.
  auto split = [&](const std::vector<Vertex>& cops, std::uint64_t cand, auto&& make) {
    const std::uint64_t seen = b.seen(cops);
    std::vector<int> out;
    for (std::uint64_t vis = cand & seen & ~Board::occupied(cops); vis != 0; vis &= vis - 1) {
      out.push_back(make(cops, vis & (~vis + 1)));
    }
    if ((cand & ~seen) != 0) out.push_back(make(cops, cand & ~seen));
    return out;
  };

  std::vector<std::pair<std::vector<Vertex>, std::vector<int>>> roots;
  for (const auto& c : b.placements()) {
    roots.emplace_back(c, split(c, b.full, cop_node));
  }
  while (!work.empty()) {
    const auto [is_cop, id] = work.front();
    work.pop_front();
    if (is_cop) {
      const InfoKey key = cop_keys[static_cast<std::size_t>(id)];
      const auto cops = unpack_cops(key.cops, k);
      for (const auto& m : b.moves(cops)) {
        hyper_owner.push_back(id);
        hyper_move.push_back(pack_raw(m));
        hyper_members.push_back(split(m, key.mask, robber_node));
      }
    } else {
      const InfoKey key = robber_keys[static_cast<std::size_t>(id)];
      const auto cops = unpack_cops(key.cops, k);
      auto succ = split(cops, b.grow(key.mask) & ~Board::occupied(cops), cop_node);
      robber_succ[static_cast<std::size_t>(id)] = std::move(succ);
    }
  }

  // Backward attractor for the cops.
  const std::size_t nc = cop_keys.size();
  const std::size_t nr = robber_keys.size();
  std::vector<std::vector<int>> cop_preds(nc);
  std::vector<std::vector<int>> robber_in(nr);
  std::vector<int> robber_left(nr);
  std::vector<int> hyper_left(hyper_owner.size());
  for (std::size_t r = 0; r < nr; ++r) {
    robber_left[r] = static_cast<int>(robber_succ[r].size());
    for (int c : robber_succ[r]) cop_preds[static_cast<std::size_t>(c)].push_back(static_cast<int>(r));
  }
  for (std::size_t h = 0; h < hyper_owner.size(); ++h) {
    hyper_left[h] = static_cast<int>(hyper_members[h].size());
    for (int r : hyper_members[h]) robber_in[static_cast<std::size_t>(r)].push_back(static_cast<int>(h));
  }
  std::vector<int> cop_depth(nc, -1);
  std::vector<int> robber_depth(nr, -1);
  std::vector<int> cop_choice(nc, -1);
  std::deque<std::pair<bool, int>> queue;
  auto win_cop = [&](int h, int depth) {
    const auto c = static_cast<std::size_t>(hyper_owner[static_cast<std::size_t>(h)]);
    if (cop_depth[c] >= 0) return;
    cop_depth[c] = depth;
    cop_choice[c] = h;
    queue.emplace_back(true, static_cast<int>(c));
  };
  for (std::size_t r = 0; r < nr; ++r) {
    if (robber_left[r] == 0) {
      robber_depth[r] = 0;
      queue.emplace_back(false, static_cast<int>(r));
    }
  }
  for (std::size_t h = 0; h < hyper_owner.size(); ++h) {
    if (hyper_left[h] == 0) win_cop(static_cast<int>(h), 1);
  }
  while (!queue.empty()) {
    const auto [is_cop, id] = queue.front();
    queue.pop_front();
    if (is_cop) {
      const int depth = cop_depth[static_cast<std::size_t>(id)];
      for (int r : cop_preds[static_cast<std::size_t>(id)]) {
        if (--robber_left[static_cast<std::size_t>(r)] == 0) {
          robber_depth[static_cast<std::size_t>(r)] = depth;
          queue.emplace_back(false, r);
        }
      }
    } else {
      const int depth = robber_depth[static_cast<std::size_t>(id)];
      for (int h : robber_in[static_cast<std::size_t>(id)]) {
        if (--hyper_left[static_cast<std::size_t>(h)] == 0) win_cop(h, depth + 1);
      }
    }
  }

  auto sol = std::make_shared<CaptureSolution>();
  sol->k_ = k;
  sol->ell_ = ell;
  sol->states_ = nc + nr;
  sol->universe_ = g.vertex_count();
  int best_root = -1;
  int best_depth = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    int depth = 0;
    bool win = true;
    for (int c : roots[i].second) {
      if (cop_depth[static_cast<std::size_t>(c)] < 0) {
        win = false;
        break;
      }
      depth = std::max(depth, cop_depth[static_cast<std::size_t>(c)]);
    }
    if (win && (best_root < 0 || depth < best_depth)) {
      best_root = static_cast<int>(i);
      best_depth = depth;
    }
  }
  sol->verdict_ = best_root >= 0 ? Verdict::CopsWin : Verdict::RobberWins;
  if (sym.active()) {
    // Labels are keyed by canonical states; expose them only unreduced.
    return sol;
  }
  for (std::size_t c = 0; c < nc; ++c) {
    sol->labels_.emplace(cop_keys[c], CaptureSolution::Label{cop_depth[c] >= 0, std::max(cop_depth[c], 0)});
  }
  if (best_root >= 0) {
    CopPolicy policy;
    policy.k = k;
    policy.placement = roots[static_cast<std::size_t>(best_root)].first;
    for (std::size_t c = 0; c < nc; ++c) {
      if (cop_choice[c] >= 0) {
        policy.moves[cop_keys[c]] = unpack_cops(hyper_move[static_cast<std::size_t>(cop_choice[c])], k);
      }
    }
    sol->witness_ = std::move(policy);
  }
  return sol;
}

GameValue solve_capture(const Graph& g, int ell, int k, const SolverOptions& options) {
  const auto sol = analyze_capture(g, ell, k, options);
  GameValue out;
  out.mode = Mode::Capture;
  out.ell = ell;
  out.k = k;
  out.verdict = sol->verdict();
  out.states_explored = sol->states();
  out.witness = sol->witness();
  return out;
}

int capture_number(const Graph& g, int ell, const SolverOptions& options) {
  const int top = static_cast<int>(std::min<std::size_t>(g.vertex_count(), kSolverMaxCops));
  for (int k = 1; k <= top; ++k) {
    if (analyze_capture(g, ell, k, options)->verdict() == Verdict::CopsWin) return k;
  }
  throw SizeError("no winning cop count up to " + std::to_string(top), state_space_estimate(g, top));
}

int perfect_info_cop_number(const Graph& g, const SolverOptions& options) {
  return capture_number(g, g.diameter(), options);
}

nlohmann::json to_json(const GameValue& value, const Graph& g) {
  nlohmann::ordered_json j;
  j["graph"] = to_json(g);
  j["ell"] = value.ell;
  j["k"] = value.k;
  j["mode"] = to_string(value.mode);
  j["verdict"] = to_string(value.verdict);
  j["states_explored"] = value.states_explored;
  if (value.witness) {
    nlohmann::ordered_json w;
    w["placement"] = value.witness->placement;
    w["moves"] = nlohmann::ordered_json::array();
    for (const auto& [key, move] : value.witness->moves) {
      w["moves"].push_back({{"cops", unpack_cops(key.cops, value.k)},
                            {"knowledge", VertexSet::from_mask64(g.vertex_count(), key.mask).to_hex()},
                            {"move", move}});
    }
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return nlohmann::json::parse(j.dump());
}

std::vector<Vertex> PolicyCops::do_place(const Graph&, int, int) { return policy_.placement; }

std::vector<Vertex> PolicyCops::do_moves(const Observation& obs) {
  const std::vector<Vertex> cops(obs.state.cops.begin(), obs.state.cops.begin() + active_cops());
  std::vector<std::size_t> order(cops.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cops[a] < cops[b]; });
  const auto it = policy_.moves.find(InfoKey{pack_cops(cops), obs.state.dirty.mask64()});
  if (it == policy_.moves.end()) throw StrategyFailure("solver policy has no move for this state");
  std::vector<Vertex> out(cops.size());
  for (std::size_t i = 0; i < order.size(); ++i) out[order[i]] = it->second[i];
  return out;
}

}  // namespace pursuit
