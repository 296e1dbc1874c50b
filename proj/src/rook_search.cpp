#include "pursuit/cop_strategies.hpp"
#include "pursuit/errors.hpp"

namespace pursuit {

namespace {

int plane_side(const Graph& g, const char* who) {
  if (!g.is_hamming() || g.dimension() != 2) throw ArgumentError(std::string(who) + " plays on H(2,n)");
  return g.alphabet();
}

}  // namespace

VertexSet NormalizationState::clean_rectangle(const Graph& g) const {
  const int n = g.alphabet();
  if (a >= n || b >= n) return g.all_vertices();
  VertexSet out(g.vertex_count());
  for (int x = 1; x <= b; ++x) {
    for (int y = 1; y <= a; ++y) out.insert(cell(g, col[static_cast<std::size_t>(x - 1)], row[static_cast<std::size_t>(y - 1)]));
  }
  return out;
}

int RookSearch::required_cops(const Graph& g, int ell) const {
  const int n = plane_side(g, "rook-search");
  if (ell != 1) throw UnsupportedMode("rook-search is a 1-visibility strategy");
  return (n + 3) / 3;
}

std::vector<Vertex> RookSearch::do_place(const Graph& g, int, int k) {
  n_ = g.alphabet();
  k_ = k;
  step_ = Step::Opening;
  norm_ = NormalizationState{};
  for (int i = 1; i <= n_; ++i) {
    norm_.row.push_back(i);
    norm_.col.push_back(i);
  }
  norm_.a = norm_.b = k_;
  columns_.clear();
  std::vector<std::pair<int, int>> cops;
  for (int i = 1; i <= k_; ++i) cops.emplace_back(i, i);
  return to_actual(g, cops);
}

std::vector<Vertex> RookSearch::to_actual(const Graph& g, const std::vector<std::pair<int, int>>& normalized) const {
  std::vector<Vertex> out;
  for (auto [x, y] : normalized) {
    out.push_back(cell(g, norm_.col[static_cast<std::size_t>(x - 1)], norm_.row[static_cast<std::size_t>(y - 1)]));
  }
  return out;
}

void RookSearch::renormalize(const std::vector<std::pair<int, int>>& cops, const std::vector<bool>& clean_rows,
                             const std::vector<bool>& clean_cols, int a, int b) {
  auto reorder = [&](const std::vector<int>& perm, const std::vector<bool>& clean, bool by_row) {
    std::vector<int> order;
    std::vector<bool> used(static_cast<std::size_t>(n_) + 1, false);
    for (auto [x, y] : cops) {
      const int line = by_row ? y : x;
      if (used[static_cast<std::size_t>(line)]) throw StrategyFailure("rook-search cops share a line");
      used[static_cast<std::size_t>(line)] = true;
      order.push_back(line);
    }
    for (int pass = 0; pass < 2; ++pass) {
      for (int line = 1; line <= n_; ++line) {
        if (!used[static_cast<std::size_t>(line)] && clean[static_cast<std::size_t>(line)] == (pass == 0)) {
          used[static_cast<std::size_t>(line)] = true;
          order.push_back(line);
        }
      }
    }
    std::vector<int> out;
    for (int line : order) out.push_back(perm[static_cast<std::size_t>(line - 1)]);
    return out;
  };
  norm_.row = reorder(norm_.row, clean_rows, true);
  norm_.col = reorder(norm_.col, clean_cols, false);
  norm_.a = a;
  norm_.b = b;
}

std::vector<Vertex> RookSearch::do_moves(const Observation& obs) {
  const Graph& g = obs.graph;
  const int n = n_;
  const int k = k_;
  std::vector<std::pair<int, int>> next;
  std::vector<bool> rows(static_cast<std::size_t>(n) + 1, false);
  std::vector<bool> cols(static_cast<std::size_t>(n) + 1, false);
  auto mark = [](std::vector<bool>& v, int from, int to) {
    for (int i = from; i <= to; ++i) v[static_cast<std::size_t>(i)] = true;
  };
  auto count = [](const std::vector<bool>& v) {
    int c = 0;
    for (bool x : v) c += x ? 1 : 0;
    return c;
  };

  switch (step_) {
    case Step::Opening:
      if (n <= 2 * k) {
        // Columns k+1..n are swept in one move.
        for (int i = 1; i <= k; ++i) next.emplace_back(i <= n - k ? k + i : i, i);
        const auto out = to_actual(g, next);
        norm_.a = norm_.b = n;
        step_ = Step::Fold;
        return out;
      }
      for (int i = 1; i <= k; ++i) next.emplace_back(i, k + i);
      mark(rows, 1, 2 * k);
      mark(cols, 1, k);
      break;
    case Step::Spread: {
      if (norm_.a >= n || norm_.b >= n) return {obs.state.cops.begin(), obs.state.cops.begin() + k};
      const int c = norm_.b;
      const int l = n - 2 * k;
      for (int i = 1; i <= k; ++i) next.emplace_back(i <= l ? i : n - k + i, i <= l ? 2 * k + i : i);
      mark(rows, 1, k);
      mark(rows, 2 * k + 1, n);
      mark(cols, 1, c);
      mark(cols, n - k + l + 1, n);
      break;
    }
    case Step::Fold: {
      if (norm_.a >= n || norm_.b >= n) return {obs.state.cops.begin(), obs.state.cops.begin() + k};
      for (int i = 1; i <= k; ++i) next.emplace_back(i, n - k + i);
      mark(rows, 1, k);
      mark(rows, n - k + 1, n);
      mark(cols, 1, norm_.b);
      break;
    }
  }
  const auto out = to_actual(g, next);
  renormalize(next, rows, cols, count(rows), count(cols));
  if (step_ == Step::Fold || step_ == Step::Opening) columns_.push_back(norm_.b);
  step_ = step_ == Step::Spread ? Step::Fold : Step::Spread;
  return out;
}

}  // namespace pursuit
