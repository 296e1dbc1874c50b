#include "pursuit/slice.hpp"

#include <algorithm>

#include "pursuit/errors.hpp"

namespace pursuit {

Slice::Slice(std::vector<int> pattern, int n) : pattern_(std::move(pattern)), n_(n) {
  if (pattern_.empty()) throw ArgumentError("slice pattern must be non-empty");
  if (n < 1) throw ArgumentError("slice alphabet must be positive");
  for (int x : pattern_) {
    if (x != kFree && (x < 1 || x > n)) throw ArgumentError("slice entry out of range: " + std::to_string(x));
  }
}

int Slice::dimension() const noexcept {
  return static_cast<int>(std::count(pattern_.begin(), pattern_.end(), kFree));
}

std::vector<int> Slice::free_axes() const {
  std::vector<int> out;
  for (int i = 0; i < d(); ++i) {
    if (pattern_[static_cast<std::size_t>(i)] == kFree) out.push_back(i);
  }
  return out;
}

namespace {

void check_shape(const Graph& g, const Slice& s) {
  if (!g.is_hamming() || g.dimension() != s.d() || g.alphabet() != s.n()) {
    throw ArgumentError("slice " + s.to_string() + " does not belong to this graph");
  }
}

}  // namespace

bool Slice::has_member(const Graph& g, Vertex v) const {
  check_shape(g, *this);
  for (int i = 0; i < d(); ++i) {
    const int want = pattern_[static_cast<std::size_t>(i)];
    if (want != kFree && g.coord(v, i) != want) return false;
  }
  return true;
}

VertexSet Slice::members(const Graph& g) const {
  check_shape(g, *this);
  VertexSet out(g.vertex_count());
  const auto axes = free_axes();
  std::vector<int> c = pattern_;
  for (int a : axes) c[static_cast<std::size_t>(a)] = 1;
  while (true) {
    out.insert(g.vertex_at(c));
    std::size_t j = axes.size();
    while (j > 0) {
      auto& x = c[static_cast<std::size_t>(axes[j - 1])];
      if (x < n_) {
        ++x;
        break;
      }
      x = 1;
      --j;
    }
    if (j == 0) break;
  }
  return out;
}

std::size_t Slice::member_count() const {
  std::size_t out = 1;
  for (int i = 0; i < dimension(); ++i) out *= static_cast<std::size_t>(n_);
  return out;
}

std::size_t Slice::index() const noexcept {
  std::size_t out = 0;
  for (int x : pattern_) out = out * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(x);
  return out;
}

Slice Slice::from_index(std::size_t index, int d, int n) {
  std::vector<int> p(static_cast<std::size_t>(d));
  for (int i = d - 1; i >= 0; --i) {
    p[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::size_t>(n + 1));
    index /= static_cast<std::size_t>(n + 1);
  }
  return Slice(std::move(p), n);
}

Slice Slice::fix(int axis, int value) const {
  if (axis < 0 || axis >= d() || pattern_[static_cast<std::size_t>(axis)] != kFree) {
    throw ArgumentError("axis is not free in " + to_string());
  }
  auto p = pattern_;
  p[static_cast<std::size_t>(axis)] = value;
  return Slice(std::move(p), n_);
}

std::string Slice::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < pattern_.size(); ++i) {
    if (i > 0) out += ',';
    out += pattern_[i] == kFree ? std::string("*") : std::to_string(pattern_[i]);
  }
  return out + ")";
}

Slice Slice::from_wire(const nlohmann::json& j, int n) {
  if (!j.is_array()) throw ArgumentError("slice wire form must be an array");
  return Slice(j.get<std::vector<int>>(), n);
}

bool slice_contains(const Slice& s, const Slice& t) {
  if (s.d() != t.d() || s.n() != t.n()) throw ArgumentError("slices have different shapes");
  for (int i = 0; i < s.d(); ++i) {
    const int a = s.pattern()[static_cast<std::size_t>(i)];
    if (a != Slice::kFree && a != t.pattern()[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

bool slices_disjoint(const Slice& s, const Slice& t) {
  if (s.d() != t.d() || s.n() != t.n()) throw ArgumentError("slices have different shapes");
  for (int i = 0; i < s.d(); ++i) {
    const int a = s.pattern()[static_cast<std::size_t>(i)];
    const int b = t.pattern()[static_cast<std::size_t>(i)];
    if (a != Slice::kFree && b != Slice::kFree && a != b) return true;
  }
  return false;
}

std::vector<std::vector<Slice>> parallel_classes(const Slice& s) {
  if (s.dimension() == 0) throw ArgumentError("a 0-slice has no parallel classes");
  std::vector<std::vector<Slice>> out;
  for (int axis : s.free_axes()) {
    std::vector<Slice> cls;
    for (int v = 1; v <= s.n(); ++v) cls.push_back(s.fix(axis, v));
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<Slice> all_slices(int d, int n, int m) {
  std::vector<Slice> out;
  std::size_t total = 1;
  for (int i = 0; i < d; ++i) total *= static_cast<std::size_t>(n + 1);
  for (std::size_t idx = 0; idx < total; ++idx) {
    Slice s = Slice::from_index(idx, d, n);
    if (m < 0 || s.dimension() == m) out.push_back(std::move(s));
  }
  return out;
}

bool cop_sees_slice(const Graph& g, Vertex cop, const Slice& s, int ell) {
  check_shape(g, s);
  // A free axis can always be set to disagree with the cop when n >= 2.
  int farthest = 0;
  for (int i = 0; i < s.d(); ++i) {
    const int want = s.pattern()[static_cast<std::size_t>(i)];
    if (want == Slice::kFree) {
      if (s.n() >= 2) ++farthest;
    } else if (g.coord(cop, i) != want) {
      ++farthest;
    }
  }
  return farthest <= ell;
}

std::vector<std::vector<Slice>> seen_subslices(const Graph& g, Vertex cop, const Slice& s, int ell) {
  check_shape(g, s);
  if (ell != s.d() - 1) throw UnsupportedMode("seen_subslices is defined for ell = d-1 only");
  std::vector<std::vector<Slice>> out;
  for (auto& cls : parallel_classes(s)) {
    std::vector<Slice> seen;
    for (auto& t : cls) {
      if (cop_sees_slice(g, cop, t, ell)) seen.push_back(t);
    }
    out.push_back(std::move(seen));
  }
  return out;
}

}  // namespace pursuit
