#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "pursuit/graph.hpp"

namespace pursuit {

// Axis-aligned sub-Hamming-graph of H(d,n). pattern[i] is a value in 1..n or
// kFree for a free coordinate.
class Slice {
 public:
  static constexpr int kFree = 0;

  Slice() = default;
  Slice(std::vector<int> pattern, int n);

  int d() const noexcept { return static_cast<int>(pattern_.size()); }
  int n() const noexcept { return n_; }
  int dimension() const noexcept;
  const std::vector<int>& pattern() const noexcept { return pattern_; }
  std::vector<int> free_axes() const;

  bool has_member(const Graph& g, Vertex v) const;
  VertexSet members(const Graph& g) const;
  std::size_t member_count() const;

  // Dense id in 0..(n+1)^d - 1, for memo tables.
  std::size_t index() const noexcept;
  static Slice from_index(std::size_t index, int d, int n);

  // Copy with free axis `axis` fixed to `value`.
  Slice fix(int axis, int value) const;

  std::string to_string() const;  // "(*,4,2)"
  nlohmann::json to_wire() const { return pattern_; }
  static Slice from_wire(const nlohmann::json& j, int n);

  bool operator==(const Slice&) const = default;

 private:
  std::vector<int> pattern_;
  int n_ = 0;
};

// T's members are a subset of S's, decided coordinate-wise.
bool slice_contains(const Slice& s, const Slice& t);
bool slices_disjoint(const Slice& s, const Slice& t);

// classes[j] fixes the j-th free axis of s to 1..n in turn.
std::vector<std::vector<Slice>> parallel_classes(const Slice& s);

// Every slice of H(d,n) of the given dimension (all dimensions when m < 0).
std::vector<Slice> all_slices(int d, int n, int m = -1);

// Farthest member of s from the cop is within ell.
bool cop_sees_slice(const Graph& g, Vertex cop, const Slice& s, int ell);

// The (m-1)-sub-slices of s fully seen by the cop, grouped by parallel class
// in the order of parallel_classes. Defined for ell = d-1 only.
std::vector<std::vector<Slice>> seen_subslices(const Graph& g, Vertex cop, const Slice& s, int ell);

}  // namespace pursuit
