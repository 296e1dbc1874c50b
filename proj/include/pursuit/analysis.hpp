#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pursuit/engine.hpp"
#include "pursuit/slice.hpp"

namespace pursuit {

// Goodness thresholds for k cops: an m-slice is good with at least
// (m-1)k+1 good (m-1)-slices in every parallel class, very good with at
// least mk+1 very good ones; 0-slices are both iff dirty.
struct GoodnessContext {
  int d = 0;
  int n = 0;
  int k = 0;
  VertexSet dirty;
  std::vector<Vertex> cops;
};

// Plain recursion over the definitions.
bool good_slice(const Graph& g, const GoodnessContext& ctx, const Slice& s);
bool very_good_slice(const Graph& g, const GoodnessContext& ctx, const Slice& s);

// Every slice of H(d,n) evaluated once, bottom-up by dimension.
class GoodnessTable {
 public:
  GoodnessTable(const Graph& g, const GoodnessContext& ctx);
  bool good(const Slice& s) const { return good_[s.index()]; }
  bool very_good(const Slice& s) const { return very_good_[s.index()]; }

 private:
  std::vector<char> good_;
  std::vector<char> very_good_;
};

struct GoodnessViolation {
  int round = 0;
  std::string slice;
  std::string detail;
};

struct GoodnessReport {
  int snapshots = 0;
  int checks = 0;
  int violations = 0;
  bool dirty_never_empty = true;
  std::optional<GoodnessViolation> first;
};

// Replays the after-cop-move snapshots of a (d-1)-visibility search trace
// and checks, before every recontamination, that H(d,n) is good and that
// every m-slice unseen during the last d-m rounds is good. A round sees what
// the cops see both before and after its move.
GoodnessReport monitor_goodness(const Graph& g, int ell, const Trace& trace, int k);

struct SliceLemmaReport {
  int checks = 0;
  int violations = 0;
  std::string first;
};

// Neighbourhood facts about slices and one cop, exhaustive over H(d,n).
SliceLemmaReport check_slice_containment(int d, int n);
SliceLemmaReport check_slice_sight(int d, int n);
// Goodness propagation across consecutive half-moves of a search trace.
SliceLemmaReport check_goodness_propagation(const Graph& g, const Trace& trace, int k);

struct BoundRow {
  int d = 0;
  int n = 0;
  int lower = 0;
  std::optional<int> exact;
  std::optional<int> achieved;
  int upper = 0;
};

std::vector<BoundRow> bound_table(int d, const std::vector<int>& ns);
std::string bound_table_csv(const std::vector<BoundRow>& rows);

struct VerifyParams {
  std::vector<int> n;  // empty selects the theorem's default range
  std::vector<int> d;
  std::uint64_t seed = 1;
  int runs = 0;  // 0 selects the default sample count
};

std::vector<std::string> theorem_ids();
// {"theorem", "params", "checks": [{"name", "status", "detail"}], "status"}
nlohmann::ordered_json verify_theorem(const std::string& id, const VerifyParams& params = {});

}  // namespace pursuit
