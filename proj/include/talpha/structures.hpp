#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "talpha/graph.hpp"
#include "talpha/witness.hpp"

namespace talpha {

/// Limits on the exhaustive searches. A search that hits a limit reports
/// `unknown`, never absence.
struct Budget {
  std::optional<std::chrono::milliseconds> time;
  std::size_t max_holes = 1'000'000;
};

enum class SearchStatus { found, absent, unknown };
std::string to_string(SearchStatus s);

struct Detection {
  SearchStatus status = SearchStatus::absent;
  std::optional<Witness> witness;

  bool found() const { return status == SearchStatus::found; }
  bool absent() const { return status == SearchStatus::absent; }
};

/// Visits every hole of G[within] once, in canonical order (by smallest
/// vertex, then lexicographically by the walk from it towards its smaller
/// neighbor). `visit` receives the hole in cyclic order and as a set;
/// returning false stops the scan.
struct HoleScan {
  bool completed = true;  ///< false if the budget ran out first
  bool stopped = false;   ///< the visitor asked to stop
  std::size_t holes = 0;
};
HoleScan for_each_hole(const Graph& g, const VertexSet& within, const Budget& budget,
                       const std::function<bool(const std::vector<Vertex>&, const VertexSet&)>& visit);

struct HoleList {
  std::vector<VertexSet> holes;
  bool truncated = false;
};
HoleList enumerate_holes(const Graph& g, const Budget& budget = {});

/// Search for a C4, diamond, theta, pyramid or prism (use find_wheel for wheels).
Detection find_structure(const Graph& g, StructureKind kind, const Budget& budget = {});

enum class WheelFilter { any, even, non_bug, proper };
Detection find_wheel(const Graph& g, WheelFilter filter, const Budget& budget = {});

struct HubSet {
  VertexSet x;
  VertexSet hubs;
  std::map<Vertex, Witness> witnesses;
  /// Members of X whose status was not settled because the budget ran out.
  VertexSet undetermined;
};
/// Hub(X): vertices x of X with a non-bug wheel (H, x), H ⊆ X.
HubSet hub_set(const Graph& g, const VertexSet& x, const Budget& budget = {});

enum class Verdict { in, out, unknown };
std::string to_string(Verdict v);

/// Membership in C = (C4, diamond, theta, pyramid, prism, even wheel)-free
/// and C* (the same without pyramids).
struct ClassReport {
  Verdict c = Verdict::unknown;
  Verdict c_star = Verdict::unknown;
  /// First witness found against C (may be a pyramid while C* holds).
  std::optional<Witness> witness;
  /// First witness against C*.
  std::optional<Witness> c_star_witness;
};
ClassReport check_class(const Graph& g, const Budget& budget = {});

/// Theta, pyramid, prism or wheel, whichever comes first; absent means
/// (3PC, wheel)-free.
Detection find_3pc_or_wheel(const Graph& g, const Budget& budget = {});

/// Minimal connected H ⊆ G \ {x1,x2,x3} meeting all three neighborhoods,
/// classified by the three-vertex attachment outcomes.
struct ConnectorClass {
  enum class Outcome { path_or_hole = 1, center = 2, triangle = 3 };
  Outcome outcome = Outcome::path_or_hole;
  VertexSet h;
  /// path_or_hole: {x_i, x_j, x_k} with P running x_i -> x_j and x_k the third.
  /// center: {a}. triangle: {a1, a2, a3}.
  std::vector<Vertex> roles;
  /// path_or_hole: one entry, P. center / triangle: P1, P2, P3 (from a / a_i to x_i).
  std::vector<std::vector<Vertex>> paths;
};

class NoConnector : public Error {
 public:
  using Error::Error;
};

ConnectorClass classify_minimal_connector(const Graph& g, Vertex x1, Vertex x2, Vertex x3);

/// Re-checks every bullet of the reported outcome; nullopt when it holds.
std::optional<std::string> verify_connector(const Graph& g, const std::array<Vertex, 3>& xs, const ConnectorClass& c);

}  // namespace talpha
