#pragma once

#include <optional>
#include <string>
#include <vector>

#include "talpha/graph.hpp"

namespace talpha {

enum class StructureKind { c4, diamond, theta, pyramid, prism, wheel };

std::string to_string(StructureKind kind);
/// Parses "c4", "diamond", "theta", "pyramid", "prism", "wheel".
std::optional<StructureKind> parse_structure_kind(const std::string& name);

struct WheelFlags {
  int spokes = 0;
  bool even = false;
  bool bug = false;
  bool twin = false;
  bool universal = false;
  bool line = false;
  /// Neither a bug, a twin wheel nor a universal wheel.
  bool proper = false;
};

/// Role-labelled embedding of a forbidden configuration.
///
/// anchors by kind:
///   c4       the cycle in order
///   diamond  {u, v, x, y}: uv the edge both triangles share, x and y the tips
///   theta    {a, b}
///   pyramid  {apex, b1, b2, b3}
///   prism    {a1, a2, a3, b1, b2, b3}
///   wheel    {hub}
/// paths: the three paths of a 3PC (ordered, ends included, path i ends at
/// b_i / starts at a_i), or a single entry holding the hole of a wheel in
/// cyclic order.
struct Witness {
  StructureKind kind = StructureKind::c4;
  std::vector<Vertex> anchors;
  std::vector<std::vector<Vertex>> paths;
  WheelFlags flags;

  VertexSet vertices(int n) const;
};

WheelFlags classify_wheel(const Graph& g, const VertexSet& hole, Vertex hub);

/// Checks the embedding against the definition; returns the first failed
/// clause, or nullopt when it induces exactly the claimed configuration.
std::optional<std::string> verify_witness(const Graph& g, const Witness& w);

/// Returns w after verify_witness; throws InternalError if it does not verify.
Witness checked(const Graph& g, Witness w);

/// True if `cycle` (in order) induces a chordless cycle of length >= 4.
bool is_hole(const Graph& g, const std::vector<Vertex>& cycle);
/// True if `path` (in order) induces a chordless path.
bool is_induced_path(const Graph& g, const std::vector<Vertex>& path);
/// Orders the vertices of a hole cyclically, starting at its smallest vertex
/// and continuing to its smaller neighbor.
std::vector<Vertex> cyclic_order(const Graph& g, const VertexSet& hole);

}  // namespace talpha
