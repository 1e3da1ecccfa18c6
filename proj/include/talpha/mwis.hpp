#pragma once

#include <string>
#include <vector>

#include "talpha/treedec.hpp"

namespace talpha {

/// A bag's independence number exceeded the DP guard.
class StateBlowup : public Error {
 public:
  StateBlowup(int node, int independence, int guard)
      : Error("bag " + std::to_string(node + 1) + " has independence " + std::to_string(independence) +
              ", guard " + std::to_string(guard)),
        independence_(independence) {}
  int independence() const { return independence_; }

 private:
  int independence_;
};

struct MwisResult {
  VertexSet set;
  Rational value = 0;
  std::string method;  ///< "td-dp" or "brute-force"
};

/// Ties between optimal sets go to the one containing the smallest vertex on
/// which they differ; both solvers agree on this choice.
bool mwis_prefers(const VertexSet& a, const VertexSet& b);

struct NiceNode {
  enum class Kind { leaf, introduce, forget, join };
  Kind kind = Kind::leaf;
  VertexSet bag;
  Vertex vertex = -1;  ///< introduced or forgotten vertex
  std::vector<int> children;
};
/// Rooted nice decomposition: leaves and root have empty bags, introduce and
/// forget nodes change one vertex, join nodes have two children with equal bags.
/// Children precede parents; the root is the last node.
struct NiceTd {
  int n = 0;
  std::vector<NiceNode> nodes;
  int root() const { return static_cast<int>(nodes.size()) - 1; }
};
NiceTd make_nice(const TreeDecomposition& td);

/// Nonnegative weights indexed by vertex. Throws InvalidInput on a size
/// mismatch or a negative entry, StateBlowup when a bag's independence number
/// exceeds the guard.
MwisResult mwis_td(const Graph& g, const std::vector<Rational>& weights, const TreeDecomposition& td,
                   int independence_guard = 12);

/// Branch and bound over vertex subsets. Throws TooLarge past the guard.
MwisResult mwis_bruteforce(const Graph& g, const std::vector<Rational>& weights, int guard = 24);

}  // namespace talpha
