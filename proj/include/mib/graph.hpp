#ifndef MIB_GRAPH_HPP
#define MIB_GRAPH_HPP

#include <map>
#include <string>
#include <vector>

#include "mib/prob.hpp"

namespace mib {

// A Bayesian network structure: named nodes plus a parent set per node.
// Acyclicity is validated on construction; immutable afterwards.
class DagStructure {
  public:
    DagStructure(std::vector<std::string> nodes,
                 std::map<std::string, std::vector<std::string>> parents);

    const std::vector<std::string>& nodes() const { return nodes_; }
    const std::vector<std::string>& parents(const std::string& node) const;
    bool has_node(const std::string& name) const { return find_node(name) >= 0; }
    int find_node(const std::string& name) const;

    // Deterministic topological order: ties broken by declared node order.
    const std::vector<std::string>& topological_order() const { return topo_; }

    // Copy of this DAG with one extra edge (used by monotonicity checks).
    DagStructure with_edge(const std::string& parent, const std::string& child) const;

  private:
    std::vector<std::string> nodes_;
    std::vector<std::vector<std::string>> parents_;
    std::vector<std::string> topo_;
};

DagStructure edgeless_over(const std::vector<std::string>& names);

// True iff p factors according to g within max-norm tolerance `tol`;
// conditional rows whose parent configuration has zero probability play no
// role in the comparison.
bool is_consistent(const JointTable& p, const DagStructure& g, double tol);

// I^G = sum_i I(X_i; Pa_i) in nats. Nodes of g must exist in p; p may have
// extra variables.
double network_information(const JointTable& p, const DagStructure& g);

// D(P||G) as a sum of conditional information terms along a topological
// order (pass `order` to override the default deterministic one).
double divergence_conditional_form(const JointTable& p, const DagStructure& g,
                                   const std::vector<std::string>& order = {});

#ifdef NDEBUG
inline constexpr bool kCrossCheckDefault = false;
#else
inline constexpr bool kCrossCheckDefault = true;
#endif

// D(P||G) = multi_information(p) - I^G. When `cross_check` is set the
// conditional-term form is evaluated too and a disagreement beyond 1e-10
// raises InternalConsistencyError.
double divergence_from_network(const JointTable& p, const DagStructure& g,
                               bool cross_check = kCrossCheckDefault);

// The G-consistent distribution assembled from p's own conditionals.
// Rows with zero-probability parent configurations become uniform.
JointTable kl_projection(const JointTable& p, const DagStructure& g);

}  // namespace mib

#endif
