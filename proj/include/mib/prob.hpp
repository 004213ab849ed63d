#ifndef MIB_PROB_HPP
#define MIB_PROB_HPP

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mib/errors.hpp"

namespace mib {

// A named discrete variable taking values 0 .. cardinality-1.
struct Variable {
    std::string name;
    int cardinality = 1;

    friend bool operator==(const Variable&, const Variable&) = default;
};

// Partial assignment of value indices to variables, keyed by name.
using Assignment = std::map<std::string, int>;

// Dense probability table over an ordered set of discrete variables.
// Cells are indexed in mixed radix with the last variable fastest.
// Immutable after construction; construction validates nonnegativity and
// normalization (sum within 1e-12 of 1), then renormalizes exactly.
class JointTable {
  public:
    JointTable(std::vector<Variable> variables, std::vector<double> probabilities);

    const std::vector<Variable>& variables() const { return vars_; }
    const std::vector<double>& probabilities() const { return p_; }
    std::size_t cell_count() const { return p_.size(); }
    double operator[](std::size_t i) const { return p_[i]; }

    // Index of a named variable; throws NameError if absent.
    int var_index(const std::string& name) const;
    // Like var_index but returns -1 instead of throwing.
    int find_var(const std::string& name) const;

    std::size_t stride(int var) const { return strides_[static_cast<std::size_t>(var)]; }
    std::size_t index_of(std::span<const int> values) const;
    void decode(std::size_t index, std::span<int> values_out) const;

    // Cap on the number of cells of any constructed table.
    static std::size_t max_cells();
    static void set_max_cells(std::size_t cap);

  private:
    std::vector<Variable> vars_;
    std::vector<std::size_t> strides_;
    std::vector<double> p_;
};

// Conditional distribution P(target | given). One normalized row per
// assignment of `given` (rows indexed mixed-radix, last given fastest).
class ConditionalTable {
  public:
    ConditionalTable(Variable target, std::vector<Variable> given, std::vector<double> rows);

    const Variable& target() const { return target_; }
    const std::vector<Variable>& given() const { return given_; }
    std::size_t row_count() const { return rows_.size() / static_cast<std::size_t>(target_.cardinality); }

    std::span<const double> row(std::size_t g) const {
        std::size_t k = static_cast<std::size_t>(target_.cardinality);
        return {rows_.data() + g * k, k};
    }
    double at(std::size_t g, int t) const {
        return rows_[g * static_cast<std::size_t>(target_.cardinality) + static_cast<std::size_t>(t)];
    }
    const std::vector<double>& raw() const { return rows_; }

  private:
    Variable target_;
    std::vector<Variable> given_;
    std::vector<double> rows_;
};

// Sum out every variable not in `keep`; result keeps the original order.
JointTable marginalize(const JointTable& joint, const std::vector<std::string>& keep);

// Probability of a (partial) assignment under the joint.
double prob_of(const JointTable& joint, const Assignment& partial);

// P(rest | given); throws ZeroProbabilityError when P(given) = 0.
JointTable condition(const JointTable& joint, const Assignment& given);

// KL divergence in nats between two distributions on the same outcome
// space. Infinite when p puts mass where q has none.
double kl_divergence(std::span<const double> p, std::span<const double> q);
double kl_divergence(const JointTable& p, const JointTable& q);

// Entropy (nats) of the marginal over `names`.
double entropy(const JointTable& joint, const std::vector<std::string>& names);

// I(Y;Z) in nats; Y and Z are disjoint sets of variable names. Either set
// may be empty, in which case the information is 0.
double mutual_information(const JointTable& joint, const std::vector<std::string>& set_y,
                          const std::vector<std::string>& set_z);

// I(Y;Z | W) = sum_w P(w) I(Y;Z | W=w); the three sets must be pairwise
// disjoint.
double conditional_mutual_information(const JointTable& joint,
                                      const std::vector<std::string>& set_y,
                                      const std::vector<std::string>& set_z,
                                      const std::vector<std::string>& set_w);

// D(P(X1..Xn) || P(X1)...P(Xn)) in nats.
double multi_information(const JointTable& joint);

}  // namespace mib

#endif
