#include "mib/prob.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "mib/numeric.hpp"

namespace mib {

namespace {

std::size_t g_max_cells = 10'000'000;

constexpr double kNormTol = 1e-12;

// Mixed-radix odometer over a subset of positions; calls f(flat_index) for
// every cell of the subspace, where flat_index accumulates the given strides.
template <typename F>
void for_each_subspace(std::span<const int> cards, std::span<const std::size_t> strides,
                       std::size_t base, F&& f) {
    std::size_t n = cards.size();
    std::vector<int> digit(n, 0);
    std::size_t idx = base;
    while (true) {
        f(idx);
        std::size_t i = n;
        while (i > 0) {
            --i;
            ++digit[i];
            idx += strides[i];
            if (digit[i] < cards[i]) break;
            idx -= static_cast<std::size_t>(cards[i]) * strides[i];
            digit[i] = 0;
            if (i == 0) return;
        }
        if (n == 0) return;
    }
}

}  // namespace

JointTable::JointTable(std::vector<Variable> variables, std::vector<double> probabilities)
    : vars_(std::move(variables)), p_(std::move(probabilities)) {
    std::set<std::string> seen;
    std::size_t cells = 1;
    for (const auto& v : vars_) {
        if (v.cardinality < 1) {
            throw ArgumentError("variable '" + v.name + "' has cardinality < 1");
        }
        if (!seen.insert(v.name).second) {
            throw NameError("duplicate variable name '" + v.name + "'");
        }
        std::size_t c = static_cast<std::size_t>(v.cardinality);
        if (cells > g_max_cells / c) {
            throw CapacityError("joint table exceeds the cell cap of " +
                                std::to_string(g_max_cells));
        }
        cells *= c;
    }
    if (p_.size() != cells) {
        throw ShapeError("probability array has " + std::to_string(p_.size()) +
                         " entries, expected " + std::to_string(cells));
    }

    strides_.assign(vars_.size(), 1);
    for (std::size_t i = vars_.size(); i-- > 1;) {
        strides_[i - 1] = strides_[i] * static_cast<std::size_t>(vars_[i].cardinality);
    }

    NeumaierSum total;
    for (double x : p_) {
        if (x < 0.0 || !std::isfinite(x)) {
            throw ArgumentError("probabilities must be finite and nonnegative");
        }
        total.add(x);
    }
    double sum = total.value();
    if (std::abs(sum - 1.0) > kNormTol) {
        throw ArgumentError("probabilities sum to " + std::to_string(sum) +
                            ", outside the 1e-12 normalization tolerance");
    }
    for (double& x : p_) x /= sum;
}

int JointTable::var_index(const std::string& name) const {
    int i = find_var(name);
    if (i < 0) throw NameError("unknown variable '" + name + "'");
    return i;
}

int JointTable::find_var(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].name == name) return static_cast<int>(i);
    }
    return -1;
}

std::size_t JointTable::index_of(std::span<const int> values) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        idx += static_cast<std::size_t>(values[i]) * strides_[i];
    }
    return idx;
}

void JointTable::decode(std::size_t index, std::span<int> values_out) const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        values_out[i] = static_cast<int>(index / strides_[i]);
        index %= strides_[i];
    }
}

std::size_t JointTable::max_cells() { return g_max_cells; }
void JointTable::set_max_cells(std::size_t cap) { g_max_cells = cap; }

ConditionalTable::ConditionalTable(Variable target, std::vector<Variable> given,
                                   std::vector<double> rows)
    : target_(std::move(target)), given_(std::move(given)), rows_(std::move(rows)) {
    if (target_.cardinality < 1) {
        throw ArgumentError("conditional target has cardinality < 1");
    }
    std::size_t n_rows = 1;
    for (const auto& v : given_) {
        if (v.cardinality < 1) throw ArgumentError("given variable has cardinality < 1");
        n_rows *= static_cast<std::size_t>(v.cardinality);
    }
    std::size_t k = static_cast<std::size_t>(target_.cardinality);
    if (rows_.size() != n_rows * k) {
        throw ShapeError("conditional table has wrong number of entries");
    }
    for (std::size_t g = 0; g < n_rows; ++g) {
        NeumaierSum s;
        for (std::size_t t = 0; t < k; ++t) {
            double x = rows_[g * k + t];
            if (x < 0.0 || !std::isfinite(x)) {
                throw ArgumentError("conditional entries must be finite and nonnegative");
            }
            s.add(x);
        }
        double sum = s.value();
        if (std::abs(sum - 1.0) > kNormTol) {
            throw ArgumentError("conditional row " + std::to_string(g) + " sums to " +
                                std::to_string(sum));
        }
        for (std::size_t t = 0; t < k; ++t) rows_[g * k + t] /= sum;
    }
}

JointTable marginalize(const JointTable& joint, const std::vector<std::string>& keep) {
    const auto& vars = joint.variables();
    std::vector<bool> kept(vars.size(), false);
    for (const auto& name : keep) {
        kept[static_cast<std::size_t>(joint.var_index(name))] = true;
    }

    std::vector<Variable> out_vars;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (kept[i]) out_vars.push_back(vars[i]);
    }

    // Output strides per input variable (0 when summed out).
    std::vector<std::size_t> out_stride(vars.size(), 0);
    {
        std::size_t s = 1;
        for (std::size_t i = vars.size(); i-- > 0;) {
            if (kept[i]) {
                out_stride[i] = s;
                s *= static_cast<std::size_t>(vars[i].cardinality);
            }
        }
    }

    std::size_t out_cells = 1;
    for (const auto& v : out_vars) out_cells *= static_cast<std::size_t>(v.cardinality);

    std::vector<double> acc(out_cells, 0.0);
    std::vector<double> comp(out_cells, 0.0);
    std::vector<int> cards(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) cards[i] = vars[i].cardinality;

    std::vector<int> digit(vars.size(), 0);
    const auto& p = joint.probabilities();
    std::size_t out_idx = 0;
    for (std::size_t in_idx = 0; in_idx < p.size(); ++in_idx) {
        double x = p[in_idx];
        double t = acc[out_idx] + x;
        if (std::abs(acc[out_idx]) >= std::abs(x)) {
            comp[out_idx] += (acc[out_idx] - t) + x;
        } else {
            comp[out_idx] += (x - t) + acc[out_idx];
        }
        acc[out_idx] = t;
        for (std::size_t i = vars.size(); i-- > 0;) {
            ++digit[i];
            out_idx += out_stride[i];
            if (digit[i] < cards[i]) break;
            out_idx -= static_cast<std::size_t>(cards[i]) * out_stride[i];
            digit[i] = 0;
        }
    }
    for (std::size_t i = 0; i < out_cells; ++i) acc[i] += comp[i];
    return JointTable(std::move(out_vars), std::move(acc));
}

namespace {

// Splits table positions into evidence (fixed) and free, returning the base
// index of the evidence part. Validates names and value ranges.
std::size_t evidence_base(const JointTable& joint, const Assignment& given,
                          std::vector<bool>& fixed) {
    const auto& vars = joint.variables();
    fixed.assign(vars.size(), false);
    std::size_t base = 0;
    for (const auto& [name, value] : given) {
        int i = joint.var_index(name);
        if (value < 0 || value >= vars[static_cast<std::size_t>(i)].cardinality) {
            throw ArgumentError("value " + std::to_string(value) + " out of range for '" +
                                name + "'");
        }
        fixed[static_cast<std::size_t>(i)] = true;
        base += static_cast<std::size_t>(value) * joint.stride(i);
    }
    return base;
}

}  // namespace

double prob_of(const JointTable& joint, const Assignment& partial) {
    std::vector<bool> fixed;
    std::size_t base = evidence_base(joint, partial, fixed);
    const auto& vars = joint.variables();

    std::vector<int> free_cards;
    std::vector<std::size_t> free_strides;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (!fixed[i]) {
            free_cards.push_back(vars[i].cardinality);
            free_strides.push_back(joint.stride(static_cast<int>(i)));
        }
    }
    NeumaierSum s;
    for_each_subspace(free_cards, free_strides, base, [&](std::size_t idx) { s.add(joint[idx]); });
    return s.value();
}

JointTable condition(const JointTable& joint, const Assignment& given) {
    std::vector<bool> fixed;
    std::size_t base = evidence_base(joint, given, fixed);
    const auto& vars = joint.variables();

    std::vector<Variable> out_vars;
    std::vector<int> free_cards;
    std::vector<std::size_t> free_strides;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (!fixed[i]) {
            out_vars.push_back(vars[i]);
            free_cards.push_back(vars[i].cardinality);
            free_strides.push_back(joint.stride(static_cast<int>(i)));
        }
    }

    std::vector<double> out;
    out.reserve(1);
    NeumaierSum total;
    for_each_subspace(free_cards, free_strides, base, [&](std::size_t idx) {
        out.push_back(joint[idx]);
        total.add(joint[idx]);
    });
    double z = total.value();
    if (z <= 0.0) {
        throw ZeroProbabilityError("conditioning on zero-probability evidence");
    }
    for (double& x : out) x /= z;
    return JointTable(std::move(out_vars), std::move(out));
}

double kl_divergence(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw ShapeError("KL divergence of distributions with different sizes");
    }
    NeumaierSum s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        double term = kl_term(p[i], q[i]);
        if (std::isinf(term)) return kInf;
        s.add(term);
    }
    return std::max(0.0, s.value());
}

double kl_divergence(const JointTable& p, const JointTable& q) {
    if (p.variables() != q.variables()) {
        throw ShapeError("KL divergence of tables over different variables");
    }
    return kl_divergence(std::span<const double>(p.probabilities()),
                         std::span<const double>(q.probabilities()));
}

double entropy(const JointTable& joint, const std::vector<std::string>& names) {
    JointTable m = marginalize(joint, names);
    NeumaierSum s;
    for (double x : m.probabilities()) s.add(xlogx(x));
    return std::max(0.0, -s.value());
}

namespace {

void require_disjoint(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    for (const auto& x : a) {
        if (std::find(b.begin(), b.end(), x) != b.end()) {
            throw ArgumentError("variable sets overlap on '" + x + "'");
        }
    }
}

}  // namespace

double mutual_information(const JointTable& joint, const std::vector<std::string>& set_y,
                          const std::vector<std::string>& set_z) {
    require_disjoint(set_y, set_z);
    for (const auto& n : set_y) joint.var_index(n);
    for (const auto& n : set_z) joint.var_index(n);
    if (set_y.empty() || set_z.empty()) return 0.0;

    std::vector<std::string> both = set_y;
    both.insert(both.end(), set_z.begin(), set_z.end());
    JointTable m = marginalize(joint, both);
    JointTable my = marginalize(m, set_y);
    JointTable mz = marginalize(m, set_z);

    // Map each cell of m to its (y, z) sub-indices.
    std::size_t n = m.variables().size();
    std::vector<std::size_t> y_stride(n, 0), z_stride(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& name = m.variables()[i].name;
        int iy = my.find_var(name);
        int iz = mz.find_var(name);
        if (iy >= 0) y_stride[i] = my.stride(iy);
        if (iz >= 0) z_stride[i] = mz.stride(iz);
    }

    NeumaierSum s;
    std::vector<int> digit(n);
    for (std::size_t idx = 0; idx < m.cell_count(); ++idx) {
        double pyz = m[idx];
        if (pyz > 0.0) {
            m.decode(idx, digit);
            std::size_t yi = 0, zi = 0;
            for (std::size_t i = 0; i < n; ++i) {
                yi += static_cast<std::size_t>(digit[i]) * y_stride[i];
                zi += static_cast<std::size_t>(digit[i]) * z_stride[i];
            }
            s.add(pyz * std::log(pyz / (my[yi] * mz[zi])));
        }
    }
    return std::max(0.0, s.value());
}

double conditional_mutual_information(const JointTable& joint,
                                      const std::vector<std::string>& set_y,
                                      const std::vector<std::string>& set_z,
                                      const std::vector<std::string>& set_w) {
    require_disjoint(set_y, set_z);
    require_disjoint(set_y, set_w);
    require_disjoint(set_z, set_w);
    if (set_w.empty()) return mutual_information(joint, set_y, set_z);

    JointTable mw = marginalize(joint, set_w);
    NeumaierSum s;
    std::vector<int> digit(mw.variables().size());
    for (std::size_t idx = 0; idx < mw.cell_count(); ++idx) {
        double pw = mw[idx];
        if (pw <= 0.0) continue;
        mw.decode(idx, digit);
        Assignment w;
        for (std::size_t i = 0; i < mw.variables().size(); ++i) {
            w[mw.variables()[i].name] = digit[i];
        }
        JointTable sub = condition(joint, w);
        s.add(pw * mutual_information(sub, set_y, set_z));
    }
    return std::max(0.0, s.value());
}

double multi_information(const JointTable& joint) {
    const auto& vars = joint.variables();
    if (vars.size() < 2) return 0.0;

    std::vector<JointTable> marginals;
    marginals.reserve(vars.size());
    for (const auto& v : vars) {
        marginals.push_back(marginalize(joint, {v.name}));
    }

    NeumaierSum s;
    std::vector<int> digit(vars.size());
    for (std::size_t idx = 0; idx < joint.cell_count(); ++idx) {
        double p = joint[idx];
        if (p > 0.0) {
            joint.decode(idx, digit);
            double prod = 1.0;
            for (std::size_t i = 0; i < vars.size(); ++i) {
                prod *= marginals[i][static_cast<std::size_t>(digit[i])];
            }
            s.add(p * std::log(p / prod));
        }
    }
    return std::max(0.0, s.value());
}

}  // namespace mib
