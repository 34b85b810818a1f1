#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace sdmawc {

inline constexpr double kNormalizationTol = 1e-12;   // on construction
inline constexpr double kDerivedIdentityTol = 1e-10; // on derived identities
inline constexpr double kNegativeClampFloor = -1e-10;

/// A named finite set. Joint distributions are labeled by these.
struct Alphabet {
    std::string name;
    int size = 0;
};

/// h(a) = -a log2 a - (1-a) log2 (1-a), with h(0) = h(1) = 0.
inline double binary_entropy(double a) {
    if (!(a >= 0.0 && a <= 1.0)) throw std::domain_error("binary_entropy: argument outside [0,1]");
    if (a == 0.0 || a == 1.0) return 0.0;
    return -a * std::log2(a) - (1.0 - a) * std::log2(1.0 - a);
}

/// Binary convolution a*b = a(1-b) + (1-a)b. An argument of 1/2 is
/// absorbing; that case is returned exactly.
inline double binary_convolution(double a, double b) {
    if (!(a >= 0.0 && a <= 1.0) || !(b >= 0.0 && b <= 1.0))
        throw std::domain_error("binary_convolution: arguments outside [0,1]");
    if (a == 0.5 || b == 0.5) return 0.5;
    return a * (1.0 - b) + (1.0 - a) * b;
}

namespace detail {

inline double xlog2x(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

inline double clamp_nonneg(double v, const char* what) {
    if (v >= 0.0) return v;
    if (v >= kNegativeClampFloor) return 0.0;
    throw InternalError(std::string(what) + ": value " + std::to_string(v) +
                        " below clamping floor");
}

}  // namespace detail

/// Dense probability tensor over named finite variables. Row-major with the
/// last variable fastest. Immutable after construction.
class LabeledJointPmf {
   public:
    LabeledJointPmf() = default;

    LabeledJointPmf(std::vector<Alphabet> variables, std::vector<double> weights)
        : vars_(std::move(variables)), weights_(std::move(weights)) {
        std::size_t expect = 1;
        for (const auto& v : vars_) {
            if (v.size < 1) throw std::invalid_argument("LabeledJointPmf: alphabet size < 1");
            expect *= static_cast<std::size_t>(v.size);
        }
        if (weights_.size() != expect)
            throw std::invalid_argument("LabeledJointPmf: tensor shape mismatch");
        for (std::size_t i = 0; i + 1 < vars_.size(); ++i)
            for (std::size_t j = i + 1; j < vars_.size(); ++j)
                if (vars_[i].name == vars_[j].name)
                    throw std::invalid_argument("LabeledJointPmf: duplicate variable name " +
                                                vars_[i].name);
        double total = 0.0;
        for (double w : weights_) {
            if (w < 0.0) throw std::invalid_argument("LabeledJointPmf: negative weight");
            total += w;
        }
        if (std::abs(total - 1.0) > kNormalizationTol)
            throw std::invalid_argument("LabeledJointPmf: weights sum to " +
                                        std::to_string(total) + ", not 1");
    }

    const std::vector<Alphabet>& variables() const { return vars_; }
    const std::vector<double>& weights() const { return weights_; }
    std::size_t size() const { return weights_.size(); }

    int variable_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i].name == name) return static_cast<int>(i);
        throw std::invalid_argument("unknown variable name: " + name);
    }

    bool has_variable(const std::string& name) const {
        return std::any_of(vars_.begin(), vars_.end(),
                           [&](const Alphabet& a) { return a.name == name; });
    }

    /// Sum out every variable not in `keep`. Kept variables retain their
    /// relative order.
    LabeledJointPmf marginalize(const std::vector<std::string>& keep) const {
        std::vector<int> keep_idx;
        keep_idx.reserve(keep.size());
        for (const auto& name : keep) keep_idx.push_back(variable_index(name));
        std::sort(keep_idx.begin(), keep_idx.end());
        keep_idx.erase(std::unique(keep_idx.begin(), keep_idx.end()), keep_idx.end());

        std::vector<Alphabet> out_vars;
        out_vars.reserve(keep_idx.size());
        std::size_t out_size = 1;
        for (int i : keep_idx) {
            out_vars.push_back(vars_[static_cast<std::size_t>(i)]);
            out_size *= static_cast<std::size_t>(vars_[static_cast<std::size_t>(i)].size);
        }

        // stride of each kept variable inside the output tensor
        std::vector<std::size_t> out_stride(keep_idx.size());
        {
            std::size_t s = 1;
            for (std::size_t k = keep_idx.size(); k-- > 0;) {
                out_stride[k] = s;
                s *= static_cast<std::size_t>(out_vars[k].size);
            }
        }
        std::vector<std::size_t> in_stride(vars_.size());
        {
            std::size_t s = 1;
            for (std::size_t k = vars_.size(); k-- > 0;) {
                in_stride[k] = s;
                s *= static_cast<std::size_t>(vars_[k].size);
            }
        }
        // per input variable: its contribution to the output offset
        std::vector<std::size_t> map_stride(vars_.size(), 0);
        for (std::size_t k = 0; k < keep_idx.size(); ++k)
            map_stride[static_cast<std::size_t>(keep_idx[k])] = out_stride[k];

        std::vector<double> out(out_size, 0.0);
        for (std::size_t cell = 0; cell < weights_.size(); ++cell) {
            std::size_t rem = cell, off = 0;
            for (std::size_t k = 0; k < vars_.size(); ++k) {
                const std::size_t digit = rem / in_stride[k];
                rem %= in_stride[k];
                off += digit * map_stride[k];
            }
            out[off] += weights_[cell];
        }
        LabeledJointPmf result;
        result.vars_ = std::move(out_vars);
        result.weights_ = std::move(out);
        return result;
    }

    /// H(vars | given) in bits; 0 log 0 = 0. Sets must be disjoint.
    double entropy(const std::vector<std::string>& vars,
                   const std::vector<std::string>& given = {}) const {
        check_disjoint(vars, given);
        std::vector<std::string> all = vars;
        all.insert(all.end(), given.begin(), given.end());
        const double h_all = plain_entropy(marginalize(all));
        if (given.empty()) return h_all;
        const double h_given = plain_entropy(marginalize(given));
        return detail::clamp_nonneg(h_all - h_given, "entropy");
    }

    /// I(a ; b | given) in bits, clamped to 0 from tiny negatives.
    double mutual_information(const std::vector<std::string>& a,
                              const std::vector<std::string>& b,
                              const std::vector<std::string>& given = {}) const {
        check_disjoint(a, b);
        check_disjoint(a, given);
        check_disjoint(b, given);
        std::vector<std::string> b_given = b;
        b_given.insert(b_given.end(), given.begin(), given.end());
        const double v = entropy(a, given) - entropy(a, b_given);
        return detail::clamp_nonneg(v, "mutual_information");
    }

   private:
    static double plain_entropy(const LabeledJointPmf& m) {
        double acc = 0.0;
        for (double w : m.weights_) acc -= detail::xlog2x(w);
        return acc < 0.0 ? 0.0 : acc;
    }

    static void check_disjoint(const std::vector<std::string>& a,
                               const std::vector<std::string>& b) {
        for (const auto& x : a)
            for (const auto& y : b)
                if (x == y)
                    throw std::invalid_argument("variable sets overlap on " + x);
    }

    std::vector<Alphabet> vars_;
    std::vector<double> weights_;
};

inline LabeledJointPmf marginalize(const LabeledJointPmf& joint,
                                   const std::vector<std::string>& keep) {
    return joint.marginalize(keep);
}

inline double entropy(const LabeledJointPmf& joint, const std::vector<std::string>& vars,
                      const std::vector<std::string>& given = {}) {
    return joint.entropy(vars, given);
}

inline double mutual_information(const LabeledJointPmf& joint, const std::vector<std::string>& a,
                                 const std::vector<std::string>& b,
                                 const std::vector<std::string>& given = {}) {
    return joint.mutual_information(a, b, given);
}

/// Conditional kernel P(target | given), stored as a dense tensor indexed
/// (given..., target...) with target fastest. Every given-slice sums to 1.
class ConditionalPmf {
   public:
    ConditionalPmf() = default;

    ConditionalPmf(std::vector<Alphabet> targets, std::vector<Alphabet> given,
                   std::vector<double> weights)
        : targets_(std::move(targets)), given_(std::move(given)), weights_(std::move(weights)) {
        target_size_ = 1;
        for (const auto& t : targets_) {
            if (t.size < 1) throw std::invalid_argument("ConditionalPmf: alphabet size < 1");
            target_size_ *= static_cast<std::size_t>(t.size);
        }
        std::size_t given_size = 1;
        for (const auto& g : given_) {
            if (g.size < 1) throw std::invalid_argument("ConditionalPmf: alphabet size < 1");
            given_size *= static_cast<std::size_t>(g.size);
        }
        if (weights_.size() != given_size * target_size_)
            throw std::invalid_argument("ConditionalPmf: tensor shape mismatch");
        for (std::size_t s = 0; s < given_size; ++s) {
            double total = 0.0;
            for (std::size_t t = 0; t < target_size_; ++t) {
                const double w = weights_[s * target_size_ + t];
                if (w < 0.0) throw std::invalid_argument("ConditionalPmf: negative weight");
                total += w;
            }
            if (std::abs(total - 1.0) > kNormalizationTol)
                throw std::invalid_argument("ConditionalPmf: slice " + std::to_string(s) +
                                            " sums to " + std::to_string(total));
        }
    }

    const std::vector<Alphabet>& targets() const { return targets_; }
    const std::vector<Alphabet>& given() const { return given_; }
    std::size_t target_size() const { return target_size_; }

    /// Probability of the flattened target index under the flattened
    /// given index.
    double at(std::size_t given_index, std::size_t target_index) const {
        return weights_[given_index * target_size_ + target_index];
    }

    std::span<const double> slice(std::size_t given_index) const {
        return std::span<const double>(weights_).subspan(given_index * target_size_,
                                                         target_size_);
    }

   private:
    std::vector<Alphabet> targets_;
    std::vector<Alphabet> given_;
    std::vector<double> weights_;
    std::size_t target_size_ = 1;
};

}  // namespace sdmawc
