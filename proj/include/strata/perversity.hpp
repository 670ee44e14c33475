#pragma once

#include <string>
#include <vector>

#include "strata/error.hpp"

namespace strata {

/// Goresky-MacPherson perversity for an ambient dimension n: integers
/// p_2..p_n with p_2 = 0 and p_k <= p_{k+1} <= p_k + 1, plus the implicit
/// p_0 = p_1 = 0. For n < 2 the sequence is empty and every standard name
/// denotes the same trivial perversity.
class Perversity {
public:
    enum class Standard { Zero, LowerMiddle, UpperMiddle, Top };

    static Perversity make(std::vector<int> values, int n);
    static Perversity standard(Standard which, int n);

    /// CLI spelling: zero | lower-middle | upper-middle | top |
    /// custom:<comma-separated p_2..p_n>.
    static Perversity parse(const std::string& text, int n);

    int n() const { return n_; }
    /// p_k; 0 for k < 2.
    int operator()(int k) const;
    const std::vector<int>& values() const { return values_; }

    /// q_k = (k-2) - p_k (the complement with respect to the top perversity).
    Perversity complementary() const;
    /// Restriction to a smaller ambient dimension (used for links).
    Perversity truncated(int m) const;

    /// Standard name when the values match one, else "custom:p2,...".
    std::string display_name() const;

    bool operator==(const Perversity&) const = default;

private:
    Perversity(std::vector<int> values, int n) : values_(std::move(values)), n_(n) {}
    std::vector<int> values_; // p_2..p_n
    int n_ = 0;
};

/// The four standard perversities for dimension n, in the fixed order
/// zero, lower-middle, upper-middle, top.
std::vector<Perversity> standard_perversities(int n);

} // namespace strata
