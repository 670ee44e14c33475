#include "strata/perversity.hpp"

#include <sstream>

namespace strata {

Perversity Perversity::make(std::vector<int> values, int n) {
    if (n < 0) throw InputError("perversity: ambient dimension must be nonnegative");
    const std::size_t expect = n >= 2 ? static_cast<std::size_t>(n - 1) : 0;
    if (values.size() != expect)
        throw InputError("perversity: expected " + std::to_string(expect) +
                         " values p_2..p_n, got " + std::to_string(values.size()));
    if (!values.empty() && values[0] != 0)
        throw InputError("perversity: p_2 must be 0, got " + std::to_string(values[0]));
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        if (values[i + 1] < values[i] || values[i + 1] > values[i] + 1)
            throw InputError("perversity: growth condition fails at k=" + std::to_string(i + 3) +
                             " (p_k must be p_{k-1} or p_{k-1}+1)");
    }
    return Perversity(std::move(values), n);
}

Perversity Perversity::standard(Standard which, int n) {
    std::vector<int> v;
    for (int k = 2; k <= n; ++k) {
        switch (which) {
        case Standard::Zero: v.push_back(0); break;
        case Standard::Top: v.push_back(k - 2); break;
        case Standard::LowerMiddle: v.push_back((k - 2) / 2); break;
        case Standard::UpperMiddle: v.push_back((k - 1) / 2); break;
        }
    }
    return make(std::move(v), n);
}

Perversity Perversity::parse(const std::string& text, int n) {
    if (text == "zero") return standard(Standard::Zero, n);
    if (text == "lower-middle") return standard(Standard::LowerMiddle, n);
    if (text == "upper-middle") return standard(Standard::UpperMiddle, n);
    if (text == "top") return standard(Standard::Top, n);
    const std::string prefix = "custom:";
    if (text.rfind(prefix, 0) == 0) {
        std::vector<int> v;
        std::stringstream ss(text.substr(prefix.size()));
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                v.push_back(std::stoi(item));
            } catch (const std::exception&) {
                throw InputError("perversity: cannot parse value '" + item + "'");
            }
        }
        return make(std::move(v), n);
    }
    throw InputError("unknown perversity '" + text +
                     "' (expected zero | lower-middle | upper-middle | top | custom:p2,..,pn)");
}

int Perversity::operator()(int k) const {
    if (k < 2) return 0;
    if (k > n_) throw InternalError("perversity evaluated beyond its dimension");
    return values_[static_cast<std::size_t>(k - 2)];
}

Perversity Perversity::complementary() const {
    std::vector<int> v(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i)
        v[i] = static_cast<int>(i) - values_[i]; // (k-2) - p_k with k = i+2
    return make(std::move(v), n_);
}

Perversity Perversity::truncated(int m) const {
    if (m > n_) throw InternalError("perversity truncation must shrink the dimension");
    std::vector<int> v;
    for (int k = 2; k <= m; ++k) v.push_back((*this)(k));
    return make(std::move(v), m);
}

std::string Perversity::display_name() const {
    const std::pair<Standard, const char*> names[] = {
        {Standard::Zero, "zero"},
        {Standard::LowerMiddle, "lower-middle"},
        {Standard::UpperMiddle, "upper-middle"},
        {Standard::Top, "top"},
    };
    for (const auto& [which, name] : names)
        if (standard(which, n_).values() == values_) return name;
    std::string s = "custom:";
    for (std::size_t i = 0; i < values_.size(); ++i)
        s += (i ? "," : "") + std::to_string(values_[i]);
    return s;
}

std::vector<Perversity> standard_perversities(int n) {
    return {Perversity::standard(Perversity::Standard::Zero, n),
            Perversity::standard(Perversity::Standard::LowerMiddle, n),
            Perversity::standard(Perversity::Standard::UpperMiddle, n),
            Perversity::standard(Perversity::Standard::Top, n)};
}

} // namespace strata
