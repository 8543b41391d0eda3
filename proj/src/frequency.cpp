#include "translates/frequency.hpp"

#include <cmath>
#include <cstdlib>

namespace translates {

Index FrequencyIndex::norm_inf() const {
    Index m = 0;
    for (Index v : c_) m = std::max<Index>(m, std::llabs(v));
    return m;
}

Index FrequencyIndex::norm1() const {
    Index s = 0;
    for (Index v : c_) s += std::llabs(v);
    return s;
}

Index FrequencyIndex::norm2_squared() const {
    Index s = 0;
    for (Index v : c_) s += v * v;
    return s;
}

double FrequencyIndex::norm2() const { return std::sqrt(static_cast<double>(norm2_squared())); }

FrequencyIndex FrequencyIndex::operator-() const {
    std::vector<Index> n(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) n[i] = -c_[i];
    return FrequencyIndex(std::move(n));
}

std::string FrequencyIndex::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c_[i]);
    }
    return s + ")";
}

} // namespace translates
