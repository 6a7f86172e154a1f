#pragma once

#include "exactmath.hpp"
#include "partitions.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace haarcalc {

enum class Family {
    weingarten,  ///< z_alpha, the p = n sector
    su_shifted,  ///< d_alpha, the p = n + N sector of SU(N)
};

inline std::string to_string(Family f)
{
    return f == Family::weingarten ? "weingarten" : "su-shifted";
}

inline Family parse_family(std::string_view s)
{
    if (s == "weingarten") {
        return Family::weingarten;
    }
    if (s == "su-shifted") {
        return Family::su_shifted;
    }
    throw std::invalid_argument("unknown family \"" + std::string(s) + "\"");
}

/// Coefficients of one sector weight n, keyed by every partition of n.
struct CoeffTable {
    int n = 0;
    Family family = Family::weingarten;
    std::map<Partition, RatFuncN> entries;

    const RatFuncN& at(const Partition& alpha) const
    {
        auto it = entries.find(alpha);
        if (it == entries.end()) {
            throw std::out_of_range("no coefficient for partition \"" + to_string(alpha) + "\"");
        }
        return it->second;
    }

    friend bool operator==(const CoeffTable&, const CoeffTable&) = default;
};

} // namespace haarcalc
