#pragma once

#include <gmpxx.h>

#include <string>

namespace stg {

// Exact object weights. Terminal weights never enter a solution's cost.
using Weight = mpq_class;

inline std::string weight_str(const Weight& w) { return w.get_str(); }

inline Weight parse_weight(const std::string& s) {
    Weight w(s);
    w.canonicalize();
    return w;
}

}  // namespace stg
