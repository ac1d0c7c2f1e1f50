#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace yangirr {

using Rat = mpq_class;
using Vec = std::vector<Rat>;

// Accepts "p", "-p", "p/q". Throws std::invalid_argument otherwise.
Rat parse_rat(const std::string& s);
std::string to_string(const Rat& r);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

bool is_zero(const Vec& v);
Rat dot(const Vec& a, const Vec& b);

}  // namespace yangirr
