#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tropigon {

using Q = mpq_class;
using Z = mpz_class;

// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Q& q);
Q parse_rational(std::string_view text);

inline Q qi(long long n) { return Q(static_cast<long>(n)); }
inline Q qi(long long n, long long d) {
    Q r(static_cast<long>(n), static_cast<long>(d));
    r.canonicalize();
    return r;
}

inline int sign(const Q& q) { return sgn(q); }

inline Q abs_q(const Q& q) { return q < 0 ? Q(-q) : q; }

inline bool is_integer(const Q& q) { return q.get_den() == 1; }

Z lcm_den(const Z& a, const Q& q);

}  // namespace tropigon
