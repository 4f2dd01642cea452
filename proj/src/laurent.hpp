#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "minnaert/types.hpp"

namespace minnaert::detail {

// Truncated Laurent series sum_{q = lo}^{hi} c_q k^q. Coefficients above `exact_to`
// are incomplete after multiplication and are discarded.
struct Laurent {
    int lo = 0;
    int exact_to = std::numeric_limits<int>::max();
    std::vector<cplx> c;

    int hi() const { return lo + static_cast<int>(c.size()) - 1; }
    cplx at(int q) const { return (q < lo || q > hi()) ? cplx(0.0) : c[q - lo]; }

    static Laurent monomial(cplx a, int power) { return Laurent{power, std::numeric_limits<int>::max(), {a}}; }

    void trim() {
        if (hi() > exact_to) c.resize(std::max(0, exact_to - lo + 1));
    }

    // Regular part evaluated at k; negative powers are dropped.
    cplx regular_value(cplx k) const {
        cplx s = 0.0;
        for (int q = std::min(hi(), exact_to); q >= 0; --q) s = s * k + at(q);
        return s;
    }
};

inline Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r;
    r.lo = std::min(a.lo, b.lo);
    r.exact_to = std::min(a.exact_to, b.exact_to);
    const int hi = std::max(a.hi(), b.hi());
    r.c.resize(hi - r.lo + 1);
    for (int q = r.lo; q <= hi; ++q) r.c[q - r.lo] = a.at(q) + b.at(q);
    r.trim();
    return r;
}

inline Laurent operator*(const Laurent& a, cplx s) {
    Laurent r = a;
    for (auto& v : r.c) v *= s;
    return r;
}
inline Laurent operator*(cplx s, const Laurent& a) { return a * s; }
inline Laurent operator*(const Laurent& a, double s) { return a * cplx(s); }
inline Laurent operator*(double s, const Laurent& a) { return a * cplx(s); }
inline Laurent operator/(const Laurent& a, double s) { return a * cplx(1.0 / s); }
inline Laurent operator-(const Laurent& a) { return a * cplx(-1.0); }
inline Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

inline Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    r.lo = a.lo + b.lo;
    // A missing term of a at power > a.exact_to pairs with b.lo at the lowest.
    const long ea = a.exact_to == std::numeric_limits<int>::max() ? std::numeric_limits<int>::max()
                                                                  : static_cast<long>(a.exact_to) + b.lo;
    const long eb = b.exact_to == std::numeric_limits<int>::max() ? std::numeric_limits<int>::max()
                                                                  : static_cast<long>(b.exact_to) + a.lo;
    r.exact_to = static_cast<int>(std::min(ea, eb));
    const int hi = std::min<long>(static_cast<long>(a.hi()) + b.hi(), r.exact_to);
    r.c.assign(std::max(0, hi - r.lo + 1), cplx(0.0));
    for (int i = 0; i < static_cast<int>(a.c.size()); ++i)
        for (int j = 0; j < static_cast<int>(b.c.size()); ++j) {
            const int q = a.lo + i + b.lo + j;
            if (q <= hi) r.c[q - r.lo] += a.c[i] * b.c[j];
        }
    return r;
}

// j_n(k / c) as a power series in k, complete up to power max_power.
inline Laurent series_j_scaled(int n, double inv_c, int max_power) {
    Laurent r;
    r.lo = n;
    r.exact_to = max_power;
    double term = 1.0;
    for (int q = 1; q <= n; ++q) term *= inv_c / double(2 * q + 1);
    const double ic2 = inv_c * inv_c;
    for (int p = 0; n + 2 * p <= max_power; ++p) {
        if (p > 0) {
            r.c.push_back(0.0);
            term *= -ic2 / (2.0 * p * (2.0 * n + 2.0 * p + 1.0));
        }
        r.c.push_back(term);
    }
    return r;
}

// y_n(k / c) as a Laurent series in k, complete up to power max_power.
inline Laurent series_y_scaled(int n, double inv_c, int max_power) {
    Laurent r;
    r.lo = -n - 1;
    r.exact_to = max_power;
    double term = -1.0 / inv_c;
    for (int q = 1; q <= n; ++q) term *= double(2 * q - 1) / inv_c;
    const double ic2 = inv_c * inv_c;
    for (int p = 0; -n - 1 + 2 * p <= max_power; ++p) {
        if (p > 0) {
            r.c.push_back(0.0);
            term *= -ic2 / (2.0 * p * (2.0 * p - 1.0 - 2.0 * n));
        }
        r.c.push_back(term);
    }
    return r;
}

}  // namespace minnaert::detail
