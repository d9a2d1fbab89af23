#include "mukailat/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace mukailat {

bool ldl_decompose(const RatMat& q, RatMat& r, RatVec& d) {
    const std::size_t n = q.size();
    r.assign(n, RatVec(n, Rat(0)));
    d.assign(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        Rat di = q[i][i];
        for (std::size_t k = 0; k < i; ++k) di -= d[k] * r[k][i] * r[k][i];
        if (di <= 0) return false;
        d[i] = di;
        r[i][i] = 1;
        for (std::size_t j = i + 1; j < n; ++j) {
            Rat rij = q[i][j];
            for (std::size_t k = 0; k < i; ++k) rij -= d[k] * r[k][i] * r[k][j];
            r[i][j] = rij / di;
        }
    }
    return true;
}

bool is_positive_definite(const RatMat& q) {
    RatMat r;
    RatVec d;
    return ldl_decompose(q, r, d);
}

namespace {

// Integer range { x : (x + c)^2 <= b }. Empty when b < 0 or when the
// interval [-c - sqrt(b), -c + sqrt(b)] contains no integer.
bool square_bound_range(const Rat& c, const Rat& b, Int& lo, Int& hi) {
    if (b < 0) return false;
    const Int s = floor_sqrt(b);
    const auto inside = [&](const Int& x) {
        const Rat t = Rat(x) + c;
        return t * t <= b;
    };
    // The true endpoints lie within these candidates; sweep exactly. The
    // sweeps are O(1): either an integer is inside within a couple of
    // steps, or the interval is shorter than 1 and s == 0.
    const Int limit_hi = rat_floor(-c) + s + 1;
    lo = rat_ceil(-c) - s - 1;
    while (lo <= limit_hi && !inside(lo)) ++lo;
    if (lo > limit_hi) return false;
    hi = limit_hi;
    while (!inside(hi)) --hi;
    return lo <= hi;
}

// Assigns coordinates from the last down; called with level >= 1.
void enumerate_level(const RatMat& r, const RatVec& d, std::size_t level, const Rat& budget,
                     IntVec& x, std::vector<IntVec>& out) {
    const std::size_t i = level - 1;
    Rat c(0);
    for (std::size_t j = level; j < r.size(); ++j) c += r[i][j] * Rat(x[j]);
    Int lo, hi;
    if (!square_bound_range(c, budget / d[i], lo, hi)) return;
    for (Int xi = lo; xi <= hi; ++xi) {
        x[i] = xi;
        const Rat t = Rat(xi) + c;
        const Rat rest = budget - d[i] * t * t;
        if (i == 0)
            out.push_back(x);
        else
            enumerate_level(r, d, i, rest, x, out);
    }
}

}  // namespace

std::vector<IntVec> enumerate_quadratic_leq(const RatMat& q, const Rat& bound) {
    const std::size_t n = q.size();
    RatMat r;
    RatVec d;
    if (!ldl_decompose(q, r, d))
        throw std::domain_error("enumeration requires a positive definite form");
    std::vector<IntVec> out;
    if (bound < 0) return out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    IntVec x(n, Int(0));
    enumerate_level(r, d, n, bound, x, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mukailat
