#pragma once

#include <cmath>
#include <map>
#include <vector>

#include "plab/partition.hpp"
#include "plab/rational.hpp"

namespace plab {

// Hook lengths in row-major cell order: arm + leg + 1.
inline std::vector<int> hook_lengths(const Partition& p) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(p.n()));
    const std::vector<int> conj = p.conjugate().parts();
    for (int r = 0; r < p.rows(); ++r)
        for (int c = 0; c < p.part(r); ++c)
            out.push_back(p.part(r) - c + conj[c] - r - 1);
    return out;
}

// Number of standard fillings via the hook quotient. The hook product
// divides n! exactly, so a single division at the end stays in integers.
inline BigInt dim_hook(const Partition& p) {
    if (p.empty()) return 1;
    BigInt num = factorial(p.n());
    BigInt den = 1;
    for (int h : hook_lengths(p)) den *= h;
    return num / den;
}

// Independent oracle: counts saturated chains from the empty diagram by the
// downward recursion. Exponentially many states, so capped.
inline BigInt dim_paths(const Partition& p) {
    require_cap(p.n(), global_caps().oracle, "oracle");
    std::map<Partition, BigInt> memo;
    auto count = [&](auto&& self, const Partition& q) -> BigInt {
        if (q.empty()) return 1;
        auto it = memo.find(q);
        if (it != memo.end()) return it->second;
        BigInt total = 0;
        for (const Partition& d : covers_down(q)) total += self(self, d);
        memo.emplace(q, total);
        return total;
    };
    return count(count, p);
}

// log of the filling count, usable far beyond exact range.
inline double log_dim(const Partition& p) {
    if (p.empty()) return 0.0;
    double s = std::lgamma(static_cast<double>(p.n()) + 1.0);
    for (int h : hook_lengths(p)) s -= std::log(static_cast<double>(h));
    return s;
}

}  // namespace plab
