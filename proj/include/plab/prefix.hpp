#pragma once

#include <map>
#include <utility>
#include <vector>

#include "plab/dimension.hpp"
#include "plab/measures.hpp"
#include "plab/partition.hpp"
#include "plab/rational.hpp"
#include "plab/tableau.hpp"

namespace plab {

// Number of saturated chains from inner to outer inside the containment
// order; zero when inner is not contained in outer.
inline BigInt skew_path_count(const Partition& inner, const Partition& outer) {
    require_cap(outer.n(), global_caps().enumeration, "enumeration");
    if (!outer.contains(inner)) return 0;
    std::map<Partition, BigInt> memo;
    auto count = [&](auto&& self, const Partition& nu) -> BigInt {
        if (nu == outer) return 1;
        auto it = memo.find(nu);
        if (it != memo.end()) return it->second;
        BigInt total = 0;
        for (const Partition& up : covers_up(nu))
            if (outer.contains(up)) total += self(self, up);
        memo.emplace(nu, total);
        return total;
    };
    return count(count, inner);
}

// Distribution of the k-cell prefix of a uniform random standard filling of
// the given shape, over all k-cell standard tableaux (weight zero when the
// prefix shape does not fit).
struct PrefixDistribution {
    Partition shape;
    int k = 0;
    std::vector<std::pair<StandardTableau, Rational>> weights;  // lex order of tableaux
};

inline PrefixDistribution induced_prefix_distribution(const Partition& shape, int k) {
    if (shape.empty()) throw validation_error("prefix distribution needs a nonempty shape");
    if (k < 1 || k > shape.n())
        throw validation_error("prefix length must lie between 1 and the cell count");
    PrefixDistribution dist;
    dist.shape = shape;
    dist.k = k;
    BigInt total = dim_hook(shape);
    for (const StandardTableau& t : enumerate_tableaux(k))
        dist.weights.emplace_back(t, Rational(skew_path_count(t.shape(), shape), total));
    return dist;
}

// Total variation distance between the induced prefix distribution and the
// tableau weights dim(shape)/k! of level k.
inline Rational prefix_distance_exact(const Partition& shape, int k) {
    PrefixDistribution dist = induced_prefix_distribution(shape, k);
    BigInt kf = factorial(k);
    Rational acc = 0;
    for (const auto& [t, w] : dist.weights) {
        Rational ref(dim_hook(t.shape()), kf);
        acc += abs(w - ref);
    }
    return acc / 2;
}

inline double prefix_distance(const Partition& shape, int k) {
    return to_double(prefix_distance_exact(shape, k));
}

}  // namespace plab
