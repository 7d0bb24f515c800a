#pragma once

#include <string>
#include <vector>

#include "plab/dimension.hpp"
#include "plab/graded_graph.hpp"
#include "plab/growth.hpp"
#include "plab/measures.hpp"
#include "plab/partition.hpp"
#include "plab/prefix.hpp"
#include "plab/totpos.hpp"
#include "plab/transfer.hpp"

namespace plab {

struct SelfTestItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Quick invariant sweep used by the CLI; each item names a witness when it
// fails. Budgeted for a few seconds total.
inline std::vector<SelfTestItem> run_selftest() {
    std::vector<SelfTestItem> items;
    auto record = [&items](const std::string& name, bool pass, const std::string& detail) {
        items.push_back({name, pass, detail});
    };

    {
        bool pass = true;
        std::string detail = "hook counts match path counts for n <= 10";
        for (int n = 0; n <= 10 && pass; ++n)
            for (const Partition& p : enumerate_level(n))
                if (dim_hook(p) != dim_paths(p)) {
                    pass = false;
                    detail = "mismatch at " + p.to_string();
                    break;
                }
        record("dimension-oracle", pass, detail);
    }

    {
        bool pass = true;
        std::string detail = "sum of squared dims equals n! for n <= 12";
        for (int n = 0; n <= 12 && pass; ++n) {
            BigInt total = 0;
            for (const Partition& p : enumerate_level(n)) {
                BigInt d = dim_hook(p);
                total += d * d;
            }
            if (total != factorial(n)) {
                pass = false;
                detail = "level " + std::to_string(n) + " off";
                for (const Partition& p : enumerate_level(n))
                    if (p.n() <= global_caps().oracle && dim_hook(p) != dim_paths(p)) {
                        detail += "; witness " + p.to_string();
                        break;
                    }
            }
        }
        record("square-sum", pass, detail);
    }

    {
        bool pass = true;
        std::string detail = "extension weights are coherent for n <= 8";
        for (int n = 1; n <= 8 && pass; ++n) {
            CoherenceReport r = check_coherence(n);
            if (!r.holds) {
                pass = false;
                detail = "witness " + r.witness->to_string();
            }
        }
        record("coherence", pass, detail);
    }

    {
        bool pass = true;
        std::string detail = "forward and backward step weights are stochastic for n <= 9";
        for (int n = 0; n <= 9 && pass; ++n)
            for (const Partition& p : enumerate_level(n)) {
                Rational up = 0;
                for (const Partition& q : covers_up(p)) up += transition_prob(p, q);
                if (up != 1) {
                    pass = false;
                    detail = "forward weights at " + p.to_string() + " sum to " + rational_string(up);
                    break;
                }
                if (n > 0) {
                    Rational down = 0;
                    for (const Partition& q : covers_down(p)) down += cotransition_prob(p, q);
                    if (down != 1) {
                        pass = false;
                        detail = "backward weights at " + p.to_string() + " sum to " + rational_string(down);
                        break;
                    }
                }
            }
        record("stochastic-steps", pass, detail);
    }

    {
        PlancherelGraphReport r = is_plancherel_graph(*young_graph_adapter(), 10);
        std::string detail = "dim ratios match mass ratios through level 10";
        if (!r.holds)
            detail = "witness " + r.witness->vertex + " at level " + std::to_string(r.witness->level);
        record("mass-ratio", r.holds, detail);
    }

    {
        GrowthSample a = sample_growth(60, kDefaultSeed, 7);
        GrowthSample b = sample_growth(60, kDefaultSeed, 7);
        GrowthSample c = sample_growth(260, kDefaultSeed, 7);
        GrowthSample d = sample_growth(260, kDefaultSeed, 7);
        bool pass = a.tableau == b.tableau && c.tableau == d.tableau &&
                    sample_growth_shape(60, kDefaultSeed, 7) == a.tableau.shape() &&
                    sample_growth_shape(260, kDefaultSeed, 7) == c.tableau.shape();
        record("sampler-replay", pass,
               pass ? "same (seed, trial) reproduces the same tableau in both modes"
                    : "replay mismatch");
    }

    {
        bool pass = true;
        std::string detail = "one transfer step keeps tableaux standard and shrinks shape by a cover";
        for (long long trial = 0; trial < 25 && pass; ++trial) {
            GrowthSample s = sample_growth(40, kDefaultSeed, trial);
            StandardTableau moved = transfer_step(s.tableau);  // validates on construction
            Partition before = s.tableau.shape();
            bool covered = false;
            for (const Partition& q : covers_down(before))
                if (q == moved.shape()) covered = true;
            if (!covered) {
                pass = false;
                detail = "shape " + before.to_string() + " moved outside its covers";
            }
        }
        record("transfer-step", pass, detail);
    }

    {
        Rational tv = prefix_distance_exact(Partition({2, 1}), 2);
        Rational one = 0;
        for (const auto& [t, w] : induced_prefix_distribution(Partition({4, 3, 1}), 3).weights) one += w;
        bool pass = tv == 0 && one == 1;
        record("prefix-weights", pass,
               pass ? "prefix weights normalize; the two-cell prefix of [2,1] is unbiased"
                    : "prefix weight identity failed");
    }

    {
        CoefficientSequence f = character_gf({Rational(1)}, 16);
        bool pass = true;
        for (int k = 0; k <= 16 && pass; ++k)
            if (f.at(k) != Rational(BigInt(1), factorial(k))) pass = false;
        record("series-exp", pass,
               pass ? "generating function of the unit values matches 1/k!" : "series mismatch");
    }

    return items;
}

}  // namespace plab
