#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "plab/config.hpp"
#include "plab/rational.hpp"
#include "plab/tableau.hpp"

namespace plab {

// Poset elements are coordinate tuples; the arity is fixed per poset.
using PosetElement = std::vector<int>;

class PosetHandle {
public:
    virtual ~PosetHandle() = default;
    virtual std::string name() const = 0;
    virtual int arity() const = 0;
    virtual bool in_domain(const PosetElement& e) const = 0;
    virtual PosetElement minimal() const = 0;
    // Strict order relation a < b.
    virtual bool precedes(const PosetElement& a, const PosetElement& b) const = 0;
    virtual std::vector<PosetElement> lower_covers(const PosetElement& e) const = 0;
    virtual std::vector<PosetElement> upper_covers(const PosetElement& e) const = 0;
};

// Z_+^d with the componentwise order; d = 2 gives Young diagrams as ideals.
class LatticeZd : public PosetHandle {
public:
    explicit LatticeZd(int d) : d_(d) {
        if (d < 2 || d > global_caps().poset_dim)
            throw validation_error("lattice dimension must lie between 2 and " +
                                   std::to_string(global_caps().poset_dim));
    }

    std::string name() const override { return "z" + std::to_string(d_); }
    int arity() const override { return d_; }

    bool in_domain(const PosetElement& e) const override {
        if (static_cast<int>(e.size()) != d_) return false;
        for (int x : e)
            if (x < 0) return false;
        return true;
    }

    PosetElement minimal() const override { return PosetElement(d_, 0); }

    bool precedes(const PosetElement& a, const PosetElement& b) const override {
        check(a);
        check(b);
        bool strict = false;
        for (int i = 0; i < d_; ++i) {
            if (a[i] > b[i]) return false;
            if (a[i] < b[i]) strict = true;
        }
        return strict;
    }

    std::vector<PosetElement> lower_covers(const PosetElement& e) const override {
        check(e);
        std::vector<PosetElement> out;
        for (int i = 0; i < d_; ++i)
            if (e[i] > 0) {
                PosetElement f = e;
                --f[i];
                out.push_back(std::move(f));
            }
        return out;
    }

    std::vector<PosetElement> upper_covers(const PosetElement& e) const override {
        check(e);
        std::vector<PosetElement> out;
        for (int i = 0; i < d_; ++i) {
            PosetElement f = e;
            ++f[i];
            out.push_back(std::move(f));
        }
        return out;
    }

private:
    void check(const PosetElement& e) const {
        if (!in_domain(e)) throw validation_error("element does not belong to " + name());
    }

    int d_;
};

inline std::shared_ptr<PosetHandle> lattice_z2() { return std::make_shared<LatticeZd>(2); }
inline std::shared_ptr<PosetHandle> lattice_zd(int d) { return std::make_shared<LatticeZd>(d); }

// Planar poset on pairs (x, y), truncated to a width*width window so cover
// sets stay finite: (u, v) < (x, y) iff v < y, or v = y = 0 and u < x.
// Within the bottom row it is a chain; every element of a higher row sits
// above the whole bottom row and is incomparable to the rest of its own row.
// Every ideal with at most width elements is a bottom-row prefix, so each
// size up to the width admits exactly one monotone numbering and that
// numbering fills the bottom row: no numbering spreads mass off one row.
class NonrigidPoset : public PosetHandle {
public:
    explicit NonrigidPoset(int width = 64) : width_(width) {
        if (width < 2) throw validation_error("width must be at least 2");
    }

    std::string name() const override { return "nonrigid"; }
    int arity() const override { return 2; }
    int width() const { return width_; }

    bool in_domain(const PosetElement& e) const override {
        return e.size() == 2 && e[0] >= 0 && e[0] < width_ && e[1] >= 0 && e[1] < width_;
    }

    PosetElement minimal() const override { return {0, 0}; }

    bool precedes(const PosetElement& a, const PosetElement& b) const override {
        check(a);
        check(b);
        if (a[1] != b[1]) return a[1] < b[1];
        return a[1] == 0 && a[0] < b[0];
    }

    std::vector<PosetElement> lower_covers(const PosetElement& e) const override {
        check(e);
        const int x = e[0], y = e[1];
        if (y == 0) return x > 0 ? std::vector<PosetElement>{{x - 1, 0}} : std::vector<PosetElement>{};
        if (y == 1) return {{width_ - 1, 0}};
        std::vector<PosetElement> out;
        for (int u = 0; u < width_; ++u) out.push_back({u, y - 1});
        return out;
    }

    std::vector<PosetElement> upper_covers(const PosetElement& e) const override {
        check(e);
        const int x = e[0], y = e[1];
        std::vector<PosetElement> out;
        if (y == 0) {
            if (x + 1 < width_) return {{x + 1, 0}};
            for (int u = 0; u < width_; ++u) out.push_back({u, 1});
            return out;
        }
        if (y + 1 < width_)
            for (int u = 0; u < width_; ++u) out.push_back({u, y + 1});
        return out;
    }

private:
    void check(const PosetElement& e) const {
        if (!in_domain(e)) throw validation_error("element does not belong to the nonrigid window");
    }

    int width_;
};

inline std::shared_ptr<PosetHandle> nonrigid_poset(int width = 64) {
    return std::make_shared<NonrigidPoset>(width);
}

// phi(1), ..., phi(n) listed in numbering order; the image must be an ideal
// and the numbering must respect the order.
struct MonotoneNumbering {
    std::vector<PosetElement> order;

    int size() const { return static_cast<int>(order.size()); }

    friend bool operator==(const MonotoneNumbering&, const MonotoneNumbering&) = default;
    friend auto operator<=>(const MonotoneNumbering& a, const MonotoneNumbering& b) {
        return a.order <=> b.order;
    }
};

// Throws with a reason unless the sequence is a monotone numbering of an
// ideal. Cover-closure implies full downward closure by induction.
inline void validate_numbering(const PosetHandle& poset, const MonotoneNumbering& m) {
    if (m.order.empty()) throw validation_error("numbering must be nonempty");
    std::set<PosetElement> before;
    for (std::size_t i = 0; i < m.order.size(); ++i) {
        const PosetElement& e = m.order[i];
        if (!poset.in_domain(e)) throw validation_error("element outside poset at position " + std::to_string(i + 1));
        if (before.count(e)) throw validation_error("repeated element at position " + std::to_string(i + 1));
        for (const PosetElement& low : poset.lower_covers(e))
            if (!before.count(low))
                throw validation_error("element at position " + std::to_string(i + 1) +
                                       " is missing a predecessor; image is not an ideal");
        before.insert(e);
    }
}

inline bool is_monotone_numbering(const PosetHandle& poset, const MonotoneNumbering& m) {
    try {
        validate_numbering(poset, m);
        return true;
    } catch (const validation_error&) {
        return false;
    }
}

// All monotone numberings of length n, in lexicographic order of the element
// sequences. Growth is factorial-like, hence the cap.
inline std::vector<MonotoneNumbering> enumerate_numberings(const PosetHandle& poset, int n) {
    require_cap(n, global_caps().numberings, "numberings");
    if (n < 1) throw validation_error("numbering length must be positive");
    std::vector<MonotoneNumbering> out;
    std::vector<PosetElement> chosen;
    std::set<PosetElement> ideal;
    std::set<PosetElement> frontier{poset.minimal()};

    auto extend = [&](auto&& self) -> void {
        if (static_cast<int>(chosen.size()) == n) {
            out.push_back(MonotoneNumbering{chosen});
            return;
        }
        const std::vector<PosetElement> snapshot(frontier.begin(), frontier.end());
        for (const PosetElement& e : snapshot) {
            chosen.push_back(e);
            ideal.insert(e);
            frontier.erase(e);
            std::vector<PosetElement> added;
            for (const PosetElement& up : poset.upper_covers(e)) {
                if (ideal.count(up) || frontier.count(up)) continue;
                bool ready = true;
                for (const PosetElement& low : poset.lower_covers(up))
                    if (!ideal.count(low)) {
                        ready = false;
                        break;
                    }
                if (ready && frontier.insert(up).second) added.push_back(up);
            }
            self(self);
            for (const PosetElement& up : added) frontier.erase(up);
            frontier.insert(e);
            ideal.erase(e);
            chosen.pop_back();
        }
    };
    extend(extend);
    return out;
}

// Union of a prefix of rows (fixed first coordinate) and a prefix of columns
// (fixed second coordinate); prefixes keep the set downward closed. "whole"
// accepts everything.
struct IdealSpec {
    bool whole = false;
    int row_prefix = 0;  // rows 0..row_prefix-1
    int col_prefix = 0;

    bool contains(const PosetElement& e) const {
        if (whole) return true;
        if (e.size() < 2) throw validation_error("ideal test needs planar elements");
        return e[0] < row_prefix || e[1] < col_prefix;
    }

    static IdealSpec parse(const std::string& text) {
        IdealSpec spec;
        if (text == "whole") {
            spec.whole = true;
            return spec;
        }
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t stop = text.find(';', pos);
            if (stop == std::string::npos) stop = text.size();
            std::string clause = text.substr(pos, stop - pos);
            pos = stop + 1;
            auto eq = clause.find('=');
            if (eq == std::string::npos) throw validation_error("ideal clause needs rows=... or cols=...: " + clause);
            std::string key = clause.substr(0, eq);
            std::string list = clause.substr(eq + 1);
            int count = 0;
            std::size_t lp = 0;
            while (lp < list.size()) {
                std::size_t comma = list.find(',', lp);
                if (comma == std::string::npos) comma = list.size();
                std::string item = list.substr(lp, comma - lp);
                lp = comma + 1;
                if (item.empty()) throw validation_error("empty index in ideal spec");
                int v = std::stoi(item);
                if (v != count)
                    throw validation_error("ideal indices must form a prefix 0,1,...: " + clause);
                ++count;
            }
            if (key == "rows")
                spec.row_prefix = count;
            else if (key == "cols")
                spec.col_prefix = count;
            else
                throw validation_error("unknown ideal clause: " + key);
        }
        return spec;
    }

    std::string to_string() const {
        if (whole) return "whole";
        std::string s;
        auto emit = [&s](const char* key, int prefix) {
            if (!s.empty()) s += ';';
            s += key;
            s += '=';
            for (int i = 0; i < prefix; ++i) {
                if (i) s += ',';
                s += std::to_string(i);
            }
        };
        emit("rows", row_prefix);
        emit("cols", col_prefix);
        return s;
    }
};

// Fraction of the numbering's elements that fall inside the ideal.
inline double ideal_density(const MonotoneNumbering& m, const IdealSpec& ideal) {
    if (m.order.empty()) throw validation_error("numbering must be nonempty");
    long long count = 0;
    for (const PosetElement& e : m.order)
        if (ideal.contains(e)) ++count;
    return static_cast<double>(count) / static_cast<double>(m.order.size());
}

inline long long ideal_count(const MonotoneNumbering& m, const IdealSpec& ideal) {
    long long count = 0;
    for (const PosetElement& e : m.order)
        if (ideal.contains(e)) ++count;
    return count;
}

struct CentralityWitness {
    MonotoneNumbering a, b;  // same ideal, different weights
    Rational weight_a, weight_b;
};

struct CentralityReport {
    bool holds = true;
    std::optional<CentralityWitness> witness;
};

// A weighting is central when numberings of the same ideal share the same
// weight. Weights must be nonnegative, over equal-length numberings, and sum
// to one.
inline CentralityReport check_centrality(const PosetHandle& poset,
                                         const std::vector<std::pair<MonotoneNumbering, Rational>>& weights) {
    if (weights.empty()) throw validation_error("centrality check needs at least one numbering");
    const int n = weights.front().first.size();
    Rational total = 0;
    for (const auto& [m, w] : weights) {
        if (m.size() != n) throw validation_error("numberings must share one length");
        validate_numbering(poset, m);
        if (w < 0) throw validation_error("weights must be nonnegative");
        total += w;
    }
    if (total != 1) throw validation_error("weights must sum to one, got " + rational_string(total));

    std::map<std::vector<PosetElement>, std::pair<MonotoneNumbering, Rational>> seen;
    for (const auto& [m, w] : weights) {
        std::vector<PosetElement> ideal = m.order;
        std::sort(ideal.begin(), ideal.end());
        auto [it, fresh] = seen.emplace(std::move(ideal), std::make_pair(m, w));
        if (!fresh && it->second.second != w) {
            CentralityReport report;
            report.holds = false;
            report.witness = CentralityWitness{it->second.first, m, it->second.second, w};
            return report;
        }
    }
    return CentralityReport{};
}

// Bridge to growth samples: a standard tableau numbers the cells of Z_+^2,
// entry k at cell (r, c) becoming phi(k) = (r, c).
inline MonotoneNumbering numbering_from_tableau(const StandardTableau& t) {
    MonotoneNumbering m;
    m.order.resize(t.size());
    const auto& rows = t.rows();
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        for (int c = 0; c < static_cast<int>(rows[r].size()); ++c)
            m.order[rows[r][c] - 1] = {r, c};
    return m;
}

}  // namespace plab
