#pragma once

#include <compare>
#include <vector>

#include "plab/dimension.hpp"
#include "plab/partition.hpp"

namespace plab {

// Standard filling: entries 1..n, strictly increasing along rows and down
// columns. Stored as rows of entries; shape is implied.
class StandardTableau {
public:
    static StandardTableau from_rows(std::vector<std::vector<int>> rows) {
        StandardTableau t;
        t.rows_ = std::move(rows);
        t.validate();
        return t;
    }

    // Builds the tableau recording a saturated chain from the one-cell
    // diagram (or from the empty diagram, if included).
    static StandardTableau from_path(const std::vector<Partition>& path) {
        std::size_t start = 0;
        if (!path.empty() && path[0].empty()) start = 1;
        if (path.size() <= start) throw validation_error("path must reach a nonempty diagram");
        if (path[start].n() != 1) throw validation_error("path must start at the one-cell diagram");
        StandardTableau t;
        t.rows_ = {{1}};
        for (std::size_t i = start + 1; i < path.size(); ++i) {
            const Partition& prev = path[i - 1];
            const Partition& next = path[i];
            if (next.n() != prev.n() + 1 || !next.contains(prev))
                throw validation_error("path step " + std::to_string(i) + " is not a covering");
            int entry = static_cast<int>(next.n());
            int grew = -1;
            for (int r = 0; r < next.rows(); ++r)
                if (next.part(r) != prev.part(r)) { grew = r; break; }
            if (grew == static_cast<int>(t.rows_.size()))
                t.rows_.push_back({entry});
            else
                t.rows_[grew].push_back(entry);
        }
        t.validate();
        return t;
    }

    const std::vector<std::vector<int>>& rows() const { return rows_; }

    int size() const {
        int n = 0;
        for (const auto& r : rows_) n += static_cast<int>(r.size());
        return n;
    }

    Partition shape() const {
        std::vector<int> parts;
        parts.reserve(rows_.size());
        for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
        return Partition(std::move(parts));
    }

    int entry(int r, int c) const { return rows_[r][c]; }

    Cell cell_of(int entry) const {
        for (int r = 0; r < static_cast<int>(rows_.size()); ++r)
            for (int c = 0; c < static_cast<int>(rows_[r].size()); ++c)
                if (rows_[r][c] == entry) return {r, c};
        throw validation_error("entry " + std::to_string(entry) + " not present");
    }

    // Sub-tableau of entries 1..k; rows are increasing, so each row keeps a
    // prefix and the result is standard.
    StandardTableau prefix(int k) const {
        if (k < 1 || k > size()) throw validation_error("prefix length out of range");
        std::vector<std::vector<int>> rows;
        for (const auto& r : rows_) {
            std::vector<int> keep;
            for (int e : r)
                if (e <= k) keep.push_back(e);
            if (keep.empty()) break;
            rows.push_back(std::move(keep));
        }
        return from_rows(std::move(rows));
    }

    // The chain of diagrams the entries trace out, from one cell to shape().
    std::vector<Partition> path() const {
        int n = size();
        std::vector<Partition> out;
        out.reserve(n);
        std::vector<int> parts;
        for (int e = 1; e <= n; ++e) {
            Cell c = cell_of(e);
            if (c.row == static_cast<int>(parts.size()))
                parts.push_back(1);
            else
                ++parts[c.row];
            out.push_back(Partition(parts));
        }
        return out;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (r) s += ',';
            s += '[';
            for (std::size_t c = 0; c < rows_[r].size(); ++c) {
                if (c) s += ',';
                s += std::to_string(rows_[r][c]);
            }
            s += ']';
        }
        return s + "]";
    }

    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
    friend auto operator<=>(const StandardTableau& a, const StandardTableau& b) {
        return a.rows_ <=> b.rows_;
    }

private:
    StandardTableau() = default;

    void validate() const {
        if (rows_.empty()) throw validation_error("tableau must have at least one cell");
        std::vector<int> lens;
        for (const auto& r : rows_) {
            if (r.empty()) throw validation_error("tableau rows must be nonempty");
            lens.push_back(static_cast<int>(r.size()));
        }
        Partition shape{lens};  // throws unless weakly decreasing and positive
        long long n = shape.n();
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (const auto& r : rows_)
            for (int e : r) {
                if (e < 1 || e > n || seen[e]) throw validation_error("entries must be a permutation of 1..n");
                seen[e] = true;
            }
        for (std::size_t r = 0; r < rows_.size(); ++r)
            for (std::size_t c = 0; c < rows_[r].size(); ++c) {
                if (c + 1 < rows_[r].size() && rows_[r][c] >= rows_[r][c + 1])
                    throw validation_error("rows must increase left to right");
                if (r + 1 < rows_.size() && c < rows_[r + 1].size() && rows_[r][c] >= rows_[r + 1][c])
                    throw validation_error("columns must increase top to bottom");
            }
    }

    std::vector<std::vector<int>> rows_;
};

// All standard fillings with k cells, in lexicographic order of the row data.
// Grows as the number of chains in the first k levels, so capped by prefix_k.
inline std::vector<StandardTableau> enumerate_tableaux(int k) {
    require_cap(k, global_caps().prefix_k, "prefix_k");
    if (k < 1) throw validation_error("tableau size must be positive");
    std::vector<std::vector<Partition>> chains = {{Partition({1})}};
    for (int step = 1; step < k; ++step) {
        std::vector<std::vector<Partition>> next;
        for (const auto& chain : chains)
            for (const Partition& up : covers_up(chain.back())) {
                auto extended = chain;
                extended.push_back(up);
                next.push_back(std::move(extended));
            }
        chains = std::move(next);
    }
    std::vector<StandardTableau> out;
    out.reserve(chains.size());
    for (const auto& chain : chains) out.push_back(StandardTableau::from_path(chain));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace plab
