#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "plab/config.hpp"

namespace plab {

struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Integer partition = Young diagram, rows weakly decreasing, no trailing zeros.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
                throw validation_error("not a partition: parts must be weakly decreasing and positive");
        }
        n_ = std::accumulate(parts_.begin(), parts_.end(), 0LL);
    }

    const std::vector<int>& parts() const { return parts_; }
    long long n() const { return n_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // Row length with the convention part(r) = 0 beyond the last row.
    int part(int r) const { return r >= 0 && r < rows() ? parts_[r] : 0; }

    bool contains(const Cell& c) const {
        return c.row >= 0 && c.col >= 0 && c.col < part(c.row);
    }

    // Containment of diagrams, not the ordering used for sorting.
    bool contains(const Partition& other) const {
        if (other.rows() > rows()) return false;
        for (int r = 0; r < other.rows(); ++r)
            if (other.parts_[r] > parts_[r]) return false;
        return true;
    }

    Partition conjugate() const {
        std::vector<int> t(parts_.empty() ? 0 : parts_[0], 0);
        for (int len : parts_)
            for (int c = 0; c < len; ++c) ++t[c];
        Partition out;
        out.parts_ = std::move(t);
        out.n_ = n_;
        return out;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(),
                                                      b.parts_.begin(), b.parts_.end());
    }

private:
    std::vector<int> parts_;
    long long n_ = 0;
};

// Inverse of Partition::to_string, accepting optional whitespace: "[3,1]".
inline Partition partition_from_string(const std::string& s) {
    std::size_t i = 0, end = s.size();
    auto skip = [&] { while (i < end && (s[i] == ' ' || s[i] == '\t')) ++i; };
    skip();
    if (i >= end || s[i] != '[') throw validation_error("partition text must look like [3,1]: " + s);
    ++i;
    std::vector<int> parts;
    skip();
    if (i < end && s[i] == ']') ++i;
    else {
        for (;;) {
            skip();
            std::size_t j = i;
            while (j < end && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '-')) ++j;
            if (j == i) throw validation_error("partition text must look like [3,1]: " + s);
            parts.push_back(std::stoi(s.substr(i, j - i)));
            i = j;
            skip();
            if (i < end && s[i] == ',') { ++i; continue; }
            if (i < end && s[i] == ']') { ++i; break; }
            throw validation_error("partition text must look like [3,1]: " + s);
        }
    }
    skip();
    if (i != end) throw validation_error("trailing characters after partition: " + s);
    return Partition(std::move(parts));
}

// Cells whose addition keeps the diagram a partition, top row first.
inline std::vector<Cell> addable_corners(const Partition& p) {
    std::vector<Cell> out;
    for (int r = 0; r <= p.rows(); ++r)
        if (r == 0 || p.part(r) < p.part(r - 1)) out.push_back({r, p.part(r)});
    return out;
}

// Cells whose removal keeps the diagram a partition, top row first.
inline std::vector<Cell> removable_corners(const Partition& p) {
    std::vector<Cell> out;
    for (int r = 0; r < p.rows(); ++r)
        if (p.part(r) > p.part(r + 1)) out.push_back({r, p.part(r) - 1});
    return out;
}

inline Partition add_cell(const Partition& p, const Cell& c) {
    if (c.row < 0 || c.row > p.rows() || c.col != p.part(c.row) ||
        (c.row > 0 && p.part(c.row) >= p.part(c.row - 1)))
        throw validation_error("cell " + std::to_string(c.row) + "," + std::to_string(c.col) +
                               " is not addable to " + p.to_string());
    std::vector<int> parts = p.parts();
    if (c.row == p.rows())
        parts.push_back(1);
    else
        ++parts[c.row];
    return Partition(std::move(parts));
}

inline Partition remove_cell(const Partition& p, const Cell& c) {
    if (!p.contains(c) || c.col != p.part(c.row) - 1 || p.part(c.row) <= p.part(c.row + 1))
        throw validation_error("cell is not a removable corner of " + p.to_string());
    std::vector<int> parts = p.parts();
    --parts[c.row];
    return Partition(std::move(parts));
}

// Upward covers in containment order: one cell added. Ordered by row of the
// added cell, which coincides with reverse-lexicographic order of the results.
inline std::vector<Partition> covers_up(const Partition& p) {
    std::vector<Partition> out;
    for (const Cell& c : addable_corners(p)) out.push_back(add_cell(p, c));
    return out;
}

inline std::vector<Partition> covers_down(const Partition& p) {
    std::vector<Partition> out;
    for (const Cell& c : removable_corners(p)) out.push_back(remove_cell(p, c));
    return out;
}

// All partitions of n in reverse-lexicographic order: [n] first, [1^n] last.
inline std::vector<Partition> enumerate_level(long long n) {
    require_cap(n, global_caps().enumeration, "enumeration");
    if (n < 0) throw validation_error("level must be nonnegative");
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> p{static_cast<int>(n)};
    for (;;) {
        out.push_back(Partition(p));
        int k = static_cast<int>(p.size()) - 1;
        while (k >= 0 && p[k] == 1) --k;
        if (k < 0) break;
        long long rem = static_cast<long long>(p.size()) - 1 - k + 1;  // freed cells
        --p[k];
        p.resize(k + 1);
        while (rem > 0) {
            int t = static_cast<int>(std::min<long long>(p[k], rem));
            p.push_back(t);
            rem -= t;
        }
    }
    return out;
}

}  // namespace plab
