#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace plab {

// Raised when a desk-scale cap would be exceeded; carries the cap's name so
// callers can report which limit to raise.
class resource_limit_error : public std::runtime_error {
public:
    resource_limit_error(const std::string& what, std::string cap_name, long long cap)
        : std::runtime_error(what), cap_name_(std::move(cap_name)), cap_(cap) {}

    const std::string& cap_name() const { return cap_name_; }
    long long cap() const { return cap_; }

private:
    std::string cap_name_;
    long long cap_;
};

class validation_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Desk-scale limits. None of these are mathematical constants; every one can
// be raised at runtime (CLI --cap-<name>) at the cost of time and memory.
struct Caps {
    int enumeration = 60;           // max n for full level enumeration
    int oracle = 40;                // max n for the path-counting dimension oracle
    int level = 30;                 // max graded-graph level for mass/ratio sweeps
    long long sampling = 100000;    // max target size of a growth sample
    int exact_threshold = 200;      // growth sampling uses exact weights up to this target size
    int coherence = 12;             // max level for the coherence sweep
    int numberings = 10;            // max length for numbering enumeration
    int minor_order = 6;            // max Toeplitz minor order
    int minor_window = 14;          // max Toeplitz index window
    int series_order = 64;          // max power-series truncation order
    int poset_dim = 4;              // max d for the Z_+^d lattices
    int prefix_k = 8;               // max prefix length for induced distributions
};

inline Caps& global_caps() {
    static Caps caps;
    return caps;
}

inline void require_cap(long long value, long long cap, const std::string& name) {
    if (value > cap) {
        throw resource_limit_error("requested size " + std::to_string(value) +
                                       " exceeds cap '" + name + "' = " + std::to_string(cap),
                                   name, cap);
    }
}

// Default seed for every randomized entry point; --seed 0 requests entropy.
inline constexpr std::uint64_t kDefaultSeed = 0x5eedc0deULL;

}  // namespace plab
