#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ulam/seq.hpp"

namespace ulam {

// Densest window of the given length whose start lies above 2n+2.
struct WindowMax {
    std::size_t max_count;
    u64 window_lo;
    u64 window_len;
};

// window_len of 0 means the default 3n. Requires a = 1 and at least one
// full window between 2n+3 and the examined bound.
WindowMax window_max(const UlamSequence& seq, u64 window_len = 0);

struct TruncatedDensity {
    std::size_t M;
    double value;  // members of the first M intervals divided by the M-th hi
};

struct DensityReport {
    u64 n;
    u64 x_max;
    u64 count;
    double ratio;
    double bound;  // (n+1)/(3n)
    std::vector<TruncatedDensity> truncated;
};

// Counting density of U(1,n) at x_max; with M set, also the truncated
// densities for 1..M intervals.
DensityReport density(const UlamSequence& seq, u64 x_max,
                      std::optional<std::size_t> M = {});

// A term pair (lo, lo+k) with k <= n forbids terms in
// [lo+k+n, lo+2n]; a violation records a term found in such a band at a
// position where the two witness representations are genuinely distinct.
struct SieveViolation {
    u64 pair_lo;
    u64 k;
    u64 value;  // term found inside the forbidden band
};

std::vector<SieveViolation> sieve_check(const UlamSequence& seq);

// For U(1,2): every term t > 16 satisfies |[t,t+8] cap U| <= 3 or
// |[t,t+16] cap U| <= 6.
struct DichotomyViolation {
    u64 t;
    std::size_t count9;
    std::size_t count17;
};

std::vector<DichotomyViolation> u12_window_check(const UlamSequence& seq);

struct Histogram {
    double lambda;
    std::size_t skip;
    std::vector<u64> bins;
    u64 total;                 // values binned (after skip)
    double middle_third_mass;  // fraction of residues in [lambda/3, 2*lambda/3)
};

// Residues value mod lambda, binned uniformly over [0, lambda). The first
// `skip` entries are ignored. bins >= 3.
Histogram mod_histogram(std::span<const u64> values, double lambda,
                        std::size_t bins, std::size_t skip = 0);
Histogram mod_histogram(const UlamSequence& seq, double lambda,
                        std::size_t bins, std::size_t skip = 0);

}  // namespace ulam
