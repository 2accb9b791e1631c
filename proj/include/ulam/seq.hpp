#pragma once

#include <cstdint>
#include <vector>

#include "ulam/bitvec.hpp"

namespace ulam {

using u64 = std::uint64_t;

// Number of ways a value can be written as a sum of two distinct terms,
// saturated at two.
enum class RepCount : std::uint8_t { Zero = 0, One = 1, Many = 2 };

constexpr RepCount add_saturating(RepCount x, RepCount y) {
    unsigned s = static_cast<unsigned>(x) + static_cast<unsigned>(y);
    return s >= 2 ? RepCount::Many : static_cast<RepCount>(s);
}

// Starting pair of the sequence; requires 0 < a < b.
struct SeqParams {
    u64 a;
    u64 b;
    SeqParams(u64 a_, u64 b_);
};

// Generation stops either at a value ceiling (all terms <= limit) or after
// a fixed number of terms. limit must be >= 2 either way; for ByValue it
// must also be >= b so the defining pair fits.
struct Bound {
    enum class Kind { ByValue, ByCount };
    Kind kind;
    u64 limit;

    static Bound by_value(u64 v);
    static Bound by_count(u64 n);
};

struct GenLimits {
    // Cap on the total bit-vector state (three vectors over the value range).
    u64 max_state_bytes = u64(2) << 30;
};

// A generated sequence together with the representation counts of every
// value up to max_value_examined(). Every value at or below that bound has
// its final count: all terms that could contribute a pair were admitted.
class UlamSequence {
  public:
    const SeqParams& params() const { return params_; }
    const std::vector<u64>& terms() const { return terms_; }
    u64 max_value_examined() const { return max_value_; }

    bool contains(u64 v) const;       // throws std::out_of_range past examined range
    RepCount rep_count(u64 v) const;  // likewise

  private:
    UlamSequence(SeqParams p) : params_(p) {}

    SeqParams params_;
    std::vector<u64> terms_;
    u64 max_value_ = 0;
    BitVec member_;
    BitVec one_;
    BitVec two_;

    friend class Generator;
};

UlamSequence generate(const SeqParams& params, const Bound& bound,
                      const GenLimits& limits = {});

// Rebuilds a sequence from a known term prefix (validating it against the
// membership rule as it replays), then extends to the requested bound.
UlamSequence resume(const SeqParams& params, const Bound& bound,
                    const std::vector<u64>& known_terms,
                    const GenLimits& limits = {});

}  // namespace ulam
