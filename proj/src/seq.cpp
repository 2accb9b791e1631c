#include "ulam/seq.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ulam/errors.hpp"

namespace ulam {

SeqParams::SeqParams(u64 a_, u64 b_) : a(a_), b(b_) {
    if (a == 0 || a >= b)
        throw std::invalid_argument("sequence parameters require 0 < a < b");
}

Bound Bound::by_value(u64 v) {
    if (v < 2) throw std::invalid_argument("value bound must be >= 2");
    return {Kind::ByValue, v};
}

Bound Bound::by_count(u64 n) {
    if (n < 2) throw std::invalid_argument("count bound must be >= 2");
    return {Kind::ByCount, n};
}

bool UlamSequence::contains(u64 v) const {
    if (v > max_value_) throw std::out_of_range("value beyond examined range");
    return member_.test(v);
}

RepCount UlamSequence::rep_count(u64 v) const {
    if (v > max_value_) throw std::out_of_range("value beyond examined range");
    if (two_.test(v)) return RepCount::Many;
    return one_.test(v) ? RepCount::One : RepCount::Zero;
}

// The kernel keeps three packed bit vectors over the value range:
//   member  - values admitted as terms
//   one     - values with exactly one representation so far
//   two     - values with two or more
// Admitting a term t contributes one new pair {v, t} for every member v < t,
// so the whole update is the member vector shifted left by t, folded into
// one/two word by word. Pairs whose sum would land beyond the allocated
// range are deferred: every range doubling replays exactly the sums that
// fall in the fresh window, so each pair is counted exactly once.
class Generator {
  public:
    Generator(const SeqParams& p, const GenLimits& lim) : seq_(p), lim_(lim) {}

    UlamSequence run(const Bound& bound, const std::vector<u64>* known) {
        const u64 a = seq_.params_.a;
        const u64 b = seq_.params_.b;

        u64 target_value = 0;  // ByValue
        u64 target_count = 0;  // ByCount
        if (bound.kind == Bound::Kind::ByValue) {
            if (bound.limit < b)
                throw std::invalid_argument("value bound below the second term");
            target_value = bound.limit;
            set_range(target_value + 1);
        } else {
            target_count = bound.limit;
            set_range(std::max<u64>(4 * (b + 1), 4096));
        }

        auto done = [&] {
            return bound.kind == Bound::Kind::ByCount &&
                   seq_.terms_.size() >= target_count;
        };

        std::size_t replayed = 0;
        if (known && !known->empty()) {
            if (known->size() < 2 || (*known)[0] != a || (*known)[1] != b)
                throw CacheError("cached prefix does not start with a, b");
            admit(a);
            admit(b);
            replayed = 2;
            while (replayed < known->size() && !done()) {
                u64 t = (*known)[replayed];
                u64 prev = seq_.terms_.back();
                if (t <= prev) throw CacheError("cached prefix is not ascending");
                if (bound.kind == Bound::Kind::ByValue && t > target_value) break;
                while (t >= range_) grow();
                // the value must be the next one with a unique representation
                u64 cand = seq_.one_.find_next_set(prev + 1);
                if (cand != t)
                    throw CacheError("cached prefix violates the sequence rule at " +
                                     std::to_string(t));
                admit(t);
                ++replayed;
            }
        } else {
            admit(a);
            admit(b);
        }

        while (!done()) {
            u64 x = seq_.one_.find_next_set(seq_.terms_.back() + 1);
            if (bound.kind == Bound::Kind::ByValue) {
                if (x == BitVec::npos || x > target_value) break;
            } else {
                while (x == BitVec::npos) {
                    grow();
                    x = seq_.one_.find_next_set(seq_.terms_.back() + 1);
                }
            }
            admit(x);
        }

        seq_.max_value_ = bound.kind == Bound::Kind::ByValue ? target_value
                                                             : seq_.terms_.back();
        seq_.member_.resize(seq_.max_value_ + 1);
        seq_.one_.resize(seq_.max_value_ + 1);
        seq_.two_.resize(seq_.max_value_ + 1);
        return std::move(seq_);
    }

  private:
    void set_range(u64 bits) {
        u64 range = (bits + 63) & ~u64(63);
        u64 bytes = 3 * (range / 8);
        if (bytes > lim_.max_state_bytes)
            throw BudgetError("bit-vector state of " + std::to_string(bytes) +
                              " bytes exceeds the cap of " +
                              std::to_string(lim_.max_state_bytes));
        range_ = range;
        seq_.member_.resize(range);
        seq_.one_.resize(range);
        seq_.two_.resize(range);
    }

    void grow() {
        u64 old_range = range_;
        set_range(range_ * 2);
        // replay the pair sums that land in [old_range, range_)
        for (u64 u : seq_.terms_) {
            if (2 * u < old_range) continue;  // all its pairs already summed below
            add_sums(u, old_range - u, std::min(u, range_ - u));
        }
    }

    // fold bits into one/two at the given word
    void apply(std::size_t j, u64 x) {
        if (!x) return;
        u64& one = seq_.one_.words()[j];
        u64& two = seq_.two_.words()[j];
        two |= one & x;
        one = (one | x) & ~two;
    }

    // count the sums t + v for member v in [vlo, vhi)
    void add_sums(u64 t, u64 vlo, u64 vhi) {
        if (vhi <= vlo) return;
        const u64* mw = seq_.member_.words();
        std::size_t w0 = vlo >> 6;
        std::size_t w1 = (vhi - 1) >> 6;
        std::size_t dw = t >> 6;
        unsigned ds = t & 63;
        for (std::size_t i = w0; i <= w1; ++i) {
            u64 w = mw[i];
            if (i == w0 && (vlo & 63)) w &= ~u64(0) << (vlo & 63);
            if (i == w1 && (vhi & 63)) w &= (u64(1) << (vhi & 63)) - 1;
            if (!w) continue;
            if (ds == 0) {
                apply(dw + i, w);
            } else {
                apply(dw + i, w << ds);
                apply(dw + i + 1, w >> (64 - ds));
            }
        }
    }

    void admit(u64 t) {
        add_sums(t, 0, std::min(t, range_ - t));
        seq_.member_.set(t);
        seq_.terms_.push_back(t);
    }

    UlamSequence seq_;
    GenLimits lim_;
    u64 range_ = 0;
};

UlamSequence generate(const SeqParams& params, const Bound& bound,
                      const GenLimits& limits) {
    return Generator(params, limits).run(bound, nullptr);
}

UlamSequence resume(const SeqParams& params, const Bound& bound,
                    const std::vector<u64>& known_terms, const GenLimits& limits) {
    return Generator(params, limits).run(bound, &known_terms);
}

}  // namespace ulam
