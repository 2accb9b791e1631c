#include "ulam/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ulam/structure.hpp"

namespace ulam {

namespace {

// terms within [lo, hi], by binary search over the sorted term list
std::size_t count_in(const std::vector<u64>& terms, u64 lo, u64 hi) {
    auto first = std::lower_bound(terms.begin(), terms.end(), lo);
    auto last = std::upper_bound(first, terms.end(), hi);
    return std::size_t(last - first);
}

}  // namespace

WindowMax window_max(const UlamSequence& seq, u64 window_len) {
    if (seq.params().a != 1)
        throw std::invalid_argument("window bound applies to U(1,n)");
    const u64 n = seq.params().b;
    const u64 len = window_len == 0 ? 3 * n : window_len;
    const u64 first_lo = 2 * n + 3;
    const u64 hi = seq.max_value_examined();
    if (first_lo + len - 1 > hi)
        throw std::invalid_argument("no full window above 2n+2 in range");

    const u64 last_lo = hi - len + 1;
    const auto& terms = seq.terms();

    WindowMax best{0, first_lo, len};
    auto consider = [&](u64 lo) {
        std::size_t c = count_in(terms, lo, lo + len - 1);
        if (c > best.max_count) best = {c, lo, len};
    };
    // The densest window can be slid right until it starts on a term (or
    // hits the end of the examined range) without losing members.
    for (u64 t : terms)
        if (t >= first_lo && t <= last_lo) consider(t);
    consider(last_lo);
    return best;
}

DensityReport density(const UlamSequence& seq, u64 x_max,
                      std::optional<std::size_t> M) {
    if (x_max > seq.max_value_examined())
        throw std::out_of_range("density cutoff beyond examined values");

    DensityReport rep;
    rep.n = seq.params().b;
    rep.x_max = x_max;
    rep.count = count_in(seq.terms(), 1, x_max);
    rep.ratio = x_max == 0 ? 0.0 : double(rep.count) / double(x_max);
    rep.bound = double(rep.n + 1) / double(3 * rep.n);

    if (M) {
        auto iv = intervals(seq);
        u64 covered = 0;
        for (std::size_t i = 0; i < std::min(*M, iv.size()); ++i) {
            covered += iv[i].hi - iv[i].lo + 1;
            rep.truncated.push_back({i + 1, double(covered) / double(iv[i].hi)});
        }
    }
    return rep;
}

std::vector<SieveViolation> sieve_check(const UlamSequence& seq) {
    if (seq.params().a != 1)
        throw std::invalid_argument("sieve bands apply to U(1,n)");
    const u64 n = seq.params().b;
    const u64 hi = seq.max_value_examined();
    std::vector<SieveViolation> out;

    for (u64 u : seq.terms()) {
        if (u <= n) continue;  // bands need the full [n,2n] segment below them
        for (u64 k = 1; k <= n; ++k) {
            if (u + k > hi || !seq.contains(u + k)) continue;
            for (u64 i = 0; i + k <= n; ++i) {
                u64 x = u + k + n + i;
                if (x > hi) break;
                // x = (u+k) + (n+i) = u + (n+k+i); both pairs must be
                // genuinely distinct pairs, and distinct from each other,
                // for the double-representation argument to apply.
                if (u + k == n + i || u == n + k + i || u == n + i) continue;
                if (seq.contains(x)) out.push_back({u, k, x});
            }
        }
    }
    return out;
}

std::vector<DichotomyViolation> u12_window_check(const UlamSequence& seq) {
    if (seq.params().a != 1 || seq.params().b != 2)
        throw std::invalid_argument("window dichotomy applies to U(1,2)");
    const auto& terms = seq.terms();
    const u64 hi = seq.max_value_examined();

    std::vector<DichotomyViolation> out;
    for (u64 t : terms) {
        if (t <= 16) continue;  // bootstrap constants of the argument
        if (t + 16 > hi) break;
        std::size_t c9 = count_in(terms, t, t + 8);
        if (c9 <= 3) continue;
        std::size_t c17 = count_in(terms, t, t + 16);
        if (c17 > 6) out.push_back({t, c9, c17});
    }
    return out;
}

Histogram mod_histogram(std::span<const u64> values, double lambda,
                        std::size_t bins, std::size_t skip) {
    if (bins < 3) throw std::invalid_argument("need at least 3 bins");
    if (!(lambda > 0)) throw std::invalid_argument("modulus must be positive");
    if (skip >= values.size() && !values.empty())
        throw std::invalid_argument("skip swallows every value");

    Histogram h;
    h.lambda = lambda;
    h.skip = skip;
    h.bins.assign(bins, 0);
    h.total = 0;

    const double third_lo = lambda / 3.0;
    const double third_hi = 2.0 * lambda / 3.0;
    u64 middle = 0;
    for (std::size_t i = skip; i < values.size(); ++i) {
        double r = std::fmod(double(values[i]), lambda);
        auto bin = std::size_t(r / lambda * double(bins));
        if (bin >= bins) bin = bins - 1;
        ++h.bins[bin];
        ++h.total;
        if (r >= third_lo && r < third_hi) ++middle;
    }
    h.middle_third_mass = h.total == 0 ? 0.0 : double(middle) / double(h.total);
    return h;
}

Histogram mod_histogram(const UlamSequence& seq, double lambda,
                        std::size_t bins, std::size_t skip) {
    return mod_histogram(std::span<const u64>(seq.terms()), lambda, bins, skip);
}

}  // namespace ulam
