#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ulam/seq.hpp"

namespace ulam {

// Maximal run of consecutive integers in the sequence.
struct Interval {
    u64 lo;
    u64 hi;
    bool operator==(const Interval&) const = default;
};

std::vector<Interval> intervals(const UlamSequence& seq);

// Periodic block: v belongs iff start <= v <= end and
// pattern[(v - start) % period] == '1'. pattern[0] is always '1' and end is
// always a member.
struct PeriodicBlock {
    u64 start;
    u64 end;
    std::uint32_t period;
    std::string pattern;  // '0'/'1' string of length `period`
    bool operator==(const PeriodicBlock&) const = default;

    bool is_isolated() const { return start == end; }
};

struct DecomposeOptions {
    std::uint32_t max_period = 64;
    std::uint32_t min_reps = 3;  // full pattern repetitions required to open a block
};

// Greedy left-to-right cover of the membership indicator restricted to
// [lo, hi]. At each uncovered member position the smallest period whose
// pattern repeats at least min_reps times is chosen and extended maximally;
// if none fits, the position becomes an isolated block.
std::vector<PeriodicBlock> decompose_periodic(
    const UlamSequence& seq, u64 lo, u64 hi, const DecomposeOptions& opts = {});

// Same algorithm over an arbitrary indicator (used by tests and the fitter).
std::vector<PeriodicBlock> decompose_periodic_indicator(
    const std::function<bool(u64)>& member, u64 lo, u64 hi,
    const DecomposeOptions& opts = {});

// One block of an affine family: at parameter N it occupies
// [m*N + p, k*N + r] with the stated pattern.
struct AffineBlock {
    std::int64_t m;
    std::int64_t p;
    std::int64_t k;
    std::int64_t r;
    std::uint32_t period;
    std::string pattern;
    bool isolated;
    bool operator==(const AffineBlock&) const = default;
};

// Affine description of the family U(a, N) on [1, C*N] for N >= base with
// N congruent to c modulo L.
struct AffineBlockModel {
    u64 a;
    std::uint32_t L;
    std::uint32_t c;
    std::uint32_t C;
    u64 base;
    std::vector<AffineBlock> blocks;
};

struct FitOptions {
    std::uint32_t max_modulus = 24;
    DecomposeOptions decompose;
};

// Fits block starts/ends as integer-slope affine functions of N across the
// supplied sequences (same a, at least two distinct N, each examined to at
// least C*N). Throws FitError when blocks cannot be matched or slopes are
// not integral.
AffineBlockModel fit_affine_blocks(const std::vector<const UlamSequence*>& seqs,
                                   std::uint32_t C, const FitOptions& opts = {});

// Set described by the model at parameter N, restricted to [1, C*N].
std::vector<u64> eval_model(const AffineBlockModel& model, u64 N);

std::string model_to_json(const AffineBlockModel& model);
AffineBlockModel model_from_json(const std::string& text);

// Per-interval result of the near-affine endpoint check.
struct RigidityRow {
    std::int64_t m;
    std::int64_t p;
    double eps_n;        // lo residual at n
    double delta_n;      // hi residual at n
    double eps_prev;     // lo residual at n-1 under the same coefficients
    double delta_prev;
    bool pass;
};

struct RigidityReport {
    u64 n;
    std::size_t M;
    double B;
    double eps;
    double delta;
    bool threshold_ok;  // n > 4*max(eps, delta) - B + 4
    std::vector<RigidityRow> rows;
    bool all_pass;
};

// Checks that the first M interval endpoints of U(1,n-1) and U(1,n) are
// (N + B) * integer plus a residual below eps/delta, with coefficients
// rounded from the n endpoints and shared by both sequences.
RigidityReport check_rigidity(const UlamSequence& prev, const UlamSequence& cur,
                              std::size_t M, double B, double eps, double delta);

// a_i = x_j + x_k + c with |c| <= 2, where x is the lo endpoints (from_ends
// false) or the hi endpoints (from_ends true). Indices are 1-based.
struct EndpointWitness {
    bool from_ends;
    std::size_t j;
    std::size_t k;
    int c;
};

std::optional<EndpointWitness> recursive_endpoint_witness(const UlamSequence& seq,
                                                          std::size_t i);

}  // namespace ulam
