#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ulam/seq.hpp"

namespace ulam {

// Membership bits of k, k+2, ..., k+2(l-2): the odd-position window of
// length l-1 anchored at odd k.
struct ParityWindow {
    std::uint32_t l;
    u64 k;
    std::string bits;  // '0'/'1', length l-1
};

ParityWindow s_window(const UlamSequence& seq, std::uint32_t l, u64 k);

// Eventual-oddness certificate for U(a,b): odd p < q, q >= 2l, a < b < 2l-2.
// If the windows at p and q agree and no even term lies in [2l, 3q-p], the
// sequence has no even term at or above 2l at all.
struct Certificate {
    u64 a;
    u64 b;
    std::uint32_t l;
    u64 p;
    u64 q;

    void validate() const;  // throws std::invalid_argument
};

struct CertificateCheck {
    Certificate cert;
    bool window_match;
    bool even_free;
    bool verified;  // window_match && even_free
    std::vector<u64> even_violations;  // first few offenders, if any
    u64 max_value_checked;
};

CertificateCheck verify_certificate(const Certificate& cert,
                                    const GenLimits& limits = {});

// Same check against an already generated sequence covering 3q - p.
CertificateCheck verify_certificate_on(const UlamSequence& seq,
                                       const Certificate& cert);

struct CertSearchOptions {
    std::uint32_t l_min = 2;
    std::uint32_t l_max = 64;
    u64 value_budget = 100000;
};

// Sweeps l upward, indexing windows by content at ascending odd k, and
// returns the first certificate whose full check passes within the value
// budget. nullopt when the budget is exhausted without a find.
std::optional<Certificate> search_certificate(u64 a, u64 b,
                                              const CertSearchOptions& opts,
                                              const GenLimits& limits = {});

// Even terms within [lo, hi]; empty range gives an empty list.
std::vector<u64> even_terms(const UlamSequence& seq, u64 lo, u64 hi);

// Eventual periodicity of the difference sequence terms[i+1] - terms[i].
struct PeriodReport {
    std::size_t preperiod;  // index into the difference sequence
    std::size_t period;
    std::size_t verified_terms;  // terms participating in the check
};

// Smallest period (with its minimal preperiod) such that the differences
// repeat through the end of the sequence, with at least min_confirm full
// period repetitions confirmed. nullopt if no period qualifies.
std::optional<PeriodReport> difference_period(const UlamSequence& seq,
                                              std::size_t min_confirm = 50);

std::string certificate_check_to_json(const CertificateCheck& check);
Certificate certificate_from_json(const std::string& text);

}  // namespace ulam
