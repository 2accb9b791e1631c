#include "ulam/regularity.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include <json.hpp>

#include "ulam/errors.hpp"

namespace ulam {

ParityWindow s_window(const UlamSequence& seq, std::uint32_t l, u64 k) {
    if (l < 2) throw std::invalid_argument("window length l must be at least 2");
    if (k % 2 == 0) throw std::invalid_argument("window anchor k must be odd");
    if (k + 2 * u64(l - 2) > seq.max_value_examined())
        throw std::out_of_range("window extends beyond examined values");

    ParityWindow w;
    w.l = l;
    w.k = k;
    w.bits.reserve(l - 1);
    for (std::uint32_t i = 0; i + 1 < l; ++i)
        w.bits.push_back(seq.contains(k + 2 * u64(i)) ? '1' : '0');
    return w;
}

void Certificate::validate() const {
    SeqParams check{a, b};  // a < b, positive
    (void)check;
    if (l < 2) throw std::invalid_argument("certificate needs l >= 2");
    if (p % 2 == 0 || q % 2 == 0)
        throw std::invalid_argument("certificate anchors p, q must be odd");
    if (p >= q) throw std::invalid_argument("certificate needs p < q");
    if (q < 2 * u64(l)) throw std::invalid_argument("certificate needs q >= 2l");
    if (b >= 2 * u64(l) - 2)
        throw std::invalid_argument("certificate needs b < 2l - 2");
}

std::vector<u64> even_terms(const UlamSequence& seq, u64 lo, u64 hi) {
    std::vector<u64> out;
    if (lo > hi) return out;
    if (hi > seq.max_value_examined())
        throw std::out_of_range("even-term range beyond examined values");
    const auto& terms = seq.terms();
    auto it = std::lower_bound(terms.begin(), terms.end(), lo);
    for (; it != terms.end() && *it <= hi; ++it)
        if (*it % 2 == 0) out.push_back(*it);
    return out;
}

CertificateCheck verify_certificate_on(const UlamSequence& seq,
                                       const Certificate& cert) {
    cert.validate();
    if (seq.params().a != cert.a || seq.params().b != cert.b)
        throw std::invalid_argument("certificate is for a different sequence");
    const u64 band_hi = 3 * cert.q - cert.p;
    if (seq.max_value_examined() < band_hi)
        throw std::out_of_range("sequence not examined up to 3q - p");

    CertificateCheck check;
    check.cert = cert;
    check.window_match = s_window(seq, cert.l, cert.p).bits ==
                         s_window(seq, cert.l, cert.q).bits;
    auto evens = even_terms(seq, 2 * u64(cert.l), band_hi);
    check.even_free = evens.empty();
    if (evens.size() > 16) evens.resize(16);
    check.even_violations = std::move(evens);
    check.verified = check.window_match && check.even_free;
    check.max_value_checked = band_hi;
    return check;
}

CertificateCheck verify_certificate(const Certificate& cert,
                                    const GenLimits& limits) {
    cert.validate();
    UlamSequence seq = generate(SeqParams{cert.a, cert.b},
                                Bound::by_value(3 * cert.q - cert.p), limits);
    return verify_certificate_on(seq, cert);
}

std::optional<Certificate> search_certificate(u64 a, u64 b,
                                              const CertSearchOptions& opts,
                                              const GenLimits& limits) {
    if (opts.value_budget < b) return std::nullopt;
    UlamSequence seq =
        generate(SeqParams{a, b}, Bound::by_value(opts.value_budget), limits);
    const u64 budget = seq.max_value_examined();
    auto evens = even_terms(seq, 1, budget);

    // smallest l admitted by the b < 2l - 2 invariant
    std::uint32_t l_floor = std::uint32_t(b / 2 + 2);
    for (std::uint32_t l = std::max(opts.l_min, l_floor); l <= opts.l_max; ++l) {
        // Any even term at or above 2l kills every band reaching it, so the
        // band may not extend past the first such term.
        u64 cap = budget;
        auto ev = std::lower_bound(evens.begin(), evens.end(), 2 * u64(l));
        if (ev != evens.end()) cap = std::min(cap, *ev - 1);
        if (4 * u64(l) > cap) continue;  // even q = 2l cannot fit a band

        std::unordered_map<std::string, std::vector<u64>> seen;
        const u64 k_hi = std::min(budget - 2 * u64(l - 2), cap / 2 + 1);
        for (u64 k = 1; k <= k_hi; k += 2) {
            std::string bits;
            bits.reserve(l - 1);
            for (std::uint32_t i = 0; i + 1 < l; ++i)
                bits.push_back(seq.contains(k + 2 * u64(i)) ? '1' : '0');

            auto& anchors = seen[bits];
            if (k >= 2 * u64(l) && !anchors.empty()) {
                u64 p = anchors.back();  // largest match gives the shortest band
                if (3 * k - p <= cap) {
                    Certificate cand{a, b, l, p, k};
                    if (verify_certificate_on(seq, cand).verified) return cand;
                }
            }
            anchors.push_back(k);
        }
    }
    return std::nullopt;
}

std::optional<PeriodReport> difference_period(const UlamSequence& seq,
                                              std::size_t min_confirm) {
    const auto& terms = seq.terms();
    if (min_confirm == 0) throw std::invalid_argument("min_confirm must be positive");
    if (terms.size() < 2) return std::nullopt;

    std::vector<u64> diff(terms.size() - 1);
    for (std::size_t i = 0; i + 1 < terms.size(); ++i)
        diff[i] = terms[i + 1] - terms[i];
    const std::size_t D = diff.size();

    for (std::size_t P = 1; P <= D / min_confirm; ++P) {
        // smallest s with diff[i] == diff[i+P] for all i >= s
        std::size_t s = D - P;
        while (s > 0 && diff[s - 1] == diff[s - 1 + P]) --s;
        if (s == D - P) continue;  // not a single cross-checked entry
        if ((D - s) / P >= min_confirm)
            return PeriodReport{s, P, terms.size()};
    }
    return std::nullopt;
}

std::string certificate_check_to_json(const CertificateCheck& check) {
    nlohmann::json j;
    j["a"] = check.cert.a;
    j["b"] = check.cert.b;
    j["l"] = check.cert.l;
    j["p"] = check.cert.p;
    j["q"] = check.cert.q;
    j["verified"] = check.verified;
    j["max_value_checked"] = check.max_value_checked;
    return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Certificate cert;
    cert.a = j.at("a").get<u64>();
    cert.b = j.at("b").get<u64>();
    cert.l = j.at("l").get<std::uint32_t>();
    cert.p = j.at("p").get<u64>();
    cert.q = j.at("q").get<u64>();
    return cert;
}

}  // namespace ulam
