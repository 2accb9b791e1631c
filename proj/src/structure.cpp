#include "ulam/structure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ulam/errors.hpp"

namespace ulam {

std::vector<Interval> intervals(const UlamSequence& seq) {
    std::vector<Interval> out;
    for (u64 t : seq.terms()) {
        if (!out.empty() && out.back().hi + 1 == t)
            out.back().hi = t;
        else
            out.push_back({t, t});
    }
    return out;
}

std::vector<PeriodicBlock> decompose_periodic_indicator(
    const std::function<bool(u64)>& member, u64 lo, u64 hi,
    const DecomposeOptions& opts) {
    if (lo > hi) throw std::invalid_argument("empty decomposition range");
    if (opts.max_period == 0 || opts.min_reps == 0)
        throw std::invalid_argument("decomposition options must be positive");

    std::vector<PeriodicBlock> blocks;
    u64 v = lo;
    while (true) {
        while (v <= hi && !member(v)) ++v;
        if (v > hi) break;

        // smallest period confirmed by min_reps full repetitions inside [lo, hi]
        std::uint32_t period = 0;
        for (std::uint32_t l = 1; l <= opts.max_period; ++l) {
            u64 need = u64(opts.min_reps) * l;
            if (v + need - 1 > hi) break;
            bool ok = true;
            for (u64 i = l; i < need && ok; ++i)
                if (member(v + i) != member(v + i % l)) ok = false;
            if (ok) {
                period = l;
                break;
            }
        }

        if (period == 0) {
            blocks.push_back({v, v, 1, "1"});
            ++v;
            continue;
        }

        std::string pattern;
        for (std::uint32_t i = 0; i < period; ++i)
            pattern.push_back(member(v + i) ? '1' : '0');

        u64 end = v + u64(opts.min_reps) * period - 1;
        while (end + 1 <= hi &&
               member(end + 1) == (pattern[(end + 1 - v) % period] == '1'))
            ++end;
        while (!member(end)) --end;  // end on a member

        blocks.push_back({v, end, period, pattern});
        v = end + 1;
    }
    return blocks;
}

std::vector<PeriodicBlock> decompose_periodic(const UlamSequence& seq, u64 lo,
                                              u64 hi, const DecomposeOptions& opts) {
    if (hi > seq.max_value_examined())
        throw std::out_of_range("decomposition range beyond examined values");
    return decompose_periodic_indicator(
        [&seq](u64 v) { return seq.contains(v); }, lo, hi, opts);
}

AffineBlockModel fit_affine_blocks(const std::vector<const UlamSequence*>& seqs,
                                   std::uint32_t C, const FitOptions& opts) {
    if (C == 0) throw std::invalid_argument("range multiplier C must be positive");
    if (seqs.size() < 2)
        throw std::invalid_argument("fit needs at least two sequences");

    std::vector<const UlamSequence*> sorted = seqs;
    std::sort(sorted.begin(), sorted.end(), [](auto* x, auto* y) {
        return x->params().b < y->params().b;
    });
    const u64 a = sorted.front()->params().a;
    for (auto* s : sorted)
        if (s->params().a != a)
            throw std::invalid_argument("fit requires a common first parameter");
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i]->params().b == sorted[i - 1]->params().b)
            throw std::invalid_argument("fit needs at least two distinct N");

    std::vector<u64> Ns;
    std::vector<std::vector<PeriodicBlock>> decomps;
    for (auto* s : sorted) {
        u64 N = s->params().b;
        if (s->max_value_examined() < C * N)
            throw std::invalid_argument("sequence examined range is below C*N");
        Ns.push_back(N);
        decomps.push_back(decompose_periodic(*s, 1, C * N, opts.decompose));
    }

    std::ostringstream diag;
    const std::size_t nblocks = decomps.front().size();
    for (std::size_t j = 1; j < decomps.size(); ++j)
        if (decomps[j].size() != nblocks) {
            diag << "block count " << decomps[j].size() << " at N=" << Ns[j]
                 << " vs " << nblocks << " at N=" << Ns[0];
            throw FitError("block lists do not match: " + diag.str());
        }

    // The modulus claim is the largest L consistent with the sampled N
    // spacing: L = gcd of the successive differences, class c = N0 mod L.
    u64 L = 0;
    for (std::size_t j = 1; j < Ns.size(); ++j)
        L = std::gcd(L, Ns[j] - Ns[j - 1]);
    if (L > opts.max_modulus) {
        diag << "implied modulus " << L << " exceeds the searched range "
             << opts.max_modulus;
        throw FitError(diag.str());
    }

    AffineBlockModel model;
    model.a = a;
    model.L = std::uint32_t(L);
    model.c = std::uint32_t(Ns.front() % L);
    model.C = C;
    model.base = Ns.front();

    for (std::size_t i = 0; i < nblocks; ++i) {
        const PeriodicBlock& b0 = decomps[0][i];
        for (std::size_t j = 1; j < decomps.size(); ++j) {
            const PeriodicBlock& bj = decomps[j][i];
            if (bj.period != b0.period || bj.pattern != b0.pattern) {
                diag << "block " << i + 1 << ": pattern '" << b0.pattern
                     << "' at N=" << Ns[0] << " vs '" << bj.pattern
                     << "' at N=" << Ns[j];
                throw FitError("block patterns do not match: " + diag.str());
            }
        }

        auto fit_line = [&](auto endpoint, const char* what) {
            std::int64_t e0 = std::int64_t(endpoint(decomps[0][i]));
            std::int64_t e1 = std::int64_t(endpoint(decomps[1][i]));
            std::int64_t dN = std::int64_t(Ns[1] - Ns[0]);
            std::int64_t de = e1 - e0;
            if (de % dN != 0 || de < 0) {
                diag << "block " << i + 1 << " " << what << " slope " << de << "/"
                     << dN << " is not a nonnegative integer";
                throw FitError(diag.str());
            }
            std::int64_t slope = de / dN;
            std::int64_t inter = e0 - slope * std::int64_t(Ns[0]);
            for (std::size_t j = 2; j < decomps.size(); ++j) {
                if (std::int64_t(endpoint(decomps[j][i])) !=
                    slope * std::int64_t(Ns[j]) + inter) {
                    diag << "block " << i + 1 << " " << what
                         << " is not affine across all N";
                    throw FitError(diag.str());
                }
            }
            return std::pair(slope, inter);
        };

        auto [m, p] = fit_line([](const PeriodicBlock& b) { return b.start; }, "start");
        auto [k, r] = fit_line([](const PeriodicBlock& b) { return b.end; }, "end");
        model.blocks.push_back({m, p, k, r, b0.period, b0.pattern,
                                b0.start == b0.end});
    }

    // reject crossed block order at the fitted slopes
    eval_model(model, Ns.back());
    return model;
}

std::vector<u64> eval_model(const AffineBlockModel& model, u64 N) {
    if (N < model.base)
        throw std::invalid_argument("model evaluated below its base N");
    if (model.L != 0 && N % model.L != model.c)
        throw std::invalid_argument("model evaluated outside its congruence class");

    const u64 hi = u64(model.C) * N;
    std::vector<u64> out;
    u64 prev_end = 0;
    for (const AffineBlock& b : model.blocks) {
        std::int64_t s = b.m * std::int64_t(N) + b.p;
        std::int64_t e = b.k * std::int64_t(N) + b.r;
        if (s < 1 || e < s)
            throw FitError("model block degenerates at N=" + std::to_string(N));
        if (u64(s) <= prev_end)
            throw FitError("model blocks overlap at N=" + std::to_string(N));
        for (u64 v = u64(s); v <= std::min(u64(e), hi); ++v)
            if (b.pattern[(v - s) % b.period] == '1') out.push_back(v);
        prev_end = u64(e);
    }
    return out;
}

std::string model_to_json(const AffineBlockModel& model) {
    nlohmann::json j;
    j["a"] = model.a;
    j["L"] = model.L;
    j["c"] = model.c;
    j["C"] = model.C;
    j["N0"] = model.base;
    j["blocks"] = nlohmann::json::array();
    for (const AffineBlock& b : model.blocks) {
        j["blocks"].push_back({{"m", b.m},
                               {"p", b.p},
                               {"k", b.k},
                               {"r", b.r},
                               {"period", b.period},
                               {"pattern", b.pattern}});
    }
    return j.dump(2) + "\n";
}

AffineBlockModel model_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    AffineBlockModel model;
    model.a = j.at("a").get<u64>();
    model.L = j.at("L").get<std::uint32_t>();
    model.c = j.at("c").get<std::uint32_t>();
    model.C = j.at("C").get<std::uint32_t>();
    model.base = j.at("N0").get<u64>();
    for (const auto& jb : j.at("blocks")) {
        AffineBlock b;
        b.m = jb.at("m").get<std::int64_t>();
        b.p = jb.at("p").get<std::int64_t>();
        b.k = jb.at("k").get<std::int64_t>();
        b.r = jb.at("r").get<std::int64_t>();
        b.period = jb.at("period").get<std::uint32_t>();
        b.pattern = jb.at("pattern").get<std::string>();
        b.isolated = b.m == b.k && b.p == b.r;
        model.blocks.push_back(b);
    }
    return model;
}

RigidityReport check_rigidity(const UlamSequence& prev, const UlamSequence& cur,
                              std::size_t M, double B, double eps, double delta) {
    if (prev.params().a != 1 || cur.params().a != 1)
        throw std::invalid_argument("rigidity check applies to U(1,n)");
    const u64 n = cur.params().b;
    if (prev.params().b + 1 != n)
        throw std::invalid_argument("rigidity check needs consecutive n");
    if (M == 0) throw std::invalid_argument("M must be positive");

    auto iv_prev = intervals(prev);
    auto iv_cur = intervals(cur);
    if (iv_prev.size() < M || iv_cur.size() < M)
        throw std::invalid_argument(
            "fewer than M intervals available: " + std::to_string(iv_prev.size()) +
            " and " + std::to_string(iv_cur.size()));

    RigidityReport rep;
    rep.n = n;
    rep.M = M;
    rep.B = B;
    rep.eps = eps;
    rep.delta = delta;
    rep.threshold_ok = double(n) > 4.0 * std::max(eps, delta) - B + 4.0;
    rep.all_pass = true;

    const double dn = double(n) + B;
    const double dp = double(n - 1) + B;
    for (std::size_t i = 0; i < M; ++i) {
        auto round_coeff = [&](double x) {
            double q = x / dn;
            double fr = q - std::floor(q);
            if (std::abs(fr - 0.5) < 1e-9)
                throw FitError("coefficient rounding tie at interval " +
                               std::to_string(i + 1));
            return std::int64_t(std::llround(q));
        };
        std::int64_t m = round_coeff(double(iv_cur[i].lo));
        std::int64_t p = round_coeff(double(iv_cur[i].hi));

        RigidityRow row;
        row.m = m;
        row.p = p;
        row.eps_n = double(iv_cur[i].lo) - dn * double(m);
        row.delta_n = double(iv_cur[i].hi) - dn * double(p);
        row.eps_prev = double(iv_prev[i].lo) - dp * double(m);
        row.delta_prev = double(iv_prev[i].hi) - dp * double(p);
        row.pass = std::abs(row.eps_n) < eps && std::abs(row.eps_prev) < eps &&
                   std::abs(row.delta_n) < delta && std::abs(row.delta_prev) < delta;
        rep.all_pass = rep.all_pass && row.pass;
        rep.rows.push_back(row);
    }
    return rep;
}

std::optional<EndpointWitness> recursive_endpoint_witness(const UlamSequence& seq,
                                                          std::size_t i) {
    auto iv = intervals(seq);
    if (i < 2 || i > iv.size())
        throw std::invalid_argument("interval index out of range");

    const u64 target = iv[i - 1].lo;
    for (int c : {0, 1, -1, 2, -2}) {
        for (bool from_ends : {false, true}) {
            for (std::size_t j = 1; j < i; ++j) {
                for (std::size_t k = j; k < i; ++k) {
                    u64 x = from_ends ? iv[j - 1].hi : iv[j - 1].lo;
                    u64 y = from_ends ? iv[k - 1].hi : iv[k - 1].lo;
                    if (std::int64_t(x + y) + c == std::int64_t(target))
                        return EndpointWitness{from_ends, j, k, c};
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace ulam
