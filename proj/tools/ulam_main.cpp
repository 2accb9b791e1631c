// Command-line front end: sequence generation, structure reports,
// certificate checks, statistics, and 2D set tools.
//
// Exit codes: 0 success, 1 a checked property failed to verify, 2 usage or
// resource errors.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ulam/cache.hpp"
#include "ulam/errors.hpp"
#include "ulam/regularity.hpp"
#include "ulam/seq.hpp"
#include "ulam/stats.hpp"
#include "ulam/structure.hpp"
#include "ulam/svg.hpp"
#include "ulam/ulam2d.hpp"

namespace {

using ulam::u64;
using json = nlohmann::json;

struct Options {
    std::string cache_dir;
    std::string format;
    std::string out;
};

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + opt.out);
    f << text;
}

ulam::UlamSequence make_seq(const Options& opt, u64 a, u64 b, const ulam::Bound& bound) {
    if (std::gcd(a, b) > 1)
        std::cerr << "note: gcd(" << a << "," << b << ") > 1, this sequence is the gcd times "
                  << "the sequence of the reduced pair\n";
    ulam::SeqParams params{a, b};
    if (!opt.cache_dir.empty())
        return ulam::generate_cached(params, bound, opt.cache_dir);
    return ulam::generate(params, bound);
}

ulam::Bound bound_from(u64 count, u64 value, u64 default_value) {
    if (count && value) throw CLI::ValidationError("--count and --value are exclusive");
    if (count) return ulam::Bound::by_count(count);
    return ulam::Bound::by_value(value ? value : default_value);
}

json vec2_json(ulam::Vec2 v) { return json::array({v.x, v.y}); }

std::vector<ulam::Vec2> to_pairs(const std::vector<int>& flat) {
    std::vector<ulam::Vec2> out;
    for (std::size_t i = 0; i + 1 < flat.size(); i += 2)
        out.push_back({flat[i], flat[i + 1]});
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ulam sequence and Ulam set toolkit"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--cache-dir", opt.cache_dir, "Directory for sequence term caches")
        ->envname("ULAM_CACHE_DIR");

    std::function<int()> run;

    // gen a b --count N | --value V
    {
        auto* cmd = app.add_subcommand("gen", "Generate a sequence and print its terms");
        auto a = std::make_shared<u64>(0);
        auto b = std::make_shared<u64>(0);
        auto count = std::make_shared<u64>(0);
        auto value = std::make_shared<u64>(0);
        cmd->add_option("a", *a, "First term")->required();
        cmd->add_option("b", *b, "Second term")->required();
        cmd->add_option("--count", *count, "Stop after this many terms");
        cmd->add_option("--value", *value, "Stop at this value ceiling");
        cmd->add_option("--format", opt.format, "csv or json (default: one comma-separated line)")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", opt.out, "Write to a file instead of stdout");
        cmd->callback([&, a, b, count, value] {
            run = [&, a, b, count, value] {
                if (!*count && !*value) throw CLI::ValidationError("gen needs --count or --value");
                auto seq = make_seq(opt, *a, *b, bound_from(*count, *value, 0));
                if (opt.format == "csv") {
                    std::ostringstream os;
                    ulam::write_terms_csv(os, seq.terms());
                    emit(opt, os.str());
                } else if (opt.format == "json") {
                    json j{{"a", *a},
                           {"b", *b},
                           {"max_value_examined", seq.max_value_examined()},
                           {"terms", seq.terms()}};
                    emit(opt, j.dump(2) + "\n");
                } else {
                    std::ostringstream os;
                    for (std::size_t i = 0; i < seq.terms().size(); ++i)
                        os << (i ? "," : "") << seq.terms()[i];
                    emit(opt, os.str() + "\n");
                }
                return 0;
            };
        });
    }

    // intervals a b --value V
    {
        auto* cmd = app.add_subcommand("intervals", "Maximal runs of consecutive terms");
        auto a = std::make_shared<u64>(0);
        auto b = std::make_shared<u64>(0);
        auto value = std::make_shared<u64>(10000);
        cmd->add_option("a", *a, "First term")->required();
        cmd->add_option("b", *b, "Second term")->required();
        cmd->add_option("--value", *value, "Value ceiling");
        cmd->add_option("--format", opt.format, "csv (default) or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", opt.out, "Write to a file instead of stdout");
        cmd->callback([&, a, b, value] {
            run = [&, a, b, value] {
                auto seq = make_seq(opt, *a, *b, ulam::Bound::by_value(*value));
                auto iv = ulam::intervals(seq);
                if (opt.format == "json") {
                    json rows = json::array();
                    for (auto& r : iv) rows.push_back({{"lo", r.lo}, {"hi", r.hi}});
                    emit(opt, rows.dump(2) + "\n");
                } else {
                    std::ostringstream os;
                    os << "lo,hi\n";
                    for (auto& r : iv) os << r.lo << "," << r.hi << "\n";
                    emit(opt, os.str());
                }
                return 0;
            };
        });
    }

    // blocks --n N --C C | blocks --fit N1 N2 ... --C C [--predict P]
    {
        auto* cmd = app.add_subcommand("blocks", "Periodic block decomposition and affine fits");
        auto n = std::make_shared<u64>(0);
        auto fit = std::make_shared<std::vector<u64>>();
        auto C = std::make_shared<std::uint32_t>(6);
        auto predict = std::make_shared<u64>(0);
        auto* n_opt = cmd->add_option("--n", *n, "Decompose U(1,n) on [1, C*n]");
        auto* fit_opt =
            cmd->add_option("--fit", *fit, "Fit an affine model across U(1,Ni), at least two");
        cmd->add_option("--C", *C, "Window is [1, C*N]")->capture_default_str();
        cmd->add_option("--predict", *predict,
                        "With --fit: evaluate the model at this N and compare against generation");
        n_opt->excludes(fit_opt);
        cmd->add_option("--format", opt.format, "csv (default for --n) or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", opt.out, "Write to a file instead of stdout");
        cmd->callback([&, n, fit, C, predict] {
            run = [&, n, fit, C, predict] {
                if (*n) {
                    auto seq = make_seq(opt, 1, *n, ulam::Bound::by_value(*C * *n));
                    auto blocks = ulam::decompose_periodic(seq, 1, *C * *n);
                    if (opt.format == "json") {
                        json rows = json::array();
                        for (auto& blk : blocks)
                            rows.push_back({{"start", blk.start},
                                            {"end", blk.end},
                                            {"period", blk.period},
                                            {"pattern", blk.pattern}});
                        emit(opt, rows.dump(2) + "\n");
                    } else {
                        std::ostringstream os;
                        os << "start,end,period,pattern\n";
                        for (auto& blk : blocks)
                            os << blk.start << "," << blk.end << "," << blk.period << ","
                               << blk.pattern << "\n";
                        emit(opt, os.str());
                    }
                    return 0;
                }
                if (fit->size() < 2)
                    throw CLI::ValidationError("blocks needs --n or --fit with two or more values");
                std::vector<ulam::UlamSequence> seqs;
                seqs.reserve(fit->size());
                for (u64 N : *fit) seqs.push_back(make_seq(opt, 1, N, ulam::Bound::by_value(*C * N)));
                std::vector<const ulam::UlamSequence*> ptrs;
                for (auto& s : seqs) ptrs.push_back(&s);
                auto model = ulam::fit_affine_blocks(ptrs, *C);
                if (!*predict) {
                    emit(opt, ulam::model_to_json(model));
                    return 0;
                }
                auto predicted = ulam::eval_model(model, *predict);
                auto actual_seq = make_seq(opt, 1, *predict, ulam::Bound::by_value(*C * *predict));
                std::vector<u64> actual;
                for (u64 t : actual_seq.terms())
                    if (t <= *C * *predict) actual.push_back(t);
                bool matches = predicted == actual;
                json j{{"model", json::parse(ulam::model_to_json(model))},
                       {"predict",
                        {{"N", *predict}, {"matches", matches}, {"terms", predicted.size()}}}};
                emit(opt, j.dump(2) + "\n");
                return matches ? 0 : 1;
            };
        });
    }

    // rigidity --M --B --eps --delta --n-range lo hi
    {
        auto* cmd = app.add_subcommand("rigidity", "Near-affine interval endpoint check");
        auto M = std::make_shared<std::size_t>(40);
        auto B = std::make_shared<double>(0.139);
        auto eps = std::make_shared<double>(2.5);
        auto delta = std::make_shared<double>(2.5);
        auto range = std::make_shared<std::vector<u64>>(std::vector<u64>{15, 120});
        cmd->add_option("--M", *M, "Intervals to check")->capture_default_str();
        cmd->add_option("--B", *B, "Slope offset")->capture_default_str();
        cmd->add_option("--eps", *eps, "Left endpoint residual bound")->capture_default_str();
        cmd->add_option("--delta", *delta, "Right endpoint residual bound")->capture_default_str();
        cmd->add_option("--n-range", *range, "Check (n-1, n) for n in [lo, hi]")
            ->expected(2)
            ->capture_default_str();
        cmd->add_option("--format", opt.format, "csv (default) or json with per-interval rows")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", opt.out, "Write to a file instead of stdout");
        cmd->callback([&, M, B, eps, delta, range] {
            run = [&, M, B, eps, delta, range] {
                u64 lo = (*range)[0], hi = (*range)[1];
                if (lo < 3 || hi < lo) throw CLI::ValidationError("need 3 <= lo <= hi");
                u64 factor = std::max<u64>(6, 3 * *M);
                bool all_ok = true;
                json rows = json::array();
                std::ostringstream os;
                os << "n,threshold_ok,all_pass\n";
                std::optional<ulam::UlamSequence> prev;
                for (u64 n = lo - 1; n <= hi; ++n) {
                    auto cur = make_seq(opt, 1, n, ulam::Bound::by_value(factor * n));
                    if (prev) {
                        auto rep = ulam::check_rigidity(*prev, cur, *M, *B, *eps, *delta);
                        all_ok = all_ok && rep.all_pass && rep.threshold_ok;
                        os << rep.n << "," << rep.threshold_ok << "," << rep.all_pass << "\n";
                        if (opt.format == "json") {
                            json r{{"n", rep.n},
                                   {"threshold_ok", rep.threshold_ok},
                                   {"all_pass", rep.all_pass},
                                   {"rows", json::array()}};
                            for (auto& row : rep.rows)
                                r["rows"].push_back({{"m", row.m},
                                                     {"p", row.p},
                                                     {"eps_n", row.eps_n},
                                                     {"delta_n", row.delta_n},
                                                     {"eps_prev", row.eps_prev},
                                                     {"delta_prev", row.delta_prev},
                                                     {"pass", row.pass}});
                            rows.push_back(std::move(r));
                        }
                    }
                    prev = std::move(cur);
                }
                emit(opt, opt.format == "json" ? rows.dump(2) + "\n" : os.str());
                return all_ok ? 0 : 1;
            };
        });
    }

    // cert verify a b l p q | cert verify --file f.json | cert search a b
    {
        auto* cmd = app.add_subcommand("cert", "Eventual-oddness certificates");
        cmd->require_subcommand(1);
        auto* ver = cmd->add_subcommand("verify", "Check a certificate");
        auto vals = std::make_shared<std::vector<u64>>();
        auto file = std::make_shared<std::string>();
        ver->add_option("values", *vals, "a b l p q");
        ver->add_option("--file", *file, "Read the certificate from a JSON file");
        ver->add_option("--out", opt.out, "Write to a file instead of stdout");
        ver->callback([&, vals, file] {
            run = [&, vals, file] {
                ulam::Certificate cert{};
                if (!file->empty()) {
                    std::ifstream f(*file);
                    if (!f) throw std::runtime_error("cannot read " + *file);
                    std::stringstream ss;
                    ss << f.rdbuf();
                    cert = ulam::certificate_from_json(ss.str());
                } else if (vals->size() == 5) {
                    cert = {(*vals)[0], (*vals)[1], static_cast<std::uint32_t>((*vals)[2]),
                            (*vals)[3], (*vals)[4]};
                } else {
                    throw CLI::ValidationError("cert verify needs a b l p q or --file");
                }
                cert.validate();
                ulam::CertificateCheck check;
                if (!opt.cache_dir.empty()) {
                    auto seq = make_seq(opt, cert.a, cert.b,
                                        ulam::Bound::by_value(3 * cert.q - cert.p));
                    check = ulam::verify_certificate_on(seq, cert);
                } else {
                    check = ulam::verify_certificate(cert);
                }
                emit(opt, ulam::certificate_check_to_json(check));
                return check.verified ? 0 : 1;
            };
        });
        auto* sea = cmd->add_subcommand("search", "Look for a certificate");
        auto a = std::make_shared<u64>(0);
        auto b = std::make_shared<u64>(0);
        auto budget = std::make_shared<u64>(100000);
        auto lmax = std::make_shared<std::uint32_t>(64);
        sea->add_option("a", *a, "First term")->required();
        sea->add_option("b", *b, "Second term")->required();
        sea->add_option("--budget", *budget, "Value budget")->capture_default_str();
        sea->add_option("--l-max", *lmax, "Largest window length")->capture_default_str();
        sea->add_option("--out", opt.out, "Write to a file instead of stdout");
        sea->callback([&, a, b, budget, lmax] {
            run = [&, a, b, budget, lmax] {
                ulam::CertSearchOptions so;
                so.value_budget = *budget;
                so.l_max = *lmax;
                auto found = ulam::search_certificate(*a, *b, so);
                if (!found) {
                    emit(opt, json{{"found", false}}.dump(2) + "\n");
                    return 1;
                }
                auto check = ulam::verify_certificate(*found);
                emit(opt, ulam::certificate_check_to_json(check));
                return check.verified ? 0 : 1;
            };
        });
    }

    // density a b --value V --M M
    {
        auto* cmd = app.add_subcommand("density", "Counting density with the (n+1)/(3n) bound");
        auto a = std::make_shared<u64>(1);
        auto b = std::make_shared<u64>(2);
        auto value = std::make_shared<u64>(100000);
        auto M = std::make_shared<std::size_t>(0);
        cmd->add_option("a", *a, "First term")->required();
        cmd->add_option("b", *b, "Second term")->required();
        cmd->add_option("--value", *value, "Count terms up to this value")->capture_default_str();
        cmd->add_option("--M", *M, "Also report densities truncated to the first 1..M intervals");
        cmd->add_option("--format", opt.format, "json (default) or csv")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", opt.out, "Write to a file instead of stdout");
        cmd->callback([&, a, b, value, M] {
            run = [&, a, b, value, M] {
                auto seq = make_seq(opt, *a, *b, ulam::Bound::by_value(*value));
                auto rep = ulam::density(seq, *value,
                                         *M ? std::optional<std::size_t>(*M) : std::nullopt);
                if (opt.format == "csv") {
                    std::ostringstream os;
                    os << "x_max,count,ratio,bound\n"
                       << rep.x_max << "," << rep.count << "," << rep.ratio << "," << rep.bound
                       << "\n";
                    emit(opt, os.str());
                } else {
                    json j{{"n", rep.n},
                           {"x_max", rep.x_max},
                           {"count", rep.count},
                           {"ratio", rep.ratio},
                           {"bound", rep.bound}};
                    if (!rep.truncated.empty()) {
                        j["truncated"] = json::array();
                        for (auto& t : rep.truncated)
                            j["truncated"].push_back({{"M", t.M}, {"value", t.value}});
                    }
                    emit(opt, j.dump(2) + "\n");
                }
                return 0;
            };
        });
    }

    // windows a b --value V [--len L] [--dichotomy] [--sieve]
    {
        auto* cmd = app.add_subcommand("windows", "Densest window and band checks");
        auto a = std::make_shared<u64>(1);
        auto b = std::make_shared<u64>(2);
        auto value = std::make_shared<u64>(100000);
        auto len = std::make_shared<u64>(0);
        auto dich = std::make_shared<bool>(false);
        auto sieve = std::make_shared<bool>(false);
        cmd->add_option("a", *a, "First term")->required();
        cmd->add_option("b", *b, "Second term")->required();
        cmd->add_option("--value", *value, "Value ceiling")->capture_default_str();
        cmd->add_option("--len", *len, "Window length (default 3n)");
        cmd->add_flag("--dichotomy", *dich, "Also run the 9-or-17 window check, U(1,2) only");
        cmd->add_flag("--sieve", *sieve, "Also scan the forbidden bands");
        cmd->add_option("--out", opt.out, "Write to a file instead of stdout");
        cmd->callback([&, a, b, value, len, dich, sieve] {
            run = [&, a, b, value, len, dich, sieve] {
                auto seq = make_seq(opt, *a, *b, ulam::Bound::by_value(*value));
                auto w = ulam::window_max(seq, *len);
                bool ok = w.max_count <= *b + 1;
                json j{{"n", *b},
                       {"window_lo", w.window_lo},
                       {"window_len", w.window_len},
                       {"max_count", w.max_count},
                       {"bound", *b + 1},
                       {"within_bound", ok}};
                if (*dich) {
                    auto viol = ulam::u12_window_check(seq);
                    j["dichotomy_violations"] = viol.size();
                    ok = ok && viol.empty();
                }
                if (*sieve) {
                    auto viol = ulam::sieve_check(seq);
                    j["sieve_violations"] = viol.size();
                    ok = ok && viol.empty();
                }
                emit(opt, j.dump(2) + "\n");
                return ok ? 0 : 1;
            };
        });
    }

    // signal a b --lambda L --bins K [--skip S] [--count N | --value V]
    {
        auto* cmd = app.add_subcommand("signal", "Residue histogram modulo a real number");
        auto a = std::make_shared<u64>(1);
        auto b = std::make_shared<u64>(2);
        auto lambda = std::make_shared<double>(2.443442967);
        auto bins = std::make_shared<std::size_t>(60);
        auto skip = std::make_shared<std::size_t>(0);
        auto count = std::make_shared<u64>(0);
        auto value = std::make_shared<u64>(0);
        cmd->add_option("a", *a, "First term")->required();
        cmd->add_option("b", *b, "Second term")->required();
        cmd->add_option("--lambda", *lambda, "Modulus")->capture_default_str();
        cmd->add_option("--bins", *bins, "Histogram bins")->capture_default_str();
        cmd->add_option("--skip", *skip, "Leading terms to drop")->capture_default_str();
        cmd->add_option("--count", *count, "Term count (default 100000)");
        cmd->add_option("--value", *value, "Value ceiling instead of a term count");
        cmd->add_option("--format", opt.format, "json (default), csv, or svg")
            ->check(CLI::IsMember({"csv", "json", "svg"}));
        cmd->add_option("--out", opt.out, "Write to a file instead of stdout");
        cmd->callback([&, a, b, lambda, bins, skip, count, value] {
            run = [&, a, b, lambda, bins, skip, count, value] {
                u64 c = (*count || *value) ? *count : 100000;
                auto seq = make_seq(opt, *a, *b, bound_from(c, *value, 0));
                auto h = ulam::mod_histogram(seq, *lambda, *bins, *skip);
                if (opt.format == "svg") {
                    emit(opt, ulam::histogram_svg(h));
                } else if (opt.format == "csv") {
                    std::ostringstream os;
                    os << "bin,count\n";
                    for (std::size_t i = 0; i < h.bins.size(); ++i)
                        os << i << "," << h.bins[i] << "\n";
                    emit(opt, os.str());
                } else {
                    json j{{"lambda", h.lambda},
                           {"skip", h.skip},
                           {"total", h.total},
                           {"middle_third_mass", h.middle_third_mass},
                           {"bins", h.bins}};
                    emit(opt, j.dump(2) + "\n");
                }
                return 0;
            };
        });
    }

    // set2d --seed x y ... --bound B [--shuffle SEED | --linf]
    {
        auto* cmd = app.add_subcommand("set2d", "Generate a 2D set");
        auto flat = std::make_shared<std::vector<int>>();
        auto bound = std::make_shared<int>(0);
        auto shuffle = std::make_shared<u64>(0);
        auto linf = std::make_shared<bool>(false);
        cmd->add_option("--seed", *flat, "Initial vector, twice per pair, repeatable")
            ->required()
            ->type_size(2);
        cmd->add_option("--bound", *bound, "Norm ball radius")->required();
        auto* shuf_opt =
            cmd->add_option("--shuffle", *shuffle, "Admit shells in an order shuffled by this seed");
        auto* linf_opt = cmd->add_flag("--linf", *linf, "Use the sup norm, one element at a time");
        shuf_opt->excludes(linf_opt);
        cmd->add_option("--format", opt.format, "csv (default), json, or svg")
            ->check(CLI::IsMember({"csv", "json", "svg"}));
        cmd->add_option("--out", opt.out, "Write to a file instead of stdout");
        cmd->callback([&, flat, bound, shuffle, linf, shuf_opt] {
            run = [&, flat, bound, shuffle, linf, shuf_opt] {
                auto initials = to_pairs(*flat);
                std::vector<ulam::Vec2> pts;
                if (*linf) {
                    pts = ulam::generate_2d_linf(initials, *bound);
                } else if (shuf_opt->count()) {
                    pts = ulam::generate_2d_shuffled(initials, *bound, *shuffle).elements();
                } else {
                    pts = ulam::generate_2d(initials, *bound).elements();
                }
                if (opt.format == "svg") {
                    emit(opt, ulam::scatter_svg(pts, *bound));
                } else if (opt.format == "json") {
                    json j{{"bound", *bound}, {"count", pts.size()}, {"initials", json::array()},
                           {"elements", json::array()}};
                    for (auto v : initials) j["initials"].push_back(vec2_json(v));
                    for (auto v : pts) j["elements"].push_back(vec2_json(v));
                    emit(opt, j.dump(2) + "\n");
                } else {
                    std::ostringstream os;
                    os << "x,y\n";
                    for (auto v : pts) os << v.x << "," << v.y << "\n";
                    emit(opt, os.str());
                }
                return 0;
            };
        });
    }

    // classify v1 v2 [--verify B]
    {
        auto* cmd = app.add_subcommand("classify", "Type of the axes-plus-(v1,v2) set");
        auto v1 = std::make_shared<int>(0);
        auto v2 = std::make_shared<int>(0);
        auto verify = std::make_shared<int>(0);
        cmd->add_option("v1", *v1, "Seed x")->required();
        cmd->add_option("v2", *v2, "Seed y")->required();
        cmd->add_option("--verify", *verify, "Compare the closed form against generation at this bound");
        cmd->add_option("--out", opt.out, "Write to a file instead of stdout");
        cmd->callback([&, v1, v2, verify] {
            run = [&, v1, v2, verify] {
                auto cls = ulam::classify(*v1, *v2);
                json j{{"v1", *v1},
                       {"v2", *v2},
                       {"kind", ulam::type_kind_name(cls.kind)},
                       {"reflected", cls.reflected}};
                if (!*verify) {
                    emit(opt, j.dump(2) + "\n");
                    return 0;
                }
                auto verdict = ulam::verify_type(*v1, *v2, *verify);
                j["matches"] = verdict.matches;
                j["compared_bound"] = verdict.compared_bound;
                j["discrepancies"] = verdict.discrepancy_count;
                j["sample_missing"] = json::array();
                j["sample_extra"] = json::array();
                for (auto v : verdict.sample_missing) j["sample_missing"].push_back(vec2_json(v));
                for (auto v : verdict.sample_extra) j["sample_extra"].push_back(vec2_json(v));
                emit(opt, j.dump(2) + "\n");
                return verdict.matches ? 0 : 1;
            };
        });
    }

    // parity --seed x y ... --bound B
    {
        auto* cmd = app.add_subcommand("parity", "Parity vector of a generated 2D set");
        auto flat = std::make_shared<std::vector<int>>();
        auto bound = std::make_shared<int>(0);
        cmd->add_option("--seed", *flat, "Initial vector, twice per pair, repeatable")
            ->required()
            ->type_size(2);
        cmd->add_option("--bound", *bound, "Norm ball radius")->required();
        cmd->add_option("--out", opt.out, "Write to a file instead of stdout");
        cmd->callback([&, flat, bound] {
            run = [&, flat, bound] {
                auto set = ulam::generate_2d(to_pairs(*flat), *bound);
                auto w = ulam::parity_vector(set);
                if (w) {
                    emit(opt, json{{"found", true}, {"w", vec2_json(*w)}}.dump(2) + "\n");
                    return 0;
                }
                emit(opt, json{{"found", false}}.dump(2) + "\n");
                return 1;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return run ? run() : 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ulam::FitError& e) {
        std::cerr << "fit failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
