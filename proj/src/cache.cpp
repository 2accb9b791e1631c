#include "ulam/cache.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>

#include "ulam/errors.hpp"

namespace ulam {

namespace {

constexpr char kMagic[5] = {'U', 'L', 'A', 'M', '1'};
constexpr std::uint16_t kVersion = 1;
constexpr std::size_t kHeaderBytes = 5 + 2 + 8 + 8 + 8;

void put_u16(std::string& out, std::uint16_t v) {
    out.push_back(char(v & 0xff));
    out.push_back(char(v >> 8));
}

void put_u64(std::string& out, u64 v) {
    for (int i = 0; i < 8; ++i) out.push_back(char((v >> (8 * i)) & 0xff));
}

u64 get_u64(const unsigned char* p) {
    u64 v = 0;
    for (int i = 0; i < 8; ++i) v |= u64(p[i]) << (8 * i);
    return v;
}

std::string encode_terms(const std::vector<u64>& terms, std::size_t from) {
    std::string out;
    out.reserve((terms.size() - from) * 8);
    for (std::size_t i = from; i < terms.size(); ++i) put_u64(out, terms[i]);
    return out;
}

}  // namespace

std::filesystem::path cache_path(const std::filesystem::path& dir, u64 a, u64 b) {
    return dir / ("ulam_" + std::to_string(a) + "_" + std::to_string(b) + ".bin");
}

std::optional<CachedTerms> read_sequence_cache(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) return std::nullopt;

    std::string data((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    if (data.size() < kHeaderBytes) throw CacheError("cache file truncated header");
    if (std::memcmp(data.data(), kMagic, 5) != 0)
        throw CacheError("cache file has wrong magic");
    auto* p = reinterpret_cast<const unsigned char*>(data.data());
    std::uint16_t version = std::uint16_t(p[5]) | (std::uint16_t(p[6]) << 8);
    if (version != kVersion) throw CacheError("unsupported cache version");

    CachedTerms out;
    out.a = get_u64(p + 7);
    out.b = get_u64(p + 15);
    u64 count = get_u64(p + 23);
    if (data.size() < kHeaderBytes + count * 8)
        throw CacheError("cache file truncated terms");
    out.terms.reserve(count);
    for (u64 i = 0; i < count; ++i)
        out.terms.push_back(get_u64(p + kHeaderBytes + i * 8));
    return out;
}

void write_sequence_cache(const std::filesystem::path& file, u64 a, u64 b,
                          const std::vector<u64>& terms) {
    std::string header;
    header.append(kMagic, 5);
    put_u16(header, kVersion);
    put_u64(header, a);
    put_u64(header, b);
    put_u64(header, terms.size());

    // When the file already holds a prefix of `terms`, append the rest and
    // patch the count; otherwise write the whole file fresh. An unreadable
    // existing file is simply replaced.
    std::optional<CachedTerms> existing;
    try {
        if (std::filesystem::exists(file)) existing = read_sequence_cache(file);
    } catch (const CacheError&) {
        existing = std::nullopt;
    }
    if (existing && existing->a == a && existing->b == b &&
        existing->terms.size() <= terms.size() &&
        std::equal(existing->terms.begin(), existing->terms.end(), terms.begin())) {
        std::fstream io(file, std::ios::binary | std::ios::in | std::ios::out);
        if (!io) throw CacheError("cannot reopen cache file for append");
        io.seekp(23);
        std::string count_field;
        put_u64(count_field, terms.size());
        io.write(count_field.data(), 8);
        io.seekp(0, std::ios::end);
        std::string tail = encode_terms(terms, existing->terms.size());
        io.write(tail.data(), std::streamsize(tail.size()));
        if (!io) throw CacheError("cache append failed");
        return;
    }

    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot open cache file for writing");
    out.write(header.data(), std::streamsize(header.size()));
    std::string body = encode_terms(terms, 0);
    out.write(body.data(), std::streamsize(body.size()));
    if (!out) throw CacheError("cache write failed");
}

UlamSequence generate_cached(const SeqParams& params, const Bound& bound,
                             const std::filesystem::path& cache_dir,
                             const GenLimits& limits) {
    std::filesystem::create_directories(cache_dir);
    auto file = cache_path(cache_dir, params.a, params.b);
    auto cached = read_sequence_cache(file);
    if (cached && (cached->a != params.a || cached->b != params.b))
        throw CacheError("cache file parameters disagree with its name");

    UlamSequence seq = cached ? resume(params, bound, cached->terms, limits)
                              : generate(params, bound, limits);

    if (!cached || seq.terms().size() > cached->terms.size())
        write_sequence_cache(file, params.a, params.b, seq.terms());
    return seq;
}

void write_terms_csv(std::ostream& out, const std::vector<u64>& terms) {
    for (u64 t : terms) out << t << '\n';
}

}  // namespace ulam
