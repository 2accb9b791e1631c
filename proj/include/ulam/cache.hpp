#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <vector>

#include "ulam/seq.hpp"

namespace ulam {

// Binary term cache, one file per (a, b):
//   magic "ULAM1", version u16, a u64, b u64, count u64, then count u64 terms,
// everything little-endian. The file always holds the longest prefix seen;
// extending appends terms and patches the count in place.

std::filesystem::path cache_path(const std::filesystem::path& dir, u64 a, u64 b);

struct CachedTerms {
    u64 a;
    u64 b;
    std::vector<u64> terms;
};

// nullopt when the file does not exist; CacheError on malformed content.
std::optional<CachedTerms> read_sequence_cache(const std::filesystem::path& file);

void write_sequence_cache(const std::filesystem::path& file, u64 a, u64 b,
                          const std::vector<u64>& terms);

// Generates through the cache: reuses the stored prefix, extends it when the
// bound asks for more, and stores back the longer prefix.
UlamSequence generate_cached(const SeqParams& params, const Bound& bound,
                             const std::filesystem::path& cache_dir,
                             const GenLimits& limits = {});

// One term per line.
void write_terms_csv(std::ostream& out, const std::vector<u64>& terms);

}  // namespace ulam
