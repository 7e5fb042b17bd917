#ifndef GREENRING_CACHEFILE_HPP
#define GREENRING_CACHEFILE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "greenring/greenring.hpp"

namespace greenring {

/* On-disk memo tables: versioned JSON document
 *   {version, p, q, tensor_table, lambda_table, s_table, adams_lambda, adams_s}
 * with two-level objects keyed by decimal strings and length-q integer
 * array values. */

/* Raised on a malformed or mismatching cache file. */
class CacheError : public std::runtime_error {
public:
    explicit CacheError(const std::string& what) : std::runtime_error(what) {}
};

struct CacheValidation {
    std::size_t entries_checked = 0;
    std::size_t entries_skipped_cap = 0;
    std::vector<std::string> mismatches;  // "table[r][s]" labels

    bool ok() const noexcept { return mismatches.empty(); }
};

/* Fill the context's tables: the full basis product table, power tables up
 * to degree n_max (default 2q), Adams tables up to n_max.  Entries whose
 * oracle dimension exceeds the cap are skipped. */
void cache_build(GreenContext& ctx, unsigned long long n_max = 0);

std::string cache_serialize(const GreenContext& ctx);
void cache_save(const GreenContext& ctx, const std::string& path);

/* Install every entry of the file into ctx, then recompute a seeded sample
 * of the installed entries from scratch and compare.  Throws CacheError on
 * parse failure, (p, q) mismatch, or a sample mismatch. */
void cache_load(GreenContext& ctx, const std::string& path, double sample_fraction = 0.05,
                unsigned long long seed = 1);

/* Recompute every entry of the file from scratch and report mismatches. */
CacheValidation cache_validate(const std::string& path, long long dim_cap = 60000);

/* Remove the file; missing file is fine. */
void cache_clear(const std::string& path);

}  // namespace greenring

#endif
