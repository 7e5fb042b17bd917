#include "greenring/cachefile.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <memory>
#include <random>
#include <sstream>

#include <json.hpp>

namespace greenring {

namespace {

using json = nlohmann::ordered_json;

json table_to_json(const GreenContext::Table& t) {
    json out = json::object();
    for (const auto& [key, value] : t) {
        std::string a = std::to_string(key.first);
        std::string b = std::to_string(key.second);
        if (!out.contains(a)) out[a] = json::object();
        out[a][b] = value;
    }
    return out;
}

unsigned long long parse_key(const std::string& s, const char* where) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw CacheError(std::string(where) + ": non-decimal key '" + s + "'");
    return std::stoull(s);
}

struct Entry {
    int table;  // 0 tensor, 1 lambda, 2 s, 3 adams_lambda, 4 adams_s
    unsigned long long a, b;
    std::vector<long long> value;
};

const char* const kTableNames[] = {"tensor_table", "lambda_table", "s_table", "adams_lambda",
                                   "adams_s"};

std::string label(const Entry& e) {
    std::ostringstream os;
    os << kTableNames[e.table] << "[" << e.a << "][" << e.b << "]";
    return os.str();
}

std::vector<Entry> collect_entries(const json& doc) {
    std::vector<Entry> out;
    for (int t = 0; t < 5; ++t) {
        const json& tab = doc.at(kTableNames[t]);
        if (!tab.is_object()) throw CacheError(std::string(kTableNames[t]) + ": not an object");
        for (const auto& [ka, inner] : tab.items()) {
            if (!inner.is_object())
                throw CacheError(std::string(kTableNames[t]) + "[" + ka + "]: not an object");
            unsigned long long a = parse_key(ka, kTableNames[t]);
            for (const auto& [kb, value] : inner.items()) {
                Entry e;
                e.table = t;
                e.a = a;
                e.b = parse_key(kb, kTableNames[t]);
                if (!value.is_array())
                    throw CacheError(label(e) + ": value is not an array");
                e.value = value.get<std::vector<long long>>();
                out.push_back(std::move(e));
            }
        }
    }
    return out;
}

/* Recompute one entry from scratch.  Returns false when the oracle
 * dimension exceeds the scratch context's cap. */
bool recompute(GreenContext& scratch, const Entry& e, std::vector<long long>& out) {
    try {
        switch (e.table) {
            case 0:
                out = scratch.tensor_entry((unsigned)e.a, (unsigned)e.b);
                return true;
            case 1:
                out = scratch.lambda_power((unsigned)e.a, e.b).coeffs();
                return true;
            case 2:
                out = scratch.s_power((unsigned)e.a, e.b).coeffs();
                return true;
            case 3:
                out = scratch.adams_lambda_basis(e.a, (unsigned)e.b).coeffs();
                return true;
            default:
                out = scratch.adams_s_direct_basis(e.a, (unsigned)e.b).coeffs();
                return true;
        }
    } catch (const CapExceededError&) {
        return false;
    }
}

json read_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open cache file: " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& err) {
        throw CacheError(std::string("cache file is not valid JSON: ") + err.what());
    }
    for (const char* key : {"version", "p", "q"})
        if (!doc.contains(key)) throw CacheError(std::string("cache file lacks '") + key + "'");
    if (doc["version"].get<long long>() != 1) throw CacheError("unsupported cache version");
    for (const char* key : kTableNames)
        if (!doc.contains(key)) throw CacheError(std::string("cache file lacks '") + key + "'");
    return doc;
}

unsigned exponent_of(unsigned p, unsigned long long q) {
    unsigned e = 0;
    unsigned long long pow = 1;
    while (pow < q) {
        pow *= p;
        ++e;
        if (e > 64) break;
    }
    if (pow != q) throw CacheError("cache file order is not a power of its prime");
    return e;
}

}  // namespace

void cache_build(GreenContext& ctx, unsigned long long n_max) {
    unsigned q = ctx.q();
    if (n_max == 0) n_max = 2ull * q;
    for (unsigned r = 1; r <= q; ++r)
        for (unsigned s = r; s <= q; ++s) ctx.tensor_entry(r, s);
    for (unsigned r = 2; r < q; ++r)
        for (unsigned j = 1; j <= r / 2; ++j) {
            try {
                ctx.lambda_power(r, j);
            } catch (const CapExceededError&) {
                break;  // wedge dimensions grow up to the midpoint
            }
        }
    for (unsigned r = 2; r < q; ++r)
        for (unsigned long long n = 2; n <= n_max; ++n) {
            try {
                ctx.s_power(r, n);
            } catch (const CapExceededError&) {
                break;  // dimensions grow with the degree
            }
        }
    for (unsigned long long n = 1; n <= n_max; ++n)
        for (unsigned r = 1; r <= q; ++r) {
            try {
                ctx.adams_lambda_basis(n, r);
            } catch (const CapExceededError&) {
            }
        }
    for (unsigned r = 1; r <= q; ++r)
        for (unsigned long long n = 1; n <= n_max; ++n) {
            try {
                ctx.adams_s_direct_basis(n, r);
            } catch (const CapExceededError&) {
                break;
            }
        }
}

std::string cache_serialize(const GreenContext& ctx) {
    json doc;
    doc["version"] = 1;
    doc["p"] = ctx.p();
    doc["q"] = ctx.q();
    doc["tensor_table"] = table_to_json(ctx.tensor_table());
    doc["lambda_table"] = table_to_json(ctx.lambda_table());
    doc["s_table"] = table_to_json(ctx.s_table());
    doc["adams_lambda"] = table_to_json(ctx.adams_lambda_table());
    doc["adams_s"] = table_to_json(ctx.adams_s_table());
    return doc.dump(2) + "\n";
}

void cache_save(const GreenContext& ctx, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::ios_base::failure("cannot write cache file: " + path);
    out << cache_serialize(ctx);
    out.flush();
    if (!out) throw std::ios_base::failure("short write to cache file: " + path);
}

void cache_load(GreenContext& ctx, const std::string& path, double sample_fraction,
                unsigned long long seed) {
    json doc = read_document(path);
    if (doc["p"].get<unsigned long long>() != ctx.p() ||
        doc["q"].get<unsigned long long>() != ctx.q())
        throw CacheError("cache file was built for a different (p, q)");

    std::vector<Entry> entries = collect_entries(doc);
    for (const Entry& e : entries) {
        try {
            switch (e.table) {
                case 0: ctx.install_tensor((unsigned)e.a, (unsigned)e.b, e.value); break;
                case 1: ctx.install_lambda((unsigned)e.a, e.b, e.value); break;
                case 2: ctx.install_s((unsigned)e.a, e.b, e.value); break;
                case 3: ctx.install_adams_lambda(e.a, (unsigned)e.b, e.value); break;
                default: ctx.install_adams_s(e.a, (unsigned)e.b, e.value); break;
            }
        } catch (const std::invalid_argument& err) {
            throw CacheError(label(e) + ": " + err.what());
        }
    }

    if (sample_fraction <= 0 || entries.empty()) return;
    std::size_t want = (std::size_t)(sample_fraction * (double)entries.size());
    if (want < 1) want = 1;
    if (want > entries.size()) want = entries.size();
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> idx(entries.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(want);
    std::sort(idx.begin(), idx.end());

    GreenContext scratch(ctx.p(), ctx.e(), ctx.dim_cap());
    for (std::size_t i : idx) {
        std::vector<long long> fresh;
        if (!recompute(scratch, entries[i], fresh)) continue;
        if (fresh != entries[i].value)
            throw CacheError("cache entry disagrees with a fresh computation: " +
                             label(entries[i]));
    }
}

CacheValidation cache_validate(const std::string& path, long long dim_cap) {
    json doc = read_document(path);
    unsigned p = (unsigned)doc["p"].get<unsigned long long>();
    unsigned long long q = doc["q"].get<unsigned long long>();
    unsigned e = exponent_of(p, q);
    long long cap = std::max<long long>(dim_cap, (long long)(q * q));
    std::unique_ptr<GreenContext> scratch;
    try {
        scratch = std::make_unique<GreenContext>(p, e, cap);
    } catch (const std::invalid_argument& err) {
        throw CacheError(std::string("cache file parameters rejected: ") + err.what());
    }

    CacheValidation res;
    for (const Entry& entry : collect_entries(doc)) {
        if (entry.value.size() != q) {
            res.mismatches.push_back(label(entry) + ": wrong vector length");
            continue;
        }
        std::vector<long long> fresh;
        if (!recompute(*scratch, entry, fresh)) {
            ++res.entries_skipped_cap;
            continue;
        }
        ++res.entries_checked;
        if (fresh != entry.value) res.mismatches.push_back(label(entry));
    }
    return res;
}

void cache_clear(const std::string& path) {
    if (std::remove(path.c_str()) != 0) {
        std::ifstream probe(path);
        if (probe) throw std::ios_base::failure("cannot remove cache file: " + path);
    }
}

}  // namespace greenring
