#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "greenring/cachefile.hpp"
#include "greenring/greenring.hpp"
#include "greenring/verify.hpp"

using namespace greenring;
using json = nlohmann::ordered_json;

namespace {

struct Range {
    unsigned long long lo = 0, hi = 0;
};

unsigned long long parse_number(const std::string& text, const std::string& flag) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument(flag + ": expected a decimal number, got '" + text + "'");
    return std::stoull(text);
}

/* "a..b" or a single "a" */
Range parse_range(const std::string& text, const std::string& flag, bool allow_span) {
    Range r;
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        r.lo = r.hi = parse_number(text, flag);
        return r;
    }
    if (!allow_span)
        throw std::invalid_argument(flag + ": a range is not allowed here, give one index");
    r.lo = parse_number(text.substr(0, dots), flag);
    r.hi = parse_number(text.substr(dots + 2), flag);
    if (r.lo > r.hi) throw std::invalid_argument(flag + ": empty range '" + text + "'");
    return r;
}

std::string default_cache_path(unsigned p, unsigned e) {
    return "greenring-p" + std::to_string(p) + "-e" + std::to_string(e) + ".cache.json";
}

json element_json(const GreenElement& a) {
    json out;
    out["coeffs"] = a.coeffs();
    out["dim"] = a.context().dimension(a);
    return out;
}

std::string csv_header(unsigned q) {
    std::string h;
    for (unsigned i = 1; i <= q; ++i) {
        if (i > 1) h += ',';
        h += "V" + std::to_string(i);
    }
    return h;
}

std::string csv_row(const GreenElement& a) {
    std::string row;
    const auto& c = a.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) row += ',';
        row += std::to_string(c[i]);
    }
    return row;
}

void print_element(const GreenElement& a, const std::string& format) {
    if (format == "json") {
        std::cout << element_json(a).dump() << "\n";
    } else if (format == "csv") {
        std::cout << csv_header(a.context().q()) << "\n" << csv_row(a) << "\n";
    } else {
        std::cout << pretty(a) << "\n";
    }
}

void maybe_load_cache(GreenContext& ctx, const std::string& path) {
    if (path.empty()) return;
    if (!std::ifstream(path).good()) {
        std::cerr << "cache file '" << path << "' not found, computing fresh\n";
        return;
    }
    cache_load(ctx, path);
}

struct ComputeArgs {
    std::string op, n, r, s;
};

int run_compute(GreenContext& ctx, const ComputeArgs& a, const std::string& format,
                const std::string& cache_path) {
    maybe_load_cache(ctx, cache_path);
    const std::string& op = a.op;

    auto need = [](const std::string& v, const char* flag) {
        if (v.empty())
            throw std::invalid_argument(std::string("missing required flag ") + flag);
        return v;
    };
    auto idx = [&](const std::string& v, const char* flag) {
        return parse_range(need(v, flag), flag, false).lo;
    };

    GreenElement out = ctx.zero();
    if (op == "adams-lambda") {
        out = ctx.adams_lambda_fast(idx(a.n, "--n"), ctx.basis((unsigned)idx(a.r, "--r")));
    } else if (op == "adams-s") {
        out = ctx.adams_s_fast(idx(a.n, "--n"), ctx.basis((unsigned)idx(a.r, "--r")));
    } else if (op == "lambda-power") {
        out = ctx.lambda_power((unsigned)idx(a.r, "--r"), idx(a.n, "--n"));
    } else if (op == "s-power") {
        out = ctx.s_power((unsigned)idx(a.r, "--r"), idx(a.n, "--n"));
    } else if (op == "tensor") {
        out = ctx.mul(ctx.basis((unsigned)idx(a.r, "--r")),
                      ctx.basis((unsigned)idx(a.s, "--s")));
    } else if (op == "heller") {
        unsigned long long n = a.n.empty() ? 1 : parse_range(a.n, "--n", false).lo;
        out = ctx.heller(ctx.basis((unsigned)idx(a.r, "--r")), n);
    } else if (op == "restrict") {
        out = ctx.restrict(ctx.basis((unsigned)idx(a.r, "--r")));
    } else if (op == "induce") {
        out = ctx.induce(ctx.child().basis((unsigned)idx(a.r, "--r")));
    } else {
        throw std::invalid_argument("unknown compute op '" + op + "'");
    }
    print_element(out, format);
    return 0;
}

int run_table(GreenContext& ctx, const ComputeArgs& a, const std::string& format,
              const std::string& cache_path) {
    maybe_load_cache(ctx, cache_path);
    const std::string& op = a.op;
    if (op == "restrict" || op == "induce")
        throw std::invalid_argument("table: op '" + op + "' has no (n, r) table form");
    if (a.n.empty() || a.r.empty())
        throw std::invalid_argument("table: both --n and --r are required");
    Range nr = parse_range(a.n, "--n", true);
    Range rr = parse_range(a.r, "--r", true);

    // for tensor the --n range indexes the first factor
    auto cell = [&](unsigned long long n, unsigned long long r) {
        if (op == "adams-lambda") return ctx.adams_lambda_fast(n, ctx.basis((unsigned)r));
        if (op == "adams-s") return ctx.adams_s_fast(n, ctx.basis((unsigned)r));
        if (op == "lambda-power") return ctx.lambda_power((unsigned)r, n);
        if (op == "s-power") return ctx.s_power((unsigned)r, n);
        if (op == "tensor") return ctx.mul(ctx.basis((unsigned)n), ctx.basis((unsigned)r));
        if (op == "heller") return ctx.heller(ctx.basis((unsigned)r), n);
        throw std::invalid_argument("unknown table op '" + op + "'");
    };

    json rows = json::array();
    std::ostringstream text;
    if (format == "csv") text << csv_header(ctx.q()) << "\n";
    for (unsigned long long n = nr.lo; n <= nr.hi; ++n)
        for (unsigned long long r = rr.lo; r <= rr.hi; ++r) {
            GreenElement v = cell(n, r);
            if (format == "json") {
                json row;
                row["n"] = n;
                row["r"] = r;
                row["coeffs"] = v.coeffs();
                rows.push_back(std::move(row));
            } else if (format == "csv") {
                text << csv_row(v) << "\n";
            } else {
                text << "n=" << n << " r=" << r << ": " << pretty(v) << "\n";
            }
        }
    if (format == "json") {
        json doc;
        doc["op"] = op;
        doc["p"] = ctx.p();
        doc["q"] = ctx.q();
        doc["rows"] = std::move(rows);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << text.str();
    }
    return 0;
}

int run_verify(GreenContext& ctx, const std::string& suites_flag, const VerifyOptions& opt,
               const std::string& format, const std::string& cache_path) {
    if (format == "csv") throw std::invalid_argument("verify supports --format json or pretty");
    maybe_load_cache(ctx, cache_path);

    std::vector<std::string> suites;
    std::stringstream ss(suites_flag);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (!is_known_suite(item)) throw std::invalid_argument("unknown suite '" + item + "'");
        suites.push_back(item);
    }
    if (suites.empty()) throw std::invalid_argument("no suites given");

    VerificationReport merged;
    double wall = 0;
    for (std::size_t i = 0; i < suites.size(); ++i) {
        VerificationReport rep = run_suite(ctx, suites[i], opt);
        wall += rep.wall_time_ms;
        if (i == 0) {
            merged = std::move(rep);
        } else {
            for (auto& c : rep.checks) merged.checks.push_back(std::move(c));
        }
    }
    merged.suite = suites_flag;
    merged.wall_time_ms = wall;
    merged.has_wall_time = opt.timings;

    if (format == "pretty") {
        for (const auto& c : merged.checks) {
            std::cout << c.status;
            for (std::size_t pad = c.status.size(); pad < 12; ++pad) std::cout << ' ';
            std::cout << c.check_id << "  cases " << c.cases_passed << "/" << c.cases_total;
            if (c.cases_skipped_cap) std::cout << " (" << c.cases_skipped_cap << " capped)";
            std::cout << "\n";
        }
    } else {
        std::cout << report_to_json(merged);
    }

    std::cerr << "verify: " << merged.count("pass") << " pass, "
              << merged.count("skipped_cap") << " skipped_cap, " << merged.count("fail")
              << " fail (p=" << ctx.p() << ", q=" << ctx.q() << ")\n";
    if (!merged.all_passed()) {
        for (const auto& c : merged.checks)
            if (c.status == "fail" && c.has_witness) {
                std::cerr << "first failing case: check " << c.check_id << ", n="
                          << c.witness.n << ", r=" << c.witness.r << "\n  expected: "
                          << c.witness.expected_pretty << "\n  actual:   "
                          << c.witness.actual_pretty << "\n";
                break;
            }
        return 1;
    }
    return 0;
}

int run_cache(const std::string& action, bool have_pe, unsigned p, unsigned e,
              std::string path, long long dim_cap, unsigned long long n_max) {
    if (path.empty()) {
        if (!have_pe)
            throw std::invalid_argument("cache " + action + ": give --cache or both --p and --e");
        path = default_cache_path(p, e);
    }
    if (action == "build") {
        if (!have_pe) throw std::invalid_argument("cache build: --p and --e are required");
        GreenContext ctx(p, e, dim_cap);
        cache_build(ctx, n_max);
        cache_save(ctx, path);
        std::size_t entries = ctx.tensor_table().size() + ctx.lambda_table().size() +
                              ctx.s_table().size() + ctx.adams_lambda_table().size() +
                              ctx.adams_s_table().size();
        std::cout << "cache build: " << entries << " entries -> " << path << "\n";
        return 0;
    }
    if (action == "validate") {
        CacheValidation v = cache_validate(path, dim_cap);
        if (v.ok()) {
            std::cout << "cache validate: ok (" << v.entries_checked << " checked, "
                      << v.entries_skipped_cap << " skipped)\n";
            return 0;
        }
        for (const auto& m : v.mismatches) std::cerr << "mismatch: " << m << "\n";
        std::cerr << "cache validate: " << v.mismatches.size() << " mismatches\n";
        return 1;
    }
    if (action == "clear") {
        cache_clear(path);
        std::cout << "cache clear: " << path << "\n";
        return 0;
    }
    throw std::invalid_argument("unknown cache action '" + action + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculator for the representation ring of a cyclic p-group "
                 "in characteristic p"};
    app.require_subcommand(1);

    unsigned p = 0, e = 0;
    long long dim_cap = 60000;
    std::string cache_path, format = "pretty";
    ComputeArgs args;
    std::string suites = "all";
    VerifyOptions vopt;
    std::string cache_action;

    const std::vector<std::string> ops = {"adams-lambda", "adams-s", "lambda-power",
                                          "s-power",      "tensor",  "heller",
                                          "restrict",     "induce"};

    auto add_context_flags = [&](CLI::App* cmd, bool required_pe) {
        auto* po = cmd->add_option("--p", p, "prime characteristic");
        auto* eo = cmd->add_option("--e", e, "exponent: the group order is p^e");
        if (required_pe) {
            po->required();
            eo->required();
        }
        cmd->add_option("--dim-cap", dim_cap,
                        "largest module dimension materialized as a matrix");
        cmd->add_option("--cache", cache_path, "memo table file");
    };

    auto* compute = app.add_subcommand("compute", "evaluate one operation on basis classes");
    compute->add_option("op", args.op, "operation")->required()->check(CLI::IsMember(ops));
    add_context_flags(compute, true);
    compute->add_option("--n", args.n, "degree (for heller: shift count, default 1)");
    compute->add_option("--r", args.r, "basis index; for induce, an index of the subgroup ring");
    compute->add_option("--s", args.s, "second basis index (tensor only)");
    compute->add_option("--format", format, "pretty|json|csv")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));

    auto* table = app.add_subcommand(
        "table", "tabulate an operation over ranges; rows ordered n outer, r inner");
    table->add_option("op", args.op,
                      "operation; for tensor, --n indexes the first factor and --r the second")
        ->required()
        ->check(CLI::IsMember(ops));
    add_context_flags(table, true);
    table->add_option("--n", args.n, "degree or range 'a..b'");
    table->add_option("--r", args.r, "basis index or range 'a..b'");
    table->add_option("--format", format, "pretty|json|csv")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));

    auto* verify = app.add_subcommand("verify", "run verification suites, print a JSON report");
    add_context_flags(verify, true);
    verify
        ->add_option("--suites", suites,
                     "comma-separated: ring,powers,adams,periodicity,symonds,thm62,all")
        ->capture_default_str();
    verify->add_option("--seed", vopt.seed, "seed for randomized cases")->capture_default_str();
    verify->add_option("--n-max", vopt.n_max, "degree bound; 0 uses each check's default");
    verify->add_flag("--timings", vopt.timings, "include wall-clock fields in the report");
    std::string verify_format = "json";
    verify->add_option("--format", verify_format, "json|pretty")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));

    auto* cache = app.add_subcommand("cache", "build, validate, or remove the memo table file");
    cache->add_option("action", cache_action, "build|validate|clear")
        ->required()
        ->check(CLI::IsMember({"build", "validate", "clear"}));
    add_context_flags(cache, false);
    unsigned long long cache_n_max = 0;
    cache->add_option("--n-max", cache_n_max, "degree bound for built tables; 0 means 2q");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        int code = app.exit(ex);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed() || table->parsed()) {
            GreenContext ctx(p, e, dim_cap);
            return compute->parsed() ? run_compute(ctx, args, format, cache_path)
                                     : run_table(ctx, args, format, cache_path);
        }
        if (verify->parsed()) {
            GreenContext ctx(p, e, dim_cap);
            return run_verify(ctx, suites, vopt, verify_format, cache_path);
        }
        bool have_pe = cache->count("--p") > 0 && cache->count("--e") > 0;
        return run_cache(cache_action, have_pe, p, e, cache_path, dim_cap, cache_n_max);
    } catch (const CapExceededError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    } catch (const CacheError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const ConsistencyError& ex) {
        std::cerr << "internal consistency failure: " << ex.what() << "\n";
        return 1;
    } catch (const std::ios_base::failure& ex) {
        std::cerr << "i/o error: " << ex.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
