#ifndef GREENRING_VERIFY_HPP
#define GREENRING_VERIFY_HPP

#include <string>
#include <vector>

#include "greenring/greenring.hpp"

namespace greenring {

/* Statement-level verification checks.  Every verifier drives the raw
 * recursion paths only, so periodicity claims are never tested against a
 * computation that already assumes them. */

struct VerifyWitness {
    unsigned long long n = 0;
    unsigned r = 0;
    std::vector<long long> expected, actual;
    std::string expected_pretty, actual_pretty;
};

struct VerifyCheck {
    std::string check_id;
    std::string paper_ref;  // human-readable statement label
    std::string status;     // "pass", "fail", or "skipped_cap"
    unsigned long long cases_total = 0;
    unsigned long long cases_passed = 0;
    unsigned long long cases_skipped_cap = 0;
    bool has_witness = false;  // fail entries carry the first witness
    VerifyWitness witness;
    bool has_timing = false;  // off by default so reports stay byte-stable
    double timing_ms = 0;
};

struct VerificationReport {
    unsigned p = 2;
    unsigned long long q = 1;
    std::string suite;
    unsigned long long seed = 0;
    long long dim_cap = 0;
    std::vector<VerifyCheck> checks;
    bool has_wall_time = false;
    double wall_time_ms = 0;

    unsigned long long count(const std::string& status) const;
    bool all_passed() const;  // no "fail" entries; skips allowed
};

struct VerifyOptions {
    unsigned long long n_max = 0;  // 0 picks each check's default range
    unsigned long long seed = 12345;
    bool timings = false;
};

/* ---- individual checks; each appends one or more entries ---- */
void verify_period_lambda(GreenContext& ctx, unsigned long long n_max, VerificationReport& rep);
void verify_period_s(GreenContext& ctx, unsigned long long n_max, VerificationReport& rep);
unsigned long long minimal_period(GreenContext& ctx, const std::string& which);  // "lambda"/"s"
void verify_minimal_periods(GreenContext& ctx, VerificationReport& rep);
void verify_symmetry(GreenContext& ctx, const std::string& which, VerificationReport& rep);
void verify_delta(GreenContext& ctx, VerificationReport& rep);
void verify_closed_forms(GreenContext& ctx, unsigned long long n_max, VerificationReport& rep);
void verify_prop47(GreenContext& ctx, unsigned long long n_max, VerificationReport& rep);
void verify_symonds(GreenContext& ctx, VerificationReport& rep);
void verify_thm62(GreenContext& ctx, unsigned long long n_max, VerificationReport& rep);
void verify_powers(GreenContext& ctx, unsigned long long n_max, VerificationReport& rep);
void verify_adams_structure(GreenContext& ctx, unsigned long long n_max, unsigned long long seed,
                            VerificationReport& rep);
void verify_homomorphisms(GreenContext& ctx, unsigned long long seed, VerificationReport& rep);

/* suite in {ring, powers, adams, periodicity, symonds, thm62, all} */
bool is_known_suite(const std::string& suite);
VerificationReport run_suite(GreenContext& ctx, const std::string& suite,
                             const VerifyOptions& opt);

/* Fixed-key-order JSON rendering; byte-identical for identical inputs. */
std::string report_to_json(const VerificationReport& rep);

}  // namespace greenring

#endif
