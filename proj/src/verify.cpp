#include "greenring/verify.hpp"

#include <chrono>
#include <numeric>
#include <random>

#include <json.hpp>

#include "greenring/intutil.hpp"
#include "greenring/modreal.hpp"

namespace greenring {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

/* Accumulates cases for one check and finalizes its status. */
class CheckBuilder {
public:
    CheckBuilder(std::string id, std::string ref) : t0_(Clock::now()) {
        c_.check_id = std::move(id);
        c_.paper_ref = std::move(ref);
    }

    void case_eq(unsigned long long n, unsigned r, const GreenElement& expected,
                 const GreenElement& actual) {
        ++c_.cases_total;
        if (expected == actual) {
            ++c_.cases_passed;
            return;
        }
        if (!c_.has_witness) {
            c_.has_witness = true;
            c_.witness.n = n;
            c_.witness.r = r;
            c_.witness.expected = expected.coeffs();
            c_.witness.actual = actual.coeffs();
            c_.witness.expected_pretty = pretty(expected);
            c_.witness.actual_pretty = pretty(actual);
        }
    }

    void case_int(unsigned long long n, unsigned r, long long expected, long long actual) {
        ++c_.cases_total;
        if (expected == actual) {
            ++c_.cases_passed;
            return;
        }
        if (!c_.has_witness) {
            c_.has_witness = true;
            c_.witness.n = n;
            c_.witness.r = r;
            c_.witness.expected = {expected};
            c_.witness.actual = {actual};
            c_.witness.expected_pretty = std::to_string(expected);
            c_.witness.actual_pretty = std::to_string(actual);
        }
    }

    void skip_cap() {
        ++c_.cases_total;
        ++c_.cases_skipped_cap;
    }

    void finish(VerificationReport& rep) {
        bool any_fail = c_.cases_passed + c_.cases_skipped_cap < c_.cases_total;
        c_.status = any_fail ? "fail" : (c_.cases_skipped_cap ? "skipped_cap" : "pass");
        c_.timing_ms = ms_since(t0_);
        rep.checks.push_back(std::move(c_));
    }

private:
    VerifyCheck c_;
    Clock::time_point t0_;
};

unsigned long long pick(unsigned long long n_max, unsigned long long fallback) {
    return n_max ? n_max : fallback;
}

bool p_power_index(unsigned long long i, unsigned p) {
    while (i % p == 0) i /= p;
    return i == 1;
}

json witness_to_json(const VerifyCheck& c) {
    if (!c.has_witness) return nullptr;
    json w;
    w["n"] = c.witness.n;
    w["r"] = c.witness.r;
    w["expected"] = c.witness.expected;
    w["actual"] = c.witness.actual;
    w["expected_pretty"] = c.witness.expected_pretty;
    w["actual_pretty"] = c.witness.actual_pretty;
    return w;
}

}  // namespace

unsigned long long VerificationReport::count(const std::string& status) const {
    unsigned long long n = 0;
    for (const auto& c : checks)
        if (c.status == status) ++n;
    return n;
}

bool VerificationReport::all_passed() const { return count("fail") == 0; }

void verify_period_lambda(GreenContext& ctx, unsigned long long n_max, VerificationReport& rep) {
    unsigned long long q = ctx.q(), period = 2 * q;
    n_max = pick(n_max, 4 * q);
    CheckBuilder b("periodicity.lambda.period",
                   "exterior Adams operations repeat with period 2q");
    for (unsigned long long n = 1; n + period <= n_max; ++n)
        for (unsigned r = 1; r <= q; ++r)
            b.case_eq(n, r, ctx.adams_lambda_basis(n, r),
                      ctx.adams_lambda_basis(n + period, r));
    b.finish(rep);
}

void verify_period_s(GreenContext& ctx, unsigned long long n_max, VerificationReport& rep) {
    unsigned long long q = ctx.q();
    unsigned long long sigma = (q == 1) ? 1 : (ctx.p() == 2 ? q : 2 * q);
    n_max = pick(n_max, 2 * sigma);
    CheckBuilder b("periodicity.s.period",
                   "symmetric Adams operations repeat with period sigma");
    for (unsigned long long n = 1; n + sigma <= n_max; ++n)
        for (unsigned r = 1; r <= q; ++r)
            b.case_eq(n, r, ctx.adams_s_via_lambda(n, r),
                      ctx.adams_s_via_lambda(n + sigma, r));
    b.finish(rep);
}

unsigned long long minimal_period(GreenContext& ctx, const std::string& which) {
    if (which != "lambda" && which != "s")
        throw std::invalid_argument("minimal_period: which must be 'lambda' or 's'");
    bool lambda = which == "lambda";
    unsigned long long q = ctx.q(), span = 2 * q;
    for (unsigned long long d = 1; d <= span; ++d) {
        if (span % d != 0) continue;
        bool ok = true;
        for (unsigned long long n = 1; n <= span && ok; ++n)
            for (unsigned r = 1; r <= q && ok; ++r) {
                GreenElement lhs = lambda ? ctx.adams_lambda_basis(n, r)
                                          : ctx.adams_s_via_lambda(n, r);
                GreenElement rhs = lambda ? ctx.adams_lambda_basis(n + d, r)
                                          : ctx.adams_s_via_lambda(n + d, r);
                if (lhs != rhs) ok = false;
            }
        if (ok) return d;
    }
    return span;  // unreachable: span itself is a period
}

void verify_minimal_periods(GreenContext& ctx, VerificationReport& rep) {
    unsigned long long q = ctx.q();
    {
        CheckBuilder b("periodicity.lambda.minimal_period",
                       "the minimum period of the exterior operations is exactly 2q");
        long long want = (q == 1) ? 1 : (long long)(2 * q);
        b.case_int(0, 0, want, (long long)minimal_period(ctx, "lambda"));
        b.finish(rep);
    }
    {
        CheckBuilder b("periodicity.s.minimal_period",
                       "sigma is q for p = 2 and 2q for p odd");
        long long want = (q == 1) ? 1 : (ctx.p() == 2 ? (long long)q : (long long)(2 * q));
        b.case_int(0, 0, want, (long long)minimal_period(ctx, "s"));
        b.finish(rep);
    }
}

void verify_symmetry(GreenContext& ctx, const std::string& which, VerificationReport& rep) {
    unsigned long long q = ctx.q();
    if (which == "lambda") {
        CheckBuilder b("periodicity.lambda.reflection",
                       "degree n and degree 2q - n give the same exterior operation");
        for (unsigned long long n = 1; n < 2 * q; ++n)
            for (unsigned r = 1; r <= q; ++r)
                b.case_eq(n, r, ctx.adams_lambda_basis(n, r),
                          ctx.adams_lambda_basis(2 * q - n, r));
        b.finish(rep);
        return;
    }
    if (which != "s") throw std::invalid_argument("verify_symmetry: which must be 'lambda' or 's'");
    unsigned long long sigma = (q == 1) ? 1 : (ctx.p() == 2 ? q : 2 * q);
    CheckBuilder b("periodicity.s.reflection",
                   "degree n and degree sigma - n give the same symmetric operation");
    for (unsigned long long n = 1; n < sigma; ++n)
        for (unsigned r = 1; r <= q; ++r)
            b.case_eq(n, r, ctx.adams_s_via_lambda(n, r),
                      ctx.adams_s_via_lambda(sigma - n, r));
    b.finish(rep);
}

void verify_delta(GreenContext& ctx, VerificationReport& rep) {
    unsigned long long q = ctx.q();
    unsigned long long sigma = (q == 1) ? 1 : (ctx.p() == 2 ? q : 2 * q);
    {
        CheckBuilder b("periodicity.lambda.delta_endpoint",
                       "the full-period exterior operation is the dimension projection");
        for (unsigned r = 1; r <= q; ++r)
            b.case_eq(2 * q, r, ctx.scale((long long)r, ctx.basis(1)),
                      ctx.adams_lambda_basis(2 * q, r));
        b.finish(rep);
    }
    {
        CheckBuilder b("periodicity.s.delta_endpoint",
                       "the full-period symmetric operation is the dimension projection");
        for (unsigned r = 1; r <= q; ++r)
            b.case_eq(sigma, r, ctx.scale((long long)r, ctx.basis(1)),
                      ctx.adams_s_via_lambda(sigma, r));
        b.finish(rep);
    }
}

void verify_closed_forms(GreenContext& ctx, unsigned long long n_max, VerificationReport& rep) {
    unsigned long long q = ctx.q();
    n_max = pick(n_max, 4 * q);
    {
        CheckBuilder b("adams.regular.closed_form_lambda",
                       "gcd closed form for the exterior operations on the regular class");
        for (unsigned long long n = 1; n <= n_max; ++n)
            b.case_eq(n, (unsigned)q, ctx.closed_form_adams_regular_lambda(n),
                      ctx.adams_lambda_basis(n, (unsigned)q));
        b.finish(rep);
    }
    {
        CheckBuilder b("adams.regular.closed_form_s",
                       "gcd closed form for the symmetric operations on the regular class");
        for (unsigned long long n = 1; n <= n_max; ++n)
            b.case_eq(n, (unsigned)q, ctx.closed_form_adams_regular_s(n),
                      ctx.adams_s_direct_basis(n, (unsigned)q));
        b.finish(rep);
    }
}

void verify_prop47(GreenContext& ctx, unsigned long long n_max, VerificationReport& rep) {
    unsigned long long q = ctx.q();
    n_max = pick(n_max, 2 * q);
    CheckBuilder b("periodicity.lambda.shifted_period",
                   "below the top degree the shift 2p gcd(n, q) is already a period");
    for (unsigned long long n = 1; n <= n_max; ++n) {
        if (q == 1 || n % q == 0) continue;
        unsigned long long shift = 2ull * ctx.p() * std::gcd(n, q);
        for (unsigned r = 1; r <= q; ++r)
            b.case_eq(n, r, ctx.adams_lambda_basis(n, r),
                      ctx.adams_lambda_basis(n + shift, r));
    }
    b.finish(rep);
}

void verify_symonds(GreenContext& ctx, VerificationReport& rep) {
    unsigned long long q = ctx.q();
    unsigned p = ctx.p();
    CheckBuilder b("symonds.induced_equivalence",
                   "symmetric powers are induced-equivalent to shifted exterior powers "
                   "of the complementary block");
    unsigned r_lo = (q == 1) ? 1 : (unsigned)(q / p);
    for (unsigned r = r_lo; r <= q; ++r)
        for (unsigned long long n = 1; n < q; ++n) {
            GreenElement lhs = ctx.zero(), rhs = ctx.zero();
            try {
                lhs = ctx.s_power(r, n);
                rhs = (r == q) ? ctx.zero()
                               : ctx.heller(ctx.lambda_power((unsigned)(q - r), n), n);
            } catch (const CapExceededError&) {
                b.skip_cap();
                continue;
            }
            // equal elements are trivially induced-equivalent, so a failed
            // equivalence always yields a genuine witness pair
            b.case_eq(n, r, rhs, ctx.ind_equiv(lhs, rhs) ? rhs : lhs);
        }
    b.finish(rep);
}

void verify_thm62(GreenContext& ctx, unsigned long long n_max, VerificationReport& rep) {
    unsigned long long q = ctx.q();
    unsigned p = ctx.p();
    n_max = pick(n_max, 12);
    CheckBuilder b("thm62.conversion",
                   "the syzygy conversion formula reproduces the direct symmetric recursion");
    unsigned r_lo = (q == 1) ? 1 : (unsigned)(q / p);
    for (unsigned long long n = 1; n <= n_max; ++n)
        for (unsigned r = r_lo; r <= q; ++r) {
            GreenElement via = ctx.adams_s_via_lambda(n, r);
            try {
                b.case_eq(n, r, via, ctx.adams_s_direct_basis(n, r));
            } catch (const CapExceededError&) {
                b.skip_cap();
            }
        }
    b.finish(rep);
}

void verify_powers(GreenContext& ctx, unsigned long long n_max, VerificationReport& rep) {
    unsigned long long q = ctx.q();
    n_max = pick(n_max, 12);
    {
        CheckBuilder b("powers.lambda.palindromy",
                       "exterior powers of a block agree in complementary degrees");
        for (unsigned r = 1; r <= q; ++r)
            for (unsigned j = 0; j <= r / 2; ++j) {
                try {
                    GreenElement high = decompose_nilpotent(
                        ctx, exterior_power_block_csr(ctx, r, (unsigned long long)(r - j)));
                    b.case_eq(j, r, ctx.lambda_power(r, j), high);
                } catch (const CapExceededError&) {
                    b.skip_cap();
                }
            }
        b.finish(rep);
    }
    {
        CheckBuilder b("powers.degree_one", "first powers reproduce the block itself");
        for (unsigned r = 1; r <= q; ++r) {
            b.case_eq(1, r, ctx.basis(r), ctx.lambda_power(r, 1));
            b.case_eq(1, r, ctx.basis(r), ctx.s_power(r, 1));
        }
        b.finish(rep);
    }
    {
        CheckBuilder b("powers.dimension",
                       "power dimensions follow the binomial bookkeeping");
        for (unsigned r = 1; r <= q; ++r) {
            for (unsigned j = 0; j <= r; ++j)
                b.case_int(j, r, u128_to_ll(binomial_u128(r, j), "wedge dimension"),
                           ctx.dimension(ctx.lambda_power(r, j)));
            for (unsigned long long n = 0; n <= n_max; ++n) {
                try {
                    long long dim = ctx.dimension(ctx.s_power(r, n));
                    b.case_int(n, r,
                               u128_to_ll(binomial_u128(r + n - 1, n), "symmetric dimension"),
                               dim);
                } catch (const CapExceededError&) {
                    b.skip_cap();
                }
            }
        }
        b.finish(rep);
    }
    {
        CheckBuilder b("powers.regular.support",
                       "powers of the regular class live in the permutation subring");
        for (unsigned long long n = 0; n <= 2 * q; ++n) {
            GreenElement l = ctx.lambda_regular(n);
            GreenElement s = ctx.s_regular(n);
            for (unsigned i = 1; i <= q; ++i) {
                if (p_power_index(i, ctx.p())) continue;
                b.case_int(n, i, 0, l.alpha(i));
                b.case_int(n, i, 0, s.alpha(i));
            }
        }
        b.finish(rep);
    }
    {
        CheckBuilder b("powers.regular.alpha1",
                       "trivial-class coefficients of regular powers: endpoints for the "
                       "exterior side, multiples of q for the symmetric side");
        for (unsigned long long n = 0; n <= 2 * q + 2; ++n) {
            if (n <= q)
                b.case_int(n, 1, (n == 0 || n == q) ? 1 : 0,
                           ctx.alpha1(ctx.lambda_regular(n)));
            b.case_int(n, 1, (n % q == 0) ? 1 : 0, ctx.alpha1(ctx.s_regular(n)));
        }
        b.finish(rep);
    }
}

void verify_adams_structure(GreenContext& ctx, unsigned long long n_max, unsigned long long seed,
                            VerificationReport& rep) {
    unsigned long long q = ctx.q();
    unsigned p = ctx.p();
    n_max = pick(n_max, 12);
    std::mt19937 rng((unsigned)seed);
    std::uniform_int_distribution<long long> coeff(-2, 2);
    auto random_elem = [&]() {
        std::vector<long long> c(q);
        for (auto& x : c) x = coeff(rng);
        return GreenElement(ctx, std::move(c));
    };

    {
        CheckBuilder b("adams.family_agreement.equality",
                       "away from the characteristic the two Adams families coincide");
        for (unsigned long long n = 1; n <= n_max; ++n) {
            if (n % p == 0) continue;
            for (unsigned r = 1; r <= q; ++r) {
                try {
                    b.case_eq(n, r, ctx.adams_lambda_basis(n, r),
                              ctx.adams_s_direct_basis(n, r));
                } catch (const CapExceededError&) {
                    b.skip_cap();
                }
            }
        }
        b.finish(rep);
    }
    {
        CheckBuilder b("adams.family_agreement.multiplicativity",
                       "away from the characteristic the operations are ring maps");
        for (unsigned long long n = 1; n <= 7; ++n) {
            if (n % p == 0) continue;
            for (int trial = 0; trial < 3; ++trial) {
                GreenElement a = random_elem();
                GreenElement bb = random_elem();
                b.case_eq(n, 0, ctx.adams_lambda(n, ctx.mul(a, bb)),
                          ctx.mul(ctx.adams_lambda(n, a), ctx.adams_lambda(n, bb)));
            }
        }
        b.finish(rep);
    }
    {
        CheckBuilder b("adams.family_agreement.composition",
                       "composition multiplies degrees when the outer degree avoids p");
        for (unsigned long long n = 1; n <= 5; ++n) {
            if (n % p == 0) continue;
            for (unsigned long long m = 1; m <= 6; ++m)
                for (unsigned r = 1; r <= q; ++r)
                    b.case_eq(n * 100 + m, r, ctx.adams_lambda_basis(n * m, r),
                              ctx.adams_lambda(n, ctx.adams_lambda_basis(m, r)));
        }
        b.finish(rep);
    }
    {
        CheckBuilder b("adams.regular.fixed",
                       "the regular class is fixed away from the characteristic");
        GreenElement vq = ctx.basis((unsigned)q);
        for (unsigned long long n = 1; n <= 2 * q; ++n) {
            if (n % p == 0) continue;
            b.case_eq(n, (unsigned)q, vq, ctx.adams_lambda(n, vq));
            b.case_eq(n, (unsigned)q, vq, ctx.adams_s_via_lambda(n, (unsigned)q));
        }
        b.finish(rep);
    }
    {
        CheckBuilder b("adams.restriction_compatibility",
                       "the operations commute with restriction to the maximal subgroup");
        if (q > 1) {
            GreenContext& sub = ctx.child();
            for (unsigned long long n = 1; n <= std::min<unsigned long long>(n_max, 10); ++n)
                for (unsigned r = 1; r <= q; ++r) {
                    GreenElement vr = ctx.basis(r);
                    b.case_eq(n, r, sub.adams_lambda(n, ctx.restrict(vr)),
                              ctx.restrict(ctx.adams_lambda(n, vr)));
                    b.case_eq(n, r, sub.adams_s(n, ctx.restrict(vr)),
                              ctx.restrict(ctx.adams_s(n, vr)));
                }
        }
        b.finish(rep);
    }
    {
        CheckBuilder b("adams.regular.alpha1_signed",
                       "trivial-class coefficient of the regular operations carries the "
                       "characteristic-two sign");
        for (unsigned long long n = 1; n <= 2 * q + 2; ++n) {
            GreenElement a = ctx.adams_lambda_basis(n, (unsigned)q);
            long long want = 0;
            if (q == 1)
                want = 1;  // every operation is the identity
            else if (n % q == 0)
                want = (p == 2 && (n / q) % 2 == 1) ? -(long long)q : (long long)q;
            b.case_int(n, 1, want, ctx.alpha1(a));
            for (unsigned i = 1; i <= q; ++i)
                if (!p_power_index(i, p)) b.case_int(n, i, 0, a.alpha(i));
        }
        b.finish(rep);
    }
}

void verify_homomorphisms(GreenContext& ctx, unsigned long long seed, VerificationReport& rep) {
    unsigned long long q = ctx.q();
    unsigned p = ctx.p();
    std::mt19937 rng((unsigned)seed);
    std::uniform_int_distribution<long long> coeff(-3, 3);
    auto random_elem = [&]() {
        std::vector<long long> c(q);
        for (auto& x : c) x = coeff(rng);
        return GreenElement(ctx, std::move(c));
    };

    {
        CheckBuilder b("ring.axioms",
                       "commutativity, associativity, distributivity, identity, and "
                       "dimension multiplicativity on random elements");
        GreenElement one = ctx.basis(1);
        for (int trial = 0; trial < 6; ++trial) {
            GreenElement a = random_elem(), bb = random_elem(), c = random_elem();
            b.case_eq(trial, 0, ctx.mul(a, bb), ctx.mul(bb, a));
            b.case_eq(trial, 0, ctx.mul(a, one), a);
            b.case_eq(trial, 0, ctx.mul(a, bb + c), ctx.mul(a, bb) + ctx.mul(a, c));
            if (q <= 8)
                b.case_eq(trial, 0, ctx.mul(ctx.mul(a, bb), c), ctx.mul(a, ctx.mul(bb, c)));
            b.case_int(trial, 0, ctx.dimension(a) * ctx.dimension(bb),
                       ctx.dimension(ctx.mul(a, bb)));
        }
        b.finish(rep);
    }
    {
        CheckBuilder b("ring.projective_absorption",
                       "a permutation-subring block absorbs smaller blocks up to dimension");
        for (unsigned long long pj = 1; pj <= q; pj *= p)
            for (unsigned r = 1; r <= pj; ++r)
                b.case_eq(pj, r, ctx.scale((long long)r, ctx.basis((unsigned)pj)),
                          ctx.mul(ctx.basis(r), ctx.basis((unsigned)pj)));
        b.finish(rep);
    }
    {
        CheckBuilder b("ring.restriction_homomorphism",
                       "restriction to the maximal subgroup is a ring homomorphism");
        if (q > 1) {
            GreenContext& sub = ctx.child();
            for (unsigned r = 1; r <= q; ++r)
                for (unsigned s = r; s <= q; ++s)
                    b.case_eq(r, s,
                              sub.mul(ctx.restrict(ctx.basis(r)), ctx.restrict(ctx.basis(s))),
                              ctx.restrict(ctx.mul(ctx.basis(r), ctx.basis(s))));
        }
        b.finish(rep);
    }
    {
        CheckBuilder b("ring.projection_formula",
                       "multiplying an induced class equals inducing after restriction");
        if (q > 1) {
            GreenContext& sub = ctx.child();
            for (unsigned u = 1; u <= q / p; ++u)
                for (unsigned v = 1; v <= q; ++v)
                    b.case_eq(u, v,
                              ctx.induce(sub.mul(sub.basis(u), ctx.restrict(ctx.basis(v)))),
                              ctx.mul(ctx.induce(sub.basis(u)), ctx.basis(v)));
        }
        b.finish(rep);
    }
    {
        CheckBuilder b("ring.inflation_embedding",
                       "products of factor-group classes survive inflation unchanged");
        if (q > 1) {
            GreenContext* factor = &ctx.child();
            while (true) {
                unsigned fq = factor->q();
                for (unsigned r = 1; r <= fq; ++r)
                    for (unsigned s = r; s <= fq; ++s)
                        b.case_eq(r, s,
                                  ctx.inflate(factor->mul(factor->basis(r), factor->basis(s))),
                                  ctx.mul(ctx.basis(r), ctx.basis(s)));
                if (!factor->has_child()) break;
                factor = &factor->child();
            }
        }
        b.finish(rep);
    }
    {
        CheckBuilder b("ring.heller_involution",
                       "the syzygy shift swaps complementary blocks and kills the top one");
        for (unsigned r = 1; r < q; ++r) {
            b.case_eq(1, r, ctx.basis((unsigned)(q - r)), ctx.heller(ctx.basis(r)));
            b.case_eq(2, r, ctx.basis(r), ctx.heller(ctx.basis(r), 2));
        }
        b.case_eq(1, (unsigned)q, ctx.zero(), ctx.heller(ctx.basis((unsigned)q)));
        b.finish(rep);
    }
    {
        CheckBuilder b("ring.vanishing_restriction",
                       "an induced element with zero restriction is zero");
        if (q > 1) {
            unsigned m = (unsigned)(q / p);
            std::vector<long long> c(m, -2);
            unsigned long long idx = 0;
            while (true) {
                std::vector<long long> full(q, 0);
                for (unsigned i = 0; i < m; ++i) full[(std::size_t)(i + 1) * p - 1] = c[i];
                GreenElement a(ctx, std::move(full));
                b.case_int(idx++, 0, a.is_zero() ? 1 : 0,
                           ctx.restrict(a).is_zero() ? 1 : 0);
                unsigned i = 0;
                while (i < m && c[i] == 2) c[i++] = -2;
                if (i == m) break;
                ++c[i];
            }
        }
        b.finish(rep);
    }
}

bool is_known_suite(const std::string& suite) {
    return suite == "ring" || suite == "powers" || suite == "adams" ||
           suite == "periodicity" || suite == "symonds" || suite == "thm62" || suite == "all";
}

VerificationReport run_suite(GreenContext& ctx, const std::string& suite,
                             const VerifyOptions& opt) {
    if (!is_known_suite(suite)) throw std::invalid_argument("unknown suite: " + suite);
    Clock::time_point t0 = Clock::now();
    VerificationReport rep;
    rep.p = ctx.p();
    rep.q = ctx.q();
    rep.suite = suite;
    rep.seed = opt.seed;
    rep.dim_cap = ctx.dim_cap();

    bool all = suite == "all";
    if (all || suite == "ring") verify_homomorphisms(ctx, opt.seed, rep);
    if (all || suite == "powers") verify_powers(ctx, opt.n_max, rep);
    if (all || suite == "adams") {
        verify_closed_forms(ctx, opt.n_max, rep);
        verify_adams_structure(ctx, opt.n_max, opt.seed, rep);
    }
    if (all || suite == "periodicity") {
        verify_period_lambda(ctx, opt.n_max, rep);
        verify_period_s(ctx, opt.n_max, rep);
        verify_minimal_periods(ctx, rep);
        verify_symmetry(ctx, "lambda", rep);
        verify_symmetry(ctx, "s", rep);
        verify_delta(ctx, rep);
        verify_prop47(ctx, opt.n_max, rep);
    }
    if (all || suite == "symonds") verify_symonds(ctx, rep);
    if (all || suite == "thm62") verify_thm62(ctx, opt.n_max, rep);

    for (auto& c : rep.checks) c.has_timing = opt.timings;
    rep.wall_time_ms = ms_since(t0);
    rep.has_wall_time = opt.timings;
    return rep;
}

std::string report_to_json(const VerificationReport& rep) {
    json doc;
    doc["context"] = {{"p", rep.p}, {"q", rep.q}};
    doc["suite"] = rep.suite;
    doc["seed"] = rep.seed;
    doc["dim_cap"] = rep.dim_cap;
    doc["checks"] = json::array();
    for (const auto& c : rep.checks) {
        json jc;
        jc["check_id"] = c.check_id;
        jc["paper_ref"] = c.paper_ref;
        jc["status"] = c.status;
        jc["cases_total"] = c.cases_total;
        jc["cases_passed"] = c.cases_passed;
        jc["cases_skipped_cap"] = c.cases_skipped_cap;
        jc["witness"] = witness_to_json(c);
        if (c.has_timing)
            jc["timing_ms"] = c.timing_ms;
        else
            jc["timing_ms"] = nullptr;
        doc["checks"].push_back(std::move(jc));
    }
    doc["summary"] = {{"pass", rep.count("pass")},
                      {"fail", rep.count("fail")},
                      {"skipped_cap", rep.count("skipped_cap")}};
    if (rep.has_wall_time)
        doc["wall_time_ms"] = rep.wall_time_ms;
    else
        doc["wall_time_ms"] = nullptr;
    return doc.dump(2) + "\n";
}

}  // namespace greenring
