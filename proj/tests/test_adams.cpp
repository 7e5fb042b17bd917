#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <vector>

#include "greenring/greenring.hpp"

using namespace greenring;

namespace {

GreenElement elem(const GreenContext& ctx, std::vector<long long> c) {
    c.resize(ctx.q(), 0);
    return GreenElement(ctx, std::move(c));
}

GreenElement random_elem(const GreenContext& ctx, std::mt19937& rng) {
    std::uniform_int_distribution<long long> d(-2, 2);
    std::vector<long long> c(ctx.q());
    for (auto& x : c) x = d(rng);
    return GreenElement(ctx, std::move(c));
}

bool is_power_of(unsigned long long v, unsigned p) {
    while (v % p == 0) v /= p;
    return v == 1;
}

}  // namespace

TEST_CASE("degree one and the trivial class") {
    std::mt19937 rng(5);
    for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{
             {2, 2}, {2, 3}, {3, 2}, {5, 1}}) {
        GreenContext ctx(p, e);
        for (int trial = 0; trial < 4; ++trial) {
            GreenElement a = random_elem(ctx, rng);
            CHECK(ctx.adams_lambda(1, a) == a);
            CHECK(ctx.adams_s_direct(1, a) == a);
        }
        for (unsigned r = 1; r <= ctx.q(); ++r)
            CHECK(ctx.adams_s_via_lambda(1, r) == ctx.basis(r));
        for (unsigned n = 1; n <= 10; ++n) {
            CHECK(ctx.adams_lambda_basis(n, 1) == ctx.basis(1));
            CHECK(ctx.adams_s_direct_basis(n, 1) == ctx.basis(1));
        }
    }
}

TEST_CASE("small frozen values") {
    GreenContext c2(2, 1);
    CHECK(c2.adams_lambda_basis(2, 2) == elem(c2, {-2, 2}));

    GreenContext c9(3, 2);
    CHECK(c9.adams_lambda_basis(6, 9) == elem(c9, {0, 0, 3}));

    GreenContext c4(2, 2);
    CHECK(c4.closed_form_adams_regular_lambda(4) == elem(c4, {-4, 4, 0, 0}));
    CHECK(c4.adams_s_via_lambda(2, 3) == elem(c4, {-1, 2, 0, 0}));
    CHECK(c4.adams_s_direct_basis(2, 3) == elem(c4, {-1, 2, 0, 0}));
    CHECK(c4.adams_s_direct_basis(3, 2) == c4.adams_lambda_basis(3, 2));

    GreenContext c8(2, 3);
    CHECK(c8.closed_form_adams_regular_lambda(3) == c8.basis(8));
    CHECK(c8.closed_form_adams_regular_s(4) == elem(c8, {0, 4}));
}

TEST_CASE("closed forms match the raw recursion on the regular class") {
    for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{
             {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}}) {
        GreenContext ctx(p, e);
        unsigned q = ctx.q();
        for (unsigned n = 1; n <= 2 * q; ++n)
            CHECK(ctx.closed_form_adams_regular_lambda(n) == ctx.adams_lambda_basis(n, q));
        unsigned s_limit = (q <= 5) ? 2 * q : (p == 2 ? 10u : 8u);
        for (unsigned n = 1; n <= s_limit; ++n)
            CHECK(ctx.closed_form_adams_regular_s(n) == ctx.adams_s_direct_basis(n, q));
    }
}

TEST_CASE("the two recursions agree away from the characteristic") {
    for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{
             {2, 1}, {2, 2}, {3, 1}, {5, 1}, {2, 3}, {3, 2}}) {
        GreenContext ctx(p, e);
        unsigned q = ctx.q();
        unsigned n_max = (q <= 5) ? 12u : (q == 8 ? 9u : 7u);
        for (unsigned n = 1; n <= n_max; ++n) {
            if (n % p == 0) continue;
            for (unsigned r = 1; r <= q; ++r)
                CHECK(ctx.adams_lambda_basis(n, r) == ctx.adams_s_direct_basis(n, r));
        }
    }
}

TEST_CASE("multiplicativity and composition away from the characteristic") {
    std::mt19937 rng(17);
    for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {3, 1}, {3, 2}}) {
        GreenContext ctx(p, e);
        for (unsigned n = 1; n <= 7; ++n) {
            if (n % p == 0) continue;
            for (int trial = 0; trial < 3; ++trial) {
                GreenElement a = random_elem(ctx, rng);
                GreenElement b = random_elem(ctx, rng);
                CHECK(ctx.adams_lambda(n, a + b) ==
                      ctx.adams_lambda(n, a) + ctx.adams_lambda(n, b));
                CHECK(ctx.adams_lambda(n, ctx.mul(a, b)) ==
                      ctx.mul(ctx.adams_lambda(n, a), ctx.adams_lambda(n, b)));
            }
            // composition holds for every second degree, including multiples of p
            for (unsigned nprime = 1; nprime <= 6; ++nprime)
                for (unsigned r = 1; r <= ctx.q(); ++r)
                    CHECK(ctx.adams_lambda(n, ctx.adams_lambda_basis(nprime, r)) ==
                          ctx.adams_lambda_basis(n * nprime, r));
        }
    }
}

TEST_CASE("the regular class is fixed away from the characteristic") {
    for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{
             {2, 2}, {2, 3}, {3, 2}, {5, 1}}) {
        GreenContext ctx(p, e);
        GreenElement vq = ctx.basis(ctx.q());
        for (unsigned n = 1; n <= 2 * ctx.q(); ++n) {
            if (n % p == 0) continue;
            CHECK(ctx.adams_lambda(n, vq) == vq);
            CHECK(ctx.adams_s(n, vq) == vq);
        }
    }
}

TEST_CASE("conversion through the syzygy formula equals the direct recursion") {
    for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{
             {3, 1}, {2, 2}, {2, 3}, {3, 2}}) {
        GreenContext ctx(p, e);
        unsigned q = ctx.q();
        unsigned n_max = (q <= 4) ? 12u : (q == 8 ? 8u : 6u);
        for (unsigned n = 1; n <= n_max; ++n)
            for (unsigned r = 1; r <= q; ++r)
                CHECK(ctx.adams_s_via_lambda(n, r) == ctx.adams_s_direct_basis(n, r));
        for (unsigned n = 1; n <= 3 * q; ++n)
            CHECK(ctx.adams_s_via_lambda(n, q) == ctx.closed_form_adams_regular_s(n));
    }
}

TEST_CASE("virtual dimension is preserved") {
    for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {3, 2}}) {
        GreenContext ctx(p, e);
        for (unsigned n = 1; n <= 8; ++n)
            for (unsigned r = 1; r <= ctx.q(); ++r) {
                CHECK(ctx.dimension(ctx.adams_lambda_basis(n, r)) == r);
                CHECK(ctx.dimension(ctx.adams_s_via_lambda(n, r)) == r);
            }
    }
}

TEST_CASE("periodicity and reflection of the exterior operations") {
    for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{
             {2, 1}, {2, 2}, {3, 1}, {2, 3}, {3, 2}}) {
        GreenContext ctx(p, e);
        unsigned q = ctx.q();
        for (unsigned r = 1; r <= q; ++r) {
            for (unsigned n = 1; n <= 2 * q + 2; ++n)
                CHECK(ctx.adams_lambda_basis(n, r) == ctx.adams_lambda_basis(n + 2 * q, r));
            for (unsigned n = 1; n < 2 * q; ++n)
                CHECK(ctx.adams_lambda_basis(n, r) == ctx.adams_lambda_basis(2 * q - n, r));
            CHECK(ctx.adams_lambda_basis(2 * q, r) == ctx.scale(r, ctx.basis(1)));
        }
        // no proper divisor of 2q is a period
        if (q > 1) {
            for (unsigned d = 1; d < 2 * q; ++d) {
                if ((2 * q) % d != 0) continue;
                bool broken = false;
                for (unsigned n = 1; n <= 2 * q && !broken; ++n)
                    for (unsigned r = 1; r <= q && !broken; ++r)
                        if (ctx.adams_lambda_basis(n, r) != ctx.adams_lambda_basis(n + d, r))
                            broken = true;
                CHECK(broken);
            }
        }
    }
}

TEST_CASE("periodicity and reflection of the symmetric operations") {
    for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{
             {2, 1}, {2, 2}, {3, 1}, {2, 3}, {3, 2}, {5, 1}}) {
        GreenContext ctx(p, e);
        unsigned q = ctx.q();
        unsigned sigma = (p == 2) ? q : 2 * q;
        for (unsigned r = 1; r <= q; ++r) {
            for (unsigned n = 1; n <= sigma + 2; ++n)
                CHECK(ctx.adams_s_via_lambda(n, r) ==
                      ctx.adams_s_via_lambda(n + sigma, r));
            for (unsigned n = 1; n < sigma; ++n)
                CHECK(ctx.adams_s_via_lambda(n, r) ==
                      ctx.adams_s_via_lambda(sigma - n, r));
            CHECK(ctx.adams_s_via_lambda(sigma, r) == ctx.scale(r, ctx.basis(1)));
        }
        // the full-period class collapses to the dimension times the trivial class,
        // also along the direct recursion where feasible
        if (q <= 5)
            for (unsigned r = 1; r <= q; ++r)
                CHECK(ctx.adams_s_direct_basis(sigma, r) == ctx.scale(r, ctx.basis(1)));
    }
    GreenContext c8(2, 3);
    for (unsigned r = 1; r <= 8; ++r)
        CHECK(c8.adams_s_direct_basis(8, r) == c8.scale(r, c8.basis(1)));
}

TEST_CASE("shifted periodicity below the top degree") {
    // for q not dividing n the shift 2p gcd(n, q) is already a period
    for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {3, 2}}) {
        GreenContext ctx(p, e);
        unsigned q = ctx.q();
        for (unsigned n = 1; n <= 2 * q; ++n) {
            if (n % q == 0) continue;
            unsigned shift = 2 * ctx.p() * (unsigned)std::gcd(n, q);
            for (unsigned r = 1; r <= q; ++r)
                CHECK(ctx.adams_lambda_basis(n, r) ==
                      ctx.adams_lambda_basis(n + shift, r));
        }
    }
}

TEST_CASE("fast paths reproduce the raw recursion bit for bit") {
    for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{
             {2, 1}, {2, 2}, {3, 1}, {2, 3}, {3, 2}, {5, 1}}) {
        GreenContext ctx(p, e);
        unsigned q = ctx.q();
        unsigned sigma = (p == 2) ? q : 2 * q;
        for (unsigned r = 1; r <= q; ++r) {
            GreenElement vr = ctx.basis(r);
            for (unsigned n = 1; n <= 4 * q + 3; ++n)
                CHECK(ctx.adams_lambda_fast(n, vr) == ctx.adams_lambda_basis(n, r));
            for (unsigned n = 1; n <= 3 * sigma; ++n)
                CHECK(ctx.adams_s_fast(n, vr) == ctx.adams_s_via_lambda(n, r));
        }
    }
    // the symmetric fast path against the direct recursion on a feasible window
    GreenContext c4(2, 2);
    for (unsigned r = 1; r <= 4; ++r)
        for (unsigned n = 1; n <= 12; ++n)
            CHECK(c4.adams_s_fast(n, c4.basis(r)) == c4.adams_s_direct_basis(n, r));
    CHECK_THROWS_AS(c4.adams_lambda_fast(0, c4.basis(1)), std::invalid_argument);
    CHECK_THROWS_AS(c4.adams_s_fast(0, c4.basis(1)), std::invalid_argument);
}

TEST_CASE("support and leading coefficient on the regular class") {
    for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{
             {2, 2}, {2, 3}, {3, 2}, {5, 1}}) {
        GreenContext ctx(p, e);
        unsigned q = ctx.q();
        for (unsigned n = 1; n <= 2 * q + 2; ++n) {
            GreenElement a = ctx.adams_lambda_basis(n, q);
            for (unsigned i = 1; i <= q; ++i)
                if (a.alpha(i) != 0) CHECK(is_power_of(i, ctx.p()));
            long long want = 0;
            if (n % q == 0) want = (p == 2 && (n / q) % 2 == 1) ? -(long long)q : (long long)q;
            CHECK(ctx.alpha1(a) == want);
        }
    }
}

TEST_CASE("restriction commutes with the operations") {
    for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {3, 2}}) {
        GreenContext ctx(p, e);
        GreenContext& sub = ctx.child();
        for (unsigned n = 1; n <= 10; ++n)
            for (unsigned r = 1; r <= ctx.q(); ++r) {
                GreenElement vr = ctx.basis(r);
                CHECK(ctx.restrict(ctx.adams_lambda(n, vr)) ==
                      sub.adams_lambda(n, ctx.restrict(vr)));
                CHECK(ctx.restrict(ctx.adams_s(n, vr)) ==
                      sub.adams_s(n, ctx.restrict(vr)));
            }
    }
}

TEST_CASE("inflation commutes with the operations") {
    GreenContext c8(2, 3);
    GreenContext c4(2, 2);
    for (unsigned n = 1; n <= 10; ++n)
        for (unsigned r = 1; r <= 4; ++r) {
            CHECK(c8.inflate(c4.adams_lambda_basis(n, r)) ==
                  c8.adams_lambda(n, c8.basis(r)));
            CHECK(c8.inflate(c4.adams_s_via_lambda(n, r)) ==
                  c8.adams_s_via_lambda(n, r));
        }
}

TEST_CASE("everything is the identity over the trivial group") {
    GreenContext c1(5, 0);
    GreenElement one = c1.basis(1);
    for (unsigned n = 1; n <= 9; ++n) {
        CHECK(c1.adams_lambda(n, one) == one);
        CHECK(c1.adams_s_direct(n, one) == one);
        CHECK(c1.adams_s_via_lambda(n, 1) == one);
        CHECK(c1.adams_lambda_fast(n, one) == one);
        CHECK(c1.adams_s_fast(n, one) == one);
        CHECK(c1.closed_form_adams_regular_lambda(n) == one);
        CHECK(c1.closed_form_adams_regular_s(n) == one);
    }
}

TEST_CASE("cap overruns surface as typed errors") {
    GreenContext capped(2, 3, 64);
    CHECK_THROWS_AS(capped.adams_s_direct_basis(3, 7), CapExceededError);
    CHECK_NOTHROW(capped.adams_s_via_lambda(3, 7));  // syzygy route needs no matrices
}
