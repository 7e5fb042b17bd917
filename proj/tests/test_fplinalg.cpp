#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "greenring/fplinalg.hpp"
#include "greenring/intutil.hpp"
#include "oracles.hpp"
#include "testutil.hpp"

using namespace greenring;
using oracle::Mat;
using testutil::to_mat;
using testutil::to_matrix;

TEST_CASE("prime field arithmetic") {
    for (unsigned p : {2u, 3u, 5u, 7u, 13u, 61u}) {
        PrimeField f(p);
        CHECK(f.p() == p);
        for (unsigned a = 1; a < p; ++a) {
            CHECK(f.mul(a, f.inv(a)) == 1);
            CHECK(f.add(a, f.neg(a)) == 0);
        }
        CHECK(f.reduce_signed(-1) == p - 1);
        CHECK(f.reduce_signed((long long)p * 7) == 0);
    }
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(9), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(65), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(2).inv(0), std::domain_error);
}

TEST_CASE("binomial helpers") {
    CHECK(u128_to_ll(binomial_u128(0, 0), "b") == 1);
    CHECK(u128_to_ll(binomial_u128(10, 3), "b") == 120);
    CHECK(u128_to_ll(binomial_u128(52, 5), "b") == 2598960);
    CHECK(binomial_u128(5, 9) == 0);
    CHECK(binomial_capped(1000, 500, 1000000) == 1000001);
    CHECK(binomial_capped(10, 2, 1000000) == 45);

    for (int p : {2, 3, 5, 7}) {
        for (unsigned n = 0; n <= 36; ++n)
            for (unsigned k = 0; k <= n; ++k) {
                unsigned direct = (unsigned)(u128_to_ll(binomial_u128(n, k), "b") % p);
                CHECK(binomial_mod_p(n, k, (unsigned)p) == direct);
            }
    }

    for (int p : {2, 3, 5}) {
        for (unsigned m = 0; m <= 50; ++m) {
            auto nz = nonzero_binomials_mod_p(m, (unsigned)p);
            std::size_t at = 0;
            for (unsigned j = 0; j <= m; ++j) {
                unsigned c = binomial_mod_p(m, j, (unsigned)p);
                if (c) {
                    REQUIRE(at < nz.size());
                    CHECK(nz[at].first == j);
                    CHECK(nz[at].second == c);
                    ++at;
                }
            }
            CHECK(at == nz.size());
        }
    }
}

TEST_CASE("matrix storage round trip") {
    for (unsigned p : {2u, 5u}) {
        PrimeField f(p);
        MatrixFp m(f, 3, 130);  // >2 words when packed
        std::mt19937 rng(7);
        Mat ref = oracle::random_mat(3, 130, (int)p, rng);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 130; ++j) m.set(i, j, (unsigned)ref[i][j]);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 130; ++j) CHECK(m.at(i, j) == (unsigned)ref[i][j]);
        CHECK_THROWS_AS(m.at(3, 0), std::out_of_range);
        CHECK_THROWS_AS(m.at(0, 130), std::out_of_range);
        CHECK_THROWS_AS(m.set(0, 0, p), std::invalid_argument);
    }
}

TEST_CASE("matmul and matpow match the reference") {
    std::mt19937 rng(11);
    for (int p : {2, 3, 5, 7}) {
        PrimeField f((unsigned)p);
        for (int trial = 0; trial < 6; ++trial) {
            std::size_t n = 1 + rng() % 17, k = 1 + rng() % 17, c = 1 + rng() % 17;
            Mat a = oracle::random_mat(n, k, p, rng);
            Mat b = oracle::random_mat(k, c, p, rng);
            CHECK(to_mat(matmul(to_matrix(a, f), to_matrix(b, f))) == oracle::mul(a, b, p));
        }
        Mat s = oracle::random_mat(6, 6, p, rng);
        MatrixFp ms = to_matrix(s, f);
        CHECK(matpow(ms, 0) == MatrixFp::identity(f, 6));
        CHECK(matpow(ms, 5) == to_matrix(oracle::matpow(s, 5, p), f));
        CHECK(to_mat(subtract_identity(ms)) == oracle::matsub(s, oracle::idm(6), p));
    }
    PrimeField f2(2);
    CHECK_THROWS_AS(matmul(MatrixFp(f2, 2, 3), MatrixFp(f2, 4, 2)), std::invalid_argument);
    CHECK_THROWS_AS(matmul(MatrixFp(f2, 2, 2), MatrixFp(PrimeField(3), 2, 2)),
                    std::invalid_argument);
}

TEST_CASE("rank matches the reference eliminator") {
    std::mt19937 rng(23);
    for (int p : {2, 3, 5, 7, 13}) {
        PrimeField f((unsigned)p);
        for (int trial = 0; trial < 10; ++trial) {
            std::size_t n = 1 + rng() % 60, c = 1 + rng() % 90;
            Mat a = oracle::random_mat(n, c, p, rng);
            CHECK(rank(to_matrix(a, f)) == oracle::rank(a, p));
        }
        // forced rank deficiency: (n x k) * (k x c) has rank at most k
        for (int trial = 0; trial < 6; ++trial) {
            std::size_t n = 20 + rng() % 40, c = 20 + rng() % 60, k = 1 + rng() % 8;
            Mat a = oracle::mul(oracle::random_mat(n, k, p, rng),
                                oracle::random_mat(k, c, p, rng), p);
            std::size_t r = rank(to_matrix(a, f));
            CHECK(r == oracle::rank(a, p));
            CHECK(r <= k);
        }
    }
}

TEST_CASE("rank crosses window boundaries correctly") {
    // wide matrices exercise several 64-column windows per row
    std::mt19937 rng(31);
    for (int p : {2, 3, 5}) {
        PrimeField f((unsigned)p);
        for (std::size_t c : {63u, 64u, 65u, 128u, 200u}) {
            Mat a = oracle::random_mat(40, c, p, rng);
            CHECK(rank(to_matrix(a, f)) == oracle::rank(a, p));
        }
    }
}

TEST_CASE("rank is invariant under row and column operations") {
    std::mt19937 rng(37);
    for (int p : {2, 3, 5}) {
        PrimeField f((unsigned)p);
        Mat a = oracle::random_mat(30, 45, p, rng);
        std::size_t r0 = rank(to_matrix(a, f));

        Mat shuffled = a;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(rank(to_matrix(shuffled, f)) == r0);

        Mat s = oracle::random_strictly_upper(45, p, rng);
        for (std::size_t i = 0; i < 45; ++i) s[i][i] = 1;
        CHECK(rank(to_matrix(oracle::mul(a, s, p), f)) == r0);

        Mat t(45, std::vector<int>(30, 0));
        for (std::size_t i = 0; i < 30; ++i)
            for (std::size_t j = 0; j < 45; ++j) t[j][i] = a[i][j];
        CHECK(rank(to_matrix(t, f)) == r0);
    }
}

TEST_CASE("rank at moderate size per storage tier") {
    std::mt19937 rng(41);
    for (int p : {2, 3, 5}) {
        PrimeField f((unsigned)p);
        std::size_t n = 300, c = 420, k = 250;
        Mat a = oracle::mul(oracle::random_mat(n, k, p, rng), oracle::random_mat(k, c, p, rng), p);
        CHECK(rank(to_matrix(a, f)) == oracle::rank(a, p));
    }
}

TEST_CASE("jordan type of explicit block sums") {
    std::mt19937 rng(43);
    for (int p : {2, 3, 5}) {
        unsigned q = p == 2 ? 4 : (unsigned)p;  // block sizes stay within q
        PrimeField f((unsigned)p);
        Mat m = oracle::direct_sum(oracle::jordan_block(3), oracle::jordan_block(2));
        m = oracle::direct_sum(m, oracle::jordan_block(2));
        m = oracle::direct_sum(m, oracle::jordan_block(1));
        if (p == 2) m = oracle::direct_sum(m, oracle::jordan_block(4));

        // conjugate by a random unipotent upper-triangular matrix
        std::size_t n = m.size();
        Mat s = oracle::random_strictly_upper(n, p, rng);
        for (std::size_t i = 0; i < n; ++i) s[i][i] = 1;
        Mat conj = oracle::mul(oracle::mul(s, m, p), oracle::inv_unipotent_upper(s, p), p);

        JordanType jt = jordan_type_unipotent(to_matrix(conj, f), q);
        JordanType expect;
        expect.blocks[1] = 1;
        expect.blocks[2] = 2;
        expect.blocks[3] = 1;
        if (p == 2) expect.blocks[4] = 1;
        CHECK(jt == expect);
        CHECK(jt.dim() == n);
        CHECK(jt.blocks == oracle::jordan_slow(conj, q, p));
    }
}

TEST_CASE("jordan type detects contract violations") {
    PrimeField f5(5);
    MatrixFp m(f5, 2, 2);
    m.set(0, 0, 2);
    m.set(1, 1, 1);
    CHECK_THROWS_AS(jordan_type_unipotent(m, 4), std::invalid_argument);  // eigenvalue 2
    CHECK_THROWS_AS(jordan_type_unipotent(MatrixFp(f5, 2, 3), 4), std::invalid_argument);

    CHECK_THROWS_AS(jordan_type_from_ranks(4, 2, {1, 2}), ConsistencyError);
    CHECK_THROWS_AS(jordan_type_from_ranks(4, 3, {1, 0}), std::invalid_argument);
}

TEST_CASE("sparse rank chain agrees with dense powers") {
    std::mt19937 rng(47);
    for (int p : {2, 3, 5}) {
        PrimeField f((unsigned)p);
        for (int trial = 0; trial < 4; ++trial) {
            std::size_t n = 20 + rng() % 30;
            Mat nm = oracle::random_strictly_upper(n, p, rng);
            unsigned q = 8;
            FpCsr csr = csr_from_dense(to_matrix(nm, f), false);
            auto ranks = nilpotent_rank_sequence(f, csr, q);
            REQUIRE(ranks.size() == q);
            for (unsigned k = 1; k <= q; ++k)
                CHECK(ranks[k - 1] == oracle::rank(oracle::matpow(nm, k, p), p));
        }
    }
}

TEST_CASE("tensor product of two 2-blocks") {
    // p = 2, q = 4: the 4-dim product splits as two 2-blocks
    {
        PrimeField f(2);
        Mat g = oracle::kron(oracle::jordan_block(2), oracle::jordan_block(2), 2);
        JordanType jt = jordan_type_unipotent(to_matrix(g, f), 4);
        JordanType expect;
        expect.blocks[2] = 2;
        CHECK(jt == expect);
    }
    // p = 3, q = 3: it splits as a 1-block plus a 3-block
    {
        PrimeField f(3);
        Mat g = oracle::kron(oracle::jordan_block(2), oracle::jordan_block(2), 3);
        JordanType jt = jordan_type_unipotent(to_matrix(g, f), 3);
        JordanType expect;
        expect.blocks[1] = 1;
        expect.blocks[3] = 1;
        CHECK(jt == expect);
    }
}
