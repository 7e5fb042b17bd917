#include "greenring/modreal.hpp"

#include <climits>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "greenring/intutil.hpp"

namespace greenring {

namespace {

std::string power_name(const char* kind, unsigned long long n, std::size_t dim,
                       const GreenContext* ctx, unsigned r) {
    std::string s = std::string(kind) + "^" + std::to_string(n) + "(";
    if (ctx && r)
        s += "V_" + std::to_string(r);
    else
        s += "module of dim " + std::to_string(dim);
    s += ")";
    return s;
}

long long checked_power_dim(const char* kind, unsigned long long top, unsigned long long n,
                            const GreenContext& ctx, std::size_t dim, unsigned r) {
    long long cap = ctx.dim_cap();
    unsigned long long capped = binomial_capped(top, n, (unsigned long long)cap);
    if (capped > (unsigned long long)cap) {
        long long exact = LLONG_MAX;
        try {
            exact = u128_to_ll(binomial_u128(top, n), "dimension");
        } catch (const std::overflow_error&) {
        }
        throw CapExceededError(power_name(kind, n, dim, r ? &ctx : nullptr, r), exact, cap);
    }
    return (long long)capped;
}

unsigned det_mod_p(std::vector<std::vector<unsigned>> m, const PrimeField& f) {
    std::size_t n = m.size();
    unsigned det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = f.neg(det);
        }
        det = f.mul(det, m[c][c]);
        unsigned iv = f.inv(m[c][c]);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (!m[i][c]) continue;
            unsigned fac = f.mul(m[i][c], iv);
            for (std::size_t j = c; j < n; ++j)
                m[i][j] = f.sub(m[i][j], f.mul(fac, m[c][j]));
        }
    }
    return det;
}

bool next_combination(std::vector<unsigned>& t, unsigned m) {
    // strictly increasing tuples over 1..m, lex order
    unsigned n = (unsigned)t.size();
    for (unsigned i = n; i-- > 0;) {
        if (t[i] < m - (n - 1 - i)) {
            ++t[i];
            for (unsigned k = i + 1; k < n; ++k) t[k] = t[k - 1] + 1;
            return true;
        }
    }
    return false;
}

bool next_multiset(std::vector<unsigned>& t, unsigned m) {
    // nondecreasing tuples over 1..m, lex order
    unsigned n = (unsigned)t.size();
    for (unsigned i = n; i-- > 0;) {
        if (t[i] < m) {
            ++t[i];
            for (unsigned k = i + 1; k < n; ++k) t[k] = t[i];
            return true;
        }
    }
    return false;
}

/* Saturating Pascal triangle; entries needed for ranking stay exact because
 * they count tuple completions and are bounded by the total dimension. */
struct CombRanker {
    unsigned m, n;
    std::vector<std::vector<unsigned long long>> c;  // c[a][b], b <= n

    static constexpr unsigned long long kSat = 1ull << 62;

    CombRanker(unsigned m_, unsigned n_) : m(m_), n(n_), c(m + 2, std::vector<unsigned long long>(n_ + 2, 0)) {
        for (unsigned a = 0; a <= m + 1; ++a) {
            c[a][0] = 1;
            for (unsigned b = 1; b <= n + 1; ++b) {
                if (b > a) {
                    c[a][b] = 0;
                    continue;
                }
                unsigned long long x = c[a - 1][b - 1], y = c[a - 1][b];
                c[a][b] = (x >= kSat || y >= kSat || x + y >= kSat) ? kSat : x + y;
            }
        }
    }

    unsigned long long binom(unsigned a, unsigned b) const { return b > a ? 0 : c[a][b]; }
};

/* Streaming lex rank of a strictly increasing tuple, fed one entry at a
 * time.  Position k (0-based) with previous entry prev adds
 * C(m - prev, n - k) - C(m - u + 1, n - k). */
struct RankAccum {
    const CombRanker* rk;
    unsigned k = 0, prev = 0;
    unsigned long long rank = 0;

    explicit RankAccum(const CombRanker& r) : rk(&r) {}
    void feed(unsigned u) {
        rank += rk->binom(rk->m - prev, rk->n - k) - rk->binom(rk->m - u + 1, rk->n - k);
        prev = u;
        ++k;
    }
};

struct Coo {
    std::vector<std::uint32_t> row;
    std::vector<std::uint32_t> col;
    std::vector<std::uint8_t> val;

    void push(std::uint32_t r, std::uint32_t c, std::uint8_t v) {
        row.push_back(r);
        col.push_back(c);
        val.push_back(v);
    }
};

FpCsr coo_to_csr(std::size_t n, const Coo& coo) {
    FpCsr out;
    out.n = n;
    out.rowptr.assign(n + 1, 0);
    for (auto r : coo.row) ++out.rowptr[r + 1];
    for (std::size_t i = 0; i < n; ++i) out.rowptr[i + 1] += out.rowptr[i];
    out.col.resize(coo.row.size());
    out.val.resize(coo.row.size());
    std::vector<std::uint64_t> at(out.rowptr.begin(), out.rowptr.end() - 1);
    for (std::size_t k = 0; k < coo.row.size(); ++k) {
        std::uint64_t pos = at[coo.row[k]]++;
        out.col[pos] = coo.col[k];
        out.val[pos] = coo.val[k];
    }
    return out;
}

}  // namespace

/* ---- dense module constructions --------------------------------------- */

ModuleRep indecomposable(const GreenContext& ctx, unsigned r) {
    if (r < 1 || r > ctx.q())
        throw std::invalid_argument("indecomposable: need 1 <= r <= q");
    MatrixFp gen(ctx.field(), r, r);
    for (unsigned i = 0; i < r; ++i) {
        gen.set(i, i, 1);
        if (i + 1 < r) gen.set(i + 1, i, 1);  // g e_i = e_i + e_{i+1}
    }
    return ModuleRep{&ctx, std::move(gen)};
}

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b) {
    if (a.ctx != b.ctx) throw std::invalid_argument("direct_sum: context mismatch");
    std::size_t n = a.dim(), m = b.dim();
    MatrixFp gen(a.ctx->field(), n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            unsigned v = a.gen.at(i, j);
            if (v) gen.set(i, j, v);
        }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            unsigned v = b.gen.at(i, j);
            if (v) gen.set(n + i, n + j, v);
        }
    return ModuleRep{a.ctx, std::move(gen)};
}

ModuleRep tensor(const ModuleRep& a, const ModuleRep& b) {
    if (a.ctx != b.ctx) throw std::invalid_argument("tensor: context mismatch");
    const PrimeField& f = a.ctx->field();
    std::size_t n = a.dim(), m = b.dim();
    if ((long long)(n * m) > a.ctx->dim_cap())
        throw CapExceededError("tensor product", (long long)(n * m), a.ctx->dim_cap());
    MatrixFp gen(f, n * m, n * m);
    for (std::size_t i1 = 0; i1 < n; ++i1)
        for (std::size_t j1 = 0; j1 < n; ++j1) {
            unsigned u = a.gen.at(i1, j1);
            if (!u) continue;
            for (std::size_t i2 = 0; i2 < m; ++i2)
                for (std::size_t j2 = 0; j2 < m; ++j2) {
                    unsigned v = b.gen.at(i2, j2);
                    if (v) gen.set(i1 * m + i2, j1 * m + j2, f.mul(u, v));
                }
        }
    return ModuleRep{a.ctx, std::move(gen)};
}

ModuleRep exterior_power(const ModuleRep& a, unsigned long long n) {
    const GreenContext& ctx = *a.ctx;
    const PrimeField& f = ctx.field();
    std::size_t d = a.dim();
    if (n == 0) return ModuleRep{&ctx, MatrixFp::identity(f, 1)};
    if (n > d) return ModuleRep{&ctx, MatrixFp(f, 0, 0)};
    long long dim = checked_power_dim("Lambda", d, n, ctx, d, 0);

    MatrixFp gen(f, (std::size_t)dim, (std::size_t)dim);
    std::vector<unsigned> colt((std::size_t)n);
    for (std::size_t k = 0; k < n; ++k) colt[k] = (unsigned)(k + 1);
    std::size_t col = 0;
    do {
        // image vectors: columns of the generator at the tuple's indices
        std::vector<std::vector<unsigned>> u(d, std::vector<unsigned>((std::size_t)n));
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < d; ++i) u[i][k] = a.gen.at(i, colt[k] - 1);

        std::vector<unsigned> rowt((std::size_t)n);
        for (std::size_t k = 0; k < n; ++k) rowt[k] = (unsigned)(k + 1);
        std::size_t row = 0;
        do {
            std::vector<std::vector<unsigned>> minor((std::size_t)n,
                                                     std::vector<unsigned>((std::size_t)n));
            for (std::size_t i = 0; i < n; ++i) minor[i] = u[rowt[i] - 1];
            unsigned v = det_mod_p(std::move(minor), f);
            if (v) gen.set(row, col, v);
            ++row;
        } while (next_combination(rowt, (unsigned)d));
        ++col;
    } while (next_combination(colt, (unsigned)d));
    return ModuleRep{&ctx, std::move(gen)};
}

ModuleRep symmetric_power(const ModuleRep& a, unsigned long long n) {
    const GreenContext& ctx = *a.ctx;
    const PrimeField& f = ctx.field();
    std::size_t d = a.dim();
    if (n == 0) return ModuleRep{&ctx, MatrixFp::identity(f, 1)};
    if (d == 0) return ModuleRep{&ctx, MatrixFp(f, 0, 0)};
    long long dim = checked_power_dim("S", d + n - 1, n, ctx, d, 0);

    MatrixFp gen(f, (std::size_t)dim, (std::size_t)dim);
    CombRanker rk((unsigned)(d + n - 1), (unsigned)n);
    std::vector<unsigned> colt((std::size_t)n, 1);
    std::size_t col = 0;
    do {
        // multiply out the image product one linear factor at a time
        std::map<std::vector<unsigned>, unsigned> poly;
        poly[std::vector<unsigned>(d, 0)] = 1;
        for (std::size_t k = 0; k < n; ++k) {
            std::map<std::vector<unsigned>, unsigned> next;
            for (auto& [mono, coef] : poly)
                for (std::size_t i = 0; i < d; ++i) {
                    unsigned g = a.gen.at(i, colt[k] - 1);
                    if (!g) continue;
                    std::vector<unsigned> m2 = mono;
                    ++m2[i];
                    unsigned& slot = next[m2];
                    slot = f.add(slot, f.mul(coef, g));
                }
            poly = std::move(next);
        }
        for (auto& [mono, coef] : poly) {
            if (!coef) continue;
            RankAccum acc(rk);
            unsigned k = 0;
            for (unsigned v = 0; v < d; ++v)
                for (unsigned c = 0; c < mono[v]; ++c) {
                    acc.feed(v + 1 + k);  // multiset entry shifted to strict tuple
                    ++k;
                }
            gen.set((std::size_t)acc.rank, col, coef);
        }
        ++col;
    } while (next_multiset(colt, (unsigned)d));
    return ModuleRep{&ctx, std::move(gen)};
}

GreenElement decompose(const ModuleRep& a) {
    const GreenContext& ctx = *a.ctx;
    if (a.dim() == 0) return ctx.zero();
    JordanType jt = jordan_type_unipotent(a.gen, ctx.q());
    std::vector<long long> c(ctx.q(), 0);
    for (auto& [size, mult] : jt.blocks) c[size - 1] = (long long)mult;
    return GreenElement(ctx, std::move(c));
}

/* ---- sparse powers of the single block -------------------------------- */

FpCsr exterior_power_block_csr(const GreenContext& ctx, unsigned r, unsigned long long n) {
    if (r < 1 || r > ctx.q())
        throw std::invalid_argument("exterior_power_block_csr: need 1 <= r <= q");
    if (n == 0) return FpCsr{1, {0, 0}, {}, {}};
    if (n > r) return FpCsr{0, {0}, {}, {}};
    checked_power_dim("Lambda", r, n, ctx, r, r);

    CombRanker rk(r, (unsigned)n);
    Coo coo;
    std::vector<unsigned> t((std::size_t)n);
    for (std::size_t k = 0; k < n; ++k) t[k] = (unsigned)(k + 1);
    std::size_t dim = 0;

    // image of e_{t_1}^...^e_{t_n} expands over per-position choices
    // c_k in {t_k, t_k+1}; collisions vanish and survivors are sorted, so
    // every term has coefficient 1.  The all-unflipped term is the identity
    // and is skipped to give gen - I directly.
    std::function<void(std::size_t, unsigned, bool, RankAccum)> dfs =
        [&](std::size_t k, unsigned prev, bool flipped, RankAccum acc) {
            if (k == n) {
                if (flipped) coo.push((std::uint32_t)acc.rank, (std::uint32_t)dim, 1);
                return;
            }
            unsigned base = t[k];
            if (base > prev) {
                RankAccum a2 = acc;
                a2.feed(base);
                dfs(k + 1, base, flipped, a2);
            }
            if (base + 1 <= r && base + 1 > prev) {
                RankAccum a2 = acc;
                a2.feed(base + 1);
                dfs(k + 1, base + 1, true, a2);
            }
        };
    do {
        dfs(0, 0, false, RankAccum(rk));
        ++dim;
    } while (next_combination(t, r));
    return coo_to_csr(dim, coo);
}

FpCsr symmetric_power_block_csr(const GreenContext& ctx, unsigned r, unsigned long long n) {
    if (r < 1 || r > ctx.q())
        throw std::invalid_argument("symmetric_power_block_csr: need 1 <= r <= q");
    if (n == 0) return FpCsr{1, {0, 0}, {}, {}};
    checked_power_dim("S", r + n - 1, n, ctx, r, r);

    unsigned p = ctx.p();
    CombRanker rk((unsigned)(r + n - 1), (unsigned)n);
    Coo coo;

    std::vector<unsigned> t((std::size_t)n, 1);  // nondecreasing tuple
    std::vector<unsigned> m(r, 0);               // exponent vector of the column
    m[0] = (unsigned)n;
    std::size_t dim = 0;

    // per-exponent expansions (x_v + x_{v+1})^{m_v}; only binomials that
    // survive mod p are enumerated
    std::vector<std::vector<std::pair<unsigned, unsigned>>> lucas(n + 1);
    for (unsigned e = 0; e <= n; ++e) lucas[e] = nonzero_binomials_mod_p(e, p);

    std::vector<unsigned> eprime(r);
    std::function<void(unsigned, unsigned, unsigned, bool)> dfs = [&](unsigned v, unsigned carry,
                                                                     unsigned coef, bool moved) {
        if (v == r) {
            if (!moved) return;  // identity term
            eprime[r - 1] = m[r - 1] + carry;
            RankAccum acc(rk);
            unsigned k = 0;
            for (unsigned w = 0; w < r; ++w)
                for (unsigned c = 0; c < eprime[w]; ++c) {
                    acc.feed(w + 1 + k);
                    ++k;
                }
            coo.push((std::uint32_t)acc.rank, (std::uint32_t)dim, (std::uint8_t)coef);
            return;
        }
        if (v == r - 1) {  // x_r is fixed by the generator
            dfs(v + 1, carry, coef, moved);
            return;
        }
        for (auto& [j, c] : lucas[m[v]]) {
            eprime[v] = m[v] - j + carry;
            dfs(v + 1, j, (unsigned)((coef * c) % p), moved || j != 0);
        }
    };
    do {
        dfs(0, 0, 1, false);
        ++dim;
        if (!next_multiset(t, r)) break;
        std::fill(m.begin(), m.end(), 0);
        for (unsigned x : t) ++m[x - 1];
    } while (true);
    return coo_to_csr(dim, coo);
}

GreenElement decompose_nilpotent(const GreenContext& ctx, const FpCsr& shifted_gen) {
    if (shifted_gen.n == 0) return ctx.zero();
    auto ranks = nilpotent_rank_sequence(ctx.field(), shifted_gen, ctx.q());
    if (ranks[ctx.q() - 1] != 0)
        throw ConsistencyError("decompose_nilpotent: generator is not unipotent of exponent q");
    JordanType jt = jordan_type_from_ranks(shifted_gen.n, ctx.q(), ranks);
    std::vector<long long> c(ctx.q(), 0);
    for (auto& [size, mult] : jt.blocks) c[size - 1] = (long long)mult;
    return GreenElement(ctx, std::move(c));
}

}  // namespace greenring
