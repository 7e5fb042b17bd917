#include "greenring/fplinalg.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <stdexcept>
#include <utility>

#if defined(__BMI2__)
#include <immintrin.h>
#endif

namespace greenring {

namespace {

constexpr unsigned kWin = 64;  // elimination window, one machine word of columns

inline std::uint64_t low_mask(unsigned w) {
    return w >= 64 ? ~0ull : ((std::uint64_t{1} << w) - 1);
}

inline std::uint64_t extract_bits(std::uint64_t x, std::uint64_t m) {
#if defined(__BMI2__)
    return _pext_u64(x, m);
#else
    std::uint64_t r = 0;
    unsigned k = 0;
    for (; m; m &= m - 1, ++k)
        if (x & m & (~m + 1)) r |= std::uint64_t{1} << k;
    return r;
#endif
}

/* Streams packed source words through per-word column masks into a dense
 * output stream; cnt[w] = popcount(masks[w]). */
inline void gather_bit_row(const std::uint64_t* src, const std::vector<std::uint64_t>& masks,
                           const std::vector<std::uint8_t>& cnt, std::uint64_t* dst,
                           std::size_t nw_out) {
    std::fill(dst, dst + nw_out, 0);
    std::uint64_t acc = 0;
    unsigned fill = 0;
    std::size_t ow = 0;
    for (std::size_t w = 0; w < masks.size(); ++w) {
        unsigned c = cnt[w];
        if (c == 0) continue;
        std::uint64_t bits = extract_bits(src[w], masks[w]);
        acc |= bits << fill;
        if (fill + c >= 64) {
            dst[ow++] = acc;
            acc = fill == 0 ? 0 : bits >> (64 - fill);
            fill = fill + c - 64;
        } else {
            fill += c;
        }
    }
    if (fill) dst[ow] = acc;
}

/* ---- F_2: one bit per entry ------------------------------------------- */

struct EBits {
    std::size_t nrows = 0, ncols = 0, wpr = 0;
    std::vector<std::uint64_t> d;

    using Scratch = std::uint64_t;
    static constexpr std::size_t kBytesPerUnit = 8;  // for spmm stripe sizing

    EBits() = default;
    EBits(const PrimeField&, std::size_t r, std::size_t c)
        : nrows(r), ncols(c), wpr((c + 63) / 64), d(r * wpr, 0) {}

    std::uint64_t* row(std::size_t i) { return d.data() + i * wpr; }
    const std::uint64_t* row(std::size_t i) const { return d.data() + i * wpr; }

    void set(std::size_t i, std::size_t j, unsigned v) {
        std::uint64_t bit = std::uint64_t{1} << (j & 63);
        if (v)
            row(i)[j >> 6] |= bit;
        else
            row(i)[j >> 6] &= ~bit;
    }

    std::size_t units() const { return wpr; }

    Scratch load_window(std::size_t i, std::size_t w0, unsigned wcols) const {
        return row(i)[w0] & low_mask(wcols);
    }
    void store_window(std::size_t i, std::size_t w0, Scratch s) { row(i)[w0] = s; }
    void zero_window(std::size_t i, std::size_t w0) { row(i)[w0] = 0; }

    unsigned sentry(const Scratch& s, unsigned c) const { return (s >> c) & 1u; }
    void snormalize(Scratch&, unsigned) const {}
    void saxpy_minus(Scratch& dst, const Scratch& src, unsigned) const { dst ^= src; }

    void axpy_minus_row(std::size_t dr, std::size_t sr, unsigned, std::size_t w0) {
        std::uint64_t* a = row(dr);
        const std::uint64_t* b = row(sr);
        for (std::size_t w = w0; w < wpr; ++w) a[w] ^= b[w];
    }
    void normalize_row(std::size_t, unsigned, std::size_t) {}

    void axpy_plus_from(const EBits& src, std::size_t sr, std::size_t dr, unsigned,
                        std::size_t u0, std::size_t u1) {
        std::uint64_t* a = row(dr);
        const std::uint64_t* b = src.row(sr);
        for (std::size_t w = u0; w < u1; ++w) a[w] ^= b[w];
    }

    void compact_cols(const std::vector<std::uint32_t>& keep) {
        std::size_t new_wpr = (keep.size() + 63) / 64;
        std::vector<std::uint64_t> masks(wpr, 0);
        std::vector<std::uint8_t> cnt(wpr, 0);
        for (auto j : keep) masks[j >> 6] |= std::uint64_t{1} << (j & 63);
        for (std::size_t w = 0; w < wpr; ++w) cnt[w] = (std::uint8_t)__builtin_popcountll(masks[w]);
        std::vector<std::uint64_t> tmp(new_wpr);
        for (std::size_t i = 0; i < nrows; ++i) {
            gather_bit_row(row(i), masks, cnt, tmp.data(), new_wpr);
            std::memcpy(d.data() + i * new_wpr, tmp.data(), new_wpr * 8);
        }
        wpr = new_wpr;
        ncols = keep.size();
        d.resize(nrows * wpr);
        d.shrink_to_fit();
    }
};

/* ---- F_3: two one-hot bit planes per row ------------------------------ */
/* Plane a holds entries equal to 1, plane b entries equal to 2.  Addition
 * is a 9-gate boolean circuit on the planes; negation swaps them. */

struct EPlanes {
    std::size_t nrows = 0, ncols = 0, wpr = 0;  // words per plane
    std::vector<std::uint64_t> d;               // row i: [a words][b words]

    struct Scratch {
        std::uint64_t a = 0, b = 0;
    };
    static constexpr std::size_t kBytesPerUnit = 16;

    EPlanes() = default;
    EPlanes(const PrimeField&, std::size_t r, std::size_t c)
        : nrows(r), ncols(c), wpr((c + 63) / 64), d(r * 2 * wpr, 0) {}

    std::uint64_t* pa(std::size_t i) { return d.data() + i * 2 * wpr; }
    std::uint64_t* pb(std::size_t i) { return d.data() + i * 2 * wpr + wpr; }
    const std::uint64_t* pa(std::size_t i) const { return d.data() + i * 2 * wpr; }
    const std::uint64_t* pb(std::size_t i) const { return d.data() + i * 2 * wpr + wpr; }

    void set(std::size_t i, std::size_t j, unsigned v) {
        std::uint64_t bit = std::uint64_t{1} << (j & 63);
        pa(i)[j >> 6] &= ~bit;
        pb(i)[j >> 6] &= ~bit;
        if (v == 1)
            pa(i)[j >> 6] |= bit;
        else if (v == 2)
            pb(i)[j >> 6] |= bit;
    }

    std::size_t units() const { return wpr; }

    static void add_words(std::uint64_t& xa, std::uint64_t& xb, std::uint64_t ya,
                          std::uint64_t yb) {
        std::uint64_t nx = xa | xb, ny = ya | yb;
        std::uint64_t za = (~nx & ya) | (xa & ~ny) | (xb & yb);
        std::uint64_t zb = (~nx & yb) | (xb & ~ny) | (xa & ya);
        xa = za;
        xb = zb;
    }
    static void sub_words(std::uint64_t& xa, std::uint64_t& xb, std::uint64_t ya,
                          std::uint64_t yb) {
        add_words(xa, xb, yb, ya);
    }

    Scratch load_window(std::size_t i, std::size_t w0, unsigned wcols) const {
        std::uint64_t m = low_mask(wcols);
        return {pa(i)[w0] & m, pb(i)[w0] & m};
    }
    void store_window(std::size_t i, std::size_t w0, Scratch s) {
        pa(i)[w0] = s.a;
        pb(i)[w0] = s.b;
    }
    void zero_window(std::size_t i, std::size_t w0) {
        pa(i)[w0] = 0;
        pb(i)[w0] = 0;
    }

    unsigned sentry(const Scratch& s, unsigned c) const {
        return (unsigned)(((s.a >> c) & 1u) + 2 * ((s.b >> c) & 1u));
    }
    void snormalize(Scratch& s, unsigned v) const {
        if (v == 2) std::swap(s.a, s.b);  // 1/2 = 2 = -1 in F_3
    }
    void saxpy_minus(Scratch& dst, const Scratch& src, unsigned c) const {
        if (c == 1)
            sub_words(dst.a, dst.b, src.a, src.b);
        else
            add_words(dst.a, dst.b, src.a, src.b);  // -2 = +1
    }

    void range_op(std::uint64_t* da, std::uint64_t* db, const std::uint64_t* sa,
                  const std::uint64_t* sb, std::size_t n, bool sub) {
        if (sub)
            for (std::size_t w = 0; w < n; ++w) sub_words(da[w], db[w], sa[w], sb[w]);
        else
            for (std::size_t w = 0; w < n; ++w) add_words(da[w], db[w], sa[w], sb[w]);
    }

    void axpy_minus_row(std::size_t dr, std::size_t sr, unsigned c, std::size_t w0) {
        range_op(pa(dr) + w0, pb(dr) + w0, pa(sr) + w0, pb(sr) + w0, wpr - w0, c == 1);
    }
    void normalize_row(std::size_t i, unsigned v, std::size_t w0) {
        if (v == 2) std::swap_ranges(pa(i) + w0, pa(i) + wpr, pb(i) + w0);
    }

    void axpy_plus_from(const EPlanes& src, std::size_t sr, std::size_t dr, unsigned c,
                        std::size_t u0, std::size_t u1) {
        range_op(pa(dr) + u0, pb(dr) + u0, src.pa(sr) + u0, src.pb(sr) + u0, u1 - u0, c == 2);
    }

    void compact_cols(const std::vector<std::uint32_t>& keep) {
        std::size_t new_wpr = (keep.size() + 63) / 64;
        std::vector<std::uint64_t> masks(wpr, 0);
        std::vector<std::uint8_t> cnt(wpr, 0);
        for (auto j : keep) masks[j >> 6] |= std::uint64_t{1} << (j & 63);
        for (std::size_t w = 0; w < wpr; ++w) cnt[w] = (std::uint8_t)__builtin_popcountll(masks[w]);
        std::vector<std::uint64_t> ta(new_wpr), tb(new_wpr);
        for (std::size_t i = 0; i < nrows; ++i) {
            gather_bit_row(pa(i), masks, cnt, ta.data(), new_wpr);
            gather_bit_row(pb(i), masks, cnt, tb.data(), new_wpr);
            std::memcpy(d.data() + i * 2 * new_wpr, ta.data(), new_wpr * 8);
            std::memcpy(d.data() + i * 2 * new_wpr + new_wpr, tb.data(), new_wpr * 8);
        }
        wpr = new_wpr;
        ncols = keep.size();
        d.resize(nrows * 2 * wpr);
        d.shrink_to_fit();
    }
};

/* ---- general p: one byte per entry ------------------------------------ */
/* Single additions keep every intermediate below 256 for p <= 64, and the
 * wrap-around min trick reduces mod p without a divide.  A multiple c of a
 * row is added as c single additions (or p - c subtractions). */

inline void add_once(std::uint8_t* a, const std::uint8_t* b, std::size_t n, unsigned p) {
    for (std::size_t j = 0; j < n; ++j) {
        std::uint8_t t = (std::uint8_t)(a[j] + b[j]);
        std::uint8_t u = (std::uint8_t)(t - p);
        a[j] = t < u ? t : u;
    }
}

inline void sub_once(std::uint8_t* a, const std::uint8_t* b, std::size_t n, unsigned p) {
    for (std::size_t j = 0; j < n; ++j) {
        std::uint8_t t = (std::uint8_t)(a[j] - b[j]);
        std::uint8_t u = (std::uint8_t)(t + p);
        a[j] = t < u ? t : u;
    }
}

struct EBytes {
    std::size_t nrows = 0, ncols = 0;
    unsigned p = 2;
    PrimeField f{2};
    std::vector<std::uint8_t> d;

    using Scratch = std::array<std::uint8_t, kWin>;
    static constexpr std::size_t kBytesPerUnit = 1;  // unit = one column

    EBytes() = default;
    EBytes(const PrimeField& fld, std::size_t r, std::size_t c)
        : nrows(r), ncols(c), p(fld.p()), f(fld), d(r * c, 0) {}

    std::uint8_t* row(std::size_t i) { return d.data() + i * ncols; }
    const std::uint8_t* row(std::size_t i) const { return d.data() + i * ncols; }

    void set(std::size_t i, std::size_t j, unsigned v) { row(i)[j] = (std::uint8_t)v; }

    std::size_t units() const { return ncols; }

    Scratch load_window(std::size_t i, std::size_t w0, unsigned wcols) const {
        Scratch s{};
        std::memcpy(s.data(), row(i) + w0 * kWin, wcols);
        return s;
    }
    void store_window(std::size_t i, std::size_t w0, const Scratch& s) {
        unsigned wcols = (unsigned)std::min<std::size_t>(kWin, ncols - w0 * kWin);
        std::memcpy(row(i) + w0 * kWin, s.data(), wcols);
    }
    void zero_window(std::size_t i, std::size_t w0) {
        unsigned wcols = (unsigned)std::min<std::size_t>(kWin, ncols - w0 * kWin);
        std::memset(row(i) + w0 * kWin, 0, wcols);
    }

    unsigned sentry(const Scratch& s, unsigned c) const { return s[c]; }
    void snormalize(Scratch& s, unsigned v) const {
        unsigned iv = f.inv(v);
        for (auto& x : s) x = (std::uint8_t)((x * iv) % p);
    }
    void saxpy_minus(Scratch& dst, const Scratch& src, unsigned c) const {
        unsigned mc = p - c;
        for (unsigned j = 0; j < kWin; ++j)
            dst[j] = (std::uint8_t)((dst[j] + mc * src[j]) % p);
    }

    void repeat_axpy(std::uint8_t* a, const std::uint8_t* b, std::size_t n, unsigned c) {
        // a += c*b via repeated single steps; pick the shorter direction
        if (c == 0 || n == 0) return;
        if (c <= p - c)
            for (unsigned k = 0; k < c; ++k) add_once(a, b, n, p);
        else
            for (unsigned k = 0; k < p - c; ++k) sub_once(a, b, n, p);
    }

    void axpy_minus_row(std::size_t dr, std::size_t sr, unsigned c, std::size_t w0) {
        std::size_t b0 = w0 * kWin;
        if (b0 >= ncols) return;
        repeat_axpy(row(dr) + b0, row(sr) + b0, ncols - b0, p - c);
    }
    void normalize_row(std::size_t i, unsigned v, std::size_t w0) {
        if (v == 1) return;
        std::size_t b0 = w0 * kWin;
        if (b0 >= ncols) return;
        unsigned iv = f.inv(v);
        std::uint8_t* a = row(i) + b0;
        for (std::size_t j = 0; j < ncols - b0; ++j) a[j] = (std::uint8_t)((a[j] * iv) % p);
    }

    void axpy_plus_from(const EBytes& src, std::size_t sr, std::size_t dr, unsigned c,
                        std::size_t u0, std::size_t u1) {
        repeat_axpy(row(dr) + u0, src.row(sr) + u0, u1 - u0, c);
    }

    void compact_cols(const std::vector<std::uint32_t>& keep) {
        std::size_t nc = keep.size();
        std::vector<std::uint8_t> tmp(nc);
        for (std::size_t i = 0; i < nrows; ++i) {
            const std::uint8_t* s = row(i);
            for (std::size_t t = 0; t < nc; ++t) tmp[t] = s[keep[t]];
            std::memcpy(d.data() + i * nc, tmp.data(), nc);
        }
        ncols = nc;
        d.resize(nrows * nc);
        d.shrink_to_fit();
    }
};

/* ---- window-blocked in-place row echelon ------------------------------ */
/* Equivalent to plain Gaussian elimination with first-nonzero pivoting,
 * reorganized so each 64-column window is eliminated in per-row scratch
 * slices first and the accumulated multipliers are then folded into the
 * remainders in one pass per row.  Rows are addressed through a pointer
 * permutation; data never moves. */

struct EchRes {
    std::size_t rank = 0;
    std::vector<std::uint32_t> pivcols;
};

template <class E>
EchRes echelon_in_place(E& A) {
    const std::size_t n = A.nrows;
    const std::size_t L = A.ncols;
    EchRes res;
    if (n == 0 || L == 0) return res;

    std::vector<std::uint32_t> rp(n);
    for (std::size_t i = 0; i < n; ++i) rp[i] = (std::uint32_t)i;

    const std::size_t nwin = (L + kWin - 1) / kWin;
    std::vector<typename E::Scratch> sc(n);
    std::vector<std::uint8_t> T(n * kWin);
    std::vector<std::uint8_t> tany(n);
    std::array<unsigned, kWin> vlead{};
    std::size_t npiv = 0;

    for (std::size_t w0 = 0; w0 < nwin && npiv < n; ++w0) {
        unsigned wcols = (unsigned)std::min<std::size_t>(kWin, L - w0 * kWin);
        for (std::size_t i = npiv; i < n; ++i) sc[i] = A.load_window(rp[i], w0, wcols);
        std::memset(T.data() + npiv * kWin, 0, (n - npiv) * kWin);
        std::memset(tany.data() + npiv, 0, n - npiv);

        unsigned wp = 0;
        for (unsigned c = 0; c < wcols; ++c) {
            std::size_t top = npiv + wp;
            std::size_t ip = top;
            while (ip < n && A.sentry(sc[ip], c) == 0) ++ip;
            if (ip == n) continue;
            if (ip != top) {
                std::swap(sc[ip], sc[top]);
                std::swap_ranges(T.begin() + ip * kWin, T.begin() + (ip + 1) * kWin,
                                 T.begin() + top * kWin);
                std::swap(tany[ip], tany[top]);
                std::swap(rp[ip], rp[top]);
            }
            unsigned v = A.sentry(sc[top], c);
            vlead[wp] = v;
            A.snormalize(sc[top], v);
            for (std::size_t i = top + 1; i < n; ++i) {
                unsigned ci = A.sentry(sc[i], c);
                if (!ci) continue;
                T[i * kWin + wp] = (std::uint8_t)ci;
                tany[i] = 1;
                A.saxpy_minus(sc[i], sc[top], ci);
            }
            res.pivcols.push_back((std::uint32_t)(w0 * kWin + c));
            ++wp;
            if (npiv + wp == n) break;
        }

        // fold into remainders; pivot rows first (ascending, so earlier
        // pivot remainders are final when later rows consume them)
        for (unsigned t = 0; t < wp; ++t) {
            std::size_t i = npiv + t;
            for (unsigned s = 0; s < t; ++s)
                if (unsigned c = T[i * kWin + s]) A.axpy_minus_row(rp[i], rp[npiv + s], c, w0 + 1);
            A.normalize_row(rp[i], vlead[t], w0 + 1);
            A.store_window(rp[i], w0, sc[i]);
        }
        for (std::size_t i = npiv + wp; i < n; ++i) {
            if (tany[i])
                for (unsigned t = 0; t < wp; ++t)
                    if (unsigned c = T[i * kWin + t])
                        A.axpy_minus_row(rp[i], rp[npiv + t], c, w0 + 1);
            A.zero_window(rp[i], w0);  // columns without pivots are now zero here
        }
        npiv += wp;
    }
    res.rank = npiv;
    return res;
}

/* ---- sparse times dense, striped over output columns ------------------ */

template <class E>
void materialize(E& out, const FpCsr& a) {
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::uint64_t k = a.rowptr[i]; k < a.rowptr[i + 1]; ++k)
            out.set(i, a.col[k], a.val[k]);
}

template <class E>
E spmm(const PrimeField& f, const FpCsr& a, const E& b) {
    E out(f, a.n, b.ncols);
    std::size_t nu = b.units();
    if (nu == 0) return out;
    constexpr std::size_t kStripeBytes = std::size_t{96} << 20;
    std::size_t per_unit = a.n * E::kBytesPerUnit;
    std::size_t sw = per_unit ? std::max<std::size_t>(kStripeBytes / per_unit, 16) : nu;
    for (std::size_t u0 = 0; u0 < nu; u0 += sw) {
        std::size_t u1 = std::min(nu, u0 + sw);
        for (std::size_t i = 0; i < a.n; ++i)
            for (std::uint64_t k = a.rowptr[i]; k < a.rowptr[i + 1]; ++k)
                out.axpy_plus_from(b, a.col[k], i, a.val[k], u0, u1);
    }
    return out;
}

/* Rank chain on a shrinking image basis: eliminate N once, then repeatedly
 * map the current image basis through N and eliminate the result.  Each
 * level's pivot columns select the columns kept as the next basis. */
template <class E>
std::vector<std::size_t> chain_impl(const PrimeField& f, const FpCsr& nm, unsigned q) {
    std::vector<std::size_t> ranks;
    ranks.reserve(q);

    E base(f, nm.n, nm.n);
    materialize(base, nm);
    EchRes er;
    {
        E work = base;
        er = echelon_in_place(work);
    }
    ranks.push_back(er.rank);
    E b;
    if (er.rank) {
        base.compact_cols(er.pivcols);
        b = std::move(base);
    }
    base = E();

    for (unsigned k = 2; k <= q; ++k) {
        if (ranks.back() == 0) {
            ranks.push_back(0);
            continue;
        }
        E out = spmm(f, nm, b);
        b = E();  // the previous basis is dead once its image exists
        EchRes ek;
        {
            E work = out;
            ek = echelon_in_place(work);
        }
        ranks.push_back(ek.rank);
        if (ek.rank && k < q) {
            out.compact_cols(ek.pivcols);
            b = std::move(out);
        }
    }
    return ranks;
}

template <class E>
E emat_from_dense(const MatrixFp& m) {
    E out(m.field(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            unsigned v = m.at(i, j);
            if (v) out.set(i, j, v);
        }
    return out;
}

}  // namespace

/* ---- MatrixFp --------------------------------------------------------- */

MatrixFp::MatrixFp(PrimeField f, std::size_t rows, std::size_t cols)
    : f_(f), rows_(rows), cols_(cols), wpr_(f.p() == 2 ? (cols + 63) / 64 : 0) {
    if (f_.p() == 2)
        words_.assign(rows_ * wpr_, 0);
    else
        bytes_.assign(rows_ * cols_, 0);
}

MatrixFp MatrixFp::identity(PrimeField f, std::size_t n) {
    MatrixFp m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

unsigned MatrixFp::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("MatrixFp::at: index out of range");
    if (f_.p() == 2) return (words_[i * wpr_ + (j >> 6)] >> (j & 63)) & 1u;
    return bytes_[i * cols_ + j];
}

void MatrixFp::set(std::size_t i, std::size_t j, unsigned v) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("MatrixFp::set: index out of range");
    if (v >= f_.p()) throw std::invalid_argument("MatrixFp::set: entry not reduced mod p");
    if (f_.p() == 2) {
        std::uint64_t bit = std::uint64_t{1} << (j & 63);
        if (v)
            words_[i * wpr_ + (j >> 6)] |= bit;
        else
            words_[i * wpr_ + (j >> 6)] &= ~bit;
    } else {
        bytes_[i * cols_ + j] = (std::uint8_t)v;
    }
}

bool MatrixFp::operator==(const MatrixFp& o) const {
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && words_ == o.words_ &&
           bytes_ == o.bytes_;
}

MatrixFp matmul(const MatrixFp& a, const MatrixFp& b) {
    if (a.field() != b.field()) throw std::invalid_argument("matmul: mismatched fields");
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: inner dimensions differ");
    const PrimeField& f = a.field();
    MatrixFp c(f, a.rows(), b.cols());
    if (f.p() == 2) {
        std::size_t wpr = c.words_per_row();
        for (std::size_t i = 0; i < a.rows(); ++i) {
            std::uint64_t* crow = c.word_row(i);
            for (std::size_t k = 0; k < a.cols(); ++k)
                if (a.at(i, k)) {
                    const std::uint64_t* brow = b.word_row(k);
                    for (std::size_t w = 0; w < wpr; ++w) crow[w] ^= brow[w];
                }
        }
        return c;
    }
    std::vector<std::uint32_t> acc(b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        const std::uint8_t* arow = a.byte_row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            std::uint32_t v = arow[k];
            if (!v) continue;
            const std::uint8_t* brow = b.byte_row(k);
            for (std::size_t j = 0; j < b.cols(); ++j) acc[j] += v * brow[j];
        }
        for (std::size_t j = 0; j < b.cols(); ++j) c.set(i, j, acc[j] % f.p());
    }
    return c;
}

MatrixFp matpow(const MatrixFp& a, unsigned long long k) {
    if (a.rows() != a.cols()) throw std::invalid_argument("matpow: matrix not square");
    MatrixFp r = MatrixFp::identity(a.field(), a.rows());
    MatrixFp base = a;
    while (k) {
        if (k & 1) r = matmul(r, base);
        k >>= 1;
        if (k) base = matmul(base, base);
    }
    return r;
}

MatrixFp subtract_identity(const MatrixFp& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("subtract_identity: matrix not square");
    MatrixFp r = a;
    const PrimeField& f = a.field();
    for (std::size_t i = 0; i < a.rows(); ++i) r.set(i, i, f.sub(r.at(i, i), 1));
    return r;
}

std::size_t rank(const MatrixFp& a) {
    unsigned p = a.field().p();
    if (p == 2) {
        EBits e = emat_from_dense<EBits>(a);
        return echelon_in_place(e).rank;
    }
    if (p == 3) {
        EPlanes e = emat_from_dense<EPlanes>(a);
        return echelon_in_place(e).rank;
    }
    EBytes e = emat_from_dense<EBytes>(a);
    return echelon_in_place(e).rank;
}

FpCsr csr_from_dense(const MatrixFp& m, bool subtract_identity) {
    if (m.rows() != m.cols()) throw std::invalid_argument("csr_from_dense: matrix not square");
    const PrimeField& f = m.field();
    FpCsr s;
    s.n = m.rows();
    s.rowptr.assign(s.n + 1, 0);
    for (std::size_t i = 0; i < s.n; ++i) {
        for (std::size_t j = 0; j < s.n; ++j) {
            unsigned v = m.at(i, j);
            if (subtract_identity && i == j) v = f.sub(v, 1);
            if (v) {
                s.col.push_back((std::uint32_t)j);
                s.val.push_back((std::uint8_t)v);
            }
        }
        s.rowptr[i + 1] = s.col.size();
    }
    return s;
}

std::vector<std::size_t> nilpotent_rank_sequence(const PrimeField& f, const FpCsr& n_mat,
                                                 unsigned q) {
    if (q == 0) throw std::invalid_argument("nilpotent_rank_sequence: q must be positive");
    unsigned p = f.p();
    if (p == 2) return chain_impl<EBits>(f, n_mat, q);
    if (p == 3) return chain_impl<EPlanes>(f, n_mat, q);
    return chain_impl<EBytes>(f, n_mat, q);
}

JordanType jordan_type_from_ranks(std::size_t dim, unsigned q,
                                  const std::vector<std::size_t>& ranks) {
    if (ranks.size() != q)
        throw std::invalid_argument("jordan_type_from_ranks: need exactly q ranks");
    std::vector<long long> r(q + 2);
    r[0] = (long long)dim;
    for (unsigned k = 1; k <= q; ++k) r[k] = (long long)ranks[k - 1];
    r[q + 1] = r[q];
    JordanType jt;
    long long total = 0;
    for (unsigned k = 1; k <= q; ++k) {
        long long m = r[k - 1] - 2 * r[k] + r[k + 1];
        if (m < 0)
            throw ConsistencyError("jordan_type_from_ranks: negative block multiplicity");
        if (m > 0) jt.blocks[k] = (unsigned long long)m;
        total += (long long)k * m;
    }
    if (total != (long long)dim)
        throw ConsistencyError("jordan_type_from_ranks: block sizes do not sum to dimension");
    return jt;
}

JordanType jordan_type_unipotent(const MatrixFp& m, unsigned q) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("jordan_type_unipotent: matrix not square");
    FpCsr n = csr_from_dense(m, true);
    auto ranks = nilpotent_rank_sequence(m.field(), n, q);
    if (ranks[q - 1] != 0)
        throw std::invalid_argument("jordan_type_unipotent: matrix is not unipotent of exponent q");
    return jordan_type_from_ranks(m.rows(), q, ranks);
}

}  // namespace greenring
