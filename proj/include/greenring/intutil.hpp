#ifndef GREENRING_INTUTIL_HPP
#define GREENRING_INTUTIL_HPP

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace greenring {

using uint128 = unsigned __int128;

/* Exact binomial coefficient in 128 bits.  Each partial product
 * C(n-k+i, i) is an integer, so the running division is exact. */
inline uint128 binomial_u128(unsigned long long n, unsigned long long k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    uint128 r = 1;
    for (unsigned long long i = 1; i <= k; ++i) {
        uint128 f = n - k + i;
        if (r > ~static_cast<uint128>(0) / f)
            throw std::overflow_error("binomial_u128: value exceeds 128 bits");
        r = r * f / i;
    }
    return r;
}

/* Binomial saturated at cap+1: cheap "does C(n,k) exceed cap" test that
 * never overflows. */
inline unsigned long long binomial_capped(unsigned long long n, unsigned long long k,
                                          unsigned long long cap) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    uint128 r = 1;
    const uint128 lim = static_cast<uint128>(cap);
    for (unsigned long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > lim) return cap + 1;
    }
    return static_cast<unsigned long long>(r);
}

inline long long u128_to_ll(uint128 v, const char* what) {
    if (v > static_cast<uint128>(std::numeric_limits<long long>::max()))
        throw std::overflow_error(std::string(what) + ": coefficient exceeds 64 bits");
    return static_cast<long long>(v);
}

/* C(n, k) mod p by Lucas' theorem; n, k arbitrary, p prime. */
inline unsigned binomial_mod_p(unsigned long long n, unsigned long long k, unsigned p) {
    unsigned long long r = 1;
    while (n || k) {
        unsigned long long nd = n % p, kd = k % p;
        if (kd > nd) return 0;
        /* C(nd, kd) with nd < p <= 64 fits in 64 bits */
        unsigned long long c = 1;
        for (unsigned long long i = 1; i <= kd; ++i) c = c * (nd - kd + i) / i;
        r = r * (c % p) % p;
        n /= p;
        k /= p;
    }
    return static_cast<unsigned>(r);
}

/* All j in [0, m] with C(m, j) != 0 mod p, paired with that residue.
 * By Lucas these are the j whose base-p digits are dominated by m's. */
inline std::vector<std::pair<unsigned, unsigned>> nonzero_binomials_mod_p(unsigned m, unsigned p) {
    std::vector<unsigned> digits;
    unsigned mm = m;
    while (mm) { digits.push_back(mm % p); mm /= p; }
    if (digits.empty()) digits.push_back(0);
    std::vector<std::pair<unsigned, unsigned>> out;
    /* enumerate digit vectors j_d <= m_d */
    std::vector<unsigned> j(digits.size(), 0);
    while (true) {
        unsigned val = 0, coeff = 1;
        for (std::size_t d = digits.size(); d-- > 0;) {
            val = val * p + j[d];
        }
        for (std::size_t d = 0; d < digits.size(); ++d) {
            unsigned long long c = 1;
            for (unsigned i = 1; i <= j[d]; ++i) c = c * (digits[d] - j[d] + i) / i;
            coeff = static_cast<unsigned>(coeff * (c % p) % p);
        }
        out.emplace_back(val, coeff);
        std::size_t d = 0;
        while (d < digits.size() && j[d] == digits[d]) { j[d] = 0; ++d; }
        if (d == digits.size()) break;
        ++j[d];
    }
    return out;
}

}  // namespace greenring

#endif
