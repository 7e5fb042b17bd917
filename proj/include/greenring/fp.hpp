#ifndef GREENRING_FP_HPP
#define GREENRING_FP_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace greenring {

/* Prime field F_p for small p.  Characteristics up to 64 are supported;
 * primality is verified at construction. */
class PrimeField {
public:
    explicit PrimeField(unsigned p) : p_(p) {
        if (p < 2 || p > 64 || !is_prime(p))
            throw std::invalid_argument("PrimeField: characteristic must be a prime <= 64, got " +
                                        std::to_string(p));
        inv_.assign(p, 0);
        for (unsigned a = 1; a < p; ++a) inv_[a] = pow_mod(a, p - 2);
    }

    unsigned p() const noexcept { return p_; }

    unsigned add(unsigned a, unsigned b) const noexcept {
        unsigned s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    unsigned sub(unsigned a, unsigned b) const noexcept {
        return a >= b ? a - b : a + p_ - b;
    }
    unsigned neg(unsigned a) const noexcept { return a == 0 ? 0 : p_ - a; }
    unsigned mul(unsigned a, unsigned b) const noexcept { return (a * b) % p_; }
    unsigned inv(unsigned a) const {
        if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
        return inv_[a];
    }
    unsigned reduce_signed(long long v) const noexcept {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<unsigned>(r);
    }

    bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const noexcept { return p_ != o.p_; }

    static bool is_prime(unsigned n) noexcept {
        if (n < 2) return false;
        for (unsigned d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    unsigned pow_mod(unsigned a, unsigned e) const noexcept {
        unsigned long long r = 1, b = a;
        while (e) {
            if (e & 1) r = r * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return static_cast<unsigned>(r);
    }

    unsigned p_;
    std::vector<unsigned> inv_;
};

}  // namespace greenring

#endif
