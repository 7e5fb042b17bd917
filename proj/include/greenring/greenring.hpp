#ifndef GREENRING_GREENRING_HPP
#define GREENRING_GREENRING_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "greenring/errors.hpp"
#include "greenring/fp.hpp"

namespace greenring {

class GreenContext;

/* Integer combination of the basis classes V_1 .. V_q of one context.
 * Coefficients may be negative (virtual elements). */
class GreenElement {
public:
    explicit GreenElement(const GreenContext& ctx);  // zero element
    GreenElement(const GreenContext& ctx, std::vector<long long> coeffs);

    const GreenContext& context() const noexcept { return *ctx_; }
    const std::vector<long long>& coeffs() const noexcept { return c_; }
    long long alpha(unsigned i) const;  // coefficient of V_i, 1-based
    bool is_zero() const;

    bool operator==(const GreenElement& o) const;
    bool operator!=(const GreenElement& o) const { return !(*this == o); }

private:
    const GreenContext* ctx_;
    std::vector<long long> c_;
};

/* Computation context for the cyclic group of order q = p^e in
 * characteristic p.  Owns every memo table and the lazily built chain of
 * child contexts of order q/p, q/p^2, ...  Methods that fill tables are
 * not const; one context must not be shared across threads. */
class GreenContext {
public:
    using Key = std::pair<unsigned long long, unsigned long long>;
    using Table = std::map<Key, std::vector<long long>>;

    GreenContext(unsigned p, unsigned e, long long dim_cap = 60000);

    unsigned p() const noexcept { return p_; }
    unsigned e() const noexcept { return e_; }
    unsigned q() const noexcept { return q_; }
    long long dim_cap() const noexcept { return dim_cap_; }
    const PrimeField& field() const noexcept { return f_; }

    bool has_child() const noexcept { return q_ > 1; }
    GreenContext& child();  // order q/p; throws if q = 1

    /* ---- element construction and linear structure ---- */
    GreenElement zero() const;
    GreenElement basis(unsigned r) const;  // V_r, 1 <= r <= q
    GreenElement add(const GreenElement& a, const GreenElement& b) const;
    GreenElement sub(const GreenElement& a, const GreenElement& b) const;
    GreenElement neg(const GreenElement& a) const;
    GreenElement scale(long long k, const GreenElement& a) const;

    /* product via the memoized basis table V_r * V_s */
    GreenElement mul(const GreenElement& a, const GreenElement& b);

    long long dimension(const GreenElement& a) const;
    GreenElement delta_endomorphism(const GreenElement& a) const;

    /* ---- maps between contexts ---- */
    GreenElement restrict(const GreenElement& a);        // to child context
    GreenElement induce(const GreenElement& a_child);    // from child context
    GreenElement inflate(const GreenElement& a_factor);  // from order p^j <= q
    GreenElement heller(const GreenElement& a, unsigned long long n = 1) const;

    bool is_induced(const GreenElement& a) const;
    bool proj_equiv(const GreenElement& a, const GreenElement& b) const;
    bool ind_equiv(const GreenElement& a, const GreenElement& b) const;
    long long alpha1(const GreenElement& a) const;

    /* ---- power classes ---- */
    GreenElement lambda_power(unsigned r, unsigned long long j);
    GreenElement s_power(unsigned r, unsigned long long n);
    GreenElement lambda_regular(unsigned long long n) const;  // r = q, orbit counting
    GreenElement s_regular(unsigned long long n) const;

    /* ---- Adams operations ---- */
    GreenElement adams_lambda(unsigned long long n, const GreenElement& a);
    GreenElement adams_lambda_basis(unsigned long long n, unsigned r);
    GreenElement adams_s_direct(unsigned long long n, const GreenElement& a);
    GreenElement adams_s_direct_basis(unsigned long long n, unsigned r);
    GreenElement adams_s_via_lambda(unsigned long long n, unsigned r);
    GreenElement adams_s(unsigned long long n, const GreenElement& a);  // via-lambda route
    GreenElement closed_form_adams_regular_lambda(unsigned long long n) const;
    GreenElement closed_form_adams_regular_s(unsigned long long n) const;
    GreenElement adams_lambda_fast(unsigned long long n, const GreenElement& a);
    GreenElement adams_s_fast(unsigned long long n, const GreenElement& a);

    /* ---- memo tables (read access for persistence and validation) ---- */
    const Table& tensor_table() const noexcept { return tensor_; }
    const Table& lambda_table() const noexcept { return lambda_; }
    const Table& s_table() const noexcept { return s_; }
    const Table& adams_lambda_table() const noexcept { return adams_l_; }
    const Table& adams_s_table() const noexcept { return adams_s_; }
    void install_tensor(unsigned r, unsigned s, std::vector<long long> v);
    void install_lambda(unsigned r, unsigned long long j, std::vector<long long> v);
    void install_s(unsigned r, unsigned long long n, std::vector<long long> v);
    void install_adams_lambda(unsigned long long n, unsigned r, std::vector<long long> v);
    void install_adams_s(unsigned long long n, unsigned r, std::vector<long long> v);

    /* basis product V_r * V_s as a coefficient vector, memoized */
    const std::vector<long long>& tensor_entry(unsigned r, unsigned s);

private:
    unsigned p_, e_, q_;
    long long dim_cap_;
    PrimeField f_;
    std::unique_ptr<GreenContext> child_;

    Table tensor_;   // (r, s), r <= s
    Table lambda_;   // (r, j), j <= r/2 after the palindrome reduction
    Table s_;        // (r, n)
    Table adams_l_;  // (n, r)
    Table adams_s_;  // (n, r), direct recursion

    void check_ctx(const GreenElement& a) const;
    void check_r(unsigned r) const;
    GreenContext& factor_of_order(unsigned qj);  // descend the child chain
    GreenElement regular_orbit_counts(unsigned long long n, bool multiset) const;
};

/* coefficientwise convenience operators; both sides must share a context */
GreenElement operator+(const GreenElement& a, const GreenElement& b);
GreenElement operator-(const GreenElement& a, const GreenElement& b);
GreenElement operator-(const GreenElement& a);
GreenElement operator*(long long k, const GreenElement& a);

/* signed combination "a1*V1 + a2*V2 - ...", unit coefficients bare, zero "0" */
std::string pretty(const GreenElement& a);

}  // namespace greenring

#endif
