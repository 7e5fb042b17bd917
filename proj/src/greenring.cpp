#include "greenring/greenring.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "greenring/intutil.hpp"
#include "greenring/modreal.hpp"

namespace greenring {

/* ---- GreenElement ----------------------------------------------------- */

GreenElement::GreenElement(const GreenContext& ctx) : ctx_(&ctx), c_(ctx.q(), 0) {}

GreenElement::GreenElement(const GreenContext& ctx, std::vector<long long> coeffs)
    : ctx_(&ctx), c_(std::move(coeffs)) {
    if (c_.size() != ctx.q())
        throw std::invalid_argument("GreenElement: coefficient vector must have length q");
}

long long GreenElement::alpha(unsigned i) const {
    if (i < 1 || i > c_.size()) throw std::invalid_argument("GreenElement::alpha: index out of range");
    return c_[i - 1];
}

bool GreenElement::is_zero() const {
    for (long long x : c_)
        if (x) return false;
    return true;
}

bool GreenElement::operator==(const GreenElement& o) const {
    return ctx_ == o.ctx_ && c_ == o.c_;
}

GreenElement operator+(const GreenElement& a, const GreenElement& b) {
    return a.context().add(a, b);
}
GreenElement operator-(const GreenElement& a, const GreenElement& b) {
    return a.context().sub(a, b);
}
GreenElement operator-(const GreenElement& a) { return a.context().neg(a); }
GreenElement operator*(long long k, const GreenElement& a) { return a.context().scale(k, a); }

/* ---- context core ----------------------------------------------------- */

GreenContext::GreenContext(unsigned p, unsigned e, long long dim_cap)
    : p_(p), e_(e), q_(1), dim_cap_(dim_cap), f_(p) {
    unsigned long long q = 1;
    for (unsigned i = 0; i < e; ++i) {
        q *= p;
        if (q > (1u << 20)) throw std::invalid_argument("GreenContext: q too large");
    }
    q_ = (unsigned)q;
    if (dim_cap_ < (long long)q_ * q_)
        throw std::invalid_argument("GreenContext: dim_cap must be at least q^2");
}

GreenContext& GreenContext::child() {
    if (q_ == 1) throw std::invalid_argument("GreenContext::child: no subgroup below order 1");
    if (!child_) child_ = std::make_unique<GreenContext>(p_, e_ - 1, dim_cap_);
    return *child_;
}

GreenContext& GreenContext::factor_of_order(unsigned qj) {
    if (qj == q_) return *this;
    if (qj > q_ || q_ % qj != 0)
        throw std::invalid_argument("GreenContext: not a factor order");
    return child().factor_of_order(qj);
}

void GreenContext::check_ctx(const GreenElement& a) const {
    if (&a.context() != this)
        throw std::invalid_argument("GreenContext: element belongs to a different context");
}

void GreenContext::check_r(unsigned r) const {
    if (r < 1 || r > q_)
        throw std::invalid_argument("GreenContext: basis index must satisfy 1 <= r <= q");
}

GreenElement GreenContext::zero() const { return GreenElement(*this); }

GreenElement GreenContext::basis(unsigned r) const {
    check_r(r);
    std::vector<long long> c(q_, 0);
    c[r - 1] = 1;
    return GreenElement(*this, std::move(c));
}

GreenElement GreenContext::add(const GreenElement& a, const GreenElement& b) const {
    check_ctx(a);
    check_ctx(b);
    std::vector<long long> c(q_);
    for (unsigned i = 0; i < q_; ++i) c[i] = a.coeffs()[i] + b.coeffs()[i];
    return GreenElement(*this, std::move(c));
}

GreenElement GreenContext::sub(const GreenElement& a, const GreenElement& b) const {
    return add(a, neg(b));
}

GreenElement GreenContext::neg(const GreenElement& a) const { return scale(-1, a); }

GreenElement GreenContext::scale(long long k, const GreenElement& a) const {
    check_ctx(a);
    std::vector<long long> c(q_);
    for (unsigned i = 0; i < q_; ++i) c[i] = k * a.coeffs()[i];
    return GreenElement(*this, std::move(c));
}

const std::vector<long long>& GreenContext::tensor_entry(unsigned r, unsigned s) {
    check_r(r);
    check_r(s);
    if (r > s) std::swap(r, s);
    Key k{r, s};
    auto it = tensor_.find(k);
    if (it != tensor_.end()) return it->second;
    GreenElement d = decompose(tensor(indecomposable(*this, r), indecomposable(*this, s)));
    if (dimension(d) != (long long)r * s)
        throw ConsistencyError("tensor_entry: product dimension mismatch");
    return tensor_.emplace(k, d.coeffs()).first->second;
}

GreenElement GreenContext::mul(const GreenElement& a, const GreenElement& b) {
    check_ctx(a);
    check_ctx(b);
    std::vector<long long> c(q_, 0);
    for (unsigned r = 1; r <= q_; ++r) {
        long long ar = a.coeffs()[r - 1];
        if (!ar) continue;
        for (unsigned s = 1; s <= q_; ++s) {
            long long bs = b.coeffs()[s - 1];
            if (!bs) continue;
            const auto& t = tensor_entry(r, s);
            for (unsigned i = 0; i < q_; ++i) c[i] += ar * bs * t[i];
        }
    }
    return GreenElement(*this, std::move(c));
}

long long GreenContext::dimension(const GreenElement& a) const {
    check_ctx(a);
    long long d = 0;
    for (unsigned i = 0; i < q_; ++i) d += (long long)(i + 1) * a.coeffs()[i];
    return d;
}

GreenElement GreenContext::delta_endomorphism(const GreenElement& a) const {
    return scale(dimension(a), basis(1));
}

/* ---- maps between contexts -------------------------------------------- */

GreenElement GreenContext::restrict(const GreenElement& a) {
    check_ctx(a);
    GreenContext& ch = child();
    std::vector<long long> c(ch.q(), 0);
    for (unsigned r = 1; r <= q_; ++r) {
        long long ar = a.coeffs()[r - 1];
        if (!ar) continue;
        unsigned aa = r / p_, b = r % p_;
        if (aa >= 1) c[aa - 1] += (long long)(p_ - b) * ar;
        if (b) c[aa] += (long long)b * ar;  // index a+1; a+1 <= q/p whenever b > 0
    }
    return GreenElement(ch, std::move(c));
}

GreenElement GreenContext::induce(const GreenElement& a_child) {
    GreenContext& ch = child();
    if (&a_child.context() != &ch)
        throw std::invalid_argument("induce: element is not over the child context");
    std::vector<long long> c(q_, 0);
    for (unsigned r = 1; r <= ch.q(); ++r) c[r * p_ - 1] = a_child.coeffs()[r - 1];
    return GreenElement(*this, std::move(c));
}

GreenElement GreenContext::inflate(const GreenElement& a_factor) {
    const GreenContext& src = a_factor.context();
    if (src.p() != p_ || src.q() > q_ || q_ % src.q() != 0)
        throw std::invalid_argument("inflate: source context is not a factor of this one");
    std::vector<long long> c(q_, 0);
    for (unsigned i = 0; i < src.q(); ++i) c[i] = a_factor.coeffs()[i];
    return GreenElement(*this, std::move(c));
}

GreenElement GreenContext::heller(const GreenElement& a, unsigned long long n) const {
    check_ctx(a);
    if (n == 0) return a;
    auto omega = [&](const GreenElement& x) {
        std::vector<long long> c(q_, 0);
        for (unsigned r = 1; r < q_; ++r) c[q_ - r - 1] = x.coeffs()[r - 1];
        return GreenElement(*this, std::move(c));  // V_q drops to 0
    };
    GreenElement once = omega(a);
    if (n % 2 == 1) return once;
    return omega(once);
}

bool GreenContext::is_induced(const GreenElement& a) const {
    check_ctx(a);
    for (unsigned i = 1; i <= q_; ++i)
        if (i % p_ != 0 && a.coeffs()[i - 1] != 0) return false;
    return true;
}

bool GreenContext::proj_equiv(const GreenElement& a, const GreenElement& b) const {
    check_ctx(a);
    check_ctx(b);
    for (unsigned i = 1; i < q_; ++i)
        if (a.coeffs()[i - 1] != b.coeffs()[i - 1]) return false;
    return true;
}

bool GreenContext::ind_equiv(const GreenElement& a, const GreenElement& b) const {
    return is_induced(sub(a, b));
}

long long GreenContext::alpha1(const GreenElement& a) const {
    check_ctx(a);
    return a.coeffs()[0];
}

/* ---- power classes ---------------------------------------------------- */

GreenElement GreenContext::lambda_power(unsigned r, unsigned long long j) {
    check_r(r);
    if (j > r) return zero();
    if (r == q_) return lambda_regular(j);
    unsigned long long jj = std::min(j, (unsigned long long)r - j);  // palindrome shortcut
    if (jj == 0) return basis(1);
    Key k{r, jj};
    auto it = lambda_.find(k);
    if (it == lambda_.end()) {
        GreenElement d = decompose_nilpotent(*this, exterior_power_block_csr(*this, r, jj));
        it = lambda_.emplace(k, d.coeffs()).first;
    }
    return GreenElement(*this, it->second);
}

GreenElement GreenContext::s_power(unsigned r, unsigned long long n) {
    check_r(r);
    if (n == 0) return basis(1);
    if (r == q_) return s_regular(n);
    Key k{r, n};
    auto it = s_.find(k);
    if (it == s_.end()) {
        GreenElement d = decompose_nilpotent(*this, symmetric_power_block_csr(*this, r, n));
        it = s_.emplace(k, d.coeffs()).first;
    }
    return GreenElement(*this, it->second);
}

/* Orbit counting for the rotation c -> c+1 acting on n-subsets or
 * n-multisets of Z/q.  Orbit sizes are p-power divisors t of q; the
 * elements fixed by the index-t subgroup number F(t) = C(t, nt/q) for
 * subsets and C(t + nt/q - 1, nt/q) for multisets, provided (q/t) | n. */
GreenElement GreenContext::regular_orbit_counts(unsigned long long n, bool multiset) const {
    std::vector<long long> out(q_, 0);
    uint128 prev_f = 0;
    for (unsigned long long t = 1;; t *= p_) {
        uint128 f = 0;
        if ((n * t) % q_ == 0) {
            unsigned long long k = n * t / q_;
            f = multiset ? binomial_u128(t + k - 1, k) : binomial_u128(t, k);
        }
        if (f < prev_f)
            throw ConsistencyError("regular_orbit_counts: fixed-point counts not monotone");
        uint128 diff = f - prev_f;
        if (diff % t != 0)
            throw ConsistencyError("regular_orbit_counts: orbit count not an integer");
        out[t - 1] = u128_to_ll(diff / t, "regular orbit count");
        prev_f = f;
        if (t == q_) break;
    }
    return GreenElement(*this, std::move(out));
}

GreenElement GreenContext::lambda_regular(unsigned long long n) const {
    return regular_orbit_counts(n, false);
}

GreenElement GreenContext::s_regular(unsigned long long n) const {
    return regular_orbit_counts(n, true);
}

/* ---- table installation (cache load path) ----------------------------- */

void GreenContext::install_tensor(unsigned r, unsigned s, std::vector<long long> v) {
    check_r(r);
    check_r(s);
    if (r > s) std::swap(r, s);
    if (v.size() != q_) throw std::invalid_argument("install_tensor: bad vector length");
    tensor_[{r, s}] = std::move(v);
}

void GreenContext::install_lambda(unsigned r, unsigned long long j, std::vector<long long> v) {
    check_r(r);
    if (v.size() != q_) throw std::invalid_argument("install_lambda: bad vector length");
    if (j <= r) j = std::min(j, (unsigned long long)r - j);  // stored keys are palindrome-reduced
    lambda_[{r, j}] = std::move(v);
}

void GreenContext::install_s(unsigned r, unsigned long long n, std::vector<long long> v) {
    check_r(r);
    if (v.size() != q_) throw std::invalid_argument("install_s: bad vector length");
    s_[{r, n}] = std::move(v);
}

void GreenContext::install_adams_lambda(unsigned long long n, unsigned r,
                                        std::vector<long long> v) {
    check_r(r);
    if (v.size() != q_) throw std::invalid_argument("install_adams_lambda: bad vector length");
    adams_l_[{n, r}] = std::move(v);
}

void GreenContext::install_adams_s(unsigned long long n, unsigned r, std::vector<long long> v) {
    check_r(r);
    if (v.size() != q_) throw std::invalid_argument("install_adams_s: bad vector length");
    adams_s_[{n, r}] = std::move(v);
}

std::string pretty(const GreenElement& a) {
    std::string out;
    const auto& c = a.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        long long v = c[i];
        if (out.empty()) {
            if (v < 0) out += "-";
        } else {
            out += v < 0 ? " - " : " + ";
        }
        unsigned long long mag = v < 0 ? (unsigned long long)(-v) : (unsigned long long)v;
        if (mag != 1) out += std::to_string(mag) + "*";
        out += "V" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

}  // namespace greenring
