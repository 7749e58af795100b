#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

#include "modrep/numutil.hpp"

namespace modrep {

using Rational = mpq_class;

namespace detail {

// Dense integer polynomials, index = degree.
using ZPoly = std::vector<mpz_class>;

inline void zpoly_trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
    zpoly_trim(out);
    return out;
}

// Exact division by x^d - 1.
inline ZPoly zpoly_div_xd_minus_1(ZPoly p, i64 d) {
    zpoly_trim(p);
    if (p.empty()) return {};
    ZPoly q(p.size(), mpz_class(0));
    for (i64 i = static_cast<i64>(p.size()) - 1; i >= d; --i) {
        if (p[i] == 0) continue;
        mpz_class c = p[i];
        q[i - d] = c;
        p[i] = 0;
        p[i - d] += c;
    }
    zpoly_trim(p);
    if (!p.empty()) throw std::logic_error("zpoly_div_xd_minus_1: inexact division");
    zpoly_trim(q);
    return q;
}

// m-th cyclotomic polynomial, computed once per order and cached.
inline const ZPoly& cyclotomic_poly(i64 m) {
    static std::map<i64, std::unique_ptr<ZPoly>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;

    ZPoly phi{1};
    std::vector<i64> divisors;
    for (i64 d = 1; d <= m; ++d)
        if (m % d == 0) divisors.push_back(d);
    for (i64 d : divisors) {
        if (moebius(m / d) != 1) continue;
        ZPoly f(static_cast<std::size_t>(d) + 1, mpz_class(0));
        f[0] = -1;
        f[static_cast<std::size_t>(d)] = 1;
        phi = zpoly_mul(phi, f);
    }
    for (i64 d : divisors) {
        if (moebius(m / d) != -1) continue;
        phi = zpoly_div_xd_minus_1(std::move(phi), d);
    }
    auto owned = std::make_unique<ZPoly>(std::move(phi));
    const ZPoly& ref = *owned;
    cache.emplace(m, std::move(owned));
    return ref;
}

// Sparse view of a cyclotomic polynomial: (degree, coefficient) pairs below
// the leading monomial. Leading coefficient is always 1.
struct PhiSparse {
    i64 degree = 0;
    std::vector<std::pair<i64, mpz_class>> lower;
};

inline const PhiSparse& cyclotomic_poly_sparse(i64 m) {
    static std::map<i64, std::unique_ptr<PhiSparse>> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(m);
        if (it != cache.end()) return *it->second;
    }
    const ZPoly& phi = cyclotomic_poly(m);
    auto sp = std::make_unique<PhiSparse>();
    sp->degree = static_cast<i64>(phi.size()) - 1;
    for (i64 j = 0; j < sp->degree; ++j)
        if (phi[static_cast<std::size_t>(j)] != 0)
            sp->lower.emplace_back(j, phi[static_cast<std::size_t>(j)]);
    std::lock_guard<std::mutex> lock(mtx);
    auto [it, inserted] = cache.emplace(m, std::move(sp));
    return *it->second;
}

} // namespace detail

/// Exact element of the cyclotomic field Q(zeta_m), stored as a formal
/// Q-linear combination of the m powers zeta_m^k (group-algebra style).
/// Arithmetic keeps raw coefficient maps; canonical reduction modulo the
/// m-th cyclotomic polynomial happens only on equality / zero tests and on
/// serialization, where a unique power-basis form is required.
class CycNum {
  public:
    using TermMap = std::map<i64, Rational>;

    CycNum() : order_(1) {}

    explicit CycNum(i64 order) : order_(order) {
        if (order < 1) throw std::invalid_argument("CycNum: order must be >= 1");
    }

    static CycNum zero(i64 order) { return CycNum(order); }

    static CycNum one(i64 order) { return from_rational(order, 1); }

    static CycNum from_rational(i64 order, const Rational& q) {
        CycNum x(order);
        if (q != 0) x.terms_[0] = q;
        return x;
    }

    static CycNum from_terms(i64 order, TermMap terms) {
        CycNum x(order);
        for (auto& [e, c] : terms)
            if (c != 0) x.terms_[mod_reduce(e, order)] += c;
        x.trim();
        return x;
    }

    i64 order() const { return order_; }
    const TermMap& terms() const { return terms_; }

    /// Set or add the coefficient of zeta^e.
    void add_term(i64 e, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(mod_reduce(e, order_), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    CycNum& operator+=(const CycNum& rhs) {
        check_order(rhs);
        for (const auto& [e, c] : rhs.terms_) add_term(e, c);
        return *this;
    }

    CycNum& operator-=(const CycNum& rhs) {
        check_order(rhs);
        for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
        return *this;
    }

    CycNum operator-() const {
        CycNum out(order_);
        for (const auto& [e, c] : terms_) out.terms_[e] = -c;
        return out;
    }

    CycNum& operator*=(const CycNum& rhs) {
        check_order(rhs);
        *this = *this * rhs;
        return *this;
    }

    CycNum& operator*=(const Rational& q) {
        if (q == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= q;
        return *this;
    }

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }

    friend CycNum operator*(const CycNum& a, const CycNum& b) {
        a.check_order(b);
        CycNum out(a.order_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
        return out;
    }

    friend CycNum operator*(CycNum a, const Rational& q) { return a *= q; }
    friend CycNum operator*(const Rational& q, CycNum a) { return a *= q; }

    CycNum pow(i64 k) const {
        if (k < 0) return inverse().pow(-k);
        CycNum acc = one(order_);
        CycNum base = *this;
        while (k > 0) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    /// Field automorphism zeta_m -> zeta_m^t; requires gcd(t, m) = 1.
    /// galois(-1) is complex conjugation.
    CycNum galois(i64 t) const {
        i64 tr = mod_reduce(t, order_);
        if (std::gcd(tr, order_) != 1)
            throw std::invalid_argument("galois: exponent not coprime to the order");
        CycNum out(order_);
        for (const auto& [e, c] : terms_) out.add_term(e * tr, c);
        return out;
    }

    CycNum conj() const { return galois(-1); }

    /// Re-express in Q(zeta_M) for a multiple M of the order.
    CycNum promote(i64 new_order) const {
        if (new_order % order_ != 0)
            throw std::invalid_argument("promote: new order must be a multiple of the old");
        i64 scale = new_order / order_;
        CycNum out(new_order);
        for (const auto& [e, c] : terms_) out.terms_[e * scale] = c;
        return out;
    }

    /// Rewrite on the smallest subgrid containing the support: exponents are
    /// divided by d = gcd(support, m) and the order becomes m / d. The value
    /// is unchanged (zeta_m^d is a primitive (m/d)-th root of unity).
    CycNum compress() const {
        i64 d = order_;
        for (const auto& [e, c] : terms_) d = std::gcd(d, e);
        if (d <= 1) return *this;
        CycNum out(order_ / d);
        for (const auto& [e, c] : terms_) out.terms_[e / d] = c;
        return out;
    }

    /// Unique representative on the power basis zeta^0..zeta^(phi(m)-1),
    /// obtained by exact polynomial remainder modulo the m-th cyclotomic
    /// polynomial. Deterministic across equal values; used for serialization
    /// and printing.
    CycNum canonical() const {
        const auto& phi = detail::cyclotomic_poly_sparse(order_);
        if (terms_.empty() || terms_.rbegin()->first < phi.degree) return *this;
        std::vector<Rational> dense(static_cast<std::size_t>(order_));
        for (const auto& [e, c] : terms_) dense[static_cast<std::size_t>(e)] = c;
        for (i64 i = order_ - 1; i >= phi.degree; --i) {
            Rational& lead = dense[static_cast<std::size_t>(i)];
            if (lead == 0) continue;
            for (const auto& [j, pc] : phi.lower)
                dense[static_cast<std::size_t>(i - phi.degree + j)] -= lead * pc;
            lead = 0;
        }
        CycNum out(order_);
        for (i64 e = 0; e < phi.degree; ++e)
            if (dense[static_cast<std::size_t>(e)] != 0)
                out.terms_[e] = dense[static_cast<std::size_t>(e)];
        return out;
    }

    bool is_zero() const {
        if (terms_.empty()) return true;
        CycNum small = compress();
        return small.canonical().terms_.empty();
    }

    friend bool operator==(const CycNum& a, const CycNum& b) {
        if (a.order_ == b.order_ && a.terms_ == b.terms_) return true;
        return (a - b).is_zero();
    }

    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    bool is_rational() const {
        CycNum can = compress().canonical();
        return can.terms_.empty() ||
               (can.terms_.size() == 1 && can.terms_.begin()->first == 0);
    }

    Rational to_rational() const {
        CycNum can = compress().canonical();
        if (can.terms_.empty()) return Rational(0);
        if (can.terms_.size() == 1 && can.terms_.begin()->first == 0)
            return can.terms_.begin()->second;
        throw std::domain_error("to_rational: element is not rational");
    }

    /// Multiplicative inverse, via the extended Euclidean algorithm against
    /// the cyclotomic polynomial of the compressed order.
    CycNum inverse() const;

    std::string to_string() const {
        CycNum can = canonical();
        if (can.terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : can.terms_) {
            Rational coeff = c;
            if (first) {
                if (coeff < 0) {
                    os << "-";
                    coeff = -coeff;
                }
            } else {
                os << (coeff < 0 ? " - " : " + ");
                if (coeff < 0) coeff = -coeff;
            }
            first = false;
            bool unit_coeff = (coeff == 1);
            if (e == 0) {
                os << coeff.get_str();
            } else {
                if (!unit_coeff) os << coeff.get_str() << "*";
                os << "z" << order_;
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

  private:
    void check_order(const CycNum& rhs) const {
        if (order_ != rhs.order_)
            throw std::invalid_argument("CycNum: mixed field orders (promote first)");
    }

    void trim() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = (it->second == 0) ? terms_.erase(it) : std::next(it);
    }

    i64 order_;
    TermMap terms_;
};

/// zeta_m^k.
inline CycNum root_power(i64 m, i64 k) {
    CycNum x(m);
    x.add_term(k, 1);
    return x;
}

namespace detail {

// Dense rational polynomials for the extended Euclidean algorithm.
using QPoly = std::vector<Rational>;

inline void qpoly_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly qpoly_divmod(QPoly& rem, const QPoly& den) {
    QPoly quot;
    if (den.empty()) throw std::domain_error("qpoly_divmod: division by zero polynomial");
    if (rem.size() >= den.size()) quot.assign(rem.size() - den.size() + 1, Rational(0));
    while (rem.size() >= den.size()) {
        Rational f = rem.back() / den.back();
        std::size_t shift = rem.size() - den.size();
        quot[shift] = f;
        for (std::size_t j = 0; j < den.size(); ++j) rem[shift + j] -= f * den[j];
        qpoly_trim(rem);
        if (rem.size() >= den.size() && rem.back() == 0) qpoly_trim(rem);
    }
    return quot;
}

inline QPoly qpoly_sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
    // a - q*b
    QPoly out = a;
    if (!q.empty() && !b.empty()) {
        std::size_t need = q.size() + b.size() - 1;
        if (out.size() < need) out.resize(need, Rational(0));
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                if (b[j] != 0) out[i + j] -= q[i] * b[j];
        }
    }
    qpoly_trim(out);
    return out;
}

} // namespace detail

inline CycNum CycNum::inverse() const {
    CycNum small = compress();
    i64 m = small.order();
    CycNum can = small.canonical();
    if (can.terms().empty()) throw std::domain_error("CycNum::inverse: division by zero");

    const auto& phi_z = detail::cyclotomic_poly(m);
    detail::QPoly phi(phi_z.size());
    for (std::size_t i = 0; i < phi_z.size(); ++i) phi[i] = Rational(phi_z[i]);

    detail::QPoly p(static_cast<std::size_t>(can.terms().rbegin()->first) + 1, Rational(0));
    for (const auto& [e, c] : can.terms()) p[static_cast<std::size_t>(e)] = c;

    // Extended Euclid on (phi, p), tracking Bezout coefficients of p only.
    detail::QPoly r0 = phi, r1 = p;
    detail::QPoly s0, s1{Rational(1)};
    while (!r1.empty()) {
        detail::QPoly rem = r0;
        detail::QPoly q = detail::qpoly_divmod(rem, r1);
        detail::QPoly s2 = detail::qpoly_sub_mul(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1)
        throw std::logic_error("CycNum::inverse: nontrivial gcd with cyclotomic polynomial");
    Rational scale = Rational(1) / r0[0];
    CycNum inv(m);
    for (std::size_t e = 0; e < s0.size(); ++e)
        if (s0[e] != 0) inv.add_term(static_cast<i64>(e), s0[e] * scale);
    return (order() == m) ? inv : inv.promote(order());
}

inline CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

/// Quadratic Gauss sum g = sum_{k=1}^{r-1} chi(k) zeta_r^k, an exact square
/// root of chi(-1)*r in Q(zeta_r). Its complex embedding is the classical
/// Gauss sum: +sqrt(r) for r = 1 mod 4, +i*sqrt(r) for r = 3 mod 4.
inline CycNum gauss_sqrt(i64 r) {
    if (r == 2 || !is_prime(r)) throw std::invalid_argument("gauss_sqrt: r must be an odd prime");
    CycNum g(r);
    for (i64 k = 1; k < r; ++k) g.add_term(k, legendre(k, r));
    return g;
}

namespace detail {

class MpfrComplexAccum {
  public:
    explicit MpfrComplexAccum(mpfr_prec_t prec) {
        mpfr_inits2(prec, re_, im_, angle_, c_, s_, t_, pi2_, static_cast<mpfr_ptr>(nullptr));
        mpfr_set_zero(re_, 1);
        mpfr_set_zero(im_, 1);
        mpfr_const_pi(pi2_, MPFR_RNDN);
        mpfr_mul_ui(pi2_, pi2_, 2, MPFR_RNDN);
    }
    ~MpfrComplexAccum() {
        mpfr_clears(re_, im_, angle_, c_, s_, t_, pi2_, static_cast<mpfr_ptr>(nullptr));
    }
    MpfrComplexAccum(const MpfrComplexAccum&) = delete;
    MpfrComplexAccum& operator=(const MpfrComplexAccum&) = delete;

    void add_term(i64 e, i64 m, const Rational& coeff) {
        mpfr_mul_si(angle_, pi2_, e, MPFR_RNDN);
        mpfr_div_si(angle_, angle_, m, MPFR_RNDN);
        mpfr_sin_cos(s_, c_, angle_, MPFR_RNDN);
        mpfr_mul_q(t_, c_, coeff.get_mpq_t(), MPFR_RNDN);
        mpfr_add(re_, re_, t_, MPFR_RNDN);
        mpfr_mul_q(t_, s_, coeff.get_mpq_t(), MPFR_RNDN);
        mpfr_add(im_, im_, t_, MPFR_RNDN);
    }

    std::complex<double> to_complex() const {
        return {mpfr_get_d(re_, MPFR_RNDN), mpfr_get_d(im_, MPFR_RNDN)};
    }

    // Binary exponent of re^2 + im^2 (LONG_MIN - ish sentinel when zero).
    long abs2_exp() const {
        mpfr_sqr(c_, re_, MPFR_RNDN);
        mpfr_sqr(s_, im_, MPFR_RNDN);
        mpfr_add(t_, c_, s_, MPFR_RNDN);
        if (mpfr_zero_p(t_)) return mpfr_get_emin();
        return static_cast<long>(mpfr_get_exp(t_));
    }

  private:
    mutable mpfr_t re_, im_, angle_, c_, s_, t_, pi2_;
};

} // namespace detail

/// Numerical evaluation at zeta_m = exp(2*pi*i/m), computed with `prec`-bit
/// floating point and rounded to double. Each term contributes relative
/// error ~2^(1-prec), so the absolute error is at most about
/// (sum_k |c_k|) * (m + 4) * 2^(1-prec) before the final double rounding.
inline std::complex<double> embed(const CycNum& x, long prec = 64) {
    if (prec < 53) throw std::invalid_argument("embed: precision must be >= 53 bits");
    detail::MpfrComplexAccum acc(static_cast<mpfr_prec_t>(prec));
    for (const auto& [e, c] : x.terms()) acc.add_term(e, x.order(), c);
    return acc.to_complex();
}

/// Binary exponent E with |embed(x)|^2 in [2^E, 2^(E+1)); very negative when
/// the evaluation is numerically zero. Used to cross-check exact zero tests:
/// |x| < 2^-100 at 200-bit precision corresponds to E < -200.
inline long embed_abs2_exp(const CycNum& x, long prec = 200) {
    detail::MpfrComplexAccum acc(static_cast<mpfr_prec_t>(prec));
    for (const auto& [e, c] : x.terms()) acc.add_term(e, x.order(), c);
    return acc.abs2_exp();
}

} // namespace modrep
