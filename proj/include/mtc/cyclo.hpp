#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// An element is stored relative to its conductor n as a sparse integer vector
// over the Zumbroich basis of Q(zeta_n), divided by one positive common
// denominator. The Zumbroich basis is the tensor product, over the prime powers
// p^e || n, of {zeta_{p^e}^j : j = a + b p^(e-1), 0 <= a < p^(e-1)} with
// b in {1..p-1} for odd p and b = 0 for p = 2. Reduction to it is a rewrite
// with the relations sum_t zeta^(k + t n/p) = 0 and zeta^(k + n/2) = -zeta^k,
// so the stored form is unique for a fixed conductor and equality is a
// coefficient comparison. Conductors are never congruent to 2 mod 4.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mtc/number_theory.hpp"

namespace mtc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an operation would need a conductor above conductor_cap().
class ConductorLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

namespace detail {

inline std::atomic<int>& conductor_cap_storage() {
    static std::atomic<int> cap{1920};
    return cap;
}

inline int checked_lcm(int a, int b) {
    const std::int64_t l = std::lcm<std::int64_t>(a, b);
    if (l > conductor_cap_storage().load(std::memory_order_relaxed)) {
        throw ConductorLimitError("cyclotomic conductor " + std::to_string(l) +
                                  " exceeds the configured cap of " +
                                  std::to_string(conductor_cap_storage().load()));
    }
    return static_cast<int>(l);
}

inline bool is_small(const Integer& x) {
    static const Integer bound = Integer(1) << 30;
    return x < bound && x > -bound;
}

// Rewrites a dense coefficient vector over zeta_n^0..zeta_n^(n-1) into the
// Zumbroich basis, in place.
template <class T>
void zumbroich_reduce(int n, std::vector<T>& acc) {
    for (const auto& pp : nt::factorize(n)) {
        const int p = static_cast<int>(pp.prime);
        const int q = static_cast<int>(pp.power);
        const int lower = q / p;
        const int step = n / p;
        for (int k = 0; k < n; ++k) {
            if (acc[k] == 0) {
                continue;
            }
            const int digit = (k % q) / lower;
            if (p == 2) {
                if (digit == 1) {
                    acc[(k + step) % n] -= acc[k];
                    acc[k] = 0;
                }
            } else if (digit == 0) {
                for (int t = 1; t < p; ++t) {
                    acc[(k + t * step) % n] -= acc[k];
                }
                acc[k] = 0;
            }
        }
    }
}

// Maps zeta_n^k with n = 2 mod 4 onto conductor n/2: returns {k', sign}.
inline std::pair<int, int> halve_conductor(int n, std::int64_t k) {
    const int m = n / 2;
    k = nt::mod(k, n);
    const int sign = (k % 2 == 0) ? 1 : -1;
    return {static_cast<int>(nt::mod(k * ((m + 1) / 2), m)), sign};
}

}  // namespace detail

inline int conductor_cap() {
    return detail::conductor_cap_storage().load();
}

/// Sets the largest conductor arithmetic may lift to (default 1920).
inline void set_conductor_cap(int cap) {
    if (cap < 1) {
        throw std::invalid_argument("conductor cap must be positive");
    }
    detail::conductor_cap_storage().store(cap);
}

class Cyclotomic {
public:
    struct Term {
        int exponent;
        Integer numerator;
        friend bool operator==(const Term&, const Term&) = default;
    };

    Cyclotomic() = default;

    Cyclotomic(std::int64_t value) {  // NOLINT(google-explicit-constructor)
        if (value != 0) {
            terms_.push_back({0, Integer(value)});
        }
    }

    explicit Cyclotomic(const Rational& value) {
        if (value != 0) {
            terms_.push_back({0, boost::multiprecision::numerator(value)});
            den_ = boost::multiprecision::denominator(value);
        }
    }

    /// zeta_n^k with zeta_n = exp(2 pi i / n).
    static Cyclotomic zeta(std::int64_t n, std::int64_t k = 1) {
        if (n < 1) {
            throw std::invalid_argument("zeta: order must be positive");
        }
        std::vector<std::pair<std::int64_t, Rational>> one{{k, Rational(1)}};
        return from_terms(n, one);
    }

    /// Builds sum_k c_k zeta_n^k from arbitrary (exponent, rational) pairs.
    static Cyclotomic from_terms(std::int64_t n,
                                 std::span<const std::pair<std::int64_t, Rational>> terms) {
        if (n < 1) {
            throw std::invalid_argument("cyclotomic conductor must be positive");
        }
        int cond = detail::checked_lcm(1, static_cast<int>(n));
        Integer den = 1;
        for (const auto& [k, c] : terms) {
            den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(c));
        }
        const bool halve = cond % 4 == 2;
        const int target = halve ? cond / 2 : cond;
        std::vector<Integer> acc(target);
        for (const auto& [k, c] : terms) {
            Integer v = boost::multiprecision::numerator(c) * (den / boost::multiprecision::denominator(c));
            if (halve) {
                auto [kk, sign] = detail::halve_conductor(cond, k);
                acc[kk] += sign * v;
            } else {
                acc[nt::mod(k, cond)] += v;
            }
        }
        return finish(target, acc, std::move(den));
    }

    int conductor() const { return conductor_; }
    const std::vector<Term>& terms() const { return terms_; }
    const Integer& denominator() const { return den_; }
    bool is_zero() const { return terms_.empty(); }

    /// Same value expressed in Q(zeta_n); n must be a multiple of conductor().
    Cyclotomic lifted(int n) const {
        if (n == conductor_) {
            return *this;
        }
        if (n % conductor_ != 0 || n % 4 == 2) {
            throw std::invalid_argument("cannot lift conductor " + std::to_string(conductor_) +
                                        " to " + std::to_string(n));
        }
        detail::checked_lcm(n, 1);
        const int scale = n / conductor_;
        if (all_small()) {
            std::vector<__int128> acc(n);
            for (const auto& t : terms_) {
                acc[t.exponent * scale] = static_cast<__int128>(static_cast<std::int64_t>(t.numerator));
            }
            return finish(n, acc, den_);
        }
        std::vector<Integer> acc(n);
        for (const auto& t : terms_) {
            acc[t.exponent * scale] = t.numerator;
        }
        return finish(n, acc, den_);
    }

    /// Same value in the smallest cyclotomic field containing it.
    Cyclotomic minimized() const {
        if (is_zero()) {
            return {};
        }
        if (auto q = as_rational()) {
            return Cyclotomic(*q);
        }
        Cyclotomic x = *this;
        bool changed = true;
        while (changed && x.conductor_ > 1) {
            changed = false;
            for (const auto& pp : nt::factorize(x.conductor_)) {
                Cyclotomic y = x.project_below(static_cast<int>(pp.prime), pp.exponent);
                if (y.lifted(x.conductor_) == x) {
                    x = std::move(y);
                    changed = true;
                    break;
                }
            }
        }
        return x;
    }

    std::optional<Rational> as_rational() const {
        if (is_zero()) {
            return Rational(0);
        }
        if (conductor_ == 1) {
            return Rational(terms_[0].numerator, den_);
        }
        // Candidate = trace / degree; the trace of zeta_n^k is the Ramanujan sum c_n(k).
        const std::int64_t phi = nt::euler_phi(conductor_);
        Integer trace = 0;
        for (const auto& t : terms_) {
            trace += t.numerator * ramanujan_sum(conductor_, t.exponent);
        }
        Rational q(trace, den_ * phi);
        if (Cyclotomic(q).lifted(conductor_) == *this) {
            return q;
        }
        return std::nullopt;
    }

    std::optional<Integer> as_integer() const {
        auto q = as_rational();
        if (!q || boost::multiprecision::denominator(*q) != 1) {
            return std::nullopt;
        }
        return boost::multiprecision::numerator(*q);
    }

    /// Galois automorphism zeta -> zeta^u, gcd(u, conductor) = 1.
    Cyclotomic galois(std::int64_t u) const {
        if (conductor_ <= 2) {
            return *this;
        }
        const std::int64_t uu = nt::mod(u, conductor_);
        if (std::gcd<std::int64_t>(uu, conductor_) != 1) {
            throw std::invalid_argument("galois: exponent not a unit modulo the conductor");
        }
        if (all_small()) {
            std::vector<__int128> acc(conductor_);
            for (const auto& t : terms_) {
                acc[nt::mod(t.exponent * uu, conductor_)] = static_cast<std::int64_t>(t.numerator);
            }
            return finish(conductor_, acc, den_);
        }
        std::vector<Integer> acc(conductor_);
        for (const auto& t : terms_) {
            acc[nt::mod(t.exponent * uu, conductor_)] = t.numerator;
        }
        return finish(conductor_, acc, den_);
    }

    Cyclotomic conj() const { return galois(-1); }

    Cyclotomic inverse() const {
        if (is_zero()) {
            throw std::domain_error("cyclotomic division by zero");
        }
        const Cyclotomic m = minimized();
        if (m.conductor_ == 1) {
            return Cyclotomic(Rational(m.den_) / Rational(m.terms_[0].numerator));
        }
        Cyclotomic others(1);
        for (std::int64_t u : nt::units(m.conductor_)) {
            if (u != 1) {
                others *= m.galois(u);
            }
        }
        auto norm = (m * others).as_rational();
        if (!norm || *norm == 0) {
            throw std::logic_error("cyclotomic norm is not a nonzero rational");
        }
        return others.scaled(boost::multiprecision::denominator(*norm),
                             boost::multiprecision::numerator(*norm));
    }

    std::complex<double> to_complex() const {
        long double re = 0;
        long double im = 0;
        for (const auto& t : terms_) {
            const long double angle = 2.0L * std::numbers::pi_v<long double> * t.exponent / conductor_;
            const long double c = t.numerator.convert_to<long double>();
            re += c * std::cos(angle);
            im += c * std::sin(angle);
        }
        const long double d = den_.convert_to<long double>();
        return {static_cast<double>(re / d), static_cast<double>(im / d)};
    }

    /// Human readable form of the minimized element, e.g. "-1/2 + z8^3".
    std::string to_string() const {
        const Cyclotomic m = minimized();
        if (m.is_zero()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (const auto& t : m.terms_) {
            Rational c(t.numerator, m.den_);
            const bool negative = c < 0;
            if (negative) {
                c = -c;
            }
            os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
            first = false;
            const bool unit_coefficient = c == 1;
            if (m.conductor_ == 1) {
                os << c;
                continue;
            }
            if (!unit_coefficient) {
                os << c << "*";
            }
            os << "z" << m.conductor_;
            if (t.exponent != 1) {
                os << "^" << t.exponent;
            }
        }
        return os.str();
    }

    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& t : r.terms_) {
            t.numerator = -t.numerator;
        }
        return r;
    }

    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this + (-o); }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this * o.inverse(); }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.is_zero()) {
            return b;
        }
        if (b.is_zero()) {
            return a;
        }
        const int n = detail::checked_lcm(a.conductor_, b.conductor_);
        const Cyclotomic x = a.lifted(n);
        const Cyclotomic y = b.lifted(n);
        Integer den;
        Integer mx = 1;
        Integer my = 1;
        if (x.den_ == y.den_) {
            den = x.den_;
        } else {
            const Integer g = boost::multiprecision::gcd(x.den_, y.den_);
            mx = y.den_ / g;
            my = x.den_ / g;
            den = x.den_ * mx;
        }
        Cyclotomic r;
        r.conductor_ = n;
        r.den_ = std::move(den);
        auto i = x.terms_.begin();
        auto j = y.terms_.begin();
        while (i != x.terms_.end() || j != y.terms_.end()) {
            if (j == y.terms_.end() || (i != x.terms_.end() && i->exponent < j->exponent)) {
                r.terms_.push_back({i->exponent, i->numerator * mx});
                ++i;
            } else if (i == x.terms_.end() || j->exponent < i->exponent) {
                r.terms_.push_back({j->exponent, j->numerator * my});
                ++j;
            } else {
                Integer v = i->numerator * mx + j->numerator * my;
                if (v != 0) {
                    r.terms_.push_back({i->exponent, std::move(v)});
                }
                ++i;
                ++j;
            }
        }
        r.normalize();
        return r;
    }

    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        if (a.conductor_ == 1) {
            return b.scaled(a.terms_[0].numerator, a.den_);
        }
        if (b.conductor_ == 1) {
            return a.scaled(b.terms_[0].numerator, b.den_);
        }
        const Cyclotomic* pair_u[1] = {&a};
        const Cyclotomic* pair_v[1] = {&b};
        return dot_impl(pair_u, pair_v);
    }

    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.conductor_ == b.conductor_) {
            return a.den_ == b.den_ && a.terms_ == b.terms_;
        }
        if (a.is_zero() || b.is_zero()) {
            return false;
        }
        const int n = detail::checked_lcm(a.conductor_, b.conductor_);
        return a.lifted(n) == b.lifted(n);
    }

    /// sum_i u_i v_i with a single basis reduction.
    static Cyclotomic dot(std::span<const Cyclotomic> u, std::span<const Cyclotomic> v) {
        if (u.size() != v.size()) {
            throw std::invalid_argument("dot: length mismatch");
        }
        std::vector<const Cyclotomic*> pu;
        std::vector<const Cyclotomic*> pv;
        pu.reserve(u.size());
        pv.reserve(v.size());
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (!u[i].is_zero() && !v[i].is_zero()) {
                pu.push_back(&u[i]);
                pv.push_back(&v[i]);
            }
        }
        return dot_impl(pu, pv);
    }

private:
    int conductor_ = 1;
    std::vector<Term> terms_;
    Integer den_ = 1;

    bool all_small() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](const Term& t) { return detail::is_small(t.numerator); });
    }

    static std::int64_t ramanujan_sum(std::int64_t n, std::int64_t k) {
        const std::int64_t g = std::gcd(n, nt::mod(k, n));
        const std::int64_t m = n / g;
        int mobius = 1;
        for (const auto& pp : nt::factorize(m)) {
            if (pp.exponent > 1) {
                return 0;
            }
            mobius = -mobius;
        }
        return mobius * (nt::euler_phi(n) / nt::euler_phi(m));
    }

    Cyclotomic scaled(const Integer& num, const Integer& den) const {
        if (num == 0) {
            return {};
        }
        Cyclotomic r = *this;
        const bool flip = den < 0;
        for (auto& t : r.terms_) {
            t.numerator *= flip ? Integer(-num) : num;
        }
        r.den_ *= flip ? Integer(-den) : den;
        r.normalize();
        return r;
    }

    void normalize() {
        if (terms_.empty()) {
            conductor_ = 1;
            den_ = 1;
            return;
        }
        if (den_ == 1) {
            return;
        }
        Integer g = den_;
        for (const auto& t : terms_) {
            if (g == 1) {
                break;
            }
            g = boost::multiprecision::gcd(g, t.numerator);
        }
        if (g != 1) {
            for (auto& t : terms_) {
                t.numerator /= g;
            }
            den_ /= g;
        }
    }

    template <class T>
    static Cyclotomic finish(int n, std::vector<T>& acc, Integer den) {
        detail::zumbroich_reduce(n, acc);
        Cyclotomic r;
        r.conductor_ = n;
        r.den_ = std::move(den);
        for (int k = 0; k < n; ++k) {
            if (acc[k] != 0) {
                r.terms_.push_back({k, Integer(acc[k])});
            }
        }
        r.normalize();
        return r;
    }

    static Cyclotomic dot_impl(std::span<const Cyclotomic* const> u, std::span<const Cyclotomic* const> v) {
        if (u.empty()) {
            return {};
        }
        int n = 1;
        Integer den = 1;
        bool small = true;
        for (std::size_t i = 0; i < u.size(); ++i) {
            n = detail::checked_lcm(n, detail::checked_lcm(u[i]->conductor_, v[i]->conductor_));
            den = boost::multiprecision::lcm(den, u[i]->den_ * v[i]->den_);
            small = small && u[i]->all_small() && v[i]->all_small();
        }
        std::vector<Integer> scale(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) {
            scale[i] = den / (u[i]->den_ * v[i]->den_);
            small = small && scale[i] < (Integer(1) << 16);
        }
        if (small) {
            std::vector<__int128> acc(n);
            std::vector<std::pair<int, std::int64_t>> tv;
            for (std::size_t i = 0; i < u.size(); ++i) {
                const int su = n / u[i]->conductor_;
                const int sv = n / v[i]->conductor_;
                const auto s = static_cast<std::int64_t>(scale[i]);
                tv.clear();
                for (const auto& t : v[i]->terms_) {
                    tv.emplace_back(t.exponent * sv, static_cast<std::int64_t>(t.numerator) * s);
                }
                for (const auto& t : u[i]->terms_) {
                    const int eu = t.exponent * su;
                    const auto cu = static_cast<std::int64_t>(t.numerator);
                    for (const auto& [ev, cv] : tv) {
                        int k = eu + ev;
                        if (k >= n) {
                            k -= n;
                        }
                        acc[k] += static_cast<__int128>(cu) * cv;
                    }
                }
            }
            return finish(n, acc, std::move(den));
        }
        std::vector<Integer> acc(n);
        for (std::size_t i = 0; i < u.size(); ++i) {
            const int su = n / u[i]->conductor_;
            const int sv = n / v[i]->conductor_;
            for (const auto& tu : u[i]->terms_) {
                for (const auto& tv2 : v[i]->terms_) {
                    acc[(tu.exponent * su + tv2.exponent * sv) % n] += tu.numerator * tv2.numerator * scale[i];
                }
            }
        }
        return finish(n, acc, std::move(den));
    }

    // Candidate for this element inside Q(zeta_{n/p}) via the relative trace.
    Cyclotomic project_below(int p, int exponent) const {
        const int n = conductor_;
        const int m = n / p;
        std::vector<std::pair<std::int64_t, Rational>> out;
        if (exponent >= 2) {
            for (const auto& t : terms_) {
                if (t.exponent % p == 0) {
                    out.emplace_back(t.exponent / p, Rational(t.numerator, den_));
                }
            }
        } else {
            // n = p m with gcd(p, m) = 1; zeta_n^k = zeta_p^(k a') zeta_m^(k b').
            const std::int64_t a_inv = nt::mod_inverse(m, p);
            const std::int64_t b_inv = m == 1 ? 0 : nt::mod_inverse(p, m);
            for (const auto& t : terms_) {
                const std::int64_t a = nt::mod(t.exponent * a_inv, p);
                const std::int64_t j = m == 1 ? 0 : nt::mod(t.exponent * b_inv, m);
                Rational c(t.numerator, den_);
                if (a != 0) {
                    c = -c / (p - 1);
                }
                out.emplace_back(j, c);
            }
        }
        return from_terms(m, out);
    }
};

/// Total order on values (compares minimized canonical forms).
inline bool canonical_less(const Cyclotomic& a, const Cyclotomic& b) {
    const Cyclotomic x = a.minimized();
    const Cyclotomic y = b.minimized();
    if (x.conductor() != y.conductor()) {
        return x.conductor() < y.conductor();
    }
    if (x.denominator() != y.denominator()) {
        return x.denominator() < y.denominator();
    }
    const auto& tx = x.terms();
    const auto& ty = y.terms();
    return std::lexicographical_compare(tx.begin(), tx.end(), ty.begin(), ty.end(),
                                        [](const Cyclotomic::Term& l, const Cyclotomic::Term& r) {
                                            if (l.exponent != r.exponent) {
                                                return l.exponent < r.exponent;
                                            }
                                            return l.numerator < r.numerator;
                                        });
}

inline std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.to_string(); }

inline Cyclotomic pow(Cyclotomic base, std::int64_t k) {
    if (k < 0) {
        base = base.inverse();
        k = -k;
    }
    Cyclotomic result(1);
    while (k > 0) {
        if (k & 1) {
            result *= base;
        }
        k >>= 1;
        if (k > 0) {
            base *= base;
        }
    }
    return result;
}

/// exp(2 pi i num / den).
inline Cyclotomic root_of_unity(std::int64_t num, std::int64_t den) {
    if (den < 1) {
        throw std::invalid_argument("root_of_unity: denominator must be positive");
    }
    const std::int64_t g = std::gcd(nt::mod(num, den), den);
    return Cyclotomic::zeta(den / g, nt::mod(num, den) / g);
}

inline int jacobi(std::int64_t a, std::int64_t n) {
    return nt::jacobi(a, n);
}

inline std::complex<double> to_complex(const Cyclotomic& x) {
    return x.to_complex();
}

/// Positive square root of N built from quadratic Gauss sums.
inline Cyclotomic sqrt_int(std::int64_t N) {
    if (N < 1) {
        throw std::invalid_argument("sqrt_int: argument must be positive");
    }
    const auto [square, free] = nt::square_and_squarefree(N);
    Cyclotomic root(square);
    for (const auto& pp : nt::factorize(free)) {
        const std::int64_t p = pp.prime;
        Cyclotomic r;
        if (p == 2) {
            r = Cyclotomic::zeta(8, 1) + Cyclotomic::zeta(8, 7);
        } else {
            std::vector<std::pair<std::int64_t, Rational>> gauss;
            for (std::int64_t j = 1; j < p; ++j) {
                gauss.emplace_back(j, Rational(nt::jacobi(j, p)));
            }
            r = Cyclotomic::from_terms(p, gauss);
            if (p % 4 == 3) {
                r *= Cyclotomic::zeta(4, 3);  // the sum equals i sqrt(p) up to sign
            }
            if (r.to_complex().real() < 0) {
                r = -r;
            }
        }
        root *= r;
    }
    return root;
}

/// G(N) = (-1/N) sqrt(N) for N = 1 mod 4 and i (-1/N) sqrt(N) for N = 3 mod 4.
inline Cyclotomic gauss_G(std::int64_t N) {
    if (N < 1 || N % 2 == 0) {
        throw std::invalid_argument("gauss_G: N must be an odd positive integer");
    }
    Cyclotomic g = Cyclotomic(jacobi(-1, N)) * sqrt_int(N);
    if (N % 4 == 3) {
        g *= Cyclotomic::zeta(4, 1);
    }
    return g;
}

/// Smallest k >= 1 with x^k = 1, or nullopt when x is not a root of unity.
inline std::optional<std::int64_t> order_of_unity(const Cyclotomic& x) {
    if (x.is_zero()) {
        return std::nullopt;
    }
    const Cyclotomic m = x.minimized();
    const auto z = m.to_complex();
    if (std::abs(std::abs(z) - 1.0) > 1e-6) {
        return std::nullopt;
    }
    // Roots of unity in Q(zeta_n) are exactly the 2n-th (n odd) or n-th (n even) roots.
    const std::int64_t L = m.conductor() % 2 == 0 ? m.conductor() : 2 * m.conductor();
    const double turns = std::arg(z) / (2 * std::numbers::pi);
    const std::int64_t k = nt::mod(std::llround(turns * static_cast<double>(L)), L);
    if (root_of_unity(k, L) != m) {
        return std::nullopt;
    }
    return L / std::gcd(k == 0 ? L : k, L);
}

}  // namespace mtc
