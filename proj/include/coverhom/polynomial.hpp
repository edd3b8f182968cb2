#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "coverhom/rational.hpp"

namespace coverhom {

/// Univariate polynomial over Q, coefficients stored lowest degree first.
/// The zero polynomial has an empty coefficient list.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    RationalPolynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static RationalPolynomial constant(const Rational& v) { return RationalPolynomial({v}); }
    static RationalPolynomial x() { return RationalPolynomial({Rational(0), Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational operator()(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    RationalPolynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
        return RationalPolynomial(std::move(d));
    }

    RationalPolynomial operator-() const {
        std::vector<Rational> d(c_);
        for (auto& v : d) v = -v;
        return RationalPolynomial(std::move(d));
    }

    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
        std::vector<Rational> d(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) d[i] += b.c_[i];
        return RationalPolynomial(std::move(d));
    }

    friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a + (-b);
    }

    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> d(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
        return RationalPolynomial(std::move(d));
    }

    friend RationalPolynomial operator*(const Rational& s, const RationalPolynomial& p) {
        std::vector<Rational> d(p.c_);
        for (auto& v : d) v *= s;
        return RationalPolynomial(std::move(d));
    }

    bool operator==(const RationalPolynomial& other) const { return c_ == other.c_; }

    /// Euclidean division: returns (quotient, remainder).
    std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& d) const {
        if (d.is_zero()) throw validation_error("division by zero polynomial");
        std::vector<Rational> rem(c_);
        std::vector<Rational> quo;
        const int dd = d.degree();
        while (static_cast<int>(rem.size()) - 1 >= dd) {
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
            if (static_cast<int>(rem.size()) - 1 < dd) break;
            const std::size_t shift = rem.size() - 1 - dd;
            const Rational q = rem.back() / d.leading();
            if (quo.size() < shift + 1) quo.resize(shift + 1, Rational(0));
            quo[shift] += q;
            for (std::size_t i = 0; i < d.c_.size(); ++i) rem[shift + i] -= q * d.c_[i];
            rem.pop_back();
        }
        return {RationalPolynomial(std::move(quo)), RationalPolynomial(std::move(rem))};
    }

    /// Divides by a positive rational so the coefficients become coprime
    /// integers; the sign pattern is unchanged.
    RationalPolynomial primitive() const {
        if (is_zero()) return {};
        Integer den_lcm = 1;
        for (const auto& v : c_) den_lcm = lcm(den_lcm, denominator(v));
        Integer num_gcd = 0;
        for (const auto& v : c_) num_gcd = gcd(num_gcd, Integer(numerator(v) * (den_lcm / denominator(v))));
        const Rational content = Rational(num_gcd) / Rational(den_lcm);
        std::vector<Rational> d(c_);
        for (auto& v : d) v /= content;
        return RationalPolynomial(std::move(d));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
    RationalPolynomial x = a.primitive(), y = b.primitive();
    while (!y.is_zero()) {
        RationalPolynomial r = x.divmod(y).second;
        x = std::move(y);
        y = r.is_zero() ? RationalPolynomial{} : r.primitive();
    }
    if (x.is_zero()) return x;
    // Normalize to positive leading coefficient.
    return x.leading() < 0 ? (-x).primitive() : x;
}

inline RationalPolynomial squarefree_part(const RationalPolynomial& p) {
    if (p.is_zero()) throw validation_error("squarefree part of the zero polynomial");
    if (p.degree() == 0) return RationalPolynomial::constant(1);
    RationalPolynomial g = gcd(p, p.derivative());
    return p.divmod(g).first.primitive();
}

/// Yun decomposition: p = c * prod f_i^i with each f_i squarefree and
/// pairwise coprime. Returns the (f_i, i) pairs with nonconstant f_i.
inline std::vector<std::pair<RationalPolynomial, int>> squarefree_decomposition(
    const RationalPolynomial& p) {
    std::vector<std::pair<RationalPolynomial, int>> out;
    if (p.is_zero() || p.degree() == 0) return out;
    RationalPolynomial a = p.primitive();
    RationalPolynomial g = gcd(a, a.derivative());
    if (g.degree() == 0) {
        out.emplace_back(a, 1);
        return out;
    }
    RationalPolynomial w = a.divmod(g).first;
    RationalPolynomial y = a.derivative().divmod(g).first;
    RationalPolynomial z = y - w.derivative();
    int i = 1;
    while (!(w.degree() == 0)) {
        RationalPolynomial f = gcd(w, z);
        if (f.degree() > 0) out.emplace_back(f, i);
        w = w.divmod(f).first;
        y = z.divmod(f).first;
        z = y - w.derivative();
        ++i;
    }
    return out;
}

/// Canonical Sturm chain (p, p', -rem(...), ...) of the primitive part of p.
inline std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p) {
    if (p.is_zero()) throw validation_error("Sturm sequence of the zero polynomial");
    std::vector<RationalPolynomial> chain;
    chain.push_back(p.primitive());
    if (chain.back().degree() == 0) return chain;
    chain.push_back(chain[0].derivative());
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        RationalPolynomial r = chain[chain.size() - 2].divmod(chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

namespace detail {

inline int sturm_variations_at(const std::vector<RationalPolynomial>& chain, const Rational& x) {
    int variations = 0, prev = 0;
    for (const auto& q : chain) {
        const int s = sign(q(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

inline int sturm_variations_at_neg_infinity(const std::vector<RationalPolynomial>& chain) {
    int variations = 0, prev = 0;
    for (const auto& q : chain) {
        int s = sign(q.leading());
        if (q.degree() % 2 != 0) s = -s;
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

} // namespace detail

/// Upper bound B with all real roots of p inside (-B, B).
inline Rational cauchy_root_bound(const RationalPolynomial& p) {
    if (p.is_zero() || p.degree() == 0) return Rational(1);
    Rational m(0);
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, abs(p.coeff(i) / p.leading()));
    return m + 1;
}

/// Number of distinct real roots of p in the half-open interval [a, b).
inline long count_roots(const RationalPolynomial& p, const Rational& a, const Rational& b) {
    if (p.is_zero()) throw validation_error("root count of the zero polynomial");
    if (!(a < b)) throw validation_error("degenerate root-counting interval");
    RationalPolynomial q = squarefree_part(p);
    long extra = 0;
    if (q(a) == 0) {
        q = q.divmod(RationalPolynomial({-a, Rational(1)})).first;
        ++extra;
    }
    while (!q.is_zero() && q.degree() > 0 && q(b) == 0)
        q = q.divmod(RationalPolynomial({-b, Rational(1)})).first;
    if (q.degree() <= 0) return extra;
    const auto chain = sturm_sequence(q);
    return extra + detail::sturm_variations_at(chain, a) - detail::sturm_variations_at(chain, b);
}

/// Distinct real roots of p (with multiplicity m) that are < 0; used for the
/// eigenvalue counts of characteristic polynomials.
inline long count_negative_roots_with_multiplicity(const RationalPolynomial& p) {
    if (p.is_zero()) throw validation_error("root count of the zero polynomial");
    long total = 0;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        RationalPolynomial q = factor;
        if (q(Rational(0)) == 0) q = q.divmod(RationalPolynomial::x()).first;
        if (q.degree() <= 0) continue;
        const auto chain = sturm_sequence(q);
        const long n = detail::sturm_variations_at_neg_infinity(chain) -
                       detail::sturm_variations_at(chain, Rational(0));
        total += static_cast<long>(mult) * n;
    }
    return total;
}

/// Isolating interval for one real root. When `exact` is set the root is the
/// rational number `lo` itself (and hi == lo).
struct RootInterval {
    Rational lo;
    Rational hi;
    bool exact = false;
};

/// Bisects an isolating interval for the (unique) root of squarefree q until
/// its width is at most `width`.
inline void refine_root(const RationalPolynomial& q, RootInterval& iv, const Rational& width) {
    while (!iv.exact && iv.hi - iv.lo > width) {
        const Rational mid = (iv.lo + iv.hi) / 2;
        if (q(mid) == 0) {
            iv = {mid, mid, true};
            return;
        }
        if (count_roots(q, iv.lo, mid) == 1)
            iv.hi = mid;
        else
            iv.lo = mid;
    }
}

namespace detail {

inline void isolate_rec(const RationalPolynomial& q, const Rational& lo, const Rational& hi,
                        std::vector<RootInterval>& out) {
    const long n = count_roots(q, lo, hi);
    if (n == 0) return;
    if (n == 1) {
        if (q(lo) == 0) {
            out.push_back({lo, lo, true});
        } else {
            out.push_back({lo, hi, false});
        }
        return;
    }
    const Rational mid = (lo + hi) / 2;
    isolate_rec(q, lo, mid, out);
    isolate_rec(q, mid, hi, out);
}

/// Positive divisors of |n|; empty when n is zero or too large to enumerate.
inline std::vector<long long> divisors_capped(const Integer& n_in) {
    if (n_in == 0) return {};
    Integer n = n_in < 0 ? Integer(-n_in) : n_in;
    if (n > Integer(1000000000000LL)) return {};
    const long long v = static_cast<long long>(n);
    std::vector<long long> divs;
    for (long long d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            divs.push_back(d);
            if (d != v / d) divs.push_back(v / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace detail

/// All rational roots of p (best effort: coefficients beyond the divisor
/// enumeration cap make the list come back empty, which only means isolating
/// intervals are not collapsed to exact points).
inline std::vector<Rational> rational_roots(const RationalPolynomial& p) {
    if (p.is_zero() || p.degree() == 0) return {};
    RationalPolynomial q = squarefree_part(p).primitive();
    std::vector<Rational> roots;
    while (q.degree() > 0 && q.coeff(0) == 0) {
        q = q.divmod(RationalPolynomial::x()).first;
        if (roots.empty() || roots.back() != 0) roots.push_back(Rational(0));
    }
    if (q.degree() <= 0) return roots;
    const auto nums = detail::divisors_capped(numerator(q.coeff(0)));
    const auto dens = detail::divisors_capped(numerator(q.leading()));
    if (nums.empty() || dens.empty() || nums.size() * dens.size() > 20000) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    std::set<Rational> candidates;
    for (long long num : nums)
        for (long long den : dens) {
            candidates.insert(Rational(num, den));
            candidates.insert(Rational(-num, den));
        }
    for (const Rational& c : candidates)
        if (q(c) == 0) {
            roots.push_back(c);
            q = q.divmod(RationalPolynomial({-c, Rational(1)})).first;
        }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// Disjoint ordered isolating intervals for the distinct roots of p in
/// [a, b). Rational roots collapse to exact points.
inline std::vector<RootInterval> isolate_roots(const RationalPolynomial& p, const Rational& a,
                                               const Rational& b) {
    if (p.is_zero()) throw validation_error("cannot isolate roots of the zero polynomial");
    if (!(a < b)) throw validation_error("degenerate isolation interval");
    RationalPolynomial q = squarefree_part(p);
    if (q.degree() <= 0) return {};

    std::vector<RootInterval> out;
    const std::vector<Rational> exact = rational_roots(q);
    for (const Rational& r : exact) {
        q = q.divmod(RationalPolynomial({-r, Rational(1)})).first;
        if (a <= r && r < b) out.push_back({r, r, true});
    }
    if (q.degree() > 0) {
        std::vector<RootInterval> rest;
        detail::isolate_rec(q, a, b, rest);
        // Tighten and keep the intervals clear of the exact points so each
        // interval brackets exactly one root of the original polynomial.
        for (auto& iv : rest) {
            for (int step = 0; step < 4 && !iv.exact; ++step)
                refine_root(q, iv, (iv.hi - iv.lo) / 2);
            for (const Rational& r : exact)
                while (!iv.exact && iv.lo <= r && r <= iv.hi) refine_root(q, iv, (iv.hi - iv.lo) / 2);
        }
        out.insert(out.end(), rest.begin(), rest.end());
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) {
        return x.lo < y.lo;
    });
    return out;
}



} // namespace coverhom
