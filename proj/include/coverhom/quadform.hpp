#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coverhom/cochain.hpp"
#include "coverhom/polynomial.hpp"
#include "coverhom/simplicial.hpp"

namespace coverhom {

/// Homogeneous quadratic form Q(x) = <Mx, x> given by its symmetric rational
/// matrix. A form on (k+1) variables is read as a form on the unit sphere
/// S^k.
class QuadraticForm {
public:
    explicit QuadraticForm(std::vector<std::vector<Rational>> m) : m_(std::move(m)) {
        if (m_.empty()) throw validation_error("empty quadratic form matrix");
        for (const auto& row : m_)
            if (row.size() != m_.size()) throw validation_error("quadratic form matrix must be square");
        for (std::size_t i = 0; i < m_.size(); ++i)
            for (std::size_t j = i + 1; j < m_.size(); ++j)
                if (m_[i][j] != m_[j][i])
                    throw validation_error("quadratic form matrix must be symmetric");
    }

    static QuadraticForm diagonal(const std::vector<Rational>& entries) {
        std::vector<std::vector<Rational>> m(entries.size(),
                                             std::vector<Rational>(entries.size(), Rational(0)));
        for (std::size_t i = 0; i < entries.size(); ++i) m[i][i] = entries[i];
        return QuadraticForm(std::move(m));
    }

    std::size_t size() const { return m_.size(); }
    int sphere_dim() const { return static_cast<int>(m_.size()) - 1; }
    const std::vector<std::vector<Rational>>& matrix() const { return m_; }

    Rational operator()(const std::vector<Rational>& x) const {
        if (x.size() != m_.size()) throw validation_error("evaluation point has wrong dimension");
        Rational v(0);
        for (std::size_t i = 0; i < m_.size(); ++i)
            for (std::size_t j = 0; j < m_.size(); ++j) v += m_[i][j] * x[i] * x[j];
        return v;
    }

    QuadraticForm negated() const {
        auto m = m_;
        for (auto& row : m)
            for (auto& v : row) v = -v;
        return QuadraticForm(std::move(m));
    }

private:
    std::vector<std::vector<Rational>> m_;
};

struct Signature {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
};

/// Exact signature by symmetric (congruence) elimination: diagonal pivots
/// contribute their sign, a zero diagonal with a nonzero off-diagonal entry
/// contributes a hyperbolic (+1, -1) pair.
inline Signature signature_by_congruence(const QuadraticForm& q) {
    std::vector<std::vector<Rational>> m = q.matrix();
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < m.size(); ++i) active.push_back(i);
    Signature sig;

    while (!active.empty()) {
        std::size_t pivot = active.size();
        for (std::size_t a = 0; a < active.size(); ++a)
            if (m[active[a]][active[a]] != 0) {
                pivot = a;
                break;
            }
        if (pivot < active.size()) {
            const std::size_t i = active[pivot];
            const Rational d = m[i][i];
            (d > 0 ? sig.positive : sig.negative) += 1;
            active.erase(active.begin() + static_cast<long>(pivot));
            for (std::size_t a : active)
                for (std::size_t b : active) m[a][b] -= m[a][i] * m[i][b] / d;
            continue;
        }
        // No nonzero diagonal entry; look for an off-diagonal one.
        std::size_t oi = active.size(), oj = active.size();
        for (std::size_t a = 0; a < active.size() && oi == active.size(); ++a)
            for (std::size_t b = a + 1; b < active.size(); ++b)
                if (m[active[a]][active[b]] != 0) {
                    oi = a;
                    oj = b;
                    break;
                }
        if (oi == active.size()) {
            sig.zero += active.size();
            break;
        }
        const std::size_t i = active[oi], j = active[oj];
        const Rational c = m[i][j];
        sig.positive += 1;
        sig.negative += 1;
        active.erase(active.begin() + static_cast<long>(oj));
        active.erase(active.begin() + static_cast<long>(oi));
        // Schur complement of the 2x2 block [[0, c], [c, 0]].
        for (std::size_t a : active)
            for (std::size_t b : active)
                m[a][b] -= (m[a][i] * m[j][b] + m[a][j] * m[i][b]) / c;
    }
    return sig;
}

/// Number of negative eigenvalues.
inline std::size_t index(const QuadraticForm& q) { return signature_by_congruence(q).negative; }

namespace detail {

/// Faddeev-LeVerrier characteristic polynomial det(lambda I - M); works over
/// any commutative Q-algebra scalar with +, * and rational scaling.
template <typename T>
std::vector<T> characteristic_coefficients(const std::vector<std::vector<T>>& m, const T& zero,
                                           const T& one) {
    const std::size_t n = m.size();
    std::vector<T> coeff(n + 1, zero);
    coeff[n] = one;
    std::vector<std::vector<T>> work(n, std::vector<T>(n, zero)); // M_k
    std::vector<std::vector<T>> prev = m;
    auto trace = [&](const std::vector<std::vector<T>>& a) {
        T t = zero;
        for (std::size_t i = 0; i < n; ++i) t = t + a[i][i];
        return t;
    };
    T c = Rational(-1) * trace(prev);
    coeff[n - 1] = c;
    for (std::size_t k = 2; k <= n; ++k) {
        // work = M * (prev + c I)
        std::vector<std::vector<T>> shifted = prev;
        for (std::size_t i = 0; i < n; ++i) shifted[i][i] = shifted[i][i] + c;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                T acc = zero;
                for (std::size_t l = 0; l < n; ++l) acc = acc + m[i][l] * shifted[l][j];
                work[i][j] = acc;
            }
        c = (Rational(-1) / Rational(static_cast<long>(k))) * trace(work);
        coeff[n - k] = c;
        prev = work;
    }
    return coeff;
}

} // namespace detail

/// det(lambda I - M) as a polynomial in lambda.
inline RationalPolynomial characteristic_polynomial(const QuadraticForm& q) {
    auto coeff = detail::characteristic_coefficients<Rational>(q.matrix(), Rational(0), Rational(1));
    return RationalPolynomial(std::move(coeff));
}

/// Independent route to the index: multiplicity-aware Sturm count of the
/// negative roots of the characteristic polynomial.
inline std::size_t index_by_sturm(const QuadraticForm& q) {
    return static_cast<std::size_t>(
        count_negative_roots_with_multiplicity(characteristic_polynomial(q)));
}

/// Homotopy dimension of {Q >= 0} on the sphere S^k: the set is homotopy
/// equivalent to S^{k - index(Q)}, and empty when the form is negative
/// definite.
inline std::optional<int> homotopy_sphere_dim(const QuadraticForm& q) {
    const std::size_t idx = index(q);
    if (idx == q.size()) return std::nullopt;
    return q.sphere_dim() - static_cast<int>(idx);
}

/// Parameter point on the arc [0, 1]: either an exact rational or an
/// algebraic number bracketed by an isolating interval.
struct ParamPoint {
    bool exact = true;
    Rational value;   // meaningful when exact
    Rational lo, hi;  // bracketing interval (lo == hi == value when exact)

    static ParamPoint rational(const Rational& v) { return {true, v, v, v}; }
    static ParamPoint algebraic(const Rational& lo, const Rational& hi) {
        return {false, lo, lo, hi};
    }
};

/// Maximal parameter interval on which the index of the pencil is constant.
struct OmegaStratum {
    ParamPoint left;
    ParamPoint right;
    bool left_closed = true;
    bool right_closed = true;
    std::size_t index = 0;

    bool is_point() const {
        return left_closed && right_closed && left.exact && right.exact && left.value == right.value;
    }

    /// Borel-Moore Euler characteristic by interval type: point and closed
    /// interval 1, open interval -1, half-open 0.
    long long borel_moore_euler() const {
        if (is_point()) return 1;
        if (left_closed && right_closed) return 1;
        if (!left_closed && !right_closed) return -1;
        return 0;
    }
};

struct OmegaStratification {
    int form_count = 0;
    std::vector<OmegaStratum> strata;
};

namespace detail {

// Sign of c at the unique root of the squarefree polynomial g inside the
// isolating interval; refines the interval as needed.
inline int sign_at_root(const RationalPolynomial& c, const RationalPolynomial& g, RootInterval iv) {
    if (c.is_zero()) return 0;
    if (iv.exact) return sign(c(iv.lo));
    const RationalPolynomial d = gcd(c, g);
    if (d.degree() > 0 && count_roots(d, iv.lo, iv.hi) >= 1) return 0;
    while (count_roots(c, iv.lo, iv.hi) > 0) {
        const Rational mid = (iv.lo + iv.hi) / 2;
        if (g(mid) == 0) return sign(c(mid));
        if (count_roots(g, iv.lo, mid) == 1)
            iv.hi = mid;
        else
            iv.lo = mid;
    }
    return sign(c(iv.lo));
}

// Index of the pencil at an algebraic parameter: Descartes count of the
// negative eigenvalues from the signs of the characteristic coefficients
// (exact because all eigenvalues are real).
inline std::size_t pencil_index_at_root(const std::vector<RationalPolynomial>& coeff,
                                        const RationalPolynomial& g, const RootInterval& iv) {
    int variations = 0, prev = 0;
    for (std::size_t j = 0; j < coeff.size(); ++j) {
        int s = sign_at_root(coeff[j], g, iv);
        if (j % 2 == 1) s = -s;
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return static_cast<std::size_t>(variations);
}

inline QuadraticForm pencil_at(const QuadraticForm& q1, const QuadraticForm& q2, const Rational& t) {
    std::vector<std::vector<Rational>> m(q1.size(), std::vector<Rational>(q1.size()));
    for (std::size_t i = 0; i < q1.size(); ++i)
        for (std::size_t j = 0; j < q1.size(); ++j)
            m[i][j] = -(Rational(1) - t) * q1.matrix()[i][j] - t * q2.matrix()[i][j];
    return QuadraticForm(std::move(m));
}

} // namespace detail

/// Exact stratification of the arc of nonpositive combinations of the input
/// forms by the index of the combined form. The arc is parametrized by
/// omega(t) = (-(1-t), -t) for two forms (scaling invariance of the index
/// makes the unnormalized segment equivalent to the unit arc) and collapses
/// to the single point omega = -1 for one form.
inline OmegaStratification omega_stratify(const std::vector<QuadraticForm>& forms) {
    if (forms.empty() || forms.size() > 2)
        throw unsupported_error("exact stratification supports one or two forms");
    for (const auto& f : forms)
        if (f.size() != forms[0].size())
            throw validation_error("forms must have matching dimension");

    OmegaStratification out;
    out.form_count = static_cast<int>(forms.size());
    if (forms.size() == 1) {
        OmegaStratum s;
        s.left = s.right = ParamPoint::rational(0);
        s.index = index(forms[0].negated());
        out.strata.push_back(s);
        return out;
    }

    const QuadraticForm& q1 = forms[0];
    const QuadraticForm& q2 = forms[1];
    const std::size_t n = q1.size();

    // Pencil M(t) = -(1-t) M1 - t M2 with polynomial entries.
    std::vector<std::vector<RationalPolynomial>> pencil(n, std::vector<RationalPolynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            pencil[i][j] = RationalPolynomial(
                {-q1.matrix()[i][j], q1.matrix()[i][j] - q2.matrix()[i][j]});
    const auto coeff = detail::characteristic_coefficients<RationalPolynomial>(
        pencil, RationalPolynomial{}, RationalPolynomial::constant(1));

    // Index changes can only happen where an additional eigenvalue vanishes,
    // i.e. at roots of the lowest characteristic coefficient that is not
    // identically zero.
    std::size_t m0 = 0;
    while (m0 < coeff.size() && coeff[m0].is_zero()) ++m0;

    struct Node {
        ParamPoint point;
        std::size_t index;
    };
    std::vector<RootInterval> boundary;
    RationalPolynomial g;
    if (m0 + 1 < coeff.size()) { // nonconstant pencil spectrum possible
        g = squarefree_part(coeff[m0]);
        if (g.degree() > 0) {
            boundary = isolate_roots(g, Rational(0), Rational(1));
            if (g(Rational(1)) == 0) boundary.push_back({Rational(1), Rational(1), true});
        }
    }

    // Keep the isolating intervals inside the open arc and disjoint from
    // their neighbours so the midpoints of the gaps are valid sample
    // parameters.
    for (auto& iv : boundary) {
        while (!iv.exact && !(iv.lo > 0 && iv.hi < 1))
            refine_root(g, iv, (iv.hi - iv.lo) / 2);
    }
    auto point_hi = [](const RootInterval& iv) { return iv.exact ? iv.lo : iv.hi; };
    auto point_lo = [](const RootInterval& iv) { return iv.lo; };
    for (std::size_t i = 0; i + 1 < boundary.size(); ++i) {
        while (!(point_hi(boundary[i]) < point_lo(boundary[i + 1]))) {
            if (!boundary[i].exact)
                refine_root(g, boundary[i], (boundary[i].hi - boundary[i].lo) / 2);
            if (!boundary[i + 1].exact)
                refine_root(g, boundary[i + 1], (boundary[i + 1].hi - boundary[i + 1].lo) / 2);
        }
    }

    // Evaluation nodes: 0, the boundary roots, 1.
    std::vector<Node> nodes;
    auto index_at_rational = [&](const Rational& t) {
        return index(detail::pencil_at(q1, q2, t));
    };
    auto push_node = [&](const ParamPoint& p, std::size_t idx) { nodes.push_back({p, idx}); };

    push_node(ParamPoint::rational(0), index_at_rational(0));
    for (const auto& iv : boundary) {
        if (iv.exact && (iv.lo == 0 || iv.lo == 1)) continue; // endpoints already nodes
        if (iv.exact)
            push_node(ParamPoint::rational(iv.lo), index_at_rational(iv.lo));
        else
            push_node(ParamPoint::algebraic(iv.lo, iv.hi), detail::pencil_index_at_root(coeff, g, iv));
    }
    push_node(ParamPoint::rational(1), index_at_rational(1));

    // Positions: nodes interleaved with the open segments between them.
    struct Position {
        bool is_node;
        std::size_t node; // for nodes
        std::size_t index;
    };
    std::vector<Position> positions;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        positions.push_back({true, i, nodes[i].index});
        if (i + 1 < nodes.size()) {
            const Rational left_hi = nodes[i].point.exact ? nodes[i].point.value : nodes[i].point.hi;
            const Rational right_lo =
                nodes[i + 1].point.exact ? nodes[i + 1].point.value : nodes[i + 1].point.lo;
            const Rational sample = (left_hi + right_lo) / 2;
            positions.push_back({false, i, index_at_rational(sample)});
        }
    }

    // Merge equal-index runs into strata.
    std::size_t i = 0;
    while (i < positions.size()) {
        std::size_t j = i;
        while (j + 1 < positions.size() && positions[j + 1].index == positions[i].index) ++j;
        OmegaStratum s;
        s.index = positions[i].index;
        if (positions[i].is_node) {
            s.left = nodes[positions[i].node].point;
            s.left_closed = true;
        } else {
            s.left = nodes[positions[i].node].point;
            s.left_closed = false;
        }
        if (positions[j].is_node) {
            s.right = nodes[positions[j].node].point;
            s.right_closed = true;
        } else {
            s.right = nodes[positions[j].node + 1].point;
            s.right_closed = false;
        }
        out.strata.push_back(s);
        i = j + 1;
    }
    return out;
}

/// Euler characteristic of T = union of {Q_i <= 0} on S^k, via the exact arc
/// stratification: chi(T) = sum over strata of chi^BM(stratum) *
/// (1 + (-1)^(k - index)).
inline long long euler_char_union(const std::vector<QuadraticForm>& forms) {
    if (forms.empty()) throw validation_error("at least one form required");
    const int k = forms[0].sphere_dim();
    const OmegaStratification strat = omega_stratify(forms);
    long long chi = 0;
    for (const auto& s : strat.strata) {
        const long long factor =
            1 + (((k - static_cast<long long>(s.index)) % 2 + 2) % 2 == 0 ? 1 : -1);
        chi += s.borel_moore_euler() * factor;
    }
    return chi;
}

/// Euler characteristic of S = intersection of {Q_i <= 0} on S^k by
/// inclusion-exclusion over euler_char_union calls.
inline long long euler_char_intersection(const std::vector<QuadraticForm>& forms) {
    if (forms.empty()) throw validation_error("at least one form required");
    if (forms.size() > 2) throw unsupported_error("intersection supports at most two forms");
    if (forms.size() == 1) return euler_char_union(forms);
    const long long chi1 = euler_char_union({forms[0]});
    const long long chi2 = euler_char_union({forms[1]});
    const long long chi12 = euler_char_union(forms);
    return chi1 + chi2 - chi12;
}

/// A sign constraint on a homogeneous form, {Q <= 0} or {Q >= 0}.
struct SignCondition {
    QuadraticForm form;
    bool nonpositive = true;

    bool satisfied(const std::vector<Rational>& x) const {
        const Rational v = form(x);
        return nonpositive ? v <= 0 : v >= 0;
    }
};

namespace detail {

/// Icosahedron mesh with rational vertices (golden ratio replaced by a close
/// rational), midpoint-subdivided `depth` times. Homogeneous sign tests do
/// not need vertices on the unit sphere, only on rays through it.
inline void icosphere_mesh(int depth, std::vector<std::vector<Rational>>& vertices,
                           std::vector<std::array<int, 3>>& triangles) {
    const Rational phi(987, 610);
    const Rational one(1);
    vertices = {
        {-one, phi, 0},  {one, phi, 0},  {-one, -phi, 0}, {one, -phi, 0},
        {0, -one, phi},  {0, one, phi},  {0, -one, -phi}, {0, one, -phi},
        {phi, 0, -one},  {phi, 0, one},  {-phi, 0, -one}, {-phi, 0, one},
    };
    triangles = {
        {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
        {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
        {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
        {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1},
    };
    for (int round = 0; round < depth; ++round) {
        std::map<std::pair<int, int>, int> midpoint;
        auto mid = [&](int a, int b) {
            const auto key = std::minmax(a, b);
            auto it = midpoint.find(key);
            if (it != midpoint.end()) return it->second;
            std::vector<Rational> m(3);
            for (int i = 0; i < 3; ++i)
                m[static_cast<std::size_t>(i)] =
                    (vertices[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] +
                     vertices[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)]) /
                    2;
            vertices.push_back(std::move(m));
            const int id = static_cast<int>(vertices.size()) - 1;
            midpoint.emplace(key, id);
            return id;
        };
        std::vector<std::array<int, 3>> next;
        next.reserve(triangles.size() * 4);
        for (const auto& t : triangles) {
            const int ab = mid(t[0], t[1]), bc = mid(t[1], t[2]), ca = mid(t[2], t[0]);
            next.push_back({t[0], ab, ca});
            next.push_back({t[1], bc, ab});
            next.push_back({t[2], ca, bc});
            next.push_back({ab, bc, ca});
        }
        triangles = std::move(next);
    }
}

} // namespace detail

/// Betti numbers of the subset of S^2 cut out by the sign conditions,
/// approximated on a subdivided icosahedron: a simplex is kept when all of
/// its vertices satisfy every condition. A refinement heuristic, not an
/// exact computation; results should be checked for stabilization across
/// depths.
inline std::vector<long long> mesh_betti_on_sphere(const std::vector<SignCondition>& conditions,
                                                   int depth) {
    if (depth < 0) throw validation_error("subdivision depth must be >= 0");
    for (const auto& c : conditions)
        if (c.form.size() != 3)
            throw unsupported_error("mesh verification is implemented for S^2 (3x3 forms) only");

    std::vector<std::vector<Rational>> vertices;
    std::vector<std::array<int, 3>> triangles;
    detail::icosphere_mesh(depth, vertices, triangles);

    std::vector<char> inside(vertices.size(), 1);
    parallel_for(vertices.size(), [&](std::size_t v) {
        for (const auto& c : conditions)
            if (!c.satisfied(vertices[v])) {
                inside[v] = 0;
                break;
            }
    });

    std::vector<Simplex> maximal;
    for (const auto& t : triangles) {
        Simplex s = {t[0], t[1], t[2]};
        std::sort(s.begin(), s.end());
        maximal.push_back(std::move(s));
    }
    const SimplicialComplex sphere =
        SimplicialComplex::from_maximal(static_cast<int>(vertices.size()), maximal);

    std::vector<Simplex> kept;
    for (int p = 0; p <= sphere.dim(); ++p)
        for (const auto& s : sphere.simplices(p)) {
            bool all = true;
            for (int v : s)
                if (!inside[static_cast<std::size_t>(v)]) {
                    all = false;
                    break;
                }
            if (all) kept.push_back(s);
        }
    const SimplicialComplex sub = SimplicialComplex::from_simplices(sphere.vertex_count(), kept);
    std::vector<long long> b = betti(sub);
    b.resize(3, 0);
    return b;
}

} // namespace coverhom
