#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <vector>

#include "jetgerm/scalar.hpp"

namespace jetgerm {

/// Order of the zero jet: "zero modulo the truncation degree".
inline constexpr int order_infinity = std::numeric_limits<int>::max();

/// Monomial x^i y^j, ordered by total degree then x-exponent.
struct Mon2 {
    int i = 0;
    int j = 0;
    int deg() const { return i + j; }
    friend bool operator==(const Mon2& a, const Mon2& b) { return a.i == b.i && a.j == b.j; }
    friend bool operator<(const Mon2& a, const Mon2& b) {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        return a.i < b.i;
    }
};

/// Bivariate power series truncated at total degree n (inclusive), sparse
/// canonical form: no zero coefficients stored, no term of degree > n.
///
/// Alongside the ring truncation n, each jet tracks reliable(): the degree
/// through which its coefficients are trustworthy. Fresh jets have
/// reliable == n; derivatives drop it by one; products and quotients
/// propagate it (order-2 factors win the loss back, which is what makes the
/// exp/log layer exact at full degree). Terms beyond reliable() are never
/// stored. Equality compares truncation degree and coefficients only.
template <JetScalar S>
class Jet2 {
public:
    using Ops = ScalarOps<S>;
    using Map = std::map<Mon2, S>;

    Jet2() : n_(0), reliable_(0) {}
    explicit Jet2(int n) : n_(n), reliable_(n) { check_degree(n); }

    static Jet2 constant(int n, S c) {
        Jet2 f(n);
        f.add_term(0, 0, std::move(c));
        return f;
    }
    static Jet2 monomial(int n, int i, int j, S c) {
        Jet2 f(n);
        f.add_term(i, j, std::move(c));
        return f;
    }
    static Jet2 coord_x(int n) { return monomial(n, 1, 0, Ops::one()); }
    static Jet2 coord_y(int n) { return monomial(n, 0, 1, Ops::one()); }

    int trunc() const { return n_; }
    int reliable() const { return reliable_; }
    const Map& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    S coeff(int i, int j) const {
        auto it = c_.find(Mon2{i, j});
        return it == c_.end() ? Ops::zero() : it->second;
    }

    /// Adds c to the (i,j) coefficient, keeping canonical form. Terms beyond
    /// the reliable degree are discarded.
    Jet2& add_term(int i, int j, const S& c) {
        if (i < 0 || j < 0) fail(errc::malformed_input, "negative exponent");
        if (i + j > reliable_ || Ops::is_zero(c)) return *this;
        Mon2 m{i, j};
        auto it = c_.find(m);
        if (it == c_.end()) {
            c_.emplace(m, c);
        } else {
            it->second += c;
            if (Ops::is_zero(it->second)) c_.erase(it);
        }
        return *this;
    }

    /// Clamps the reliable degree down to r, dropping terms above it.
    Jet2& restrict_reliable(int r) {
        if (r < reliable_) {
            reliable_ = r;
            drop_above(r);
        }
        return *this;
    }

    /// Re-truncates to a smaller ring degree n2 <= n.
    Jet2 retrunc(int n2) const {
        if (n2 > n_) fail(errc::degree_mismatch, "retrunc to larger degree");
        Jet2 g(n2);
        g.reliable_ = std::min(reliable_, n2);
        for (const auto& [m, c] : c_)
            if (m.deg() <= g.reliable_) g.c_.emplace(m, c);
        return g;
    }

    friend bool operator==(const Jet2& a, const Jet2& b) { return a.n_ == b.n_ && a.c_ == b.c_; }
    friend bool operator!=(const Jet2& a, const Jet2& b) { return !(a == b); }

private:
    static void check_degree(int n) {
        if (n < 0) fail(errc::malformed_input, "negative truncation degree");
    }
    void drop_above(int d) {
        for (auto it = c_.begin(); it != c_.end();) {
            if (it->first.deg() > d)
                it = c_.erase(it);
            else
                ++it;
        }
    }

    int n_;
    int reliable_;
    Map c_;

    template <JetScalar T>
    friend Jet2<T> jet_add(const Jet2<T>&, const Jet2<T>&);
    template <JetScalar T>
    friend Jet2<T> jet_sub(const Jet2<T>&, const Jet2<T>&);
    template <JetScalar T>
    friend Jet2<T> jet_neg(const Jet2<T>&);
    template <JetScalar T>
    friend Jet2<T> jet_scale(const Jet2<T>&, const T&);
    template <JetScalar T>
    friend Jet2<T> jet_mul(const Jet2<T>&, const Jet2<T>&);
    template <JetScalar T>
    friend Jet2<T> jet_derive(const Jet2<T>&, char);
};

namespace detail {
inline void require_same_trunc(int na, int nb) {
    if (na != nb) fail(errc::degree_mismatch, "truncation degrees differ");
}
} // namespace detail

/// Minimal total degree with a nonzero coefficient; order_infinity for the
/// zero jet (zero modulo the truncation degree).
template <JetScalar S>
int jet_order(const Jet2<S>& f) {
    if (f.is_zero()) return order_infinity;
    return f.terms().begin()->first.deg();
}

/// Lower bound for the true order, usable when the stored jet is zero but
/// only reliable through reliable(): anything below that degree is truly 0.
template <JetScalar S>
int jet_order_floor(const Jet2<S>& f) {
    int o = jet_order(f);
    return o == order_infinity ? f.reliable() + 1 : o;
}

template <JetScalar S>
Jet2<S> jet_add(const Jet2<S>& f, const Jet2<S>& g) {
    detail::require_same_trunc(f.trunc(), g.trunc());
    Jet2<S> r = f;
    r.restrict_reliable(std::min(f.reliable(), g.reliable()));
    for (const auto& [m, c] : g.terms()) r.add_term(m.i, m.j, c);
    return r;
}

template <JetScalar S>
Jet2<S> jet_sub(const Jet2<S>& f, const Jet2<S>& g) {
    detail::require_same_trunc(f.trunc(), g.trunc());
    Jet2<S> r = f;
    r.restrict_reliable(std::min(f.reliable(), g.reliable()));
    for (const auto& [m, c] : g.terms()) r.add_term(m.i, m.j, -c);
    return r;
}

template <JetScalar S>
Jet2<S> jet_neg(const Jet2<S>& f) {
    Jet2<S> r = f;
    for (auto& [m, c] : r.c_) c = -c;
    return r;
}

template <JetScalar S>
Jet2<S> jet_scale(const Jet2<S>& f, const S& s) {
    Jet2<S> r(f.trunc());
    r.reliable_ = f.reliable();
    if (ScalarOps<S>::is_zero(s)) return r;
    for (const auto& [m, c] : f.terms()) {
        S v = c * s;
        if (!ScalarOps<S>::is_zero(v)) r.c_.emplace(m, std::move(v));
    }
    return r;
}

/// Cauchy product, truncated. The reliable degree is
/// min(n, ra + ord(g), rb + ord(f)): a coefficient of degree m needs factors
/// only up to m - ord(other side), so low-order factors do not consume the
/// partner's top degrees.
template <JetScalar S>
Jet2<S> jet_mul(const Jet2<S>& f, const Jet2<S>& g) {
    detail::require_same_trunc(f.trunc(), g.trunc());
    int rel = std::min({f.trunc(), f.reliable() + jet_order_floor(g), g.reliable() + jet_order_floor(f)});
    Jet2<S> r(f.trunc());
    r.reliable_ = std::max(rel, -1);
    if (r.reliable_ < 0) {
        r.reliable_ = -1;
        return r;
    }
    for (const auto& [ma, ca] : f.terms()) {
        if (ma.deg() > r.reliable_) break;
        for (const auto& [mb, cb] : g.terms()) {
            int d = ma.deg() + mb.deg();
            if (d > r.reliable_) break;
            r.add_term(ma.i + mb.i, ma.j + mb.j, ca * cb);
        }
    }
    return r;
}

/// Substitution f(g1, g2) for g's with zero constant term, grouped per
/// x-power (Horner over the truncated ring would gain little at these sizes;
/// the power tables keep it at O(n) jet products).
template <JetScalar S>
Jet2<S> jet_compose(const Jet2<S>& f, const Jet2<S>& g1, const Jet2<S>& g2) {
    detail::require_same_trunc(f.trunc(), g1.trunc());
    detail::require_same_trunc(f.trunc(), g2.trunc());
    if (!ScalarOps<S>::is_zero(g1.coeff(0, 0)) || !ScalarOps<S>::is_zero(g2.coeff(0, 0)))
        fail(errc::nonvanishing_constant_term, "substitution needs zero constant terms");
    int n = f.trunc();
    int rel = std::min({f.reliable(), g1.reliable(), g2.reliable()});
    Jet2<S> acc(n);
    acc.restrict_reliable(rel);
    if (rel < 0) return acc;

    // Highest powers that can contribute below the truncation degree.
    int max_i = 0, max_j = 0;
    for (const auto& [m, c] : f.terms()) {
        max_i = std::max(max_i, m.i);
        max_j = std::max(max_j, m.j);
    }
    std::vector<Jet2<S>> pow1, pow2;
    pow1.reserve(max_i + 1);
    pow2.reserve(max_j + 1);
    pow1.push_back(Jet2<S>::constant(n, ScalarOps<S>::one()));
    for (int i = 1; i <= max_i; ++i) pow1.push_back(jet_mul(pow1.back(), g1));
    pow2.push_back(Jet2<S>::constant(n, ScalarOps<S>::one()));
    for (int j = 1; j <= max_j; ++j) pow2.push_back(jet_mul(pow2.back(), g2));

    // Group terms of f by x-exponent: sum_i g1^i * (sum_j c_ij g2^j).
    std::map<int, Jet2<S>> by_i;
    for (const auto& [m, c] : f.terms()) {
        auto it = by_i.find(m.i);
        if (it == by_i.end()) it = by_i.emplace(m.i, Jet2<S>(n)).first;
        it->second = jet_add(it->second, jet_scale(pow2[m.j], c));
    }
    for (const auto& [i, inner] : by_i) acc = jet_add(acc, jet_mul(pow1[i], inner));
    acc.restrict_reliable(rel);
    return acc;
}

/// Formal partial derivative. The ring degree stays n; the top degree of the
/// derivative is unknowable from a degree-n jet, so reliable drops by one.
template <JetScalar S>
Jet2<S> jet_derive(const Jet2<S>& f, char var) {
    if (var != 'x' && var != 'y') fail(errc::malformed_input, "derivative variable must be x or y");
    Jet2<S> r(f.trunc());
    r.reliable_ = std::max(f.reliable() - 1, -1);
    for (const auto& [m, c] : f.terms()) {
        if (var == 'x') {
            if (m.i > 0) r.add_term(m.i - 1, m.j, c * ScalarOps<S>::from_int(m.i));
        } else {
            if (m.j > 0) r.add_term(m.i, m.j - 1, c * ScalarOps<S>::from_int(m.j));
        }
    }
    return r;
}

/// Degree-d homogeneous part, as a jet with the same truncation metadata.
template <JetScalar S>
Jet2<S> homogeneous_part(const Jet2<S>& f, int d) {
    Jet2<S> r(f.trunc());
    r.restrict_reliable(f.reliable());
    for (const auto& [m, c] : f.terms())
        if (m.deg() == d) r.add_term(m.i, m.j, c);
    return r;
}

namespace detail {

/// Exact division of homogeneous bivariate polynomials, viewed as univariate
/// coefficient vectors in the x-exponent. h has degree D, g degree d; returns
/// q of degree D-d with q*g == h, or failure if the remainder is nonzero.
template <JetScalar S>
bool homog_divide(const std::vector<S>& h, const std::vector<S>& g, std::vector<S>& q) {
    using Ops = ScalarOps<S>;
    int D = static_cast<int>(h.size()) - 1;
    int d = static_cast<int>(g.size()) - 1;
    int top = -1;
    for (int k = d; k >= 0; --k)
        if (!Ops::is_zero(g[k])) {
            top = k;
            break;
        }
    if (top < 0) return false;
    std::vector<S> rem = h;
    q.assign(D - d + 1, Ops::zero());
    for (int k = D - top; k >= 0; --k) {
        // Peel the x^(k+top) coefficient of the remainder.
        S c = rem[k + top];
        if (Ops::is_zero(c)) continue;
        if (k > D - d) return false; // would need a q-term beyond degree D-d
        S qc = c / g[top];
        q[k] = qc;
        for (int t = 0; t <= d; ++t) {
            if (Ops::is_zero(g[t])) continue;
            rem[k + t] = rem[k + t] - qc * g[t];
        }
    }
    for (const S& c : rem)
        if (!Ops::is_zero(c)) return false;
    return true;
}

template <JetScalar S>
std::vector<S> homog_coeffs(const Jet2<S>& f, int d) {
    std::vector<S> v(d + 1, ScalarOps<S>::zero());
    for (const auto& [m, c] : f.terms())
        if (m.deg() == d) v[m.i] = c;
    return v;
}

} // namespace detail

/// Exact quotient q with q*g == f through degree min(rf, rg) - ord(g),
/// solved one homogeneous degree at a time against the leading form of g.
/// The result records the reduced reliable degree.
template <JetScalar S>
Jet2<S> jet_divide_exact(const Jet2<S>& f, const Jet2<S>& g) {
    detail::require_same_trunc(f.trunc(), g.trunc());
    if (g.is_zero()) fail(errc::divide_by_zero, "division by the zero jet");
    int d = jet_order(g);
    int of = jet_order(f);
    if (of != order_infinity && of < d)
        fail(errc::not_divisible_at_truncation, "dividend order below divisor order");
    int R = std::min(f.reliable(), g.reliable()) - d;
    Jet2<S> q(f.trunc());
    q.restrict_reliable(R);
    if (R < 0) return q;

    std::vector<S> gd = detail::homog_coeffs(g, d);
    Jet2<S> rem = f;
    rem.restrict_reliable(std::min(f.reliable(), g.reliable()));
    for (int m = 0; m <= R; ++m) {
        std::vector<S> hm = detail::homog_coeffs(rem, m + d);
        bool all_zero = true;
        for (const S& c : hm)
            if (!ScalarOps<S>::is_zero(c)) {
                all_zero = false;
                break;
            }
        if (all_zero) continue;
        std::vector<S> qm;
        if (!detail::homog_divide(hm, gd, qm))
            fail(errc::not_divisible_at_truncation, "no power-series quotient at this truncation");
        Jet2<S> qpart(f.trunc());
        for (int k = 0; k < static_cast<int>(qm.size()); ++k) qpart.add_term(k, m - k, qm[k]);
        q = jet_add(q, qpart);
        rem = jet_sub(rem, jet_mul(qpart, g));
    }
    q.restrict_reliable(R);
    return q;
}

/// Coefficientwise agreement through degree d (inclusive). The jets may have
/// different truncation degrees as long as both are defined through d.
template <JetScalar S>
bool equal_mod(const Jet2<S>& f, const Jet2<S>& g, int d) {
    int n = std::min(f.trunc(), g.trunc());
    if (d > n) fail(errc::degree_mismatch, "comparison degree exceeds a truncation degree");
    Jet2<S> diff = jet_sub(f.retrunc(n), g.retrunc(n));
    return jet_order(diff) > d;
}

/// Float-mode comparison: max coefficient deviation through degree d.
inline double max_coeff_distance(const Jet2<std::complex<double>>& f, const Jet2<std::complex<double>>& g,
                                 int d) {
    double worst = 0.0;
    auto scan = [&](const Jet2<std::complex<double>>& a, const Jet2<std::complex<double>>& b) {
        for (const auto& [m, c] : a.terms()) {
            if (m.deg() > d) continue;
            worst = std::max(worst, std::abs(c - b.coeff(m.i, m.j)));
        }
    };
    scan(f, g);
    scan(g, f);
    return worst;
}

} // namespace jetgerm
