#pragma once

#include <utility>

#include "jetgerm/jet.hpp"
#include "jetgerm/mat2.hpp"

namespace jetgerm {

/// A jet of a biholomorphism germ of (C^2, 0): two component jets fixing the
/// origin whose linear part is invertible. Tangent-to-identity germs (linear
/// part = I) are the same type; is_tangent() tests for the subgroup, and the
/// operations that require it check at their boundary.
template <JetScalar S>
class Germ {
public:
    Germ(Jet2<S> f1, Jet2<S> f2) : f1_(std::move(f1)), f2_(std::move(f2)) {
        if (f1_.trunc() != f2_.trunc()) fail(errc::degree_mismatch, "component degrees differ");
        if (!ScalarOps<S>::is_zero(f1_.coeff(0, 0)) || !ScalarOps<S>::is_zero(f2_.coeff(0, 0)))
            fail(errc::nonvanishing_constant_term, "germ must fix the origin");
        if (ScalarOps<S>::is_zero(linear_part(*this).det()))
            fail(errc::singular, "linear part not invertible");
    }

    static Germ identity(int n) { return Germ(Jet2<S>::coord_x(n), Jet2<S>::coord_y(n)); }

    static Germ linear(int n, const Mat2<S>& m) {
        Jet2<S> f1(n), f2(n);
        f1.add_term(1, 0, m.a);
        f1.add_term(0, 1, m.b);
        f2.add_term(1, 0, m.c);
        f2.add_term(0, 1, m.d);
        return Germ(std::move(f1), std::move(f2));
    }

    const Jet2<S>& f1() const { return f1_; }
    const Jet2<S>& f2() const { return f2_; }
    int trunc() const { return f1_.trunc(); }
    int reliable() const { return std::min(f1_.reliable(), f2_.reliable()); }

    friend bool operator==(const Germ& a, const Germ& b) { return a.f1_ == b.f1_ && a.f2_ == b.f2_; }
    friend bool operator!=(const Germ& a, const Germ& b) { return !(a == b); }

private:
    Jet2<S> f1_, f2_;
};

template <JetScalar S>
Mat2<S> linear_part(const Germ<S>& f) {
    return {f.f1().coeff(1, 0), f.f1().coeff(0, 1), f.f2().coeff(1, 0), f.f2().coeff(0, 1)};
}

template <JetScalar S>
bool is_tangent(const Germ<S>& f) {
    return linear_part(f).is_identity();
}

/// (F o G)(z) = F(G(z)).
template <JetScalar S>
Germ<S> germ_compose(const Germ<S>& f, const Germ<S>& g) {
    if (f.trunc() != g.trunc()) fail(errc::degree_mismatch, "composition degrees differ");
    return Germ<S>(jet_compose(f.f1(), g.f1(), g.f2()), jet_compose(f.f2(), g.f1(), g.f2()));
}

/// Two-sided inverse modulo degree N. The linear part inverts exactly; each
/// higher homogeneous degree d of F o G - id is killed by the correction
/// -L^{-1} E_d, which cannot disturb degrees below d (strict triangularity).
template <JetScalar S>
Germ<S> germ_invert(const Germ<S>& f) {
    int n = f.trunc();
    Mat2<S> linv = mat_inverse(linear_part(f));
    Germ<S> g = Germ<S>::linear(n, linv);
    Germ<S> id = Germ<S>::identity(n);
    for (int d = 2; d <= n; ++d) {
        Germ<S> c = germ_compose(f, g);
        Jet2<S> e1 = homogeneous_part(jet_sub(c.f1(), id.f1()), d);
        Jet2<S> e2 = homogeneous_part(jet_sub(c.f2(), id.f2()), d);
        if (e1.is_zero() && e2.is_zero()) continue;
        Jet2<S> d1 = jet_neg(jet_add(jet_scale(e1, linv.a), jet_scale(e2, linv.b)));
        Jet2<S> d2 = jet_neg(jet_add(jet_scale(e1, linv.c), jet_scale(e2, linv.d)));
        g = Germ<S>(jet_add(g.f1(), d1), jet_add(g.f2(), d2));
    }
    return g;
}

/// The group commutator, with the word read left-to-right: F acts first,
/// i.e. z -> G^{-1}(F^{-1}(G(F(z)))). Its linear part is the matrix
/// commutator of the linear parts.
template <JetScalar S>
Germ<S> germ_commutator(const Germ<S>& f, const Germ<S>& g) {
    if (f.trunc() != g.trunc()) fail(errc::degree_mismatch, "commutator degrees differ");
    Germ<S> w = germ_compose(germ_invert(g), germ_invert(f));
    return germ_compose(germ_compose(w, g), f);
}

/// Order of F - id: the smallest total degree where a tangent-to-identity
/// germ differs from the identity; order_infinity when it is the identity
/// modulo degree N (truncation can never certify more).
template <JetScalar S>
int contact_order(const Germ<S>& f) {
    if (!is_tangent(f)) fail(errc::precondition_violated, "contact order needs a tangent-to-identity germ");
    Germ<S> id = Germ<S>::identity(f.trunc());
    int o1 = jet_order(jet_sub(f.f1(), id.f1()));
    int o2 = jet_order(jet_sub(f.f2(), id.f2()));
    return std::min(o1, o2);
}

} // namespace jetgerm
