#pragma once

#include <utility>

#include "jetgerm/jet.hpp"

namespace jetgerm {

/// Formal vector field a(x,y) d/dx + b(x,y) d/dy with jet coefficients.
/// Fields of order >= 2 (both components) form the Lie algebra the exp/log
/// layer works over; is_order_two_plus tests membership.
template <JetScalar S>
class VectorField {
public:
    VectorField(Jet2<S> a, Jet2<S> b) : a_(std::move(a)), b_(std::move(b)) {
        if (a_.trunc() != b_.trunc()) fail(errc::degree_mismatch, "component degrees differ");
    }
    explicit VectorField(int n) : a_(n), b_(n) {}

    static VectorField zero(int n) { return VectorField(n); }

    const Jet2<S>& a() const { return a_; }
    const Jet2<S>& b() const { return b_; }
    int trunc() const { return a_.trunc(); }
    int reliable() const { return std::min(a_.reliable(), b_.reliable()); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    friend bool operator==(const VectorField& x, const VectorField& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const VectorField& x, const VectorField& y) { return !(x == y); }

private:
    Jet2<S> a_, b_;
};

template <JetScalar S>
VectorField<S> vf_add(const VectorField<S>& x, const VectorField<S>& y) {
    return VectorField<S>(jet_add(x.a(), y.a()), jet_add(x.b(), y.b()));
}

template <JetScalar S>
VectorField<S> vf_sub(const VectorField<S>& x, const VectorField<S>& y) {
    return VectorField<S>(jet_sub(x.a(), y.a()), jet_sub(x.b(), y.b()));
}

template <JetScalar S>
VectorField<S> vf_neg(const VectorField<S>& x) {
    return VectorField<S>(jet_neg(x.a()), jet_neg(x.b()));
}

template <JetScalar S>
VectorField<S> vf_scale(const VectorField<S>& x, const S& s) {
    return VectorField<S>(jet_scale(x.a(), s), jet_scale(x.b(), s));
}

/// Action as a derivation: X_* f = a df/dx + b df/dy.
///
/// Each derivative is reliable one degree short, but multiplying by a
/// component of order >= 2 wins two degrees back, so for order-2 fields the
/// result is exact at the full truncation degree.
template <JetScalar S>
Jet2<S> derive(const VectorField<S>& x, const Jet2<S>& f) {
    if (x.trunc() != f.trunc()) fail(errc::degree_mismatch, "derivation degrees differ");
    return jet_add(jet_mul(x.a(), jet_derive(f, 'x')), jet_mul(x.b(), jet_derive(f, 'y')));
}

/// Lie bracket [X,Y], componentwise X_*(Y_i) - Y_*(X_i).
template <JetScalar S>
VectorField<S> bracket(const VectorField<S>& x, const VectorField<S>& y) {
    if (x.trunc() != y.trunc()) fail(errc::degree_mismatch, "bracket degrees differ");
    return VectorField<S>(jet_sub(derive(x, y.a()), derive(y, x.a())),
                          jet_sub(derive(x, y.b()), derive(y, x.b())));
}

/// Minimum of the component orders; order_infinity for the zero field.
template <JetScalar S>
int vf_order(const VectorField<S>& x) {
    return std::min(jet_order(x.a()), jet_order(x.b()));
}

template <JetScalar S>
bool is_order_two_plus(const VectorField<S>& x) {
    return jet_order(x.a()) >= 2 && jet_order(x.b()) >= 2;
}

/// Determinant pairing a_X b_Y - b_X a_Y; zero mod N means the fields are
/// parallel at this truncation (a verdict that always carries N with it).
template <JetScalar S>
Jet2<S> wedge(const VectorField<S>& x, const VectorField<S>& y) {
    if (x.trunc() != y.trunc()) fail(errc::degree_mismatch, "wedge degrees differ");
    return jet_sub(jet_mul(x.a(), y.b()), jet_mul(x.b(), y.a()));
}

/// Solves Z = f X + g Y by Cramer's rule with exact jet division. Requires
/// the wedge to be nonzero mod N and both quotients to stay inside the
/// power-series ring; the general fraction-field solution is out of scope.
template <JetScalar S>
std::pair<Jet2<S>, Jet2<S>> decompose(const VectorField<S>& z, const VectorField<S>& x,
                                      const VectorField<S>& y) {
    Jet2<S> w = wedge(x, y);
    if (z.trunc() != x.trunc()) fail(errc::degree_mismatch, "decomposition degrees differ");
    if (w.is_zero()) fail(errc::parallel_fields, "wedge vanishes at this truncation");
    Jet2<S> fn = jet_sub(jet_mul(z.a(), y.b()), jet_mul(z.b(), y.a()));
    Jet2<S> gn = jet_sub(jet_mul(z.b(), x.a()), jet_mul(z.a(), x.b()));
    return {jet_divide_exact(fn, w), jet_divide_exact(gn, w)};
}

} // namespace jetgerm
