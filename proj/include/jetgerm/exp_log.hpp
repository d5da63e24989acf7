#pragma once

#include "jetgerm/germ.hpp"
#include "jetgerm/vector_field.hpp"

namespace jetgerm {

/// Time-t exponential of an order-2 vector field, as the terminating series
/// Sum_j t^j/j! (X_*)^j applied to each coordinate. Every application of X_*
/// raises the order, so j runs at most to the truncation degree, and because
/// the coefficients of X have order >= 2 each summand is exact at full
/// degree — the derivative's lost top degree is always won back by the
/// multiplication.
template <JetScalar S>
Germ<S> exp_vf(const VectorField<S>& x, const S& t) {
    if (!is_order_two_plus(x)) fail(errc::order_too_low, "exponential needs order >= 2");
    int n = x.trunc();
    Jet2<S> comp[2] = {Jet2<S>::coord_x(n), Jet2<S>::coord_y(n)};
    for (Jet2<S>& h : comp) {
        Jet2<S> term = h; // j = 0
        S coef = ScalarOps<S>::one();
        for (int j = 1; j <= n && !term.is_zero(); ++j) {
            term = derive(x, term);
            coef = coef * t / ScalarOps<S>::from_int(j);
            h = jet_add(h, jet_scale(term, coef));
        }
    }
    return Germ<S>(std::move(comp[0]), std::move(comp[1]));
}

template <JetScalar S>
Germ<S> exp_vf(const VectorField<S>& x) {
    return exp_vf(x, ScalarOps<S>::one());
}

/// Inverse of exp_vf at t=1: the unique order-2 field X with
/// exp(X) = F modulo degree N, for F tangent to the identity.
///
/// Degree-by-degree: once X is right through degree m-1, the series terms
/// with j >= 2 are already frozen at degree m (they only consume lower
/// degrees of X), so the degree-m defect of exp(X) - F is exactly the
/// missing degree-m homogeneous part of X.
template <JetScalar S>
VectorField<S> log_germ(const Germ<S>& f) {
    if (!is_tangent(f)) fail(errc::precondition_violated, "logarithm needs a tangent-to-identity germ");
    int n = f.trunc();
    VectorField<S> x(n);
    for (int m = 2; m <= n; ++m) {
        Germ<S> g = exp_vf(x, ScalarOps<S>::one());
        Jet2<S> da = homogeneous_part(jet_sub(f.f1(), g.f1()), m);
        Jet2<S> db = homogeneous_part(jet_sub(f.f2(), g.f2()), m);
        if (da.is_zero() && db.is_zero()) continue;
        x = VectorField<S>(jet_add(x.a(), da), jet_add(x.b(), db));
    }
    return x;
}

/// Generator of the group commutator of the two exponentials:
/// log([exp X1, exp X2]). Its leading homogeneous part is that of [X1, X2],
/// and the next corrections follow the Campbell-Hausdorff series
/// [X1,X2] + 1/2 [X1,[X1,X2]] + 1/2 [X2,[X1,X2]] + ...
/// Computed through exp/compose/log, which is exact mod N, rather than by
/// summing the series.
template <JetScalar S>
VectorField<S> bch_commutator_log(const VectorField<S>& x1, const VectorField<S>& x2) {
    if (!is_order_two_plus(x1) || !is_order_two_plus(x2))
        fail(errc::order_too_low, "commutator log needs order >= 2 fields");
    S one = ScalarOps<S>::one();
    return log_germ(germ_commutator(exp_vf(x1, one), exp_vf(x2, one)));
}

/// Pullback of X along a tangent-to-identity F by Hadamard's formula:
/// F*X = X + [Z,X] + 1/2 [Z,[Z,X]] + ..., Z = log F. Iterated brackets with
/// an order-2 field raise order, so the series terminates mod N.
template <JetScalar S>
VectorField<S> hadamard_pullback(const Germ<S>& f, const VectorField<S>& x) {
    if (!is_order_two_plus(x)) fail(errc::order_too_low, "pullback needs an order >= 2 field");
    if (f.trunc() != x.trunc()) fail(errc::degree_mismatch, "pullback degrees differ");
    VectorField<S> z = log_germ(f);
    VectorField<S> acc = x;
    VectorField<S> term = x;
    for (int k = 1; k <= x.trunc() && !term.is_zero(); ++k) {
        term = vf_scale(bracket(z, term), ScalarOps<S>::one() / ScalarOps<S>::from_int(k));
        acc = vf_add(acc, term);
    }
    return acc;
}

/// Chain-rule pullback (DF)^{-1} (X o F), valid for any germ F. Independent
/// of the bracket series; the Jacobian entries cost one reliable degree, so
/// the result is trustworthy through N-1.
template <JetScalar S>
VectorField<S> direct_pullback(const Germ<S>& f, const VectorField<S>& x) {
    if (f.trunc() != x.trunc()) fail(errc::degree_mismatch, "pullback degrees differ");
    Jet2<S> j11 = jet_derive(f.f1(), 'x'), j12 = jet_derive(f.f1(), 'y');
    Jet2<S> j21 = jet_derive(f.f2(), 'x'), j22 = jet_derive(f.f2(), 'y');
    Jet2<S> det = jet_sub(jet_mul(j11, j22), jet_mul(j12, j21));
    Jet2<S> ca = jet_compose(x.a(), f.f1(), f.f2());
    Jet2<S> cb = jet_compose(x.b(), f.f1(), f.f2());
    Jet2<S> num1 = jet_sub(jet_mul(j22, ca), jet_mul(j12, cb));
    Jet2<S> num2 = jet_sub(jet_mul(j11, cb), jet_mul(j21, ca));
    return VectorField<S>(jet_divide_exact(num1, det), jet_divide_exact(num2, det));
}

} // namespace jetgerm
