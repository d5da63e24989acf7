#pragma once

#include "jetgerm/scalar.hpp"

namespace jetgerm {

/// 2x2 matrix over the jet scalar (exact rationals or complex doubles).
/// Row-major entries: [[a, b], [c, d]].
template <JetScalar S>
struct Mat2 {
    S a = ScalarOps<S>::zero();
    S b = ScalarOps<S>::zero();
    S c = ScalarOps<S>::zero();
    S d = ScalarOps<S>::zero();

    static Mat2 identity() {
        return {ScalarOps<S>::one(), ScalarOps<S>::zero(), ScalarOps<S>::zero(), ScalarOps<S>::one()};
    }
    static Mat2 diagonal(S l1, S l2) {
        return {std::move(l1), ScalarOps<S>::zero(), ScalarOps<S>::zero(), std::move(l2)};
    }

    S det() const { return a * d - b * c; }
    S trace() const { return a + d; }
    bool is_identity() const { return *this == identity(); }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }
};

template <JetScalar S>
Mat2<S> mat_inverse(const Mat2<S>& m) {
    S det = m.det();
    if (ScalarOps<S>::is_zero(det)) fail(errc::singular, "matrix has zero determinant");
    return {m.d / det, -m.b / det, -m.c / det, m.a / det};
}

/// A B A^-1 B^-1, with the word read left-to-right: A acts first.
template <JetScalar S>
Mat2<S> mat_commutator(const Mat2<S>& a, const Mat2<S>& b) {
    return mat_inverse(b) * mat_inverse(a) * b * a;
}

} // namespace jetgerm
