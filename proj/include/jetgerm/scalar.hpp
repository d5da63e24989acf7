#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdio>
#include <string>
#include <string_view>

#include "jetgerm/errors.hpp"

namespace jetgerm {

/// Exact rational number. mpq_class does not canonicalize two-argument
/// construction, so always build through make_rat / rat_parse.
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) fail(errc::divide_by_zero, "rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p" or "p/q" with optional sign; canonical output.
inline Rat rat_parse(std::string_view s) {
    std::string t(s);
    if (t.empty()) fail(errc::malformed_input, "empty rational literal");
    Rat q;
    if (q.set_str(t, 10) != 0)
        fail(errc::malformed_input, "bad rational literal: " + t);
    if (q.get_den() == 0) fail(errc::divide_by_zero, "rational with zero denominator: " + t);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

/// Exact element of Q(i): complex number with rational real and imaginary parts.
class CRat {
public:
    CRat() : re_(0), im_(0) {}
    CRat(long n) : re_(n), im_(0) {} // NOLINT: implicit from integers is intended
    explicit CRat(Rat re) : re_(std::move(re)), im_(0) {}
    CRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    CRat conj() const { return CRat(re_, Rat(-im_)); }
    /// |z|^2 as an exact rational.
    Rat norm2() const {
        Rat n = re_ * re_ + im_ * im_;
        return n;
    }

    friend CRat operator+(const CRat& a, const CRat& b) { return CRat(Rat(a.re_ + b.re_), Rat(a.im_ + b.im_)); }
    friend CRat operator-(const CRat& a, const CRat& b) { return CRat(Rat(a.re_ - b.re_), Rat(a.im_ - b.im_)); }
    friend CRat operator-(const CRat& a) { return CRat(Rat(-a.re_), Rat(-a.im_)); }
    friend CRat operator*(const CRat& a, const CRat& b) {
        return CRat(Rat(a.re_ * b.re_ - a.im_ * b.im_), Rat(a.re_ * b.im_ + a.im_ * b.re_));
    }
    friend CRat operator/(const CRat& a, const CRat& b) {
        Rat n = b.norm2();
        if (sgn(n) == 0) fail(errc::divide_by_zero, "complex-rational division by zero");
        CRat num = a * b.conj();
        return CRat(Rat(num.re_ / n), Rat(num.im_ / n));
    }
    CRat& operator+=(const CRat& b) { re_ += b.re_; im_ += b.im_; return *this; }
    CRat& operator-=(const CRat& b) { re_ -= b.re_; im_ -= b.im_; return *this; }
    CRat& operator*=(const CRat& b) { *this = *this * b; return *this; }

    friend bool operator==(const CRat& a, const CRat& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }

private:
    Rat re_, im_;
};

inline std::complex<double> to_complex(const CRat& z) {
    return {z.re().get_d(), z.im().get_d()};
}

/// Scalar-mode hooks shared by the templated kernel. Exact mode is CRat;
/// float mode is std::complex<double> with an explicit tolerance for
/// approximate comparisons (exact zero tests are still exact).
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<CRat> {
    static constexpr bool exact = true;
    static CRat zero() { return CRat(); }
    static CRat one() { return CRat(1); }
    static CRat from_int(long n) { return CRat(n); }
    static CRat from_ratio(long n, long d) { return CRat(make_rat(n, d)); }
    static bool is_zero(const CRat& v) { return v.is_zero(); }
    static std::complex<double> to_c(const CRat& v) { return to_complex(v); }
    /// Canonical text form "re+im i" as rationals; stable across runs.
    static std::string repr(const CRat& v) { return rat_str(v.re()) + "," + rat_str(v.im()); }
};

template <>
struct ScalarOps<std::complex<double>> {
    using C = std::complex<double>;
    static constexpr bool exact = false;
    static constexpr double default_tolerance = 1e-12;
    static C zero() { return {0.0, 0.0}; }
    static C one() { return {1.0, 0.0}; }
    static C from_int(long n) { return {static_cast<double>(n), 0.0}; }
    static C from_ratio(long n, long d) { return {static_cast<double>(n) / static_cast<double>(d), 0.0}; }
    static bool is_zero(const C& v) { return v.real() == 0.0 && v.imag() == 0.0; }
    static C to_c(const C& v) { return v; }
    static std::string repr(const C& v) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g,%.17g", v.real(), v.imag());
        return buf;
    }
};

template <class S>
concept JetScalar = requires { ScalarOps<S>::exact; };

} // namespace jetgerm
