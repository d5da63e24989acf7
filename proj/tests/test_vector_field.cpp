#include "doctest.h"

#include "jetgerm/vector_field.hpp"

using namespace jetgerm;

namespace {

using JetQ = Jet2<CRat>;
using VF = VectorField<CRat>;

CRat q(long num, long den = 1) { return ScalarOps<CRat>::from_ratio(num, den); }

JetQ mono(int n, int i, int j, long num = 1, long den = 1) {
    return JetQ::monomial(n, i, j, q(num, den));
}

VF field_dy(int n, int i, int j, long num = 1) { // c x^i y^j d/dy
    return VF(JetQ(n), mono(n, i, j, num));
}

} // namespace

TEST_CASE("derivation action") {
    int n = 6;
    VF x2dx(mono(n, 2, 0), JetQ(n)); // x^2 d/dx
    CHECK(derive(x2dx, JetQ::coord_x(n)) == mono(n, 2, 0));
    CHECK(derive(x2dx, JetQ::constant(n, q(3))).is_zero());

    // applied twice to x: x^2 d/dx (x^2) = 2x^3
    JetQ once = derive(x2dx, JetQ::coord_x(n));
    CHECK(derive(x2dx, once) == mono(n, 3, 0, 2));

    // order-2 coefficients keep full reliability
    CHECK(derive(x2dx, JetQ::coord_x(n)).reliable() == n);
}

TEST_CASE("bracket oracles from the nilpotent chain") {
    int n = 8;
    VF x1 = field_dy(n, 2, 2); // x^2 y^2 d/dy
    VF x2 = field_dy(n, 2, 1); // x^2 y   d/dy
    VF b = bracket(x1, x2);
    CHECK(b.a().is_zero());
    CHECK(b.b() == mono(n, 4, 2, -1)); // -x^4 y^2 d/dy

    VF x3 = field_dy(n, 4, 2); // x^4 y^2 d/dy
    VF c = bracket(x3, x2);
    CHECK(c.a().is_zero());
    CHECK(c.b() == mono(n, 6, 2, -1)); // -x^6 y^2 d/dy

    CHECK(bracket(x1, x1).is_zero());
    CHECK(vf_sub(bracket(x1, x2), vf_neg(bracket(x2, x1))).is_zero());
}

TEST_CASE("bracket bilinearity and Jacobi") {
    int n = 7;
    VF x(mono(n, 2, 0), mono(n, 1, 1, -1));
    VF y(mono(n, 0, 2, 3), mono(n, 2, 1));
    VF z(mono(n, 1, 2), mono(n, 3, 0, 1, 2));

    CHECK(bracket(vf_add(x, y), z) == vf_add(bracket(x, z), bracket(y, z)));
    CHECK(bracket(vf_scale(x, q(5)), y) == vf_scale(bracket(x, y), q(5)));

    VF jac = vf_add(vf_add(bracket(x, bracket(y, z)), bracket(y, bracket(z, x))),
                    bracket(z, bracket(x, y)));
    // Jacobi holds through the reliable degree of the nested brackets.
    int rel = jac.reliable();
    CHECK(rel >= n - 1);
    CHECK(equal_mod(jac.a(), JetQ(n), rel));
    CHECK(equal_mod(jac.b(), JetQ(n), rel));
}

TEST_CASE("orders and the order-2 subalgebra") {
    int n = 6;
    VF x(mono(n, 2, 0), mono(n, 0, 3));
    CHECK(vf_order(x) == 2);
    CHECK(vf_order(VF::zero(n)) == order_infinity);
    CHECK(is_order_two_plus(x));
    CHECK(!is_order_two_plus(VF(JetQ::coord_x(n), JetQ(n))));

    // bracket order lower bound r+s-1 for order-2+ fields
    VF y = field_dy(n, 2, 1);
    VF b = bracket(x, y);
    if (!b.is_zero()) CHECK(vf_order(b) >= vf_order(x) + vf_order(y) - 1);
}

TEST_CASE("wedge detects parallelism at the truncation") {
    int n = 6;
    VF x(mono(n, 2, 0), JetQ(n));                 // x^2 dx
    VF xy(jet_mul(mono(n, 2, 0), JetQ::coord_y(n)), JetQ(n)); // y x^2 dx
    CHECK(wedge(x, xy).is_zero());
    CHECK(wedge(x, x).is_zero());

    VF y(JetQ(n), mono(n, 0, 2)); // y^2 dy
    CHECK(wedge(x, y) == mono(n, 2, 2)); // x^2 y^2
}

TEST_CASE("decomposition in the diagonal frame") {
    int n = 6;
    VF x(mono(n, 2, 0), JetQ(n)); // x^2 dx
    VF y(JetQ(n), mono(n, 0, 2)); // y^2 dy

    VF z1(mono(n, 2, 0), mono(n, 0, 2, 2)); // x^2 dx + 2 y^2 dy
    auto [f1, g1] = decompose(z1, x, y);
    CHECK(f1 == JetQ::constant(n, q(1)));
    CHECK(g1 == JetQ::constant(n, q(2)));

    VF z2(mono(n, 3, 0), JetQ(n)); // x^3 dx
    auto [f2, g2] = decompose(z2, x, y);
    CHECK(f2 == JetQ::coord_x(n));
    CHECK(g2.is_zero());

    // recombination at the reduced reliable degree
    VF back = vf_add(VF(jet_mul(f2, x.a()), jet_mul(f2, x.b())),
                     VF(jet_mul(g2, y.a()), jet_mul(g2, y.b())));
    int rel = std::min(f2.reliable(), g2.reliable());
    CHECK(equal_mod(back.a(), z2.a(), rel));
    CHECK(equal_mod(back.b(), z2.b(), rel));

    VF z3(jet_mul(JetQ::coord_x(n), JetQ::coord_y(n)), JetQ(n)); // xy dx: needs y/x
    CHECK_THROWS_AS(decompose(z3, x, y), Error);

    VF xpar(jet_mul(mono(n, 2, 0), JetQ::coord_y(n)), JetQ(n));
    try {
        decompose(z1, x, xpar);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::parallel_fields);
    }
}
