#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "piflat/errors.hpp"
#include "piflat/ore_poly.hpp"
#include "test_support.hpp"

using namespace piflat;
using namespace piflat::test;

namespace {

OrePoly D(const Ctx& cx) { return OrePoly::derivative_op(cx); }

OrePoly fe(const FieldElem& c) { return OrePoly::from_field(c); }

/* Coefficient sizes are kept small on purpose: operator products compound
 * fraction arithmetic (every noncommutative sum or product runs a skew
 * Euclidean reduction), so dense rational coefficients make triple
 * products far more expensive than anything the library meets in
 * practice without testing any additional law. */
DeltaPoly random_dpoly(const Ctx& cx, Rng& rng, bool nonzero,
                       int max_deg = 1, int cdeg = 1) {
    bool allow_t = cx->mode() == RingMode::SkewSingleDelay;
    std::uniform_int_distribution<int> nterms(nonzero ? 1 : 0, 2);
    std::uniform_int_distribution<int> dexp(0, max_deg);
    DeltaPoly p = DeltaPoly::zero(cx);
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        ExpVec e(cx->delay_count(), 0);
        for (int& x : e) x = dexp(rng);
        p.add_term(e, random_field_elem(cx, rng, allow_t, 2, cdeg));
    }
    if (nonzero && p.is_zero())
        p.add_term(ExpVec(cx->delay_count(), 0), FieldElem::one(cx));
    return p;
}

DeltaFraction random_fraction(const Ctx& cx, Rng& rng, bool nonzero = false) {
    DeltaPoly num = random_dpoly(cx, rng, nonzero);
    if (num.is_zero()) return DeltaFraction::from_poly(num);
    std::uniform_int_distribution<int> pick(0, 2);
    if (pick(rng) != 0) return DeltaFraction::from_poly(num);
    DeltaPoly den = random_dpoly(cx, rng, true, 1, 0);
    return DeltaFraction(den, num);
}

OrePoly random_ore(const Ctx& cx, Rng& rng, bool nonzero, int max_deg = 2) {
    std::uniform_int_distribution<int> dg(0, max_deg);
    OrePoly p = OrePoly::zero(cx);
    int top = dg(rng);
    for (int k = 0; k <= top; ++k) {
        DeltaFraction c = random_fraction(cx, rng);
        if (!c.is_zero()) p = p + OrePoly::monomial(c, k);
    }
    if (nonzero && p.is_zero()) p = OrePoly::one(cx);
    return p;
}

} // namespace

TEST_CASE("derivative commutation in products") {
    Ctx cx = skew_ctx();
    FieldElem t = FieldElem::t(cx);
    DeltaPoly d = DeltaPoly::delta(cx, 0);

    // D * t = t*D + 1
    CHECK(D(cx) * fe(t) == fe(t) * D(cx) + OrePoly::one(cx));
    // D * t^2 = t^2*D + 2t
    CHECK(D(cx) * fe(t * t) ==
          fe(t * t) * D(cx) + fe(t + t));
    // D * delta = delta * D
    OrePoly dl = OrePoly::from_poly(d);
    CHECK(D(cx) * dl == dl * D(cx));
    // D * (1/t) = (1/t)*D - 1/t^2
    CHECK(D(cx) * fe(t.inverse()) ==
          fe(t.inverse()) * D(cx) - fe((t * t).inverse()));

    // second-order: D^2 * t = t*D^2 + 2*D
    CHECK(D(cx) * D(cx) * fe(t) ==
          fe(t) * D(cx) * D(cx) + D(cx) + D(cx));

    Rng rng(11);
    for (int i = 0; i < 20; ++i) {
        DeltaFraction a = random_fraction(cx, rng);
        OrePoly pa = OrePoly::from_fraction(a);
        CHECK(D(cx) * pa - pa * D(cx) ==
              OrePoly::from_fraction(a.derive()));
    }
}

TEST_CASE("degree and leading coefficient") {
    Ctx cx = skew_ctx();
    FieldElem t = FieldElem::t(cx);
    DeltaPoly d = DeltaPoly::delta(cx, 0);
    DeltaPoly one = DeltaPoly::one(cx);

    CHECK(OrePoly::zero(cx).deg() == -1);
    CHECK_THROWS_AS(OrePoly::zero(cx).leading_coeff(), InternalError);

    // delta^{-1}*D^3 + t -> degree 3, leading coefficient delta^{-1}
    DeltaFraction dinv = DeltaFraction::from_poly(d).inverse();
    OrePoly p = OrePoly::monomial(dinv, 3) + fe(t);
    CHECK(p.deg() == 3);
    CHECK(p.leading_coeff() == dinv);

    // (1-delta)^{-1}*(1/t)*D -> degree 1 with that fraction in front
    DeltaFraction c(one - d, DeltaPoly::from_field(t.inverse()));
    OrePoly q = OrePoly::monomial(c, 1);
    CHECK(q.deg() == 1);
    CHECK(q.leading_coeff() == c);
    CHECK(q.coeff(0).is_zero());

    Rng rng(22);
    for (int i = 0; i < 20; ++i) {
        OrePoly a = random_ore(cx, rng, true);
        OrePoly b = random_ore(cx, rng, true);
        CHECK((a * b).deg() == a.deg() + b.deg());
        CHECK((a * b).leading_coeff() ==
              a.leading_coeff() * b.leading_coeff());
    }
}

TEST_CASE("ring axioms for operator arithmetic") {
    for (const Ctx& cx : {skew_ctx(), comm2_ctx()}) {
        Rng rng(33);
        for (int i = 0; i < 12; ++i) {
            OrePoly a = random_ore(cx, rng, false);
            OrePoly b = random_ore(cx, rng, false);
            OrePoly c = random_ore(cx, rng, false);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((b + c) * a == b * a + c * a);
            CHECK(a + b == b + a);
            CHECK((a + b) - b == a);
        }
    }
}

TEST_CASE("euclidean division on both sides") {
    Ctx cx = skew_ctx();
    FieldElem t = FieldElem::t(cx);
    OrePoly q = OrePoly::zero(cx), r = OrePoly::zero(cx);

    // D^2 / D: exact
    OrePoly::divide(D(cx) * D(cx), D(cx), OrePoly::Side::Right, &q, &r);
    CHECK(q == D(cx));
    CHECK(r.is_zero());

    // (t*D + 1) / D from the right: q = t, r = 1 (note q*D = t*D)
    OrePoly::divide(fe(t) * D(cx) + OrePoly::one(cx), D(cx),
                    OrePoly::Side::Right, &q, &r);
    CHECK(q == fe(t));
    CHECK(r == OrePoly::one(cx));

    // same dividend from the left: D*q with q = t gives t*D + 1, so r = 0
    OrePoly::divide(fe(t) * D(cx) + OrePoly::one(cx), D(cx),
                    OrePoly::Side::Left, &q, &r);
    CHECK(q == fe(t));
    CHECK(r.is_zero());

    CHECK_THROWS_AS(OrePoly::divide(D(cx), OrePoly::zero(cx),
                                    OrePoly::Side::Right, &q, &r),
                    DivisionByZeroError);

    Rng rng(44);
    for (int i = 0; i < 15; ++i) {
        OrePoly a = random_ore(cx, rng, false, 3);
        OrePoly b = random_ore(cx, rng, true, 1);
        OrePoly::divide(a, b, OrePoly::Side::Right, &q, &r);
        CHECK(q * b + r == a);
        CHECK(r.deg() < b.deg());
        OrePoly q2 = OrePoly::zero(cx), r2 = OrePoly::zero(cx);
        OrePoly::divide(r, b, OrePoly::Side::Right, &q2, &r2);
        CHECK(q2.is_zero());
        CHECK(r2 == r);

        OrePoly::divide(a, b, OrePoly::Side::Left, &q, &r);
        CHECK(b * q + r == a);
        CHECK(r.deg() < b.deg());
    }
}

TEST_CASE("denominator clearing for pivot comparisons") {
    Ctx cx = skew_ctx();
    DeltaPoly d = DeltaPoly::delta(cx, 0);
    DeltaPoly one = DeltaPoly::one(cx);

    CHECK(OrePoly::one(cx).denominator_clearing() == one);
    CHECK(OrePoly::zero(cx).cleared_delta_degree() == -1);
    CHECK(OrePoly::one(cx).cleared_delta_degree() == 0);

    // delta^{-1}*D + (1-delta)^{-1}: clearing needs both factors
    DeltaFraction dinv = DeltaFraction::from_poly(d).inverse();
    DeltaFraction oinv = DeltaFraction::from_poly(one - d).inverse();
    OrePoly p = OrePoly::monomial(dinv, 1) + OrePoly::from_fraction(oinv);
    DeltaPoly cl = p.denominator_clearing();
    CHECK(cl == d - d * d);
    OrePoly cleared = OrePoly::from_poly(cl) * p;
    CHECK(cleared.is_polynomial());
    CHECK(p.cleared_delta_degree() == 1);

    // a polynomial operator keeps its plain delta-degree
    OrePoly poly = OrePoly::from_poly(d * d) * D(cx) + OrePoly::from_poly(d);
    CHECK(poly.cleared_delta_degree() == 2);

    Rng rng(55);
    for (int i = 0; i < 15; ++i) {
        OrePoly a = random_ore(cx, rng, true);
        OrePoly cl2 = OrePoly::from_poly(a.denominator_clearing()) * a;
        CHECK(cl2.is_polynomial());
    }
}
