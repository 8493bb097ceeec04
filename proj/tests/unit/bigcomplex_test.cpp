#include "g2an/bigcomplex.hpp"
#include "g2an/rng.hpp"

#include <doctest.h>

using namespace g2an;

namespace {
BigReal tol_bits(long prec, long lost_bits) { return ldexp2(BigReal(1L, prec), -(prec - lost_bits)); }
} // namespace

TEST_CASE("precision promotes to the larger operand") {
    BigReal a(1.5, 128);
    BigReal b(2.25, 320);
    CHECK((a + b).precision() == 320);
    CHECK((b * a).precision() == 320);
    BigComplex x(1.0, 2.0, 128), y(0.5, -0.25, 256);
    CHECK((x * y).precision() == 256);
}

TEST_CASE("precision floor is 64 bits") {
    BigReal a(1.0, 8);
    CHECK(a.precision() >= 64);
    BigComplex z(16);
    CHECK(z.precision() >= 64);
}

TEST_CASE("scalar operations commute and associate to 2 ulp") {
    SplitMix64 rng(2024);
    const long prec = 256;
    for (int trial = 0; trial < 200; ++trial) {
        BigReal a(rng.next_symmetric() * 3.0, prec);
        BigReal b(rng.next_symmetric() * 3.0, prec);
        BigReal c(rng.next_symmetric() * 3.0, prec);
        CHECK(abs(a + b - (b + a)).is_zero());
        CHECK(abs(a * b - (b * a)).is_zero());
        BigReal s1 = (a + b) + c, s2 = a + (b + c);
        CHECK(abs(s1 - s2) <= 2 * max(s1.ulp(), s2.ulp()));
        BigReal p1 = (a * b) * c, p2 = a * (b * c);
        CHECK(abs(p1 - p2) <= 2 * max(p1.ulp(), p2.ulp()));
    }
}

TEST_CASE("complex sqrt takes the principal branch") {
    const long prec = 256;
    BigComplex neg(-4.0, 0.0, prec);
    BigComplex r = sqrt(neg);
    CHECK(r.re().is_zero());
    CHECK(abs(r.im() - 2) <= tol_bits(prec, 8));

    BigComplex w(0.0, 2.0, prec);
    BigComplex s = sqrt(w); // sqrt(2i) = 1 + i
    CHECK(abs(s.re() - 1) <= tol_bits(prec, 8));
    CHECK(abs(s.im() - 1) <= tol_bits(prec, 8));
    // just below the cut the root lands in the lower half plane
    CHECK(sqrt(BigComplex(-1.0, -1e-40, prec)).im().is_negative());

    SplitMix64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        BigComplex v(rng.next_symmetric(), rng.next_symmetric(), prec);
        BigComplex q = sqrt(v);
        CHECK(rel_diff(q * q, v) <= tol_bits(prec, 16));
        CHECK(!q.re().is_negative());
    }
}

TEST_CASE("exact decimal strings round-trip") {
    const long prec = 256;
    SplitMix64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        BigReal v(rng.next_symmetric() * 10.0, prec);
        BigReal back(v.to_decimal_exact(), prec);
        CHECK(v == back);
        // exactness survives a precision bump
        BigReal wide(v.to_decimal_exact(), 512);
        CHECK(abs(wide - v).is_zero());
    }
    CHECK(BigReal(0L, prec).to_decimal_exact() == "0");
    CHECK(BigReal(-3L, prec).to_decimal_exact() == "-3");
    CHECK(BigReal(0.25, prec).to_decimal_exact() == "0.25");
}

TEST_CASE("integer powers, including negative exponents") {
    const long prec = 256;
    BigComplex z(2.0, 1.0, prec);
    CHECK(rel_diff(pow_i(z, 3), z * z * z) <= tol_bits(prec, 8));
    CHECK(rel_diff(pow_i(z, -2), 1L / (z * z)) <= tol_bits(prec, 8));
    CHECK(pow_i(z, 0) == BigComplex(1L, prec));
}
