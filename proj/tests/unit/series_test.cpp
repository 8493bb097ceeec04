#include "g2an/errors.hpp"
#include "g2an/rng.hpp"
#include "g2an/series.hpp"

#include <doctest.h>

#include <cmath>

using namespace g2an;

namespace {

const long kPrec = 256;

TruncatedSeries make(std::initializer_list<double> coeffs) {
    std::vector<BigComplex> c;
    for (double v : coeffs) c.emplace_back(v, 0.0, kPrec);
    return TruncatedSeries(BigComplex(kPrec), std::move(c));
}

BigReal tiny() { return ldexp2(BigReal(1L, kPrec), -(kPrec - 16)); }

} // namespace

TEST_CASE("series product drops terms beyond the order") {
    // (1 + z)(1 - z) at order 3 -> 1 + 0 z - z^2
    TruncatedSeries p = series_mul(make({1, 1, 0}), make({1, -1, 0}));
    CHECK(p.coeff(0) == BigComplex(1L, kPrec));
    CHECK(p.coeff(1).is_zero());
    CHECK(p.coeff(2) == BigComplex(-1L, kPrec));

    // (1 + 2z + 3z^2)(4 + 5z) at order 3 -> 4 + 13 z + 22 z^2
    TruncatedSeries q = series_mul(make({1, 2, 3}), make({4, 5, 0}));
    CHECK(q.coeff(0) == BigComplex(4L, kPrec));
    CHECK(q.coeff(1) == BigComplex(13L, kPrec));
    CHECK(q.coeff(2) == BigComplex(22L, kPrec));
}

TEST_CASE("multiplying by the unit series is the identity") {
    TruncatedSeries a = make({2.5, -1.25, 0.5, 3});
    TruncatedSeries one = TruncatedSeries::unit(a.center(), a.order(), kPrec);
    TruncatedSeries p = series_mul(a, one);
    for (std::size_t k = 0; k < a.order(); ++k) CHECK(p.coeff(k) == a.coeff(k));
}

TEST_CASE("reciprocal matches hand expansions") {
    // 1/(1 - z) at order 4 -> 1 + z + z^2 + z^3
    TruncatedSeries g = series_reciprocal(make({1, -1, 0, 0}));
    for (std::size_t k = 0; k < 4; ++k) CHECK(abs(g.coeff(k) - 1L) <= tiny());

    // 1/1 -> 1
    TruncatedSeries u = series_reciprocal(make({1}));
    CHECK(u.coeff(0) == BigComplex(1L, kPrec));

    // 1/(2 + z) at order 2 -> 1/2 - z/4
    TruncatedSeries h = series_reciprocal(make({2, 1}));
    CHECK(abs(h.coeff(0) - BigComplex(1L, kPrec) / 2) <= tiny());
    CHECK(abs(h.coeff(1) + BigComplex(1L, kPrec) / 4) <= tiny());
}

TEST_CASE("a * reciprocal(a) is the unit series for random a") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t order = 8;
        std::vector<BigComplex> c;
        // |a_0| in [0.1, 10]
        double mag = 0.1 + 9.9 * rng.next_unit();
        double ang = 6.283185307179586 * rng.next_unit();
        c.emplace_back(mag * std::cos(ang), mag * std::sin(ang), kPrec);
        for (std::size_t k = 1; k < order; ++k)
            c.emplace_back(rng.next_symmetric(), rng.next_symmetric(), kPrec);
        TruncatedSeries a(BigComplex(kPrec), c);
        TruncatedSeries p = series_mul(a, series_reciprocal(a));
        CHECK(abs(p.coeff(0) - 1L) <= tiny());
        for (std::size_t k = 1; k < order; ++k) CHECK(abs(p.coeff(k)) <= tiny() * 100L);
    }
}

TEST_CASE("center mismatch and vanishing constant term are rejected") {
    TruncatedSeries a = make({1, 2});
    TruncatedSeries b(BigComplex(1.0, 0.0, kPrec),
                      std::vector<BigComplex>{BigComplex(1L, kPrec), BigComplex(2L, kPrec)});
    CHECK_THROWS_AS((void)series_mul(a, b), DomainError);
    CHECK_THROWS_AS((void)series_reciprocal(make({0, 1})), DomainError);
}

TEST_CASE("shift_down peels one exponent") {
    TruncatedSeries a = make({0, 3, 5});
    TruncatedSeries s = a.shift_down();
    CHECK(s.coeff(0) == BigComplex(3L, kPrec));
    CHECK(s.coeff(1) == BigComplex(5L, kPrec));
    CHECK(s.coeff(2).is_zero());
}
