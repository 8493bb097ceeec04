#include "g2an/errors.hpp"
#include "g2an/poly.hpp"
#include "g2an/rng.hpp"

#include <doctest.h>

using namespace g2an;

namespace {

const long kPrec = 256;

Poly make(std::initializer_list<double> coeffs) {
    std::vector<BigComplex> c;
    for (double v : coeffs) c.emplace_back(v, 0.0, kPrec);
    return Poly(std::move(c));
}

// z^3 - 3z
Poly golden_cubic() { return make({0, -3, 0, 1}); }

BigReal tiny(long lost = 16) { return ldexp2(BigReal(1L, kPrec), -(kPrec - lost)); }

} // namespace

TEST_CASE("Horner evaluation") {
    Poly p = golden_cubic();
    CHECK(abs(p.eval(BigComplex(2L, kPrec)) - 2L).is_zero());
    CHECK(abs(p.eval(BigComplex(1L, kPrec)) + 2L).is_zero());
    Poly q = make({7, 1, 4});
    CHECK(q.eval(BigComplex(kPrec)) == BigComplex(7L, kPrec));
}

TEST_CASE("derivatives, including past the degree") {
    Poly p = golden_cubic();
    Poly d = p.derivative();
    CHECK(d.degree() == 2);
    CHECK(d.coeff(0) == BigComplex(-3L, kPrec));
    CHECK(d.coeff(2) == BigComplex(3L, kPrec));
    Poly same = p.derivative(0);
    CHECK(same.degree() == p.degree());
    CHECK(p.derivative(4).is_zero());
}

TEST_CASE("find_roots on the golden derivative") {
    std::vector<BigComplex> r = find_roots(golden_cubic().derivative());
    REQUIRE(r.size() == 2);
    CHECK(abs(r[0] + 1L) <= tiny());
    CHECK(abs(r[1] - 1L) <= tiny());
    CHECK(lex_less(r[0], r[1]));
}

TEST_CASE("double root raises RootClusterError") {
    CHECK_THROWS_AS((void)find_roots(make({0, 0, 1})), RootClusterError);
}

TEST_CASE("cube roots of unity") {
    std::vector<BigComplex> r = find_roots(make({-1, 0, 0, 1}));
    REQUIRE(r.size() == 3);
    Poly p = make({-1, 0, 0, 1});
    for (const auto& z : r) {
        CHECK(abs(p.eval(z)) <= tiny() * 8L);
        CHECK(abs(abs(z) - BigReal(1L, kPrec)) <= tiny());
    }
    // lex order puts the conjugate pair (Re = -1/2) first, the real root last
    CHECK(abs(r[2] - 1L) <= tiny());
    CHECK(abs(r[0] - conj(r[1])) <= tiny());
}

TEST_CASE("degree below one is rejected") {
    CHECK_THROWS_AS((void)find_roots(make({5})), DomainError);
}

TEST_CASE("every returned root meets the residual bound") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 12; ++trial) {
        int deg = 3 + static_cast<int>(rng.next() % 10); // up to 12
        std::vector<BigComplex> c;
        for (int k = 0; k <= deg; ++k)
            c.emplace_back(rng.next_symmetric(), rng.next_symmetric(), kPrec);
        if (abs(c.back()).to_double() < 0.2) c.back() = BigComplex(1L, kPrec);
        Poly p(std::move(c));
        std::vector<BigComplex> roots;
        try {
            roots = find_roots(p);
        } catch (const RootClusterError&) {
            continue; // legitimately rejected draw
        }
        BigReal scale = p.coeff_scale();
        for (const auto& z : roots) {
            BigReal bound = ldexp2(scale * pow_i(max(BigReal(1L, kPrec), abs(z)), p.degree()),
                                   -(kPrec - 8));
            CHECK(abs(p.eval(z)) <= bound);
        }
    }
}

TEST_CASE("roots reconstruct the polynomial") {
    SplitMix64 rng(123);
    for (int trial = 0; trial < 10; ++trial) {
        // separated random roots, then expand
        int deg = 2 + static_cast<int>(rng.next() % 11);
        std::vector<BigComplex> roots;
        while (static_cast<int>(roots.size()) < deg) {
            BigComplex cand(2.0 * rng.next_symmetric(), 2.0 * rng.next_symmetric(), kPrec);
            bool ok = true;
            for (const auto& r : roots)
                if (abs(cand - r) < BigReal(0.12, kPrec)) ok = false;
            if (ok) roots.push_back(cand);
        }
        BigComplex lead(1.0 + rng.next_unit(), rng.next_symmetric(), kPrec);
        Poly p = Poly::from_roots(roots, lead);
        std::vector<BigComplex> found = find_roots(p);
        Poly q = Poly::from_roots(found, lead);
        BigReal scale = p.coeff_scale();
        for (long k = 0; k <= p.degree(); ++k)
            CHECK(abs(p.coeff(static_cast<std::size_t>(k)) - q.coeff(static_cast<std::size_t>(k))) <=
                  tiny() * scale);
    }
}

TEST_CASE("taylor expansion agrees with direct evaluation") {
    Poly p = golden_cubic();
    BigComplex a(0.5, -0.25, kPrec);
    TruncatedSeries s = p.taylor(a, 5);
    CHECK(abs(s.coeff(0) - p.eval(a)) <= tiny());
    CHECK(abs(s.coeff(1) - p.derivative().eval(a)) <= tiny());
    CHECK(abs(s.coeff(3) - 1L) <= tiny()); // lambda'''/3! = 6/6
    CHECK(s.coeff(4).is_zero());
}
