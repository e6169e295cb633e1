#include "doctest.h"

#include "loopqkz/cyclotomic6.hpp"
#include "loopqkz/laurent.hpp"
#include "loopqkz/parse.hpp"
#include "loopqkz/ratfunc.hpp"
#include "loopqkz/univariate.hpp"

#include <random>

using namespace loopqkz;

namespace {

using Poly = RationalLaurent;
using Rat = RatScalar<BigRational>;

UniversePtr zu() { return spectral_universe(2, {"u", "zeta"}); }

Poly P(const std::string& s, const UniversePtr& u)
{
    // q is always u^2 in this library.
    std::map<std::string, Poly> aliases{{"q", Poly::variable(u, "u", 2)}};
    return parse_laurent<BigRational>(s, u, aliases);
}

Poly random_poly(std::mt19937& rng, const UniversePtr& u, int terms, int range)
{
    std::uniform_int_distribution<int> e(-range, range);
    std::uniform_int_distribution<int> c(-5, 5);
    std::vector<Poly::Term> ts;
    for (int k = 0; k < terms; ++k) {
        std::vector<int> exps(u->size());
        for (auto& x : exps) x = e(rng);
        ts.push_back({detail::key_of(exps), BigRational(c(rng))});
    }
    return Poly::from_terms(u, std::move(ts));
}

// Pair arithmetic on (a0, a1) meaning a0 + a1*x with x^2 = x - 1, written out
// independently of Cyclotomic6.
std::pair<long, long> pair_mul(std::pair<long, long> a, std::pair<long, long> b)
{
    long c0 = a.first * b.first;
    long c1 = a.first * b.second + a.second * b.first;
    long c2 = a.second * b.second;  // c2 x^2 = c2 x - c2
    return {c0 - c2, c1 + c2};
}

}  // namespace

TEST_CASE("cyclotomic field relations")
{
    const Cyclotomic6 eps = Cyclotomic6::epsilon();
    const Cyclotomic6 one(1);
    const auto sq = pair_mul({1, 1}, {1, 1});
    CHECK(sq == std::pair<long, long>{0, 3});
    CHECK((one + eps) * (one + eps) == Cyclotomic6(sq.first, sq.second));
    CHECK((one + eps) * (one + eps) == Cyclotomic6(0, 3));

    CHECK(power(eps, 6) == one);
    CHECK(power(eps, 3) == Cyclotomic6(-1));
    const Cyclotomic6 w = eps * eps;
    CHECK(w == Cyclotomic6::omega());
    CHECK(w * w + w + one == Cyclotomic6(0));
    CHECK(eps + eps.inverse() == one);
    CHECK(eps.conj() == eps.inverse());
    CHECK(Cyclotomic6(BigRational(2, 3), BigRational(-5, 7)) / Cyclotomic6(BigRational(2, 3), BigRational(-5, 7)) == one);
    CHECK_THROWS_WITH(Cyclotomic6(0).inverse(), "zero denominator");
}

TEST_CASE("rational parsing")
{
    CHECK(parse_rational("-6/4") == BigRational(-3, 2));
    CHECK_THROWS_WITH(parse_rational("1/0"), "zero denominator");
}

TEST_CASE("ring arithmetic basics")
{
    auto u = zu();
    CHECK((P("z1 - z2", u) + P("z2 - z1", u)).is_zero());
    const Poly f = P("z1*z2^-1 - u^-4", u);
    CHECK(f * Poly::constant(u, 1) == f);
    CHECK(P("(z1+1)^2", u) == P("z1^2 + 2*z1 + 1", u));
    CHECK(P("z1^-1*z1", u) == Poly::constant(u, 1));
    CHECK(P("q^-2", u) == P("u^(-4)", u));
}

TEST_CASE("term order is graded lexicographic and equality structural")
{
    auto u = zu();
    const Poly f = P("z1^2 + z2^3 + z1*z2 + 1 + z2^-1", u);
    const auto ts = f.terms();
    for (std::size_t i = 1; i < ts.size(); ++i) CHECK(detail::grlex_less(ts[i - 1].key, ts[i].key));
    CHECK(Poly::exponent(f.leading_term(), 1) == 3);
    CHECK(P("z2 + z1", u) == P("z1 + z2", u));
}

TEST_CASE("substitution")
{
    auto u = zu();
    const std::size_t z1 = u->index("z1");
    // Monomial map z1 -> 1/(u^6 z1).
    const Rat image(Poly::constant(u, 1), P("u^6*z1", u));
    CHECK(substitute(P("z1*z2^-1", u), {{z1, image}}) == Rat(P("u^-6*z1^-1*z2^-1", u)));

    const Poly base = P("(z1*z2^-1 - q^-2)*(z2 - q^-1*z1^-1)", u);
    const Rat shifted = substitute(base, {{z1, image}});
    CHECK(shifted.is_polynomial());
    CHECK(shifted.polynomial() == base);

    CHECK(substitute(P("z1 - 1", u), {{z1, Rat::constant(u, 1)}}).is_zero());

    // Genuine rational image.
    const Rat r(P("z2 + 1", u), P("z2 - 1", u));
    const Rat got = substitute(P("z1^2 + z1^-1", u), {{z1, r}});
    CHECK(got == r * r + r.inverse());
    CHECK_THROWS_WITH(substitute(P("z1^-1", u), {{z1, Rat::constant(u, 0)}}), "pole hit");
}

TEST_CASE("divided differences")
{
    auto u = zu();
    CHECK(divided_difference(P("z1", u), 0, 1) == Poly::constant(u, 1));
    CHECK(divided_difference(P("z1*z2 + z1 + z2", u), 0, 1).is_zero());

    // Oracle: (swap - identity) divided by (z2 - z1) through generic exact division.
    auto oracle = [&](const Poly& f) {
        return (f.swap_variables(0, 1) - f).divide_exact(P("z2 - z1", u));
    };
    CHECK(oracle(P("z1^2", u)) == P("z1 + z2", u));
    CHECK(divided_difference(P("z1^2", u), 0, 1) == P("z1 + z2", u));

    CHECK(tilde_difference(P("z2", u), 1) == Poly::constant(u, 1));
    CHECK(tilde_difference(P("z2 + z2^-1", u), 1).is_zero());
    auto tilde_oracle = [&](const Poly& f) {
        const Rat inv(Poly::constant(u, 1), P("z2", u));
        const Rat flipped = substitute(f, {{1, inv}});
        return (flipped - Rat(f)) / Rat(P("z2^-1 - z2", u));
    };
    CHECK(tilde_oracle(P("z2^2", u)) == Rat(P("z2 + z2^-1", u)));
    CHECK(tilde_difference(P("z2^2", u), 1) == P("z2 + z2^-1", u));

    std::mt19937 rng(20061001);
    for (int trial = 0; trial < 25; ++trial) {
        const Poly f = random_poly(rng, u, 8, 3);
        const Poly d = divided_difference(f, 0, 1);
        CHECK(d.swap_variables(0, 1) == d);
        CHECK(divided_difference(d, 0, 1).is_zero());
        CHECK(d == oracle(f));

        const Poly t = tilde_difference(f, 1);
        CHECK(Rat(t) == tilde_oracle(f));
        const Poly g = f + f.map_monomials([&] {
            std::vector<Poly::Image> ims;
            for (std::size_t v = 0; v < u->size(); ++v) ims.push_back(Poly::identity_image(*u, v));
            ims[1].exps[1] = -1;
            return ims;
        }());
        CHECK(tilde_difference(g, 1).is_zero());
    }
}

TEST_CASE("degree profiles")
{
    auto u = zu();
    const Poly base = P("(z1*z2^-1 - q^-2)*(z2 - q^-1*z1^-1)", u);
    CHECK(base.degree_profile(0) == std::pair{-1, 1});
    const std::vector<std::size_t> zs{0, 1};
    CHECK(base.total_degree_profile(zs) == std::pair{-1, 1});
    CHECK(Poly::constant(u, 1).degree_profile(0) == std::pair{0, 0});
    CHECK_THROWS_WITH(Poly(u).degree_profile(0), "degree of zero");
}

TEST_CASE("divisibility")
{
    auto u = zu();
    const Poly base = P("(z1*z2^-1 - q^-2)*(z2 - q^-1*z1^-1)", u);
    const auto h = divides(P("q*z1 - q^-1*z2", u), base);
    REQUIRE(h.has_value());
    CHECK(*h * P("q*z1 - q^-1*z2", u) == base);

    const auto h2 = divides(P("z1", u), P("z1*z2 + z1", u));
    REQUIRE(h2.has_value());
    CHECK(*h2 == P("z2 + 1", u));
    CHECK_FALSE(divides(P("z1 - 1", u), P("z1 + 1", u)).has_value());
    CHECK_THROWS_WITH(P("z1 + 1", u).divide_exact(P("z1 - 1", u)), "inexact polynomial division");
}

TEST_CASE("fraction normalization")
{
    auto u = zu();
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Poly f = random_poly(rng, u, 5, 2);
        Poly g = random_poly(rng, u, 3, 2);
        if (g.is_zero()) continue;
        const Rat r(f * g, g);
        CHECK(r.is_polynomial());
        CHECK(r.num() == f);
    }
    const Rat x(P("z1 + 1", u), P("2*z1^3 - 2*z1^2", u));
    CHECK(x.den().leading_term().coeff == 1);
    CHECK(x.den().degree_profile(0).first == 0);
    CHECK(x * x.inverse() == Rat::constant(u, 1));
    CHECK_THROWS_WITH(x / Rat(Poly(u)), "zero denominator");
}

TEST_CASE("dense univariate helpers")
{
    using UP = RationalPolynomial;
    const UP p(std::vector<BigRational>{9, 18, 6});
    CHECK(p(BigRational(1)) == 33);
    CHECK(p.derivative()(BigRational(1)) == 30);
    const std::vector<BigRational> xs{0, 1, 2}, ys{p(0), p(1), p(2)};
    CHECK(UP::interpolate(xs, ys) == p);
    const UP a = p * UP(std::vector<BigRational>{1, 1});
    CHECK(gcd(a, UP(std::vector<BigRational>{-1, 0, 1})) == UP(std::vector<BigRational>{1, 1}));
    CHECK(p.str() == "6*a^2+18*a+9");
}
