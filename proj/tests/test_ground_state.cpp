#include "doctest.h"

#include "loopqkz/ground_state.hpp"

using namespace loopqkz;

namespace {

APolynomial A(std::vector<long> c)
{
    std::vector<BigRational> r;
    for (long v : c) r.emplace_back(v);
    return APolynomial(std::move(r));
}

const APolynomial kA = APolynomial::x();

std::vector<BigRational> rats(std::vector<long> v)
{
    return {v.begin(), v.end()};
}

void require_clean(const Report& r)
{
    for (const auto& c : r.results()) {
        CAPTURE(c.identity);
        CAPTURE(c.witness);
        CHECK(c.ok);
    }
}

}  // namespace

TEST_CASE("hamiltonian")
{
    SUBCASE("L=2 by direct action")
    {
        const auto H = hamiltonian(2);
        const PatternBasis b(2);
        const auto dots = b.index(".."), arc = b.index("()");
        // e_1 sends both patterns to "()", f sends both to ".."; every loop weighs 1.
        CHECK(H(dots, dots) == kA);
        CHECK(H(dots, arc) == kA);
        CHECK(H(arc, dots) == A({1}));
        CHECK(H(arc, arc) == A({1}));
    }
    SUBCASE("L=4 displayed matrix")
    {
        const auto H = hamiltonian(4);
        const PatternBasis b(4);
        REQUIRE(b.dimension() == 6);
        const std::vector<std::vector<APolynomial>> expected{
            {kA, kA, 0, 0, 0, 0},
            {1, 1, 1, 0, 0, 0},
            {1, 1, A({1, 1}), kA, 1, 0},
            {0, 0, 0, 1, 0, 1},
            {1, 0, 1, 0, A({1, 1}), kA},
            {0, 1, 0, 2, 1, 2}};
        for (int r = 0; r < 6; ++r)
            for (int c = 0; c < 6; ++c) {
                CAPTURE(r);
                CAPTURE(c);
                CHECK(H(r, c) == expected[r][c]);
            }
    }
    SUBCASE("column sums are L-1+a")
    {
        for (int L = 2; L <= 8; ++L) {
            const auto H = hamiltonian(L);
            for (Eigen::Index c = 0; c < H.cols(); ++c) {
                APolynomial sum;
                for (Eigen::Index r = 0; r < H.rows(); ++r) sum += H(r, c);
                CAPTURE(L);
                CHECK(sum == A({L - 1, 1}));
            }
        }
    }
}

TEST_CASE("ground state")
{
    SUBCASE("L=2")
    {
        const auto g = ground_state(2);
        CHECK(g[".."] == kA);
        CHECK(g["()"] == A({1}));
        CHECK(a_polynomial_sum(g) == A({1, 1}));
    }
    SUBCASE("L=4 displayed vector and its specialisations")
    {
        const auto g = ground_state(4);
        const std::vector<APolynomial> expected{
            kA * kA, A({0, 3}), A({0, 6, 2}), A({3}), A({0, 6, 3}), A({6, 3})};
        CHECK(g.components == expected);
        CHECK(g.at(1) == rats({1, 3, 8, 3, 9, 9}));
        CHECK(g.at(0) == rats({0, 0, 0, 3, 0, 6}));
        CHECK(a_polynomial_sum(g) == A({9, 18, 6}));
        CHECK(a_polynomial_sum(g)(1) == 33);
    }
    SUBCASE("sums for L <= 8")
    {
        const std::vector<APolynomial> sums{
            A({1}), A({1, 1}), A({4, 2}), A({9, 18, 6}), A({121, 132, 33}),
            A({676, 2028, 1430, 286}), A({28900, 49980, 26520, 4420}),
            A({417316, 1669264, 1833994, 768740, 109820})};
        for (int L = 1; L <= 8; ++L) {
            CAPTURE(L);
            const auto g = ground_state(L);
            require_clean(verify_ground_state(g));
            CHECK(a_polynomial_sum(g) == sums[L - 1]);
        }
    }
    SUBCASE("interpolation agrees with fraction-free elimination")
    {
        for (int L = 1; L <= 6; ++L) {
            CAPTURE(L);
            CHECK(ground_state(L).components == ground_state_fraction_free(L).components);
        }
    }
}

TEST_CASE("tau' components")
{
    const auto t = RationalPolynomial::x();
    const auto t2 = t * t;
    auto vec = [](int L) { return tau_prime_components(build_solution(generic_parameters(L))); };

    SUBCASE("to_tau_prime")
    {
        const auto u = make_universe({"u"});
        const auto uvar = RationalLaurent::variable(u, "u", 1);
        const auto uinv = RationalLaurent::variable(u, "u", -1);
        CHECK(to_tau_prime(uvar * uvar + uinv * uinv) == t2 - RationalPolynomial(2));
        CHECK_THROWS_WITH(to_tau_prime(uvar + uvar * uvar), "not inversion-invariant");
    }
    SUBCASE("printed vectors")
    {
        CHECK(vec(2).components == std::vector<RationalPolynomial>{1, 1});
        CHECK(vec(3).components == std::vector<RationalPolynomial>{1, 2, t2 + 2});
        const auto v4 = vec(4);
        CHECK(v4.components == std::vector<RationalPolynomial>{
                                   1, 3, 2 * (t2 + 3), t2 + 2, t2 * t2 + 3 * t2 + 5, 2 * t2 + 7});
        CHECK(v4.nonnegative);
    }
    SUBCASE("tau' = 1 reproduces the ground state at a = 1")
    {
        for (int L = 2; L <= 4; ++L) {
            CAPTURE(L);
            const auto v = vec(L);
            const auto g = ground_state(L).at(1);
            const BigRational ratio = g[0] / v.components[0](1);
            for (std::size_t k = 0; k < g.size(); ++k) CHECK(v.components[k](1) * ratio == g[k]);
        }
    }
}

TEST_CASE("stochastic point")
{
    for (int L = 2; L <= 4; ++L) {
        CAPTURE(L);
        const auto sol = build_solution(stochastic_parameters(L));
        require_clean(scattering_fixed_point(sol, 10, 7));
        const auto g = ground_state(L);
        for (long zeta : {1L, 2L}) require_clean(homogeneous_limit(sol, g, zeta));
        require_clean(homogeneous_limit(sol, g, BigRational(1, 3)));
    }
}
