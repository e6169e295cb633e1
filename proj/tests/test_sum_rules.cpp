#include "doctest.h"

#include "loopqkz/ground_state.hpp"
#include "loopqkz/parse.hpp"
#include "loopqkz/sampling.hpp"
#include "loopqkz/sum_rules.hpp"

#include <algorithm>
#include <numeric>

using namespace loopqkz;

namespace {

void require_clean(const Report& r)
{
    for (const auto& c : r.results()) {
        CAPTURE(c.identity);
        CAPTURE(c.witness);
        CHECK(c.ok);
    }
}

CyclotomicLaurent integer_laurent(const std::string& text, const UniversePtr& u)
{
    return specialize<Cyclotomic6, BigRational>(parse_laurent<BigRational>(text, u), u, {});
}

/// Leibniz determinant, independent of the elimination code.
BigRational leibniz(const std::vector<std::vector<BigRational>>& m)
{
    std::vector<int> perm(m.size());
    std::iota(perm.begin(), perm.end(), 0);
    BigRational total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
        BigRational term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < perm.size(); ++i) term *= m[i][perm[i]];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

BigRational chi_oracle(const std::vector<BigRational>& x, const std::vector<int>& h)
{
    const std::size_t n = x.size();
    std::vector<std::vector<BigRational>> num(n, std::vector<BigRational>(n)), den = num;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            num[i][j] = power(x[i], h[j]) - power(x[i], -h[j]);
            den[i][j] = power(x[i], static_cast<int>(j + 1)) - power(x[i], -static_cast<int>(j + 1));
        }
    return leibniz(num) / leibniz(den);
}

std::vector<std::string> z_names(int n)
{
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back("z" + std::to_string(i));
    return v;
}

}  // namespace

TEST_CASE("symplectic exponents")
{
    CHECK(symplectic_exponents(6) == std::vector<int>{1, 2, 4, 5, 7, 8});
}

TEST_CASE("printed sum rules")
{
    const auto sol2 = build_solution(stochastic_parameters(2));
    const auto& u2 = sol2.params.universe;
    CHECK(sum_rule(sol2) == integer_laurent("z1+z2+zeta+z1^-1+z2^-1+zeta^-1", u2));

    const auto sol3 = build_solution(stochastic_parameters(3));
    const auto& u3 = sol3.params.universe;
    const auto first = integer_laurent("z1+z2+z3+z1^-1+z2^-1+z3^-1", u3);
    const auto second = integer_laurent(
        "z1*z2+z1*z3+z2*z3+z1^-1*z2^-1+z1^-1*z3^-1+z2^-1*z3^-1"
        "+(zeta+zeta^-1)*(z1+z2+z3+z1^-1+z2^-1+z3^-1)"
        "+z1*z2^-1+z1*z3^-1+z2*z3^-1+z2*z1^-1+z3*z1^-1+z3*z2^-1+3",
        u3);
    CHECK(sum_rule(sol3) == first * second);

    // The generic solution specialised at u = eps gives the same sums.
    CHECK(sum_rule(build_solution(generic_parameters(2))) == sum_rule(sol2));
    CHECK(sum_rule(build_solution(generic_parameters(3))) == sum_rule(sol3));
    CHECK(sum_rule(build_solution(stochastic_parameters(1))) == CyclotomicLaurent::constant(
                                                                    stochastic_parameters(1).universe, Cyclotomic6(1)));
}

TEST_CASE("symplectic characters")
{
    SUBCASE("chi_1 and chi_2 are trivial")
    {
        const auto u = make_universe({"z1", "z2"});
        const auto n1 = z_names(1), n2 = z_names(2);
        CHECK(symplectic_char<BigRational>(1, u, n1) == RationalLaurent::constant(u, 1));
        CHECK(symplectic_char<BigRational>(2, u, n2) == RationalLaurent::constant(u, 1));
    }
    SUBCASE("determinant ratio against the Leibniz oracle and the symbolic quotient")
    {
        RationalSampler rng(11);
        for (int n = 1; n <= 4; ++n) {
            const auto names = z_names(n);
            const auto u = make_universe(names);
            const auto symbolic = symplectic_char<BigRational>(n, u, names);
            for (int k = 0; k < 3; ++k) {
                std::vector<BigRational> x;
                while (static_cast<int>(x.size()) < n) {
                    const BigRational v = rng.next();
                    bool fresh = v * v != 1;
                    for (const auto& w : x) fresh = fresh && v + 1 / v != w + 1 / w;
                    if (fresh) x.push_back(v);
                }
                CAPTURE(n);
                const BigRational expected = chi_oracle(x, symplectic_exponents(n));
                CHECK(symplectic_char<BigRational>(n, std::span<const BigRational>(x)) == expected);
                CHECK(symbolic.evaluate<BigRational>(x) == expected);
            }
        }
    }
    SUBCASE("degenerate points")
    {
        const std::vector<BigRational> x{2, BigRational(1, 2)};
        CHECK_THROWS_WITH(symplectic_char<BigRational>(2, std::span<const BigRational>(x)), "Weyl denominator zero");
    }
    SUBCASE("recurrence at z_n = q^2 z_{n-1}")
    {
        for (int n = 2; n <= 6; ++n) require_clean(verify_char_recurrence(n, 5, 3));
    }
    SUBCASE("homogeneous values")
    {
        const std::vector<long> scaled{1, 1, 2, 3, 11, 26, 170};
        for (int n = 1; n <= 7; ++n) {
            CAPTURE(n);
            CHECK(symplectic_char_homogeneous(n).scaled == scaled[n - 1]);
            CHECK(scaled_char_product(n) == scaled[n - 1]);
        }
        CHECK(symplectic_char_homogeneous(3).value == 6);
        CHECK(symplectic_char_homogeneous(4).value == 27);
        // The symbolic character at all ones is its coefficient sum.
        for (int n = 1; n <= 5; ++n) {
            const auto names = z_names(n);
            const auto chi = symplectic_char<BigRational>(n, make_universe(names), names);
            BigRational total = 0;
            for (const auto& t : chi.terms()) total += t.coeff;
            CAPTURE(n);
            CHECK(total == symplectic_char_homogeneous(n).value);
        }
    }
    SUBCASE("total degree width")
    {
        // Bounded by 2 ceil(n(n-2)/4); attained for n <= 5.
        for (int n = 1; n <= 5; ++n) {
            const auto names = z_names(n);
            const auto chi = symplectic_char<BigRational>(n, make_universe(names), names);
            std::vector<std::size_t> vars(static_cast<std::size_t>(n));
            std::iota(vars.begin(), vars.end(), std::size_t{0});
            const auto [lo, hi] = chi.total_degree_profile(vars);
            CAPTURE(n);
            const int bound = n == 1 ? 0 : 2 * ((n * (n - 2) + 3) / 4);
            CHECK(hi - lo == bound);
        }
    }
    SUBCASE("confluent edge character")
    {
        // Symbolic character in z_1..z_{n-1}, zeta, with z_i set to 1 afterwards.
        const auto target = make_universe({"zeta"});
        for (int n = 1; n <= 5; ++n) {
            auto names = z_names(n);
            names.back() = "zeta";
            const auto chi = symplectic_char<BigRational>(n, make_universe(names), names);
            std::vector<std::pair<std::string, BigRational>> ones;
            for (int i = 0; i + 1 < n; ++i) ones.emplace_back(names[static_cast<std::size_t>(i)], 1);
            CAPTURE(n);
            CHECK(specialize<BigRational, BigRational>(chi, target, ones) == symplectic_char_edge(n));
        }
    }
}

TEST_CASE("sum rule factorisation")
{
    for (int L = 2; L <= 4; ++L) {
        CAPTURE(L);
        const auto sol = build_solution(stochastic_parameters(L));
        require_clean(verify_zdet(sol, 10, 5, true));
        require_clean(verify_sum_rule_recurrence(sol));
        require_clean(verify_sum_rule_symmetry(sum_rule(sol), L));
        require_clean(verify_homogeneous_count(sol));
        require_clean(verify_zdet_fixed_vector(L, 5, 9));

        // The fixed-vector value agrees with the built solution.
        RationalSampler rng(21);
        const auto Z = sum_rule(sol);
        for (int k = 0; k < 3; ++k) {
            std::vector<BigRational> z;
            for (int i = 0; i < L; ++i) z.push_back(rng.next());
            const BigRational zeta = rng.next_positive();
            std::vector<Cyclotomic6> values(z.begin(), z.end());
            values.push_back(Cyclotomic6(zeta));
            Cyclotomic6 direct;
            try {
                direct = sum_rule_at(L, z, zeta);
            } catch (const std::domain_error&) {
                continue;
            }
            CHECK(direct == Z.evaluate<Cyclotomic6>(values));
        }
    }
    require_clean(verify_zdet_fixed_vector(5, 3, 2));
}

TEST_CASE("counting")
{
    const std::vector<long> counts{1, 1, 2, 6, 33, 286, 4420};
    for (int L = 0; L <= 6; ++L) CHECK(hvsasm_count(L) == counts[static_cast<std::size_t>(L)]);
    for (int L = 2; L <= 5; ++L) require_clean(verify_leading_coefficient(L));
    // Ground-state sums at a = 1 are the same counts.
    for (int L = 1; L <= 6; ++L) CHECK(a_polynomial_sum(ground_state(L))(1) == counts[static_cast<std::size_t>(L)]);
}

TEST_CASE("schur identity")
{
    const std::vector<long> h3{1, 2, 5}, h2{1, 2};
    CHECK(schur_sum(0, h3) == 0);
    CHECK(schur_sum(1, h3) == 0);
    // Literal value for N = 2, n = 1 is 1/(2-1) + 2/(1-2) = -1.
    CHECK(schur_sum(1, h2) == -1);
    CHECK(schur_sum(2, h2) == -3);
    CHECK(one_row_schur(0, h2) == 1);
    CHECK(one_row_schur(1, h2) == 3);
    CHECK(one_row_schur(2, h2) == 1 + 2 + 4);
    CHECK(schur_sign(2) == -1);
    CHECK(schur_sign(3) == 1);
    const std::vector<long> repeated{1, 1};
    CHECK_THROWS_WITH(schur_sum(1, repeated), "repeated exponent");
    require_clean(verify_schur_identity(4, 6));
}

TEST_CASE("refined density")
{
    CHECK(rho(1).closed == 0);
    CHECK(rho(2).closed == BigRational(1, 2));
    CHECK(rho(2).direct == BigRational(1, 2));
    CHECK(rho(4).closed == BigRational(10, 11));
    CHECK(rho(4).direct == BigRational(10, 11));
    for (int L = 1; L <= 8; ++L) {
        CAPTURE(L);
        const auto r = rho(L);
        CHECK(r.ok());
        require_clean(verify_rho(r));
    }
}
