#include "doctest.h"

#include "loopqkz/cyclotomic6.hpp"
#include "loopqkz/operators.hpp"

using namespace loopqkz;

namespace {

const CheckResult* find(const Report& r, const std::string& needle)
{
    for (const auto& c : r.results())
        if (c.identity.find(needle) != std::string::npos) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("R and K reduce to the identity at z = 1")
{
    const PatternBasis basis(4);
    const SpectralParameters<BigRational> p{BigRational(2, 3), BigRational(5, 7), std::nullopt};
    for (std::size_t k = 0; k < basis.dimension(); ++k) {
        const auto v = unit_vector(basis, k, BigRational(1));
        for (int i = 1; i < 4; ++i) CHECK(apply_R(basis, p, i, BigRational(1), v) == v);
        CHECK(apply_K(basis, p, BigRational(1), v) == v);
    }
}

TEST_CASE("poles are reported")
{
    const PatternBasis basis(2);
    const SpectralParameters<BigRational> p{BigRational(2), BigRational(3), std::nullopt};
    const auto v = unit_vector(basis, 0, BigRational(1));
    CHECK_THROWS_WITH(apply_R(basis, p, 1, BigRational(4), v), "R-matrix pole");
    // q z = zeta / q at z = zeta / q^2.
    CHECK_THROWS_WITH(apply_K(basis, p, BigRational(3, 4), v), "K-matrix pole");
}

TEST_CASE("symbolic integrability for small sizes")
{
    for (int L = 2; L <= 3; ++L) {
        const Report r = verify_integrability_symbolic(L);
        CAPTURE(L);
        for (const auto& c : r.results()) {
            CAPTURE(c.identity);
            CHECK(c.ok);
        }
    }
}

TEST_CASE("sampled integrability")
{
    IntegrabilityOptions opt;
    opt.samples = 20;
    opt.seed = 11;
    for (int L = 2; L <= 4; ++L) {
        const Report r = verify_integrability_sampled(L, opt);
        CAPTURE(L);
        CHECK(r.ok());
        if (L == 4) CHECK(find(r, "far commutation R1 R3") != nullptr);
    }
}

TEST_CASE("loop weight perturbation breaks Yang-Baxter")
{
    IntegrabilityOptions opt;
    opt.samples = 3;
    opt.tau_shift = 1;
    const Report r = verify_integrability_sampled(3, opt);
    const CheckResult* ybe = find(r, "Yang-Baxter");
    REQUIRE(ybe != nullptr);
    CHECK_FALSE(ybe->ok);
    CHECK_FALSE(ybe->witness.empty());
    CHECK_FALSE(verify_integrability_symbolic(3, 1).ok());
}

TEST_CASE("scattering matrices")
{
    IntegrabilityOptions opt;
    opt.samples = 5;
    opt.seed = 3;
    for (int L = 2; L <= 4; ++L) {
        CAPTURE(L);
        CHECK(verify_scattering_commutation(L, opt).ok());
        CHECK(verify_stochastic_covector(L, opt).ok());
    }
}
