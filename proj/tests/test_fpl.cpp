#include "doctest.h"

#include "loopqkz/fpl.hpp"
#include "loopqkz/sum_rules.hpp"

#include <algorithm>
#include <set>

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

std::vector<std::size_t> counts(const FplClassification& cls)
{
    std::vector<std::size_t> out;
    for (const auto& c : cls.classes) out.push_back(c.count);
    return out;
}

}  // namespace

TEST_CASE("asm predicates")
{
    AsmMatrix id(3);
    for (int i = 1; i <= 3; ++i) id(i, i) = 1;
    CHECK(is_asm(id));
    CHECK_FALSE(is_hv_symmetric(id));
    CHECK(refined_weight(id) == 0);

    AsmMatrix alt(3);
    alt(1, 2) = alt(2, 1) = alt(2, 3) = alt(3, 2) = 1;
    alt(2, 2) = -1;
    CHECK(is_asm(alt));
    CHECK(is_hv_symmetric(alt));

    AsmMatrix bad = alt;
    bad(2, 2) = 0;
    CHECK_FALSE(is_asm(bad));
    CHECK_THROWS(asm_to_fpl(bad));
}

TEST_CASE("enumeration counts")
{
    CHECK(enumerate_hvsfpl(3).size() == 1);
    const std::vector<std::size_t> expected{2, 6, 33, 286};
    for (int L = 2; L <= 5; ++L) {
        const int n = 2 * L + 3;
        CAPTURE(n);
        CHECK(enumerate_hvsfpl(n).size() == expected[static_cast<std::size_t>(L - 2)]);
        CHECK(enumerate_hvsasm(n).size() == expected[static_cast<std::size_t>(L - 2)]);
        CHECK(BigInt(static_cast<unsigned long>(expected[static_cast<std::size_t>(L - 2)])) == hvsasm_count(L));
    }
    CHECK_THROWS(enumerate_hvsfpl(8));
}

TEST_CASE("fpl and asm enumerations agree through the bijection")
{
    for (int n = 3; n <= 11; n += 2) {
        CAPTURE(n);
        const auto fpls = enumerate_hvsfpl(n);
        std::vector<FplConfig> mapped;
        for (const auto& m : enumerate_hvsasm(n)) {
            CHECK(is_asm(m));
            CHECK(is_hv_symmetric(m));
            const auto c = asm_to_fpl(m);
            CHECK(fpl_to_asm(c) == m);
            mapped.push_back(c);
        }
        std::sort(mapped.begin(), mapped.end());
        CHECK(mapped == fpls);
        for (const auto& c : fpls) {
            CHECK(is_valid_fpl(c));
            CHECK(is_hv_symmetric(c));
        }
        CHECK(std::set<FplConfig>(fpls.begin(), fpls.end()).size() == fpls.size());
    }
}

TEST_CASE("boundary convention")
{
    // The external edge above the central column is occupied, so the central
    // column is one straight vertical path.
    for (int n = 3; n <= 11; n += 2) {
        const int m = (n + 1) / 2;
        for (const auto& c : enumerate_hvsfpl(n)) {
            for (int i = 0; i <= n; ++i) CHECK(c.vertical(i, m));
        }
    }
}

TEST_CASE("classification")
{
    SUBCASE("n = 7")
    {
        const auto cls = classify(enumerate_hvsfpl(7));
        CHECK(cls.L == 2);
        CHECK(counts(cls) == std::vector<std::size_t>{1, 1});
        std::multiset<int> weights;
        for (const auto& m : enumerate_hvsasm(7)) weights.insert(refined_weight(m));
        CHECK(weights == std::multiset<int>{0, 1});
    }
    SUBCASE("n = 9")
    {
        CHECK(counts(classify(enumerate_hvsfpl(9))) == std::vector<std::size_t>{1, 2, 3});
    }
    SUBCASE("n = 11")
    {
        const auto cls = classify(enumerate_hvsfpl(11));
        CHECK(counts(cls) == std::vector<std::size_t>{1, 3, 8, 3, 9, 9});
        CHECK(cls.patterns[0].encoding() == "....");
        CHECK(cls.classes[0].weighted == APolynomial(std::vector<BigRational>{0, 0, 1}));
        CHECK(cls.path_weight_agreements == cls.total);
    }
}

TEST_CASE("conjectures against the ground state")
{
    for (int L = 2; L <= 5; ++L) {
        CAPTURE(L);
        const auto cls = classify(enumerate_hvsfpl(2 * L + 3));
        const auto r = verify_conjectures(L, cls);
        require_clean(r);
        for (const auto& c : r.results()) CHECK(c.identity.find("VERIFIED") != std::string::npos);
    }
}
