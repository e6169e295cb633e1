#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include "loopqkz/reproduction.hpp"

#include <algorithm>
#include <iostream>

using namespace loopqkz;

namespace {

std::vector<CriterionResult> g_results;

const CriterionResult& criterion(int id)
{
    for (const auto& r : g_results)
        if (r.id == id) return r;
    throw std::logic_error("criterion did not run");
}

void require_pass(int id)
{
    const auto& r = criterion(id);
    for (const auto& c : r.report.results()) {
        CAPTURE(c.identity);
        CAPTURE(c.witness);
        CHECK(c.ok);
    }
}

}  // namespace

TEST_CASE("criterion 1: algebra relations") { require_pass(1); }
TEST_CASE("criterion 2: integrability") { require_pass(2); }
TEST_CASE("criterion 3: qKZ closed forms") { require_pass(3); }
TEST_CASE("criterion 4: qKZ self-consistency") { require_pass(4); }

// The insertion relation holds with the opposite sign for every pattern and
// L = 3, 4, 5. The criterion is run as stated and is expected to fail; the
// measured constant is pinned so any other outcome is noticed.
TEST_CASE("criterion 5: insertion recursion" * doctest::should_fail())
{
    const auto& r = criterion(5);
    for (int L = 3; L <= 5; ++L) {
        const std::string note = "L=" + std::to_string(L) + " measured normalisation -1";
        CHECK(std::find(r.notes.begin(), r.notes.end(), note) != r.notes.end());
    }
    require_pass(5);
}

TEST_CASE("criterion 6: sum rule") { require_pass(6); }
TEST_CASE("criterion 7: counting") { require_pass(7); }
TEST_CASE("criterion 8: ground state") { require_pass(8); }
TEST_CASE("criterion 9: refined density") { require_pass(9); }
TEST_CASE("criterion 10: positivity") { require_pass(10); }
TEST_CASE("criterion 11: FPL verification") { require_pass(11); }
TEST_CASE("criterion 12: leading coefficient") { require_pass(12); }

int main(int argc, char** argv)
{
    g_results = reproduce(ReproductionOptions{});
    for (const auto& r : g_results) std::cout << summary_line(r) << '\n';
    doctest::Context ctx(argc, argv);
    return ctx.run();
}
