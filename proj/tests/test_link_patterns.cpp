#include "doctest.h"

#include "loopqkz/link_pattern.hpp"
#include "loopqkz/tl_algebra.hpp"

using namespace loopqkz;

namespace {

std::vector<std::string> encodings(const std::vector<LinkPattern>& ps)
{
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.encoding());
    return out;
}

long binomial(long n, long k)
{
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("enumeration and canonical order")
{
    CHECK(encodings(enumerate_patterns(1)) == std::vector<std::string>{"."});
    CHECK(encodings(enumerate_patterns(3)) == std::vector<std::string>{"...", ".()", "()."});
    CHECK(encodings(enumerate_patterns(4)) ==
          std::vector<std::string>{"....", "..()", ".().", "(())", "()..", "()()"});
    for (int L = 1; L <= 12; ++L) {
        const auto ps = enumerate_patterns(L);
        CHECK(static_cast<long>(ps.size()) == binomial(L, L / 2));
        for (std::size_t k = 1; k < ps.size(); ++k) CHECK(ps[k - 1] < ps[k]);
    }
}

TEST_CASE("pattern validity")
{
    CHECK_FALSE(LinkPattern::parse("(.)").has_value());
    CHECK_FALSE(LinkPattern::parse(")(").has_value());
    CHECK_FALSE(LinkPattern::parse("((").has_value());
    CHECK(LinkPattern::parse(".(()).").has_value());
    CHECK_THROWS_AS(LinkPattern("(.)"), std::invalid_argument);
    const LinkPattern p("(())");
    CHECK(p.partner(1) == 4);
    CHECK(p.partner(3) == 2);
    CHECK(LinkPattern("..").insert_arc(2) == LinkPattern(".().") );
}

TEST_CASE("generator action")
{
    auto w = apply_e(1, LinkPattern("()"));
    CHECK(w.pattern == LinkPattern("()"));
    CHECK(w.loop_count == 1);
    w = apply_e(1, LinkPattern(".."));
    CHECK(w.pattern == LinkPattern("()"));
    CHECK(w.loop_count == 0);
    w = apply_e(2, LinkPattern("()()"));
    CHECK(w.pattern == LinkPattern("(())"));
    CHECK(w.loop_count == 0);
    CHECK(apply_e(1, LinkPattern(".()")).pattern == LinkPattern("()."));
    CHECK(apply_e(2, LinkPattern("().")).pattern == LinkPattern(".()"));
    CHECK_THROWS_WITH(apply_e(3, LinkPattern("...")), "invalid site index");

    CHECK(apply_f(LinkPattern("()")).pattern == LinkPattern(".."));
    CHECK(apply_f(LinkPattern("..")).pattern == LinkPattern(".."));
    CHECK(apply_f(LinkPattern("()()")).pattern == LinkPattern("().."));
    CHECK(apply_f(LinkPattern("(())")).pattern == LinkPattern(".()."));
    CHECK(apply_f(LinkPattern("()()")).loop_count == 0);
}

TEST_CASE("antecedents")
{
    CHECK(encodings(antecedents(TLGenerator::e(1), LinkPattern("()."))) == std::vector<std::string>{"...", ".()"});
    CHECK(encodings(antecedents(TLGenerator::f(), LinkPattern("..."))) == std::vector<std::string>{".()"});
    CHECK(antecedents(TLGenerator::f(), LinkPattern("()." )).empty());
    CHECK_THROWS_WITH(antecedents(TLGenerator::f(), LinkPattern(".()")), "target not in image shape");
    CHECK_THROWS_WITH(antecedents(TLGenerator::e(2), LinkPattern("().")), "target not in image shape");

    // Consistency with forward application, exhaustively for small sizes.
    for (int L = 2; L <= 7; ++L) {
        const PatternBasis basis(L);
        std::vector<TLGenerator> gens{TLGenerator::f()};
        for (int i = 1; i < L; ++i) gens.push_back(TLGenerator::e(i));
        for (const auto& g : gens)
            for (std::size_t t = 0; t < basis.dimension(); ++t) {
                const auto& tp = basis.pattern(t);
                const bool shape = g.kind == TLGenerator::Kind::F ? !tp.paired(L) : tp.has_arc(g.site, g.site + 1);
                if (!shape) continue;
                const auto ante = basis.antecedents(g, t);
                for (std::size_t k = 0; k < basis.dimension(); ++k) {
                    const bool listed = std::find(ante.begin(), ante.end(), k) != ante.end();
                    CHECK(listed == (k != t && apply(g, basis.pattern(k)).pattern == tp));
                }
            }
    }
}

TEST_CASE("operator matrices")
{
    const PatternBasis b2(2);
    const auto m = operator_matrix(b2, TLGenerator::e(1), 7L);
    Matrix<long> expect(2, 2);
    expect << 0, 0, 1, 7;
    CHECK(m == expect);

    // Boundary Hamiltonian at loop weight 1 for L=4, with a = 5 standing in for the symbol.
    const PatternBasis b4(4);
    const long a = 5;
    Matrix<long> h = a * operator_matrix(b4, TLGenerator::f(), 1L);
    for (int i = 1; i < 4; ++i) h += operator_matrix(b4, TLGenerator::e(i), 1L);
    Matrix<long> printed(6, 6);
    printed << a, a, 0, 0, 0, 0,
               1, 1, 1, 0, 0, 0,
               1, 1, 1 + a, a, 1, 0,
               0, 0, 0, 1, 0, 1,
               1, 0, 1, 0, 1 + a, a,
               0, 1, 0, 2, 1, 2;
    CHECK(h == printed);

    for (int L = 2; L <= 8; ++L) {
        const PatternBasis b(L);
        Matrix<long> hl = a * operator_matrix(b, TLGenerator::f(), 1L);
        for (int i = 1; i < L; ++i) hl += operator_matrix(b, TLGenerator::e(i), 1L);
        for (Eigen::Index c = 0; c < hl.cols(); ++c) CHECK(hl.col(c).sum() == L - 1 + a);
    }
}

TEST_CASE("symbolic generator matrices")
{
    const PatternBasis b2(2);
    const auto m = operator_matrix(b2, TLGenerator::e(1));
    CHECK(m(1, 1) == RationalPolynomial::x());
    CHECK(m(1, 0) == RationalPolynomial(1L));
    CHECK(m(0, 0).is_zero());
}

TEST_CASE("Temperley-Lieb relations over Q[t]")
{
    for (int L = 1; L <= 8; ++L) {
        const Report r = verify_tl_relations(L);
        CAPTURE(L);
        CHECK(r.ok());
    }
}
