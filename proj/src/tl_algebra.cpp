#include "loopqkz/tl_algebra.hpp"

#include <string>

namespace loopqkz {

Matrix<RationalPolynomial> operator_matrix(const PatternBasis& basis, const TLGenerator& g)
{
    return operator_matrix(basis, g, RationalPolynomial::x());
}

namespace {

using PM = Matrix<RationalPolynomial>;

PM mul(const PM& a, const PM& b) { return a.lazyProduct(b); }

std::string name(const TLGenerator& g)
{
    return g.kind == TLGenerator::Kind::F ? std::string("f") : "e" + std::to_string(g.site);
}

}  // namespace

Report verify_tl_relations(int L)
{
    const PatternBasis basis(L);
    const RationalPolynomial t = RationalPolynomial::x();
    std::vector<PM> e(static_cast<std::size_t>(L));
    for (int i = 1; i < L; ++i) e[static_cast<std::size_t>(i)] = operator_matrix(basis, TLGenerator::e(i));
    const PM f = operator_matrix(basis, TLGenerator::f());
    auto E = [&](int i) -> const PM& { return e[static_cast<std::size_t>(i)]; };
    const std::string tag = "L=" + std::to_string(L) + " ";

    Report r;
    for (int i = 1; i < L; ++i) {
        r.add(tag + "e" + std::to_string(i) + "^2 = t e" + std::to_string(i), mul(E(i), E(i)) == E(i) * t);
        if (i + 1 < L) {
            r.add(tag + "e" + std::to_string(i) + " e" + std::to_string(i + 1) + " e" + std::to_string(i) + " = e" +
                      std::to_string(i),
                  mul(mul(E(i), E(i + 1)), E(i)) == E(i));
            r.add(tag + "e" + std::to_string(i + 1) + " e" + std::to_string(i) + " e" + std::to_string(i + 1) +
                      " = e" + std::to_string(i + 1),
                  mul(mul(E(i + 1), E(i)), E(i + 1)) == E(i + 1));
        }
        for (int j = i + 2; j < L; ++j)
            r.add(tag + "[e" + std::to_string(i) + ",e" + std::to_string(j) + "] = 0",
                  mul(E(i), E(j)) == mul(E(j), E(i)));
        if (i < L - 1) r.add(tag + "[" + name(TLGenerator::e(i)) + ",f] = 0", mul(E(i), f) == mul(f, E(i)));
    }
    r.add(tag + "f^2 = f", mul(f, f) == f);
    if (L >= 2) r.add(tag + "e_{L-1} f e_{L-1} = e_{L-1}", mul(mul(E(L - 1), f), E(L - 1)) == E(L - 1));
    return r;
}

}  // namespace loopqkz
