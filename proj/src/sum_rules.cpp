#include "loopqkz/sum_rules.hpp"

#include "loopqkz/ground_state.hpp"
#include "loopqkz/linalg.hpp"
#include "loopqkz/operators.hpp"
#include "loopqkz/sampling.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace loopqkz {

namespace {

BigInt ipow(long base, unsigned long e)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), BigInt(base).get_mpz_t(), e);
    return r;
}

BigRational pow3(long e)
{
    const BigRational p(ipow(3, static_cast<unsigned long>(e >= 0 ? e : -e)));
    return e >= 0 ? p : inverse(p);
}

long ceil_div(long a, long b)
{
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

std::string describe_point(std::span<const BigRational> z, const BigRational& zeta)
{
    std::string s = "z=(";
    for (std::size_t i = 0; i < z.size(); ++i) s += (i ? "," : "") + to_string(z[i]);
    return s + ") zeta=" + to_string(zeta);
}

template <class T>
T chi_ratio(int n, std::span<const T> x)
{
    const auto h = symplectic_exponents(n);
    Matrix<T> num(n, n), den(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            num(i, j) = power(x[i], h[j]) - power(x[i], -h[j]);
            den(i, j) = power(x[i], j + 1) - power(x[i], -(j + 1));
        }
    const T d = determinant(den);
    if (is_zero(d)) throw std::domain_error("Weyl denominator zero");
    return determinant(num) / d;
}

/// Stochastic universe z1..zL, zeta.
UniversePtr sum_rule_universe(int L)
{
    return spectral_universe(static_cast<std::size_t>(L), {"zeta"});
}

CyclotomicLaurent chi_product(int L, const UniversePtr& universe)
{
    std::vector<std::string> z;
    for (int i = 1; i <= L; ++i) z.push_back("z" + std::to_string(i));
    auto zz = z;
    zz.push_back("zeta");
    return symplectic_char<Cyclotomic6>(L, universe, z) * symplectic_char<Cyclotomic6>(L + 1, universe, zz);
}

Cyclotomic6 chi_product_at(int L, std::span<const BigRational> z, const BigRational& zeta)
{
    std::vector<BigRational> zz(z.begin(), z.end());
    zz.push_back(zeta);
    return Cyclotomic6(symplectic_char<BigRational>(L, z) * symplectic_char<BigRational>(L + 1, std::span<const BigRational>(zz)));
}

/// Draws L + 1 rationals with pairwise distinct values of x + 1/x and x != +-1,
/// so that both Weyl denominators are nonzero.
std::vector<BigRational> generic_point(RationalSampler& rng, int count)
{
    for (;;) {
        std::vector<BigRational> p;
        for (int i = 0; i < count; ++i) p.push_back(rng.next());
        bool ok = true;
        for (int i = 0; i < count && ok; ++i) {
            if (p[i] * p[i] == 1) ok = false;
            for (int j = 0; j < i && ok; ++j)
                if (p[i] + 1 / p[i] == p[j] + 1 / p[j]) ok = false;
        }
        if (ok) return p;
    }
}

}  // namespace

std::vector<int> symplectic_exponents(int n)
{
    std::vector<int> h;
    for (int j = 1; j <= n; ++j) h.push_back(j + (j + 1) / 2 - 1);
    return h;
}

CyclotomicLaurent sum_rule(const QkzSolution<Cyclotomic6>& sol)
{
    CyclotomicLaurent Z(sol.params.universe);
    for (const auto& c : sol.components) Z += c;
    return Z;
}

CyclotomicLaurent sum_rule(const QkzSolution<BigRational>& sol)
{
    const auto target = sum_rule_universe(sol.params.L);
    const std::vector<std::pair<std::string, Cyclotomic6>> bind{{"u", Cyclotomic6::epsilon()}};
    CyclotomicLaurent Z(target);
    for (const auto& c : sol.components) Z += specialize<Cyclotomic6, BigRational>(c, target, bind);
    return Z;
}

template <class C>
MultiLaurent<C> symplectic_char(int n, const UniversePtr& universe, std::span<const std::string> names)
{
    using Poly = MultiLaurent<C>;
    if (static_cast<int>(names.size()) != n) throw std::invalid_argument("one variable per row");
    const auto h = symplectic_exponents(n);
    std::vector<Poly> x, xi;
    for (const auto& name : names) {
        x.push_back(Poly::variable(universe, name));
        xi.push_back(Poly::variable(universe, name, -1));
    }
    // Laplace expansion along rows in order, memoised on the set of used columns.
    std::map<unsigned, Poly> memo;
    std::function<Poly(unsigned)> minor = [&](unsigned used) -> Poly {
        const int row = std::popcount(used);
        if (row == n) return Poly::constant(universe, C(1));
        if (auto it = memo.find(used); it != memo.end()) return it->second;
        Poly acc(universe);
        int sign = 1;
        for (int j = 0; j < n; ++j) {
            if (used & (1U << j)) continue;
            const Poly entry = Poly::variable(universe, names[row], h[j]) - Poly::variable(universe, names[row], -h[j]);
            const Poly term = entry * minor(used | (1U << j));
            acc = sign > 0 ? acc + term : acc - term;
            sign = -sign;
        }
        return memo[used] = acc;
    };
    Poly num = minor(0);
    auto divide = [&](const Poly& factor) {
        auto q = num.exact_quotient(factor);
        if (!q) throw std::logic_error("symplectic numerator not divisible by the Weyl denominator");
        num = std::move(*q);
    };
    for (int i = 0; i < n; ++i) divide(x[i] - xi[i]);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) divide(x[j] + xi[j] - x[i] - xi[i]);
    return num;
}

template <class T>
T symplectic_char(int n, std::span<const T> points)
{
    if (static_cast<int>(points.size()) != n) throw std::invalid_argument("one point per row");
    if (n == 0) return T(1);
    return chi_ratio<T>(n, points);
}

RationalLaurent symplectic_char_edge(int n)
{
    const auto universe = make_universe({"zeta"});
    const auto h = symplectic_exponents(n);
    // Cofactors of the last row in the confluent matrices.
    auto edge = [&](const std::vector<long>& cols) {
        RationalLaurent acc(universe);
        for (int j = 0; j < n; ++j) {
            Matrix<BigRational> m(n - 1, n - 1);
            for (int k = 0; k < n - 1; ++k)
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    m(k, cc++) = BigRational(ipow(cols[c], 2 * k + 1));
                }
            BigRational cof = n == 1 ? BigRational(1) : determinant(m);
            if ((n - 1 + j) % 2) cof = -cof;
            const int e = static_cast<int>(cols[j]);
            acc += cof * (RationalLaurent::variable(universe, "zeta", e) - RationalLaurent::variable(universe, "zeta", -e));
        }
        return acc;
    };
    std::vector<long> hs(h.begin(), h.end()), js;
    for (int j = 1; j <= n; ++j) js.push_back(j);
    const auto q = edge(hs).exact_quotient(edge(js));
    if (!q) throw std::logic_error("confluent ratio not a Laurent polynomial");
    return *q;
}

HomogeneousChar symplectic_char_homogeneous(int n)
{
    const auto h = symplectic_exponents(n);
    BigRational v = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            if (i < j) v *= make_rational(h[j - 1] - h[i - 1], j - i);
            v *= make_rational(h[i - 1] + h[j - 1], i + j);
        }
    return {v, v * pow3(-ceil_div(static_cast<long>(n) * (n - 2), 4))};
}

namespace {

BigRational mills_factor(int k)
{
    const auto uk = static_cast<unsigned long>(k);
    return make_rational(BigInt((3 * k) / 2 + 1) * factorial(3 * uk) * factorial(uk), factorial(2 * uk + 1) * factorial(2 * uk));
}

BigInt as_integer(const BigRational& r)
{
    if (r.get_den() != 1) throw std::logic_error("product is not an integer");
    return r.get_num();
}

}  // namespace

BigInt scaled_char_product(int n)
{
    BigRational p = 1;
    for (int k = 1; k <= n - 1; ++k)
        if ((n - 1 - k) % 2 == 0) p *= mills_factor(k);
    return as_integer(p);
}

BigInt hvsasm_count(int L)
{
    BigRational p = 1;
    for (int k = 1; k <= L; ++k) p *= mills_factor(k);
    return as_integer(p);
}

Cyclotomic6 sum_rule_at(int L, std::span<const BigRational> z, const BigRational& zeta)
{
    const PatternBasis basis(L);
    const std::size_t dim = basis.dimension();
    const SpectralParameters<Cyclotomic6> sp{Cyclotomic6::omega(), Cyclotomic6(zeta), std::nullopt};
    const std::vector<Cyclotomic6> point(z.begin(), z.end());
    Matrix<Cyclotomic6> m(static_cast<Eigen::Index>(L * dim), static_cast<Eigen::Index>(dim));
    for (std::size_t k = 0; k < dim; ++k) {
        const auto e = unit_vector(basis, k, Cyclotomic6(0));
        for (int i = 1; i <= L; ++i) {
            const auto col = apply_scattering(basis, sp, i, point, Cyclotomic6(1), e);
            for (std::size_t r = 0; r < dim; ++r)
                m(static_cast<Eigen::Index>((i - 1) * dim + r), static_cast<Eigen::Index>(k)) = col[r] - e[r];
        }
    }
    const auto ker = nullspace(m);
    if (ker.cols() != 1) throw std::runtime_error("degenerate fixed space");
    const std::size_t root = basis.index(LinkPattern::empty(L));
    if (is_zero(ker(static_cast<Eigen::Index>(root), 0))) throw std::domain_error("fixed vector misses the base pattern");
    // Base component at s = 1, factor by factor.
    const Cyclotomic6 q = Cyclotomic6::omega(), qi = Cyclotomic6(1) / q;
    Cyclotomic6 base(1);
    for (int i = 0; i < L; ++i)
        for (int j = i + 1; j < L; ++j) base *= (q * point[i] / point[j] - qi) * (qi * point[j] - q / point[i]);
    Cyclotomic6 total(0);
    for (Eigen::Index r = 0; r < ker.rows(); ++r) total += ker(r, 0);
    return total * base / ker(static_cast<Eigen::Index>(root), 0);
}

Report verify_zdet(const QkzSolution<Cyclotomic6>& sol, int samples, std::uint64_t seed, bool symbolic)
{
    const int L = sol.params.L;
    const auto Z = sum_rule(sol);
    Report r;
    const std::string tag = "L=" + std::to_string(L) + " ";
    if (symbolic) {
        const auto expected = chi_product(L, sol.params.universe);
        r.add(tag + "Z = chi_L chi_{L+1} symbolically", Z == expected, "difference " + to_string(Z - expected));
    }
    RationalSampler rng(seed);
    std::string bad;
    for (int k = 0; k < samples && bad.empty(); ++k) {
        auto p = generic_point(rng, L + 1);
        const BigRational zeta = p.back();
        p.pop_back();
        std::vector<Cyclotomic6> values(p.begin(), p.end());
        values.push_back(Cyclotomic6(zeta));
        const Cyclotomic6 lhs = Z.evaluate<Cyclotomic6>(values);
        const Cyclotomic6 rhs = chi_product_at(L, p, zeta);
        if (lhs != rhs) bad = describe_point(p, zeta) + ": " + lhs.str() + " vs " + rhs.str();
    }
    r.add(tag + "Z = chi_L chi_{L+1} at " + std::to_string(samples) + " points", bad.empty(), bad);
    return r;
}

Report verify_zdet_fixed_vector(int L, int samples, std::uint64_t seed)
{
    RationalSampler rng(seed);
    std::string bad;
    int done = 0;
    while (done < samples && bad.empty()) {
        auto p = generic_point(rng, L + 1);
        const BigRational zeta = p.back();
        p.pop_back();
        Cyclotomic6 lhs;
        try {
            lhs = sum_rule_at(L, p, zeta);
        } catch (const std::domain_error&) {
            continue;  // pole of an R or K factor; redraw
        }
        const Cyclotomic6 rhs = chi_product_at(L, p, zeta);
        if (lhs != rhs) bad = describe_point(p, zeta) + ": " + lhs.str() + " vs " + rhs.str();
        ++done;
    }
    Report r;
    r.add("L=" + std::to_string(L) + " Z = chi_L chi_{L+1} at " + std::to_string(samples) + " points (fixed vector)",
          bad.empty(), bad);
    return r;
}

Report verify_sum_rule_recurrence(const QkzSolution<Cyclotomic6>& sol)
{
    const int L = sol.params.L;
    Report r;
    const std::string tag = "L=" + std::to_string(L) + " sum rule recurrence";
    if (L < 2) {
        r.add(tag, false, "needs L >= 2");
        return r;
    }
    const auto& U = sol.params.universe;
    CyclotomicLaurent smaller = CyclotomicLaurent::constant(U, Cyclotomic6(1));
    if (L - 2 >= 2) {
        const auto Zs = sum_rule(build_solution(stochastic_parameters(L - 2)));
        smaller = specialize<Cyclotomic6, Cyclotomic6>(Zs, U, {});
    }
    const Cyclotomic6 q = Cyclotomic6::omega(), q2 = q * q;
    const auto zl1 = sol.params.z(L - 1), zl1i = zl1.unit_inverse();
    const auto zeta = sol.params.zeta, zetai = zeta.unit_inverse();
    const auto one = sol.params.one();
    CyclotomicLaurent factor = (one - q * zl1 * zetai) * (zeta - q2 * zl1i);
    for (int i = 1; i <= L - 2; ++i) {
        const auto a = one - q * zl1 * sol.params.z(i).unit_inverse();
        const auto b = sol.params.z(i) - q2 * zl1i;
        factor *= a * a * b * b;
    }
    const auto lhs = substitute_monomial(sum_rule(sol), sol.params.z_index(L), q2 * zl1);
    const auto rhs = smaller * factor;
    std::string witness;
    if (lhs != rhs) {
        witness = "difference " + to_string(lhs - rhs);
        if (lhs == -rhs) witness = "ratio -1";
    }
    r.add(tag, lhs == rhs, witness);
    return r;
}

Report verify_char_recurrence(int n, int samples, std::uint64_t seed)
{
    RationalSampler rng(seed);
    const Cyclotomic6 q = Cyclotomic6::omega(), q2 = q * q;
    std::string bad;
    for (int k = 0; k < samples && bad.empty(); ++k) {
        const auto p = generic_point(rng, n - 1);
        std::vector<Cyclotomic6> x(p.begin(), p.end());
        x.push_back(q2 * x.back());
        Cyclotomic6 lhs;
        try {
            lhs = symplectic_char<Cyclotomic6>(n, x);
        } catch (const std::domain_error&) {
            --k;
            continue;
        }
        const std::vector<Cyclotomic6> head(x.begin(), x.begin() + (n - 2));
        Cyclotomic6 rhs = symplectic_char<Cyclotomic6>(n - 2, head);
        const Cyclotomic6 xn1 = x[n - 2];
        for (int i = 0; i < n - 2; ++i) rhs *= (Cyclotomic6(1) - q * xn1 / x[i]) * (x[i] - q2 / xn1);
        if (lhs != rhs) bad = "at sample " + std::to_string(k) + ": " + lhs.str() + " vs " + rhs.str();
    }
    Report r;
    r.add("n=" + std::to_string(n) + " chi recurrence at " + std::to_string(samples) + " points", bad.empty(), bad);
    return r;
}

Report verify_sum_rule_symmetry(const CyclotomicLaurent& Z, int L)
{
    const auto& U = Z.universe();
    bool sym = true, inv = true;
    for (int i = 0; i + 1 < L && sym; ++i) sym = Z.swap_variables(i, i + 1) == Z;
    for (int i = 0; i < L && inv; ++i)
        inv = substitute_monomial(Z, static_cast<std::size_t>(i),
                                  CyclotomicLaurent::variable(U, U->name(static_cast<std::size_t>(i)), -1)) == Z;
    Report r;
    const std::string tag = "L=" + std::to_string(L) + " sum rule ";
    r.add(tag + "symmetric in z", sym);
    r.add(tag + "invariant under z_i -> 1/z_i", inv);
    return r;
}

Report verify_homogeneous_count(const QkzSolution<Cyclotomic6>& sol)
{
    const int L = sol.params.L;
    std::vector<Cyclotomic6> ones(static_cast<std::size_t>(L + 1), Cyclotomic6(1));
    const Cyclotomic6 Z1 = sum_rule(sol).evaluate<Cyclotomic6>(ones);
    const BigRational scale = pow3(-static_cast<long>(L) * (L - 1) / 2);
    const Cyclotomic6 count = Z1 * Cyclotomic6(scale);
    const BigRational chis = symplectic_char_homogeneous(L).value * symplectic_char_homogeneous(L + 1).value * scale;
    const BigInt expected = hvsasm_count(L);
    Report r;
    const std::string tag = "L=" + std::to_string(L) + " ";
    r.add(tag + "3^{-L(L-1)/2} Z(1..1) = HVSASM count " + expected.get_str(), count == Cyclotomic6(BigRational(expected)),
          "got " + count.str());
    r.add(tag + "Weyl products give the same count", chis == BigRational(expected), "got " + to_string(chis));
    return r;
}

BigRational schur_sum(int n, std::span<const long> h)
{
    BigRational total = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        BigInt den = 1;
        for (std::size_t j = 0; j < h.size(); ++j) {
            if (j == i) continue;
            if (h[j] == h[i]) throw std::invalid_argument("repeated exponent");
            den *= h[j] - h[i];
        }
        total += make_rational(ipow(h[i], n), den);
    }
    return total;
}

BigRational one_row_schur(int m, std::span<const long> h)
{
    // Sum over weakly increasing index sequences of length m.
    std::function<BigInt(int, std::size_t)> rec = [&](int left, std::size_t from) -> BigInt {
        if (left == 0) return 1;
        BigInt acc = 0;
        for (std::size_t i = from; i < h.size(); ++i) acc += BigInt(h[i]) * rec(left - 1, i);
        return acc;
    };
    return BigRational(rec(m, 0));
}

int schur_sign(int N)
{
    std::vector<long> h;
    for (long i = 1; i <= N; ++i) h.push_back(i);
    return sgn(schur_sum(N - 1, h));
}

Report verify_schur_identity(int max_N, long bound)
{
    Report r;
    for (int N = 1; N <= max_N; ++N) {
        const int sign = schur_sign(N);
        std::string bad;
        std::size_t tuples = 0;
        std::vector<long> h;
        std::function<void(long)> walk = [&](long next) {
            if (!bad.empty()) return;
            if (static_cast<int>(h.size()) == N) {
                ++tuples;
                for (int n = 0; n <= N + 2 && bad.empty(); ++n) {
                    const BigRational lhs = schur_sum(n, h);
                    const BigRational rhs = n < N - 1 ? BigRational(0) : sign * one_row_schur(n - N + 1, h);
                    if (lhs != rhs) {
                        bad = "n=" + std::to_string(n) + " h=(";
                        for (std::size_t i = 0; i < h.size(); ++i) bad += (i ? "," : "") + std::to_string(h[i]);
                        bad += "): " + to_string(lhs) + " vs " + to_string(rhs);
                    }
                }
                return;
            }
            for (long v = next; v <= bound; ++v) {
                h.push_back(v);
                walk(v + 1);
                h.pop_back();
            }
        };
        walk(-bound);
        r.add("N=" + std::to_string(N) + " H_n = " + std::to_string(sign) + " * s_{n-N+1} on " + std::to_string(tuples) +
                  " tuples",
              bad.empty(), bad);
    }
    return r;
}

bool RhoCheck::ok() const
{
    return closed == direct && sum_closed == sum_direct && second_log == sum_direct / ((L + 1) * (2 * L + 3));
}

RhoCheck rho(int L)
{
    if (L < 1) throw std::invalid_argument("size must be positive");
    RhoCheck c;
    c.L = L;
    const long half = L / 2, up = (L + 1) / 2;
    c.closed = half * (1 - make_rational(5 * up + 2, 2 * (2 * L + 3)));
    const auto Z = a_polynomial_sum(ground_state(L));
    c.direct = Z.derivative()(1) / Z(1);
    c.density = c.direct / L;
    c.sum_closed = make_rational((L + 1) * half * (5 * up + 2), 3);
    const auto h = symplectic_exponents(L + 1);
    c.sum_direct = 0;
    for (int i = 1; i <= L + 1; ++i) c.sum_direct += h[i - 1] * h[i - 1] - i * i;
    const auto f = symplectic_char_edge(L + 1);
    BigRational f0 = 0, f1 = 0, f2 = 0;
    for (const auto& t : f.terms()) {
        const long e = RationalLaurent::exponent(t, 0);
        f0 += t.coeff;
        f1 += e * t.coeff;
        f2 += e * (e - 1) * t.coeff;
    }
    c.second_log = (f2 * f0 - f1 * f1) / (f0 * f0);
    return c;
}

Report verify_rho(const RhoCheck& c)
{
    Report r;
    const std::string tag = "L=" + std::to_string(c.L) + " ";
    r.add(tag + "d/da log Z(a) at a=1: closed form " + to_string(c.closed) + " = direct", c.closed == c.direct,
          "direct " + to_string(c.direct));
    r.add(tag + "sum (h_i^2 - i^2) = " + to_string(c.sum_closed), c.sum_closed == c.sum_direct,
          "direct " + to_string(c.sum_direct));
    const BigRational expected = c.sum_direct / ((c.L + 1) * (2 * c.L + 3));
    r.add(tag + "second log-derivative of chi_{L+1}(1..1, zeta) = " + to_string(expected), c.second_log == expected,
          "got " + to_string(c.second_log));
    return r;
}

Report verify_leading_coefficient(int L)
{
    const auto Z = a_polynomial_sum(ground_state(L));
    const BigRational lead = Z.coeff(L / 2);
    const BigInt expected = hvsasm_count(L - 1);
    Report r;
    r.add("L=" + std::to_string(L) + " coefficient of a^" + std::to_string(L / 2) + " = HVSASM(" + std::to_string(L - 1) +
              ") = " + expected.get_str(),
          lead == BigRational(expected) && Z.degree() == L / 2, "got " + to_string(lead));
    return r;
}

template MultiLaurent<BigRational> symplectic_char(int, const UniversePtr&, std::span<const std::string>);
template MultiLaurent<Cyclotomic6> symplectic_char(int, const UniversePtr&, std::span<const std::string>);
template BigRational symplectic_char(int, std::span<const BigRational>);
template Cyclotomic6 symplectic_char(int, std::span<const Cyclotomic6>);

}  // namespace loopqkz
