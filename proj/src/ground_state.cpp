#include "loopqkz/ground_state.hpp"

#include "loopqkz/sampling.hpp"
#include "loopqkz/tl_algebra.hpp"

#include <optional>
#include <stdexcept>

namespace loopqkz {

namespace {

using Poly = APolynomial;

Poly content_gcd(const std::vector<Poly>& row)
{
    Poly g;
    for (const auto& e : row) {
        if (e.is_zero()) continue;
        g = g.is_zero() ? e.monic() : gcd(g, e);
        if (g.degree() == 0) break;
    }
    return g;
}

Poly exact_quotient(const Poly& a, const Poly& b)
{
    auto [q, r] = a.divmod(b);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
}

BigRational rational_content(const Poly& p);

// Divides a row by the gcd of its entries, including the rational content,
// so entries stay integer polynomials with coprime coefficients.
void make_primitive(std::vector<Poly>& row)
{
    const Poly g = content_gcd(row);
    if (g.is_zero()) return;
    if (g.degree() > 0)
        for (auto& e : row) e = exact_quotient(e, g);
    BigInt num = 0, den = 1;
    for (const auto& e : row) {
        if (e.is_zero()) continue;
        const BigRational c = rational_content(e);
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    }
    const Poly unit(make_rational(den, num));
    for (auto& e : row)
        if (!e.is_zero()) e = e * unit;
}

// Fraction-free reduced row echelon form; each row is kept primitive by
// dividing out the gcd of its entries. Returns one kernel vector when the
// kernel is one-dimensional.
std::vector<Poly> kernel_vector(const Matrix<Poly>& m)
{
    const auto rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Poly>> a(static_cast<std::size_t>(rows), std::vector<Poly>(static_cast<std::size_t>(cols)));
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c) a[r][c] = m(r, c);

    std::vector<Eigen::Index> pivot_col;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        // Lowest-degree pivot keeps intermediate growth down.
        Eigen::Index p = -1;
        for (Eigen::Index r = row; r < rows; ++r)
            if (!a[r][col].is_zero() && (p < 0 || a[r][col].degree() < a[p][col].degree())) p = r;
        if (p < 0) continue;
        std::swap(a[p], a[row]);
        const Poly piv = a[row][col];
        for (Eigen::Index r = 0; r < rows; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            const Poly f = a[r][col];
            for (Eigen::Index c = 0; c < cols; ++c) a[r][c] = piv * a[r][c] - f * a[row][c];
            make_primitive(a[r]);
        }
        pivot_col.push_back(col);
        ++row;
    }
    if (static_cast<Eigen::Index>(pivot_col.size()) != cols - 1) throw std::runtime_error("degenerate ground space");

    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (auto c : pivot_col) is_pivot[c] = true;
    Eigen::Index free = 0;
    while (is_pivot[free]) ++free;

    // x_free = prod of pivots / gcd-reduced later; x_pivot = -a[r][free] * x_free / pivot.
    Poly scale(1L);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) {
        const Poly& piv = a[r][pivot_col[r]];
        scale = exact_quotient(scale * piv, gcd(scale, piv));
    }
    std::vector<Poly> x(static_cast<std::size_t>(cols));
    x[free] = scale;
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
        x[pivot_col[r]] = -exact_quotient(a[r][free] * scale, a[r][pivot_col[r]]);
    const Poly g = content_gcd(x);
    for (auto& e : x) e = exact_quotient(e, g);
    return x;
}

BigRational rational_content(const Poly& p)
{
    // gcd of numerators over lcm of denominators.
    BigInt num = 0, den = 1;
    for (const auto& c : p.coeffs()) {
        if (is_zero(c)) continue;
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    }
    return make_rational(num, den);
}

bool nonnegative_integer_coefficients(const Poly& p)
{
    for (const auto& c : p.coeffs())
        if (c < 0 || c.get_den() != 1) return false;
    return true;
}

}  // namespace

Matrix<APolynomial> hamiltonian(int L)
{
    if (L < 1) throw std::invalid_argument("size must be positive");
    const PatternBasis basis(L);
    const Poly one(1L);
    Matrix<Poly> h = Poly::x() * operator_matrix(basis, TLGenerator::f(), one);
    for (int i = 1; i < L; ++i) h += operator_matrix(basis, TLGenerator::e(i), one);
    return h;
}

std::vector<BigRational> GroundState::at(const BigRational& a) const
{
    std::vector<BigRational> out;
    for (const auto& c : components) out.push_back(c(a));
    return out;
}

namespace {

Poly power_of_a(int k)
{
    Poly p(1L);
    for (int i = 0; i < k; ++i) p *= Poly::x();
    return p;
}

bool is_eigenvector(const Matrix<Poly>& h, const std::vector<Poly>& x, int L)
{
    const Poly eig = Poly(static_cast<long>(L - 1)) + Poly::x();
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
        Poly acc;
        for (Eigen::Index j = 0; j < h.cols(); ++j)
            if (!h(i, j).is_zero()) acc += h(i, j) * x[static_cast<std::size_t>(j)];
        if (acc != eig * x[static_cast<std::size_t>(i)]) return false;
    }
    return true;
}

GroundState normalise(int L, std::vector<Poly> x)
{
    GroundState gs{L, PatternBasis(L), {}};
    const Poly& empty = x[gs.basis.index(LinkPattern::empty(L))];
    const int k = L / 2;
    for (int d = 0; d < k; ++d)
        if (!is_zero(empty.coeff(d))) throw std::runtime_error("empty component is not a pure power of a");
    if (empty.degree() != k) throw std::runtime_error("empty component is not a pure power of a");
    const Poly unit(BigRational(1 / empty.leading()));
    for (auto& c : x) c = c * unit;
    gs.components = std::move(x);
    return gs;
}

}  // namespace

GroundState ground_state_fraction_free(int L)
{
    Matrix<Poly> m = hamiltonian(L);
    const Poly eig = Poly(static_cast<long>(L - 1)) + Poly::x();
    for (Eigen::Index k = 0; k < m.rows(); ++k) m(k, k) -= eig;
    return normalise(L, kernel_vector(m));
}

GroundState ground_state(int L)
{
    const Matrix<Poly> h = hamiltonian(L);
    const auto n = h.rows();
    const std::size_t empty = PatternBasis(L).index(LinkPattern::empty(L));
    const int k = L / 2;

    // Kernel at a = 1, 2, ...; a one-dimensional kernel at any single value
    // bounds the generic kernel dimension by one.
    std::vector<BigRational> xs;
    std::vector<std::vector<BigRational>> samples;
    auto sample = [&](long a) {
        Matrix<BigRational> m(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) m(i, j) = h(i, j)(BigRational(a));
        for (Eigen::Index i = 0; i < n; ++i) m(i, i) -= BigRational(L - 1 + a);
        const Matrix<BigRational> ker = nullspace(m);
        if (ker.cols() != 1) throw std::runtime_error("degenerate ground space");
        const BigRational scale = power(BigRational(a), k) / ker(static_cast<Eigen::Index>(empty), 0);
        std::vector<BigRational> v;
        for (Eigen::Index i = 0; i < n; ++i) v.push_back(ker(i, 0) * scale);
        xs.emplace_back(a);
        samples.push_back(std::move(v));
    };

    // Interpolate with growing degree until the candidate is an exact eigenvector.
    long next = 1;
    for (int points = k + 2; points <= 8 * (L + 2); points *= 2) {
        while (static_cast<int>(xs.size()) < points) sample(next++);
        std::vector<Poly> x;
        for (Eigen::Index i = 0; i < n; ++i) {
            std::vector<BigRational> ys;
            for (const auto& s : samples) ys.push_back(s[static_cast<std::size_t>(i)]);
            x.push_back(Poly::interpolate(xs, ys));
        }
        if (x[empty] == power_of_a(k) && is_eigenvector(h, x, L)) return normalise(L, std::move(x));
    }
    throw std::runtime_error("ground state is not polynomial in a");
}

APolynomial a_polynomial_sum(const GroundState& gs)
{
    Poly s;
    for (const auto& c : gs.components) s += c;
    return s;
}

Report verify_ground_state(const GroundState& gs)
{
    const int L = gs.L;
    const std::string tag = "L=" + std::to_string(L) + " ";
    Report r;
    const Matrix<Poly> h = hamiltonian(L);
    const Poly eig = Poly(static_cast<long>(L - 1)) + Poly::x();
    bool ok = true;
    for (Eigen::Index i = 0; i < h.rows() && ok; ++i) {
        Poly acc;
        for (Eigen::Index j = 0; j < h.cols(); ++j)
            if (!h(i, j).is_zero()) acc += h(i, j) * gs.components[j];
        ok = acc == eig * gs.components[i];
    }
    r.add(tag + "eigen-equation", ok, "H psi != (L-1+a) psi");

    Poly power_a(1L);
    for (int k = 0; k < L / 2; ++k) power_a *= Poly::x();
    r.add(tag + "empty pattern normalisation", gs[LinkPattern::empty(L).encoding()] == power_a);

    std::string bad;
    for (std::size_t k = 0; k < gs.components.size() && bad.empty(); ++k) {
        const auto& p = gs.basis.pattern(k);
        const bool maximal = p.arc_count() == L / 2;
        const bool nonzero = !is_zero(gs.components[k](BigRational(0)));
        if (maximal != nonzero) bad = p.encoding();
    }
    r.add(tag + "a=0 support on maximally paired patterns", bad.empty(), bad);

    bad.clear();
    for (std::size_t k = 0; k < gs.components.size() && bad.empty(); ++k)
        if (!nonnegative_integer_coefficients(gs.components[k])) bad = gs.basis.pattern(k).encoding();
    r.add(tag + "nonnegative integer coefficients", bad.empty(), bad);
    return r;
}

RationalPolynomial to_tau_prime(const RationalLaurent& f)
{
    if (f.variable_count() != 1) throw std::invalid_argument("expected a Laurent polynomial in one variable");
    std::vector<typename RationalLaurent::Image> inv{{BigRational(1), {-1}}};
    if (f.map_monomials(inv) != f) throw std::domain_error("not inversion-invariant");
    // Peel off the top power: u^d + u^{-d} is a monic polynomial of degree d in t.
    const UniversePtr& u = f.universe();
    const RationalLaurent t = RationalLaurent::variable(u, u->name(0)) + RationalLaurent::variable(u, u->name(0), -1);
    RationalLaurent rest = f;
    std::vector<BigRational> coeffs;
    while (!rest.is_zero()) {
        const auto& top = rest.leading_term();
        const int d = RationalLaurent::exponent(top, 0);
        if (coeffs.size() < static_cast<std::size_t>(d + 1)) coeffs.resize(static_cast<std::size_t>(d + 1), BigRational(0));
        coeffs[d] += top.coeff;
        rest -= top.coeff * power(t, d);
    }
    return RationalPolynomial(std::move(coeffs));
}

TauPrimeVector tau_prime_from_homogeneous(int L, const std::vector<RationalLaurent>& values)
{
    TauPrimeVector out;
    out.L = L;
    // The vector is centred by one common power of u before the inversion test;
    // that monomial is part of the common factor.
    std::optional<int> centre;
    for (const auto& v : values) {
        if (v.is_zero()) continue;
        const auto [lo, hi] = v.degree_profile(0);
        if (centre && *centre != lo + hi) throw std::domain_error("not inversion-invariant");
        centre = lo + hi;
    }
    if (centre && *centre % 2 != 0) throw std::domain_error("not inversion-invariant");
    for (const auto& v : values) {
        const RationalLaurent shift = centre ? RationalLaurent::variable(v.universe(), v.universe()->name(0), -*centre / 2)
                                             : RationalLaurent::constant(v.universe(), BigRational(1));
        out.components.push_back(to_tau_prime(v * shift));
    }
    Poly g;
    for (const auto& c : out.components)
        if (!c.is_zero()) g = g.is_zero() ? c.monic() : gcd(g, c);
    for (auto& c : out.components) c = exact_quotient(c, g);
    // Primitive integer vector with a positive first entry.
    BigInt num = 0, den = 1;
    for (const auto& c : out.components) {
        const BigRational ct = rational_content(c);
        if (is_zero(ct)) continue;
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), ct.get_num().get_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), ct.get_den().get_mpz_t());
    }
    BigRational unit = make_rational(den, num);
    if (!out.components.empty() && !out.components[0].is_zero() && out.components[0].leading() < 0) unit = -unit;
    for (auto& c : out.components) c = c * Poly(unit);
    out.common_factor = g * Poly(BigRational(1 / unit));
    for (const auto& c : out.components) out.nonnegative = out.nonnegative && nonnegative_integer_coefficients(c);
    return out;
}

TauPrimeVector tau_prime_components(const QkzSolution<BigRational>& sol)
{
    const auto target = make_universe({"u"});
    std::vector<std::pair<std::string, BigRational>> ones;
    for (int i = 1; i <= sol.params.L; ++i) ones.push_back({"z" + std::to_string(i), BigRational(1)});
    ones.push_back({"zeta", BigRational(1)});
    std::vector<RationalLaurent> values;
    for (const auto& c : sol.components) values.push_back(specialize<BigRational, BigRational>(c, target, ones));
    return tau_prime_from_homogeneous(sol.params.L, values);
}

Report scattering_fixed_point(const QkzSolution<Cyclotomic6>& sol, int samples, std::uint64_t seed)
{
    const int L = sol.params.L;
    RationalSampler rng(seed);
    const SpectralParameters<Cyclotomic6> sp{Cyclotomic6::omega(), Cyclotomic6(1), std::nullopt};
    int done = 0, attempts = 0;
    std::string bad;
    while (done < samples && attempts < 50 * samples && bad.empty()) {
        ++attempts;
        std::vector<Cyclotomic6> point;
        for (int i = 0; i < L; ++i) point.emplace_back(rng.next());
        const Cyclotomic6 zeta(rng.next());
        std::vector<Cyclotomic6> values = point;
        values.push_back(zeta);
        auto params = sp;
        params.zeta = zeta;
        try {
            StateVector<Cyclotomic6> psi;
            for (const auto& c : sol.components) psi.push_back(c.evaluate<Cyclotomic6>(values));
            for (int i = 1; i <= L && bad.empty(); ++i)
                if (apply_scattering(sol.basis, params, i, point, Cyclotomic6(1), psi) != psi)
                    bad = "S_" + std::to_string(i) + " at sample " + std::to_string(done);
        } catch (const std::domain_error&) {
            continue;  // landed on a pole; redraw
        }
        ++done;
    }
    Report r;
    r.add("L=" + std::to_string(L) + " scattering fixed point at " + std::to_string(done) + " points",
          bad.empty() && done == samples, bad.empty() ? "too many poles" : bad);
    return r;
}

Report homogeneous_limit(const QkzSolution<Cyclotomic6>& sol, const GroundState& gs, const BigRational& zeta)
{
    const int L = sol.params.L;
    std::vector<Cyclotomic6> values(static_cast<std::size_t>(L), Cyclotomic6(1));
    values.push_back(Cyclotomic6(zeta));
    const BigRational a = 3 / (zeta + 1 + 1 / zeta);
    const auto ground = gs.at(a);
    // Proportionality: psi_k * g_0 == psi_0 * g_k for all k, psi nonzero.
    std::vector<Cyclotomic6> psi;
    for (const auto& c : sol.components) psi.push_back(c.evaluate<Cyclotomic6>(values));
    std::size_t ref = 0;
    while (ref < psi.size() && psi[ref].is_zero()) ++ref;
    bool ok = ref < psi.size() && !is_zero(ground[ref]);
    for (std::size_t k = 0; k < psi.size() && ok; ++k) ok = psi[k] * Cyclotomic6(ground[ref]) == psi[ref] * Cyclotomic6(ground[k]);
    Report r;
    r.add("L=" + std::to_string(L) + " homogeneous limit matches ground state at a=" + to_string(a), ok);
    return r;
}

}  // namespace loopqkz
