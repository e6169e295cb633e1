#include "loopqkz/operators.hpp"

#include "loopqkz/cyclotomic6.hpp"
#include "loopqkz/ratfunc.hpp"
#include "loopqkz/sampling.hpp"

#include <functional>
#include <string>

namespace loopqkz {

namespace {

template <class T>
std::string describe(const std::vector<T>& xs)
{
    std::string s = "(";
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (k) s += ", ";
        s += to_string(xs[k]);
    }
    return s + ")";
}

// Runs the local identities on every basis vector; `where` labels the point.
template <class T>
void local_identities(Report& r, const PatternBasis& basis, const SpectralParameters<T>& p, const T& z, const T& w,
                      const std::string& where)
{
    const int L = basis.size_L();
    const T one = p.one();
    const T zi = exact_div<T>(one, z);
    auto R = [&](int i, const T& x, const StateVector<T>& v) { return apply_R(basis, p, i, x, v); };
    auto K = [&](const T& x, const StateVector<T>& v) { return apply_K(basis, p, x, v); };
    auto check = [&](const std::string& name, const std::function<bool(const StateVector<T>&)>& holds) {
        for (std::size_t k = 0; k < basis.dimension(); ++k) {
            if (!holds(unit_vector(basis, k, one))) {
                r.add(name, false, where + " on " + basis.pattern(k).encoding());
                return;
            }
        }
        r.add(name, true);
    };
    const std::string tag = "L=" + std::to_string(L) + " ";

    for (int i = 1; i < L; ++i)
        check(tag + "unitarity R" + std::to_string(i), [&](const StateVector<T>& v) { return R(i, z, R(i, zi, v)) == v; });
    check(tag + "unitarity K", [&](const StateVector<T>& v) { return K(z, K(zi, v)) == v; });
    for (int i = 1; i + 1 < L; ++i)
        check(tag + "Yang-Baxter at " + std::to_string(i), [&](const StateVector<T>& v) {
            return R(i, z, R(i + 1, z * w, R(i, w, v))) == R(i + 1, w, R(i, z * w, R(i + 1, z, v)));
        });
    if (L >= 2) {
        const T wz = exact_div<T>(w, z);
        const T inv_wz = exact_div<T>(one, w * z);
        check(tag + "reflection", [&](const StateVector<T>& v) {
            return R(L - 1, wz, K(z, R(L - 1, inv_wz, K(w, v)))) == K(w, R(L - 1, inv_wz, K(z, R(L - 1, wz, v))));
        });
    }
    for (int i = 1; i < L; ++i)
        for (int j = i + 2; j < L; ++j)
            check(tag + "far commutation R" + std::to_string(i) + " R" + std::to_string(j),
                  [&](const StateVector<T>& v) { return R(i, z, R(j, w, v)) == R(j, w, R(i, z, v)); });
    for (int i = 1; i < L - 1; ++i)
        check(tag + "commutation K R" + std::to_string(i),
              [&](const StateVector<T>& v) { return K(z, R(i, w, v)) == R(i, w, K(z, v)); });
}

template <class T>
void shift_tau(SpectralParameters<T>& p, long shift)
{
    if (shift != 0) p.tau_override = p.tau() + constant_like(p.q, shift);
}

// Draws until `body` completes without hitting a pole.
template <class F>
void with_redraw(F&& body)
{
    for (int attempt = 0; attempt < 100; ++attempt) {
        try {
            body();
            return;
        } catch (const std::domain_error&) {
        }
    }
    throw std::runtime_error("could not draw a pole-free sample");
}

}  // namespace

Report verify_integrability_symbolic(int L, long tau_shift)
{
    using Poly = RationalLaurent;
    using T = RatScalar<BigRational>;
    const auto u = make_universe({"z", "w", "u", "zeta"});
    SpectralParameters<T> p{T(Poly::variable(u, "u", 2)), T(Poly::variable(u, "zeta")), std::nullopt};
    shift_tau(p, tau_shift);
    const PatternBasis basis(L);
    Report r;
    local_identities(r, basis, p, T(Poly::variable(u, "z")), T(Poly::variable(u, "w")), "symbolic");
    return r;
}

Report verify_integrability_sampled(int L, const IntegrabilityOptions& opt)
{
    const PatternBasis basis(L);
    RationalSampler rng(opt.seed);
    Report merged;
    for (int n = 0; n < opt.samples; ++n) {
        with_redraw([&] {
            SpectralParameters<BigRational> p{rng.next(), rng.next(), std::nullopt};
            shift_tau(p, opt.tau_shift);
            const BigRational z = rng.next(), w = rng.next();
            Report r;
            local_identities(r, basis, p, z, w,
                             "q=" + to_string(p.q) + " zeta=" + to_string(p.zeta) + " z=" + to_string(z) +
                                 " w=" + to_string(w));
            merged.merge(r);
        });
    }
    // Collapse to one line per identity.
    Report out;
    std::vector<std::string> seen;
    for (const auto& res : merged.results()) {
        if (std::find(seen.begin(), seen.end(), res.identity) != seen.end()) continue;
        seen.push_back(res.identity);
        const CheckResult* fail = nullptr;
        for (const auto& other : merged.results())
            if (other.identity == res.identity && !other.ok) {
                fail = &other;
                break;
            }
        out.add(res.identity, fail == nullptr, fail ? fail->witness : std::string());
    }
    return out;
}

namespace {

template <class T>
bool same_on_basis(const PatternBasis& basis, const std::function<StateVector<T>(const StateVector<T>&)>& lhs,
                   const std::function<StateVector<T>(const StateVector<T>&)>& rhs, const T& like, std::string& where)
{
    for (std::size_t k = 0; k < basis.dimension(); ++k) {
        const auto v = unit_vector(basis, k, like);
        if (lhs(v) != rhs(v)) {
            where = basis.pattern(k).encoding();
            return false;
        }
    }
    return true;
}

}  // namespace

Report verify_scattering_commutation(int L, const IntegrabilityOptions& opt)
{
    const PatternBasis basis(L);
    RationalSampler rng(opt.seed);
    Report r;
    const std::string tag = "L=" + std::to_string(L) + " ";

    bool generic_ok = true;
    std::string generic_witness;
    for (int n = 0; n < opt.samples && generic_ok; ++n) {
        with_redraw([&] {
            using T = BigRational;
            SpectralParameters<T> p{rng.next(), rng.next(), std::nullopt};
            const T s = rng.next();
            std::vector<T> z;
            for (int k = 0; k < L; ++k) z.push_back(rng.next());
            for (int i = 1; i < L && generic_ok; ++i)
                for (int j = i + 1; j < L && generic_ok; ++j) {
                    auto zj = z, zi = z;
                    zj[static_cast<std::size_t>(j - 1)] *= s;
                    zi[static_cast<std::size_t>(i - 1)] *= s;
                    std::string where;
                    const bool ok = same_on_basis<T>(
                        basis,
                        [&](const StateVector<T>& v) {
                            return apply_scattering(basis, p, i, zj, s, apply_scattering(basis, p, j, z, s, v));
                        },
                        [&](const StateVector<T>& v) {
                            return apply_scattering(basis, p, j, zi, s, apply_scattering(basis, p, i, z, s, v));
                        },
                        T(1), where);
                    if (!ok) {
                        generic_ok = false;
                        generic_witness = "i=" + std::to_string(i) + " j=" + std::to_string(j) + " q=" +
                                          to_string(p.q) + " s=" + to_string(s) + " z=" + describe(z) + " on " + where;
                    }
                }
        });
    }
    r.add(tag + "scattering exchange relation", generic_ok, generic_witness);

    bool stoch_ok = true;
    std::string stoch_witness;
    for (int n = 0; n < opt.samples && stoch_ok; ++n) {
        with_redraw([&] {
            using T = Cyclotomic6;
            SpectralParameters<T> p{Cyclotomic6::omega(), T(rng.next()), std::nullopt};
            const T s(1);
            std::vector<T> z;
            for (int k = 0; k < L; ++k) z.push_back(T(rng.next()));
            for (int i = 1; i < L && stoch_ok; ++i)
                for (int j = i + 1; j < L && stoch_ok; ++j) {
                    std::string where;
                    const bool ok = same_on_basis<T>(
                        basis,
                        [&](const StateVector<T>& v) {
                            return apply_scattering(basis, p, i, z, s, apply_scattering(basis, p, j, z, s, v));
                        },
                        [&](const StateVector<T>& v) {
                            return apply_scattering(basis, p, j, z, s, apply_scattering(basis, p, i, z, s, v));
                        },
                        T(1), where);
                    if (!ok) {
                        stoch_ok = false;
                        stoch_witness = "i=" + std::to_string(i) + " j=" + std::to_string(j) + " z=" + describe(z);
                    }
                }
        });
    }
    r.add(tag + "scattering matrices commute at s=1", stoch_ok, stoch_witness);
    return r;
}

Report verify_stochastic_covector(int L, const IntegrabilityOptions& opt)
{
    using T = Cyclotomic6;
    const PatternBasis basis(L);
    RationalSampler rng(opt.seed);
    Report r;
    const std::string tag = "L=" + std::to_string(L) + " ";
    auto column_sums_one = [&](const std::function<StateVector<T>(const StateVector<T>&)>& op) {
        for (std::size_t k = 0; k < basis.dimension(); ++k) {
            T sum(0);
            for (const auto& c : op(unit_vector(basis, k, T(1)))) sum += c;
            if (sum != T(1)) return false;
        }
        return true;
    };
    bool ok_r = true, ok_k = true, ok_s = true;
    for (int n = 0; n < opt.samples; ++n) {
        with_redraw([&] {
            SpectralParameters<T> p{Cyclotomic6::omega(), T(rng.next()), std::nullopt};
            const T z(rng.next());
            std::vector<T> zs;
            for (int k = 0; k < L; ++k) zs.push_back(T(rng.next()));
            for (int i = 1; i < L; ++i)
                ok_r = ok_r && column_sums_one([&](const StateVector<T>& v) { return apply_R(basis, p, i, z, v); });
            ok_k = ok_k && column_sums_one([&](const StateVector<T>& v) { return apply_K(basis, p, z, v); });
            for (int i = 1; i < L; ++i)
                ok_s = ok_s && column_sums_one(
                                   [&](const StateVector<T>& v) { return apply_scattering(basis, p, i, zs, T(1), v); });
        });
    }
    r.add(tag + "all-ones covector fixed by R", ok_r);
    r.add(tag + "all-ones covector fixed by K", ok_k);
    r.add(tag + "all-ones covector fixed by S", ok_s);
    return r;
}

}  // namespace loopqkz
