#pragma once

#include "loopqkz/cyclotomic6.hpp"
#include "loopqkz/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace loopqkz {

inline constexpr std::size_t kMaxVariables = 8;
inline constexpr int kMaxExponent = 127;

/// Ordered list of variable names shared by a family of polynomials.
class Universe {
public:
    explicit Universe(std::vector<std::string> names) : names_(std::move(names))
    {
        if (names_.size() > kMaxVariables)
            throw std::invalid_argument("at most 8 variables per universe");
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable " + names_[i]);
    }

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    std::optional<std::size_t> find(std::string_view name) const
    {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

    std::size_t index(std::string_view name) const
    {
        if (auto i = find(name)) return *i;
        throw std::invalid_argument("unknown variable " + std::string(name));
    }

    friend bool operator==(const Universe&, const Universe&) = default;

private:
    std::vector<std::string> names_;
};

using UniversePtr = std::shared_ptr<const Universe>;

inline UniversePtr make_universe(std::vector<std::string> names)
{
    return std::make_shared<const Universe>(std::move(names));
}

/// z1..zL followed by the given extra names.
inline UniversePtr spectral_universe(std::size_t L, std::vector<std::string> extra)
{
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= L; ++i) names.push_back("z" + std::to_string(i));
    for (auto& e : extra) names.push_back(std::move(e));
    return make_universe(std::move(names));
}

namespace detail {

// Exponent vectors are packed one signed byte per variable, biased by 128.
// Variable 0 lives in the most significant lane so that integer order on keys
// is lexicographic order on exponent vectors.
using Key = std::uint64_t;
inline constexpr Key kBias = 0x8080808080808080ULL;

constexpr int lane_shift(std::size_t var) { return 8 * (7 - static_cast<int>(var)); }

inline int exponent(Key k, std::size_t var)
{
    return static_cast<int>((k >> lane_shift(var)) & 0xFFU) - 128;
}

inline Key with_exponent(Key k, std::size_t var, int e)
{
    if (e < -kMaxExponent || e > kMaxExponent) throw std::overflow_error("exponent out of range");
    const int s = lane_shift(var);
    return (k & ~(Key{0xFF} << s)) | (Key(static_cast<unsigned>(e + 128)) << s);
}

inline int total_degree(Key k)
{
    Key s = (k & 0x00FF00FF00FF00FFULL) + ((k >> 8) & 0x00FF00FF00FF00FFULL);
    s = (s & 0x0000FFFF0000FFFFULL) + ((s >> 16) & 0x0000FFFF0000FFFFULL);
    s = (s & 0xFFFFFFFFULL) + (s >> 32);
    return static_cast<int>(s) - 8 * 128;
}

/// Graded lexicographic order.
inline bool grlex_less(Key a, Key b)
{
    const int da = total_degree(a);
    const int db = total_degree(b);
    return da != db ? da < db : a < b;
}

struct GrlexLess {
    bool operator()(Key a, Key b) const { return grlex_less(a, b); }
};

inline Key multiply(Key a, Key b) { return a + b - kBias; }
inline Key invert(Key a) { return 2 * kBias - a; }
inline Key divide(Key a, Key b) { return a - b + kBias; }

inline Key key_of(std::span<const int> exps)
{
    Key k = kBias;
    for (std::size_t v = 0; v < exps.size(); ++v) k = with_exponent(k, v, exps[v]);
    return k;
}

}  // namespace detail

/// Sparse Laurent polynomial in the variables of a Universe with coefficients in C.
/// Terms are kept sorted ascending in graded lexicographic order with no zero
/// coefficients, so equality is structural.
template <class C>
class MultiLaurent {
public:
    using Coeff = C;
    struct Term {
        detail::Key key;
        C coeff;
    };

    MultiLaurent() = default;
    explicit MultiLaurent(UniversePtr universe) : universe_(std::move(universe)) {}

    static MultiLaurent constant(UniversePtr universe, C c)
    {
        MultiLaurent p(std::move(universe));
        if (!loopqkz::is_zero(c)) p.terms_.push_back({detail::kBias, std::move(c)});
        return p;
    }

    static MultiLaurent variable(UniversePtr universe, std::string_view name, int power = 1)
    {
        const std::size_t v = universe->index(name);
        MultiLaurent p(std::move(universe));
        p.terms_.push_back({detail::with_exponent(detail::kBias, v, power), C(1)});
        return p;
    }

    static MultiLaurent monomial(UniversePtr universe, C c, std::span<const int> exps)
    {
        if (exps.size() != universe->size()) throw std::invalid_argument("exponent vector size mismatch");
        MultiLaurent p(std::move(universe));
        if (!loopqkz::is_zero(c)) p.terms_.push_back({detail::key_of(exps), std::move(c)});
        return p;
    }

    /// Builds from unsorted terms, combining duplicates.
    static MultiLaurent from_terms(UniversePtr universe, std::vector<Term> terms)
    {
        MultiLaurent p(std::move(universe));
        p.terms_ = std::move(terms);
        p.canonicalize();
        return p;
    }

    const UniversePtr& universe() const noexcept { return universe_; }
    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept
    {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].key == detail::kBias);
    }
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    C constant_term() const
    {
        for (const auto& t : terms_)
            if (t.key == detail::kBias) return t.coeff;
        return C(0);
    }

    const Term& leading_term() const
    {
        if (terms_.empty()) throw std::domain_error("leading term of zero");
        return terms_.back();
    }

    std::size_t variable_count() const { return universe_ ? universe_->size() : 0; }

    static int exponent(const Term& t, std::size_t var) { return detail::exponent(t.key, var); }

    std::vector<int> exponents(const Term& t) const
    {
        std::vector<int> e(variable_count());
        for (std::size_t v = 0; v < e.size(); ++v) e[v] = detail::exponent(t.key, v);
        return e;
    }

    bool depends_on(std::size_t var) const
    {
        for (const auto& t : terms_)
            if (detail::exponent(t.key, var) != 0) return true;
        return false;
    }

    /// (min, max) exponent of a variable across terms.
    std::pair<int, int> degree_profile(std::size_t var) const
    {
        if (terms_.empty()) throw std::domain_error("degree of zero");
        int lo = kMaxExponent, hi = -kMaxExponent;
        for (const auto& t : terms_) {
            const int e = detail::exponent(t.key, var);
            lo = std::min(lo, e);
            hi = std::max(hi, e);
        }
        return {lo, hi};
    }

    /// (min, max) of the summed exponents of the listed variables.
    std::pair<int, int> total_degree_profile(std::span<const std::size_t> vars) const
    {
        if (terms_.empty()) throw std::domain_error("degree of zero");
        int lo = 1 << 20, hi = -(1 << 20);
        for (const auto& t : terms_) {
            int d = 0;
            for (auto v : vars) d += detail::exponent(t.key, v);
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
        return {lo, hi};
    }

    MultiLaurent& operator+=(const MultiLaurent& o) { return *this = add(*this, o, false); }
    MultiLaurent& operator-=(const MultiLaurent& o) { return *this = add(*this, o, true); }
    MultiLaurent& operator*=(const MultiLaurent& o) { return *this = multiply(*this, o); }
    MultiLaurent& operator*=(const C& c)
    {
        if (loopqkz::is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& t : terms_) t.coeff *= c;
        return *this;
    }

    friend MultiLaurent operator+(const MultiLaurent& a, const MultiLaurent& b) { return add(a, b, false); }
    friend MultiLaurent operator-(const MultiLaurent& a, const MultiLaurent& b) { return add(a, b, true); }
    friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b) { return multiply(a, b); }
    friend MultiLaurent operator*(MultiLaurent a, const C& c) { return a *= c; }
    friend MultiLaurent operator*(const C& c, MultiLaurent a) { return a *= c; }
    friend MultiLaurent operator-(MultiLaurent a)
    {
        for (auto& t : a.terms_) t.coeff = -t.coeff;
        return a;
    }

    friend bool operator==(const MultiLaurent& a, const MultiLaurent& b)
    {
        if (a.terms_.size() != b.terms_.size()) return false;
        if (!a.terms_.empty()) check_compatible(a, b);
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].coeff != b.terms_[i].coeff) return false;
        return true;
    }
    friend bool operator!=(const MultiLaurent& a, const MultiLaurent& b) { return !(a == b); }

    /// Inverse of a single-term polynomial (the units of the Laurent ring).
    MultiLaurent unit_inverse() const
    {
        if (terms_.size() != 1) throw std::domain_error("not a unit of the Laurent ring");
        MultiLaurent r(universe_);
        r.terms_.push_back({detail::invert(terms_[0].key), C(1) / terms_[0].coeff});
        return r;
    }

    MultiLaurent swap_variables(std::size_t a, std::size_t b) const
    {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            const int ea = detail::exponent(t.key, a);
            const int eb = detail::exponent(t.key, b);
            out.push_back({detail::with_exponent(detail::with_exponent(t.key, a, eb), b, ea), t.coeff});
        }
        return from_terms(universe_, std::move(out));
    }

    /// Monomial substitution: variable v -> images[v].coeff * x^{images[v].exps}.
    struct Image {
        C coeff;
        std::vector<int> exps;
    };

    static Image identity_image(const Universe& u, std::size_t v)
    {
        Image im{C(1), std::vector<int>(u.size(), 0)};
        im.exps[v] = 1;
        return im;
    }

    MultiLaurent map_monomials(const std::vector<Image>& images) const
    {
        const std::size_t n = variable_count();
        if (images.size() != n) throw std::invalid_argument("one image per variable required");
        std::vector<std::pair<int, int>> ranges(n, {0, 0});
        for (std::size_t v = 0; v < n && !terms_.empty(); ++v) ranges[v] = degree_profile(v);
        std::vector<std::vector<C>> powers(n);
        for (std::size_t v = 0; v < n; ++v) {
            const auto [lo, hi] = ranges[v];
            powers[v].reserve(hi - lo + 1);
            for (int e = lo; e <= hi; ++e) powers[v].push_back(power(images[v].coeff, e));
        }
        std::vector<Term> out;
        out.reserve(terms_.size());
        std::vector<int> exps(n);
        for (const auto& t : terms_) {
            std::fill(exps.begin(), exps.end(), 0);
            C c = t.coeff;
            for (std::size_t v = 0; v < n; ++v) {
                const int e = detail::exponent(t.key, v);
                if (e == 0) continue;
                for (std::size_t w = 0; w < n; ++w) exps[w] += e * images[v].exps[w];
                c *= powers[v][e - ranges[v].first];
            }
            out.push_back({detail::key_of(exps), std::move(c)});
        }
        return from_terms(universe_, std::move(out));
    }

    /// Full evaluation with values in a field T that C embeds into.
    template <class T>
    T evaluate(std::span<const T> values) const
    {
        const std::size_t n = variable_count();
        if (values.size() != n) throw std::invalid_argument("one value per variable required");
        T sum(0);
        if (terms_.empty()) return sum;
        std::vector<std::pair<int, int>> ranges(n);
        std::vector<std::vector<T>> powers(n);
        for (std::size_t v = 0; v < n; ++v) {
            ranges[v] = degree_profile(v);
            for (int e = ranges[v].first; e <= ranges[v].second; ++e) {
                if (e < 0 && loopqkz::is_zero(values[v])) throw std::domain_error("pole hit");
                powers[v].push_back(power(values[v], e));
            }
        }
        for (const auto& t : terms_) {
            T prod = T(t.coeff);
            for (std::size_t v = 0; v < n; ++v) {
                const int e = detail::exponent(t.key, v);
                if (e != 0) prod *= powers[v][e - ranges[v].first];
            }
            sum += prod;
        }
        return sum;
    }

    /// Exact quotient f / g in the Laurent ring, or nullopt if g does not divide f.
    std::optional<MultiLaurent> exact_quotient(const MultiLaurent& g) const
    {
        if (g.is_zero()) throw std::domain_error("division by zero polynomial");
        if (is_zero()) return MultiLaurent(universe_ ? universe_ : g.universe_);
        check_compatible(*this, g);
        if (g.terms_.size() == 1) return *this * g.unit_inverse();

        // Strip monomial content so both are polynomials without variable factors;
        // the quotient is then a polynomial and ordinary division terminates.
        const std::size_t n = variable_count();
        std::vector<int> fmin(n), gmin(n), shift(n);
        for (std::size_t v = 0; v < n; ++v) {
            fmin[v] = degree_profile(v).first;
            gmin[v] = g.degree_profile(v).first;
            shift[v] = fmin[v] - gmin[v];
        }
        std::vector<int> neg(n);
        for (std::size_t v = 0; v < n; ++v) neg[v] = -fmin[v];
        const detail::Key fshift = detail::key_of(neg);
        for (std::size_t v = 0; v < n; ++v) neg[v] = -gmin[v];
        const detail::Key gshift = detail::key_of(neg);

        std::vector<Term> gp;
        gp.reserve(g.terms_.size());
        for (const auto& t : g.terms_) gp.push_back({detail::multiply(t.key, gshift), t.coeff});
        const Term& lead = gp.back();
        const C lead_inv = C(1) / lead.coeff;

        std::map<detail::Key, C, detail::GrlexLess> rem;
        for (const auto& t : terms_) rem.emplace_hint(rem.end(), detail::multiply(t.key, fshift), t.coeff);

        std::vector<Term> quotient;
        while (!rem.empty()) {
            auto top = std::prev(rem.end());
            const detail::Key qk = detail::divide(top->first, lead.key);
            for (std::size_t v = 0; v < n; ++v)
                if (detail::exponent(qk, v) < 0) return std::nullopt;
            const C qc = top->second * lead_inv;
            for (const auto& t : gp) {
                const detail::Key k = detail::multiply(t.key, qk);
                auto it = rem.find(k);
                if (it == rem.end()) {
                    rem.emplace(k, -(qc * t.coeff));
                } else {
                    it->second -= qc * t.coeff;
                    if (loopqkz::is_zero(it->second)) rem.erase(it);
                }
            }
            quotient.push_back({qk, qc});
        }
        const detail::Key back = detail::key_of(shift);
        MultiLaurent q(universe_);
        q.terms_.reserve(quotient.size());
        for (auto it = quotient.rbegin(); it != quotient.rend(); ++it)
            q.terms_.push_back({detail::multiply(it->key, back), std::move(it->coeff)});
        return q;
    }

    MultiLaurent divide_exact(const MultiLaurent& g) const
    {
        if (auto q = exact_quotient(g)) return std::move(*q);
        throw std::domain_error("inexact polynomial division");
    }

    /// Internal: raw mutable access for algorithms that keep terms canonical.
    std::vector<Term>& raw_terms() noexcept { return terms_; }

    static void check_compatible(const MultiLaurent& a, const MultiLaurent& b)
    {
        if (a.universe_ == b.universe_ || !a.universe_ || !b.universe_) return;
        if (*a.universe_ != *b.universe_) throw std::invalid_argument("variable universe mismatch");
    }

    void canonicalize()
    {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return detail::grlex_less(a.key, b.key); });
        std::size_t w = 0;
        for (std::size_t r = 0; r < terms_.size();) {
            std::size_t s = r + 1;
            C c = std::move(terms_[r].coeff);
            while (s < terms_.size() && terms_[s].key == terms_[r].key) c += terms_[s++].coeff;
            if (!loopqkz::is_zero(c)) {
                terms_[w].key = terms_[r].key;
                terms_[w].coeff = std::move(c);
                ++w;
            }
            r = s;
        }
        terms_.resize(w);
    }

private:
    static UniversePtr pick_universe(const MultiLaurent& a, const MultiLaurent& b)
    {
        check_compatible(a, b);
        return a.universe_ ? a.universe_ : b.universe_;
    }

    static std::vector<Term> merge(std::vector<Term> a, std::vector<Term> b, bool negate_b)
    {
        std::vector<Term> out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && detail::grlex_less(a[i].key, b[j].key))) {
                out.push_back(std::move(a[i++]));
            } else if (i == a.size() || detail::grlex_less(b[j].key, a[i].key)) {
                if (negate_b) b[j].coeff = -b[j].coeff;
                out.push_back(std::move(b[j++]));
            } else {
                C c = std::move(a[i].coeff);
                if (negate_b)
                    c -= b[j].coeff;
                else
                    c += b[j].coeff;
                if (!loopqkz::is_zero(c)) out.push_back({a[i].key, std::move(c)});
                ++i;
                ++j;
            }
        }
        return out;
    }

    static MultiLaurent add(const MultiLaurent& a, const MultiLaurent& b, bool subtract)
    {
        MultiLaurent r(pick_universe(a, b));
        r.terms_ = merge(a.terms_, b.terms_, subtract);
        return r;
    }

    static void check_product_range(const MultiLaurent& a, const MultiLaurent& b)
    {
        const std::size_t n = std::max(a.variable_count(), b.variable_count());
        for (std::size_t v = 0; v < n; ++v) {
            const auto [alo, ahi] = a.degree_profile(v);
            const auto [blo, bhi] = b.degree_profile(v);
            if (alo + blo < -kMaxExponent || ahi + bhi > kMaxExponent)
                throw std::overflow_error("exponent out of range");
        }
    }

    static MultiLaurent multiply(const MultiLaurent& a, const MultiLaurent& b)
    {
        MultiLaurent r(pick_universe(a, b));
        if (a.is_zero() || b.is_zero()) return r;
        check_product_range(a, b);
        const MultiLaurent& big = a.size() >= b.size() ? a : b;
        const MultiLaurent& small = a.size() >= b.size() ? b : a;
        // Each shifted copy of `big` stays sorted; combine them by pairwise merging.
        std::vector<std::vector<Term>> runs;
        runs.reserve(small.size());
        for (const auto& s : small.terms_) {
            std::vector<Term> run;
            run.reserve(big.size());
            for (const auto& t : big.terms_) run.push_back({detail::multiply(t.key, s.key), t.coeff * s.coeff});
            runs.push_back(std::move(run));
        }
        while (runs.size() > 1) {
            std::vector<std::vector<Term>> next;
            next.reserve((runs.size() + 1) / 2);
            for (std::size_t i = 0; i + 1 < runs.size(); i += 2)
                next.push_back(merge(std::move(runs[i]), std::move(runs[i + 1]), false));
            if (runs.size() % 2 == 1) next.push_back(std::move(runs.back()));
            runs = std::move(next);
        }
        r.terms_ = std::move(runs.front());
        return r;
    }

    UniversePtr universe_;
    std::vector<Term> terms_;
};

template <class C>
bool is_zero(const MultiLaurent<C>& p)
{
    return p.is_zero();
}

template <class C>
MultiLaurent<C> power(const MultiLaurent<C>& p, int e)
{
    if (e < 0) return power(p.unit_inverse(), -e);
    MultiLaurent<C> r = MultiLaurent<C>::constant(p.universe(), C(1));
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

/// Divided difference (f(.., z_b, z_a, ..) - f) / (z_b - z_a), computed monomial-wise.
template <class C>
MultiLaurent<C> divided_difference(const MultiLaurent<C>& f, std::size_t a, std::size_t b)
{
    using Term = typename MultiLaurent<C>::Term;
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        const int ea = detail::exponent(t.key, a);
        const int eb = detail::exponent(t.key, b);
        if (ea == eb) continue;
        const int m = std::min(ea, eb);
        const int d = ea - eb;
        const int len = d > 0 ? d : -d;
        for (int k = 0; k < len; ++k) {
            detail::Key key = t.key;
            if (d > 0) {
                key = detail::with_exponent(key, a, m + d - 1 - k);
                key = detail::with_exponent(key, b, m + k);
                out.push_back({key, t.coeff});
            } else {
                key = detail::with_exponent(key, a, m + k);
                key = detail::with_exponent(key, b, m + len - 1 - k);
                out.push_back({key, -t.coeff});
            }
        }
    }
    return MultiLaurent<C>::from_terms(f.universe(), std::move(out));
}

/// (f(1/z_v) - f(z_v)) / (1/z_v - z_v), computed monomial-wise.
template <class C>
MultiLaurent<C> tilde_difference(const MultiLaurent<C>& f, std::size_t v)
{
    using Term = typename MultiLaurent<C>::Term;
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        const int e = detail::exponent(t.key, v);
        if (e == 0) continue;
        const int len = e > 0 ? e : -e;
        for (int k = 0; k < len; ++k) {
            const detail::Key key = detail::with_exponent(t.key, v, len - 1 - 2 * k);
            out.push_back({key, e > 0 ? t.coeff : C(-t.coeff)});
        }
    }
    return MultiLaurent<C>::from_terms(f.universe(), std::move(out));
}

/// f with variable `var` replaced by the single-term polynomial `mono`.
template <class C>
MultiLaurent<C> substitute_monomial(const MultiLaurent<C>& f, std::size_t var, const MultiLaurent<C>& mono)
{
    if (!mono.is_monomial()) throw std::invalid_argument("substitution value must be a monomial");
    const Universe& u = *f.universe();
    std::vector<typename MultiLaurent<C>::Image> images;
    for (std::size_t v = 0; v < u.size(); ++v) images.push_back(MultiLaurent<C>::identity_image(u, v));
    const auto& t = mono.terms()[0];
    images[var] = {t.coeff, mono.exponents(t)};
    return f.map_monomials(images);
}

/// Laurent divisibility test; returns the quotient when g | f.
template <class C>
std::optional<MultiLaurent<C>> divides(const MultiLaurent<C>& g, const MultiLaurent<C>& f)
{
    return f.exact_quotient(g);
}

/// Re-expresses f over a target universe: variables present in the target by name
/// are kept; the others must be bound to constants of the target field D.
template <class D, class C>
MultiLaurent<D> specialize(const MultiLaurent<C>& f, const UniversePtr& target,
                           const std::vector<std::pair<std::string, D>>& bindings)
{
    using TermD = typename MultiLaurent<D>::Term;
    const Universe& src = *f.universe();
    const std::size_t n = src.size();
    std::vector<std::optional<std::size_t>> lane(n);
    std::vector<std::optional<D>> value(n);
    for (std::size_t v = 0; v < n; ++v) {
        for (const auto& [name, val] : bindings)
            if (name == src.name(v)) value[v] = val;
        if (!value[v]) {
            lane[v] = target->find(src.name(v));
            if (!lane[v] && f.depends_on(v))
                throw std::invalid_argument("unbound variable " + src.name(v));
        }
    }
    std::vector<std::pair<int, int>> ranges(n, {0, 0});
    std::vector<std::vector<D>> powers(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (!value[v] || f.is_zero()) continue;
        ranges[v] = f.degree_profile(v);
        for (int e = ranges[v].first; e <= ranges[v].second; ++e) {
            if (e < 0 && is_zero(*value[v])) throw std::domain_error("pole hit");
            powers[v].push_back(power(*value[v], e));
        }
    }
    std::vector<TermD> out;
    out.reserve(f.size());
    std::vector<int> exps(target->size());
    for (const auto& t : f.terms()) {
        std::fill(exps.begin(), exps.end(), 0);
        D c = D(t.coeff);
        for (std::size_t v = 0; v < n; ++v) {
            const int e = detail::exponent(t.key, v);
            if (e == 0) continue;
            if (value[v])
                c *= powers[v][e - ranges[v].first];
            else
                exps[*lane[v]] += e;
        }
        out.push_back({detail::key_of(exps), std::move(c)});
    }
    return MultiLaurent<D>::from_terms(target, std::move(out));
}

template <class C>
std::string to_string(const MultiLaurent<C>& p)
{
    if (p.is_zero()) return "0";
    std::string s;
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        std::string c = to_string(it->coeff);
        std::string mono;
        for (std::size_t v = 0; v < p.variable_count(); ++v) {
            const int e = detail::exponent(it->key, v);
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += p.universe()->name(v);
            if (e != 1) mono += "^" + std::to_string(e);
        }
        std::string piece;
        if (mono.empty())
            piece = c;
        else if (c == "1")
            piece = mono;
        else if (c == "-1")
            piece = "-" + mono;
        else
            piece = "(" + c + ")*" + mono;
        if (!s.empty() && piece[0] != '-') s += "+";
        s += piece;
    }
    return s;
}

extern template class MultiLaurent<BigRational>;
extern template class MultiLaurent<Cyclotomic6>;

using RationalLaurent = MultiLaurent<BigRational>;
using CyclotomicLaurent = MultiLaurent<Cyclotomic6>;

}  // namespace loopqkz
