#include "loopqkz/link_pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace loopqkz {

namespace {

int rank(char c) { return c == '.' ? 0 : (c == '(' ? 1 : 2); }

bool decode(std::string_view s, std::vector<int>& partner)
{
    partner.assign(s.size(), -1);
    std::vector<int> stack;
    for (std::size_t i = 0; i < s.size(); ++i) {
        switch (s[i]) {
        case '(':
            stack.push_back(static_cast<int>(i));
            break;
        case ')':
            if (stack.empty()) return false;
            partner[i] = stack.back();
            partner[static_cast<std::size_t>(stack.back())] = static_cast<int>(i);
            stack.pop_back();
            break;
        case '.':
            if (!stack.empty()) return false;
            break;
        default:
            return false;
        }
    }
    return stack.empty();
}

void extend(std::string& prefix, int remaining, int depth, std::vector<LinkPattern>& out)
{
    if (remaining == 0) {
        if (depth == 0) out.emplace_back(prefix);
        return;
    }
    // Emit in canonical character order so output is already sorted.
    if (depth == 0) {
        prefix.push_back('.');
        extend(prefix, remaining - 1, 0, out);
        prefix.pop_back();
    }
    if (depth + 1 <= remaining - 1) {
        prefix.push_back('(');
        extend(prefix, remaining - 1, depth + 1, out);
        prefix.pop_back();
    }
    if (depth > 0) {
        prefix.push_back(')');
        extend(prefix, remaining - 1, depth - 1, out);
        prefix.pop_back();
    }
}

}  // namespace

LinkPattern::LinkPattern(std::string_view encoding) : encoding_(encoding)
{
    if (!decode(encoding, partner_)) throw std::invalid_argument("invalid link pattern " + std::string(encoding));
}

std::optional<LinkPattern> LinkPattern::parse(std::string_view encoding)
{
    std::vector<int> partner;
    if (!decode(encoding, partner)) return std::nullopt;
    return LinkPattern(encoding);
}

LinkPattern LinkPattern::from_partners(const std::vector<int>& partner)
{
    std::string s(partner.size(), '.');
    for (std::size_t i = 0; i < partner.size(); ++i) {
        if (partner[i] < 0) continue;
        s[i] = static_cast<std::size_t>(partner[i]) > i ? '(' : ')';
    }
    return LinkPattern(s);
}

int LinkPattern::arc_count() const
{
    return static_cast<int>(std::count(encoding_.begin(), encoding_.end(), '('));
}

LinkPattern LinkPattern::insert_arc(int i) const
{
    if (i < 1 || i > size() + 1) throw std::invalid_argument("invalid insertion site");
    std::string s = encoding_;
    s.insert(static_cast<std::size_t>(i - 1), "()");
    return LinkPattern(s);
}

bool operator<(const LinkPattern& a, const LinkPattern& b)
{
    return std::lexicographical_compare(a.encoding_.begin(), a.encoding_.end(), b.encoding_.begin(), b.encoding_.end(),
                                        [](char x, char y) { return rank(x) < rank(y); });
}

std::vector<LinkPattern> enumerate_patterns(int L)
{
    if (L < 1) throw std::invalid_argument("size must be positive");
    std::vector<LinkPattern> out;
    std::string prefix;
    extend(prefix, L, 0, out);
    return out;
}

TLWeight apply_e(int i, const LinkPattern& p)
{
    const int L = p.size();
    if (i < 1 || i >= L) throw std::invalid_argument("invalid site index");
    std::vector<int> partner(static_cast<std::size_t>(L));
    for (int k = 1; k <= L; ++k) partner[static_cast<std::size_t>(k - 1)] = p.partner(k) - 1;
    const int a = i - 1, b = i;
    const int pa = partner[a], pb = partner[b];
    if (pa == b) return {1, p};
    if (pa >= 0) partner[pa] = pb;
    if (pb >= 0) partner[pb] = pa;
    partner[a] = b;
    partner[b] = a;
    return {0, LinkPattern::from_partners(partner)};
}

TLWeight apply_f(const LinkPattern& p)
{
    const int L = p.size();
    const int j = p.partner(L);
    if (j == 0) return {0, p};
    std::string s = p.encoding();
    s[static_cast<std::size_t>(j - 1)] = '.';
    s[static_cast<std::size_t>(L - 1)] = '.';
    return {0, LinkPattern(s)};
}

TLWeight apply(const TLGenerator& g, const LinkPattern& p)
{
    return g.kind == TLGenerator::Kind::F ? apply_f(p) : apply_e(g.site, p);
}

std::vector<LinkPattern> antecedents(const TLGenerator& g, const LinkPattern& target)
{
    const PatternBasis basis(target.size());
    std::vector<LinkPattern> out;
    for (auto k : basis.antecedents(g, basis.index(target))) out.push_back(basis.pattern(k));
    return out;
}

PatternBasis::PatternBasis(int L) : L_(L), patterns_(enumerate_patterns(L))
{
    for (std::size_t k = 0; k < patterns_.size(); ++k) index_.emplace(patterns_[k].encoding(), k);
    e_.resize(static_cast<std::size_t>(std::max(0, L - 1)));
    for (int i = 1; i < L; ++i)
        for (const auto& p : patterns_) {
            const TLWeight w = apply_e(i, p);
            e_[static_cast<std::size_t>(i - 1)].push_back({index(w.pattern), w.loop_count});
        }
    for (const auto& p : patterns_) {
        const TLWeight w = apply_f(p);
        f_.push_back({index(w.pattern), w.loop_count});
    }
}

std::size_t PatternBasis::index(const LinkPattern& p) const
{
    auto it = index_.find(p.encoding());
    if (it == index_.end()) throw std::invalid_argument("pattern not in basis: " + p.encoding());
    return it->second;
}

std::vector<std::size_t> PatternBasis::antecedents(const TLGenerator& g, std::size_t target) const
{
    const LinkPattern& t = pattern(target);
    const bool in_image = g.kind == TLGenerator::Kind::F ? !t.paired(L_) : (g.site >= 1 && g.site < L_ && t.has_arc(g.site, g.site + 1));
    if (!in_image) throw std::invalid_argument("target not in image shape");
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < patterns_.size(); ++k)
        if (k != target && image(g, k).target == target) out.push_back(k);
    return out;
}

}  // namespace loopqkz
