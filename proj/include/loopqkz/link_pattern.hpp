#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace loopqkz {

/// Right-extended noncrossing matching on points 1..L. Encoded as a string
/// over {'.', '(', ')'}; '.' points connect to the extra boundary point on
/// the right and therefore never sit under an arc.
class LinkPattern {
public:
    LinkPattern() = default;
    explicit LinkPattern(std::string_view encoding);

    static std::optional<LinkPattern> parse(std::string_view encoding);
    static LinkPattern from_partners(const std::vector<int>& partner);
    static LinkPattern empty(int size) { return LinkPattern(std::string(static_cast<std::size_t>(size), '.')); }

    int size() const noexcept { return static_cast<int>(encoding_.size()); }
    const std::string& encoding() const noexcept { return encoding_; }

    /// 1-based partner of site i, or 0 when i is unpaired.
    int partner(int i) const { return partner_.at(static_cast<std::size_t>(i - 1)) + 1; }
    bool paired(int i) const { return partner(i) != 0; }
    bool has_arc(int i, int j) const { return partner(i) == j; }
    int arc_count() const;

    /// Inserts the arc (i, i+1) before current site i, shifting later sites by 2.
    LinkPattern insert_arc(int i) const;

    friend bool operator==(const LinkPattern& a, const LinkPattern& b) { return a.encoding_ == b.encoding_; }
    friend bool operator!=(const LinkPattern& a, const LinkPattern& b) { return !(a == b); }
    /// Canonical order: lexicographic with '.' < '(' < ')'.
    friend bool operator<(const LinkPattern& a, const LinkPattern& b);

private:
    std::string encoding_;
    std::vector<int> partner_;  // 0-based, -1 when unpaired
};

/// Result of one generator application: closed bulk loops and the new pattern.
struct TLWeight {
    int loop_count = 0;
    LinkPattern pattern;
};

/// e_i for i in 1..L-1, or the boundary generator f.
struct TLGenerator {
    enum class Kind { E, F };
    Kind kind = Kind::E;
    int site = 1;

    static TLGenerator e(int i) { return {Kind::E, i}; }
    static TLGenerator f() { return {Kind::F, 0}; }
};

std::vector<LinkPattern> enumerate_patterns(int L);
TLWeight apply_e(int i, const LinkPattern& p);
TLWeight apply_f(const LinkPattern& p);
TLWeight apply(const TLGenerator& g, const LinkPattern& p);

/// All p' != target with g(p') = target. Requires target to lie in the image shape of g.
std::vector<LinkPattern> antecedents(const TLGenerator& g, const LinkPattern& target);

/// Canonically ordered patterns of one size with precomputed generator tables.
class PatternBasis {
public:
    explicit PatternBasis(int L);

    int size_L() const noexcept { return L_; }
    std::size_t dimension() const noexcept { return patterns_.size(); }
    const std::vector<LinkPattern>& patterns() const noexcept { return patterns_; }
    const LinkPattern& pattern(std::size_t k) const { return patterns_.at(k); }
    std::size_t index(const LinkPattern& p) const;
    std::size_t index(std::string_view encoding) const { return index(LinkPattern(encoding)); }

    struct Image {
        std::size_t target;
        int loops;
    };
    /// Image of basis vector k under e_i (1-based i).
    const Image& e_image(int i, std::size_t k) const { return e_[static_cast<std::size_t>(i - 1)][k]; }
    const Image& f_image(std::size_t k) const { return f_[k]; }
    const Image& image(const TLGenerator& g, std::size_t k) const
    {
        return g.kind == TLGenerator::Kind::F ? f_image(k) : e_image(g.site, k);
    }

    /// Indices of antecedents, as in the free function.
    std::vector<std::size_t> antecedents(const TLGenerator& g, std::size_t target) const;

private:
    int L_;
    std::vector<LinkPattern> patterns_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::vector<Image>> e_;
    std::vector<Image> f_;
};

}  // namespace loopqkz
