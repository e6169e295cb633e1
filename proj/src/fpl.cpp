#include "loopqkz/fpl.hpp"

#include "loopqkz/sum_rules.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace loopqkz {

namespace {

int centre(int n)
{
    return (n + 1) / 2;
}

void require_odd(int n)
{
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("size must be odd and at least 3");
}

int parity(int i, int j)
{
    return (i + j) & 1;
}

/// Boundary terminal: side 'T', 'B', 'L' or 'R' and its 1-based position.
struct Terminal {
    char side;
    int k;
    friend bool operator==(const Terminal&, const Terminal&) = default;
};

/// Follows the path entering the grid at terminal t until it leaves again.
Terminal trace(const FplConfig& c, Terminal t)
{
    const int n = c.n;
    int i, j;
    char came;  // side of the current vertex the path arrived from
    switch (t.side) {
    case 'T': i = 1, j = t.k, came = 'U'; break;
    case 'B': i = n, j = t.k, came = 'D'; break;
    case 'L': i = t.k, j = 1, came = 'L'; break;
    default: i = t.k, j = n, came = 'R'; break;
    }
    for (std::size_t steps = 0; steps <= static_cast<std::size_t>(n) * n; ++steps) {
        const bool left = c.horizontal(i, j - 1), right = c.horizontal(i, j);
        const bool up = c.vertical(i - 1, j), down = c.vertical(i, j);
        char out = 0;
        if (left && came != 'L') out = 'L';
        else if (right && came != 'R') out = 'R';
        else if (up && came != 'U') out = 'U';
        else if (down && came != 'D') out = 'D';
        switch (out) {
        case 'L':
            if (j == 1) return {'L', i};
            --j, came = 'R';
            break;
        case 'R':
            if (j == n) return {'R', i};
            ++j, came = 'L';
            break;
        case 'U':
            if (i == 1) return {'T', j};
            --i, came = 'D';
            break;
        case 'D':
            if (i == n) return {'B', j};
            ++i, came = 'U';
            break;
        default: throw std::runtime_error("convention mismatch: dead end");
        }
    }
    throw std::runtime_error("convention mismatch: path does not terminate");
}

}  // namespace

bool is_asm(const AsmMatrix& m)
{
    for (int i = 1; i <= m.n; ++i) {
        int row = 0, col = 0;
        for (int j = 1; j <= m.n; ++j) {
            row += m(i, j);
            col += m(j, i);
            if (row < 0 || row > 1 || col < 0 || col > 1) return false;
        }
        if (row != 1 || col != 1) return false;
    }
    return true;
}

bool is_hv_symmetric(const AsmMatrix& m)
{
    for (int i = 1; i <= m.n; ++i)
        for (int j = 1; j <= m.n; ++j)
            if (m(i, j) != m(m.n + 1 - i, j) || m(i, j) != m(i, m.n + 1 - j)) return false;
    return true;
}

int boundary_flag(int n)
{
    return centre(n) & 1;
}

bool is_valid_fpl(const FplConfig& c)
{
    const int n = c.n, flag = boundary_flag(n);
    for (int k = 1; k <= n; ++k) {
        // External edges carry flux 0 on the top and left, 1 on the bottom and right.
        if (c.vertical(0, k) != ((parity(0, k) ^ 1 ^ flag) != 0)) return false;
        if (c.vertical(n, k) != ((1 ^ parity(n, k) ^ 1 ^ flag) != 0)) return false;
        if (c.horizontal(k, 0) != ((parity(k, 0) ^ flag) != 0)) return false;
        if (c.horizontal(k, n) != ((1 ^ parity(k, n) ^ flag) != 0)) return false;
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (c.horizontal(i, j - 1) + c.horizontal(i, j) + c.vertical(i - 1, j) + c.vertical(i, j) != 2) return false;
    return true;
}

bool is_hv_symmetric(const FplConfig& c)
{
    const int n = c.n;
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if (c.horizontal(i, j) != c.horizontal(i, n - j) || c.horizontal(i, j) != c.horizontal(n + 1 - i, j))
                return false;
    for (int i = 0; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (c.vertical(i, j) != c.vertical(n - i, j) || c.vertical(i, j) != c.vertical(i, n + 1 - j)) return false;
    return true;
}

std::vector<FplConfig> enumerate_hvsfpl(int n)
{
    require_odd(n);
    const int m = centre(n), flag = boundary_flag(n);
    FplConfig c(n);
    for (int k = 1; k <= n; ++k) {
        c.set_vertical(0, k, parity(0, k) ^ 1 ^ flag);
        c.set_horizontal(k, 0, parity(k, 0) ^ flag);
    }
    std::vector<FplConfig> out;
    auto mirror = [&](FplConfig x) {
        for (int i = 1; i <= m; ++i)
            for (int j = 0; j < m; ++j) {
                const bool on = x.horizontal(i, j);
                x.set_horizontal(i, n - j, on);
                x.set_horizontal(n + 1 - i, j, on);
                x.set_horizontal(n + 1 - i, n - j, on);
            }
        for (int i = 0; i < m; ++i)
            for (int j = 1; j <= m; ++j) {
                const bool on = x.vertical(i, j);
                x.set_vertical(n - i, j, on);
                x.set_vertical(i, n + 1 - j, on);
                x.set_vertical(n - i, n + 1 - j, on);
            }
        return x;
    };
    // Vertices of the quadrant in row-major order; left and upper edges are known
    // on arrival. On the central column the right edge mirrors the left one, on
    // the central row the lower edge mirrors the upper one.
    std::function<void(int, int)> visit = [&](int i, int j) {
        if (i > m) {
            out.push_back(mirror(c));
            return;
        }
        const int ni = j == m ? i + 1 : i, nj = j == m ? 1 : j + 1;
        const int have = c.horizontal(i, j - 1) + c.vertical(i - 1, j);
        for (int right = 0; right <= 1; ++right) {
            if (j == m && right != c.horizontal(i, j - 1)) continue;
            const int down = 2 - have - right;
            if (down < 0 || down > 1) continue;
            if (i == m && down != c.vertical(i - 1, j)) continue;
            c.set_horizontal(i, j, right);
            c.set_vertical(i, j, down);
            visit(ni, nj);
        }
        c.set_horizontal(i, j, false);
        c.set_vertical(i, j, false);
    };
    visit(1, 1);
    std::sort(out.begin(), out.end());
    return out;
}

AsmMatrix fpl_to_asm(const FplConfig& c)
{
    const int n = c.n, flag = boundary_flag(n);
    AsmMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const int right = c.horizontal(i, j) ^ parity(i, j) ^ flag;
            const int left = c.horizontal(i, j - 1) ^ parity(i, j - 1) ^ flag;
            const int below = c.vertical(i, j) ^ parity(i, j) ^ 1 ^ flag;
            const int above = c.vertical(i - 1, j) ^ parity(i - 1, j) ^ 1 ^ flag;
            if (right - left != below - above) throw std::logic_error("bijection broken: ice rule");
            m(i, j) = right - left;
        }
    if (!is_asm(m)) throw std::logic_error("bijection broken: not an ASM");
    return m;
}

FplConfig asm_to_fpl(const AsmMatrix& m)
{
    if (!is_asm(m)) throw std::invalid_argument("not an alternating sign matrix");
    const int n = m.n, flag = boundary_flag(n);
    FplConfig c(n);
    for (int i = 1; i <= n; ++i) {
        int flux = 0;
        for (int j = 0; j <= n; ++j) {
            if (j > 0) flux += m(i, j);
            c.set_horizontal(i, j, flux ^ parity(i, j) ^ flag);
        }
    }
    for (int j = 1; j <= n; ++j) {
        int flux = 0;
        for (int i = 0; i <= n; ++i) {
            if (i > 0) flux += m(i, j);
            c.set_vertical(i, j, flux ^ parity(i, j) ^ 1 ^ flag);
        }
    }
    return c;
}

std::vector<AsmMatrix> enumerate_hvsasm(int n)
{
    require_odd(n);
    const int c = centre(n), b = c - 1;
    // The central row and column alternate 1, -1, ..., 1. In the free b x b block
    // row i and column i sum to [i even], partial sums in {0, 1}.
    std::vector<std::vector<int>> block(static_cast<std::size_t>(b), std::vector<int>(static_cast<std::size_t>(b), 0));
    std::vector<int> col(static_cast<std::size_t>(b), 0);
    std::vector<AsmMatrix> out;
    std::function<void(int, int, int)> fill = [&](int i, int j, int row) {
        if (i == b) {
            for (int k = 0; k < b; ++k)
                if (col[k] != ((k + 1) % 2 == 0)) return;
            AsmMatrix m(n);
            for (int r = 1; r <= n; ++r)
                for (int s = 1; s <= n; ++s) {
                    const int rr = std::min(r, n + 1 - r), ss = std::min(s, n + 1 - s);
                    if (rr == c && ss == c) m(r, s) = c % 2 ? 1 : -1;
                    else if (rr == c) m(r, s) = ss % 2 ? 1 : -1;
                    else if (ss == c) m(r, s) = rr % 2 ? 1 : -1;
                    else m(r, s) = block[rr - 1][ss - 1];
                }
            out.push_back(m);
            return;
        }
        if (j == b) {
            if (row == ((i + 1) % 2 == 0)) fill(i + 1, 0, 0);
            return;
        }
        for (int v = -1; v <= 1; ++v) {
            const int r = row + v, s = col[j] + v;
            if (r < 0 || r > 1 || s < 0 || s > 1) continue;
            block[i][j] = v;
            col[j] = s;
            fill(i, j + 1, r);
            col[j] -= v;
        }
        block[i][j] = 0;
    };
    fill(0, 0, 0);
    return out;
}

LinkPattern connectivity(const FplConfig& c)
{
    const int n = c.n, m = centre(n), L = (n - 3) / 2;
    if (L < 1) throw std::invalid_argument("size must be at least 5");
    std::vector<Terminal> terms;
    for (int j = m - 1; j >= 1; --j)
        if (c.vertical(0, j)) terms.push_back({'T', j});
    for (int i = 1; i < m; ++i)
        if (c.horizontal(i, 0)) terms.push_back({'L', i});
    if (static_cast<int>(terms.size()) != L + 1) throw std::runtime_error("convention mismatch: terminal count");
    auto index_of = [&](const Terminal& t) {
        const auto it = std::find(terms.begin(), terms.end(), t);
        return it == terms.end() ? -1 : static_cast<int>(it - terms.begin());
    };
    if (index_of(trace(c, terms.back())) >= 0) throw std::runtime_error("convention mismatch: last terminal is paired");
    std::vector<int> partner(static_cast<std::size_t>(L), -1);
    for (int k = 0; k < L; ++k) {
        const Terminal end = trace(c, terms[static_cast<std::size_t>(k)]);
        const int p = index_of(end);
        if (p == L) throw std::runtime_error("convention mismatch: last terminal is paired");
        if (p < 0 && end.side != 'B' && end.side != 'L')
            throw std::runtime_error("convention mismatch: path crosses the vertical axis");
        partner[static_cast<std::size_t>(k)] = p;
    }
    LinkPattern pattern;
    try {
        pattern = LinkPattern::from_partners(partner);
    } catch (const std::exception&) {
        throw std::runtime_error("convention mismatch: invalid pattern");
    }
    for (int k = 0; k < L; ++k)
        if (pattern.partner(k + 1) != partner[static_cast<std::size_t>(k)] + 1)
            throw std::runtime_error("convention mismatch: crossing arcs");
    return pattern;
}

int refined_weight(const AsmMatrix& m)
{
    const int row = (m.n + 3) / 2, c = centre(m.n);
    int count = 0;
    for (int j = 1; j < c; ++j) count += m(row, j) == -1;
    return count;
}

int path_weight(const FplConfig& c)
{
    const int m = centre(c.n);
    int k = 0;
    for (int j = 1; j < m; ++j) k += c.vertical(m, j) && c.vertical(m + 1, j);
    return k / 2;
}

FplClassification classify(const std::vector<FplConfig>& configs)
{
    if (configs.empty()) throw std::invalid_argument("nothing to classify");
    FplClassification out;
    out.L = (configs.front().n - 3) / 2;
    const PatternBasis basis(out.L);
    out.patterns = basis.patterns();
    out.classes.assign(basis.dimension(), {});
    for (const auto& c : configs) {
        const auto k = basis.index(connectivity(c));
        const int w = refined_weight(fpl_to_asm(c));
        auto& cls = out.classes[k];
        ++cls.count;
        std::vector<BigRational> mono(static_cast<std::size_t>(w) + 1, BigRational(0));
        mono.back() = 1;
        cls.weighted += APolynomial(std::move(mono));
        out.path_weight_agreements += path_weight(c) == w;
        ++out.total;
    }
    return out;
}

Report verify_conjectures(int L, const FplClassification& cls)
{
    const auto gs = ground_state(L);
    Report r;
    const std::string tag = "L=" + std::to_string(L) + " ";
    for (std::size_t k = 0; k < cls.classes.size(); ++k) {
        const auto& c = cls.classes[k];
        const bool counts = BigRational(static_cast<unsigned long>(c.count)) == gs.components[k](1);
        const bool refined = c.weighted == gs.components[k];
        const std::string enc = cls.patterns[k].encoding();
        r.add(tag + "class " + enc + " count " + std::to_string(c.count) + (counts ? " VERIFIED" : " REFUTED"), counts,
              "ground state at a=1 gives " + to_string(gs.components[k](1)));
        r.add(tag + "class " + enc + " a-polynomial " + c.weighted.str("a") + (refined ? " VERIFIED" : " REFUTED"),
              refined, "ground state gives " + gs.components[k].str("a"));
    }
    const bool total = BigInt(static_cast<unsigned long>(cls.total)) == hvsasm_count(L);
    r.add(tag + "total " + std::to_string(cls.total) + " = HVSASM count" + (total ? " VERIFIED" : " REFUTED"), total,
          "product formula gives " + hvsasm_count(L).get_str());
    APolynomial weighted;
    for (const auto& c : cls.classes) weighted += c.weighted;
    const bool sum = weighted == a_polynomial_sum(gs);
    r.add(tag + "weighted total " + weighted.str("a") + (sum ? " VERIFIED" : " REFUTED"), sum,
          "ground-state sum " + a_polynomial_sum(gs).str("a"));
    const bool paths = cls.path_weight_agreements == cls.total;
    r.add(tag + "path-based weight agrees on " + std::to_string(cls.path_weight_agreements) + "/" +
              std::to_string(cls.total) + (paths ? " VERIFIED" : " REFUTED"),
          paths);
    return r;
}

}  // namespace loopqkz
