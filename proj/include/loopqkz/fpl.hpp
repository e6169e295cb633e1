#pragma once

#include "loopqkz/ground_state.hpp"
#include "loopqkz/link_pattern.hpp"
#include "loopqkz/report.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace loopqkz {

/// n x n matrix with entries in {-1, 0, 1}; indices are 1-based.
struct AsmMatrix {
    int n = 0;
    std::vector<int> entries;

    explicit AsmMatrix(int size = 0) : n(size), entries(static_cast<std::size_t>(size) * size, 0) {}
    int& operator()(int i, int j) { return entries[static_cast<std::size_t>((i - 1) * n + (j - 1))]; }
    int operator()(int i, int j) const { return entries[static_cast<std::size_t>((i - 1) * n + (j - 1))]; }
    friend bool operator==(const AsmMatrix&, const AsmMatrix&) = default;
};

/// Row and column partial sums stay in {0, 1} and end at 1.
bool is_asm(const AsmMatrix& m);
bool is_hv_symmetric(const AsmMatrix& m);

/// Edge occupation of an n x n fully packed loop grid, external edges included.
/// horizontal(i, j) is the edge right of vertex (i, j) for j = 0..n (j = 0 and
/// j = n external); vertical(i, j) is the edge below (i, j) for i = 0..n.
struct FplConfig {
    int n = 0;
    std::vector<std::uint8_t> h, v;

    explicit FplConfig(int size = 0)
        : n(size), h(static_cast<std::size_t>(size) * (size + 1), 0), v(static_cast<std::size_t>(size + 1) * size, 0)
    {
    }
    bool horizontal(int i, int j) const { return h[static_cast<std::size_t>((i - 1) * (n + 1) + j)] != 0; }
    bool vertical(int i, int j) const { return v[static_cast<std::size_t>(i * n + (j - 1))] != 0; }
    void set_horizontal(int i, int j, bool on) { h[static_cast<std::size_t>((i - 1) * (n + 1) + j)] = on; }
    void set_vertical(int i, int j, bool on) { v[static_cast<std::size_t>(i * n + (j - 1))] = on; }
    friend bool operator==(const FplConfig&, const FplConfig&) = default;
    friend auto operator<=>(const FplConfig& a, const FplConfig& b)
    {
        return a.h != b.h ? a.h <=> b.h : a.v <=> b.v;
    }
};

/// Occupation parity offset: an edge is occupied iff its six-vertex flux differs
/// from the parity of its left (upper) endpoint, shifted by this flag. It is
/// chosen so that the external edge above the central column is occupied, which
/// makes the central column one straight path.
int boundary_flag(int n);

/// Degree 2 at every vertex, alternating external edges as fixed by boundary_flag.
bool is_valid_fpl(const FplConfig& c);
bool is_hv_symmetric(const FplConfig& c);

/// All horizontally and vertically symmetric FPLs of odd size n >= 3, by
/// backtracking over the upper-left quadrant including both axes. Sorted.
std::vector<FplConfig> enumerate_hvsfpl(int n);

/// Six-vertex correspondence. Throws "bijection broken" on an invariant violation.
AsmMatrix fpl_to_asm(const FplConfig& c);
FplConfig asm_to_fpl(const AsmMatrix& m);

/// All HV-symmetric ASMs of odd size n, from their free upper-left block.
/// Independent of the FPL search.
std::vector<AsmMatrix> enumerate_hvsasm(int n);

/// Link pattern on L = (n-3)/2 points. The upper-left quadrant's terminals are
/// read from the top edge next to the vertical axis towards the corner, then
/// down the left edge; the last one, next to the horizontal axis, always crosses
/// that axis and is dropped. A path crossing the horizontal axis reads '.'.
/// Throws "convention mismatch" if the trace contradicts this picture.
LinkPattern connectivity(const FplConfig& c);

/// Number of -1 entries in row (n+3)/2, strictly left of the central column.
int refined_weight(const AsmMatrix& m);

/// floor(k/2), k the number of vertices in row (n+3)/2 left of the centre that a
/// path passes straight through vertically.
int path_weight(const FplConfig& c);

struct FplClass {
    std::size_t count = 0;
    APolynomial weighted;  // sum over the class of a^{refined_weight}
};
/// Classes keyed by pattern, in canonical basis order.
struct FplClassification {
    int L = 0;
    std::vector<LinkPattern> patterns;
    std::vector<FplClass> classes;
    std::size_t total = 0;
    std::size_t path_weight_agreements = 0;
};
FplClassification classify(const std::vector<FplConfig>& configs);

/// Per-class counts and a-polynomials against ground_state(L), totals against
/// hvsasm_count(L) and the ground-state sum. Items are findings: their identity
/// reads VERIFIED or REFUTED.
Report verify_conjectures(int L, const FplClassification& cls);

}  // namespace loopqkz
