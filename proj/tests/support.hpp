#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ocalc/completion.hpp"
#include "ocalc/cycles.hpp"
#include "ocalc/frobenius.hpp"
#include "ocalc/surfaces.hpp"

namespace testing {

using namespace ocalc;

// "(p q)()" style boundaries, "@" for none.
inline Surface S(const char* open, int g, std::initializer_list<const char*> closed = {}) {
    LabelSet c;
    for (const char* l : closed) c.insert(Label(l));
    return Surface(parse_multicycle(open), g, c);
}

inline NestedSurface N(std::initializer_list<std::pair<const char*, int>> nests, int g,
                       std::initializer_list<const char*> closed = {}) {
    std::vector<Nest> ns;
    for (const auto& [open, gi] : nests) ns.emplace_back(parse_multicycle(open), gi);
    LabelSet c;
    for (const char* l : closed) c.insert(Label(l));
    return NestedSurface(std::move(ns), g, c);
}

inline std::vector<Label> labels(std::initializer_list<const char*> ls) { return {ls.begin(), ls.end()}; }

inline std::vector<Label> numbered(const char* prefix, int n) {
    std::vector<Label> out;
    for (int i = 0; i < n; ++i) out.emplace_back(prefix + std::to_string(i));
    return out;
}

// Enumeration oracle: every map from open labels to b boxes, every ordering of
// each box, read as cycles; the set quotient removes the overcount.
inline std::set<Surface> brute_force_qoc(const std::vector<Label>& open, const std::vector<Label>& closed,
                                         int twice_genus) {
    std::set<Surface> out;
    const LabelSet cs(closed.begin(), closed.end());
    const int n = static_cast<int>(open.size());
    for (int g = 0; 4 * g <= twice_genus + 2; ++g)
        for (int b = 0; b <= n + twice_genus + 2; ++b) {
            if (4 * g + 2 * b - 2 + static_cast<int>(closed.size()) != twice_genus) continue;
            if (b == 0 && n > 0) continue;
            std::vector<int> box(n, 0);
            while (true) {
                std::vector<std::vector<Label>> groups(b);
                for (int i = 0; i < n; ++i) groups[box[i]].push_back(open[i]);
                for (auto& grp : groups) std::sort(grp.begin(), grp.end());
                // odometer over the permutations of every box
                std::vector<std::vector<Label>> perm = groups;
                std::function<void(int)> rec = [&](int k) {
                    if (k == b) {
                        std::vector<Cycle> cycles;
                        for (const auto& w : perm) cycles.push_back(canonical_cycle(w));
                        out.insert(Surface(Multicycle(cycles), g, cs));
                        return;
                    }
                    std::sort(perm[k].begin(), perm[k].end());
                    do rec(k + 1);
                    while (std::next_permutation(perm[k].begin(), perm[k].end()));
                };
                rec(0);
                int i = 0;
                while (i < n && ++box[i] == b) box[i++] = 0;
                if (i == n || b == 0) break;
            }
        }
    return out;
}

// The discarded families of the cyclic KP part, read off the boundary data.
inline bool kp_discard_type(const Surface& x) {
    if (x.genus() != 0) return false;
    const std::size_t b = x.boundary_count(), empties = x.boundaries().empty_cycle_count();
    const std::size_t c = x.closed().size();
    if (c == 0 && b >= 3 && empties == b) return true;
    if (c == 0 && b >= 2 && empties == b - 1) return true;
    if (c == 1 && b >= 2 && empties == b) return true;
    return false;
}

// 2×2 rational matrices for an independent Cardy computation on M_2.
using M2 = std::array<std::array<Scalar, 2>, 2>;

inline M2 unit(int a, int b) {
    M2 m{};
    m[a][b] = 1;
    return m;
}

inline M2 mul(const M2& x, const M2& y) {
    M2 m{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) m[i][j] += x[i][k] * y[k][j];
    return m;
}

inline Scalar tr(const M2& x) { return x[0][0] + x[1][1]; }

inline M2 basis(int i) { return unit(i / 2, i % 2); }

// Σ_{i,j} tr(a E_ij b E_ji): the open channel with the trace copairing Σ E_ij ⊗ E_ji.
inline Scalar cardy_open_m2(int a, int b) {
    Scalar s = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) s += tr(mul(mul(mul(basis(a), unit(i, j)), basis(b)), unit(j, i)));
    return s;
}

// tr(a·1) tr(1·b) / λ: the closed channel through B = 𝕜 with form λ.
inline Scalar cardy_closed_m2(int a, int b, const Scalar& lambda) {
    M2 one{};
    one[0][0] = one[1][1] = 1;
    return tr(mul(basis(a), one)) * tr(mul(one, basis(b))) / lambda;
}

}  // namespace testing
