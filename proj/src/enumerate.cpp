#include <algorithm>
#include <functional>

#include "ocalc/error.hpp"
#include "ocalc/surfaces.hpp"

namespace ocalc {

namespace {

// Calls `visit` once per cyclic order of `block`; the minimal label is pinned
// in front so each rotation class is produced once.
void for_each_cycle(std::vector<Label> block, const std::function<void(const Cycle&)>& visit) {
    std::sort(block.begin(), block.end());
    if (block.size() <= 1) {
        visit(canonical_cycle(block));
        return;
    }
    do {
        visit(canonical_cycle(block));
    } while (std::next_permutation(block.begin() + 1, block.end()));
}

// Set partitions of `labels` into exactly `k` nonempty blocks, via restricted
// growth strings.
void for_each_partition(const std::vector<Label>& labels, std::size_t k,
                        const std::function<void(const std::vector<std::vector<Label>>&)>& visit) {
    const std::size_t n = labels.size();
    if (k == 0) {
        if (n == 0) visit({});
        return;
    }
    if (k > n) return;
    std::vector<std::size_t> rgs(n, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
        if (n - i < k - used) return;
        if (i == n) {
            if (used != k) return;
            std::vector<std::vector<Label>> blocks(k);
            for (std::size_t t = 0; t < n; ++t) blocks[rgs[t]].push_back(labels[t]);
            visit(blocks);
            return;
        }
        for (std::size_t v = 0; v <= used && v < k; ++v) {
            rgs[i] = v;
            rec(i + 1, v == used ? used + 1 : used);
        }
    };
    rec(0, 0);
}

}  // namespace

std::vector<Multicycle> multicycles_with_blocks(const std::vector<Label>& labels, std::size_t blocks) {
    std::vector<Multicycle> out;
    const std::size_t max_nonempty = std::min(blocks, labels.size());
    const std::size_t min_nonempty = labels.empty() ? 0 : 1;
    for (std::size_t k = min_nonempty; k <= max_nonempty; ++k) {
        for_each_partition(labels, k, [&](const std::vector<std::vector<Label>>& parts) {
            std::vector<Cycle> chosen(blocks - k);  // the empty cycles
            std::function<void(std::size_t)> pick = [&](std::size_t i) {
                if (i == parts.size()) {
                    out.emplace_back(chosen);
                    return;
                }
                for_each_cycle(parts[i], [&](const Cycle& c) {
                    chosen.push_back(c);
                    pick(i + 1);
                    chosen.pop_back();
                });
            };
            pick(0);
        });
    }
    return out;
}

std::vector<Surface> enumerate_qoc(const LabelSet& open, const LabelSet& closed, TwiceGenus twice_genus) {
    for (const auto& l : open)
        if (closed.contains(l)) throw Error(Errc::LabelClash, "label '" + l.token() + "' is both open and closed");
    const std::vector<Label> open_list(open.begin(), open.end());
    const int c = static_cast<int>(closed.size());
    std::vector<Surface> out;
    // 4g + 2b - 2 + |C| = 2G
    for (int g = 0; 4 * g - 2 + c <= twice_genus.value; ++g) {
        const int twice_b = twice_genus.value - 4 * g + 2 - c;
        if (twice_b < 0 || twice_b % 2 != 0) continue;
        const auto b = static_cast<std::size_t>(twice_b / 2);
        if (b == 0 && !open.empty()) continue;
        for (auto& m : multicycles_with_blocks(open_list, b)) out.emplace_back(std::move(m), g, closed);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace ocalc
