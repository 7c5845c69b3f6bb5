#pragma once

#include <cassert>
#include <vector>

#include "common.hpp"

namespace ctmatch {

// Cartesian tree of a sequence with the leftmost minimum as root. All stored
// indices are 1-based; 0 in `left`/`right` means "no child", and `root` is 0
// only for the empty tree. The root is its own parent.
struct CartesianTree {
    std::vector<Index> parent;
    std::vector<Index> left;
    std::vector<Index> right;
    Index root = 0;

    [[nodiscard]] std::size_t size() const noexcept { return parent.size(); }
    [[nodiscard]] bool empty() const noexcept { return parent.empty(); }

    friend bool operator==(const CartesianTree&, const CartesianTree&) = default;
};

using ParentDistance = std::vector<Index>;
using BinaryRep = std::vector<std::uint8_t>;
using GlobalParent = std::vector<Index>;

// Right-spine stack construction. Popping only strictly larger values keeps
// equal values to the left as ancestors, which is the leftmost-minimum rule.
[[nodiscard]] inline CartesianTree build_cartesian_tree(SeqView s) {
    const std::size_t n = s.size();
    CartesianTree tree;
    tree.parent.assign(n, 0);
    tree.left.assign(n, 0);
    tree.right.assign(n, 0);
    if (n == 0) {
        return tree;
    }

    std::vector<std::size_t> spine;
    spine.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t last_popped = n;
        while (!spine.empty() && s[spine.back()] > s[i]) {
            last_popped = spine.back();
            spine.pop_back();
        }
        if (last_popped != n) {
            tree.left[i] = last_popped + 1;
            tree.parent[last_popped] = i + 1;
        }
        if (!spine.empty()) {
            tree.right[spine.back()] = i + 1;
            tree.parent[i] = spine.back() + 1;
        }
        spine.push_back(i);
    }
    tree.root = spine.front() + 1;
    tree.parent[spine.front()] = tree.root;
    return tree;
}

// pd[i] = i - max{ j < i : s[j] <= s[i] }, or 0 when no such j exists.
[[nodiscard]] inline ParentDistance parent_distance(SeqView s) {
    const std::size_t n = s.size();
    ParentDistance pd(n, 0);
    std::vector<std::size_t> stack;
    stack.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        while (!stack.empty() && s[stack.back()] > s[i]) {
            stack.pop_back();
        }
        pd[i] = stack.empty() ? 0 : i - stack.back();
        stack.push_back(i);
    }
    return pd;
}

// bits[i] = 1 iff s[i] <= s[i+1]; length n-1.
[[nodiscard]] inline BinaryRep binary_representation(SeqView s) {
    if (s.size() < 2) {
        return {};
    }
    BinaryRep bits(s.size() - 1);
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        bits[i] = s[i] <= s[i + 1] ? 1 : 0;
    }
    return bits;
}

[[nodiscard]] inline GlobalParent global_parent(SeqView s) {
    return build_cartesian_tree(s).parent;
}

// True iff CT(window) == CT(pattern), given the pattern's global-parent
// array. No representation of the window is built.
[[nodiscard]] inline bool verify_match(SeqView window, const GlobalParent& gp) noexcept {
    assert(window.size() == gp.size());
    const std::size_t n = gp.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t p = gp[i] - 1;
        const Value parent_value = window[p];
        const Value value = window[i];
        if (parent_value < value) {
            continue;
        }
        if (parent_value == value && p <= i) {
            continue;
        }
        return false;
    }
    return true;
}

// 1-based offset of the leftmost minimum inside the view.
[[nodiscard]] inline Index min_index(SeqView s) {
    if (s.empty()) {
        throw std::invalid_argument("min_index: empty view");
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] < s[best]) {
            best = i;
        }
    }
    return best + 1;
}

} // namespace ctmatch
