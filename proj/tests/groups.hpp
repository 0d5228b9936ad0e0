#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "conductor/artin.hpp"
#include "conductor/group.hpp"
#include "support.hpp"

namespace testing_support {

inline FiniteGroup c2() { return FiniteGroup::cyclic(2, "s"); }

inline FiniteGroup symmetric_three() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> ab{};
            for (int k = 0; k < 3; ++k) ab[k] = perms[a][perms[b][k]];
            table[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), ab) - perms.begin());
        }
    return FiniteGroup(table);
}

inline std::vector<FiniteGroup> sample_groups() {
    return {c2(),
            FiniteGroup::cyclic(3),
            FiniteGroup::cyclic(4),
            FiniteGroup::klein_four(),
            FiniteGroup::cyclic(6),
            FiniteGroup::product(FiniteGroup::cyclic(2, "a"), FiniteGroup::cyclic(4, "b")),
            symmetric_three()};
}

// G_0 = G, then a random descending run of subgroups normal in G, ending in 1.
inline RamificationData random_filtration(const FiniteGroup& g, bool totally_ramified = true) {
    std::vector<std::vector<int>> normal;
    for (const auto& h : g.subgroups())
        if (g.is_normal(h, g.all_elements())) normal.push_back(h);
    std::vector<int> current = g.all_elements();
    if (!totally_ramified) current = normal[uniform(0, static_cast<int>(normal.size()) - 1)];
    std::vector<std::vector<int>> c;
    while (current.size() > 1) {
        const int repeats = uniform(1, 3);
        for (int k = 0; k < repeats; ++k) c.push_back(current);
        std::vector<std::vector<int>> smaller;
        for (const auto& h : normal)
            if (h.size() < current.size() && std::includes(current.begin(), current.end(), h.begin(), h.end()))
                smaller.push_back(h);
        current = smaller[uniform(0, static_cast<int>(smaller.size()) - 1)];
    }
    c.push_back(current);
    return {g, c};
}

}  // namespace testing_support
