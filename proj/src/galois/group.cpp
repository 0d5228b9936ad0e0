#include "conductor/group.hpp"

#include <algorithm>
#include <set>

#include "conductor/errors.hpp"

namespace conductor {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, int identity, std::vector<std::string> labels)
    : table_(std::move(table)), identity_(identity), labels_(std::move(labels)) {
    const int m = order();
    if (m < 1 || m > max_order)
        throw ValidationError("table", "group order must be between 1 and " + std::to_string(max_order));
    for (int a = 0; a < m; ++a) {
        if (static_cast<int>(table_[a].size()) != m) throw ValidationError("table", "multiplication table is not square");
        for (int b = 0; b < m; ++b)
            if (table_[a][b] < 0 || table_[a][b] >= m) throw ValidationError("table", "entry out of range");
    }
    if (identity_ < 0 || identity_ >= m) throw ValidationError("identity", "identity index out of range");
    for (int a = 0; a < m; ++a)
        if (table_[identity_][a] != a || table_[a][identity_] != a)
            throw ValidationError("identity", "element " + std::to_string(identity_) + " is not an identity");
    inverse_.assign(m, -1);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
        if (inverse_[a] < 0) throw ValidationError("table", "element " + std::to_string(a) + " has no inverse");
    }
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw ValidationError("table", "multiplication is not associative");
    if (labels_.empty())
        for (int a = 0; a < m; ++a) labels_.push_back(a == identity_ ? "1" : "g" + std::to_string(a));
    if (static_cast<int>(labels_.size()) != m) throw ValidationError("labels", "expected one label per element");
}

FiniteGroup FiniteGroup::cyclic(int m, const std::string& generator) {
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    std::vector<std::string> labels;
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) t[a][b] = (a + b) % m;
        labels.push_back(a == 0 ? "1" : (a == 1 ? generator : generator + "^" + std::to_string(a)));
    }
    return FiniteGroup(std::move(t), 0, std::move(labels));
}

FiniteGroup FiniteGroup::product(const FiniteGroup& g, const FiniteGroup& h) {
    const int m = g.order(), k = h.order();
    std::vector<std::vector<int>> t(m * k, std::vector<int>(m * k));
    std::vector<std::string> labels;
    for (int x = 0; x < m * k; ++x) {
        const int a = x % m, b = x / m;
        for (int y = 0; y < m * k; ++y) t[x][y] = g.multiply(a, y % m) + m * h.multiply(b, y / m);
        if (a == g.identity()) labels.push_back(h.labels()[b]);
        else if (b == h.identity()) labels.push_back(g.labels()[a]);
        else labels.push_back(g.labels()[a] + "*" + h.labels()[b]);
    }
    return FiniteGroup(std::move(t), g.identity() + m * h.identity(), std::move(labels));
}

FiniteGroup FiniteGroup::klein_four() { return product(cyclic(2, "s1"), cyclic(2, "s2")); }

std::vector<int> FiniteGroup::all_elements() const {
    std::vector<int> all(order());
    for (int a = 0; a < order(); ++a) all[a] = a;
    return all;
}

bool FiniteGroup::is_subgroup(const std::vector<int>& subset) const {
    std::set<int> s(subset.begin(), subset.end());
    if (s.empty() || !s.count(identity_)) return false;
    for (int a : s) {
        if (a < 0 || a >= order()) return false;
        if (!s.count(inverse_[a])) return false;
        for (int b : s)
            if (!s.count(table_[a][b])) return false;
    }
    return true;
}

bool FiniteGroup::is_normal(const std::vector<int>& sub, const std::vector<int>& ambient) const {
    std::set<int> s(sub.begin(), sub.end());
    for (int g : ambient)
        for (int h : sub)
            if (!s.count(table_[table_[g][h]][inverse_[g]])) return false;
    return true;
}

std::vector<int> FiniteGroup::generated_by(const std::vector<int>& gens) const {
    std::set<int> s{identity_};
    std::vector<int> frontier{identity_};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int a : frontier)
            for (int g : gens) {
                int b = table_.at(a).at(g);
                if (s.insert(b).second) next.push_back(b);
            }
        frontier = std::move(next);
    }
    return {s.begin(), s.end()};
}

std::vector<std::vector<int>> FiniteGroup::subgroups() const {
    std::set<std::vector<int>> found{{identity_}};
    std::vector<std::vector<int>> frontier{{identity_}};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& h : frontier)
            for (int g = 0; g < order(); ++g) {
                if (std::binary_search(h.begin(), h.end(), g)) continue;
                std::vector<int> gens = h;
                gens.push_back(g);
                auto bigger = generated_by(gens);
                if (found.insert(bigger).second) next.push_back(std::move(bigger));
            }
        frontier = std::move(next);
    }
    std::vector<std::vector<int>> out(found.begin(), found.end());
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

}  // namespace conductor
