#pragma once

#include <string>
#include <vector>

namespace conductor {

// A finite group given by its multiplication table; elements are 0..m-1 and
// table[a][b] = a*b.
class FiniteGroup {
  public:
    static constexpr int max_order = 64;

    // Validates closure, identity, inverses and associativity.
    explicit FiniteGroup(std::vector<std::vector<int>> table, int identity = 0, std::vector<std::string> labels = {});

    static FiniteGroup cyclic(int m, const std::string& generator = "s");
    // Element (a, b) has index a + order(g) * b.
    static FiniteGroup product(const FiniteGroup& g, const FiniteGroup& h);
    // {1, s1, s2, s1*s2}.
    static FiniteGroup klein_four();

    int order() const { return static_cast<int>(table_.size()); }
    int identity() const { return identity_; }
    int multiply(int a, int b) const { return table_.at(a).at(b); }
    int inverse(int a) const { return inverse_.at(a); }
    const std::vector<std::vector<int>>& table() const { return table_; }
    const std::vector<std::string>& labels() const { return labels_; }

    std::vector<int> all_elements() const;
    bool is_subgroup(const std::vector<int>& subset) const;
    // `sub` is normal in `ambient`; both must be subgroups.
    bool is_normal(const std::vector<int>& sub, const std::vector<int>& ambient) const;
    // Sorted subgroup generated by `gens`.
    std::vector<int> generated_by(const std::vector<int>& gens) const;
    // Every subgroup, each sorted, in a deterministic order.
    std::vector<std::vector<int>> subgroups() const;

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
        return a.table_ == b.table_ && a.identity_ == b.identity_;
    }

  private:
    std::vector<std::vector<int>> table_;
    int identity_;
    std::vector<int> inverse_;
    std::vector<std::string> labels_;
};

}  // namespace conductor
