#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace supersym {

// Label (Lambda^a; Lambda^s): strictly decreasing fermionic parts >= 0 and an
// ordinary partition of plain parts >= 1.
struct SuperPartition {
    std::vector<int> dotted; // strictly decreasing, values >= 0
    std::vector<int> plain;  // weakly decreasing, values >= 1

    int total_degree() const;
    int fermionic_degree() const { return static_cast<int>(dotted.size()); }
    int n_degree() const { return total_degree() + fermionic_degree(); }
    int length() const { return static_cast<int>(dotted.size() + plain.size()); }
    int parity() const { return fermionic_degree() & 1; }

    bool is_valid() const;
    bool is_empty() const { return dotted.empty() && plain.empty(); }

    bool operator==(const SuperPartition&) const = default;
    // Graded lexicographic: n_degree, then fermionic degree, then parts.
    bool operator<(const SuperPartition& o) const;

    std::string to_string() const; // "(2,1;3,1)"
};

struct DottedEntry {
    int value = 0;
    bool dotted = false;

    int weight() const { return value + (dotted ? 1 : 0); } // contribution to n_degree

    bool operator==(const DottedEntry&) const = default;
    // Undotted entries order before dotted ones.
    auto operator<=>(const DottedEntry& o) const
    {
        if (auto c = dotted <=> o.dotted; c != 0)
            return c;
        return value <=> o.value;
    }
};

// Finite sequence of undotted entries >= 1 and dotted entries >= 0; repeats
// among dotted entries are allowed.
struct DottedComposition {
    std::vector<DottedEntry> entries;

    int total_degree() const;
    int fermionic_degree() const;
    int n_degree() const;
    int length() const { return static_cast<int>(entries.size()); }
    int parity() const { return fermionic_degree() & 1; }

    bool is_valid() const;

    std::vector<int> eta() const; // 0/1 dotted flags

    bool operator==(const DottedComposition&) const = default;
    bool operator<(const DottedComposition& o) const;

    std::string to_string() const; // "[1~,0~,3]"

    static DottedComposition concat(const DottedComposition& a, const DottedComposition& b);
    DottedComposition prefix(int k) const;
    DottedComposition suffix(int k) const; // entries k..end

    // The canonical rearrangement of a superpartition: dotted parts first.
    static DottedComposition of(const SuperPartition& sp);
};

// All superpartitions with n_degree = k, each once, in graded-lex order.
std::vector<SuperPartition> superpartitions_of_degree(int k);

// All dotted compositions with n_degree = k, deterministic order.
// Sizes follow c(0) = 1, c(k) = 2 * 3^(k-1).
std::vector<DottedComposition> dotted_compositions_of_degree(int k);

// Sorts alpha into superpartition shape. The sign is the parity of the
// permutation that sorts the dotted entries into strictly decreasing order;
// nullopt when two dotted values coincide (alpha matches no superpartition).
std::optional<std::pair<SuperPartition, int>> sort_dotted(const DottedComposition& alpha);

// Product of factorials of part multiplicities of a weakly decreasing list.
unsigned long long aut_count(const std::vector<int>& parts);

} // namespace supersym
