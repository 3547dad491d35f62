#pragma once

#include <map>
#include <stdexcept>
#include <vector>

namespace concordia {

// Finite deck group with a distinguished non-trivial element, either cyclic
// or given by an explicit multiplication table (validated as a group).
class FiniteGroupSpec {
public:
    static FiniteGroupSpec cyclic(int order, int g_index);
    static FiniteGroupSpec from_table(std::vector<std::vector<int>> table, int g_index);

    int order() const { return order_; }
    int distinguished() const { return g_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const;
    int inverse(int a) const;
    int element_order(int a) const;

private:
    FiniteGroupSpec() = default;
    int order_ = 0;
    int g_ = 0;
    int identity_ = 0;
    bool cyclic_ = true;
    std::vector<std::vector<int>> table_;
};

// Multiset of pairwise linking numbers over unordered pairs of distinct
// components; compared by exact multiplicity equality.
struct LinkingMultiset {
    std::map<long long, std::size_t> counts;

    std::size_t total_pairs() const;
    long long max_value() const;
    void add(long long v) { ++counts[v]; }
    bool operator==(const LinkingMultiset&) const = default;
};

// Covering link of the local twist family in a spherical space form: the
// lifts are indexed by group elements, lifts translated by the distinguished
// element (or its inverse) link n, twice that when it has order two, and all
// other pairs link zero.
LinkingMultiset spherical_cover_linking(const FiniteGroupSpec& group, long long n);

// Induced cyclic cover of the genus-2 handlebody family: k lifts arranged in
// a cycle, adjacent lifts link n + dist_correction (2n + dist_correction in
// the two-torsion case k = 2), non-adjacent lifts link zero.
LinkingMultiset handlebody_cover_linking(int k, long long n, bool two_torsion = false,
                                         long long dist_correction = 0);

// True exactly when the multisets differ, i.e. the knots are obstructed from
// being almost-concordant.
bool linking_obstruction(const LinkingMultiset& a, const LinkingMultiset& b);

}  // namespace concordia
