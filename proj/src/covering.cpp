#include "concordia/covering.hpp"

#include <string>

namespace concordia {

FiniteGroupSpec FiniteGroupSpec::cyclic(int order, int g_index) {
    if (order < 2) throw std::invalid_argument("group must be non-trivial");
    if (g_index <= 0 || g_index >= order)
        throw std::invalid_argument("distinguished element must be non-trivial");
    FiniteGroupSpec g;
    g.order_ = order;
    g.g_ = g_index;
    g.identity_ = 0;
    g.cyclic_ = true;
    return g;
}

FiniteGroupSpec FiniteGroupSpec::from_table(std::vector<std::vector<int>> table, int g_index) {
    const int n = static_cast<int>(table.size());
    if (n < 2) throw std::invalid_argument("group must be non-trivial");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("multiplication table must be square");
        for (int x : row)
            if (x < 0 || x >= n) throw std::invalid_argument("table entry out of range");
    }

    int identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity < 0) throw std::invalid_argument("table has no identity element");
    for (int a = 0; a < n; ++a) {
        bool has_inverse = false;
        for (int b = 0; b < n && !has_inverse; ++b)
            has_inverse = table[a][b] == identity && table[b][a] == identity;
        if (!has_inverse)
            throw std::invalid_argument("element " + std::to_string(a) + " has no inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw std::invalid_argument("table is not associative");

    if (g_index < 0 || g_index >= n || g_index == identity)
        throw std::invalid_argument("distinguished element must be non-trivial");

    FiniteGroupSpec g;
    g.order_ = n;
    g.g_ = g_index;
    g.identity_ = identity;
    g.cyclic_ = false;
    g.table_ = std::move(table);
    return g;
}

int FiniteGroupSpec::mul(int a, int b) const {
    if (a < 0 || a >= order_ || b < 0 || b >= order_) throw std::out_of_range("group element");
    return cyclic_ ? (a + b) % order_ : table_[a][b];
}

int FiniteGroupSpec::inverse(int a) const {
    if (cyclic_) return (order_ - a) % order_;
    for (int b = 0; b < order_; ++b)
        if (mul(a, b) == identity_) return b;
    throw std::logic_error("validated group lost an inverse");
}

int FiniteGroupSpec::element_order(int a) const {
    int x = a, ord = 1;
    while (x != identity_) {
        x = mul(x, a);
        ++ord;
    }
    return ord;
}

std::size_t LinkingMultiset::total_pairs() const {
    std::size_t n = 0;
    for (const auto& [v, c] : counts) n += c;
    return n;
}

long long LinkingMultiset::max_value() const {
    if (counts.empty()) throw std::logic_error("empty multiset");
    return counts.rbegin()->first;
}

LinkingMultiset spherical_cover_linking(const FiniteGroupSpec& group, long long n) {
    if (n < 0) throw std::invalid_argument("twist parameter must be non-negative");
    const int N = group.order();
    const int g = group.distinguished();
    const int g_inv = group.inverse(g);
    const bool two_torsion = group.element_order(g) == 2;

    LinkingMultiset out;
    for (int a = 0; a < N; ++a) {
        for (int b = a + 1; b < N; ++b) {
            int rel = group.mul(group.inverse(a), b);  // lk(a K, b K) = lk(K, a^{-1} b K)
            long long lk = 0;
            if (two_torsion) {
                if (rel == g) lk = 2 * n;
            } else if (rel == g || rel == g_inv) {
                lk = n;
            }
            out.add(lk);
        }
    }
    return out;
}

LinkingMultiset handlebody_cover_linking(int k, long long n, bool two_torsion,
                                         long long dist_correction) {
    if (k < 2) throw std::invalid_argument("cover degree must be at least 2");
    if (n < 0) throw std::invalid_argument("twist parameter must be non-negative");

    LinkingMultiset out;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            int d = (j - i) % k;
            bool adjacent = d == 1 || d == k - 1;
            if (!adjacent) {
                out.add(0);
            } else if (two_torsion && k == 2) {
                out.add(2 * n + dist_correction);
            } else {
                out.add(n + dist_correction);
            }
        }
    }
    return out;
}

bool linking_obstruction(const LinkingMultiset& a, const LinkingMultiset& b) {
    return !(a == b);
}

}  // namespace concordia
