#pragma once

#include <numeric>
#include <vector>

namespace knotmarket {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), classes_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }

    // True when two distinct classes merged.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[a] = b;
        --classes_;
        return true;
    }

    int classes() const { return classes_; }

private:
    std::vector<int> parent_;
    int classes_;
};

}  // namespace knotmarket
