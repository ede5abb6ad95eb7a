#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace ftrails {

// Disjoint sets over 0..n-1, union by size with path halving.
// Elements can be appended after construction.
class UnionFind {
  public:
    UnionFind() = default;
    explicit UnionFind(std::size_t n) { reset(n); }

    void reset(std::size_t n) {
        parent_.resize(n);
        std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
        size_.assign(n, 1);
    }

    std::uint32_t add() {
        auto id = static_cast<std::uint32_t>(parent_.size());
        parent_.push_back(id);
        size_.push_back(1);
        return id;
    }

    void reserve(std::size_t n) {
        parent_.reserve(n);
        size_.reserve(n);
    }

    std::size_t size() const noexcept { return parent_.size(); }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // returns the new representative
    std::uint32_t unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return a;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return a;
    }

    std::uint32_t set_size(std::uint32_t x) { return size_[find(x)]; }

  private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
};

} // namespace ftrails
