#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qgroupoid/rational.hpp"

namespace qgroupoid {

using Index = std::uint32_t;

// Sorted, zero-free list of (index, coefficient).
class SparseVector {
public:
    using Entry = std::pair<Index, Rational>;

    SparseVector() = default;
    static SparseVector basis(Index i, Rational c = 1);
    // Sorts, merges duplicates and drops zeros.
    static SparseVector from_entries(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    Index leading() const { return entries_.front().first; }

    Rational at(Index i) const;
    SparseVector scaled(const Rational& c) const;
    void add_scaled(const SparseVector& v, const Rational& c);

    SparseVector operator-() const { return scaled(-1); }
    friend SparseVector operator+(SparseVector a, const SparseVector& b) {
        a.add_scaled(b, 1);
        return a;
    }
    friend SparseVector operator-(SparseVector a, const SparseVector& b) {
        a.add_scaled(b, -1);
        return a;
    }
    friend bool operator==(const SparseVector&, const SparseVector&) = default;

private:
    std::vector<Entry> entries_;
};

// Dense scratch space for summing many sparse contributions.
class Accumulator {
public:
    explicit Accumulator(std::size_t dim) : values_(dim), touched_(dim, false) {}
    void add(Index i, const Rational& c);
    void add(const SparseVector& v, const Rational& c);
    SparseVector take();

private:
    std::vector<Rational> values_;
    std::vector<bool> touched_;
    std::vector<Index> list_;
};

// Hash map from a packed multi-index to a coefficient, zero-free after prune().
using KeyedSum = std::unordered_map<std::uint64_t, Rational>;

void add_to(KeyedSum& m, std::uint64_t key, const Rational& c);
void prune(KeyedSum& m);
// Smallest key on which the two sums differ, if any.
std::optional<std::uint64_t> first_difference(KeyedSum a, KeyedSum b);

// Incremental row echelon form; pivot = first nonzero column.
class Echelon {
public:
    // Returns true if v was independent of the rows so far.
    bool insert(const SparseVector& v);
    SparseVector reduce(const SparseVector& v) const;
    bool contains(const SparseVector& v) const { return reduce(v).empty(); }
    std::size_t rank() const { return rows_.size(); }
    // Fully reduced rows, each with leading coefficient 1, sorted by pivot.
    std::vector<SparseVector> reduced_rows() const;

private:
    std::vector<SparseVector> rows_;
    std::map<Index, std::size_t> pivot_;
};

std::size_t rank(const std::vector<SparseVector>& vectors);

// Basis of {x in Q^n : <row, x> = 0 for every row}.
std::vector<SparseVector> solve_subspace(std::size_t n, std::vector<SparseVector> rows);

bool same_span(const std::vector<SparseVector>& a, const std::vector<SparseVector>& b);

}  // namespace qgroupoid
