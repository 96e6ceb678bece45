#include "qgroupoid/linalg.hpp"

#include <algorithm>

namespace qgroupoid {

SparseVector SparseVector::basis(Index i, Rational c) {
    SparseVector v;
    if (!c.is_zero()) v.entries_.emplace_back(i, std::move(c));
    return v;
}

SparseVector SparseVector::from_entries(std::vector<Entry> entries) {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseVector v;
    for (auto& e : entries) {
        if (!v.entries_.empty() && v.entries_.back().first == e.first)
            v.entries_.back().second += e.second;
        else
            v.entries_.push_back(std::move(e));
    }
    std::erase_if(v.entries_, [](const Entry& e) { return e.second.is_zero(); });
    return v;
}

Rational SparseVector::at(Index i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, Index k) { return e.first < k; });
    if (it != entries_.end() && it->first == i) return it->second;
    return 0;
}

SparseVector SparseVector::scaled(const Rational& c) const {
    SparseVector v;
    if (c.is_zero()) return v;
    v.entries_.reserve(entries_.size());
    for (const auto& [i, x] : entries_) v.entries_.emplace_back(i, x * c);
    return v;
}

void SparseVector::add_scaled(const SparseVector& v, const Rational& c) {
    if (c.is_zero() || v.empty()) return;
    std::vector<Entry> out;
    out.reserve(entries_.size() + v.entries_.size());
    auto a = entries_.begin();
    auto b = v.entries_.begin();
    while (a != entries_.end() || b != v.entries_.end()) {
        if (b == v.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            out.push_back(std::move(*a++));
        } else if (a == entries_.end() || b->first < a->first) {
            out.emplace_back(b->first, b->second * c);
            ++b;
        } else {
            Rational s = a->second + b->second * c;
            if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    entries_ = std::move(out);
}

void Accumulator::add(Index i, const Rational& c) {
    if (c.is_zero()) return;
    if (!touched_[i]) {
        touched_[i] = true;
        list_.push_back(i);
        values_[i] = c;
    } else {
        values_[i] += c;
    }
}

void Accumulator::add(const SparseVector& v, const Rational& c) {
    if (c.is_zero()) return;
    for (const auto& [i, x] : v) add(i, c.is_one() ? x : x * c);
}

SparseVector Accumulator::take() {
    std::sort(list_.begin(), list_.end());
    std::vector<SparseVector::Entry> out;
    out.reserve(list_.size());
    for (Index i : list_) {
        if (!values_[i].is_zero()) out.emplace_back(i, std::move(values_[i]));
        values_[i] = Rational();
        touched_[i] = false;
    }
    list_.clear();
    return SparseVector::from_entries(std::move(out));
}

void add_to(KeyedSum& m, std::uint64_t key, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = m.try_emplace(key, c);
    if (!fresh) it->second += c;
}

void prune(KeyedSum& m) {
    for (auto it = m.begin(); it != m.end();) {
        if (it->second.is_zero())
            it = m.erase(it);
        else
            ++it;
    }
}

std::optional<std::uint64_t> first_difference(KeyedSum a, KeyedSum b) {
    prune(a);
    prune(b);
    std::optional<std::uint64_t> best;
    auto consider = [&](std::uint64_t k) {
        if (!best || k < *best) best = k;
    };
    for (const auto& [k, v] : a) {
        auto it = b.find(k);
        if (it == b.end() || it->second != v) consider(k);
    }
    for (const auto& [k, v] : b)
        if (!a.count(k)) consider(k);
    return best;
}

SparseVector Echelon::reduce(const SparseVector& v) const {
    if (rows_.empty()) return v;
    std::map<Index, Rational> w;
    for (const auto& [i, x] : v) w.emplace(i, x);
    auto it = w.begin();
    while (it != w.end()) {
        auto p = pivot_.find(it->first);
        if (p == pivot_.end()) {
            ++it;
            continue;
        }
        Index col = it->first;
        Rational f = it->second;
        for (const auto& [j, c] : rows_[p->second]) {
            auto [slot, fresh] = w.try_emplace(j, -(f * c));
            if (!fresh) {
                slot->second -= f * c;
                if (slot->second.is_zero()) w.erase(slot);
            }
        }
        it = w.upper_bound(col);
    }
    std::vector<SparseVector::Entry> out(w.begin(), w.end());
    return SparseVector::from_entries(std::move(out));
}

bool Echelon::insert(const SparseVector& v) {
    SparseVector r = reduce(v);
    if (r.empty()) return false;
    Rational lead = r.entries().front().second;
    if (!lead.is_one()) r = r.scaled(Rational(1) / lead);
    pivot_.emplace(r.leading(), rows_.size());
    rows_.push_back(std::move(r));
    return true;
}

std::vector<SparseVector> Echelon::reduced_rows() const {
    std::map<Index, SparseVector> done;
    for (auto p = pivot_.rbegin(); p != pivot_.rend(); ++p) {
        SparseVector row = rows_[p->second];
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (const auto& [j, c] : row) {
                if (j == p->first) continue;
                auto d = done.find(j);
                if (d == done.end()) continue;
                row.add_scaled(d->second, -c);
                dirty = true;
                break;
            }
        }
        done.emplace(p->first, std::move(row));
    }
    std::vector<SparseVector> out;
    out.reserve(done.size());
    for (auto& [k, r] : done) out.push_back(std::move(r));
    return out;
}

std::size_t rank(const std::vector<SparseVector>& vectors) {
    Echelon e;
    for (const auto& v : vectors) e.insert(v);
    return e.rank();
}

std::vector<SparseVector> solve_subspace(std::size_t n, std::vector<SparseVector> rows) {
    std::stable_sort(rows.begin(), rows.end(),
                     [](const SparseVector& a, const SparseVector& b) { return a.size() < b.size(); });
    Echelon e;
    for (const auto& r : rows)
        if (!r.empty()) e.insert(r);
    auto reduced = e.reduced_rows();
    std::vector<bool> is_pivot(n, false);
    for (const auto& r : reduced) is_pivot[r.leading()] = true;
    // column f -> list of (pivot column, coefficient of f in that row)
    std::vector<std::vector<std::pair<Index, Rational>>> by_free(n);
    for (const auto& r : reduced)
        for (const auto& [j, c] : r)
            if (j != r.leading()) by_free[j].emplace_back(r.leading(), c);
    std::vector<SparseVector> basis;
    for (Index f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<SparseVector::Entry> entries{{f, Rational(1)}};
        for (const auto& [p, c] : by_free[f]) entries.emplace_back(p, -c);
        basis.push_back(SparseVector::from_entries(std::move(entries)));
    }
    return basis;
}

bool same_span(const std::vector<SparseVector>& a, const std::vector<SparseVector>& b) {
    Echelon ea;
    for (const auto& v : a) ea.insert(v);
    for (const auto& v : b)
        if (!ea.contains(v)) return false;
    return rank(b) == ea.rank();
}

}  // namespace qgroupoid
