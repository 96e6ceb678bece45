#include "qgroupoid/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "qgroupoid/errors.hpp"

namespace qgroupoid {

std::size_t FiniteGroup::element_order(Element a) const {
    std::size_t n = 1;
    for (Element x = a; x != 0; x = mul(x, a)) ++n;
    return n;
}

std::string FiniteGroup::name(Element a) const {
    if (a < names_.size() && !names_[a].empty()) return names_[a];
    return a == 0 ? "e" : "g" + std::to_string(a);
}

GroupPtr group_from_table(const Table& table, std::size_t max_order, std::vector<std::string> names) {
    const std::size_t n = table.size();
    if (n == 0) throw NotAGroup("empty table");
    if (n > max_order)
        throw OrderTooLarge("order " + std::to_string(n) + " exceeds max order " + std::to_string(max_order));
    for (const auto& row : table) {
        if (row.size() != n) throw NotAGroup("table is not square");
        for (Element x : row)
            if (x >= n) throw NotAGroup("entry out of range");
    }
    std::optional<Element> e;
    for (Element i = 0; i < n && !e; ++i) {
        bool ok = true;
        for (Element x = 0; x < n && ok; ++x) ok = table[i][x] == x && table[x][i] == x;
        if (ok) e = i;
    }
    if (!e) throw NotAGroup("no identity element");
    // swap the identity with id 0
    std::vector<Element> relabel(n);
    std::iota(relabel.begin(), relabel.end(), 0);
    std::swap(relabel[0], relabel[*e]);
    auto g = std::make_shared<FiniteGroup>();
    g->table_.assign(n, std::vector<Element>(n));
    for (Element i = 0; i < n; ++i)
        for (Element j = 0; j < n; ++j) g->table_[relabel[i]][relabel[j]] = relabel[table[i][j]];
    if (!names.empty()) {
        if (names.size() != n) throw NotAGroup("wrong number of element names");
        g->names_.resize(n);
        for (Element i = 0; i < n; ++i) g->names_[relabel[i]] = names[i];
    }
    const Table& t = g->table_;
    for (Element i = 0; i < n; ++i) {
        std::vector<bool> row(n), col(n);
        for (Element j = 0; j < n; ++j) {
            row[t[i][j]] = true;
            col[t[j][i]] = true;
        }
        if (std::find(row.begin(), row.end(), false) != row.end() ||
            std::find(col.begin(), col.end(), false) != col.end())
            throw NotAGroup("row or column " + std::to_string(i) + " is not a permutation");
    }
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            for (Element z = 0; z < n; ++z)
                if (t[t[x][y]][z] != t[x][t[y][z]])
                    throw NotAGroup("associativity fails at (" + std::to_string(x) + "," + std::to_string(y) +
                                    "," + std::to_string(z) + ")");
    g->inverse_.resize(n);
    for (Element x = 0; x < n; ++x) {
        auto it = std::find(t[x].begin(), t[x].end(), 0u);
        g->inverse_[x] = static_cast<Element>(it - t[x].begin());
        if (t[g->inverse_[x]][x] != 0) throw NotAGroup("inverse fails");
    }
    return g;
}

std::vector<int> permutation_image(int degree, const Cycles& cycles) {
    std::vector<int> img(static_cast<std::size_t>(degree));
    std::iota(img.begin(), img.end(), 0);
    // a product of cycles, applied right to left
    for (auto c = cycles.rbegin(); c != cycles.rend(); ++c) {
        std::vector<int> step(img.size());
        std::iota(step.begin(), step.end(), 0);
        std::set<int> seen;
        for (std::size_t i = 0; i < c->size(); ++i) {
            int a = (*c)[i], b = (*c)[(i + 1) % c->size()];
            if (a < 1 || a > degree) throw InputError("point " + std::to_string(a) + " outside 1.." + std::to_string(degree));
            if (!seen.insert(a).second) throw InputError("repeated point in cycle");
            step[static_cast<std::size_t>(a - 1)] = b - 1;
        }
        for (auto& x : img) x = step[static_cast<std::size_t>(x)];
    }
    return img;
}

std::string cycle_string(const std::vector<int>& image) {
    std::ostringstream out;
    std::vector<bool> seen(image.size());
    for (std::size_t i = 0; i < image.size(); ++i) {
        if (seen[i] || image[i] == static_cast<int>(i)) continue;
        out << '(';
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out << ' ';
            out << j + 1;
            first = false;
            j = static_cast<std::size_t>(image[j]);
        }
        out << ')';
    }
    std::string s = out.str();
    return s.empty() ? "()" : s;
}

GroupPtr group_from_permutations(int degree, const std::vector<Cycles>& generators, std::size_t max_order) {
    if (degree < 1) throw InputError("degree must be positive");
    using Perm = std::vector<int>;
    std::vector<Perm> gens;
    for (const auto& g : generators) gens.push_back(permutation_image(degree, g));
    Perm id(static_cast<std::size_t>(degree));
    std::iota(id.begin(), id.end(), 0);
    auto compose = [](const Perm& f, const Perm& g) {  // (fg)(x) = f(g(x))
        Perm r(f.size());
        for (std::size_t x = 0; x < f.size(); ++x) r[x] = f[static_cast<std::size_t>(g[x])];
        return r;
    };
    std::set<Perm> found{id};
    std::vector<Perm> frontier{id};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& p : frontier)
            for (const auto& g : gens) {
                Perm q = compose(p, g);
                if (found.insert(q).second) {
                    next.push_back(q);
                    if (found.size() > max_order)
                        throw OrderTooLarge("generated group exceeds max order " + std::to_string(max_order));
                }
            }
        frontier = std::move(next);
    }
    std::vector<Perm> elems(found.begin(), found.end());  // lexicographic; identity first
    std::map<Perm, Element> id_of;
    for (Element i = 0; i < elems.size(); ++i) id_of[elems[i]] = i;
    Table t(elems.size(), std::vector<Element>(elems.size()));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        names.push_back(cycle_string(elems[i]));
        for (std::size_t j = 0; j < elems.size(); ++j) t[i][j] = id_of.at(compose(elems[i], elems[j]));
    }
    return group_from_table(t, max_order, names);
}

GroupPtr symmetric_group(int n) {
    if (n == 1) return group_from_permutations(1, {});
    std::vector<Cycles> gens{{{1, 2}}};
    if (n > 2) {
        std::vector<int> c(static_cast<std::size_t>(n));
        std::iota(c.begin(), c.end(), 1);
        gens.push_back({c});
    }
    return group_from_permutations(n, gens);
}

GroupPtr cyclic_group(int n) {
    if (n == 1) return group_from_permutations(1, {});
    std::vector<int> c(static_cast<std::size_t>(n));
    std::iota(c.begin(), c.end(), 1);
    return group_from_permutations(n, {{c}});
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Element> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    member_.assign(parent_->order(), false);
    position_.assign(parent_->order(), -1);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        member_[elements_[i]] = true;
        position_[elements_[i]] = static_cast<std::int32_t>(i);
    }
}

Subgroup Subgroup::whole(GroupPtr g) {
    std::vector<Element> all(g->order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(std::move(g), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr g) { return Subgroup(std::move(g), {0}); }

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
    return std::all_of(elements_.begin(), elements_.end(), [&](Element x) { return other.contains(x); });
}

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<Element>& gens) {
    for (Element x : gens)
        if (x >= g->order()) throw NotASubgroup("generator id out of range");
    std::vector<bool> in(g->order(), false);
    std::vector<Element> elems{0};
    in[0] = true;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (Element s : gens) {
            Element y = g->mul(elems[i], s);
            if (!in[y]) {
                in[y] = true;
                elems.push_back(y);
            }
        }
    return Subgroup(g, std::move(elems));
}

Subgroup subgroup_from_elements(const GroupPtr& g, std::vector<Element> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    Subgroup s(g, elements);
    if (elements.empty() || !s.contains(0)) throw NotASubgroup("missing identity");
    for (Element x : elements) {
        if (!s.contains(g->inv(x))) throw NotASubgroup("not closed under inverse");
        for (Element y : elements)
            if (!s.contains(g->mul(x, y))) throw NotASubgroup("not closed under product");
    }
    return s;
}

std::vector<Element> product_set(const Subgroup& h, const Subgroup& k) {
    const FiniteGroup& g = h.group();
    std::vector<bool> in(g.order(), false);
    for (Element a : h.elements())
        for (Element b : k.elements()) in[g.mul(a, b)] = true;
    std::vector<Element> out;
    for (Element x = 0; x < g.order(); ++x)
        if (in[x]) out.push_back(x);
    return out;
}

Subgroup intersection(const Subgroup& h, const Subgroup& k) {
    std::vector<Element> out;
    for (Element x : h.elements())
        if (k.contains(x)) out.push_back(x);
    return Subgroup(h.parent(), std::move(out));
}

std::vector<std::vector<Element>> conjugacy_classes(const Subgroup& s) {
    const FiniteGroup& g = s.group();
    std::vector<bool> done(g.order(), false);
    std::vector<std::vector<Element>> classes;
    for (Element x : s.elements()) {
        if (done[x]) continue;
        std::set<Element> cls;
        for (Element y : s.elements()) cls.insert(g.mul(y, x, g.inv(y)));
        for (Element c : cls) done[c] = true;
        classes.emplace_back(cls.begin(), cls.end());
    }
    return classes;
}

std::vector<std::vector<Element>> conjugacy_classes(const GroupPtr& g) {
    return conjugacy_classes(Subgroup::whole(g));
}

Subgroup normalizer(const Subgroup& ambient, const Subgroup& p) {
    const FiniteGroup& g = ambient.group();
    std::vector<Element> out;
    for (Element x : ambient.elements()) {
        bool ok = std::all_of(p.elements().begin(), p.elements().end(),
                              [&](Element y) { return p.contains(g.mul(x, y, g.inv(x))); });
        if (ok) out.push_back(x);
    }
    return Subgroup(ambient.parent(), std::move(out));
}

bool is_normal(const Subgroup& ambient, const Subgroup& n) {
    return n.is_subgroup_of(ambient) && normalizer(ambient, n).order() == ambient.order();
}

Subgroup sylow_subgroup(const Subgroup& ambient, int p) {
    std::size_t order = ambient.order();
    if (p < 2 || order % static_cast<std::size_t>(p) != 0)
        throw PDoesNotDivideOrder(std::to_string(p) + " does not divide " + std::to_string(order));
    std::size_t target = 1;
    while (order % static_cast<std::size_t>(p) == 0) {
        order /= static_cast<std::size_t>(p);
        target *= static_cast<std::size_t>(p);
    }
    const FiniteGroup& g = ambient.group();
    auto is_p_power = [p](std::size_t n) {
        while (n % static_cast<std::size_t>(p) == 0) n /= static_cast<std::size_t>(p);
        return n == 1;
    };
    std::vector<Element> gens;
    Subgroup current = Subgroup::trivial(ambient.parent());
    while (current.order() < target) {
        bool grew = false;
        Subgroup norm = normalizer(ambient, current);
        for (Element x : ambient.elements()) {
            if (current.contains(x) || !norm.contains(x) || !is_p_power(g.element_order(x))) continue;
            auto trial = gens;
            trial.push_back(x);
            Subgroup bigger = subgroup_generated(ambient.parent(), trial);
            if (!is_p_power(bigger.order())) continue;
            gens = std::move(trial);
            current = std::move(bigger);
            grew = true;
            break;
        }
        if (!grew) throw Error("sylow search stalled");  // impossible by Sylow theory
    }
    return current;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
    // every subgroup of a group of order <= 100 is generated by at most 7 elements;
    // grow by adjoining single elements starting from cyclic subgroups
    std::set<std::vector<Element>> seen;
    std::vector<Subgroup> frontier;
    for (Element x = 0; x < g->order(); ++x) {
        Subgroup c = subgroup_generated(g, {x});
        if (seen.insert(c.elements()).second) frontier.push_back(c);
    }
    std::vector<Subgroup> all = frontier;
    while (!frontier.empty()) {
        std::vector<Subgroup> next;
        for (const auto& s : frontier)
            for (Element x = 0; x < g->order(); ++x) {
                if (s.contains(x)) continue;
                auto gens = s.elements();
                gens.push_back(x);
                Subgroup t = subgroup_generated(g, gens);
                if (seen.insert(t.elements()).second) {
                    next.push_back(t);
                    all.push_back(t);
                }
            }
        frontier = std::move(next);
    }
    std::sort(all.begin(), all.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements() < b.elements();
    });
    return all;
}

CosetSpace coset_space(const Subgroup& ambient, const Subgroup& sub, CosetKind kind,
                       const std::optional<std::vector<Element>>& representatives) {
    if (!sub.is_subgroup_of(ambient)) throw NotASubgroup("coset space: subgroup not contained in ambient");
    const FiniteGroup& g = ambient.group();
    CosetSpace cs(sub);
    cs.kind_ = kind;
    cs.block_of_.assign(g.order(), -1);
    for (Element x : ambient.elements()) {
        if (cs.block_of_[x] >= 0) continue;
        std::vector<Element> block;
        for (Element s : sub.elements()) block.push_back(kind == CosetKind::Left ? g.mul(x, s) : g.mul(s, x));
        std::sort(block.begin(), block.end());
        auto id = static_cast<std::int32_t>(cs.blocks_.size());
        for (Element y : block) cs.block_of_[y] = id;
        cs.reps_.push_back(block.front());
        cs.blocks_.push_back(std::move(block));
    }
    if (representatives) {
        if (representatives->size() != cs.blocks_.size())
            throw InvalidRepresentativeSet("expected " + std::to_string(cs.blocks_.size()) + " representatives, got " +
                                           std::to_string(representatives->size()));
        std::vector<bool> hit(cs.blocks_.size(), false);
        for (Element r : *representatives) {
            if (r >= g.order() || cs.block_of_[r] < 0)
                throw InvalidRepresentativeSet("representative " + std::to_string(r) + " not in ambient subgroup");
            auto b = static_cast<std::size_t>(cs.block_of_[r]);
            if (hit[b]) throw InvalidRepresentativeSet("two representatives in one coset");
            hit[b] = true;
            cs.reps_[b] = r;
        }
    }
    return cs;
}

}  // namespace qgroupoid
