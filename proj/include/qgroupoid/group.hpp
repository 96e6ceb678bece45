#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qgroupoid {

using Element = std::uint32_t;
using Table = std::vector<std::vector<Element>>;

inline constexpr std::size_t kDefaultMaxOrder = 100;

// Group given by its Cayley table; the identity is always element 0.
class FiniteGroup {
public:
    std::size_t order() const { return table_.size(); }
    Element identity() const { return 0; }
    Element mul(Element a, Element b) const { return table_[a][b]; }
    Element mul(Element a, Element b, Element c) const { return table_[table_[a][b]][c]; }
    Element inv(Element a) const { return inverse_[a]; }
    const Table& table() const { return table_; }
    std::size_t element_order(Element a) const;

    // Human-readable name, e.g. cycle notation for permutation input.
    std::string name(Element a) const;
    const std::vector<std::string>& names() const { return names_; }

private:
    friend std::shared_ptr<const FiniteGroup> group_from_table(const Table&, std::size_t,
                                                               std::vector<std::string>);
    Table table_;
    std::vector<Element> inverse_;
    std::vector<std::string> names_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Validates the table and renumbers the identity to 0. Throws NotAGroup, OrderTooLarge.
GroupPtr group_from_table(const Table& table, std::size_t max_order = kDefaultMaxOrder,
                          std::vector<std::string> names = {});

// Permutations as lists of cycles on points 1..degree, composed right to left.
using Cycles = std::vector<std::vector<int>>;
GroupPtr group_from_permutations(int degree, const std::vector<Cycles>& generators,
                                 std::size_t max_order = kDefaultMaxOrder);
// Image array (0-based points) of a permutation in cycle notation.
std::vector<int> permutation_image(int degree, const Cycles& cycles);
std::string cycle_string(const std::vector<int>& image);

// Common test groups as permutation groups.
GroupPtr symmetric_group(int n);
GroupPtr cyclic_group(int n);

class Subgroup {
public:
    Subgroup(GroupPtr parent, std::vector<Element> elements);  // trusted; use the factories

    static Subgroup whole(GroupPtr g);
    static Subgroup trivial(GroupPtr g);

    const FiniteGroup& group() const { return *parent_; }
    const GroupPtr& parent() const { return parent_; }
    const std::vector<Element>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }
    bool contains(Element x) const { return member_[x]; }
    // Position of x in elements(); x must be a member.
    std::size_t index_of(Element x) const { return static_cast<std::size_t>(position_[x]); }
    bool is_subgroup_of(const Subgroup& other) const;

    friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements_ == b.elements_; }

private:
    GroupPtr parent_;
    std::vector<Element> elements_;
    std::vector<bool> member_;
    std::vector<std::int32_t> position_;
};

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<Element>& gens);
// Throws NotASubgroup unless elements form a subgroup.
Subgroup subgroup_from_elements(const GroupPtr& g, std::vector<Element> elements);

std::vector<Element> product_set(const Subgroup& h, const Subgroup& k);
Subgroup intersection(const Subgroup& h, const Subgroup& k);
std::vector<std::vector<Element>> conjugacy_classes(const Subgroup& g);
std::vector<std::vector<Element>> conjugacy_classes(const GroupPtr& g);
Subgroup normalizer(const Subgroup& ambient, const Subgroup& p);
bool is_normal(const Subgroup& ambient, const Subgroup& n);
// First Sylow p-subgroup found scanning element ids in order. Throws PDoesNotDivideOrder.
Subgroup sylow_subgroup(const Subgroup& ambient, int p);
std::vector<Subgroup> all_subgroups(const GroupPtr& g);

enum class CosetKind { Left, Right };  // Left: x·sub, Right: sub·x

class CosetSpace {
public:
    std::size_t size() const { return blocks_.size(); }
    CosetKind kind() const { return kind_; }
    const Subgroup& subgroup() const { return sub_; }
    const std::vector<Element>& block(std::size_t i) const { return blocks_[i]; }
    const std::vector<std::vector<Element>>& blocks() const { return blocks_; }
    Element representative(std::size_t i) const { return reps_[i]; }
    const std::vector<Element>& representatives() const { return reps_; }
    // Block containing x; x must lie in the ambient subgroup.
    std::size_t block_of(Element x) const { return static_cast<std::size_t>(block_of_[x]); }
    bool in_ambient(Element x) const { return block_of_[x] >= 0; }

private:
    friend CosetSpace coset_space(const Subgroup&, const Subgroup&, CosetKind,
                                  const std::optional<std::vector<Element>>&);
    CosetKind kind_ = CosetKind::Left;
    Subgroup sub_;
    std::vector<std::vector<Element>> blocks_;
    std::vector<Element> reps_;
    std::vector<std::int32_t> block_of_;
    explicit CosetSpace(Subgroup sub) : sub_(std::move(sub)) {}
};

// Blocks ordered by minimal element. Representatives default to the minimal
// element; an override must hit every block exactly once (InvalidRepresentativeSet).
CosetSpace coset_space(const Subgroup& ambient, const Subgroup& sub, CosetKind kind,
                       const std::optional<std::vector<Element>>& representatives = std::nullopt);

}  // namespace qgroupoid
