#pragma once

#include "toricfan/catalog.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace toricfan {

using Collection = Bitset; // over catalog indices

class NotSubset : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Tables for the two closure rules, derived once from a catalog.
class ClosureOperator {
public:
    explicit ClosureOperator(const PolytopeCatalog& cat);

    // Smallest closed superset of seed, or nullopt if an incompatible pair is forced.
    std::optional<Collection> close(const Collection& seed) const;
    // close(c + {q}) for an already closed c.
    std::optional<Collection> extend(const Collection& closed, std::size_t q) const;

    bool is_closed(const Collection& c) const;
    const PolytopeCatalog& catalog() const { return *cat_; }
    // Number of Incompatible catalog pairs.
    std::size_t incompatible_pairs() const { return incompatible_pairs_; }

private:
    std::optional<Collection> run(Collection c, std::vector<std::size_t> work) const;

    const PolytopeCatalog* cat_;
    std::vector<Bitset> incompatible_;
    std::vector<Bitset> must_;
    std::size_t incompatible_pairs_ = 0;
};

struct EnumerationStats {
    std::size_t closed = 0;
    std::size_t levels = 0;
    std::size_t rejected = 0;     // extensions that forced an incompatible pair
    std::size_t incompatible_pairs = 0;
    bool includes_empty = false;  // flagged, never part of the result
    std::size_t origin_only = 0;  // collections whose only member is the origin polytope
};

// All closed collections with at least one member, sorted.
std::vector<Collection> enumerate_closed(const ClosureOperator& op, unsigned jobs = 1,
                                         EnumerationStats* stats = nullptr);

// Every face F of a member of pi1 with F in pi2 lies in pi1. Throws NotSubset.
bool is_saturated_in(const PolytopeCatalog& cat, const Collection& pi1, const Collection& pi2);

// A pair (member P of pi1, face F of P) with F in pi2 but not in pi1, if any.
std::optional<std::pair<std::size_t, std::size_t>>
saturation_witness(const PolytopeCatalog& cat, const Collection& pi1, const Collection& pi2);

// Union of the face sets of the members.
Bitset faces_of_members(const PolytopeCatalog& cat, const Collection& c);

// Keeps pi iff no closed proper superset has pi saturated in it. Decided by
// single extensions: such a superset exists iff some close(pi + {q}) adds no
// face of a member of pi.
std::vector<Collection> maximal_collections(const ClosureOperator& op,
                                            const std::vector<Collection>& all,
                                            unsigned jobs = 1);

// Reference form: compares every pair of closed collections.
std::vector<Collection> maximal_collections_by_scan(const PolytopeCatalog& cat,
                                                    const std::vector<Collection>& all);

struct OpenSetDescriptor {
    std::size_t s = 0;
    std::vector<Support> forbidden; // antichain of zero-sets, sorted by (size, bits)

    std::string to_string() const;
    friend bool operator==(const OpenSetDescriptor&, const OpenSetDescriptor&) = default;
    friend auto operator<=>(const OpenSetDescriptor&, const OpenSetDescriptor&) = default;
};

// Orders zero-sets by size, then by the letters they contain.
void sort_zero_sets(std::vector<Support>& sets);

// True iff the support j is present, i.e. meets every forbidden zero-set.
bool support_allowed(const OpenSetDescriptor& d, Support j);

OpenSetDescriptor open_set_descriptor(const PolytopeCatalog& cat, const Collection& pi);

// Inverse of open_set_descriptor; throws std::invalid_argument if the set of
// allowed supports is not a union of catalog classes.
Collection collection_from_descriptor(const PolytopeCatalog& cat, const OpenSetDescriptor& d);

// Parses "X", "X \ (Z(b, d) ∪ Z(a))" and the TeX forms with \setminus and \cup.
OpenSetDescriptor parse_descriptor(const std::string& text, std::size_t s);

} // namespace toricfan
