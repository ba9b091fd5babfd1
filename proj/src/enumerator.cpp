#include "toricfan/enumerator.hpp"

#include "toricfan/parallel.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace toricfan {

ClosureOperator::ClosureOperator(const PolytopeCatalog& cat) : cat_(&cat) {
    const std::size_t n = cat.size();
    incompatible_.assign(n, Bitset(n));
    must_.assign(n, Bitset(n));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const IntersectionClass c = intersection_class(cat, p, q);
            if (c.kind == IntersectionKind::Incompatible) {
                incompatible_[p].set(q);
                if (p <= q)
                    ++incompatible_pairs_;
            } else if (c.kind == IntersectionKind::MustContain &&
                       c.required != static_cast<int>(p) && c.required != static_cast<int>(q)) {
                must_[p].set(q);
            }
        }
}

std::optional<Collection> ClosureOperator::run(Collection c, std::vector<std::size_t> work) const {
    const std::size_t n = cat_->size();
    while (!work.empty()) {
        const std::size_t x = work.back();
        work.pop_back();
        if (incompatible_[x].intersects(c))
            return std::nullopt;
        minus(cat_->contained_in[x], c).for_each([&](std::size_t y) {
            c.set(y);
            work.push_back(y);
        });
        (must_[x] & c).for_each([&](std::size_t y) {
            const auto m = static_cast<std::size_t>(cat_->meet[x * n + y]);
            if (!c.test(m)) {
                c.set(m);
                work.push_back(m);
            }
        });
    }
    return c;
}

std::optional<Collection> ClosureOperator::close(const Collection& seed) const {
    return run(seed, seed.indices());
}

std::optional<Collection> ClosureOperator::extend(const Collection& closed, std::size_t q) const {
    if (closed.test(q))
        return closed;
    Collection c = closed;
    c.set(q);
    return run(std::move(c), {q});
}

bool ClosureOperator::is_closed(const Collection& c) const {
    auto closed = close(c);
    return closed && *closed == c;
}

std::vector<Collection> enumerate_closed(const ClosureOperator& op, unsigned jobs,
                                         EnumerationStats* stats) {
    const PolytopeCatalog& cat = op.catalog();
    const std::size_t n = cat.size();
    EnumerationStats st;
    st.incompatible_pairs = op.incompatible_pairs();
    std::unordered_set<Collection, BitsetHash> seen;
    std::vector<Collection> frontier;
    for (std::size_t p = 0; p < n; ++p) {
        Collection c(n);
        c.set(p);
        if (auto closed = op.close(c)) {
            if (seen.insert(*closed).second)
                frontier.push_back(std::move(*closed));
        } else {
            ++st.rejected;
        }
    }
    while (!frontier.empty()) {
        ++st.levels;
        // Each worker extends a slice of the frontier; merging is serial so the
        // next frontier depends only on the set of collections found.
        std::vector<std::vector<Collection>> found(frontier.size());
        std::vector<std::size_t> rejected(frontier.size(), 0);
        parallel_for(frontier.size(), jobs, [&](std::size_t k) {
            const Collection& c = frontier[k];
            for (std::size_t q = 0; q < n; ++q) {
                if (c.test(q))
                    continue;
                if (auto e = op.extend(c, q))
                    found[k].push_back(std::move(*e));
                else
                    ++rejected[k];
            }
        });
        std::vector<Collection> next;
        for (std::size_t k = 0; k < found.size(); ++k) {
            st.rejected += rejected[k];
            for (auto& c : found[k])
                if (!seen.contains(c)) {
                    seen.insert(c);
                    next.push_back(std::move(c));
                }
        }
        frontier = std::move(next);
    }
    std::vector<Collection> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    st.closed = out.size();
    const int origin = cat.origin_index();
    for (const auto& c : out)
        if (c.count() == 1 && c.test(static_cast<std::size_t>(origin)))
            ++st.origin_only;
    st.includes_empty = false;
    if (stats)
        *stats = st;
    return out;
}

Bitset faces_of_members(const PolytopeCatalog& cat, const Collection& c) {
    Bitset f(cat.size());
    c.for_each([&](std::size_t p) { f |= cat.faces[p]; });
    return f;
}

std::optional<std::pair<std::size_t, std::size_t>>
saturation_witness(const PolytopeCatalog& cat, const Collection& pi1, const Collection& pi2) {
    if (!pi1.is_subset_of(pi2))
        throw NotSubset("is_saturated_in: first collection is not contained in the second");
    std::optional<std::pair<std::size_t, std::size_t>> out;
    pi1.for_each([&](std::size_t p) {
        if (out)
            return;
        const Bitset bad = minus(cat.faces[p] & pi2, pi1);
        if (bad.any())
            out = std::make_pair(p, bad.indices().front());
    });
    return out;
}

bool is_saturated_in(const PolytopeCatalog& cat, const Collection& pi1, const Collection& pi2) {
    return !saturation_witness(cat, pi1, pi2).has_value();
}

std::vector<Collection> maximal_collections(const ClosureOperator& op,
                                            const std::vector<Collection>& all, unsigned jobs) {
    const PolytopeCatalog& cat = op.catalog();
    const std::size_t n = cat.size();
    std::vector<char> keep(all.size(), 0);
    parallel_for(all.size(), jobs, [&](std::size_t k) {
        const Collection& c = all[k];
        const Bitset faces = faces_of_members(cat, c);
        for (std::size_t q = 0; q < n; ++q) {
            if (c.test(q) || faces.test(q))
                continue;
            auto e = op.extend(c, q);
            if (e && !minus(*e, c).intersects(faces))
                return;
        }
        keep[k] = 1;
    });
    std::vector<Collection> out;
    for (std::size_t k = 0; k < all.size(); ++k)
        if (keep[k])
            out.push_back(all[k]);
    return out;
}

std::vector<Collection> maximal_collections_by_scan(const PolytopeCatalog& cat,
                                                    const std::vector<Collection>& all) {
    std::vector<Collection> out;
    for (const auto& c : all) {
        bool maximal = true;
        for (const auto& d : all)
            if (d != c && c.is_subset_of(d) && is_saturated_in(cat, c, d)) {
                maximal = false;
                break;
            }
        if (maximal)
            out.push_back(c);
    }
    return out;
}

void sort_zero_sets(std::vector<Support>& sets) {
    std::sort(sets.begin(), sets.end(), [](Support a, Support b) {
        const int ca = std::popcount(a), cb = std::popcount(b);
        if (ca != cb)
            return ca < cb;
        // Lexicographic on the increasing element lists.
        while (a && b) {
            const int ia = std::countr_zero(a), ib = std::countr_zero(b);
            if (ia != ib)
                return ia < ib;
            a &= a - 1;
            b &= b - 1;
        }
        return false;
    });
}

std::string OpenSetDescriptor::to_string() const {
    if (forbidden.empty())
        return "X";
    std::string out = "X \\ (";
    for (std::size_t k = 0; k < forbidden.size(); ++k) {
        if (k)
            out += " ∪ ";
        out += "Z(" + support_letters(forbidden[k]) + ")";
    }
    return out + ")";
}

bool support_allowed(const OpenSetDescriptor& d, Support j) {
    for (Support i : d.forbidden)
        if ((i & j) == 0)
            return false;
    return true;
}

OpenSetDescriptor open_set_descriptor(const PolytopeCatalog& cat, const Collection& pi) {
    OpenSetDescriptor d;
    d.s = cat.s;
    const Support full = static_cast<Support>((std::size_t{1} << cat.s) - 1);
    auto present = [&](Support j) {
        return pi.test(static_cast<std::size_t>(cat.index_of(j)));
    };
    for (Support j = 0; j <= full; ++j) {
        if (present(j))
            continue;
        bool maximal = true;
        for (std::size_t i = 0; i < cat.s && maximal; ++i)
            if (!(j >> i & 1U) && !present(j | Support{1} << i))
                maximal = false;
        if (maximal)
            d.forbidden.push_back(full & ~j);
    }
    sort_zero_sets(d.forbidden);
    return d;
}

Collection collection_from_descriptor(const PolytopeCatalog& cat, const OpenSetDescriptor& d) {
    const std::size_t n = cat.size();
    std::vector<int> state(n, -1);
    const Support full = static_cast<Support>((std::size_t{1} << cat.s) - 1);
    for (Support j = 0; j <= full; ++j) {
        const int allowed = support_allowed(d, j) ? 1 : 0;
        int& st = state[static_cast<std::size_t>(cat.index_of(j))];
        if (st >= 0 && st != allowed)
            throw std::invalid_argument("descriptor splits a distinguished polytope class");
        st = allowed;
    }
    Collection c(n);
    for (std::size_t p = 0; p < n; ++p)
        if (state[p] == 1)
            c.set(p);
    return c;
}

OpenSetDescriptor parse_descriptor(const std::string& text, std::size_t s) {
    OpenSetDescriptor d;
    d.s = s;
    std::size_t pos = 0;
    while ((pos = text.find("Z(", pos)) != std::string::npos) {
        const std::size_t end = text.find(')', pos);
        if (end == std::string::npos)
            throw std::invalid_argument("parse_descriptor: unbalanced Z(");
        Support set = 0;
        for (std::size_t k = pos + 2; k < end; ++k) {
            const char ch = text[k];
            if (ch >= 'a' && ch <= 'z') {
                const auto i = static_cast<std::size_t>(ch - 'a');
                if (i >= s)
                    throw std::invalid_argument("parse_descriptor: letter out of range");
                set |= Support{1} << i;
            } else if (ch != ',' && ch != ' ') {
                throw std::invalid_argument("parse_descriptor: unexpected character");
            }
        }
        d.forbidden.push_back(set);
        pos = end;
    }
    sort_zero_sets(d.forbidden);
    return d;
}

} // namespace toricfan
