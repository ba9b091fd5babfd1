#include "toricfan/catalog.hpp"

#include "toricfan/parallel.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace toricfan {

namespace {

RationalVector homogenize(const RationalVector& v) {
    RationalVector h = v;
    h.emplace_back(1);
    return h;
}

// True iff some facet of p is tight at every point.
bool in_proper_face(const PolytopeRecord& p, const RationalMatrix& points) {
    for (const auto& f : p.hom.facet_normals) {
        const RationalVector fr = to_rational(f);
        bool tight = true;
        for (const auto& x : points)
            if (sgn(dot(fr, homogenize(x))) != 0) {
                tight = false;
                break;
            }
        if (tight)
            return true;
    }
    return false;
}

} // namespace

DistinguishedPolytope canonical_polytope(const WeightSystem& ws, Support j) {
    if (ws.s >= 32 || (j >> ws.s) != 0)
        throw std::invalid_argument("canonical_polytope: support out of range");
    RationalMatrix pts{RationalVector(ws.r, Rational(0))};
    for (std::size_t i = 0; i < ws.s; ++i)
        if (j >> i & 1U)
            pts.push_back(ws.beta(i));
    DistinguishedPolytope d;
    d.geometry = hull_vertices(pts);
    const RationalVector zero(ws.r, Rational(0));
    for (std::size_t i = 0; i < ws.s; ++i) {
        const RationalVector b = ws.beta(i);
        if (polytope_contains(d.geometry, b))
            d.members |= Support{1} << i;
        if (std::binary_search(d.geometry.vertices.begin(), d.geometry.vertices.end(), b,
                               lex_less))
            d.vertices |= Support{1} << i;
    }
    d.zero_is_vertex = std::binary_search(d.geometry.vertices.begin(),
                                          d.geometry.vertices.end(), zero, lex_less);
    return d;
}

PolytopeCatalog build_catalog(const WeightSystem& ws, unsigned jobs) {
    if (ws.s > 20)
        throw std::invalid_argument("build_catalog: too many coordinates");
    PolytopeCatalog cat;
    cat.r = ws.r;
    cat.s = ws.s;
    const std::size_t subsets = std::size_t{1} << ws.s;

    // Only the member set is needed to dedupe; the geometry is kept once.
    std::vector<Support> members(subsets);
    parallel_for(subsets, jobs, [&](std::size_t j) {
        members[j] = canonical_polytope(ws, static_cast<Support>(j)).members;
    });
    std::vector<Support> distinct(members.begin(), members.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::map<Support, int> index;
    for (std::size_t k = 0; k < distinct.size(); ++k)
        index[distinct[k]] = static_cast<int>(k);
    cat.index_of_support.resize(subsets);
    for (std::size_t j = 0; j < subsets; ++j)
        cat.index_of_support[j] = index.at(members[j]);
    cat.polys.resize(distinct.size());
    parallel_for(distinct.size(), jobs,
                 [&](std::size_t k) { cat.polys[k] = canonical_polytope(ws, distinct[k]); });

    const std::size_t n = cat.size();
    cat.contained_in.assign(n, Bitset(n));
    cat.faces.assign(n, Bitset(n));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            if ((cat.polys[p].members & ~cat.polys[q].members) == 0)
                cat.contained_in[p].set(q);
    std::vector<std::vector<bool>> face(n, std::vector<bool>(n, false));
    parallel_for(n, jobs, [&](std::size_t q) {
        for (std::size_t p = 0; p < n; ++p)
            if (cat.contained_in[p].test(q))
                face[q][p] = is_face_of(cat.polys[p].geometry, cat.polys[q].geometry);
    });
    for (std::size_t q = 0; q < n; ++q)
        for (std::size_t p = 0; p < n; ++p)
            if (face[q][p])
                cat.faces[q].set(p);

    cat.meet.assign(n * n, -1);
    cat.in_face.assign(n * n, 0);
    parallel_for(n, jobs, [&](std::size_t p) {
        for (std::size_t q = p; q < n; ++q) {
            const auto& a = cat.polys[p].geometry;
            const auto& b = cat.polys[q].geometry;
            const PolytopeRecord x = intersect_polytopes(a, b);
            std::uint8_t flags = 0;
            if (in_proper_face(a, x.vertices))
                flags |= 1;
            if (in_proper_face(b, x.vertices))
                flags |= 2;
            int m = -1;
            // Distinguished iff every vertex is 0 or some beta_i.
            Support t = cat.polys[p].members & cat.polys[q].members;
            bool distinguished = true;
            for (const auto& v : x.vertices) {
                if (is_zero(v))
                    continue;
                bool hit = false;
                for (std::size_t i = 0; i < ws.s && !hit; ++i)
                    hit = (t >> i & 1U) && ws.beta(i) == v;
                if (!hit) {
                    distinguished = false;
                    break;
                }
            }
            if (distinguished)
                m = cat.index_of_support[t];
            cat.meet[p * n + q] = cat.meet[q * n + p] = m;
            cat.in_face[p * n + q] = flags;
            cat.in_face[q * n + p] =
                static_cast<std::uint8_t>(((flags & 1) << 1) | ((flags & 2) >> 1));
        }
    });
    return cat;
}

IntersectionClass intersection_class(const PolytopeCatalog& cat, std::size_t p, std::size_t q) {
    const std::size_t n = cat.size();
    if (p >= n || q >= n)
        throw std::out_of_range("intersection_class: index out of range");
    if (cat.in_face[p * n + q] == 0)
        return {IntersectionKind::Irrelevant, -1};
    const int m = cat.meet[p * n + q];
    if (m < 0)
        return {IntersectionKind::Incompatible, -1};
    return {IntersectionKind::MustContain, m};
}

std::string support_letters(Support j, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < 32; ++i)
        if (j >> i & 1U) {
            if (!out.empty())
                out += sep;
            out += coordinate_label(i);
        }
    return out;
}

} // namespace toricfan
