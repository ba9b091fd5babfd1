#include "toricfan/fan.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace toricfan {

namespace {

IntVector unit(std::size_t n, std::size_t i, std::int64_t sign = 1) {
    IntVector e(n, 0);
    e[i] = sign;
    return e;
}

} // namespace

Fan make_fan(std::size_t dim, const std::vector<std::vector<IntVector>>& cone_generators) {
    std::vector<ConeRecord> cones;
    for (const auto& g : cone_generators) {
        ConeRecord c = g.empty() ? cone_from_generators(RationalMatrix{RationalVector(dim, 0)}, dim)
                                 : cone_from_generators(g, dim);
        if (!c.strictly_convex())
            throw NotStrictlyConvex("make_fan: cone is not strictly convex");
        cones.push_back(std::move(c));
    }
    // Dedupe, then drop cones contained in another.
    std::sort(cones.begin(), cones.end(),
              [](const ConeRecord& a, const ConeRecord& b) { return a.extremal_rays < b.extremal_rays; });
    cones.erase(std::unique(cones.begin(), cones.end(),
                            [](const ConeRecord& a, const ConeRecord& b) {
                                return a.extremal_rays == b.extremal_rays;
                            }),
                cones.end());
    std::vector<bool> drop(cones.size(), false);
    for (std::size_t i = 0; i < cones.size(); ++i)
        for (std::size_t j = 0; j < cones.size() && !drop[i]; ++j) {
            if (i == j || drop[j])
                continue;
            bool inside = true;
            for (const auto& r : cones[i].extremal_rays)
                if (!cone_contains(cones[j], to_rational(r))) {
                    inside = false;
                    break;
                }
            if (inside)
                drop[i] = true;
        }
    Fan f;
    f.dim = dim;
    std::set<IntVector> rays;
    for (std::size_t i = 0; i < cones.size(); ++i)
        if (!drop[i])
            rays.insert(cones[i].extremal_rays.begin(), cones[i].extremal_rays.end());
    f.rays.assign(rays.begin(), rays.end());
    std::vector<std::pair<std::vector<std::size_t>, ConeRecord>> kept;
    for (std::size_t i = 0; i < cones.size(); ++i) {
        if (drop[i])
            continue;
        std::vector<std::size_t> idx;
        for (const auto& r : cones[i].extremal_rays)
            idx.push_back(static_cast<std::size_t>(
                std::lower_bound(f.rays.begin(), f.rays.end(), r) - f.rays.begin()));
        std::sort(idx.begin(), idx.end());
        kept.emplace_back(std::move(idx), std::move(cones[i]));
    }
    std::sort(kept.begin(), kept.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [idx, c] : kept) {
        f.max_cones.push_back(std::move(idx));
        f.cones.push_back(std::move(c));
    }
    return f;
}

Fan make_fan(std::size_t dim, const std::vector<IntVector>& rays,
             const std::vector<std::vector<std::size_t>>& cones) {
    std::vector<std::vector<IntVector>> gens;
    for (const auto& c : cones) {
        std::vector<IntVector> g;
        for (auto i : c)
            g.push_back(rays.at(i));
        gens.push_back(std::move(g));
    }
    return make_fan(dim, gens);
}

Fan zero_fan() {
    Fan f;
    f.dim = 0;
    f.max_cones.push_back({});
    ConeRecord c;
    f.cones.push_back(c);
    return f;
}

std::vector<std::vector<IntVector>> fan_key(const Fan& f) {
    std::vector<std::vector<IntVector>> key;
    for (const auto& c : f.cones)
        key.push_back(c.extremal_rays);
    std::sort(key.begin(), key.end());
    return key;
}

bool same_fan(const Fan& a, const Fan& b) { return a.dim == b.dim && fan_key(a) == fan_key(b); }

std::optional<std::string> fan_axiom_failure(const Fan& f) {
    for (const auto& c : f.cones)
        if (!c.strictly_convex())
            return std::string("cone with lineality");
    for (std::size_t i = 0; i < f.cones.size(); ++i)
        for (std::size_t j = i + 1; j < f.cones.size(); ++j) {
            const ConeRecord x = intersect_cones(f.cones[i], f.cones[j]);
            if (!is_face_of(x, f.cones[i]) || !is_face_of(x, f.cones[j]))
                return "cones " + std::to_string(i) + " and " + std::to_string(j) +
                       " do not meet in a common face";
        }
    return std::nullopt;
}

FanResult fan_from_collection(const RaySystem& rs, const PolytopeCatalog& cat,
                              const Collection& pi) {
    const Support full = static_cast<Support>((std::size_t{1} << rs.s) - 1);
    std::vector<Support> zero_sets;
    for (Support j = 0; j <= full; ++j)
        if (pi.test(static_cast<std::size_t>(cat.index_of(j))))
            zero_sets.push_back(full & ~j);
    // Only the inclusion-maximal zero-sets matter for the maximal cones, but
    // degeneracy needs every one; a cone over a subset of a strictly convex
    // cone's generators is strictly convex, so maximal ones suffice.
    std::vector<Support> maximal;
    for (Support z : zero_sets) {
        bool top = true;
        for (Support w : zero_sets)
            if (w != z && (z & ~w) == 0) {
                top = false;
                break;
            }
        if (top)
            maximal.push_back(z);
    }
    std::vector<std::vector<IntVector>> gens;
    for (Support z : maximal) {
        std::vector<IntVector> g;
        for (std::size_t i = 0; i < rs.s; ++i)
            if (z >> i & 1U)
                g.push_back(rs.rays[i]);
        if (!g.empty() && !cone_from_generators(g, rs.n).strictly_convex())
            return Degenerate{};
        gens.push_back(std::move(g));
    }
    Fan f = make_fan(rs.n, gens);
    if (auto why = fan_axiom_failure(f))
        throw FanAxiomViolation("fan_from_collection: " + *why);
    return f;
}

bool is_simplicial(const Fan& f) {
    for (const auto& c : f.cones)
        if (c.extremal_rays.size() != c.dim)
            return false;
    return true;
}

namespace {

// Inward facet normal of cone c and the rays of the fan lying on that facet.
std::vector<std::pair<IntVector, std::vector<std::size_t>>> facets_with_rays(const Fan& f,
                                                                             std::size_t k) {
    std::vector<std::pair<IntVector, std::vector<std::size_t>>> out;
    for (const auto& n : f.cones[k].facet_normals) {
        std::vector<std::size_t> on;
        for (auto i : f.max_cones[k])
            if (dot(n, f.rays[i]) == 0)
                on.push_back(i);
        out.emplace_back(n, std::move(on));
    }
    return out;
}

RationalVector perturb_until_uncovered(const Fan& f, const RationalVector& base,
                                       const RationalVector& dir) {
    Rational eps(1);
    for (int it = 0; it < 200; ++it) {
        RationalVector x = base;
        for (std::size_t i = 0; i < x.size(); ++i)
            x[i] += eps * dir[i];
        if (!fan_contains(f, x))
            return to_rational(primitive(x));
        eps /= 2;
    }
    throw std::logic_error("is_complete_exact: no witness found near an unpaired wall");
}

} // namespace

bool fan_contains(const Fan& f, const RationalVector& x) {
    for (const auto& c : f.cones)
        if (cone_contains(c, x))
            return true;
    return false;
}

CompletenessResult is_complete_exact(const Fan& f) {
    const std::size_t n = f.dim;
    if (n == 0)
        return Complete{};
    if (f.cones.empty())
        return Incomplete{to_rational(unit(n, 0))};
    for (std::size_t k = 0; k < f.cones.size(); ++k) {
        const ConeRecord& c = f.cones[k];
        if (c.full_dimensional())
            continue;
        RationalVector base(n, Rational(0));
        for (const auto& r : c.extremal_rays)
            for (std::size_t i = 0; i < n; ++i)
                base[i] += r[i];
        return Incomplete{perturb_until_uncovered(f, base, to_rational(c.equations.front()))};
    }
    std::map<std::vector<std::size_t>, int> walls;
    std::vector<std::tuple<std::size_t, IntVector, std::vector<std::size_t>>> all;
    for (std::size_t k = 0; k < f.cones.size(); ++k)
        for (auto& [normal, on] : facets_with_rays(f, k)) {
            ++walls[on];
            all.emplace_back(k, normal, on);
        }
    for (const auto& [k, normal, on] : all) {
        if (walls[on] == 2)
            continue;
        // Prefer a signed unit vector as the witness when one is uncovered.
        for (std::size_t i = 0; i < n; ++i)
            for (int sign : {1, -1}) {
                RationalVector e(n, Rational(0));
                e[i] = sign;
                if (!fan_contains(f, e))
                    return Incomplete{e};
            }
        RationalVector base(n, Rational(0));
        for (auto i : on)
            for (std::size_t d = 0; d < n; ++d)
                base[d] += f.rays[i][d];
        RationalVector out(n);
        for (std::size_t d = 0; d < n; ++d)
            out[d] = -normal[d];
        return Incomplete{perturb_until_uncovered(f, base, out)};
    }
    return Complete{};
}

bool complete_by_complements(const Fan& f) {
    const std::size_t n = f.dim;
    if (n == 0)
        return true;
    // Per cone, the open half-spaces whose union is the complement.
    std::vector<std::vector<IntVector>> options;
    for (const auto& c : f.cones) {
        std::vector<IntVector> opts;
        for (const auto& fn : c.facet_normals) {
            IntVector neg = fn;
            for (auto& x : neg)
                x = -x;
            opts.push_back(neg);
        }
        for (const auto& e : c.equations) {
            opts.push_back(e);
            IntVector neg = e;
            for (auto& x : neg)
                x = -x;
            opts.push_back(neg);
        }
        options.push_back(std::move(opts));
    }
    // Strict homogeneous systems <a, x> > 0 are feasible iff <a, x> >= 1 is.
    std::vector<HalfSpace> chosen;
    std::function<bool(std::size_t)> dfs = [&](std::size_t k) -> bool {
        if (k == options.size())
            return true;
        for (const auto& a : options[k]) {
            chosen.push_back(HalfSpace{to_rational(a), Rational(1), Sense::GreaterEq});
            const bool ok = std::holds_alternative<Feasible>(lp_feasible(chosen, {}, n)) && dfs(k + 1);
            chosen.pop_back();
            if (ok)
                return true;
        }
        return false;
    };
    return !dfs(0);
}

namespace {

// Sign of <a, x> for integer a and double x, exact.
int exact_sign(const IntVector& a, const std::vector<double>& x, const RationalVector& xq) {
    double v = 0, mag = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double t = static_cast<double>(a[i]) * x[i];
        v += t;
        mag += std::fabs(t);
    }
    const double err = mag * 4.0 * static_cast<double>(a.size() + 1) * 1.1102230246251565e-16;
    if (v > err)
        return 1;
    if (v < -err)
        return -1;
    return sgn(dot(to_rational(a), xq));
}

bool contains_sample(const ConeRecord& c, const std::vector<double>& x, const RationalVector& xq) {
    for (const auto& e : c.equations)
        if (exact_sign(e, x, xq) != 0)
            return false;
    for (const auto& fn : c.facet_normals)
        if (exact_sign(fn, x, xq) < 0)
            return false;
    return true;
}

} // namespace

Coverage coverage_fraction(const Fan& f, std::size_t samples, std::uint64_t seed) {
    Coverage cov;
    cov.samples = samples;
    cov.seed = seed;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> x(f.dim);
    RationalVector xq(f.dim);
    for (std::size_t k = 0; k < samples; ++k) {
        for (std::size_t i = 0; i < f.dim; ++i) {
            x[i] = gauss(rng);
            xq[i] = from_double(x[i]);
        }
        for (const auto& c : f.cones)
            if (contains_sample(c, x, xq)) {
                ++cov.hits;
                break;
            }
    }
    cov.fraction = samples ? static_cast<double>(cov.hits) / static_cast<double>(samples) : 0.0;
    return cov;
}

Fan product_fan(const Fan& a, const Fan& b) {
    const std::size_t n = a.dim + b.dim;
    std::vector<std::vector<IntVector>> gens;
    for (const auto& ca : a.max_cones)
        for (const auto& cb : b.max_cones) {
            std::vector<IntVector> g;
            for (auto i : ca) {
                IntVector v(n, 0);
                std::copy(a.rays[i].begin(), a.rays[i].end(), v.begin());
                g.push_back(std::move(v));
            }
            for (auto i : cb) {
                IntVector v(n, 0);
                std::copy(b.rays[i].begin(), b.rays[i].end(), v.begin() + static_cast<long>(a.dim));
                g.push_back(std::move(v));
            }
            gens.push_back(std::move(g));
        }
    if (n == 0)
        return zero_fan();
    return make_fan(n, gens);
}

namespace {

bool compatible(const ConeRecord& a, const ConeRecord& b) {
    const ConeRecord x = intersect_cones(a, b);
    return is_face_of(x, a) && is_face_of(x, b);
}

// Distinct strictly convex cones on nonempty subsets of the rays, with the
// generating subset (the largest one giving that cone).
std::vector<std::pair<Support, ConeRecord>> subset_cones(const RaySystem& rs) {
    std::map<std::vector<IntVector>, std::pair<Support, ConeRecord>> seen;
    const Support full = static_cast<Support>((std::size_t{1} << rs.s) - 1);
    for (Support j = 1; j <= full; ++j) {
        std::vector<IntVector> g;
        for (std::size_t i = 0; i < rs.s; ++i)
            if (j >> i & 1U)
                g.push_back(rs.rays[i]);
        ConeRecord c = cone_from_generators(g, rs.n);
        if (!c.strictly_convex())
            continue;
        auto it = seen.find(c.extremal_rays);
        if (it == seen.end()) {
            auto key = c.extremal_rays;
            seen.emplace(std::move(key), std::make_pair(j, std::move(c)));
        }
        else if (std::popcount(j) > std::popcount(it->second.first))
            it->second.first = j;
    }
    std::vector<std::pair<Support, ConeRecord>> out;
    for (auto& [k, v] : seen)
        out.push_back(std::move(v));
    return out;
}

} // namespace

MaximalityResult is_maximal_fan(const Fan& f, const RaySystem& rs) {
    auto cands = subset_cones(rs);
    std::stable_sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
        return a.second.dim > b.second.dim ||
               (a.second.dim == b.second.dim &&
                a.second.extremal_rays.size() > b.second.extremal_rays.size());
    });
    for (const auto& [j, c] : cands) {
        bool in_fan = false;
        for (const auto& m : f.cones)
            if (is_face_of(c, m)) {
                in_fan = true;
                break;
            }
        if (in_fan)
            continue;
        bool ok = true;
        for (const auto& m : f.cones)
            if (!compatible(c, m)) {
                ok = false;
                break;
            }
        if (ok) {
            Extendable e;
            for (std::size_t i = 0; i < rs.s; ++i)
                if (std::binary_search(c.extremal_rays.begin(), c.extremal_rays.end(), rs.rays[i]))
                    e.generators.push_back(i);
            e.cone = c;
            return e;
        }
    }
    return Maximal{};
}

std::vector<std::size_t> ray_sources(const Fan& f, const RaySystem& rs) {
    std::vector<std::size_t> out;
    for (const auto& r : f.rays) {
        auto it = std::find(rs.rays.begin(), rs.rays.end(), r);
        if (it == rs.rays.end())
            throw std::invalid_argument("ray_sources: fan ray " + to_string(r) +
                                        " is not in the ray system");
        out.push_back(static_cast<std::size_t>(it - rs.rays.begin()));
    }
    return out;
}

namespace {

OpenSetDescriptor minimal_non_faces(std::size_t s, const std::vector<Support>& tops) {
    auto is_face = [&](Support i) {
        for (Support t : tops)
            if ((i & ~t) == 0)
                return true;
        return false;
    };
    OpenSetDescriptor d;
    d.s = s;
    const Support full = static_cast<Support>((std::size_t{1} << s) - 1);
    for (Support i = 1; i <= full; ++i) {
        if (is_face(i))
            continue;
        bool minimal = true;
        for (std::size_t k = 0; k < s && minimal; ++k)
            if ((i >> k & 1U) && !is_face(i & ~(Support{1} << k)))
                minimal = false;
        if (minimal)
            d.forbidden.push_back(i);
    }
    sort_zero_sets(d.forbidden);
    return d;
}

} // namespace

LiftedDescriptors lift_fans(const Fan& f, const RaySystem& rs) {
    const std::vector<std::size_t> src = ray_sources(f, rs);
    std::vector<Support> tilde, hat;
    for (std::size_t k = 0; k < f.cones.size(); ++k) {
        Support t = 0, h = 0;
        for (auto i : f.max_cones[k])
            t |= Support{1} << src[i];
        for (std::size_t i = 0; i < rs.s; ++i)
            if (cone_contains(f.cones[k], to_rational(rs.rays[i])))
                h |= Support{1} << i;
        tilde.push_back(t);
        hat.push_back(h);
    }
    return {minimal_non_faces(rs.s, tilde), minimal_non_faces(rs.s, hat)};
}

std::vector<Fan> maximal_fans_by_cliques(const RaySystem& rs) {
    const auto cands = subset_cones(rs);
    const std::size_t m = cands.size();
    std::vector<Bitset> adj(m, Bitset(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (compatible(cands[i].second, cands[j].second)) {
                adj[i].set(j);
                adj[j].set(i);
            }
    std::vector<Bitset> cliques;
    // Bron-Kerbosch with pivoting.
    std::function<void(Bitset, Bitset, Bitset)> bk = [&](Bitset r, Bitset p, Bitset x) {
        if (p.none() && x.none()) {
            cliques.push_back(r);
            return;
        }
        std::size_t pivot = 0, best = 0;
        bool have = false;
        (p | x).for_each([&](std::size_t u) {
            const std::size_t c = (p & adj[u]).count();
            if (!have || c > best) {
                pivot = u;
                best = c;
                have = true;
            }
        });
        for (std::size_t v : minus(p, adj[pivot]).indices()) {
            Bitset r2 = r;
            r2.set(v);
            bk(r2, p & adj[v], x & adj[v]);
            p.reset(v);
            x.set(v);
        }
    };
    Bitset all(m);
    for (std::size_t i = 0; i < m; ++i)
        all.set(i);
    bk(Bitset(m), all, Bitset(m));
    std::vector<Fan> out;
    for (const auto& c : cliques) {
        std::vector<std::vector<IntVector>> gens;
        c.for_each([&](std::size_t i) { gens.push_back(cands[i].second.extremal_rays); });
        out.push_back(make_fan(rs.n, gens));
    }
    std::sort(out.begin(), out.end(),
              [](const Fan& a, const Fan& b) { return fan_key(a) < fan_key(b); });
    return out;
}

} // namespace toricfan
