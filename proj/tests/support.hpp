#pragma once

#include "toricfan/census.hpp"
#include "toricfan/fixtures.hpp"

#include <memory>
#include <random>

namespace testsupport {

using namespace toricfan;

// Everything derived from one ray list, built once per process.
struct System {
    RaySystem rs;
    WeightSystem ws;
    PolytopeCatalog cat;
    std::unique_ptr<ClosureOperator> op;
    std::vector<Collection> closed;
    std::vector<Collection> maximal;
    bool enumerated = false;

    explicit System(const std::vector<IntVector>& rays)
        : rs(validate_rays(rays)), ws(gale_dual(rs)), cat(build_catalog(ws)),
          op(std::make_unique<ClosureOperator>(cat)) {}

    void enumerate() {
        if (enumerated)
            return;
        closed = enumerate_closed(*op);
        maximal = maximal_collections(*op, closed);
        enumerated = true;
    }

    Collection collection(const std::string& descriptor) const {
        return collection_from_descriptor(cat, parse_descriptor(descriptor, rs.s));
    }
};

inline System& dim3() {
    static System s(fixtures::dim3_rays());
    s.enumerate();
    return s;
}

inline System& dim4() {
    static System s(fixtures::dim4_rays());
    return s;
}

inline Fan fan_of(const System& s, const std::string& descriptor) {
    return std::get<Fan>(fan_from_collection(s.rs, s.cat, s.collection(descriptor)));
}

// Nondegenerate fans of the maximal collections, in collection order.
inline const std::vector<Fan>& dim3_fans() {
    static const std::vector<Fan> fans = [] {
        std::vector<Fan> out;
        for (const auto& c : dim3().maximal) {
            auto fr = fan_from_collection(dim3().rs, dim3().cat, c);
            if (auto* f = std::get_if<Fan>(&fr))
                out.push_back(*f);
        }
        return out;
    }();
    return fans;
}

inline Rational random_rational(std::mt19937_64& rng, int num, int den) {
    std::uniform_int_distribution<int> a(-num, num), b(1, den);
    return Rational(a(rng), b(rng));
}

inline RationalVector random_vector(std::mt19937_64& rng, std::size_t n, int num = 6,
                                    int den = 4) {
    RationalVector v(n);
    for (auto& x : v) {
        x = random_rational(rng, num, den);
        x.canonicalize();
    }
    return v;
}

inline IntVector random_int_vector(std::mt19937_64& rng, std::size_t n, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    IntVector v(n);
    for (auto& x : v)
        x = d(rng);
    return v;
}

} // namespace testsupport
