#include "toricfan/fixtures.hpp"

namespace toricfan::fixtures {

std::vector<IntVector> dim3_rays() {
    return {{1, 0, 0}, {0, 1, 0}, {2, 2, 3}, {-1, -2, -2}, {-2, -1, -2}, {0, 0, 1}};
}

IntMatrix dim3_weights() {
    return {{-2, -2, 1, 0, 0, -3}, {1, 2, 0, 1, 0, 2}, {2, 1, 0, 0, 1, 2}};
}

std::vector<IntVector> dim4_rays() {
    return {{1, 0, 0, 0}, {0, 1, 0, 0},   {0, 0, 1, 0},    {0, 0, 0, 1},
            {-2, 1, 1, 1}, {-1, -1, 2, 1}, {2, -1, -4, -3}};
}

IntMatrix dim4_weights() {
    return {{3, 0, -3, -2, 1, 1, 0}, {0, 3, -3, -1, -1, 2, 0}, {1, 1, 1, 1, 1, 1, 1}};
}

std::vector<IntVector> sec5_rays() {
    return {{-2, -1, 0, 1}, {2, -1, 0, 1}, {0, -2, -1, 1}, {0, 2, -1, 1},
            {-1, 0, -2, 1}, {-1, 0, 2, 1}, {0, 0, 0, -1}};
}

std::vector<std::vector<int>> sec5_cones() {
    return {{1, 2, 3, 7}, {1, 2, 6, 7}, {3, 4, 2, 7}, {3, 4, 5, 7},
            {5, 6, 1, 7}, {5, 6, 4, 7}, {1, 3, 5, 7}, {2, 4, 6, 7}};
}

std::vector<IntVector> p2_rays() { return {{1, 0}, {0, 1}, {-1, -1}}; }

std::vector<IntVector> p1_rays() { return {{1}, {-1}}; }

std::vector<IntVector> p2_times_p1_rays() {
    return {{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {0, 0, 1}, {0, 0, -1}};
}

const std::vector<CensusRow>& dim3_census() {
    static const std::vector<CensusRow> rows = {
        {"X \\ (Z(b, d) ∪ Z(a, f) ∪ Z(a, c, d, e) ∪ Z(b, f))", true, true, true},
        {"X \\ (Z(d) ∪ Z(a, c, e, f) ∪ Z(b, f))", true, true, true},
        {"X \\ (Z(a, e) ∪ Z(a, f) ∪ Z(b, c, d, f) ∪ Z(c, e))", true, true, true},
        {"X \\ (Z(b, d) ∪ Z(a, c, e) ∪ Z(c, d) ∪ Z(b, f))", true, true, true},
        {"X \\ (Z(b) ∪ Z(f) ∪ Z(a, c, d, e))", true, true, true},
        {"X \\ (Z(c, d) ∪ Z(b, f) ∪ Z(b, d) ∪ Z(a, c, e) ∪ Z(a, e, f))", true, true, true},
        {"X \\ (Z(b, d, f) ∪ Z(a) ∪ Z(c, e))", true, true, true},
        {"X \\ (Z(b, c, d) ∪ Z(a, f) ∪ Z(a, e) ∪ Z(c, e))", true, true, true},
        {"X \\ (Z(a, b, e, f) ∪ Z(c, e) ∪ Z(d))", true, true, true},
        {"X \\ (Z(c) ∪ Z(a, b, e, f) ∪ Z(d))", true, true, true},
        {"X \\ (Z(a, f) ∪ Z(a, e) ∪ Z(c, d, e) ∪ Z(b, f))", true, true, true},
        {"X \\ (Z(b, c, d) ∪ Z(a, f) ∪ Z(a, e) ∪ Z(b, f))", true, true, true},
        {"X \\ (Z(b) ∪ Z(c, d) ∪ Z(a, c, e, f))", true, true, true},
        {"X \\ (Z(b) ∪ Z(a, f) ∪ Z(c, d, e))", true, true, true},
        {"X \\ (Z(c, e) ∪ Z(b, d, f) ∪ Z(b, c, d) ∪ Z(a, f) ∪ Z(a, e))", true, true, true},
        {"X \\ (Z(a) ∪ Z(b, c, d, e) ∪ Z(b, f))", true, true, true},
        {"X \\ (Z(c, d, e) ∪ Z(b, f) ∪ Z(b, c, d) ∪ Z(a, f) ∪ Z(a, e))", true, true, true},
        {"X \\ (Z(b) ∪ Z(d) ∪ Z(a, c, e, f))", true, true, true},
        {"X \\ (Z(a) ∪ Z(c, d, e) ∪ Z(b, f))", true, true, true},
        {"X \\ (Z(b, c, d) ∪ Z(a, f) ∪ Z(e))", true, true, true},
        {"X \\ (Z(b) ∪ Z(a, f) ∪ Z(a, c, d, e))", true, true, true},
        {"X \\ (Z(c) ∪ Z(a, b, d, f) ∪ Z(e))", true, true, true},
        {"X \\ (Z(e) ∪ Z(a, b, d, f) ∪ Z(c, d))", true, true, true},
        {"X \\ (Z(c) ∪ Z(b, d) ∪ Z(a, b, e, f))", true, true, true},
        {"X \\ (Z(b, d) ∪ Z(a, f) ∪ Z(c, d, e) ∪ Z(b, f))", true, true, true},
        {"X \\ (Z(c, e) ∪ Z(c, d) ∪ Z(b, d, f) ∪ Z(a, e) ∪ Z(a, b, f))", true, true, true},
        {"X \\ (Z(a, f) ∪ Z(a, e) ∪ Z(b, c, d, e) ∪ Z(b, f))", true, true, true},
        {"X \\ (Z(c, d, e) ∪ Z(b, f) ∪ Z(b, d) ∪ Z(a, f) ∪ Z(a, c, e))", true, true, true},
        {"X \\ (Z(b, d, f) ∪ Z(a, e) ∪ Z(c, e) ∪ Z(c, d))", true, true, true},
        {"X \\ (Z(c) ∪ Z(b, d) ∪ Z(a, e, f))", true, true, true},
        {"X \\ (Z(a) ∪ Z(b, c, d, f) ∪ Z(c, e))", true, true, true},
        {"X \\ (Z(b, d) ∪ Z(a, c, e, f) ∪ Z(c, d) ∪ Z(b, f))", true, true, true},
        {"X \\ (Z(a, e) ∪ Z(a, b, d, f) ∪ Z(c, e) ∪ Z(c, d))", true, true, true},
        {"X \\ (Z(a, e) ∪ Z(b, c, d, e) ∪ Z(f))", true, true, true},
        {"X \\ (Z(b, d, f) ∪ Z(c) ∪ Z(a, e))", true, true, true},
        {"X \\ (Z(e) ∪ Z(c, d) ∪ Z(a, b, f))", true, true, true},
        {"X \\ (Z(b, d) ∪ Z(c, e) ∪ Z(c, d) ∪ Z(a, b, f))", true, true, true},
        {"X \\ (Z(c) ∪ Z(a, e) ∪ Z(a, b, d, f))", true, true, true},
        {"X \\ (Z(d) ∪ Z(a, c, e) ∪ Z(b, f))", true, true, true},
        {"X \\ (Z(a) ∪ Z(b, c, d, e) ∪ Z(f))", true, true, true},
        {"X \\ (Z(b, d) ∪ Z(a, e, f) ∪ Z(c, d) ∪ Z(b, f))", true, true, true},
        {"X \\ (Z(b, d) ∪ Z(f) ∪ Z(a, c, d, e))", true, true, true},
        {"X \\ (Z(b, d) ∪ Z(a, f) ∪ Z(a, c, e) ∪ Z(b, f))", true, true, true},
        {"X \\ (Z(a, f) ∪ Z(b, c, d, f) ∪ Z(e))", true, true, true},
        {"X \\ (Z(a, e, f) ∪ Z(c, d) ∪ Z(b))", true, true, true},
        {"X \\ (Z(b, d) ∪ Z(c, e) ∪ Z(c, d) ∪ Z(a, e, f))", true, true, true},
        {"X \\ (Z(b, d) ∪ Z(c, e) ∪ Z(c, d) ∪ Z(a, b, e, f))", true, true, true},
        {"X \\ (Z(c, e) ∪ Z(c, d) ∪ Z(b, d) ∪ Z(a, e, f) ∪ Z(a, b, f))", true, true, true},
        {"X \\ (Z(a) ∪ Z(b, c, d, f) ∪ Z(e))", true, true, true},
        {"X \\ (Z(d) ∪ Z(c, e) ∪ Z(a, b, f))", true, true, true},
        {"X \\ (Z(a, e) ∪ Z(c, e) ∪ Z(c, d) ∪ Z(a, b, f))", true, true, true},
        {"X \\ (Z(b, d) ∪ Z(f) ∪ Z(a, c, e))", true, true, true},
        {"X \\ (Z(b, d, f) ∪ Z(a, f) ∪ Z(a, e) ∪ Z(c, e))", true, true, true},
        {"X \\ (Z(b, c, d) ∪ Z(a, e) ∪ Z(f))", true, true, true},
        {"X \\ (Z(c, d, e) ∪ Z(b, c, d) ∪ Z(a, e, f) ∪ Z(b, d, f) ∪ Z(a, c, e) ∪ Z(a, b, f))", true, true, false},
        {"X \\ (Z(c, d, e) ∪ Z(b, d, f) ∪ Z(b, c, d) ∪ Z(a, f) ∪ Z(a, e))", true, true, false},
        {"X \\ (Z(c, d, e) ∪ Z(b, f) ∪ Z(b, d) ∪ Z(a, c, e) ∪ Z(a, e, f))", true, true, false},
        {"X \\ (Z(c, d) ∪ Z(b, d) ∪ Z(a, c, e) ∪ Z(a, e, f) ∪ Z(a, b, f))", true, true, false},
        {"X \\ (Z(b, d, f) ∪ Z(a, e, f) ∪ Z(c))", true, true, false},
        {"X \\ (Z(b, c, d) ∪ Z(a, f) ∪ Z(a, c, e) ∪ Z(b, f))", true, true, false},
        {"X \\ (Z(b, d, f) ∪ Z(a, e, f) ∪ Z(c, e) ∪ Z(c, d))", true, true, false},
        {"X \\ (Z(b, d, f) ∪ Z(a, f) ∪ Z(a, e) ∪ Z(c, d, e))", true, true, false},
        {"X \\ (Z(b, d, f) ∪ Z(a) ∪ Z(c, d, e))", true, true, false},
        {"X \\ (Z(c, d, e) ∪ Z(b, d) ∪ Z(a, e, f) ∪ Z(b, f))", true, true, false},
        {"X \\ (Z(c, e) ∪ Z(b, c, d) ∪ Z(b, d, f) ∪ Z(a, e) ∪ Z(a, b, f))", true, true, false},
        {"X \\ (Z(b, c, d) ∪ Z(e) ∪ Z(a, b, f))", true, true, false},
        {"X \\ (Z(b, c, d) ∪ Z(f) ∪ Z(a, c, e))", true, true, false},
        {"X \\ (Z(d) ∪ Z(a, c, e) ∪ Z(a, b, f))", true, true, false},
        {"X \\ (Z(b, d) ∪ Z(a, c, e) ∪ Z(c, d) ∪ Z(a, b, f))", true, true, false},
        {"X \\ (Z(c, e) ∪ Z(c, d) ∪ Z(b, d, f) ∪ Z(a, e, f) ∪ Z(a, b, f))", true, true, false},
        {"X \\ (Z(a, e, f) ∪ Z(c, d, e) ∪ Z(b))", true, true, false},
        {"X \\ (Z(b, c, d) ∪ Z(a, e) ∪ Z(c, e) ∪ Z(a, b, f))", true, true, false},
        {"X \\ (Z(c, d, e) ∪ Z(b, f) ∪ Z(b, c, d) ∪ Z(a, f) ∪ Z(a, c, e))", true, true, false},
        {"X \\ (Z(b, d) ∪ Z(a, f) ∪ Z(c, e))", true, false, true},
        {"X \\ (Z(a, e) ∪ Z(c, d) ∪ Z(b, f))", true, false, true},
        {"X \\ (Z(b, c, d) ∪ Z(a, e) ∪ Z(c, d, e) ∪ Z(b, f))", true, false, false},
        {"X \\ (Z(b, d, f) ∪ Z(b, c, d) ∪ Z(a, f) ∪ Z(c, e))", true, false, false},
        {"X \\ (Z(a, e, f) ∪ Z(a, c, e) ∪ Z(c, d) ∪ Z(b, f))", true, false, false},
        {"X \\ (Z(b, d) ∪ Z(c, e) ∪ Z(a, e, f) ∪ Z(a, b, f))", true, false, false},
        {"X \\ (Z(c, d, e) ∪ Z(b, c, d) ∪ Z(b, d, f) ∪ Z(a, e) ∪ Z(a, b, f))", true, false, false},
        {"X \\ (Z(c, d) ∪ Z(b, d, f) ∪ Z(a, e, f) ∪ Z(a, c, e) ∪ Z(a, b, f))", true, false, false},
        {"X \\ (Z(c, d, e) ∪ Z(b, f) ∪ Z(b, c, d) ∪ Z(a, e, f) ∪ Z(a, c, e))", true, false, false},
        {"X \\ (Z(c, d, e) ∪ Z(b, d, f) ∪ Z(b, c, d) ∪ Z(a, f) ∪ Z(a, c, e))", true, false, false},
        {"X \\ (Z(c, d, e) ∪ Z(b, d) ∪ Z(a, c, e) ∪ Z(a, e, f) ∪ Z(a, b, f))", true, false, false},
        {"X \\ (Z(b, d) ∪ Z(a, f) ∪ Z(a, c, e) ∪ Z(c, d, e))", true, false, false},
        {"X \\ (Z(b, d, f) ∪ Z(a, e) ∪ Z(c, d) ∪ Z(a, b, f))", true, false, false},
        {"X \\ (Z(c, e) ∪ Z(b, c, d) ∪ Z(a, e, f) ∪ Z(b, d, f) ∪ Z(a, b, f))", true, false, false},
        {"X \\ (Z(b) ∪ Z(f))", false, true, false},
        {"X \\ (Z(c) ∪ Z(e))", false, true, false},
        {"X \\ (Z(b))", false, true, false},
        {"X \\ (Z(b) ∪ Z(d))", false, true, false},
        {"X \\ (Z(a) ∪ Z(f))", false, true, false},
        {"X \\ (Z(c) ∪ Z(d))", false, true, false},
        {"X \\ (Z(a) ∪ Z(e))", false, true, false},
        {"X \\ (Z(d))", false, true, false},
        {"X \\ (Z(a))", false, true, false},
        {"X \\ (Z(f))", false, true, false},
        {"X \\ (Z(e))", false, true, false},
        {"X \\ (Z(c))", false, true, false},
        {"X", false, false, false},
    };
    return rows;
}

} // namespace toricfan::fixtures
