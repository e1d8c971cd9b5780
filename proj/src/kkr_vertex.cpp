#include <algorithm>
#include <stdexcept>
#include <vector>

#include "bethe/kkr.hpp"
#include "bethe/scatter.hpp"

namespace bethe {

namespace {

// Level-a rows sorted ascending by (length, rigging) — the factor order the
// construction threads through every level.
std::vector<Row> asc_rows(const RiggedConfiguration& rc, int a) {
    std::vector<Row> rows = rc.rows(a);
    std::reverse(rows.begin(), rows.end());
    return rows;
}

}  // namespace

Path kkr_vertex_level(const RiggedConfiguration& rc, int a) {
    if (a < 0 || a > rc.n())
        throw std::invalid_argument("vertex level out of range 0..n");
    if (validate(rc) != Validity::Restricted)
        throw std::domain_error("vertex construction needs a restricted input");
    int n = rc.n();

    // Top of the tower: every level-n factor is a string of the top letter.
    std::vector<CrystalElement> top;
    for (const Row& r : asc_rows(rc, n))
        top.push_back(vacuum(n, r.length, n));
    Path p{std::move(top)};

    for (int level = n; level > a; --level) {
        ScatteringData sd = map_C(p, rc.rows(level));
        std::vector<int> lambda;
        if (level - 1 >= 1)
            for (const Row& r : asc_rows(rc, level - 1))
                lambda.push_back(r.length);
        else
            lambda = rc.quantum();
        p = map_Phi(n, level, sd, lambda);
    }
    return p;
}

Path kkr_vertex(const RiggedConfiguration& rc) {
    return kkr_vertex_level(rc, 0);
}

}  // namespace bethe
