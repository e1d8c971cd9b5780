#pragma once

#include <functional>
#include <random>
#include <vector>

#include "bethe/crystal.hpp"
#include "bethe/rc.hpp"

namespace bethe::testutil {

// Reference configuration used across the printed worked examples:
// quantum (1^14), mu^(1)=(4,3,2) rigged (0,2,3), mu^(2)=(3,1) rigged (1,0),
// mu^(3)=(1) rigged (0); its path is 11112221322433.
inline RiggedConfiguration golden_rc() {
    return RiggedConfiguration(
        3, std::vector<int>(14, 1),
        {{{4, 0}, {3, 2}, {2, 3}}, {{3, 1}, {1, 0}}, {{1, 0}}});
}

// Every element of B_l at the given rank/floor (all weak compositions).
inline std::vector<CrystalElement> all_elements(int n, int l, int floor = 0) {
    int slots = n - floor + 1;
    std::vector<CrystalElement> out;
    std::vector<int> occ(static_cast<size_t>(n + 1), 0);
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == slots - 1) {
            occ[static_cast<size_t>(floor + pos)] = rest;
            out.push_back(make_element(n, occ, floor));
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            occ[static_cast<size_t>(floor + pos)] = v;
            self(self, pos + 1, rest - v);
        }
    };
    rec(rec, 0, l);
    return out;
}

inline CrystalElement random_element(std::mt19937& rng, int n, int l,
                                     int floor = 0) {
    std::vector<int> occ(static_cast<size_t>(n + 1), 0);
    std::uniform_int_distribution<int> letter(floor, n);
    for (int b = 0; b < l; ++b) ++occ[static_cast<size_t>(letter(rng))];
    return make_element(n, occ, floor);
}

// Every tuple in B_{caps[0]} x ... x B_{caps[k-1]}.
inline std::vector<Path> all_paths(int n, const std::vector<int>& caps,
                                   int floor = 0) {
    std::vector<Path> out;
    std::vector<CrystalElement> cur;
    auto rec = [&](auto&& self, size_t k) -> void {
        if (k == caps.size()) {
            out.push_back(make_path(cur));
            return;
        }
        for (const CrystalElement& e : all_elements(n, caps[k], floor)) {
            cur.push_back(e);
            self(self, k + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// All partitions (weakly decreasing, positive parts) with total <= cap.
inline std::vector<std::vector<int>> all_partitions(int cap) {
    std::vector<std::vector<int>> out{{}};
    std::vector<int> cur;
    auto rec = [&](auto&& self, int maxpart, int rest) -> void {
        for (int part = std::min(maxpart, rest); part >= 1; --part) {
            cur.push_back(part);
            out.push_back(cur);
            self(self, part, rest - part);
            cur.pop_back();
        }
    };
    rec(rec, cap, cap);
    return out;
}

// Every restricted configuration with the given quantum space and at most
// `cap` boxes at each level.
inline std::vector<RiggedConfiguration> all_restricted(
    int n, const std::vector<int>& quantum, int cap) {
    std::vector<RiggedConfiguration> out;
    std::vector<std::vector<int>> shapes(static_cast<size_t>(n));
    auto partitions = all_partitions(cap);

    auto rig_level = [](auto&& self, const std::vector<int>& shape,
                        const VacancyTable& vt, int a, size_t i, num ceiling,
                        std::vector<Row>& rows,
                        const std::function<void()>& done) -> void {
        if (i == shape.size()) {
            done();
            return;
        }
        num p = vt.p(a, shape[i]);
        if (p < 0) return;
        // Equal-length rows get weakly decreasing riggings (multiset form).
        num hi = (i > 0 && shape[i] == shape[i - 1]) ? ceiling : p;
        for (num r = hi; r >= 0; --r) {
            rows.push_back(Row{shape[i], r});
            self(self, shape, vt, a, i + 1, r, rows, done);
            rows.pop_back();
        }
    };

    auto emit = [&]() {
        std::vector<std::vector<Row>> colors(static_cast<size_t>(n));
        RiggedConfiguration bare(
            n, quantum,
            [&] {
                std::vector<std::vector<Row>> c(static_cast<size_t>(n));
                for (int a = 1; a <= n; ++a)
                    for (int len : shapes[static_cast<size_t>(a - 1)])
                        c[static_cast<size_t>(a - 1)].push_back(Row{len, 0});
                return c;
            }());
        VacancyTable vt(bare);
        auto fill = [&](auto&& self, int a) -> void {
            if (a > n) {
                out.push_back(RiggedConfiguration(n, quantum, colors));
                return;
            }
            const std::vector<int>& shape = shapes[static_cast<size_t>(a - 1)];
            std::vector<Row> rows;
            std::function<void()> done = [&] {
                colors[static_cast<size_t>(a - 1)] = rows;
                self(self, a + 1);
            };
            rig_level(rig_level, shape, vt, a, 0, 0, rows, done);
        };
        fill(fill, 1);
    };

    // Each level independently carries at most `cap` boxes.  (Levels are not
    // jointly budgeted: their box counts can sum past the quantum total.)
    auto pick_shapes = [&](auto&& self, int a) -> void {
        if (a > n) {
            emit();
            return;
        }
        for (const auto& part : partitions) {
            shapes[static_cast<size_t>(a - 1)] = part;
            self(self, a + 1);
        }
    };
    pick_shapes(pick_shapes, 1);
    return out;
}

}  // namespace bethe::testutil
