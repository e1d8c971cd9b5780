#include "bethe/kkr.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace bethe {

namespace {

// Mutable working form of a configuration mid-removal.
struct WorkState {
    int n = 1;
    std::vector<int> quantum;             // current quantum row lengths
    std::vector<std::vector<Row>> rows;   // levels 1..n

    num E(int a, int j) const {
        num e = 0;
        if (a == 0)
            for (int l : quantum) e += std::min(j, l);
        else if (a <= n)
            for (const Row& r : rows[static_cast<size_t>(a - 1)])
                e += std::min(j, r.length);
        return e;
    }
    num vacancy(int a, int j) const {
        return E(a - 1, j) - 2 * E(a, j) + E(a + 1, j);
    }
    void sort_rows() {
        for (auto& level : rows)
            std::sort(level.begin(), level.end(), [](const Row& a, const Row& b) {
                return a.length != b.length ? a.length > b.length
                                            : a.rigging > b.rigging;
            });
    }
    bool operator==(const WorkState&) const = default;
};

// One forward removal: take one box (at column `col`) off the quantum row
// at `qrow`, chase the chain of shortest singular rows level by level,
// remove the selected boxes, and re-rig every shortened row to its new
// vacancy.  Returns the letter put into the path.
int remove_box(WorkState& s, size_t qrow, int col) {
    assert(s.quantum[qrow] == col && col >= 1);
    // Select, per level, one of the shortest singular rows at least as long
    // as the previous selection (the choice among equals is immaterial:
    // equal-length singular rows carry equal riggings).
    std::vector<int> picked(static_cast<size_t>(s.n + 1), -1);
    int bound = col, letter = s.n + 1;
    for (int a = 1; a <= s.n; ++a) {
        const auto& level = s.rows[static_cast<size_t>(a - 1)];
        int best = -1;
        for (size_t i = 0; i < level.size(); ++i) {
            const Row& r = level[i];
            if (r.length < bound || r.rigging != s.vacancy(a, r.length)) continue;
            if (best < 0 || r.length < level[static_cast<size_t>(best)].length)
                best = static_cast<int>(i);
        }
        if (best < 0) {
            letter = a;
            break;
        }
        picked[static_cast<size_t>(a)] = best;
        bound = level[static_cast<size_t>(best)].length;
    }
    // Remove all selected boxes at once, then re-rig the shortened rows.
    --s.quantum[qrow];
    std::vector<std::pair<int, size_t>> shortened;
    for (int a = 1; a < letter; ++a) {
        auto& level = s.rows[static_cast<size_t>(a - 1)];
        size_t i = static_cast<size_t>(picked[static_cast<size_t>(a)]);
        if (--level[i].length == 0)
            level.erase(level.begin() + static_cast<std::ptrdiff_t>(i));
        else
            shortened.emplace_back(a, i);
    }
    for (auto [a, i] : shortened) {
        Row& r = s.rows[static_cast<size_t>(a - 1)][i];
        r.rigging = s.vacancy(a, r.length);
    }
    return letter;
}

CrystalElement element_from_letters(int n, const std::vector<int>& letters) {
    std::vector<int> occ(static_cast<size_t>(n + 1), 0);
    for (int l : letters) ++occ[static_cast<size_t>(l - 1)];
    return make_element(n, std::move(occ));
}

}  // namespace

Path kkr_to_path(const RiggedConfiguration& rc) {
    if (validate(rc) != Validity::Restricted)
        throw std::invalid_argument("box removal needs a restricted configuration");
    WorkState s{rc.n(), rc.quantum(), rc.colors()};
    size_t L = s.quantum.size();
    std::vector<CrystalElement> factors(L);
    for (size_t k = L; k-- > 0;) {
        std::vector<int> letters;
        for (int col = s.quantum[k]; col >= 1; --col)
            letters.push_back(remove_box(s, k, col));
        if (!std::is_sorted(letters.begin(), letters.end()))
            throw std::logic_error("removal produced a non-row factor");
        factors[k] = element_from_letters(rc.n(), letters);
    }
    for (const auto& level : s.rows)
        if (!level.empty())
            throw std::logic_error("removal left colored boxes behind");
    return make_path(std::move(factors));
}

namespace {

// Reverse one removal: grow the quantum row at qrow from col-1 to col and
// lengthen one singular row on each level 1..letter-1 so that the forward
// step undoes it exactly.  Candidate chains (weakly increasing post-growth
// lengths, level 1 at least col) are tried longest-first by depth-first
// search; each is certified by re-running remove_box.  False if none works.
bool add_box(WorkState& s, size_t qrow, int col, int letter) {
    assert(s.quantum[qrow] == col - 1);
    if (letter < 1 || letter > s.n + 1) return false;
    // Candidate pre-growth lengths per level: 0 starts a new row; otherwise
    // the row must be singular now (the forward step left it that way).
    std::vector<std::vector<int>> options(static_cast<size_t>(letter));
    for (int a = 1; a < letter; ++a) {
        std::vector<int>& opt = options[static_cast<size_t>(a)];
        opt.push_back(0);
        for (const Row& r : s.rows[static_cast<size_t>(a - 1)])
            if (r.rigging == s.vacancy(a, r.length)) opt.push_back(r.length);
        std::sort(opt.rbegin(), opt.rend());
        opt.erase(std::unique(opt.begin(), opt.end()), opt.end());
    }
    std::vector<int> chain(static_cast<size_t>(letter), 0);
    WorkState target = s;
    target.sort_rows();

    auto build_and_verify = [&]() -> bool {
        WorkState prev = s;
        ++prev.quantum[qrow];
        std::vector<std::pair<int, size_t>> grown;
        for (int b = 1; b < letter; ++b) {
            auto& level = prev.rows[static_cast<size_t>(b - 1)];
            int want = chain[static_cast<size_t>(b)];
            if (want == 0) {
                level.push_back(Row{1, 0});
                grown.emplace_back(b, level.size() - 1);
                continue;
            }
            bool found = false;
            for (size_t i = 0; i < level.size(); ++i)
                if (level[i].length == want &&
                    level[i].rigging == s.vacancy(b, want)) {
                    ++level[i].length;
                    grown.emplace_back(b, i);
                    found = true;
                    break;
                }
            if (!found) throw std::logic_error("candidate row vanished");
        }
        for (auto [b, i] : grown) {
            Row& r = prev.rows[static_cast<size_t>(b - 1)][i];
            r.rigging = prev.vacancy(b, r.length);
        }
        WorkState check = prev;
        if (remove_box(check, qrow, col) != letter) return false;
        check.sort_rows();
        if (!(check == target)) return false;
        s = std::move(prev);
        return true;
    };
    auto attempt = [&](auto&& self, int a, int ceiling) -> bool {
        if (a == 0) return build_and_verify();
        for (int v : options[static_cast<size_t>(a)]) {
            if (ceiling >= 0 && v > ceiling) continue;   // keep chain increasing
            if (a == 1 && v + 1 < col) continue;         // level 1 reaches col
            chain[static_cast<size_t>(a)] = v;
            if (self(self, a - 1, v)) return true;
        }
        return false;
    };
    return attempt(attempt, letter - 1, -1);
}

}  // namespace

RiggedConfiguration kkr_from_path(const Path& p) {
    if (!is_highest(p))
        throw std::invalid_argument("inverse bijection needs a highest path");
    if (p.size() > 0 && p[0].floor() != 0)
        throw std::invalid_argument("inverse bijection expects floor-0 paths");
    int n = p.size() > 0 ? p[0].n() : 1;
    std::vector<int> quantum;
    std::vector<std::vector<int>> letters(static_cast<size_t>(p.size()));
    for (int k = 0; k < p.size(); ++k) {
        if (p[k].capacity() < 1)
            throw std::invalid_argument("factors must have capacity >= 1");
        quantum.push_back(p[k].capacity());
        for (int i = 1; i <= n + 1; ++i)
            letters[static_cast<size_t>(k)].insert(
                letters[static_cast<size_t>(k)].end(),
                static_cast<size_t>(p[k].x(i)), i);
    }

    WorkState s;
    s.n = n;
    s.quantum.assign(quantum.size(), 0);
    s.rows.resize(static_cast<size_t>(n));

    // Steps in exact reverse of kkr_to_path: factors left to right, boxes
    // re-added at columns 1..lambda_k consuming the letters right to left.
    // Depth-first across steps so a locally plausible chain that dead-ends
    // later is undone.
    auto run = [&](auto&& self, size_t k, int col) -> bool {
        if (k == letters.size()) return true;
        const std::vector<int>& w = letters[k];
        if (col > static_cast<int>(w.size())) return self(self, k + 1, 1);
        int letter = w[w.size() - static_cast<size_t>(col)];
        WorkState saved = s;
        if (add_box(s, k, col, letter) && self(self, k, col + 1)) return true;
        s = std::move(saved);
        return false;
    };
    if (!run(run, 0, 1))
        throw std::logic_error("no box-addition chain reproduces the path");
    s.sort_rows();
    return RiggedConfiguration(n, std::move(quantum), std::move(s.rows));
}

}  // namespace bethe
