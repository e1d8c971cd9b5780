#include "bethe/scatter.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace bethe {

namespace {

void require_uniform(const std::vector<AffineElement>& factors) {
    for (size_t j = 1; j < factors.size(); ++j)
        if (factors[j].element.n() != factors[0].element.n() ||
            factors[j].element.floor() != factors[0].element.floor())
            throw std::invalid_argument(
                "scattering factors must share rank and floor");
}

// Comparison key: the mode sequence, then the label occupancies.
bool canonical_less(const ScatteringData& a, const ScatteringData& b) {
    auto da = a.modes(), db = b.modes();
    if (da != db) return da < db;
    for (int j = 0; j < a.size() && j < b.size(); ++j) {
        const auto& xa = a[j].element.occupancy();
        const auto& xb = b[j].element.occupancy();
        if (xa != xb) return xa < xb;
    }
    return a.size() < b.size();
}

}  // namespace

std::vector<num> ScatteringData::modes() const {
    std::vector<num> out;
    out.reserve(factors.size());
    for (const AffineElement& f : factors) out.push_back(f.mode);
    return out;
}

std::vector<int> ScatteringData::capacities() const {
    std::vector<int> out;
    out.reserve(factors.size());
    for (const AffineElement& f : factors) out.push_back(f.element.capacity());
    return out;
}

ScatteringData make_scattering(std::vector<AffineElement> factors) {
    require_uniform(factors);
    return ScatteringData{std::move(factors)};
}

std::string to_string(const ScatteringData& sd) {
    std::ostringstream os;
    for (int j = 0; j < sd.size(); ++j) {
        if (j) os << ' ';
        os << sd[j].element.word() << '_' << sd[j].mode;
    }
    return os.str();
}

CrystalElement left_transport(const std::vector<CrystalElement>& factors,
                              int from, int to) {
    if (to < 0 || from >= static_cast<int>(factors.size()) || to > from)
        throw std::invalid_argument("transport range out of bounds");
    CrystalElement c = factors[static_cast<size_t>(from)];
    for (int k = from - 1; k >= to; --k)
        c = combinatorial_R(factors[static_cast<size_t>(k)], c).left.element;
    return c;
}

ScatteringData compute_modes(const Path& p, const std::vector<num>& riggings) {
    if (static_cast<size_t>(p.size()) != riggings.size())
        throw std::invalid_argument("one rigging per factor required");
    if (p.size() == 0) return ScatteringData{};
    int n = p[0].n();
    int floor = p[0].floor();
    int lmax = 0;
    for (const CrystalElement& f : p.factors)
        lmax = std::max(lmax, f.capacity());
    CrystalElement probe = vacuum(n, lmax + 1, floor);

    std::vector<AffineElement> out;
    for (int j = 0; j < p.size(); ++j) {
        CrystalElement c = p[j];
        num h_sum = 0;
        for (int k = j - 1; k >= 0; --k) {
            RResult rr = combinatorial_R(p[k], c);
            h_sum += rr.H;
            c = rr.left.element;
        }
        h_sum += combinatorial_R(probe, c).H;
        out.push_back({p[j], riggings[static_cast<size_t>(j)] + h_sum});
    }
    return ScatteringData{std::move(out)};
}

std::vector<ScatteringData> r_orbit(const ScatteringData& sd) {
    require_uniform(sd.factors);
    auto key = [](const ScatteringData& s) {
        std::vector<std::pair<num, std::vector<int>>> k;
        for (const AffineElement& f : s.factors)
            k.emplace_back(f.mode, f.element.occupancy());
        return k;
    };
    std::map<decltype(key(sd)), ScatteringData> seen;
    std::deque<ScatteringData> queue{sd};
    seen.emplace(key(sd), sd);
    while (!queue.empty()) {
        ScatteringData cur = queue.front();
        queue.pop_front();
        for (int i = 0; i + 1 < cur.size(); ++i) {
            RResult rr = combinatorial_R(cur[i], cur[i + 1]);
            ScatteringData next = cur;
            next.factors[static_cast<size_t>(i)] = rr.left;
            next.factors[static_cast<size_t>(i) + 1] = rr.right;
            if (seen.emplace(key(next), next).second) queue.push_back(next);
        }
    }
    std::vector<ScatteringData> out;
    out.reserve(seen.size());
    for (auto& [k, v] : seen) out.push_back(std::move(v));
    return out;
}

std::vector<ScatteringData> normal_order(const ScatteringData& sd) {
    std::vector<ScatteringData> pool = r_orbit(sd);
    for (int i = sd.size(); i >= 2; --i) {
        num best = pool[0][i - 1].mode;
        for (const ScatteringData& s : pool)
            best = std::max(best, s[i - 1].mode);
        std::erase_if(pool, [&](const ScatteringData& s) {
            return s[i - 1].mode != best;
        });
    }
    std::sort(pool.begin(), pool.end(), canonical_less);
    return pool;
}

ScatteringData normal_form(const ScatteringData& sd) {
    return normal_order(sd).front();
}

bool is_normal_ordered(const ScatteringData& sd) {
    for (const ScatteringData& s : normal_order(sd))
        if (s == sd) return true;
    return false;
}

ScatteringData map_C(const Path& p, const std::vector<Row>& rows) {
    return map_C_all(p, rows).front();
}

std::vector<ScatteringData> map_C_all(const Path& p,
                                      const std::vector<Row>& rows) {
    std::vector<Row> asc = rows;
    std::sort(asc.begin(), asc.end(), [](const Row& a, const Row& b) {
        return a.length != b.length ? a.length < b.length
                                    : a.rigging < b.rigging;
    });
    if (asc.size() != static_cast<size_t>(p.size()))
        throw std::invalid_argument("one row per factor required");
    std::vector<num> riggings;
    for (size_t i = 0; i < asc.size(); ++i) {
        if (asc[i].length != p[static_cast<int>(i)].capacity())
            throw std::invalid_argument(
                "row lengths must match factor capacities");
        riggings.push_back(asc[i].rigging);
    }
    return normal_order(compute_modes(p, riggings));
}

Path phi_elementary(const CrystalElement& b, const Path& p) {
    if (p.size() == 0) {
        if (b.capacity() != 0)
            throw std::domain_error("vertex operator carried out a ball");
        return p;
    }
    int n = p[0].n();
    int floor = p[0].floor();
    // View b in the ambient floor of p (its letters all lie above it).
    CrystalElement c = make_element(n, b.occupancy(), floor);
    std::vector<CrystalElement> out;
    out.reserve(static_cast<size_t>(p.size()));
    for (const CrystalElement& f : p.factors) {
        RResult rr = combinatorial_R(c, f);
        out.push_back(rr.left.element);
        c = rr.right.element;
    }
    if (c != vacuum(n, b.capacity(), floor))
        throw std::domain_error("vertex operator carried out a ball");
    return make_path(std::move(out));
}

Path map_Phi(int n, int a, const ScatteringData& sd,
             const std::vector<int>& lambda) {
    if (a < 1 || a > n)
        throw std::invalid_argument("vertex operator level out of range 1..n");
    std::vector<num> d = sd.modes();
    for (size_t j = 0; j < d.size(); ++j)
        if (d[j] < 0 || (j > 0 && d[j] < d[j - 1]))
            throw std::invalid_argument(
                "vertex operator needs normal-ordered nonnegative modes");
    std::vector<CrystalElement> vac;
    vac.reserve(lambda.size());
    for (int l : lambda) vac.push_back(vacuum(n, l, a - 1));
    Path p{std::move(vac)};

    CrystalElement box = vacuum(n, 1, a - 1);  // single letter a
    for (int j = sd.size() - 1; j >= 0; --j) {
        p = phi_elementary(sd[j].element, p);
        num gap = (j == 0) ? d[0] : d[static_cast<size_t>(j)] -
                                        d[static_cast<size_t>(j) - 1];
        for (num t = 0; t < gap; ++t) p = phi_elementary(box, p);
    }
    return p;
}

}  // namespace bethe
