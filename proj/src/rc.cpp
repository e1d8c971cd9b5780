#include "bethe/rc.hpp"

#include <algorithm>
#include <stdexcept>

namespace bethe {

namespace {

void canonical_sort(std::vector<Row>& rows) {
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return a.length != b.length ? a.length > b.length : a.rigging > b.rigging;
    });
}

}  // namespace

RiggedConfiguration::RiggedConfiguration(int n, std::vector<int> quantum,
                                         std::vector<std::vector<Row>> colors)
    : n_(n), quantum_(std::move(quantum)), colors_(std::move(colors)) {
    if (n_ < 1) throw std::invalid_argument("rank must be >= 1");
    if (colors_.size() != static_cast<size_t>(n_))
        throw std::invalid_argument("need one colored partition per color 1..n");
    for (int l : quantum_)
        if (l < 1) throw std::invalid_argument("quantum row lengths must be >= 1");
    for (auto& rows : colors_) {
        for (const Row& r : rows)
            if (r.length < 1) throw std::invalid_argument("row lengths must be >= 1");
        canonical_sort(rows);
    }
}

const std::vector<Row>& RiggedConfiguration::rows(int a) const {
    if (a < 1 || a > n_) throw std::invalid_argument("color out of range 1..n");
    return colors_[static_cast<size_t>(a - 1)];
}

std::vector<int> RiggedConfiguration::shape(int a) const {
    if (a == 0) {
        std::vector<int> s = quantum_;
        std::sort(s.rbegin(), s.rend());
        return s;
    }
    std::vector<int> s;
    for (const Row& r : rows(a)) s.push_back(r.length);
    return s;
}

num RiggedConfiguration::weight(int a) const {
    num w = 0;
    if (a == 0)
        for (int l : quantum_) w += l;
    else
        for (const Row& r : rows(a)) w += r.length;
    return w;
}

VacancyTable::VacancyTable(const RiggedConfiguration& rc) : n_(rc.n()) {
    lengths_.resize(static_cast<size_t>(n_ + 1));
    lengths_[0] = rc.quantum();
    for (int a = 1; a <= n_; ++a)
        for (const Row& r : rc.rows(a))
            lengths_[static_cast<size_t>(a)].push_back(r.length);
}

num VacancyTable::E(int a, int j) const {
    if (a < 0 || a > n_ + 1) throw std::invalid_argument("level out of range");
    if (a == n_ + 1) return 0;
    num e = 0;
    for (int l : lengths_[static_cast<size_t>(a)]) e += std::min(j, l);
    return e;
}

num VacancyTable::p(int a, int j) const {
    if (a < 1 || a > n_) throw std::invalid_argument("color out of range 1..n");
    return E(a - 1, j) - 2 * E(a, j) + E(a + 1, j);
}

VacancyTable vacancy_table(const RiggedConfiguration& rc) {
    return VacancyTable(rc);
}

Validity validate(const RiggedConfiguration& rc) {
    VacancyTable vt(rc);
    bool nonneg = true;
    for (int a = 1; a <= rc.n(); ++a)
        for (const Row& r : rc.rows(a)) {
            if (r.rigging > vt.p(a, r.length)) return Validity::Invalid;
            if (r.rigging < 0) nonneg = false;
        }
    return nonneg ? Validity::Restricted : Validity::UnrestrictedOnly;
}

num pairwise_min(const std::vector<int>& lambda, const std::vector<int>& mu) {
    num s = 0;
    for (int a : lambda)
        for (int b : mu) s += std::min(a, b);
    return s;
}

num charge(const RiggedConfiguration& rc) {
    num c = 0;
    std::vector<std::vector<int>> shapes;
    for (int a = 0; a <= rc.n(); ++a) shapes.push_back(rc.shape(a));
    for (int a = 1; a <= rc.n(); ++a) {
        c += pairwise_min(shapes[static_cast<size_t>(a)], shapes[static_cast<size_t>(a)]);
        if (a < rc.n())
            c -= pairwise_min(shapes[static_cast<size_t>(a)],
                              shapes[static_cast<size_t>(a + 1)]);
    }
    c -= pairwise_min(shapes[0], shapes[1]);
    for (int a = 1; a <= rc.n(); ++a)
        for (const Row& r : rc.rows(a)) c += r.rigging;
    return c;
}

RiggedConfiguration concat(const RiggedConfiguration& a,
                           const RiggedConfiguration& b) {
    if (a.n() != b.n()) throw std::invalid_argument("rank mismatch in concat");
    VacancyTable vt(a);
    std::vector<int> quantum = a.quantum();
    quantum.insert(quantum.end(), b.quantum().begin(), b.quantum().end());
    std::vector<std::vector<Row>> colors(static_cast<size_t>(a.n()));
    for (int c = 1; c <= a.n(); ++c) {
        auto& rows = colors[static_cast<size_t>(c - 1)];
        rows = a.rows(c);
        for (Row r : b.rows(c)) {
            r.rigging += vt.p(c, r.length);
            rows.push_back(r);
        }
    }
    return RiggedConfiguration(a.n(), std::move(quantum), std::move(colors));
}

RiggedConfiguration truncate(const RiggedConfiguration& rc, int a) {
    if (a < 0 || a >= rc.n())
        throw std::invalid_argument("truncation level out of range 0..n-1");
    if (a == 0) return rc;
    // The level-a rows become the new quantum space, ordered ascending (the
    // factor order produced by the vertex-operator construction).
    std::vector<int> quantum;
    for (auto it = rc.rows(a).rbegin(); it != rc.rows(a).rend(); ++it)
        quantum.push_back(it->length);
    std::vector<std::vector<Row>> colors;
    for (int c = a + 1; c <= rc.n(); ++c) colors.push_back(rc.rows(c));
    return RiggedConfiguration(rc.n() - a, std::move(quantum), std::move(colors));
}

}  // namespace bethe
