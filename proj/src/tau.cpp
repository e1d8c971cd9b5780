#include "bethe/tau.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "bethe/bbs.hpp"
#include "bethe/kkr.hpp"

namespace bethe {

namespace {

num sum_of(const std::vector<int>& v) {
    num s = 0;
    for (int x : v) s += x;
    return s;
}

bool sub_multiset(std::vector<int> part, std::vector<int> whole) {
    std::sort(part.begin(), part.end());
    std::sort(whole.begin(), whole.end());
    return std::includes(whole.begin(), whole.end(), part.begin(), part.end());
}

// One sub-multiset of one color's rows.
struct Choice {
    std::vector<int> lengths;  // sorted ascending
    num rigging_sum = 0;
    std::vector<Row> rows;     // sorted by (length, rigging)
};

std::vector<Choice> enumerate_choices(const std::vector<Row>& rows) {
    std::map<Row, int> groups;
    for (const Row& row : rows) ++groups[row];
    std::vector<Choice> out(1);
    for (const auto& [row, count] : groups) {
        std::vector<Choice> grown;
        grown.reserve(out.size() * static_cast<std::size_t>(count + 1));
        for (const Choice& c : out)
            for (int take = 0; take <= count; ++take) {
                Choice next = c;
                for (int t = 0; t < take; ++t) {
                    next.lengths.push_back(row.length);
                    next.rigging_sum += row.rigging;
                    next.rows.push_back(row);
                }
                grown.push_back(std::move(next));
            }
        out = std::move(grown);
    }
    for (Choice& c : out) {
        std::sort(c.lengths.begin(), c.lengths.end());
        std::sort(c.rows.begin(), c.rows.end());
    }
    return out;
}

class TauEvaluator {
public:
    explicit TauEvaluator(const RiggedConfiguration& rc) : n_(rc.n()) {
        choices_.resize(static_cast<std::size_t>(n_) + 1);
        for (int a = 1; a <= n_; ++a)
            choices_[static_cast<std::size_t>(a)] =
                enumerate_choices(rc.rows(a));
    }

    num eval(int a, int d, std::vector<int> lambda) {
        std::sort(lambda.begin(), lambda.end());
        return eval_sorted(a, d, std::move(lambda));
    }

private:
    num eval_sorted(int a, int d, std::vector<int> lambda) {
        if (d == a) return eval_sorted(a, n_ + 1, lambda) - sum_of(lambda);
        if (a == n_) return 0;  // d = n+1; d = n went through the line above
        auto key = std::tuple(a, d, lambda);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        num best = std::numeric_limits<num>::min();
        for (const Choice& c : choices_[static_cast<std::size_t>(a) + 1]) {
            num v = pairwise_min(lambda, c.lengths) -
                    pairwise_min(c.lengths, c.lengths) - c.rigging_sum +
                    eval_sorted(a + 1, d, c.lengths);
            best = std::max(best, v);
        }
        memo_.emplace(std::move(key), best);
        return best;
    }

    int n_;
    std::vector<std::vector<Choice>> choices_;
    std::map<std::tuple<int, int, std::vector<int>>, num> memo_;
};

void check_tau_args(const RiggedConfiguration& rc, int a, int d,
                    const std::vector<int>& lambda) {
    if (a < 0 || a > rc.n())
        throw std::invalid_argument("tau level out of range");
    if (d < a || d > rc.n() + 1)
        throw std::invalid_argument("tau color index out of range");
    if (!sub_multiset(lambda, rc.shape(a)))
        throw std::invalid_argument(
            "lambda is not a sub-multiset of the level shape");
}

// Visits every tuple of per-color sub-multisets with its objective value.
template <typename Visit>
void for_each_tuple(const std::vector<std::vector<Choice>>& per_color, int n,
                    int a, int d, const std::vector<int>& lambda,
                    Visit&& visit) {
    const int m = n - a;  // colors a+1..n
    std::vector<const Choice*> chosen(static_cast<std::size_t>(m));
    auto dfs = [&](auto&& self, int c) -> void {
        if (c == m) {
            num obj = 0;
            const std::vector<int>* prev = &lambda;
            for (int j = 0; j < m; ++j) {
                obj += pairwise_min(*prev, chosen[j]->lengths);
                obj -= pairwise_min(chosen[j]->lengths, chosen[j]->lengths);
                obj -= chosen[j]->rigging_sum;
                prev = &chosen[j]->lengths;
            }
            if (d <= n) obj -= sum_of(chosen[d - a - 1]->lengths);
            visit(chosen, obj);
            return;
        }
        for (const Choice& option : per_color[static_cast<std::size_t>(c)]) {
            chosen[static_cast<std::size_t>(c)] = &option;
            self(self, c + 1);
        }
    };
    dfs(dfs, 0);
}

std::vector<std::vector<Choice>> direct_scope(const RiggedConfiguration& rc,
                                              int a) {
    std::size_t total = 0;
    for (int c = 1; c <= rc.n(); ++c) total += rc.rows(c).size();
    if (total > 20)
        throw std::invalid_argument(
            "too many rows for direct evaluation; use the recursion");
    std::vector<std::vector<Choice>> per_color;
    for (int c = a + 1; c <= rc.n(); ++c)
        per_color.push_back(enumerate_choices(rc.rows(c)));
    return per_color;
}

bool prefix_has_balls(const Path& p, int k) {
    for (int j = 0; j < k; ++j)
        for (int c = 2; c <= p[j].n() + 1; ++c)
            if (p[j].x(c) > 0) return true;
    return false;
}

// Iterates of the stabilized evolution until a fully vacuum row; only the
// columns of the path matter, so a free right boundary is exact here.
std::vector<Path> quadrant_rows(const Path& p) {
    std::vector<Path> rows{p};
    for (int t = 1;; ++t) {
        if (!prefix_has_balls(rows.back(), rows.back().size())) break;
        if (t > p.size() + 1)
            throw std::logic_error("quadrant sum failed to terminate");
        rows.push_back(
            evolve_Tl(rows.back(), INFINITE_CAPACITY, Boundary::Free).state);
    }
    return rows;
}

num rho_from_rows(const std::vector<Path>& rows, int k, int d) {
    const int n = rows[0][0].n();
    num total = 0;
    for (int j = 0; j < k; ++j)
        for (int c = 2; c <= d; ++c) total += rows[0][j].x(c);
    for (std::size_t t = 1; t < rows.size(); ++t)
        for (int j = 0; j < k; ++j)
            for (int c = 2; c <= n + 1; ++c) total += rows[t][j].x(c);
    return total;
}

void require_floor0(const Path& p) {
    if (p.size() == 0) throw std::invalid_argument("empty state");
    for (const CrystalElement& f : p.factors)
        if (f.n() != p[0].n() || f.floor() != 0)
            throw std::invalid_argument(
                "state must have floor 0 and one common rank");
}

num quantum_prefix_sum(const std::vector<int>& quantum, int k) {
    num s = 0;
    for (int j = 0; j < k; ++j) s += quantum[static_cast<std::size_t>(j)];
    return s;
}

RiggedConfiguration state_configuration(const Path& p) {
    return is_highest(p) ? kkr_from_path(p) : unrestricted_from_path(p);
}

}  // namespace

num TauTable::at(int k, int d) const {
    if (k < 0 || k > prefixes() || d < 0 || d > n + 1)
        throw std::invalid_argument("tau table index out of range");
    return values[static_cast<std::size_t>(d)][static_cast<std::size_t>(k)];
}

num tau_eval(const RiggedConfiguration& rc, int a, int d,
             std::vector<int> lambda) {
    check_tau_args(rc, a, d, lambda);
    return TauEvaluator(rc).eval(a, d, std::move(lambda));
}

num tau_eval_direct(const RiggedConfiguration& rc, int a, int d,
                    const std::vector<int>& lambda) {
    check_tau_args(rc, a, d, lambda);
    if (d == a) return tau_eval_direct(rc, a, rc.n() + 1, lambda) - sum_of(lambda);
    auto per_color = direct_scope(rc, a);
    num best = std::numeric_limits<num>::min();
    for_each_tuple(per_color, rc.n(), a, d, lambda,
                   [&](const std::vector<const Choice*>&, num obj) {
                       best = std::max(best, obj);
                   });
    return best;
}

std::vector<SubsetChoice> tau_maximizers(const RiggedConfiguration& rc, int a,
                                         int d,
                                         const std::vector<int>& lambda) {
    check_tau_args(rc, a, d, lambda);
    if (d == a) return tau_maximizers(rc, a, rc.n() + 1, lambda);
    auto per_color = direct_scope(rc, a);
    num best = std::numeric_limits<num>::min();
    std::vector<SubsetChoice> out;
    for_each_tuple(per_color, rc.n(), a, d, lambda,
                   [&](const std::vector<const Choice*>& chosen, num obj) {
                       if (obj < best) return;
                       if (obj > best) {
                           best = obj;
                           out.clear();
                       }
                       SubsetChoice pick;
                       for (const Choice* c : chosen) pick.push_back(c->rows);
                       out.push_back(std::move(pick));
                   });
    std::sort(out.begin(), out.end());
    return out;
}

TauTable tau_table(const RiggedConfiguration& rc) {
    TauTable table;
    table.n = rc.n();
    table.quantum = rc.quantum();
    const int L = table.prefixes();
    table.values.assign(static_cast<std::size_t>(table.n) + 2,
                        std::vector<num>(static_cast<std::size_t>(L) + 1, 0));
    TauEvaluator eval(rc);
    std::vector<int> lambda;
    for (int k = 0; k <= L; ++k) {
        if (k > 0) lambda.push_back(table.quantum[static_cast<std::size_t>(k - 1)]);
        for (int d = 1; d <= table.n + 1; ++d)
            table.values[static_cast<std::size_t>(d)]
                        [static_cast<std::size_t>(k)] = eval.eval(0, d, lambda);
        table.values[0][static_cast<std::size_t>(k)] =
            table.values[static_cast<std::size_t>(table.n) + 1]
                        [static_cast<std::size_t>(k)] -
            quantum_prefix_sum(table.quantum, k);
    }
    return table;
}

num rho_eval(const Path& p, int k, int d) {
    require_floor0(p);
    const int n = p[0].n();
    if (k < 0 || k > p.size())
        throw std::invalid_argument("prefix length out of range");
    if (d < 0 || d > n + 1)
        throw std::invalid_argument("color index out of range");
    if (k == 0) return 0;
    if (d == 0) {
        num caps = 0;
        for (int j = 0; j < k; ++j) caps += p[j].capacity();
        return rho_eval(p, k, n + 1) - caps;
    }
    return rho_from_rows(quadrant_rows(p), k, d);
}

std::vector<num> corner_energy_prefixes(const Path& p, int i,
                                        CornerVariant variant) {
    require_floor0(p);
    const int n = p[0].n();
    if (i < 1 || i > n + 1)
        throw std::invalid_argument("energy color index out of range");
    if (variant == CornerVariant::Padded) {
        num balls = 0;
        int maxcap = 0;
        for (const CrystalElement& f : p.factors) {
            for (int c = 2; c <= n + 1; ++c) balls += f.x(c);
            maxcap = std::max(maxcap, f.capacity());
        }
        Path ext;
        ext.factors.push_back(
            vacuum(n, static_cast<int>(balls) + maxcap + 1));
        ext.factors.insert(ext.factors.end(), p.factors.begin(),
                           p.factors.end());
        std::vector<num> padded =
            corner_energy_prefixes(ext, i, CornerVariant::Plain);
        return std::vector<num>(padded.begin() + 1, padded.end());
    }
    const std::size_t qi = static_cast<std::size_t>(i <= n ? i : 0);
    std::vector<num> out(static_cast<std::size_t>(p.size()) + 1, 0);
    for (int m = 2; m <= p.size(); ++m) {
        num sum_m = 0;
        CrystalElement transported = p[m - 1];
        for (int j = m - 1; j >= 1; --j) {
            RResult rr = combinatorial_R(p[j - 1], transported);
            sum_m += rr.Q[qi];
            transported = rr.left.element;
        }
        out[static_cast<std::size_t>(m)] =
            out[static_cast<std::size_t>(m - 1)] + sum_m;
    }
    return out;
}

num corner_energy(const Path& p, int i, CornerVariant variant) {
    return corner_energy_prefixes(p, i, variant).back();
}

Path reconstruct_path(const TauTable& table) {
    const int n = table.n;
    const int L = table.prefixes();
    std::vector<CrystalElement> factors;
    factors.reserve(static_cast<std::size_t>(L));
    for (int k = 1; k <= L; ++k) {
        std::vector<int> occ(static_cast<std::size_t>(n) + 1, 0);
        num filled = 0;
        for (int d = 1; d <= n + 1; ++d) {
            num x = table.at(k, d) - table.at(k - 1, d) - table.at(k, d - 1) +
                    table.at(k - 1, d - 1);
            if (x < 0) throw std::domain_error("second difference negative");
            occ[static_cast<std::size_t>(d - 1)] = static_cast<int>(x);
            filled += x;
        }
        if (filled != table.quantum[static_cast<std::size_t>(k - 1)])
            throw std::domain_error(
                "second differences do not fill the box capacity");
        factors.push_back(make_element(n, occ));
    }
    return make_path(std::move(factors));
}

AgreementReport verify_triple(const Path& p) {
    require_floor0(p);
    const int n = p[0].n();
    TauTable table = tau_table(state_configuration(p));
    std::vector<Path> rows = quadrant_rows(p);
    AgreementReport report;
    for (int i = 1; i <= n + 1; ++i) {
        std::vector<num> energies = corner_energy_prefixes(p, i);
        for (int k = 0; k <= p.size(); ++k) {
            num tau = table.at(k, i);
            num rho = rho_from_rows(rows, k, i);
            num energy = energies[static_cast<std::size_t>(k)];
            if (tau == rho && rho == energy) continue;
            report.ok = false;
            std::ostringstream detail;
            detail << "k=" << k << " i=" << i << " tau=" << tau
                   << " rho=" << rho << " energy=" << energy;
            report.detail = detail.str();
            return report;
        }
    }
    return report;
}

AgreementReport bilinear_check(const Path& p) {
    require_floor0(p);
    const int n = p[0].n();
    RiggedConfiguration rc = state_configuration(p);
    TauTable tau = tau_table(rc);
    std::vector<std::vector<Row>> shifted = rc.colors();
    for (Row& row : shifted[0]) row.rigging += row.length;
    TauTable bar = tau_table(RiggedConfiguration(n, rc.quantum(), shifted));

    AgreementReport report;
    for (int k = 1; k <= tau.prefixes(); ++k) {
        num cap = tau.quantum[static_cast<std::size_t>(k - 1)];
        for (int d = 2; d <= n + 1; ++d) {
            num lhs = bar.at(k, d - 1) + tau.at(k - 1, d);
            num rhs = std::max(bar.at(k, d) + tau.at(k - 1, d - 1),
                               bar.at(k - 1, d - 1) + tau.at(k, d) - cap);
            if (lhs == rhs) continue;
            report.ok = false;
            std::ostringstream detail;
            detail << "bilinear k=" << k << " d=" << d << " lhs=" << lhs
                   << " rhs=" << rhs;
            report.detail = detail.str();
            return report;
        }
        if (tau.at(k, 1) != bar.at(k, n + 1)) {
            report.ok = false;
            std::ostringstream detail;
            detail << "closure k=" << k << " tau=" << tau.at(k, 1)
                   << " shifted=" << bar.at(k, n + 1);
            report.detail = detail.str();
            return report;
        }
    }
    return report;
}

std::string to_csv(const TauTable& table) {
    std::ostringstream out;
    out << "d\\k";
    for (int k = 0; k <= table.prefixes(); ++k) out << ',' << k;
    out << '\n';
    for (int d = 0; d <= table.n + 1; ++d) {
        out << d;
        for (int k = 0; k <= table.prefixes(); ++k) out << ',' << table.at(k, d);
        out << '\n';
    }
    return out.str();
}

}  // namespace bethe
