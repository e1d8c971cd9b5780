#pragma once

#include <string>
#include <vector>

#include "bethe/crystal.hpp"
#include "bethe/rc.hpp"

namespace bethe {

// Values tau_{k,d} for the quantum-space prefixes of one configuration:
// values[d][k] with d = 0..n+1 (rows) and k = 0..L (columns).
struct TauTable {
    int n = 0;
    std::vector<int> quantum;  // capacities, defining the prefixes
    std::vector<std::vector<num>> values;

    num at(int k, int d) const;
    int prefixes() const { return static_cast<int>(quantum.size()); }
};

// One sub-multiset of rows per color a+1..n (entry j <-> color a+1+j),
// rows sorted by (length, rigging) within each color.
using SubsetChoice = std::vector<std::vector<Row>>;

// tau^(a)_d(lambda) for 0 <= a <= n, a <= d <= n+1 and lambda a sub-multiset
// of the level-a lengths, evaluated by the memoized rank recursion
//   tau^(a)_d(lambda) = max over nu of the level-(a+1) rows of
//     { min(lambda,nu) - min(nu,nu) - |riggings of nu| + tau^(a+1)_d(nu) }
// with tau^(n)_{n+1} = 0, tau^(n)_n = -|lambda| and the convention
// tau^(a)_a(lambda) = tau^(a)_{n+1}(lambda) - |lambda|.
// The rigged data need not satisfy the vacancy condition.
num tau_eval(const RiggedConfiguration& rc, int a, int d,
             std::vector<int> lambda);

// The same value by exhaustive maximization over all tuples of sub-multisets
// (independent oracle for the recursion).  Refuses configurations with more
// than 20 colored rows in total.
num tau_eval_direct(const RiggedConfiguration& rc, int a, int d,
                    const std::vector<int>& lambda);

// Every maximizing tuple of sub-multisets for tau^(a)_d(lambda), enumerated
// exhaustively (same scope bound as tau_eval_direct), in canonical order.
std::vector<SubsetChoice> tau_maximizers(const RiggedConfiguration& rc, int a,
                                         int d, const std::vector<int>& lambda);

// The full table over prefixes of the quantum space: row d = 0 is fixed by
// tau_{k,0} = tau_{k,n+1} - (lambda_1 + ... + lambda_k).  Single-threaded;
// all cells share one memo.
TauTable tau_table(const RiggedConfiguration& rc);

// Quadrant ball count rho_{k,d}: balls of colors 2..d in the first k boxes
// plus all balls in the first k columns of every later row of the time
// evolution pattern.  d = 0 is fixed like the tau table's row 0.
num rho_eval(const Path& p, int k, int d);

enum class CornerVariant {
    Padded,  // with a full box of sufficiently large capacity prepended
    Plain,   // the bare double sum over ordered pairs of factors
};

// Corner energy of the whole path:
//   Plain:  sum over j < m of Q_i(p_j x p_m-transported-left-to-j+1),
//   Padded: the Plain value of u_l x p with l = balls + max capacity + 1.
// i = 1..n+1; the i = n+1 non-winding number is Q_0.
num corner_energy(const Path& p, int i,
                  CornerVariant variant = CornerVariant::Padded);

// Corner energies of every prefix: entry k is the value on p_1 x ... x p_k.
std::vector<num> corner_energy_prefixes(
    const Path& p, int i, CornerVariant variant = CornerVariant::Padded);

// Inverts a tau table into the path it encodes via the double difference
//   x_d = tau_{k,d} - tau_{k-1,d} - tau_{k,d-1} + tau_{k-1,d-1}.
// Raises domain_error("second difference negative") when the table is not a
// valid tau table, or when a box does not fill its capacity.
Path reconstruct_path(const TauTable& table);

struct AgreementReport {
    bool ok = true;
    std::string detail;  // first counterexample, empty when ok
};

// Checks tau_{k,i} = rho_{k,i} = (corner energy)_i on every prefix of p and
// every i = 1..n+1, building the configuration with the plain bijection for
// highest p and the vacuum-prefix construction otherwise.
AgreementReport verify_triple(const Path& p);

// Checks the ultradiscrete bilinear relation between the tau table of p and
// the table with first riggings shifted by their row lengths (one step of the
// stabilized evolution), plus the closure tau_{k,1} = shifted tau_{k,n+1}.
AgreementReport bilinear_check(const Path& p);

// Rows d = 0..n+1, columns k = 0..L, with a "d\k" header row.
std::string to_csv(const TauTable& table);

}  // namespace bethe
