#pragma once

#include <string>
#include <vector>

#include "bethe/crystal.hpp"
#include "bethe/rc.hpp"

namespace bethe {

// A sequence of affine crystal elements sharing one rank and floor; the
// factors label solitons (or one level of the vertex-operator construction)
// and the modes record their positions.
struct ScatteringData {
    std::vector<AffineElement> factors;

    int size() const { return static_cast<int>(factors.size()); }
    const AffineElement& operator[](int j) const {
        return factors[static_cast<size_t>(j)];
    }
    std::vector<num> modes() const;
    std::vector<int> capacities() const;

    bool operator==(const ScatteringData&) const = default;
};

ScatteringData make_scattering(std::vector<AffineElement> factors);
// "2222_4 233_6 34_6" (word, underscore, mode, space-separated).
std::string to_string(const ScatteringData& sd);

// Carries factor `from` leftward through factors from-1..to by R and returns
// its image next to position `to` (0-based, to <= from).
CrystalElement left_transport(const std::vector<CrystalElement>& factors,
                              int from, int to);

// Modes from riggings: d_j = r_j + sum_{0<=k<j} H(b_k (x) b_j-transported),
// where b_0 is the highest element of capacity max+1 prepended as a probe.
// For a highest sequence this reduces to d_j = r_j + mu_j + the H-sum over
// the genuine factors.
ScatteringData compute_modes(const Path& p, const std::vector<num>& riggings);

// Everything reachable from sd by applying R to adjacent factors.
std::vector<ScatteringData> r_orbit(const ScatteringData& sd);

// The normal-ordered forms: restrict the orbit to maximal m-th mode, then
// maximal (m-1)-th, ..., down to the 2nd.  All members share one weakly
// increasing mode sequence; the canonical representative (least by mode
// sequence, then by label words) is placed first.
std::vector<ScatteringData> normal_order(const ScatteringData& sd);
// The canonical representative alone.
ScatteringData normal_form(const ScatteringData& sd);
bool is_normal_ordered(const ScatteringData& sd);

// Level map: pair the factors of p (capacities ascending) with the rows
// (sorted by length then rigging, ascending), assign modes, normal order.
// map_C returns the canonical form, map_C_all the whole set.
ScatteringData map_C(const Path& p, const std::vector<Row>& rows);
std::vector<ScatteringData> map_C_all(const Path& p,
                                      const std::vector<Row>& rows);

// Elementary vertex operator: carry b rightward through p by R.  The
// carried-out element must come out highest (all content deposited);
// anything else signals malformed input and throws.
Path phi_elementary(const CrystalElement& b, const Path& p);

// Composed vertex operator for floor a: inject normal-ordered sd into the
// vacuum a^{lambda_1} (x) ... (x) a^{lambda_k} one floor down, interleaving
// single-box sweeps so factor j lands at position d_j.  Requires
// 0 <= d_1 <= ... <= d_m.
Path map_Phi(int n, int a, const ScatteringData& sd,
             const std::vector<int>& lambda);

}  // namespace bethe
