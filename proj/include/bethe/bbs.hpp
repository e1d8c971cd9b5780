#pragma once

#include <string>
#include <vector>

#include "bethe/crystal.hpp"

namespace bethe {

// Pass as `l` to evolve_Tl for the stabilized evolution T_infinity.
inline constexpr num INFINITE_CAPACITY = -1;

// One pass of a capacity-l carrier across a state.
struct EvolutionResult {
    Path state;                    // T_l(p)
    CrystalElement carrier_out;    // v_l, the carrier after the sweep
    std::vector<num> local_modes;  // d_j, the winding number at site j
    num energy = 0;                // E_l = sum_j (min(capacity_j, l) - d_j)
};

enum class Boundary {
    Strict,  // require the carrier to come out empty (v_l = u_l)
    Free,    // accept whatever comes out
};

// Time evolution by a capacity-l carrier:
//   u_l[0] x p_1[0] x ... x p_L[0]  ~  p'_1[-d_1] x ... x p'_L[-d_L] x v_l[sum d_j].
// l = INFINITE_CAPACITY selects T_infinity, realized as T_{b+1} where b is the
// ball count (all T_l agree from the largest soliton amplitude on).  In strict
// mode a carrier that fails to come out empty raises; pad the state with
// trailing vacuum or pass Boundary::Free.
EvolutionResult evolve_Tl(const Path& p, num l,
                          Boundary boundary = Boundary::Strict);

// Carrier sweep moving only the color-i balls (floor+2 <= i <= n+1): an empty
// carrier enters from the left and at each box drops as many color-i balls as
// fit into the empty space, then picks up all color-i balls that were there.
// Raises if balls would be carried past the right edge.
Path carrier_Ki(const Path& p, int i);

// T_infinity as the product K_2 K_3 ... K_{n+1} (rightmost factor first).
// Independent of evolve_Tl; the two are cross-checked in tests.
Path evolve_Tinf(const Path& p);

// Rows t = 0..t_max of the time evolution pattern under T_infinity.
struct EvolutionPattern {
    std::vector<Path> rows;
};

// Pads p on the right with t_max * (max soliton amplitude) + (ball count)
// vacuum boxes of capacity 1, then iterates T_infinity.
EvolutionPattern evolution_pattern(const Path& p, int t_max);

// One line per row, rendered like to_string(Path).
std::string to_text(const EvolutionPattern& pattern);

}  // namespace bethe
