#pragma once

#include "bethe/crystal.hpp"
#include "bethe/rc.hpp"

namespace bethe {

// Image of a restricted rigged configuration under the box-removal
// bijection: the highest path p_1 x ... x p_L with p_k in B_{quantum_k}.
// Quantum rows are processed right to left, each row's boxes from the
// current right end, so the first letter produced lands in the rightmost
// factor's leftmost slot.
Path kkr_to_path(const RiggedConfiguration& rc);

// Inverse bijection: the unique restricted configuration mapping to p.
// Implemented by reversing the removal steps one box at a time (each
// reversed step is certified by re-running the forward step) with
// backtracking over the candidate singular-row chains.
RiggedConfiguration kkr_from_path(const Path& p);

// Same bijection through the vertex-operator factorization: builds the
// top-level path of the configuration, then alternately attaches modes and
// carries the scattering data down one level at a time.  Must agree with
// kkr_to_path; the level-a intermediate equals the path of truncate(rc, a)
// with letters lifted by a.
Path kkr_vertex(const RiggedConfiguration& rc);

// Level-a intermediate of the vertex computation: the highest path of the
// rank n-a truncation, written in original letters a+1..n+1 (floor a).
Path kkr_vertex_level(const RiggedConfiguration& rc, int a);

}  // namespace bethe
