#pragma once

#include <vector>

#include "bethe/crystal.hpp"
#include "bethe/rc.hpp"
#include "bethe/tau.hpp"

namespace bethe {

// N solitons over rank n: labels live one floor up (letters 2..n+1) with
// weakly increasing amplitudes, and positions weakly increase among equal
// amplitudes.  N = 0 is allowed; the rank is kept explicitly for that case.
struct SolitonSpec {
    int n = 1;
    std::vector<CrystalElement> labels;
    std::vector<num> positions;

    int size() const { return static_cast<int>(labels.size()); }
    std::vector<int> amplitudes() const;
};

// Validates the ordering constraints and the label floors.
SolitonSpec make_soliton_spec(int n, std::vector<CrystalElement> labels,
                              std::vector<num> positions);

// Extraction data for one subset J = {j_1 < ... < j_M} (0-based indices):
// the components brought to the front by R, their modes relative to a
// high-capacity probe, the shifted modes, and the principal coordinates
// theta[alpha][i-1] for i = 1..n+1.  The front element for alpha = 1 does
// not depend on the rest of J; the others do.
struct PhaseData {
    std::vector<CrystalElement> extracted;
    std::vector<num> modes;
    std::vector<num> shifted;
    std::vector<std::vector<num>> theta;
};
PhaseData phase_data(const SolitonSpec& spec, const std::vector<int>& J);

enum class TauFormula { Subset, Mode, Principal };

// The N-soliton tau function over the background quantum space lambda:
// Subset superposes one-soliton terms against the multi-body phase shift,
// Mode absorbs the interaction into shifted modes, and Principal reads the
// same numbers off principal coordinates transported by the R with the
// phase-shift rule.  All three agree.
num nsoliton_tau(const SolitonSpec& spec, const std::vector<int>& lambda,
                 int k, int i, TauFormula formula);
// Background (1^k).
num nsoliton_tau(const SolitonSpec& spec, int k, int i, TauFormula formula);

// Whole table over lambda, rows d = 0..n+1, columns k = 0..len(lambda).
TauTable nsoliton_tau_table(const SolitonSpec& spec,
                            const std::vector<int>& lambda,
                            TauFormula formula = TauFormula::Subset);

// The configuration carrying the same data: quantum space lambda, first
// colored part (amplitudes, positions), deeper parts from the labels.
RiggedConfiguration spec_configuration(const SolitonSpec& spec,
                                       const std::vector<int>& lambda);

// T_l on the spec: each position grows by min(l, amplitude).
SolitonSpec evolve_spec(const SolitonSpec& spec, num l);

// Initial value problem: evolve p by T_{l_1}...T_{l_t} through the tau
// table of its configuration (first riggings shifted by sum min(l, mu))
// and rebuild the state from second differences.  Capacities may be
// INFINITE_CAPACITY; the state needs enough trailing vacuum to keep the
// evolution inside the frame.
Path solve_ivp(const Path& p, const std::vector<num>& schedule);

// Asymptotic state of a separated configuration ((1^L), colored parts):
// soliton M occupies the interval cut out by the positions k_{M,i}
// (positions[M-1][i-1], i = 1..n+1), letters n+1 down to 2, vacuum
// elsewhere.  The rendering is certified against the box-removal image;
// a failed certificate means the riggings are not separated enough.
struct AsymptoticState {
    Path state;
    std::vector<std::vector<num>> positions;
};
AsymptoticState asymptotic_state(const RiggedConfiguration& rc);

}  // namespace bethe
