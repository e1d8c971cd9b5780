#include "bethe/nsoliton.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

#include "bethe/bbs.hpp"
#include "bethe/kkr.hpp"
#include "bethe/scatter.hpp"

namespace bethe {

namespace {

// 2^N subsets are enumerated; keep that bounded.
constexpr int kMaxSolitons = 12;

void validate_spec(const SolitonSpec& spec) {
    const int N = spec.size();
    if (spec.n < 1) throw std::invalid_argument("rank must be at least 1");
    if (static_cast<int>(spec.positions.size()) != N)
        throw std::invalid_argument("one position per label required");
    for (int j = 0; j < N; ++j) {
        const CrystalElement& b = spec.labels[static_cast<size_t>(j)];
        if (b.n() != spec.n || b.floor() != 1)
            throw std::invalid_argument("labels must avoid letter 1");
        if (b.capacity() < 1)
            throw std::invalid_argument("labels must be nonempty");
        if (j > 0) {
            const CrystalElement& a = spec.labels[static_cast<size_t>(j - 1)];
            if (a.capacity() > b.capacity())
                throw std::invalid_argument("amplitudes must weakly increase");
            if (a.capacity() == b.capacity() &&
                spec.positions[static_cast<size_t>(j - 1)] >
                    spec.positions[static_cast<size_t>(j)])
                throw std::invalid_argument(
                    "positions must weakly increase within an amplitude");
        }
    }
}

// sum_{m <= k} min(lambda_m, mu)
num prefix_min(const std::vector<int>& lambda, int k, int mu) {
    num total = 0;
    for (int m = 0; m < k; ++m)
        total += std::min<num>(lambda[static_cast<size_t>(m)], mu);
    return total;
}

void check_window(const std::vector<int>& lambda, int k, int i, int n) {
    if (k < 0 || k > static_cast<int>(lambda.size()))
        throw std::invalid_argument("prefix index out of range");
    if (i < 1 || i > n + 1)
        throw std::invalid_argument("letter index out of range");
    for (int c : lambda)
        if (c < 0) throw std::invalid_argument("capacities must be nonnegative");
}

// Front components for J = {j_1 < ... < j_M}: factor j_1 is carried to slot
// 1 by successive R swaps, then j_2 to slot 2, and so on; untouched factors
// drift one slot right each time one passes them.
std::vector<CrystalElement> extract_front(
    const std::vector<CrystalElement>& labels, const std::vector<int>& J) {
    std::vector<CrystalElement> work = labels;
    int dest = 0;
    for (int j : J) {
        CrystalElement moving = work[static_cast<size_t>(j)];
        for (int m = j - 1; m >= dest; --m) {
            RResult rr = combinatorial_R(work[static_cast<size_t>(m)], moving);
            work[static_cast<size_t>(m + 1)] = rr.right.element;
            moving = rr.left.element;
        }
        work[static_cast<size_t>(dest)] = std::move(moving);
        ++dest;
    }
    work.resize(static_cast<size_t>(dest));
    return work;
}

// Same extraction in the principal picture.
std::vector<PrincipalElement> extract_front_principal(
    const std::vector<PrincipalElement>& pelems, const std::vector<int>& J) {
    std::vector<PrincipalElement> work = pelems;
    int dest = 0;
    for (int j : J) {
        PrincipalElement moving = work[static_cast<size_t>(j)];
        for (int m = j - 1; m >= dest; --m) {
            PrincipalRResult pr =
                principal_R(work[static_cast<size_t>(m)], moving);
            work[static_cast<size_t>(m + 1)] = pr.right;
            moving = pr.left;
        }
        work[static_cast<size_t>(dest)] = std::move(moving);
        ++dest;
    }
    work.resize(static_cast<size_t>(dest));
    return work;
}

// Componentwise sums of the R-invariants Q over all ordered pairs of the
// array, accumulated while each factor is carried left past its
// predecessors.  Indices are those of the effective algebra of the labels.
std::vector<num> corner_q(const std::vector<CrystalElement>& ext, int qsize) {
    std::vector<num> total(static_cast<size_t>(qsize), 0);
    for (size_t alpha = 1; alpha < ext.size(); ++alpha) {
        CrystalElement moving = ext[alpha];
        for (size_t m = alpha; m-- > 0;) {
            RResult rr = combinatorial_R(ext[m], moving);
            for (int t = 0; t < qsize; ++t)
                total[static_cast<size_t>(t)] += rr.Q[static_cast<size_t>(t)];
            moving = rr.left.element;
        }
    }
    return total;
}

// Letters of b in 2..i, the part of the soliton to the right of corner i.
num letters_through(const CrystalElement& b, int i) {
    num total = 0;
    for (int c = 2; c <= i; ++c) total += b.x(c);
    return total;
}

// One candidate of the maximization: the amplitudes of the chosen solitons
// (carrying the k-dependence through min(lambda_{[k]}, mu)) plus a constant
// per letter index.
struct JTerm {
    std::vector<int> mu;
    std::vector<num> c;  // c[i-1] for i = 1..n+1
};

std::vector<JTerm> formula_terms(const SolitonSpec& spec, TauFormula formula) {
    validate_spec(spec);
    const int N = spec.size();
    const int n = spec.n;
    if (N > kMaxSolitons)
        throw std::invalid_argument("too many solitons to enumerate subsets");
    const std::vector<int> mus = spec.amplitudes();

    // The first extracted component never depends on the rest of the subset.
    std::vector<CrystalElement> fronts;
    fronts.reserve(static_cast<size_t>(N));
    for (int j = 0; j < N; ++j)
        fronts.push_back(left_transport(spec.labels, j, 0));

    // Principal coordinates of the whole array: the top value is the mode of
    // the full array shifted by the pairwise overlaps with the predecessors.
    std::vector<PrincipalElement> pelems;
    if (formula == TauFormula::Principal && N > 0) {
        std::vector<num> full_modes =
            compute_modes(make_path(spec.labels), spec.positions).modes();
        for (int j = 0; j < N; ++j) {
            num top = full_modes[static_cast<size_t>(j)] +
                      mus[static_cast<size_t>(j)];
            for (int b = 0; b < j; ++b)
                top += std::min(mus[static_cast<size_t>(j)],
                                mus[static_cast<size_t>(b)]);
            pelems.push_back(principal_convert(
                AffineElement{spec.labels[static_cast<size_t>(j)], top}));
        }
    }

    std::vector<JTerm> terms;
    terms.reserve(static_cast<size_t>(1) << N);
    for (unsigned mask = 0; mask < (1u << N); ++mask) {
        JTerm term;
        term.c.assign(static_cast<size_t>(n) + 2 - 1, 0);  // i = 1..n+1
        std::vector<int> J;
        for (int j = 0; j < N; ++j)
            if (mask & (1u << j)) J.push_back(j);
        for (int j : J) term.mu.push_back(mus[static_cast<size_t>(j)]);
        if (J.empty()) {
            terms.push_back(std::move(term));
            continue;
        }
        const int M = static_cast<int>(J.size());
        num pair_overlap = 0;  // sum over chosen pairs of min(mu, mu')
        for (int a = 0; a < M; ++a)
            for (int b = 0; b < a; ++b)
                pair_overlap += std::min(term.mu[static_cast<size_t>(a)],
                                         term.mu[static_cast<size_t>(b)]);
        switch (formula) {
            case TauFormula::Subset: {
                for (int j : J) {
                    const CrystalElement& f = fronts[static_cast<size_t>(j)];
                    for (int i = 1; i <= n + 1; ++i) {
                        num wind = f.x(2);
                        for (int c = i + 1; c <= n + 1; ++c) wind += f.x(c);
                        term.c[static_cast<size_t>(i - 1)] -=
                            spec.positions[static_cast<size_t>(j)] + wind;
                    }
                }
                if (M >= 2) {
                    std::vector<num> qs =
                        corner_q(extract_front(spec.labels, J), n);
                    for (int i = 1; i <= n + 1; ++i)
                        term.c[static_cast<size_t>(i - 1)] -=
                            2 * pair_overlap -
                            qs[static_cast<size_t>((i - 1) % n)];
                }
                break;
            }
            case TauFormula::Mode: {
                std::vector<CrystalElement> ext =
                    extract_front(spec.labels, J);
                std::vector<num> riggings;
                for (int j : J)
                    riggings.push_back(spec.positions[static_cast<size_t>(j)]);
                std::vector<num> modes =
                    compute_modes(make_path(ext), riggings).modes();
                for (int a = 0; a < M; ++a) {
                    num phase = modes[static_cast<size_t>(a)] +
                                term.mu[static_cast<size_t>(a)];
                    for (int b = 0; b < a; ++b)
                        phase += std::min(term.mu[static_cast<size_t>(a)],
                                          term.mu[static_cast<size_t>(b)]);
                    for (int i = 1; i <= n + 1; ++i)
                        term.c[static_cast<size_t>(i - 1)] +=
                            letters_through(ext[static_cast<size_t>(a)], i) -
                            phase;
                }
                break;
            }
            case TauFormula::Principal: {
                std::vector<PrincipalElement> pext =
                    extract_front_principal(pelems, J);
                std::vector<CrystalElement> ext =
                    extract_front(spec.labels, J);
                for (int a = 0; a < M; ++a) {
                    if (principal_to_affine(pext[static_cast<size_t>(a)])
                            .element != ext[static_cast<size_t>(a)])
                        throw std::logic_error(
                            "principal transport lost the classical part");
                    for (int i = 1; i <= n + 1; ++i)
                        term.c[static_cast<size_t>(i - 1)] -=
                            pext[static_cast<size_t>(a)].theta(i - 1);
                }
                break;
            }
        }
        terms.push_back(std::move(term));
    }
    return terms;
}

num eval_terms(const std::vector<JTerm>& terms, const std::vector<int>& lambda,
               int k, int i) {
    num best = std::numeric_limits<num>::min();
    for (const JTerm& term : terms) {
        num v = term.c[static_cast<size_t>(i - 1)];
        for (int mu : term.mu) v += prefix_min(lambda, k, mu);
        best = std::max(best, v);
    }
    return best;
}

}  // namespace

std::vector<int> SolitonSpec::amplitudes() const {
    std::vector<int> mus;
    mus.reserve(labels.size());
    for (const CrystalElement& b : labels) mus.push_back(b.capacity());
    return mus;
}

SolitonSpec make_soliton_spec(int n, std::vector<CrystalElement> labels,
                              std::vector<num> positions) {
    SolitonSpec spec{n, std::move(labels), std::move(positions)};
    validate_spec(spec);
    return spec;
}

PhaseData phase_data(const SolitonSpec& spec, const std::vector<int>& J) {
    validate_spec(spec);
    const int N = spec.size();
    for (size_t a = 0; a < J.size(); ++a) {
        if (J[a] < 0 || J[a] >= N)
            throw std::invalid_argument("subset index out of range");
        if (a > 0 && J[a - 1] >= J[a])
            throw std::invalid_argument("subset must increase strictly");
    }
    PhaseData data;
    data.extracted = extract_front(spec.labels, J);
    if (J.empty()) return data;

    std::vector<num> riggings;
    std::vector<int> mus;
    for (int j : J) {
        riggings.push_back(spec.positions[static_cast<size_t>(j)]);
        mus.push_back(spec.labels[static_cast<size_t>(j)].capacity());
    }
    data.modes = compute_modes(make_path(data.extracted), riggings).modes();
    for (size_t a = 0; a < J.size(); ++a) {
        num phase = data.modes[a] + mus[a];
        for (size_t b = 0; b < a; ++b) phase += std::min(mus[a], mus[b]);
        data.shifted.push_back(phase);
    }

    const std::vector<int> all_mus = spec.amplitudes();
    std::vector<num> full_modes =
        compute_modes(make_path(spec.labels), spec.positions).modes();
    std::vector<PrincipalElement> pelems;
    for (int j = 0; j < N; ++j) {
        num top =
            full_modes[static_cast<size_t>(j)] + all_mus[static_cast<size_t>(j)];
        for (int b = 0; b < j; ++b)
            top += std::min(all_mus[static_cast<size_t>(j)],
                            all_mus[static_cast<size_t>(b)]);
        pelems.push_back(principal_convert(
            AffineElement{spec.labels[static_cast<size_t>(j)], top}));
    }
    std::vector<PrincipalElement> pext = extract_front_principal(pelems, J);
    for (size_t a = 0; a < pext.size(); ++a) {
        if (principal_to_affine(pext[a]).element != data.extracted[a])
            throw std::logic_error("principal transport lost the classical part");
        std::vector<num> window;
        for (int i = 0; i <= spec.n; ++i) window.push_back(pext[a].theta(i));
        data.theta.push_back(std::move(window));
    }
    return data;
}

num nsoliton_tau(const SolitonSpec& spec, const std::vector<int>& lambda,
                 int k, int i, TauFormula formula) {
    check_window(lambda, k, i, spec.n);
    return eval_terms(formula_terms(spec, formula), lambda, k, i);
}

num nsoliton_tau(const SolitonSpec& spec, int k, int i, TauFormula formula) {
    if (k < 0) throw std::invalid_argument("prefix index out of range");
    return nsoliton_tau(spec, std::vector<int>(static_cast<size_t>(k), 1), k,
                        i, formula);
}

TauTable nsoliton_tau_table(const SolitonSpec& spec,
                            const std::vector<int>& lambda,
                            TauFormula formula) {
    check_window(lambda, 0, 1, spec.n);
    const int L = static_cast<int>(lambda.size());
    const int n = spec.n;
    std::vector<JTerm> terms = formula_terms(spec, formula);

    TauTable table;
    table.n = n;
    table.quantum = lambda;
    table.values.assign(static_cast<size_t>(n) + 2,
                        std::vector<num>(static_cast<size_t>(L) + 1, 0));
    for (int k = 0; k <= L; ++k)
        for (int i = 1; i <= n + 1; ++i)
            table.values[static_cast<size_t>(i)][static_cast<size_t>(k)] =
                eval_terms(terms, lambda, k, i);
    num boxes = 0;
    for (int k = 0; k <= L; ++k) {
        if (k > 0) boxes += lambda[static_cast<size_t>(k - 1)];
        table.values[0][static_cast<size_t>(k)] =
            table.values[static_cast<size_t>(n + 1)][static_cast<size_t>(k)] -
            boxes;
    }
    return table;
}

RiggedConfiguration spec_configuration(const SolitonSpec& spec,
                                       const std::vector<int>& lambda) {
    validate_spec(spec);
    check_window(lambda, 0, 1, spec.n);
    const int n = spec.n;
    const int N = spec.size();
    std::vector<std::vector<Row>> colors(static_cast<size_t>(n));
    for (int j = 0; j < N; ++j)
        colors[0].push_back(
            Row{spec.labels[static_cast<size_t>(j)].capacity(),
                spec.positions[static_cast<size_t>(j)]});
    if (n >= 2 && N > 0) {
        // The labels, read in the alphabet 2..n+1, form a state one rank
        // down; its configuration supplies the deeper colors.
        std::vector<CrystalElement> lowered;
        lowered.reserve(static_cast<size_t>(N));
        for (const CrystalElement& b : spec.labels) {
            const std::vector<int>& occ = b.occupancy();
            lowered.push_back(make_element(
                n - 1, std::vector<int>(occ.begin() + 1, occ.end())));
        }
        RiggedConfiguration nested = unrestricted_from_path(make_path(lowered));
        for (int a = 1; a <= n - 1; ++a)
            colors[static_cast<size_t>(a)] =
                nested.colors()[static_cast<size_t>(a - 1)];
    }
    return RiggedConfiguration(n, lambda, std::move(colors));
}

SolitonSpec evolve_spec(const SolitonSpec& spec, num l) {
    validate_spec(spec);
    if (l != INFINITE_CAPACITY && l < 1)
        throw std::invalid_argument("carrier capacity must be positive");
    SolitonSpec next = spec;
    for (int j = 0; j < spec.size(); ++j) {
        const num mu = spec.labels[static_cast<size_t>(j)].capacity();
        next.positions[static_cast<size_t>(j)] +=
            l == INFINITE_CAPACITY ? mu : std::min(l, mu);
    }
    return next;
}

Path solve_ivp(const Path& p, const std::vector<num>& schedule) {
    for (num l : schedule)
        if (l != INFINITE_CAPACITY && l < 1)
            throw std::invalid_argument("carrier capacity must be positive");
    RiggedConfiguration rc =
        is_highest(p) ? kkr_from_path(p) : unrestricted_from_path(p);
    std::vector<std::vector<Row>> colors = rc.colors();
    if (!colors.empty()) {
        for (Row& row : colors[0])
            for (num l : schedule)
                row.rigging +=
                    l == INFINITE_CAPACITY ? row.length : std::min<num>(l, row.length);
    }
    RiggedConfiguration shifted(rc.n(), rc.quantum(), std::move(colors));
    return reconstruct_path(tau_table(shifted));
}

AsymptoticState asymptotic_state(const RiggedConfiguration& rc) {
    const int n = rc.n();
    const int L = static_cast<int>(rc.quantum().size());
    for (int cap : rc.quantum())
        if (cap != 1) throw std::invalid_argument("unit quantum space required");
    if (validate(rc) != Validity::Restricted)
        throw std::invalid_argument("restricted configuration required");

    // Solitons ordered by amplitude, then by rigging.
    std::vector<Row> rows = rc.rows(1);
    std::sort(rows.begin(), rows.end());
    const int N = static_cast<int>(rows.size());

    AsymptoticState out;
    if (N == 0) {
        std::vector<CrystalElement> vac(static_cast<size_t>(L), vacuum(n, 1));
        out.state = make_path(std::move(vac));
        if (out.state != kkr_to_path(rc))
            throw std::logic_error("empty configuration renders nontrivially");
        return out;
    }

    // Taus of the once-truncated configuration, indexed at(M, i-1).  At
    // rank one the truncation is empty and its table is fixed by the
    // quantum space alone: the last row vanishes and row 0 follows the
    // usual prefix convention.
    TauTable nested;
    if (n == 1) {
        nested.n = 0;
        for (const Row& row : rows) nested.quantum.push_back(row.length);
        nested.values.assign(2, std::vector<num>(static_cast<size_t>(N) + 1, 0));
        num total = 0;
        for (int M = 1; M <= N; ++M) {
            total += rows[static_cast<size_t>(M - 1)].length;
            nested.values[0][static_cast<size_t>(M)] = -total;
        }
    } else {
        nested = tau_table(truncate(rc, 1));
    }

    // Interval ends k_{M,i}, i = 1..n+1 stored at [M-1][i-1].
    std::vector<int> prefix;
    num prev_selfmin = 0;
    for (int M = 1; M <= N; ++M) {
        prefix.push_back(rows[static_cast<size_t>(M - 1)].length);
        const num selfmin = pairwise_min(prefix, prefix);
        std::vector<num> ends;
        for (int i = 1; i <= n + 1; ++i)
            ends.push_back(selfmin - prev_selfmin +
                           rows[static_cast<size_t>(M - 1)].rigging +
                           nested.at(M - 1, i - 1) - nested.at(M, i - 1));
        prev_selfmin = selfmin;
        out.positions.push_back(std::move(ends));
    }

    // The intervals must be genuine: ordered within each soliton, spanning
    // exactly its amplitude, disjoint between solitons, inside the frame.
    for (int M = 1; M <= N; ++M) {
        const std::vector<num>& ends = out.positions[static_cast<size_t>(M - 1)];
        for (int i = 2; i <= n + 1; ++i)
            if (ends[static_cast<size_t>(i - 1)] > ends[static_cast<size_t>(i - 2)])
                throw std::domain_error("solitons not separated");
        if (ends[0] - ends[static_cast<size_t>(n)] !=
            rows[static_cast<size_t>(M - 1)].length)
            throw std::domain_error("solitons not separated");
        if (M < N && ends[0] > out.positions[static_cast<size_t>(M)][static_cast<size_t>(n)])
            throw std::domain_error("solitons not separated");
    }
    if (out.positions[0][static_cast<size_t>(n)] < 0 ||
        out.positions[static_cast<size_t>(N - 1)][0] > L)
        throw std::domain_error("solitons not separated");

    std::vector<int> letters(static_cast<size_t>(L), 1);
    for (int M = 1; M <= N; ++M) {
        const std::vector<num>& ends = out.positions[static_cast<size_t>(M - 1)];
        for (int i = 2; i <= n + 1; ++i)
            for (num k = ends[static_cast<size_t>(i - 1)] + 1;
                 k <= ends[static_cast<size_t>(i - 2)]; ++k)
                letters[static_cast<size_t>(k - 1)] = i;
    }
    std::vector<CrystalElement> factors;
    factors.reserve(static_cast<size_t>(L));
    for (int letter : letters) {
        std::vector<int> occ(static_cast<size_t>(n) + 1, 0);
        occ[static_cast<size_t>(letter - 1)] = 1;
        factors.push_back(make_element(n, std::move(occ)));
    }
    out.state = make_path(std::move(factors));
    if (out.state != kkr_to_path(rc))
        throw std::domain_error("solitons not separated");
    return out;
}

}  // namespace bethe
