#include "bethe/bbs.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bethe/rc.hpp"

namespace bethe {

namespace {

void require_state(const Path& p) {
    if (p.size() == 0) throw std::invalid_argument("empty state");
    for (const CrystalElement& f : p.factors)
        if (f.n() != p[0].n() || f.floor() != p[0].floor())
            throw std::invalid_argument(
                "state mixes ranks or floors across factors");
}

num ball_count(const Path& p) {
    num balls = 0;
    for (const CrystalElement& f : p.factors)
        for (int i = f.floor() + 2; i <= f.n() + 1; ++i) balls += f.x(i);
    return balls;
}

}  // namespace

EvolutionResult evolve_Tl(const Path& p, num l, Boundary boundary) {
    require_state(p);
    if (l != INFINITE_CAPACITY && l < 1)
        throw std::invalid_argument("carrier capacity must be >= 1");
    const int n = p[0].n();
    const int floor = p[0].floor();
    const num l_eff = l == INFINITE_CAPACITY ? ball_count(p) + 1 : l;

    EvolutionResult out;
    out.local_modes.reserve(p.size());
    std::vector<CrystalElement> state;
    state.reserve(p.size());
    CrystalElement carrier = vacuum(n, l_eff, floor);
    for (const CrystalElement& f : p.factors) {
        RResult rr = combinatorial_R(carrier, f);
        state.push_back(rr.left.element);
        carrier = rr.right.element;
        out.local_modes.push_back(rr.H);
        num e = std::min<num>(f.capacity(), l_eff) - rr.H;
        if (e < 0) throw std::logic_error("negative local energy");
        out.energy += e;
    }
    if (boundary == Boundary::Strict && carrier != vacuum(n, l_eff, floor))
        throw std::domain_error(
            "carrier did not come out empty; pad the state with vacuum");
    out.state = make_path(std::move(state));
    out.carrier_out = carrier;
    return out;
}

Path carrier_Ki(const Path& p, int i) {
    require_state(p);
    const int n = p[0].n();
    const int floor = p[0].floor();
    if (i < floor + 2 || i > n + 1)
        throw std::invalid_argument("carrier color out of range");

    std::vector<CrystalElement> state;
    state.reserve(p.size());
    num m = 0;  // balls of color i in the carrier
    for (const CrystalElement& f : p.factors) {
        const num y1 = f.x(floor + 1);
        const num yi = f.x(i);
        std::vector<int> o = f.occupancy();
        o[static_cast<std::size_t>(floor)] =
            static_cast<int>(yi + std::max<num>(y1 - m, 0));
        o[static_cast<std::size_t>(i - 1)] =
            static_cast<int>(std::min(m, y1));
        m = yi + std::max<num>(m - y1, 0);
        state.push_back(make_element(n, o, floor));
    }
    if (m != 0)
        throw std::domain_error(
            "balls carried past the right edge; pad the state with vacuum");
    return make_path(std::move(state));
}

Path evolve_Tinf(const Path& p) {
    require_state(p);
    Path out = p;
    for (int i = p[0].n() + 1; i >= p[0].floor() + 2; --i)
        out = carrier_Ki(out, i);
    return out;
}

EvolutionPattern evolution_pattern(const Path& p, int t_max) {
    require_state(p);
    if (t_max < 0) throw std::invalid_argument("t_max must be >= 0");
    if (p[0].floor() != 0)
        throw std::invalid_argument("evolution pattern requires floor 0");
    const int n = p[0].n();
    const num balls = ball_count(p);
    num amplitude = 0;
    RiggedConfiguration rc = unrestricted_from_path(p);
    for (const Row& row : rc.rows(1))
        amplitude = std::max<num>(amplitude, row.length);

    Path padded = p;
    for (num j = 0; j < t_max * amplitude + balls; ++j)
        padded.factors.push_back(vacuum(n, 1));

    EvolutionPattern pattern;
    pattern.rows.reserve(static_cast<std::size_t>(t_max) + 1);
    pattern.rows.push_back(std::move(padded));
    for (int t = 1; t <= t_max; ++t)
        pattern.rows.push_back(
            evolve_Tl(pattern.rows.back(), INFINITE_CAPACITY).state);
    return pattern;
}

std::string to_text(const EvolutionPattern& pattern) {
    std::ostringstream out;
    for (std::size_t t = 0; t < pattern.rows.size(); ++t) {
        if (t > 0) out << '\n';
        out << to_string(pattern.rows[t]);
    }
    return out.str();
}

}  // namespace bethe
