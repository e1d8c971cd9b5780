#include <stdexcept>
#include <vector>

#include "bethe/kkr.hpp"
#include "bethe/rc.hpp"

namespace bethe {

Path vacuum_prefix(int n, const std::vector<int>& M) {
    if (static_cast<int>(M.size()) != n)
        throw std::invalid_argument("one multiplicity per letter 1..n");
    std::vector<CrystalElement> fs;
    for (int b = n; b >= 1; --b) {
        if (M[static_cast<size_t>(b - 1)] < 0)
            throw std::invalid_argument("negative prefix multiplicity");
        for (int rep = 0; rep < M[static_cast<size_t>(b - 1)]; ++rep)
            for (int letter = 1; letter <= b; ++letter) {
                std::vector<int> occ(static_cast<size_t>(n + 1), 0);
                occ[static_cast<size_t>(letter - 1)] = 1;
                fs.push_back(make_element(n, occ));
            }
    }
    return Path{std::move(fs)};
}

RiggedConfiguration unrestricted_from_path(const Path& p,
                                           const std::vector<int>& M) {
    if (p.size() == 0)
        throw std::invalid_argument("state must have at least one factor");
    int n = p[0].n();
    if (p[0].floor() != 0)
        throw std::invalid_argument("floor-0 state required");
    if (static_cast<int>(M.size()) != n)
        throw std::invalid_argument("one multiplicity per letter 1..n");

    // Prefix row counts stripped per level: L_a = sum_{b>a} (b-a) M_b.
    std::vector<int> L(static_cast<size_t>(n + 1), 0);
    for (int a = 0; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            L[static_cast<size_t>(a)] +=
                (b - a) * M[static_cast<size_t>(b - 1)];

    Path full = vacuum_prefix(n, M);
    full.factors.insert(full.factors.end(), p.factors.begin(),
                        p.factors.end());
    if (!is_highest(full))
        throw std::domain_error(
            "vacuum prefix too small: padded state is not highest");
    RiggedConfiguration tilde = kkr_from_path(full);

    std::vector<int> quantum(tilde.quantum().begin() + L[0],
                             tilde.quantum().end());
    std::vector<std::vector<Row>> colors;
    for (int a = 1; a <= n; ++a) {
        int spare = L[static_cast<size_t>(a)];
        std::vector<Row> kept;
        for (const Row& r : tilde.rows(a)) {
            if (spare > 0 && r.length == 1 && r.rigging == 0) {
                --spare;
                continue;
            }
            kept.push_back(
                Row{r.length, r.rigging - M[static_cast<size_t>(a - 1)]});
        }
        if (spare > 0)
            throw std::domain_error(
                "vacuum prefix too small: its rows are entangled");
        colors.push_back(std::move(kept));
    }
    return RiggedConfiguration(n, std::move(quantum), std::move(colors));
}

RiggedConfiguration unrestricted_from_path(const Path& p) {
    if (p.size() == 0)
        throw std::invalid_argument("state must have at least one factor");
    int n = p[0].n();
    std::vector<int> M(static_cast<size_t>(n), 0);
    for (int a = 1; a <= n; ++a) {
        int count = 0;
        for (const CrystalElement& f : p.factors) count += f.x(a + 1);
        M[static_cast<size_t>(a - 1)] = count + 1;
    }
    return unrestricted_from_path(p, M);
}

}  // namespace bethe
