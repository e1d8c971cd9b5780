#pragma once

#include <vector>

#include "bethe/crystal.hpp"

namespace bethe {

// One row of a colored partition: its length and attached rigging.  The
// rigging is an arbitrary integer so unrestricted configurations fit.
struct Row {
    int length = 0;
    num rigging = 0;
    friend auto operator<=>(const Row&, const Row&) = default;
};

// (mu^(0), (mu^(1), r^(1)), ..., (mu^(n), r^(n))): a quantum space plus n
// colored rigged partitions.  Rows are multisets; they are stored sorted by
// (length, rigging) descending so equality is structural.
class RiggedConfiguration {
public:
    RiggedConfiguration() = default;
    RiggedConfiguration(int n, std::vector<int> quantum,
                        std::vector<std::vector<Row>> colors);

    int n() const { return n_; }
    const std::vector<int>& quantum() const { return quantum_; }
    // Rows of color a (1-based, 1..n), canonically sorted.
    const std::vector<Row>& rows(int a) const;
    const std::vector<std::vector<Row>>& colors() const { return colors_; }
    // Row lengths of level a, where level 0 means the quantum space.
    std::vector<int> shape(int a) const;
    // Total number of boxes of color a (level 0: quantum boxes).
    num weight(int a) const;

    bool operator==(const RiggedConfiguration&) const = default;

private:
    int n_ = 1;
    std::vector<int> quantum_;
    std::vector<std::vector<Row>> colors_;
};

// Partial box counts E^(a)_j and vacancy numbers
// p^(a)_j = E^(a-1)_j - 2 E^(a)_j + E^(a+1)_j, with E^(n+1) = 0.
class VacancyTable {
public:
    explicit VacancyTable(const RiggedConfiguration& rc);

    num E(int a, int j) const;  // a in 0..n+1
    num p(int a, int j) const;  // a in 1..n

private:
    int n_ = 1;
    std::vector<std::vector<int>> lengths_;  // per level 0..n
};

VacancyTable vacancy_table(const RiggedConfiguration& rc);

enum class Validity { Restricted, UnrestrictedOnly, Invalid };

// Restricted: 0 <= rigging <= vacancy on every row; unrestricted-only:
// rigging <= vacancy holds but some rigging is negative; otherwise invalid.
Validity validate(const RiggedConfiguration& rc);

// Sum of pairwise minima of the parts of two partitions.
num pairwise_min(const std::vector<int>& lambda, const std::vector<int>& mu);

// c(mu, r): Cartan-matrix quadratic form minus the quantum coupling plus
// the total rigging.
num charge(const RiggedConfiguration& rc);

// Configuration of the concatenated state: quantum spaces joined, second
// configuration's riggings shifted by the first one's vacancy numbers.
RiggedConfiguration concat(const RiggedConfiguration& a,
                           const RiggedConfiguration& b);

// Forget levels < a: mu^(a) becomes the quantum space of a rank n-a
// configuration (letters of its paths then live a levels up).
RiggedConfiguration truncate(const RiggedConfiguration& rc, int a);

// Unrestricted rigged configuration of an arbitrary (not necessarily
// highest) state: prepend the vacuum prefix built from multiplicities M_a,
// take the configuration of the now-highest state, strip the prefix rows
// and shift the riggings back.  The default M_a = (count of letter a+1) + 1;
// any admissible override gives the same result.
RiggedConfiguration unrestricted_from_path(const Path& p);
RiggedConfiguration unrestricted_from_path(const Path& p,
                                           const std::vector<int>& M);
// The vacuum prefix itself (a chain of B_1 factors) for given multiplicities.
Path vacuum_prefix(int n, const std::vector<int>& M);

}  // namespace bethe
