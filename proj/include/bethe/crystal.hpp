#pragma once

#include <optional>
#include <string>
#include <vector>

namespace bethe {

// Integer type for quantities that accumulate (modes, riggings, energies).
using num = long long;

// Element of the rank-n row crystal B_l, stored as letter occupancies
// x_1..x_{n+1}.  floor = a marks membership in the sub-crystal B^{>=a+1}
// (letters 1..a forbidden); the element then belongs to the row crystal of
// the rank n-a subalgebra, and all indexed operations below take indices
// of that effective algebra: i in 0..n-a, letter i <-> original letter a+i.
class CrystalElement {
public:
    CrystalElement() = default;
    CrystalElement(int n, std::vector<int> occupancy, int floor = 0);

    int n() const { return n_; }
    int floor() const { return floor_; }
    // Rank of the effective algebra.
    int rank() const { return n_ - floor_; }
    int capacity() const { return cap_; }

    // Occupancy of original letter i (1-based, 1..n+1).
    int x(int i) const { return x_[static_cast<size_t>(i - 1)]; }
    // Occupancy of effective letter i (1-based, 1..rank()+1).
    int nested(int i) const { return x_[static_cast<size_t>(floor_ + i - 1)]; }
    const std::vector<int>& occupancy() const { return x_; }

    // Weakly increasing letter string, e.g. (1,2,0,1) -> "1224".
    std::string word() const;

    bool operator==(const CrystalElement&) const = default;
    // Lexicographic on (n, floor, occupancy); for use as ordered-map key.
    bool operator<(const CrystalElement&) const;

private:
    int n_ = 1;
    int floor_ = 0;
    int cap_ = 0;
    std::vector<int> x_;  // size n+1, x_[i] = occupancy of letter i+1
};

CrystalElement make_element(int n, std::vector<int> occupancy, int floor = 0);
CrystalElement make_element(int n, const std::string& word, int floor = 0);
// Highest element u_l: l copies of the smallest admissible letter.
CrystalElement vacuum(int n, int l, int floor = 0);

struct AffineElement {
    CrystalElement element;
    num mode = 0;

    bool operator==(const AffineElement&) const = default;
};

// Tensor product p_1 x p_2 x ... x p_L, all factors of one rank and floor.
struct Path {
    std::vector<CrystalElement> factors;

    int size() const { return static_cast<int>(factors.size()); }
    const CrystalElement& operator[](int j) const {
        return factors[static_cast<size_t>(j)];
    }
    bool operator==(const Path&) const = default;
};

Path make_path(std::vector<CrystalElement> factors);
// One factor per character; for rank-n chains of B_1.
Path parse_b1_path(int n, const std::string& text, int floor = 0);
// Whitespace-separated factor words; a single token is a single factor.
Path parse_path(int n, const std::string& text, int floor = 0);
// Inverse of the two parsers: B_1 chains concatenate, otherwise words are
// space-separated.
std::string to_string(const Path& p);

enum class Kashiwara { E, F };

// phi_i(x) and eps_i(x); i is an index of the effective algebra, mod rank+1.
int phi(int i, const CrystalElement& x);
int eps(int i, const CrystalElement& x);
num phi(int i, const Path& p);
num eps(int i, const Path& p);

// Kashiwara operator on one element or a whole tensor product; nullopt when
// the result leaves the crystal.
std::optional<CrystalElement> apply_kashiwara(Kashiwara op, int i,
                                              const CrystalElement& x);
std::optional<Path> apply_kashiwara(Kashiwara op, int i, const Path& p);

// True iff eps_i vanishes for all classical indices i = 1..rank.
bool is_highest(const Path& p);
bool is_highest(const CrystalElement& x);

enum class RMethod { Formula, Graphical };

struct RResult {
    AffineElement left;   // image in B_m (the right input's capacity)
    AffineElement right;  // image in B_l (the left input's capacity)
    num H = 0;            // local energy, 0 <= H <= min(l, m)
    std::vector<num> Q;   // Q_0..Q_N, N = effective rank; R-invariant
};

// Combinatorial R on Aff(B_l) x Aff(B_m):
// x[d] x y[e] |-> y~[e-H] x x~[d+H].  Both methods agree everywhere; the
// graphical one is an independent dot-pairing computation (by winding
// numbers) whenever l >= m, and certifies the formula's output otherwise.
RResult combinatorial_R(const AffineElement& left, const AffineElement& right,
                        RMethod method = RMethod::Formula);
RResult combinatorial_R(const CrystalElement& left, const CrystalElement& right,
                        RMethod method = RMethod::Formula);

// Graphical computation with an explicit pairing order for the right-column
// dots (a permutation of 0..m-1, dots listed bottom letter first); the
// result is order-independent, which tests verify.
RResult graphical_R_ordered(const CrystalElement& left,
                            const CrystalElement& right,
                            const std::vector<int>& order);

// Cyclic Dynkin automorphism (x_1,...,x_{n+1}) -> (x_2,...,x_{n+1},x_1).
CrystalElement dynkin_sigma(const CrystalElement& x);
Path dynkin_sigma(const Path& p);

// Principal parametrization of an affine element: a weakly decreasing
// integer window theta_0..theta_N (N = effective rank) extended by
// theta_{i+N+1} = theta_i - l.
struct PrincipalElement {
    int n = 1;
    int floor = 0;
    int capacity = 0;
    std::vector<num> window;  // theta_0..theta_N

    int rank() const { return n - floor; }
    // theta_i for any integer i via the periodic extension.
    num theta(num i) const;

    bool operator==(const PrincipalElement&) const = default;
};

// theta_i = d - x_1 - ... - x_i (effective letters); inverse recovers
// x_i = theta_{i-1} - theta_i and d = theta_0.
PrincipalElement principal_convert(const AffineElement& a);
AffineElement principal_to_affine(const PrincipalElement& t);

struct PrincipalRResult {
    PrincipalElement left, right;
    std::vector<num> S;  // S_0..S_N; equals 2 min(l,m) - Q_i throughout
};

// R in the principal picture: theta x theta' |-> (theta' - S) x (theta + S).
// Classical parts match combinatorial_R; the window normalization at i = 0
// intentionally differs from the homogeneous mode convention.
PrincipalRResult principal_R(const PrincipalElement& left,
                             const PrincipalElement& right);

}  // namespace bethe
