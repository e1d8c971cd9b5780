#include "bethe/crystal.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bethe {

namespace {

int mod(int a, int p) { return ((a % p) + p) % p; }

void check_index(int i, int rank) {
    if (i < 0 || i > rank)
        throw std::invalid_argument("crystal index out of range 0..rank");
}

void check_compatible(const CrystalElement& a, const CrystalElement& b) {
    if (a.n() != b.n() || a.floor() != b.floor())
        throw std::invalid_argument("rank/floor mismatch in tensor operation");
}

}  // namespace

CrystalElement::CrystalElement(int n, std::vector<int> occupancy, int floor)
    : n_(n), floor_(floor), x_(std::move(occupancy)) {
    if (n_ < 1) throw std::invalid_argument("rank must be >= 1");
    if (floor_ < 0 || floor_ > n_)
        throw std::invalid_argument("floor must lie in 0..n");
    if (x_.size() != static_cast<size_t>(n_ + 1))
        throw std::invalid_argument("occupancy vector must have n+1 entries");
    cap_ = 0;
    for (int v : x_) {
        if (v < 0) throw std::invalid_argument("negative occupancy entry");
        cap_ += v;
    }
    for (int i = 0; i < floor_; ++i)
        if (x_[static_cast<size_t>(i)] != 0)
            throw std::invalid_argument("letter below floor is occupied");
}

std::string CrystalElement::word() const {
    if (n_ + 1 > 9)
        throw std::domain_error("word form only supports letters up to 9");
    std::string w;
    w.reserve(static_cast<size_t>(cap_));
    for (int i = 1; i <= n_ + 1; ++i)
        w.append(static_cast<size_t>(x(i)), static_cast<char>('0' + i));
    return w;
}

bool CrystalElement::operator<(const CrystalElement& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    if (floor_ != o.floor_) return floor_ < o.floor_;
    return x_ < o.x_;
}

CrystalElement make_element(int n, std::vector<int> occupancy, int floor) {
    return CrystalElement(n, std::move(occupancy), floor);
}

CrystalElement make_element(int n, const std::string& word, int floor) {
    std::vector<int> x(static_cast<size_t>(n + 1), 0);
    char prev = 0;
    for (char c : word) {
        if (c < '1' || c > '9')
            throw std::invalid_argument("word letters must be digits 1..9");
        if (c < prev)
            throw std::invalid_argument("word letters must weakly increase");
        int letter = c - '0';
        if (letter <= floor || letter > n + 1)
            throw std::invalid_argument("letter out of range for floor/rank");
        ++x[static_cast<size_t>(letter - 1)];
        prev = c;
    }
    return CrystalElement(n, std::move(x), floor);
}

CrystalElement vacuum(int n, int l, int floor) {
    if (l < 0) throw std::invalid_argument("capacity must be >= 0");
    std::vector<int> x(static_cast<size_t>(n + 1), 0);
    x[static_cast<size_t>(floor)] = l;
    return CrystalElement(n, std::move(x), floor);
}

Path make_path(std::vector<CrystalElement> factors) {
    for (size_t j = 1; j < factors.size(); ++j)
        check_compatible(factors[0], factors[j]);
    return Path{std::move(factors)};
}

Path parse_b1_path(int n, const std::string& text, int floor) {
    std::vector<CrystalElement> factors;
    factors.reserve(text.size());
    for (char c : text)
        factors.push_back(make_element(n, std::string(1, c), floor));
    return make_path(std::move(factors));
}

Path parse_path(int n, const std::string& text, int floor) {
    std::istringstream in(text);
    std::vector<CrystalElement> factors;
    std::string w;
    while (in >> w) factors.push_back(make_element(n, w, floor));
    return make_path(std::move(factors));
}

std::string to_string(const Path& p) {
    bool all_b1 = std::all_of(p.factors.begin(), p.factors.end(),
                              [](const CrystalElement& f) { return f.capacity() == 1; });
    std::string out;
    for (int j = 0; j < p.size(); ++j) {
        if (j > 0 && !all_b1) out += ' ';
        out += p[j].word();
    }
    return out;
}

int phi(int i, const CrystalElement& x) {
    int p = x.rank() + 1;
    check_index(i, x.rank());
    return x.nested(mod(i - 1, p) + 1);
}

int eps(int i, const CrystalElement& x) {
    int p = x.rank() + 1;
    check_index(i, x.rank());
    return x.nested(mod(i, p) + 1);
}

num phi(int i, const Path& p) {
    // phi(b x b') = phi(b') + (phi(b) - eps(b'))_+ folded over the factors.
    num ph = 0;
    for (const CrystalElement& f : p.factors)
        ph = phi(i, f) + std::max<num>(ph - eps(i, f), 0);
    return ph;
}

num eps(int i, const Path& p) {
    // eps(b x b') = eps(b) + (eps(b') - phi(b))_+ folded from the right.
    num ep = 0;
    for (auto it = p.factors.rbegin(); it != p.factors.rend(); ++it)
        ep = eps(i, *it) + std::max<num>(ep - phi(i, *it), 0);
    return ep;
}

std::optional<CrystalElement> apply_kashiwara(Kashiwara op, int i,
                                              const CrystalElement& x) {
    int p = x.rank() + 1;
    check_index(i, x.rank());
    int src = (op == Kashiwara::E) ? mod(i, p) : mod(i - 1, p);
    int dst = (op == Kashiwara::E) ? mod(i - 1, p) : mod(i, p);
    if (x.nested(src + 1) == 0) return std::nullopt;
    std::vector<int> occ = x.occupancy();
    --occ[static_cast<size_t>(x.floor() + src)];
    ++occ[static_cast<size_t>(x.floor() + dst)];
    return CrystalElement(x.n(), std::move(occ), x.floor());
}

std::optional<Path> apply_kashiwara(Kashiwara op, int i, const Path& p) {
    if (p.size() == 0) return std::nullopt;
    check_index(i, p[0].rank());
    // eps_i of each suffix p_{j+1} x ... x p_L.
    std::vector<num> suffix(static_cast<size_t>(p.size() + 1), 0);
    for (int j = p.size() - 1; j >= 0; --j)
        suffix[static_cast<size_t>(j)] =
            eps(i, p[j]) + std::max<num>(suffix[static_cast<size_t>(j + 1)] - phi(i, p[j]), 0);
    // E acts on the head iff phi(head) >= eps(tail); F iff strict.
    for (int j = 0; j < p.size(); ++j) {
        num tail = suffix[static_cast<size_t>(j + 1)];
        bool here = (op == Kashiwara::E) ? phi(i, p[j]) >= tail
                                         : phi(i, p[j]) > tail;
        if (here || j == p.size() - 1) {
            auto f = apply_kashiwara(op, i, p[j]);
            if (!f) return std::nullopt;
            Path out = p;
            out.factors[static_cast<size_t>(j)] = *f;
            return out;
        }
    }
    return std::nullopt;  // unreachable
}

bool is_highest(const Path& p) {
    if (p.size() == 0) return true;
    for (int i = 1; i <= p[0].rank(); ++i)
        if (eps(i, p) != 0) return false;
    return true;
}

bool is_highest(const CrystalElement& x) {
    for (int i = 1; i <= x.rank(); ++i)
        if (eps(i, x) != 0) return false;
    return true;
}

namespace {

// Q_i of x (x) y by the piecewise linear minimum, effective letters.
std::vector<num> pl_Q(const CrystalElement& x, const CrystalElement& y) {
    int p = x.rank() + 1;
    std::vector<num> Q(static_cast<size_t>(p), 0);
    for (int i = 0; i < p; ++i) {
        num best = 0;
        for (int k = 1; k <= p; ++k) {
            num s = 0;
            for (int j = 1; j < k; ++j) s += x.nested(mod(i + j - 1, p) + 1);
            for (int j = k + 1; j <= p; ++j) s += y.nested(mod(i + j - 1, p) + 1);
            if (k == 1 || s < best) best = s;
        }
        Q[static_cast<size_t>(i)] = best;
    }
    return Q;
}

RResult formula_R(const AffineElement& a, const AffineElement& b) {
    const CrystalElement& x = a.element;
    const CrystalElement& y = b.element;
    int n = x.n(), fl = x.floor(), p = x.rank() + 1;
    std::vector<num> Q = pl_Q(x, y);
    num H = std::min(x.capacity(), y.capacity()) - Q[0];
    std::vector<int> xt(static_cast<size_t>(n + 1), 0);
    std::vector<int> yt(static_cast<size_t>(n + 1), 0);
    for (int i = 1; i <= p; ++i) {
        num qi = Q[static_cast<size_t>(i % p)], qprev = Q[static_cast<size_t>(i - 1)];
        xt[static_cast<size_t>(fl + i - 1)] = x.nested(i) + static_cast<int>(qi - qprev);
        yt[static_cast<size_t>(fl + i - 1)] = y.nested(i) + static_cast<int>(qprev - qi);
    }
    return RResult{AffineElement{CrystalElement(n, std::move(yt), fl), b.mode - H},
                   AffineElement{CrystalElement(n, std::move(xt), fl), a.mode + H},
                   H, std::move(Q)};
}

RResult graphical_R_impl(const AffineElement& a, const AffineElement& b,
                         const std::vector<int>* order) {
    const CrystalElement& x = a.element;
    const CrystalElement& y = b.element;
    int p = x.rank() + 1, n = x.n(), fl = x.floor();
    int l = x.capacity(), m = y.capacity();
    if (l < m) {
        // The dot rule applies to B_l x B_m with l >= m; otherwise certify
        // the formula's output, whose image pair it does cover, and carry
        // H and Q over by their invariance under R.
        RResult via = formula_R(a, b);
        RResult back = graphical_R_impl(via.left, via.right, nullptr);
        if (back.left.element != x || back.right.element != y ||
            back.H != via.H || back.Q != via.Q)
            throw std::logic_error("graphical certification of R failed");
        return via;
    }
    // Right-column dots in pairing order; default is bottom row first.
    std::vector<int> letters;  // effective letter of each right dot
    for (int i = 1; i <= p; ++i)
        letters.insert(letters.end(), static_cast<size_t>(y.nested(i)), i);
    std::vector<int> seq(letters.size());
    std::iota(seq.begin(), seq.end(), 0);
    std::reverse(seq.begin(), seq.end());
    if (order) {
        if (order->size() != letters.size())
            throw std::invalid_argument("pairing order must list every right dot");
        seq = *order;
    }
    std::vector<int> unpaired(static_cast<size_t>(p));  // left dots per row
    for (int i = 1; i <= p; ++i) unpaired[static_cast<size_t>(i - 1)] = x.nested(i);
    std::vector<num> winding(static_cast<size_t>(p), 0);  // border i stored mod p
    num H = 0;
    for (int t : seq) {
        int arow = letters[static_cast<size_t>(t)];
        int j = 0;
        for (int r = arow - 1; r >= 1; --r)
            if (unpaired[static_cast<size_t>(r - 1)] > 0) { j = r; break; }
        if (j > 0) {
            --unpaired[static_cast<size_t>(j - 1)];
            for (int i = j; i <= arow - 1; ++i) ++winding[static_cast<size_t>(i % p)];
        } else {
            for (int r = p; r >= 1; --r)
                if (unpaired[static_cast<size_t>(r - 1)] > 0) { j = r; break; }
            assert(j > 0);
            --unpaired[static_cast<size_t>(j - 1)];
            ++H;
            for (int i = 1; i <= arow - 1; ++i) ++winding[static_cast<size_t>(i % p)];
            for (int i = j; i <= p; ++i) ++winding[static_cast<size_t>(i % p)];
        }
    }
    // New left element keeps the paired left dots; the unpaired ones move
    // right into the other column.
    std::vector<int> yt(static_cast<size_t>(n + 1), 0);
    std::vector<int> xt(static_cast<size_t>(n + 1), 0);
    for (int i = 1; i <= p; ++i) {
        int moved = unpaired[static_cast<size_t>(i - 1)];
        yt[static_cast<size_t>(fl + i - 1)] = x.nested(i) - moved;
        xt[static_cast<size_t>(fl + i - 1)] = y.nested(i) + moved;
    }
    std::vector<num> Q(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i)
        Q[static_cast<size_t>(i)] = std::min(l, m) - winding[static_cast<size_t>(i)];
    assert(H == std::min(l, m) - Q[0]);
    return RResult{AffineElement{CrystalElement(n, std::move(yt), fl), b.mode - H},
                   AffineElement{CrystalElement(n, std::move(xt), fl), a.mode + H},
                   H, std::move(Q)};
}

}  // namespace

RResult combinatorial_R(const AffineElement& left, const AffineElement& right,
                        RMethod method) {
    check_compatible(left.element, right.element);
    return method == RMethod::Formula ? formula_R(left, right)
                                      : graphical_R_impl(left, right, nullptr);
}

RResult combinatorial_R(const CrystalElement& left, const CrystalElement& right,
                        RMethod method) {
    return combinatorial_R(AffineElement{left, 0}, AffineElement{right, 0}, method);
}

RResult graphical_R_ordered(const CrystalElement& left, const CrystalElement& right,
                            const std::vector<int>& order) {
    check_compatible(left, right);
    if (left.capacity() < right.capacity())
        throw std::invalid_argument("explicit pairing order needs left capacity >= right");
    return graphical_R_impl(AffineElement{left, 0}, AffineElement{right, 0}, &order);
}

CrystalElement dynkin_sigma(const CrystalElement& x) {
    if (x.floor() != 0)
        throw std::domain_error("Dynkin rotation undefined above floor 0");
    std::vector<int> occ = x.occupancy();
    std::rotate(occ.begin(), occ.begin() + 1, occ.end());
    return CrystalElement(x.n(), std::move(occ), 0);
}

Path dynkin_sigma(const Path& p) {
    Path out = p;
    for (CrystalElement& f : out.factors) f = dynkin_sigma(f);
    return out;
}

num PrincipalElement::theta(num i) const {
    num p = rank() + 1;
    num q = i >= 0 ? i / p : -((-i + p - 1) / p);
    return window[static_cast<size_t>(i - q * p)] - q * capacity;
}

PrincipalElement principal_convert(const AffineElement& a) {
    const CrystalElement& x = a.element;
    PrincipalElement t{x.n(), x.floor(), x.capacity(), {}};
    t.window.resize(static_cast<size_t>(x.rank() + 1));
    num run = a.mode;
    t.window[0] = run;
    for (int i = 1; i <= x.rank(); ++i) {
        run -= x.nested(i);
        t.window[static_cast<size_t>(i)] = run;
    }
    return t;
}

AffineElement principal_to_affine(const PrincipalElement& t) {
    int N = t.rank();
    if (t.window.size() != static_cast<size_t>(N + 1))
        throw std::domain_error("principal window must have rank+1 entries");
    std::vector<int> occ(static_cast<size_t>(t.n + 1), 0);
    for (int i = 1; i <= N + 1; ++i) {
        num xi = (i <= N) ? t.window[static_cast<size_t>(i - 1)] - t.window[static_cast<size_t>(i)]
                          : t.window[static_cast<size_t>(N)] - (t.window[0] - t.capacity);
        if (xi < 0)
            throw std::domain_error("principal window is not weakly decreasing");
        occ[static_cast<size_t>(t.floor + i - 1)] = static_cast<int>(xi);
    }
    return AffineElement{CrystalElement(t.n, std::move(occ), t.floor), t.window[0]};
}

PrincipalRResult principal_R(const PrincipalElement& left,
                             const PrincipalElement& right) {
    if (left.n != right.n || left.floor != right.floor)
        throw std::invalid_argument("rank/floor mismatch in principal R");
    int N = left.rank();
    num lo = std::min(left.capacity, right.capacity);
    PrincipalRResult out;
    out.S.resize(static_cast<size_t>(N + 1));
    out.left = PrincipalElement{left.n, left.floor, right.capacity,
                                std::vector<num>(static_cast<size_t>(N + 1))};
    out.right = PrincipalElement{left.n, left.floor, left.capacity,
                                 std::vector<num>(static_cast<size_t>(N + 1))};
    for (int i = 0; i <= N; ++i) {
        num best = 0;
        for (int k = 1; k <= N + 1; ++k) {
            num v = right.theta(i + k) - left.theta(i + k - 1);
            if (k == 1 || v < best) best = v;
        }
        num s = 2 * lo - left.theta(i) + right.theta(i + N + 1) - best;
        out.S[static_cast<size_t>(i)] = s;
        out.left.window[static_cast<size_t>(i)] = right.theta(i) - s;
        out.right.window[static_cast<size_t>(i)] = left.theta(i) + s;
    }
    return out;
}

}  // namespace bethe
