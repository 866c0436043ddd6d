#include "hs/cells_typeA.hpp"

#include <algorithm>
#include <bit>

#include "hs/errors.hpp"

namespace hs {

namespace {

constexpr int kMaxCellRank = 12;

const RootDatum& require_gl(const AffineWeyl& aw) {
    const auto& d = aw.datum();
    if (d.kind() != RootDatum::Kind::GL) throw InputError("type A cells need the GL_n datum");
    return d;
}

}  // namespace

Int AffinePermutation::operator()(Int i) const {
    Int r = floor_div(i - 1, n);
    return window[i - 1 - r * n] + r * n;
}

AffinePermutation make_affine_permutation(const Vec& window) {
    int n = static_cast<int>(window.size());
    if (n == 0) throw InputError("empty window");
    std::vector<char> seen(n, 0);
    for (Int x : window) {
        Int r = floor_div(x - 1, n);
        Int res = x - 1 - r * n;
        if (seen[res]) throw InputError("window residues are not a permutation: " + vec_str(window));
        seen[res] = 1;
    }
    return {n, window};
}

AffinePermutation compose(const AffinePermutation& a, const AffinePermutation& b) {
    if (a.n != b.n) throw InputError("affine permutations of different n");
    Vec w(a.n);
    for (int i = 1; i <= a.n; ++i) w[i - 1] = a(b(i));
    return {a.n, w};
}

AffinePermutation inverse(const AffinePermutation& w) {
    Vec out(w.n);
    for (int i = 1; i <= w.n; ++i) {
        Int x = w.window[i - 1];
        Int r = floor_div(x - 1, w.n);
        out[x - 1 - r * w.n] = i - r * w.n;
    }
    return {w.n, out};
}

AffinePermutation to_affine_permutation(const AffineWeyl& aw, const ExtAffineElement& w) {
    const auto& d = require_gl(aw);
    int n = d.n();
    const Mat& m = d.matrix(w.v);
    Vec win(n);
    for (int i = 0; i < n; ++i) {
        int vi = -1;
        for (int r = 0; r < n; ++r)
            if (m[r][i] == 1) vi = r;
        win[i] = vi + 1 + ck_mul(n, w.lam[i]);
    }
    return make_affine_permutation(win);
}

// Shi: d_k = largest union of k disjoint decreasing chains with distinct residues;
// (d_1, d_2 - d_1, ...) is the conjugate of the cell partition.
Partition ambc_shape(const AffinePermutation& w) {
    int n = w.n;
    if (n > kMaxCellRank) throw InputError("affine permutation too large for the cell computation");
    make_affine_permutation(w.window);
    // edge a -> b: some b + n delta comes after a with a smaller value
    std::vector<std::vector<char>> edge(n, std::vector<char>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            Int lo = a - b, hi = w.window[a] - w.window[b];
            // integer delta with lo < n delta < hi
            Int dmin = floor_div(lo, n) + 1;
            edge[a][b] = ck_mul(dmin, n) < hi;
        }
    std::size_t full = std::size_t(1) << n;
    // reach[mask] = bitset of possible path endpoints covering exactly mask
    std::vector<unsigned> reach(full, 0);
    std::vector<char> chain(full, 0);
    for (int a = 0; a < n; ++a) reach[std::size_t(1) << a] = 1u << a;
    for (std::size_t mask = 1; mask < full; ++mask) {
        unsigned ends = reach[mask];
        if (!ends) continue;
        chain[mask] = 1;
        for (int e = 0; e < n; ++e) {
            if (!(ends >> e & 1)) continue;
            for (int b = 0; b < n; ++b)
                if (!(mask >> b & 1) && edge[e][b]) reach[mask | (std::size_t(1) << b)] |= 1u << b;
        }
    }
    std::vector<char> cur(full, 0), next;
    cur[0] = 1;
    std::vector<int> d;
    int covered = 0;
    while (covered < n) {
        next = cur;
        for (std::size_t mask = 0; mask < full; ++mask) {
            if (!cur[mask]) continue;
            std::size_t rest = (full - 1) & ~mask;
            for (std::size_t sub = rest; sub; sub = (sub - 1) & rest)
                if (chain[sub]) next[mask | sub] = 1;
        }
        cur.swap(next);
        int best = 0;
        for (std::size_t mask = 0; mask < full; ++mask)
            if (cur[mask]) best = std::max(best, std::popcount(mask));
        d.push_back(best - covered);
        covered = best;
    }
    return transpose(normalize_partition(d));
}

OrbitCalibration calibrate_orbits(const AffineWeyl& aw) {
    const auto& d = require_gl(aw);
    int n = d.n();
    OrbitCalibration cal;
    cal.zero_weight_shape = ambc_shape(to_affine_permutation(aw, aw.min_coset_rep(d.zero())));
    Vec deep = vscale(-(2 * n + 2), d.rho());
    cal.antidominant_shape = ambc_shape(to_affine_permutation(aw, aw.min_coset_rep(deep)));
    Partition regular{n}, zero(n, 1);
    if (cal.zero_weight_shape == regular && cal.antidominant_shape == zero) {
        cal.d = Orientation::Identity;
    } else if (transpose(cal.zero_weight_shape) == regular && transpose(cal.antidominant_shape) == zero) {
        cal.d = Orientation::Transpose;
    } else {
        throw CalibrationError("cell shapes of the anchor weights match neither orientation: " +
                               partition_str(cal.zero_weight_shape) + ", " + partition_str(cal.antidominant_shape));
    }
    return cal;
}

Partition orbit_of_weight(const AffineWeyl& aw, const Vec& lam, const OrbitCalibration& cal) {
    Partition s = ambc_shape(to_affine_permutation(aw, aw.min_coset_rep(lam)));
    return cal.transposed() ? transpose(s) : s;
}

Partition orbit_of_weight(const AffineWeyl& aw, const Vec& lam) { return orbit_of_weight(aw, lam, calibrate_orbits(aw)); }

}  // namespace hs
