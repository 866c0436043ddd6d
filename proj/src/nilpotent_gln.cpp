#include "hs/nilpotent_gln.hpp"

#include <algorithm>
#include <set>

#include "hs/errors.hpp"

namespace hs {

namespace {

mpz_class binom(int n, int k) {
    mpz_class r;
    if (k < 0 || k > n) return 0;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::vector<int> levi_blocks(const std::vector<int>& I, int n) {
    std::set<int> in(I.begin(), I.end());
    for (int s : in)
        if (s < 1 || s >= n) throw InputError("simple reflection index out of range: " + std::to_string(s));
    std::vector<int> blocks;
    int cur = 1;
    for (int i = 1; i < n; ++i) {
        if (in.count(i)) {
            ++cur;
        } else {
            blocks.push_back(cur);
            cur = 1;
        }
    }
    blocks.push_back(cur);
    return blocks;
}

}  // namespace

std::vector<RankCondition> RankConditions::conditions() const {
    std::vector<RankCondition> out;
    for (auto& c : all)
        if (!c.vacuous_on_N) out.push_back(c);
    return out;
}

Partition richardson_orbit(const std::vector<int>& I, int n) {
    if (n < 1) throw InputError("n must be positive");
    return transpose(normalize_partition(levi_blocks(I, n)));
}

int nilradical_dim(const std::vector<int>& I, int n) {
    int levi = 0;
    for (int b : levi_blocks(I, n)) levi += b * (b - 1) / 2;
    return n * (n - 1) / 2 - levi;
}

int orbit_dim(const Partition& lam) {
    int n = partition_size(lam);
    int s = 0;
    for (int c : transpose(lam)) s += c * c;
    return n * n - s;
}

int jordan_power_rank(const Partition& mu, int k) {
    int r = partition_size(mu);
    Partition t = transpose(mu);
    for (int j = 0; j < k && j < static_cast<int>(t.size()); ++j) r -= t[j];
    return r;
}

RankConditions rank_conditions(const Partition& lam) {
    RankConditions rc;
    rc.n = partition_size(lam);
    rc.lam = lam;
    int n = rc.n;
    for (int k = 1; k < n; ++k) {
        RankCondition c;
        c.k = k;
        c.r = jordan_power_rank(lam, k);
        c.generators = binom(n, c.r + 1) * binom(n, c.r + 1);
        rc.all.push_back(c);
    }
    // Nilpotent orbits are classified by partitions, so redundancy can be decided over them.
    auto parts = partitions_of(n);
    for (int idx = static_cast<int>(rc.all.size()) - 1; idx >= 0; --idx) {
        bool implied = true;
        for (auto& mu : parts) {
            bool ok = true;
            for (int j = 0; j < static_cast<int>(rc.all.size()) && ok; ++j)
                if (j != idx && !rc.all[j].vacuous_on_N && jordan_power_rank(mu, rc.all[j].k) > rc.all[j].r) ok = false;
            if (ok && jordan_power_rank(mu, rc.all[idx].k) > rc.all[idx].r) {
                implied = false;
                break;
            }
        }
        rc.all[idx].vacuous_on_N = implied;
    }
    return rc;
}

QMat jordan_matrix(const Partition& mu) {
    int n = partition_size(mu);
    QMat m(n, std::vector<mpq_class>(n, 0));
    int off = 0;
    for (int b : mu) {
        for (int i = 0; i + 1 < b; ++i) m[off + i][off + i + 1] = 1;
        off += b;
    }
    return m;
}

QMat qmat_mul(const QMat& a, const QMat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    QMat r(n, std::vector<mpq_class>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    return r;
}

int qrank(QMat m) {
    int rank = 0;
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
        std::size_t piv = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            mpq_class f = m[r][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

bool contains_point(const Partition& lam, const QMat& x) {
    int n = static_cast<int>(x.size());
    for (auto& row : x)
        if (static_cast<int>(row.size()) != n) throw InputError("matrix is not square");
    if (n != partition_size(lam)) throw InputError("matrix size does not match the partition");
    if (n == 0) return true;
    QMat pw = x;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) pw = qmat_mul(pw, x);
        int bound = k < n ? jordan_power_rank(lam, k) : 0;
        if (qrank(pw) > bound) return false;
    }
    return true;
}

}  // namespace hs
