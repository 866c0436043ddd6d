#pragma once

#include <gmpxx.h>

#include <vector>

#include "hs/partition.hpp"

namespace hs {

using QMat = std::vector<std::vector<mpq_class>>;

struct RankCondition {
    int k = 0;       // power of X
    int r = 0;       // rank(X^k) <= r
    mpz_class generators;  // number of (r+1)-minors of X^k
    bool vacuous_on_N = false;  // implied by X^n = 0 and the other kept conditions
};

struct RankConditions {
    int n = 0;
    Partition lam;
    std::vector<RankCondition> all;  // k = 1 .. n-1

    std::vector<RankCondition> conditions() const;  // the non-vacuous ones
};

// Orbit closure of G.n_I; I holds simple reflection indices in [1, n-1].
Partition richardson_orbit(const std::vector<int>& I, int n);
int nilradical_dim(const std::vector<int>& I, int n);
int orbit_dim(const Partition& lam);
// rank of J_mu^k
int jordan_power_rank(const Partition& mu, int k);
RankConditions rank_conditions(const Partition& lam);

QMat jordan_matrix(const Partition& mu);
QMat qmat_mul(const QMat& a, const QMat& b);
int qrank(QMat m);
bool contains_point(const Partition& lam, const QMat& x);

}  // namespace hs
