#pragma once

#include <vector>

#include "hs/affine_weyl.hpp"
#include "hs/partition.hpp"

namespace hs {

// Window [w(1), ..., w(n)] of a bijection of Z with w(i + n) = w(i) + n.
struct AffinePermutation {
    int n = 0;
    Vec window;

    Int operator()(Int i) const;  // any integer i
    bool operator==(const AffinePermutation& o) const { return n == o.n && window == o.window; }
};

AffinePermutation make_affine_permutation(const Vec& window);  // validates residues
AffinePermutation compose(const AffinePermutation& a, const AffinePermutation& b);  // a after b
AffinePermutation inverse(const AffinePermutation& w);

// v t_lam -> (i -> v(i) + n lam_i); needs the GL_n datum.
AffinePermutation to_affine_permutation(const AffineWeyl& aw, const ExtAffineElement& w);

// Two-sided cell of w as a partition of n. Agrees with the Robinson-Schensted shape on S_n.
Partition ambc_shape(const AffinePermutation& w);

enum class Orientation { Identity, Transpose };

struct OrbitCalibration {
    Orientation d = Orientation::Identity;
    Partition zero_weight_shape;
    Partition antidominant_shape;
    bool transposed() const { return d == Orientation::Transpose; }
};

// Pins d with the anchors 0 -> (n) and deep antidominant regular -> (1^n).
OrbitCalibration calibrate_orbits(const AffineWeyl& aw);
Partition orbit_of_weight(const AffineWeyl& aw, const Vec& lam, const OrbitCalibration& cal);
Partition orbit_of_weight(const AffineWeyl& aw, const Vec& lam);

}  // namespace hs
