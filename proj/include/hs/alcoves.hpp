#pragma once

#include <vector>

#include "hs/affine_weyl.hpp"

namespace hs {

// Alcove w ._p C_p: offsets n_a with n_a p < <x+rho, a^vee> < (n_a+1) p, indexed like positive_roots().
struct AlcovePosition {
    ExtAffineElement element;
    Vec offsets;
};

struct BlockLabel {
    Vec lam;
    ExtAffineElement w;  // w_lam
    bool exact = false;  // mu == w_lam ._p 0
};

struct BlockLabelResult {
    std::vector<BlockLabel> labels;
    Int box = 0;
    bool box_exhausted = false;
};

// v t_nu ._p lam = v(lam + rho + p nu) - rho
Vec dot_act_p(const AffineWeyl& aw, const ExtAffineElement& w, const Vec& lam, Int p);
Vec alcove_offsets(const AffineWeyl& aw, const ExtAffineElement& w, Int p);
// Offsets of the half-open alcove containing mu (lower walls included).
Vec point_offsets(const RootDatum& d, const Vec& mu, Int p);
AlcovePosition alcove_of(const AffineWeyl& aw, const Vec& mu, Int p);
bool lower_closure_contains(const AffineWeyl& aw, const ExtAffineElement& w, const Vec& mu, Int p);

Int default_search_box(const RootDatum& d, const Vec& mu, Int p);
// All lam in [-box, box]^dim whose w_lam has mu in its lower closure. box < 0 selects the default.
BlockLabelResult block_labels(const AffineWeyl& aw, const Vec& mu, Int p, Int box = -1);

}  // namespace hs
