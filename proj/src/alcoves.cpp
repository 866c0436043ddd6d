#include "hs/alcoves.hpp"

#include <cstdlib>

#include "hs/errors.hpp"

namespace hs {

namespace {

void check_p(Int p) {
    if (p < 2) throw InputError("p must be at least 2");
}

Int distance(const Vec& a, const Vec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::llabs(a[i] - b[i]);
    return s;
}

}  // namespace

Vec dot_act_p(const AffineWeyl& aw, const ExtAffineElement& w, const Vec& lam, Int p) {
    check_p(p);
    const auto& d = aw.datum();
    Vec rho = d.rho();
    return vsub(d.act(w.v, vadd(vadd(lam, rho), vscale(p, w.lam))), rho);
}

Vec alcove_offsets(const AffineWeyl& aw, const ExtAffineElement& w, Int p) {
    check_p(p);
    const auto& d = aw.datum();
    Vec vnu = d.act(w.v, w.lam);
    WeylElement vinv = d.inverse(w.v);
    const auto& pos = d.positive_roots();
    Vec out(pos.size());
    for (std::size_t j = 0; j < pos.size(); ++j) {
        Int n = dot(vnu, pos[j].coroot);
        if (d.root_index(d.act(vinv, pos[j].root)) < 0) n -= 1;
        out[j] = n;
    }
    return out;
}

Vec point_offsets(const RootDatum& d, const Vec& mu, Int p) {
    check_p(p);
    Vec shifted = vadd(mu, d.rho());
    const auto& pos = d.positive_roots();
    Vec out(pos.size());
    for (std::size_t j = 0; j < pos.size(); ++j) out[j] = floor_div(d.pairing(pos[j].coroot, shifted), p);
    return out;
}

// Walk from C_p through walls, always towards the target alcove.
AlcovePosition alcove_of(const AffineWeyl& aw, const Vec& mu, Int p) {
    Vec target = point_offsets(aw.datum(), mu, p);
    ExtAffineElement w = aw.identity();
    Vec cur = alcove_offsets(aw, w, p);
    Int dist = distance(cur, target);
    while (dist > 0) {
        bool moved = false;
        for (int s = 0; s < aw.num_simple(); ++s) {
            ExtAffineElement next = aw.mul(w, aw.simple(s));
            Vec off = alcove_offsets(aw, next, p);
            Int d2 = distance(off, target);
            if (d2 < dist) {
                w = next;
                cur = off;
                dist = d2;
                moved = true;
                break;
            }
        }
        if (!moved) throw InvariantBreach("alcove walk got stuck");
    }
    return {w, cur};
}

bool lower_closure_contains(const AffineWeyl& aw, const ExtAffineElement& w, const Vec& mu, Int p) {
    return alcove_offsets(aw, w, p) == point_offsets(aw.datum(), mu, p);
}

Int default_search_box(const RootDatum& d, const Vec& mu, Int p) {
    check_p(p);
    Vec shifted = vadd(mu, d.rho());
    Int m = 0;
    for (auto& pr : d.positive_roots()) m = std::max(m, d.pairing(pr.coroot, shifted));
    return ceil_div(m, p) + 1;
}

BlockLabelResult block_labels(const AffineWeyl& aw, const Vec& mu, Int p, Int box) {
    const auto& d = aw.datum();
    if (!d.is_dominant(mu)) throw InputError("block labels need a dominant weight: " + vec_str(mu));
    BlockLabelResult res;
    res.box = box < 0 ? default_search_box(d, mu, p) : box;
    Vec target = point_offsets(d, mu, p);
    Vec lam(d.dim(), -res.box);
    while (true) {
        ExtAffineElement w = aw.min_coset_rep(lam);
        if (alcove_offsets(aw, w, p) == target) res.labels.push_back({lam, w, dot_act_p(aw, w, d.zero(), p) == mu});
        int i = d.dim() - 1;
        while (i >= 0 && lam[i] == res.box) lam[i--] = -res.box;
        if (i < 0) break;
        ++lam[i];
    }
    res.box_exhausted = res.labels.empty();
    return res;
}

}  // namespace hs
