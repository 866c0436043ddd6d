#pragma once

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "hs/root_data.hpp"

namespace hs {

// w = v t_lam, acting on X by x -> v(x + lam).
struct ExtAffineElement {
    WeylElement v;
    Vec lam;
    bool operator==(const ExtAffineElement& o) const { return v == o.v && lam == o.lam; }
    bool operator!=(const ExtAffineElement& o) const { return !(*this == o); }
    bool operator<(const ExtAffineElement& o) const {
        if (v != o.v) return v < o.v;
        return lam < o.lam;
    }
};

struct CoxeterNormalForm {
    std::vector<int> word;  // 0 is s_0, i >= 1 the finite simple reflection s_i
    ExtAffineElement omega;
    Vec omega_label;
};

class AffineWeyl {
public:
    // The datum must outlive this object.
    explicit AffineWeyl(const RootDatum& datum);

    const RootDatum& datum() const { return d_; }

    ExtAffineElement identity() const { return {d_.identity(), d_.zero()}; }
    ExtAffineElement translation(const Vec& lam) const;
    ExtAffineElement finite(WeylElement v) const { return {v, d_.zero()}; }
    ExtAffineElement simple(int i) const;  // i in [0, rank]
    int num_simple() const { return d_.rank() + 1; }

    ExtAffineElement mul(const ExtAffineElement& a, const ExtAffineElement& b) const;
    ExtAffineElement inverse(const ExtAffineElement& a) const;
    ExtAffineElement from_word(const std::vector<int>& word) const;
    // Affine action x -> v(x + lam) on integral points.
    Vec act(const ExtAffineElement& w, const Vec& x) const;

    int length(const ExtAffineElement& w) const;
    // Canonical representative of lam modulo the root lattice; equal labels = same component.
    Vec omega_label(const ExtAffineElement& w) const;
    Vec reduce_mod_roots(const Vec& lam) const;

    CoxeterNormalForm coxeter_normal_form(const ExtAffineElement& w) const;
    ExtAffineElement evaluate(const CoxeterNormalForm& nf) const;
    ExtAffineElement min_coset_rep(const Vec& lam) const;

    bool bruhat_leq(const ExtAffineElement& u, const ExtAffineElement& w) const;
    bool weight_leq(const Vec& lam, const Vec& mu) const;

    using MemoKey = std::pair<ExtAffineElement, ExtAffineElement>;
    std::vector<std::pair<MemoKey, bool>> memo_snapshot() const;
    void memo_insert(const MemoKey& k, bool v) const;

    std::string str(const ExtAffineElement& w) const;

private:
    const RootDatum& d_;
    Mat hnf_;               // echelon basis of the root lattice
    std::vector<int> piv_;  // pivot columns
    ExtAffineElement s0_;

    mutable std::mutex mu_;
    mutable std::map<MemoKey, bool> memo_;
};

}  // namespace hs
