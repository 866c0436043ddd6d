#include "hs/affine_weyl.hpp"

#include <cstdlib>
#include <sstream>

#include "hs/errors.hpp"

namespace hs {

namespace {

// Row echelon form over Z with positive pivots and reduced entries above pivots.
void hermite(Mat rows, Mat& out, std::vector<int>& piv) {
    out.clear();
    piv.clear();
    if (rows.empty()) return;
    std::size_t m = rows[0].size();
    std::size_t top = 0;
    for (std::size_t c = 0; c < m && top < rows.size(); ++c) {
        // Euclid on column c among rows top..
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t r = top; r < rows.size(); ++r)
                if (rows[r][c] != 0 && (best == rows.size() || std::llabs(rows[r][c]) < std::llabs(rows[best][c]))) best = r;
            if (best == rows.size()) break;
            std::swap(rows[top], rows[best]);
            bool done = true;
            for (std::size_t r = top + 1; r < rows.size(); ++r) {
                if (rows[r][c] == 0) continue;
                Int q = floor_div(rows[r][c], rows[top][c]);
                rows[r] = vsub(rows[r], vscale(q, rows[top]));
                if (rows[r][c] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[top][c] == 0) continue;
        if (rows[top][c] < 0) rows[top] = vneg(rows[top]);
        for (std::size_t r = 0; r < top; ++r) {
            Int q = floor_div(rows[r][c], rows[top][c]);
            rows[r] = vsub(rows[r], vscale(q, rows[top]));
        }
        piv.push_back(static_cast<int>(c));
        ++top;
    }
    rows.resize(top);
    out = rows;
}

}  // namespace

AffineWeyl::AffineWeyl(const RootDatum& datum) : d_(datum) {
    Mat roots;
    for (int i = 0; i < d_.rank(); ++i) roots.push_back(d_.simple_root(i));
    hermite(roots, hnf_, piv_);
    if (d_.rank() > 0) {
        int t = d_.highest_coroot_index();
        s0_ = {d_.reflection(t), vneg(d_.positive_roots()[t].root)};
    } else {
        s0_ = identity();
    }
}

ExtAffineElement AffineWeyl::translation(const Vec& lam) const {
    if (static_cast<int>(lam.size()) != d_.dim()) throw InputError("weight has wrong dimension: " + vec_str(lam));
    return {d_.identity(), lam};
}

ExtAffineElement AffineWeyl::simple(int i) const {
    if (i < 0 || i > d_.rank()) throw InputError("affine simple reflection index out of range");
    if (i == 0) {
        if (d_.rank() == 0) throw InputError("no affine simple reflection in rank 0");
        return s0_;
    }
    return finite(d_.simple(i - 1));
}

ExtAffineElement AffineWeyl::mul(const ExtAffineElement& a, const ExtAffineElement& b) const {
    Vec lam = vadd(d_.act(d_.inverse(b.v), a.lam), b.lam);
    return {d_.mul(a.v, b.v), lam};
}

ExtAffineElement AffineWeyl::inverse(const ExtAffineElement& a) const {
    return {d_.inverse(a.v), vneg(d_.act(a.v, a.lam))};
}

ExtAffineElement AffineWeyl::from_word(const std::vector<int>& word) const {
    ExtAffineElement w = identity();
    for (int i : word) w = mul(w, simple(i));
    return w;
}

Vec AffineWeyl::act(const ExtAffineElement& w, const Vec& x) const { return d_.act(w.v, vadd(x, w.lam)); }

int AffineWeyl::length(const ExtAffineElement& w) const {
    Int total = 0;
    const auto& pos = d_.positive_roots();
    for (std::size_t j = 0; j < pos.size(); ++j) {
        Int k = dot(w.lam, pos[j].coroot);
        if (d_.sends_negative(w.v, static_cast<int>(j))) k = ck_add(k, 1);
        total = ck_add(total, std::llabs(k));
    }
    return static_cast<int>(total);
}

Vec AffineWeyl::reduce_mod_roots(const Vec& lam) const {
    Vec r = lam;
    for (std::size_t i = 0; i < hnf_.size(); ++i) {
        Int q = floor_div(r[piv_[i]], hnf_[i][piv_[i]]);
        if (q != 0) r = vsub(r, vscale(q, hnf_[i]));
    }
    return r;
}

Vec AffineWeyl::omega_label(const ExtAffineElement& w) const { return reduce_mod_roots(w.lam); }

CoxeterNormalForm AffineWeyl::coxeter_normal_form(const ExtAffineElement& w) const {
    CoxeterNormalForm nf;
    ExtAffineElement cur = w;
    int len = length(cur);
    while (len > 0) {
        bool found = false;
        for (int s = 0; s < num_simple(); ++s) {
            ExtAffineElement next = mul(simple(s), cur);
            int l2 = length(next);
            if (l2 < len) {
                nf.word.push_back(s);
                cur = next;
                len = l2;
                found = true;
                break;
            }
        }
        if (!found) throw InvariantBreach("no left descent for an element of positive length");
    }
    nf.omega = cur;
    nf.omega_label = omega_label(cur);
    return nf;
}

ExtAffineElement AffineWeyl::evaluate(const CoxeterNormalForm& nf) const { return mul(from_word(nf.word), nf.omega); }

ExtAffineElement AffineWeyl::min_coset_rep(const Vec& lam) const {
    ExtAffineElement cur = translation(lam);
    int len = length(cur);
    bool moved = true;
    while (moved) {
        moved = false;
        for (int s = 1; s <= d_.rank(); ++s) {
            ExtAffineElement next = mul(simple(s), cur);
            int l2 = length(next);
            if (l2 < len) {
                cur = next;
                len = l2;
                moved = true;
                break;
            }
        }
    }
    return cur;
}

bool AffineWeyl::bruhat_leq(const ExtAffineElement& u, const ExtAffineElement& w) const {
    if (u == w) return true;
    if (omega_label(u) != omega_label(w)) return false;
    int lu = length(u), lw = length(w);
    if (lu >= lw) return false;
    MemoKey key{u, w};
    {
        std::lock_guard<std::mutex> g(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    bool result = false;
    for (int s = 0; s < num_simple(); ++s) {
        ExtAffineElement sw = mul(simple(s), w);
        if (length(sw) >= lw) continue;
        ExtAffineElement su = mul(simple(s), u);
        if (length(su) < lu) result = bruhat_leq(su, sw);
        else result = bruhat_leq(u, sw);
        break;
    }
    std::lock_guard<std::mutex> g(mu_);
    memo_[key] = result;
    return result;
}

bool AffineWeyl::weight_leq(const Vec& lam, const Vec& mu) const {
    return bruhat_leq(min_coset_rep(lam), min_coset_rep(mu));
}

std::vector<std::pair<AffineWeyl::MemoKey, bool>> AffineWeyl::memo_snapshot() const {
    std::lock_guard<std::mutex> g(mu_);
    return {memo_.begin(), memo_.end()};
}

void AffineWeyl::memo_insert(const MemoKey& k, bool v) const {
    std::lock_guard<std::mutex> g(mu_);
    memo_[k] = v;
}

std::string AffineWeyl::str(const ExtAffineElement& w) const {
    std::ostringstream os;
    os << "[";
    const auto& word = d_.word(w.v);
    for (std::size_t i = 0; i < word.size(); ++i) os << (i ? " " : "") << word[i];
    os << "] t" << vec_str(w.lam);
    return os.str();
}

}  // namespace hs
