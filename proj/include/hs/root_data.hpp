#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hs/integer.hpp"

namespace hs {

struct PositiveRoot {
    Vec root;           // lattice coordinates
    Vec coroot;         // dual lattice coordinates
    Vec root_coeffs;    // in the simple roots
    Vec coroot_coeffs;  // in the simple coroots
    Int height = 0;
    Int coheight = 0;
};

// Element of the finite Weyl group, an index into the owning datum's tables.
struct WeylElement {
    int id = 0;
    bool operator==(const WeylElement& o) const { return id == o.id; }
    bool operator!=(const WeylElement& o) const { return id != o.id; }
    bool operator<(const WeylElement& o) const { return id < o.id; }
};

struct DominantData {
    Vec dom;
    WeylElement v;
    int delta = 0;
};

class RootDatum {
public:
    enum class Kind { GL, SL, Custom };

    static RootDatum GL(int n);
    static RootDatum SL(int n);
    static RootDatum from_cartan(const Mat& cartan);
    // key = value lines: type (GL|SL|custom), rank (n for GL_n/SL_n), cartan rows.
    static RootDatum parse_config(std::istream& in);
    static RootDatum load_config(const std::string& path);

    Kind kind() const { return kind_; }
    int rank() const { return static_cast<int>(cartan_.size()); }
    int dim() const { return dim_; }
    int n() const { return n_; }  // matrix size for GL/SL, 0 otherwise
    std::string key() const;

    const Mat& cartan() const { return cartan_; }
    const Vec& simple_root(int i) const { return simple_roots_.at(i); }
    const Vec& simple_coroot(int i) const { return simple_coroots_.at(i); }
    const std::vector<PositiveRoot>& positive_roots() const { return pos_; }
    // index of a positive root (>= 0), or -(index+1) for its negative; throws if not a root
    int root_index(const Vec& root) const;
    int highest_coroot_index() const { return highest_coroot_; }

    Int pairing(const Vec& coroot, const Vec& lambda) const;
    Vec reflect(int i, const Vec& lambda) const;
    bool is_dominant(const Vec& lambda) const;
    Vec rho() const;
    Vec zero() const { return Vec(dim_, 0); }

    // Finite Weyl group.
    std::size_t weyl_order() const { return mats_.size(); }
    WeylElement identity() const { return {0}; }
    WeylElement simple(int i) const { return {simple_ids_.at(i)}; }
    WeylElement longest_element() const { return {w0_}; }
    WeylElement mul(WeylElement a, WeylElement b) const;
    WeylElement inverse(WeylElement a) const { return {inv_[a.id]}; }
    WeylElement from_word(const std::vector<int>& word) const;
    WeylElement find(const Mat& m) const;
    WeylElement reflection(int root_idx) const;
    int length(WeylElement a) const { return len_[a.id]; }
    const std::vector<int>& word(WeylElement a) const { return words_[a.id]; }
    const Mat& matrix(WeylElement a) const { return mats_[a.id]; }
    // true iff a sends the positive root with this index to a negative root
    bool sends_negative(WeylElement a, int root_idx) const { return neg_[a.id][root_idx] != 0; }
    Vec act(WeylElement a, const Vec& lambda) const;
    std::vector<WeylElement> elements() const;

    DominantData dominant_data(const Vec& lambda) const;
    int delta(const Vec& lambda) const { return dominant_data(lambda).delta; }
    int delta_star(const Vec& lambda) const { return delta(act(longest_element(), lambda)); }

private:
    void build();

    Kind kind_ = Kind::Custom;
    int n_ = 0;
    int dim_ = 0;
    Mat cartan_;
    std::vector<Vec> simple_roots_, simple_coroots_;
    std::vector<PositiveRoot> pos_;
    std::map<Vec, int> root_lookup_;
    int highest_coroot_ = 0;

    std::vector<Mat> mats_;
    std::vector<std::vector<int>> words_;
    std::vector<int> len_, inv_, simple_ids_;
    std::vector<std::vector<char>> neg_;
    std::vector<int> table_;  // Cayley table when small enough
    std::map<Mat, int> lookup_;
    int w0_ = 0;
};

}  // namespace hs
