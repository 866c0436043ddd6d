#include "hs/root_data.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

#include "hs/errors.hpp"

namespace hs {

namespace {

constexpr std::size_t kMaxRoots = 1000;
constexpr Int kMaxCoeff = 64;
constexpr std::size_t kMaxWeyl = 100000;
constexpr std::size_t kCayleyLimit = 1200;

Mat type_a_cartan(int r) {
    Mat c(r, Vec(r, 0));
    for (int i = 0; i < r; ++i) {
        c[i][i] = 2;
        if (i + 1 < r) c[i][i + 1] = c[i + 1][i] = -1;
    }
    return c;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

RootDatum RootDatum::GL(int n) {
    if (n < 1) throw InputError("GL_n needs n >= 1");
    RootDatum d;
    d.kind_ = Kind::GL;
    d.n_ = n;
    d.dim_ = n;
    d.cartan_ = type_a_cartan(n - 1);
    for (int i = 0; i + 1 < n; ++i) {
        Vec a(n, 0);
        a[i] = 1;
        a[i + 1] = -1;
        d.simple_roots_.push_back(a);
        d.simple_coroots_.push_back(a);
    }
    d.build();
    return d;
}

RootDatum RootDatum::SL(int n) {
    if (n < 2) throw InputError("SL_n needs n >= 2");
    RootDatum d = from_cartan(type_a_cartan(n - 1));
    d.kind_ = Kind::SL;
    d.n_ = n;
    return d;
}

// Fundamental weight coordinates: coroot s is e_s, root t has coordinates cartan[.][t].
RootDatum RootDatum::from_cartan(const Mat& cartan) {
    int r = static_cast<int>(cartan.size());
    if (r == 0) throw InputError("empty Cartan matrix");
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(cartan[i].size()) != r) throw InputError("Cartan matrix is not square");
        if (cartan[i][i] != 2) throw InputError("Cartan matrix needs 2 on the diagonal");
        for (int j = 0; j < r; ++j) {
            if (i == j) continue;
            if (cartan[i][j] > 0) throw InputError("Cartan matrix has a positive off-diagonal entry");
            if ((cartan[i][j] == 0) != (cartan[j][i] == 0)) throw InputError("Cartan matrix zero pattern is not symmetric");
        }
    }
    RootDatum d;
    d.kind_ = Kind::Custom;
    d.dim_ = r;
    d.cartan_ = cartan;
    for (int t = 0; t < r; ++t) {
        Vec a(r), c(r, 0);
        for (int s = 0; s < r; ++s) a[s] = cartan[s][t];
        c[t] = 1;
        d.simple_roots_.push_back(a);
        d.simple_coroots_.push_back(c);
    }
    d.build();
    return d;
}

RootDatum RootDatum::parse_config(std::istream& in) {
    std::string type;
    int rank = -1;
    Mat cartan;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw InputError("line " + std::to_string(lineno) + ": expected key = value");
        std::string k = trim(line.substr(0, eq)), v = trim(line.substr(eq + 1));
        if (k == "type") {
            type = v;
        } else if (k == "rank" || k == "n") {
            try {
                rank = std::stoi(v);
            } catch (const std::exception&) {
                throw InputError("line " + std::to_string(lineno) + ": bad rank");
            }
        } else if (k == "cartan") {
            cartan.push_back(parse_vec(v));
        } else {
            throw InputError("line " + std::to_string(lineno) + ": unknown key " + k);
        }
    }
    std::transform(type.begin(), type.end(), type.begin(), ::tolower);
    if (type == "gl") {
        if (rank < 1) throw InputError("GL needs rank = n");
        return GL(rank);
    }
    if (type == "sl") {
        if (rank < 2) throw InputError("SL needs rank = n >= 2");
        return SL(rank);
    }
    if (type == "custom") {
        if (rank >= 0 && rank != static_cast<int>(cartan.size())) throw InputError("rank does not match Cartan matrix");
        return from_cartan(cartan);
    }
    throw InputError("type must be GL, SL or custom");
}

RootDatum RootDatum::load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open " + path);
    return parse_config(f);
}

std::string RootDatum::key() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::GL: os << "GL" << n_; break;
        case Kind::SL: os << "SL" << n_; break;
        case Kind::Custom:
            os << "C";
            for (auto& row : cartan_) os << vec_str(row);
            break;
    }
    return os.str();
}

void RootDatum::build() {
    int r = rank();
    // Positive roots by reflection closure, in simple root coordinates.
    std::vector<std::pair<Vec, Vec>> found;  // (root coeffs, coroot coeffs)
    std::map<Vec, int> seen;
    std::deque<int> queue;
    for (int i = 0; i < r; ++i) {
        Vec e(r, 0);
        e[i] = 1;
        seen[e] = static_cast<int>(found.size());
        queue.push_back(static_cast<int>(found.size()));
        found.push_back({e, e});
    }
    while (!queue.empty()) {
        auto [c, d] = found[queue.front()];
        queue.pop_front();
        for (int i = 0; i < r; ++i) {
            Int a = 0, b = 0;  // <alpha_i^vee, beta>, <beta^vee, alpha_i>
            for (int j = 0; j < r; ++j) {
                a = ck_add(a, ck_mul(c[j], cartan_[i][j]));
                b = ck_add(b, ck_mul(d[j], cartan_[j][i]));
            }
            Vec c2 = c, d2 = d;
            c2[i] = ck_sub(c2[i], a);
            d2[i] = ck_sub(d2[i], b);
            if (std::any_of(c2.begin(), c2.end(), [](Int x) { return x < 0; })) continue;
            if (std::any_of(c2.begin(), c2.end(), [](Int x) { return x > kMaxCoeff; }))
                throw InputError("Cartan matrix is not of finite type");
            if (seen.count(c2)) continue;
            seen[c2] = static_cast<int>(found.size());
            queue.push_back(static_cast<int>(found.size()));
            found.push_back({c2, d2});
            if (found.size() > kMaxRoots) throw InputError("Cartan matrix is not of finite type");
        }
    }
    std::stable_sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
        Int hx = 0, hy = 0;
        for (Int v : x.first) hx += v;
        for (Int v : y.first) hy += v;
        if (hx != hy) return hx < hy;
        return x.first > y.first;
    });
    pos_.clear();
    root_lookup_.clear();
    for (auto& [c, d] : found) {
        PositiveRoot pr;
        pr.root = Vec(dim_, 0);
        pr.coroot = Vec(dim_, 0);
        for (int j = 0; j < r; ++j) {
            pr.root = vadd(pr.root, vscale(c[j], simple_roots_[j]));
            pr.coroot = vadd(pr.coroot, vscale(d[j], simple_coroots_[j]));
            pr.height += c[j];
            pr.coheight += d[j];
        }
        pr.root_coeffs = c;
        pr.coroot_coeffs = d;
        root_lookup_[pr.root] = static_cast<int>(pos_.size());
        pos_.push_back(pr);
    }
    highest_coroot_ = 0;
    for (int j = 0; j < static_cast<int>(pos_.size()); ++j)
        if (pos_[j].coheight > pos_[highest_coroot_].coheight) highest_coroot_ = j;

    // Weyl group by breadth-first search on right multiplication by simple reflections.
    std::vector<Mat> sm(r);
    for (int i = 0; i < r; ++i) {
        Mat m = mat_identity(dim_);
        for (int a = 0; a < dim_; ++a)
            for (int b = 0; b < dim_; ++b)
                m[a][b] = ck_sub(m[a][b], ck_mul(simple_roots_[i][a], simple_coroots_[i][b]));
        sm[i] = m;
    }
    mats_ = {mat_identity(dim_)};
    words_ = {{}};
    lookup_ = {{mats_[0], 0}};
    for (std::size_t k = 0; k < mats_.size(); ++k) {
        for (int i = 0; i < r; ++i) {
            Mat m = mat_mul(mats_[k], sm[i]);
            if (lookup_.count(m)) continue;
            lookup_[m] = static_cast<int>(mats_.size());
            mats_.push_back(m);
            auto w = words_[k];
            w.push_back(i + 1);
            words_.push_back(w);
            if (mats_.size() > kMaxWeyl) throw InputError("Weyl group too large");
        }
    }
    std::size_t N = mats_.size();
    len_.resize(N);
    for (std::size_t k = 0; k < N; ++k) len_[k] = static_cast<int>(words_[k].size());
    simple_ids_.resize(r);
    for (int i = 0; i < r; ++i) simple_ids_[i] = lookup_.at(sm[i]);
    table_.clear();
    if (N <= kCayleyLimit) {
        table_.resize(N * N);
        for (std::size_t a = 0; a < N; ++a)
            for (std::size_t b = 0; b < N; ++b) table_[a * N + b] = lookup_.at(mat_mul(mats_[a], mats_[b]));
    }
    inv_.resize(N);
    for (std::size_t k = 0; k < N; ++k) {
        auto w = words_[k];
        std::reverse(w.begin(), w.end());
        inv_[k] = from_word(w).id;
    }
    neg_.assign(N, std::vector<char>(pos_.size(), 0));
    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t j = 0; j < pos_.size(); ++j) neg_[k][j] = root_index(mat_apply(mats_[k], pos_[j].root)) < 0;
    w0_ = 0;
    for (std::size_t k = 0; k < N; ++k)
        if (len_[k] > len_[w0_]) w0_ = static_cast<int>(k);
}

int RootDatum::root_index(const Vec& root) const {
    auto it = root_lookup_.find(root);
    if (it != root_lookup_.end()) return it->second;
    it = root_lookup_.find(vneg(root));
    if (it != root_lookup_.end()) return -(it->second + 1);
    throw InvariantBreach("not a root: " + vec_str(root));
}

Int RootDatum::pairing(const Vec& coroot, const Vec& lambda) const {
    if (static_cast<int>(lambda.size()) != dim_) throw InputError("weight has wrong dimension: " + vec_str(lambda));
    return dot(coroot, lambda);
}

Vec RootDatum::reflect(int i, const Vec& lambda) const {
    return vsub(lambda, vscale(pairing(simple_coroots_.at(i), lambda), simple_roots_.at(i)));
}

bool RootDatum::is_dominant(const Vec& lambda) const {
    for (int i = 0; i < rank(); ++i)
        if (pairing(simple_coroots_[i], lambda) < 0) return false;
    return true;
}

Vec RootDatum::rho() const {
    if (kind_ == Kind::GL) {
        Vec r(n_);
        for (int i = 0; i < n_; ++i) r[i] = n_ - 1 - i;
        return r;
    }
    return Vec(dim_, 1);
}

WeylElement RootDatum::mul(WeylElement a, WeylElement b) const {
    std::size_t N = mats_.size();
    if (!table_.empty()) return {table_[a.id * N + b.id]};
    return find(mat_mul(mats_[a.id], mats_[b.id]));
}

WeylElement RootDatum::from_word(const std::vector<int>& word) const {
    Mat m = mat_identity(dim_);
    for (int i : word) {
        if (i < 1 || i > rank()) throw InputError("simple reflection index out of range: " + std::to_string(i));
        m = mat_mul(m, mats_[simple_ids_[i - 1]]);
    }
    return find(m);
}

WeylElement RootDatum::find(const Mat& m) const {
    auto it = lookup_.find(m);
    if (it == lookup_.end()) throw InvariantBreach("matrix is not in the Weyl group");
    return {it->second};
}

WeylElement RootDatum::reflection(int root_idx) const {
    const auto& pr = pos_.at(root_idx);
    Mat m = mat_identity(dim_);
    for (int a = 0; a < dim_; ++a)
        for (int b = 0; b < dim_; ++b) m[a][b] = ck_sub(m[a][b], ck_mul(pr.root[a], pr.coroot[b]));
    return find(m);
}

Vec RootDatum::act(WeylElement a, const Vec& lambda) const {
    if (static_cast<int>(lambda.size()) != dim_) throw InputError("weight has wrong dimension: " + vec_str(lambda));
    return mat_apply(mats_[a.id], lambda);
}

std::vector<WeylElement> RootDatum::elements() const {
    std::vector<WeylElement> r(mats_.size());
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = {static_cast<int>(k)};
    return r;
}

// Greedy descent: reflect in any wall with negative pairing until dominant.
DominantData RootDatum::dominant_data(const Vec& lambda) const {
    Vec cur = lambda;
    std::vector<int> applied;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < rank(); ++i) {
            if (pairing(simple_coroots_[i], cur) < 0) {
                cur = reflect(i, cur);
                applied.push_back(i + 1);
                moved = true;
                break;
            }
        }
    }
    std::reverse(applied.begin(), applied.end());
    WeylElement v = from_word(applied);
    // delta = number of positive roots with <lambda, alpha^vee> < 0
    int delta = 0;
    for (auto& pr : pos_)
        if (dot(pr.coroot, lambda) < 0) ++delta;
    return {cur, v, delta};
}

}  // namespace hs
