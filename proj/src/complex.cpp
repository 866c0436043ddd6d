#include "hs/complex.hpp"

#include <set>
#include <sstream>

#include "hs/errors.hpp"

namespace hs {

bool AMat::is_zero() const {
    for (auto& x : e)
        if (!x.empty()) return false;
    return true;
}

AMat amat_mul(const QuiverAlgebra& A, const AMat& x, const AMat& y) {
    if (x.cols != y.rows) throw InvariantBreach("matrix shape mismatch in product");
    AMat out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const AElt& a = x.at(i, k);
            if (a.empty()) continue;
            for (int j = 0; j < y.cols; ++j) {
                const AElt& b = y.at(k, j);
                if (b.empty()) continue;
                out.at(i, j) = A.add(out.at(i, j), A.mul(a, b));
            }
        }
    return out;
}

AMat amat_add(const QuiverAlgebra& A, const AMat& x, const AMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw InvariantBreach("matrix shape mismatch in sum");
    AMat out(x.rows, x.cols);
    for (std::size_t i = 0; i < x.e.size(); ++i) out.e[i] = A.add(x.e[i], y.e[i]);
    return out;
}

AMat amat_scale(const QuiverAlgebra& A, const AMat& x, const mpq_class& c) {
    AMat out(x.rows, x.cols);
    for (std::size_t i = 0; i < x.e.size(); ++i) out.e[i] = A.scale(x.e[i], c);
    return out;
}

AMat amat_identity(const QuiverAlgebra& A, const std::vector<Summand>& s) {
    int n = static_cast<int>(s.size());
    AMat out(n, n);
    for (int i = 0; i < n; ++i) out.at(i, i) = A.unit(s[i].vertex);
    return out;
}

bool ProjComplex::is_zero() const {
    for (auto& t : terms)
        if (!t.empty()) return false;
    return true;
}

const std::vector<Summand>& ProjComplex::term(Int deg) const {
    static const std::vector<Summand> none;
    if (terms.empty() || deg < lo || deg > hi()) return none;
    return terms[deg - lo];
}

AMat ProjComplex::diff(Int deg) const {
    if (!terms.empty() && deg >= lo && deg < hi()) return d[deg - lo];
    return AMat(static_cast<int>(term(deg + 1).size()), static_cast<int>(term(deg).size()));
}

std::size_t ProjComplex::total_rank() const {
    std::size_t n = 0;
    for (auto& t : terms) n += t.size();
    return n;
}

void ProjComplex::trim() {
    while (!terms.empty() && terms.back().empty()) {
        terms.pop_back();
        if (!d.empty()) d.pop_back();
    }
    while (!terms.empty() && terms.front().empty()) {
        terms.erase(terms.begin());
        if (!d.empty()) d.erase(d.begin());
        ++lo;
    }
    if (terms.empty()) {
        d.clear();
        lo = 0;
    }
}

void ProjComplex::validate() const {
    if (!alg) throw InputError("complex has no algebra");
    if (terms.empty()) {
        if (!d.empty()) throw InputError("differentials on an empty complex");
        return;
    }
    if (d.size() + 1 != terms.size()) throw InputError("need one differential between consecutive terms");
    for (std::size_t j = 0; j + 1 < terms.size(); ++j) {
        const AMat& m = d[j];
        if (m.rows != static_cast<int>(terms[j + 1].size()) || m.cols != static_cast<int>(terms[j].size()))
            throw InputError("differential " + std::to_string(lo + static_cast<Int>(j)) + " has the wrong shape");
        for (int r = 0; r < m.rows; ++r)
            for (int c = 0; c < m.cols; ++c)
                for (auto& [b, x] : m.at(r, c)) {
                    const auto& p = alg->basis(b);
                    const Summand &tr = terms[j + 1][r], &sc = terms[j][c];
                    if (p.src != tr.vertex || p.dst != sc.vertex || p.degree != tr.twist - sc.twist)
                        throw InputError("differential entry " + alg->path_str(b) + " has the wrong endpoints or degree");
                }
    }
    for (std::size_t j = 0; j + 2 < terms.size(); ++j)
        if (!amat_mul(*alg, d[j + 1], d[j]).is_zero()) throw InputError("d^2 != 0");
}

std::string ProjComplex::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    for (std::size_t j = 0; j < terms.size(); ++j) {
        if (j) out << " -> ";
        out << "[" << lo + static_cast<Int>(j) << ":";
        if (terms[j].empty()) out << " 0";
        for (auto& s : terms[j]) {
            out << " P" << alg->vertex_name(s.vertex);
            if (s.twist) out << "<" << s.twist << ">";
        }
        out << "]";
    }
    return out.str();
}

nlohmann::json ProjComplex::to_json() const {
    nlohmann::json j;
    j["lo"] = lo;
    j["terms"] = nlohmann::json::array();
    for (auto& t : terms) {
        auto arr = nlohmann::json::array();
        for (auto& s : t) arr.push_back({{"vertex", alg->vertex_name(s.vertex)}, {"twist", s.twist}});
        j["terms"].push_back(arr);
    }
    j["d"] = nlohmann::json::array();
    for (auto& m : d) {
        auto rows = nlohmann::json::array();
        for (int r = 0; r < m.rows; ++r) {
            auto row = nlohmann::json::array();
            for (int c = 0; c < m.cols; ++c) {
                auto entry = nlohmann::json::array();
                for (auto& [b, x] : m.at(r, c)) entry.push_back({{"path", alg->path_str(b)}, {"coeff", x.get_str()}});
                row.push_back(entry);
            }
            rows.push_back(row);
        }
        j["d"].push_back(rows);
    }
    return j;
}

ProjComplex stalk(AlgebraPtr alg, int vertex, Int deg, Int tw) {
    if (vertex < 0 || vertex >= alg->num_vertices()) throw InputError("vertex out of range");
    ProjComplex X;
    X.alg = std::move(alg);
    X.lo = deg;
    X.terms = {{Summand{vertex, tw}}};
    return X;
}

ProjComplex zero_complex(AlgebraPtr alg) {
    ProjComplex X;
    X.alg = std::move(alg);
    return X;
}

ProjComplex shift(const ProjComplex& X, Int i) {
    ProjComplex Y = X;
    Y.lo = X.lo - i;
    if (i % 2 != 0)
        for (auto& m : Y.d) m = amat_scale(*X.alg, m, -1);
    if (Y.terms.empty()) Y.lo = 0;
    return Y;
}

ProjComplex twist(const ProjComplex& X, Int k) {
    ProjComplex Y = X;
    for (auto& t : Y.terms)
        for (auto& s : t) s.twist += k;
    return Y;
}

namespace {

AMat block_diag(const AMat& a, const AMat& b) {
    AMat out(a.rows + b.rows, a.cols + b.cols);
    for (int r = 0; r < a.rows; ++r)
        for (int c = 0; c < a.cols; ++c) out.at(r, c) = a.at(r, c);
    for (int r = 0; r < b.rows; ++r)
        for (int c = 0; c < b.cols; ++c) out.at(a.rows + r, a.cols + c) = b.at(r, c);
    return out;
}

void check_same_alg(const ProjComplex& X, const ProjComplex& Y) {
    if (X.alg != Y.alg) throw InputError("complexes over different algebras");
}

}  // namespace

ProjComplex direct_sum(const ProjComplex& X, const ProjComplex& Y) {
    check_same_alg(X, Y);
    if (X.terms.empty()) return Y;
    if (Y.terms.empty()) return X;
    Int lo = std::min(X.lo, Y.lo), hi = std::max(X.hi(), Y.hi());
    ProjComplex S;
    S.alg = X.alg;
    S.lo = lo;
    for (Int j = lo; j <= hi; ++j) {
        auto t = X.term(j);
        auto& u = Y.term(j);
        t.insert(t.end(), u.begin(), u.end());
        S.terms.push_back(std::move(t));
    }
    for (Int j = lo; j < hi; ++j) S.d.push_back(block_diag(X.diff(j), Y.diff(j)));
    return S;
}

ProjComplex direct_sum(const std::vector<ProjComplex>& xs, AlgebraPtr alg) {
    ProjComplex S = zero_complex(std::move(alg));
    for (auto& x : xs) S = direct_sum(S, x);
    return S;
}

bool same_complex(const ProjComplex& X, const ProjComplex& Y) {
    if (X.alg != Y.alg) return false;
    Int lo = std::min(X.is_zero() ? 0 : X.lo, Y.is_zero() ? 0 : Y.lo);
    Int hi = std::max(X.is_zero() ? 0 : X.hi(), Y.is_zero() ? 0 : Y.hi());
    for (Int j = lo; j <= hi; ++j) {
        if (X.term(j) != Y.term(j)) return false;
        if (!(X.diff(j) == Y.diff(j))) return false;
    }
    return true;
}

AMat ChainMap::at(Int deg) const {
    if (!src.terms.empty() && deg >= src.lo && deg <= src.hi()) return comp[deg - src.lo];
    return AMat(static_cast<int>(tgt.term(deg).size()), static_cast<int>(src.term(deg).size()));
}

bool ChainMap::is_chain_map() const {
    if (src.alg != tgt.alg) return false;
    if (comp.size() != src.terms.size()) return false;
    for (std::size_t j = 0; j < comp.size(); ++j) {
        Int deg = src.lo + static_cast<Int>(j);
        if (comp[j].rows != static_cast<int>(tgt.term(deg).size()) || comp[j].cols != static_cast<int>(src.terms[j].size()))
            return false;
    }
    if (src.terms.empty()) return true;
    const auto& A = *src.alg;
    Int lo = std::min(src.lo, tgt.terms.empty() ? src.lo : tgt.lo) - 1;
    Int hi = std::max(src.hi(), tgt.terms.empty() ? src.hi() : tgt.hi());
    for (Int deg = lo; deg <= hi; ++deg) {
        AMat a = amat_mul(A, tgt.diff(deg), at(deg));
        AMat b = amat_mul(A, at(deg + 1), src.diff(deg));
        if (!(amat_add(A, a, amat_scale(A, b, -1)).is_zero())) return false;
    }
    return true;
}

bool ChainMap::is_zero() const {
    for (auto& m : comp)
        if (!m.is_zero()) return false;
    return true;
}

ChainMap zero_map(const ProjComplex& X, const ProjComplex& Y) {
    check_same_alg(X, Y);
    ChainMap f{X, Y, {}};
    for (std::size_t j = 0; j < X.terms.size(); ++j)
        f.comp.emplace_back(static_cast<int>(Y.term(X.lo + static_cast<Int>(j)).size()), static_cast<int>(X.terms[j].size()));
    return f;
}

ChainMap identity_map(const ProjComplex& X) {
    ChainMap f{X, X, {}};
    for (auto& t : X.terms) f.comp.push_back(amat_identity(*X.alg, t));
    return f;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    if (f.tgt.alg != g.src.alg || f.src.alg != g.tgt.alg) throw InputError("maps over different algebras");
    if (!same_complex(f.tgt, g.src)) throw InputError("composing maps whose middle objects differ");
    ChainMap h{f.src, g.tgt, {}};
    for (std::size_t j = 0; j < f.src.terms.size(); ++j) {
        Int deg = f.src.lo + static_cast<Int>(j);
        h.comp.push_back(amat_mul(*f.src.alg, g.at(deg), f.comp[j]));
    }
    return h;
}

ChainMap map_add(const ChainMap& f, const ChainMap& g) {
    if (!same_complex(f.src, g.src) || !same_complex(f.tgt, g.tgt)) throw InputError("adding maps with different endpoints");
    ChainMap h = f;
    for (std::size_t j = 0; j < h.comp.size(); ++j) h.comp[j] = amat_add(*f.src.alg, f.comp[j], g.comp[j]);
    return h;
}

ChainMap map_scale(const ChainMap& f, const mpq_class& c) {
    ChainMap h = f;
    for (auto& m : h.comp) m = amat_scale(*f.src.alg, m, c);
    return h;
}

ChainMap shift_map(const ChainMap& f, Int i) {
    ChainMap h{shift(f.src, i), shift(f.tgt, i), f.comp};
    return h;
}

ChainMap twist_map(const ChainMap& f, Int k) {
    ChainMap h{twist(f.src, k), twist(f.tgt, k), f.comp};
    return h;
}

ChainMap row_map(const std::vector<ChainMap>& fs, const ProjComplex& Y) {
    if (fs.empty()) return zero_map(zero_complex(Y.alg), Y);
    ProjComplex S = zero_complex(Y.alg);
    for (auto& f : fs) {
        if (!same_complex(f.tgt, Y)) throw InputError("row map targets differ");
        S = direct_sum(S, f.src);
    }
    ChainMap h = zero_map(S, Y);
    for (std::size_t j = 0; j < S.terms.size(); ++j) {
        Int deg = S.lo + static_cast<Int>(j);
        int col = 0;
        for (auto& f : fs) {
            AMat m = f.at(deg);
            for (int r = 0; r < m.rows; ++r)
                for (int c = 0; c < m.cols; ++c) h.comp[j].at(r, col + c) = m.at(r, c);
            col += m.cols;
        }
    }
    return h;
}

Cone cone(const ChainMap& f) {
    const ProjComplex &X = f.src, &Y = f.tgt;
    check_same_alg(X, Y);
    if (!f.is_chain_map()) throw InputError("cone of something that is not a chain map");
    const auto& A = *X.alg;
    Cone out;
    ProjComplex& C = out.C;
    C.alg = X.alg;
    if (X.terms.empty() && Y.terms.empty()) {
        out.incl = zero_map(Y, C);
        out.proj = zero_map(C, shift(X, 1));
        return out;
    }
    Int lo = Y.terms.empty() ? X.lo - 1 : (X.terms.empty() ? Y.lo : std::min(Y.lo, X.lo - 1));
    Int hi = Y.terms.empty() ? X.hi() - 1 : (X.terms.empty() ? Y.hi() : std::max(Y.hi(), X.hi() - 1));
    C.lo = lo;
    for (Int j = lo; j <= hi; ++j) {
        auto t = Y.term(j);
        auto& u = X.term(j + 1);
        t.insert(t.end(), u.begin(), u.end());
        C.terms.push_back(std::move(t));
    }
    for (Int j = lo; j < hi; ++j) {
        AMat dy = Y.diff(j), fx = f.at(j + 1), dx = amat_scale(A, X.diff(j + 1), -1);
        int ry = static_cast<int>(Y.term(j + 1).size()), cy = static_cast<int>(Y.term(j).size());
        AMat m(static_cast<int>(C.terms[j - lo + 1].size()), static_cast<int>(C.terms[j - lo].size()));
        for (int r = 0; r < dy.rows; ++r)
            for (int c = 0; c < dy.cols; ++c) m.at(r, c) = dy.at(r, c);
        for (int r = 0; r < fx.rows; ++r)
            for (int c = 0; c < fx.cols; ++c) m.at(r, cy + c) = fx.at(r, c);
        for (int r = 0; r < dx.rows; ++r)
            for (int c = 0; c < dx.cols; ++c) m.at(ry + r, cy + c) = dx.at(r, c);
        C.d.push_back(std::move(m));
    }
    out.incl = zero_map(Y, C);
    for (std::size_t j = 0; j < Y.terms.size(); ++j)
        for (int i = 0; i < static_cast<int>(Y.terms[j].size()); ++i) out.incl.comp[j].at(i, i) = A.unit(Y.terms[j][i].vertex);
    ProjComplex X1 = shift(X, 1);
    out.proj = zero_map(C, X1);
    for (std::size_t j = 0; j < C.terms.size(); ++j) {
        Int deg = C.lo + static_cast<Int>(j);
        int off = static_cast<int>(Y.term(deg).size());
        const auto& xt = X.term(deg + 1);
        for (int i = 0; i < static_cast<int>(xt.size()); ++i) out.proj.comp[j].at(i, off + i) = A.unit(xt[i].vertex);
    }
    return out;
}

namespace {

bool invertible_entry(const QuiverAlgebra& A, const AElt& x, const Summand& row, const Summand& col) {
    if (row.vertex != col.vertex || row.twist != col.twist) return false;
    auto it = x.find(A.idempotent(row.vertex));
    return it != x.end() && it->second != 0;
}

AElt local_inverse(const QuiverAlgebra& A, const AElt& u, int v) {
    mpq_class lam = u.at(A.idempotent(v));
    mpq_class li = A.field().inv(lam);
    AElt m = A.scale(u, li);
    m.erase(A.idempotent(v));  // u / lam = e + m with m nilpotent
    AElt neg = A.scale(m, -1);
    AElt sum = A.unit(v), pw = A.unit(v);
    for (int k = 0; k <= A.dim() + 1; ++k) {
        pw = A.mul(pw, neg);
        if (pw.empty()) return A.scale(sum, li);
        sum = A.add(sum, pw);
    }
    throw InvariantBreach("radical element is not nilpotent");
}

AMat drop(const AMat& m, int row, int col) {
    AMat out(m.rows - (row >= 0 ? 1 : 0), m.cols - (col >= 0 ? 1 : 0));
    for (int r = 0, rr = 0; r < m.rows; ++r) {
        if (r == row) continue;
        for (int c = 0, cc = 0; c < m.cols; ++c) {
            if (c == col) continue;
            out.at(rr, cc) = m.at(r, c);
            ++cc;
        }
        ++rr;
    }
    return out;
}

// Rebuild a map's components after its source changed shape.
ChainMap reseat(const ChainMap& f, const ProjComplex& src, const ProjComplex& tgt) {
    ChainMap g{src, tgt, {}};
    for (std::size_t j = 0; j < src.terms.size(); ++j) {
        Int deg = src.lo + static_cast<Int>(j);
        AMat m = f.at(deg);
        if (m.rows != static_cast<int>(tgt.term(deg).size()) || m.cols != static_cast<int>(src.terms[j].size()))
            m = AMat(static_cast<int>(tgt.term(deg).size()), static_cast<int>(src.terms[j].size()));
        g.comp.push_back(std::move(m));
    }
    return g;
}

}  // namespace

bool is_minimal(const ProjComplex& X) {
    for (std::size_t j = 0; j < X.d.size(); ++j)
        for (int r = 0; r < X.d[j].rows; ++r)
            for (int c = 0; c < X.d[j].cols; ++c)
                if (invertible_entry(*X.alg, X.d[j].at(r, c), X.terms[j + 1][r], X.terms[j][c])) return false;
    return true;
}

MinimalModel minimal_model_with_maps(const ProjComplex& X0) {
    const auto& A = *X0.alg;
    ProjComplex X = X0;
    ChainMap to = identity_map(X), from = identity_map(X);
    while (true) {
        std::size_t pj = 0;
        int pr = -1, pc = -1;
        for (std::size_t j = 0; j < X.d.size() && pr < 0; ++j)
            for (int r = 0; r < X.d[j].rows && pr < 0; ++r)
                for (int c = 0; c < X.d[j].cols; ++c)
                    if (invertible_entry(A, X.d[j].at(r, c), X.terms[j + 1][r], X.terms[j][c])) {
                        pj = j;
                        pr = r;
                        pc = c;
                        break;
                    }
        if (pr < 0) break;
        const AMat& D = X.d[pj];
        AElt phinv = local_inverse(A, D.at(pr, pc), X.terms[pj][pc].vertex);
        ProjComplex Y = X;
        Y.terms[pj].erase(Y.terms[pj].begin() + pc);
        Y.terms[pj + 1].erase(Y.terms[pj + 1].begin() + pr);
        AMat nd(D.rows - 1, D.cols - 1);
        for (int r = 0, rr = 0; r < D.rows; ++r) {
            if (r == pr) continue;
            AElt gphi = A.mul(D.at(r, pc), phinv);
            for (int c = 0, cc = 0; c < D.cols; ++c) {
                if (c == pc) continue;
                nd.at(rr, cc) = A.add(D.at(r, c), A.scale(A.mul(gphi, D.at(pr, c)), -1));
                ++cc;
            }
            ++rr;
        }
        Y.d[pj] = std::move(nd);
        if (pj > 0) Y.d[pj - 1] = drop(X.d[pj - 1], pc, -1);
        if (pj + 1 < X.d.size()) Y.d[pj + 1] = drop(X.d[pj + 1], -1, pr);

        ChainMap f = zero_map(X, Y), g = zero_map(Y, X);
        for (std::size_t j = 0; j < X.terms.size(); ++j) {
            int n = static_cast<int>(X.terms[j].size());
            int skip = j == pj ? pc : (j == pj + 1 ? pr : -1);
            for (int i = 0, ii = 0; i < n; ++i) {
                if (i == skip) continue;
                f.comp[j].at(ii, i) = A.unit(X.terms[j][i].vertex);
                g.comp[j].at(i, ii) = A.unit(X.terms[j][i].vertex);
                ++ii;
            }
        }
        // f^{j+1}: column pr gets -gamma phi^{-1}
        for (int r = 0, rr = 0; r < D.rows; ++r) {
            if (r == pr) continue;
            f.comp[pj + 1].at(rr, pr) = A.scale(A.mul(D.at(r, pc), phinv), -1);
            ++rr;
        }
        // g^j: row pc gets -phi^{-1} delta
        for (int c = 0, cc = 0; c < D.cols; ++c) {
            if (c == pc) continue;
            g.comp[pj].at(pc, cc) = A.scale(A.mul(phinv, D.at(pr, c)), -1);
            ++cc;
        }
        to = compose(f, to);
        from = compose(from, g);
        X = std::move(Y);
    }
    ProjComplex M = X;
    M.trim();
    MinimalModel out{M, reseat(to, X0, M), reseat(from, M, X0)};
    return out;
}

ProjComplex minimal_model(const ProjComplex& X) { return minimal_model_with_maps(X).M; }

GradedMapSpace::GradedMapSpace(const ProjComplex& X, const ProjComplex& Y, Int offset) : X_(X), Y_(Y), offset_(offset) {
    const auto& A = *X.alg;
    for (std::size_t j = 0; j < X.terms.size(); ++j) {
        Int deg = X.lo + static_cast<Int>(j);
        const auto& yt = Y.term(deg + offset);
        for (int r = 0; r < static_cast<int>(yt.size()); ++r)
            for (int c = 0; c < static_cast<int>(X.terms[j].size()); ++c) {
                const Summand &t = yt[r], &s = X.terms[j][c];
                for (int b : A.paths(t.vertex, s.vertex, t.twist - s.twist)) {
                    index_[{j, r, c, b}] = slots_.size();
                    slots_.push_back({j, r, c, b});
                }
            }
    }
    n_ = slots_.size();
}

QVec GradedMapSpace::flatten(const std::vector<AMat>& comps) const {
    QVec v(n_, 0);
    for (std::size_t j = 0; j < comps.size(); ++j)
        for (int r = 0; r < comps[j].rows; ++r)
            for (int c = 0; c < comps[j].cols; ++c)
                for (auto& [b, x] : comps[j].at(r, c)) {
                    auto it = index_.find({j, r, c, b});
                    if (it == index_.end())
                        throw InvariantBreach("map entry " + X_.alg->path_str(b) + " at degree " + std::to_string(X_.lo + static_cast<Int>(j)) + " (" +
                                              std::to_string(r) + "," + std::to_string(c) + ") outside its graded piece");
                    v[it->second] = x;
                }
    return v;
}

std::vector<AMat> GradedMapSpace::unflatten(const QVec& v) const {
    std::vector<AMat> comps;
    for (std::size_t j = 0; j < X_.terms.size(); ++j) {
        Int deg = X_.lo + static_cast<Int>(j);
        comps.emplace_back(static_cast<int>(Y_.term(deg + offset_).size()), static_cast<int>(X_.terms[j].size()));
    }
    for (std::size_t s = 0; s < n_; ++s)
        if (v[s] != 0) comps[slots_[s].j].at(slots_[s].r, slots_[s].c)[slots_[s].basis] = v[s];
    return comps;
}

namespace {

// Matrix (as rows) of D(f) = d_Z f - (-1)^e f d_X from maps of offset e to offset e + 1.
std::vector<QVec> differential_rows(const ProjComplex& X, const ProjComplex& Z, Int e) {
    const auto& A = *X.alg;
    GradedMapSpace from(X, Z, e), to(X, Z, e + 1);
    std::vector<QVec> cols;
    mpq_class sign = (e % 2 == 0) ? 1 : -1;
    for (std::size_t s = 0; s < from.dim(); ++s) {
        QVec u(from.dim(), 0);
        u[s] = 1;
        auto f = from.unflatten(u);
        std::vector<AMat> out;
        for (std::size_t j = 0; j < X.terms.size(); ++j) {
            Int deg = X.lo + static_cast<Int>(j);
            AMat a = amat_mul(A, Z.diff(deg + e), f[j]);
            AMat fx = (j + 1 < X.terms.size()) ? f[j + 1]
                                               : AMat(static_cast<int>(Z.term(deg + 1 + e).size()), 0);
            AMat b = amat_mul(A, fx, X.diff(deg));
            out.push_back(amat_add(A, a, amat_scale(A, b, -sign)));
        }
        cols.push_back(to.flatten(out));
    }
    std::vector<QVec> rows(to.dim(), QVec(from.dim(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < to.dim(); ++r) rows[r][c] = cols[c][r];
    return rows;
}

ProjComplex hom_target(const ProjComplex& Y, Int i, Int k) { return shift(twist(Y, k), i); }

}  // namespace

std::size_t hom_dim(const ProjComplex& X, const ProjComplex& Y, Int i, Int k) {
    check_same_alg(X, Y);
    ProjComplex Z = hom_target(Y, i, k);
    GradedMapSpace c0(X, Z, 0);
    if (c0.dim() == 0) return 0;
    const Field& F = X.alg->field();
    int r0 = field_rank(F, differential_rows(X, Z, 0));
    int rm = field_rank(F, differential_rows(X, Z, -1));
    return c0.dim() - static_cast<std::size_t>(r0) - static_cast<std::size_t>(rm);
}

std::vector<std::pair<Int, Int>> hom_support(const ProjComplex& X, const ProjComplex& Y) {
    check_same_alg(X, Y);
    const auto& A = *X.alg;
    std::set<std::pair<Int, Int>> out;
    for (std::size_t a = 0; a < X.terms.size(); ++a)
        for (std::size_t b = 0; b < Y.terms.size(); ++b) {
            Int i = (Y.lo + static_cast<Int>(b)) - (X.lo + static_cast<Int>(a));
            for (auto& s : X.terms[a])
                for (auto& t : Y.terms[b])
                    for (Int deg = 0; deg <= A.max_degree(); ++deg)
                        if (!A.paths(t.vertex, s.vertex, deg).empty()) out.insert({i, deg + s.twist - t.twist});
        }
    return {out.begin(), out.end()};
}

HomSpace::HomSpace(const ProjComplex& X, const ProjComplex& Y, Int i, Int k) : X_(X), Z_(hom_target(Y, i, k)) {
    check_same_alg(X, Y);
    const Field& F = X.alg->field();
    c0_ = std::make_unique<GradedMapSpace>(X_, Z_, 0);
    solver_ = std::make_unique<SpanSolver>(F, c0_->dim());
    if (c0_->dim() == 0) return;
    auto dm = differential_rows(X_, Z_, -1);
    std::size_t ncols = dm.empty() ? 0 : dm[0].size();
    for (std::size_t c = 0; c < ncols; ++c) {
        QVec v(dm.size());
        for (std::size_t r = 0; r < dm.size(); ++r) v[r] = dm[r][c];
        solver_->add(v);
    }
    nb_ = solver_->count();
    kernel_ = field_kernel(F, differential_rows(X_, Z_, 0), c0_->dim());
    for (auto& z : kernel_)
        if (solver_->add(z)) basis_.push_back(ChainMap{X_, Z_, c0_->unflatten(z)});
}

std::vector<ChainMap> HomSpace::cocycles() const {
    std::vector<ChainMap> out;
    for (auto& z : kernel_) out.push_back(ChainMap{X_, Z_, c0_->unflatten(z)});
    return out;
}

QVec HomSpace::coords(const ChainMap& f) const {
    if (!same_complex(f.src, X_) || !same_complex(f.tgt, Z_)) throw InputError("map has the wrong source or target");
    if (!f.is_chain_map()) throw InputError("not a chain map");
    if (c0_->dim() == 0) return {};
    auto c = solver_->express(c0_->flatten(f.comp));
    if (!c) throw InvariantBreach("cocycle outside the computed span");
    return QVec(c->begin() + static_cast<std::ptrdiff_t>(nb_), c->end());
}

bool HomSpace::is_null_homotopic(const ChainMap& f) const {
    for (auto& x : coords(f))
        if (x != 0) return false;
    return true;
}

}  // namespace hs
