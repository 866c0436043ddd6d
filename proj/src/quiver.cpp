#include "hs/quiver.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "hs/errors.hpp"

namespace hs {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

mpq_class parse_coeff(const std::string& t) {
    try {
        mpq_class q(t);
        q.canonicalize();
        return q;
    } catch (const std::exception&) {
        throw InputError("bad coefficient '" + t + "'");
    }
}

Int parse_int(const std::string& t, const std::string& what) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(t, &pos);
        if (pos != t.size()) throw std::invalid_argument(t);
        return v;
    } catch (const std::exception&) {
        throw InputError("bad " + what + " '" + t + "'");
    }
}

struct RelTerm {
    mpq_class c;
    std::vector<int> word;
};

}  // namespace

int QuiverAlgebra::vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i] == name) return static_cast<int>(i);
    throw InputError("unknown vertex '" + name + "'");
}

int QuiverAlgebra::order_rank(int v) const {
    for (std::size_t i = 0; i < order_.size(); ++i)
        if (order_[i] == v) return static_cast<int>(i);
    throw InputError("algebra has no heredity order");
}

const std::vector<int>& QuiverAlgebra::paths(int src, int dst, Int degree) const {
    static const std::vector<int> none;
    auto it = by_type_.find({src, dst, degree});
    return it == by_type_.end() ? none : it->second;
}

std::string QuiverAlgebra::path_str(int i) const {
    const auto& p = basis_.at(i);
    if (p.arrows.empty()) return "e" + vertices_[p.src];
    std::string s;
    for (std::size_t k = 0; k < p.arrows.size(); ++k) {
        if (k) s += ".";
        s += arrows_[p.arrows[k]].name;
    }
    return s;
}

AElt QuiverAlgebra::mul(const AElt& a, const AElt& b) const {
    AElt out;
    for (auto& [i, x] : a)
        for (auto& [j, y] : b)
            for (auto& [k, c] : table_[i][j]) {
                auto& slot = out[k];
                slot = F_.norm(slot + x * y * c);
                if (slot == 0) out.erase(k);
            }
    return out;
}

AElt QuiverAlgebra::add(const AElt& a, const AElt& b) const {
    AElt out = a;
    for (auto& [k, c] : b) {
        auto& slot = out[k];
        slot = F_.norm(slot + c);
        if (slot == 0) out.erase(k);
    }
    return out;
}

AElt QuiverAlgebra::scale(const AElt& a, const mpq_class& c) const {
    AElt out;
    mpq_class cc = F_.norm(c);
    if (cc == 0) return out;
    for (auto& [k, x] : a) {
        mpq_class y = F_.norm(x * cc);
        if (y != 0) out[k] = y;
    }
    return out;
}

std::string QuiverAlgebra::elt_str(const AElt& a) const {
    if (a.empty()) return "0";
    std::string s;
    for (auto& [k, c] : a) {
        if (!s.empty()) s += " + ";
        if (c != 1) s += c.get_str() + "*";
        s += path_str(k);
    }
    return s;
}

std::shared_ptr<const QuiverAlgebra> QuiverAlgebra::load(const std::string& path, int max_length) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open algebra file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), max_length);
}

std::shared_ptr<const QuiverAlgebra> QuiverAlgebra::parse(const std::string& text, int L) {
    auto A = std::make_shared<QuiverAlgebra>();
    std::string section;
    std::istringstream in(text);
    std::vector<std::vector<std::string>> rel_lines;
    std::vector<std::string> order_names;
    std::vector<std::vector<std::string>> arrow_lines;
    bool have_field = false;
    int lineno = 0;
    for (std::string raw; std::getline(in, raw);) {
        ++lineno;
        auto h = raw.find('#');
        std::string line = trim(h == std::string::npos ? raw : raw.substr(0, h));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw InputError("line " + std::to_string(lineno) + ": bad section header");
            section = line.substr(1, line.size() - 2);
            continue;
        }
        auto tok = tokens(line);
        if (section == "field") {
            std::string f;
            for (auto& t : tok) f += t;
            if (f == "Q") {
                A->F_ = Field::rationals();
            } else if (f.size() > 1 && f[0] == 'F') {
                std::string num = f.substr(f[1] == '_' ? 2 : 1);
                A->F_ = Field::prime(parse_int(num, "characteristic"));
            } else {
                throw InputError("line " + std::to_string(lineno) + ": unknown field '" + f + "'");
            }
            have_field = true;
        } else if (section == "vertices") {
            for (auto& t : tok) {
                if (std::find(A->vertices_.begin(), A->vertices_.end(), t) != A->vertices_.end())
                    throw InputError("duplicate vertex '" + t + "'");
                A->vertices_.push_back(t);
            }
        } else if (section == "arrows") {
            if (tok.size() != 4) throw InputError("line " + std::to_string(lineno) + ": expected 'name src dst degree'");
            arrow_lines.push_back(tok);
        } else if (section == "relations") {
            rel_lines.push_back(tok);
        } else if (section == "heredity_order") {
            for (auto& t : tok) order_names.push_back(t);
        } else {
            throw InputError("line " + std::to_string(lineno) + ": text outside a known section");
        }
    }
    if (!have_field) A->F_ = Field::rationals();
    if (A->vertices_.empty()) throw InputError("algebra has no vertices");
    std::set<std::string> arrow_names;
    for (auto& tok : arrow_lines) {
        Arrow a{tok[0], A->vertex_index(tok[1]), A->vertex_index(tok[2]), parse_int(tok[3], "degree")};
        if (a.degree < 0) throw InputError("arrow '" + a.name + "' has negative degree");
        if (!arrow_names.insert(a.name).second) throw InputError("duplicate arrow '" + a.name + "'");
        A->arrows_.push_back(a);
    }
    for (auto& n : order_names) A->order_.push_back(A->vertex_index(n));
    if (!A->order_.empty()) {
        std::set<int> seen(A->order_.begin(), A->order_.end());
        if (seen.size() != A->order_.size() || A->order_.size() != A->vertices_.size())
            throw InputError("heredity order must list every vertex once");
    }
    auto arrow_index = [&](const std::string& n) {
        for (std::size_t i = 0; i < A->arrows_.size(); ++i)
            if (A->arrows_[i].name == n) return static_cast<int>(i);
        throw InputError("unknown arrow '" + n + "'");
    };

    // all paths of length <= L, grouped by length
    std::vector<QuiverPath> all;
    for (int v = 0; v < A->num_vertices(); ++v) all.push_back({v, v, 0, {}});
    std::size_t begin = 0;
    for (int len = 1; len <= L; ++len) {
        std::size_t end = all.size();
        for (std::size_t i = begin; i < end; ++i)
            for (std::size_t a = 0; a < A->arrows_.size(); ++a) {
                if (A->arrows_[a].src != all[i].dst) continue;
                QuiverPath p = all[i];
                p.arrows.push_back(static_cast<int>(a));
                p.dst = A->arrows_[a].dst;
                p.degree += A->arrows_[a].degree;
                all.push_back(std::move(p));
                if (all.size() > 200000) throw InputError("path enumeration too large");
            }
        begin = end;
    }
    // coordinates: longest paths first so they become pivots
    std::vector<std::size_t> perm(all.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return all[a].arrows.size() > all[b].arrows.size(); });
    std::vector<std::size_t> coord(all.size());
    for (std::size_t c = 0; c < perm.size(); ++c) coord[perm[c]] = c;
    std::map<std::pair<int, std::vector<int>>, std::size_t> path_id;
    for (std::size_t i = 0; i < all.size(); ++i) path_id[{all[i].src, all[i].arrows}] = i;
    auto start_of = [&](const std::vector<int>& w) { return A->arrows_[w.front()].src; };
    auto end_of = [&](const std::vector<int>& w) { return A->arrows_[w.back()].dst; };

    SpanSolver ideal(A->F_, all.size());
    for (auto& tok : rel_lines) {
        if (tok.size() % 2 != 0) throw InputError("relation must alternate coefficients and paths");
        std::vector<RelTerm> terms;
        for (std::size_t k = 0; k < tok.size(); k += 2) {
            RelTerm t{A->F_.norm(parse_coeff(tok[k])), {}};
            std::stringstream ws(tok[k + 1]);
            for (std::string an; std::getline(ws, an, '.');) t.word.push_back(arrow_index(an));
            if (t.word.empty()) throw InputError("empty path in relation");
            for (std::size_t j = 1; j < t.word.size(); ++j)
                if (A->arrows_[t.word[j - 1]].dst != A->arrows_[t.word[j]].src)
                    throw InputError("path '" + tok[k + 1] + "' is not composable");
            terms.push_back(std::move(t));
        }
        if (terms.empty()) continue;
        int s = start_of(terms[0].word), d = end_of(terms[0].word);
        auto deg = [&](const std::vector<int>& w) {
            Int x = 0;
            for (int a : w) x += A->arrows_[a].degree;
            return x;
        };
        std::size_t maxlen = 0;
        for (auto& t : terms) {
            if (start_of(t.word) != s || end_of(t.word) != d || deg(t.word) != deg(terms[0].word))
                throw InputError("relation is not homogeneous");
            maxlen = std::max(maxlen, t.word.size());
        }
        for (auto& u : all) {
            if (u.dst != s) continue;
            for (auto& v : all) {
                if (v.src != d) continue;
                if (u.arrows.size() + maxlen + v.arrows.size() > static_cast<std::size_t>(L)) continue;
                QVec vec(all.size(), 0);
                for (auto& t : terms) {
                    std::vector<int> w = u.arrows;
                    w.insert(w.end(), t.word.begin(), t.word.end());
                    w.insert(w.end(), v.arrows.begin(), v.arrows.end());
                    auto& slot = vec[coord[path_id.at({u.src, w})]];
                    slot = A->F_.norm(slot + t.c);
                }
                ideal.add(vec);
            }
        }
    }
    auto normal_form = [&](std::size_t pid) {
        QVec v(all.size(), 0);
        v[coord[pid]] = 1;
        return ideal.reduced(v);
    };
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (static_cast<int>(all[i].arrows.size()) != L) continue;
        auto nf = normal_form(i);
        for (auto& x : nf)
            if (x != 0) throw InputError("algebra is not finite-dimensional within path length " + std::to_string(L));
    }
    // standard paths: those whose unit vector is already reduced
    std::vector<int> basis_of_coord(all.size(), -1);
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (static_cast<int>(all[i].arrows.size()) >= L) continue;
        auto nf = normal_form(i);
        bool standard = true;
        for (std::size_t c = 0; c < nf.size(); ++c)
            if ((c == coord[i]) != (nf[c] != 0) || (c == coord[i] && nf[c] != 1)) standard = false;
        if (!standard) continue;
        basis_of_coord[coord[i]] = static_cast<int>(A->basis_.size());
        A->basis_.push_back(all[i]);
    }
    A->idem_.assign(A->num_vertices(), -1);
    for (std::size_t b = 0; b < A->basis_.size(); ++b) {
        const auto& p = A->basis_[b];
        if (p.arrows.empty()) A->idem_[p.src] = static_cast<int>(b);
        A->by_type_[{p.src, p.dst, p.degree}].push_back(static_cast<int>(b));
        A->max_degree_ = std::max(A->max_degree_, p.degree);
    }
    for (int v = 0; v < A->num_vertices(); ++v)
        if (A->idem_[v] < 0) throw InputError("relations kill the idempotent at vertex " + A->vertices_[v]);
    std::size_t n = A->basis_.size();
    A->table_.assign(n, std::vector<std::vector<std::pair<int, mpq_class>>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto &p = A->basis_[i], &q = A->basis_[j];
            if (p.dst != q.src) continue;
            std::vector<int> w = p.arrows;
            w.insert(w.end(), q.arrows.begin(), q.arrows.end());
            if (static_cast<int>(w.size()) >= L) continue;
            auto nf = normal_form(path_id.at({p.src, w}));
            for (std::size_t c = 0; c < nf.size(); ++c) {
                if (nf[c] == 0) continue;
                if (basis_of_coord[c] < 0) throw InvariantBreach("normal form left a nonstandard path");
                A->table_[i][j].push_back({basis_of_coord[c], nf[c]});
            }
        }
    return A;
}

}  // namespace hs
