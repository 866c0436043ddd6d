#include "hs/cotstruct.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hs/errors.hpp"

namespace hs {

namespace {

std::vector<std::vector<Summand>> sorted_terms(const ProjComplex& X) {
    auto t = X.terms;
    for (auto& x : t) std::sort(x.begin(), x.end());
    return t;
}

bool top_invertible(const ProjComplex& X, const ChainMap& f) {
    auto t = top_matrix(X, f.comp);
    return field_rank(X.alg->field(), t) == static_cast<int>(t.size());
}

// Both minimal and indecomposable.
bool iso_indecomposable(const ProjComplex& X, const ProjComplex& Y) {
    if (X.is_zero() || Y.is_zero()) return X.is_zero() && Y.is_zero();
    if (X.lo != Y.lo || sorted_terms(X) != sorted_terms(Y)) return false;
    auto fs = HomSpace(X, Y).cocycles();
    auto gs = HomSpace(Y, X).cocycles();
    for (auto& f : fs)
        for (auto& g : gs)
            if (top_invertible(X, compose(g, f))) return true;
    return false;
}

// Registry of indecomposables up to the chosen normalization.
struct Registry {
    std::vector<ProjComplex> reps;
    int find(const ProjComplex& X) const {
        for (std::size_t i = 0; i < reps.size(); ++i)
            if (iso_indecomposable(reps[i], X)) return static_cast<int>(i);
        return -1;
    }
    int insert(const ProjComplex& X) {
        int i = find(X);
        if (i >= 0) return i;
        reps.push_back(X);
        return static_cast<int>(reps.size()) - 1;
    }
};

Int width(const ProjComplex& X) { return X.is_zero() ? 0 : X.hi() - X.lo + 1; }

Int twist_spread(const ProjComplex& X) {
    Int lo = 0, hi = 0;
    bool first = true;
    for (auto& t : X.terms)
        for (auto& s : t) {
            if (first) lo = hi = s.twist;
            lo = std::min(lo, s.twist);
            hi = std::max(hi, s.twist);
            first = false;
        }
    return hi - lo;
}

}  // namespace

bool isomorphic(const ProjComplex& X, const ProjComplex& Y) {
    auto xs = decompose(X), ys = decompose(Y);
    if (xs.size() != ys.size()) return false;
    std::vector<bool> used(ys.size(), false);
    for (auto& x : xs) {
        bool hit = false;
        for (std::size_t i = 0; i < ys.size() && !hit; ++i)
            if (!used[i] && iso_indecomposable(x, ys[i])) used[i] = hit = true;
        if (!hit) return false;
    }
    return true;
}

Normalized normalize_shift_twist(const ProjComplex& X0) {
    ProjComplex M = minimal_model(X0);
    Normalized n{M, 0, 0};
    if (M.is_zero()) return n;
    n.shift = M.lo;
    Int mt = M.terms[0][0].twist;
    for (auto& s : M.terms[0]) mt = std::min(mt, s.twist);
    n.twist = -mt;
    n.X = shift(twist(M, n.twist), n.shift);
    return n;
}

Normalized normalize_twist(const ProjComplex& X0) {
    ProjComplex M = minimal_model(X0);
    Normalized n{M, 0, 0};
    if (M.is_zero()) return n;
    Int mt = M.terms[0][0].twist;
    for (auto& s : M.terms[0]) mt = std::min(mt, s.twist);
    n.twist = -mt;
    n.X = twist(M, n.twist);
    return n;
}

bool membership(const ProjComplex& X, Side side) {
    ProjComplex M = minimal_model(X);
    if (M.is_zero()) return true;
    return side == Side::GeqZero ? M.lo >= 0 : M.hi() <= 0;
}

WeightTruncation weight_truncation(const ProjComplex& X) {
    ProjComplex M = minimal_model(X);
    WeightTruncation w;
    w.A = zero_complex(X.alg);
    w.B = zero_complex(X.alg);
    ProjComplex Bm1 = zero_complex(X.alg);
    if (!M.is_zero()) {
        // A = sigma_{>=0} M, B = sigma_{<=-1} M
        ProjComplex A = M, B = M;
        A.terms.clear();
        A.d.clear();
        B.terms.clear();
        B.d.clear();
        A.lo = std::max<Int>(M.lo, 0);
        for (Int j = A.lo; j <= M.hi(); ++j) {
            A.terms.push_back(M.term(j));
            if (j < M.hi()) A.d.push_back(M.diff(j));
        }
        B.lo = M.lo;
        for (Int j = M.lo; j <= std::min<Int>(M.hi(), -1); ++j) {
            B.terms.push_back(M.term(j));
            if (j < std::min<Int>(M.hi(), -1)) B.d.push_back(M.diff(j));
        }
        A.trim();
        B.trim();
        w.A = A;
        w.B = B;
        Bm1 = shift(B, -1);
    }
    // h: B[-1] -> A is the differential M^{-1} -> M^0
    w.h = zero_map(Bm1, w.A);
    if (!Bm1.is_zero()) {
        for (std::size_t j = 0; j < Bm1.terms.size(); ++j) {
            Int deg = Bm1.lo + static_cast<Int>(j);
            if (deg == 0 && !w.A.term(0).empty()) w.h.comp[j] = M.diff(-1);
        }
    }
    w.verified = w.h.is_chain_map() && same_complex(cone(w.h).C, M) && membership(w.A, Side::GeqZero) &&
                 membership(shift(w.B, -1), Side::LeqZero);
    return w;
}

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        default: return "inconclusive";
    }
}

Verdict generates(const std::vector<ProjComplex>& objs, const GenerationOptions& opt) {
    if (objs.empty()) return Verdict::Inconclusive;
    AlgebraPtr A = objs[0].alg;
    Registry pool;
    for (auto& o : objs)
        for (auto& s : decompose(o)) pool.insert(normalize_shift_twist(s).X);
    std::vector<ProjComplex> targets;
    for (int v = 0; v < A->num_vertices(); ++v) targets.push_back(stalk(A, v));
    auto reached = [&]() {
        for (auto& t : targets)
            if (pool.find(t) < 0) return false;
        return true;
    };
    if (reached()) return Verdict::Yes;
    for (int depth = 0; depth < opt.max_depth; ++depth) {
        std::size_t n = pool.reps.size();
        bool grew = false;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const ProjComplex &U = pool.reps[a], &V = pool.reps[b];
                for (auto [i, k] : hom_support(U, V)) {
                    HomSpace H(U, V, i, k);
                    std::vector<ChainMap> maps = H.basis();
                    if (maps.size() > 1) {
                        ChainMap sum = maps[0];
                        for (std::size_t m = 1; m < maps.size(); ++m) sum = map_add(sum, maps[m]);
                        maps.push_back(sum);
                    }
                    for (auto& f : maps)
                        for (auto& s : decompose(cone(f).C)) {
                            auto ns = normalize_shift_twist(s).X;
                            if (width(ns) > opt.max_width) continue;
                            if (pool.find(ns) >= 0) continue;
                            pool.reps.push_back(ns);
                            grew = true;
                            if (reached()) return Verdict::Yes;
                            if (pool.reps.size() >= opt.max_pool) return Verdict::Inconclusive;
                        }
                }
            }
        if (!grew) break;
    }
    return Verdict::Inconclusive;
}

bool is_presilting(const ProjComplex& X) {
    for (auto [i, k] : hom_support(X, X))
        if (i > 0 && hom_dim(X, X, i, k) != 0) return false;
    return true;
}

SiltingReport is_silting(const ProjComplex& X, const GenerationOptions& opt) {
    SiltingReport r;
    r.presilting = is_presilting(X);
    Registry reg;
    for (auto& s : decompose(X)) reg.insert(normalize_shift_twist(s).X);
    r.distinct_summands = reg.reps.size();
    if (!r.presilting) {
        r.verdict = Verdict::No;
        r.detail = "positive self-extensions";
        return r;
    }
    if (static_cast<int>(r.distinct_summands) != X.alg->num_vertices()) {
        r.verdict = Verdict::No;
        r.detail = "summand count differs from the number of vertices";
        return r;
    }
    r.verdict = generates({X}, opt);
    r.detail = r.verdict == Verdict::Yes ? "generates" : "generation search exhausted";
    return r;
}

nlohmann::json SiltingCensus::to_json() const {
    nlohmann::json j;
    j["complexes"] = complexes;
    j["inconclusive"] = inconclusive;
    j["count"] = basic.size();
    j["objects"] = nlohmann::json::array();
    for (auto& b : basic) {
        auto arr = nlohmann::json::array();
        for (auto& x : b) arr.push_back(x.str());
        j["objects"].push_back(arr);
    }
    return j;
}

SiltingCensus two_term_silting_census(const AlgebraPtr& A, const CensusOptions& opt) {
    std::vector<Summand> types;
    for (int v = 0; v < A->num_vertices(); ++v)
        for (Int m = opt.min_twist; m <= opt.max_twist; ++m) types.push_back({v, m});
    std::vector<std::vector<Summand>> terms;
    std::vector<Summand> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        terms.push_back(cur);
        if (static_cast<int>(cur.size()) == opt.max_per_term) return;
        for (std::size_t t = start; t < types.size(); ++t) {
            cur.push_back(types[t]);
            self(self, t);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    SiltingCensus out;
    Registry reg;  // indecomposables up to twist
    std::map<std::vector<int>, Verdict> seen;
    for (auto& t1 : terms)
        for (auto& t0 : terms) {
            if (t1.empty() && t0.empty()) continue;
            struct Coord {
                int r, c, b;
            };
            std::vector<Coord> coords;
            for (int r = 0; r < static_cast<int>(t0.size()); ++r)
                for (int c = 0; c < static_cast<int>(t1.size()); ++c)
                    for (int b : A->paths(t0[r].vertex, t1[c].vertex, t0[r].twist - t1[c].twist)) coords.push_back({r, c, b});
            if (static_cast<int>(coords.size()) > opt.max_free_coords) throw InputError("census window too large");
            for (std::size_t mask = 0; mask < (std::size_t{1} << coords.size()); ++mask) {
                ProjComplex X;
                X.alg = A;
                X.lo = -1;
                X.terms = {t1, t0};
                X.d = {AMat(static_cast<int>(t0.size()), static_cast<int>(t1.size()))};
                for (std::size_t q = 0; q < coords.size(); ++q)
                    if (mask >> q & 1) X.d[0].at(coords[q].r, coords[q].c)[coords[q].b] = 1;
                X.trim();
                ++out.complexes;
                std::vector<int> key;
                for (auto& s : decompose(X)) key.push_back(reg.insert(normalize_twist(s).X));
                std::sort(key.begin(), key.end());
                key.erase(std::unique(key.begin(), key.end()), key.end());
                if (seen.count(key)) continue;
                Verdict v = Verdict::No;
                if (static_cast<int>(key.size()) == A->num_vertices()) {
                    std::vector<ProjComplex> parts;
                    for (int i : key) parts.push_back(reg.reps[i]);
                    v = is_silting(direct_sum(parts, A), opt.gen).verdict;
                }
                seen[key] = v;
                if (v == Verdict::Inconclusive) ++out.inconclusive;
                if (v == Verdict::Yes) {
                    std::vector<ProjComplex> parts;
                    for (int i : key) parts.push_back(reg.reps[i]);
                    out.basic.push_back(parts);
                }
            }
        }
    return out;
}

std::vector<ProjComplex> indecomposable_catalogue(const AlgebraPtr& A, Int max_width, Int max_spread, int rounds) {
    Registry pool;
    for (int v = 0; v < A->num_vertices(); ++v) pool.insert(stalk(A, v));
    for (int r = 0; r < rounds; ++r) {
        std::size_t n = pool.reps.size();
        bool grew = false;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (auto [i, k] : hom_support(pool.reps[a], pool.reps[b])) {
                    HomSpace H(pool.reps[a], pool.reps[b], i, k);
                    std::vector<ChainMap> maps = H.basis();
                    if (maps.size() > 1) {
                        ChainMap sum = maps[0];
                        for (std::size_t m = 1; m < maps.size(); ++m) sum = map_add(sum, maps[m]);
                        maps.push_back(sum);
                    }
                    for (auto& f : maps)
                        for (auto& s : decompose(cone(f).C)) {
                            auto ns = normalize_shift_twist(s).X;
                            if (width(ns) > max_width || twist_spread(ns) > max_spread) continue;
                            if (pool.find(ns) >= 0) continue;
                            pool.reps.push_back(ns);
                            grew = true;
                        }
                }
        if (!grew) break;
    }
    return pool.reps;
}

std::vector<ProjComplex> placements(const std::vector<ProjComplex>& reps, Int deg_lo, Int deg_hi, Int tw_lo, Int tw_hi) {
    std::vector<ProjComplex> out;
    for (auto& R : reps) {
        if (R.is_zero()) continue;
        Int w = width(R);
        Int tmin = R.terms[0][0].twist, tmax = tmin;
        for (auto& t : R.terms)
            for (auto& s : t) {
                tmin = std::min(tmin, s.twist);
                tmax = std::max(tmax, s.twist);
            }
        for (Int lo = deg_lo; lo + w - 1 <= deg_hi; ++lo)
            for (Int k = tw_lo - tmin; tmax + k <= tw_hi; ++k) out.push_back(shift(twist(R, k), R.lo - lo));
    }
    return out;
}

nlohmann::json CoTAxiomReport::to_json() const {
    nlohmann::json j;
    j["objects"] = objects;
    j["hom_pairs"] = hom_pairs;
    j["ok"] = ok();
    j["violations"] = nlohmann::json::array();
    for (auto& v : violations) j["violations"].push_back({{"axiom", v.axiom}, {"witness", v.witness}});
    return j;
}

CoTAxiomReport verify_cot_axioms(const std::vector<ProjComplex>& objects, const std::vector<ProjComplex>& indecs) {
    CoTAxiomReport rep;
    rep.objects = objects.size();
    for (auto& X : objects) {
        bool ge = membership(X, Side::GeqZero), le = membership(X, Side::LeqZero);
        for (auto& s : decompose(X)) {
            if (ge && !membership(s, Side::GeqZero)) rep.violations.push_back({"summands", X.str() + " has summand " + s.str()});
            if (le && !membership(s, Side::LeqZero)) rep.violations.push_back({"summands", X.str() + " has summand " + s.str()});
        }
        if (ge && !membership(shift(X, -1), Side::GeqZero)) rep.violations.push_back({"shift", X.str() + "[-1]"});
        if (le && !membership(shift(X, 1), Side::LeqZero)) rep.violations.push_back({"shift", X.str() + "[1]"});
        auto w = weight_truncation(X);
        if (!w.verified) rep.violations.push_back({"truncation", X.str()});
    }
    for (auto& A : indecs) {
        if (!membership(A, Side::GeqZero)) continue;
        for (auto& B : indecs) {
            if (!membership(B, Side::LeqZero)) continue;
            ++rep.hom_pairs;
            for (auto [i, k] : hom_support(A, B))
                if (i == 1 && hom_dim(A, B, 1, k) != 0)
                    rep.violations.push_back({"hom", A.str() + " -> " + B.str() + "<" + std::to_string(k) + ">[1]"});
        }
    }
    return rep;
}

namespace {

// Cone off universal maps S<n>[j] -> X (for the allowed shifts) until no such maps remain.
struct Killed {
    ProjComplex X;
    ChainMap incl;  // original -> X
};

Killed kill_maps_from(const ProjComplex& X0, const std::vector<ProjComplex>& sources, bool positive_only, int cap = 40) {
    auto mm = minimal_model_with_maps(X0);
    Killed k{mm.M, mm.to_min};
    for (int it = 0; it < cap; ++it) {
        bool found = false;
        for (auto& S : sources) {
            std::vector<std::pair<Int, Int>> cand;
            for (auto [i, n] : hom_support(S, k.X))
                if (!positive_only || i >= 1) cand.push_back({i, n});
            std::sort(cand.begin(), cand.end(), [](auto a, auto b) { return a.first > b.first || (a.first == b.first && a.second < b.second); });
            for (auto [i, n] : cand) {
                HomSpace H(S, k.X, i, n);
                if (H.dim() == 0) continue;
                std::vector<ChainMap> maps;
                for (auto& f : H.basis()) maps.push_back(shift_map(twist_map(f, -n), -i));
                ChainMap u = row_map(maps, k.X);
                auto c = cone(u);
                auto m = minimal_model_with_maps(c.C);
                k.incl = compose(m.to_min, compose(c.incl, k.incl));
                k.X = m.M;
                found = true;
                break;
            }
            if (found) break;
        }
        if (!found) return k;
    }
    throw Inconclusive("universal extension did not stabilize");
}

void require_order(const AlgebraPtr& A) {
    if (A->heredity_order().empty()) throw InputError("algebra has no heredity order");
}

}  // namespace

StandardObjects standard_objects(const AlgebraPtr& A) {
    require_order(A);
    StandardObjects so;
    so.alg = A;
    so.order = A->heredity_order();
    std::size_t n = so.order.size();
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<ProjComplex> above;
        for (std::size_t t = n; t-- > s + 1;) above.push_back(stalk(A, so.order[t]));
        so.delta.push_back(kill_maps_from(stalk(A, so.order[s]), above, false).X);
    }
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<ProjComplex> below;
        for (std::size_t t = s; t-- > 0;) below.push_back(so.delta[t]);
        auto k = kill_maps_from(so.delta[s], below, false);
        so.nabla.push_back(k.X);
        so.iota.push_back(k.incl);
    }
    return so;
}

nlohmann::json PreExceptionalReport::to_json() const {
    nlohmann::json j;
    j["pre_exceptional"] = pre_exceptional;
    j["quasi_exceptional"] = quasi;
    j["coquasi_exceptional"] = coquasi;
    j["exceptional"] = exceptional;
    j["dualizable"] = dualizable;
    j["generation"] = verdict_str(generation);
    j["violations"] = nlohmann::json::array();
    for (auto& v : violations) j["violations"].push_back({{"axiom", v.axiom}, {"s", v.s}, {"t", v.t}, {"i", v.i}, {"k", v.k}});
    return j;
}

PreExceptionalReport verify_pre_exceptional(const std::vector<ProjComplex>& delta, const std::vector<ProjComplex>& nabla,
                                            const std::vector<ChainMap>& iota, const GenerationOptions& opt) {
    if (delta.size() != nabla.size() || iota.size() != nabla.size()) throw InputError("families of different sizes");
    PreExceptionalReport r;
    int n = static_cast<int>(nabla.size());
    auto vanish = [&](const char* ax, const ProjComplex& X, const ProjComplex& Y, int s, int t, auto keep) {
        bool ok = true;
        for (auto [i, k] : hom_support(X, Y))
            if (keep(i, k) && hom_dim(X, Y, i, k) != 0) {
                r.violations.push_back({ax, s, t, i, k});
                ok = false;
            }
        return ok;
    };
    auto all = [](Int, Int) { return true; };
    bool ax1 = true, ax2 = true, q = true, cq = true, dual = true;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) ax1 &= vanish("1", nabla[s], nabla[t], s, t, all);
    for (int s = 0; s < n; ++s) {
        for (auto [i, k] : hom_support(nabla[s], nabla[s])) {
            if (i != 0) continue;
            std::size_t d = hom_dim(nabla[s], nabla[s], 0, k);
            if (d != (k == 0 ? 1u : 0u)) {
                r.violations.push_back({"2", s, s, 0, k});
                ax2 = false;
            }
        }
        if (hom_dim(nabla[s], nabla[s]) != 1 && ax2) {
            r.violations.push_back({"2", s, s, 0, 0});
            ax2 = false;
        }
        q &= vanish("4+", nabla[s], nabla[s], s, s, [](Int i, Int) { return i < 0; });
        cq &= vanish("4-", nabla[s], nabla[s], s, s, [](Int i, Int) { return i > 0; });
    }
    r.generation = generates(nabla, opt);
    // dualizability: iota is a map, its cone has no maps from delta_u (u >= s), and Hom(delta_s, nabla_t) = 0 for s > t
    for (int s = 0; s < n; ++s) {
        if (!iota[s].is_chain_map() || !same_complex(iota[s].src, delta[s]) || !same_complex(iota[s].tgt, nabla[s])) {
            r.violations.push_back({"iota", s, s, 0, 0});
            dual = false;
            continue;
        }
        ProjComplex K = cone(iota[s]).C;
        for (int u = s; u < n; ++u) dual &= vanish("dual-cone", delta[u], K, u, s, all);
        for (int t = 0; t < s; ++t) dual &= vanish("dual-hom", delta[s], nabla[t], s, t, all);
    }
    r.pre_exceptional = ax1 && ax2 && r.generation == Verdict::Yes;
    r.quasi = r.pre_exceptional && q;
    r.coquasi = r.pre_exceptional && cq;
    r.exceptional = r.quasi && r.coquasi;
    r.dualizable = r.pre_exceptional && dual;
    return r;
}

SiltingConstruction construct_indecomposable_silting(const StandardObjects& so, const PreExceptionalReport& rep, int s) {
    if (!rep.coquasi || !rep.dualizable) throw InputError("not_coquasi");
    int n = static_cast<int>(so.order.size());
    if (s < 0 || s >= n) throw InputError("position out of range");
    std::vector<ProjComplex> below;
    for (int t = s; t-- > 0;) below.push_back(so.delta[t]);
    auto k = kill_maps_from(so.delta[s], below, true);
    auto parts = decompose(k.X);
    if (parts.size() != 1) throw InvariantBreach("universal extension is decomposable");
    SiltingConstruction out;
    out.T = k.X;
    out.j = k.incl;
    // g with g j = iota exactly, searched among strict chain maps T -> nabla
    auto zs = HomSpace(out.T, so.nabla[s]).cocycles();
    GradedMapSpace G(so.delta[s], so.nabla[s], 0);
    SpanSolver sol(so.alg->field(), G.dim());
    std::vector<std::size_t> used;
    for (std::size_t l = 0; l < zs.size(); ++l)
        if (sol.add(G.flatten(compose(zs[l], out.j).comp))) used.push_back(l);
    out.g = zero_map(out.T, so.nabla[s]);
    auto c = sol.express(G.flatten(so.iota[s].comp));
    if (!c) return out;
    for (std::size_t m = 0; m < used.size(); ++m) out.g = map_add(out.g, map_scale(zs[used[m]], (*c)[m]));
    out.factorization_ok = G.flatten(compose(out.g, out.j).comp) == G.flatten(so.iota[s].comp);
    return out;
}

bool in_standard_geq0(const StandardObjects& so, const ProjComplex& X) {
    for (auto& N : so.nabla)
        for (auto [i, k] : hom_support(X, N))
            if (i > 0 && hom_dim(X, N, i, k) != 0) return false;
    return true;
}

bool in_standard_leq0(const StandardObjects& so, const ProjComplex& Y) {
    for (auto& D : so.delta)
        for (auto [i, k] : hom_support(D, Y))
            if (i > 0 && hom_dim(D, Y, i, k) != 0) return false;
    return true;
}

nlohmann::json QuotientReport::to_json() const {
    return {{"pairs", pairs}, {"failures", failures}, {"ok", ok()}, {"witnesses", witnesses}};
}

QuotientReport quotient_functor_surjectivity_check(const StandardObjects& so,
                                                   const std::vector<std::pair<ProjComplex, ProjComplex>>& samples) {
    const auto& A = *so.alg;
    int top = so.order.back();
    for (Int d = 0; d <= A.max_degree(); ++d)
        if (A.paths(top, top, d).size() != (d == 0 ? 1u : 0u)) throw InputError("e A e is not the base field");
    QuotientReport rep;
    ProjComplex Pt = stalk(so.alg, top);
    for (auto& [X, Y] : samples) {
        if (!in_standard_geq0(so, X)) throw InputError("precondition: " + X.str() + " is not in D_{>=0}");
        if (!in_standard_leq0(so, Y)) throw InputError("precondition: " + Y.str() + " is not in D_{<=0}");
        ++rep.pairs;
        // cohomology of X e and Y e by (degree, internal degree)
        std::set<std::pair<Int, Int>> keys;
        for (auto [i, k] : hom_support(Pt, X)) keys.insert({i, k});
        std::vector<std::pair<HomSpace, HomSpace>> pieces;
        std::size_t target_dim = 0;
        for (auto [i, k] : keys) {
            HomSpace hx(twist(Pt, -k), X, i, 0), hy(twist(Pt, -k), Y, i, 0);
            if (hx.dim() == 0 || hy.dim() == 0) continue;
            target_dim += hx.dim() * hy.dim();
            pieces.emplace_back(std::move(hx), std::move(hy));
        }
        if (target_dim == 0) continue;
        HomSpace hom(X, Y);
        std::vector<QVec> rows;
        for (auto& f : hom.basis()) {
            QVec v;
            for (auto& [hx, hy] : pieces) {
                Int i = hx.target().lo == X.lo ? 0 : X.lo - hx.target().lo;
                ChainMap fi = shift_map(f, i);
                for (auto& p : hx.basis()) {
                    auto c = hy.coords(compose(fi, p));
                    v.insert(v.end(), c.begin(), c.end());
                }
            }
            rows.push_back(v);
        }
        if (static_cast<std::size_t>(field_rank(A.field(), rows)) != target_dim) {
            ++rep.failures;
            rep.witnesses.push_back(X.str() + " => " + Y.str());
        }
    }
    return rep;
}

}  // namespace hs
