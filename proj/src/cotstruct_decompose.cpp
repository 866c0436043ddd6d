#include <algorithm>

#include "hs/cotstruct.hpp"
#include "hs/errors.hpp"

namespace hs {

namespace {

using Comps = std::vector<AMat>;
using Poly = QVec;  // low degree first

Comps comps_mul(const QuiverAlgebra& A, const Comps& a, const Comps& b) {
    Comps out;
    for (std::size_t j = 0; j < a.size(); ++j) out.push_back(amat_mul(A, a[j], b[j]));
    return out;
}

Comps comps_add(const QuiverAlgebra& A, const Comps& a, const Comps& b) {
    Comps out;
    for (std::size_t j = 0; j < a.size(); ++j) out.push_back(amat_add(A, a[j], b[j]));
    return out;
}

Comps comps_scale(const QuiverAlgebra& A, const Comps& a, const mpq_class& c) {
    Comps out;
    for (auto& m : a) out.push_back(amat_scale(A, m, c));
    return out;
}

Comps comps_identity(const ProjComplex& X) {
    Comps out;
    for (auto& t : X.terms) out.push_back(amat_identity(*X.alg, t));
    return out;
}

bool comps_equal(const Comps& a, const Comps& b) {
    for (std::size_t j = 0; j < a.size(); ++j)
        if (!(a[j] == b[j])) return false;
    return true;
}

std::vector<QVec> qmul(const Field& F, const std::vector<QVec>& a, const std::vector<QVec>& b) {
    std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size();
    std::vector<QVec> out(n, QVec(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (b[k][j] != 0) out[i][j] = F.norm(out[i][j] + a[i][k] * b[k][j]);
        }
    return out;
}

QVec flat(const std::vector<QVec>& m) {
    QVec v;
    for (auto& r : m) v.insert(v.end(), r.begin(), r.end());
    return v;
}

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.norm(out[i + j] + a[i] * b[j]);
    poly_trim(out);
    return out;
}

Poly poly_sub(const Field& F, Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.norm(a[i] - b[i]);
    poly_trim(a);
    return a;
}

std::pair<Poly, Poly> poly_divmod(const Field& F, Poly a, const Poly& b) {
    poly_trim(a);
    if (b.empty()) throw InvariantBreach("polynomial division by zero");
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    mpq_class li = F.inv(b.back());
    while (a.size() >= b.size() && !a.empty()) {
        std::size_t sh = a.size() - b.size();
        mpq_class c = F.norm(a.back() * li);
        q[sh] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] = F.norm(a[sh + i] - c * b[i]);
        poly_trim(a);
    }
    poly_trim(q);
    return {q, a};
}

// s, t with s a + t b = 1 for coprime a, b.
std::pair<Poly, Poly> poly_bezout(const Field& F, const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    while (!r1.empty()) {
        auto [q, r] = poly_divmod(F, r0, r1);
        Poly s2 = poly_sub(F, s0, poly_mul(F, q, s1));
        Poly t2 = poly_sub(F, t0, poly_mul(F, q, t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.size() != 1) throw InvariantBreach("polynomials are not coprime");
    mpq_class c = F.inv(r0[0]);
    for (auto& x : s0) x = F.norm(x * c);
    for (auto& x : t0) x = F.norm(x * c);
    return {s0, t0};
}

mpq_class poly_eval(const Field& F, const Poly& p, const mpq_class& x) {
    mpq_class v = 0;
    for (std::size_t i = p.size(); i-- > 0;) v = F.norm(v * x + p[i]);
    return v;
}

std::vector<mpz_class> divisors(mpz_class n) {
    if (n < 0) n = -n;
    std::vector<mpz_class> out;
    if (n == 0 || n > mpz_class("1000000000000")) return out;
    for (mpz_class d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    return out;
}

std::vector<mpq_class> field_roots(const Field& F, const Poly& p) {
    std::vector<mpq_class> out;
    if (p.size() <= 1) return out;
    if (F.characteristic() != 0) {
        if (F.characteristic() > 100000) return out;
        for (Int x = 0; x < F.characteristic(); ++x)
            if (poly_eval(F, p, mpq_class(static_cast<long>(x))) == 0) out.push_back(mpq_class(static_cast<long>(x)));
        return out;
    }
    mpz_class l = 1;
    for (auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> z;
    for (auto& c : p) z.push_back(mpq_class(c * l).get_num());
    std::size_t low = 0;
    while (low < z.size() && z[low] == 0) ++low;
    if (low > 0) out.push_back(0);
    for (auto& a : divisors(z[low]))
        for (auto& b : divisors(z.back()))
            for (int sg : {1, -1}) {
                mpq_class r(sg * a, b);
                r.canonicalize();
                if (std::find(out.begin(), out.end(), r) == out.end() && poly_eval(F, p, r) == 0) out.push_back(r);
            }
    return out;
}


// Minimal polynomial of a square matrix.
Poly minimal_polynomial(const Field& F, const std::vector<QVec>& t) {
    std::size_t n = t.size();
    SpanSolver s(F, n * n);
    std::vector<QVec> pw(n, QVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) pw[i][i] = 1;
    for (std::size_t k = 0; k <= n; ++k) {
        QVec f = flat(pw);
        if (!s.add(f)) {
            auto c = s.express(f);
            Poly m(k + 1, 0);
            for (std::size_t i = 0; i < k; ++i) m[i] = F.norm(-(*c)[i]);
            m[k] = 1;
            return m;
        }
        pw = qmul(F, pw, t);
    }
    throw InvariantBreach("minimal polynomial degree exceeds the matrix size");
}

struct Splitter {
    const ProjComplex& M;
    const QuiverAlgebra& A;
    const Field& F;

    Comps poly_of(const Poly& p, const Comps& x) const {
        Comps acc = comps_scale(A, comps_identity(M), 0), pw = comps_identity(M);
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] != 0) acc = comps_add(A, acc, comps_scale(A, pw, p[i]));
            if (i + 1 < p.size()) pw = comps_mul(A, pw, x);
        }
        return acc;
    }

    // Idempotent chain endomorphism with nontrivial scalar part, from x.
    std::optional<Comps> idempotent_from(const Comps& x) const {
        auto t = top_matrix(M, x);
        Poly m = minimal_polynomial(F, t);
        for (auto& lam : field_roots(F, m)) {
            Poly lin = {F.norm(-lam), 1}, pa = {1}, q = m;
            while (true) {
                auto [qq, r] = poly_divmod(F, q, lin);
                if (!r.empty()) break;
                q = qq;
                pa = poly_mul(F, pa, lin);
            }
            if (q.size() <= 1) continue;  // only this eigenvalue
            auto [s, r] = poly_bezout(F, pa, q);
            Poly E = poly_divmod(F, poly_mul(F, r, q), m).second;
            Comps e = poly_of(E, x);
            for (int it = 0; it < 64; ++it) {
                Comps e2 = comps_mul(A, e, e);
                if (comps_equal(e2, e)) return e;
                Comps e3 = comps_mul(A, e2, e);
                e = comps_add(A, comps_scale(A, e2, 3), comps_scale(A, e3, -2));
            }
            throw InvariantBreach("idempotent lifting did not converge");
        }
        return std::nullopt;
    }

    std::pair<ProjComplex, ProjComplex> split(const Comps& e0) const {
        // conjugate by scalar matrices so the scalar part of e becomes a coordinate projection
        std::size_t nt = M.terms.size();
        Comps G(nt), Ginv(nt);
        std::vector<std::vector<bool>> keep(nt);
        for (std::size_t j = 0; j < nt; ++j) {
            const auto& terms = M.terms[j];
            int n = static_cast<int>(terms.size());
            G[j] = AMat(n, n);
            Ginv[j] = AMat(n, n);
            keep[j].assign(n, false);
            std::vector<bool> done(n, false);
            for (int a = 0; a < n; ++a) {
                if (done[a]) continue;
                std::vector<int> idx;
                for (int b = a; b < n; ++b)
                    if (terms[b] == terms[a]) {
                        idx.push_back(b);
                        done[b] = true;
                    }
                int v = terms[a].vertex, r = static_cast<int>(idx.size());
                int unit = A.idempotent(v);
                std::vector<QVec> E(r, QVec(r, 0));
                for (int x = 0; x < r; ++x)
                    for (int y = 0; y < r; ++y) {
                        auto& el = e0[j].at(idx[x], idx[y]);
                        auto it = el.find(unit);
                        if (it != el.end()) E[x][y] = it->second;
                    }
                // columns: a basis of the image, then of the kernel
                std::vector<QVec> cols;
                SpanSolver img(F, r);
                for (int y = 0; y < r; ++y) {
                    QVec c(r);
                    for (int x = 0; x < r; ++x) c[x] = E[x][y];
                    if (img.add(c)) cols.push_back(c);
                }
                std::size_t rank = cols.size();
                for (auto& k : field_kernel(F, E, r)) cols.push_back(k);
                if (static_cast<int>(cols.size()) != r) throw InvariantBreach("scalar part is not idempotent");
                std::vector<QVec> P(r, QVec(r, 0));
                for (int x = 0; x < r; ++x)
                    for (int y = 0; y < r; ++y) P[x][y] = cols[y][x];
                auto Pi = field_inverse(F, P);
                if (!Pi) throw InvariantBreach("singular change of basis");
                for (int x = 0; x < r; ++x) {
                    keep[j][idx[x]] = static_cast<std::size_t>(x) < rank;
                    for (int y = 0; y < r; ++y) {
                        if (P[x][y] != 0) G[j].at(idx[x], idx[y]) = {{unit, P[x][y]}};
                        if ((*Pi)[x][y] != 0) Ginv[j].at(idx[x], idx[y]) = {{unit, (*Pi)[x][y]}};
                    }
                }
            }
        }
        auto conj = [&](const Comps& inv_left, const Comps& m, const Comps& right) {
            Comps out;
            for (std::size_t j = 0; j < m.size(); ++j) out.push_back(amat_mul(A, amat_mul(A, inv_left[j], m[j]), right[j]));
            return out;
        };
        Comps e1 = conj(Ginv, e0, G);
        std::vector<AMat> d1;
        for (std::size_t j = 0; j + 1 < nt; ++j) d1.push_back(amat_mul(A, amat_mul(A, Ginv[j + 1], M.d[j]), G[j]));
        // u = e D + (1 - e)(1 - D) has identity scalar part and conjugates e to D
        Comps D(nt), U(nt), Uinv(nt);
        for (std::size_t j = 0; j < nt; ++j) {
            int n = static_cast<int>(M.terms[j].size());
            D[j] = AMat(n, n);
            for (int a = 0; a < n; ++a)
                if (keep[j][a]) D[j].at(a, a) = A.unit(M.terms[j][a].vertex);
            AMat I = amat_identity(A, M.terms[j]);
            AMat omE = amat_add(A, I, amat_scale(A, e1[j], -1)), omD = amat_add(A, I, amat_scale(A, D[j], -1));
            U[j] = amat_add(A, amat_mul(A, e1[j], D[j]), amat_mul(A, omE, omD));
            AMat nil = amat_add(A, I, amat_scale(A, U[j], -1));
            AMat sum = I, pw = I;
            for (int k = 0;; ++k) {
                pw = amat_mul(A, pw, nil);
                if (pw.is_zero()) break;
                if (k > 4 * A.dim() + n + 4) throw InvariantBreach("unipotent inverse did not terminate");
                sum = amat_add(A, sum, pw);
            }
            Uinv[j] = sum;
        }
        std::vector<AMat> d2;
        for (std::size_t j = 0; j + 1 < nt; ++j) d2.push_back(amat_mul(A, amat_mul(A, Uinv[j + 1], d1[j]), U[j]));
        ProjComplex P1, P2;
        P1.alg = P2.alg = M.alg;
        P1.lo = P2.lo = M.lo;
        std::vector<std::vector<int>> i1(nt), i2(nt);
        for (std::size_t j = 0; j < nt; ++j) {
            P1.terms.emplace_back();
            P2.terms.emplace_back();
            for (int a = 0; a < static_cast<int>(M.terms[j].size()); ++a) {
                if (keep[j][a]) {
                    i1[j].push_back(a);
                    P1.terms[j].push_back(M.terms[j][a]);
                } else {
                    i2[j].push_back(a);
                    P2.terms[j].push_back(M.terms[j][a]);
                }
            }
        }
        auto sub = [&](const AMat& m, const std::vector<int>& rows, const std::vector<int>& cols) {
            AMat out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t c = 0; c < cols.size(); ++c) out.at(static_cast<int>(r), static_cast<int>(c)) = m.at(rows[r], cols[c]);
            return out;
        };
        for (std::size_t j = 0; j + 1 < nt; ++j) {
            if (!sub(d2[j], i1[j + 1], i2[j]).is_zero() || !sub(d2[j], i2[j + 1], i1[j]).is_zero())
                throw InvariantBreach("conjugated differential is not block diagonal");
            P1.d.push_back(sub(d2[j], i1[j + 1], i1[j]));
            P2.d.push_back(sub(d2[j], i2[j + 1], i2[j]));
        }
        P1.trim();
        P2.trim();
        return {P1, P2};
    }
};

void decompose_minimal(const ProjComplex& M, std::vector<ProjComplex>& out) {
    if (M.is_zero()) return;
    const auto& A = *M.alg;
    const Field& F = A.field();
    HomSpace H(M, M);
    auto cocycles = H.cocycles();
    std::size_t N = M.total_rank();
    if (F.characteristic() != 0 && F.characteristic() <= static_cast<Int>(N))
        throw InputError("field characteristic too small to decompose a complex of rank " + std::to_string(N));
    // scalar image of the endomorphism algebra and its trace form
    SpanSolver span(F, N * N);
    std::vector<std::vector<QVec>> basis;
    auto consider = [&](const std::vector<QVec>& t) {
        if (span.add(flat(t))) basis.push_back(t);
    };
    consider(top_matrix(M, comps_identity(M)));
    for (auto& z : cocycles) consider(top_matrix(M, z.comp));
    std::vector<QVec> gram(basis.size(), QVec(basis.size(), 0));
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = 0; b < basis.size(); ++b) {
            auto p = qmul(F, basis[a], basis[b]);
            mpq_class tr = 0;
            for (std::size_t i = 0; i < N; ++i) tr += p[i][i];
            gram[a][b] = F.norm(tr);
        }
    if (field_rank(F, gram) <= 1) {
        out.push_back(M);
        return;
    }
    Splitter sp{M, A, F};
    std::vector<Comps> cands;
    for (auto& z : cocycles) cands.push_back(z.comp);
    for (std::size_t a = 0; a < cocycles.size(); ++a)
        for (std::size_t b = a + 1; b < cocycles.size(); ++b)
            for (int c : {1, 2, -1, 3}) cands.push_back(comps_add(A, cocycles[a].comp, comps_scale(A, cocycles[b].comp, c)));
    for (auto& x : cands) {
        auto e = sp.idempotent_from(x);
        if (!e) continue;
        auto [P1, P2] = sp.split(*e);
        if (P1.is_zero() || P2.is_zero()) continue;
        decompose_minimal(P1, out);
        decompose_minimal(P2, out);
        return;
    }
    throw InvariantBreach("endomorphism algebra is not local but no idempotent was found");
}

}  // namespace

std::vector<QVec> top_matrix(const ProjComplex& X, const std::vector<AMat>& comps) {
    std::size_t N = X.total_rank();
    std::vector<QVec> t(N, QVec(N, 0));
    std::size_t off = 0;
    for (std::size_t j = 0; j < X.terms.size(); ++j) {
        const auto& terms = X.terms[j];
        for (std::size_t r = 0; r < terms.size(); ++r)
            for (std::size_t c = 0; c < terms.size(); ++c) {
                if (terms[r] != terms[c]) continue;
                auto& el = comps[j].at(static_cast<int>(r), static_cast<int>(c));
                auto it = el.find(X.alg->idempotent(terms[r].vertex));
                if (it != el.end()) t[off + r][off + c] = it->second;
            }
        off += terms.size();
    }
    return t;
}

std::vector<ProjComplex> decompose(const ProjComplex& X) {
    std::vector<ProjComplex> out;
    decompose_minimal(minimal_model(X), out);
    return out;
}

}  // namespace hs
