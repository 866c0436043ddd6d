#include "hs/linalg.hpp"

#include "hs/errors.hpp"

namespace hs {

namespace {

bool is_probable_prime(Int p) {
    if (p < 2) return false;
    for (Int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

Field Field::prime(Int p) {
    if (!is_probable_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
    Field f;
    f.p_ = p;
    return f;
}

mpq_class Field::norm(const mpq_class& x) const {
    if (p_ == 0) return x;
    mpz_class P(static_cast<long>(p_)), num = x.get_num(), den = x.get_den(), inv;
    mpz_class dm = den % P;
    if (dm < 0) dm += P;
    if (dm == 0) throw InputError("coefficient " + x.get_str() + " has a denominator divisible by " + std::to_string(p_));
    mpz_invert(inv.get_mpz_t(), dm.get_mpz_t(), P.get_mpz_t());
    mpz_class r = (num * inv) % P;
    if (r < 0) r += P;
    return mpq_class(r);
}

mpq_class Field::inv(const mpq_class& x) const {
    mpq_class y = norm(x);
    if (y == 0) throw InvariantBreach("inverting zero");
    if (p_ == 0) return 1 / y;
    mpz_class P(static_cast<long>(p_)), r;
    mpz_class n = y.get_num();
    mpz_invert(r.get_mpz_t(), n.get_mpz_t(), P.get_mpz_t());
    return mpq_class(r);
}

std::string Field::str() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

int field_rank(const Field& F, std::vector<QVec> m) {
    int rank = 0;
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
        std::size_t piv = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        mpq_class iv = F.inv(m[rank][c]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            mpq_class f = F.norm(m[r][c] * iv);
            for (std::size_t j = c; j < cols; ++j) m[r][j] = F.norm(m[r][j] - f * m[rank][j]);
        }
        ++rank;
    }
    return rank;
}

std::vector<QVec> field_kernel(const Field& F, std::vector<QVec> m, std::size_t cols) {
    std::size_t rows = m.size();
    std::vector<std::size_t> pivcol;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        mpq_class iv = F.inv(m[rank][c]);
        for (std::size_t j = c; j < cols; ++j) m[rank][j] = F.norm(m[rank][j] * iv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            mpq_class f = m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[r][j] = F.norm(m[r][j] - f * m[rank][j]);
        }
        pivcol.push_back(c);
        ++rank;
    }
    std::vector<bool> is_piv(cols, false);
    for (auto c : pivcol) is_piv[c] = true;
    std::vector<QVec> out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        QVec v(cols, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < rank; ++r) v[pivcol[r]] = F.norm(-m[r][f]);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<std::vector<QVec>> field_inverse(const Field& F, std::vector<QVec> m) {
    std::size_t n = m.size();
    std::vector<QVec> inv(n, QVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t r = c; r < n; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv == n) return std::nullopt;
        std::swap(m[c], m[piv]);
        std::swap(inv[c], inv[piv]);
        mpq_class iv = F.inv(m[c][c]);
        for (std::size_t j = 0; j < n; ++j) {
            m[c][j] = F.norm(m[c][j] * iv);
            inv[c][j] = F.norm(inv[c][j] * iv);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            mpq_class f = m[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] = F.norm(m[r][j] - f * m[c][j]);
                inv[r][j] = F.norm(inv[r][j] - f * inv[c][j]);
            }
        }
    }
    return inv;
}

void SpanSolver::reduce(QVec& v, QVec* comb) const {
    for (auto& row : rows_) {
        if (v[row.pivot] == 0) continue;
        mpq_class f = v[row.pivot];
        for (std::size_t j = row.pivot; j < dim_; ++j)
            if (row.v[j] != 0) v[j] = F_.norm(v[j] - f * row.v[j]);
        if (comb)
            for (std::size_t g = 0; g < row.comb.size(); ++g)
                if (row.comb[g] != 0) (*comb)[g] = F_.norm((*comb)[g] - f * row.comb[g]);
    }
}

bool SpanSolver::add(const QVec& v0) {
    if (v0.size() != dim_) throw InvariantBreach("span solver dimension mismatch");
    QVec v(dim_);
    for (std::size_t j = 0; j < dim_; ++j) v[j] = F_.norm(v0[j]);
    QVec comb(gens_ + 1, 0);
    comb[gens_] = 1;
    reduce(v, &comb);
    std::size_t piv = dim_;
    for (std::size_t j = 0; j < dim_; ++j)
        if (v[j] != 0) {
            piv = j;
            break;
        }
    if (piv == dim_) return false;
    mpq_class iv = F_.inv(v[piv]);
    for (auto& x : v) x = F_.norm(x * iv);
    for (auto& x : comb) x = F_.norm(x * iv);
    for (auto& row : rows_) row.comb.resize(gens_ + 1, 0);
    rows_.push_back({piv, std::move(v), std::move(comb)});
    ++gens_;
    return true;
}

bool SpanSolver::contains(const QVec& v0) const {
    QVec v(dim_);
    for (std::size_t j = 0; j < dim_; ++j) v[j] = F_.norm(v0[j]);
    reduce(v, nullptr);
    for (auto& x : v)
        if (x != 0) return false;
    return true;
}

std::optional<QVec> SpanSolver::express(const QVec& v0) const {
    if (v0.size() != dim_) throw InvariantBreach("span solver dimension mismatch");
    QVec v(dim_);
    for (std::size_t j = 0; j < dim_; ++j) v[j] = F_.norm(v0[j]);
    QVec comb(gens_, 0);
    reduce(v, &comb);
    for (auto& x : v)
        if (x != 0) return std::nullopt;
    for (auto& x : comb) x = F_.norm(-x);
    return comb;
}

QVec SpanSolver::reduced(const QVec& v0) const {
    QVec v(dim_);
    for (std::size_t j = 0; j < dim_; ++j) v[j] = F_.norm(v0[j]);
    reduce(v, nullptr);
    return v;
}

}  // namespace hs
