#include "hs/ktheory.hpp"

#include <algorithm>
#include <sstream>

#include "hs/errors.hpp"
#include "hs/partition.hpp"

namespace hs {

using json = nlohmann::json;

// ---- LaurentPoly

LaurentPoly LaurentPoly::monomial(Int coeff, Int exp) {
    LaurentPoly p;
    p.add_term(coeff, exp);
    return p;
}

Int LaurentPoly::coeff(Int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? 0 : it->second;
}

Int LaurentPoly::min_degree() const {
    if (c_.empty()) throw InvariantBreach("degree of the zero polynomial");
    return c_.begin()->first;
}

Int LaurentPoly::max_degree() const {
    if (c_.empty()) throw InvariantBreach("degree of the zero polynomial");
    return c_.rbegin()->first;
}

Int LaurentPoly::at_one() const {
    Int s = 0;
    for (auto& [e, c] : c_) s = ck_add(s, c);
    return s;
}

void LaurentPoly::add_term(Int coeff, Int exp) {
    if (coeff == 0) return;
    Int v = ck_add(this->coeff(exp), coeff);
    if (v == 0) c_.erase(exp);
    else c_[exp] = v;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto& [e, c] : o.c_) add_term(c, e);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (auto& [e, c] : o.c_) add_term(ck_mul(-1, c), e);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (auto& [e1, c1] : c_)
        for (auto& [e2, c2] : o.c_) r.add_term(ck_mul(c1, c2), ck_add(e1, e2));
    return r;
}

LaurentPoly LaurentPoly::shift(Int k) const {
    LaurentPoly r;
    for (auto& [e, c] : c_) r.c_[ck_add(e, k)] = c;
    return r;
}

LaurentPoly LaurentPoly::scaled(Int s) const {
    LaurentPoly r;
    for (auto& [e, c] : c_) r.add_term(ck_mul(c, s), e);
    return r;
}

LaurentPoly LaurentPoly::truncated(Int max_exp) const {
    LaurentPoly r;
    for (auto& [e, c] : c_)
        if (e <= max_exp) r.c_[e] = c;
    return r;
}

LaurentPoly LaurentPoly::in_t() const {
    LaurentPoly r;
    for (auto& [e, c] : c_) r.add_term((e % 2 == 0) ? c : ck_mul(-1, c), -e);
    return r;
}

std::string LaurentPoly::str(const char* var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : c_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        Int a = c < 0 ? -c : c;
        if (e == 0) os << a;
        else {
            if (a != 1) os << a << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

json to_json(const LaurentPoly& p) {
    json j = json::object();
    for (auto& [e, c] : p.coeffs()) j[std::to_string(e)] = c;
    return j;
}

// ---- LaurentCharacter

void LaurentCharacter::add(const Vec& mu, const LaurentPoly& p) {
    LaurentPoly t = p.truncated(trunc);
    if (t.is_zero()) return;
    auto& slot = terms[mu];
    slot += t;
    if (slot.is_zero()) terms.erase(mu);
}

LaurentCharacter& LaurentCharacter::operator+=(const LaurentCharacter& o) {
    trunc = std::min(trunc, o.trunc);
    LaurentCharacter r;
    r.trunc = trunc;
    for (auto& [mu, p] : terms) r.add(mu, p);
    for (auto& [mu, p] : o.terms) r.add(mu, p);
    *this = r;
    return *this;
}

LaurentCharacter LaurentCharacter::operator-(const LaurentCharacter& o) const {
    LaurentCharacter r = *this;
    r += o.times(LaurentPoly::monomial(-1, 0));
    return r;
}

LaurentCharacter LaurentCharacter::shift(Int k) const {
    LaurentCharacter r;
    r.trunc = ck_add(trunc, k);
    for (auto& [mu, p] : terms) r.add(mu, p.shift(k));
    return r;
}

LaurentCharacter LaurentCharacter::times(const LaurentPoly& p) const {
    LaurentCharacter r;
    if (p.is_zero()) {
        r.trunc = trunc;
        return r;
    }
    r.trunc = ck_add(trunc, p.min_degree());
    for (auto& [mu, q] : terms) r.add(mu, q * p);
    return r;
}

LaurentCharacter LaurentCharacter::truncated(Int t) const {
    LaurentCharacter r;
    r.trunc = std::min(t, trunc);
    for (auto& [mu, p] : terms) r.add(mu, p);
    return r;
}

bool LaurentCharacter::agrees_with(const LaurentCharacter& o) const {
    Int t = std::min(trunc, o.trunc);
    return truncated(t).terms == o.truncated(t).terms;
}

std::string LaurentCharacter::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [mu, p] : terms) {
        if (!first) os << " + ";
        os << "(" << p.str() << ")*chi" << vec_str(mu);
        first = false;
    }
    return os.str();
}

json to_json(const LaurentCharacter& c) {
    json terms = json::array();
    for (auto& [mu, p] : c.terms) terms.push_back({{"weight", mu}, {"poly", to_json(p)}});
    return {{"trunc", c.trunc}, {"terms", terms}};
}

std::string CharConvention::name() const {
    return std::string(negative_roots ? "negative_roots" : "positive_roots") + "/" + (act_on_target ? "act_on_target" : "act_on_source");
}

// ---- CharacterEngine

namespace {

using QMatrix = std::vector<std::vector<mpq_class>>;

QMatrix invert(QMatrix m) {
    std::size_t n = m.size();
    QMatrix inv(n, std::vector<mpq_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) throw InvariantBreach("singular matrix");
        std::swap(m[c], m[piv]);
        std::swap(inv[c], inv[piv]);
        mpq_class f = m[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            m[c][j] /= f;
            inv[c][j] /= f;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            mpq_class g = m[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] -= g * m[c][j];
                inv[r][j] -= g * inv[c][j];
            }
        }
    }
    return inv;
}

int sign_of(int len) { return len % 2 ? -1 : 1; }

}  // namespace

CharacterEngine::CharacterEngine(const RootDatum& d, CharConvention conv) : d_(d), conv_(conv) {
    int r = d.rank(), n = d.dim();
    QMatrix ata(r, std::vector<mpq_class>(r, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < n; ++k) ata[i][j] += mpq_class(d.simple_root(i)[k]) * d.simple_root(j)[k];
    if (r > 0) {
        QMatrix inv = invert(ata);
        left_inv_.assign(r, std::vector<mpq_class>(n, 0));
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < n; ++k)
                for (int j = 0; j < r; ++j) left_inv_[i][k] += inv[i][j] * d.simple_root(j)[k];
    }
    for (auto& pr : d.positive_roots()) pos_coeffs_.push_back(pr.root_coeffs);
}

std::optional<Vec> CharacterEngine::root_coeffs(const Vec& nu) const {
    int r = d_.rank();
    Vec c(r);
    for (int i = 0; i < r; ++i) {
        mpq_class s = 0;
        for (int k = 0; k < d_.dim(); ++k) s += left_inv_[i][k] * nu[k];
        if (s.get_den() != 1) return std::nullopt;
        c[i] = s.get_num().get_si();
    }
    Vec back = d_.zero();
    for (int i = 0; i < r; ++i) back = vadd(back, vscale(c[i], d_.simple_root(i)));
    if (back != nu) return std::nullopt;
    return c;
}

const std::map<Vec, LaurentPoly>& CharacterEngine::kostant_table(Int trunc) const {
    std::lock_guard<std::mutex> g(mu_);
    auto it = tables_.find(trunc);
    if (it != tables_.end()) return it->second;
    std::map<Vec, LaurentPoly> table;
    table[d_.zero()] = LaurentPoly::one();
    for (auto& pr : d_.positive_roots()) {
        Vec beta = conv_.negative_roots ? vneg(pr.root) : pr.root;
        std::map<Vec, LaurentPoly> next;
        for (auto& [nu, p] : table) {
            Vec cur = nu;
            for (Int m = 0; 2 * m + p.min_degree() <= trunc; ++m) {
                LaurentPoly t = p.shift(2 * m).truncated(trunc);
                if (!t.is_zero()) next[cur] += t;
                cur = vadd(cur, beta);
            }
        }
        table.swap(next);
    }
    return tables_.emplace(trunc, std::move(table)).first->second;
}

LaurentPoly CharacterEngine::q_kostant(const Vec& nu, Int trunc) const {
    if (trunc < 0) throw InputError("truncation must be nonnegative");
    const auto& t = kostant_table(trunc);
    auto it = t.find(nu);
    return it == t.end() ? LaurentPoly() : it->second;
}

Int CharacterEngine::kostant(const Vec& nu) const {
    auto c = root_coeffs(nu);
    if (!c) return 0;
    std::function<Int(int, const Vec&)> rec = [&](int j, const Vec& rest) -> Int {
        for (Int x : rest)
            if (x < 0) return 0;
        if (j == static_cast<int>(pos_coeffs_.size())) return is_zero(rest) ? 1 : 0;
        {
            std::lock_guard<std::mutex> g(mu_);
            auto it = pf_memo_.find({j, rest});
            if (it != pf_memo_.end()) return it->second;
        }
        Int total = 0;
        Vec cur = rest;
        while (std::all_of(cur.begin(), cur.end(), [](Int x) { return x >= 0; })) {
            total = ck_add(total, rec(j + 1, cur));
            cur = vsub(cur, pos_coeffs_[j]);
        }
        std::lock_guard<std::mutex> g(mu_);
        pf_memo_[{j, rest}] = total;
        return total;
    };
    return rec(0, *c);
}

std::optional<std::pair<Vec, int>> CharacterEngine::straighten(const Vec& x) const {
    Vec rho = d_.rho();
    auto dd = d_.dominant_data(vadd(x, rho));
    for (int i = 0; i < d_.rank(); ++i)
        if (d_.pairing(d_.simple_coroot(i), dd.dom) == 0) return std::nullopt;
    return std::make_pair(vsub(dd.dom, rho), sign_of(dd.delta));
}

LaurentCharacter CharacterEngine::aj_character(const Vec& lam, Int trunc) const {
    if (static_cast<int>(lam.size()) != d_.dim()) throw InputError("weight has wrong dimension: " + vec_str(lam));
    const auto& table = kostant_table(trunc);
    LaurentCharacter out;
    out.trunc = trunc;
    if (conv_.act_on_target) {
        // sum_w (-1)^l(w) P(w(mu+rho) - (lam+rho)) = straightening of sum_nu P(nu) chi(lam+nu)
        for (auto& [nu, p] : table) {
            auto s = straighten(vadd(lam, nu));
            if (s) out.add(s->first, p.scaled(s->second));
        }
    } else {
        // sum_w (-1)^l(w) P(w(lam+rho) - (mu+rho)), mu dominant
        Vec rho = d_.rho();
        for (auto w : d_.elements()) {
            Vec x = d_.act(w, vadd(lam, rho));
            int sg = sign_of(d_.length(w));
            for (auto& [nu, p] : table) {
                Vec mu = vsub(vsub(x, nu), rho);
                if (d_.is_dominant(mu)) out.add(mu, p.scaled(sg));
            }
        }
    }
    return out;
}

LaurentCharacter CharacterEngine::nabla_bar_character(const Vec& lam, Int trunc) const {
    if (!d_.is_dominant(lam)) throw InputError("nabla_bar needs a dominant weight: " + vec_str(lam));
    return aj_character(lam, trunc).shift(-d_.delta_star(lam));
}

LaurentCharacter CharacterEngine::delta_bar_character(const Vec& lam, Int trunc) const {
    if (!d_.is_dominant(lam)) throw InputError("delta_bar needs a dominant weight: " + vec_str(lam));
    return aj_character(d_.act(d_.longest_element(), lam), trunc).shift(d_.delta_star(lam));
}

LaurentCharacter CharacterEngine::weyl_character(const Vec& lam, Int trunc) const {
    LaurentCharacter c;
    c.trunc = trunc;
    auto s = straighten(lam);
    if (s) c.add(s->first, LaurentPoly::monomial(s->second, 0));
    return c;
}

std::map<Vec, Int> CharacterEngine::weight_multiplicities(const Vec& lam) const {
    if (!d_.is_dominant(lam)) throw InputError("weight multiplicities need a dominant weight: " + vec_str(lam));
    auto span = root_coeffs(vsub(lam, d_.act(d_.longest_element(), lam)));
    if (!span) throw InvariantBreach("lam - w0 lam outside the root lattice");
    Vec rho = d_.rho();
    std::vector<Vec> shifted;
    std::vector<int> signs;
    for (auto w : d_.elements()) {
        shifted.push_back(d_.act(w, vadd(lam, rho)));
        signs.push_back(sign_of(d_.length(w)));
    }
    std::map<Vec, Int> out;
    int r = d_.rank();
    Vec c(r, 0);
    while (true) {
        Vec nu = lam;
        for (int i = 0; i < r; ++i) nu = vsub(nu, vscale(c[i], d_.simple_root(i)));
        Int m = 0;
        for (std::size_t k = 0; k < shifted.size(); ++k) m = ck_add(m, ck_mul(signs[k], kostant(vsub(shifted[k], vadd(nu, rho)))));
        if (m != 0) out[nu] = m;
        int i = 0;
        while (i < r && c[i] == (*span)[i]) c[i++] = 0;
        if (i == r) break;
        ++c[i];
    }
    return out;
}

// Brauer-Klimyk: chi(mu) chi(lam) = sum_nu m_lam(nu) chi(mu + nu), straightened.
LaurentCharacter CharacterEngine::product_with_weyl(const LaurentCharacter& c, const Vec& lam) const {
    auto mult = weight_multiplicities(lam);
    LaurentCharacter out;
    out.trunc = c.trunc;
    for (auto& [mu, p] : c.terms)
        for (auto& [nu, m] : mult) {
            auto s = straighten(vadd(mu, nu));
            if (s) out.add(s->first, p.scaled(ck_mul(m, s->second)));
        }
    return out;
}

LaurentCharacter CharacterEngine::free_module_character(const Vec& lam, Int trunc) const {
    if (!d_.is_dominant(lam)) throw InputError("free module character needs a dominant weight: " + vec_str(lam));
    return product_with_weyl(aj_character(d_.zero(), trunc), lam);
}

bool CharacterEngine::verify_aj_sum_identity(const Vec& lam, Int trunc) const {
    LaurentCharacter lhs = free_module_character(lam, trunc);
    LaurentCharacter rhs;
    rhs.trunc = trunc;
    for (auto& [nu, m] : weight_multiplicities(lam)) rhs += aj_character(nu, trunc).times(LaurentPoly::monomial(m, 0));
    return lhs.agrees_with(rhs);
}

// ---- nilpotent cone

std::vector<int> invariant_degrees(const RootDatum& d) {
    std::map<Int, int> by_height;
    for (auto& pr : d.positive_roots()) ++by_height[pr.height];
    std::vector<int> counts;
    for (auto& [h, c] : by_height) counts.push_back(c);
    std::vector<int> degrees;
    for (int e : transpose(normalize_partition(counts))) degrees.push_back(e + 1);
    for (int i = d.rank(); i < d.dim(); ++i) degrees.push_back(1);
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

LaurentCharacter nilcone_character(const RootDatum& d, Int trunc) {
    // formal character of S(g*) with g* in degree 2
    std::vector<Vec> weights;
    for (auto& pr : d.positive_roots()) {
        weights.push_back(pr.root);
        weights.push_back(vneg(pr.root));
    }
    for (int i = 0; i < d.dim(); ++i) weights.push_back(d.zero());
    std::map<Vec, LaurentPoly> fm;
    fm[d.zero()] = LaurentPoly::one();
    for (auto& beta : weights) {
        std::map<Vec, LaurentPoly> next;
        for (auto& [nu, p] : fm) {
            Vec cur = nu;
            for (Int m = 0; 2 * m + p.min_degree() <= trunc; ++m) {
                LaurentPoly t = p.shift(2 * m).truncated(trunc);
                if (!t.is_zero()) next[cur] += t;
                cur = vadd(cur, beta);
            }
        }
        fm.swap(next);
    }
    LaurentPoly factor = LaurentPoly::one();
    for (int deg : invariant_degrees(d)) factor = factor * (LaurentPoly::one() - LaurentPoly::monomial(1, 2 * deg));
    for (auto& [nu, p] : fm) p = (p * factor).truncated(trunc);
    // c_mu = sum_w (-1)^l(w) m(mu + rho - w rho)
    Vec rho = d.rho();
    LaurentCharacter out;
    out.trunc = trunc;
    for (auto& [mu, p] : fm) {
        if (!d.is_dominant(mu)) continue;
        LaurentPoly c;
        for (auto w : d.elements()) {
            auto it = fm.find(vsub(vadd(mu, rho), d.act(w, rho)));
            if (it != fm.end()) c += it->second.scaled(sign_of(d.length(w)));
        }
        out.add(mu, c);
    }
    return out;
}

json CalibrationReport::to_json() const {
    json tried_j = json::array();
    for (auto& [c, ok] : tried) tried_j.push_back({{"convention", c.name()}, {"passed", ok}});
    return {{"anchor", "nilcone_coordinate_ring"}, {"trunc", trunc}, {"tried", tried_j}, {"chosen", chosen.name()}};
}

CalibrationReport calibrate_characters(const RootDatum& d, Int trunc) {
    CalibrationReport rep;
    rep.trunc = trunc;
    LaurentCharacter anchor = nilcone_character(d, trunc);
    int passed = 0;
    for (CharConvention c : {CharConvention{false, false}, CharConvention{true, false}, CharConvention{false, true},
                             CharConvention{true, true}}) {
        CharacterEngine e(d, c);
        bool ok = e.aj_character(d.zero(), trunc).agrees_with(anchor);
        rep.tried.push_back({c, ok});
        if (ok) {
            if (passed == 0) rep.chosen = c;
            ++passed;
        }
    }
    if (passed != 1)
        throw CalibrationError(std::to_string(passed) + " character conventions reproduce the nilcone character at trunc " +
                               std::to_string(trunc));
    return rep;
}

// ---- triangular expansion

namespace {

using Coord = std::pair<Vec, Int>;

std::map<Coord, Int> flatten(const LaurentCharacter& c, Int trunc) {
    std::map<Coord, Int> out;
    for (auto& [mu, p] : c.terms)
        for (auto& [e, x] : p.coeffs())
            if (e <= trunc) out[{mu, e}] = x;
    return out;
}

}  // namespace

json TriangularResult::to_json() const {
    json j = {{"ok", ok}, {"unitriangular", unitriangular}, {"detail", verdict_detail}};
    if (!error.empty()) j["error"] = error;
    json m = json::array();
    for (auto& row : coeffs) {
        json r = json::array();
        for (auto& p : row) r.push_back(hs::to_json(p));
        m.push_back(r);
    }
    j["coeffs"] = m;
    return j;
}

TriangularResult triangular_expansion(const std::vector<LaurentCharacter>& targets, const std::vector<Vec>& target_labels,
                                      const std::vector<LaurentCharacter>& basis, const std::vector<Vec>& basis_labels,
                                      const std::function<bool(const Vec&, const Vec&)>& leq, ExpansionMode mode) {
    if (targets.size() != target_labels.size() || basis.size() != basis_labels.size())
        throw InputError("labels do not match characters");
    TriangularResult res;
    Int trunc = std::numeric_limits<Int>::max();
    for (auto& c : targets) trunc = std::min(trunc, c.trunc);
    for (auto& c : basis) trunc = std::min(trunc, c.trunc);
    std::size_t nb = basis.size();
    res.coeffs.assign(targets.size(), std::vector<LaurentPoly>(nb));

    if (mode == ExpansionMode::Scalar) {
        std::map<Coord, std::size_t> index;
        std::vector<std::map<Coord, Int>> cols;
        for (auto& b : basis) {
            cols.push_back(flatten(b, trunc));
            for (auto& [k, v] : cols.back()) index.emplace(k, 0);
        }
        std::vector<std::map<Coord, Int>> rhs;
        for (auto& t : targets) {
            rhs.push_back(flatten(t, trunc));
            for (auto& [k, v] : rhs.back()) index.emplace(k, 0);
        }
        std::size_t row = 0;
        for (auto& [k, v] : index) v = row++;
        std::size_t nr = index.size(), nt = targets.size();
        QMatrix a(nr, std::vector<mpq_class>(nb + nt, 0));
        for (std::size_t j = 0; j < nb; ++j)
            for (auto& [k, v] : cols[j]) a[index[k]][j] = v;
        for (std::size_t j = 0; j < nt; ++j)
            for (auto& [k, v] : rhs[j]) a[index[k]][nb + j] = v;
        // reduce the basis columns
        std::vector<std::size_t> pivrow(nb);
        std::size_t r = 0;
        for (std::size_t c = 0; c < nb; ++c) {
            std::size_t p = r;
            while (p < nr && a[p][c] == 0) ++p;
            if (p == nr) {
                res.error = "dependent_basis";
                res.verdict_detail = "basis element " + std::to_string(c) + " lies in the span of the earlier ones";
                return res;
            }
            std::swap(a[r], a[p]);
            mpq_class f = a[r][c];
            for (auto& x : a[r]) x /= f;
            for (std::size_t i = 0; i < nr; ++i) {
                if (i == r || a[i][c] == 0) continue;
                mpq_class g = a[i][c];
                for (std::size_t j = c; j < nb + nt; ++j) a[i][j] -= g * a[r][j];
            }
            pivrow[c] = r++;
        }
        for (std::size_t t = 0; t < nt; ++t) {
            for (std::size_t i = r; i < nr; ++i)
                if (a[i][nb + t] != 0) {
                    res.error = "not_in_span";
                    res.verdict_detail = "target " + std::to_string(t) + " is not a combination of the basis";
                    return res;
                }
            for (std::size_t j = 0; j < nb; ++j) {
                mpq_class x = a[pivrow[j]][nb + t];
                if (x.get_den() != 1) {
                    res.error = "non_integral";
                    res.verdict_detail = "coefficient " + x.get_str() + " is not an integer";
                    return res;
                }
                if (x != 0) res.coeffs[t][j] = LaurentPoly::monomial(x.get_num().get_si(), 0);
            }
        }
    } else {
        std::vector<Int> lead_deg(nb);
        std::vector<Vec> lead(nb);
        std::vector<Int> lead_coeff(nb);
        std::map<Vec, std::size_t> by_lead;
        for (std::size_t j = 0; j < nb; ++j) {
            auto f = flatten(basis[j], trunc);
            if (f.empty()) {
                res.error = "dependent_basis";
                res.verdict_detail = "basis element " + std::to_string(j) + " vanishes";
                return res;
            }
            Int d = std::numeric_limits<Int>::max();
            for (auto& [k, v] : f) d = std::min(d, k.second);
            int count = 0;
            for (auto& [k, v] : f)
                if (k.second == d) {
                    ++count;
                    lead[j] = k.first;
                    lead_coeff[j] = v;
                }
            lead_deg[j] = d;
            if (count != 1 || (lead_coeff[j] != 1 && lead_coeff[j] != -1) || by_lead.count(lead[j])) {
                res.error = "leading_weight_clash";
                res.verdict_detail = "basis element " + std::to_string(j) + " has no unique unit leading term";
                return res;
            }
            by_lead[lead[j]] = j;
        }
        for (std::size_t t = 0; t < targets.size(); ++t) {
            LaurentCharacter resid = targets[t].truncated(trunc);
            while (!resid.is_zero()) {
                Int e = std::numeric_limits<Int>::max();
                for (auto& [mu, p] : resid.terms) e = std::min(e, p.min_degree());
                std::vector<std::pair<std::size_t, LaurentPoly>> steps;
                for (auto& [mu, p] : resid.terms) {
                    Int c = p.coeff(e);
                    if (c == 0) continue;
                    auto it = by_lead.find(mu);
                    if (it == by_lead.end()) {
                        res.error = "not_in_span";
                        res.verdict_detail = "weight " + vec_str(mu) + " in degree " + std::to_string(e) + " has no basis element";
                        return res;
                    }
                    std::size_t j = it->second;
                    steps.push_back({j, LaurentPoly::monomial(c * lead_coeff[j], e - lead_deg[j])});
                }
                for (auto& [j, x] : steps) {
                    res.coeffs[t][j] += x;
                    for (auto& [mu, p] : basis[j].terms) resid.add(mu, (p * x).scaled(-1));
                }
            }
        }
    }
    res.ok = true;
    res.unitriangular = true;
    for (std::size_t t = 0; t < targets.size() && res.unitriangular; ++t) {
        bool diag = false;
        for (std::size_t j = 0; j < nb; ++j) {
            const auto& c = res.coeffs[t][j];
            if (basis_labels[j] == target_labels[t]) {
                diag = true;
                if (c != LaurentPoly::one()) {
                    res.unitriangular = false;
                    res.verdict_detail = "diagonal entry at " + vec_str(target_labels[t]) + " is " + c.str();
                }
            } else if (!c.is_zero() && !leq(basis_labels[j], target_labels[t])) {
                res.unitriangular = false;
                res.verdict_detail = "entry at (" + vec_str(target_labels[t]) + ", " + vec_str(basis_labels[j]) + ") is above the diagonal";
            }
            if (!res.unitriangular) break;
        }
        if (res.unitriangular && !diag) {
            res.unitriangular = false;
            res.verdict_detail = "no basis element labelled " + vec_str(target_labels[t]);
        }
    }
    if (res.unitriangular) res.verdict_detail = "unitriangular";
    return res;
}

}  // namespace hs
