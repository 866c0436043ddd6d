#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hs/root_data.hpp"

namespace hs {

// Finitely supported exponent -> coefficient in q; no zero coefficients stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly monomial(Int coeff, Int exp);
    static LaurentPoly one() { return monomial(1, 0); }

    const std::map<Int, Int>& coeffs() const { return c_; }
    Int coeff(Int exp) const;
    bool is_zero() const { return c_.empty(); }
    Int min_degree() const;
    Int max_degree() const;
    Int at_one() const;

    void add_term(Int coeff, Int exp);
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly shift(Int k) const;  // times q^k
    LaurentPoly scaled(Int s) const;
    LaurentPoly truncated(Int max_exp) const;
    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
    bool operator!=(const LaurentPoly& o) const { return c_ != o.c_; }

    // Substitute q = -t^{-1}.
    LaurentPoly in_t() const;
    std::string str(const char* var = "q") const;

private:
    std::map<Int, Int> c_;
};

// Coordinates in the Weyl character basis chi(mu), mu dominant, exact in q-degrees <= trunc.
struct LaurentCharacter {
    Int trunc = 0;
    std::map<Vec, LaurentPoly> terms;

    void add(const Vec& mu, const LaurentPoly& p);
    LaurentCharacter& operator+=(const LaurentCharacter& o);
    LaurentCharacter operator-(const LaurentCharacter& o) const;
    LaurentCharacter shift(Int k) const;
    LaurentCharacter times(const LaurentPoly& p) const;
    LaurentCharacter truncated(Int t) const;
    bool is_zero() const { return terms.empty(); }
    // Equality in all degrees both sides know about.
    bool agrees_with(const LaurentCharacter& o) const;
    bool operator==(const LaurentCharacter& o) const { return trunc == o.trunc && terms == o.terms; }
    std::string str() const;
};

nlohmann::json to_json(const LaurentPoly& p);
nlohmann::json to_json(const LaurentCharacter& c);

struct CharConvention {
    bool negative_roots = false;  // partition function over the negative roots
    bool act_on_target = false;   // W acts on mu + rho instead of lam + rho
    std::string name() const;
};

class CharacterEngine {
public:
    // The datum must outlive the engine.
    CharacterEngine(const RootDatum& d, CharConvention conv = {false, true});

    const RootDatum& datum() const { return d_; }
    const CharConvention& convention() const { return conv_; }

    // Graded partition function: q^{2 (number of roots used)}.
    LaurentPoly q_kostant(const Vec& nu, Int trunc) const;
    // Ordinary partition function.
    Int kostant(const Vec& nu) const;
    std::optional<Vec> root_coeffs(const Vec& nu) const;

    // chi(x) = sign * chi(dominant) or zero if x + rho is singular.
    std::optional<std::pair<Vec, int>> straighten(const Vec& x) const;

    LaurentCharacter aj_character(const Vec& lam, Int trunc) const;
    LaurentCharacter nabla_bar_character(const Vec& lam, Int trunc) const;
    LaurentCharacter delta_bar_character(const Vec& lam, Int trunc) const;
    LaurentCharacter weyl_character(const Vec& lam, Int trunc) const;  // chi(lam) alone
    std::map<Vec, Int> weight_multiplicities(const Vec& lam) const;
    LaurentCharacter product_with_weyl(const LaurentCharacter& c, const Vec& lam) const;
    LaurentCharacter free_module_character(const Vec& lam, Int trunc) const;
    bool verify_aj_sum_identity(const Vec& lam, Int trunc) const;

private:
    const std::map<Vec, LaurentPoly>& kostant_table(Int trunc) const;

    const RootDatum& d_;
    CharConvention conv_;
    std::vector<std::vector<mpq_class>> left_inv_;
    std::vector<Vec> pos_coeffs_;
    mutable std::mutex mu_;
    mutable std::map<Int, std::map<Vec, LaurentPoly>> tables_;
    mutable std::map<std::pair<int, Vec>, Int> pf_memo_;
};

// Graded character of the coordinate ring of the nilpotent cone, from S(g*) and the invariant degrees.
LaurentCharacter nilcone_character(const RootDatum& d, Int trunc);
std::vector<int> invariant_degrees(const RootDatum& d);

struct CalibrationReport {
    Int trunc = 0;
    std::vector<std::pair<CharConvention, bool>> tried;
    CharConvention chosen;
    nlohmann::json to_json() const;
};

// Tries the four conventions against the nilcone character; exactly one must pass.
CalibrationReport calibrate_characters(const RootDatum& d, Int trunc);

enum class ExpansionMode { Graded, Scalar };

struct TriangularResult {
    bool ok = false;
    std::string error;  // not_in_span, dependent_basis, leading_weight_clash
    // coeffs[i][j]: coefficient of basis j in target i
    std::vector<std::vector<LaurentPoly>> coeffs;
    bool unitriangular = false;
    std::string verdict_detail;
    nlohmann::json to_json() const;
};

// leq(a, b) says label a sits at or below label b. Targets and basis carry labels for the verdict.
TriangularResult triangular_expansion(const std::vector<LaurentCharacter>& targets, const std::vector<Vec>& target_labels,
                                      const std::vector<LaurentCharacter>& basis, const std::vector<Vec>& basis_labels,
                                      const std::function<bool(const Vec&, const Vec&)>& leq, ExpansionMode mode);

}  // namespace hs
