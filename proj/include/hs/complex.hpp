#pragma once

#include <compare>
#include <string>
#include <vector>

#include "json.hpp"

#include "hs/quiver.hpp"

namespace hs {

// P_v<twist> = e_v A with internal grading shifted by twist.
struct Summand {
    int vertex = 0;
    Int twist = 0;
    auto operator<=>(const Summand&) const = default;
};

// Matrix of algebra elements; rows index the target summands, columns the source summands.
struct AMat {
    int rows = 0, cols = 0;
    std::vector<AElt> e;

    AMat() = default;
    AMat(int r, int c) : rows(r), cols(c), e(static_cast<std::size_t>(r) * c) {}
    AElt& at(int r, int c) { return e[static_cast<std::size_t>(r) * cols + c]; }
    const AElt& at(int r, int c) const { return e[static_cast<std::size_t>(r) * cols + c]; }
    bool is_zero() const;
    bool operator==(const AMat& o) const { return rows == o.rows && cols == o.cols && e == o.e; }
};

AMat amat_mul(const QuiverAlgebra& A, const AMat& x, const AMat& y);
AMat amat_add(const QuiverAlgebra& A, const AMat& x, const AMat& y);
AMat amat_scale(const QuiverAlgebra& A, const AMat& x, const mpq_class& c);
AMat amat_identity(const QuiverAlgebra& A, const std::vector<Summand>& s);

// Bounded complex of graded projectives; terms[j] sits in cohomological degree lo + j and
// d[j] maps terms[j] to terms[j + 1].
struct ProjComplex {
    AlgebraPtr alg;
    Int lo = 0;
    std::vector<std::vector<Summand>> terms;
    std::vector<AMat> d;

    bool is_zero() const;
    Int hi() const { return lo + static_cast<Int>(terms.size()) - 1; }
    const std::vector<Summand>& term(Int deg) const;
    AMat diff(Int deg) const;  // deg -> deg + 1, possibly with zero rows or columns
    std::size_t total_rank() const;
    // Drops empty terms at both ends; keeps d consistent.
    void trim();
    // Entry degrees, matrix shapes and d^2 = 0; throws InputError.
    void validate() const;
    std::string str() const;
    nlohmann::json to_json() const;
};

ProjComplex stalk(AlgebraPtr alg, int vertex, Int deg = 0, Int twist = 0);
ProjComplex zero_complex(AlgebraPtr alg);
ProjComplex shift(const ProjComplex& X, Int i);   // X[i]
ProjComplex twist(const ProjComplex& X, Int k);   // X<k>
ProjComplex direct_sum(const ProjComplex& X, const ProjComplex& Y);
ProjComplex direct_sum(const std::vector<ProjComplex>& xs, AlgebraPtr alg);
bool same_complex(const ProjComplex& X, const ProjComplex& Y);

// Degree-zero chain map; comp[j] covers source degree src.lo + j.
struct ChainMap {
    ProjComplex src, tgt;
    std::vector<AMat> comp;

    AMat at(Int deg) const;
    bool is_chain_map() const;
    bool is_zero() const;
};

ChainMap zero_map(const ProjComplex& X, const ProjComplex& Y);
ChainMap identity_map(const ProjComplex& X);
ChainMap compose(const ChainMap& g, const ChainMap& f);  // g after f
ChainMap map_add(const ChainMap& f, const ChainMap& g);
ChainMap map_scale(const ChainMap& f, const mpq_class& c);
ChainMap shift_map(const ChainMap& f, Int i);
ChainMap twist_map(const ChainMap& f, Int k);
// [f1 ... fr] : X1 + ... + Xr -> Y
ChainMap row_map(const std::vector<ChainMap>& fs, const ProjComplex& Y);

// cone(f)^j = Y^j + X^{j+1} with d = [[d_Y, f], [0, -d_X]].
struct Cone {
    ProjComplex C;
    ChainMap incl;  // Y -> C
    ChainMap proj;  // C -> X[1]
};
Cone cone(const ChainMap& f);

// Homotopy equivalent complex without invertible differential entries, with the comparison maps.
struct MinimalModel {
    ProjComplex M;
    ChainMap to_min;    // X -> M
    ChainMap from_min;  // M -> X
};
MinimalModel minimal_model_with_maps(const ProjComplex& X);
ProjComplex minimal_model(const ProjComplex& X);
bool is_minimal(const ProjComplex& X);

// Graded maps X^j -> Y^{j + offset}, flattened to coordinates over the path basis.
class GradedMapSpace {
public:
    GradedMapSpace(const ProjComplex& X, const ProjComplex& Y, Int offset);
    std::size_t dim() const { return n_; }
    QVec flatten(const std::vector<AMat>& comps) const;      // comps over source degrees
    std::vector<AMat> unflatten(const QVec& v) const;

private:
    struct Slot {
        std::size_t j;  // source term index
        int r, c;
        int basis;
    };
    ProjComplex X_, Y_;
    Int offset_;
    std::size_t n_ = 0;
    std::vector<Slot> slots_;
    std::map<std::tuple<std::size_t, int, int, int>, std::size_t> index_;
};

// Hom_K(X, Y<k>[i]) as chain maps X -> Y<k>[i] modulo homotopy.
class HomSpace {
public:
    HomSpace(const ProjComplex& X, const ProjComplex& Y, Int i = 0, Int k = 0);
    std::size_t dim() const { return basis_.size(); }
    const std::vector<ChainMap>& basis() const { return basis_; }
    const ProjComplex& source() const { return X_; }
    const ProjComplex& target() const { return Z_; }
    // Coordinates of the class of f; throws if f is not a chain map X -> Y<k>[i].
    QVec coords(const ChainMap& f) const;
    bool is_null_homotopic(const ChainMap& f) const;
    // Strict chain maps (no quotient), as a basis.
    std::vector<ChainMap> cocycles() const;

private:
    ProjComplex X_, Z_;
    std::unique_ptr<GradedMapSpace> c0_;
    std::vector<QVec> kernel_;
    std::size_t nb_ = 0;  // coboundary generators in the solver
    std::unique_ptr<SpanSolver> solver_;
    std::vector<ChainMap> basis_;
};

// dim Hom_K(X, Y<k>[i]) by ranks alone.
std::size_t hom_dim(const ProjComplex& X, const ProjComplex& Y, Int i = 0, Int k = 0);
// (i, k) for which some graded map X -> Y<k>[i] exists at all.
std::vector<std::pair<Int, Int>> hom_support(const ProjComplex& X, const ProjComplex& Y);

}  // namespace hs
