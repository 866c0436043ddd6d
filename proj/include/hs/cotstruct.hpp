#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hs/complex.hpp"

namespace hs {

// Scalar part of a graded endomorphism: coefficients of the idempotents between summands
// of equal vertex and twist, as one square matrix over all summands in degree order.
std::vector<QVec> top_matrix(const ProjComplex& X, const std::vector<AMat>& comps);

// Krull-Schmidt decomposition of the minimal model.
std::vector<ProjComplex> decompose(const ProjComplex& X);
bool isomorphic(const ProjComplex& X, const ProjComplex& Y);

// Minimal model moved so that lo = 0 and the lowest term has minimal twist 0.
struct Normalized {
    ProjComplex X;
    Int shift = 0;  // X = shift(twist(original, twist), shift)
    Int twist = 0;
};
Normalized normalize_shift_twist(const ProjComplex& X);
// Twist only, keeping cohomological degrees.
Normalized normalize_twist(const ProjComplex& X);

// Reference co-t-structure from the projective generator.
enum class Side { GeqZero, LeqZero };
bool membership(const ProjComplex& X, Side side);

struct WeightTruncation {
    ProjComplex A;  // in D_{>=0}
    ProjComplex B;  // in D_{<=0}[1]
    ChainMap h;     // B[-1] -> A with cone(h) = minimal_model(X)
    bool verified = false;
};
WeightTruncation weight_truncation(const ProjComplex& X);

enum class Verdict { Yes, No, Inconclusive };
std::string verdict_str(Verdict v);

struct GenerationOptions {
    int max_depth = 3;
    std::size_t max_pool = 40;
    Int max_width = 4;
};

// Does the thick closure of {X<n>} contain every P_v? Closure is explored by cones of basis maps.
Verdict generates(const std::vector<ProjComplex>& objs, const GenerationOptions& opt = {});

bool is_presilting(const ProjComplex& X);

struct SiltingReport {
    Verdict verdict = Verdict::No;
    bool presilting = false;
    std::size_t distinct_summands = 0;  // up to shift and twist
    std::string detail;
};
SiltingReport is_silting(const ProjComplex& X, const GenerationOptions& opt = {});

struct CensusOptions {
    Int min_twist = 0, max_twist = 1;
    int max_per_term = 2;
    int max_free_coords = 12;
    GenerationOptions gen;
};
struct SiltingCensus {
    std::size_t complexes = 0;
    std::size_t inconclusive = 0;
    std::vector<std::vector<ProjComplex>> basic;  // indecomposable summands, normalized by twist
    nlohmann::json to_json() const;
};
// Two-term complexes X^{-1} -> X^0 over the summand window, differential coefficients in {0, 1}.
SiltingCensus two_term_silting_census(const AlgebraPtr& A, const CensusOptions& opt = {});

// Indecomposables up to shift and twist, reached from the stalk complexes by cones,
// with width <= max_width and twist spread <= max_spread.
std::vector<ProjComplex> indecomposable_catalogue(const AlgebraPtr& A, Int max_width, Int max_spread, int rounds = 4);
// Every shift and twist of the catalogue entries with support in [deg_lo, deg_hi]
// and all twists in [tw_lo, tw_hi].
std::vector<ProjComplex> placements(const std::vector<ProjComplex>& reps, Int deg_lo, Int deg_hi, Int tw_lo, Int tw_hi);

struct AxiomViolation {
    std::string axiom;
    std::string witness;
};
struct CoTAxiomReport {
    std::size_t objects = 0, hom_pairs = 0;
    std::vector<AxiomViolation> violations;
    bool ok() const { return violations.empty(); }
    nlohmann::json to_json() const;
};
// Axioms for the reference co-t-structure on the given objects; Hom vanishing on all pairs of `indecs`.
CoTAxiomReport verify_cot_axioms(const std::vector<ProjComplex>& objects, const std::vector<ProjComplex>& indecs);

// Standard and costandard objects of a heredity order, indexed by position in the order.
struct StandardObjects {
    AlgebraPtr alg;
    std::vector<int> order;  // vertex at each position, bottom first
    std::vector<ProjComplex> delta, nabla;
    std::vector<ChainMap> iota;  // delta[s] -> nabla[s]
};
StandardObjects standard_objects(const AlgebraPtr& A);

struct PreExceptionalReport {
    bool pre_exceptional = false;
    bool quasi = false;     // (4+)
    bool coquasi = false;   // (4-)
    bool exceptional = false;
    bool dualizable = false;
    Verdict generation = Verdict::Inconclusive;
    struct Violation {
        std::string axiom;
        int s = 0, t = 0;
        Int i = 0, k = 0;
    };
    std::vector<Violation> violations;
    nlohmann::json to_json() const;
};
PreExceptionalReport verify_pre_exceptional(const std::vector<ProjComplex>& delta, const std::vector<ProjComplex>& nabla,
                                            const std::vector<ChainMap>& iota, const GenerationOptions& opt = {});

struct SiltingConstruction {
    ProjComplex T;
    ChainMap j;  // delta -> T
    ChainMap g;  // T -> nabla
    bool factorization_ok = false;  // g j = iota entrywise
};
// Throws InputError("not_coquasi") unless the report carries the co-quasi-exceptional verdict.
SiltingConstruction construct_indecomposable_silting(const StandardObjects& so, const PreExceptionalReport& rep, int s);

// Co-t-structure generated by the standard objects: X in D_{>=0} iff Hom(X, nabla<n>[i]) = 0 for i > 0,
// Y in D_{<=0} iff Hom(delta<n>, Y[i]) = 0 for i > 0.
bool in_standard_geq0(const StandardObjects& so, const ProjComplex& X);
bool in_standard_leq0(const StandardObjects& so, const ProjComplex& Y);

struct QuotientReport {
    std::size_t pairs = 0, failures = 0;
    std::vector<std::string> witnesses;
    bool ok() const { return failures == 0; }
    nlohmann::json to_json() const;
};
// Surjectivity of Hom(X, Y) -> Hom(X e, Y e) for e the idempotent of the top vertex.
// Throws InputError if a sample violates X in D_{>=0}, Y in D_{<=0} or if e A e is not the field.
QuotientReport quotient_functor_surjectivity_check(const StandardObjects& so,
                                                   const std::vector<std::pair<ProjComplex, ProjComplex>>& samples);

}  // namespace hs
