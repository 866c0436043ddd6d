#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "hs/integer.hpp"

namespace hs {

using QVec = std::vector<mpq_class>;

// Q or F_p; elements of F_p are stored as integers in [0, p).
class Field {
public:
    Field() = default;
    static Field rationals() { return Field(); }
    static Field prime(Int p);

    Int characteristic() const { return p_; }
    mpq_class norm(const mpq_class& x) const;
    mpq_class inv(const mpq_class& x) const;
    std::string str() const;
    bool operator==(const Field& o) const { return p_ == o.p_; }

private:
    Int p_ = 0;
};

// Rank and kernel of a matrix given as rows.
int field_rank(const Field& F, std::vector<QVec> m);
// Basis of {x : m x = 0}; cols is the number of unknowns.
std::vector<QVec> field_kernel(const Field& F, std::vector<QVec> m, std::size_t cols);

// Inverse of a square matrix, if it exists.
std::optional<std::vector<QVec>> field_inverse(const Field& F, std::vector<QVec> m);

// Incremental echelon form that remembers how each row arose from the added generators.
class SpanSolver {
public:
    SpanSolver(Field F, std::size_t dim) : F_(F), dim_(dim) {}
    // Adds v if it is independent of the generators so far; returns whether it was added.
    bool add(const QVec& v);
    std::size_t count() const { return gens_; }
    std::size_t dim() const { return dim_; }
    bool contains(const QVec& v) const;
    // Coefficients c with v = sum c_i gen_i, if v lies in the span.
    std::optional<QVec> express(const QVec& v) const;
    // v with every pivot entry cleared.
    QVec reduced(const QVec& v) const;

private:
    struct Row {
        std::size_t pivot;
        QVec v;
        QVec comb;  // over generators
    };
    void reduce(QVec& v, QVec* comb) const;

    Field F_;
    std::size_t dim_;
    std::size_t gens_ = 0;
    std::vector<Row> rows_;
};

}  // namespace hs
