#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "obstrukt/linalg.hpp"

namespace obstrukt {

// Associative algebra by structure constants: e_i e_j = sum_k c[i][j][k] e_k.
class AlgebraSC {
public:
    AlgebraSC() = default;
    AlgebraSC(FieldSpec field, size_t dim, std::vector<std::string> names = {});

    const FieldSpec& field() const { return field_; }
    size_t dim() const { return dim_; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<size_t> unital_idx;

    const SVec& product(size_t i, size_t j) const { return table_[i * dim_ + j]; }
    void set_product(size_t i, size_t j, SVec v);
    void add_product(size_t i, size_t j, size_t k, const Scalar& c);

    Vec mul(const Vec& x, const Vec& y) const;
    SVec mul_sparse(const SVec& x, const SVec& y) const;
    Vec basis_times(size_t i, const SVec& y) const;  // e_i y
    Vec times_basis(const SVec& x, size_t j) const;  // x e_j
    Matrix left_matrix(const Vec& x) const;          // k -> x k
    Matrix right_matrix(const Vec& x) const;         // k -> k x
    Vec basis(size_t i) const { return unit(dim_, i); }

    bool operator==(const AlgebraSC& o) const;

private:
    FieldSpec field_;
    size_t dim_ = 0;
    std::vector<std::string> names_;
    std::vector<SVec> table_;
};

// Lie algebra by bracket constants: [e_i, e_j] = sum_k b[i][j][k] e_k.
class LieAlgebraSC {
public:
    LieAlgebraSC() = default;
    LieAlgebraSC(FieldSpec field, size_t dim, std::vector<std::string> names = {});

    const FieldSpec& field() const { return field_; }
    size_t dim() const { return dim_; }
    const std::vector<std::string>& names() const { return names_; }

    const SVec& bracket(size_t i, size_t j) const { return table_[i * dim_ + j]; }
    void set_bracket(size_t i, size_t j, SVec v);
    // sets [e_i,e_j] and [e_j,e_i] = -[e_i,e_j]
    void set_antisymmetric(size_t i, size_t j, const SVec& v);
    Vec bracket(const Vec& x, const Vec& y) const;
    Matrix ad(const Vec& x) const;

private:
    FieldSpec field_;
    size_t dim_ = 0;
    std::vector<std::string> names_;
    std::vector<SVec> table_;
};

// A-A-bimodule: left[a] is the matrix of x -> e_a . x, right[a] of x -> x . e_a.
struct BimoduleSC {
    std::shared_ptr<const AlgebraSC> over;
    size_t dim = 0;
    std::vector<Matrix> left;
    std::vector<Matrix> right;

    BimoduleSC() = default;
    BimoduleSC(std::shared_ptr<const AlgebraSC> a, size_t m);

    Matrix left_of(const Vec& a) const;
    Matrix right_of(const Vec& a) const;
    Vec act_left(const Vec& a, const Vec& x) const { return left_of(a).apply(x); }
    Vec act_right(const Vec& x, const Vec& a) const { return right_of(a).apply(x); }
    bool right_trivial() const;

    static BimoduleSC regular(std::shared_ptr<const AlgebraSC> a);
    static BimoduleSC zero_actions(std::shared_ptr<const AlgebraSC> a, size_t m);
};

// Left g-module: action[i] is the matrix of e_i acting.
struct LieModule {
    std::shared_ptr<const LieAlgebraSC> g;
    size_t dim = 0;
    std::vector<Matrix> action;

    LieModule() = default;
    LieModule(std::shared_ptr<const LieAlgebraSC> g, size_t m);
    Matrix action_of(const Vec& x) const;

    static LieModule trivial(std::shared_ptr<const LieAlgebraSC> g, size_t m);
    static LieModule adjoint(std::shared_ptr<const LieAlgebraSC> g);
};

struct Violation {
    std::vector<size_t> where;
    std::string rule;
    Vec diff;
};

std::vector<Violation> validate_associative(const AlgebraSC& a);
std::vector<Violation> validate_jacobi(const LieAlgebraSC& g);
std::vector<Violation> validate_bimodule(const BimoduleSC& m);
std::vector<Violation> validate_lie_module(const LieModule& m);
bool is_unit(const AlgebraSC& a, size_t idx);

LieAlgebraSC lieify(const AlgebraSC& k);
AlgebraSC direct_sum(const AlgebraSC& a, const AlgebraSC& b);

}  // namespace obstrukt
