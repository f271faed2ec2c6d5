#pragma once

#include <string>
#include <vector>

#include "gstar/matrix.hpp"

namespace gstar {

// Nonzero linear form, stored canonically: first nonzero coefficient is 1.
// Two forms are proportional iff they are equal.
class LinearForm {
public:
    static LinearForm from_coeffs(std::vector<Scalar> coeffs);  // canonicalizes, rejects zero
    static LinearForm from_ints(const std::vector<long>& coeffs, const FieldSpec& f);

    std::size_t ambient() const { return coeffs_.size(); }
    const FieldSpec& field() const { return coeffs_.front().field(); }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    Scalar evaluate(const std::vector<Scalar>& point) const;

    bool operator==(const LinearForm& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LinearForm& o) const { return !(*this == o); }
    int compare(const LinearForm& o) const;

private:
    explicit LinearForm(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {}
    std::vector<Scalar> coeffs_;
};

// Ordered multiset of forms sharing one ambient dimension; proportional
// repeats are permitted.
class FormList {
public:
    explicit FormList(std::vector<LinearForm> forms);

    std::size_t size() const { return forms_.size(); }  // n
    std::size_t ambient() const { return forms_.front().ambient(); }
    const FieldSpec& field() const { return forms_.front().field(); }
    const LinearForm& operator[](std::size_t i) const { return forms_[i]; }          // 0-based
    const LinearForm& at_1based(std::size_t i) const { return forms_[i - 1]; }
    const std::vector<LinearForm>& forms() const { return forms_; }

    // n x k matrix of coefficient rows
    Matrix coefficient_matrix() const;

private:
    std::vector<LinearForm> forms_;
};

// Linear subspace component represented by the canonical rref basis of the
// linear forms cutting it out.  Equal iff the canonical bases are identical.
class LinearSpan {
public:
    static LinearSpan from_rows(const Matrix& rows);  // rejects rank 0
    static LinearSpan from_forms(const std::vector<LinearForm>& forms);

    std::size_t codim() const { return basis_.rows(); }
    std::size_t ambient() const { return basis_.cols(); }
    const FieldSpec& field() const { return basis_.field(); }
    const Matrix& basis() const { return basis_; }

    bool contains_form(const LinearForm& f) const;
    // this span's row space contains o's
    bool contains(const LinearSpan& o) const;

    bool operator==(const LinearSpan& o) const { return basis_ == o.basis_; }
    bool operator!=(const LinearSpan& o) const { return !(*this == o); }
    int compare(const LinearSpan& o) const { return basis_.compare(o.basis_); }

private:
    explicit LinearSpan(Matrix basis) : basis_(std::move(basis)) {}
    Matrix basis_;
};

LinearSpan span_of(const std::vector<LinearForm>& forms);

bool is_essential(const FormList& lambda);

struct Arrangement {
    std::vector<LinearSpan> components;
    std::size_t ambient = 0;
    FieldSpec field = FieldSpec::rationals();
};

bool is_essential(const Arrangement& a);

struct ValidationIssue {
    std::string code;
    std::string detail;
};

struct ValidationReport {
    bool valid = false;
    std::vector<ValidationIssue> issues;
    Arrangement normalized;  // canonical component bases; meaningful when valid
};

// Checks: at least two components, each of codim in [1, k-1], pairwise
// incomparable, essential.  Components arrive as raw generator matrices.
ValidationReport validate_arrangement(const std::vector<Matrix>& raw_components);

// Throwing convenience wrapper around validate_arrangement.
Arrangement make_arrangement(const std::vector<Matrix>& raw_components);

// Rendering as a signed integer/rational combination, e.g. "2x+y-2z".
std::string render_form(const LinearForm& f, const std::vector<std::string>& names);

// Content-free integer coefficient vector of a rational form: denominators
// cleared, gcd 1, first nonzero entry positive.
std::vector<mpz_class> primitive_integer_coeffs(const LinearForm& f);

// Rational form reduced mod p (via its primitive integer vector).
std::vector<std::uint32_t> form_mod_p(const LinearForm& f, std::uint32_t p);

}  // namespace gstar
