// Exact arithmetic in the parameter ring: Laurent polynomials in q and the
// free variables q_ij (1 <= i < j <= n) with rational coefficients, plus the
// derived parameter matrices P and Q.
//
// Conventions baked in here:
//   q_ji = q_ij^-1 for i < j,   q_ii = 1,
//   p_ij = q^2 * q_ij^-1,       p_ji = p_ij^-1,   p_ii = 1.
// In one-parameter mode every q_ij (i < j) collapses to q.
#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace qminor {

using Rational = mpq_class;

enum class Mode { one_param, multiparam };

std::string to_string(Mode mode);

// Matrix size together with the parameter regime.
struct ParamSpec {
    int n;
    Mode mode;

    ParamSpec(int n_, Mode mode_) : n(n_), mode(mode_) {
        if (n < 1) throw std::invalid_argument("ParamSpec: n must be >= 1");
    }

    void check_label(int i) const {
        if (i < 1 || i > n)
            throw std::out_of_range("label " + std::to_string(i) +
                                    " out of range 1.." + std::to_string(n));
    }
};

// One Laurent monomial: exponent of q plus sparse exponents of the q_ij.
// Zero exponents are never stored; the unit monomial is empty.
class ParamMonomial {
public:
    ParamMonomial() = default;

    static ParamMonomial q_power(int e);
    static ParamMonomial qij_power(int i, int j, int e);  // requires i < j

    int q_exp() const { return q_exp_; }
    const std::map<std::pair<int, int>, int>& qij_exps() const { return qij_; }

    bool is_unit() const { return q_exp_ == 0 && qij_.empty(); }

    ParamMonomial operator*(const ParamMonomial& o) const;
    ParamMonomial inverse() const;

    // Substitute q_ij -> q for every i < j.
    ParamMonomial one_param() const;

    bool operator<(const ParamMonomial& o) const {
        if (q_exp_ != o.q_exp_) return q_exp_ < o.q_exp_;
        return qij_ < o.qij_;
    }
    bool operator==(const ParamMonomial& o) const {
        return q_exp_ == o.q_exp_ && qij_ == o.qij_;
    }

    // "q^2*q12^-1"; empty string for the unit monomial.
    std::string str() const;

private:
    int q_exp_ = 0;
    std::map<std::pair<int, int>, int> qij_;
};

// Element of the parameter ring in canonical form: a term map with no zero
// coefficients. Immutable value semantics; all operations are pure.
class Scalar {
public:
    Scalar() = default;  // zero

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return of_int(1); }
    static Scalar of_int(long v);
    static Scalar of(const Rational& v);
    static Scalar q(int exp = 1);
    static Scalar qij(int i, int j, int exp = 1);
    static Scalar term(const ParamMonomial& m, const Rational& c);

    const std::map<ParamMonomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t num_terms() const { return terms_.size(); }
    bool is_monomial() const { return terms_.size() == 1; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const { return terms_ < o.terms_; }

    // Inverse of a one-term Scalar; anything else is outside the ring of
    // invertible elements we support.
    Scalar monomial_inverse() const;

    // Substitute q_ij -> q everywhere (ring homomorphism).
    Scalar specialize_one_param() const;

    // Deterministic canonical rendering, e.g. "1 - q^2", "3/2*q*q12^-1".
    std::string str() const;

private:
    std::map<ParamMonomial, Rational> terms_;

    void add_term(const ParamMonomial& m, const Rational& c);
};

Scalar pow(const Scalar& base, int exp);  // negative exp requires a monomial

// Entries of the parameter matrices Q = (q_ij) and P = (p_ij).
Scalar q_param(const ParamSpec& spec, int i, int j);
Scalar p_param(const ParamSpec& spec, int i, int j);

// (-q)^k, k >= 0.
Scalar neg_q_pow(int k);

std::string canonical_string(const Scalar& s);

}  // namespace qminor
