#include "qminor/params.hpp"

#include <sstream>

namespace qminor {

std::string to_string(Mode mode) {
    return mode == Mode::one_param ? "1param" : "multiparam";
}

// ---------------------------------------------------------------------------
// ParamMonomial

ParamMonomial ParamMonomial::q_power(int e) {
    ParamMonomial m;
    m.q_exp_ = e;
    return m;
}

ParamMonomial ParamMonomial::qij_power(int i, int j, int e) {
    if (!(1 <= i && i < j))
        throw std::invalid_argument("qij variable requires 1 <= i < j");
    ParamMonomial m;
    if (e != 0) m.qij_[{i, j}] = e;
    return m;
}

ParamMonomial ParamMonomial::operator*(const ParamMonomial& o) const {
    ParamMonomial r = *this;
    r.q_exp_ += o.q_exp_;
    for (const auto& [v, e] : o.qij_) {
        int ne = (r.qij_.count(v) ? r.qij_[v] : 0) + e;
        if (ne == 0)
            r.qij_.erase(v);
        else
            r.qij_[v] = ne;
    }
    return r;
}

ParamMonomial ParamMonomial::inverse() const {
    ParamMonomial r;
    r.q_exp_ = -q_exp_;
    for (const auto& [v, e] : qij_) r.qij_[v] = -e;
    return r;
}

ParamMonomial ParamMonomial::one_param() const {
    ParamMonomial r;
    r.q_exp_ = q_exp_;
    for (const auto& [v, e] : qij_) r.q_exp_ += e;
    return r;
}

namespace {

std::string var_name(int i, int j) {
    if (i <= 9 && j <= 9)
        return "q" + std::to_string(i) + std::to_string(j);
    return "q_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

void append_power(std::string& out, const std::string& var, int e) {
    if (!out.empty()) out += "*";
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
}

}  // namespace

std::string ParamMonomial::str() const {
    std::string out;
    if (q_exp_ != 0) append_power(out, "q", q_exp_);
    for (const auto& [v, e] : qij_) append_power(out, var_name(v.first, v.second), e);
    return out;
}

// ---------------------------------------------------------------------------
// Scalar

void Scalar::add_term(const ParamMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Scalar Scalar::of_int(long v) { return of(Rational(v)); }

Scalar Scalar::of(const Rational& v) {
    Scalar s;
    s.add_term(ParamMonomial(), v);
    return s;
}

Scalar Scalar::q(int exp) { return term(ParamMonomial::q_power(exp), 1); }

Scalar Scalar::qij(int i, int j, int exp) {
    return term(ParamMonomial::qij_power(i, j, exp), 1);
}

Scalar Scalar::term(const ParamMonomial& m, const Rational& c) {
    Scalar s;
    s.add_term(m, c);
    return s;
}

bool Scalar::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_unit() &&
           terms_.begin()->second == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Scalar Scalar::monomial_inverse() const {
    if (terms_.size() != 1)
        throw std::domain_error(
            "monomial_inverse: Scalar with " + std::to_string(terms_.size()) +
            " terms is not an invertible parameter monomial");
    const auto& [m, c] = *terms_.begin();
    return term(m.inverse(), 1 / c);
}

Scalar Scalar::specialize_one_param() const {
    Scalar r;
    for (const auto& [m, c] : terms_) r.add_term(m.one_param(), c);
    return r;
}

Scalar pow(const Scalar& base, int exp) {
    if (exp < 0) return pow(base.monomial_inverse(), -exp);
    Scalar r = Scalar::one();
    for (int k = 0; k < exp; ++k) r *= base;
    return r;
}

std::string Scalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string mono = m.str();
        if (mono.empty()) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << mono;
        }
    }
    return out.str();
}

std::string canonical_string(const Scalar& s) { return s.str(); }

// ---------------------------------------------------------------------------
// Parameter matrices

Scalar q_param(const ParamSpec& spec, int i, int j) {
    spec.check_label(i);
    spec.check_label(j);
    if (i == j) return Scalar::one();
    if (spec.mode == Mode::one_param) return Scalar::q(i < j ? 1 : -1);
    if (i < j) return Scalar::qij(i, j);
    return Scalar::qij(j, i, -1);
}

Scalar p_param(const ParamSpec& spec, int i, int j) {
    spec.check_label(i);
    spec.check_label(j);
    if (i == j) return Scalar::one();
    if (spec.mode == Mode::one_param) return Scalar::q(i < j ? 1 : -1);
    // p_ij * q_ij = q^2 for i < j; p_ji = p_ij^-1.
    if (i < j) return Scalar::term(ParamMonomial::q_power(2) *
                                       ParamMonomial::qij_power(i, j, -1),
                                   1);
    return Scalar::term(ParamMonomial::q_power(-2) * ParamMonomial::qij_power(j, i, 1),
                        1);
}

Scalar neg_q_pow(int k) {
    if (k < 0) throw std::invalid_argument("neg_q_pow: negative exponent");
    return Scalar::term(ParamMonomial::q_power(k), (k % 2 == 0) ? 1 : -1);
}

}  // namespace qminor
