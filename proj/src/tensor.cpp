#include "qminor/tensor.hpp"

#include <algorithm>
#include <sstream>

namespace qminor {

// ---------------------------------------------------------------------------
// Bidegree

bool Bidegree::is_zero() const {
    auto zero = [](const std::vector<int>& v) {
        return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
    };
    return zero(i_part) && zero(j_part);
}

Bidegree Bidegree::operator+(const Bidegree& o) const {
    Bidegree r = *this;
    for (std::size_t k = 0; k < r.i_part.size(); ++k) r.i_part[k] += o.i_part[k];
    for (std::size_t k = 0; k < r.j_part.size(); ++k) r.j_part[k] += o.j_part[k];
    return r;
}

std::string Bidegree::str() const {
    auto side = [](const std::vector<int>& v, char sym) {
        std::string out;
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (v[k] == 0) continue;
            if (!out.empty()) out += v[k] > 0 ? "+" : "";
            else if (v[k] > 0) out += "+";
            if (v[k] != 1 && v[k] != -1) out += std::to_string(v[k]);
            else if (v[k] == -1) out += "-";
            out += sym;
            out += std::to_string(k + 1);
        }
        return out.empty() ? std::string("0") : out;
    };
    return "(" + side(i_part, 'i') + ", " + side(j_part, 'j') + ")";
}

Bidegree bidegree(const TensorKey& key, int n) {
    Bidegree d{std::vector<int>(static_cast<std::size_t>(n), 0),
               std::vector<int>(static_cast<std::size_t>(n), 0)};
    for (const Generator& g : key.mid) {
        d.i_part[static_cast<std::size_t>(g.row) - 1] += 1;
        d.j_part[static_cast<std::size_t>(g.col) - 1] += 1;
    }
    for (int i = 1; i <= n; ++i)
        d.i_part[static_cast<std::size_t>(i) - 1] -= key.r_exp[static_cast<std::size_t>(i) - 1];
    for (int j = 1; j <= n; ++j)
        d.j_part[static_cast<std::size_t>(j) - 1] -= key.l_exp[static_cast<std::size_t>(j) - 1];
    return d;
}

// ---------------------------------------------------------------------------
// TensorPoly

void TensorPoly::add_term(const TensorKey& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
    if (n_ != o.n_) throw std::invalid_argument("TensorPoly: size mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

TensorPoly TensorPoly::operator+(const TensorPoly& o) const {
    TensorPoly r = *this;
    r += o;
    return r;
}

TensorPoly TensorPoly::operator-() const {
    TensorPoly r(n_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

TensorPoly TensorPoly::operator-(const TensorPoly& o) const { return *this + (-o); }

TensorPoly TensorPoly::operator*(const Scalar& c) const {
    TensorPoly r(n_);
    if (c.is_zero()) return r;
    for (const auto& [k, cw] : terms_) r.add_term(k, cw * c);
    return r;
}

namespace {

std::string exp_str(const std::vector<int>& exps, const char* prefix) {
    std::string out;
    for (std::size_t k = 0; k < exps.size(); ++k) {
        for (int c = 0; c < exps[k]; ++c) {
            if (!out.empty()) out += "*";
            out += std::string(prefix) + "[" + std::to_string(k + 1) + "]";
        }
    }
    return out.empty() ? std::string("1") : out;
}

}  // namespace

std::string TensorPoly::str(AlgebraTag mid_tag) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        std::string mid;
        for (const Generator& g : k.mid) {
            if (!mid.empty()) mid += "*";
            mid += generator_str(mid_tag, g);
        }
        if (mid.empty()) mid = "1";
        out << "(" << c.str() << ")*" << exp_str(k.l_exp, "l") << " (x) " << mid
            << " (x) " << exp_str(k.r_exp, "r");
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// TensorAlgebra

TensorAlgebra::TensorAlgebra(const ParamSpec& spec)
    : TensorAlgebra(spec, AlgebraTag::matrix_q) {}

TensorAlgebra::TensorAlgebra(const ParamSpec& spec, AlgebraTag mid_tag)
    : spec_(spec),
      mid_rs_(relations_for(mid_tag, ParamSpec(spec.n, Mode::one_param))) {}

std::vector<int> TensorAlgebra::to_exponents(const Multilabel& sorted_word) const {
    std::vector<int> exps(static_cast<std::size_t>(spec_.n), 0);
    for (Label x : sorted_word) {
        spec_.check_label(x);
        exps[static_cast<std::size_t>(x) - 1] += 1;
    }
    return exps;
}

Multilabel TensorAlgebra::to_word(const std::vector<int>& exps) const {
    Multilabel out;
    for (std::size_t k = 0; k < exps.size(); ++k)
        for (int c = 0; c < exps[k]; ++c) out.push_back(static_cast<int>(k) + 1);
    return out;
}

TensorPoly TensorAlgebra::one() const {
    return term(Scalar::one(), {}, Word{}, {});
}

TensorPoly TensorAlgebra::term(const Scalar& c, const Multilabel& l_raw,
                               const Word& mid, const Multilabel& r_raw) const {
    TensorPoly out(spec_.n);
    if (c.is_zero()) return out;
    Scalar coeff = c * zeta_l(spec_, l_raw) * zeta_r(spec_, r_raw);
    TensorKey key{to_exponents(sorted(l_raw)), mid, to_exponents(sorted(r_raw))};
    out.add_term(key, coeff);
    return out;
}

TensorPoly TensorAlgebra::nf(const TensorPoly& tp) const {
    TensorPoly out(spec_.n);
    for (const auto& [k, c] : tp.terms()) {
        NCPoly reduced = mid_rs_.normal_form_word(k.mid);
        for (const auto& [w, cw] : reduced.terms())
            out.add_term(TensorKey{k.l_exp, w, k.r_exp}, c * cw);
    }
    return out;
}

TensorPoly TensorAlgebra::mul(const TensorPoly& a, const TensorPoly& b) const {
    TensorPoly out(spec_.n);
    for (const auto& [ka, ca] : a.terms()) {
        Multilabel la = to_word(ka.l_exp), ra = to_word(ka.r_exp);
        for (const auto& [kb, cb] : b.terms()) {
            // Outer slots: concatenate the sorted words and resort; each part is
            // already ascending so the zeta factor of the concatenation is the
            // whole reordering cost.
            Multilabel lb = to_word(kb.l_exp), rb = to_word(kb.r_exp);
            Multilabel l_cat = la, r_cat = ra;
            l_cat.insert(l_cat.end(), lb.begin(), lb.end());
            r_cat.insert(r_cat.end(), rb.begin(), rb.end());
            Word mid = ka.mid;
            mid.insert(mid.end(), kb.mid.begin(), kb.mid.end());
            NCPoly reduced = mid_rs_.normal_form_word(mid);
            Scalar coeff = ca * cb * zeta_l(spec_, l_cat) * zeta_r(spec_, r_cat);
            TensorKey base{to_exponents(sorted(l_cat)), Word{}, to_exponents(sorted(r_cat))};
            for (const auto& [w, cw] : reduced.terms())
                out.add_term(TensorKey{base.l_exp, w, base.r_exp}, coeff * cw);
        }
    }
    return out;
}

TensorPoly TensorAlgebra::iota(const NCPoly& p) const {
    if (p.tag() != AlgebraTag::matrix_pq)
        throw std::invalid_argument("iota: expected a polynomial over the T-generators");
    if (p.n() != spec_.n)
        throw std::invalid_argument("iota: matrix size mismatch");
    TensorPoly out(spec_.n);
    for (const auto& [w, c] : p.terms()) {
        // T^i_j -> l^j (x) t^i_j (x) r_i, multiplied slotwise along the word.
        Multilabel l_raw, r_raw;
        Word mid;
        for (const Generator& g : w) {
            l_raw.push_back(g.col);
            r_raw.push_back(g.row);
            mid.push_back(g);
        }
        out += nf(term(c, l_raw, mid, r_raw));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Checks

namespace {

// One defining relation per oriented rule: lhs - rhs as a free polynomial.
NCPoly relation_of_rule(const RelationSystem& rs, const GeneratorPair& lhs,
                        const RewriteRule& rule) {
    NCPoly rel(rs.tag(), rs.n());
    rel.add_term(Word{lhs.first, lhs.second}, Scalar::one());
    for (const auto& [c, repl] : rule.terms)
        rel.add_term(Word{repl[0], repl[1]}, -c);
    return rel;
}

std::string rule_instance_name(AlgebraTag tag, const GeneratorPair& lhs) {
    return generator_str(tag, lhs.first) + "*" + generator_str(tag, lhs.second);
}

}  // namespace

CheckReport check_iota_homomorphism(const ParamSpec& spec) {
    RelationSystem rs = relations_for(AlgebraTag::matrix_pq, spec);
    return check_iota_homomorphism(spec, rs);
}

CheckReport check_iota_homomorphism(const ParamSpec& spec,
                                    const RelationSystem& matrix_rules) {
    CheckReport report{"iota homomorphism n=" + std::to_string(spec.n), {}};
    TensorAlgebra ta(spec);
    for (const auto& [lhs, rule] : matrix_rules.rules()) {
        NCPoly rel = relation_of_rule(matrix_rules, lhs, rule);
        TensorPoly image = ta.iota(rel);
        CheckItem item;
        item.instance = "relation at " + rule_instance_name(matrix_rules.tag(), lhs);
        item.ok = image.is_structurally_zero();
        if (!item.ok) item.residual = image.str();
        report.items.push_back(std::move(item));
    }
    return report;
}

CheckReport check_injectivity(const ParamSpec& spec, int max_deg) {
    CheckReport report{"iota injectivity n=" + std::to_string(spec.n) +
                           " deg<=" + std::to_string(max_deg),
                       {}};
    RelationSystem rs = relations_for(AlgebraTag::matrix_pq, spec);
    TensorAlgebra ta(spec);
    std::map<TensorKey, Word> seen;
    for (const Word& w : rs.pbw_basis(max_deg)) {
        TensorPoly image = ta.iota(NCPoly::monomial(AlgebraTag::matrix_pq, spec.n, w));
        CheckItem item;
        NCPoly word_poly = NCPoly::monomial(AlgebraTag::matrix_pq, spec.n, w);
        item.instance = "image of " + word_poly.str();
        if (image.terms().size() != 1) {
            item.ok = false;
            item.residual = "image is not a single tensor term: " + image.str();
        } else {
            const auto& [key, coeff] = *image.terms().begin();
            auto [it, inserted] = seen.emplace(key, w);
            if (coeff.is_zero() || !inserted) {
                item.ok = false;
                item.residual = inserted ? "zero coefficient"
                                         : "support collision with " +
                                               NCPoly::monomial(AlgebraTag::matrix_pq,
                                                                spec.n, it->second)
                                                   .str();
            } else {
                item.ok = true;
            }
        }
        report.items.push_back(std::move(item));
    }
    return report;
}

CheckReport check_exterior_rescaling(const ParamSpec& spec) {
    CheckReport report{"exterior rescaling n=" + std::to_string(spec.n), {}};
    // Middle slot is Lambda_q (one-parameter exterior algebra on the e's).
    TensorAlgebra ta(spec, AlgebraTag::ext_p);
    auto E = [&](int j) {
        return ta.term(Scalar::one(), Multilabel{j}, Word{Generator{j, 0}}, {});
    };
    for (int i = 1; i <= spec.n; ++i) {
        for (int j = i + 1; j <= spec.n; ++j) {
            // E^i E^j + p_ij^-1 E^j E^i must vanish in S_l (x) Lambda_q.
            TensorPoly rel = ta.mul(E(i), E(j)) +
                             ta.mul(E(j), E(i)) * p_param(spec, i, j).monomial_inverse();
            rel = ta.nf(rel);
            CheckItem item;
            item.instance = "e[" + std::to_string(i) + "]e[" + std::to_string(j) +
                            "] + p^-1 e[" + std::to_string(j) + "]e[" +
                            std::to_string(i) + "]";
            item.ok = rel.is_structurally_zero();
            if (!item.ok) item.residual = rel.str(AlgebraTag::ext_p);
            report.items.push_back(std::move(item));
        }
        TensorPoly sq = ta.nf(ta.mul(E(i), E(i)));
        CheckItem item;
        item.instance = "e[" + std::to_string(i) + "]^2";
        item.ok = sq.is_structurally_zero();
        if (!item.ok) item.residual = sq.str(AlgebraTag::ext_p);
        report.items.push_back(std::move(item));
    }
    return report;
}

}  // namespace qminor
