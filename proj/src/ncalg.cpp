#include "qminor/ncalg.hpp"

#include <algorithm>
#include <sstream>

namespace qminor {

bool is_matrix_tag(AlgebraTag tag) {
    return tag == AlgebraTag::matrix_pq || tag == AlgebraTag::matrix_q;
}

bool is_exterior_tag(AlgebraTag tag) {
    return tag == AlgebraTag::ext_p || tag == AlgebraTag::ext_q;
}

const char* generator_prefix(AlgebraTag tag) {
    switch (tag) {
        case AlgebraTag::matrix_pq: return "T";
        case AlgebraTag::matrix_q: return "t";
        case AlgebraTag::s_left: return "l";
        case AlgebraTag::s_right: return "r";
        case AlgebraTag::ext_p: return "e";
        case AlgebraTag::ext_q: return "f";
        case AlgebraTag::plane_q: return "x";
        case AlgebraTag::plane_p: return "y";
    }
    return "?";
}

const char* tag_name(AlgebraTag tag) {
    switch (tag) {
        case AlgebraTag::matrix_pq: return "M(P,Q)";
        case AlgebraTag::matrix_q: return "M_q";
        case AlgebraTag::s_left: return "S_l";
        case AlgebraTag::s_right: return "S_r";
        case AlgebraTag::ext_p: return "Lambda_P";
        case AlgebraTag::ext_q: return "Lambda_Q";
        case AlgebraTag::plane_q: return "O(k_Q^n)";
        case AlgebraTag::plane_p: return "O(k_P^n)";
    }
    return "?";
}

std::string generator_str(AlgebraTag tag, const Generator& g) {
    std::string out = generator_prefix(tag);
    out += "[" + std::to_string(g.row);
    if (is_matrix_tag(tag)) out += "," + std::to_string(g.col);
    out += "]";
    return out;
}

int row_inversions(const Word& w) {
    int count = 0;
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = a + 1; b < w.size(); ++b)
            if (w[a].row > w[b].row) ++count;
    return count;
}

// ---------------------------------------------------------------------------
// NCPoly

NCPoly NCPoly::unit(AlgebraTag tag, int n) {
    return monomial(tag, n, Word{}, Scalar::one());
}

NCPoly NCPoly::monomial(AlgebraTag tag, int n, Word w, Scalar c) {
    NCPoly p(tag, n);
    p.add_term(w, c);
    return p;
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar NCPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar::zero() : it->second;
}

void NCPoly::check_compatible(const NCPoly& o) const {
    if (tag_ != o.tag_ || n_ != o.n_)
        throw std::invalid_argument("NCPoly: mixing algebras " +
                                    std::string(tag_name(tag_)) + "(n=" +
                                    std::to_string(n_) + ") and " +
                                    std::string(tag_name(o.tag_)) + "(n=" +
                                    std::to_string(o.n_) + ")");
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    NCPoly r = *this;
    r += o;
    return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    check_compatible(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPoly NCPoly::operator-(const NCPoly& o) const { return *this + (-o); }

NCPoly NCPoly::operator-() const {
    NCPoly r(tag_, n_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NCPoly NCPoly::operator*(const Scalar& c) const {
    NCPoly r(tag_, n_);
    if (c.is_zero()) return r;
    for (const auto& [w, cw] : terms_) r.add_term(w, cw * c);
    return r;
}

std::string NCPoly::str() const {
    if (terms_.empty()) return "0";
    // Terms ordered by (degree, lex word); scalar monomials render inline with
    // the sign pulled into the separator, general scalars in parentheses.
    std::vector<const std::pair<const Word, Scalar>*> ordered;
    for (const auto& t : terms_) ordered.push_back(&t);
    std::stable_sort(ordered.begin(), ordered.end(), [](auto* a, auto* b) {
        if (a->first.size() != b->first.size()) return a->first.size() < b->first.size();
        return a->first < b->first;
    });

    std::ostringstream out;
    bool first = true;
    for (auto* t : ordered) {
        const Word& w = t->first;
        const Scalar& c = t->second;
        std::string body;
        bool negative = false;
        if (c.is_monomial()) {
            const auto& [mono, rat] = *c.terms().begin();
            negative = rat < 0;
            Scalar mag = Scalar::term(mono, abs(rat));
            if (!mag.is_one() || w.empty()) body = mag.str();
        } else {
            body = "(" + c.str() + ")";
        }
        for (const Generator& g : w) {
            if (!body.empty()) body += "*";
            body += generator_str(tag_, g);
        }
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        out << body;
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// RelationSystem

RelationSystem::RelationSystem(AlgebraTag tag, const ParamSpec& spec,
                               std::map<GeneratorPair, RewriteRule> rules)
    : tag_(tag), spec_(spec), rules_(std::move(rules)) {
    for (const auto& [lhs, rule] : rules_) {
        const auto& [a, b] = lhs;
        if (a < b)
            throw std::invalid_argument("RelationSystem: rule left side must be "
                                        "descending or a square");
        if (a == b && !rule.terms.empty())
            throw std::invalid_argument("RelationSystem: square rules must map to 0");
        for (const auto& [c, rhs] : rule.terms) {
            (void)c;
            if (!(rhs[0] < rhs[1]) && !(rhs[0] == rhs[1] && !is_exterior_tag(tag_)))
                throw std::invalid_argument(
                    "RelationSystem: rule right side must be ascending");
        }
    }
}

const RewriteRule* RelationSystem::rule_for(const Generator& a, const Generator& b) const {
    auto it = rules_.find({a, b});
    return it == rules_.end() ? nullptr : &it->second;
}

std::vector<Generator> RelationSystem::generators() const {
    std::vector<Generator> out;
    const int n = spec_.n;
    if (is_matrix_tag(tag_)) {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) out.push_back({i, j});
    } else {
        for (int i = 1; i <= n; ++i) out.push_back({i, 0});
    }
    return out;
}

std::optional<std::size_t> RelationSystem::leftmost_redex(const Word& w) const {
    for (std::size_t p = 0; p + 1 < w.size(); ++p)
        if (rule_for(w[p], w[p + 1])) return p;
    return std::nullopt;
}

NCPoly RelationSystem::rewrite_once(const Word& w, std::size_t pos) const {
    const RewriteRule* rule = rule_for(w[pos], w[pos + 1]);
    if (!rule) throw std::invalid_argument("rewrite_once: no rule at position");
    steps_.fetch_add(1, std::memory_order_relaxed);
    NCPoly out(tag_, spec_.n);
    for (const auto& [c, repl] : rule->terms) {
        Word nw;
        nw.reserve(w.size());
        nw.insert(nw.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
        nw.push_back(repl[0]);
        nw.push_back(repl[1]);
        nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.end());
        out.add_term(nw, c);
    }
    return out;
}

NCPoly RelationSystem::reduce(const Word& w) const {
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
    }
    auto pos = leftmost_redex(w);
    if (!pos) return NCPoly::monomial(tag_, spec_.n, w);

    NCPoly step = rewrite_once(w, *pos);
    NCPoly out(tag_, spec_.n);
    for (const auto& [nw, c] : step.terms()) out += reduce(nw) * c;

    std::lock_guard<std::mutex> lock(memo_mutex_);
    memo_.emplace(w, out);
    return out;
}

NCPoly RelationSystem::normal_form_word(const Word& w) const { return reduce(w); }

NCPoly RelationSystem::normal_form(const NCPoly& p) const {
    if (p.tag() != tag_ || p.n() != spec_.n)
        throw std::invalid_argument("normal_form: polynomial over a different algebra");
    NCPoly out(tag_, spec_.n);
    for (const auto& [w, c] : p.terms()) out += reduce(w) * c;
    return out;
}

NCPoly RelationSystem::mul(const NCPoly& a, const NCPoly& b) const {
    a.check_compatible(b);
    if (a.tag() != tag_ || a.n() != spec_.n)
        throw std::invalid_argument("mul: polynomial over a different algebra");
    NCPoly out(tag_, spec_.n);
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            Word w;
            w.reserve(wa.size() + wb.size());
            w.insert(w.end(), wa.begin(), wa.end());
            w.insert(w.end(), wb.begin(), wb.end());
            out += reduce(w) * (ca * cb);
        }
    }
    return out;
}

bool RelationSystem::is_zero(const NCPoly& p) const {
    return normal_form(p).is_structurally_zero();
}

std::vector<Word> RelationSystem::pbw_basis(int max_deg) const {
    if (max_deg < 0) throw std::invalid_argument("pbw_basis: max_deg must be >= 0");
    const std::vector<Generator> gens = generators();
    const bool strict = is_exterior_tag(tag_);
    std::vector<Word> out;
    out.push_back(Word{});  // degree 0
    std::vector<Word> level{Word{}};
    for (int d = 1; d <= max_deg; ++d) {
        std::vector<Word> next;
        for (const Word& w : level) {
            for (const Generator& g : gens) {
                if (!w.empty()) {
                    if (strict ? !(w.back() < g) : g < w.back()) continue;
                }
                Word nw = w;
                nw.push_back(g);
                next.push_back(std::move(nw));
            }
        }
        std::sort(next.begin(), next.end());
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
        if (level.empty()) break;  // exterior tags run out of square-free words
    }
    return out;
}

// ---------------------------------------------------------------------------
// Presets

namespace {

RewriteRule swap_rule(const Scalar& c, Generator a, Generator b) {
    RewriteRule r;
    r.terms.push_back({c, {a, b}});
    return r;
}

// The four relation families of the matrix algebra, oriented to rewrite the
// descending pair T^a_b T^c_d, (a,b) > (c,d):
//   same row:  T^k_j T^k_i -> q_ij^-1 T^k_i T^k_j                      (i<j)
//   same col:  T^l_i T^k_i -> p_kl^-1 T^k_i T^l_i                      (k<l)
//   crossing:  T^l_i T^k_j -> p_kl^-1 q_ij T^k_j T^l_i                 (k<l, i<j)
//   crossing:  T^l_j T^k_i -> q_ij^-1 q_kl (T^k_i T^l_j
//                              - (q_ij - p_ij^-1) T^k_j T^l_i)          (k<l, i<j)
std::map<GeneratorPair, RewriteRule> matrix_rules(const ParamSpec& spec) {
    std::map<GeneratorPair, RewriteRule> rules;
    const int n = spec.n;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c)
                for (int d = 1; d <= n; ++d) {
                    Generator hi{a, b}, lo{c, d};
                    if (!(lo < hi)) continue;
                    if (a == c) {
                        // same row k=a, columns d < b
                        rules[{hi, lo}] = swap_rule(
                            q_param(spec, d, b).monomial_inverse(), lo, hi);
                    } else if (b == d) {
                        // same column i=b, rows c < a
                        rules[{hi, lo}] = swap_rule(
                            p_param(spec, c, a).monomial_inverse(), lo, hi);
                    } else if (b < d) {
                        // T^l_i T^k_j with k=c < l=a, i=b < j=d
                        rules[{hi, lo}] = swap_rule(
                            p_param(spec, c, a).monomial_inverse() * q_param(spec, b, d),
                            lo, hi);
                    } else {
                        // T^l_j T^k_i with k=c < l=a, i=d < j=b
                        Scalar front = q_param(spec, d, b).monomial_inverse() *
                                       q_param(spec, c, a);
                        Scalar bracket =
                            q_param(spec, d, b) -
                            p_param(spec, d, b).monomial_inverse();
                        RewriteRule r;
                        r.terms.push_back({front, {Generator{c, d}, Generator{a, b}}});
                        r.terms.push_back(
                            {-(front * bracket), {Generator{c, b}, Generator{a, d}}});
                        rules[{hi, lo}] = r;
                    }
                }
    return rules;
}

// Single-index algebras: one swap rule per descending pair, coefficient read
// off the defining relation, plus square rules for the exterior tags.
template <class FactorFn>
std::map<GeneratorPair, RewriteRule> vector_rules(const ParamSpec& spec,
                                                  FactorFn factor, bool exterior) {
    std::map<GeneratorPair, RewriteRule> rules;
    for (int i = 1; i <= spec.n; ++i) {
        for (int j = i + 1; j <= spec.n; ++j) {
            Generator lo{i, 0}, hi{j, 0};
            rules[{hi, lo}] = swap_rule(factor(i, j), lo, hi);
        }
        if (exterior) rules[{Generator{i, 0}, Generator{i, 0}}] = RewriteRule{};
    }
    return rules;
}

}  // namespace

RelationSystem relations_for(AlgebraTag preset, const ParamSpec& spec) {
    switch (preset) {
        case AlgebraTag::matrix_pq:
        case AlgebraTag::matrix_q:
            return RelationSystem(preset, spec, matrix_rules(spec));
        case AlgebraTag::s_right:
            // r_i r_j = q q_ij^-1 r_j r_i (i<j)  =>  r_j r_i -> q^-1 q_ij r_i r_j
            return RelationSystem(preset, spec,
                                  vector_rules(spec,
                                               [&](int i, int j) {
                                                   return Scalar::q(-1) *
                                                          q_param(spec, i, j);
                                               },
                                               false));
        case AlgebraTag::s_left:
            // l^i l^j = q_ij q^-1 l^j l^i (i<j)  =>  l^j l^i -> q q_ij^-1 l^i l^j
            return RelationSystem(
                preset, spec,
                vector_rules(spec,
                             [&](int i, int j) {
                                 return Scalar::q(1) *
                                        q_param(spec, i, j).monomial_inverse();
                             },
                             false));
        case AlgebraTag::ext_p:
            // e^i e^j = -p_ij^-1 e^j e^i (i<j)  =>  e^j e^i -> -p_ij e^i e^j
            return RelationSystem(preset, spec,
                                  vector_rules(spec,
                                               [&](int i, int j) {
                                                   return -p_param(spec, i, j);
                                               },
                                               true));
        case AlgebraTag::ext_q:
            // f_i f_j = -q_ij^-1 f_j f_i (i<j)  =>  f_j f_i -> -q_ij f_i f_j
            return RelationSystem(preset, spec,
                                  vector_rules(spec,
                                               [&](int i, int j) {
                                                   return -q_param(spec, i, j);
                                               },
                                               true));
        case AlgebraTag::plane_q:
            // x^i x^j = q_ij x^j x^i (i<j)  =>  x^j x^i -> q_ij^-1 x^i x^j
            return RelationSystem(
                preset, spec,
                vector_rules(spec,
                             [&](int i, int j) {
                                 return q_param(spec, i, j).monomial_inverse();
                             },
                             false));
        case AlgebraTag::plane_p:
            // y_i y_j = p_ij y_j y_i (i<j)  =>  y_j y_i -> p_ij^-1 y_i y_j
            return RelationSystem(
                preset, spec,
                vector_rules(spec,
                             [&](int i, int j) {
                                 return p_param(spec, i, j).monomial_inverse();
                             },
                             false));
    }
    throw std::invalid_argument("relations_for: unknown preset");
}

NCPoly normal_form(const NCPoly& p, const RelationSystem& rs) {
    return rs.normal_form(p);
}

NCPoly mul(const NCPoly& a, const NCPoly& b, const RelationSystem& rs) {
    return rs.mul(a, b);
}

bool is_zero(const NCPoly& p, const RelationSystem& rs) { return rs.is_zero(p); }

std::vector<Word> pbw_basis(const RelationSystem& rs, int max_deg) {
    return rs.pbw_basis(max_deg);
}

CheckReport check_local_confluence(const RelationSystem& rs) {
    CheckReport report{std::string("local confluence of ") + tag_name(rs.tag()) +
                           " at n=" + std::to_string(rs.n()),
                       {}};
    for (const auto& [lhs1, rule1] : rs.rules()) {
        (void)rule1;
        for (const auto& [lhs2, rule2] : rs.rules()) {
            (void)rule2;
            if (lhs1.second != lhs2.first) continue;
            Word w{lhs1.first, lhs1.second, lhs2.second};
            NCPoly left = rs.normal_form(rs.rewrite_once(w, 0));
            NCPoly right = rs.normal_form(rs.rewrite_once(w, 1));
            CheckItem item;
            item.instance = NCPoly::monomial(rs.tag(), rs.n(), w).str();
            item.ok = left == right;
            if (!item.ok)
                item.residual = "left-first " + left.str() + " != right-first " +
                                right.str();
            report.items.push_back(std::move(item));
        }
    }
    return report;
}

}  // namespace qminor
