// Noncommutative polynomial arithmetic over the presented algebras, with PBW
// normal forms computed by oriented rewriting.
//
// Every algebra here is quadratic on an ordered generator set: each strictly
// descending adjacent pair of generators carries exactly one rewrite rule
// whose right side is a combination of ascending two-letter words (exterior
// tags add square -> 0 rules). Rewriting the leftmost redex first terminates:
// each step strictly decreases (row-inversion count, lexicographic word
// order), and the overlap tests in the suite confirm local confluence, so the
// ascending words form a linear basis and normal forms are canonical.
//
// The confluence checks run at n <= 3, which is exhaustive: a 3-letter
// overlap touches at most three distinct row and three distinct column
// labels, and every rule coefficient depends only on the relative order of
// those labels, so any higher-n overlap is an order-preserving relabeling of
// one already checked.
#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "qminor/labels.hpp"
#include "qminor/params.hpp"
#include "qminor/report.hpp"

namespace qminor {

enum class AlgebraTag : std::uint8_t {
    matrix_pq,  // T^i_j  multiparametric matrix algebra M(P,Q)
    matrix_q,   // t^i_j  one-parameter matrix algebra M_q
    s_left,     // l^j    dual q-normalized Q-space S_l(q,Q)
    s_right,    // r_i    q-normalized Q-space S_r(q,Q)
    ext_p,      // e^i    P-exterior algebra Lambda_P
    ext_q,      // f_i    Q-exterior algebra Lambda_Q
    plane_q,    // x^i    quantum Q-space O(k_Q^n)
    plane_p,    // y_i    quantum P-space O(k_P^n)
};

bool is_matrix_tag(AlgebraTag tag);
bool is_exterior_tag(AlgebraTag tag);
const char* generator_prefix(AlgebraTag tag);  // "T","t","l","r","e","f","x","y"
const char* tag_name(AlgebraTag tag);

// A single generator; matrix tags use (row, col), single-index tags store the
// index in row with col = 0. The generator order is lexicographic by
// (row, col).
struct Generator {
    int row = 0;
    int col = 0;

    auto operator<=>(const Generator&) const = default;
};

std::string generator_str(AlgebraTag tag, const Generator& g);

using Word = std::vector<Generator>;

int row_inversions(const Word& w);

// Finite formal sum of Scalar-weighted words of one algebra tag. Words are
// kept in a map (deterministic order) with no zero coefficients; the poly is
// not implicitly reduced -- normal forms are RelationSystem operations.
class NCPoly {
public:
    NCPoly(AlgebraTag tag, int n) : tag_(tag), n_(n) {}

    static NCPoly zero(AlgebraTag tag, int n) { return NCPoly(tag, n); }
    static NCPoly unit(AlgebraTag tag, int n);
    static NCPoly monomial(AlgebraTag tag, int n, Word w, Scalar c = Scalar::one());

    AlgebraTag tag() const { return tag_; }
    int n() const { return n_; }
    const std::map<Word, Scalar>& terms() const { return terms_; }
    bool is_structurally_zero() const { return terms_.empty(); }

    void add_term(const Word& w, const Scalar& c);
    Scalar coeff(const Word& w) const;

    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly operator-() const;
    NCPoly operator*(const Scalar& c) const;
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o) { return *this += -o; }

    bool operator==(const NCPoly& o) const {
        return tag_ == o.tag_ && n_ == o.n_ && terms_ == o.terms_;
    }

    void check_compatible(const NCPoly& o) const;

    std::string str() const;

private:
    AlgebraTag tag_;
    int n_;
    std::map<Word, Scalar> terms_;
};

// Right side of one oriented rule for a two-letter left side; an empty term
// list means the left side rewrites to zero (exterior squares).
struct RewriteRule {
    std::vector<std::pair<Scalar, std::array<Generator, 2>>> terms;
};

using GeneratorPair = std::pair<Generator, Generator>;

// One algebra presentation: the ordered generator set plus the oriented rule
// table. Immutable after construction; the word-level normal-form memo is
// internally synchronized, so a const RelationSystem can be shared across
// threads.
class RelationSystem {
public:
    RelationSystem(AlgebraTag tag, const ParamSpec& spec,
                   std::map<GeneratorPair, RewriteRule> rules);

    RelationSystem(const RelationSystem&) = delete;
    RelationSystem& operator=(const RelationSystem&) = delete;

    AlgebraTag tag() const { return tag_; }
    const ParamSpec& spec() const { return spec_; }
    int n() const { return spec_.n; }

    const std::map<GeneratorPair, RewriteRule>& rules() const { return rules_; }
    const RewriteRule* rule_for(const Generator& a, const Generator& b) const;

    std::vector<Generator> generators() const;

    // Leftmost position p with a rule for (w[p], w[p+1]); nullopt if normal.
    std::optional<std::size_t> leftmost_redex(const Word& w) const;

    // One rule application at position pos (which must be a redex).
    NCPoly rewrite_once(const Word& w, std::size_t pos) const;

    NCPoly normal_form_word(const Word& w) const;
    NCPoly normal_form(const NCPoly& p) const;
    bool is_normal_word(const Word& w) const { return !leftmost_redex(w).has_value(); }

    NCPoly mul(const NCPoly& a, const NCPoly& b) const;
    bool is_zero(const NCPoly& p) const;

    // All ascending (square-free for exterior tags) words of degree <= max_deg,
    // ordered by (degree, lex).
    std::vector<Word> pbw_basis(int max_deg) const;

    std::uint64_t rewrite_steps() const { return steps_.load(); }

private:
    AlgebraTag tag_;
    ParamSpec spec_;
    std::map<GeneratorPair, RewriteRule> rules_;

    mutable std::mutex memo_mutex_;
    mutable std::map<Word, NCPoly> memo_;
    mutable std::atomic<std::uint64_t> steps_{0};

    NCPoly reduce(const Word& w) const;
};

// The preset presentations. Matrix presets read their coefficients through
// q_param/p_param of the given spec, so matrix_pq with a one-parameter spec
// degenerates to the same rules as matrix_q.
RelationSystem relations_for(AlgebraTag preset, const ParamSpec& spec);

// Free-function forms of the RelationSystem operations.
NCPoly normal_form(const NCPoly& p, const RelationSystem& rs);
NCPoly mul(const NCPoly& a, const NCPoly& b, const RelationSystem& rs);
bool is_zero(const NCPoly& p, const RelationSystem& rs);
std::vector<Word> pbw_basis(const RelationSystem& rs, int max_deg);

// Resolves every 3-letter overlap ambiguity a*b*c (rules on (a,b) and (b,c)):
// reducing either redex first must give the same normal form.
CheckReport check_local_confluence(const RelationSystem& rs);

}  // namespace qminor
