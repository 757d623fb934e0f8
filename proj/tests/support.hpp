// Shared helpers for the test suites: seeded random generators for scalars,
// multilabels, words and identities, plus the rule-corruption helper used by
// the negative controls.
#pragma once

#include <algorithm>
#include <random>

#include "qminor/identity.hpp"
#include "qminor/ncalg.hpp"

namespace qminor::testing {

using Rng = std::mt19937;

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Scalar random_monomial(Rng& rng, int n, bool one_param_only = false) {
    ParamMonomial m = ParamMonomial::q_power(rand_int(rng, -3, 3));
    if (!one_param_only) {
        int vars = rand_int(rng, 0, 2);
        for (int v = 0; v < vars && n >= 2; ++v) {
            int i = rand_int(rng, 1, n - 1);
            int j = rand_int(rng, i + 1, n);
            m = m * ParamMonomial::qij_power(i, j, rand_int(rng, -2, 2));
        }
    }
    Rational c(rand_int(rng, -5, 5), rand_int(rng, 1, 3));
    if (c == 0) c = 1;
    c.canonicalize();
    return Scalar::term(m, c);
}

inline Scalar random_scalar(Rng& rng, int n, bool one_param_only = false) {
    Scalar s;
    int terms = rand_int(rng, 0, 4);
    for (int t = 0; t < terms; ++t) s += random_monomial(rng, n, one_param_only);
    return s;
}

inline Scalar random_nonzero_scalar(Rng& rng, int n, bool one_param_only = false) {
    for (;;) {
        Scalar s = random_scalar(rng, n, one_param_only);
        if (!s.is_zero()) return s;
    }
}

inline Multilabel random_multilabel(Rng& rng, int n, int max_len,
                                    bool allow_repeats = true) {
    int len = rand_int(rng, 0, max_len);
    Multilabel out;
    if (!allow_repeats) {
        Multilabel pool;
        for (int x = 1; x <= n; ++x) pool.push_back(x);
        std::shuffle(pool.begin(), pool.end(), rng);
        len = std::min(len, n);
        out.assign(pool.begin(), pool.begin() + len);
    } else {
        for (int k = 0; k < len; ++k) out.push_back(rand_int(rng, 1, n));
    }
    return out;
}

inline Word random_word(Rng& rng, const RelationSystem& rs, int len) {
    std::vector<Generator> gens = rs.generators();
    Word w;
    for (int k = 0; k < len; ++k)
        w.push_back(gens[static_cast<std::size_t>(
            rand_int(rng, 0, static_cast<int>(gens.size()) - 1))]);
    return w;
}

inline Permutation random_permutation(Rng& rng, int m) {
    std::vector<int> img;
    for (int a = 1; a <= m; ++a) img.push_back(a);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(std::move(img));
}

// Strictly ascending random sublist of {1..n} of the given size.
inline Multilabel random_ascending(Rng& rng, int n, int size) {
    Multilabel pool;
    for (int x = 1; x <= n; ++x) pool.push_back(x);
    std::shuffle(pool.begin(), pool.end(), rng);
    Multilabel out(pool.begin(), pool.begin() + size);
    std::sort(out.begin(), out.end());
    return out;
}

inline MinorIdentity random_identity(Rng& rng, Mode mode) {
    MinorIdentity id;
    id.mode = mode;
    id.n = rand_int(rng, 1, 4);
    int terms = rand_int(rng, 1, 4);
    for (int t = 0; t < terms; ++t) {
        MinorTerm term;
        term.coeff = random_nonzero_scalar(rng, id.n, mode == Mode::one_param);
        int nf = rand_int(rng, 0, 3);
        for (int f = 0; f < nf; ++f) {
            int size = rand_int(rng, 1, id.n);
            term.factors.emplace_back(random_ascending(rng, id.n, size),
                                      random_ascending(rng, id.n, size));
        }
        id.terms.push_back(std::move(term));
    }
    return id;
}

// Left sides of the branching (relation-4 shaped) rules: same-letters-off-
// diagonal descending pairs whose right side has two terms.
inline std::vector<GeneratorPair> relation4_pairs(const RelationSystem& rs) {
    std::vector<GeneratorPair> out;
    for (const auto& [lhs, rule] : rs.rules())
        if (rule.terms.size() == 2) out.push_back(lhs);
    return out;
}

// Copy of the rule table with the bracket term of one relation-4 rule sign
// flipped; presents a different (wrong) algebra.
inline std::map<GeneratorPair, RewriteRule> corrupt_relation4(
    const RelationSystem& rs, const GeneratorPair& lhs) {
    auto rules = rs.rules();
    RewriteRule& rule = rules.at(lhs);
    if (rule.terms.size() != 2)
        throw std::invalid_argument("corrupt_relation4: not a branching rule");
    rule.terms[1].first = -rule.terms[1].first;
    return rules;
}

}  // namespace qminor::testing
