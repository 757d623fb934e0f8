#include "qminor/corpus.hpp"

#include "qminor/identity.hpp"
#include "qminor/translate.hpp"

namespace qminor {

namespace {

MinorSymbol d1x1(int k, int i) { return MinorSymbol({k}, {i}); }

MinorTerm term(Scalar c, std::vector<MinorSymbol> fs) {
    return MinorTerm{std::move(c), std::move(fs)};
}

MinorIdentity ident(int n, std::vector<MinorTerm> terms) {
    MinorIdentity id;
    id.mode = Mode::one_param;
    id.n = n;
    id.terms = std::move(terms);
    return id;
}

std::string nm(const std::string& base, std::initializer_list<int> idx) {
    std::string out = base;
    for (int v : idx) out += std::to_string(v);
    return out;
}

std::vector<CorpusEntry> build() {
    std::vector<CorpusEntry> out;
    auto push = [&](const std::string& name, const MinorIdentity& id) {
        out.push_back({name, render(id)});
    };
    const Scalar one = Scalar::one();
    const Scalar q = Scalar::q();

    for (int n : {2, 3}) {
        const std::string suffix = "-n" + std::to_string(n) + "-";
        // t^k_i t^k_j = q t^k_j t^k_i, i < j
        for (int k = 1; k <= n; ++k)
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    push(nm("rel1" + suffix + "k", {k}) + nm("-ij", {i, j}),
                         ident(n, {term(one, {d1x1(k, i), d1x1(k, j)}),
                                   term(-q, {d1x1(k, j), d1x1(k, i)})}));
        // t^k_i t^l_i = q t^l_i t^k_i, k < l
        for (int i = 1; i <= n; ++i)
            for (int k = 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l)
                    push(nm("rel2" + suffix + "kl", {k, l}) + nm("-i", {i}),
                         ident(n, {term(one, {d1x1(k, i), d1x1(l, i)}),
                                   term(-q, {d1x1(l, i), d1x1(k, i)})}));
        for (int k = 1; k <= n; ++k)
            for (int l = k + 1; l <= n; ++l)
                for (int i = 1; i <= n; ++i)
                    for (int j = i + 1; j <= n; ++j) {
                        // q t^k_j t^l_i = q t^l_i t^k_j
                        push(nm("rel3" + suffix + "kl", {k, l}) + nm("-ij", {i, j}),
                             ident(n, {term(q, {d1x1(k, j), d1x1(l, i)}),
                                       term(-q, {d1x1(l, i), d1x1(k, j)})}));
                        // t^k_i t^l_j - t^l_j t^k_i = (q - q^-1) t^k_j t^l_i
                        push(nm("rel4" + suffix + "kl", {k, l}) + nm("-ij", {i, j}),
                             ident(n, {term(one, {d1x1(k, i), d1x1(l, j)}),
                                       term(-one, {d1x1(l, j), d1x1(k, i)}),
                                       term(-(q - Scalar::q(-1)),
                                            {d1x1(k, j), d1x1(l, i)})}));
                    }
    }

    // d[1,2|1,2] = d[1|1]d[2|2] - q d[1|2]d[2|1]
    push("laplace-2x2",
         ident(2, {term(one, {MinorSymbol({1, 2}, {1, 2})}),
                   term(-one, {d1x1(1, 1), d1x1(2, 2)}),
                   term(q, {d1x1(1, 2), d1x1(2, 1)})}));

    // First-row expansion of the 3x3 determinant, coefficients (-q)^{j-1}.
    push("laplace-3x3-row1",
         ident(3, {term(one, {MinorSymbol({1, 2, 3}, {1, 2, 3})}),
                   term(-one, {d1x1(1, 1), MinorSymbol({2, 3}, {2, 3})}),
                   term(q, {d1x1(1, 2), MinorSymbol({2, 3}, {1, 3})}),
                   term(-(q * q), {d1x1(1, 3), MinorSymbol({2, 3}, {1, 2})})}));

    // The 2x2 quantum determinant is central.
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            push(nm("det2-central-", {i, j}),
                 ident(2, {term(one, {MinorSymbol({1, 2}, {1, 2}), d1x1(i, j)}),
                           term(-one, {d1x1(i, j), MinorSymbol({1, 2}, {1, 2})})}));

    return out;
}

}  // namespace

const std::vector<CorpusEntry>& builtin_corpus() {
    static const std::vector<CorpusEntry> corpus = build();
    return corpus;
}

const CorpusEntry* find_corpus_entry(const std::string& name) {
    for (const auto& e : builtin_corpus())
        if (e.name == name) return &e;
    return nullptr;
}

}  // namespace qminor
