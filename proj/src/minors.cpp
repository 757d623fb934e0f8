#include "qminor/minors.hpp"

#include <algorithm>

#include "qminor/tensor.hpp"

namespace qminor {

MinorSymbol::MinorSymbol(Multilabel rows_, Multilabel cols_)
    : rows(std::move(rows_)), cols(std::move(cols_)) {
    if (rows.empty() || rows.size() != cols.size())
        throw std::invalid_argument("MinorSymbol: row/col multilabels must have "
                                    "equal nonzero size, got |rows|=" +
                                    std::to_string(rows.size()) + ", |cols|=" +
                                    std::to_string(cols.size()));
    if (!is_strictly_ascending(rows) || !is_strictly_ascending(cols))
        throw std::invalid_argument(
            "MinorSymbol: multilabels must be strictly ascending, got [" +
            to_string(rows) + "|" + to_string(cols) + "]");
}

Label MinorSymbol::max_label() const {
    return std::max(rows.back(), cols.back());
}

std::string MinorSymbol::str(Mode mode) const {
    return std::string(mode == Mode::multiparam ? "D" : "d") + "[" +
           to_string(rows) + "|" + to_string(cols) + "]";
}

AlgebraTag matrix_tag_for(Mode mode) {
    return mode == Mode::multiparam ? AlgebraTag::matrix_pq : AlgebraTag::matrix_q;
}

namespace {

void check_symbol(const MinorSymbol& m, const ParamSpec& spec) {
    for (Label x : m.rows) spec.check_label(x);
    for (Label x : m.cols) spec.check_label(x);
}

}  // namespace

NCPoly minor_row_sum(const MinorSymbol& m, const ParamSpec& spec) {
    check_symbol(m, spec);
    NCPoly out(matrix_tag_for(spec.mode), spec.n);
    for (const Permutation& sigma : all_permutations(m.size())) {
        Multilabel k = sigma.apply(m.rows);
        Word w(static_cast<std::size_t>(m.size()));
        for (int a = 0; a < m.size(); ++a) w[a] = Generator{k[a], m.cols[a]};
        out.add_term(w, row_sign(spec, sigma, m.rows));
    }
    return out;
}

NCPoly minor_col_sum(const MinorSymbol& m, const ParamSpec& spec) {
    check_symbol(m, spec);
    NCPoly out(matrix_tag_for(spec.mode), spec.n);
    for (const Permutation& sigma : all_permutations(m.size())) {
        Multilabel l = sigma.apply(m.cols);
        Word w(static_cast<std::size_t>(m.size()));
        for (int a = 0; a < m.size(); ++a) w[a] = Generator{m.rows[a], l[a]};
        out.add_term(w, col_sign(spec, sigma, m.cols));
    }
    return out;
}

NCPoly expand_minor_rows(const MinorSymbol& m, const ParamSpec& spec) {
    RelationSystem rs = relations_for(matrix_tag_for(spec.mode), spec);
    return rs.normal_form(minor_row_sum(m, spec));
}

NCPoly expand_minor_cols(const MinorSymbol& m, const ParamSpec& spec) {
    RelationSystem rs = relations_for(matrix_tag_for(spec.mode), spec);
    return rs.normal_form(minor_col_sum(m, spec));
}

NCPoly expand_product(std::span<const MinorSymbol> ms, const ParamSpec& spec,
                      const RelationSystem& rs) {
    NCPoly acc = NCPoly::unit(rs.tag(), spec.n);
    for (const MinorSymbol& m : ms) acc = rs.mul(acc, minor_row_sum(m, spec));
    return acc;
}

NCPoly expand_product(std::span<const MinorSymbol> ms, const ParamSpec& spec) {
    RelationSystem rs = relations_for(matrix_tag_for(spec.mode), spec);
    return expand_product(ms, spec, rs);
}

std::vector<Multilabel> ascending_multilabels(int n, int m) {
    std::vector<Multilabel> out;
    Multilabel cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == m) {
            out.push_back(cur);
            return;
        }
        for (int x = next; x <= n; ++x) {
            cur.push_back(x);
            self(self, x + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

CheckReport check_proposition(const ParamSpec& spec, const std::vector<int>& sizes) {
    CheckReport report{"iota of minors is a pure tensor, n=" + std::to_string(spec.n),
                       {}};
    ParamSpec one(spec.n, Mode::one_param);
    RelationSystem mq = relations_for(AlgebraTag::matrix_q, one);
    TensorAlgebra ta(spec);
    for (int m : sizes) {
        for (const Multilabel& K : ascending_multilabels(spec.n, m)) {
            for (const Multilabel& L : ascending_multilabels(spec.n, m)) {
                MinorSymbol sym(K, L);
                TensorPoly image = ta.nf(ta.iota(minor_row_sum(sym, spec)));
                // Expected: l^L (x) d^K_L (x) r_K, coefficient 1.
                NCPoly d = mq.normal_form(minor_row_sum(sym, one));
                TensorPoly expected(spec.n);
                for (const auto& [w, c] : d.terms())
                    expected += ta.term(c, L, w, K);
                CheckItem item;
                item.instance = sym.str(Mode::multiparam);
                item.ok = image == expected;
                if (!item.ok)
                    item.residual = "got " + image.str() + ", expected " + expected.str();
                report.items.push_back(std::move(item));
            }
        }
    }
    return report;
}

}  // namespace qminor
