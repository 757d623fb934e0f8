// Symbolic quantum minors D^K_L and their expansion into the matrix algebras,
// by row or by column permutation sums:
//
//   rows:    D^K_L = sum_s row_sign(s,K) T^{K[s1]}_{L[1]} ... T^{K[sm]}_{L[m]}
//   columns: D^K_L = sum_s col_sign(s,L) T^{K[1]}_{L[s1]} ... T^{K[m]}_{L[sm]}
//
// The row expansion is the defining one; equality with the column expansion
// is a verified property. expand_* return PBW normal forms.
#pragma once

#include <span>

#include "qminor/labels.hpp"
#include "qminor/ncalg.hpp"
#include "qminor/report.hpp"

namespace qminor {

struct MinorSymbol {
    Multilabel rows;
    Multilabel cols;

    MinorSymbol(Multilabel rows_, Multilabel cols_);

    int size() const { return static_cast<int>(rows.size()); }
    Label max_label() const;
    std::string str(Mode mode) const;  // D[k1,..|l1,..] or d[..|..]

    auto operator<=>(const MinorSymbol&) const = default;
};

AlgebraTag matrix_tag_for(Mode mode);

// Raw permutation sums (free words, not reduced).
NCPoly minor_row_sum(const MinorSymbol& m, const ParamSpec& spec);
NCPoly minor_col_sum(const MinorSymbol& m, const ParamSpec& spec);

NCPoly expand_minor_rows(const MinorSymbol& m, const ParamSpec& spec);
NCPoly expand_minor_cols(const MinorSymbol& m, const ParamSpec& spec);

// PBW normal form of the ordered product of row expansions; empty product
// gives 1. The overload taking a RelationSystem reuses its memo (and lets
// callers substitute a modified rule table).
NCPoly expand_product(std::span<const MinorSymbol> ms, const ParamSpec& spec);
NCPoly expand_product(std::span<const MinorSymbol> ms, const ParamSpec& spec,
                      const RelationSystem& rs);

// All strictly ascending sublists of {1..n} of length m.
std::vector<Multilabel> ascending_multilabels(int n, int m);

// iota(D^K_L) must be the single pure tensor l^L (x) d^K_L (x) r_K with
// coefficient exactly 1; checked for every row/column pair of each requested
// size.
CheckReport check_proposition(const ParamSpec& spec, const std::vector<int>& sizes);

}  // namespace qminor
