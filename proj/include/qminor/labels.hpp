// Multilabel combinatorics: sorting, complements, inversion counting, and the
// reordering coefficients zeta_r / zeta_l together with the signed minor
// weights row_sign / col_sign.
//
// zeta_r(J) is the unique scalar with r_J = zeta_r(J) * r_{:J:} in S_r; it is
// accumulated operationally while bubble-sorting J, one factor q^-1 * q_{ba}
// per inversion a > b (variable written with ascending indices). zeta_l is
// the S_l analogue and is the exact inverse. row_sign(s,K) = (-q)^l(s) *
// zeta_l(sK) and col_sign(s,L) = (-q)^l(s) * zeta_r(sL); these are the
// coefficients that make the minor expansions consistent with the embedding
// into S_l (x) M_q (x) S_r.
#pragma once

#include <vector>

#include "qminor/params.hpp"

namespace qminor {

using Label = int;
using Multilabel = std::vector<Label>;

std::string to_string(const Multilabel& J);  // "1,3,4"

bool is_ascending(const Multilabel& J);           // weakly
bool is_strictly_ascending(const Multilabel& J);  // no repetitions
Multilabel sorted(Multilabel J);

// Number of pairs a < b with J[a] > J[b].
int inversions(const Multilabel& J);

// Ascending merge of all parts with multiplicity: the colon-sort :K_1...K_m:.
Multilabel sorted_concat(const std::vector<Multilabel>& parts);
Multilabel concat(const std::vector<Multilabel>& parts);  // in given order

// Ascending complement of a repetition-free J inside {1..n}.
Multilabel complement(const Multilabel& J, int n);

class Permutation {
public:
    // images[a-1] = sigma(a), a bijection of {1..m}.
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int m);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int a) const { return images_[a - 1]; }
    const std::vector<int>& images() const { return images_; }
    int inversions() const { return inversions_; }

    // (J[sigma(1)-1], ..., J[sigma(m)-1]).
    Multilabel apply(const Multilabel& J) const;

    bool operator==(const Permutation& o) const { return images_ == o.images_; }

private:
    std::vector<int> images_;
    int inversions_;
};

// All permutations of degree m in lexicographic order of their image vectors.
std::vector<Permutation> all_permutations(int m);

Scalar zeta_r(const ParamSpec& spec, const Multilabel& J);
Scalar zeta_l(const ParamSpec& spec, const Multilabel& J);

// Signed permutation weights for minor expansions. K (resp. L) must be
// strictly ascending with |K| = degree of sigma.
Scalar row_sign(const ParamSpec& spec, const Permutation& sigma, const Multilabel& K);
Scalar col_sign(const ParamSpec& spec, const Permutation& sigma, const Multilabel& L);

}  // namespace qminor
