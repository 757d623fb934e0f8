// The bigraded tensor algebra S_l (x) M_q (x) S_r, the embedding
// iota: T^i_j -> l^j (x) t^i_j (x) r_i, bidegrees, and the machine checks
// behind it (homomorphism property, injectivity sample, exterior rescaling).
//
// The image of iota is the bidegree-(0,0) subalgebra. The machine checks
// cover membership (every image term has bidegree (0,0)) and injectivity on
// PBW samples; the spanning direction -- every (0,0) monomial is
// proportional to a product of generator images after sorting the outer
// slots -- is a short reordering argument and is not machine-checked here.
//
// The outer l and r slots have sorted-word PBW bases, so terms store them as
// exponent vectors; reordering a raw l-/r-word into its sorted form only
// produces a zeta factor, which is absorbed into the coefficient at term
// construction. The middle slot is a genuine word and is reduced by the
// one-parameter relation system of the ambient TensorAlgebra.
#pragma once

#include <vector>

#include "qminor/ncalg.hpp"
#include "qminor/report.hpp"

namespace qminor {

// Support triple of one tensor term: l-exponents | middle word | r-exponents.
struct TensorKey {
    std::vector<int> l_exp;
    Word mid;
    std::vector<int> r_exp;

    auto operator<=>(const TensorKey&) const = default;
};

// Bidegree (I-part, J-part): t^i_j carries (+i,+j), r_i carries (-i,0),
// l^j carries (0,-j), extended additively.
struct Bidegree {
    std::vector<int> i_part;
    std::vector<int> j_part;

    bool is_zero() const;
    bool operator==(const Bidegree&) const = default;
    Bidegree operator+(const Bidegree& o) const;
    std::string str() const;
};

class TensorPoly {
public:
    explicit TensorPoly(int n) : n_(n) {}

    int n() const { return n_; }
    const std::map<TensorKey, Scalar>& terms() const { return terms_; }
    bool is_structurally_zero() const { return terms_.empty(); }

    void add_term(const TensorKey& k, const Scalar& c);

    TensorPoly operator+(const TensorPoly& o) const;
    TensorPoly operator-(const TensorPoly& o) const;
    TensorPoly operator-() const;
    TensorPoly operator*(const Scalar& c) const;
    TensorPoly& operator+=(const TensorPoly& o);

    bool operator==(const TensorPoly& o) const {
        return n_ == o.n_ && terms_ == o.terms_;
    }

    std::string str(AlgebraTag mid_tag = AlgebraTag::matrix_q) const;

private:
    int n_;
    std::map<TensorKey, Scalar> terms_;
};

Bidegree bidegree(const TensorKey& key, int n);

// The ambient tensor algebra: the spec fixes n and the zeta coefficients of
// the outer slots; mid_tag/mid relations fix the middle factor (M_q by
// default, Lambda_q for the exterior rescaling check).
class TensorAlgebra {
public:
    explicit TensorAlgebra(const ParamSpec& spec);
    TensorAlgebra(const ParamSpec& spec, AlgebraTag mid_tag);

    const ParamSpec& spec() const { return spec_; }
    int n() const { return spec_.n; }
    const RelationSystem& mid_relations() const { return mid_rs_; }

    TensorPoly zero() const { return TensorPoly(spec_.n); }
    TensorPoly one() const;

    // c * l^{l_raw} (x) mid (x) r_{r_raw}; the raw outer words may be in any
    // order, their zeta reordering factors fold into the coefficient. The
    // middle word is stored as given (use nf to reduce it).
    TensorPoly term(const Scalar& c, const Multilabel& l_raw, const Word& mid,
                    const Multilabel& r_raw) const;

    // Slotwise normal form: middle words reduced to PBW form, terms merged.
    TensorPoly nf(const TensorPoly& tp) const;

    TensorPoly mul(const TensorPoly& a, const TensorPoly& b) const;

    // Image of a free polynomial in the T-generators: every word maps to the
    // product of its generator images, middle slot reduced. Linear and (per
    // the homomorphism check) multiplicative.
    TensorPoly iota(const NCPoly& p) const;

private:
    ParamSpec spec_;
    RelationSystem mid_rs_;

    std::vector<int> to_exponents(const Multilabel& sorted_word) const;
    Multilabel to_word(const std::vector<int>& exps) const;
};

// Theorem (i): every defining relation of M(P,Q) (read off the rule table)
// maps to zero in the tensor algebra. The overload with an explicit relation
// system exists so corrupted rule tables can be fed in as negative controls.
CheckReport check_iota_homomorphism(const ParamSpec& spec);
CheckReport check_iota_homomorphism(const ParamSpec& spec,
                                    const RelationSystem& matrix_rules);

// Theorem (ii), necessary half at sample scale: images of distinct PBW words
// are single tensor terms with nonzero coefficients and distinct support
// triples.
CheckReport check_injectivity(const ParamSpec& spec, int max_deg);

// Theorem (iii): under E^j -> l^j (x) e^j into S_l (x) Lambda_q, every
// Lambda_P relation (braiding and squares) maps to zero.
CheckReport check_exterior_rescaling(const ParamSpec& spec);

}  // namespace qminor
