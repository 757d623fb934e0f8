// Translation of homogeneous minor identities between the one-parameter and
// multiparametric algebras, and the independent normal-form verifier.
//
// For a homogeneous one-parameter identity sum_t c_t d^{K_t1}_{L_t1} ... = 0,
// the multiparametric counterpart keeps the factors and multiplies each
// term's coefficient by
//
//   zeta_r(K_t1 K_t2 ...)^-1 * zeta_l(L_t1 L_t2 ...)^-1
//
// (rows feed zeta_r, columns zeta_l -- the pairing dictated by
// T^i_j -> l^j (x) t^i_j (x) r_i). The inverse direction multiplies by the
// un-inverted factors and then specializes q_ij -> q.
#pragma once

#include <cstdint>

#include "qminor/identity.hpp"

namespace qminor {

MinorIdentity translate_to_multiparam(const MinorIdentity& id);
MinorIdentity translate_to_one_param(const MinorIdentity& id);

struct VerificationReport {
    bool holds = false;
    NCPoly residual{AlgebraTag::matrix_q, 1};  // normal form of the expanded left side
    std::size_t terms_expanded = 0;
    std::uint64_t rewrite_steps = 0;

    std::string str() const;
};

// Expands the identity in its mode's matrix algebra and reduces to normal
// form; holds iff the residual is zero. ambient_n may enlarge the matrix size
// (identities stay identities under label-set extension); rules_override
// substitutes the relation table (negative controls).
VerificationReport verify(const MinorIdentity& id, int ambient_n = 0,
                          const RelationSystem* rules_override = nullptr);

struct CorpusEntryResult {
    std::string name;
    bool parsed = false;
    bool verified_one_param = false;
    bool verified_multiparam = false;
    bool round_trip = false;
    std::uint64_t rewrite_steps = 0;
    std::string detail;  // failure description

    bool passed() const {
        return parsed && verified_one_param && verified_multiparam && round_trip;
    }
};

struct CorpusReport {
    std::vector<CorpusEntryResult> entries;
    std::uint64_t total_rewrite_steps = 0;
    double wall_seconds = 0.0;

    std::size_t passed() const;
    std::size_t failed() const { return entries.size() - passed(); }
    bool all_passed() const { return failed() == 0; }
};

// Full pipeline over every shipped one-parameter identity: verify in M_q,
// translate, verify the translation in M(P,Q), round-trip back and compare
// term by term. Entries are independent; jobs > 1 fans them out while the
// report keeps corpus order.
CorpusReport run_corpus(int jobs = 1);

}  // namespace qminor
