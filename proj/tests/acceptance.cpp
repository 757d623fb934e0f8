// Acceptance suite: runs every acceptance criterion at its stated scope and
// time budget and prints one pass/fail line per criterion. All comparisons
// are exact symbolic equalities; there are no tolerances to tune.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qminor/corpus.hpp"
#include "qminor/tensor.hpp"
#include "qminor/translate.hpp"
#include "../tests/support.hpp"

using namespace qminor;
using qminor::testing::Rng;

namespace {

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

bool all_ok(const CheckReport& rep, std::string& detail) {
    if (rep.all_passed()) return true;
    for (const auto& it : rep.items)
        if (!it.ok) {
            detail += rep.name + " failed at " + it.instance + ": " + it.residual + "; ";
            return false;
        }
    return false;
}

// ---- 1. iota is an algebra homomorphism at n = 2, 3, 4 --------------------
bool criterion_homomorphism(std::string& detail) {
    for (int n = 2; n <= 4; ++n)
        if (!all_ok(check_iota_homomorphism(ParamSpec(n, Mode::multiparam)), detail))
            return false;
    return true;
}

// ---- 2. injectivity sample -------------------------------------------------
bool criterion_injectivity(std::string& detail) {
    CheckReport a = check_injectivity(ParamSpec(2, Mode::multiparam), 3);
    CheckReport b = check_injectivity(ParamSpec(3, Mode::multiparam), 2);
    if (a.items.size() != 35) {
        detail = "expected 35 PBW words at n=2, deg<=3, got " +
                 std::to_string(a.items.size());
        return false;
    }
    if (b.items.size() != 55) {
        detail = "expected 55 PBW words at n=3, deg<=2, got " +
                 std::to_string(b.items.size());
        return false;
    }
    return all_ok(a, detail) && all_ok(b, detail);
}

// ---- 3. iota of every minor is the pure tensor l^L (x) d^K_L (x) r_K ------
bool criterion_proposition(std::string& detail) {
    for (int n = 1; n <= 3; ++n) {
        std::vector<int> sizes;
        for (int m = 1; m <= n; ++m) sizes.push_back(m);
        if (!all_ok(check_proposition(ParamSpec(n, Mode::multiparam), sizes), detail))
            return false;
    }
    return all_ok(check_proposition(ParamSpec(4, Mode::multiparam), {2, 3}), detail);
}

// ---- 4. minor conventions --------------------------------------------------
bool criterion_minor_conventions(std::string& detail) {
    for (int n = 1; n <= 4; ++n) {
        ParamSpec mp(n, Mode::multiparam), op(n, Mode::one_param);
        for (int m = 1; m <= n; ++m) {
            for (const auto& K : ascending_multilabels(n, m)) {
                for (const auto& L : ascending_multilabels(n, m)) {
                    MinorSymbol sym(K, L);
                    NCPoly rows_mp = expand_minor_rows(sym, mp);
                    if (rows_mp != expand_minor_cols(sym, mp)) {
                        detail = "row/col disagree for " + sym.str(Mode::multiparam);
                        return false;
                    }
                    NCPoly rows_op = expand_minor_rows(sym, op);
                    if (rows_op != expand_minor_cols(sym, op)) {
                        detail = "row/col disagree (1param) for " + sym.str(Mode::one_param);
                        return false;
                    }
                    if (rows_mp.terms().size() != rows_op.terms().size()) {
                        detail = "specialization term count mismatch for " +
                                 sym.str(Mode::multiparam);
                        return false;
                    }
                    for (const auto& [w, c] : rows_mp.terms()) {
                        if (c.specialize_one_param() != rows_op.coeff(w)) {
                            detail = "specialization mismatch for " +
                                     sym.str(Mode::multiparam);
                            return false;
                        }
                    }
                }
            }
        }
    }
    // one-param 2x2 top minor commutes with every generator
    ParamSpec op2(2, Mode::one_param);
    RelationSystem rs = relations_for(AlgebraTag::matrix_q, op2);
    NCPoly det = expand_minor_rows(MinorSymbol({1, 2}, {1, 2}), op2);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            NCPoly gen = NCPoly::monomial(AlgebraTag::matrix_q, 2, {{i, j}});
            if (!rs.is_zero(rs.mul(det, gen) - rs.mul(gen, det))) {
                detail = "2x2 determinant does not commute with t[" +
                         std::to_string(i) + "," + std::to_string(j) + "]";
                return false;
            }
        }
    return true;
}

// ---- 5. local confluence of every preset at n <= 3 -------------------------
bool criterion_confluence(std::string& detail) {
    for (int n = 1; n <= 3; ++n) {
        for (AlgebraTag tag :
             {AlgebraTag::matrix_pq, AlgebraTag::matrix_q, AlgebraTag::s_left,
              AlgebraTag::s_right, AlgebraTag::ext_p, AlgebraTag::ext_q,
              AlgebraTag::plane_q, AlgebraTag::plane_p}) {
            ParamSpec spec(n, tag == AlgebraTag::matrix_q ? Mode::one_param
                                                          : Mode::multiparam);
            RelationSystem rs = relations_for(tag, spec);
            if (!all_ok(check_local_confluence(rs), detail)) return false;
        }
    }
    return true;
}

// ---- 6. translation theorem over the corpus plus random consequences ------
MinorIdentity random_consequence(Rng& rng, const std::vector<MinorIdentity>& pool) {
    const MinorIdentity& a =
        pool[static_cast<std::size_t>(testing::rand_int(rng, 0, static_cast<int>(pool.size()) - 1))];
    const MinorIdentity& b =
        pool[static_cast<std::size_t>(testing::rand_int(rng, 0, static_cast<int>(pool.size()) - 1))];
    const std::vector<MinorSymbol>& mb =
        b.terms[static_cast<std::size_t>(
                    testing::rand_int(rng, 0, static_cast<int>(b.terms.size()) - 1))]
            .factors;
    const std::vector<MinorSymbol>& ma =
        a.terms[static_cast<std::size_t>(
                    testing::rand_int(rng, 0, static_cast<int>(a.terms.size()) - 1))]
            .factors;
    Scalar c = Scalar::q(testing::rand_int(rng, -2, 2));
    if (testing::rand_int(rng, 0, 1)) c = -c;

    MinorIdentity out;
    out.mode = Mode::one_param;
    out.n = std::max(a.n, b.n);
    for (const MinorTerm& t : a.terms) {
        MinorTerm nt = t;
        nt.factors.insert(nt.factors.end(), mb.begin(), mb.end());
        out.terms.push_back(std::move(nt));
    }
    for (const MinorTerm& t : b.terms) {
        MinorTerm nt;
        nt.coeff = t.coeff * c;
        nt.factors = ma;
        nt.factors.insert(nt.factors.end(), t.factors.begin(), t.factors.end());
        out.terms.push_back(std::move(nt));
    }
    return out;
}

bool criterion_translation(std::string& detail) {
    CorpusReport rep = run_corpus();
    if (!rep.all_passed()) {
        for (const auto& e : rep.entries)
            if (!e.passed()) {
                detail = "corpus entry " + e.name + ": " + e.detail;
                return false;
            }
    }

    std::vector<MinorIdentity> pool;
    for (const CorpusEntry& e : builtin_corpus()) {
        ParseResult pr = parse_identity(e.text);
        if (!pr.ok()) {
            detail = "corpus entry " + e.name + " failed to parse";
            return false;
        }
        if (pr.identity->n <= 3) pool.push_back(std::move(*pr.identity));
    }
    Rng rng(1234321);
    for (int k = 0; k < 50; ++k) {
        MinorIdentity id = random_consequence(rng, pool);
        if (!is_homogeneous(id).homogeneous) {
            detail = "consequence " + std::to_string(k) + " not homogeneous";
            return false;
        }
        if (!verify(id).holds) {
            detail = "consequence " + std::to_string(k) + " fails in M_q: " + render(id);
            return false;
        }
        MinorIdentity tr = translate_to_multiparam(id);
        if (!verify(tr).holds) {
            detail = "translated consequence " + std::to_string(k) +
                     " fails in M(P,Q): " + render(tr);
            return false;
        }
        if (!(translate_to_one_param(tr) == id)) {
            detail = "round trip mismatch on consequence " + std::to_string(k);
            return false;
        }
    }
    return true;
}

// ---- 7. exterior rescaling at n <= 4 ---------------------------------------
bool criterion_exterior(std::string& detail) {
    for (int n = 2; n <= 4; ++n)
        if (!all_ok(check_exterior_rescaling(ParamSpec(n, Mode::multiparam)), detail))
            return false;
    return true;
}

// ---- 8. zeta against the rewrite oracle, 500 random multilabels -----------
bool criterion_zeta_oracle(std::string& detail) {
    ParamSpec spec(5, Mode::multiparam);
    RelationSystem sr = relations_for(AlgebraTag::s_right, spec);
    RelationSystem sl = relations_for(AlgebraTag::s_left, spec);
    Rng rng(5150); // 500 labels over n = 5, length <= 6
    for (int k = 0; k < 500; ++k) {
        Multilabel J = testing::random_multilabel(rng, 5, 6);
        Word w;
        for (Label x : J) w.push_back({x, 0});
        Word sorted_w = w;
        std::sort(sorted_w.begin(), sorted_w.end());

        NCPoly rnf = sr.normal_form_word(w);
        NCPoly lnf = sl.normal_form_word(w);
        if (rnf.terms().size() != 1 || lnf.terms().size() != 1) {
            detail = "reduction of a pure word is not a single word";
            return false;
        }
        if (rnf.coeff(sorted_w) != zeta_r(spec, J) ||
            lnf.coeff(sorted_w) != zeta_l(spec, J)) {
            detail = "zeta mismatch on (" + to_string(J) + ")";
            return false;
        }
    }
    return true;
}

// ---- 9. negative controls ---------------------------------------------------
bool criterion_negative_controls(std::string& detail) {
    for (int n : {2, 3}) {
        ParamSpec spec(n, Mode::multiparam);
        RelationSystem good = relations_for(AlgebraTag::matrix_pq, spec);
        auto pairs = testing::relation4_pairs(good);
        if (pairs.empty()) {
            detail = "no relation-4 rules found";
            return false;
        }
        for (const GeneratorPair& lhs : pairs) {
            RelationSystem bad(AlgebraTag::matrix_pq, spec,
                               testing::corrupt_relation4(good, lhs));
            if (check_iota_homomorphism(spec, bad).all_passed()) {
                detail = "corrupted rule table passes the homomorphism check";
                return false;
            }
        }
    }

    // the corrupted algebra must also break the translated-identity oracle
    ParamSpec mp2(2, Mode::multiparam);
    RelationSystem good = relations_for(AlgebraTag::matrix_pq, mp2);
    RelationSystem bad(AlgebraTag::matrix_pq, mp2,
                       testing::corrupt_relation4(good, testing::relation4_pairs(good)[0]));
    ParseResult pr = parse_identity(find_corpus_entry("rel4-n2-kl12-ij12")->text);
    MinorIdentity tr = translate_to_multiparam(*pr.identity);
    if (!verify(tr).holds) {
        detail = "healthy translated relation 4 fails";
        return false;
    }
    if (verify(tr, 0, &bad).holds) {
        detail = "corrupted rules still verify the translated relation 4";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"iota homomorphism: all relation instances vanish, n = 2, 3, 4", 10.0,
         criterion_homomorphism},
        {"iota injectivity: distinct pure tensors, n=2 deg<=3 and n=3 deg<=2", 5.0,
         criterion_injectivity},
        {"minor proposition: iota(D^K_L) = l^L (x) d^K_L (x) r_K, n<=3 all sizes; "
         "n=4 sizes 2,3", 60.0, criterion_proposition},
        {"minor conventions: row = column, specialization, central 2x2 determinant",
         30.0, criterion_minor_conventions},
        {"confluence: all 3-letter overlaps of every preset, n <= 3", 30.0,
         criterion_confluence},
        {"translation theorem: corpus + 50 random homogeneous consequences", 120.0,
         criterion_translation},
        {"exterior rescaling: Lambda_P relations vanish, n <= 4", 5.0,
         criterion_exterior},
        {"zeta oracle: 500 random multilabels against word reduction", 10.0,
         criterion_zeta_oracle},
        {"negative controls: corrupted relation 4 breaks criteria 1 and 6", 30.0,
         criterion_negative_controls},
    };

    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const Criterion& c = criteria[k];
        std::string detail;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                          .count();
        bool in_budget = secs < c.budget_seconds;
        bool pass = ok && in_budget;
        if (!pass) ++failures;
        std::printf("[%s] %zu. %s (%.2fs, budget %.0fs)\n", pass ? "PASS" : "FAIL",
                    k + 1, c.name.c_str(), secs, c.budget_seconds);
        if (!ok && !detail.empty()) std::printf("       %s\n", detail.c_str());
        if (ok && !in_budget) std::printf("       exceeded the time budget\n");
        std::fflush(stdout);
    }
    std::printf("%s: %zu/%zu criteria passed\n",
                failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
                criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
