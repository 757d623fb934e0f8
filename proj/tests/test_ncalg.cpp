#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <thread>

#include "qminor/ncalg.hpp"
#include "support.hpp"

using namespace qminor;
using qminor::testing::Rng;

namespace {

NCPoly word_poly(const RelationSystem& rs, std::initializer_list<Generator> gens,
                 Scalar c = Scalar::one()) {
    return NCPoly::monomial(rs.tag(), rs.n(), Word(gens), c);
}

long binomial(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

const std::vector<AlgebraTag> kAllTags = {
    AlgebraTag::matrix_pq, AlgebraTag::matrix_q, AlgebraTag::s_left,
    AlgebraTag::s_right,   AlgebraTag::ext_p,    AlgebraTag::ext_q,
    AlgebraTag::plane_q,   AlgebraTag::plane_p};

ParamSpec spec_for(AlgebraTag tag, int n) {
    return ParamSpec(n, tag == AlgebraTag::matrix_q ? Mode::one_param
                                                    : Mode::multiparam);
}

}  // namespace

TEST_CASE("rule tables of the presets") {
    ParamSpec mp2(2, Mode::multiparam);
    RelationSystem m2 = relations_for(AlgebraTag::matrix_pq, mp2);
    CHECK(m2.generators().size() == 4);
    CHECK(m2.rules().size() == 6);  // one rule per descending pair

    ParamSpec mp3(3, Mode::multiparam);
    RelationSystem sr = relations_for(AlgebraTag::s_right, mp3);
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) {
            const RewriteRule* r = sr.rule_for({j, 0}, {i, 0});
            REQUIRE(r != nullptr);
            REQUIRE(r->terms.size() == 1);
            CHECK(r->terms[0].first == Scalar::q(-1) * Scalar::qij(i, j));
            CHECK(r->terms[0].second == std::array<Generator, 2>{{{i, 0}, {j, 0}}});
        }

    // Exterior: squares vanish and e^j e^i -> -p_ij e^i e^j, the orientation
    // under which the defining relation e^i e^j + p_ij^-1 e^j e^i reduces to 0.
    RelationSystem ep = relations_for(AlgebraTag::ext_p, mp2);
    const RewriteRule* sq = ep.rule_for({1, 0}, {1, 0});
    REQUIRE(sq != nullptr);
    CHECK(sq->terms.empty());
    const RewriteRule* br = ep.rule_for({2, 0}, {1, 0});
    REQUIRE(br != nullptr);
    CHECK(br->terms[0].first == -p_param(mp2, 1, 2));
    NCPoly defining = word_poly(ep, {{1, 0}, {2, 0}}) +
                      word_poly(ep, {{2, 0}, {1, 0}},
                                p_param(mp2, 1, 2).monomial_inverse());
    CHECK(ep.is_zero(defining));

    RelationSystem eq = relations_for(AlgebraTag::ext_q, mp2);
    NCPoly defining_q = word_poly(eq, {{1, 0}, {2, 0}}) +
                        word_poly(eq, {{2, 0}, {1, 0}},
                                  q_param(mp2, 1, 2).monomial_inverse());
    CHECK(eq.is_zero(defining_q));
}

TEST_CASE("normal_form examples") {
    ParamSpec mp2(2, Mode::multiparam);
    RelationSystem m2 = relations_for(AlgebraTag::matrix_pq, mp2);

    NCPoly p = m2.normal_form_word({{1, 2}, {1, 1}});
    NCPoly expect(AlgebraTag::matrix_pq, 2);
    expect.add_term({{1, 1}, {1, 2}}, Scalar::qij(1, 2, -1));
    CHECK(p == expect);

    ParamSpec op2(2, Mode::one_param);
    RelationSystem t2 = relations_for(AlgebraTag::matrix_q, op2);
    NCPoly p2 = t2.normal_form_word({{2, 2}, {1, 1}});
    NCPoly expect2(AlgebraTag::matrix_q, 2);
    expect2.add_term({{1, 1}, {2, 2}}, Scalar::one());
    expect2.add_term({{1, 2}, {2, 1}}, -(Scalar::q() - Scalar::q(-1)));
    CHECK(p2 == expect2);

    CHECK(m2.normal_form_word({}) == NCPoly::unit(AlgebraTag::matrix_pq, 2));
}

TEST_CASE("mul") {
    ParamSpec mp2(2, Mode::multiparam);
    RelationSystem m2 = relations_for(AlgebraTag::matrix_pq, mp2);
    Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        NCPoly p(AlgebraTag::matrix_pq, 2);
        p.add_term(testing::random_word(rng, m2, 3), testing::random_scalar(rng, 2));
        CHECK(m2.mul(NCPoly::unit(AlgebraTag::matrix_pq, 2), p) == m2.normal_form(p));
    }

    NCPoly a = word_poly(m2, {{1, 1}});
    NCPoly b = word_poly(m2, {{1, 2}});
    CHECK(m2.mul(a, b) == word_poly(m2, {{1, 1}, {1, 2}}));

    RelationSystem lq = relations_for(AlgebraTag::ext_q, mp2);
    NCPoly f1 = NCPoly::monomial(AlgebraTag::ext_q, 2, {{1, 0}});
    CHECK(lq.mul(f1, f1).is_structurally_zero());

    NCPoly wrong(AlgebraTag::matrix_q, 2);
    wrong.add_term({{1, 1}}, Scalar::one());
    CHECK_THROWS_AS(m2.mul(a, wrong), std::invalid_argument);
}

TEST_CASE("is_zero") {
    ParamSpec mp2(2, Mode::multiparam);
    RelationSystem m2 = relations_for(AlgebraTag::matrix_pq, mp2);

    NCPoly rel = word_poly(m2, {{1, 1}, {1, 2}}) -
                 word_poly(m2, {{1, 2}, {1, 1}}, Scalar::qij(1, 2));
    CHECK(m2.is_zero(rel));

    NCPoly comm = word_poly(m2, {{1, 1}, {2, 2}}) - word_poly(m2, {{2, 2}, {1, 1}});
    CHECK_FALSE(m2.is_zero(comm));
    NCPoly residual = m2.normal_form(comm);
    CHECK(residual.coeff({{1, 2}, {2, 1}}) ==
          Scalar::qij(1, 2) - p_param(mp2, 1, 2).monomial_inverse());

    CHECK(m2.is_zero(NCPoly::zero(AlgebraTag::matrix_pq, 2)));
}

TEST_CASE("pbw_basis") {
    ParamSpec mp2(2, Mode::multiparam);
    RelationSystem m2 = relations_for(AlgebraTag::matrix_pq, mp2);
    auto words = m2.pbw_basis(1);
    REQUIRE(words.size() == 5);
    CHECK(words[0] == Word{});
    CHECK(words[1] == Word{{1, 1}});
    CHECK(words[2] == Word{{1, 2}});
    CHECK(words[3] == Word{{2, 1}});
    CHECK(words[4] == Word{{2, 2}});

    RelationSystem eq = relations_for(AlgebraTag::ext_q, mp2);
    CHECK(eq.pbw_basis(10).size() == 4);  // 1, f1, f2, f1f2

    RelationSystem sr = relations_for(AlgebraTag::s_right, mp2);
    CHECK(sr.pbw_basis(2).size() == 6);
}

TEST_CASE("pbw dimensions match commutative monomial counts") {
    for (int n = 1; n <= 3; ++n) {
        ParamSpec spec(n, Mode::multiparam);
        RelationSystem rs = relations_for(AlgebraTag::matrix_pq, spec);
        auto words = rs.pbw_basis(4);
        for (int d = 0; d <= 4; ++d) {
            long count = 0;
            for (const Word& w : words)
                if (static_cast<int>(w.size()) == d) ++count;
            CHECK(count == binomial(n * n + d - 1, d));
        }
    }
}

// Every rewrite step strictly decreases (row-inversion count, lex order).
TEST_CASE("termination measure decreases at every step") {
    Rng rng(43);
    for (AlgebraTag tag : kAllTags) {
        RelationSystem rs = relations_for(tag, spec_for(tag, 3));
        for (int trial = 0; trial < 25; ++trial) {
            std::set<Word> visited;
            std::vector<Word> stack{testing::random_word(rng, rs, testing::rand_int(rng, 0, 8))};
            int budget = 200000;
            while (!stack.empty() && budget-- > 0) {
                Word w = std::move(stack.back());
                stack.pop_back();
                if (!visited.insert(w).second) continue;
                auto pos = rs.leftmost_redex(w);
                if (!pos) continue;
                NCPoly step = rs.rewrite_once(w, *pos);
                for (const auto& [nw, c] : step.terms()) {
                    bool smaller = row_inversions(nw) < row_inversions(w) ||
                                   (row_inversions(nw) == row_inversions(w) && nw < w);
                    CHECK(smaller);
                    stack.push_back(nw);
                }
            }
            CHECK(budget > 0);
        }
    }
}

TEST_CASE("local confluence of every preset at n <= 3") {
    for (int n = 2; n <= 3; ++n) {
        for (AlgebraTag tag : kAllTags) {
            RelationSystem rs = relations_for(tag, spec_for(tag, n));
            CheckReport rep = check_local_confluence(rs);
            INFO(rep.name);
            CHECK(rep.all_passed());
        }
    }
}

// With local confluence and termination the normal form cannot depend on the
// strategy; reduce random words rightmost-first and compare with the engine's
// leftmost-first result.
TEST_CASE("normal form is strategy independent") {
    Rng rng(107);
    for (AlgebraTag tag : kAllTags) {
        RelationSystem rs = relations_for(tag, spec_for(tag, 3));
        auto rightmost_redex = [&](const Word& w) -> std::optional<std::size_t> {
            for (std::size_t p = w.size(); p-- > 1;)
                if (rs.rule_for(w[p - 1], w[p])) return p - 1;
            return std::nullopt;
        };
        for (int trial = 0; trial < 20; ++trial) {
            Word start = testing::random_word(rng, rs, testing::rand_int(rng, 0, 6));
            NCPoly acc = NCPoly::monomial(tag, 3, start);
            for (;;) {
                const auto* pending = [&]() -> const std::pair<const Word, Scalar>* {
                    for (const auto& t : acc.terms())
                        if (rightmost_redex(t.first)) return &t;
                    return nullptr;
                }();
                if (!pending) break;
                Word w = pending->first;
                Scalar c = pending->second;
                acc.add_term(w, -c);
                acc += rs.rewrite_once(w, *rightmost_redex(w)) * c;
            }
            CHECK(acc == rs.normal_form_word(start));
        }
    }
}

TEST_CASE("shared relation system is safe to use from threads") {
    ParamSpec spec(3, Mode::multiparam);
    RelationSystem shared = relations_for(AlgebraTag::matrix_pq, spec);
    Rng rng(109);
    std::vector<Word> words;
    for (int k = 0; k < 60; ++k)
        words.push_back(testing::random_word(rng, shared, testing::rand_int(rng, 0, 6)));

    std::vector<NCPoly> results(words.size(), NCPoly(AlgebraTag::matrix_pq, 3));
    std::vector<std::thread> threads;
    for (int t = 0; t < 4; ++t)
        threads.emplace_back([&, t]() {
            for (std::size_t k = static_cast<std::size_t>(t); k < words.size(); k += 4)
                results[k] = shared.normal_form_word(words[k]);
        });
    for (auto& th : threads) th.join();

    RelationSystem fresh = relations_for(AlgebraTag::matrix_pq, spec);
    for (std::size_t k = 0; k < words.size(); ++k)
        CHECK(results[k] == fresh.normal_form_word(words[k]));
}

TEST_CASE("normal_form idempotent and linear, mul associative") {
    Rng rng(47);
    for (AlgebraTag tag : {AlgebraTag::matrix_pq, AlgebraTag::matrix_q}) {
        RelationSystem rs = relations_for(tag, spec_for(tag, 3));
        for (int trial = 0; trial < 15; ++trial) {
            NCPoly p(tag, 3);
            p.add_term(testing::random_word(rng, rs, 2), testing::random_scalar(rng, 3));
            p.add_term(testing::random_word(rng, rs, 3), testing::random_scalar(rng, 3));
            NCPoly q(tag, 3);
            q.add_term(testing::random_word(rng, rs, 2), testing::random_scalar(rng, 3));

            CHECK(rs.normal_form(rs.normal_form(p)) == rs.normal_form(p));
            Scalar c = testing::random_scalar(rng, 3);
            CHECK(rs.normal_form(p * c + q) ==
                  rs.normal_form(p) * c + rs.normal_form(q));

            NCPoly a = NCPoly::monomial(tag, 3, testing::random_word(rng, rs, 2));
            NCPoly b = NCPoly::monomial(tag, 3, testing::random_word(rng, rs, 2));
            NCPoly d = NCPoly::monomial(tag, 3, testing::random_word(rng, rs, 2));
            CHECK(rs.mul(rs.mul(a, b), d) == rs.mul(a, rs.mul(b, d)));
        }
    }
}

// Specializing every multiparametric rule coefficient gives exactly the
// one-parameter rule table.
TEST_CASE("one-param consistency of the matrix rules") {
    for (int n = 2; n <= 3; ++n) {
        RelationSystem mp = relations_for(AlgebraTag::matrix_pq,
                                          ParamSpec(n, Mode::multiparam));
        RelationSystem op = relations_for(AlgebraTag::matrix_q,
                                          ParamSpec(n, Mode::one_param));
        REQUIRE(mp.rules().size() == op.rules().size());
        for (const auto& [lhs, rule] : mp.rules()) {
            const RewriteRule* orule = op.rule_for(lhs.first, lhs.second);
            REQUIRE(orule != nullptr);
            REQUIRE(orule->terms.size() == rule.terms.size());
            for (std::size_t k = 0; k < rule.terms.size(); ++k) {
                CHECK(rule.terms[k].first.specialize_one_param() ==
                      orule->terms[k].first);
                CHECK(rule.terms[k].second == orule->terms[k].second);
            }
        }
    }
}

TEST_CASE("rule orientation is validated") {
    ParamSpec mp2(2, Mode::multiparam);
    std::map<GeneratorPair, RewriteRule> bad;
    RewriteRule r;
    r.terms.push_back({Scalar::one(), {Generator{2, 2}, Generator{1, 1}}});
    bad[{Generator{2, 2}, Generator{1, 1}}] = r;
    CHECK_THROWS_AS(RelationSystem(AlgebraTag::matrix_pq, mp2, bad),
                    std::invalid_argument);
}
