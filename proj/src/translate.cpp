#include "qminor/translate.hpp"

#include <chrono>
#include <future>
#include <sstream>

#include "qminor/corpus.hpp"

namespace qminor {

namespace {

// Concatenations of a term's factor rows / cols in factor order.
Multilabel rows_concat(const MinorTerm& t) {
    std::vector<Multilabel> parts;
    for (const auto& f : t.factors) parts.push_back(f.rows);
    return concat(parts);
}

Multilabel cols_concat(const MinorTerm& t) {
    std::vector<Multilabel> parts;
    for (const auto& f : t.factors) parts.push_back(f.cols);
    return concat(parts);
}

void require_homogeneous(const MinorIdentity& id, const char* who) {
    HomogeneityWitness w = is_homogeneous(id);
    if (!w.homogeneous)
        throw std::invalid_argument(std::string(who) +
                                    ": identity is not homogeneous: " + w.str());
}

}  // namespace

MinorIdentity translate_to_multiparam(const MinorIdentity& id) {
    if (id.mode != Mode::one_param)
        throw std::invalid_argument("translate_to_multiparam: expected a 1param identity");
    require_homogeneous(id, "translate_to_multiparam");
    ParamSpec spec(id.n, Mode::multiparam);
    MinorIdentity out;
    out.mode = Mode::multiparam;
    out.n = id.n;
    for (const MinorTerm& t : id.terms) {
        MinorTerm nt = t;
        nt.coeff = t.coeff * zeta_r(spec, rows_concat(t)).monomial_inverse() *
                   zeta_l(spec, cols_concat(t)).monomial_inverse();
        out.terms.push_back(std::move(nt));
    }
    return out;
}

MinorIdentity translate_to_one_param(const MinorIdentity& id) {
    if (id.mode != Mode::multiparam)
        throw std::invalid_argument(
            "translate_to_one_param: expected a multiparam identity");
    require_homogeneous(id, "translate_to_one_param");
    ParamSpec spec(id.n, Mode::multiparam);
    MinorIdentity out;
    out.mode = Mode::one_param;
    out.n = id.n;
    for (const MinorTerm& t : id.terms) {
        MinorTerm nt = t;
        nt.coeff = (t.coeff * zeta_r(spec, rows_concat(t)) * zeta_l(spec, cols_concat(t)))
                       .specialize_one_param();
        out.terms.push_back(std::move(nt));
    }
    return out;
}

std::string VerificationReport::str() const {
    std::ostringstream out;
    out << (holds ? "holds" : "FAILS") << " (words expanded: " << terms_expanded
        << ", rewrite steps: " << rewrite_steps << ")";
    if (!holds) out << ", residual: " << residual.str();
    return out.str();
}

VerificationReport verify(const MinorIdentity& id, int ambient_n,
                          const RelationSystem* rules_override) {
    int n = std::max(id.n, ambient_n);
    ParamSpec spec(n, id.mode);

    auto run = [&](const RelationSystem& rs) {
        std::uint64_t steps0 = rs.rewrite_steps();
        VerificationReport rep;
        NCPoly acc(rs.tag(), n);
        for (const MinorTerm& t : id.terms) {
            NCPoly prod = NCPoly::unit(rs.tag(), n);
            for (const MinorSymbol& f : t.factors) {
                NCPoly sum = minor_row_sum(f, spec);
                rep.terms_expanded += sum.terms().size();
                prod = rs.mul(prod, sum);
            }
            acc += prod * t.coeff;
        }
        rep.residual = rs.normal_form(acc);
        rep.holds = rep.residual.is_structurally_zero();
        rep.rewrite_steps = rs.rewrite_steps() - steps0;
        return rep;
    };

    if (rules_override) return run(*rules_override);
    RelationSystem rs = relations_for(matrix_tag_for(id.mode), spec);
    return run(rs);
}

std::size_t CorpusReport::passed() const {
    std::size_t p = 0;
    for (const auto& e : entries)
        if (e.passed()) ++p;
    return p;
}

namespace {

CorpusEntryResult run_entry(const CorpusEntry& entry) {
    CorpusEntryResult res;
    res.name = entry.name;
    ParseResult parsed = parse_identity(entry.text);
    if (!parsed.ok()) {
        res.detail = parsed.error.str();
        return res;
    }
    res.parsed = true;
    const MinorIdentity& id = *parsed.identity;

    VerificationReport vp = verify(id);
    res.rewrite_steps += vp.rewrite_steps;
    if (!vp.holds) {
        res.detail = "1param verification failed: " + vp.str();
        return res;
    }
    res.verified_one_param = true;

    MinorIdentity mp = translate_to_multiparam(id);
    VerificationReport vm = verify(mp);
    res.rewrite_steps += vm.rewrite_steps;
    if (!vm.holds) {
        res.detail = "multiparam verification failed: " + vm.str();
        return res;
    }
    res.verified_multiparam = true;

    MinorIdentity back = translate_to_one_param(mp);
    if (back == id) {
        res.round_trip = true;
    } else {
        res.detail = "round trip mismatch: got " + render(back);
    }
    return res;
}

}  // namespace

CorpusReport run_corpus(int jobs) {
    const std::vector<CorpusEntry>& entries = builtin_corpus();
    CorpusReport report;
    report.entries.resize(entries.size());
    auto t0 = std::chrono::steady_clock::now();

    if (jobs <= 1) {
        for (std::size_t k = 0; k < entries.size(); ++k)
            report.entries[k] = run_entry(entries[k]);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            while (true) {
                std::size_t k = next.fetch_add(1);
                if (k >= entries.size()) return;
                report.entries[k] = run_entry(entries[k]);
            }
        };
        std::vector<std::future<void>> pool;
        for (int j = 0; j < jobs; ++j)
            pool.push_back(std::async(std::launch::async, worker));
        for (auto& f : pool) f.get();
    }

    auto t1 = std::chrono::steady_clock::now();
    report.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
    for (const auto& e : report.entries) report.total_rewrite_steps += e.rewrite_steps;
    return report;
}

}  // namespace qminor
