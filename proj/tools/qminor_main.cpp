// qminor command-line tool: expand quantum minor products, verify and
// translate .qid identity files, run the embedded corpus pipeline, and run
// the self-check suite.
//
// Exit codes: 0 success / all pass, 1 identity or check failure, 2 parse
// error, 3 validation error.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qminor/corpus.hpp"
#include "qminor/tensor.hpp"
#include "qminor/translate.hpp"

using nlohmann::json;
using namespace qminor;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kSchemaVersion = 1;

json poly_to_json(const NCPoly& p) {
    json terms = json::array();
    for (const auto& [w, c] : p.terms()) {
        json word = json::array();
        for (const Generator& g : w) word.push_back(generator_str(p.tag(), g));
        terms.push_back({{"coeff", c.str()}, {"word", word}});
    }
    return terms;
}

json report_to_json(const CheckReport& rep) {
    json failures = json::array();
    for (const auto& it : rep.items)
        if (!it.ok) failures.push_back({{"instance", it.instance},
                                        {"residual", it.residual}});
    return {{"name", rep.name},
            {"instances", rep.items.size()},
            {"failures", failures},
            {"passed", rep.all_passed()}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

MinorIdentity parse_or_exit(const std::string& path) {
    ParseResult pr = parse_identity(read_file(path));
    if (!pr.ok()) {
        std::cerr << path << ": " << pr.error.str() << "\n";
        std::exit(kExitParse);
    }
    return *pr.identity;
}

int cmd_expand(const std::string& expr, int n_flag, const std::string& mode_flag,
               const std::string& format) {
    ProductParseResult pr = parse_minor_product(expr);
    if (!pr.ok()) {
        std::cerr << pr.error.str() << "\n";
        return kExitParse;
    }
    ParsedProduct prod = *pr.product;
    if (!mode_flag.empty()) {
        Mode want = mode_flag == "multiparam" ? Mode::multiparam : Mode::one_param;
        if (want != prod.mode) {
            std::cerr << "expression uses " << to_string(prod.mode)
                      << " minors but --mode " << mode_flag << " was given\n";
            return kExitValidation;
        }
    }
    int n = std::max(prod.n, n_flag);
    if (n_flag > 0 && n_flag < prod.n) {
        std::cerr << "--n " << n_flag << " is smaller than the largest label "
                  << prod.n << "\n";
        return kExitValidation;
    }
    ParamSpec spec(n, prod.mode);
    NCPoly poly = expand_product(prod.term.factors, spec) * prod.term.coeff;
    if (format == "structured") {
        json doc = {{"schema_version", kSchemaVersion},
                    {"command", "expand"},
                    {"mode", to_string(prod.mode)},
                    {"n", n},
                    {"normal_form", poly_to_json(poly)}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << poly.str() << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& path, int n_flag, const std::string& format) {
    MinorIdentity id = parse_or_exit(path);
    VerificationReport rep = verify(id, n_flag);
    if (format == "structured") {
        json doc = {{"schema_version", kSchemaVersion},
                    {"command", "verify"},
                    {"holds", rep.holds},
                    {"terms_expanded", rep.terms_expanded},
                    {"rewrite_steps", rep.rewrite_steps},
                    {"residual", poly_to_json(rep.residual)}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << path << ": " << rep.str() << "\n";
    }
    return rep.holds ? 0 : kExitFailure;
}

int cmd_translate(const std::string& path, const std::string& out_path,
                  const std::string& format) {
    MinorIdentity id = parse_or_exit(path);
    MinorIdentity result = id.mode == Mode::one_param ? translate_to_multiparam(id)
                                                      : translate_to_one_param(id);
    std::string text = render(result);
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << text;
    }
    if (format == "structured") {
        json doc = {{"schema_version", kSchemaVersion},
                    {"command", "translate"},
                    {"identity", render_structured(result)}};
        std::cout << doc.dump(2) << "\n";
    } else if (out_path.empty()) {
        std::cout << text;
    }
    return 0;
}

int cmd_corpus(int jobs, const std::string& format) {
    CorpusReport rep = run_corpus(jobs);
    if (format == "structured") {
        json entries = json::array();
        for (const auto& e : rep.entries)
            entries.push_back({{"name", e.name},
                               {"passed", e.passed()},
                               {"verified_1param", e.verified_one_param},
                               {"verified_multiparam", e.verified_multiparam},
                               {"round_trip", e.round_trip},
                               {"rewrite_steps", e.rewrite_steps},
                               {"detail", e.detail}});
        json doc = {{"schema_version", kSchemaVersion},
                    {"command", "corpus"},
                    {"entries", entries},
                    {"passed", rep.passed()},
                    {"failed", rep.failed()},
                    {"total_rewrite_steps", rep.total_rewrite_steps},
                    {"wall_seconds", rep.wall_seconds}};
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& e : rep.entries) {
            std::cout << (e.passed() ? "PASS " : "FAIL ") << e.name;
            if (!e.passed()) std::cout << "  (" << e.detail << ")";
            std::cout << "\n";
        }
        std::cout << "entries: " << rep.entries.size() << ", passed: " << rep.passed()
                  << ", failed: " << rep.failed()
                  << ", total rewrite steps: " << rep.total_rewrite_steps
                  << ", wall time: " << rep.wall_seconds << "s\n";
    }
    return rep.all_passed() ? 0 : kExitFailure;
}

int cmd_selfcheck(int n, const std::string& format) {
    if (n < 2) n = 2;
    std::vector<CheckReport> reports;

    for (int m = 2; m <= n; ++m)
        reports.push_back(check_iota_homomorphism(ParamSpec(m, Mode::multiparam)));

    reports.push_back(check_injectivity(ParamSpec(2, Mode::multiparam), 3));
    if (n >= 3) reports.push_back(check_injectivity(ParamSpec(3, Mode::multiparam), 2));

    for (int m = 2; m <= std::min(n, 3); ++m) {
        std::vector<int> sizes;
        for (int s = 1; s <= m; ++s) sizes.push_back(s);
        reports.push_back(check_proposition(ParamSpec(m, Mode::multiparam), sizes));
    }
    if (n >= 4) reports.push_back(check_proposition(ParamSpec(4, Mode::multiparam), {2, 3}));

    for (int m = 2; m <= n; ++m)
        reports.push_back(check_exterior_rescaling(ParamSpec(m, Mode::multiparam)));

    for (int m = 2; m <= std::min(n, 3); ++m) {
        ParamSpec spec(m, Mode::multiparam);
        for (AlgebraTag tag :
             {AlgebraTag::matrix_pq, AlgebraTag::matrix_q, AlgebraTag::s_left,
              AlgebraTag::s_right, AlgebraTag::ext_p, AlgebraTag::ext_q,
              AlgebraTag::plane_q, AlgebraTag::plane_p}) {
            ParamSpec use = tag == AlgebraTag::matrix_q ? ParamSpec(m, Mode::one_param)
                                                        : spec;
            RelationSystem rs = relations_for(tag, use);
            reports.push_back(check_local_confluence(rs));
        }
    }

    bool all = true;
    if (format == "structured") {
        json checks = json::array();
        for (const auto& r : reports) {
            checks.push_back(report_to_json(r));
            all = all && r.all_passed();
        }
        json doc = {{"schema_version", kSchemaVersion},
                    {"command", "selfcheck"},
                    {"n", n},
                    {"checks", checks},
                    {"all_passed", all}};
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            bool ok = r.all_passed();
            all = all && ok;
            std::cout << (ok ? "PASS " : "FAIL ") << r.summary() << "\n";
            if (!ok)
                for (const auto& it : r.items)
                    if (!it.ok)
                        std::cout << "   " << it.instance << ": " << it.residual << "\n";
        }
        std::cout << (all ? "all checks passed" : "SELF-CHECK FAILED") << "\n";
    }
    return all ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic engine for quantum minor identities"};
    app.require_subcommand(1);

    std::string expr, path, out_path;
    std::string format = "text", mode_flag;
    int n_flag = 0, jobs = 1, selfcheck_n = 3;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "structured"}));
    };

    CLI::App* expand = app.add_subcommand("expand", "expand a minor product to PBW normal form");
    expand->add_option("expr", expr, "minor product, e.g. \"D[1,2|1,2]\"")->required();
    expand->add_option("--n", n_flag, "ambient matrix size (may enlarge the inferred one)");
    expand->add_option("--mode", mode_flag, "expected mode")
        ->check(CLI::IsMember({"1param", "multiparam"}));
    add_format(expand);

    CLI::App* verify_cmd = app.add_subcommand("verify", "verify a .qid identity file");
    verify_cmd->add_option("path", path, "identity file")->required();
    verify_cmd->add_option("--n", n_flag, "ambient matrix size");
    add_format(verify_cmd);

    CLI::App* translate_cmd =
        app.add_subcommand("translate", "translate a .qid identity (1param <-> multiparam)");
    translate_cmd->add_option("path", path, "identity file")->required();
    translate_cmd->add_option("-o,--output", out_path, "output .qid path");
    add_format(translate_cmd);

    CLI::App* corpus_cmd =
        app.add_subcommand("corpus", "run the embedded corpus through the full pipeline");
    corpus_cmd->add_option("--jobs", jobs, "parallel workers")->check(CLI::PositiveNumber);
    add_format(corpus_cmd);

    CLI::App* selfcheck_cmd = app.add_subcommand("selfcheck", "run the machine checks");
    selfcheck_cmd->add_option("--n", selfcheck_n, "largest matrix size to check")
        ->check(CLI::Range(2, 4));
    add_format(selfcheck_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (expand->parsed()) return cmd_expand(expr, n_flag, mode_flag, format);
        if (verify_cmd->parsed()) return cmd_verify(path, n_flag, format);
        if (translate_cmd->parsed()) return cmd_translate(path, out_path, format);
        if (corpus_cmd->parsed()) return cmd_corpus(jobs, format);
        if (selfcheck_cmd->parsed()) return cmd_selfcheck(selfcheck_n, format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return 0;
}
