#include "qminor/identity.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qminor {

Multilabel row_content(const MinorTerm& t) {
    std::vector<Multilabel> parts;
    for (const auto& f : t.factors) parts.push_back(f.rows);
    return sorted_concat(parts);
}

Multilabel col_content(const MinorTerm& t) {
    std::vector<Multilabel> parts;
    for (const auto& f : t.factors) parts.push_back(f.cols);
    return sorted_concat(parts);
}

std::string HomogeneityWitness::str() const {
    if (homogeneous) return "homogeneous";
    std::ostringstream out;
    out << "terms " << term_a + 1 << " and " << term_b + 1 << " have different "
        << (rows_differ ? "row" : "column") << " content: (" << to_string(content_a)
        << ") vs (" << to_string(content_b) << ")";
    return out.str();
}

HomogeneityWitness is_homogeneous(const MinorIdentity& id) {
    HomogeneityWitness w;
    if (id.terms.empty()) return w;
    Multilabel rows0 = row_content(id.terms[0]);
    Multilabel cols0 = col_content(id.terms[0]);
    for (std::size_t t = 1; t < id.terms.size(); ++t) {
        Multilabel rows = row_content(id.terms[t]);
        if (rows != rows0) {
            w.homogeneous = false;
            w.term_a = 0;
            w.term_b = t;
            w.rows_differ = true;
            w.content_a = rows0;
            w.content_b = rows;
            return w;
        }
        Multilabel cols = col_content(id.terms[t]);
        if (cols != cols0) {
            w.homogeneous = false;
            w.term_a = 0;
            w.term_b = t;
            w.rows_differ = false;
            w.content_a = cols0;
            w.content_b = cols;
            return w;
        }
    }
    return w;
}

std::string ParseError::str() const {
    std::ostringstream out;
    out << "parse error at " << line << ":" << column << ": " << message;
    if (!expected.empty()) out << " (expected " << expected << ")";
    return out.str();
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok {
    integer,
    name,     // bare identifier: q, q12, d, D, ...
    qij_var,  // q_{i,j} bracket form (i, j in aux_i/aux_j)
    sym,      // single-char symbol in ch
    end,
};

struct Token {
    Tok kind;
    std::string text;
    char ch = 0;
    long value = 0;   // integer tokens
    int aux_i = 0, aux_j = 0;
    std::size_t line = 1, column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    // Structured headers: '# mode: ...' and '# n: ...'.
    struct Headers {
        std::optional<Mode> mode;
        std::optional<int> n;
        std::optional<ParseError> error;
    };

    Headers scan_headers() {
        Headers h;
        std::size_t pos = 0, line = 1;
        while (pos < src_.size()) {
            std::size_t eol = src_.find('\n', pos);
            std::string_view lv = src_.substr(pos, eol == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : eol - pos);
            std::size_t first = lv.find_first_not_of(" \t\r");
            if (first != std::string_view::npos && lv[first] == '#') {
                std::string body(lv.substr(first + 1));
                auto colon = body.find(':');
                if (colon != std::string::npos) {
                    auto trim = [](std::string s) {
                        auto b = s.find_first_not_of(" \t\r");
                        auto e = s.find_last_not_of(" \t\r");
                        return b == std::string::npos ? std::string()
                                                      : s.substr(b, e - b + 1);
                    };
                    std::string key = trim(body.substr(0, colon));
                    std::string val = trim(body.substr(colon + 1));
                    if (key == "mode") {
                        if (val == "1param")
                            h.mode = Mode::one_param;
                        else if (val == "multiparam")
                            h.mode = Mode::multiparam;
                        else {
                            h.error = ParseError{line, first + 1,
                                                 "unknown mode '" + val + "'",
                                                 "1param or multiparam"};
                            return h;
                        }
                    } else if (key == "n") {
                        try {
                            h.n = std::stoi(val);
                        } catch (...) {
                            h.error = ParseError{line, first + 1,
                                                 "bad n header '" + val + "'",
                                                 "an integer"};
                            return h;
                        }
                        if (*h.n < 1) {
                            h.error = ParseError{line, first + 1,
                                                 "n must be >= 1, got " + val, ""};
                            return h;
                        }
                    }
                    // other '# key: value' comments are ignored
                }
            }
            if (eol == std::string_view::npos) break;
            pos = eol + 1;
            ++line;
        }
        return h;
    }

    std::vector<Token> tokenize(ParseError& err, bool& failed) {
        std::vector<Token> out;
        failed = false;
        while (true) {
            skip_space_and_comments();
            Token t;
            t.line = line_;
            t.column = col_;
            if (pos_ >= src_.size()) {
                t.kind = Tok::end;
                out.push_back(t);
                return out;
            }
            char c = src_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t start = pos_;
                while (pos_ < src_.size() &&
                       std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    advance();
                t.kind = Tok::integer;
                t.text = std::string(src_.substr(start, pos_ - start));
                try {
                    t.value = std::stol(t.text);
                } catch (...) {
                    err = ParseError{t.line, t.column,
                                     "integer literal '" + t.text + "' is too large",
                                     ""};
                    failed = true;
                    return out;
                }
                out.push_back(t);
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                if (c == 'q' && src_.substr(pos_).rfind("q_{", 0) == 0) {
                    if (!lex_qij_bracket(t, err)) {
                        failed = true;
                        return out;
                    }
                    out.push_back(t);
                    continue;
                }
                std::size_t start = pos_;
                while (pos_ < src_.size() &&
                       std::isalnum(static_cast<unsigned char>(src_[pos_])))
                    advance();
                t.kind = Tok::name;
                t.text = std::string(src_.substr(start, pos_ - start));
                out.push_back(t);
            } else if (std::string("+-*^/()[]|,={}").find(c) != std::string::npos) {
                t.kind = Tok::sym;
                t.ch = c;
                t.text = std::string(1, c);
                advance();
                out.push_back(t);
            } else {
                err = ParseError{t.line, t.column,
                                 "unexpected character '" + std::string(1, c) + "'",
                                 ""};
                failed = true;
                return out;
            }
        }
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0, line_ = 1, col_ = 1;

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space_and_comments() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                return;
            }
        }
    }

    bool lex_qij_bracket(Token& t, ParseError& err) {
        // q_{INT,INT}
        std::size_t start_line = line_, start_col = col_;
        advance();  // q
        advance();  // _
        advance();  // {
        auto read_int = [&](int& out) {
            std::size_t s = pos_;
            while (pos_ < src_.size() &&
                   std::isdigit(static_cast<unsigned char>(src_[pos_])))
                advance();
            if (s == pos_ || pos_ - s > 6) return false;
            out = std::stoi(std::string(src_.substr(s, pos_ - s)));
            return true;
        };
        int i = 0, j = 0;
        bool ok = read_int(i) && pos_ < src_.size() && src_[pos_] == ',';
        if (ok) {
            advance();
            ok = read_int(j) && pos_ < src_.size() && src_[pos_] == '}';
        }
        if (!ok) {
            err = ParseError{start_line, start_col, "malformed q_{i,j} variable",
                             "q_{i,j}"};
            return false;
        }
        advance();  // }
        t.kind = Tok::qij_var;
        t.aux_i = i;
        t.aux_j = j;
        t.text = "q_{" + std::to_string(i) + "," + std::to_string(j) + "}";
        t.line = start_line;
        t.column = start_col;
        return true;
    }
};

// ---------------------------------------------------------------------------
// Parser

struct ParseFail {
    ParseError err;
};

class Parser {
public:
    Parser(std::vector<Token> toks, std::optional<Mode> header_mode,
           std::optional<int> header_n)
        : toks_(std::move(toks)), mode_(header_mode), header_n_(header_n) {}

    MinorIdentity parse_identity_body() {
        MinorIdentity id;
        std::vector<MinorTerm> terms = parse_sum();
        expect_sym('=', "'='");
        const Token& z = peek();
        if (!(z.kind == Tok::integer && z.value == 0))
            fail(z, "right side must be the literal 0", "'0'");
        ++at_;
        expect_end();

        id.mode = mode_.value_or(Mode::one_param);
        // The mode may have been inferred from a factor letter seen after a
        // q_ij coefficient was already read.
        if (id.mode == Mode::one_param && first_qij_)
            fail(*first_qij_,
                 "variable " + first_qij_->text + " is not available in 1param mode",
                 "");
        int max_label = 1;
        for (const auto& t : terms)
            for (const auto& f : t.factors)
                max_label = std::max(max_label, f.max_label());
        id.n = header_n_.value_or(max_label);
        if (id.n < max_label)
            fail(toks_.front(),
                 "header n=" + std::to_string(id.n) + " is smaller than the largest label " +
                     std::to_string(max_label),
                 "");
        id.terms = std::move(terms);
        return id;
    }

    ParsedProduct parse_product_body() {
        bool negate = false;
        if (at_sym('+') || at_sym('-')) {
            negate = peek().ch == '-';
            ++at_;
        }
        MinorTerm term = parse_term();
        if (negate) term.coeff = -term.coeff;
        expect_end();
        ParsedProduct p;
        p.term = std::move(term);
        p.mode = mode_.value_or(Mode::one_param);
        if (p.mode == Mode::one_param && first_qij_)
            fail(*first_qij_,
                 "variable " + first_qij_->text + " is not available in 1param mode",
                 "");
        int max_label = 1;
        for (const auto& f : p.term.factors) max_label = std::max(max_label, f.max_label());
        p.n = header_n_.value_or(max_label);
        return p;
    }

    Scalar parse_scalar_body() {
        Scalar s = parse_scalar_sum();
        expect_end();
        return s;
    }

private:
    std::vector<Token> toks_;
    std::size_t at_ = 0;
    std::optional<Mode> mode_;
    std::optional<int> header_n_;
    std::optional<Token> first_qij_;

    const Token& peek(std::size_t ahead = 0) const {
        return toks_[std::min(at_ + ahead, toks_.size() - 1)];
    }

    [[noreturn]] void fail(const Token& t, std::string msg, std::string expected) const {
        throw ParseFail{ParseError{t.line, t.column, std::move(msg), std::move(expected)}};
    }

    bool at_sym(char c) const { return peek().kind == Tok::sym && peek().ch == c; }

    void expect_sym(char c, const char* what) {
        if (!at_sym(c)) fail(peek(), "unexpected " + describe(peek()), what);
        ++at_;
    }

    void expect_end() {
        if (peek().kind != Tok::end)
            fail(peek(), "unexpected " + describe(peek()), "end of input");
    }

    static std::string describe(const Token& t) {
        switch (t.kind) {
            case Tok::end: return "end of input";
            case Tok::integer: return "number '" + t.text + "'";
            default: return "'" + t.text + "'";
        }
    }

    std::vector<MinorTerm> parse_sum() {
        std::vector<MinorTerm> terms;
        bool negate = false;
        if (at_sym('+') || at_sym('-')) {
            negate = peek().ch == '-';
            ++at_;
        }
        while (true) {
            MinorTerm term = parse_term();
            if (negate) term.coeff = -term.coeff;
            terms.push_back(std::move(term));
            if (at_sym('+') || at_sym('-')) {
                negate = peek().ch == '-';
                ++at_;
                continue;
            }
            return terms;
        }
    }

    // One product of scalar atoms and minor factors, in source order; the
    // central scalars are folded into the coefficient.
    MinorTerm parse_term() {
        MinorTerm term;
        term.coeff = Scalar::one();
        bool any = false;
        while (true) {
            const Token& t = peek();
            if (t.kind == Tok::name && (t.text == "d" || t.text == "D") &&
                peek(1).kind == Tok::sym && peek(1).ch == '[') {
                term.factors.push_back(parse_factor());
                any = true;
            } else if (is_scalar_atom_start(t)) {
                term.coeff *= parse_scalar_atom();
                any = true;
            } else {
                if (!any)
                    fail(t, "unexpected " + describe(t),
                         "a scalar or a minor factor");
                break;
            }
            if (at_sym('*')) {
                ++at_;
                continue;
            }
            break;
        }
        return term;
    }

    MinorSymbol parse_factor() {
        const Token& head = peek();
        Mode letter_mode = head.text == "D" ? Mode::multiparam : Mode::one_param;
        if (mode_ && *mode_ != letter_mode)
            fail(head,
                 "factor letter '" + head.text + "' conflicts with mode " +
                     to_string(*mode_),
                 std::string("'") + (*mode_ == Mode::multiparam ? "D" : "d") + "'");
        if (!mode_) mode_ = letter_mode;
        ++at_;
        expect_sym('[', "'['");
        Multilabel rows = parse_labels();
        expect_sym('|', "'|'");
        Multilabel cols = parse_labels();
        if (!at_sym(']'))
            fail(peek(), "unexpected " + describe(peek()), "']'");
        ++at_;
        try {
            return MinorSymbol(std::move(rows), std::move(cols));
        } catch (const std::invalid_argument& e) {
            fail(head, e.what(), "");
        }
    }

    Multilabel parse_labels() {
        Multilabel out;
        while (true) {
            const Token& t = peek();
            if (t.kind != Tok::integer)
                fail(t, "unexpected " + describe(t), "a label");
            if (t.value < 1 || t.value > 1000)
                fail(t, "label out of supported range 1..1000, got " + t.text, "");
            out.push_back(static_cast<int>(t.value));
            ++at_;
            if (at_sym(',')) {
                ++at_;
                continue;
            }
            return out;
        }
    }

    static bool is_scalar_atom_start(const Token& t) {
        if (t.kind == Tok::integer || t.kind == Tok::qij_var) return true;
        if (t.kind == Tok::sym && t.ch == '(') return true;
        if (t.kind == Tok::name) return t.text != "d" && t.text != "D";
        return false;
    }

    Scalar parse_scalar_sum() {
        Scalar acc = Scalar::zero();
        bool negate = false;
        if (at_sym('+') || at_sym('-')) {
            negate = peek().ch == '-';
            ++at_;
        }
        while (true) {
            Scalar term = parse_scalar_product();
            acc += negate ? -term : term;
            if (at_sym('+') || at_sym('-')) {
                negate = peek().ch == '-';
                ++at_;
                continue;
            }
            return acc;
        }
    }

    Scalar parse_scalar_product() {
        Scalar acc = parse_scalar_atom();
        while (at_sym('*')) {
            ++at_;
            acc *= parse_scalar_atom();
        }
        return acc;
    }

    Scalar parse_scalar_atom() {
        const Token& t = peek();
        Scalar base;
        if (t.kind == Tok::integer) {
            ++at_;
            Rational r(t.value);
            if (at_sym('/')) {
                ++at_;
                const Token& den = peek();
                if (den.kind != Tok::integer || den.value == 0)
                    fail(den, "unexpected " + describe(den), "a nonzero denominator");
                ++at_;
                r /= Rational(den.value);
            }
            base = Scalar::of(r);
        } else if (t.kind == Tok::qij_var) {
            base = make_qij(t);
            ++at_;
        } else if (t.kind == Tok::name) {
            base = parse_variable(t);
            ++at_;
        } else if (t.kind == Tok::sym && t.ch == '(') {
            ++at_;
            base = parse_scalar_sum();
            expect_sym(')', "')'");
        } else {
            fail(t, "unexpected " + describe(t), "a scalar");
        }
        if (at_sym('^')) {
            ++at_;
            int e = parse_exponent();
            try {
                base = pow(base, e);
            } catch (const std::domain_error& e2) {
                fail(t, e2.what(), "");
            }
        }
        return base;
    }

    int parse_exponent() {
        bool neg = false, parens = false;
        if (at_sym('(')) {
            parens = true;
            ++at_;
        }
        if (at_sym('-') || at_sym('+')) {
            neg = peek().ch == '-';
            ++at_;
        }
        const Token& t = peek();
        if (t.kind != Tok::integer)
            fail(t, "unexpected " + describe(t), "an integer exponent");
        if (t.value > 10000)
            fail(t, "exponent " + t.text + " out of supported range", "");
        ++at_;
        if (parens) expect_sym(')', "')'");
        long v = neg ? -t.value : t.value;
        return static_cast<int>(v);
    }

    Scalar parse_variable(const Token& t) {
        if (t.text == "q") return Scalar::q();
        if (t.text.size() == 3 && t.text[0] == 'q' &&
            std::isdigit(static_cast<unsigned char>(t.text[1])) &&
            std::isdigit(static_cast<unsigned char>(t.text[2]))) {
            Token u = t;
            u.aux_i = t.text[1] - '0';
            u.aux_j = t.text[2] - '0';
            return make_qij(u);
        }
        fail(t, "unknown variable '" + t.text + "'", "q or q{i}{j}");
    }

    Scalar make_qij(const Token& t) {
        if (!(1 <= t.aux_i && t.aux_i < t.aux_j))
            fail(t, "q_ij requires 1 <= i < j, got " + t.text, "");
        if (mode_ && *mode_ == Mode::one_param)
            fail(t, "variable " + t.text + " is not available in 1param mode", "");
        if (!first_qij_) first_qij_ = t;
        return Scalar::qij(t.aux_i, t.aux_j);
    }
};

template <class Body>
auto run_parser(std::string_view src, Body body)
    -> std::pair<std::optional<decltype(body(std::declval<Parser&>()))>, ParseError> {
    Lexer lex(src);
    auto headers = lex.scan_headers();
    if (headers.error) return {std::nullopt, *headers.error};
    ParseError lex_err;
    bool lex_failed = false;
    std::vector<Token> toks = Lexer(src).tokenize(lex_err, lex_failed);
    if (lex_failed) return {std::nullopt, lex_err};
    Parser p(std::move(toks), headers.mode, headers.n);
    try {
        return {body(p), ParseError{}};
    } catch (const ParseFail& f) {
        return {std::nullopt, f.err};
    }
}

}  // namespace

ParseResult parse_identity(std::string_view src) {
    auto [val, err] =
        run_parser(src, [](Parser& p) { return p.parse_identity_body(); });
    ParseResult r;
    if (val)
        r.identity = std::move(*val);
    else
        r.error = err;
    return r;
}

ProductParseResult parse_minor_product(std::string_view src) {
    auto [val, err] =
        run_parser(src, [](Parser& p) { return p.parse_product_body(); });
    ProductParseResult r;
    if (val)
        r.product = std::move(*val);
    else
        r.error = err;
    return r;
}

ScalarParseResult parse_scalar(std::string_view src) {
    auto [val, err] =
        run_parser(src, [](Parser& p) { return p.parse_scalar_body(); });
    ScalarParseResult r;
    if (val)
        r.value = std::move(*val);
    else
        r.error = err;
    return r;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

// Renders one term as (sign, body) so the caller can pick the separator.
std::pair<bool, std::string> term_body(const MinorTerm& t, Mode mode) {
    bool negative = false;
    std::string coeff_text;
    const Scalar& c = t.coeff;
    if (c.is_monomial()) {
        const auto& [mono, rat] = *c.terms().begin();
        negative = rat < 0;
        Scalar mag = Scalar::term(mono, abs(rat));
        if (!mag.is_one() || t.factors.empty()) coeff_text = mag.str();
    } else {
        coeff_text = "(" + c.str() + ")";
    }
    std::string body = coeff_text;
    for (const auto& f : t.factors) {
        if (!body.empty()) body += "*";
        body += f.str(mode);
    }
    if (body.empty()) body = "1";
    return {negative, body};
}

}  // namespace

std::string render(const MinorIdentity& id) {
    std::ostringstream out;
    out << "# mode: " << to_string(id.mode) << "\n";
    out << "# n: " << id.n << "\n";
    bool first = true;
    for (const auto& t : id.terms) {
        auto [negative, body] = term_body(t, id.mode);
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        out << body;
    }
    out << " = 0\n";
    return out.str();
}

nlohmann::json render_structured(const MinorIdentity& id) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : id.terms) {
        nlohmann::json factors = nlohmann::json::array();
        for (const auto& f : t.factors)
            factors.push_back({{"rows", f.rows}, {"cols", f.cols}});
        terms.push_back({{"coeff", t.coeff.str()}, {"factors", factors}});
    }
    return {{"mode", to_string(id.mode)}, {"n", id.n}, {"terms", terms}};
}

}  // namespace qminor
