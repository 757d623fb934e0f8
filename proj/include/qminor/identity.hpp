// Minor identities: the data model, the .qid text grammar (parser + printer),
// and homogeneity analysis.
//
// Grammar (whitespace-insensitive, '#' starts a comment; '# mode: ...' and
// '# n: ...' comment lines are structured headers):
//
//   identity := header* sum '=' '0'
//   sum      := ['+'|'-'] term (('+'|'-') term)*
//   term     := primary ('*' primary)*          -- at least one primary
//   primary  := factor | scalar_atom
//   factor   := ('D'|'d') '[' labels '|' labels ']'
//   labels   := int (',' int)*
//   scalar_atom := (rational | 'q' | qij | '(' scalar_sum ')') ['^' int]
//
// Factor letters must agree with the mode ('d' one-parameter, 'D'
// multiparametric); in one-parameter mode the q_ij variables are rejected.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qminor/minors.hpp"

namespace qminor {

struct MinorTerm {
    Scalar coeff;
    std::vector<MinorSymbol> factors;  // may be empty (pure scalar term)

    bool operator==(const MinorTerm&) const = default;
};

struct MinorIdentity {
    Mode mode = Mode::one_param;
    int n = 1;
    std::vector<MinorTerm> terms;

    bool operator==(const MinorIdentity&) const = default;
};

Multilabel row_content(const MinorTerm& t);  // sorted concat of factor rows
Multilabel col_content(const MinorTerm& t);

struct HomogeneityWitness {
    bool homogeneous = true;
    // First mismatching pair of terms when not homogeneous.
    std::size_t term_a = 0, term_b = 0;
    bool rows_differ = false;
    Multilabel content_a, content_b;

    std::string str() const;
};

HomogeneityWitness is_homogeneous(const MinorIdentity& id);

struct ParseError {
    std::size_t line = 0, column = 0;  // 1-based
    std::string message;
    std::string expected;

    std::string str() const;
};

struct ParseResult {
    std::optional<MinorIdentity> identity;
    ParseError error;

    bool ok() const { return identity.has_value(); }
};

ParseResult parse_identity(std::string_view src);

// A single product `[scalar*] factor*` (no +/-); used by the expand command.
struct ParsedProduct {
    MinorTerm term;
    Mode mode;
    int n;
};
struct ProductParseResult {
    std::optional<ParsedProduct> product;
    ParseError error;
    bool ok() const { return product.has_value(); }
};
ProductParseResult parse_minor_product(std::string_view src);

// Standalone scalar expression, same syntax as identity coefficients.
struct ScalarParseResult {
    std::optional<Scalar> value;
    ParseError error;
    bool ok() const { return value.has_value(); }
};
ScalarParseResult parse_scalar(std::string_view src);

// Text rendering round-trips through parse_identity.
std::string render(const MinorIdentity& id);

// Stable tree {mode, n, terms: [{coeff, factors: [{rows, cols}]}]}.
nlohmann::json render_structured(const MinorIdentity& id);

}  // namespace qminor
