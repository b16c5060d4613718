#ifndef NUMERO_DSL_HPP
#define NUMERO_DSL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "numero/errors.hpp"
#include "numero/event.hpp"

namespace numero {

struct SourcePos {
    std::size_t line = 1;
    std::size_t col = 1;
};

// Syntax or parse-time semantic error; what() is prefixed "line:col: ".
class ParseError : public Error {
public:
    ParseError(SourcePos pos, const std::string& message);
    SourcePos pos() const { return pos_; }

private:
    SourcePos pos_;
};

// Abstract syntax of the event language.
//
// Grammar (ASCII canonical; the Unicode operators are accepted on input):
//   expr   := term (("|" | "∪") term)*
//   term   := diff (("&" | "∩") diff)*
//   diff   := factor ("\" factor)?
//   factor := "~" factor | "(" expr ")" | literal
// Interval literals: "[" RAT "," RAT ")" | "{" RAT ("," RAT)* "}"
//   with RAT := integer ("/" positive-integer)?
// Coin literals: "C(" IDX ":" ("H"|"T") ("," IDX ":" ("H"|"T"))* ")"
//   | "{" POINT ("," POINT)* "}" | "Omega" | "Empty"
//   with POINT := word over {H,T} "(" ("H"|"T") ")" (prefix, constant tail)
// Finite-model literals: "{" LABEL ("," LABEL)* "}" | "Omega" | "Empty"
struct EventAst {
    enum class Kind {
        omega,
        empty,
        interval_lit,    // [lo, hi)
        rational_points, // {r, ...}
        cylinder,        // C(i:s, ...)
        coin_points,     // {HT(T), ...}
        label_points,    // {a, b}
        union_,
        intersect,
        difference,
        complement
    };

    Kind kind;
    Rational lo, hi;                                // interval_lit
    std::vector<Rational> rationals;                // rational_points
    std::vector<std::pair<std::uint32_t, char>> fixes; // cylinder
    std::vector<CoinPoint> points;                  // coin_points
    std::vector<std::string> labels;                // label_points
    std::vector<EventAst> children;                 // operator nodes
};

// Parses one expression for the given ground model. Throws ParseError with
// position and expected-token information on syntax errors, and for the
// parse-time semantic checks: interval with a >= b, cylinder index < 1 or
// repeated, and Omega or complement in the interval model.
EventAst parse_event(std::string_view src, Model model);

// Folds an AST into a canonical Event via the events module. The finite
// model needs its space; other models ignore it.
Event elaborate(const EventAst& ast, Model model, const FiniteSpacePtr& space = nullptr);

// parse + elaborate.
Event parse_to_event(std::string_view src, Model model, const FiniteSpacePtr& space = nullptr);

// Canonical textual form; parse_to_event(render(e)) == e.
std::string render(const Event& e);

} // namespace numero

#endif
