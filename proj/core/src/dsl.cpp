#include "numero/dsl.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

namespace numero {

ParseError::ParseError(SourcePos pos, const std::string& message)
    : Error(std::to_string(pos.line) + ":" + std::to_string(pos.col) + ": " + message),
      pos_(pos) {}

namespace {

enum class Tok {
    end,
    pipe,
    amp,
    backslash,
    tilde,
    lparen,
    rparen,
    lbracket,
    rbracket,
    lbrace,
    rbrace,
    comma,
    colon,
    slash,
    integer,
    word
};

struct Token {
    Tok kind;
    std::string text;
    SourcePos pos;
};

std::string describe(const Token& t) {
    switch (t.kind) {
        case Tok::end: return "end of input";
        case Tok::pipe: return "'|'";
        case Tok::amp: return "'&'";
        case Tok::backslash: return "'\\'";
        case Tok::tilde: return "'~'";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::lbracket: return "'['";
        case Tok::rbracket: return "']'";
        case Tok::lbrace: return "'{'";
        case Tok::rbrace: return "'}'";
        case Tok::comma: return "','";
        case Tok::colon: return "':'";
        case Tok::slash: return "'/'";
        case Tok::integer: return "integer '" + t.text + "'";
        case Tok::word: return "word '" + t.text + "'";
    }
    return "?";
}

bool is_word_start(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool is_word_char(char c) { return is_word_start(c) || (c >= '0' && c <= '9'); }

bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_ws();
            Token t = scan();
            bool done = t.kind == Tok::end;
            out.push_back(std::move(t));
            if (done) return out;
        }
    }

private:
    char peek(std::size_t ahead = 0) const {
        return i_ + ahead < src_.size() ? src_[i_ + ahead] : '\0';
    }

    void bump(std::size_t bytes = 1, std::size_t cols = 1) {
        i_ += bytes;
        col_ += cols;
    }

    void skip_ws() {
        while (i_ < src_.size()) {
            char c = src_[i_];
            if (c == '\n') {
                ++i_;
                ++line_;
                col_ = 1;
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f') {
                bump();
            } else {
                return;
            }
        }
    }

    Token scan() {
        SourcePos pos{line_, col_};
        if (i_ >= src_.size()) return {Tok::end, "", pos};
        char c = src_[i_];
        switch (c) {
            case '|': bump(); return {Tok::pipe, "", pos};
            case '&': bump(); return {Tok::amp, "", pos};
            case '\\': bump(); return {Tok::backslash, "", pos};
            case '~': bump(); return {Tok::tilde, "", pos};
            case '(': bump(); return {Tok::lparen, "", pos};
            case ')': bump(); return {Tok::rparen, "", pos};
            case '[': bump(); return {Tok::lbracket, "", pos};
            case ']': bump(); return {Tok::rbracket, "", pos};
            case '{': bump(); return {Tok::lbrace, "", pos};
            case '}': bump(); return {Tok::rbrace, "", pos};
            case ',': bump(); return {Tok::comma, "", pos};
            case ':': bump(); return {Tok::colon, "", pos};
            case '/': bump(); return {Tok::slash, "", pos};
            default: break;
        }
        // Unicode operator aliases, accepted on input only.
        if (src_.substr(i_).starts_with("∪")) { // ∪
            bump(3);
            return {Tok::pipe, "", pos};
        }
        if (src_.substr(i_).starts_with("∩")) { // ∩
            bump(3);
            return {Tok::amp, "", pos};
        }
        if (src_.substr(i_).starts_with("∖")) { // ∖
            bump(3);
            return {Tok::backslash, "", pos};
        }
        if (is_digit(c) || (c == '-' && is_digit(peek(1)))) {
            std::string text(1, c);
            bump();
            while (is_digit(peek())) {
                text += peek();
                bump();
            }
            return {Tok::integer, std::move(text), pos};
        }
        if (is_word_start(c)) {
            std::string text;
            while (is_word_char(peek())) {
                text += peek();
                bump();
            }
            return {Tok::word, std::move(text), pos};
        }
        throw ParseError(pos, "unexpected character '" + std::string(1, c) + "'");
    }

    std::string_view src_;
    std::size_t i_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

class Parser {
public:
    Parser(std::vector<Token> tokens, Model model)
        : tokens_(std::move(tokens)), model_(model) {}

    EventAst parse() {
        EventAst e = parse_expr(0);
        if (peek().kind != Tok::end) fail(peek(), "'|', '&', or end of input");
        return e;
    }

private:
    static constexpr int kMaxDepth = 256;

    const Token& peek() const { return tokens_[i_]; }

    Token take() {
        Token t = tokens_[i_];
        if (t.kind != Tok::end) ++i_;
        return t;
    }

    bool accept(Tok kind) {
        if (peek().kind != kind) return false;
        take();
        return true;
    }

    Token expect(Tok kind, const std::string& expected) {
        if (peek().kind != kind) fail(peek(), expected);
        return take();
    }

    [[noreturn]] void fail(const Token& t, const std::string& expected) const {
        throw ParseError(t.pos, "unexpected " + describe(t) + "; expected " + expected);
    }

    void check_depth(int depth) const {
        if (depth > kMaxDepth) {
            throw ParseError(peek().pos, "expression nests too deeply");
        }
    }

    static EventAst leaf(EventAst::Kind kind) {
        EventAst node;
        node.kind = kind;
        return node;
    }

    EventAst binary(EventAst::Kind kind, EventAst lhs, EventAst rhs) {
        EventAst node;
        node.kind = kind;
        node.children.push_back(std::move(lhs));
        node.children.push_back(std::move(rhs));
        return node;
    }

    EventAst parse_expr(int depth) {
        EventAst lhs = parse_term(depth);
        while (accept(Tok::pipe)) {
            lhs = binary(EventAst::Kind::union_, std::move(lhs), parse_term(depth));
        }
        return lhs;
    }

    EventAst parse_term(int depth) {
        EventAst lhs = parse_diff(depth);
        while (accept(Tok::amp)) {
            lhs = binary(EventAst::Kind::intersect, std::move(lhs), parse_diff(depth));
        }
        return lhs;
    }

    EventAst parse_diff(int depth) {
        EventAst lhs = parse_factor(depth);
        if (accept(Tok::backslash)) {
            lhs = binary(EventAst::Kind::difference, std::move(lhs), parse_factor(depth));
        }
        return lhs;
    }

    EventAst parse_factor(int depth) {
        check_depth(depth);
        if (peek().kind == Tok::tilde) {
            Token t = take();
            if (model_ == Model::interval) {
                throw ParseError(t.pos, "complement is unsupported in the interval model");
            }
            EventAst node;
            node.kind = EventAst::Kind::complement;
            node.children.push_back(parse_factor(depth + 1));
            return node;
        }
        if (accept(Tok::lparen)) {
            EventAst inner = parse_expr(depth + 1);
            expect(Tok::rparen, "')'");
            return inner;
        }
        return parse_literal(depth);
    }

    EventAst parse_literal(int) {
        switch (model_) {
            case Model::coin: return parse_coin_literal();
            case Model::interval: return parse_interval_literal();
            case Model::finite: return parse_finite_literal();
        }
        fail(peek(), "a literal");
    }

    EventAst parse_coin_literal() {
        const Token& t = peek();
        if (t.kind == Tok::word) {
            if (t.text == "Omega") {
                take();
                return leaf(EventAst::Kind::omega);
            }
            if (t.text == "Empty") {
                take();
                return leaf(EventAst::Kind::empty);
            }
            if (t.text == "C") {
                take();
                return parse_cylinder();
            }
            fail(t, "'C(', '{', 'Omega', or 'Empty'");
        }
        if (t.kind == Tok::lbrace) return parse_coin_points();
        fail(t, "a coin literal ('C(', '{', 'Omega', 'Empty'), '~', or '('");
    }

    EventAst parse_cylinder() {
        expect(Tok::lparen, "'(' after 'C'");
        EventAst node;
        node.kind = EventAst::Kind::cylinder;
        do {
            Token idx = expect(Tok::integer, "an index");
            std::uint32_t index = parse_index(idx);
            expect(Tok::colon, "':'");
            Token sym = expect(Tok::word, "'H' or 'T'");
            if (sym.text != "H" && sym.text != "T") fail(sym, "'H' or 'T'");
            for (const auto& fix : node.fixes) {
                if (fix.first == index) {
                    throw ParseError(idx.pos, "repeated cylinder index " + idx.text);
                }
            }
            node.fixes.emplace_back(index, sym.text[0]);
        } while (accept(Tok::comma));
        expect(Tok::rparen, "')' or ','");
        return node;
    }

    std::uint32_t parse_index(const Token& t) const {
        if (t.text[0] == '-') throw ParseError(t.pos, "cylinder index must be >= 1");
        Integer v(t.text);
        if (v < 1 || v > Integer(std::numeric_limits<std::uint32_t>::max())) {
            throw ParseError(t.pos, "cylinder index out of range");
        }
        return static_cast<std::uint32_t>(v);
    }

    EventAst parse_coin_points() {
        expect(Tok::lbrace, "'{'");
        EventAst node;
        node.kind = EventAst::Kind::coin_points;
        do {
            node.points.push_back(parse_point());
        } while (accept(Tok::comma));
        expect(Tok::rbrace, "'}' or ','");
        return node;
    }

    CoinPoint parse_point() {
        std::string prefix;
        if (peek().kind == Tok::word) {
            Token w = take();
            for (char c : w.text) {
                if (c != 'H' && c != 'T') {
                    throw ParseError(w.pos, "point prefix must use only H and T");
                }
            }
            prefix = w.text;
        }
        expect(Tok::lparen, "'(' introducing the tail symbol");
        Token tail = expect(Tok::word, "'H' or 'T'");
        if (tail.text != "H" && tail.text != "T") fail(tail, "'H' or 'T'");
        expect(Tok::rparen, "')'");
        return CoinPoint(prefix, tail.text[0]);
    }

    EventAst parse_interval_literal() {
        const Token& t = peek();
        if (t.kind == Tok::lbracket) {
            Token open = take();
            EventAst node;
            node.kind = EventAst::Kind::interval_lit;
            node.lo = parse_rat();
            expect(Tok::comma, "','");
            node.hi = parse_rat();
            expect(Tok::rparen, "')'");
            if (!(node.lo < node.hi)) {
                throw ParseError(open.pos, "interval needs a < b");
            }
            return node;
        }
        if (t.kind == Tok::lbrace) {
            take();
            EventAst node;
            node.kind = EventAst::Kind::rational_points;
            do {
                node.rationals.push_back(parse_rat());
            } while (accept(Tok::comma));
            expect(Tok::rbrace, "'}' or ','");
            return node;
        }
        if (t.kind == Tok::word) {
            if (t.text == "Empty") {
                take();
                return leaf(EventAst::Kind::empty);
            }
            if (t.text == "Omega") {
                throw ParseError(t.pos, "Omega is not representable in the interval model");
            }
        }
        fail(t, "an interval literal ('[', '{', 'Empty') or '('");
    }

    Rational parse_rat() {
        Token num = expect(Tok::integer, "a rational");
        Integer n(num.text);
        if (!accept(Tok::slash)) return Rational(n);
        Token den = expect(Tok::integer, "a positive integer denominator");
        if (den.text[0] == '-') {
            throw ParseError(den.pos, "denominator must be a positive integer");
        }
        Integer d(den.text);
        if (d == 0) throw ParseError(den.pos, "denominator must be a positive integer");
        return make_rational(std::move(n), std::move(d));
    }

    EventAst parse_finite_literal() {
        const Token& t = peek();
        if (t.kind == Tok::word) {
            if (t.text == "Omega") {
                take();
                return leaf(EventAst::Kind::omega);
            }
            if (t.text == "Empty") {
                take();
                return leaf(EventAst::Kind::empty);
            }
            fail(t, "'{', 'Omega', or 'Empty'");
        }
        if (t.kind == Tok::lbrace) {
            take();
            EventAst node;
            node.kind = EventAst::Kind::label_points;
            do {
                Token w = expect(Tok::word, "a label");
                node.labels.push_back(w.text);
            } while (accept(Tok::comma));
            expect(Tok::rbrace, "'}' or ','");
            return node;
        }
        fail(t, "a finite-model literal ('{', 'Omega', 'Empty'), '~', or '('");
    }

    std::vector<Token> tokens_;
    Model model_;
    std::size_t i_ = 0;
};

} // namespace

EventAst parse_event(std::string_view src, Model model) {
    return Parser(Lexer(src).run(), model).parse();
}

Event elaborate(const EventAst& ast, Model model, const FiniteSpacePtr& space) {
    auto child = [&](std::size_t i) { return elaborate(ast.children[i], model, space); };
    auto need_space = [&]() -> const FiniteSpacePtr& {
        if (!space) throw DomainError("finite model needs a sample space");
        return space;
    };
    switch (ast.kind) {
        case EventAst::Kind::omega:
            switch (model) {
                case Model::coin: return Event(CoinEvent::omega());
                case Model::finite: return Event(FiniteEvent::omega(need_space()));
                case Model::interval:
                    throw DomainError("Omega is not representable in the interval model");
            }
            break;
        case EventAst::Kind::empty:
            switch (model) {
                case Model::coin: return Event(CoinEvent::empty());
                case Model::interval: return Event(IntervalEvent::empty());
                case Model::finite: return Event(FiniteEvent::empty(need_space()));
            }
            break;
        case EventAst::Kind::interval_lit:
            return Event(IntervalEvent::interval(ast.lo, ast.hi));
        case EventAst::Kind::rational_points:
            return Event(IntervalEvent::points(ast.rationals));
        case EventAst::Kind::cylinder:
            return Event(CoinEvent::cylinder(ast.fixes));
        case EventAst::Kind::coin_points:
            return Event(CoinEvent::points(ast.points));
        case EventAst::Kind::label_points:
            return Event(FiniteEvent::of(need_space(), ast.labels));
        case EventAst::Kind::union_: return event_union(child(0), child(1));
        case EventAst::Kind::intersect: return event_intersect(child(0), child(1));
        case EventAst::Kind::difference: return event_difference(child(0), child(1));
        case EventAst::Kind::complement: return event_complement(child(0));
    }
    throw DomainError("malformed AST");
}

Event parse_to_event(std::string_view src, Model model, const FiniteSpacePtr& space) {
    return elaborate(parse_event(src, model), model, space);
}

namespace {

std::string join(const std::vector<std::string>& pieces, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i) out += sep;
        out += pieces[i];
    }
    return out;
}

std::string coin_points_literal(const std::vector<CoinPoint>& pts) {
    std::vector<std::string> parts;
    parts.reserve(pts.size());
    for (const auto& p : pts) parts.push_back(p.to_string());
    return "{" + join(parts, ",") + "}";
}

std::string rational_points_literal(const std::vector<Rational>& pts) {
    std::vector<std::string> parts;
    parts.reserve(pts.size());
    for (const auto& p : pts) parts.push_back(rational_to_string(p));
    return "{" + join(parts, ",") + "}";
}

// Joins the positive part with " | " and appends the minus set behind "\",
// parenthesizing the left side when it is not a single factor.
std::string assemble(std::vector<std::string> pieces, const std::string& minus_literal) {
    std::string positive = join(pieces, " | ");
    if (minus_literal.empty()) return positive;
    if (pieces.size() > 1) positive = "(" + positive + ")";
    return positive + " \\ " + minus_literal;
}

std::string render_coin(const CoinEvent& e) {
    if (e.is_empty()) return "Empty";
    std::vector<std::string> pieces;
    if (!e.atoms().empty()) {
        if (e.indices().empty()) {
            pieces.push_back("Omega");
        } else {
            for (std::uint64_t atom : e.atoms()) {
                std::vector<std::string> fixes;
                for (std::size_t k = 0; k < e.indices().size(); ++k) {
                    fixes.push_back(std::to_string(e.indices()[k]) + ":" +
                                    (((atom >> k) & 1u) ? "T" : "H"));
                }
                pieces.push_back("C(" + join(fixes, ",") + ")");
            }
        }
    }
    if (!e.plus().empty()) pieces.push_back(coin_points_literal(e.plus()));
    return assemble(std::move(pieces),
                    e.minus().empty() ? std::string() : coin_points_literal(e.minus()));
}

std::string render_interval(const IntervalEvent& e) {
    if (e.is_empty()) return "Empty";
    std::vector<std::string> pieces;
    for (const auto& [lo, hi] : e.intervals()) {
        pieces.push_back("[" + rational_to_string(lo) + "," + rational_to_string(hi) + ")");
    }
    if (!e.plus().empty()) pieces.push_back(rational_points_literal(e.plus()));
    return assemble(std::move(pieces),
                    e.minus().empty() ? std::string() : rational_points_literal(e.minus()));
}

std::string render_finite(const FiniteEvent& e) {
    if (e.is_empty()) return "Empty";
    if (e == FiniteEvent::omega(e.space())) return "Omega";
    return "{" + join(e.members(), ",") + "}";
}

} // namespace

std::string render(const Event& e) {
    if (const auto* ce = std::get_if<CoinEvent>(&e)) return render_coin(*ce);
    if (const auto* ie = std::get_if<IntervalEvent>(&e)) return render_interval(*ie);
    return render_finite(std::get<FiniteEvent>(e));
}

} // namespace numero
