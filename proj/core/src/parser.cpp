#include <motivic/parser.hpp>

#include <cctype>
#include <vector>

namespace motivic {

namespace {

struct Token {
    enum Kind {
        Ident,
        Integer,
        LParen,
        RParen,
        Comma,
        Semicolon,
        Star,
        Plus,
        Minus,
        Backslash,
        Caret,
        Equals,
        LBracket,
        RBracket,
        End,
    };
    Kind kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        skip_space();
        const int line = line_, col = col_;
        if (pos_ >= src_.size())
            return {Token::End, "", line, col};
        const char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                    src_[pos_] == '_'))
                word += advance();
            return {Token::Ident, std::move(word), line, col};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < src_.size() &&
                   std::isdigit(static_cast<unsigned char>(src_[pos_])))
                num += advance();
            return {Token::Integer, std::move(num), line, col};
        }
        advance();
        switch (c) {
        case '(': return {Token::LParen, "(", line, col};
        case ')': return {Token::RParen, ")", line, col};
        case ',': return {Token::Comma, ",", line, col};
        case ';': return {Token::Semicolon, ";", line, col};
        case '*': return {Token::Star, "*", line, col};
        case '+': return {Token::Plus, "+", line, col};
        case '-': return {Token::Minus, "-", line, col};
        case '\\': return {Token::Backslash, "\\", line, col};
        case '^': return {Token::Caret, "^", line, col};
        case '=': return {Token::Equals, "=", line, col};
        case '[': return {Token::LBracket, "[", line, col};
        case ']': return {Token::RBracket, "]", line, col};
        default:
            throw ParseError(std::string("unexpected character '") + c + "'",
                             line, col);
        }
    }

private:
    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;

    char advance() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_space() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n')
                    advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }
};

// Recursive-descent parser over the token stream. All three public entry
// points (expressions, Laurent polynomials, SNC files) share it.
class Parser {
public:
    explicit Parser(const std::string& src) : lexer_(src) { bump(); }

    const Token& tok() const { return tok_; }
    bool at_end() const { return tok_.kind == Token::End; }

    void bump() { tok_ = lexer_.next(); }

    Token expect(Token::Kind kind, const char* what) {
        if (tok_.kind != kind)
            throw ParseError(std::string("expected ") + what + ", found '" +
                                 (tok_.kind == Token::End ? "<eof>"
                                                          : tok_.text) +
                                 "'",
                             tok_.line, tok_.column);
        Token t = tok_;
        bump();
        return t;
    }

    int parse_int() {
        bool neg = false;
        if (tok_.kind == Token::Minus) {
            neg = true;
            bump();
        }
        Token t = expect(Token::Integer, "an integer");
        long v = std::stol(t.text);
        return static_cast<int>(neg ? -v : v);
    }

    // expr := union ('\' union)* ; union := prod ('+' prod)* ;
    // prod := atom ('*' atom)*
    ExprPtr parse_expr() {
        ExprPtr e = parse_union();
        while (tok_.kind == Token::Backslash) {
            Token at = tok_;
            bump();
            ExprPtr rhs = parse_union();
            e = wrap(at, [&] { return Expr::complement(e, rhs); });
        }
        return e;
    }

    Laurent parse_laurent() {
        Laurent acc;
        bool first = true;
        while (true) {
            bool negative = false;
            if (!first && tok_.kind == Token::End)
                break;
            if (tok_.kind == Token::Minus) {
                negative = true;
                bump();
            } else if (!first) {
                expect(Token::Plus, "'+' or '-' between terms");
            }
            first = false;

            if (tok_.kind == Token::Integer) {
                Int coeff{tok_.text};
                bump();
                if (tok_.kind == Token::Star) {
                    bump();
                    acc += lefschetz_power(negative ? Int(-coeff) : coeff);
                } else {
                    acc += Laurent::constant(negative ? Int(-coeff) : coeff);
                }
            } else {
                acc += lefschetz_power(negative ? Int(-1) : Int(1));
            }
        }
        return acc;
    }

private:
    Lexer lexer_;
    Token tok_;

    // Semantic violations keep their DomainError type (the CLI reports them
    // as domain errors, not syntax errors) but gain a source position.
    template <class F> ExprPtr wrap(const Token& at, F&& build) {
        try {
            return build();
        } catch (const DomainError& err) {
            throw DomainError(std::string(err.what()) + " at line " +
                              std::to_string(at.line) + ", column " +
                              std::to_string(at.column));
        }
    }

    Laurent lefschetz_power(Int coeff) {
        Token l = expect(Token::Ident, "'L'");
        if (l.text != "L")
            throw ParseError("expected 'L', found '" + l.text + "'", l.line,
                             l.column);
        int e = 1;
        if (tok_.kind == Token::Caret) {
            bump();
            e = parse_int();
        }
        return Laurent::monomial(e, std::move(coeff));
    }

    ExprPtr parse_union() {
        ExprPtr e = parse_product();
        while (tok_.kind == Token::Plus) {
            bump();
            e = Expr::disjoint_union(e, parse_product());
        }
        return e;
    }

    ExprPtr parse_product() {
        ExprPtr e = parse_atom();
        while (tok_.kind == Token::Star) {
            bump();
            e = Expr::product(e, parse_atom());
        }
        return e;
    }

    ExprPtr parse_atom() {
        if (tok_.kind == Token::LParen) {
            bump();
            ExprPtr e = parse_expr();
            expect(Token::RParen, "')'");
            return e;
        }
        Token head = expect(Token::Ident, "an expression");
        const std::string w = head.text;
        if (w == "empty")
            return Expr::empty();
        if (w == "pt")
            return Expr::point();
        if (w == "A" || w == "P" || w == "T") {
            expect(Token::LParen, "'('");
            int n = parse_int();
            expect(Token::RParen, "')'");
            return wrap(head, [&]() -> ExprPtr {
                if (w == "A")
                    return Expr::affine(n);
                if (w == "P")
                    return Expr::projective(n);
                return Expr::torus(n);
            });
        }
        if (w == "Gr") {
            expect(Token::LParen, "'('");
            int k = parse_int();
            expect(Token::Comma, "','");
            int n = parse_int();
            expect(Token::RParen, "')'");
            return wrap(head, [&] { return Expr::grassmannian(k, n); });
        }
        if (w == "vb" || w == "pb") {
            expect(Token::LParen, "'('");
            ExprPtr base = parse_expr();
            expect(Token::Comma, "','");
            int r = parse_int();
            expect(Token::RParen, "')'");
            return wrap(head, [&]() -> ExprPtr {
                if (w == "vb")
                    return Expr::vec_bundle(base, r);
                return Expr::proj_bundle(base, r);
            });
        }
        if (w == "bl") {
            expect(Token::LParen, "'('");
            ExprPtr x = parse_expr();
            expect(Token::Semicolon, "';'");
            ExprPtr y = parse_expr();
            expect(Token::Semicolon, "';'");
            int d = parse_int();
            expect(Token::RParen, "')'");
            return wrap(head, [&] { return Expr::blow_up(x, y, d); });
        }
        if (w == "sym") {
            expect(Token::LParen, "'('");
            Token name = expect(Token::Ident, "a generator name");
            expect(Token::Comma, "','");
            int dim = parse_int();
            expect(Token::Comma, "','");
            bool smooth = false, complete = false, connected = false;
            if (tok_.kind == Token::Minus) {
                bump();
            } else {
                Token flags = expect(Token::Ident, "flags over {s,c,n} or '-'");
                for (char c : flags.text) {
                    if (c == 's')
                        smooth = true;
                    else if (c == 'c')
                        complete = true;
                    else if (c == 'n')
                        connected = true;
                    else
                        throw ParseError(std::string("unknown flag '") + c +
                                             "' (use s, c, n or -)",
                                         flags.line, flags.column);
                }
            }
            expect(Token::RParen, "')'");
            return wrap(head, [&] {
                return Expr::symbolic(name.text, dim, smooth, complete,
                                      connected);
            });
        }
        throw ParseError("unknown construction '" + w + "'", head.line,
                         head.column);
    }
};

} // namespace

ExprPtr parse_expr(const std::string& src) {
    Parser p(src);
    ExprPtr e = p.parse_expr();
    p.expect(Token::End, "end of input");
    return e;
}

Laurent parse_laurent(const std::string& src) {
    Parser p(src);
    Laurent l = p.parse_laurent();
    p.expect(Token::End, "end of input");
    return l;
}

SNCData parse_snc_file(const std::string& text) {
    Parser p(text);
    SNCData data;
    bool saw_interior = false, saw_ambient = false, saw_levels = false;

    while (!p.at_end()) {
        Token key = p.expect(Token::Ident, "a field name");
        p.expect(Token::Equals, "'='");
        if (key.text == "interior") {
            data.interior = p.parse_expr();
            saw_interior = true;
        } else if (key.text == "ambient") {
            data.ambient = p.parse_expr();
            saw_ambient = true;
        } else if (key.text == "levels") {
            p.expect(Token::LBracket, "'['");
            if (p.tok().kind != Token::RBracket) {
                data.levels.push_back(p.parse_expr());
                while (p.tok().kind == Token::Comma) {
                    p.bump();
                    data.levels.push_back(p.parse_expr());
                }
            }
            p.expect(Token::RBracket, "']'");
            saw_levels = true;
        } else {
            throw ParseError("unknown SNC field '" + key.text + "'", key.line,
                             key.column);
        }
    }
    if (!saw_interior)
        throw ParseError("missing 'interior' field", 1, 1);
    if (!saw_ambient)
        throw ParseError("missing 'ambient' field", 1, 1);
    if (!saw_levels)
        throw ParseError("missing 'levels' field", 1, 1);

    data.dimension = data.ambient->dimension();
    data.validate();
    return data;
}

} // namespace motivic
