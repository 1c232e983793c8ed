#include <cctype>
#include <fstream>
#include <sstream>

#include "chaos/errors.hpp"
#include "chaos/murec.hpp"

namespace chaos {

namespace {

struct Token {
    enum class Type { open, close, word, end } type;
    std::string text;
    std::size_t line;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip();
        if (pos_ >= src_.size()) {
            return {Token::Type::end, {}, line_};
        }
        const char c = src_[pos_];
        if (c == '(' || c == ')') {
            ++pos_;
            return {c == '(' ? Token::Type::open : Token::Type::close, std::string(1, c), line_};
        }
        const std::size_t start = pos_;
        while (pos_ < src_.size() && !std::isspace(static_cast<unsigned char>(src_[pos_])) && src_[pos_] != '(' &&
               src_[pos_] != ')' && src_[pos_] != '#') {
            ++pos_;
        }
        return {Token::Type::word, std::string(src_.substr(start, pos_ - start)), line_};
    }

private:
    void skip() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    ++pos_;
                }
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) { advance(); }

    RecFn program() {
        RecFn t = term();
        if (cur_.type != Token::Type::end) {
            fail("trailing input after the term");
        }
        return t;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("line " + std::to_string(cur_.line) + ": " + msg +
                         (cur_.text.empty() ? "" : " (at '" + cur_.text + "')"));
    }

    void advance() { cur_ = lex_.next(); }

    std::size_t number() {
        if (cur_.type != Token::Type::word || cur_.text.empty() ||
            cur_.text.find_first_not_of("0123456789") != std::string::npos || cur_.text.size() > 9) {
            fail("expected an arity or index");
        }
        const std::size_t v = std::stoul(cur_.text);
        advance();
        return v;
    }

    RecFn term() {
        if (cur_.type == Token::Type::open) {
            advance();
            RecFn t = body(true);
            if (cur_.type != Token::Type::close) {
                fail("expected ')'");
            }
            advance();
            return t;
        }
        return body(false);
    }

    RecFn body(bool parenthesized) {
        if (cur_.type != Token::Type::word) {
            fail("expected a constructor name");
        }
        const std::string head = cur_.text;
        advance();
        if (head == "proj") {
            const std::size_t p = number();
            const std::size_t i = number();
            return RecFn::proj(p, i);
        }
        if (head == "zero") {
            return RecFn::zero(number());
        }
        if (head == "succ") {
            return RecFn::succ();
        }
        if (!parenthesized) {
            fail("'" + head + "' must be parenthesized");
        }
        if (head == "comp") {
            RecFn f = term();
            std::vector<RecFn> gs;
            while (cur_.type != Token::Type::close && cur_.type != Token::Type::end) {
                gs.push_back(term());
            }
            if (cur_.type == Token::Type::end) {
                fail("expected ')'");
            }
            return RecFn::comp(std::move(f), std::move(gs));
        }
        if (head == "primrec") {
            RecFn f = term();
            RecFn g = term();
            return RecFn::primrec(std::move(f), std::move(g));
        }
        if (head == "mu") {
            return RecFn::mu(term());
        }
        fail("unknown constructor '" + head + "'");
    }

    Lexer lex_;
    Token cur_{Token::Type::end, {}, 1};
};

}  // namespace

RecFn parse_program(std::string_view text) {
    return Parser(text).program();
}

RecFn load_program(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot read program file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_program(buf.str());
}

}  // namespace chaos
