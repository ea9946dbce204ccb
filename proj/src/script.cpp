#include "qdissect/script.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "qdissect/errors.hpp"

namespace qdissect {

namespace {

struct Token {
    enum class Kind { LParen, RParen, Integer, Symbol, String };
    Kind kind;
    std::string text;
    std::int64_t value = 0;
};

class Lexer {
public:
    Lexer(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) {}

    std::optional<Token> next() {
        while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_])))
            ++pos_;
        if (pos_ >= line_.size() || line_[pos_] == '#')
            return std::nullopt;
        const char c = line_[pos_];
        if (c == '(') {
            ++pos_;
            return Token{Token::Kind::LParen, "("};
        }
        if (c == ')') {
            ++pos_;
            return Token{Token::Kind::RParen, ")"};
        }
        if (c == '"') {
            const std::size_t close = line_.find('"', pos_ + 1);
            if (close == std::string_view::npos)
                fail("unterminated string literal");
            Token t{Token::Kind::String, std::string(line_.substr(pos_ + 1, close - pos_ - 1))};
            pos_ = close + 1;
            return t;
        }
        std::size_t end = pos_;
        while (end < line_.size() && !std::isspace(static_cast<unsigned char>(line_[end])) &&
               line_[end] != '(' && line_[end] != ')' && line_[end] != '"')
            ++end;
        std::string text(line_.substr(pos_, end - pos_));
        pos_ = end;
        std::int64_t value = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec == std::errc{} && ptr == text.data() + text.size())
            return Token{Token::Kind::Integer, std::move(text), value};
        return Token{Token::Kind::Symbol, std::move(text)};
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ScriptParseError("line " + std::to_string(line_no_) + ": " + message);
    }

private:
    std::string_view line_;
    std::size_t line_no_;
    std::size_t pos_ = 0;
};

class LineParser {
public:
    LineParser(std::string_view line, std::size_t line_no, const std::set<std::string, std::less<>>& labels)
        : lexer_(line, line_no), labels_(labels) {
        advance();
    }

    bool at_end() const { return !current_.has_value(); }

    Token expect(Token::Kind kind, const std::string& what) {
        if (!current_ || current_->kind != kind)
            lexer_.fail("expected " + what);
        Token t = *current_;
        advance();
        return t;
    }

    ExprPtr parse_expr() {
        if (!current_)
            lexer_.fail("expected an expression");
        if (current_->kind == Token::Kind::Integer) {
            const std::int64_t v = current_->value;
            advance();
            return ex_scalar(v);
        }
        if (current_->kind == Token::Kind::Symbol) {
            const std::string label = current_->text;
            if (!labels_.count(label))
                lexer_.fail("reference to undefined label '" + label + "'");
            advance();
            return ex_ref(label);
        }
        if (current_->kind != Token::Kind::LParen)
            lexer_.fail("expected an expression");
        advance();
        const Token head = expect(Token::Kind::Symbol, "an operator");
        ExprPtr result = parse_form(head.text);
        expect(Token::Kind::RParen, "')'");
        return result;
    }

    [[noreturn]] void fail(const std::string& message) const { lexer_.fail(message); }

private:
    void advance() { current_ = lexer_.next(); }

    std::int64_t parse_integer(const std::string& what) {
        return expect(Token::Kind::Integer, what).value;
    }

    std::vector<ExprPtr> parse_args(std::size_t min_count, const std::string& head) {
        std::vector<ExprPtr> args;
        while (current_ && current_->kind != Token::Kind::RParen)
            args.push_back(parse_expr());
        if (args.size() < min_count)
            lexer_.fail("'" + head + "' needs at least " + std::to_string(min_count) + " arguments");
        return args;
    }

    ExprPtr parse_form(const std::string& head) {
        if (head == "phi")
            return ex_phi(parse_integer("a signed inflation"));
        if (head == "psi")
            return ex_psi(parse_integer("a signed inflation"));
        if (head == "q") {
            const std::int64_t e = parse_integer("an exponent");
            if (e < 0)
                lexer_.fail("monomial exponent must be nonnegative");
            return ex_mono(static_cast<std::size_t>(e));
        }
        if (head == "+")
            return ex_sum(parse_args(1, head));
        if (head == "*")
            return ex_product(parse_args(1, head));
        if (head == "-") {
            std::vector<ExprPtr> args = parse_args(1, head);
            if (args.size() == 1)
                return ex_product({ex_scalar(-1), args[0]});
            std::vector<ExprPtr> terms{args[0]};
            for (std::size_t i = 1; i < args.size(); ++i)
                terms.push_back(ex_product({ex_scalar(-1), args[i]}));
            return ex_sum(std::move(terms));
        }
        if (head == "E")
            return ex_even(parse_expr());
        if (head == "O")
            return ex_odd(parse_expr());
        if (head == "ap") {
            ExprPtr child = parse_expr();
            const std::int64_t m = parse_integer("a modulus");
            const std::int64_t r = parse_integer("a residue");
            if (m < 1 || r < 0 || r >= m)
                lexer_.fail("extraction needs m >= 1 and 0 <= r < m");
            return ex_extract(std::move(child), static_cast<std::size_t>(m), static_cast<std::size_t>(r));
        }
        if (head == "inflate") {
            ExprPtr child = parse_expr();
            const std::int64_t k = parse_integer("an inflation factor");
            if (k < 1)
                lexer_.fail("inflation factor must be positive");
            return ex_inflate(std::move(child), static_cast<std::size_t>(k));
        }
        if (head == "twist")
            return ex_twist(parse_expr());
        lexer_.fail("unknown operator '" + head + "'");
    }

    Lexer lexer_;
    const std::set<std::string, std::less<>>& labels_;
    std::optional<Token> current_;
};

std::string strip(std::string_view line) {
    std::size_t b = 0, e = line.size();
    while (b < e && std::isspace(static_cast<unsigned char>(line[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(line[e - 1])))
        --e;
    return std::string(line.substr(b, e - b));
}

} // namespace

ProofScript parse_script(std::string_view text) {
    ProofScript script;
    std::set<std::string, std::less<>> labels;
    std::istringstream input{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    bool named = false;
    while (std::getline(input, raw)) {
        ++line_no;
        const std::string line = strip(raw);
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream head(line);
        std::string keyword;
        head >> keyword;
        const std::string rest = strip(line.substr(keyword.size()));
        if (keyword == "script") {
            if (named)
                throw ScriptParseError("line " + std::to_string(line_no) + ": duplicate script header");
            if (rest.empty())
                throw ScriptParseError("line " + std::to_string(line_no) + ": script header needs a name");
            script.name = rest;
            named = true;
        } else if (keyword == "def") {
            LineParser parser(rest, line_no, labels);
            const Token label = parser.expect(Token::Kind::Symbol, "a label");
            if (labels.count(label.text))
                parser.fail("label '" + label.text + "' already defined");
            ExprPtr expr = parser.parse_expr();
            if (!parser.at_end())
                parser.fail("trailing tokens after definition");
            script.definitions.emplace_back(label.text, std::move(expr));
            labels.insert(label.text);
        } else if (keyword == "assert") {
            LineParser parser(rest, line_no, labels);
            const Token citation = parser.expect(Token::Kind::String, "a quoted citation");
            ExprPtr lhs = parser.parse_expr();
            ExprPtr rhs = parser.parse_expr();
            if (!parser.at_end())
                parser.fail("trailing tokens after assertion");
            script.assertions.push_back({citation.text, std::move(lhs), std::move(rhs)});
        } else {
            throw ScriptParseError("line " + std::to_string(line_no) + ": unknown directive '" + keyword + "'");
        }
    }
    if (!named)
        throw ScriptParseError("missing 'script <name>' header");
    if (script.assertions.empty())
        throw ScriptParseError("script '" + script.name + "' has no assertions");
    return script;
}

ProofScript load_script_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ScriptParseError("cannot open script file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_script(buffer.str());
}

namespace {

std::string normalize_name(std::string_view name) {
    std::string out;
    for (char c : name)
        if (c != '(' && c != ')')
            out += c;
    return out;
}

} // namespace

const ProofScript* find_script(std::string_view name) {
    const std::string wanted = normalize_name(name);
    for (const ProofScript& script : builtin_scripts())
        if (normalize_name(script.name) == wanted)
            return &script;
    return nullptr;
}

ScriptReport run_script(const ProofScript& script, std::size_t order) {
    ScriptReport report{script.name, order, true, {}};
    ExprEvaluator evaluator(script.definitions);
    for (const ScriptAssertion& assertion : script.assertions) {
        const TruncatedSeries lhs = evaluator.eval(assertion.lhs, order);
        const TruncatedSeries rhs = evaluator.eval(assertion.rhs, order);
        AssertionOutcome outcome{assertion.citation, false, first_mismatch(lhs, rhs, order)};
        outcome.pass = !outcome.mismatch.has_value();
        report.pass = report.pass && outcome.pass;
        report.assertions.push_back(std::move(outcome));
    }
    return report;
}

} // namespace qdissect
