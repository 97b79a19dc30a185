#include "barber/qasm.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

#include "barber/errors.hpp"

namespace barber {

namespace {

enum class Tok { Ident, Number, String, Symbol, Arrow, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space_and_comments();
            if (pos_ >= src_.size()) {
                out.push_back({Tok::End, "<eof>", line_, col_});
                return out;
            }
            const int line = line_, col = col_;
            const char ch = src_[pos_];
            if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
                std::size_t start = pos_;
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                    advance();
                out.push_back({Tok::Ident, std::string(src_.substr(start, pos_ - start)), line, col});
            } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
                std::size_t start = pos_;
                while (pos_ < src_.size() &&
                       (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.'))
                    advance();
                if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
                    advance();
                    if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) advance();
                    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                        advance();
                }
                out.push_back({Tok::Number, std::string(src_.substr(start, pos_ - start)), line, col});
            } else if (ch == '"') {
                std::size_t start = pos_;
                advance();
                while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') advance();
                if (pos_ >= src_.size() || src_[pos_] != '"')
                    throw QasmError("unterminated string", line, col, std::string(src_.substr(start, pos_ - start)));
                advance();
                out.push_back({Tok::String, std::string(src_.substr(start, pos_ - start)), line, col});
            } else if (ch == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
                advance();
                advance();
                out.push_back({Tok::Arrow, "->", line, col});
            } else {
                advance();
                out.push_back({Tok::Symbol, std::string(1, ch), line, col});
            }
        }
    }

private:
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
            if (std::isspace(static_cast<unsigned char>(src_[pos_]))) {
                advance();
            } else if (src_.substr(pos_, 2) == "//") {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    Circuit run() {
        std::optional<Circuit> circuit;
        std::string qreg, creg;
        int creg_size = -1;

        while (peek().kind != Tok::End) {
            const Token& head = peek();
            if (head.kind != Tok::Ident) fail("expected a statement", head);

            if (head.text == "OPENQASM") {
                next();
                const Token& ver = expect(Tok::Number, "version number");
                if (ver.text != "2.0") fail("unsupported OpenQASM version", ver);
                expect_symbol(";");
            } else if (head.text == "include") {
                next();
                expect(Tok::String, "include path");
                expect_symbol(";");
            } else if (head.text == "qreg") {
                next();
                if (circuit) fail("only one qreg is supported", head);
                const Token& name = expect(Tok::Ident, "register name");
                qreg = name.text;
                expect_symbol("[");
                const int n = parse_index();
                expect_symbol("]");
                expect_symbol(";");
                if (n <= 0) fail("register size must be positive", name);
                circuit.emplace(n);
            } else if (head.text == "creg") {
                next();
                if (creg_size >= 0) fail("only one creg is supported", head);
                creg = expect(Tok::Ident, "register name").text;
                expect_symbol("[");
                creg_size = parse_index();
                expect_symbol("]");
                expect_symbol(";");
            } else if (head.text == "barrier") {
                next();
                require_qreg(circuit, head);
                std::vector<int> qubits;
                if (peek_symbol(";")) fail("barrier needs operands", peek());
                do {
                    const Token& reg = expect(Tok::Ident, "qubit register");
                    if (reg.text != qreg) fail("unknown register", reg);
                    if (peek_symbol("[")) {
                        next();
                        qubits.push_back(parse_index());
                        expect_symbol("]");
                    } else {
                        for (int q = 0; q < circuit->num_qubits(); ++q) qubits.push_back(q);
                    }
                } while (accept_symbol(","));
                expect_symbol(";");
                wrap(head, [&] { circuit->barrier(std::move(qubits)); });
            } else if (head.text == "measure") {
                next();
                require_qreg(circuit, head);
                const Token& q = expect(Tok::Ident, "qubit register");
                if (q.text != qreg) fail("measure must read the whole qreg", q);
                if (peek_symbol("[")) fail("partial measurement is not supported", peek());
                expect(Tok::Arrow, "'->'");
                const Token& c = expect(Tok::Ident, "classical register");
                if (c.text != creg) fail("unknown classical register", c);
                if (creg_size != circuit->num_qubits()) fail("creg width must match qreg", c);
                expect_symbol(";");
                wrap(head, [&] { circuit->measure_all(); });
            } else {
                parse_gate(circuit, qreg);
            }
        }
        if (!circuit) fail("missing qreg declaration", peek());
        return std::move(*circuit);
    }

private:
    void parse_gate(std::optional<Circuit>& circuit, const std::string& qreg) {
        const Token& head = next();
        const auto kind = gate_from_name(head.text);
        if (!kind) fail("unsupported gate '" + head.text + "'", head);
        require_qreg(circuit, head);

        std::vector<double> params;
        if (accept_symbol("(")) {
            if (!peek_symbol(")")) {
                do {
                    params.push_back(parse_expr());
                } while (accept_symbol(","));
            }
            expect_symbol(")");
        }
        std::vector<int> qubits;
        do {
            const Token& reg = expect(Tok::Ident, "qubit operand");
            if (reg.text != qreg) fail("unknown register", reg);
            expect_symbol("[");
            qubits.push_back(parse_index());
            expect_symbol("]");
        } while (accept_symbol(","));
        expect_symbol(";");
        wrap(head, [&] { circuit->gate(*kind, std::move(qubits), std::move(params)); });
    }

    // expr := ['-'] term (('*'|'/') term)* ; term := number | 'pi'
    double parse_expr() {
        double sign = 1.0;
        if (accept_symbol("-")) sign = -1.0;
        double value = parse_term();
        while (true) {
            if (accept_symbol("*")) {
                value *= parse_term();
            } else if (accept_symbol("/")) {
                const Token& at = peek();
                const double d = parse_term();
                if (d == 0.0) fail("division by zero", at);
                value /= d;
            } else {
                break;
            }
        }
        return sign * value;
    }

    double parse_term() {
        const Token& t = next();
        if (t.kind == Tok::Ident && t.text == "pi") return std::numbers::pi;
        if (t.kind != Tok::Number) fail("expected a numeric angle", t);
        double v = 0.0;
        const auto* first = t.text.data();
        const auto* last = first + t.text.size();
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last) fail("malformed number", t);
        return v;
    }

    int parse_index() {
        const Token& t = expect(Tok::Number, "integer index");
        int v = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) fail("expected an integer", t);
        return v;
    }

    template <typename F>
    void wrap(const Token& at, F&& f) {
        try {
            f();
        } catch (const QasmError&) {
            throw;
        } catch (const std::exception& e) {
            fail(e.what(), at);
        }
    }

    void require_qreg(const std::optional<Circuit>& c, const Token& at) {
        if (!c) fail("statement before qreg declaration", at);
    }

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() {
        const Token& t = toks_[pos_];
        if (t.kind != Tok::End) ++pos_;
        return t;
    }
    bool peek_symbol(std::string_view s) const {
        return peek().kind == Tok::Symbol && peek().text == s;
    }
    bool accept_symbol(std::string_view s) {
        if (!peek_symbol(s)) return false;
        next();
        return true;
    }
    void expect_symbol(std::string_view s) {
        if (!accept_symbol(s)) fail("expected '" + std::string(s) + "'", peek());
    }
    const Token& expect(Tok kind, const std::string& what) {
        if (peek().kind != kind) fail("expected " + what, peek());
        return next();
    }
    [[noreturn]] static void fail(const std::string& msg, const Token& at) {
        throw QasmError(msg, at.line, at.column, at.text);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

std::string format_angle(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

}  // namespace

Circuit parse_qasm(std::string_view text) { return Parser(Lexer(text).run()).run(); }

std::string emit_qasm(const Circuit& c) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    out << "qreg q[" << c.num_qubits() << "];\n";
    out << "creg c[" << c.num_qubits() << "];\n";
    for (const auto& op : c.ops()) {
        if (const auto* g = std::get_if<Gate>(&op)) {
            out << gate_name(g->kind);
            if (!g->params.empty()) {
                out << '(';
                for (std::size_t i = 0; i < g->params.size(); ++i)
                    out << (i ? "," : "") << format_angle(g->params[i]);
                out << ')';
            }
            for (std::size_t i = 0; i < g->qubits.size(); ++i)
                out << (i ? "," : " ") << "q[" << g->qubits[i] << ']';
            out << ";\n";
        } else if (const auto* b = std::get_if<Barrier>(&op)) {
            if (static_cast<int>(b->qubits.size()) == c.num_qubits()) {
                out << "barrier q;\n";
            } else {
                out << "barrier";
                for (std::size_t i = 0; i < b->qubits.size(); ++i)
                    out << (i ? "," : " ") << "q[" << b->qubits[i] << ']';
                out << ";\n";
            }
        } else {
            out << "measure q -> c;\n";
        }
    }
    return out.str();
}

}  // namespace barber
