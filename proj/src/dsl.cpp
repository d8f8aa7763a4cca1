#include "mccoy/dsl.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "mccoy/constructions.hpp"

namespace mccoy {
namespace dsl {

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;
    unsigned line = 1, col = 1;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            if (text[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(line, col, what);
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    void bump() {
        ++pos;
        ++col;
    }

    void expect(char c) {
        if (peek() != c)
            fail(pos >= text.size()
                     ? std::string("end of input, expected '") + c + "'"
                     : std::string("'") + text[pos] + "', expected '" + c + "'");
        bump();
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            bump();
        if (start == pos) fail("expected a constructor name");
        return text.substr(start, pos - start);
    }

    long integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && text[pos] == '-') bump();
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            bump();
        if (start == pos || (pos - start == 1 && text[start] == '-'))
            fail("expected an integer");
        return std::stol(text.substr(start, pos - start));
    }

    std::string string_lit() {
        if (peek() != '"') fail("expected a quoted string");
        bump();
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != '"') bump();
        if (pos >= text.size()) fail("unterminated string");
        std::string s = text.substr(start, pos - start);
        bump();
        return s;
    }
};

ExprPtr parse_expr(Lexer& lex);

std::vector<FiniteRing::Index> parse_literal(Lexer& lex) {
    lex.expect('[');
    std::vector<FiniteRing::Index> out;
    if (lex.peek() != ']') {
        while (true) {
            long v = lex.integer();
            if (v < 0) lex.fail("literal entries must be nonnegative");
            out.push_back(static_cast<FiniteRing::Index>(v));
            if (lex.peek() != ',') break;
            lex.bump();
        }
    }
    lex.expect(']');
    return out;
}

ExprPtr parse_expr(Lexer& lex) {
    auto node = std::make_shared<RingExpr>();
    lex.skip_ws();
    const unsigned at_line = lex.line, at_col = lex.col;
    const auto name = lex.ident();
    static const char* known[] = {"Z", "prod", "M", "T", "Rn", "V",
                                  "trunc", "skewquot", "corner", "quot", "op"};
    bool recognized = false;
    for (const char* k : known) recognized = recognized || name == k;
    if (!recognized)
        throw ParseError(at_line, at_col, "unknown constructor '" + name + "'");
    lex.expect('(');
    using Op = RingExpr::Op;
    if (name == "Z") {
        node->op = Op::Z;
        node->n = lex.integer();
    } else if (name == "prod") {
        node->op = Op::Prod;
        node->args.push_back(parse_expr(lex));
        while (lex.peek() == ',') {
            lex.bump();
            node->args.push_back(parse_expr(lex));
        }
        if (node->args.size() < 2) lex.fail("prod needs at least two factors");
    } else if (name == "M" || name == "T" || name == "Rn") {
        node->op = name == "M" ? Op::M : name == "T" ? Op::T : Op::Rn;
        node->n = lex.integer();
        lex.expect(',');
        node->args.push_back(parse_expr(lex));
    } else if (name == "V") {
        node->op = Op::V;
        node->args.push_back(parse_expr(lex));
    } else if (name == "trunc") {
        node->op = Op::Trunc;
        node->args.push_back(parse_expr(lex));
        lex.expect(',');
        node->n = lex.integer();
    } else if (name == "skewquot") {
        node->op = Op::SkewQuot;
        node->args.push_back(parse_expr(lex));
        lex.expect(',');
        node->endo = lex.ident();
        if (node->endo == "table") {
            lex.expect('(');
            node->endo_file = lex.string_lit();
            lex.expect(')');
        } else if (node->endo != "id" && node->endo != "swap" &&
                   node->endo != "diagcollapse") {
            lex.fail("unknown endomorphism '" + node->endo + "'");
        }
        lex.expect(',');
        node->n = lex.integer();
    } else if (name == "corner") {
        node->op = Op::Corner;
        node->args.push_back(parse_expr(lex));
        lex.expect(',');
        node->literal = parse_literal(lex);
    } else if (name == "quot") {
        node->op = Op::Quot;
        node->args.push_back(parse_expr(lex));
        lex.expect(',');
        node->ideal_index = lex.integer();
    } else if (name == "op") {
        node->op = Op::Opp;
        node->args.push_back(parse_expr(lex));
    } else {
        lex.fail("unknown constructor '" + name + "'");
    }
    lex.expect(')');
    return node;
}

}  // namespace

ExprPtr parse(const std::string& text) {
    Lexer lex{text};
    auto expr = parse_expr(lex);
    if (lex.peek() != '\0') lex.fail("trailing input after expression");
    return expr;
}

std::string render(const RingExpr& e) {
    using Op = RingExpr::Op;
    std::ostringstream os;
    switch (e.op) {
        case Op::Z: os << "Z(" << e.n << ")"; break;
        case Op::Prod:
            os << "prod(";
            for (std::size_t i = 0; i < e.args.size(); ++i)
                os << (i ? "," : "") << render(*e.args[i]);
            os << ")";
            break;
        case Op::M: os << "M(" << e.n << "," << render(*e.args[0]) << ")"; break;
        case Op::T: os << "T(" << e.n << "," << render(*e.args[0]) << ")"; break;
        case Op::Rn: os << "Rn(" << e.n << "," << render(*e.args[0]) << ")"; break;
        case Op::V: os << "V(" << render(*e.args[0]) << ")"; break;
        case Op::Trunc:
            os << "trunc(" << render(*e.args[0]) << "," << e.n << ")";
            break;
        case Op::SkewQuot:
            os << "skewquot(" << render(*e.args[0]) << ",";
            if (e.endo == "table")
                os << "table(\"" << e.endo_file << "\")";
            else
                os << e.endo;
            os << "," << e.n << ")";
            break;
        case Op::Corner:
            os << "corner(" << render(*e.args[0]) << ",[";
            for (std::size_t i = 0; i < e.literal.size(); ++i)
                os << (i ? "," : "") << e.literal[i];
            os << "])";
            break;
        case Op::Quot:
            os << "quot(" << render(*e.args[0]) << "," << e.ideal_index << ")";
            break;
        case Op::Opp: os << "op(" << render(*e.args[0]) << ")"; break;
    }
    return os.str();
}

namespace {

struct Evaluator {
    std::map<std::string, EvalResult> memo;

    EvalResult eval(const RingExpr& e) {
        const auto key = render(e);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        auto result = eval_uncached(e);
        memo.emplace(key, result);
        return result;
    }

    EvalResult eval_uncached(const RingExpr& e) {
        using Op = RingExpr::Op;
        switch (e.op) {
            case Op::Z:
                if (e.n < 2) throw EvalError("Z(n) needs n >= 2");
                return {zmod(static_cast<unsigned long>(e.n)), nullptr};
            case Op::Prod: {
                auto acc = eval(*e.args[0]).ring;
                for (std::size_t i = 1; i < e.args.size(); ++i)
                    acc = product(acc, eval(*e.args[i]).ring);
                return {acc, nullptr};
            }
            case Op::M:
                return {matrix_ring(require_dim(e.n), eval(*e.args[0]).ring),
                        nullptr};
            case Op::T:
                return {upper_triangular(require_dim(e.n), eval(*e.args[0]).ring),
                        nullptr};
            case Op::Rn:
                return {rn_ring(require_dim(e.n), eval(*e.args[0]).ring), nullptr};
            case Op::V:
                return {v_ring(eval(*e.args[0]).ring), nullptr};
            case Op::Trunc: {
                auto base = eval(*e.args[0]).ring;
                auto alpha = endo_identity(base);
                return {skew_trunc(base, alpha, require_order(e.n)), alpha};
            }
            case Op::SkewQuot: {
                auto base = eval(*e.args[0]).ring;
                auto alpha = make_endo(base, e);
                return {skew_trunc(base, alpha, require_order(e.n)), alpha};
            }
            case Op::Corner: {
                auto base = eval(*e.args[0]).ring;
                auto idx = base->index_of(e.literal);
                if (!idx)
                    throw EvalError("corner literal does not name an element of " +
                                    base->label());
                return {corner(base, *idx), nullptr};
            }
            case Op::Quot: {
                auto base = eval(*e.args[0]).ring;
                auto all = ideals(base);
                if (e.ideal_index < 0 ||
                    static_cast<std::size_t>(e.ideal_index) >= all.size())
                    throw EvalError("ideal index " + std::to_string(e.ideal_index) +
                                    " out of range; " + base->label() + " has " +
                                    std::to_string(all.size()) + " ideals");
                return {quotient(base, all[e.ideal_index]).ring, nullptr};
            }
            case Op::Opp:
                return {opposite(eval(*e.args[0]).ring), nullptr};
        }
        throw EvalError("unhandled expression");
    }

    static unsigned require_dim(long n) {
        if (n < 1) throw EvalError("matrix dimension must be >= 1");
        return static_cast<unsigned>(n);
    }

    static unsigned require_order(long n) {
        if (n < 2) throw EvalError("truncation order must be >= 2");
        return static_cast<unsigned>(n);
    }

    static EndoPtr make_endo(const RingPtr& base, const RingExpr& e) {
        if (e.endo == "id") return endo_identity(base);
        if (e.endo == "swap") return endo_swap(base);
        if (e.endo == "diagcollapse") return endo_diag_collapse(base);
        // table("file"): a JSON array mapping each index to its image
        std::ifstream in(e.endo_file);
        if (!in) throw EvalError("cannot open endomorphism table " + e.endo_file);
        nlohmann::json doc;
        in >> doc;
        if (!doc.is_array())
            throw EvalError("endomorphism table must be a JSON array");
        std::vector<FiniteRing::Index> table;
        for (const auto& v : doc)
            table.push_back(v.get<FiniteRing::Index>());
        return endo_from_table(base, std::move(table), "table(" + e.endo_file + ")");
    }
};

}  // namespace

EvalResult eval(const RingExpr& expr) {
    // One process-wide memo: repeated references to the same subexpression
    // (zoo construction, suites) share carriers and tables.
    static std::mutex mutex;
    static Evaluator ev;
    std::lock_guard<std::mutex> lock(mutex);
    try {
        return ev.eval(expr);
    } catch (const EvalError&) {
        throw;
    } catch (const std::runtime_error& e) {
        // construction-level failures surface as evaluation errors
        throw EvalError(e.what());
    }
}

EvalResult eval(const std::string& text) { return eval(*parse(text)); }

}  // namespace dsl
}  // namespace mccoy
