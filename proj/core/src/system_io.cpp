#include "srcdec/system_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "srcdec/errors.hpp"

namespace srcdec {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Recursive descent over one line:
//   expr    := ['+'|'-'] term { ('+'|'-') term }
//   term    := unary { '*' unary }
//   unary   := '-' unary | power
//   power   := primary [ '^' integer ]
//   primary := integer [ '/' integer ] | name | '(' expr ')'
class Parser {
public:
    Parser(std::string_view text, const OrderingPtr& ordering, std::size_t line,
           std::size_t column_offset)
        : text_(text), ordering_(ordering), line_(line), offset_(column_offset) {}

    Polynomial parse() {
        skip_space();
        if (at_end()) fail("empty polynomial");
        Polynomial p = expr();
        skip_space();
        if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_, offset_ + pos_ + 1);
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_space();
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    Polynomial expr() {
        skip_space();
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++pos_;
        }
        Polynomial acc = term();
        if (negate) acc = -acc;
        while (true) {
            skip_space();
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = unary();
        while (accept('*')) acc *= unary();
        return acc;
    }

    Polynomial unary() {
        if (accept('-')) return -unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = primary();
        if (accept('^')) {
            skip_space();
            if (!digit(peek())) fail("expected a nonnegative integer exponent");
            const std::size_t start = pos_;
            Integer e = integer();
            if (e > 65535) {
                pos_ = start;
                fail("exponent too large");
            }
            base = base.pow(static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    Integer integer() {
        const std::size_t start = pos_;
        while (digit(peek())) ++pos_;
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    Polynomial primary() {
        skip_space();
        const char c = peek();
        if (digit(c)) {
            Rational value(integer());
            skip_space();
            if (peek() == '/') {
                ++pos_;
                skip_space();
                if (!digit(peek())) fail("expected an integer denominator");
                const std::size_t start = pos_;
                Integer den = integer();
                if (den == 0) {
                    pos_ = start;
                    fail("zero denominator");
                }
                value /= Rational(den);
            }
            return Polynomial::constant(ordering_, value);
        }
        if (ident_start(c)) {
            const std::size_t start = pos_;
            while (ident_char(peek())) ++pos_;
            const std::string_view name = text_.substr(start, pos_ - start);
            auto idx = ordering_->index_of(name);
            if (!idx) {
                pos_ = start;
                fail("unknown variable '" + std::string(name) + "'");
            }
            return Polynomial::variable(ordering_, *idx);
        }
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (at_end()) fail("unexpected end of polynomial");
        fail(std::string("malformed token '") + c + "'");
    }

    std::string_view text_;
    const OrderingPtr& ordering_;
    std::size_t line_;
    std::size_t offset_;
    std::size_t pos_ = 0;
};

OrderingPtr parse_ordering_at(std::string_view text, std::size_t line, std::size_t offset) {
    std::vector<std::string> names;
    std::size_t pos = 0;
    auto col = [&] { return offset + pos + 1; };
    while (true) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size() || !ident_start(text[pos]))
            throw ParseError("expected a variable name", line, col());
        const std::size_t start = pos;
        while (pos < text.size() && ident_char(text[pos])) ++pos;
        std::string name(text.substr(start, pos - start));
        for (const auto& n : names)
            if (n == name) throw ParseError("variable '" + name + "' listed twice", line, start + offset + 1);
        names.push_back(std::move(name));
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) break;
        if (text[pos] != '<') throw ParseError("expected '<' between variables", line, col());
        ++pos;
    }
    if (names.size() + 2 > Monomial::kMaxVariables)
        throw ParseError("at most " + std::to_string(Monomial::kMaxVariables - 2) +
                             " variables supported",
                         line, offset + 1);
    return make_ordering(std::move(names));
}

void read_metadata(std::string_view comment, SystemFile& sys, std::size_t line) {
    comment = trim(comment);
    const auto colon = comment.find(':');
    if (colon == std::string_view::npos) return;
    const std::string_view key = trim(comment.substr(0, colon));
    const std::string_view value = trim(comment.substr(colon + 1));
    if (key.empty() || key.find(' ') != std::string_view::npos) return;
    sys.metadata[std::string(key)] = std::string(value);
    if (key == "name") {
        sys.name = std::string(value);
    } else if (key == "expected_pairs") {
        std::size_t n = 0;
        if (value.empty()) throw ParseError("expected_pairs needs a value", line, 1);
        for (char c : value) {
            if (!digit(c)) throw ParseError("expected_pairs must be a nonnegative integer", line, 1);
            n = n * 10 + static_cast<std::size_t>(c - '0');
        }
        sys.expected_pairs = n;
    }
}

}  // namespace

OrderingPtr parse_ordering(std::string_view text, std::size_t line) {
    return parse_ordering_at(text, line, 0);
}

Polynomial parse_polynomial(std::string_view text, const OrderingPtr& ordering, std::size_t line) {
    return Parser(text, ordering, line, 0).parse();
}

SystemFile parse_system(std::string_view text) {
    SystemFile sys;
    std::vector<Polynomial> polys;
    std::size_t line_no = 0;
    std::size_t poly_lines = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        const auto hash = line.find('#');
        if (hash != std::string_view::npos) {
            if (trim(line.substr(0, hash)).empty()) read_metadata(line.substr(hash + 1), sys, line_no);
            line = line.substr(0, hash);
        }
        if (trim(line).empty()) {
            if (end == text.size()) break;
            continue;
        }

        const std::size_t lead = line.find_first_not_of(" \t");
        if (line.compare(lead, 5, "vars:") == 0) {
            if (sys.ordering) throw ParseError("repeated vars line", line_no, lead + 1);
            sys.ordering = parse_ordering_at(line.substr(lead + 5), line_no, lead + 5);
        } else {
            if (!sys.ordering)
                throw ParseError("missing vars line before the first polynomial", line_no, lead + 1);
            Polynomial p = Parser(line, sys.ordering, line_no, 0).parse();
            ++poly_lines;
            if (p.is_zero())
                sys.warnings.push_back("line " + std::to_string(line_no) +
                                       ": zero polynomial dropped");
            else
                polys.push_back(std::move(p));
        }
        if (end == text.size()) break;
    }
    if (!sys.ordering) throw ParseError("missing vars line", line_no == 0 ? 1 : line_no, 1);
    if (poly_lines == 0) throw ParseError("no polynomials", line_no, 1);
    sys.gens = IdealGens(sys.ordering, std::move(polys));
    return sys;
}

SystemFile load_system(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    SystemFile sys = parse_system(buf.str());
    if (sys.name.empty()) sys.name = path.stem().string();
    return sys;
}

Polynomial remap(const Polynomial& p, const OrderingPtr& target) {
    const OrderingPtr& source = p.ordering();
    std::vector<std::size_t> map(source->size());
    for (std::size_t i = 0; i < source->size(); ++i) {
        auto idx = target->index_of(source->name(i));
        map[i] = idx ? *idx : target->size();
    }
    std::vector<Polynomial::Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) {
        Monomial m(target->size());
        for (std::size_t i = 0; i < source->size(); ++i) {
            const unsigned e = t.mono[i];
            if (e == 0) continue;
            if (map[i] == target->size())
                throw DomainError("variable '" + source->name(i) + "' missing from the ordering");
            m.set(map[i], e);
        }
        terms.push_back({t.coeff, m});
    }
    return Polynomial::from_terms(target, std::move(terms));
}

SystemFile with_ordering(const SystemFile& sys, const OrderingPtr& target) {
    SystemFile out = sys;
    out.ordering = target;
    std::vector<Polynomial> polys;
    for (const auto& g : sys.gens.gens()) polys.push_back(remap(g, target));
    out.gens = IdealGens(target, std::move(polys));
    return out;
}

std::string render_system(const OrderingPtr& ordering, const std::vector<Polynomial>& polys) {
    std::string out = "vars: ";
    for (std::size_t i = 0; i < ordering->size(); ++i) {
        if (i) out += " < ";
        out += ordering->name(i);
    }
    out += '\n';
    for (const auto& p : polys) out += to_string(p) + '\n';
    return out;
}

std::string to_string_cleared(const Polynomial& p) {
    return p.is_zero() ? "0" : to_string(p.primitive());
}

}  // namespace srcdec
