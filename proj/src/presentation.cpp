#include "biquad/presentation.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "biquad/errors.hpp"

namespace biquad {

Presentation::Presentation(std::array<Rat, 3> q, std::array<std::array<Rat, 3>, 3> A,
                           std::array<Rat, 3> B)
    : q_(std::move(q)), A_(std::move(A)), B_(std::move(B)) {
    for (int i = 0; i < 3; ++i)
        if (q_[i].is_zero())
            throw DomainError("q" + std::to_string(i + 1) + " must be nonzero");
}

Presentation Presentation::commutative() {
    return Presentation({Rat(1), Rat(1), Rat(1)}, {}, {});
}

Rat Presentation::param(ParamSymbol s) const {
    switch (s) {
        case ParamSymbol::q1: return q_[0];
        case ParamSymbol::q2: return q_[1];
        case ParamSymbol::q3: return q_[2];
        case ParamSymbol::a: return A_[0][0];
        case ParamSymbol::b: return A_[0][1];
        case ParamSymbol::c: return A_[0][2];
        case ParamSymbol::alpha: return A_[1][0];
        case ParamSymbol::beta: return A_[1][1];
        case ParamSymbol::gamma: return A_[1][2];
        case ParamSymbol::lambda: return A_[2][0];
        case ParamSymbol::mu: return A_[2][1];
        case ParamSymbol::nu: return A_[2][2];
        case ParamSymbol::b1: return B_[0];
        case ParamSymbol::b2: return B_[1];
        case ParamSymbol::b3: return B_[2];
    }
    throw DomainError("unknown parameter symbol");
}

std::map<ParamSymbol, Rat> Presentation::assignment() const {
    std::map<ParamSymbol, Rat> m;
    for (ParamSymbol s : kAllParams) m.emplace(s, param(s));
    return m;
}

namespace {

// Cursor over the file text, tracking 1-based line/column for errors.
class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space_and_comments() {
        while (!at_end()) {
            char ch = peek();
            if (ch == '#') {
                while (!at_end() && peek() != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(ch))) {
                advance();
            } else {
                return;
            }
        }
    }

    void expect(char ch) {
        skip_space_and_comments();
        if (at_end() || peek() != ch)
            throw ParseError(std::string("expected '") + ch + "'", line_, col_);
        advance();
    }

    bool try_consume(char ch) {
        skip_space_and_comments();
        if (at_end() || peek() != ch) return false;
        advance();
        return true;
    }

    std::string token() {
        skip_space_and_comments();
        std::string t;
        while (!at_end()) {
            char ch = peek();
            if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == ']' ||
                ch == '[' || ch == '=' || ch == '#')
                break;
            t += ch;
            advance();
        }
        return t;
    }

    Rat rational() {
        skip_space_and_comments();
        int l = line_, c = col_;
        std::string t = token();
        if (t.empty()) throw ParseError("expected a rational", l, c);
        try {
            return Rat::parse(t);
        } catch (const DomainError& e) {
            throw ParseError(e.what(), l, c);
        }
    }

    int line() const { return line_; }
    int col() const { return col_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

std::array<Rat, 3> parse_triple(Cursor& cur) {
    std::array<Rat, 3> v{};
    cur.expect('[');
    for (int i = 0; i < 3; ++i) {
        if (i > 0) cur.expect(',');
        v[i] = cur.rational();
    }
    cur.expect(']');
    return v;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
    Cursor cur(text);
    cur.skip_space_and_comments();

    // Header.
    {
        int l = cur.line(), c = cur.col();
        std::string word = cur.token();
        if (word != "biquadratic") throw ParseError("expected 'biquadratic' header", l, c);
        l = cur.line();
        c = cur.col();
        std::string version = cur.token();
        if (version != "v1") throw ParseError("unsupported format version '" + version + "'", l, c);
    }

    bool have_q = false, have_A = false, have_B = false;
    std::array<Rat, 3> q{};
    std::array<std::array<Rat, 3>, 3> A{};
    std::array<Rat, 3> B{};

    while (true) {
        cur.skip_space_and_comments();
        if (cur.at_end()) break;
        int l = cur.line(), c = cur.col();
        std::string key = cur.token();
        cur.expect('=');
        if (key == "q") {
            q = parse_triple(cur);
            have_q = true;
        } else if (key == "B") {
            B = parse_triple(cur);
            have_B = true;
        } else if (key == "A") {
            cur.expect('[');
            for (int r = 0; r < 3; ++r) {
                if (r > 0) cur.expect(',');
                cur.skip_space_and_comments();
                if (!cur.try_consume('[')) {
                    throw ParseError("A must have 3 rows", cur.line(), cur.col());
                }
                for (int k = 0; k < 3; ++k) {
                    if (k > 0) cur.expect(',');
                    A[r][k] = cur.rational();
                }
                cur.expect(']');
            }
            cur.expect(']');
            have_A = true;
        } else {
            throw ParseError("unknown key '" + key + "'", l, c);
        }
    }
    if (!have_q) throw ParseError("missing 'q'", cur.line(), cur.col());
    if (!have_A) throw ParseError("missing 'A'", cur.line(), cur.col());
    if (!have_B) throw ParseError("missing 'B'", cur.line(), cur.col());
    return Presentation(std::move(q), std::move(A), std::move(B));
}

std::string render_presentation(const Presentation& p) {
    std::ostringstream os;
    os << "biquadratic v1\n";
    os << "q = [" << p.q(1) << ", " << p.q(2) << ", " << p.q(3) << "]\n";
    os << "A = [";
    for (int r = 1; r <= 3; ++r) {
        if (r > 1) os << ",";
        os << "[" << p.A(r, 1) << "," << p.A(r, 2) << "," << p.A(r, 3) << "]";
    }
    os << "]\n";
    os << "B = [" << p.B(1) << ", " << p.B(2) << ", " << p.B(3) << "]\n";
    return os.str();
}

Presentation load_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
}

}  // namespace biquad
