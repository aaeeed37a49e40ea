#include "mcmlab/parse.hpp"

#include <cctype>

namespace mcmlab {

namespace {

struct Scanner {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    int column() const { return static_cast<int>(pos) + 1; }
};

class PolyParser {
public:
    PolyParser(const Field& k, const std::vector<std::string>& vars, const std::string& src)
        : k_(k), vars_(vars), sc_{src} {}

    Poly parse() {
        Poly p = expr();
        if (!sc_.eof()) throw ParseError("unexpected trailing input", sc_.column());
        return p;
    }

private:
    Poly expr() {
        bool neg = false;
        if (sc_.peek() == '-') {
            neg = true;
            ++sc_.pos;
        } else if (sc_.peek() == '+') {
            ++sc_.pos;
        }
        Poly acc = term();
        if (neg) acc = poly_neg(k_, acc);
        while (true) {
            char c = sc_.peek();
            if (c != '+' && c != '-') break;
            ++sc_.pos;
            Poly t = term();
            acc = c == '+' ? poly_add(k_, acc, t) : poly_sub(k_, acc, t);
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (sc_.peek() == '*') {
            ++sc_.pos;
            acc = poly_mul(k_, acc, factor());
        }
        return acc;
    }

    Poly factor() {
        char c = sc_.peek();
        int col = sc_.column();
        if (c == '\0') throw ParseError("expected a coefficient or variable", col);
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (sc_.pos < sc_.s.size() && std::isdigit(static_cast<unsigned char>(sc_.s[sc_.pos])))
                num += sc_.s[sc_.pos++];
            return Poly::constant(k_, k_.from_string(num), static_cast<int>(vars_.size()));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (sc_.pos < sc_.s.size() &&
                   (std::isalnum(static_cast<unsigned char>(sc_.s[sc_.pos])) || sc_.s[sc_.pos] == '_'))
                name += sc_.s[sc_.pos++];
            int index = -1;
            for (size_t i = 0; i < vars_.size(); ++i)
                if (vars_[i] == name) index = static_cast<int>(i);
            if (index < 0) throw ParseError("unknown variable '" + name + "'", col);
            int exp = 1;
            if (sc_.peek() == '^') {
                ++sc_.pos;
                int ecol = sc_.column();
                if (!std::isdigit(static_cast<unsigned char>(sc_.peek())))
                    throw ParseError("expected an integer exponent", ecol);
                std::string num;
                while (sc_.pos < sc_.s.size() &&
                       std::isdigit(static_cast<unsigned char>(sc_.s[sc_.pos])))
                    num += sc_.s[sc_.pos++];
                exp = std::stoi(num);
            }
            Monomial m(static_cast<int>(vars_.size()));
            m.e[index] = exp;
            return Poly::monomial(k_, m, k_.one());
        }
        throw ParseError(std::string("unexpected character '") + c + "'", col);
    }

    const Field& k_;
    const std::vector<std::string>& vars_;
    Scanner sc_;
};

}  // namespace

Poly parse_poly(const Field& k, const std::vector<std::string>& vars, const std::string& src) {
    return PolyParser(k, vars, src).parse();
}

}  // namespace mcmlab
