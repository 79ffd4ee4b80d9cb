#include "parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace backorb::cli {

namespace {

// recursive-descent parser for integer polynomial expressions in z
struct PolyParser {
    std::string s;
    size_t i = 0;

    explicit PolyParser(std::string text) : s(std::move(text)) {}

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }

    IntPoly parse_expr() {
        IntPoly acc;
        int sign = 1;
        if (eat('+')) sign = 1;
        else if (eat('-')) sign = -1;
        acc = parse_term();
        if (sign < 0) acc = exactnum::neg(acc);
        while (true) {
            if (eat('+')) acc = exactnum::add(acc, parse_term());
            else if (eat('-')) acc = exactnum::sub(acc, parse_term());
            else break;
        }
        return acc;
    }

    IntPoly parse_term() {
        IntPoly acc = parse_power();
        while (true) {
            if (eat('*')) {
                acc = exactnum::mul(acc, parse_power());
                continue;
            }
            // implicit multiplication: "3z", "2(z+1)", "z z"
            char c = peek();
            if (c == 'z' || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
                acc = exactnum::mul(acc, parse_power());
                continue;
            }
            break;
        }
        return acc;
    }

    IntPoly parse_power() {
        IntPoly base = parse_atom();
        if (eat('^')) {
            skip();
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i) throw std::invalid_argument("exponent expected in: " + s);
            unsigned long e = std::stoul(s.substr(i, j - i));
            i = j;
            base = exactnum::pow(base, e);
        }
        return base;
    }

    IntPoly parse_atom() {
        skip();
        if (eat('(')) {
            IntPoly inner = parse_expr();
            if (!eat(')')) throw std::invalid_argument("missing ')' in: " + s);
            return inner;
        }
        char c = peek();
        if (c == 'z') {
            ++i;
            return IntPoly({Int(0), Int(1)});
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            Int v(s.substr(i, j - i));
            i = j;
            return IntPoly::constant(v);
        }
        throw std::invalid_argument("unexpected character '" + std::string(1, c) + "' in: " + s);
    }
};

// split at a slash that sits at parenthesis depth 0
std::pair<std::string, std::string> split_fraction(const std::string& s) {
    int depth = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (s[i] == '/' && depth == 0)
            return {s.substr(0, i), s.substr(i + 1)};
    }
    return {s, ""};
}

}  // namespace

IntPoly parse_poly(const std::string& text) {
    PolyParser p(text);
    IntPoly out = p.parse_expr();
    p.skip();
    if (p.i != p.s.size()) throw std::invalid_argument("trailing input in polynomial: " + text);
    return out;
}

dynamics::RationalMap parse_map(const std::string& text) {
    auto [numtext, dentext] = split_fraction(text);
    IntPoly num = parse_poly(numtext);
    IntPoly den = dentext.empty() ? IntPoly::constant(1) : parse_poly(dentext);
    return dynamics::RationalMap::from_fraction(num, den);
}

Rat parse_rat(const std::string& text) { return exactnum::rat_from_string(text); }

dynamics::ProjPoint parse_point(const std::string& text) {
    std::string t = text;
    // trim
    size_t b = t.find_first_not_of(" \t");
    size_t e = t.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty point");
    t = t.substr(b, e - b + 1);
    if (t == "inf" || t == "oo" || t == "infinity") return dynamics::ProjPoint::infinity();
    return dynamics::ProjPoint::from_rational(parse_rat(t));
}

Config load_config(const std::string& path) {
    Config cfg;
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string v) {
            size_t b2 = v.find_first_not_of(" \t");
            if (b2 == std::string::npos) return std::string();
            size_t e2 = v.find_last_not_of(" \t");
            return v.substr(b2, e2 - b2 + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty()) continue;
        if (key == "degree_cap") cfg.degree_cap = std::stol(val);
        else if (key == "tol") cfg.tol = std::stod(val);
        else if (key == "threads") cfg.threads = static_cast<unsigned>(std::stoul(val));
        else if (key == "seed") cfg.seed = std::stoul(val);
        else throw std::invalid_argument("unknown config key: " + key);
    }
    return cfg;
}

}  // namespace backorb::cli
