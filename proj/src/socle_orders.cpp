#include <elusive/socle_orders.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef ELUSIVE_DEFAULT_DATA_DIR
#define ELUSIVE_DEFAULT_DATA_DIR "data"
#endif

namespace elusive {

std::string data_dir() {
    if (const char* env = std::getenv("ELUSIVE_DATA_DIR"); env && *env)
        return env;
    return ELUSIVE_DEFAULT_DATA_DIR;
}

namespace {

// Recursive-descent evaluator for the order expressions.
struct ExprParser {
    const std::string& s;
    size_t i = 0;
    const bigint& q;

    explicit ExprParser(const std::string& text, const bigint& qv) : s(text), q(qv) {}

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("order expression: " + msg + " at position " +
                                    std::to_string(i) + " in \"" + s + "\"");
    }

    bigint parse() {
        bigint v = sum();
        skip();
        if (i != s.size()) fail("trailing input");
        return v;
    }

    bigint sum() {
        bigint v = product();
        for (;;) {
            if (eat('+')) v += product();
            else if (eat('-')) v -= product();
            else return v;
        }
    }

    bigint product() {
        bigint v = power();
        for (;;) {
            if (eat('*')) {
                v *= power();
            } else if (eat('/')) {
                bigint w = power();
                if (w == 0 || v % w != 0) fail("inexact division");
                v /= w;
            } else {
                return v;
            }
        }
    }

    bigint power() {
        bigint base = atom();
        if (eat('^')) {
            bigint e = atom();
            if (e < 0) fail("negative exponent");
            bigint v = 1;
            for (bigint k = 0; k < e; ++k) v *= base;
            return v;
        }
        return base;
    }

    bigint atom() {
        skip();
        if (i >= s.size()) fail("unexpected end");
        if (eat('(')) {
            bigint v = sum();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (s[i] == '-') { ++i; return -atom(); }
        if (s.compare(i, 4, "gcd(") == 0) {
            i += 4;
            bigint a = sum();
            if (!eat(',')) fail("expected ',' in gcd");
            bigint b = sum();
            if (!eat(')')) fail("expected ')' after gcd");
            return boost::multiprecision::gcd(a, b);
        }
        if (s[i] == 'q') { ++i; return q; }
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            bigint v(s.substr(i, j - i));
            i = j;
            return v;
        }
        fail("unexpected character");
    }
};

}  // namespace

bigint eval_order_expr(const std::string& text, const bigint& q) {
    return ExprParser(text, q).parse();
}

SocleOrders::SocleOrders(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open socle order table: " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key, expr;
        ls >> key >> expr;
        if (key.empty() || expr.empty())
            throw std::runtime_error("malformed socle order line: " + line);
        if (!entries_.emplace(key, expr).second)
            throw std::runtime_error("duplicate socle order key: " + key);
    }
}

const SocleOrders& SocleOrders::instance() {
    static SocleOrders table(data_dir() + "/socle_orders.txt");
    return table;
}

bigint SocleOrders::order(const std::string& key, const bigint& q) const {
    auto it = entries_.find(key);
    if (it == entries_.end())
        throw std::invalid_argument("unknown socle order key: " + key);
    return eval_order_expr(it->second, q);
}

bigint socle_order(const std::string& key, const bigint& q) {
    return SocleOrders::instance().order(key, q);
}

}
