#include <elusive/condexpr.hpp>
#include <elusive/numth.hpp>

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace elusive {

namespace {

struct CondParser {
    const std::string& s;
    size_t i = 0;
    const CondEnv& env;
    bool evaluate;  // false: syntax check only, no arithmetic

    CondParser(const std::string& text, const CondEnv& e, bool ev)
        : s(text), env(e), evaluate(ev) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("condition \"" + s + "\": " + msg +
                                    " at position " + std::to_string(i));
    }

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool lit(const char* t) {
        skip();
        size_t len = std::char_traits<char>::length(t);
        if (s.compare(i, len, t) == 0) { i += len; return true; }
        return false;
    }

    long long integer() {
        skip();
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) fail("expected integer");
        long long v = std::stoll(s.substr(i, j - i));
        i = j;
        return v;
    }

    bool peek_var() const {
        size_t j = i;
        while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j >= s.size()) return false;
        char c = s[j];
        if (c != 'p' && c != 'q' && c != 'n' && c != 'd' && c != 'f') return false;
        // 'd' must not start an identifier; none of our keywords begin with
        // these letters except nothing, so a following alnum rules it out.
        if (j + 1 < s.size() && std::isalnum(static_cast<unsigned char>(s[j + 1])))
            return false;
        return true;
    }

    long long variable() {
        skip();
        if (i >= s.size()) fail("expected variable");
        char c = s[i];
        long long v;
        switch (c) {
            case 'p': v = env.p; break;
            case 'q': v = env.q; break;
            case 'n': v = env.n; break;
            case 'd': v = env.d; break;
            case 'f': v = env.f; break;
            default: fail("expected variable p, q, n, d or f");
        }
        ++i;
        return v;
    }

    // --- arith sublanguage for legendre(...) ---

    long long arith() {
        long long v = arith_prod();
        for (;;) {
            if (lit("+")) v += arith_prod();
            else if (lit("-")) v -= arith_prod();
            else return v;
        }
    }

    long long arith_prod() {
        long long v = arith_atom();
        for (;;) {
            if (lit("*")) {
                v *= arith_atom();
            } else if (lit("/")) {
                long long w = arith_atom();
                if (evaluate) {
                    if (w == 0 || v % w != 0) fail("inexact division");
                    v /= w;
                }
            } else {
                return v;
            }
        }
    }

    long long arith_atom() {
        skip();
        if (lit("(")) {
            long long v = arith();
            if (!lit(")")) fail("expected ')'");
            return v;
        }
        if (peek_var()) return variable();
        return integer();
    }

    // --- atoms ---

    bool atom() {
        skip();
        if (lit("true")) return true;
        if (s.compare(i, 9, "legendre(") == 0) {
            i += 9;
            long long a = arith();
            if (!lit(",")) fail("expected ','");
            long long pv = variable();
            if (!lit(")")) fail("expected ')'");
            bool neq = false;
            if (lit("!=")) neq = true;
            else if (!lit("=")) fail("expected relation");
            bool neg_target = lit("-");
            long long target = integer();
            if (neg_target) target = -target;
            if (!evaluate) return true;
            if (pv < 3 || pv % 2 == 0 || !is_prime(static_cast<uint64_t>(pv)))
                fail("legendre denominator must be an odd prime");
            bool eq = legendre(a, static_cast<uint64_t>(pv)) == target;
            return neq ? !eq : eq;
        }
        // congruence atom
        long long base = variable();
        long long power = 1;
        if (lit("^")) power = integer();
        bool neq = false;
        if (lit("!=")) neq = true;
        else if (!lit("=")) fail("expected relation");
        // signed target
        bool plus_minus = false, minus = false;
        if (lit("+-") || lit("\xc2\xb1")) plus_minus = true;
        else if (lit("-")) minus = true;
        long long mag = 1;
        bool scaled = false;
        skip();
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            mag = integer();
            if (lit("e")) scaled = true;
        } else if (lit("e")) {
            scaled = true;
        } else {
            fail("expected signed constant");
        }
        if (!lit("(")) fail("expected '('");
        long long modulus = integer();
        if (!lit(")")) fail("expected ')'");
        if (!evaluate) return true;

        long long target = mag * (scaled ? env.eps : 1) * (minus ? -1 : 1);
        bool eq;
        if (modulus == 0) {
            __int128 lhs = 1;
            const __int128 cap = static_cast<__int128>(1) << 90;
            for (long long k = 0; k < power; ++k) {
                if (lhs > cap || lhs < -cap) fail("overflow");
                lhs *= base;
            }
            eq = (lhs == target) || (plus_minus && lhs == -target);
        } else {
            uint64_t m = static_cast<uint64_t>(modulus);
            uint64_t lhs = pow_mod(static_cast<uint64_t>(((base % modulus) + modulus) % modulus),
                                   static_cast<uint64_t>(power), m);
            uint64_t t1 = static_cast<uint64_t>(((target % modulus) + modulus) % modulus);
            uint64_t t2 = (m - t1) % m;
            eq = (lhs == t1) || (plus_minus && lhs == t2);
        }
        return neq ? !eq : eq;
    }

    bool term() {
        bool v = atom();
        while (lit("&")) {
            // short-circuit: a decided conjunction still parses the rest, but
            // without evaluating (a later guard-protected atom may not be
            // evaluable, e.g. a Legendre symbol once p = 2 is excluded)
            bool save = evaluate;
            if (!v) evaluate = false;
            bool w = atom();
            evaluate = save;
            v = v && w;
        }
        return v;
    }

    bool expr() {
        bool v = term();
        while (lit("|")) {
            bool save = evaluate;
            if (v) evaluate = false;
            bool w = term();
            evaluate = save;
            v = v || w;
        }
        return v;
    }

    bool parse() {
        bool v = expr();
        skip();
        if (i != s.size()) fail("trailing input");
        return v;
    }
};

}  // namespace

bool eval_condition(const std::string& text, const CondEnv& env) {
    return CondParser(text, env, true).parse();
}

void check_condition_syntax(const std::string& text) {
    CondEnv dummy;
    CondParser(text, dummy, false).parse();
}

}
