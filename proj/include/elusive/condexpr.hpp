#pragma once

#include <string>

namespace elusive {

// Variable bindings for condition strings.  `eps` is +1 or -1 and scales the
// 'e'-suffixed constants; the remaining fields back the variables p, q, n, d
// and f (field degree).
struct CondEnv {
    long long p = 0;
    long long q = 0;
    long long n = 0;
    long long d = 0;
    long long f = 0;
    int eps = 1;
};

// Grammar (ASCII; '+-' may also be written as the sign character '±'):
//   expr   := term ('|' term)*
//   term   := atom ('&' atom)*
//   atom   := var pow? rel signed '(' modulus ')'
//           | 'legendre(' arith ',' var ')' rel int
//           | 'true'
//   var    := 'p' | 'q' | 'n' | 'd' | 'f'
//   pow    := '^' int
//   rel    := '=' | '!='
//   signed := ('-' | '+-')? (int 'e'? | 'e')
// A modulus of 0 means exact integer equality; '+-a (m)' holds when the left
// side is congruent to a or to -a mod m.  The arith sublanguage supports
// integers, variables, parentheses, + - * and exact /.
bool eval_condition(const std::string& text, const CondEnv& env);

// Parse-only validation; throws std::invalid_argument on bad syntax.
void check_condition_syntax(const std::string& text);

}
