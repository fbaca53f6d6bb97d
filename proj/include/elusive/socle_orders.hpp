#pragma once

#include <elusive/groups.hpp>

#include <map>
#include <string>

namespace elusive {

// Directory holding the data files.  The ELUSIVE_DATA_DIR environment
// variable overrides the compiled-in default.
std::string data_dir();

// Order lookup for the stabiliser socles that appear in the case data.
// Entries come from socle_orders.txt: either a plain integer or a
// polynomial expression in q (exact arithmetic, division must be exact).
class SocleOrders {
public:
    explicit SocleOrders(const std::string& path);
    static const SocleOrders& instance();

    bool has(const std::string& key) const { return entries_.count(key) != 0; }
    bigint order(const std::string& key, const bigint& q = 0) const;

    const std::map<std::string, std::string>& raw() const { return entries_; }

private:
    std::map<std::string, std::string> entries_;
};

bigint socle_order(const std::string& key, const bigint& q = 0);

// Evaluates an order expression: integers, the variable q, + - * / ^,
// parentheses and gcd(a,b).  Throws on malformed input or inexact division.
bigint eval_order_expr(const std::string& text, const bigint& q);

}
