#include "hs/integer.hpp"

#include <sstream>

#include "hs/errors.hpp"

namespace hs {

std::string vec_str(const Vec& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

// Accepts "1,0,-1", "(1,0,-1)", "[1 0 -1]".
Vec parse_vec(const std::string& s) {
    std::string t;
    for (char c : s) {
        if (c == '(' || c == ')' || c == '[' || c == ']' || c == ',') t += ' ';
        else t += c;
    }
    std::istringstream is(t);
    Vec r;
    std::string tok;
    while (is >> tok) {
        try {
            std::size_t pos = 0;
            long long x = std::stoll(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            r.push_back(x);
        } catch (const std::exception&) {
            throw InputError("not an integer vector: " + s);
        }
    }
    return r;
}

}  // namespace hs
