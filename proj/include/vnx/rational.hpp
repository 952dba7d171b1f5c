#pragma once

#include <boost/rational.hpp>
#include <stdexcept>
#include <string>

namespace vnx {

using Rat = boost::rational<long long>;

// Parses "p" or "p/q" into an exact rational. Throws std::invalid_argument on
// malformed input or a zero denominator.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            size_t pos = 0;
            long long p = std::stoll(s, &pos);
            if (pos != s.size()) throw std::invalid_argument("");
            return Rat(p);
        }
        size_t pos = 0;
        long long p = std::stoll(s.substr(0, slash), &pos);
        if (pos != slash) throw std::invalid_argument("");
        long long q = std::stoll(s.substr(slash + 1), &pos);
        if (pos != s.size() - slash - 1) throw std::invalid_argument("");
        if (q == 0) throw std::invalid_argument("");
        return Rat(p, q);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational: '" + s + "'");
    }
}

inline std::string format_rat(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace vnx
