#include "qs/rational.hpp"

#include <stdexcept>

namespace qs {

std::string rat_to_string(const Rat& r) {
    Int num = numerator(r);
    Int den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rat parse_rat(const std::string& s) {
    auto bad = [&]() -> std::runtime_error {
        return std::runtime_error("malformed rational: '" + s + "'");
    };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw bad();
        return Rat(num, den);
    } catch (const std::exception&) {
        throw bad();
    }
}

bool is_integer(const Rat& r) { return denominator(r) == 1; }

Int floor_rat(const Rat& r) {
    Int num = numerator(r);
    Int den = denominator(r);
    Int q = num / den; // truncates toward zero
    if (num < 0 && q * den != num) --q;
    return q;
}

Int ceil_rat(const Rat& r) { return -floor_rat(-r); }

} // namespace qs
