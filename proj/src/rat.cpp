#include "surgtri/rat.hpp"

#include <ostream>

namespace surgtri {

Rat Rat::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw precondition_error("Rat: zero denominator");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw parse_error("not a rational: '" + text + "'");
    }
}

Int Rat::floor() const {
    Int q = num() / den(); // truncates toward zero
    if (num() < 0 && q * den() != num()) --q;
    return q;
}

std::string Rat::str() const {
    if (is_integer()) return num().str();
    return num().str() + "/" + den().str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat mod_reduce(const Rat& x, const Rat& m) {
    if (m.sign() <= 0) throw precondition_error("mod_reduce: modulus must be positive");
    Rat q((x / m).floor());
    return x - q * m;
}

} // namespace surgtri
