#include "kkblocks/rational.hpp"

namespace kkb {

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    auto parse_int = [](const std::string& s) -> Int {
        if (s.empty() || s == "-" || s == "+") throw std::invalid_argument("bad integer literal");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw std::invalid_argument("bad integer literal: " + s);
        return Int(s);
    };
    if (slash == std::string::npos) return Rat(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rat(num, den);
}

} // namespace kkb
