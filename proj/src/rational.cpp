#include "eisen/rational.hpp"

#include <cctype>
#include <sstream>

namespace eisen {

std::string to_string(const Int& n) { return n.str(); }

std::string to_string(const Rat& r) {
    if (r.denominator() == 1) return r.numerator().str();
    return r.numerator().str() + "/" + r.denominator().str();
}

std::optional<Rat> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto slash = text.find('/');
    auto parse_int = [](const std::string& s) -> std::optional<Int> {
        if (s.empty()) return std::nullopt;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return std::nullopt;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
        return Int(s);
    };
    if (slash == std::string::npos) {
        auto n = parse_int(text);
        if (!n) return std::nullopt;
        return Rat(*n, Int(1));
    }
    auto n = parse_int(text.substr(0, slash));
    auto d = parse_int(text.substr(slash + 1));
    if (!n || !d || *d <= 0) return std::nullopt;
    return Rat(*n, *d);
}

} // namespace eisen
