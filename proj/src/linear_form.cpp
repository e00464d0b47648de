#include "eisen/linear_form.hpp"

namespace eisen {

std::string to_string(const LinearForm& f, const std::string& symbol) {
    const Rat zero(Int(0), Int(1));
    const Rat one(Int(1), Int(1));
    if (f.slope == zero) return to_string(f.constant);
    std::string s;
    if (f.slope == one) {
        s = symbol;
    } else if (f.slope == -one) {
        s = "-" + symbol;
    } else if (is_integer(f.slope)) {
        s = to_string(f.slope) + symbol;
    } else {
        s = "(" + to_string(f.slope) + ")" + symbol;
    }
    if (f.constant != zero) {
        if (f.constant > zero) s += "+";
        s += to_string(f.constant);
    }
    return s;
}

} // namespace eisen
