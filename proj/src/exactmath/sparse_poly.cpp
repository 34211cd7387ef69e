#include "u21/sparse_poly.hpp"

#include <sstream>

namespace u21 {

std::string to_string(const FockPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int k = 0; k < kFockVars; ++k) {
            if (e[k] == 0) continue;
            os << "*z" << (k / 3 + 1) << (k % 3 + 1);
            if (e[k] > 1) os << "^" << e[k];
        }
    }
    return os.str();
}

NumericFockPoly to_numeric(const FockPolynomial& p) {
    NumericFockPoly out;
    for (const auto& [e, c] : p.terms()) out.add_term(e, {c.re.to_double(), c.im.to_double()});
    return out;
}

}  // namespace u21
