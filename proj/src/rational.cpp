#include "hurwitz/rational.hpp"

#include <cctype>
#include <ostream>

namespace hurwitz {

Rat Rat::parse(const std::string& text) {
    if (text.empty()) throw precondition_error("Rat::parse: empty string");
    auto check_int = [&](const std::string& part) {
        if (part.empty()) throw precondition_error("Rat::parse: bad rational '" + text + "'");
        std::size_t i = (part[0] == '-') ? 1 : 0;
        if (i == part.size()) throw precondition_error("Rat::parse: bad rational '" + text + "'");
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw precondition_error("Rat::parse: bad rational '" + text + "'");
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        check_int(text);
        return Rat(mpz_class(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    check_int(num);
    check_int(den);
    mpz_class d(den);
    if (d == 0) throw precondition_error("Rat::parse: zero denominator in '" + text + "'");
    return Rat(mpz_class(num), d);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.v_.get_str(); }

Rat rat_pow(const Rat& base, long exp) {
    if (exp < 0) {
        if (base.is_zero()) throw arithmetic_error("rat_pow: 0 to a negative power");
        return Rat(1) / rat_pow(base, -exp);
    }
    Rat acc(1), b = base;
    while (exp > 0) {
        if (exp & 1) acc *= b;
        b *= b;
        exp >>= 1;
    }
    return acc;
}

mpz_class factorial(long n) {
    if (n < 0) throw precondition_error("factorial: negative argument");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

mpz_class binomial(long n, long k) {
    if (k < 0) return 0;
    if (n < 0) throw precondition_error("binomial: negative n");
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace hurwitz
