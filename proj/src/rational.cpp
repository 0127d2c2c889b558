#include "gpoly/rational.hpp"

#include "gpoly/errors.hpp"

namespace gpoly {

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw InputError("empty rational literal");
    mpq_t q;
    mpq_init(q);
    if (mpq_set_str(q, text.c_str(), 10) != 0) {
        mpq_clear(q);
        throw InputError("bad rational literal: \"" + text + "\"");
    }
    if (mpz_sgn(mpq_denref(q)) == 0) {
        mpq_clear(q);
        throw InputError("zero denominator in rational literal: \"" + text + "\"");
    }
    mpq_canonicalize(q);
    Rat out(q);
    mpq_clear(q);
    return out;
}

std::string rational_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_pow(const Rat& base, unsigned exp) {
    Rat out(1);
    Rat b = base;
    unsigned e = exp;
    while (e) {
        if (e & 1u) out *= b;
        b *= b;
        e >>= 1u;
    }
    return out;
}

} // namespace gpoly
