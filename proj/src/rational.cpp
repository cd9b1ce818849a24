#include "rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace zhouval {

Rat::Rat(long num, long den) {
    mpq_init(q_);
    if (den == 0) throw Error(ErrCode::kInvalidArgument, "rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    mpq_set_si(q_, num, static_cast<unsigned long>(den));
    mpq_canonicalize(q_);
}

Rat Rat::parse(const std::string& text) {
    size_t i = 0;
    auto fail = [&](const std::string& m) -> Rat { throw Error(ErrCode::kSyntax, m, i); };
    if (text.empty()) return fail("empty rational literal");
    size_t slash = text.find('/');
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (k == s.size()) return false;
        for (; k < s.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
        return true;
    };
    Rat r;
    if (slash == std::string::npos) {
        if (!is_int(text)) return fail("malformed integer literal '" + text + "'");
        if (mpq_set_str(r.q_, text.c_str(), 10) != 0) return fail("malformed rational '" + text + "'");
    } else {
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) return fail("malformed rational literal '" + text + "'");
        if (mpq_set_str(r.q_, text.c_str(), 10) != 0) return fail("malformed rational '" + text + "'");
        if (mpz_sgn(mpq_denref(r.q_)) == 0) return fail("zero denominator in '" + text + "'");
    }
    mpq_canonicalize(r.q_);
    return r;
}

long Rat::to_long() const {
    if (!is_integer()) throw Error(ErrCode::kInvalidArgument, "rational " + str() + " is not an integer");
    if (!mpz_fits_slong_p(mpq_numref(q_)))
        throw Error(ErrCode::kInvalidArgument, "integer " + str() + " does not fit in a machine word");
    return mpz_get_si(mpq_numref(q_));
}

std::string Rat::str() const {
    char* s = mpq_get_str(nullptr, 10, q_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

Rat Rat::reciprocal() const {
    if (is_zero()) throw Error(ErrCode::kInvalidArgument, "reciprocal of zero");
    Rat r;
    mpq_inv(r.q_, q_);
    return r;
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw Error(ErrCode::kInvalidArgument, "division by zero");
    Rat r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
}

Rat Rat::ceil() const {
    Rat r;
    mpz_t t;
    mpz_init(t);
    mpz_cdiv_q(t, mpq_numref(q_), mpq_denref(q_));
    mpq_set_z(r.q_, t);
    mpz_clear(t);
    return r;
}

Rat Rat::numerator() const {
    Rat r;
    mpq_set_z(r.q_, mpq_numref(q_));
    return r;
}

Rat Rat::denominator() const {
    Rat r;
    mpq_set_z(r.q_, mpq_denref(q_));
    return r;
}

size_t Rat::hash() const {
    // Limb-walk over numerator and denominator; stable within a process.
    size_t h = 1469598103934665603ull;
    auto mix = [&h](const mpz_t z) {
        h ^= static_cast<size_t>(mpz_sgn(z)) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
        size_t n = mpz_size(z);
        for (size_t i = 0; i < n; ++i) {
            h ^= static_cast<size_t>(mpz_getlimbn(z, i));
            h *= 1099511628211ull;
        }
    };
    mix(mpq_numref(q_));
    mix(mpq_denref(q_));
    return h;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace zhouval
