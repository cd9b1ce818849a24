#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmp.h>

namespace zhouval {

// Exact arbitrary-precision rational, value semantics, always canonical
// (gcd(num,den)=1, den>0). All symbolic-layer arithmetic goes through this
// type; no floating point leaks in.
class Rat {
public:
    Rat() { mpq_init(q_); }
    Rat(long n) {
        mpq_init(q_);
        mpq_set_si(q_, n, 1);
    }
    Rat(int n) : Rat(static_cast<long>(n)) {}
    Rat(long num, long den);

    Rat(const Rat& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rat(Rat&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rat& operator=(const Rat& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rat& operator=(Rat&& o) noexcept {
        if (this != &o) mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rat() { mpq_clear(q_); }

    // Parses "p", "-p", "p/q". Throws Error(kSyntax) on malformed input or
    // zero denominator.
    static Rat parse(const std::string& text);

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    int sign() const { return mpq_sgn(q_); }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

    // Integer value; requires is_integer() and fits in long.
    long to_long() const;
    double to_double() const { return mpq_get_d(q_); }

    std::string str() const;  // canonical "p" or "p/q"

    Rat operator-() const {
        Rat r;
        mpq_neg(r.q_, q_);
        return r;
    }
    Rat abs() const {
        Rat r;
        mpq_abs(r.q_, q_);
        return r;
    }
    Rat reciprocal() const;

    friend Rat operator+(const Rat& a, const Rat& b) {
        Rat r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        Rat r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        Rat r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rat operator/(const Rat& a, const Rat& b);

    Rat& operator+=(const Rat& b) {
        mpq_add(q_, q_, b.q_);
        return *this;
    }
    Rat& operator-=(const Rat& b) {
        mpq_sub(q_, q_, b.q_);
        return *this;
    }
    Rat& operator*=(const Rat& b) {
        mpq_mul(q_, q_, b.q_);
        return *this;
    }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

    // Smallest integer >= *this.
    Rat ceil() const;

    Rat numerator() const;
    Rat denominator() const;

    size_t hash() const;

private:
    mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

// Error codes shared between the C++ core and the C API surface.
enum class ErrCode {
    kInvalidArgument,
    kSyntax,        // text parse / schema problems (carries a position)
    kDomain,        // input outside the exactly-computable class
    kPrecondition,  // operation precondition violated
    kBudget,        // numeric budget exhausted without a verdict
    kInternal,
};

class Error : public std::exception {
public:
    Error(ErrCode code, std::string message, size_t position = 0)
        : code_(code), message_(std::move(message)), position_(position) {}

    const char* what() const noexcept override { return message_.c_str(); }
    ErrCode code() const { return code_; }
    size_t position() const { return position_; }

private:
    ErrCode code_;
    std::string message_;
    size_t position_;
};

}  // namespace zhouval
