#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <memory>
#include <string>

namespace obstrukt {

// p == 0 means the rationals
struct FieldSpec {
    uint64_t p = 0;

    static FieldSpec rationals() { return {}; }
    static FieldSpec prime(uint64_t p);

    bool is_rational() const { return p == 0; }
    std::string name() const;
    bool operator==(const FieldSpec& o) const { return p == o.p; }
    bool operator!=(const FieldSpec& o) const { return p != o.p; }
};

bool is_prime(uint64_t n);

// Exact scalar. Small rationals live in two machine words and spill into GMP
// on overflow. A value carrying modulus 0 is an untyped rational and adopts
// the modulus of whatever it is combined with.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : n_(v) {}
    Scalar(int v) : n_(v) {}
    Scalar(long num, long den);
    Scalar(const mpq_class& q, uint64_t p = 0);

    Scalar(const Scalar& o) : n_(o.n_), d_(o.d_), p_(o.p_), big_(o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr) {}
    Scalar(Scalar&&) noexcept = default;
    Scalar& operator=(const Scalar& o);
    Scalar& operator=(Scalar&&) noexcept = default;

    static Scalar parse(const std::string& text, const FieldSpec& f);
    static Scalar in(const FieldSpec& f, long v) { return Scalar(mpq_class(v), f.p); }

    std::string str() const;
    bool is_zero() const { return !big_ && n_ == 0; }
    bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
    uint64_t modulus() const { return p_; }
    mpq_class value() const;

    Scalar inv() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    int64_t n_ = 0;
    int64_t d_ = 1;
    uint64_t p_ = 0;
    std::unique_ptr<mpq_class> big_;

    void set_big(mpq_class q);
    void set_small128(__int128 n, __int128 d);
    void adopt(uint64_t p);
    Scalar cast_to(uint64_t p) const;
    void big_op(const Scalar& o, char op);
};

}  // namespace obstrukt
