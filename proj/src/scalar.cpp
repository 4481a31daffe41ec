#include "obstrukt/scalar.hpp"

#include "obstrukt/errors.hpp"

namespace obstrukt {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    mpz_class z(static_cast<unsigned long>(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

FieldSpec FieldSpec::prime(uint64_t p) {
    if (!is_prime(p)) fail(ErrorKind::InputError, "field modulus " + std::to_string(p) + " is not prime");
    if (p >= (uint64_t(1) << 62)) fail(ErrorKind::InputError, "field modulus too large (limit 2^62)");
    return FieldSpec{p};
}

std::string FieldSpec::name() const { return p == 0 ? "Q" : "F_" + std::to_string(p); }

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::InputError: return "InputError";
        case ErrorKind::NotInner: return "NotInner";
        case ErrorKind::CurvatureNotInner: return "CurvatureNotInner";
        case ErrorKind::ValueEscapesAnnihilator: return "ValueEscapesAnnihilator";
        case ErrorKind::ObstructionNonzero: return "ObstructionNonzero";
        case ErrorKind::NotCocycle: return "NotCocycle";
        case ErrorKind::NotBimodule: return "NotBimodule";
        case ErrorKind::DegreeOverflow: return "DegreeOverflow";
        case ErrorKind::NucleusMismatch: return "NucleusMismatch";
        case ErrorKind::SectionNotSection: return "SectionNotSection";
        case ErrorKind::ProductEscapesKernel: return "ProductEscapesKernel";
        case ErrorKind::InvalidExtension: return "InvalidExtension";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

i128 abs128(i128 a) { return a < 0 ? -a : a; }

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class from128(i128 v) {
    bool neg = v < 0;
    u128 u = neg ? u128(-(v + 1)) + 1 : u128(v);
    mpz_class hi(static_cast<unsigned long>(uint64_t(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(uint64_t(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

bool fits(i128 v) { return v >= INT64_MIN && v <= INT64_MAX; }

uint64_t mod_inverse(uint64_t a, uint64_t p) {
    mpz_class x(static_cast<unsigned long>(a)), m(static_cast<unsigned long>(p)), r;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
        fail(ErrorKind::Internal, "no inverse modulo " + std::to_string(p));
    return r.get_ui();
}

uint64_t zmod_ui(const mpz_class& z, uint64_t p) {
    mpz_class m(static_cast<unsigned long>(p)), r;
    mpz_mod(r.get_mpz_t(), z.get_mpz_t(), m.get_mpz_t());
    return r.get_ui();
}

}  // namespace

Scalar& Scalar::operator=(const Scalar& o) {
    if (this != &o) {
        n_ = o.n_;
        d_ = o.d_;
        p_ = o.p_;
        big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
}

Scalar::Scalar(long num, long den) {
    if (den == 0) fail(ErrorKind::InputError, "zero denominator");
    set_small128(num, den);
}

Scalar::Scalar(const mpq_class& q, uint64_t p) : p_(p) {
    if (p == 0) {
        set_big(q);
        return;
    }
    mpq_class c = q;
    c.canonicalize();
    uint64_t num = zmod_ui(c.get_num(), p);
    uint64_t den = zmod_ui(c.get_den(), p);
    if (den == 0) fail(ErrorKind::InputError, "denominator vanishes in " + FieldSpec{p}.name());
    n_ = int64_t(u128(num) * mod_inverse(den, p) % p);
    d_ = 1;
}

void Scalar::set_big(mpq_class q) {
    q.canonicalize();
    if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
        n_ = q.get_num().get_si();
        d_ = q.get_den().get_si();
        big_.reset();
    } else {
        big_ = std::make_unique<mpq_class>(std::move(q));
        n_ = 0;
        d_ = 1;
    }
}

void Scalar::set_small128(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (d != 1) {
        i128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
    }
    if (n == 0) d = 1;
    if (fits(n) && fits(d)) {
        n_ = int64_t(n);
        d_ = int64_t(d);
        big_.reset();
    } else {
        set_big(mpq_class(from128(n), from128(d)));
    }
}

mpq_class Scalar::value() const {
    if (big_) return *big_;
    mpq_class q(mpz_class(static_cast<long>(n_)), mpz_class(static_cast<long>(d_)));
    return q;
}

Scalar Scalar::cast_to(uint64_t p) const {
    if (p == p_ || p == 0) return *this;
    return Scalar(value(), p);
}

void Scalar::adopt(uint64_t p) {
    if (p == p_ || p == 0) return;
    if (p_ != 0) fail(ErrorKind::FieldMismatch, "mixing " + FieldSpec{p_}.name() + " and " + FieldSpec{p}.name());
    *this = cast_to(p);
}

Scalar Scalar::parse(const std::string& text, const FieldSpec& f) {
    mpq_class q;
    std::string t = text;
    if (!t.empty() && t[0] == '+') t = t.substr(1);
    if (t.empty() || t.find_first_of(" \t") != std::string::npos || q.set_str(t, 10) != 0)
        fail(ErrorKind::InputError, "malformed scalar '" + text + "'");
    if (q.get_den() == 0) fail(ErrorKind::InputError, "zero denominator in '" + text + "'");
    q.canonicalize();
    return Scalar(q, f.p);
}

std::string Scalar::str() const {
    if (big_) {
        if (big_->get_den() == 1) return big_->get_num().get_str();
        return big_->get_num().get_str() + "/" + big_->get_den().get_str();
    }
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
}

Scalar Scalar::inv() const {
    if (is_zero()) fail(ErrorKind::Internal, "division by zero");
    Scalar r;
    r.p_ = p_;
    if (p_) {
        r.n_ = int64_t(mod_inverse(uint64_t(n_), p_));
        return r;
    }
    if (big_) {
        r.set_big(1 / *big_);
        return r;
    }
    r.set_small128(d_, n_);
    return r;
}

void Scalar::big_op(const Scalar& o, char op) {
    mpq_class a = value(), b = o.value();
    switch (op) {
        case '+': a += b; break;
        case '-': a -= b; break;
        default: a *= b; break;
    }
    set_big(std::move(a));
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.p_ != p_) {
        adopt(o.p_);
        if (o.p_ != p_) return *this += o.cast_to(p_);
    }
    if (p_) {
        u128 s = u128(n_) + u128(o.n_);
        n_ = int64_t(s % p_);
        return *this;
    }
    if (big_ || o.big_) {
        big_op(o, '+');
        return *this;
    }
    if (d_ == 1 && o.d_ == 1) {
        int64_t r;
        if (!__builtin_add_overflow(n_, o.n_, &r)) {
            n_ = r;
            return *this;
        }
    }
    set_small128(i128(n_) * o.d_ + i128(o.n_) * d_, i128(d_) * o.d_);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    if (o.p_ != p_) {
        adopt(o.p_);
        if (o.p_ != p_) return *this *= o.cast_to(p_);
    }
    if (p_) {
        n_ = int64_t(u128(n_) * u128(o.n_) % p_);
        return *this;
    }
    if (big_ || o.big_) {
        big_op(o, '*');
        return *this;
    }
    if (d_ == 1 && o.d_ == 1) {
        int64_t r;
        if (!__builtin_mul_overflow(n_, o.n_, &r)) {
            n_ = r;
            return *this;
        }
    }
    set_small128(i128(n_) * o.n_, i128(d_) * o.d_);
    return *this;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (r.p_) {
        r.n_ = r.n_ == 0 ? 0 : int64_t(r.p_) - r.n_;
        return r;
    }
    if (r.big_) {
        r.set_big(-*r.big_);
        return r;
    }
    if (r.n_ == INT64_MIN) {
        r.set_small128(-i128(r.n_), r.d_);
        return r;
    }
    r.n_ = -r.n_;
    return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.p_ != b.p_) {
        uint64_t p = a.p_ ? a.p_ : b.p_;
        return a.cast_to(p) == b.cast_to(p);
    }
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    return a.value() == b.value();
}

}  // namespace obstrukt
