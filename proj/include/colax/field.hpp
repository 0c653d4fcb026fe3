#pragma once
#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>

// Exact scalar arithmetic. Two fields are supported: Q with arbitrary
// precision integers (GMP) and a prime field F_p with runtime modulus.
// The modulus is a per-process computation context: mixing moduli inside
// one run is a usage error and is checked where it matters.

namespace colax {

using Rational = mpq_class;

class Fp {
  public:
    Fp() : v_(0) {}
    Fp(long x) {
        long m = static_cast<long>(modulus());
        long r = x % m;
        if (r < 0)
            r += m;
        v_ = static_cast<std::uint64_t>(r);
    }

    static std::uint64_t modulus() {
        if (p_ == 0)
            throw std::logic_error("Fp: modulus not set (use FpContext)");
        return p_;
    }
    static void set_modulus(std::uint64_t p);

    std::uint64_t rep() const { return v_; }

    friend Fp operator+(Fp a, Fp b) { return raw((a.v_ + b.v_) % modulus()); }
    friend Fp operator-(Fp a, Fp b) {
        std::uint64_t p = modulus();
        return raw((a.v_ + p - b.v_) % p);
    }
    friend Fp operator*(Fp a, Fp b) { return raw((a.v_ * b.v_) % modulus()); }
    friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
    Fp operator-() const { return raw(v_ == 0 ? 0 : modulus() - v_); }
    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }
    Fp& operator/=(Fp o) { return *this = *this / o; }
    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

    Fp inv() const {
        if (v_ == 0)
            throw std::domain_error("Fp: division by zero");
        // extended Euclid on (v, p)
        std::int64_t t = 0, newt = 1;
        std::int64_t r = static_cast<std::int64_t>(modulus());
        std::int64_t newr = static_cast<std::int64_t>(v_);
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0)
            t += static_cast<std::int64_t>(modulus());
        return raw(static_cast<std::uint64_t>(t));
    }

  private:
    static Fp raw(std::uint64_t v) {
        Fp x;
        x.v_ = v;
        return x;
    }
    std::uint64_t v_;
    inline static std::uint64_t p_ = 0;
};

inline void Fp::set_modulus(std::uint64_t p) {
    if (p < 2)
        throw std::invalid_argument("Fp: modulus must be a prime >= 2");
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw std::invalid_argument("Fp: modulus must be prime");
    p_ = p;
}

// RAII guard for the prime-field modulus.
struct FpContext {
    explicit FpContext(std::uint64_t p) { Fp::set_modulus(p); }
};

template <class K> struct FieldTraits;

template <> struct FieldTraits<Rational> {
    static std::string name() { return "Q"; }
    static Rational from_long(long n) { return Rational(n); }
    static Rational from_string(const std::string& s) {
        Rational q;
        if (q.set_str(s, 10) != 0)
            throw std::invalid_argument("bad rational literal: " + s);
        q.canonicalize();
        return q;
    }
    static std::string to_string(const Rational& q) { return q.get_str(); }
};

template <> struct FieldTraits<Fp> {
    static std::string name() { return "Fp:" + std::to_string(Fp::modulus()); }
    static Fp from_long(long n) { return Fp(n); }
    static Fp from_string(const std::string& s) { return Fp(std::stol(s)); }
    static std::string to_string(const Fp& x) { return std::to_string(x.rep()); }
};

template <class K> bool is_zero(const K& x) { return x == K(0); }

} // namespace colax
