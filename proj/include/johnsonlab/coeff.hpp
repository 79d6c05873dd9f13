#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace johnsonlab {

using Integer = boost::multiprecision::cpp_int;

inline bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Nonnegative residue of an arbitrary integer.
inline std::uint32_t residue(const Integer &a, std::uint32_t p)
{
    Integer r = a % p;
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

inline std::uint32_t residue(long long a, std::uint32_t p)
{
    long long r = a % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

inline void require_odd_prime(std::uint64_t p)
{
    if (p < 3 || p > 0xFFFFFFFFull || !is_prime(p))
        throw InvalidArgument("p must be an odd prime, got " + std::to_string(p));
}

// Runtime tag for the coefficient ring, used at API and serialization boundaries.
struct CoefficientRing {
    enum class Kind { Integers, PrimeField };
    Kind kind = Kind::Integers;
    std::uint32_t p = 0;

    static CoefficientRing integers() { return {}; }
    static CoefficientRing prime_field(std::uint64_t p)
    {
        require_odd_prime(p);
        return {Kind::PrimeField, static_cast<std::uint32_t>(p)};
    }
    bool is_integers() const { return kind == Kind::Integers; }
    std::string name() const
    {
        return is_integers() ? std::string("Z") : "F_" + std::to_string(p);
    }
    friend bool operator==(const CoefficientRing &, const CoefficientRing &) = default;
};

// Arbitrary-precision integers.
struct IntegerRing {
    using value_type = Integer;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long long a) const { return a; }
    value_type from_integer(const Integer &a) const { return a; }
    Integer to_integer(const value_type &a) const { return a; }
    bool is_zero(const value_type &a) const { return a.is_zero(); }
    bool is_one(const value_type &a) const { return a == 1; }
    void add_to(value_type &a, const value_type &b) const { a += b; }
    void sub_from(value_type &a, const value_type &b) const { a -= b; }
    // a += b * c
    void fma(value_type &a, const value_type &b, const value_type &c) const { a += b * c; }
    value_type mul(const value_type &a, const value_type &b) const { return a * b; }
    value_type neg(const value_type &a) const { return -a; }
    CoefficientRing descriptor() const { return CoefficientRing::integers(); }
    std::string format(const value_type &a) const { return a.str(); }
    friend bool operator==(const IntegerRing &, const IntegerRing &) { return true; }
};

// The prime field F_p with residues stored in [0, p).
struct PrimeField {
    using value_type = std::uint32_t;
    std::uint32_t p = 3;

    PrimeField() = default;
    explicit PrimeField(std::uint64_t prime) : p(static_cast<std::uint32_t>(prime))
    {
        require_odd_prime(prime);
    }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long long a) const { return residue(a, p); }
    value_type from_integer(const Integer &a) const { return residue(a, p); }
    Integer to_integer(value_type a) const { return a; }
    bool is_zero(value_type a) const { return a == 0; }
    bool is_one(value_type a) const { return a == 1; }
    void add_to(value_type &a, value_type b) const
    {
        a += b;
        if (a >= p) a -= p;
    }
    void sub_from(value_type &a, value_type b) const { a = a >= b ? a - b : a + p - b; }
    void fma(value_type &a, value_type b, value_type c) const
    {
        a = static_cast<value_type>((a + static_cast<std::uint64_t>(b) * c) % p);
    }
    value_type mul(value_type a, value_type b) const
    {
        return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p);
    }
    value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
    value_type pow(value_type a, std::uint64_t e) const
    {
        value_type r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    value_type inverse(value_type a) const
    {
        if (a == 0) throw NotAUnit("zero has no inverse in F_" + std::to_string(p));
        return pow(a, p - 2);
    }
    CoefficientRing descriptor() const { return CoefficientRing::prime_field(p); }
    std::string format(value_type a) const { return std::to_string(a); }
    friend bool operator==(const PrimeField &a, const PrimeField &b) { return a.p == b.p; }
};

} // namespace johnsonlab
