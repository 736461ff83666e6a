#include "eres/coeff.hpp"

#include <numeric>

namespace eres {

namespace {

int64_t narrow(__int128 v) {
    if (v > INT64_MAX || v < -INT64_MAX)
        throw OverflowError("rational coefficient exceeds 64-bit range");
    return static_cast<int64_t>(v);
}

Scalar reduce(__int128 n, __int128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        n /= a;
        d /= a;
    }
    if (n == 0) d = 1;
    return {narrow(n), narrow(d)};
}

int64_t mod(int64_t v, uint32_t p) {
    int64_t r = v % static_cast<int64_t>(p);
    return r < 0 ? r + p : r;
}

}  // namespace

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

Field::Field(uint32_t characteristic) : p_(characteristic) {
    if (p_ != 0 && (!is_prime(p_) || p_ >= (1u << 31)))
        throw std::invalid_argument("field characteristic must be 0 or a prime below 2^31, got " +
                                    std::to_string(p_));
}

Scalar Field::from_int(int64_t v) const {
    if (p_ == 0) return {v, 1};
    return {mod(v, p_), 1};
}

Scalar Field::from_frac(int64_t n, int64_t d) const {
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (p_ == 0) return reduce(n, d);
    Scalar dd = from_int(d);
    if (dd.num == 0)
        throw std::invalid_argument("denominator " + std::to_string(d) + " vanishes in characteristic " +
                                    std::to_string(p_));
    return mul(from_int(n), inv(dd));
}

Scalar Field::add(Scalar a, Scalar b) const {
    if (p_ != 0) {
        int64_t s = a.num + b.num;
        return {s >= p_ ? s - p_ : s, 1};
    }
    if (a.den == 1 && b.den == 1) {
        __int128 s = static_cast<__int128>(a.num) + b.num;
        return {narrow(s), 1};
    }
    return reduce(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                  static_cast<__int128>(a.den) * b.den);
}

Scalar Field::mul(Scalar a, Scalar b) const {
    if (p_ != 0) return {static_cast<int64_t>((static_cast<uint64_t>(a.num) * b.num) % p_), 1};
    if (a.den == 1 && b.den == 1) return {narrow(static_cast<__int128>(a.num) * b.num), 1};
    return reduce(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den);
}

Scalar Field::neg(Scalar a) const {
    if (p_ != 0) return {a.num == 0 ? 0 : p_ - a.num, 1};
    return {-a.num, a.den};
}

Scalar Field::inv(Scalar a) const {
    if (a.num == 0) throw std::domain_error("inverse of zero");
    if (p_ == 0) return reduce(a.den, a.num);
    // Fermat: a^(p-2)
    uint64_t base = a.num, e = p_ - 2, r = 1;
    while (e) {
        if (e & 1) r = r * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return {static_cast<int64_t>(r), 1};
}

std::string Field::format(Scalar a) const {
    if (p_ != 0) {
        int64_t v = a.num;
        if (v > static_cast<int64_t>(p_) / 2) v -= p_;
        return std::to_string(v);
    }
    if (a.den == 1) return std::to_string(a.num);
    return std::to_string(a.num) + "/" + std::to_string(a.den);
}

}  // namespace eres
