#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace eres {

// Scalar value; over F_p only num is used (a residue in [0,p)), over Q it is
// a reduced fraction with den > 0.
struct Scalar {
    int64_t num = 0;
    int64_t den = 1;
    bool operator==(const Scalar&) const = default;
};

struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

class Field {
public:
    // characteristic 0 means Q, otherwise a prime p < 2^31.
    explicit Field(uint32_t characteristic = 2);

    uint32_t characteristic() const { return p_; }
    bool rational() const { return p_ == 0; }

    Scalar zero() const { return {0, 1}; }
    Scalar one() const { return {1, 1}; }
    Scalar from_int(int64_t v) const;
    Scalar from_frac(int64_t n, int64_t d) const;
    Scalar sign(int parity) const { return (parity & 1) ? neg(one()) : one(); }

    Scalar add(Scalar a, Scalar b) const;
    Scalar sub(Scalar a, Scalar b) const { return add(a, neg(b)); }
    Scalar mul(Scalar a, Scalar b) const;
    Scalar neg(Scalar a) const;
    Scalar inv(Scalar a) const;
    Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
    bool is_zero(Scalar a) const { return a.num == 0; }
    bool is_one(Scalar a) const { return a.num == 1 && a.den == 1; }

    // Signed representative for display: residues above p/2 print negative.
    std::string format(Scalar a) const;

    bool operator==(const Field&) const = default;

private:
    uint32_t p_;
};

bool is_prime(uint64_t n);

}  // namespace eres
