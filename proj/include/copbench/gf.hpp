#pragma once

#include <vector>

namespace copbench {

bool is_prime_power(int q, int* p_out = nullptr, int* e_out = nullptr);

// Finite field GF(p^e) with elements encoded as integers 0..q-1
// (base-p digit vectors of the polynomial coefficients, constant term
// least significant). Extension fields reduce modulo the monic
// irreducible of degree e over GF(p) with the smallest such encoding.
class GaloisField {
public:
    explicit GaloisField(int q); // NotAPrimePower

    int q() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return e_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const;
    int inv(int a) const; // a != 0

    // Coefficients of the reduction polynomial, degree e, monic.
    const std::vector<int>& modulus() const { return irred_; }

private:
    int q_, p_, e_;
    std::vector<int> add_, mul_;
    std::vector<int> irred_;
};

} // namespace copbench
