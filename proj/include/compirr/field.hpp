#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace compirr {

enum class FieldKind { Rationals, PrimeField };

/// Which coefficient field to work over: Q or GF(p).
struct FieldDescriptor {
    FieldKind kind = FieldKind::Rationals;
    mpz_class p = 0;  // meaningful only for PrimeField

    static FieldDescriptor rationals() { return {}; }
    static FieldDescriptor prime_field(mpz_class p) { return {FieldKind::PrimeField, std::move(p)}; }

    /// Accepts `Q` or `GF(p)` with p a decimal integer.
    static FieldDescriptor parse(std::string_view text);
    std::string to_string() const;

    bool operator==(FieldDescriptor const &) const = default;
};

/// An element of Q or GF(p) in canonical form. Prime-field residues live in
/// [0, p-1]; rationals are reduced with positive denominator. Canonical
/// form makes `==` value equality, but mixing elements of different fields
/// is the caller's bug.
class FieldElement {
  public:
    FieldElement() : v_(std::uint64_t{0}) {}

    bool operator==(FieldElement const & o) const { return v_ == o.v_; }

  private:
    friend class Field;
    explicit FieldElement(std::uint64_t r) : v_(r) {}
    explicit FieldElement(mpq_class q) : v_(std::move(q)) {}

    std::variant<std::uint64_t, mpq_class> v_;
};

/// Arithmetic context for one coefficient field. Immutable once built.
class Field {
  public:
    /// Validates the descriptor. GF(p) needs p prime (checked by trial
    /// division) and p < 2^31 so that residue products fit in 64 bits.
    static std::shared_ptr<Field const> make(FieldDescriptor const & desc);
    static std::shared_ptr<Field const> rationals();
    static std::shared_ptr<Field const> prime_field(std::uint64_t p);

    FieldDescriptor const & descriptor() const noexcept { return desc_; }
    bool is_rationals() const noexcept { return desc_.kind == FieldKind::Rationals; }
    bool is_prime_field() const noexcept { return !is_rationals(); }
    /// 0 for Q.
    std::uint64_t characteristic() const noexcept { return p_; }

    bool operator==(Field const & o) const { return desc_ == o.desc_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(long v) const;
    FieldElement from_mpz(mpz_class const & v) const;
    /// DivisionByZero when the denominator vanishes in the field.
    FieldElement from_rational(mpq_class const & v) const;
    /// Residue r mod p; prime fields only.
    FieldElement from_residue(std::uint64_t r) const;

    FieldElement add(FieldElement const & a, FieldElement const & b) const;
    FieldElement sub(FieldElement const & a, FieldElement const & b) const;
    FieldElement neg(FieldElement const & a) const;
    FieldElement mul(FieldElement const & a, FieldElement const & b) const;
    /// DivisionByZero on inv(0).
    FieldElement inv(FieldElement const & a) const;
    FieldElement div(FieldElement const & a, FieldElement const & b) const;
    FieldElement pow(FieldElement const & a, unsigned long e) const;

    bool is_zero(FieldElement const & a) const;
    bool is_one(FieldElement const & a) const;

    /// Total order used for canonical sorting: residues numerically,
    /// rationals numerically.
    int compare(FieldElement const & a, FieldElement const & b) const;

    /// Residue of a prime-field element.
    std::uint64_t residue(FieldElement const & a) const;
    /// Value of a rational element.
    mpq_class const & rational(FieldElement const & a) const;

    /// Uniform element of GF(p); for Q an integer in [-bound, bound].
    FieldElement random(std::mt19937_64 & rng, long bound = 9) const;

    std::string to_string(FieldElement const & a) const;

  private:
    explicit Field(FieldDescriptor desc);

    FieldDescriptor desc_;
    std::uint64_t p_ = 0;
};

using FieldRef = std::shared_ptr<Field const>;

bool is_prime_trial_division(mpz_class const & n);

}  // namespace compirr
