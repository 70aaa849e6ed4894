#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "autoseq/errors.hpp"

namespace autoseq {

class FieldCtx;

/// An element of F_{p^s}, stored as an index in [0, q). The base-p digits
/// of the index are the coordinates in the power basis of the modulus.
/// Elements are only operable against elements of the same context.
class FieldElement {
  public:
    FieldElement() : ctx_(nullptr), idx_(0) {}

    const FieldCtx* ctx() const { return ctx_; }
    std::uint32_t index() const { return idx_; }
    bool is_zero() const { return idx_ == 0; }

    std::vector<int> coords() const;
    /// "c0,c1,...,c_{s-1}" — the wire format for field elements.
    std::string to_string() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    /// Index order within one context, for use as a map key.
    bool operator<(const FieldElement& o) const;

  private:
    friend class FieldCtx;
    FieldElement(const FieldCtx* ctx, std::uint32_t idx) : ctx_(ctx), idx_(idx) {}

    const FieldCtx* ctx_;
    std::uint32_t idx_;
};

/// The finite field F_{p^s} presented as F_p[X] modulo a monic irreducible
/// polynomial of degree s. Immutable after construction and shareable
/// across threads; elements keep a raw pointer to their context, so the
/// context must outlive them.
class FieldCtx {
  public:
    /// Builds a field context. If no modulus is supplied, the smallest
    /// monic irreducible of degree s in lexicographic coefficient order
    /// (ascending powers) is found by exhaustive search. The modulus, when
    /// given, lists all s+1 coefficients ascending and must be monic.
    static std::shared_ptr<const FieldCtx> make(long p, int s,
                                                const std::vector<long>& modulus = {});

    long p() const { return p_; }
    int s() const { return s_; }
    long q() const { return q_; }
    /// Ascending coefficients, length s+1, monic.
    const std::vector<int>& modulus() const { return modulus_; }

    FieldElement zero() const { return FieldElement(this, 0); }
    FieldElement one() const { return FieldElement(this, one_idx_); }
    FieldElement from_index(long idx) const;
    /// Coordinates in the power basis, ascending; at most s entries,
    /// each reduced mod p on the way in.
    FieldElement from_coords(const std::vector<long>& coords) const;
    /// Parses the "c0,c1,..." wire format.
    FieldElement parse(const std::string& text) const;

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement inv(FieldElement a) const;

  private:
    FieldCtx() = default;
    void check_same(const FieldElement& a, const FieldElement& b) const;
    std::uint32_t mul_idx(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t mul_idx_generic(std::uint32_t a, std::uint32_t b) const;

    long p_ = 0;
    int s_ = 0;
    long q_ = 0;
    std::uint32_t one_idx_ = 1;
    std::vector<int> modulus_;
    // Lookup tables, built when q is small enough that q*q entries are cheap.
    std::vector<std::uint32_t> mul_table_;
    std::vector<std::uint32_t> inv_table_;

    friend class FieldElement;
};

/// x^n by binary exponentiation; 0^0 == 1 by convention.
FieldElement pow(FieldElement x, long n);

/// Multiplicative inverse. Throws DivisionByZero on 0.
FieldElement inv(FieldElement x);

}  // namespace autoseq
