#pragma once

// Exact arithmetic over the supported Euclidean domains: the integers, the
// Gaussian integers Z[i], the Eisenstein integers Z[w] (w^2 = -1 - w) and the
// prime fields F_p with p <= kMaxFieldPrime.

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "framelab/error.hpp"

namespace framelab {

using Integer = mpz_class;

/// Largest prime accepted for PrimeField rings. Keeps enumerations desk-sized.
inline constexpr int kMaxFieldPrime = 13;

enum class RingKind { Integers, Gaussian, Eisenstein, PrimeField };

bool is_prime(long n);

struct RingId {
    RingKind kind = RingKind::Integers;
    int p = 0; // characteristic, PrimeField only

    static RingId integers() { return {RingKind::Integers, 0}; }
    static RingId gaussian() { return {RingKind::Gaussian, 0}; }
    static RingId eisenstein() { return {RingKind::Eisenstein, 0}; }
    /// Throws DomainError unless p is a prime <= kMaxFieldPrime.
    static RingId prime_field(int p);

    bool is_field() const { return kind == RingKind::PrimeField; }
    bool is_finite() const { return is_field(); }
    /// "Z", "Z[i]", "Z[w]" or "F<p>".
    std::string name() const;

    friend bool operator==(const RingId &, const RingId &) = default;
    friend auto operator<=>(const RingId &, const RingId &) = default;
};

/// Parses the names produced by RingId::name() plus the CLI aliases
/// "z", "gauss", "eis".
RingId parse_ring(std::string_view text);

/// An element a + b*x of a supported ring, where x is 0, i or w.
/// PrimeField elements are kept reduced in [0, p); integers have b = 0.
class RingElem {
  public:
    RingElem() = default;
    RingElem(RingId ring, Integer a, Integer b = 0);

    static RingElem zero(RingId ring) { return RingElem(ring, 0); }
    static RingElem one(RingId ring) { return RingElem(ring, 1); }
    static RingElem from_int(RingId ring, long a, long b = 0) {
        return RingElem(ring, Integer(a), Integer(b));
    }

    const RingId &ring() const { return ring_; }
    const Integer &a() const { return a_; }
    const Integer &b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_one() const { return a_ == 1 && b_ == 0; }
    bool is_unit() const;

    /// Euclidean norm: |a| on Z, a^2+b^2 on Z[i], a^2-ab+b^2 on Z[w],
    /// 0/1 on fields.
    Integer norm() const;

    RingElem operator-() const;
    RingElem &operator+=(const RingElem &o);
    RingElem &operator-=(const RingElem &o);
    RingElem &operator*=(const RingElem &o);
    friend RingElem operator+(RingElem x, const RingElem &y) { return x += y; }
    friend RingElem operator-(RingElem x, const RingElem &y) { return x -= y; }
    friend RingElem operator*(RingElem x, const RingElem &y) { return x *= y; }

    friend bool operator==(const RingElem &x, const RingElem &y) {
        return x.ring_ == y.ring_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    /// Total order used for canonical sorting: by (a, b).
    friend bool operator<(const RingElem &x, const RingElem &y);

    std::string to_string() const;

  private:
    void normalize();

    RingId ring_{};
    Integer a_{0};
    Integer b_{0};
};

/// a = q*b + r with norm(r) < norm(b). Throws DomainError on b = 0 or mixed rings.
std::pair<RingElem, RingElem> euclid_div(const RingElem &a, const RingElem &b);

/// The full (finite) unit group of the ring.
std::vector<RingElem> units(RingId ring);

/// The unique unit u such that u*a lies in the canonical fundamental domain.
/// Z: positive. Z[i]: argument in [0, pi/2). Z[w]: argument in [0, pi/3).
/// Fields: u*a = 1.
RingElem canonical_unit(const RingElem &a);

/// Inverse of a unit (any nonzero element for fields).
RingElem unit_inverse(const RingElem &u);

/// Canonicalized greatest common divisor; throws if both inputs are zero.
RingElem gcd(const RingElem &a, const RingElem &b);

bool divides(const RingElem &d, const RingElem &a);

/// a / d, throwing DomainError when the division is not exact.
RingElem exact_quotient(const RingElem &a, const RingElem &d);

enum class CoeffKind { Z, ZHalf, Q, Fp };

/// Coefficient ring for homology: Z, Z[1/2], Q or F_p.
struct CoeffRing {
    CoeffKind kind = CoeffKind::Z;
    int p = 0;

    static CoeffRing integers() { return {CoeffKind::Z, 0}; }
    static CoeffRing z_half() { return {CoeffKind::ZHalf, 0}; }
    static CoeffRing rationals() { return {CoeffKind::Q, 0}; }
    static CoeffRing fp(int p);

    bool is_field() const { return kind == CoeffKind::Q || kind == CoeffKind::Fp; }
    std::string name() const;

    friend bool operator==(const CoeffRing &, const CoeffRing &) = default;
};

/// "Z", "ZHalf", "Q", "F<p>".
CoeffRing parse_coeff(std::string_view text);

} // namespace framelab
