#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

#include "grastor/error.hpp"
#include "grastor/rng.hpp"

namespace grastor {

enum class RingKind : uint8_t { prime_field, quadratic_field, rationals };
enum class Involution : uint8_t { identity, conjugation };

// Description of the coefficient domain: GF(p), GF(p^2) = GF(p)[t]/(t^2 - d)
// with d the least quadratic nonresidue, or Q, optionally extended by dual
// numbers (depth 1: K[e], depth 2: K[e1][e2] with e^2 = 0 at each level).
// Scalars carry their ring by value; rings compare structurally.
class Ring {
public:
    static Ring gf(uint32_t p);
    static Ring gf2(uint32_t p, Involution inv = Involution::conjugation);
    static Ring rationals();

    Ring with_dual_depth(int depth) const;
    Ring base() const;  // same ring at dual depth 0

    RingKind kind() const { return kind_; }
    uint32_t p() const { return p_; }
    uint32_t nonresidue() const { return d_; }
    Involution involution() const { return inv_; }
    int dual_depth() const { return depth_; }

    bool is_finite_field() const { return kind_ != RingKind::rationals && depth_ == 0; }
    bool is_field() const { return depth_ == 0; }
    uint64_t cardinality() const;  // finite fields only
    uint32_t characteristic() const { return kind_ == RingKind::rationals ? 0 : p_; }
    bool has_conjugation() const { return inv_ == Involution::conjugation; }

    std::string to_string() const;
    static Ring parse(const std::string& text);

    friend bool operator==(const Ring& a, const Ring& b) = default;

private:
    RingKind kind_ = RingKind::prime_field;
    uint32_t p_ = 2;
    uint32_t d_ = 0;  // nonresidue for quadratic_field
    Involution inv_ = Involution::identity;
    int depth_ = 0;
};

uint32_t least_nonresidue(uint32_t p);

// Immutable exact scalar. Coefficient layout for dual towers is
// c[0] + c[1] e1 + c[2] e2 + c[3] e1 e2 (depth 1 uses c[0], c[1] only).
// Finite-field coefficients are (a, b) meaning a + b t.
class Scalar {
public:
    Scalar() = default;
    static Scalar zero(const Ring& r);
    static Scalar one(const Ring& r);
    static Scalar of(const Ring& r, long value);
    static Scalar of_fraction(const Ring& r, long num, long den);
    static Scalar quadratic(const Ring& r, long a, long b);  // a + b t
    static Scalar epsilon(const Ring& r, int level);         // e1 or e2
    static Scalar from_parts(const Ring& r, const std::array<Scalar, 4>& parts);

    const Ring& ring() const { return ring_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_invertible() const;

    Scalar operator-() const;
    Scalar inv() const;   // throws NotInvertible
    Scalar conj() const;  // the configured involution, lifted coefficientwise

    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inv(); }
    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

    friend bool operator==(const Scalar& x, const Scalar& y);
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
    int cmp(const Scalar& other) const;  // total order within one ring

    // Dual-tower coefficient access (base-ring scalars).
    Scalar part(int index) const;

    // Index into the ring's canonical element order; finite fields at depth 0.
    uint64_t index() const;
    static Scalar from_index(const Ring& r, uint64_t index);

    static Scalar random(const Ring& r, Rng& rng);

    std::string to_string() const;
    static Scalar parse(const Ring& r, const std::string& text);

public:
    Scalar(const Scalar& other);
    Scalar(Scalar&&) noexcept = default;
    Scalar& operator=(const Scalar& other);
    Scalar& operator=(Scalar&&) noexcept = default;
    ~Scalar() = default;

private:
    struct Fq {
        uint32_t a = 0, b = 0;
        friend bool operator==(const Fq&, const Fq&) = default;
    };
    using Rat = std::array<mpq_class, 4>;

    Ring ring_;
    std::array<Fq, 4> f_{};   // finite kinds
    std::unique_ptr<Rat> q_;  // rationals only, allocated lazily (null = 0)

    int coeff_count() const { return 1 << ring_.dual_depth(); }
    const mpq_class& qc(int i) const;
    mpq_class& qm(int i);  // allocates on first write

    static Fq fq_add(const Ring& r, Fq x, Fq y);
    static Fq fq_sub(const Ring& r, Fq x, Fq y);
    static Fq fq_mul(const Ring& r, Fq x, Fq y);
    static Fq fq_inv(const Ring& r, Fq x);
    static Fq fq_conj(const Ring& r, Fq x);
    static Fq fq_neg(const Ring& r, Fq x);
    friend struct ScalarTestAccess;
};

}  // namespace grastor
