#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pprimary/errors.hpp"
#include "pprimary/padic.hpp"
#include "pprimary/valuation.hpp"

namespace pprimary {

/**
 * K = Q_p(zeta_{p^m}) with its derived constants.
 *
 * degree  e     = phi(p^m) = p^{m-1}(p-1)   (K/Q_p is totally ramified)
 * e_bar         = e/(p-1)  = p^{m-1}
 * p * e_bar     = p^m      (the boundary level of the unit filtration
 *                           that detects p-th powers)
 *
 * Elements carry coefficients modulo p^N on the power basis
 * 1, zeta, ..., zeta^{e-1}; reduction uses the sparse relation
 * zeta^e = -(1 + zeta^{p^{m-1}} + ... + zeta^{(p-2) p^{m-1}}) coming from
 * the p^m-th cyclotomic polynomial sum_{j<p} x^{j p^{m-1}}.
 *
 * For p = 2, m = 1 this degenerates to Q_2 itself (degree 1, zeta = -1)
 * and everything falls through to plain p-adic arithmetic.
 */
struct FieldDescriptor {
    std::uint64_t prime = 0;
    unsigned level = 0;       // m
    unsigned degree = 0;      // e
    std::uint64_t e_bar = 0;  // p^{m-1}
    std::uint64_t pm = 0;     // p^m = p * e_bar
    unsigned precision = 0;   // N
    std::uint64_t modulus = 0; // p^N

    friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

// Throws ConfigError for composite p, m < 1, N < m + 4, or sizes beyond the
// 62-bit residue limit.
FieldDescriptor make_field(std::uint64_t p, unsigned m, unsigned N);

class CycloElement {
  public:
    // Zero element of the field.
    explicit CycloElement(const FieldDescriptor& field);
    // Element with the given coefficient vector (canonicalized mod p^N);
    // its size must equal the field degree.
    CycloElement(const FieldDescriptor& field, std::vector<std::uint64_t> coeffs);

    static CycloElement zero(const FieldDescriptor& f) { return CycloElement(f); }
    static CycloElement one(const FieldDescriptor& f) {
        return from_integer(f, 1);
    }
    static CycloElement from_integer(const FieldDescriptor& f, std::int64_t value);
    static CycloElement from_scalar(const FieldDescriptor& f, const PadicInt& value);
    // zeta, the fixed primitive p^m-th root of unity (= -1 when e = 1).
    static CycloElement zeta(const FieldDescriptor& f);
    // The uniformizer pi = zeta - 1.
    static CycloElement pi(const FieldDescriptor& f);

    const FieldDescriptor& field() const { return field_; }
    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    // Nonzero image in the residue field F_p, i.e. sum of coefficients mod p
    // (zeta = 1 mod pi).
    bool is_unit() const;
    // The residue-field image in [0, p).
    std::uint64_t residue_class() const;

    CycloElement operator+(const CycloElement& rhs) const;
    CycloElement operator-(const CycloElement& rhs) const;
    CycloElement operator*(const CycloElement& rhs) const;
    CycloElement operator-() const;

    CycloElement pow(std::uint64_t exponent) const;

    friend bool operator==(const CycloElement&, const CycloElement&) = default;

    // Sparse polynomial rendering, e.g. "1 + 2*z^3".
    std::string to_string() const;

  private:
    FieldDescriptor field_;
    std::vector<std::uint64_t> coeffs_;

    void check_same_field(const CycloElement& rhs) const;
};

// Image of x under zeta -> zeta^a. Throws GaloisError unless gcd(a, p) = 1.
CycloElement galois_apply(std::uint64_t a, const CycloElement& x);

// Norm to Q_p as the product of the conjugates galois_apply(a, x) over all
// a in (Z/p^m)^*. Exact modulo p^N.
PadicInt norm_via_conjugates(const CycloElement& x);

// The same norm as the resultant of the p^m-th cyclotomic polynomial with
// the canonical-representative integer polynomial of x, computed exactly
// over Z (small-prime CRT) and reduced mod p^N.
PadicInt norm_via_resultant(const CycloElement& x);

// The norm, computed along both routes above; they must agree exactly at
// precision N or InternalInconsistencyError is thrown.
PadicInt absolute_norm(const CycloElement& x);

// Norm down the cyclotomic tower to K' = Q_p(zeta_{p^target}): the product
// of the conjugates with a = 1 (mod p^target). The result is re-expressed on
// the level-target power basis; a nonzero coefficient off the zeta^{p^{m-m'}}
// sublattice is an InternalInconsistencyError. target = m returns x itself.
CycloElement relative_norm(const CycloElement& x, unsigned target);

/**
 * The surjective valuation v_K, v_K(pi) = 1, v_K(p) = e.
 *
 * Computed as v_p(N_{K/Q_p}(x)), which equals v_K because K/Q_p is totally
 * ramified. The norm is evaluated at whatever internal precision it takes
 * to resolve the value: an element known mod p^N determines its valuation
 * exactly when v_K(x) < e*N, so the internal precision is raised until the
 * result is below it, and AT-PRECISION is returned once the e*N information
 * limit is reached.
 */
Valuation vK(const CycloElement& x);

// v_K(u - 1). Throws NotAUnitError unless u is a unit of O_K.
Valuation unit_level_K(const CycloElement& u);

// Inverse of a unit of O_K: the product of the other conjugates divided by
// the (scalar) norm. Throws NotAUnitError otherwise.
CycloElement invert_unit(const CycloElement& u);

} // namespace pprimary
