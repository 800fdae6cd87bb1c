#include "pprimary/cyclo.hpp"

#include <numeric>

#include "resultant.hpp"
#include "ring_kernels.hpp"

namespace pprimary {

FieldDescriptor make_field(std::uint64_t p, unsigned m, unsigned N) {
    if (!detail::is_small_prime(p))
        throw ConfigError("p must be a (small) prime, got " + std::to_string(p));
    if (m < 1)
        throw ConfigError("cyclotomic level m must be at least 1");
    if (N < m + 4)
        throw ConfigError("precision N must be at least m + 4");
    FieldDescriptor f;
    f.prime = p;
    f.level = m;
    f.e_bar = detail::checked_pow(p, m - 1);
    f.pm = f.e_bar * p;
    f.degree = static_cast<unsigned>(f.e_bar * (p - 1));
    if (f.degree > 4096)
        throw ConfigError("field degree beyond desk scale");
    f.precision = N;
    f.modulus = detail::checked_pow(p, N);
    return f;
}

CycloElement::CycloElement(const FieldDescriptor& field)
    : field_(field), coeffs_(field.degree, 0) {}

CycloElement::CycloElement(const FieldDescriptor& field, std::vector<std::uint64_t> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != field_.degree)
        throw MismatchError("coefficient vector size does not match field degree");
    for (auto& c : coeffs_)
        c %= field_.modulus;
}

CycloElement CycloElement::from_integer(const FieldDescriptor& f, std::int64_t value) {
    return from_scalar(f, PadicInt::from_integer(f.prime, f.precision, value));
}

CycloElement CycloElement::from_scalar(const FieldDescriptor& f, const PadicInt& value) {
    if (value.prime() != f.prime || value.precision() != f.precision)
        throw MismatchError("scalar does not match field prime/precision");
    CycloElement x(f);
    x.coeffs_[0] = value.residue();
    return x;
}

CycloElement CycloElement::zeta(const FieldDescriptor& f) {
    if (f.degree == 1) // Q_2(zeta_2): zeta = -1
        return from_integer(f, -1);
    CycloElement x(f);
    x.coeffs_[1] = 1;
    return x;
}

CycloElement CycloElement::pi(const FieldDescriptor& f) {
    return zeta(f) - one(f);
}

bool CycloElement::is_zero() const {
    for (auto c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

std::uint64_t CycloElement::residue_class() const {
    // zeta = 1 modulo the maximal ideal, so the image in F_p is the
    // coefficient sum.
    std::uint64_t s = 0;
    for (auto c : coeffs_)
        s = (s + c) % field_.prime;
    return s;
}

bool CycloElement::is_unit() const { return residue_class() != 0; }

void CycloElement::check_same_field(const CycloElement& rhs) const {
    if (!(field_ == rhs.field_))
        throw MismatchError("operands belong to different fields");
}

CycloElement CycloElement::operator+(const CycloElement& rhs) const {
    check_same_field(rhs);
    detail::U64Ring R{field_.modulus};
    CycloElement r = *this;
    for (unsigned i = 0; i < field_.degree; ++i)
        r.coeffs_[i] = R.add(coeffs_[i], rhs.coeffs_[i]);
    return r;
}

CycloElement CycloElement::operator-(const CycloElement& rhs) const {
    check_same_field(rhs);
    detail::U64Ring R{field_.modulus};
    CycloElement r = *this;
    for (unsigned i = 0; i < field_.degree; ++i)
        r.coeffs_[i] = R.sub(coeffs_[i], rhs.coeffs_[i]);
    return r;
}

CycloElement CycloElement::operator*(const CycloElement& rhs) const {
    check_same_field(rhs);
    detail::U64Ring R{field_.modulus};
    CycloElement r = *this;
    r.coeffs_ = detail::mul_reduce(R, field_, coeffs_, rhs.coeffs_);
    return r;
}

CycloElement CycloElement::operator-() const {
    CycloElement r = *this;
    for (auto& c : r.coeffs_)
        c = c == 0 ? 0 : field_.modulus - c;
    return r;
}

CycloElement CycloElement::pow(std::uint64_t exponent) const {
    CycloElement acc = one(field_);
    CycloElement base = *this;
    while (exponent) {
        if (exponent & 1)
            acc = acc * base;
        base = base * base;
        exponent >>= 1;
    }
    return acc;
}

std::string CycloElement::to_string() const {
    std::string s;
    for (unsigned i = 0; i < field_.degree; ++i) {
        if (coeffs_[i] == 0)
            continue;
        if (!s.empty())
            s += " + ";
        s += std::to_string(coeffs_[i]);
        if (i == 1)
            s += "*z";
        else if (i > 1)
            s += "*z^" + std::to_string(i);
    }
    if (s.empty())
        s = "0";
    return s;
}

CycloElement galois_apply(std::uint64_t a, const CycloElement& x) {
    const FieldDescriptor& f = x.field();
    if (a % f.prime == 0)
        throw GaloisError("automorphism exponent must be coprime to p");
    detail::U64Ring R{f.modulus};
    return CycloElement(f, detail::galois_map(R, f, x.coeffs(), a % f.pm));
}

namespace {

// The conjugate product must be a rational scalar; returns it, enforcing
// that every higher coefficient vanished exactly.
template <class Ring>
typename Ring::Value scalar_of(const Ring& R, const FieldDescriptor& f,
                               const std::vector<typename Ring::Value>& v,
                               const char* what) {
    for (unsigned i = 1; i < f.degree; ++i)
        if (!R.is_zero(v[i]))
            throw InternalInconsistencyError(std::string(what) +
                                             ": non-scalar result");
    return v[0];
}

std::vector<mpz_class> phi_polynomial(const FieldDescriptor& f) {
    // sum_{j<p} x^{j p^{m-1}}, degree e
    std::vector<mpz_class> phi(f.degree + 1, mpz_class(0));
    for (std::uint64_t j = 0; j < f.prime; ++j)
        phi[j * f.e_bar] = 1;
    return phi;
}

} // namespace

PadicInt norm_via_conjugates(const CycloElement& x) {
    const FieldDescriptor& f = x.field();
    detail::U64Ring R{f.modulus};
    auto prod = detail::conjugate_product(R, f, x.coeffs());
    return PadicInt(f.prime, f.precision,
                    scalar_of(R, f, prod, "conjugate norm"));
}

PadicInt norm_via_resultant(const CycloElement& x) {
    const FieldDescriptor& f = x.field();
    std::vector<mpz_class> poly(f.degree);
    for (unsigned i = 0; i < f.degree; ++i)
        poly[i] = static_cast<unsigned long>(x.coeffs()[i]);
    mpz_class res = detail::integer_resultant(phi_polynomial(f), poly);
    mpz_class mod(static_cast<unsigned long>(f.modulus));
    mpz_class r;
    mpz_mod(r.get_mpz_t(), res.get_mpz_t(), mod.get_mpz_t());
    return PadicInt(f.prime, f.precision, mpz_get_ui(r.get_mpz_t()));
}

PadicInt absolute_norm(const CycloElement& x) {
    PadicInt conj = norm_via_conjugates(x);
    PadicInt res = norm_via_resultant(x);
    if (conj != res)
        throw InternalInconsistencyError(
            "conjugate-product and resultant norms disagree: " +
            conj.to_string() + " vs " + res.to_string());
    return conj;
}

CycloElement relative_norm(const CycloElement& x, unsigned target) {
    const FieldDescriptor& f = x.field();
    if (target == f.level)
        return x;
    if (target < 1 || target > f.level)
        throw RangeError("relative_norm target level out of range");
    detail::U64Ring R{f.modulus};
    const std::uint64_t pt = detail::checked_pow(f.prime, target);
    std::vector<std::uint64_t> acc = x.coeffs();
    for (std::uint64_t a = 1 + pt; a < f.pm; a += pt)
        acc = detail::mul_reduce(R, f, acc, detail::galois_map(R, f, x.coeffs(), a));

    // The result lies in Q_p(zeta_{p^target}); on the level-m power basis its
    // support must be the sublattice of exponents divisible by p^{m-target}.
    const std::uint64_t stride = f.pm / pt;
    FieldDescriptor g = make_field(f.prime, target, f.precision);
    std::vector<std::uint64_t> out(g.degree, 0);
    for (unsigned i = 0; i < f.degree; ++i) {
        if (i % stride == 0 && i / stride < g.degree) {
            out[i / stride] = acc[i];
        } else if (acc[i] != 0) {
            throw InternalInconsistencyError(
                "relative norm has support off the subfield lattice");
        }
    }
    return CycloElement(g, std::move(out));
}

namespace {

Valuation vp_of_scalar_u64(std::uint64_t value, std::uint64_t p) {
    if (value == 0)
        return Valuation::at_precision();
    std::int64_t v = 0;
    while (value % p == 0) {
        value /= p;
        ++v;
    }
    return Valuation::finite(v);
}

} // namespace

Valuation vK(const CycloElement& x) {
    const FieldDescriptor& f = x.field();
    if (x.is_zero())
        return Valuation::at_precision();
    const std::int64_t cap = static_cast<std::int64_t>(f.degree) * f.precision;

    // Fast path: the norm at field precision resolves v_K < N.
    {
        detail::U64Ring R{f.modulus};
        auto prod = detail::conjugate_product(R, f, x.coeffs());
        std::uint64_t nrm = scalar_of(R, f, prod, "vK norm");
        Valuation v = vp_of_scalar_u64(nrm, f.prime);
        if (v.is_finite())
            return v;
    }

    // Escalate the internal precision until the valuation drops below it.
    // An element known mod p^N determines v_K exactly below e*N, so reaching
    // that bound without resolution means AT-PRECISION.
    std::vector<mpz_class> lifted(f.degree);
    for (unsigned i = 0; i < f.degree; ++i)
        lifted[i] = static_cast<unsigned long>(x.coeffs()[i]);
    const mpz_class p_mpz(static_cast<unsigned long>(f.prime));
    for (std::int64_t npp = 4 * static_cast<std::int64_t>(f.precision);;
         npp *= 4) {
        bool last = false;
        if (npp >= cap) {
            npp = cap;
            last = true;
        }
        detail::MpzRing R;
        mpz_pow_ui(R.mod.get_mpz_t(), p_mpz.get_mpz_t(),
                   static_cast<unsigned long>(npp));
        auto prod = detail::conjugate_product(R, f, lifted);
        mpz_class nrm = scalar_of(R, f, prod, "vK extended norm");
        if (sgn(nrm) != 0) {
            mpz_class tmp = nrm;
            std::int64_t v = static_cast<std::int64_t>(
                mpz_remove(tmp.get_mpz_t(), nrm.get_mpz_t(), p_mpz.get_mpz_t()));
            return Valuation::finite(v); // v < npp <= e*N, hence trusted
        }
        if (last)
            return Valuation::at_precision();
    }
}

Valuation unit_level_K(const CycloElement& u) {
    if (!u.is_unit())
        throw NotAUnitError("unit_level_K of a non-unit");
    return vK(u - CycloElement::one(u.field()));
}

CycloElement invert_unit(const CycloElement& u) {
    const FieldDescriptor& f = u.field();
    if (!u.is_unit())
        throw NotAUnitError("invert_unit of a non-unit");
    detail::U64Ring R{f.modulus};
    // Product of the conjugates with a != 1; times u it is the norm.
    std::vector<std::uint64_t> cof(f.degree, 0);
    cof[0] = 1;
    for (std::uint64_t a = 2; a < f.pm; ++a) {
        if (a % f.prime == 0)
            continue;
        cof = detail::mul_reduce(R, f, cof, detail::galois_map(R, f, u.coeffs(), a));
    }
    auto nrm_vec = detail::mul_reduce(R, f, cof, u.coeffs());
    std::uint64_t nrm = scalar_of(R, f, nrm_vec, "invert_unit norm");
    PadicInt inv = invert(PadicInt(f.prime, f.precision, nrm));
    for (auto& c : cof)
        c = R.mul(c, inv.residue());
    return CycloElement(f, std::move(cof));
}

} // namespace pprimary
