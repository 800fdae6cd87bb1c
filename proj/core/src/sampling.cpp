#include "pprimary/sampling.hpp"

#include "pprimary/errors.hpp"

namespace pprimary {

CycloElement random_element(const FieldDescriptor& f, Rng& rng) {
    std::vector<std::uint64_t> c(f.degree);
    for (auto& v : c)
        v = rng.below(f.modulus);
    return CycloElement(f, std::move(c));
}

CycloElement random_unit(const FieldDescriptor& f, Rng& rng) {
    for (;;) {
        CycloElement x = random_element(f, rng);
        if (x.is_unit())
            return x;
    }
}

CycloElement unit_at_exact_level(const FieldDescriptor& f, std::int64_t n, Rng& rng) {
    if (n < 1)
        throw RangeError("principal-unit level must be positive");
    const CycloElement pi = CycloElement::pi(f);
    const std::uint64_t c = 1 + rng.below(f.prime - 1);
    CycloElement lead = CycloElement::from_integer(f, static_cast<std::int64_t>(c)) +
                        pi * random_element(f, rng);
    return CycloElement::one(f) + pi.pow(static_cast<std::uint64_t>(n)) * lead;
}

CycloElement principal_unit_at_least(const FieldDescriptor& f, std::int64_t n, Rng& rng) {
    if (n < 1)
        throw RangeError("principal-unit level must be positive");
    return CycloElement::one(f) +
           CycloElement::pi(f).pow(static_cast<std::uint64_t>(n)) * random_element(f, rng);
}

PadicInt random_padic_unit(std::uint64_t p, unsigned N, Rng& rng) {
    PadicInt x(p, N, 0);
    do {
        x = PadicInt(p, N, rng.below(x.modulus()));
    } while (!x.is_unit());
    return x;
}

PadicInt padic_unit_at_exact_level(std::uint64_t p, unsigned N, std::int64_t n, Rng& rng) {
    if (n < 1 || n >= static_cast<std::int64_t>(N))
        throw RangeError("exact level must satisfy 1 <= n < N");
    PadicInt u = random_padic_unit(p, N, rng);
    PadicInt pn = PadicInt(p, N, 1);
    for (std::int64_t i = 0; i < n; ++i)
        pn = pn * PadicInt(p, N, p);
    return PadicInt::one(p, N) + pn * u;
}

} // namespace pprimary
