#pragma once

#include <cstdint>

#include "pprimary/cyclo.hpp"
#include "pprimary/padic.hpp"
#include "pprimary/rng.hpp"

namespace pprimary {

// Uniform coefficient vector; may be anything, including zero.
CycloElement random_element(const FieldDescriptor& f, Rng& rng);

// Resamples until the residue-field image is nonzero.
CycloElement random_unit(const FieldDescriptor& f, Rng& rng);

// 1 + pi^n * (c + pi * r) with c in [1, p): a principal unit of level
// exactly n (the leading pi-coefficient is a unit of the residue field).
CycloElement unit_at_exact_level(const FieldDescriptor& f, std::int64_t n, Rng& rng);

// 1 + pi^n * r for a random integral r: a principal unit of level >= n.
CycloElement principal_unit_at_least(const FieldDescriptor& f, std::int64_t n, Rng& rng);

PadicInt random_padic_unit(std::uint64_t p, unsigned N, Rng& rng);

// 1 + p^n * u with u a unit: level exactly n (requires n < N).
PadicInt padic_unit_at_exact_level(std::uint64_t p, unsigned N, std::int64_t n, Rng& rng);

} // namespace pprimary
