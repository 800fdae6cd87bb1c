#pragma once

#include <cstdint>
#include <string>

#include "pprimary/errors.hpp"

namespace pprimary {

/**
 * Value of a discrete valuation at finite precision.
 *
 * A valuation is either a known non-negative integer, or AT-PRECISION: the
 * input is indistinguishable from zero at the precision it carries, so the
 * true valuation is at least the resolution bound of that computation.
 * Callers must treat AT-PRECISION as "at least anything they may ask for",
 * never as a concrete number.
 */
class Valuation {
  public:
    static Valuation finite(std::int64_t v) { return Valuation(v, true); }
    static Valuation at_precision() { return Valuation(0, false); }

    bool is_finite() const { return finite_; }

    std::int64_t value() const {
        if (!finite_)
            throw PrecisionExhaustedError("valuation unresolved at this precision");
        return value_;
    }

    // AT-PRECISION satisfies every lower bound a caller can legitimately ask.
    bool at_least(std::int64_t bound) const { return !finite_ || value_ >= bound; }
    bool greater_than(std::int64_t bound) const { return !finite_ || value_ > bound; }
    bool exactly(std::int64_t v) const { return finite_ && value_ == v; }

    friend bool operator==(const Valuation&, const Valuation&) = default;

    std::string to_string() const {
        return finite_ ? std::to_string(value_) : std::string("AT-PRECISION");
    }

  private:
    Valuation(std::int64_t v, bool finite) : value_(v), finite_(finite) {}

    std::int64_t value_;
    bool finite_;
};

} // namespace pprimary
