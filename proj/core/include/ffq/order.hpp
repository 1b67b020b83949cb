#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace ffq {

/// Truncation order k of the exponential e_k: a non-negative integer or infinity.
class Order {
public:
    constexpr explicit Order(unsigned k) noexcept : k_(k), infinite_(false) {}

    static constexpr Order infinite() noexcept { return Order(); }

    constexpr bool is_infinite() const noexcept { return infinite_; }
    constexpr bool is_finite() const noexcept { return !infinite_; }

    /// Integer order; throws DomainError for k = inf.
    unsigned value() const;

    /// k - 1, with inf - 1 = inf. Throws DomainError for k = 0.
    Order predecessor() const;

    /// "inf" or the decimal integer.
    std::string to_string() const;

    /// Accepts a non-negative integer or "inf"/"infinity" (case-insensitive).
    static Order parse(std::string_view text);

    constexpr bool operator==(const Order&) const noexcept = default;
    constexpr std::strong_ordering operator<=>(const Order& other) const noexcept {
        if (infinite_ != other.infinite_) return infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
        if (infinite_) return std::strong_ordering::equal;
        return k_ <=> other.k_;
    }

private:
    constexpr Order() noexcept : k_(0), infinite_(true) {}

    unsigned k_;
    bool infinite_;
};

}  // namespace ffq
