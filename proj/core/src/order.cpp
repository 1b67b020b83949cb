#include "ffq/order.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "ffq/errors.hpp"

namespace ffq {

unsigned Order::value() const {
    if (infinite_) throw DomainError("order k = inf has no integer value");
    return k_;
}

Order Order::predecessor() const {
    if (infinite_) return *this;
    if (k_ == 0) throw DomainError("order k = 0 has no predecessor (e_0' = 0)");
    return Order(k_ - 1);
}

std::string Order::to_string() const { return infinite_ ? std::string("inf") : std::to_string(k_); }

Order Order::parse(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "inf" || lower == "infinity") return Order::infinite();
    unsigned k = 0;
    auto [ptr, ec] = std::from_chars(lower.data(), lower.data() + lower.size(), k);
    if (ec != std::errc() || ptr != lower.data() + lower.size() || lower.empty())
        throw DomainError("invalid order '" + std::string(text) + "': expected a non-negative integer or \"inf\"");
    return Order(k);
}

}  // namespace ffq
