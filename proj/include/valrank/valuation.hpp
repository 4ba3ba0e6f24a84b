#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace valrank {

/// An integer valuation or the top element +inf (the valuation of zero).
class Valuation {
 public:
  constexpr Valuation() = default;
  constexpr explicit Valuation(std::int64_t v) : value_(v) {}

  static constexpr Valuation infinity() {
    Valuation v;
    v.infinite_ = true;
    return v;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }
  std::int64_t value() const;

  friend constexpr bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator==(const Valuation& a, std::int64_t b) { return a == Valuation(b); }
  friend constexpr std::strong_ordering operator<=>(const Valuation& a, std::int64_t b) {
    return a <=> Valuation(b);
  }

  friend constexpr Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Valuation(a.value_ + b.value_);
  }

  std::string to_string() const;

 private:
  std::int64_t value_ = 0;
  bool infinite_ = false;
};

}  // namespace valrank
