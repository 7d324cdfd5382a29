#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace cellres {

/// Exponent vector of a monomial z^alpha. Entries are nonnegative;
/// arithmetic that could overflow is checked and throws std::overflow_error.
class ExponentVector {
 public:
  using value_type = std::int64_t;

  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : entries_(n, 0) {}
  ExponentVector(std::initializer_list<value_type> entries);
  explicit ExponentVector(std::vector<value_type> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  value_type operator[](std::size_t i) const { return entries_[i]; }
  void set(std::size_t i, value_type value);

  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  const std::vector<value_type>& entries() const noexcept { return entries_; }

  value_type total_degree() const;
  bool is_zero() const noexcept;

  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<value_type> entries_;
};

/// z^a divides z^b.
bool divides(const ExponentVector& a, const ExponentVector& b);
ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
/// Exponent of z^b / z^a; requires divides(a, b).
ExponentVector quotient(const ExponentVector& b, const ExponentVector& a);
ExponentVector product(const ExponentVector& a, const ExponentVector& b);
ExponentVector pure_power(std::size_t n, std::size_t variable, ExponentVector::value_type power);
/// Variables with a positive exponent.
std::vector<std::size_t> support(const ExponentVector& a);

/// Orders by total degree, then lexicographically.
bool degree_lex_less(const ExponentVector& a, const ExponentVector& b);

std::string to_string(const ExponentVector& a);

void require_same_length(const ExponentVector& a, const ExponentVector& b);

}  // namespace cellres
