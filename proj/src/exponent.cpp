#include "cellres/exponent.hpp"

#include "cellres/error.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cellres {

namespace {

void require_nonnegative(const std::vector<ExponentVector::value_type>& entries) {
  for (auto e : entries) {
    if (e < 0) throw PreconditionError("nonnegative exponents", "negative entry " + std::to_string(e));
  }
}

}  // namespace

ExponentVector::ExponentVector(std::initializer_list<value_type> entries) : entries_(entries) {
  require_nonnegative(entries_);
}

ExponentVector::ExponentVector(std::vector<value_type> entries) : entries_(std::move(entries)) {
  require_nonnegative(entries_);
}

void ExponentVector::set(std::size_t i, value_type value) {
  if (value < 0) throw PreconditionError("nonnegative exponents", "negative entry");
  entries_.at(i) = value;
}

ExponentVector::value_type ExponentVector::total_degree() const {
  value_type sum = 0;
  for (auto e : entries_) {
    if (__builtin_add_overflow(sum, e, &sum)) throw std::overflow_error("exponent degree overflow");
  }
  return sum;
}

bool ExponentVector::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](auto e) { return e == 0; });
}

void require_same_length(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) {
    throw PreconditionError("equal lengths", "exponent vectors of length " + std::to_string(a.size()) +
                                                 " and " + std::to_string(b.size()));
  }
}

bool divides(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b);
  std::vector<ExponentVector::value_type> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return ExponentVector(std::move(out));
}

ExponentVector quotient(const ExponentVector& b, const ExponentVector& a) {
  if (!divides(a, b)) {
    throw PreconditionError("divisibility", to_string(a) + " does not divide " + to_string(b));
  }
  std::vector<ExponentVector::value_type> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[i] - a[i];
  return ExponentVector(std::move(out));
}

ExponentVector product(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b);
  std::vector<ExponentVector::value_type> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (__builtin_add_overflow(a[i], b[i], &out[i])) throw std::overflow_error("exponent overflow");
  }
  return ExponentVector(std::move(out));
}

ExponentVector pure_power(std::size_t n, std::size_t variable, ExponentVector::value_type power) {
  ExponentVector out(n);
  out.set(variable, power);
  return out;
}

std::vector<std::size_t> support(const ExponentVector& a) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0) out.push_back(i);
  }
  return out;
}

bool degree_lex_less(const ExponentVector& a, const ExponentVector& b) {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da < db;
  return a < b;
}

std::string to_string(const ExponentVector& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(a[i]);
  }
  return out + ")";
}

}  // namespace cellres
