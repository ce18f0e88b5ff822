#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rankmetric/gfq.hpp"

namespace rankmetric {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Polynomial over GF(q), coefficients low-to-high.
using Poly = std::vector<int>;

bool is_irreducible(const Poly& f, int q);
Poly default_modulus(int q, int m);

// GF(q^m) with elements encoded as integers whose base-q digits are the
// coordinates over the polynomial basis 1, x, ..., x^{m-1}.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 20;
  static constexpr std::uint32_t kTableOrder = 1u << 16;

  static FieldPtr make(int q, int m, std::optional<Poly> modulus = std::nullopt);
  // "q m c_0 ... c_m"
  static FieldPtr parse(std::string_view descriptor);

  int q() const { return q_; }
  int m() const { return m_; }
  std::uint32_t order() const { return order_; }
  const Poly& modulus() const { return modulus_; }
  std::string descriptor() const;
  bool same_as(const Field& o) const { return q_ == o.q_ && m_ == o.m_ && modulus_ == o.modulus_; }
  bool has_tables() const { return !log_.empty(); }
  std::uint32_t generator() const { return gen_; }

  int digit(std::uint32_t a, int i) const;
  std::vector<int> digits(std::uint32_t a) const;
  std::uint32_t from_digits(std::span<const int> d) const;
  std::uint32_t from_digits(std::span<const std::uint8_t> d) const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  // Multiply by a prime-field scalar c in [0, q).
  std::uint32_t scale(std::uint32_t a, int c) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul_schoolbook(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul_table(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const;
  std::uint32_t frobenius(std::uint32_t a, int times) const;
  // Absolute trace to GF(q); the result is a value in [0, q).
  std::uint32_t trace(std::uint32_t a) const;

 private:
  Field(int q, int m, Poly modulus);
  void build_tables();

  int q_;
  int m_;
  std::uint32_t order_;
  Poly modulus_;
  std::vector<std::uint32_t> qpow_;  // q^i, i = 0..m
  std::uint32_t gen_ = 0;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

class FieldElement {
 public:
  FieldElement(FieldPtr f, std::uint32_t v);

  const FieldPtr& field() const { return f_; }
  std::uint32_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::uint64_t k) const;
  FieldElement frobenius(int a) const;
  FieldElement trace() const;  // as an element of the same field

  bool operator==(const FieldElement& o) const;

 private:
  const Field& same(const FieldElement& o) const;
  FieldPtr f_;
  std::uint32_t v_;
};

// A GF(q)-basis of GF(q^m) with coordinate maps.
class Basis {
 public:
  Basis(FieldPtr f, std::vector<std::uint32_t> elems);
  static Basis polynomial(FieldPtr f);

  const FieldPtr& field() const { return f_; }
  const std::vector<std::uint32_t>& elements() const { return elems_; }
  int size() const { return static_cast<int>(elems_.size()); }
  std::vector<std::uint8_t> coords(std::uint32_t x) const;
  std::uint32_t element(std::span<const std::uint8_t> coords) const;

 private:
  FieldPtr f_;
  std::vector<std::uint32_t> elems_;
  gfq::Matrix to_basis_;  // maps polynomial-basis digits (row) to basis coordinates
};

Basis dual_basis(const Basis& b);
std::vector<FieldElement> dual_basis(const std::vector<FieldElement>& basis);

// Column j of the m x n result holds the basis coordinates of coords[j].
gfq::Matrix expand(const Field& f, std::span<const std::uint32_t> coords, const Basis& basis);
std::vector<std::uint32_t> reassemble(const gfq::Matrix& mat, const Basis& basis);

}  // namespace rankmetric
