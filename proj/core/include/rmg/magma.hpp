#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "rmg/errors.hpp"

namespace rmg {

using Element = int;

/// A subset of the carrier [0, n) of some magma, stored as a bitmask.
class ElementSet {
 public:
  explicit ElementSet(int carrier_order);
  ElementSet(int carrier_order, std::initializer_list<Element> members);
  ElementSet(int carrier_order, const std::vector<Element>& members);

  static ElementSet full(int carrier_order);

  int carrier_order() const { return carrier_order_; }
  int size() const;
  bool empty() const { return mask_ == 0; }
  bool contains(Element e) const;
  void insert(Element e);
  void erase(Element e);
  bool subset_of(const ElementSet& other) const;
  std::vector<Element> members() const;  // ascending
  std::uint32_t mask() const { return mask_; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  int carrier_order_;
  std::uint32_t mask_ = 0;
};

/// A finite groupoid: an order-n Cayley table, row = left factor.
/// Element names are presentation-only; equality compares order and table.
class Magma {
 public:
  explicit Magma(int order);  // all products 0
  Magma(int order, std::vector<Element> table,
        std::optional<std::vector<std::string>> names = std::nullopt);

  int order() const { return order_; }

  /// table[a][b], argument-checked.
  Element product(Element a, Element b) const;

  /// Unchecked lookup for hot paths.
  Element op(Element a, Element b) const { return table_[a * order_ + b]; }

  const std::vector<Element>& table() const { return table_; }
  const std::optional<std::vector<std::string>>& names() const { return names_; }
  void set_names(std::optional<std::vector<std::string>> names);

  /// Declared name of e, or its decimal index when unnamed.
  std::string element_name(Element e) const;

  bool operator==(const Magma& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

 private:
  void check_element(Element e, const char* what) const;

  int order_;
  std::vector<Element> table_;
  std::optional<std::vector<std::string>> names_;
};

/// x^n with the left-nested convention x^n = x * x^(n-1); n >= 1.
Element power(const Magma& m, Element x, int n);

/// { a*b : a, b in carrier }. Always closed under the product.
ElementSet square_set(const Magma& m);

/// true iff s is closed under the product.
bool is_closed(const Magma& m, const ElementSet& s);

/// Induced table on a closed subset, elements re-indexed in ascending
/// original order; names inherited.
Magma restrict_to(const Magma& m, const ElementSet& s);

}  // namespace rmg
