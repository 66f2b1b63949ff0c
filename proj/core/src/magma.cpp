#include "rmg/magma.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <unordered_set>

#include "rmg/config.hpp"

namespace rmg {

namespace {

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  return std::atoi(v);
}

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  return std::strtoull(v, nullptr, 10);
}

}  // namespace

const Config& Config::get() {
  static const Config instance = [] {
    Config c;
    c.max_order = env_int("RMG_MAX_ORDER", c.max_order);
    c.enum_raw_cap = env_u64("RMG_ENUM_CAP", c.enum_raw_cap);
    if (c.max_order < 1) c.max_order = 1;
    if (c.max_order > 31) c.max_order = 31;  // ElementSet is a 32-bit mask
    return c;
  }();
  return instance;
}

ElementSet::ElementSet(int carrier_order) : carrier_order_(carrier_order) {
  if (carrier_order < 0 || carrier_order > 31)
    throw ArgumentError("carrier order out of range");
}

ElementSet::ElementSet(int carrier_order, std::initializer_list<Element> members)
    : ElementSet(carrier_order) {
  for (Element e : members) insert(e);
}

ElementSet::ElementSet(int carrier_order, const std::vector<Element>& members)
    : ElementSet(carrier_order) {
  for (Element e : members) insert(e);
}

ElementSet ElementSet::full(int carrier_order) {
  ElementSet s(carrier_order);
  s.mask_ = carrier_order == 0 ? 0 : (std::uint32_t{1} << carrier_order) - 1;
  return s;
}

int ElementSet::size() const { return std::popcount(mask_); }

bool ElementSet::contains(Element e) const {
  return e >= 0 && e < carrier_order_ && (mask_ >> e & 1u);
}

void ElementSet::insert(Element e) {
  if (e < 0 || e >= carrier_order_)
    throw ArgumentError("element " + std::to_string(e) + " outside carrier [0, " +
                        std::to_string(carrier_order_) + ")");
  mask_ |= std::uint32_t{1} << e;
}

void ElementSet::erase(Element e) {
  if (e >= 0 && e < carrier_order_) mask_ &= ~(std::uint32_t{1} << e);
}

bool ElementSet::subset_of(const ElementSet& other) const {
  return (mask_ & ~other.mask_) == 0;
}

std::vector<Element> ElementSet::members() const {
  std::vector<Element> out;
  out.reserve(size());
  for (Element e = 0; e < carrier_order_; ++e)
    if (mask_ >> e & 1u) out.push_back(e);
  return out;
}

Magma::Magma(int order) : order_(order) {
  if (order < 1) throw ArgumentError("magma order must be >= 1");
  if (order > Config::get().max_order)
    throw CapacityError("order " + std::to_string(order) + " exceeds maximum " +
                        std::to_string(Config::get().max_order));
  table_.assign(static_cast<std::size_t>(order) * order, 0);
}

Magma::Magma(int order, std::vector<Element> table,
             std::optional<std::vector<std::string>> names)
    : Magma(order) {
  if (table.size() != static_cast<std::size_t>(order) * order)
    throw ArgumentError("table has " + std::to_string(table.size()) +
                        " entries, expected " + std::to_string(order * order));
  for (Element v : table)
    if (v < 0 || v >= order)
      throw ArgumentError("table entry " + std::to_string(v) +
                          " outside carrier [0, " + std::to_string(order) + ")");
  table_ = std::move(table);
  set_names(std::move(names));
}

void Magma::set_names(std::optional<std::vector<std::string>> names) {
  if (names) {
    if (static_cast<int>(names->size()) != order_)
      throw ArgumentError("expected " + std::to_string(order_) + " names, got " +
                          std::to_string(names->size()));
    std::unordered_set<std::string> seen;
    for (const auto& n : *names)
      if (!seen.insert(n).second)
        throw ArgumentError("duplicate element name '" + n + "'");
  }
  names_ = std::move(names);
}

void Magma::check_element(Element e, const char* what) const {
  if (e < 0 || e >= order_)
    throw ArgumentError(std::string(what) + " " + std::to_string(e) +
                        " outside carrier [0, " + std::to_string(order_) + ")");
}

Element Magma::product(Element a, Element b) const {
  check_element(a, "left factor");
  check_element(b, "right factor");
  return op(a, b);
}

std::string Magma::element_name(Element e) const {
  if (names_) return (*names_)[e];
  return std::to_string(e);
}

Element power(const Magma& m, Element x, int n) {
  if (n < 1) throw ArgumentError("power exponent must be >= 1");
  if (x < 0 || x >= m.order())
    throw ArgumentError("element " + std::to_string(x) + " outside carrier [0, " +
                        std::to_string(m.order()) + ")");
  Element acc = x;
  for (int i = 1; i < n; ++i) acc = m.op(x, acc);
  return acc;
}

ElementSet square_set(const Magma& m) {
  ElementSet s(m.order());
  for (Element a = 0; a < m.order(); ++a)
    for (Element b = 0; b < m.order(); ++b) s.insert(m.op(a, b));
  return s;
}

bool is_closed(const Magma& m, const ElementSet& s) {
  if (s.carrier_order() != m.order())
    throw ArgumentError("set carrier does not match magma order");
  for (Element a : s.members())
    for (Element b : s.members())
      if (!s.contains(m.op(a, b))) return false;
  return true;
}

Magma restrict_to(const Magma& m, const ElementSet& s) {
  if (s.carrier_order() != m.order())
    throw ArgumentError("set carrier does not match magma order");
  if (s.empty()) throw ArgumentError("cannot restrict to the empty set");
  const auto members = s.members();
  for (Element a : members)
    for (Element b : members)
      if (!s.contains(m.op(a, b)))
        throw PreconditionError("set not closed: " + m.element_name(a) + " * " +
                                m.element_name(b) + " = " +
                                m.element_name(m.op(a, b)) + " lies outside");
  const int k = static_cast<int>(members.size());
  std::vector<Element> index_of(m.order(), -1);
  for (int i = 0; i < k; ++i) index_of[members[i]] = i;
  std::vector<Element> table(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      table[i * k + j] = index_of[m.op(members[i], members[j])];
  std::optional<std::vector<std::string>> names;
  if (m.names()) {
    names.emplace();
    names->reserve(k);
    for (Element e : members) names->push_back(m.element_name(e));
  }
  return Magma(k, std::move(table), std::move(names));
}

}  // namespace rmg
