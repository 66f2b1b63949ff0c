#pragma once

#include <map>
#include <string>
#include <vector>

#include "rmg/magma.hpp"

namespace rmg {

/// Bundled reference tables:
///   W           the right modular, idempotent quasigroup of order 4 (names 1..4)
///   C           two-element chain {a, b} with ab = ba = b
///   C1          C with an identity element 1 adjoined
///   EX2_PRINTED order-4 extension of C1 {a, b, 1, x}, exactly as printed in
///               its source table
///   EX2_DERIVED the same extension generated from its defining maps via the
///               generalised-inflation product law; differs from EX2_PRINTED
///               only at cell (a, x), where the law gives a
const std::map<std::string, Magma>& bundled_fixtures();

/// Lookup by name; throws ArgumentError for unknown names.
const Magma& fixture(const std::string& name);

std::vector<std::string> fixture_names();

/// The maps defining EX2_DERIVED over base C1: class of the new element and
/// its alpha/beta maps, indexed over C1's carrier (a, b, 1).
struct Ex2Maps {
  Element cls;                 // class of x in C1 (the element named "1")
  std::vector<Element> alpha;  // a->b, b->b, 1->1
  std::vector<Element> beta;   // a->a, b->b, 1->1
};
const Ex2Maps& ex2_defining_maps();

}  // namespace rmg
