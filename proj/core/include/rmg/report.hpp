#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rmg/magma.hpp"

namespace rmg {

/// Outcome of a decision procedure. For a universally quantified identity
/// that fails, witness is a counterexample tuple; for an existential
/// property that holds, witness certifies it. detail carries a short tag
/// (e.g. which equation or which side failed).
struct PropertyReport {
  bool holds = false;
  std::optional<std::vector<Element>> witness;
  std::string detail;

  explicit operator bool() const { return holds; }
};

}  // namespace rmg
