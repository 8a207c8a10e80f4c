#pragma once

// A tiny expression language over the stock builders:
//   delta(n) boundary(n) sphere(n) collapse_face(n,k) strip(m)
//   sd(E) barratt(E) cen(E) desing(E) disjoint(E,E)
// Rank and subdivision-depth bounds guard against accidental blowups.

#include <string>

#include "ssk/sset.hpp"

namespace ssk {

struct ExprError : std::runtime_error {
  ExprError(size_t at, const std::string& message)
      : std::runtime_error("position " + std::to_string(at) + ": " + message), position(at) {}
  size_t position;
};

struct EvalOptions {
  int max_rank = 6;      // bound on n in delta/boundary/sphere/collapse_face
  int max_sd_depth = 3;  // bound on nested sd applications
  bool unsafe = false;   // disables both bounds
};

SsetPtr eval_expression(const std::string& text, const EvalOptions& options = {});

}  // namespace ssk
