#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace oligo {

// Thrown when an iterative solver exhausts its iteration budget. Subclasses
// carry the partial iterate history so callers can inspect what happened.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BestResponseConvergenceError : public ConvergenceError {
 public:
  BestResponseConvergenceError(const std::string& what,
                               std::vector<std::vector<double>> log)
      : ConvergenceError(what), quantity_log(std::move(log)) {}

  // One entry per iteration: the full per-firm quantity vector.
  std::vector<std::vector<double>> quantity_log;
};

class UndercutConvergenceError : public ConvergenceError {
 public:
  UndercutConvergenceError(const std::string& what,
                           std::vector<std::array<double, 2>> prices)
      : ConvergenceError(what), trajectory(std::move(prices)) {}

  std::vector<std::array<double, 2>> trajectory;
};

}  // namespace oligo
