#ifndef ELBM_ERRORS_HPP
#define ELBM_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace elbm {

// The simulation produced NaN, a non-positive density where one is required,
// or otherwise left the stable regime.
class divergence_error : public std::runtime_error {
 public:
  divergence_error(const std::string& what, long step)
      : std::runtime_error(what), last_stable_step(step) {}
  long last_stable_step = -1;
};

// A quadrature or root-finding routine failed to converge within its budget.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Geometry cannot be represented on the requested lattice.
class geometry_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Scenario configuration rejected; carries one message per offending field.
class config_error : public std::runtime_error {
 public:
  explicit config_error(std::vector<std::string> problems)
      : std::runtime_error(join(problems)), fields(std::move(problems)) {}
  std::vector<std::string> fields;

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string s = "invalid configuration:";
    for (const auto& p : v) s += "\n  " + p;
    return s;
  }
};

class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace elbm

#endif
