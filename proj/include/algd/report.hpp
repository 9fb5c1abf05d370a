#ifndef ALGD_REPORT_HPP
#define ALGD_REPORT_HPP

#include <string>
#include <vector>

namespace algd {

// One nonzero residual of a checked identity. `location` holds the indices
// the identity was instantiated at (basis pair, triple, component, ...);
// `value` is the canonical rendering of the exact residual.
struct Residual {
  std::string identity;
  std::vector<int> location;
  std::string value;
};

// Outcome of a structural check. `identities` lists what was checked, in
// check order; `residuals` holds only the nonzero ones, so valid means the
// list is empty. `millis` is wall time for the check; it is carried for
// callers but never rendered, since rendered output must be byte-stable.
struct CheckReport {
  std::string subject;
  bool valid = true;
  std::vector<std::string> identities;
  std::vector<Residual> residuals;
  double millis = 0.0;
};

}  // namespace algd

#endif
