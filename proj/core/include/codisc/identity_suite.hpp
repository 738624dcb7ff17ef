#ifndef CODISC_IDENTITY_SUITE_HPP
#define CODISC_IDENTITY_SUITE_HPP

#include <string>
#include <vector>

namespace codisc {

// The cross-module identity battery: closed-form sums, ball-volume square
// sum, conj/ctr dual-domain identities, orthogonality/symmetry/Rodrigues/
// square-linearization, mu_t and lambda Krawtchouk reconstructions,
// theta == lambda, MacWilliams round-trips on pseudorandom rational data.
struct IdentitySuiteReport {
  long checks = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

IdentitySuiteReport run_identity_suite(int n_max);

}  // namespace codisc

#endif
