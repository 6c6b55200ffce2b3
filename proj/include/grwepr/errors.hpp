#ifndef GRWEPR_ERRORS_HPP
#define GRWEPR_ERRORS_HPP

#include <stdexcept>

namespace grwepr {

// Attempt to normalize the zero vector.
class ZeroVectorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The state-dependent measurement rule was applied to a zero-norm state.
class DegenerateStateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every enumerated branch ended with zero cooked weight.
class AllBranchesDeadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No hidden-variable value occurs under both apparatus settings.
class EmptyCommonSupportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The deviation pattern matches none of the known theory types.
class UnclassifiableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace grwepr

#endif
