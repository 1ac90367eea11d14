#pragma once

#include <stdexcept>
#include <string>

namespace qar {

/// Operand shapes do not conform.
class dimension_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A solver produced a non-finite iterate or a factorization failed.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data (files, manifests, sample sets) is unusable.
class data_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid solver or run configuration.
class config_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Every class received a zero coefficient block; no distance is defined.
class classification_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qar
