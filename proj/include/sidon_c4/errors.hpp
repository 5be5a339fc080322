#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sidon_c4 {

// Base for every failure raised by the library. Construction bugs and lemma
// violations derive from it so callers can map them to one exit status.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotOddPrimePower : public error {
 public:
  explicit NotOddPrimePower(std::uint64_t q)
      : error("q = " + std::to_string(q) + " is not an odd prime power") {}
};

class SizeMismatch : public error {
 public:
  using error::error;
};

class LemmaViolation : public error {
 public:
  using error::error;
};

class InvariantViolation : public error {
 public:
  using error::error;
};

class SameVertex : public error {
 public:
  using error::error;
};

class PairingViolation : public error {
 public:
  using error::error;
};

class KTooLarge : public error {
 public:
  using error::error;
};

class MissingCommonNeighbor : public error {
 public:
  using error::error;
};

class AccountingMismatch : public error {
 public:
  using error::error;
};

}  // namespace sidon_c4
