#pragma once

#include <stdexcept>
#include <string>

namespace prodstruct {

/// A caller-side contract was violated (bad sizes, non-clique, non-permutation, ...).
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A vertex partition overlaps, has gaps, or has empty parts.
class invalid_partition : public precondition_error {
 public:
  using precondition_error::precondition_error;
};

/// A tree- or path-decomposition (or layering) violates one of its axioms.
class invalid_decomposition : public precondition_error {
 public:
  using precondition_error::precondition_error;
};

/// A rotation system does not describe a plane triangulation.
class invalid_embedding : public precondition_error {
 public:
  using precondition_error::precondition_error;
};

/// An exact oracle was asked to run beyond its size cap.
class instance_too_large : public std::length_error {
 public:
  instance_too_large(const std::string& what_arg, int n, int cap)
      : std::length_error(what_arg + ": " + std::to_string(n) + " vertices exceeds cap " +
                          std::to_string(cap)),
        n_(n),
        cap_(cap) {}

  int n() const noexcept { return n_; }
  int cap() const noexcept { return cap_; }

 private:
  int n_;
  int cap_;
};

/// Malformed JSON input (wrong shape, self-loops, duplicates, out-of-range ids).
class format_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace prodstruct
