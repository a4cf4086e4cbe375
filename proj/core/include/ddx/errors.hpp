#ifndef DDX_ERRORS_HPP
#define DDX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ddx {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A 2x2 matrix inverse was requested below the singularity threshold.
class SingularMatrix : public Error {
public:
  using Error::Error;
};

// Grid has too few nodes for the requested stencil / operation.
class GridTooSmall : public Error {
public:
  using Error::Error;
};

// Grid extends outside the domain of a potential (e.g. x <= 0 on the half line).
class DomainMismatch : public Error {
public:
  using Error::Error;
};

// A residual was requested against an identically vanishing field.
class ZeroField : public Error {
public:
  using Error::Error;
};

// Model or seed parameters violate their constraints.
class InvalidParams : public Error {
public:
  using Error::Error;
};

// An iterative evaluation hit its term cap before reaching tolerance.
class NonConvergence : public Error {
public:
  using Error::Error;
};

// The chosen energy-branch sign fails the quantization round-trip.
class BranchInvalid : public Error {
public:
  using Error::Error;
};

// A closed-form level was requested outside its range of validity.
class InvalidLevel : public Error {
public:
  using Error::Error;
};

// An integrated solution exceeded the overflow guard.
class OverflowError : public Error {
public:
  using Error::Error;
};

// The two seed energies coincide; the transformation degenerates.
class DegenerateSeeds : public Error {
public:
  using Error::Error;
};

// det u vanishes somewhere on the working grid; carries the offending x.
class SingularSeedMatrix : public Error {
public:
  SingularSeedMatrix(const std::string& msg, double x) : Error(msg), x_(x) {}
  double where() const noexcept { return x_; }

private:
  double x_;
};

// A spinor passed as a seed does not solve the eigenvalue problem.
class SeedNotEigen : public Error {
public:
  using Error::Error;
};

// A verification routine received no test fields.
class EmptyTestSet : public Error {
public:
  using Error::Error;
};

}  // namespace ddx

#endif  // DDX_ERRORS_HPP
