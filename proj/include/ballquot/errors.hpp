#pragma once

#include <stdexcept>
#include <string>

namespace ballquot {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Covering-type validation failures; `reason` names the violated condition.
struct TypeReject : Error {
  enum class Reason { Arity, Degree, Range, Gcd, Sum, Parse };
  Reason reason;
  TypeReject(Reason r, const std::string& msg) : Error(msg), reason(r) {}
};

struct OutOfRange : Error {
  using Error::Error;
};

// Weight sum != 2: no two-dimensional (or higher) lattice data to compute.
struct BadWeightSum : Error {
  using Error::Error;
};

struct PreconditionFailed : Error {
  using Error::Error;
};

// lambda1 & friends demand the sigma=2 member of a conjugate pair.
struct NotUniformizingSignature : Error {
  using Error::Error;
};

// Neither (INT) nor (Sigma-INT) holds; spectra are undefined.
struct LatticeConditionFailed : Error {
  using Error::Error;
};

// Pair pattern (contractions/cusps) has no catalogued compactified model.
struct UnsupportedProfile : Error {
  using Error::Error;
};

struct UnsupportedDimension : Error {
  using Error::Error;
};

struct ModelMismatch : Error {
  using Error::Error;
};

struct DatasetError : Error {
  using Error::Error;
};

// A declared commensurability edge contradicts the computed invariants.
struct InconsistentKnownEdges : Error {
  using Error::Error;
};

}  // namespace ballquot
