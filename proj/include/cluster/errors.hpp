#pragma once

#include <stdexcept>
#include <string>

namespace cluster {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CLUSTER_DEFINE_ERROR(Name)      \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  }

CLUSTER_DEFINE_ERROR(InvalidInput);
CLUSTER_DEFINE_ERROR(NotSkewSymmetrizable);
CLUSTER_DEFINE_ERROR(IndexOutOfRange);
CLUSTER_DEFINE_ERROR(SizeMismatch);
CLUSTER_DEFINE_ERROR(RankTooLarge);
CLUSTER_DEFINE_ERROR(DivisionByZero);
CLUSTER_DEFINE_ERROR(ZeroImage);
CLUSTER_DEFINE_ERROR(ZeroPolynomial);
CLUSTER_DEFINE_ERROR(LaurentPhenomenonViolation);
CLUSTER_DEFINE_ERROR(IncompleteGraph);
CLUSTER_DEFINE_ERROR(InfiniteOrTruncatedClass);
CLUSTER_DEFINE_ERROR(ParseError);

#undef CLUSTER_DEFINE_ERROR

inline void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw SizeMismatch(std::string(what) + ": sizes " + std::to_string(a) +
                       " and " + std::to_string(b) + " differ");
  }
}

inline void require_index(std::size_t k, std::size_t n, const char* what) {
  if (k >= n) {
    throw IndexOutOfRange(std::string(what) + ": index " + std::to_string(k + 1) +
                          " outside 1.." + std::to_string(n));
  }
}

}  // namespace cluster
