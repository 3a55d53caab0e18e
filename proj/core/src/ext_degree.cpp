#include "vnum/ext_degree.hpp"

#include "vnum/error.hpp"

namespace vnum {

std::int64_t ExtDegree::value() const {
  if (!finite_) throw Error(ErrorCode::InvalidArgument, "value() of an infinite degree");
  return value_;
}

std::string ExtDegree::toString() const { return finite_ ? std::to_string(value_) : "inf"; }

}  // namespace vnum
