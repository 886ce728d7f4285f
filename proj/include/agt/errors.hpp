#pragma once

#include <stdexcept>
#include <string>

namespace agt {

struct ZeroDenominator : std::domain_error {
  using std::domain_error::domain_error;
};

struct BadLeadingTerm : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DegreeOverflow : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct SingularParameter : std::domain_error {
  using std::domain_error::domain_error;
};

struct GradeOverflow : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct MissingLatticeLabel : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InconsistentCharge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace agt
