#ifndef GRADUAL_ERRORS_HPP
#define GRADUAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gradual {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define GRADUAL_DEFINE_ERROR(Name)                                        \
    struct Name : Error {                                                 \
        explicit Name(const std::string& what = #Name) : Error(what) {}   \
    }

GRADUAL_DEFINE_ERROR(NotInfCompact);
GRADUAL_DEFINE_ERROR(MissingOne);
GRADUAL_DEFINE_ERROR(Overlap);
GRADUAL_DEFINE_ERROR(BadInterval);
GRADUAL_DEFINE_ERROR(BadPartition);
GRADUAL_DEFINE_ERROR(BadGrade);
GRADUAL_DEFINE_ERROR(GroundMismatch);
GRADUAL_DEFINE_ERROR(EmptyFamily);
GRADUAL_DEFINE_ERROR(NotDecreasing);
GRADUAL_DEFINE_ERROR(NotStrictDecreasing);
GRADUAL_DEFINE_ERROR(PropertyFViolated);
GRADUAL_DEFINE_ERROR(PropertyInfFViolated);
GRADUAL_DEFINE_ERROR(NotAssociative);
GRADUAL_DEFINE_ERROR(NoIdentity);
GRADUAL_DEFINE_ERROR(NoInverse);
GRADUAL_DEFINE_ERROR(NotNormal);
GRADUAL_DEFINE_ERROR(NotIncluded);
GRADUAL_DEFINE_ERROR(NotFuzzySubgroup);
GRADUAL_DEFINE_ERROR(EmptyLevelValue);
GRADUAL_DEFINE_ERROR(GridTooCoarse);
GRADUAL_DEFINE_ERROR(InvalidSystem);

#undef GRADUAL_DEFINE_ERROR

} // namespace gradual

#endif
