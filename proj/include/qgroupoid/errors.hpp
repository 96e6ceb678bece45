#pragma once

#include <stdexcept>
#include <string>

namespace qgroupoid {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define QGROUPOID_ERROR(Name)                                   \
    struct Name : Error {                                       \
        explicit Name(const std::string& what) : Error(what) {} \
    }

QGROUPOID_ERROR(NotAGroup);
QGROUPOID_ERROR(NotASubgroup);
QGROUPOID_ERROR(OrderTooLarge);
QGROUPOID_ERROR(PDoesNotDivideOrder);
QGROUPOID_ERROR(NotNormal);
QGROUPOID_ERROR(NotARelativeMatchedPair);
QGROUPOID_ERROR(InvalidRepresentativeSet);
QGROUPOID_ERROR(NotAGroupoid);
QGROUPOID_ERROR(DimensionMismatch);
QGROUPOID_ERROR(IllDefinedOnQuotient);
QGROUPOID_ERROR(InputError);

#undef QGROUPOID_ERROR

}  // namespace qgroupoid
