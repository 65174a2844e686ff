#ifndef CDLAT_ERRORS_HPP
#define CDLAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cdlat {

/// Base class for all library errors. `code()` is a stable machine-parsable
/// identifier; `what()` carries the human-readable detail (witness elements,
/// violated condition, exceeded bound).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define CDLAT_DEFINE_ERROR(Name)                                        \
    class Name : public Error {                                         \
    public:                                                             \
        explicit Name(const std::string& message) : Error(#Name, message) {} \
    }

CDLAT_DEFINE_ERROR(NotAGroup);
CDLAT_DEFINE_ERROR(SizeGuard);
CDLAT_DEFINE_ERROR(InvalidParameters);
CDLAT_DEFINE_ERROR(InvalidZMParameters);
CDLAT_DEFINE_ERROR(NotCoprime);
CDLAT_DEFINE_ERROR(NotCoprimeOrders);
CDLAT_DEFINE_ERROR(NotAbelian);
CDLAT_DEFINE_ERROR(InvalidAction);
CDLAT_DEFINE_ERROR(InvalidLambda);
CDLAT_DEFINE_ERROR(DivisionByZero);
CDLAT_DEFINE_ERROR(NotAComplement);
CDLAT_DEFINE_ERROR(NotNormalized);
CDLAT_DEFINE_ERROR(ActionNotFaithful);
CDLAT_DEFINE_ERROR(NotPGroup);
CDLAT_DEFINE_ERROR(NotIndexP);
CDLAT_DEFINE_ERROR(SpecError);
CDLAT_DEFINE_ERROR(TimeBudgetExceeded);

#undef CDLAT_DEFINE_ERROR

} // namespace cdlat

#endif
