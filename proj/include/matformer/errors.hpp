#pragma once

#include <stdexcept>
#include <string>

namespace matformer {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error { using Error::Error; };
struct IndexError : Error { using Error::Error; };
struct NumericError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct CacheError : Error { using Error::Error; };
struct BudgetError : Error { using Error::Error; };
struct FitError : Error { using Error::Error; };
struct LengthError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace matformer
