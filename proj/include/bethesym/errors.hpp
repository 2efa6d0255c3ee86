#pragma once

#include <stdexcept>
#include <string>

namespace bethesym {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& what = "division by zero") : Error(what) {}
};

struct SingularPoint : Error {
    explicit SingularPoint(const std::string& what = "denominator vanishes at the evaluation point")
        : Error(what) {}
};

struct MissingVariable : Error {
    explicit MissingVariable(const std::string& what) : Error(what) {}
};

struct NotDivisible : Error {
    explicit NotDivisible(const std::string& what = "exact division left a nonzero remainder")
        : Error(what) {}
};

struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what) : Error(what) {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

struct InvalidModel : Error {
    explicit InvalidModel(const std::string& what) : Error(what) {}
};

struct SamplingExhausted : Error {
    explicit SamplingExhausted(const std::string& what = "sampler failed to avoid the forbidden set")
        : Error(what) {}
};

struct BoxViolation : Error {
    explicit BoxViolation(const std::string& what) : Error(what) {}
};

struct NotStrictlyIncreasing : Error {
    explicit NotStrictlyIncreasing(const std::string& what) : Error(what) {}
};

}  // namespace bethesym
