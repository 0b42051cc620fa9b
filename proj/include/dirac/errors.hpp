#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dirac {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularMatrix : Error {
    double det;
    explicit SingularMatrix(double d)
        : Error("singular 2x2 matrix, det = " + std::to_string(d)), det(d) {}
};

struct NoConvergence : Error {
    using Error::Error;
};

struct OutOfDomain : Error {
    using Error::Error;
};

struct OrderUnavailable : Error {
    using Error::Error;
};

struct UnknownSeed : Error {
    using Error::Error;
};

struct NodeOnInterval : Error {
    using Error::Error;
};

struct QuadratureFailure : Error {
    using Error::Error;
};

// det U vanishes on the probe grid; carries the node abscissae found.
struct DegenerateOnGrid : Error {
    std::vector<double> nodes;
    explicit DegenerateOnGrid(std::vector<double> ns)
        : Error("transformation matrix degenerate on grid"), nodes(std::move(ns)) {}
};

struct EqualEigenvalues : Error {
    using Error::Error;
};

struct WrongBranch : Error {
    using Error::Error;
};

struct NodeInLog : Error {
    using Error::Error;
};

struct MissingStepData : Error {
    using Error::Error;
};

struct UnknownExample : Error {
    using Error::Error;
};

struct ParameterOutOfRegularRange : Error {
    using Error::Error;
};

struct NonPositiveNormalization : Error {
    using Error::Error;
};

} // namespace dirac
