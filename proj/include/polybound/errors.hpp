#pragma once

#include <stdexcept>
#include <string>

namespace polybound {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what_) : Error("division by zero: " + what_) {}
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("zero polynomial not allowed here") {}
    explicit ZeroPolynomial(const std::string& what_) : Error("zero polynomial: " + what_) {}
};

struct NotSquareFree : Error {
    NotSquareFree() : Error("polynomial is not square-free") {}
    explicit NotSquareFree(const std::string& what_)
        : Error("polynomial is not square-free: " + what_) {}
};

struct RegistryMismatch : Error {
    RegistryMismatch() : Error("operands use different variable registries") {}
};

struct UnknownVariable : Error {
    explicit UnknownVariable(const std::string& name)
        : Error("unknown variable: " + name) {}
};

struct VariableCollision : Error {
    explicit VariableCollision(const std::string& name)
        : Error("variable name already in use: " + name) {}
};

struct NonSquare : Error {
    NonSquare() : Error("matrix is not square") {}
};

struct NotASuffix : Error {
    NotASuffix() : Error("kept variables are not a suffix of the elimination order") {}
};

struct ResourceLimit : Error {
    explicit ResourceLimit(const std::string& what_) : Error("resource limit exceeded: " + what_) {}
};

struct ConstantPolynomial : Error {
    ConstantPolynomial() : Error("constant polynomial has no tangency system") {}
};

struct DimensionMismatch : Error {
    DimensionMismatch() : Error("point dimension does not match variable count") {}
};

struct ZeroEliminationIdeal : Error {
    ZeroEliminationIdeal() : Error("elimination ideal is zero; point is not generic") {}
};

struct EndpointIsRoot : Error {
    EndpointIsRoot() : Error("interval endpoint is a root") {}
    explicit EndpointIsRoot(const std::string& what_)
        : Error("interval endpoint is a root: " + what_) {}
};

struct MultivariateInput : Error {
    MultivariateInput() : Error("expected a univariate polynomial") {}
    explicit MultivariateInput(const std::string& what_)
        : Error("expected a univariate polynomial: " + what_) {}
};

struct Inconclusive : Error {
    explicit Inconclusive(int attempts_)
        : Error("no certified point found after " + std::to_string(attempts_) + " attempt(s)"),
          attempts(attempts_) {}
    int attempts;
};

struct SyntaxError : Error {
    SyntaxError(std::size_t pos, const std::string& msg)
        : Error("syntax error at position " + std::to_string(pos) + ": " + msg), position(pos) {}
    std::size_t position;
};

struct NonPolynomial : Error {
    explicit NonPolynomial(const std::string& msg) : Error("not a polynomial: " + msg) {}
};

} // namespace polybound
