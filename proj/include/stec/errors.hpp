#pragma once

#include <stdexcept>
#include <string>

namespace stec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InsufficientResources : public Error {
public:
    using Error::Error;
};

class DoubleRelease : public Error {
public:
    using Error::Error;
};

class NoBoundaryNode : public Error {
public:
    explicit NoBoundaryNode(int domain)
        : Error("domain " + std::to_string(domain) + " has no inter-domain link"), domain_(domain) {}
    int domain() const { return domain_; }

private:
    int domain_;
};

class InvalidConfig : public Error {
public:
    using Error::Error;
};

class FormatError : public Error {
public:
    using Error::Error;
};

class NotACandidate : public Error {
public:
    using Error::Error;
};

class NodeMappingInfeasible : public Error {
public:
    explicit NodeMappingInfeasible(int virtual_node)
        : Error("no unused candidate for virtual node " + std::to_string(virtual_node)),
          virtual_node_(virtual_node) {}
    int virtual_node() const { return virtual_node_; }

private:
    int virtual_node_;
};

class NoFeasiblePath : public Error {
public:
    using Error::Error;
};

class LinkMappingInfeasible : public Error {
public:
    explicit LinkMappingInfeasible(int virtual_link)
        : Error("no feasible path for virtual link " + std::to_string(virtual_link)),
          virtual_link_(virtual_link) {}
    int virtual_link() const { return virtual_link_; }

private:
    int virtual_link_;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

class EmbeddingInfeasible : public Error {
public:
    using Error::Error;
};

class InvalidWeights : public Error {
public:
    using Error::Error;
};

/// Raised when the simulator's bookkeeping disagrees with an independent check.
class InternalConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace stec
