#ifndef LAPERM_ERROR_HPP
#define LAPERM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace laperm {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DisconnectedInput : public Error {
 public:
  DisconnectedInput() : Error("input graph is disconnected") {}
};

class NotUnicyclic : public Error {
 public:
  NotUnicyclic() : Error("input graph is not unicyclic") {}
};

class NotATree : public Error {
 public:
  NotATree() : Error("input graph is not a tree") {}
};

class NotBipartite : public Error {
 public:
  NotBipartite() : Error("input graph is not bipartite") {}
};

class SizeBound : public Error {
 public:
  explicit SizeBound(const std::string& what) : Error("size bound exceeded: " + what) {}
};

class OrderMismatch : public Error {
 public:
  OrderMismatch() : Error("polynomial orders differ") {}
};

// Carries the name of the violated clause so callers and tests can assert
// on which precondition failed.
class PreconditionViolated : public Error {
 public:
  explicit PreconditionViolated(const std::string& clause)
      : Error("precondition violated: " + clause), clause_(clause) {}
  const std::string& clause() const { return clause_; }

 private:
  std::string clause_;
};

class InvalidParameters : public Error {
 public:
  explicit InvalidParameters(const std::string& constraint)
      : Error("invalid parameters: " + constraint) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

}  // namespace laperm

#endif
